#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hybridnc {

/// Arithmetic in GF(2^e). Elements are integers in [0, 2^e) read as
/// polynomial residues modulo an irreducible polynomial over F_2.
/// Multiplication uses log/antilog tables up to degree 16 and carry-less
/// multiplication with reduction above that.
class Field {
public:
    /// Uses the canonical default modulus for the degree (0x11B for e = 8).
    explicit Field(unsigned degree);

    /// `modulus` is the coefficient bit-vector (bit i = coefficient of x^i),
    /// degree bit included. Throws std::invalid_argument if reducible.
    Field(unsigned degree, std::uint64_t modulus);

    unsigned degree() const { return degree_; }
    std::uint64_t order() const { return order_; }
    std::uint64_t modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t neg(std::uint32_t a) const { return a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws on a = 0
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    bool operator==(const Field& o) const {
        return degree_ == o.degree_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    /// Smallest irreducible degree-e polynomial over F_2 in coefficient order.
    static std::uint64_t default_modulus(unsigned degree);

    /// Trial division against every polynomial of degree in [1, e/2].
    static bool is_irreducible_f2(std::uint64_t poly);

    static std::shared_ptr<const Field> gf(unsigned degree);
    static std::shared_ptr<const Field> gf(unsigned degree, std::uint64_t modulus);

private:
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
    void build_tables();

    unsigned degree_;
    std::uint64_t order_;
    std::uint64_t modulus_;
    std::vector<std::uint32_t> exp_;  // empty above the table degree limit
    std::vector<std::uint32_t> log_;
};

/// Value + field reference; operations refuse to mix fields.
struct FieldElement {
    std::uint32_t value = 0;
    const Field* field = nullptr;

    FieldElement() = default;
    FieldElement(std::uint32_t v, const Field& f) : value(v), field(&f) {}

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check_same(a, b);
        return {a.field->add(a.value, b.value), *a.field};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check_same(a, b);
        return {a.field->mul(a.value, b.value), *a.field};
    }
    FieldElement inverse() const { return {field->inv(value), *field}; }

    friend bool operator==(FieldElement a, FieldElement b) {
        check_same(a, b);
        return a.value == b.value;
    }

    static void check_same(FieldElement a, FieldElement b) {
        if (a.field == nullptr || b.field == nullptr || *a.field != *b.field)
            throw std::invalid_argument("field mismatch between operands");
    }
};

/// Extension F_{q^m} of a base GF(2^e), represented as polynomials over the
/// base field modulo an irreducible degree-m modulus. An element is the
/// vector of its m base-field coefficients in the polynomial basis
/// {1, x, ..., x^{m-1}}, which is also its expansion to a row of F_q^m.
class ExtField {
public:
    using Elem = std::vector<std::uint32_t>;

    /// Scans for the first irreducible degree-m modulus in coefficient order.
    ExtField(std::shared_ptr<const Field> base, unsigned degree);

    /// `modulus` has m+1 base-field coefficients, little-endian, monic.
    ExtField(std::shared_ptr<const Field> base, unsigned degree, std::vector<std::uint32_t> modulus);

    const Field& base() const { return *base_; }
    std::shared_ptr<const Field> base_ptr() const { return base_; }
    unsigned degree() const { return degree_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    /// log2 of the field order (e * m); the order itself may overflow 64 bits.
    double log2_order() const;

    Elem zero() const { return Elem(degree_, 0); }
    Elem one() const;
    Elem alpha() const;  // the residue class of x
    bool is_zero(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;  // throws on zero
    Elem scale(std::uint32_t c, const Elem& a) const;  // base-field scalar
    Elem pow_q(const Elem& a) const;                   // a^q
    Elem frob(const Elem& a, unsigned i) const;        // a^{q^i}

    Elem from_base(std::uint32_t v) const;  // embed the base field
    Elem from_index(std::uint64_t idx) const;  // little-endian base-q digits
    std::uint64_t to_index(const Elem& a) const;

    bool operator==(const ExtField& o) const;

private:
    std::shared_ptr<const Field> base_;
    unsigned degree_;
    std::vector<std::uint32_t> modulus_;  // m+1 coefficients, monic
};

}  // namespace hybridnc
