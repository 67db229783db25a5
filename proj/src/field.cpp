#include "hybridnc/field.hpp"

#include <algorithm>
#include <cassert>

namespace hybridnc {

namespace {

constexpr unsigned kTableDegreeLimit = 16;

unsigned bit_degree(std::uint64_t poly) {
    unsigned d = 0;
    while (poly >> (d + 1)) ++d;
    return d;
}

// Remainder of a modulo b, both bit-vector polynomials over F_2, b != 0.
std::uint64_t f2_poly_mod(std::uint64_t a, std::uint64_t b) {
    const unsigned db = bit_degree(b);
    while (a != 0 && bit_degree(a) >= db) {
        a ^= b << (bit_degree(a) - db);
    }
    return a;
}

}  // namespace

bool Field::is_irreducible_f2(std::uint64_t poly) {
    if (poly < 2) return false;
    const unsigned d = bit_degree(poly);
    if (d == 0) return false;
    for (unsigned dd = 1; 2 * dd <= d; ++dd) {
        for (std::uint64_t div = (1ull << dd); div < (2ull << dd); ++div) {
            if (f2_poly_mod(poly, div) == 0) return false;
        }
    }
    return true;
}

std::uint64_t Field::default_modulus(unsigned degree) {
    if (degree == 0 || degree > 32)
        throw std::invalid_argument("field degree must be in [1, 32]");
    for (std::uint64_t low = 1; low < (1ull << degree); low += 2) {
        const std::uint64_t cand = (1ull << degree) | low;
        if (is_irreducible_f2(cand)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field::Field(unsigned degree) : Field(degree, default_modulus(degree)) {}

Field::Field(unsigned degree, std::uint64_t modulus)
    : degree_(degree), order_(1ull << degree), modulus_(modulus) {
    if (degree == 0 || degree > 32)
        throw std::invalid_argument("field degree must be in [1, 32]");
    if (bit_degree(modulus) != degree)
        throw std::invalid_argument("modulus degree does not match field degree");
    if (!is_irreducible_f2(modulus))
        throw std::invalid_argument("modulus is reducible over F_2");
    if (degree_ <= kTableDegreeLimit) build_tables();
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return static_cast<std::uint32_t>(f2_poly_mod(acc, modulus_));
}

void Field::build_tables() {
    const std::uint32_t q = static_cast<std::uint32_t>(order_);
    if (q == 2) {
        exp_ = {1};
        log_ = {0, 0};
        return;
    }
    // x need not generate the multiplicative group; scan for a generator.
    for (std::uint32_t g = 2; g < q; ++g) {
        exp_.assign(q - 1, 0);
        std::uint32_t v = 1;
        std::uint32_t steps = 0;
        do {
            exp_[steps++] = v;
            v = slow_mul(v, g);
        } while (v != 1 && steps < q - 1);
        if (v == 1 && steps == q - 1) break;
        exp_.clear();
    }
    if (exp_.empty()) throw std::logic_error("no multiplicative generator found");
    log_.assign(q, 0);
    for (std::uint32_t i = 0; i < q - 1; ++i) log_[exp_[i]] = i;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        const std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
        return exp_[s % (order_ - 1)];
    }
    return slow_mul(a, b);
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (a == 1) return 1;
    if (!exp_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    return pow(a, order_ - 2);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    std::uint32_t base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::shared_ptr<const Field> Field::gf(unsigned degree) {
    return std::make_shared<const Field>(degree);
}

std::shared_ptr<const Field> Field::gf(unsigned degree, std::uint64_t modulus) {
    return std::make_shared<const Field>(degree, modulus);
}

// ---------------------------------------------------------------------------
// Polynomials over a base field, as little-endian coefficient vectors.
// Shared by the extension-field arithmetic below.

namespace {

using Poly = std::vector<std::uint32_t>;

int pdeg(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Poly ptrim(Poly p) {
    p.resize(static_cast<std::size_t>(pdeg(p) + 1));
    return p;
}

Poly padd(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t v = 0;
        if (i < a.size()) v = f.add(v, a[i]);
        if (i < b.size()) v = f.add(v, b[i]);
        r[i] = v;
    }
    return r;
}

Poly pmul(const Field& f, const Poly& a, const Poly& b) {
    if (pdeg(a) < 0 || pdeg(b) < 0) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    return r;
}

Poly pscale(const Field& f, std::uint32_t c, const Poly& a) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    return r;
}

// In-place remainder of a modulo b; b != 0.
void pmod_inplace(const Field& f, Poly& a, const Poly& b) {
    const int db = pdeg(b);
    const std::uint32_t lead_inv = f.inv(b[static_cast<std::size_t>(db)]);
    int da = pdeg(a);
    while (da >= db) {
        const std::uint32_t c = f.mul(a[static_cast<std::size_t>(da)], lead_inv);
        const int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            const std::size_t k = static_cast<std::size_t>(i + shift);
            a[k] = f.sub(a[k], f.mul(c, b[static_cast<std::size_t>(i)]));
        }
        da = pdeg(a);
    }
    a = ptrim(std::move(a));
}

Poly pgcd(const Field& f, Poly a, Poly b) {
    a = ptrim(std::move(a));
    b = ptrim(std::move(b));
    while (pdeg(b) >= 0) {
        pmod_inplace(f, a, b);
        std::swap(a, b);
    }
    return a;
}

// x^q mod modulus applied to a, i.e. a(x)^q mod modulus. q = 2^e, so this is
// e squarings.
Poly ppow_q(const Field& f, Poly a, const Poly& modulus) {
    for (unsigned s = 0; s < f.degree(); ++s) {
        a = pmul(f, a, a);
        pmod_inplace(f, a, modulus);
    }
    return a;
}

// Rabin's test: f of degree m over GF(q) is irreducible iff x^{q^m} = x
// (mod f) and gcd(x^{q^{m/r}} - x, f) = 1 for every prime r dividing m.
bool ext_is_irreducible(const Field& f, const Poly& modulus) {
    const int m = pdeg(modulus);
    if (m < 1) return false;
    if (m == 1) return true;
    const Poly x = {0, 1};
    std::vector<Poly> qpow(static_cast<std::size_t>(m) + 1);
    qpow[0] = x;
    for (int i = 1; i <= m; ++i)
        qpow[static_cast<std::size_t>(i)] = ppow_q(f, qpow[static_cast<std::size_t>(i - 1)], modulus);
    if (ptrim(padd(f, qpow[static_cast<std::size_t>(m)], x)) != Poly{}) return false;
    for (int r = 2; r <= m; ++r) {
        if (m % r != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= r; ++d)
            if (r % d == 0) prime = false;
        if (!prime) continue;
        const Poly diff = padd(f, qpow[static_cast<std::size_t>(m / r)], x);
        if (pdeg(pgcd(f, diff, modulus)) != 0) return false;
    }
    return true;
}

Poly find_ext_modulus(const Field& f, unsigned m) {
    // Deterministic scan: lower coefficients counted in little-endian base q.
    for (std::uint64_t c = 1;; ++c) {
        Poly mod(m + 1, 0);
        std::uint64_t t = c;
        for (unsigned i = 0; i < m; ++i) {
            mod[i] = static_cast<std::uint32_t>(t % f.order());
            t /= f.order();
        }
        if (t != 0) throw std::logic_error("no irreducible extension modulus found");
        if (mod[0] == 0) continue;
        mod[m] = 1;
        if (ext_is_irreducible(f, mod)) return mod;
    }
}

}  // namespace

ExtField::ExtField(std::shared_ptr<const Field> base, unsigned degree)
    : ExtField(base, degree, find_ext_modulus(*base, degree)) {}

ExtField::ExtField(std::shared_ptr<const Field> base, unsigned degree,
                   std::vector<std::uint32_t> modulus)
    : base_(std::move(base)), degree_(degree), modulus_(std::move(modulus)) {
    if (degree_ == 0) throw std::invalid_argument("extension degree must be positive");
    if (modulus_.size() != degree_ + 1 || modulus_[degree_] != 1)
        throw std::invalid_argument("extension modulus must be monic of degree m");
    if (!ext_is_irreducible(*base_, modulus_))
        throw std::invalid_argument("extension modulus is reducible over the base field");
}

double ExtField::log2_order() const {
    return static_cast<double>(base_->degree()) * degree_;
}

ExtField::Elem ExtField::one() const {
    Elem e(degree_, 0);
    e[0] = 1;
    return e;
}

ExtField::Elem ExtField::alpha() const {
    Elem e(degree_, 0);
    if (degree_ == 1) {
        // x reduces to a constant in a degree-1 extension.
        e[0] = base_->sub(0, modulus_[0]);
    } else {
        e[1] = 1;
    }
    return e;
}

bool ExtField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t v) { return v == 0; });
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
    Elem r(degree_);
    for (unsigned i = 0; i < degree_; ++i) r[i] = base_->add(a[i], b[i]);
    return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
    Poly prod = pmul(*base_, a, b);
    if (!prod.empty()) pmod_inplace(*base_, prod, modulus_);
    prod.resize(degree_, 0);
    return prod;
}

ExtField::Elem ExtField::scale(std::uint32_t c, const Elem& a) const {
    Elem r(degree_);
    for (unsigned i = 0; i < degree_; ++i) r[i] = base_->mul(c, a[i]);
    return r;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero");
    // Extended Euclid over base-field polynomials: s*a + t*modulus = gcd.
    Poly r0 = modulus_, r1 = ptrim(a);
    Poly s0 = {}, s1 = {1};
    while (pdeg(r1) > 0) {
        // Division step: r0 = q*r1 + r2.
        Poly rem = r0;
        Poly quot;
        {
            const int db = pdeg(r1);
            const std::uint32_t lead_inv = base_->inv(r1[static_cast<std::size_t>(db)]);
            quot.assign(static_cast<std::size_t>(std::max(pdeg(rem) - db + 1, 1)), 0);
            int da = pdeg(rem);
            while (da >= db) {
                const std::uint32_t c = base_->mul(rem[static_cast<std::size_t>(da)], lead_inv);
                quot[static_cast<std::size_t>(da - db)] = c;
                for (int i = 0; i <= db; ++i) {
                    const std::size_t k = static_cast<std::size_t>(i + da - db);
                    rem[k] = base_->sub(rem[k], base_->mul(c, r1[static_cast<std::size_t>(i)]));
                }
                da = pdeg(rem);
            }
            rem = ptrim(std::move(rem));
        }
        Poly s2 = padd(*base_, s0, pmul(*base_, quot, s1));  // characteristic 2: add = sub
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (pdeg(r1) != 0) throw std::logic_error("modulus not coprime with element");
    Elem result = pscale(*base_, base_->inv(r1[0]), s1);
    result.resize(degree_, 0);
    return result;
}

ExtField::Elem ExtField::pow_q(const Elem& a) const {
    // q = 2^e, so a^q is e successive squarings.
    Elem r = a;
    for (unsigned i = 0; i < base_->degree(); ++i) r = mul(r, r);
    return r;
}

ExtField::Elem ExtField::frob(const Elem& a, unsigned i) const {
    Elem r = a;
    for (unsigned j = 0; j < i % degree_; ++j) r = pow_q(r);
    return r;
}

ExtField::Elem ExtField::from_base(std::uint32_t v) const {
    Elem e(degree_, 0);
    e[0] = v;
    return e;
}

ExtField::Elem ExtField::from_index(std::uint64_t idx) const {
    Elem e(degree_, 0);
    for (unsigned i = 0; i < degree_; ++i) {
        e[i] = static_cast<std::uint32_t>(idx % base_->order());
        idx /= base_->order();
    }
    if (idx != 0) throw std::invalid_argument("index exceeds field order");
    return e;
}

std::uint64_t ExtField::to_index(const Elem& a) const {
    std::uint64_t idx = 0;
    for (unsigned i = degree_; i-- > 0;) idx = idx * base_->order() + a[i];
    return idx;
}

bool ExtField::operator==(const ExtField& o) const {
    return *base_ == *o.base_ && degree_ == o.degree_ && modulus_ == o.modulus_;
}

}  // namespace hybridnc
