#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hybridnc/field.hpp"
#include "hybridnc/subspace.hpp"

namespace hybridnc {

/// Coefficients f_0..f_{k_C-1} of the linearized polynomial
/// f(x) = sum_i f_i x^{q^i}.
struct Message {
    std::vector<ExtField::Elem> coeffs;

    bool operator==(const Message& o) const { return coeffs == o.coeffs; }
    bool operator!=(const Message& o) const { return !(*this == o); }
};

/// Gabidulin code parameters: length ell evaluation points of F_{q^m},
/// linearly independent over F_q, and message dimension k_C <= ell <= m.
class GabidulinSpec {
public:
    /// Evaluation points default to the polynomial basis {1, a, ..., a^{ell-1}}.
    GabidulinSpec(std::shared_ptr<const ExtField> ext, unsigned length, unsigned dimension);
    GabidulinSpec(std::shared_ptr<const ExtField> ext, unsigned length, unsigned dimension,
                  std::vector<ExtField::Elem> eval_points);

    const ExtField& ext() const { return *ext_; }
    std::shared_ptr<const ExtField> ext_ptr() const { return ext_; }
    unsigned length() const { return length_; }
    unsigned dimension() const { return dimension_; }
    const std::vector<ExtField::Elem>& eval_points() const { return eval_points_; }

    /// (f(g_1), ..., f(g_ell)); F_{q^m}-linear in the message.
    std::vector<ExtField::Elem> encode(const Message& msg) const;

private:
    std::shared_ptr<const ExtField> ext_;
    unsigned length_;
    unsigned dimension_;
    std::vector<ExtField::Elem> eval_points_;
    // frob_pows_[j][i] = g_j^{q^i}, i < dimension
    std::vector<std::vector<ExtField::Elem>> frob_pows_;
};

/// Row space of [I_ell | X] in F_q^{ell+m}, X the ell x m expansion of the
/// codeword symbols in the polynomial basis.
Subspace expand_and_lift(const std::vector<ExtField::Elem>& codeword, const GabidulinSpec& spec);

/// The lifted-Gabidulin subspace code, with decoder.
class SubspaceCodebook {
public:
    explicit SubspaceCodebook(GabidulinSpec spec);

    const GabidulinSpec& gabidulin() const { return spec_; }
    unsigned ambient_dim() const { return spec_.length() + spec_.ext().degree(); }
    /// Design minimum distance 2(ell - k_C + 1).
    unsigned min_distance() const { return 2 * (spec_.length() - spec_.dimension() + 1); }
    double log2_size() const;                   // log2 |C| = log2 q^{m k_C}
    std::optional<std::uint64_t> size() const;  // |C| when it fits in 64 bits

    bool enumerable() const;  // |C| within the exhaustive-search guard (2^20)

    Subspace encode_message(const Message& msg) const;
    Message message_from_index(std::uint64_t idx) const;  // little-endian base q^m

    /// Exact minimum pairwise subspace distance (exhaustive; guarded).
    unsigned computed_min_distance() const;

    /// Nearest-codeword decoding. Exact membership is recognized directly at
    /// any size by solving the linearized interpolation system; otherwise an
    /// exhaustive scan runs when the codebook is enumerable. Returns the
    /// message of the unique nearest codeword at distance < d/2, else nullopt.
    std::optional<Message> decode(const Subspace& received) const;

private:
    const std::vector<Subspace>& enumerated() const;
    std::optional<Message> solve_exact(const Subspace& received) const;

    GabidulinSpec spec_;
    mutable std::once_flag enum_once_;
    mutable std::vector<Subspace> enumerated_;
};

}  // namespace hybridnc
