#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hybridnc/field.hpp"
#include "hybridnc/subspace.hpp"

namespace hybridnc {

/// Systematic [n, k, n-k+1] Reed-Solomon code over GF(2^e). Evaluation
/// points are the first n field elements in index order, so the first k
/// codeword symbols equal the message.
class ReedSolomonCode {
public:
    ReedSolomonCode(std::shared_ptr<const Field> field, unsigned n, unsigned k);

    const Field& field() const { return *field_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }
    unsigned n() const { return n_; }
    unsigned k() const { return k_; }
    unsigned delta() const { return n_ - k_ + 1; }
    unsigned radius() const { return (n_ - k_) / 2; }

    Vec encode(const Vec& msg) const;

    /// Berlekamp-Welch bounded-distance decoding: the message of the unique
    /// codeword within Hamming distance (n-k)/2, else nullopt.
    std::optional<Vec> decode(const Vec& word) const;

    /// Exact minimum Hamming weight by enumeration; guarded at q^k <= 2^16.
    unsigned computed_min_distance() const;

private:
    Vec interpolate_first_k(const Vec& msg) const;  // polynomial coefficients
    std::uint32_t eval_poly(const Vec& coeffs, std::uint32_t x) const;

    std::shared_ptr<const Field> field_;
    unsigned n_, k_;
    std::vector<std::uint32_t> eval_points_;
};

}  // namespace hybridnc
