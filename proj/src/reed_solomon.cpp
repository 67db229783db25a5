#include "hybridnc/reed_solomon.hpp"

#include <stdexcept>

namespace hybridnc {

ReedSolomonCode::ReedSolomonCode(std::shared_ptr<const Field> field, unsigned n, unsigned k)
    : field_(std::move(field)), n_(n), k_(k) {
    if (k_ < 1 || k_ > n_) throw std::invalid_argument("require 1 <= k <= n");
    if (n_ > field_->order()) throw std::invalid_argument("require n <= q");
    eval_points_.resize(n_);
    for (unsigned i = 0; i < n_; ++i) eval_points_[i] = i;
}

std::uint32_t ReedSolomonCode::eval_poly(const Vec& coeffs, std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (unsigned i = static_cast<unsigned>(coeffs.size()); i-- > 0;)
        acc = field_->add(field_->mul(acc, x), coeffs[i]);
    return acc;
}

// Lagrange interpolation through (x_0..x_{k-1}, msg), little-endian coefficients.
Vec ReedSolomonCode::interpolate_first_k(const Vec& msg) const {
    const Field& f = *field_;
    Vec poly(k_, 0);
    for (unsigned j = 0; j < k_; ++j) {
        if (msg[j] == 0) continue;
        // Basis polynomial L_j as coefficients, then scale into the sum.
        Vec basis = {1};
        std::uint32_t denom = 1;
        for (unsigned i = 0; i < k_; ++i) {
            if (i == j) continue;
            // basis *= (x - x_i)
            Vec next(basis.size() + 1, 0);
            for (unsigned t = 0; t < basis.size(); ++t) {
                next[t + 1] = f.add(next[t + 1], basis[t]);
                next[t] = f.sub(next[t], f.mul(eval_points_[i], basis[t]));
            }
            basis = std::move(next);
            denom = f.mul(denom, f.sub(eval_points_[j], eval_points_[i]));
        }
        const std::uint32_t scale = f.mul(msg[j], f.inv(denom));
        for (unsigned t = 0; t < basis.size(); ++t)
            poly[t] = f.add(poly[t], f.mul(scale, basis[t]));
    }
    return poly;
}

Vec ReedSolomonCode::encode(const Vec& msg) const {
    if (msg.size() != k_) throw std::invalid_argument("message length mismatch");
    Vec word(n_);
    for (unsigned i = 0; i < k_; ++i) word[i] = msg[i];
    if (n_ > k_) {
        const Vec poly = interpolate_first_k(msg);
        for (unsigned i = k_; i < n_; ++i) word[i] = eval_poly(poly, eval_points_[i]);
    }
    return word;
}

std::optional<Vec> ReedSolomonCode::decode(const Vec& word) const {
    if (word.size() != n_) throw std::invalid_argument("word length mismatch");
    const Field& f = *field_;
    if (n_ == k_) return word;
    const unsigned e = radius();
    // Homogeneous Berlekamp-Welch system: Q(x_i) - r_i E(x_i) = 0 with
    // deg Q < k + e, deg E <= e. Unknowns: q_0..q_{k+e-1}, e_0..e_e.
    const unsigned nq = k_ + e;
    const unsigned cols = nq + e + 1;
    MatrixFq sys(n_, cols, field_);
    for (unsigned i = 0; i < n_; ++i) {
        std::uint32_t xp = 1;
        for (unsigned j = 0; j < nq; ++j) {
            sys.at(i, j) = xp;
            xp = f.mul(xp, eval_points_[i]);
        }
        xp = 1;
        for (unsigned j = 0; j <= e; ++j) {
            sys.at(i, nq + j) = f.neg(f.mul(word[i], xp));
            xp = f.mul(xp, eval_points_[i]);
        }
    }
    auto [red, rank] = rref(sys);
    if (rank == cols) return std::nullopt;  // only the trivial solution
    // Nullspace vector with the first free variable set to 1.
    std::vector<int> pivot_col_of_row(rank, -1);
    std::vector<int> row_of_col(cols, -1);
    {
        unsigned r = 0;
        for (unsigned c = 0; c < cols && r < rank; ++c) {
            if (red.at(r, c) != 0) {
                pivot_col_of_row[r] = static_cast<int>(c);
                row_of_col[c] = static_cast<int>(r);
                ++r;
            }
        }
    }
    unsigned free_col = 0;
    while (free_col < cols && row_of_col[free_col] != -1) ++free_col;
    Vec sol(cols, 0);
    sol[free_col] = 1;
    for (unsigned c = 0; c < cols; ++c) {
        if (row_of_col[c] == -1 || c == free_col) continue;
        const unsigned r = static_cast<unsigned>(row_of_col[c]);
        sol[c] = f.neg(f.mul(red.at(r, free_col), sol[free_col]));
    }
    // Split into Q and E; E != 0 for any nonzero solution.
    Vec qpoly(sol.begin(), sol.begin() + nq);
    Vec epoly(sol.begin() + nq, sol.end());
    int edeg = -1;
    for (int i = static_cast<int>(epoly.size()) - 1; i >= 0; --i)
        if (epoly[static_cast<std::size_t>(i)] != 0) {
            edeg = i;
            break;
        }
    if (edeg < 0) return std::nullopt;
    // f = Q / E must be exact with degree < k.
    Vec rem = qpoly;
    Vec quot(nq, 0);
    const std::uint32_t lead_inv = f.inv(epoly[static_cast<std::size_t>(edeg)]);
    int rdeg = static_cast<int>(nq) - 1;
    while (rdeg >= 0 && rem[static_cast<std::size_t>(rdeg)] == 0) --rdeg;
    while (rdeg >= edeg) {
        const std::uint32_t c = f.mul(rem[static_cast<std::size_t>(rdeg)], lead_inv);
        quot[static_cast<std::size_t>(rdeg - edeg)] = c;
        for (int i = 0; i <= edeg; ++i) {
            const std::size_t t = static_cast<std::size_t>(i + rdeg - edeg);
            rem[t] = f.sub(rem[t], f.mul(c, epoly[static_cast<std::size_t>(i)]));
        }
        while (rdeg >= 0 && rem[static_cast<std::size_t>(rdeg)] == 0) --rdeg;
    }
    if (rdeg >= 0) return std::nullopt;  // inexact division
    for (std::size_t i = k_; i < quot.size(); ++i)
        if (quot[i] != 0) return std::nullopt;
    quot.resize(k_);
    // Verify the bounded-distance contract.
    Vec codeword(n_);
    for (unsigned i = 0; i < n_; ++i) codeword[i] = eval_poly(quot, eval_points_[i]);
    unsigned dist = 0;
    for (unsigned i = 0; i < n_; ++i)
        if (codeword[i] != word[i]) ++dist;
    if (dist > e) return std::nullopt;
    return Vec(codeword.begin(), codeword.begin() + k_);
}

unsigned ReedSolomonCode::computed_min_distance() const {
    double log2_count = static_cast<double>(field_->degree()) * k_;
    if (log2_count > 16.0) throw std::length_error("codebook too large to enumerate (> 2^16)");
    const std::uint64_t count = std::uint64_t{1} << static_cast<unsigned>(log2_count);
    unsigned best = n_ + 1;
    Vec msg(k_, 0);
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        std::uint64_t t = idx;
        for (unsigned i = 0; i < k_; ++i) {
            msg[i] = static_cast<std::uint32_t>(t % field_->order());
            t /= field_->order();
        }
        const Vec word = encode(msg);
        unsigned w = 0;
        for (std::uint32_t s : word)
            if (s != 0) ++w;
        best = std::min(best, w);
    }
    return best;
}

}  // namespace hybridnc
