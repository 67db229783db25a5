#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "hybridnc/field.hpp"

namespace hybridnc {

using Vec = std::vector<std::uint32_t>;

/// Dense row-major matrix over a GF(2^e).
class MatrixFq {
public:
    MatrixFq(unsigned rows, unsigned cols, std::shared_ptr<const Field> field)
        : rows_(rows), cols_(cols), field_(std::move(field)),
          entries_(static_cast<std::size_t>(rows) * cols, 0) {}

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const Field& field() const { return *field_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }

    std::uint32_t& at(unsigned r, unsigned c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::uint32_t at(unsigned r, unsigned c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec row(unsigned r) const;
    void set_row(unsigned r, const Vec& v);

    bool operator==(const MatrixFq& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && *field_ == *o.field_ && entries_ == o.entries_;
    }

private:
    unsigned rows_, cols_;
    std::shared_ptr<const Field> field_;
    std::vector<std::uint32_t> entries_;
};

/// Reduced row echelon form and rank.
std::pair<MatrixFq, unsigned> rref(const MatrixFq& m);
unsigned rank_of(const MatrixFq& m);

/// Subspace of F_q^N in canonical form: an RREF basis with no zero rows.
/// Equality of canonical bases is equality of subspaces.
class Subspace {
public:
    /// The F_q-span of the given vectors; zero vectors are permitted and ignored.
    static Subspace span(const std::vector<Vec>& generators, unsigned ambient_dim,
                         std::shared_ptr<const Field> field);

    static Subspace zero(unsigned ambient_dim, std::shared_ptr<const Field> field);

    unsigned ambient_dim() const { return ambient_dim_; }
    unsigned dim() const { return basis_.rows(); }
    const MatrixFq& basis() const { return basis_; }
    const Field& field() const { return basis_.field(); }
    std::shared_ptr<const Field> field_ptr() const { return basis_.field_ptr(); }

    bool contains(const Vec& v) const;

    bool operator==(const Subspace& o) const {
        return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    Subspace(unsigned ambient_dim, MatrixFq basis)
        : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

    unsigned ambient_dim_;
    MatrixFq basis_;  // RREF, no zero rows
};

unsigned dim_intersection(const Subspace& a, const Subspace& b);

/// dim A + dim B - 2 dim(A ∩ B).
unsigned subspace_distance(const Subspace& a, const Subspace& b);

struct ErasureErrorCount {
    unsigned erasures;  // rho = dim sent - dim(sent ∩ received)
    unsigned errors;    // t  = dim received - dim(sent ∩ received)
};
ErasureErrorCount erasures_errors(const Subspace& sent, const Subspace& received);

/// Stochastic erasure operator: if dim v > z, a uniformly random
/// z-dimensional subspace of v; otherwise v itself.
Subspace erase_operator(const Subspace& v, unsigned z, std::mt19937_64& rng);

/// b >= dim v vectors of v whose span is exactly v.
std::vector<Vec> random_generating_set(const Subspace& v, unsigned b, std::mt19937_64& rng);

// Portable deterministic draws (the standard distributions are not
// implementation-stable).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
double uniform01(std::mt19937_64& rng);

}  // namespace hybridnc
