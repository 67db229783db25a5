#include "hybridnc/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace hybridnc {

Vec MatrixFq::row(unsigned r) const {
    Vec v(cols_);
    for (unsigned c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void MatrixFq::set_row(unsigned r, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (unsigned c = 0; c < cols_; ++c) at(r, c) = v[c];
}

std::pair<MatrixFq, unsigned> rref(const MatrixFq& m) {
    MatrixFq a = m;
    const Field& f = a.field();
    unsigned pivot_row = 0;
    for (unsigned col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        unsigned sel = pivot_row;
        while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (unsigned c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
        const std::uint32_t piv_inv = f.inv(a.at(pivot_row, col));
        for (unsigned c = col; c < a.cols(); ++c) a.at(pivot_row, c) = f.mul(piv_inv, a.at(pivot_row, c));
        for (unsigned r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a.at(r, col) == 0) continue;
            const std::uint32_t factor = a.at(r, col);
            for (unsigned c = col; c < a.cols(); ++c)
                a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(pivot_row, c)));
        }
        ++pivot_row;
    }
    return {a, pivot_row};
}

unsigned rank_of(const MatrixFq& m) { return rref(m).second; }

Subspace Subspace::span(const std::vector<Vec>& generators, unsigned ambient_dim,
                        std::shared_ptr<const Field> field) {
    for (const Vec& g : generators)
        if (g.size() != ambient_dim) throw std::invalid_argument("generator length mismatch");
    MatrixFq m(static_cast<unsigned>(generators.size()), ambient_dim, field);
    for (unsigned r = 0; r < generators.size(); ++r) m.set_row(r, generators[r]);
    auto [red, rank] = rref(m);
    MatrixFq basis(rank, ambient_dim, field);
    for (unsigned r = 0; r < rank; ++r)
        for (unsigned c = 0; c < ambient_dim; ++c) basis.at(r, c) = red.at(r, c);
    return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::zero(unsigned ambient_dim, std::shared_ptr<const Field> field) {
    return Subspace(ambient_dim, MatrixFq(0, ambient_dim, std::move(field)));
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_dim_) throw std::invalid_argument("vector length mismatch");
    // Reduce v against the RREF basis; membership iff the residue is zero.
    const Field& f = field();
    Vec residue = v;
    for (unsigned r = 0; r < basis_.rows(); ++r) {
        unsigned pivot_col = 0;
        while (pivot_col < ambient_dim_ && basis_.at(r, pivot_col) == 0) ++pivot_col;
        if (pivot_col == ambient_dim_) continue;
        const std::uint32_t factor = residue[pivot_col];
        if (factor == 0) continue;
        for (unsigned c = pivot_col; c < ambient_dim_; ++c)
            residue[c] = f.sub(residue[c], f.mul(factor, basis_.at(r, c)));
    }
    return std::all_of(residue.begin(), residue.end(), [](std::uint32_t x) { return x == 0; });
}

namespace {

void check_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw std::invalid_argument("ambient space mismatch");
}

}  // namespace

unsigned dim_intersection(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b);
    MatrixFq stacked(a.dim() + b.dim(), a.ambient_dim(), a.field_ptr());
    for (unsigned r = 0; r < a.dim(); ++r) stacked.set_row(r, a.basis().row(r));
    for (unsigned r = 0; r < b.dim(); ++r) stacked.set_row(a.dim() + r, b.basis().row(r));
    const unsigned sum_rank = rank_of(stacked);
    return a.dim() + b.dim() - sum_rank;
}

unsigned subspace_distance(const Subspace& a, const Subspace& b) {
    return a.dim() + b.dim() - 2 * dim_intersection(a, b);
}

ErasureErrorCount erasures_errors(const Subspace& sent, const Subspace& received) {
    const unsigned z = dim_intersection(sent, received);
    return {sent.dim() - z, received.dim() - z};
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    // Rejection from the top to keep the draw unbiased and portable.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

// Random coefficient matrix of full row rank, rows x cols, rows <= cols.
MatrixFq random_full_row_rank(unsigned rows, unsigned cols, std::shared_ptr<const Field> field,
                              std::mt19937_64& rng) {
    MatrixFq m(rows, cols, field);
    do {
        for (unsigned r = 0; r < rows; ++r)
            for (unsigned c = 0; c < cols; ++c)
                m.at(r, c) = static_cast<std::uint32_t>(uniform_below(rng, field->order()));
    } while (rank_of(m) < rows);
    return m;
}

}  // namespace

Subspace erase_operator(const Subspace& v, unsigned z, std::mt19937_64& rng) {
    if (v.dim() <= z) return v;
    // Full-rank z x dim(v) coefficient matrices induce the uniform
    // distribution on z-dimensional subspaces of v.
    MatrixFq coeffs = random_full_row_rank(z, v.dim(), v.field_ptr(), rng);
    const Field& f = v.field();
    std::vector<Vec> gens(z, Vec(v.ambient_dim(), 0));
    for (unsigned r = 0; r < z; ++r)
        for (unsigned j = 0; j < v.dim(); ++j)
            for (unsigned c = 0; c < v.ambient_dim(); ++c)
                gens[r][c] = f.add(gens[r][c], f.mul(coeffs.at(r, j), v.basis().at(j, c)));
    return Subspace::span(gens, v.ambient_dim(), v.field_ptr());
}

std::vector<Vec> random_generating_set(const Subspace& v, unsigned b, std::mt19937_64& rng) {
    if (b < v.dim()) throw std::invalid_argument("generating set smaller than dimension");
    if (v.dim() == 0) return std::vector<Vec>(b, Vec(v.ambient_dim(), 0));
    // b x dim(v) coefficient matrix of rank dim(v), so the span is exactly v.
    const Field& f = v.field();
    MatrixFq coeffs(b, v.dim(), v.field_ptr());
    do {
        for (unsigned r = 0; r < b; ++r)
            for (unsigned c = 0; c < v.dim(); ++c)
                coeffs.at(r, c) = static_cast<std::uint32_t>(uniform_below(rng, f.order()));
    } while (rank_of(coeffs) < v.dim());
    std::vector<Vec> out(b, Vec(v.ambient_dim(), 0));
    for (unsigned r = 0; r < b; ++r)
        for (unsigned j = 0; j < v.dim(); ++j)
            for (unsigned c = 0; c < v.ambient_dim(); ++c)
                out[r][c] = f.add(out[r][c], f.mul(coeffs.at(r, j), v.basis().at(j, c)));
    return out;
}

}  // namespace hybridnc
