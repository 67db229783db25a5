#include "hybridnc/gabidulin.hpp"

#include <limits>
#include <stdexcept>

namespace hybridnc {

namespace {

constexpr double kEnumGuardLog2 = 20.0;

std::vector<ExtField::Elem> default_eval_points(const ExtField& ext, unsigned length) {
    std::vector<ExtField::Elem> pts;
    ExtField::Elem p = ext.one();
    for (unsigned i = 0; i < length; ++i) {
        pts.push_back(p);
        p = ext.mul(p, ext.alpha());
    }
    return pts;
}

}  // namespace

GabidulinSpec::GabidulinSpec(std::shared_ptr<const ExtField> ext, unsigned length,
                             unsigned dimension)
    : GabidulinSpec(ext, length, dimension, default_eval_points(*ext, length)) {}

GabidulinSpec::GabidulinSpec(std::shared_ptr<const ExtField> ext, unsigned length,
                             unsigned dimension, std::vector<ExtField::Elem> eval_points)
    : ext_(std::move(ext)), length_(length), dimension_(dimension),
      eval_points_(std::move(eval_points)) {
    if (dimension_ < 1 || dimension_ > length_ || length_ > ext_->degree())
        throw std::invalid_argument("require 1 <= k_C <= ell <= m");
    if (eval_points_.size() != length_)
        throw std::invalid_argument("need ell evaluation points");
    // F_q-independence: the points' expansions must have full rank.
    MatrixFq expansion(length_, ext_->degree(), ext_->base_ptr());
    for (unsigned j = 0; j < length_; ++j) expansion.set_row(j, eval_points_[j]);
    if (rank_of(expansion) != length_)
        throw std::invalid_argument("evaluation points not linearly independent over F_q");
    frob_pows_.resize(length_);
    for (unsigned j = 0; j < length_; ++j) {
        frob_pows_[j].resize(dimension_);
        frob_pows_[j][0] = eval_points_[j];
        for (unsigned i = 1; i < dimension_; ++i)
            frob_pows_[j][i] = ext_->pow_q(frob_pows_[j][i - 1]);
    }
}

std::vector<ExtField::Elem> GabidulinSpec::encode(const Message& msg) const {
    if (msg.coeffs.size() != dimension_) throw std::invalid_argument("message length mismatch");
    std::vector<ExtField::Elem> out(length_, ext_->zero());
    for (unsigned j = 0; j < length_; ++j)
        for (unsigned i = 0; i < dimension_; ++i)
            out[j] = ext_->add(out[j], ext_->mul(msg.coeffs[i], frob_pows_[j][i]));
    return out;
}

Subspace expand_and_lift(const std::vector<ExtField::Elem>& codeword, const GabidulinSpec& spec) {
    if (codeword.size() != spec.length()) throw std::invalid_argument("codeword length mismatch");
    const unsigned ell = spec.length();
    const unsigned m = spec.ext().degree();
    std::vector<Vec> rows(ell, Vec(ell + m, 0));
    for (unsigned j = 0; j < ell; ++j) {
        rows[j][j] = 1;
        for (unsigned c = 0; c < m; ++c) rows[j][ell + c] = codeword[j][c];
    }
    return Subspace::span(rows, ell + m, spec.ext().base_ptr());
}

SubspaceCodebook::SubspaceCodebook(GabidulinSpec spec) : spec_(std::move(spec)) {}

double SubspaceCodebook::log2_size() const {
    return static_cast<double>(spec_.ext().base().degree()) * spec_.ext().degree() *
           spec_.dimension();
}

std::optional<std::uint64_t> SubspaceCodebook::size() const {
    if (log2_size() >= 64.0) return std::nullopt;
    return std::uint64_t{1} << static_cast<unsigned>(log2_size());
}

bool SubspaceCodebook::enumerable() const { return log2_size() <= kEnumGuardLog2; }

Subspace SubspaceCodebook::encode_message(const Message& msg) const {
    return expand_and_lift(spec_.encode(msg), spec_);
}

Message SubspaceCodebook::message_from_index(std::uint64_t idx) const {
    const double mbits = static_cast<double>(spec_.ext().base().degree()) * spec_.ext().degree();
    Message msg;
    msg.coeffs.reserve(spec_.dimension());
    if (mbits >= 64.0) {
        if (idx != 0) throw std::invalid_argument("codebook index out of range");
        for (unsigned i = 0; i < spec_.dimension(); ++i) msg.coeffs.push_back(spec_.ext().zero());
        return msg;
    }
    const std::uint64_t ext_order = std::uint64_t{1} << static_cast<unsigned>(mbits);
    for (unsigned i = 0; i < spec_.dimension(); ++i) {
        msg.coeffs.push_back(spec_.ext().from_index(idx % ext_order));
        idx /= ext_order;
    }
    if (idx != 0) throw std::invalid_argument("codebook index out of range");
    return msg;
}

const std::vector<Subspace>& SubspaceCodebook::enumerated() const {
    std::call_once(enum_once_, [this] {
        if (!enumerable()) throw std::length_error("codebook too large to enumerate (> 2^20)");
        const std::uint64_t n = *size();
        enumerated_.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i)
            enumerated_.push_back(encode_message(message_from_index(i)));
    });
    return enumerated_;
}

unsigned SubspaceCodebook::computed_min_distance() const {
    const std::vector<Subspace>& words = enumerated();
    unsigned best = std::numeric_limits<unsigned>::max();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, subspace_distance(words[i], words[j]));
    return best;
}

// If `received` is exactly a lifted codeword, recover its message by solving
// the linearized interpolation system sum_i f_i g_j^{q^i} = y_j over F_{q^m}.
// The RREF basis of a lifted codeword is [I_ell | X], so the shape check is
// just the pivot pattern.
std::optional<Message> SubspaceCodebook::solve_exact(const Subspace& received) const {
    const unsigned ell = spec_.length();
    const unsigned m = spec_.ext().degree();
    const unsigned kc = spec_.dimension();
    if (received.dim() != ell) return std::nullopt;
    for (unsigned r = 0; r < ell; ++r)
        for (unsigned c = 0; c < ell; ++c)
            if (received.basis().at(r, c) != (r == c ? 1u : 0u)) return std::nullopt;
    const ExtField& ext = spec_.ext();
    // Augmented system over the extension field: rows (g_j^{q^0..q^{kc-1}} | y_j).
    std::vector<std::vector<ExtField::Elem>> aug(ell);
    for (unsigned j = 0; j < ell; ++j) {
        aug[j].reserve(kc + 1);
        ExtField::Elem g = spec_.eval_points()[j];
        for (unsigned i = 0; i < kc; ++i) {
            aug[j].push_back(g);
            g = ext.pow_q(g);
        }
        ExtField::Elem y(m);
        for (unsigned c = 0; c < m; ++c) y[c] = received.basis().at(j, ell + c);
        aug[j].push_back(y);
    }
    // Gaussian elimination; the Moore matrix has full column rank kc.
    unsigned row = 0;
    std::vector<unsigned> pivot_rows;
    for (unsigned col = 0; col < kc; ++col) {
        unsigned sel = row;
        while (sel < ell && ext.is_zero(aug[sel][col])) ++sel;
        if (sel == ell) return std::nullopt;  // defensive; cannot happen
        std::swap(aug[sel], aug[row]);
        const ExtField::Elem piv_inv = ext.inv(aug[row][col]);
        for (unsigned c = col; c <= kc; ++c) aug[row][c] = ext.mul(piv_inv, aug[row][c]);
        for (unsigned r = 0; r < ell; ++r) {
            if (r == row || ext.is_zero(aug[r][col])) continue;
            const ExtField::Elem factor = aug[r][col];
            for (unsigned c = col; c <= kc; ++c)
                aug[r][c] = ext.add(aug[r][c], ext.mul(factor, aug[row][c]));
        }
        pivot_rows.push_back(row);
        ++row;
    }
    // Consistency: rows below the pivots must have zero right-hand side.
    for (unsigned r = row; r < ell; ++r)
        if (!ext.is_zero(aug[r][kc])) return std::nullopt;
    Message msg;
    msg.coeffs.resize(kc);
    for (unsigned col = 0; col < kc; ++col) msg.coeffs[col] = aug[pivot_rows[col]][kc];
    return msg;
}

std::optional<Message> SubspaceCodebook::decode(const Subspace& received) const {
    if (received.ambient_dim() != ambient_dim() || received.field() != spec_.ext().base())
        throw std::invalid_argument("received subspace not in the codebook's ambient space");
    if (std::optional<Message> exact = solve_exact(received)) return exact;
    if (!enumerable()) return std::nullopt;  // beyond radius recognition at this size
    const std::vector<Subspace>& words = enumerated();
    unsigned best = std::numeric_limits<unsigned>::max();
    std::uint64_t best_idx = 0;
    unsigned ties = 0;
    for (std::uint64_t i = 0; i < words.size(); ++i) {
        const unsigned d = subspace_distance(words[i], received);
        if (d < best) {
            best = d;
            best_idx = i;
            ties = 1;
        } else if (d == best) {
            ++ties;
        }
    }
    if (ties != 1 || 2 * best >= min_distance()) return std::nullopt;
    return message_from_index(best_idx);
}

}  // namespace hybridnc
