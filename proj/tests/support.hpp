#pragma once

// Test-only oracles, independent of the library's implementation paths:
// exhaustive vector enumeration for subspace counting, brute-force path
// enumeration for the graph metrics, and nearest-codeword search for the
// Reed-Solomon decoder.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hybridnc/network.hpp"
#include "hybridnc/reed_solomon.hpp"
#include "hybridnc/subspace.hpp"

namespace testsupport {

using hybridnc::Topology;
using hybridnc::Vec;

// All vectors of F_q^n in index order.
inline std::vector<Vec> all_vectors(std::uint64_t q, unsigned n) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= q;
    std::vector<Vec> out;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Vec v(n);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < n; ++i) {
            v[i] = static_cast<std::uint32_t>(t % q);
            t /= q;
        }
        out.push_back(std::move(v));
    }
    return out;
}

// Every subspace of F_q^n (canonical form), by spanning all generator tuples
// of up to n vectors. Desk scale only.
inline std::vector<hybridnc::Subspace> all_subspaces(std::shared_ptr<const hybridnc::Field> f,
                                                     unsigned n) {
    const std::vector<Vec> vecs = all_vectors(f->order(), n);
    std::vector<hybridnc::Subspace> found;
    auto add = [&](const hybridnc::Subspace& s) {
        if (std::find(found.begin(), found.end(), s) == found.end()) found.push_back(s);
    };
    add(hybridnc::Subspace::zero(n, f));
    std::vector<hybridnc::Subspace> frontier = {hybridnc::Subspace::zero(n, f)};
    // Closure under adding one generator at a time reaches every subspace.
    while (!frontier.empty()) {
        std::vector<hybridnc::Subspace> next;
        for (const hybridnc::Subspace& s : frontier) {
            for (const Vec& v : vecs) {
                if (s.contains(v)) continue;
                std::vector<Vec> gens;
                for (unsigned r = 0; r < s.dim(); ++r) gens.push_back(s.basis().row(r));
                gens.push_back(v);
                hybridnc::Subspace bigger = hybridnc::Subspace::span(gens, n, f);
                if (std::find(found.begin(), found.end(), bigger) == found.end()) {
                    found.push_back(bigger);
                    next.push_back(bigger);
                }
            }
        }
        frontier = std::move(next);
    }
    return found;
}

// Intersection dimension by enumerating the ambient space and testing joint
// membership; returns log_q of the intersection size.
inline unsigned intersection_dim_by_enumeration(const hybridnc::Subspace& a,
                                                const hybridnc::Subspace& b) {
    const std::uint64_t q = a.field().order();
    std::uint64_t count = 0;
    for (const Vec& v : all_vectors(q, a.ambient_dim()))
        if (a.contains(v) && b.contains(v)) ++count;
    unsigned dim = 0;
    while (count > 1) {
        count /= q;
        ++dim;
    }
    return dim;
}

// Exhaustive nearest-codeword Reed-Solomon decoding; ties -> nullopt below
// radius cannot happen, outside it the caller inspects `distance`.
struct NearestCodeword {
    Vec message;
    unsigned distance;
    bool unique;
};

inline NearestCodeword rs_nearest_codeword(const hybridnc::ReedSolomonCode& code, const Vec& word) {
    NearestCodeword best{Vec(), code.n() + 1, true};
    for (const Vec& msg : all_vectors(code.field().order(), code.k())) {
        const Vec cw = code.encode(msg);
        unsigned d = 0;
        for (unsigned i = 0; i < code.n(); ++i)
            if (cw[i] != word[i]) ++d;
        if (d < best.distance) {
            best = {msg, d, true};
        } else if (d == best.distance) {
            best.unique = false;
        }
    }
    return best;
}

// All source->receiver paths as edge-index sequences (DFS).
inline void enumerate_paths(const Topology& t, unsigned v, unsigned target,
                            std::vector<std::size_t>& prefix,
                            std::vector<std::vector<std::size_t>>& out) {
    if (v == target) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t i : t.out_edges(v)) {
        prefix.push_back(i);
        enumerate_paths(t, t.edges[i].head, target, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> all_paths(const Topology& t, unsigned target) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> prefix;
    enumerate_paths(t, t.source, target, prefix, out);
    return out;
}

// K(i) by collecting the union of edges over all paths ending with edge i.
inline unsigned k_of_edge_oracle(const Topology& t, std::size_t edge_index) {
    const unsigned receiver = t.edges[edge_index].head;
    std::set<std::size_t> on_path;
    for (const auto& path : all_paths(t, receiver)) {
        if (path.back() != edge_index) continue;
        on_path.insert(path.begin(), path.end());
    }
    return static_cast<unsigned>(on_path.size());
}

inline unsigned k_max_oracle(const Topology& t) {
    unsigned best = 0;
    for (unsigned r : t.receivers)
        for (std::size_t i : t.in_edges(r)) best = std::max(best, k_of_edge_oracle(t, i));
    return best;
}

// Maximum edge-disjoint path packing by backtracking over the path list.
inline unsigned max_disjoint_paths(const std::vector<std::vector<std::size_t>>& paths,
                                   std::set<std::size_t>& used, std::size_t from) {
    unsigned best = 0;
    for (std::size_t i = from; i < paths.size(); ++i) {
        bool clash = false;
        for (std::size_t e : paths[i])
            if (used.count(e)) {
                clash = true;
                break;
            }
        if (clash) continue;
        for (std::size_t e : paths[i]) used.insert(e);
        best = std::max(best, 1 + max_disjoint_paths(paths, used, i + 1));
        for (std::size_t e : paths[i]) used.erase(e);
    }
    return best;
}

inline unsigned min_cut_oracle(const Topology& t, unsigned receiver) {
    const auto paths = all_paths(t, receiver);
    std::set<std::size_t> used;
    return max_disjoint_paths(paths, used, 0);
}

// Seeded family of random DAGs with <= max_vertices vertices. Vertex 0 is
// the source (never an edge head); receivers are reachable non-source
// vertices.
inline Topology random_dag(std::mt19937_64& rng, unsigned max_vertices) {
    using hybridnc::uniform_below;
    while (true) {
        Topology t;
        const unsigned nv = 2 + static_cast<unsigned>(uniform_below(rng, max_vertices - 1));
        for (unsigned v = 0; v < nv; ++v) t.vertex_names.push_back("v" + std::to_string(v));
        t.source = 0;
        const unsigned ne = 1 + static_cast<unsigned>(uniform_below(rng, 2 * nv));
        for (unsigned i = 0; i < ne; ++i) {
            const unsigned tail = static_cast<unsigned>(uniform_below(rng, nv - 1));
            const unsigned head =
                tail + 1 + static_cast<unsigned>(uniform_below(rng, nv - tail - 1));
            t.edges.push_back({tail, head});
        }
        // Receivers: up to two reachable vertices with incoming edges.
        std::vector<unsigned> candidates;
        for (unsigned v = 1; v < nv; ++v)
            if (!t.in_edges(v).empty()) candidates.push_back(v);
        if (candidates.empty()) continue;
        const unsigned first =
            candidates[static_cast<std::size_t>(uniform_below(rng, candidates.size()))];
        t.receivers.push_back(first);
        if (candidates.size() > 1 && uniform_below(rng, 2) == 0) {
            const unsigned second =
                candidates[static_cast<std::size_t>(uniform_below(rng, candidates.size()))];
            if (second != first) t.receivers.push_back(second);
        }
        if (hybridnc::validate(t)) continue;  // e.g. receiver unreachable
        return t;
    }
}

}  // namespace testsupport
