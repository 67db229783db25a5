#include "hybridnc/network.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hybridnc {

std::vector<std::size_t> Topology::out_edges(unsigned v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].tail == v) out.push_back(i);
    return out;
}

std::vector<std::size_t> Topology::in_edges(unsigned v) const {
    std::vector<std::size_t> in;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].head == v) in.push_back(i);
    return in;
}

bool Topology::is_receiver(unsigned v) const {
    return std::find(receivers.begin(), receivers.end(), v) != receivers.end();
}

namespace {

// Kahn topological order over vertices, ascending-index tie break; empty on cycle.
std::vector<unsigned> topo_order(const Topology& t) {
    const unsigned nv = static_cast<unsigned>(t.vertex_names.size());
    std::vector<unsigned> indeg(nv, 0);
    for (const auto& e : t.edges) ++indeg[e.head];
    std::vector<unsigned> order;
    std::vector<bool> placed(nv, false);
    for (unsigned round = 0; round < nv; ++round) {
        unsigned pick = nv;
        for (unsigned v = 0; v < nv; ++v)
            if (!placed[v] && indeg[v] == 0) {
                pick = v;
                break;
            }
        if (pick == nv) return {};
        placed[pick] = true;
        order.push_back(pick);
        for (const auto& e : t.edges)
            if (e.tail == pick) --indeg[e.head];
    }
    return order;
}

std::vector<bool> reachable_from(const Topology& t, unsigned start, bool reverse) {
    std::vector<bool> seen(t.vertex_names.size(), false);
    seen[start] = true;
    std::deque<unsigned> queue = {start};
    while (!queue.empty()) {
        const unsigned v = queue.front();
        queue.pop_front();
        for (const auto& e : t.edges) {
            const unsigned from = reverse ? e.head : e.tail;
            const unsigned to = reverse ? e.tail : e.head;
            if (from == v && !seen[to]) {
                seen[to] = true;
                queue.push_back(to);
            }
        }
    }
    return seen;
}

}  // namespace

std::optional<std::string> validate(const Topology& t) {
    const unsigned nv = static_cast<unsigned>(t.vertex_names.size());
    if (t.source >= nv) return "source vertex out of range";
    if (t.receivers.empty()) return "no receivers";
    for (unsigned r : t.receivers)
        if (r >= nv) return "receiver vertex out of range";
    for (const auto& e : t.edges)
        if (e.tail >= nv || e.head >= nv) return "edge endpoint out of range";
    for (const auto& e : t.edges)
        if (e.head == t.source) return "source has incoming edge";
    if (topo_order(t).empty() && nv > 0) return "cycle";
    const std::vector<bool> reach = reachable_from(t, t.source, false);
    for (unsigned v = 0; v < nv; ++v)
        if (!reach[v]) return "vertex " + t.vertex_names[v] + " unreachable from source";
    return std::nullopt;
}

unsigned min_cut_size(const Topology& t, unsigned receiver) {
    if (!t.is_receiver(receiver)) throw std::invalid_argument("vertex is not a receiver");
    // Edmonds-Karp with unit edge capacities; residual arcs per edge.
    std::vector<int> flow(t.edges.size(), 0);  // 0 or 1 along the edge direction
    unsigned total = 0;
    while (true) {
        // BFS over residual graph, remembering (edge, forward?) steps.
        std::vector<int> prev_edge(t.vertex_names.size(), -1);
        std::vector<bool> prev_forward(t.vertex_names.size(), false);
        std::vector<bool> seen(t.vertex_names.size(), false);
        seen[t.source] = true;
        std::deque<unsigned> queue = {t.source};
        while (!queue.empty() && !seen[receiver]) {
            const unsigned v = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < t.edges.size(); ++i) {
                const auto& e = t.edges[i];
                if (e.tail == v && flow[i] == 0 && !seen[e.head]) {
                    seen[e.head] = true;
                    prev_edge[e.head] = static_cast<int>(i);
                    prev_forward[e.head] = true;
                    queue.push_back(e.head);
                } else if (e.head == v && flow[i] == 1 && !seen[e.tail]) {
                    seen[e.tail] = true;
                    prev_edge[e.tail] = static_cast<int>(i);
                    prev_forward[e.tail] = false;
                    queue.push_back(e.tail);
                }
            }
        }
        if (!seen[receiver]) break;
        unsigned v = receiver;
        while (v != t.source) {
            const std::size_t i = static_cast<std::size_t>(prev_edge[v]);
            if (prev_forward[v]) {
                flow[i] = 1;
                v = t.edges[i].tail;
            } else {
                flow[i] = 0;
                v = t.edges[i].head;
            }
        }
        ++total;
    }
    return total;
}

unsigned k_of_edge(const Topology& t, std::size_t edge_index) {
    if (edge_index >= t.edges.size()) throw std::invalid_argument("edge index out of range");
    const auto& last = t.edges[edge_index];
    if (!t.is_receiver(last.head))
        throw std::invalid_argument("edge does not terminate at a receiver");
    const std::vector<bool> from_source = reachable_from(t, t.source, false);
    const std::vector<bool> reaches_tail = reachable_from(t, last.tail, true);
    unsigned count = 0;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        const auto& e = t.edges[i];
        if (i == edge_index || (from_source[e.tail] && reaches_tail[e.head])) ++count;
    }
    return count;
}

unsigned k_max(const Topology& t) {
    unsigned best = 0;
    for (unsigned r : t.receivers)
        for (std::size_t i : t.in_edges(r)) best = std::max(best, k_of_edge(t, i));
    return best;
}

std::pair<Vec, Vec> qsc_corrupt(const Vec& v, const EdgeNoiseModel& noise, const Field& field,
                                std::mt19937_64& rng) {
    if (noise.p < 0.0 || noise.p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
    Vec out = v;
    Vec err(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (uniform01(rng) < noise.p) {
            // A uniformly random different symbol = a uniform nonzero offset.
            const std::uint32_t offset =
                1 + static_cast<std::uint32_t>(uniform_below(rng, field.order() - 1));
            err[i] = offset;
            out[i] = field.add(v[i], offset);
        }
    }
    return {out, err};
}

std::vector<std::pair<std::size_t, Vec>> TransmissionResult::receiver_inputs(
    const Topology& t, unsigned receiver) const {
    std::vector<std::pair<std::size_t, Vec>> inputs;
    for (std::size_t i : t.in_edges(receiver)) inputs.emplace_back(i, edge_values[i]);
    return inputs;
}

TransmissionResult simulate(const Topology& t, const std::map<std::size_t, Vec>& injected,
                            const Field& field, const EdgeNoiseModel& noise, std::mt19937_64& rng,
                            const SimHooks& hooks) {
    const std::vector<std::size_t> source_edges = t.out_edges(t.source);
    if (injected.size() != source_edges.size())
        throw std::invalid_argument("injected vectors must cover exactly the source's out-edges");
    std::size_t vec_len = 0;
    bool first = true;
    for (std::size_t i : source_edges) {
        auto it = injected.find(i);
        if (it == injected.end())
            throw std::invalid_argument("missing injected vector for a source out-edge");
        if (first) {
            vec_len = it->second.size();
            first = false;
        } else if (it->second.size() != vec_len) {
            throw std::invalid_argument("injected vectors must have equal length");
        }
    }

    TransmissionResult result;
    result.edge_values.assign(t.edges.size(), Vec(vec_len, 0));
    result.edge_errors.assign(t.edges.size(), Vec(vec_len, 0));

    // Pass 1: coefficients, consumed in edge-index order, incoming edges in
    // ascending index order per edge.
    for (std::size_t j = 0; j < t.edges.size(); ++j) {
        if (t.edges[j].tail == t.source) continue;
        for (std::size_t i : t.in_edges(t.edges[j].tail)) {
            const auto key = std::make_pair(i, j);
            auto forced = hooks.forced_coefficients.find(key);
            result.coefficients[key] =
                forced != hooks.forced_coefficients.end()
                    ? forced->second
                    : static_cast<std::uint32_t>(uniform_below(rng, field.order()));
        }
    }

    // Pass 2: error vectors, also in edge-index order. The additive error is
    // value-independent, so it can be drawn before propagation.
    for (std::size_t j = 0; j < t.edges.size(); ++j) {
        auto forced = hooks.forced_errors.find(j);
        if (forced != hooks.forced_errors.end()) {
            if (forced->second.size() != vec_len)
                throw std::invalid_argument("forced error vector length mismatch");
            result.edge_errors[j] = forced->second;
        } else {
            result.edge_errors[j] = qsc_corrupt(Vec(vec_len, 0), noise, field, rng).first;
        }
    }

    // Pass 3: propagate Y(j) in an order where every incoming edge of a tail
    // is already settled (edges sorted by topological position of the tail).
    const std::vector<unsigned> order = topo_order(t);
    std::vector<unsigned> pos(t.vertex_names.size(), 0);
    for (unsigned i = 0; i < order.size(); ++i) pos[order[i]] = i;
    std::vector<std::size_t> edge_order(t.edges.size());
    for (std::size_t i = 0; i < edge_order.size(); ++i) edge_order[i] = i;
    std::stable_sort(edge_order.begin(), edge_order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return pos[t.edges[a].tail] < pos[t.edges[b].tail];
                     });
    for (std::size_t j : edge_order) {
        Vec y(vec_len, 0);
        if (t.edges[j].tail == t.source) {
            y = injected.at(j);
        } else {
            for (std::size_t i : t.in_edges(t.edges[j].tail)) {
                const std::uint32_t f = result.coefficients.at({i, j});
                if (f == 0) continue;
                for (std::size_t c = 0; c < vec_len; ++c)
                    y[c] = field.add(y[c], field.mul(f, result.edge_values[i][c]));
            }
        }
        for (std::size_t c = 0; c < vec_len; ++c)
            y[c] = field.add(y[c], result.edge_errors[j][c]);
        result.edge_values[j] = std::move(y);
    }
    return result;
}

}  // namespace hybridnc
