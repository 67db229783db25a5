#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hybridnc/field.hpp"
#include "hybridnc/subspace.hpp"

namespace hybridnc {

/// Acyclic network with one source and t receivers. Edges are directed,
/// unit-capacity, and keep their declaration order as stable indices;
/// parallel edges are permitted.
struct Topology {
    struct Edge {
        unsigned tail;
        unsigned head;
        bool operator==(const Edge&) const = default;
    };

    std::vector<std::string> vertex_names;
    unsigned source = 0;
    std::vector<unsigned> receivers;
    std::vector<Edge> edges;

    std::vector<std::size_t> out_edges(unsigned v) const;
    std::vector<std::size_t> in_edges(unsigned v) const;
    bool is_receiver(unsigned v) const;

    bool operator==(const Topology&) const = default;
};

/// First violated topology invariant, or nullopt when valid.
std::optional<std::string> validate(const Topology& t);

/// Maximum number of edge-disjoint source-to-receiver paths.
unsigned min_cut_size(const Topology& t, unsigned receiver);

/// K(i): edges lying on at least one source-to-receiver path whose final
/// edge is `edge_index`; the head of that edge must be a receiver.
unsigned k_of_edge(const Topology& t, std::size_t edge_index);

/// K = max K(i) over all receiver-incoming edges.
unsigned k_max(const Topology& t);

/// q-ary symmetric channel: each symbol independently replaced, with
/// probability p, by a uniformly random different symbol.
struct EdgeNoiseModel {
    double p = 0.0;
};

/// Corrupted vector and the additive error vector e (corrupted - original).
std::pair<Vec, Vec> qsc_corrupt(const Vec& v, const EdgeNoiseModel& noise, const Field& field,
                                std::mt19937_64& rng);

/// Test hooks: force selected coefficients or edge error vectors instead of
/// drawing them, bypassing only those draws.
struct SimHooks {
    std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> forced_coefficients;
    std::map<std::size_t, Vec> forced_errors;
};

struct TransmissionResult {
    std::vector<Vec> edge_values;  // Y(j), indexed by edge
    std::vector<Vec> edge_errors;  // e(j)
    std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> coefficients;  // (in, out) -> f

    /// (incoming edge index, Y) pairs for a receiver, in edge-index order.
    std::vector<std::pair<std::size_t, Vec>> receiver_inputs(const Topology& t,
                                                             unsigned receiver) const;
};

/// One pass of random linear network coding: coefficients drawn uniformly
/// and independently from F_q (stream consumed in edge-index order), then
/// q-ary symmetric noise per edge, then Y(j) = sum f_{i,j} Y(i) + e(j) in
/// topological order. Source edges carry injected vectors plus noise.
TransmissionResult simulate(const Topology& t, const std::map<std::size_t, Vec>& injected,
                            const Field& field, const EdgeNoiseModel& noise, std::mt19937_64& rng,
                            const SimHooks& hooks = {});

}  // namespace hybridnc
