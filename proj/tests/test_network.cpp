#include <doctest.h>

#include <random>

#include "hybridnc/harness.hpp"
#include "hybridnc/network.hpp"
#include "support.hpp"

using namespace hybridnc;

namespace {

Topology single_edge() {
    return parse_topology("source s\nreceiver r\nedge s r\n");
}

// Classic butterfly: one source, two receivers, unit edges, min-cut 2.
Topology classic_butterfly() {
    return parse_topology(
        "source s\nreceiver r1\nreceiver r2\n"
        "edge s a\nedge s b\n"
        "edge a r1\nedge b r2\n"
        "edge a c\nedge b c\n"
        "edge c d\n"
        "edge d r1\nedge d r2\n");
}

}  // namespace

TEST_CASE("validate checks each topology invariant") {
    CHECK_FALSE(validate(single_edge()).has_value());

    Topology into_source = single_edge();
    into_source.edges.push_back({1, 0});  // r -> s
    CHECK(validate(into_source) == "source has incoming edge");

    Topology cyc;
    cyc.vertex_names = {"s", "u", "v"};
    cyc.source = 0;
    cyc.receivers = {1};
    cyc.edges = {{0, 1}, {1, 2}, {2, 1}};
    CHECK(validate(cyc) == "cycle");

    Topology unreachable;
    unreachable.vertex_names = {"s", "u", "r"};
    unreachable.source = 0;
    unreachable.receivers = {2};
    unreachable.edges = {{0, 1}};
    CHECK(validate(unreachable).value().find("unreachable") != std::string::npos);
}

TEST_CASE("min_cut_size basics") {
    Topology path = parse_topology("source s\nreceiver r\nedge s u\nedge u r\n");
    CHECK(min_cut_size(path, path.receivers[0]) == 1);

    Topology bf = classic_butterfly();
    for (unsigned r : bf.receivers) CHECK(min_cut_size(bf, r) == 2);
    for (unsigned r : bf.receivers) CHECK(testsupport::min_cut_oracle(bf, r) == 2);

    Topology par = builtin_topology("parallel4");
    CHECK(min_cut_size(par, par.receivers[0]) == 4);

    CHECK_THROWS_AS(min_cut_size(path, 2), std::invalid_argument);  // "u" is not a receiver
}

TEST_CASE("k_of_edge and k_max basics") {
    Topology single = single_edge();
    CHECK(k_of_edge(single, 0) == 1);
    CHECK(k_max(single) == 1);

    Topology path = parse_topology("source s\nreceiver r\nedge s u\nedge u r\n");
    CHECK(k_of_edge(path, 1) == 2);
    CHECK(k_max(path) == 2);
    CHECK_THROWS_AS(k_of_edge(path, 0), std::invalid_argument);  // head not a receiver

    Topology bf = classic_butterfly();
    for (unsigned r : bf.receivers)
        for (std::size_t i : bf.in_edges(r))
            CHECK(k_of_edge(bf, i) == testsupport::k_of_edge_oracle(bf, i));
    CHECK(k_max(bf) == testsupport::k_max_oracle(bf));
}

TEST_CASE("graph metrics agree with brute force on random DAGs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        Topology t = testsupport::random_dag(rng, 8);
        for (unsigned r : t.receivers) {
            CHECK(min_cut_size(t, r) == testsupport::min_cut_oracle(t, r));
            for (std::size_t i : t.in_edges(r))
                CHECK(k_of_edge(t, i) == testsupport::k_of_edge_oracle(t, i));
        }
        CHECK(k_max(t) == testsupport::k_max_oracle(t));
    }
}

TEST_CASE("qsc_corrupt endpoints") {
    auto f = Field::gf(8);
    std::mt19937_64 rng(5);
    Vec v(64);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % 256);

    auto [clean, zero_err] = qsc_corrupt(v, {0.0}, *f, rng);
    CHECK(clean == v);
    CHECK(zero_err == Vec(64, 0));

    auto [full, err] = qsc_corrupt(v, {1.0}, *f, rng);
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(full[i] != v[i]);
        CHECK(err[i] != 0);
    }
}

TEST_CASE("qsc_corrupt empirical rate") {
    auto f = Field::gf(8);
    std::mt19937_64 rng(6);
    Vec v(100000, 0);
    auto [out, err] = qsc_corrupt(v, {0.1}, *f, rng);
    unsigned flips = 0;
    for (auto e : err)
        if (e != 0) ++flips;
    const double rate = double(flips) / double(v.size());
    CHECK(rate > 0.09);
    CHECK(rate < 0.11);
}

TEST_CASE("noiseless propagation stays inside the injected span") {
    auto f = Field::gf(8);
    Topology bf = classic_butterfly();
    std::mt19937_64 rng(7);
    std::map<std::size_t, Vec> injected;
    std::vector<Vec> sent;
    for (std::size_t i : bf.out_edges(bf.source)) {
        Vec v(6);
        for (auto& x : v) x = static_cast<std::uint32_t>(rng() % 256);
        injected[i] = v;
        sent.push_back(v);
    }
    const TransmissionResult tx = simulate(bf, injected, *f, {0.0}, rng);
    Subspace vs = Subspace::span(sent, 6, f);
    for (unsigned r : bf.receivers)
        for (auto& [edge, y] : tx.receiver_inputs(bf, r)) CHECK(vs.contains(y));
}

TEST_CASE("single-path noiseless transmission is a scalar multiple") {
    auto f = Field::gf(8);
    Topology path = parse_topology("source s\nreceiver r\nedge s u\nedge u r\n");
    std::mt19937_64 rng(8);
    Vec v = {1, 2, 3, 4};
    const TransmissionResult tx = simulate(path, {{0, v}}, *f, {0.0}, rng);
    const Vec& y = tx.edge_values[1];
    const std::uint32_t coeff = tx.coefficients.at({0, 1});
    for (unsigned i = 0; i < 4; ++i) CHECK(y[i] == f->mul(coeff, v[i]));
}

TEST_CASE("forced unit coefficients reproduce hand-computed butterfly sums") {
    auto f = Field::gf(8);
    Topology bf = classic_butterfly();
    // edges: 0 s->a, 1 s->b, 2 a->r1, 3 b->r2, 4 a->c, 5 b->c, 6 c->d, 7 d->r1, 8 d->r2
    SimHooks hooks;
    for (std::size_t j = 0; j < bf.edges.size(); ++j)
        for (std::size_t i : bf.in_edges(bf.edges[j].tail)) hooks.forced_coefficients[{i, j}] = 1;
    std::mt19937_64 rng(9);
    Vec v1 = {10, 20}, v2 = {30, 7};
    const TransmissionResult tx = simulate(bf, {{0, v1}, {1, v2}}, *f, {0.0}, rng, hooks);
    const Vec sum = {f->add(10, 30), f->add(20, 7)};
    CHECK(tx.edge_values[2] == v1);  // a -> r1
    CHECK(tx.edge_values[3] == v2);  // b -> r2
    CHECK(tx.edge_values[7] == sum);  // via the bottleneck
    CHECK(tx.edge_values[8] == sum);
}

TEST_CASE("a single noisy edge adds at most one error dimension") {
    auto f = Field::gf(8);
    Topology bf = classic_butterfly();
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 200; ++trial) {
        std::map<std::size_t, Vec> injected;
        std::vector<Vec> sent;
        for (std::size_t i : bf.out_edges(bf.source)) {
            Vec v(5);
            for (auto& x : v) x = static_cast<std::uint32_t>(rng() % 256);
            injected[i] = v;
            sent.push_back(v);
        }
        SimHooks hooks;
        const std::size_t bad = rng() % bf.edges.size();
        for (std::size_t j = 0; j < bf.edges.size(); ++j) hooks.forced_errors[j] = Vec(5, 0);
        Vec err(5, 0);
        while (err == Vec(5, 0))
            for (auto& x : err) x = static_cast<std::uint32_t>(rng() % 256);
        hooks.forced_errors[bad] = err;
        const TransmissionResult tx = simulate(bf, injected, *f, {0.0}, rng, hooks);
        Subspace vs = Subspace::span(sent, 5, f);
        for (unsigned r : bf.receivers) {
            std::vector<Vec> got;
            for (auto& [edge, y] : tx.receiver_inputs(bf, r)) got.push_back(y);
            Subspace u = Subspace::span(got, 5, f);
            CHECK(u.dim() - dim_intersection(u, vs) <= 1);
        }
    }
}

TEST_CASE("simulate is deterministic in the seed") {
    auto f = Field::gf(8);
    Topology bf = classic_butterfly();
    std::map<std::size_t, Vec> injected = {{0, {1, 2, 3}}, {1, {4, 5, 6}}};
    std::mt19937_64 rng1(123), rng2(123);
    const TransmissionResult a = simulate(bf, injected, *f, {0.3}, rng1);
    const TransmissionResult b = simulate(bf, injected, *f, {0.3}, rng2);
    CHECK(a.edge_values == b.edge_values);
    CHECK(a.edge_errors == b.edge_errors);
    CHECK(a.coefficients == b.coefficients);
}

TEST_CASE("simulate rejects bad injections") {
    auto f = Field::gf(8);
    Topology bf = classic_butterfly();
    std::mt19937_64 rng(11);
    CHECK_THROWS_AS(simulate(bf, {{0, Vec{1}}}, *f, {0.0}, rng), std::invalid_argument);
    CHECK_THROWS_AS(simulate(bf, {{0, Vec{1, 2}}, {1, Vec{1}}}, *f, {0.0}, rng),
                    std::invalid_argument);
}
