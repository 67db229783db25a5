#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "hybridnc/network.hpp"
#include "hybridnc/protocol.hpp"

namespace hybridnc {

struct ParseError : std::runtime_error {
    ParseError(unsigned line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    unsigned line;
};

/// Topology text format, one directive per line, '#' comments:
///   source <id>
///   receiver <id>        (repeatable)
///   edge <tail> <head>   (repeatable; order defines edge indices)
Topology parse_topology(const std::string& text);
std::string serialize_topology(const Topology& t);

/// "builtin:<name>" for a named fixture, anything else is a file path.
/// Fixtures: butterfly (doubled-edge butterfly, min-cut 4 per receiver),
/// path3 (three-edge path, K = 3), parallel4 (four parallel edges).
Topology load_topology(const std::string& spec);
Topology builtin_topology(const std::string& name);

struct ExperimentConfig {
    std::string topology = "builtin:butterfly";
    unsigned q_exp = 8;  // q = 2^q_exp
    unsigned m = 4;
    unsigned ell = 4;
    unsigned kc = 2;
    unsigned n = 16;
    double p = 0.01;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    std::string mode = "both";  // hybrid | baseline | both
    std::string out = "results.csv";
    std::string format = "csv";  // csv | json
};

/// Validates every guard, runs the experiment, writes the result file.
/// Throws std::invalid_argument naming the offending parameter.
void run(const ExperimentConfig& config);

std::string format_results(const ExperimentConfig& config, const Topology& topology,
                           const ExperimentResult& result);

ProtocolConfig build_protocol_config(const ExperimentConfig& config, const Topology& topology);

}  // namespace hybridnc
