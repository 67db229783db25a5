#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hybridnc/gabidulin.hpp"
#include "hybridnc/network.hpp"
#include "hybridnc/reed_solomon.hpp"

namespace hybridnc {

enum class Mode { Hybrid, Baseline };

std::string mode_name(Mode m);

/// 1 - (1-p)^{k_prime}: the design error probability for the inner code of
/// a channel whose symbols accumulate noise from up to k_prime edges.
double effective_error_probability(double p, unsigned k_prime);

struct ProtocolConfig {
    std::shared_ptr<const SubspaceCodebook> codebook;
    std::shared_ptr<const ReedSolomonCode> rs;  // rs->k() == codebook->ambient_dim()
    Topology topology;
    EdgeNoiseModel noise;
    unsigned b = 0;  // number of injected vectors = out-degree of the source

    void check() const;  // throws on any violated invariant
};

/// Subspace-encode, draw a size-b generating set, inner-encode (hybrid), and
/// assign vectors to the source's out-edges in edge-index order.
std::map<std::size_t, Vec> send(const Message& msg, const ProtocolConfig& config, Mode mode,
                                std::mt19937_64& rng);

struct ReceiveOutcome {
    std::optional<Message> message;
    unsigned inner_failures = 0;  // RS decodes that failed (hybrid only)
    unsigned inner_decodes = 0;
    Subspace span;  // what the subspace decoder saw
};

/// RS-decode each incoming vector, discard failures, truncate to the first k
/// symbols, span, subspace-decode.
ReceiveOutcome receive_hybrid(const std::vector<Vec>& incoming, const ProtocolConfig& config);

/// Span the raw incoming vectors and subspace-decode.
ReceiveOutcome receive_baseline(const std::vector<Vec>& incoming, const ProtocolConfig& config);

struct TrialOutcome {
    unsigned receiver = 0;
    Mode mode = Mode::Hybrid;
    bool success = false;
    unsigned erasures = 0;  // rho, sent codeword vs measured span
    unsigned errors = 0;    // t
    unsigned inner_failures = 0;
    unsigned inner_decodes = 0;
};

/// One full send -> simulate -> receive cycle with a uniformly random
/// message; deterministic in the seed.
std::vector<TrialOutcome> run_trial(const ProtocolConfig& config, Mode mode, std::uint64_t seed);

struct ModeReceiverStats {
    Mode mode = Mode::Hybrid;
    unsigned receiver = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double sum_erasures = 0.0;
    double sum_errors = 0.0;
    std::uint64_t inner_failures = 0;
    std::uint64_t inner_decodes = 0;

    double success_rate() const { return trials ? double(successes) / double(trials) : 0.0; }
    double mean_erasures() const { return trials ? sum_erasures / double(trials) : 0.0; }
    double mean_errors() const { return trials ? sum_errors / double(trials) : 0.0; }
    double inner_failure_rate() const {
        return inner_decodes ? double(inner_failures) / double(inner_decodes) : 0.0;
    }
};

struct ExperimentResult {
    std::vector<ModeReceiverStats> rows;  // one per (mode, receiver)
    unsigned k_max = 0;
    double effective_p = 0.0;
};

std::uint64_t trial_seed(std::uint64_t master_seed, Mode mode, std::uint64_t trial);

ExperimentResult run_experiment(const ProtocolConfig& config, const std::vector<Mode>& modes,
                                std::uint64_t trials, std::uint64_t master_seed);

}  // namespace hybridnc
