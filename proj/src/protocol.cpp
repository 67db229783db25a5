#include "hybridnc/protocol.hpp"

#include <cmath>
#include <stdexcept>

namespace hybridnc {

std::string mode_name(Mode m) { return m == Mode::Hybrid ? "hybrid" : "baseline"; }

double effective_error_probability(double p, unsigned k_prime) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
    if (k_prime < 1) throw std::invalid_argument("k_prime must be >= 1");
    return 1.0 - std::pow(1.0 - p, static_cast<double>(k_prime));
}

void ProtocolConfig::check() const {
    if (!codebook) throw std::invalid_argument("missing codebook");
    if (!rs) throw std::invalid_argument("missing inner code");
    if (rs->k() != codebook->ambient_dim())
        throw std::invalid_argument("inner code message length must equal the ambient dimension");
    if (rs->field() != codebook->gabidulin().ext().base())
        throw std::invalid_argument("inner code and codebook must share the network field");
    if (std::optional<std::string> violation = validate(topology))
        throw std::invalid_argument("invalid topology: " + *violation);
    const std::size_t out_deg = topology.out_edges(topology.source).size();
    if (b != out_deg)
        throw std::invalid_argument("b must equal the source's out-degree");
    if (b < codebook->gabidulin().length())
        throw std::invalid_argument("b must be at least the codeword dimension ell");
    if (noise.p < 0.0 || noise.p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
}

std::map<std::size_t, Vec> send(const Message& msg, const ProtocolConfig& config, Mode mode,
                                std::mt19937_64& rng) {
    const Subspace codeword = config.codebook->encode_message(msg);
    const std::vector<Vec> generators = random_generating_set(codeword, config.b, rng);
    const std::vector<std::size_t> out = config.topology.out_edges(config.topology.source);
    std::map<std::size_t, Vec> injected;
    for (std::size_t z = 0; z < out.size(); ++z) {
        injected[out[z]] =
            mode == Mode::Hybrid ? config.rs->encode(generators[z]) : generators[z];
    }
    return injected;
}

ReceiveOutcome receive_hybrid(const std::vector<Vec>& incoming, const ProtocolConfig& config) {
    const unsigned k = config.codebook->ambient_dim();
    std::vector<Vec> survivors;
    unsigned failures = 0;
    for (const Vec& word : incoming) {
        if (word.size() != config.rs->n()) throw std::invalid_argument("vector length mismatch");
        if (std::optional<Vec> msg = config.rs->decode(word)) {
            survivors.push_back(std::move(*msg));
        } else {
            ++failures;  // discarded: at worst an erasure, never an error
        }
    }
    Subspace span = Subspace::span(survivors, k, config.rs->field_ptr());
    ReceiveOutcome out{config.codebook->decode(span), failures,
                       static_cast<unsigned>(incoming.size()), std::move(span)};
    return out;
}

ReceiveOutcome receive_baseline(const std::vector<Vec>& incoming, const ProtocolConfig& config) {
    const unsigned k = config.codebook->ambient_dim();
    for (const Vec& v : incoming)
        if (v.size() != k) throw std::invalid_argument("vector length mismatch");
    Subspace span = Subspace::span(incoming, k, config.rs->field_ptr());
    return {config.codebook->decode(span), 0, 0, std::move(span)};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

Message random_message(const SubspaceCodebook& codebook, std::mt19937_64& rng) {
    const ExtField& ext = codebook.gabidulin().ext();
    Message msg;
    for (unsigned i = 0; i < codebook.gabidulin().dimension(); ++i) {
        ExtField::Elem e(ext.degree());
        for (unsigned c = 0; c < ext.degree(); ++c)
            e[c] = static_cast<std::uint32_t>(uniform_below(rng, ext.base().order()));
        msg.coeffs.push_back(std::move(e));
    }
    return msg;
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master_seed, Mode mode, std::uint64_t trial) {
    const std::uint64_t tag = mode == Mode::Hybrid ? 1 : 2;
    return splitmix64(splitmix64(master_seed ^ (tag << 56)) + trial);
}

std::vector<TrialOutcome> run_trial(const ProtocolConfig& config, Mode mode, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Message msg = random_message(*config.codebook, rng);
    const Subspace sent = config.codebook->encode_message(msg);
    const std::map<std::size_t, Vec> injected = send(msg, config, mode, rng);
    const TransmissionResult tx = simulate(config.topology, injected,
                                           config.codebook->gabidulin().ext().base(),
                                           config.noise, rng);
    std::vector<TrialOutcome> outcomes;
    for (unsigned r : config.topology.receivers) {
        std::vector<Vec> incoming;
        for (auto& [edge, vec] : tx.receiver_inputs(config.topology, r))
            incoming.push_back(vec);
        ReceiveOutcome rx = mode == Mode::Hybrid ? receive_hybrid(incoming, config)
                                                 : receive_baseline(incoming, config);
        const ErasureErrorCount counts = erasures_errors(sent, rx.span);
        TrialOutcome out;
        out.receiver = r;
        out.mode = mode;
        out.success = rx.message.has_value() && *rx.message == msg;
        out.erasures = counts.erasures;
        out.errors = counts.errors;
        out.inner_failures = rx.inner_failures;
        out.inner_decodes = rx.inner_decodes;
        outcomes.push_back(out);
    }
    return outcomes;
}

ExperimentResult run_experiment(const ProtocolConfig& config, const std::vector<Mode>& modes,
                                std::uint64_t trials, std::uint64_t master_seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    config.check();
    ExperimentResult result;
    result.k_max = k_max(config.topology);
    result.effective_p = effective_error_probability(config.noise.p, result.k_max);
    for (Mode mode : modes) {
        std::vector<ModeReceiverStats> rows;
        for (unsigned r : config.topology.receivers) {
            ModeReceiverStats s;
            s.mode = mode;
            s.receiver = r;
            rows.push_back(s);
        }
        for (std::uint64_t trial = 0; trial < trials; ++trial) {
            const std::vector<TrialOutcome> outcomes =
                run_trial(config, mode, trial_seed(master_seed, mode, trial));
            for (std::size_t i = 0; i < outcomes.size(); ++i) {
                ModeReceiverStats& s = rows[i];
                ++s.trials;
                if (outcomes[i].success) ++s.successes;
                s.sum_erasures += outcomes[i].erasures;
                s.sum_errors += outcomes[i].errors;
                s.inner_failures += outcomes[i].inner_failures;
                s.inner_decodes += outcomes[i].inner_decodes;
            }
        }
        for (ModeReceiverStats& s : rows) result.rows.push_back(s);
    }
    return result;
}

}  // namespace hybridnc
