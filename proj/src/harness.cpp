#include "hybridnc/harness.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace hybridnc {

namespace {

unsigned vertex_index(Topology& t, std::map<std::string, unsigned>& by_name,
                      const std::string& name) {
    auto it = by_name.find(name);
    if (it != by_name.end()) return it->second;
    const unsigned idx = static_cast<unsigned>(t.vertex_names.size());
    t.vertex_names.push_back(name);
    by_name.emplace(name, idx);
    return idx;
}

}  // namespace

Topology parse_topology(const std::string& text) {
    Topology t;
    std::map<std::string, unsigned> by_name;
    bool have_source = false;
    std::istringstream in(text);
    std::string line;
    unsigned line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string keyword;
        if (!(tokens >> keyword)) continue;
        if (keyword == "source") {
            std::string name;
            if (!(tokens >> name)) throw ParseError(line_no, "source needs a vertex id");
            if (have_source) throw ParseError(line_no, "duplicate source");
            t.source = vertex_index(t, by_name, name);
            have_source = true;
        } else if (keyword == "receiver") {
            std::string name;
            if (!(tokens >> name)) throw ParseError(line_no, "receiver needs a vertex id");
            t.receivers.push_back(vertex_index(t, by_name, name));
        } else if (keyword == "edge") {
            std::string tail, head;
            if (!(tokens >> tail >> head)) throw ParseError(line_no, "edge needs tail and head");
            t.edges.push_back({vertex_index(t, by_name, tail), vertex_index(t, by_name, head)});
        } else {
            throw ParseError(line_no, "unknown directive '" + keyword + "'");
        }
        std::string extra;
        if (tokens >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
    }
    if (!have_source) throw ParseError(line_no, "missing source directive");
    if (std::optional<std::string> violation = validate(t))
        throw std::invalid_argument("invalid topology: " + *violation);
    return t;
}

std::string serialize_topology(const Topology& t) {
    std::ostringstream out;
    out << "source " << t.vertex_names[t.source] << "\n";
    for (unsigned r : t.receivers) out << "receiver " << t.vertex_names[r] << "\n";
    for (const auto& e : t.edges)
        out << "edge " << t.vertex_names[e.tail] << " " << t.vertex_names[e.head] << "\n";
    return out.str();
}

Topology builtin_topology(const std::string& name) {
    // Every butterfly edge appears twice so that the source out-degree and
    // per-receiver min-cut are 4, enough for codewords of dimension up to 4.
    if (name == "butterfly") {
        return parse_topology(
            "source s\n"
            "receiver r1\n"
            "receiver r2\n"
            "edge s a\nedge s a\n"
            "edge s b\nedge s b\n"
            "edge a r1\nedge a r1\n"
            "edge b r2\nedge b r2\n"
            "edge a c\nedge a c\n"
            "edge b c\nedge b c\n"
            "edge c d\nedge c d\n"
            "edge d r1\nedge d r1\n"
            "edge d r2\nedge d r2\n");
    }
    if (name == "path3") {
        return parse_topology(
            "source s\nreceiver r\n"
            "edge s u\nedge u v\nedge v r\n");
    }
    if (name == "parallel4") {
        return parse_topology(
            "source s\nreceiver r\n"
            "edge s r\nedge s r\nedge s r\nedge s r\n");
    }
    throw std::invalid_argument("unknown builtin topology '" + name + "'");
}

Topology load_topology(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return builtin_topology(spec.substr(8));
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open topology file '" + spec + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_topology(text.str());
}

ProtocolConfig build_protocol_config(const ExperimentConfig& c, const Topology& topology) {
    if (c.q_exp < 1 || c.q_exp > 16)
        throw std::invalid_argument("q-exp must be in [1, 16]");
    if (c.m < 1) throw std::invalid_argument("m must be >= 1");
    if (c.kc < 1 || c.kc > c.ell || c.ell > c.m)
        throw std::invalid_argument("require 1 <= kc <= ell <= m");
    if (c.p < 0.0 || c.p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
    if (c.trials < 1) throw std::invalid_argument("trials must be >= 1");
    const std::uint64_t q = std::uint64_t{1} << c.q_exp;
    if (c.n > q) throw std::invalid_argument("n must be <= q");
    if (c.ell + c.m > c.n) throw std::invalid_argument("n must be >= ell + m");

    auto base = Field::gf(c.q_exp);
    auto ext = std::make_shared<const ExtField>(base, c.m);
    ProtocolConfig config;
    config.codebook = std::make_shared<const SubspaceCodebook>(GabidulinSpec(ext, c.ell, c.kc));
    config.rs = std::make_shared<const ReedSolomonCode>(base, c.n, c.ell + c.m);
    config.topology = topology;
    config.noise.p = c.p;
    config.b = static_cast<unsigned>(topology.out_edges(topology.source).size());
    config.check();
    return config;
}

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::vector<Mode> modes_of(const std::string& mode) {
    if (mode == "hybrid") return {Mode::Hybrid};
    if (mode == "baseline") return {Mode::Baseline};
    if (mode == "both") return {Mode::Hybrid, Mode::Baseline};
    throw std::invalid_argument("mode must be hybrid, baseline or both");
}

}  // namespace

std::string format_results(const ExperimentConfig& config, const Topology& topology,
                           const ExperimentResult& result) {
    if (config.format == "csv") {
        std::ostringstream out;
        out << "mode,receiver,trials,successes,success_rate,mean_erasures,mean_errors,"
               "inner_failure_rate,k_max,p,effective_p,seed\n";
        for (const ModeReceiverStats& s : result.rows) {
            out << mode_name(s.mode) << ',' << topology.vertex_names[s.receiver] << ','
                << s.trials << ',' << s.successes << ',' << fmt_double(s.success_rate()) << ','
                << fmt_double(s.mean_erasures()) << ',' << fmt_double(s.mean_errors()) << ','
                << fmt_double(s.inner_failure_rate()) << ',' << result.k_max << ','
                << fmt_double(config.p) << ',' << fmt_double(result.effective_p) << ','
                << config.seed << "\n";
        }
        return out.str();
    }
    if (config.format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const ModeReceiverStats& s : result.rows) {
            rows.push_back({{"mode", mode_name(s.mode)},
                            {"receiver", topology.vertex_names[s.receiver]},
                            {"trials", s.trials},
                            {"successes", s.successes},
                            {"success_rate", s.success_rate()},
                            {"mean_erasures", s.mean_erasures()},
                            {"mean_errors", s.mean_errors()},
                            {"inner_failure_rate", s.inner_failure_rate()},
                            {"k_max", result.k_max},
                            {"p", config.p},
                            {"effective_p", result.effective_p},
                            {"seed", config.seed}});
        }
        return rows.dump(2) + "\n";
    }
    throw std::invalid_argument("format must be csv or json");
}

void run(const ExperimentConfig& config) {
    const std::vector<Mode> modes = modes_of(config.mode);
    const Topology topology = load_topology(config.topology);
    const ProtocolConfig protocol = build_protocol_config(config, topology);
    const ExperimentResult result =
        run_experiment(protocol, modes, config.trials, config.seed);
    const std::string text = format_results(config, topology, result);
    std::ofstream out(config.out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + config.out + "'");
    out << text;
}

}  // namespace hybridnc
