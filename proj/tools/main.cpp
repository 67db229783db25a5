#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "hybridnc/harness.hpp"

int main(int argc, char** argv) {
    hybridnc::ExperimentConfig config;
    CLI::App app{"Monte Carlo experiments for subspace-coded random linear network coding\n"
                 "with an optional systematic Reed-Solomon inner code"};
    app.add_option("--topology", config.topology,
                   "Topology file, or builtin:butterfly | builtin:path3 | builtin:parallel4")
        ->capture_default_str();
    app.add_option("--q-exp", config.q_exp, "Network field GF(2^e) exponent")->capture_default_str();
    app.add_option("--m", config.m, "Extension degree of the Gabidulin field")->capture_default_str();
    app.add_option("--ell", config.ell, "Subspace codeword dimension")->capture_default_str();
    app.add_option("--kc", config.kc, "Gabidulin message dimension")->capture_default_str();
    app.add_option("--n", config.n, "Inner Reed-Solomon length")->capture_default_str();
    app.add_option("--p", config.p, "Per-symbol edge error probability")->capture_default_str();
    app.add_option("--trials", config.trials, "Trials per mode")->capture_default_str();
    app.add_option("--seed", config.seed, "Master seed")->capture_default_str();
    app.add_option("--mode", config.mode, "hybrid | baseline | both")->capture_default_str();
    app.add_option("--out", config.out, "Result file path")->capture_default_str();
    app.add_option("--format", config.format, "csv | json")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    try {
        hybridnc::run(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
