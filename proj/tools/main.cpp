#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "entdepth/commands.hpp"

int main(int argc, char** argv) {
    using entdepth::cli::RunConfig;

    CLI::App app{"one-parameter multipartite entanglement classification and "
                 "metrological bounds"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string order = "refinement";
    std::string suite;
    int n_max = 10;
    bool include_counterexamples = false;
    std::uint64_t seed_value = 0;

    auto add_common = [&](CLI::App* sub, bool needs_n) {
        auto* n_opt = sub->add_option("--n", cfg.n, "system size");
        if (needs_n) n_opt->required();
        sub->add_option("--out", cfg.output, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "output format");
        sub->add_option("--n-max-bruteforce", cfg.n_max_bruteforce,
                        "largest n for bound brute force");
        sub->add_option("--n-max-mixed", cfg.n_max_mixed,
                        "largest n for dense mixed states");
    };

    auto* partitions =
        app.add_subcommand("partitions", "tabulate the partitions of n");
    add_common(partitions, true);

    auto* hasse =
        app.add_subcommand("hasse", "export a covering graph of an order");
    add_common(hasse, true);
    hasse->add_option("--order", order, "refinement | dominance");

    auto* table =
        app.add_subcommand("genfun-table", "tabulate a generator function");
    add_common(table, true);
    table->add_option("--f", cfg.genfun, "generator spec")->required();

    auto* bounds = app.add_subcommand(
        "bounds", "Fisher-information bound curve of a generator");
    add_common(bounds, true);
    bounds->add_option("--f", cfg.genfun, "generator spec")->required();

    auto* usefulness = app.add_subcommand(
        "usefulness", "strict-step analysis of a bound curve");
    add_common(usefulness, true);
    usefulness->add_option("--f", cfg.genfun, "generator spec")->required();

    auto* classify = app.add_subcommand(
        "classify", "depths and labels of an ensemble certificate");
    add_common(classify, false);
    classify->add_option("--f", cfg.genfun, "generator spec")->required();
    classify->add_option("--input", cfg.input, "ensemble JSON")->required();

    auto* witness = app.add_subcommand(
        "witness", "Fisher information and class exclusion for a state");
    add_common(witness, false);
    witness->add_option("--f", cfg.genfun, "generator spec")->required();
    witness->add_option("--input", cfg.input, "state JSON")->required();

    auto* verify =
        app.add_subcommand("verify", "run a named verification suite");
    add_common(verify, false);
    verify->add_option("--suite", suite, "orders | monotonicity | limits | bounds | qfi")
        ->required();
    verify->add_option("--n-max", n_max, "largest n to check");
    verify->add_flag("--include-counterexamples", include_counterexamples,
                     "also run the documented out-of-range violations");
    auto* seed_opt = verify->add_option("--seed", seed_value,
                                        "seed for randomized suites");

    CLI11_PARSE(app, argc, argv);
    if (seed_opt->count() > 0) cfg.seed = seed_value;

    using namespace entdepth::cli;
    if (partitions->parsed()) return cmd_partitions(cfg, std::cerr);
    if (hasse->parsed()) return cmd_hasse(cfg, order, std::cerr);
    if (table->parsed()) return cmd_genfun_table(cfg, std::cerr);
    if (bounds->parsed()) return cmd_bounds(cfg, std::cerr);
    if (usefulness->parsed()) return cmd_usefulness(cfg, std::cerr);
    if (classify->parsed()) return cmd_classify(cfg, std::cerr);
    if (witness->parsed()) return cmd_witness(cfg, std::cerr);
    if (verify->parsed()) {
        return cmd_verify(cfg, suite, n_max, include_counterexamples,
                          std::cerr);
    }
    return kUsage;
}
