// Command-line front end: analyze / check / gen / search / simulate.

#include "ergocap/errors.hpp"
#include "ergocap/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ergocap::InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(int argc, char** argv) {
    CLI::App app{"exact credal-set and ergodic-capacity toolkit"};
    app.require_subcommand(1);

    std::string instance_path, rv_path;
    bool diagnostic = false;
    std::uint64_t seed = 0, budget = 10000;
    int states = 4, generators = 2, state = 0;
    std::string property = "non-two-alternating";

    auto* analyze = app.add_subcommand("analyze", "structure report for an instance");
    analyze->add_option("instance", instance_path, "instance JSON file")->required();

    auto* check = app.add_subcommand("check", "run every checker and bound report");
    check->add_option("instance", instance_path, "instance JSON file")->required();
    check->add_flag("--diagnostic", diagnostic,
                    "evaluate conclusions even when hypotheses fail");
    check->add_option("--rv", rv_path, "random-variable JSON file");
    check->add_option("--seed", seed, "seed for generated random variables");

    auto* gen = app.add_subcommand("gen", "emit a seeded random instance");
    gen->add_option("--states", states, "state count")->required();
    gen->add_option("--generators", generators, "generator count")->required();
    gen->add_option("--seed", seed, "seed")->required();
    bool ergodic_shape = false;
    gen->add_flag("--ergodic", ergodic_shape,
                  "construct an invariant and ergodic capacity");

    auto* search_cmd = app.add_subcommand("search", "seeded witness search");
    search_cmd
        ->add_option("--property", property,
                     "choquet-gap | structure-needs-ergodicity | non-two-alternating")
        ->required();
    search_cmd->add_option("--budget", budget, "instance budget");
    search_cmd->add_option("--seed", seed, "seed");
    search_cmd->add_option("--states", states, "state count of drawn instances");
    search_cmd->add_option("--generators", generators, "generator count of drawn instances");

    auto* simulate = app.add_subcommand(
        "simulate", "finite-horizon time means against the exact limit");
    simulate->add_option("instance", instance_path, "instance JSON file")->required();
    simulate->add_option("--state", state, "starting state")->required();
    simulate->add_option("--rv", rv_path, "random-variable JSON file");
    simulate->add_option("--seed", seed, "seed for a generated random variable");

    CLI11_PARSE(app, argc, argv);

    if (analyze->parsed()) {
        std::cout << ergocap::analyze_report(ergocap::parse_instance(read_file(instance_path)));
        return 0;
    }
    if (check->parsed()) {
        const auto inst = ergocap::parse_instance(read_file(instance_path));
        ergocap::SuiteOptions opt;
        opt.diagnostic = diagnostic;
        opt.rv_seed = seed;
        if (!rv_path.empty())
            opt.random_variables.push_back(
                ergocap::parse_random_variable(read_file(rv_path), inst.sys.size()));
        const auto result = ergocap::run_suite(inst, opt);
        std::cout << result.report_json;
        return result.exit_code;
    }
    if (gen->parsed()) {
        const auto inst = ergodic_shape
                              ? ergocap::generate_ergodic_instance(states, seed)
                              : ergocap::generate_instance(states, generators, seed);
        std::cout << ergocap::emit_instance(inst);
        return 0;
    }
    if (search_cmd->parsed()) {
        ergocap::SearchOptions opt;
        opt.property = ergocap::parse_search_property(property);
        opt.budget = budget;
        opt.seed = seed;
        opt.states = states;
        opt.generators = generators;
        const auto result = ergocap::search(opt);
        std::cout << result.report_json;
        return result.found ? 0 : 1;
    }
    if (simulate->parsed()) {
        const auto inst = ergocap::parse_instance(read_file(instance_path));
        const int n = inst.sys.size();
        if (state < 0 || state >= n)
            throw ergocap::InputError("state out of range");
        const auto xi = rv_path.empty()
                            ? ergocap::generate_random_variable(n, seed)
                            : ergocap::parse_random_variable(read_file(rv_path), n);
        const auto limit = ergocap::birkhoff_limit(inst.sys, xi, state);
        std::cout << "horizon\taverage\n";
        for (int h = 1; h <= 1024; h *= 2)
            std::cout << h << "\t"
                      << ergocap::to_string(ergocap::birkhoff_average(inst.sys, xi, state, h))
                      << "\n";
        std::cout << "limit\t" << ergocap::to_string(limit) << "\n";
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ergocap::TheoremViolation& e) {
        std::cerr << "THEOREM-VIOLATION: " << e.what() << "\n";
        return 1;
    } catch (const ergocap::ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ergocap::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
