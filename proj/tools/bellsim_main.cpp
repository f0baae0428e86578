#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bellsim/config.hpp"
#include "bellsim/harness.hpp"
#include "bellsim/report_io.hpp"
#include "bellsim/statistics.hpp"

namespace {

// Exit codes are a stable contract:
//   0 success, 2 config validation, 3 kinematics (degenerate timing or
//   non-spacelike events), 4 inconclusive suite cells, 5 I/O failure.
constexpr int exit_ok = 0;
constexpr int exit_unexpected = 1;
constexpr int exit_config = 2;
constexpr int exit_kinematics = 3;
constexpr int exit_inconclusive = 4;
constexpr int exit_io = 5;

int cmd_run(const std::string& config_path, const std::string& output_path)
{
    bellsim::ExperimentConfig cfg;
    try {
        cfg = bellsim::load_config(config_path);
    } catch (const bellsim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    try {
        const auto report = bellsim::run_experiment(cfg);
        bellsim::write_file(output_path, bellsim::to_csv(report));
    } catch (const bellsim::KinematicsError& e) {
        std::cerr << "kinematics error: " << e.what() << "\n";
        return exit_kinematics;
    } catch (const bellsim::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return exit_io;
    }
    return exit_ok;
}

int cmd_suite(std::uint64_t trials, std::uint64_t seed, const std::string& output_path)
{
    bellsim::SuiteReport suite;
    try {
        suite = bellsim::run_discrimination_suite(trials, seed);
    } catch (const bellsim::KinematicsError& e) {
        std::cerr << "kinematics error: " << e.what() << "\n";
        return exit_kinematics;
    }
    const std::string csv = bellsim::to_csv(suite);
    try {
        bellsim::write_file(output_path, csv);
    } catch (const bellsim::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return exit_io;
    }
    std::cout << csv;
    if (suite.any_inconclusive) {
        std::cerr << "suite inconclusive: increase --trials\n";
        return exit_inconclusive;
    }
    if (!suite.matches_expected) {
        std::cerr << "suite verdict matrix does not match the expected pattern\n";
        return exit_unexpected;
    }
    return exit_ok;
}

int cmd_bound()
{
    const auto angles = bellsim::chsh_angles();
    const double bound = bellsim::local_bound_bruteforce(angles.alice[0], angles.alice[1],
                                                         angles.bob[0], angles.bob[1]);
    std::cout << "local_bound," << static_cast<long long>(bound) << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bell-CHSH simulator for causal models under relativistic timing"};
    app.require_subcommand(1);

    std::string config_path;
    std::string run_out;
    auto* run = app.add_subcommand("run", "run one experiment from a config file");
    run->add_option("--config", config_path, "JSON experiment config")->required();
    run->add_option("--out", run_out, "output CSV path")->required();

    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    std::string suite_out;
    auto* suite = app.add_subcommand("suite", "run the model discrimination suite");
    suite->add_option("--trials", trials, "trials per setting pair")
        ->check(CLI::PositiveNumber);
    suite->add_option("--seed", seed, "random seed");
    suite->add_option("--out", suite_out, "output CSV path")->required();

    auto* bound = app.add_subcommand("bound", "print the brute-forced deterministic CHSH bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(config_path, run_out);
        if (suite->parsed())
            return cmd_suite(trials, seed, suite_out);
        if (bound->parsed())
            return cmd_bound();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_unexpected;
    }
    return exit_unexpected;
}
