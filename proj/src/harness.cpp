#include "bellsim/harness.hpp"

#include <cmath>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bellsim {

void validate_config(const ExperimentConfig& cfg)
{
    validate_geometry(cfg.geometry);
    if (cfg.trials_per_pair < 1)
        throw std::invalid_argument("trials_per_pair: must be >= 1");
    if (!(cfg.epsilon > 0.0) || !std::isfinite(cfg.epsilon))
        throw std::invalid_argument("epsilon: must be a finite positive number");
    if (cfg.model_id.empty())
        throw std::invalid_argument("model: must be a model identifier");
}

std::vector<std::uint8_t> make_pair_sequence(std::uint64_t seed, std::uint64_t trials_per_pair)
{
    std::vector<std::uint8_t> seq(4 * trials_per_pair);
    for (std::size_t i = 0; i < seq.size(); ++i)
        seq[i] = static_cast<std::uint8_t>(i & 3);
    SequentialRng rng(CounterStream(seed, settings_stream_label));
    for (std::size_t i = seq.size() - 1; i > 0; --i)
        std::swap(seq[i], seq[rng.bounded(i + 1)]);
    return seq;
}

namespace {

std::array<JointCounts, 4> zero_counts(const std::array<SettingPair, 4>& pairs)
{
    std::array<JointCounts, 4> counts{};
    for (int i = 0; i < 4; ++i) {
        counts[i].a = pairs[i].a;
        counts[i].b = pairs[i].b;
    }
    return counts;
}

std::array<JointCounts, 4> trials_serial(const CausalModel& model, TimingClass timing,
                                         const std::array<SettingPair, 4>& pairs,
                                         std::span<const std::uint8_t> seq,
                                         const CounterStream& hidden)
{
    auto counts = zero_counts(pairs);
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const std::uint8_t p = seq[k];
        const HiddenState h = sample_hidden_state(hidden, k);
        const OutcomePair out = model.respond(pairs[p].a, pairs[p].b, timing, h);
        counts[p].add(out.x, out.y);
    }
    return counts;
}

std::array<JointCounts, 4> trials_parallel(const CausalModel& model, TimingClass timing,
                                           const std::array<SettingPair, 4>& pairs,
                                           std::span<const std::uint8_t> seq,
                                           const CounterStream& hidden)
{
#ifndef _OPENMP
    return trials_serial(model, timing, pairs, seq, hidden);
#else
    auto counts = zero_counts(pairs);
    const std::int64_t n = static_cast<std::int64_t>(seq.size());
#pragma omp parallel
    {
        auto local = zero_counts(pairs);
#pragma omp for schedule(static)
        for (std::int64_t k = 0; k < n; ++k) {
            const std::uint8_t p = seq[static_cast<std::size_t>(k)];
            const HiddenState h = sample_hidden_state(hidden, static_cast<std::uint64_t>(k));
            const OutcomePair out = model.respond(pairs[p].a, pairs[p].b, timing, h);
            local[p].add(out.x, out.y);
        }
#pragma omp critical
        for (int i = 0; i < 4; ++i)
            counts[i] += local[i];
    }
    return counts;
#endif
}

std::array<SettingPair, 4> setting_grid(const ExperimentConfig& cfg)
{
    return {SettingPair{cfg.alice_settings[0], cfg.bob_settings[0]},
            SettingPair{cfg.alice_settings[0], cfg.bob_settings[1]},
            SettingPair{cfg.alice_settings[1], cfg.bob_settings[0]},
            SettingPair{cfg.alice_settings[1], cfg.bob_settings[1]}};
}

}  // namespace

std::array<JointCounts, 4> accumulate_trials(const CausalModel& model, TimingClass timing,
                                             const std::array<SettingPair, 4>& pairs,
                                             std::span<const std::uint8_t> pair_sequence,
                                             const CounterStream& hidden, Execution exec)
{
    return exec == Execution::Serial ? trials_serial(model, timing, pairs, pair_sequence, hidden)
                                     : trials_parallel(model, timing, pairs, pair_sequence, hidden);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, Execution exec)
{
    validate_config(cfg);
    const auto model = make_model(cfg.model_id);

    ExperimentReport report;
    report.config = cfg;
    report.timing = classify_timing(cfg.geometry, cfg.epsilon);

    const auto pairs = setting_grid(cfg);
    const auto seq = make_pair_sequence(cfg.seed, cfg.trials_per_pair);
    const CounterStream hidden(cfg.seed, hidden_stream_label);
    report.counts = accumulate_trials(*model, report.timing, pairs, seq, hidden, exec);

    for (int i = 0; i < 4; ++i)
        report.correlations[i] = estimate_correlation(report.counts[i]);
    report.chsh = chsh(report.correlations[0], report.correlations[1], report.correlations[2],
                       report.correlations[3]);
    report.nosignaling.alice = {nosignaling_test(report.counts[0], report.counts[1], Party::Alice),
                                nosignaling_test(report.counts[2], report.counts[3], Party::Alice)};
    report.nosignaling.bob = {nosignaling_test(report.counts[0], report.counts[2], Party::Bob),
                              nosignaling_test(report.counts[1], report.counts[3], Party::Bob)};
    return report;
}

ExperimentGeometry standard_geometry()
{
    return {0.0, 0.9, -1.0, 0.0, 0.0, 0.0};
}

ExperimentGeometry before_before_geometry()
{
    return {0.0, -1.0, 1.0, -0.1, 0.1, 0.0};
}

ExperimentGeometry canonical_geometry(TimingClass c)
{
    switch (c) {
        case TimingClass::AliceFirstConsistent:
            return standard_geometry();
        case TimingClass::BobFirstConsistent:
            return {0.0, 1.0, -0.9, 0.0, 0.0, 0.0};
        case TimingClass::BeforeBefore:
            return before_before_geometry();
        case TimingClass::AfterAfter:
            // symmetric arms, devices approaching: each selects after in
            // its own frame
            return {0.0, -1.0, 1.0, 0.1, -0.1, 0.0};
    }
    throw std::logic_error("unreachable timing class");
}

ChshAngles chsh_angles()
{
    const double pi = two_pi / 2.0;
    return {{Setting(0.0), Setting(pi / 2.0)}, {Setting(pi / 4.0), Setting(-pi / 4.0)}};
}

Verdict classify_verdict(const ChshResult& r)
{
    constexpr double no_violation_margin = 0.05;
    const double abs_s = std::abs(r.s);
    if (abs_s - 3.0 * r.std_error > 2.0)
        return Verdict::Violation;
    if (abs_s + 3.0 * r.std_error < 2.0 + no_violation_margin)
        return Verdict::NoViolation;
    return Verdict::Inconclusive;
}

std::string_view to_string(Verdict v)
{
    switch (v) {
        case Verdict::Violation: return "violation";
        case Verdict::NoViolation: return "no-violation";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

SuiteReport run_discrimination_suite(std::uint64_t trials_per_pair, std::uint64_t seed,
                                     Execution exec)
{
    const ChshAngles angles = chsh_angles();
    const auto run_cell = [&](std::string_view model_id, const ExperimentGeometry& geometry) {
        ExperimentConfig cfg;
        cfg.geometry = geometry;
        cfg.model_id = std::string(model_id);
        cfg.alice_settings = angles.alice;
        cfg.bob_settings = angles.bob;
        cfg.trials_per_pair = trials_per_pair;
        cfg.seed = seed;
        return run_experiment(cfg, exec);
    };

    SuiteReport suite;
    suite.trials_per_pair = trials_per_pair;
    suite.seed = seed;
    const std::array<std::string_view, 3> order = {"quantum", "suarez-scarani", "local"};
    for (std::size_t i = 0; i < order.size(); ++i) {
        SuiteRow& row = suite.rows[i];
        row.model_id = std::string(order[i]);
        row.standard = run_cell(order[i], standard_geometry());
        row.before_before = run_cell(order[i], before_before_geometry());
        row.standard_verdict = classify_verdict(row.standard.chsh);
        row.before_before_verdict = classify_verdict(row.before_before.chsh);
    }

    const auto& r = suite.rows;
    suite.any_inconclusive = false;
    for (const SuiteRow& row : r)
        if (row.standard_verdict == Verdict::Inconclusive ||
            row.before_before_verdict == Verdict::Inconclusive)
            suite.any_inconclusive = true;
    suite.matches_expected = r[0].standard_verdict == Verdict::Violation &&
                             r[0].before_before_verdict == Verdict::Violation &&
                             r[1].standard_verdict == Verdict::Violation &&
                             r[1].before_before_verdict == Verdict::NoViolation &&
                             r[2].standard_verdict == Verdict::NoViolation &&
                             r[2].before_before_verdict == Verdict::NoViolation;
    return suite;
}

}  // namespace bellsim
