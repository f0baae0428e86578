#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bellsim/kinematics.hpp"
#include "bellsim/models.hpp"
#include "bellsim/statistics.hpp"

namespace bellsim {

// Labels for the two independent streams derived from the config seed:
// hidden states on one, setting order on the other, so the freedom of the
// setting choices is a structural property rather than an assumption.
inline constexpr std::uint64_t hidden_stream_label = 1;
inline constexpr std::uint64_t settings_stream_label = 2;

struct ExperimentConfig {
    ExperimentGeometry geometry;
    std::string model_id;
    std::array<Setting, 2> alice_settings{};
    std::array<Setting, 2> bob_settings{};
    std::uint64_t trials_per_pair = 0;
    std::uint64_t seed = 0;
    double epsilon = 1e-9;
};

// Throws std::invalid_argument naming the offending field.
void validate_config(const ExperimentConfig& cfg);

// Marginal-invariance z-statistics across the 2x2 setting grid: alice[i]
// compares Alice's +1 marginal at a_i between the two b settings, bob[j]
// symmetrically.
struct NosignalingZ {
    std::array<double, 2> alice{};
    std::array<double, 2> bob{};
};

struct ExperimentReport {
    ExperimentConfig config;
    TimingClass timing = TimingClass::AliceFirstConsistent;
    std::array<JointCounts, 4> counts{};  // (a1,b1), (a1,b2), (a2,b1), (a2,b2)
    std::array<CorrelationEstimate, 4> correlations{};
    ChshResult chsh{};
    NosignalingZ nosignaling{};
};

enum class Execution {
    Serial,   // reference single-pass loop
    Parallel  // OpenMP kernel; identical counts by construction
};

// The balanced, shuffled order in which the 4 setting pairs are visited:
// each pair index appears exactly trials_per_pair times. Derived from the
// settings stream only.
std::vector<std::uint8_t> make_pair_sequence(std::uint64_t seed, std::uint64_t trials_per_pair);

// Core trial kernel. Trial k of the sequence uses pair pair_sequence[k]
// and the hidden state at index k of the hidden stream; counts are reduced
// by addition, so serial and parallel execution agree exactly.
std::array<JointCounts, 4> accumulate_trials(const CausalModel& model, TimingClass timing,
                                             const std::array<SettingPair, 4>& pairs,
                                             std::span<const std::uint8_t> pair_sequence,
                                             const CounterStream& hidden, Execution exec);

// Runs the full experiment: classifies the geometry's timing, generates
// trials, aggregates counts and statistics. Pure function of the config.
ExperimentReport run_experiment(const ExperimentConfig& cfg,
                                Execution exec = Execution::Parallel);

// Canonical geometries, one per timing class. AliceFirstConsistent is the
// standard at-rest setup with Alice's arm slightly shorter; BeforeBefore
// has symmetric arms with both devices receding at |beta| = 0.1.
ExperimentGeometry canonical_geometry(TimingClass c);
ExperimentGeometry standard_geometry();       // canonical AliceFirstConsistent
ExperimentGeometry before_before_geometry();  // canonical BeforeBefore

// CHSH angles used by the discrimination suite: a in {0, pi/2}, b in
// {pi/4, -pi/4}.
struct ChshAngles {
    std::array<Setting, 2> alice;
    std::array<Setting, 2> bob;
};
ChshAngles chsh_angles();

enum class Verdict { Violation, NoViolation, Inconclusive };

// Violation when |S| - 3*stderr > 2; no violation when |S| + 3*stderr <
// 2.05; anything between is inconclusive and fails the suite.
Verdict classify_verdict(const ChshResult& r);

std::string_view to_string(Verdict v);

struct SuiteRow {
    std::string model_id;
    ExperimentReport standard;       // apparatuses at rest, Alice first
    ExperimentReport before_before;  // receding devices, each first in its own frame
    Verdict standard_verdict = Verdict::Inconclusive;
    Verdict before_before_verdict = Verdict::Inconclusive;
};

struct SuiteReport {
    std::uint64_t trials_per_pair = 0;
    std::uint64_t seed = 0;
    std::array<SuiteRow, 3> rows{};  // quantum, suarez-scarani, local
    bool matches_expected = false;   // [[V,V],[V,NoV],[NoV,NoV]]
    bool any_inconclusive = false;
};

// Runs the 3 models x 2 geometries at CHSH angles and classifies each
// cell. The expected pattern has the quantum model violating in both
// geometries, the time-ordered nonlocal model violating only in the
// standard one, and the local model in neither.
SuiteReport run_discrimination_suite(std::uint64_t trials_per_pair, std::uint64_t seed,
                                     Execution exec = Execution::Parallel);

}  // namespace bellsim
