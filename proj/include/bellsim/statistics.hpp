#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>

#include "bellsim/models.hpp"

namespace bellsim {

// Empirical 2x2 outcome table at one setting pair. Counts are mergeable by
// addition, so trial generation can be sharded and reduced in any order.
struct JointCounts {
    Setting a;
    Setting b;
    std::uint64_t n_pp = 0;  // (x, y) = (+1, +1)
    std::uint64_t n_pm = 0;  // (+1, -1)
    std::uint64_t n_mp = 0;  // (-1, +1)
    std::uint64_t n_mm = 0;  // (-1, -1)

    void add(int x, int y)
    {
        if (x > 0)
            (y > 0 ? n_pp : n_pm) += 1;
        else
            (y > 0 ? n_mp : n_mm) += 1;
    }

    std::uint64_t total() const { return n_pp + n_pm + n_mp + n_mm; }

    JointCounts& operator+=(const JointCounts& o)
    {
        n_pp += o.n_pp;
        n_pm += o.n_pm;
        n_mp += o.n_mp;
        n_mm += o.n_mm;
        return *this;
    }
};

struct CorrelationEstimate {
    double e_hat = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
};

struct ChshResult {
    double s = 0.0;
    double std_error = 0.0;
    std::array<CorrelationEstimate, 4> pairs{};  // e11, e12, e21, e22
    bool violates_local_bound = false;           // |s| - 3*std_error > 2
};

class EmptyCountsError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class MismatchedSettingsError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// e_hat = (n_pp + n_mm - n_pm - n_mp)/N, std_error = sqrt((1 - e_hat^2)/N).
// Throws EmptyCountsError when N = 0.
CorrelationEstimate estimate_correlation(const JointCounts& c);

// S = e11 + e12 + e21 - e22 with standard errors combined in quadrature.
ChshResult chsh(const CorrelationEstimate& e11, const CorrelationEstimate& e12,
                const CorrelationEstimate& e21, const CorrelationEstimate& e22);

// Enumerates all 16 deterministic strategies (x(a1), x(a2), y(b1), y(b2))
// and returns max |S|. The settings only label the strategy table; the
// result is exactly 2 for every input.
double local_bound_bruteforce(Setting a1, Setting a2, Setting b1, Setting b2);

enum class Party { Alice, Bob };

// Two-proportion z-statistic (pooled) for the fixed party's +1 marginal
// between two setting pairs that agree on the fixed party's setting and
// differ on the other side. Throws MismatchedSettingsError otherwise,
// EmptyCountsError if either table is empty.
double nosignaling_test(const JointCounts& c1, const JointCounts& c2, Party fixed_side);

// Total-variation distance between the model's 4-cell joint distributions
// in the AliceFirstConsistent and BeforeBefore timing classes, estimated
// with n trials per class from a seeded stream (paired across classes) and
// maximized over the given setting pairs.
double timing_dependence_test(std::string_view model_id, std::span<const SettingPair> settings,
                              std::uint64_t n, std::uint64_t seed = 0);

}  // namespace bellsim
