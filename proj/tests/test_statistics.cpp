#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bellsim/statistics.hpp"
#include "support/oracles.hpp"

using namespace bellsim;

namespace {

const double pi = oracles::pi;

CorrelationEstimate est(double e)
{
    return {e, 0.0, 1};
}

}  // namespace

TEST_CASE("correlation estimate: counts accumulate and merge")
{
    JointCounts c{Setting(0.0), Setting(1.0)};
    c.add(+1, +1);
    c.add(+1, -1);
    c.add(-1, +1);
    c.add(-1, -1);
    c.add(+1, +1);
    CHECK(c.n_pp == 2);
    CHECK(c.n_pm == 1);
    CHECK(c.n_mp == 1);
    CHECK(c.n_mm == 1);
    CHECK(c.total() == 5);

    JointCounts d{Setting(0.0), Setting(1.0), 1, 2, 3, 4};
    d += c;
    CHECK(d.n_pp == 3);
    CHECK(d.n_pm == 3);
    CHECK(d.n_mp == 4);
    CHECK(d.n_mm == 5);
}

TEST_CASE("correlation estimate worked examples")
{
    SUBCASE("mixed counts")
    {
        const JointCounts c{Setting(0.0), Setting(0.0), 400, 100, 100, 400};
        const CorrelationEstimate e = estimate_correlation(c);
        CHECK(e.n == 1000);
        CHECK(e.e_hat == 0.6);
        // sqrt((1 - 0.6^2)/1000), frozen from an independent evaluation
        CHECK(e.std_error == doctest::Approx(0.025298221281347035).epsilon(1e-15));
    }
    SUBCASE("perfect anticorrelation has zero error")
    {
        const JointCounts c{Setting(0.0), Setting(0.0), 0, 500, 500, 0};
        const CorrelationEstimate e = estimate_correlation(c);
        CHECK(e.e_hat == -1.0);
        CHECK(e.std_error == 0.0);
    }
    SUBCASE("perfect correlation")
    {
        const JointCounts c{Setting(0.0), Setting(0.0), 700, 0, 0, 300};
        const CorrelationEstimate e = estimate_correlation(c);
        CHECK(e.e_hat == 1.0);
        CHECK(e.std_error == 0.0);
    }
    SUBCASE("empty counts are rejected")
    {
        const JointCounts c{Setting(0.0), Setting(0.0)};
        CHECK_THROWS_AS((void)estimate_correlation(c), EmptyCountsError);
    }
}

TEST_CASE("chsh combines the four correlations with the (+,+,+,-) signs")
{
    SUBCASE("singlet values at the canonical angles")
    {
        const double r = -1.0 / std::sqrt(2.0);
        const ChshResult q = chsh(est(r), est(r), est(r), est(-r));
        CHECK(q.s == doctest::Approx(-2.0 * std::sqrt(2.0)).epsilon(1e-15));
    }
    SUBCASE("threshold-model values at the canonical angles")
    {
        // closed-form correlations -(1 - 2*delta/pi) at the same angles
        const ChshResult l = chsh(est(-0.5), est(-0.5), est(-0.5), est(0.5));
        CHECK(l.s == -2.0);
    }
    SUBCASE("all-zero correlations")
    {
        const ChshResult z = chsh(est(0.0), est(0.0), est(0.0), est(0.0));
        CHECK(z.s == 0.0);
        CHECK(z.std_error == 0.0);
        CHECK_FALSE(z.violates_local_bound);
    }
    SUBCASE("errors combine in quadrature")
    {
        const CorrelationEstimate a{0.1, 0.01, 100};
        const CorrelationEstimate b{0.2, 0.02, 100};
        const CorrelationEstimate c{0.3, 0.03, 100};
        const CorrelationEstimate d{0.4, 0.04, 100};
        const ChshResult r = chsh(a, b, c, d);
        CHECK(r.s == doctest::Approx(0.1 + 0.2 + 0.3 - 0.4).epsilon(1e-15));
        CHECK(r.std_error ==
              doctest::Approx(std::sqrt(0.0001 + 0.0004 + 0.0009 + 0.0016)).epsilon(1e-12));
    }
    SUBCASE("violation flag needs 3 standard errors of clearance")
    {
        CHECK(chsh(est(0.8), est(0.8), est(0.8), est(-0.8)).violates_local_bound);
        const CorrelationEstimate wide{0.8, 0.5, 10};
        CHECK_FALSE(chsh(wide, wide, wide, est(-0.8)).violates_local_bound);
        CHECK_FALSE(chsh(est(0.5), est(0.5), est(0.5), est(-0.5)).violates_local_bound);
    }
}

TEST_CASE("deterministic strategies never exceed |S| = 2 and reach it")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
    for (int i = 0; i < 100; ++i) {
        const double bound = local_bound_bruteforce(Setting(angle(rng)), Setting(angle(rng)),
                                                    Setting(angle(rng)), Setting(angle(rng)));
        CHECK(bound == 2.0);
    }
    // two strategies that attain the bound, evaluated by hand
    const int always_plus = 1 * 1 + 1 * 1 + 1 * 1 - 1 * 1;
    CHECK(always_plus == 2);
    const int flip_last = 1 * 1 + 1 * -1 + 1 * 1 - 1 * -1;
    CHECK(flip_last == 2);
}

TEST_CASE("marginal z-statistic")
{
    const Setting a0(0.0);
    const Setting b1(pi / 4.0);
    const Setting b2(-pi / 4.0);

    SUBCASE("identical tables give exactly zero")
    {
        const JointCounts c1{a0, b1, 250, 250, 250, 250};
        const JointCounts c2{a0, b2, 250, 250, 250, 250};
        CHECK(nosignaling_test(c1, c2, Party::Alice) == 0.0);
    }
    SUBCASE("worked example, frozen from an independent evaluation")
    {
        // Alice's +1 marginal 5100/10000 vs 5000/10000
        const JointCounts c1{a0, b1, 2600, 2500, 2400, 2500};
        const JointCounts c2{a0, b2, 2500, 2500, 2500, 2500};
        const double z = nosignaling_test(c1, c2, Party::Alice);
        CHECK(z == doctest::Approx(1.4142842783549578).epsilon(1e-14));
        CHECK(nosignaling_test(c2, c1, Party::Alice) == doctest::Approx(-z).epsilon(1e-14));
    }
    SUBCASE("bob side uses the y marginal")
    {
        const JointCounts c1{a0, b1, 2600, 2400, 2500, 2500};  // y=+1: 5100
        const JointCounts c2{Setting(pi / 2.0), b1, 2500, 2500, 2500, 2500};
        const double z = nosignaling_test(c1, c2, Party::Bob);
        CHECK(z == doctest::Approx(1.4142842783549578).epsilon(1e-14));
    }
    SUBCASE("degenerate pooled proportion returns zero")
    {
        const JointCounts c1{a0, b1, 100, 0, 0, 0};
        const JointCounts c2{a0, b2, 100, 0, 0, 0};
        CHECK(nosignaling_test(c1, c2, Party::Alice) == 0.0);
    }
    SUBCASE("setting mismatches are rejected")
    {
        const JointCounts c1{a0, b1, 1, 1, 1, 1};
        const JointCounts c2{Setting(1.0), b2, 1, 1, 1, 1};
        CHECK_THROWS_AS((void)nosignaling_test(c1, c2, Party::Alice), MismatchedSettingsError);
        const JointCounts c3{a0, b1, 1, 1, 1, 1};
        CHECK_THROWS_AS((void)nosignaling_test(c1, c3, Party::Alice), MismatchedSettingsError);
        CHECK_THROWS_AS((void)nosignaling_test(c1, c3, Party::Bob), MismatchedSettingsError);
    }
    SUBCASE("empty tables are rejected")
    {
        const JointCounts c1{a0, b1, 1, 1, 1, 1};
        const JointCounts empty{a0, b2};
        CHECK_THROWS_AS((void)nosignaling_test(c1, empty, Party::Alice), EmptyCountsError);
    }
}

TEST_CASE("timing dependence: blind models give exactly zero distance")
{
    const std::vector<SettingPair> pairs = {
        {Setting(0.0), Setting(pi / 4.0)},
        {Setting(pi / 2.0), Setting(-pi / 4.0)},
    };
    CHECK(timing_dependence_test("quantum", pairs, 2000) == 0.0);
    CHECK(timing_dependence_test("local", pairs, 2000) == 0.0);
}

TEST_CASE("timing dependence: the time-ordered model is detected")
{
    const std::vector<SettingPair> pairs = {
        {Setting(0.0), Setting(pi / 4.0)},
        {Setting(0.0), Setting(-pi / 4.0)},
        {Setting(pi / 2.0), Setting(pi / 4.0)},
        {Setting(pi / 2.0), Setting(-pi / 4.0)},
    };
    const double tv = timing_dependence_test("suarez-scarani", pairs, 200000, 7);
    // analytic distance |cos(pi/4)/1 - 1/2|/2 between the two joints
    CHECK(std::abs(tv - 0.10355339059327373) < 0.01);
    CHECK(tv >= 0.05);
}

TEST_CASE("timing dependence rejects bad arguments")
{
    const std::vector<SettingPair> pairs = {{Setting(0.0), Setting(1.0)}};
    CHECK_THROWS_AS((void)timing_dependence_test("quantum", pairs, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)timing_dependence_test("psychic", pairs, 10), UnknownModelError);
}
