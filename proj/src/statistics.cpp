#include "bellsim/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace bellsim {

CorrelationEstimate estimate_correlation(const JointCounts& c)
{
    const std::uint64_t n = c.total();
    if (n == 0)
        throw EmptyCountsError("correlation estimate requires at least one count");
    const double nd = static_cast<double>(n);
    const double agree = static_cast<double>(c.n_pp) + static_cast<double>(c.n_mm);
    const double disagree = static_cast<double>(c.n_pm) + static_cast<double>(c.n_mp);
    const double e_hat = (agree - disagree) / nd;
    const double var = std::max(0.0, 1.0 - e_hat * e_hat);
    return {e_hat, std::sqrt(var / nd), n};
}

ChshResult chsh(const CorrelationEstimate& e11, const CorrelationEstimate& e12,
                const CorrelationEstimate& e21, const CorrelationEstimate& e22)
{
    ChshResult r;
    r.pairs = {e11, e12, e21, e22};
    r.s = e11.e_hat + e12.e_hat + e21.e_hat - e22.e_hat;
    r.std_error = std::sqrt(e11.std_error * e11.std_error + e12.std_error * e12.std_error +
                            e21.std_error * e21.std_error + e22.std_error * e22.std_error);
    r.violates_local_bound = std::abs(r.s) - 3.0 * r.std_error > 2.0;
    return r;
}

double local_bound_bruteforce(Setting, Setting, Setting, Setting)
{
    int best = 0;
    for (int mask = 0; mask < 16; ++mask) {
        const int x1 = (mask & 1) ? +1 : -1;
        const int x2 = (mask & 2) ? +1 : -1;
        const int y1 = (mask & 4) ? +1 : -1;
        const int y2 = (mask & 8) ? +1 : -1;
        const int s = x1 * y1 + x1 * y2 + x2 * y1 - x2 * y2;
        best = std::max(best, std::abs(s));
    }
    return static_cast<double>(best);
}

double nosignaling_test(const JointCounts& c1, const JointCounts& c2, Party fixed_side)
{
    if (fixed_side == Party::Alice) {
        if (!(c1.a == c2.a) || c1.b == c2.b)
            throw MismatchedSettingsError(
                "alice marginal test needs equal a settings and distinct b settings");
    } else {
        if (!(c1.b == c2.b) || c1.a == c2.a)
            throw MismatchedSettingsError(
                "bob marginal test needs equal b settings and distinct a settings");
    }
    const std::uint64_t n1 = c1.total();
    const std::uint64_t n2 = c2.total();
    if (n1 == 0 || n2 == 0)
        throw EmptyCountsError("marginal test requires non-empty counts");

    const auto plus_count = [fixed_side](const JointCounts& c) {
        return fixed_side == Party::Alice ? c.n_pp + c.n_pm : c.n_pp + c.n_mp;
    };
    const double k1 = static_cast<double>(plus_count(c1));
    const double k2 = static_cast<double>(plus_count(c2));
    const double nd1 = static_cast<double>(n1);
    const double nd2 = static_cast<double>(n2);
    const double pooled = (k1 + k2) / (nd1 + nd2);
    const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / nd1 + 1.0 / nd2));
    if (se == 0.0)
        return 0.0;  // both proportions are then identical (all + or all -)
    return (k1 / nd1 - k2 / nd2) / se;
}

double timing_dependence_test(std::string_view model_id, std::span<const SettingPair> settings,
                              std::uint64_t n, std::uint64_t seed)
{
    if (n == 0)
        throw std::invalid_argument("timing dependence test requires n > 0");
    const auto model = make_model(model_id);
    constexpr std::uint64_t stream_label = 0x7D15;  // private to this test

    double worst = 0.0;
    for (std::size_t pair_index = 0; pair_index < settings.size(); ++pair_index) {
        const SettingPair& sp = settings[pair_index];
        // Pair the classes on common hidden states so a timing-blind model
        // yields exactly zero distance.
        const CounterStream stream(seed, stream_label + pair_index);
        JointCounts first{sp.a, sp.b};
        JointCounts before_before{sp.a, sp.b};
        for (std::uint64_t trial = 0; trial < n; ++trial) {
            const HiddenState h = sample_hidden_state(stream, trial);
            const OutcomePair p = model->respond(sp.a, sp.b, TimingClass::AliceFirstConsistent, h);
            const OutcomePair q = model->respond(sp.a, sp.b, TimingClass::BeforeBefore, h);
            first.add(p.x, p.y);
            before_before.add(q.x, q.y);
        }
        const double nd = static_cast<double>(n);
        const double tv =
            0.5 * (std::abs(static_cast<double>(first.n_pp) - static_cast<double>(before_before.n_pp)) +
                   std::abs(static_cast<double>(first.n_pm) - static_cast<double>(before_before.n_pm)) +
                   std::abs(static_cast<double>(first.n_mp) - static_cast<double>(before_before.n_mp)) +
                   std::abs(static_cast<double>(first.n_mm) - static_cast<double>(before_before.n_mm))) /
            nd;
        worst = std::max(worst, tv);
    }
    return worst;
}

}  // namespace bellsim
