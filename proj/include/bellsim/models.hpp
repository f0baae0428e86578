#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string_view>

#include "bellsim/kinematics.hpp"
#include "bellsim/random.hpp"

namespace bellsim {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Analyzer setting, canonicalized to [0, 2pi).
class Setting {
  public:
    Setting() = default;

    explicit Setting(double radians);

    double angle() const { return angle_; }

    friend bool operator==(Setting lhs, Setting rhs) { return lhs.angle_ == rhs.angle_; }

  private:
    double angle_ = 0.0;
};

struct SettingPair {
    Setting a;
    Setting b;
};

// Per-trial hidden randomness. lambda plays the role of the shared source
// variable; aux feeds whatever conditional sampling a model performs.
// Drawn from a stream independent of all setting choices.
struct HiddenState {
    double lambda = 0.0;                 // [0, 2pi)
    std::array<double, 2> aux{0.0, 0.0};  // each [0, 1)
};

// Three counter-stream words per trial: lambda, aux[0], aux[1].
HiddenState sample_hidden_state(const CounterStream& stream, std::uint64_t trial);

struct OutcomePair {
    int x;  // +1 or -1
    int y;  // +1 or -1
};

// sgn with the tie convention sgn(0) := +1.
inline int sign_of(double v)
{
    return v >= 0.0 ? +1 : -1;
}

// Correlation convention: spin-singlet form. Single switch point for the
// target correlation every nonlocal sampling path reproduces.
inline double target_correlation(Setting a, Setting b)
{
    return -std::cos(a.angle() - b.angle());
}

// Outcome generator. Deterministic in its four arguments: all randomness
// enters through the HiddenState.
class CausalModel {
  public:
    virtual ~CausalModel() = default;

    virtual std::string_view id() const = 0;

    virtual OutcomePair respond(Setting a, Setting b, TimingClass timing,
                                const HiddenState& h) const = 0;
};

// Both outcomes from past-light-cone information only: threshold responses
// to the shared lambda. Ignores timing and aux.
class LocalModel final : public CausalModel {
  public:
    std::string_view id() const override { return "local"; }
    OutcomePair respond(Setting a, Setting b, TimingClass timing,
                        const HiddenState& h) const override;
};

// Samples the singlet joint distribution: fair-coin x, then y conditioned
// on x so that E(xy) = target_correlation(a, b). Ignores timing and lambda.
class QuantumModel final : public CausalModel {
  public:
    std::string_view id() const override { return "quantum"; }
    OutcomePair respond(Setting a, Setting b, TimingClass timing,
                        const HiddenState& h) const override;
};

// Time-ordered nonlocal model: whichever device is first in its own rest
// frame answers locally; a device that selects after answers through a
// nonlocal dependency on the earlier outcome, reproducing the singlet
// correlation. When both devices are first in their own frames the
// nonlocal route is unavailable and both answer locally; when both select
// after, the quantum joint is sampled.
class SuarezScaraniModel final : public CausalModel {
  public:
    std::string_view id() const override { return "suarez-scarani"; }
    OutcomePair respond(Setting a, Setting b, TimingClass timing,
                        const HiddenState& h) const override;
};

class UnknownModelError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Accepts "local", "quantum", "suarez-scarani"; throws UnknownModelError
// otherwise.
std::unique_ptr<CausalModel> make_model(std::string_view id);

}  // namespace bellsim
