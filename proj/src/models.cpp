#include "bellsim/models.hpp"

#include <string>

namespace bellsim {

Setting::Setting(double radians)
{
    if (!std::isfinite(radians))
        throw std::invalid_argument("setting angle must be finite");
    double r = std::fmod(radians, two_pi);
    if (r < 0.0)
        r += two_pi;
    if (r >= two_pi)  // fmod residue can round back up to the period
        r = 0.0;
    angle_ = r;
}

HiddenState sample_hidden_state(const CounterStream& stream, std::uint64_t trial)
{
    HiddenState h;
    h.lambda = two_pi * stream.uniform(3 * trial);
    h.aux = {stream.uniform(3 * trial + 1), stream.uniform(3 * trial + 2)};
    return h;
}

namespace {

// Threshold responses to the shared hidden angle. Alice and Bob carry
// opposite signs so identical settings anticorrelate perfectly.
int local_response_alice(Setting a, double lambda)
{
    return sign_of(std::cos(lambda - a.angle()));
}

int local_response_bob(Setting b, double lambda)
{
    return -sign_of(std::cos(lambda - b.angle()));
}

// Given the earlier outcome w, draw v with P(v | w) = (1 + w*v*e)/2.
int conditional_response(int w, double e, double u)
{
    const double p_plus = 0.5 * (1.0 + w * e);
    return u < p_plus ? +1 : -1;
}

OutcomePair quantum_joint(Setting a, Setting b, const HiddenState& h)
{
    const int x = h.aux[0] < 0.5 ? +1 : -1;
    const int y = conditional_response(x, target_correlation(a, b), h.aux[1]);
    return {x, y};
}

}  // namespace

OutcomePair LocalModel::respond(Setting a, Setting b, TimingClass /*timing*/,
                                const HiddenState& h) const
{
    return {local_response_alice(a, h.lambda), local_response_bob(b, h.lambda)};
}

OutcomePair QuantumModel::respond(Setting a, Setting b, TimingClass /*timing*/,
                                  const HiddenState& h) const
{
    return quantum_joint(a, b, h);
}

OutcomePair SuarezScaraniModel::respond(Setting a, Setting b, TimingClass timing,
                                        const HiddenState& h) const
{
    switch (timing) {
        case TimingClass::AliceFirstConsistent: {
            const int x = local_response_alice(a, h.lambda);
            const int y = conditional_response(x, target_correlation(a, b), h.aux[1]);
            return {x, y};
        }
        case TimingClass::BobFirstConsistent: {
            const int y = local_response_bob(b, h.lambda);
            const int x = conditional_response(y, target_correlation(a, b), h.aux[0]);
            return {x, y};
        }
        case TimingClass::BeforeBefore:
            // No device selects after in its own frame: the nonlocal
            // dependency never fires and both outcomes are purely local.
            return {local_response_alice(a, h.lambda), local_response_bob(b, h.lambda)};
        case TimingClass::AfterAfter:
            return quantum_joint(a, b, h);
    }
    throw std::logic_error("unreachable timing class");
}

std::unique_ptr<CausalModel> make_model(std::string_view id)
{
    if (id == "local")
        return std::make_unique<LocalModel>();
    if (id == "quantum")
        return std::make_unique<QuantumModel>();
    if (id == "suarez-scarani")
        return std::make_unique<SuarezScaraniModel>();
    throw UnknownModelError("unknown model id: " + std::string(id));
}

}  // namespace bellsim
