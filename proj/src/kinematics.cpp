#include "bellsim/kinematics.hpp"

#include <cmath>
#include <string>

namespace bellsim {

SpacetimeEvent boost(const SpacetimeEvent& e, InertialFrame frame)
{
    const double beta = frame.beta;
    if (!(std::abs(beta) < 1.0))
        throw std::invalid_argument("boost: |beta| must be < 1, got " + std::to_string(beta));
    const double gamma = 1.0 / std::sqrt(1.0 - beta * beta);
    return {gamma * (e.t - beta * e.z), gamma * (e.z - beta * e.t)};
}

double interval_squared(const SpacetimeEvent& e1, const SpacetimeEvent& e2)
{
    const double dt = e2.t - e1.t;
    const double dz = e2.z - e1.z;
    return dt * dt - dz * dz;
}

void validate_geometry(const ExperimentGeometry& g)
{
    const auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(g.source_z))
        throw std::invalid_argument("source_z: must be finite");
    if (!finite(g.alice_z))
        throw std::invalid_argument("alice_z: must be finite");
    if (!finite(g.bob_z))
        throw std::invalid_argument("bob_z: must be finite");
    if (!finite(g.emission_t))
        throw std::invalid_argument("emission_t: must be finite");
    if (!finite(g.alice_beta) || !(std::abs(g.alice_beta) < 1.0))
        throw std::invalid_argument("alice_beta: |beta| must be < 1");
    if (!finite(g.bob_beta) || !(std::abs(g.bob_beta) < 1.0))
        throw std::invalid_argument("bob_beta: |beta| must be < 1");
    if (g.alice_z == g.source_z)
        throw std::invalid_argument("alice_z: must differ from source_z");
    if (g.bob_z == g.source_z)
        throw std::invalid_argument("bob_z: must differ from source_z");
    if (g.alice_z == g.bob_z)
        throw std::invalid_argument("bob_z: must differ from alice_z");
}

std::pair<SpacetimeEvent, SpacetimeEvent> measurement_events(const ExperimentGeometry& g)
{
    validate_geometry(g);
    SpacetimeEvent alice{g.emission_t + std::abs(g.alice_z - g.source_z), g.alice_z};
    SpacetimeEvent bob{g.emission_t + std::abs(g.bob_z - g.source_z), g.bob_z};
    return {alice, bob};
}

TimingClass classify_timing(const ExperimentGeometry& g, double epsilon)
{
    if (!(epsilon > 0.0))
        throw std::invalid_argument("epsilon: must be > 0");
    const auto [alice_event, bob_event] = measurement_events(g);
    if (interval_squared(alice_event, bob_event) >= 0.0)
        throw NotSpacelikeError("measurement events are not spacelike separated");

    // Time of Alice's event minus Bob's, in each apparatus rest frame.
    const InertialFrame alice_frame{g.alice_beta};
    const InertialFrame bob_frame{g.bob_beta};
    const double dt_alice_frame = boost(alice_event, alice_frame).t - boost(bob_event, alice_frame).t;
    const double dt_bob_frame = boost(alice_event, bob_frame).t - boost(bob_event, bob_frame).t;
    if (std::abs(dt_alice_frame) < epsilon || std::abs(dt_bob_frame) < epsilon)
        throw TimingDegenerateError("rest-frame time difference below tolerance; perturb the geometry");

    const bool alice_first_in_alice_frame = dt_alice_frame < 0.0;
    const bool alice_first_in_bob_frame = dt_bob_frame < 0.0;
    if (alice_first_in_alice_frame && alice_first_in_bob_frame)
        return TimingClass::AliceFirstConsistent;
    if (!alice_first_in_alice_frame && !alice_first_in_bob_frame)
        return TimingClass::BobFirstConsistent;
    if (alice_first_in_alice_frame)
        return TimingClass::BeforeBefore;
    return TimingClass::AfterAfter;
}

std::string_view to_string(TimingClass c)
{
    switch (c) {
        case TimingClass::AliceFirstConsistent: return "alice-first-consistent";
        case TimingClass::BobFirstConsistent: return "bob-first-consistent";
        case TimingClass::BeforeBefore: return "before-before";
        case TimingClass::AfterAfter: return "after-after";
    }
    return "unknown";
}

}  // namespace bellsim
