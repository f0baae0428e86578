#pragma once

#include <stdexcept>
#include <string_view>
#include <utility>

namespace bellsim {

// All kinematics work in 1+1D Minkowski spacetime with c = 1:
// times in seconds, positions in light-seconds.

struct SpacetimeEvent {
    double t = 0.0;
    double z = 0.0;
};

// A frame moving at velocity beta (fraction of c) relative to the lab.
struct InertialFrame {
    double beta = 0.0;
};

// Collinear source/apparatus arrangement. The apparatus velocities define
// the rest frames used for time ordering; the devices themselves are taken
// to be at their z at measurement time.
struct ExperimentGeometry {
    double source_z = 0.0;
    double alice_z = 0.0;
    double bob_z = 0.0;
    double alice_beta = 0.0;
    double bob_beta = 0.0;
    double emission_t = 0.0;
};

// Which measurement happens earlier in each apparatus's own rest frame.
enum class TimingClass {
    AliceFirstConsistent,  // Alice's event earlier in both rest frames
    BobFirstConsistent,    // Bob's event earlier in both rest frames
    BeforeBefore,          // each device's own event earlier in its own frame
    AfterAfter,            // each device's own event later in its own frame
};

class KinematicsError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The two measurement events are not spacelike separated.
class NotSpacelikeError : public KinematicsError {
  public:
    using KinematicsError::KinematicsError;
};

// A rest-frame time difference fell below the simultaneity tolerance; the
// time order is undefined and the caller must perturb the geometry.
class TimingDegenerateError : public KinematicsError {
  public:
    using KinematicsError::KinematicsError;
};

// Lorentz boost into the frame moving at frame.beta. Throws
// std::invalid_argument unless |beta| < 1.
SpacetimeEvent boost(const SpacetimeEvent& e, InertialFrame frame);

// dt^2 - dz^2: negative iff spacelike, zero iff lightlike, positive iff
// timelike.
double interval_squared(const SpacetimeEvent& e1, const SpacetimeEvent& e2);

// Throws std::invalid_argument naming the offending field if the geometry
// invariants are violated (coincident positions, |beta| >= 1, non-finite
// fields).
void validate_geometry(const ExperimentGeometry& g);

// Photon-arrival events at Alice's and Bob's apparatus, in that order.
// Photons propagate at c from the source in both directions.
std::pair<SpacetimeEvent, SpacetimeEvent> measurement_events(const ExperimentGeometry& g);

// Boosts the two measurement events into each apparatus rest frame and
// compares arrival times there. Throws NotSpacelikeError if the events are
// not spacelike separated, TimingDegenerateError if either frame's time
// difference has magnitude below epsilon.
TimingClass classify_timing(const ExperimentGeometry& g, double epsilon = 1e-9);

std::string_view to_string(TimingClass c);

}  // namespace bellsim
