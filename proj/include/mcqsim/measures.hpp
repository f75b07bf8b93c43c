#pragma once

#include <array>

#include <Eigen/Dense>

#include "mcqsim/dynamics.hpp"

namespace mcqsim {

// Measurement settings for the correlation functions. BM: three rotation
// angles; the sum over dissimilar-basis pairs uses the 3 unordered pairs
// (ordered summation doubles the value and is exposed only for
// comparison). CHSH: four fixed x-z plane directions (a, a', b, b') that
// are optimal for the Bell state (|00>+|11>)/sqrt(2).
struct MeasurementSettings {
    std::array<double, 3> bm_angles;
    std::array<Eigen::Vector3d, 4> chsh_directions;
    bool bm_ordered_pairs = false;

    static MeasurementSettings defaults();
};

struct CorrelationValue {
    double value = 0.0;
    bool violated = false; // inside the measure's Bell-violation regime
};

// Bell-Mermin: trace of rho against the same-outcome projector sum.
// Violation regime: value <= 1.
CorrelationValue s_bm_generic(const ReducedDensity& rd,
                              const MeasurementSettings& settings = MeasurementSettings::defaults());
// Closed form for this rho family: 9/8 - (3/8) c.
CorrelationValue s_bm_closed(double c);

// CHSH with the four fixed settings: |E(a,b) + E(a,b') + E(a',b) -
// E(a',b')|, E(u,v) = Tr(rho (u.sigma x v.sigma)). Violation: value > 2.
CorrelationValue s_chsh_fixed(const ReducedDensity& rd,
                              const MeasurementSettings& settings = MeasurementSettings::defaults());
// Closed form: sqrt(2) |1 + c|.
CorrelationValue s_chsh_closed(double c);

// BPRV closed form: 6 + (3/2) c. Violation: value > 7.
CorrelationValue s_bprv_closed(double c);

// |<00|rho(t)|11>| / |<00|rho(0)|11>|; throws std::domain_error when the
// initial coherence vanishes.
double coherence_ratio(const ReducedDensity& rho_t, const ReducedDensity& rho_0);

} // namespace mcqsim
