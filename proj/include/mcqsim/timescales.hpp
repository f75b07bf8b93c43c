#pragma once

#include <cstdint>
#include <vector>

#include "mcqsim/spectra.hpp"

namespace mcqsim {

// Characteristic times: tau_x = pi hbar / E_rms(x). The double-flip RMS
// obeys e_rms_flip^2 = e_rms_a^2 + e_rms_b^2 (no A-B interaction), which
// forces tau_e / tau_geo <= 1/sqrt(2), equality iff the two single-qubit
// couplings match. Vanishing RMS energies give explicit +inf times.
struct TimescaleReport {
    double tau_a = 0.0;
    double tau_b = 0.0;
    double tau_geo = 0.0; // sqrt(tau_a * tau_b)
    double tau_e = 0.0;
    double e_rms_a = 0.0;
    double e_rms_b = 0.0;
    double e_rms_flip = 0.0;

    bool finite() const;
};

TimescaleReport timescales(const FlipCoefficients& coeffs, const PhysicalConstants& constants);

struct ScatterRow {
    double ratio = 1.0; // R_A / R_B
    std::uint64_t seed = 0;
    double tau_geo = 0.0; // fs
    double tau_e = 0.0;   // fs
};

// n_per_ratio scenes per radius ratio, R_B = R_A / ratio, member seeds
// mix(base_seed, global index). Rows come back in (ratio, run) order.
std::vector<ScatterRow> scatter_ensemble(const SceneConfig& base,
                                         const PhysicalConstants& constants,
                                         const std::vector<double>& ratios, int n_per_ratio);

} // namespace mcqsim
