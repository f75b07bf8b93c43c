#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "mcqsim/electrostatics.hpp"
#include "mcqsim/geometry.hpp"
#include "mcqsim/rng.hpp"

namespace mcqsim {

// Random relative phase per environment molecule; the initial environment
// is a product of (|0> + e^{i phi_k} |1>)/sqrt(2). The reduced target
// dynamics are provably independent of these phases (tested).
struct PhaseAssignment {
    std::vector<double> phases; // each in [0, 2*pi)
};

PhaseAssignment draw_phases(SplitMix64& rng, int n_env);

// Full system+environment state vector. Amplitude layout:
//   index = p + 2^N * (2*m_a + m_b),  p = environment word.
struct GlobalState {
    std::vector<std::complex<double>> amplitudes;
    int n_env = 0;

    double norm_sq() const;
};

// Classical configuration energies for all four target blocks over every
// environment word; this is the diagonal of the global Hamiltonian.
struct EnergyTable {
    std::vector<double> e[4]; // [2*m_a + m_b][word]
    int n_env = 0;
};

// 4x4 density matrix of the target pair in basis {|00>,|01>,|10>,|11>}.
struct ReducedDensity {
    Eigen::Matrix4cd rho;
};

enum class CoherenceModel { Exact, Gaussian };

// include_env_env toggles environment-environment pair terms; they cancel
// in the reduced dynamics and the toggle exists to test exactly that.
EnergyTable build_energy_table(const Scene& scene, bool include_env_env = true,
                               int cap_bits = 22);

// Bell pair (|00>+|11>)/sqrt(2) tensor the phase-tagged equal superposition
// of all environment words. Throws CapExceeded past cap_bits.
GlobalState init_global_state(const Scene& scene, const PhaseAssignment& phases,
                              int cap_bits = 22);

// Diagonal evolution: each amplitude picks up exp(-i E t / hbar).
GlobalState evolve_numerical(const GlobalState& state, const EnergyTable& table,
                             const PhysicalConstants& constants, double t);
GlobalState evolve_numerical(const GlobalState& state, const Scene& scene, double t);

// Trace over the environment. Deterministic fixed-shape reduction.
ReducedDensity reduce_to_ab(const GlobalState& state);

// Coherence factor c(t) = 2^-N sum_p exp(-i omega_flip(p) t), three routes:
// the 2^N sum (oracle), the exact factorized product prod_k cos(eta_k t /
// hbar), and the Gaussian approximation exp(-(omega_rms t)^2 / 2).
double coherence_brute(const FlipCoefficients& coeffs, const PhysicalConstants& constants,
                       double t, int cap_bits = 24);
double coherence_factorized(const FlipCoefficients& coeffs, const PhysicalConstants& constants,
                            double t);
double coherence_gaussian(const FlipCoefficients& coeffs, const PhysicalConstants& constants,
                          double t);

// rho_AB(t) for this problem family: diagonal (1/2, 0, 0, 1/2) frozen, the
// |00><11| coherence = c(t)/2 with c from the chosen model.
ReducedDensity rho_ab(const FlipCoefficients& coeffs, const PhysicalConstants& constants,
                      double t, CoherenceModel model);

ReducedDensity rho_from_coherence(double c);

struct CoherenceSeries {
    std::vector<double> times; // fs
    std::vector<double> c;     // real coherence factor
    std::vector<double> f;     // |c|
};

CoherenceSeries coherence_series(const FlipCoefficients& coeffs,
                                 const PhysicalConstants& constants,
                                 const std::vector<double>& times, CoherenceModel model);

// n_steps evenly spaced points covering [0, t_max], endpoints included.
std::vector<double> linear_time_grid(double t_max, int n_steps);

} // namespace mcqsim
