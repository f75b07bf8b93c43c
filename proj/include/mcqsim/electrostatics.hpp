#pragma once

#include <cstdint>
#include <vector>

#include "mcqsim/geometry.hpp"

namespace mcqsim {

// Per-environment-molecule signed energies. Flipping both targets from
// |00> to |11> with the environment in word p costs
//   E_flip(p) = sum_k P(m_k) * eta[k],   P(1) = +1, P(0) = -1,
// where eta[k] = eta_a[k] + eta_b[k] and eta_x[k] = 2 * U(target_x in 1,
// env_k in 1). Environment-environment and A-B terms cancel in the
// difference, so this O(N) data generates every flip energy exactly.
struct FlipCoefficients {
    std::vector<double> eta_a;
    std::vector<double> eta_b;
    std::vector<double> eta;
    int group_a_count = 0; // env indices [0, group_a_count) sit on A's sphere

    int size() const { return static_cast<int>(eta.size()); }
};

// Coulomb energy between DQD j in state m_j and DQD k in state m_k:
//   P(m_j)P(m_k) * (ke2/4) * [1/r00 - 1/r01 - 1/r10 + 1/r11].
// Throws GeometryError when any dot-dot distance drops below 1e-9 nm.
double pair_energy(const DqdSpec& j, int m_j, const DqdSpec& k, int m_k,
                   const PhysicalConstants& constants);

// Total electrostatic energy of the global classical configuration
// (m_a, m_b, env_word): sum over all unordered molecule pairs. Bit k-1 of
// env_word holds the state of environment molecule k. Cross-group pairs
// contribute exactly zero when the scene separation is infinite.
double total_energy(const Scene& scene, int m_a, int m_b, std::uint64_t env_word);

FlipCoefficients flip_coefficients(const Scene& scene);

} // namespace mcqsim
