#include "mcqsim/electrostatics.hpp"

#include <cmath>

#include "mcqsim/errors.hpp"

namespace mcqsim {

namespace {

double polarization(int m) { return m == 1 ? 1.0 : -1.0; }

double checked_inverse_distance(const Vec3& p, const Vec3& q) {
    double r = distance(p, q);
    if (r < 1e-9) throw GeometryError("dot-dot distance below 1e-9 nm");
    return 1.0 / r;
}

// (ke2/4) * [1/r00 - 1/r01 - 1/r10 + 1/r11]; equals U with both states 1.
double pair_energy_base(const DqdSpec& j, const DqdSpec& k, const PhysicalConstants& constants) {
    const Vec3 j0 = dot_position(j, 0), j1 = dot_position(j, 1);
    const Vec3 k0 = dot_position(k, 0), k1 = dot_position(k, 1);
    double bracket = checked_inverse_distance(j0, k0) - checked_inverse_distance(j0, k1) -
                     checked_inverse_distance(j1, k0) + checked_inverse_distance(j1, k1);
    return 0.25 * constants.coulomb_ke2 * bracket;
}

} // namespace

double pair_energy(const DqdSpec& j, int m_j, const DqdSpec& k, int m_k,
                   const PhysicalConstants& constants) {
    return polarization(m_j) * polarization(m_k) * pair_energy_base(j, k, constants);
}

double total_energy(const Scene& scene, int m_a, int m_b, std::uint64_t env_word) {
    const int n = scene.n_env();
    if (n < 64 && env_word >= (std::uint64_t{1} << n))
        throw ConfigError("env_word out of range for this scene");
    const bool split = scene.infinite_separation();

    auto env_state = [&](int k) { return static_cast<int>((env_word >> k) & 1u); };

    double total = 0.0;
    if (!split) total += pair_energy(scene.target_a, m_a, scene.target_b, m_b, scene.constants);
    for (int k = 0; k < n; ++k) {
        if (!split || scene.group_of(k) == 0)
            total += pair_energy(scene.target_a, m_a, scene.env[static_cast<std::size_t>(k)],
                                 env_state(k), scene.constants);
        if (!split || scene.group_of(k) == 1)
            total += pair_energy(scene.target_b, m_b, scene.env[static_cast<std::size_t>(k)],
                                 env_state(k), scene.constants);
    }
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
            if (split && scene.group_of(j) != scene.group_of(k)) continue;
            total += pair_energy(scene.env[static_cast<std::size_t>(j)], env_state(j),
                                 scene.env[static_cast<std::size_t>(k)], env_state(k),
                                 scene.constants);
        }
    return total;
}

FlipCoefficients flip_coefficients(const Scene& scene) {
    const int n = scene.n_env();
    FlipCoefficients out;
    out.group_a_count = scene.m_per_sphere;
    out.eta_a.resize(static_cast<std::size_t>(n));
    out.eta_b.resize(static_cast<std::size_t>(n));
    out.eta.resize(static_cast<std::size_t>(n));
    const bool split = scene.infinite_separation();
    for (int k = 0; k < n; ++k) {
        const DqdSpec& mol = scene.env[static_cast<std::size_t>(k)];
        double ea = (split && scene.group_of(k) != 0)
                        ? 0.0
                        : 2.0 * pair_energy(scene.target_a, 1, mol, 1, scene.constants);
        double eb = (split && scene.group_of(k) != 1)
                        ? 0.0
                        : 2.0 * pair_energy(scene.target_b, 1, mol, 1, scene.constants);
        out.eta_a[static_cast<std::size_t>(k)] = ea;
        out.eta_b[static_cast<std::size_t>(k)] = eb;
        out.eta[static_cast<std::size_t>(k)] = ea + eb;
    }
    return out;
}

} // namespace mcqsim
