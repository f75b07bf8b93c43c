#include "mcqsim/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mcqsim/errors.hpp"
#include "mcqsim/parallel.hpp"

namespace mcqsim {

namespace {

std::size_t checked_word_count(int n_env, int cap_bits, const char* what) {
    if (n_env > cap_bits)
        throw CapExceeded(std::string(what) + " over " + std::to_string(n_env) +
                          " environment molecules exceeds the cap of " + std::to_string(cap_bits));
    return std::size_t{1} << n_env;
}

} // namespace

PhaseAssignment draw_phases(SplitMix64& rng, int n_env) {
    PhaseAssignment pa;
    pa.phases.resize(static_cast<std::size_t>(n_env));
    for (double& phi : pa.phases) phi = rng.angle();
    return pa;
}

double GlobalState::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return s;
}

EnergyTable build_energy_table(const Scene& scene, bool include_env_env, int cap_bits) {
    const int n = scene.n_env();
    const std::size_t words = checked_word_count(n, cap_bits, "energy table");
    const bool split = scene.infinite_separation();

    // Pairwise base energies (state 1,1); other states differ only by sign.
    std::vector<double> base_a(static_cast<std::size_t>(n)), base_b(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const DqdSpec& mol = scene.env[static_cast<std::size_t>(k)];
        base_a[static_cast<std::size_t>(k)] = (split && scene.group_of(k) != 0)
                                                  ? 0.0
                                                  : pair_energy(scene.target_a, 1, mol, 1,
                                                                scene.constants);
        base_b[static_cast<std::size_t>(k)] = (split && scene.group_of(k) != 1)
                                                  ? 0.0
                                                  : pair_energy(scene.target_b, 1, mol, 1,
                                                                scene.constants);
    }
    std::vector<double> base_env; // upper triangle j < k
    if (include_env_env) {
        base_env.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (split && scene.group_of(j) != scene.group_of(k)) continue;
                base_env[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(k)] =
                    pair_energy(scene.env[static_cast<std::size_t>(j)], 1,
                                scene.env[static_cast<std::size_t>(k)], 1, scene.constants);
            }
    }
    const double e_ab =
        split ? 0.0 : pair_energy(scene.target_a, 1, scene.target_b, 1, scene.constants);

    EnergyTable table;
    table.n_env = n;
    for (auto& block : table.e) block.resize(words);

    parallel_for_blocks(words, [&](std::size_t begin, std::size_t end) {
        std::vector<double> sign(static_cast<std::size_t>(n));
        for (std::size_t p = begin; p < end; ++p) {
            for (int k = 0; k < n; ++k)
                sign[static_cast<std::size_t>(k)] = ((p >> k) & 1u) ? 1.0 : -1.0;
            double s_a = 0.0, s_b = 0.0, e_env = 0.0;
            for (int k = 0; k < n; ++k) {
                s_a += sign[static_cast<std::size_t>(k)] * base_a[static_cast<std::size_t>(k)];
                s_b += sign[static_cast<std::size_t>(k)] * base_b[static_cast<std::size_t>(k)];
            }
            if (include_env_env)
                for (int j = 0; j < n; ++j)
                    for (int k = j + 1; k < n; ++k)
                        e_env += sign[static_cast<std::size_t>(j)] *
                                 sign[static_cast<std::size_t>(k)] *
                                 base_env[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                                          static_cast<std::size_t>(k)];
            for (int m_a = 0; m_a < 2; ++m_a)
                for (int m_b = 0; m_b < 2; ++m_b) {
                    double pa = m_a ? 1.0 : -1.0, pb = m_b ? 1.0 : -1.0;
                    table.e[2 * m_a + m_b][p] = e_env + pa * s_a + pb * s_b + pa * pb * e_ab;
                }
        }
    });
    return table;
}

GlobalState init_global_state(const Scene& scene, const PhaseAssignment& phases, int cap_bits) {
    const int n = scene.n_env();
    if (static_cast<int>(phases.phases.size()) != n)
        throw ConfigError("phase assignment size does not match the environment");
    const std::size_t words = checked_word_count(n, cap_bits, "state vector");

    GlobalState state;
    state.n_env = n;
    state.amplitudes.assign(words * 4, {0.0, 0.0});

    const double amp = 1.0 / std::sqrt(2.0) * std::pow(2.0, -0.5 * n);
    parallel_for_blocks(words, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            double phi = 0.0;
            for (int k = 0; k < n; ++k)
                if ((p >> k) & 1u) phi += phases.phases[static_cast<std::size_t>(k)];
            const std::complex<double> a = std::polar(amp, phi);
            state.amplitudes[p] = a;             // |00> block
            state.amplitudes[3 * words + p] = a; // |11> block
        }
    });
    return state;
}

GlobalState evolve_numerical(const GlobalState& state, const EnergyTable& table,
                             const PhysicalConstants& constants, double t) {
    if (table.n_env != state.n_env)
        throw ConfigError("energy table does not match the state's environment size");
    if (t < 0.0) throw ConfigError("evolution time must be >= 0");

    const std::size_t words = std::size_t{1} << state.n_env;
    GlobalState out;
    out.n_env = state.n_env;
    out.amplitudes.resize(state.amplitudes.size());
    for (int b = 0; b < 4; ++b) {
        const double* energies = table.e[b].data();
        const std::complex<double>* src = state.amplitudes.data() + words * static_cast<std::size_t>(b);
        std::complex<double>* dst = out.amplitudes.data() + words * static_cast<std::size_t>(b);
        parallel_for_blocks(words, [&, energies, src, dst](std::size_t begin, std::size_t end) {
            for (std::size_t p = begin; p < end; ++p)
                dst[p] = src[p] * std::polar(1.0, -energies[p] * t / constants.hbar);
        });
    }
    return out;
}

GlobalState evolve_numerical(const GlobalState& state, const Scene& scene, double t) {
    return evolve_numerical(state, build_energy_table(scene), scene.constants, t);
}

ReducedDensity reduce_to_ab(const GlobalState& state) {
    const std::size_t words = std::size_t{1} << state.n_env;
    ReducedDensity rd;
    for (int r = 0; r < 4; ++r) {
        const std::complex<double>* row = state.amplitudes.data() + words * static_cast<std::size_t>(r);
        for (int c = 0; c < 4; ++c) {
            const std::complex<double>* col = state.amplitudes.data() + words * static_cast<std::size_t>(c);
            rd.rho(r, c) = block_reduce<std::complex<double>>(
                words, [&](std::size_t p) { return row[p] * std::conj(col[p]); });
        }
    }
    return rd;
}

double coherence_brute(const FlipCoefficients& coeffs, const PhysicalConstants& constants,
                       double t, int cap_bits) {
    const int n = coeffs.size();
    const std::size_t words = checked_word_count(n, cap_bits, "coherence sum");
    const std::complex<double> sum =
        block_reduce<std::complex<double>>(words, [&](std::size_t p) {
            double e_flip = 0.0;
            for (int k = 0; k < n; ++k)
                e_flip += ((p >> k) & 1u) ? coeffs.eta[static_cast<std::size_t>(k)]
                                          : -coeffs.eta[static_cast<std::size_t>(k)];
            return std::polar(1.0, -e_flip * t / constants.hbar);
        });
    const double scale = std::pow(2.0, -n);
    if (std::abs(sum.imag() * scale) >= 1e-10)
        throw InvariantViolation("coherence sum has a non-negligible imaginary part");
    return sum.real() * scale;
}

double coherence_factorized(const FlipCoefficients& coeffs, const PhysicalConstants& constants,
                            double t) {
    double c = 1.0;
    for (double eta : coeffs.eta) c *= std::cos(eta * t / constants.hbar);
    return c;
}

double coherence_gaussian(const FlipCoefficients& coeffs, const PhysicalConstants& constants,
                          double t) {
    double sum_sq = 0.0;
    for (double eta : coeffs.eta) sum_sq += eta * eta;
    const double omega_rms = std::sqrt(sum_sq) / constants.hbar;
    return std::exp(-0.5 * omega_rms * omega_rms * t * t);
}

ReducedDensity rho_from_coherence(double c) {
    ReducedDensity rd;
    rd.rho.setZero();
    rd.rho(0, 0) = 0.5;
    rd.rho(3, 3) = 0.5;
    rd.rho(0, 3) = 0.5 * c;
    rd.rho(3, 0) = 0.5 * c;
    return rd;
}

ReducedDensity rho_ab(const FlipCoefficients& coeffs, const PhysicalConstants& constants,
                      double t, CoherenceModel model) {
    const double c = model == CoherenceModel::Exact ? coherence_factorized(coeffs, constants, t)
                                                    : coherence_gaussian(coeffs, constants, t);
    return rho_from_coherence(c);
}

CoherenceSeries coherence_series(const FlipCoefficients& coeffs,
                                 const PhysicalConstants& constants,
                                 const std::vector<double>& times, CoherenceModel model) {
    CoherenceSeries series;
    series.times = times;
    series.c.resize(times.size());
    series.f.resize(times.size());
    // Time points are independent; fixed blocks keep any threading exact.
    parallel_for_blocks(times.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            double c = model == CoherenceModel::Exact
                           ? coherence_factorized(coeffs, constants, times[i])
                           : coherence_gaussian(coeffs, constants, times[i]);
            series.c[i] = c;
            series.f[i] = std::abs(c);
        }
    });
    return series;
}

std::vector<double> linear_time_grid(double t_max, int n_steps) {
    if (n_steps < 2) throw ConfigError("time grid needs at least 2 steps");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ConfigError("t_max must be positive and finite");
    std::vector<double> t(static_cast<std::size_t>(n_steps));
    for (int i = 0; i < n_steps; ++i)
        t[static_cast<std::size_t>(i)] = t_max * static_cast<double>(i) / (n_steps - 1);
    return t;
}

} // namespace mcqsim
