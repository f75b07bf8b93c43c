#include "mcqsim/timescales.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "mcqsim/errors.hpp"

namespace mcqsim {

namespace {

double tau_from_rms(double e_rms, double hbar) {
    if (e_rms == 0.0) return std::numeric_limits<double>::infinity();
    return std::numbers::pi * hbar / e_rms;
}

} // namespace

bool TimescaleReport::finite() const {
    return std::isfinite(tau_a) && std::isfinite(tau_b) && std::isfinite(tau_e);
}

TimescaleReport timescales(const FlipCoefficients& coeffs, const PhysicalConstants& constants) {
    TimescaleReport r;
    r.e_rms_a = rms_from_coefficients(coeffs, FlipSource::SingleFlipA);
    r.e_rms_b = rms_from_coefficients(coeffs, FlipSource::SingleFlipB);
    r.e_rms_flip = rms_from_coefficients(coeffs, FlipSource::DoubleFlip);
    r.tau_a = tau_from_rms(r.e_rms_a, constants.hbar);
    r.tau_b = tau_from_rms(r.e_rms_b, constants.hbar);
    r.tau_e = tau_from_rms(r.e_rms_flip, constants.hbar);
    r.tau_geo = std::sqrt(r.tau_a * r.tau_b);
    return r;
}

std::vector<ScatterRow> scatter_ensemble(const SceneConfig& base,
                                         const PhysicalConstants& constants,
                                         const std::vector<double>& ratios, int n_per_ratio) {
    if (n_per_ratio < 1) throw ConfigError("scatter needs n_per_ratio >= 1");
    if (ratios.empty()) throw ConfigError("scatter needs at least one radius ratio");

    std::vector<ScatterRow> rows;
    rows.reserve(ratios.size() * static_cast<std::size_t>(n_per_ratio));
    std::uint64_t member = 0;
    for (double ratio : ratios) {
        if (!(ratio > 0.0)) throw ConfigError("radius ratios must be > 0");
        for (int run = 0; run < n_per_ratio; ++run, ++member) {
            SceneConfig cfg = base;
            cfg.r_b = base.r_a / ratio;
            cfg.seed = mix_seed(base.seed, member);
            Scene scene = build_scene(cfg, constants);
            TimescaleReport report = timescales(flip_coefficients(scene), constants);
            rows.push_back({ratio, cfg.seed, report.tau_geo, report.tau_e});
        }
    }
    return rows;
}

} // namespace mcqsim
