#include "mcqsim/analysis.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mcqsim/errors.hpp"

namespace mcqsim {

namespace {
constexpr double kMaskEps = 1e-12;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
} // namespace

std::size_t LinearizedSeries::valid_count() const {
    std::size_t n = 0;
    for (bool v : valid) n += v ? 1 : 0;
    return n;
}

LinearizedSeries linearize(const CoherenceSeries& series) {
    if (series.times.empty()) throw ConfigError("linearize needs a nonempty series");
    LinearizedSeries ls;
    const std::size_t n = series.times.size();
    ls.t = series.times;
    ls.x.assign(n, kNaN);
    ls.y.assign(n, kNaN);
    ls.valid.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        double t = series.times[i];
        double f = series.f[i];
        if (!(t > 0.0) || !(f >= kMaskEps) || !(f <= 1.0 - kMaskEps)) continue;
        ls.x[i] = std::log(t);
        ls.y[i] = std::log(-std::log(f));
        ls.valid[i] = true;
    }
    if (ls.valid_count() == 0) throw InvariantViolation("linearize: every point is masked");
    return ls;
}

SlopeFit early_slope(const LinearizedSeries& ls, double window_fraction) {
    if (!(window_fraction > 0.0)) throw ConfigError("window_fraction must be > 0");
    const double t_cut = window_fraction * ls.t.back();

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int n = 0, first = -1, last = -1;
    for (std::size_t i = 0; i < ls.t.size(); ++i) {
        if (!ls.valid[i] || ls.t[i] > t_cut) continue;
        if (first < 0) first = static_cast<int>(i);
        last = static_cast<int>(i);
        sx += ls.x[i];
        sy += ls.y[i];
        sxx += ls.x[i] * ls.x[i];
        sxy += ls.x[i] * ls.y[i];
        ++n;
    }
    if (n < 2) throw ConfigError("early_slope: fewer than 2 valid points in the window");

    SlopeFit fit;
    const double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    fit.first = first;
    fit.last = last;
    return fit;
}

CollapseStats collapse_stats(const std::vector<MeasureCurve>& curves, double threshold,
                             TimeScaling scaling) {
    if (curves.empty()) throw ConfigError("collapse_stats needs at least one curve");

    CollapseStats stats;
    stats.crossing_times.reserve(curves.size());
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const MeasureCurve& curve = curves[ci];
        if (curve.times.size() != curve.values.size() || curve.times.size() < 2)
            throw ConfigError("collapse_stats: malformed curve " + std::to_string(ci));
        const double scale =
            scaling == TimeScaling::TauE ? curve.scales.tau_e : curve.scales.tau_geo;
        if (!std::isfinite(scale) || scale <= 0.0)
            throw ConfigError("collapse_stats: curve " + std::to_string(ci) +
                              " has no finite time scale");

        const bool starts_below = curve.values.front() < threshold;
        double crossing = kNaN;
        for (std::size_t i = 1; i < curve.times.size(); ++i) {
            double v = curve.values[i];
            bool crossed = starts_below ? v >= threshold : v <= threshold;
            if (!crossed) continue;
            double v0 = curve.values[i - 1], t0 = curve.times[i - 1];
            double v1 = v, t1 = curve.times[i];
            crossing = v1 == v0 ? t1 : t0 + (threshold - v0) / (v1 - v0) * (t1 - t0);
            break;
        }
        if (std::isnan(crossing))
            throw InvariantViolation("collapse_stats: curve " + std::to_string(ci) +
                                     " never crosses the threshold");
        stats.crossing_times.push_back(crossing / scale);
    }

    double mean = 0.0;
    for (double v : stats.crossing_times) mean += v;
    mean /= static_cast<double>(stats.crossing_times.size());
    double var = 0.0;
    for (double v : stats.crossing_times) var += (v - mean) * (v - mean);
    var /= static_cast<double>(stats.crossing_times.size());
    stats.dispersion = mean != 0.0 ? std::sqrt(var) / mean : 0.0;
    return stats;
}

} // namespace mcqsim
