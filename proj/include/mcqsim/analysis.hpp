#pragma once

#include <vector>

#include "mcqsim/dynamics.hpp"
#include "mcqsim/timescales.hpp"

namespace mcqsim {

// ln(-ln f) against ln t. A Gaussian decay is a slope-2 line, an
// exponential decay a slope-1 line; that pair discriminates the two.
// Points where the transform is undefined (t = 0, f outside
// [eps, 1 - eps], eps = 1e-12) are masked, never dropped, so revival
// regions stay visible in the output.
struct LinearizedSeries {
    std::vector<double> t; // fs, copied from the source series
    std::vector<double> x; // ln t, NaN where masked
    std::vector<double> y; // ln(-ln f), NaN where masked
    std::vector<bool> valid;

    std::size_t valid_count() const;
};

LinearizedSeries linearize(const CoherenceSeries& series);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    int first = 0; // window: valid points with index in [first, last]
    int last = 0;
};

// OLS over the valid points with t <= window_fraction * max t. The default
// 1/16 equals tau_e/4 on the standard [0, 4 tau_e] grid.
SlopeFit early_slope(const LinearizedSeries& ls, double window_fraction = 0.0625);

enum class TimeScaling { TauE, TauGeo };

// One correlation-function evolution with its scene's time scales.
struct MeasureCurve {
    TimescaleReport scales;
    std::vector<double> times;  // fs
    std::vector<double> values; // correlation function at each time
};

struct CollapseStats {
    std::vector<double> crossing_times; // scaled first-crossing per curve
    double dispersion = 0.0;            // stdev / mean
};

// First threshold crossing per curve (linear interpolation), in t / tau_E
// or t / tau_geo. A curve that never crosses is an error naming its index.
CollapseStats collapse_stats(const std::vector<MeasureCurve>& curves, double threshold,
                             TimeScaling scaling = TimeScaling::TauE);

} // namespace mcqsim
