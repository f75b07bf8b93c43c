#include "mcqsim/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcqsim/errors.hpp"
#include "mcqsim/parallel.hpp"

namespace mcqsim {

std::span<const double> coefficient_span(const FlipCoefficients& coeffs, FlipSource source) {
    const std::size_t ga = static_cast<std::size_t>(coeffs.group_a_count);
    switch (source) {
    case FlipSource::SingleFlipA:
        return std::span<const double>(coeffs.eta_a).first(ga);
    case FlipSource::SingleFlipB:
        return std::span<const double>(coeffs.eta_b).subspan(ga);
    case FlipSource::DoubleFlip:
    default:
        return std::span<const double>(coeffs.eta);
    }
}

EnergyMultiset enumerate_flip_energies(const FlipCoefficients& coeffs, FlipSource source,
                                       int cap_bits) {
    const auto eta = coefficient_span(coeffs, source);
    const int w = static_cast<int>(eta.size());
    if (w > cap_bits)
        throw CapExceeded("enumeration over " + std::to_string(w) +
                          " bits exceeds the cap of " + std::to_string(cap_bits));

    EnergyMultiset ms;
    ms.source = source;
    const std::size_t n = std::size_t{1} << w;
    ms.values.resize(n);
    // Left-to-right signed sum per word; negating every sign negates each
    // partial sum exactly, which makes the complement property bit-exact.
    parallel_for_blocks(n, [&](std::size_t begin, std::size_t end) {
        for (std::size_t p = begin; p < end; ++p) {
            double acc = 0.0;
            for (int k = 0; k < w; ++k)
                acc += ((p >> k) & 1u) ? eta[static_cast<std::size_t>(k)]
                                       : -eta[static_cast<std::size_t>(k)];
            ms.values[p] = acc;
        }
    });
    return ms;
}

double rms_from_coefficients(const FlipCoefficients& coeffs, FlipSource source) {
    const auto eta = coefficient_span(coeffs, source);
    double sum_sq = 0.0;
    for (double e : eta) sum_sq += e * e;
    return std::sqrt(sum_sq);
}

double raw_moment(const EnergyMultiset& ms, int k) {
    if (k < 1) throw ConfigError("raw_moment requires k >= 1");
    if (ms.values.empty()) return 0.0;
    double total = block_reduce<double>(ms.values.size(), [&](std::size_t i) {
        double v = ms.values[i];
        double acc = v;
        for (int j = 1; j < k; ++j) acc *= v;
        return acc;
    });
    return total / static_cast<double>(ms.values.size());
}

Moments moments(const EnergyMultiset& ms) {
    return Moments{raw_moment(ms, 1), std::sqrt(raw_moment(ms, 2))};
}

int default_bin_count(std::size_t n_values) {
    int n = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_values))));
    return std::clamp(n, 1, 101);
}

Histogram histogram(const EnergyMultiset& ms, int n_bins) {
    if (n_bins < 1) throw ConfigError("histogram requires n_bins >= 1");
    if (ms.values.empty()) throw ConfigError("histogram of an empty multiset");

    auto [lo_it, hi_it] = std::minmax_element(ms.values.begin(), ms.values.end());
    double lo = *lo_it, hi = *hi_it;

    Histogram h;
    if (lo == hi) {
        h.bin_edges = {lo - 0.5, hi + 0.5};
        h.counts = {static_cast<std::int64_t>(ms.values.size())};
        return h;
    }

    h.bin_edges.resize(static_cast<std::size_t>(n_bins) + 1);
    const double width = (hi - lo) / n_bins;
    for (int i = 0; i <= n_bins; ++i)
        h.bin_edges[static_cast<std::size_t>(i)] = lo + width * i;
    h.bin_edges.back() = hi; // guard against rounding past the data

    h.counts.assign(static_cast<std::size_t>(n_bins), 0);
    for (double v : ms.values) {
        int idx = static_cast<int>((v - lo) / (hi - lo) * n_bins);
        idx = std::clamp(idx, 0, n_bins - 1); // right-most edge inclusive
        ++h.counts[static_cast<std::size_t>(idx)];
    }
    return h;
}

GaussianFit gaussian_fit_amplitude(const Histogram& h, double mean, double sigma) {
    if (!(sigma > 0.0)) throw ConfigError("gaussian fit requires sigma > 0");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        double center = 0.5 * (h.bin_edges[i] + h.bin_edges[i + 1]);
        double z = (center - mean) / sigma;
        double u = std::exp(-0.5 * z * z);
        num += static_cast<double>(h.counts[i]) * u;
        den += u * u;
    }
    GaussianFit fit;
    fit.mean = mean;
    fit.sigma = sigma;
    fit.amplitude = den > 0.0 ? num / den : 0.0;
    return fit;
}

std::vector<double> gaussian_fit_values(const Histogram& h, const GaussianFit& fit) {
    std::vector<double> out(h.counts.size());
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        double center = 0.5 * (h.bin_edges[i] + h.bin_edges[i + 1]);
        double z = (center - fit.mean) / fit.sigma;
        out[i] = fit.amplitude * std::exp(-0.5 * z * z);
    }
    return out;
}

} // namespace mcqsim
