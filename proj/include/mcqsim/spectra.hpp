#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcqsim/electrostatics.hpp"

namespace mcqsim {

enum class FlipSource { SingleFlipA, SingleFlipB, DoubleFlip };

// Explicitly enumerated bit-flip energies; antisymmetric as a multiset
// (every word and its bitwise complement carry opposite energies, exactly,
// because the signed sums are accumulated in the same term order).
struct EnergyMultiset {
    std::vector<double> values;
    FlipSource source = FlipSource::DoubleFlip;
};

struct Moments {
    double mean = 0.0; // eV
    double rms = 0.0;  // eV
};

struct Histogram {
    std::vector<double> bin_edges; // strictly increasing, size counts+1
    std::vector<std::int64_t> counts;
};

struct GaussianFit {
    double amplitude = 0.0; // count units
    double mean = 0.0;      // eV
    double sigma = 0.0;     // eV
};

// The coefficient list generating a source's multiset: the full eta for
// double flips, or the target's own-sphere slice of eta_a / eta_b.
std::span<const double> coefficient_span(const FlipCoefficients& coeffs, FlipSource source);

// All 2^W signed-sum energies, word p -> sum_k P(bit k of p) * eta[k].
// Throws CapExceeded when W exceeds cap_bits.
EnergyMultiset enumerate_flip_energies(const FlipCoefficients& coeffs, FlipSource source,
                                       int cap_bits = 24);

// Exact RMS of the full 2^W multiset at any W: sqrt(sum_k eta_k^2)
// (cross terms average to zero over the sign words).
double rms_from_coefficients(const FlipCoefficients& coeffs, FlipSource source);

// (1/n) * sum v^k, k >= 1. Fixed-shape reduction: thread-count independent.
double raw_moment(const EnergyMultiset& ms, int k);

Moments moments(const EnergyMultiset& ms);

// ceil(sqrt(n)) capped at 101.
int default_bin_count(std::size_t n_values);

// Equal-width bins spanning [min, max], right-most edge inclusive. An
// all-equal multiset degenerates to one unit-width bin holding everything.
Histogram histogram(const EnergyMultiset& ms, int n_bins);

// Least-squares amplitude for A*exp(-(c_i - mean)^2 / 2 sigma^2) against
// the bin counts; mean and sigma come from the multiset moments, only A is
// fitted. All-negligible weights give A = 0.
GaussianFit gaussian_fit_amplitude(const Histogram& h, double mean, double sigma);

// Fit curve sampled at bin centers (the CSV's fit_value column).
std::vector<double> gaussian_fit_values(const Histogram& h, const GaussianFit& fit);

} // namespace mcqsim
