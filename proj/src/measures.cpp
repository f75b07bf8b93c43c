#include "mcqsim/measures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace mcqsim {

namespace {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;

constexpr std::complex<double> kI{0.0, 1.0};

Matrix2cd rotation(double theta) {
    Matrix2cd r;
    r << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return r;
}

Matrix2cd basis_projector(double theta, int m) {
    Matrix2cd ket = Matrix2cd::Zero();
    ket(m, m) = 1.0;
    Matrix2cd r = rotation(theta);
    return r * ket * r.transpose();
}

Matrix2cd pauli_dot(const Eigen::Vector3d& u) {
    Matrix2cd s;
    s << u.z(), u.x() - kI * u.y(), u.x() + kI * u.y(), -u.z();
    return s;
}

double real_trace(const Matrix4cd& rho, const Matrix4cd& op) {
    return (rho * op).trace().real();
}

} // namespace

MeasurementSettings MeasurementSettings::defaults() {
    MeasurementSettings s;
    s.bm_angles = {0.0, std::numbers::pi / 3.0, 2.0 * std::numbers::pi / 3.0};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    s.chsh_directions = {Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(1, 0, 0),
                         Eigen::Vector3d(inv_sqrt2, 0, inv_sqrt2),
                         Eigen::Vector3d(-inv_sqrt2, 0, inv_sqrt2)};
    return s;
}

CorrelationValue s_bm_generic(const ReducedDensity& rd, const MeasurementSettings& settings) {
    Matrix4cd p_same = Matrix4cd::Zero();
    for (int i = 0; i < 3; ++i)
        for (int j = settings.bm_ordered_pairs ? 0 : i + 1; j < 3; ++j) {
            if (j == i) continue;
            for (int m = 0; m < 2; ++m)
                p_same += Eigen::kroneckerProduct(basis_projector(settings.bm_angles[static_cast<std::size_t>(i)], m),
                                                  basis_projector(settings.bm_angles[static_cast<std::size_t>(j)], m));
        }
    double value = real_trace(rd.rho, p_same);
    return {value, value <= 1.0};
}

CorrelationValue s_bm_closed(double c) {
    double value = 9.0 / 8.0 - (3.0 / 8.0) * c;
    return {value, value <= 1.0};
}

CorrelationValue s_chsh_fixed(const ReducedDensity& rd, const MeasurementSettings& settings) {
    auto correlator = [&](int u, int v) {
        Matrix4cd op = Eigen::kroneckerProduct(pauli_dot(settings.chsh_directions[static_cast<std::size_t>(u)]),
                                               pauli_dot(settings.chsh_directions[static_cast<std::size_t>(v)]));
        return real_trace(rd.rho, op);
    };
    // Directions: 0 = a, 1 = a', 2 = b, 3 = b'.
    double value = std::abs(correlator(0, 2) + correlator(0, 3) + correlator(1, 2) -
                            correlator(1, 3));
    return {value, value > 2.0};
}

CorrelationValue s_chsh_closed(double c) {
    double value = std::sqrt(2.0) * std::abs(1.0 + c);
    return {value, value > 2.0};
}

CorrelationValue s_bprv_closed(double c) {
    double value = 6.0 + 1.5 * c;
    return {value, value > 7.0};
}

double coherence_ratio(const ReducedDensity& rho_t, const ReducedDensity& rho_0) {
    double initial = std::abs(rho_0.rho(0, 3));
    if (initial == 0.0) throw std::domain_error("initial coherence is zero");
    return std::abs(rho_t.rho(0, 3)) / initial;
}

} // namespace mcqsim
