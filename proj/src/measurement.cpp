#include "steerkit/measurement.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "steerkit/errors.hpp"

namespace steerkit {

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<ComplexMatrix> projectors)
    : projectors_(std::move(projectors)) {
    const int d = static_cast<int>(projectors_.size());
    if (d < 2) throw validation_error("a projective measurement needs at least two outcomes");
    ComplexMatrix sum(d);
    for (int a = 0; a < d; ++a) {
        const ComplexMatrix& p = projectors_[a];
        if (p.dim() != d)
            throw validation_error("rank-one projective measurement needs exactly d projectors of dimension d");
        if (p.hermiticity_defect() > kProjectorTol) throw validation_error("projector is not Hermitian");
        if (max_entry_distance(p * p, p) > kProjectorTol) throw validation_error("projector is not idempotent");
        if (std::abs(p.trace().real() - 1.0) > kProjectorTol)
            throw validation_error("projector trace differs from 1; degenerate outcomes are not supported");
        sum += p;
    }
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
            const Complex overlap = (projectors_[a] * projectors_[b]).trace();
            if (std::abs(overlap) > kProjectorTol) throw validation_error("projectors are not mutually orthogonal");
        }
    if (max_entry_distance(sum, ComplexMatrix::identity(d)) > kProjectorTol)
        throw validation_error("projectors do not sum to the identity");
}

ProjectiveMeasurement ProjectiveMeasurement::transposed() const {
    std::vector<ComplexMatrix> out;
    out.reserve(projectors_.size());
    for (const auto& p : projectors_) out.push_back(p.transpose());
    return ProjectiveMeasurement(std::move(out));
}

bool measurements_equal(const ProjectiveMeasurement& a, const ProjectiveMeasurement& b, double tol) {
    if (a.dim() != b.dim()) return false;
    for (int k = 0; k < a.dim(); ++k)
        if (max_entry_distance(a.projector(k), b.projector(k)) > tol) return false;
    return true;
}

MeasurementAssembly::MeasurementAssembly(std::vector<ProjectiveMeasurement> measurements,
                                         std::vector<double> weights)
    : measurements_(std::move(measurements)), weights_(std::move(weights)) {
    if (measurements_.empty()) throw validation_error("assembly needs at least one measurement");
    if (measurements_.size() != weights_.size())
        throw validation_error("assembly weight count does not match measurement count");
    const int d = measurements_.front().dim();
    for (const auto& m : measurements_)
        if (m.dim() != d) throw validation_error("assembly mixes measurement dimensions");
    double sum = 0.0;
    for (double q : weights_) {
        if (q < 0.0) throw validation_error("assembly weights must be nonnegative");
        sum += q;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw validation_error("assembly weights sum to " + std::to_string(sum) + ", expected 1");
}

MeasurementAssembly MeasurementAssembly::equal_weights(std::vector<ProjectiveMeasurement> measurements) {
    const std::size_t n = measurements.size();
    if (n == 0) throw validation_error("assembly needs at least one measurement");
    std::vector<double> w(n, 1.0 / static_cast<double>(n));
    return MeasurementAssembly(std::move(measurements), std::move(w));
}

MeasurementAssembly MeasurementAssembly::transposed() const {
    std::vector<ProjectiveMeasurement> out;
    out.reserve(measurements_.size());
    for (const auto& m : measurements_) out.push_back(m.transposed());
    return MeasurementAssembly(std::move(out), weights_);
}

ProjectiveMeasurement qubit_measurement(BlochVector n) {
    if (std::abs(norm(n) - 1.0) > 1e-12)
        throw validation_error("measurement axis must be a unit vector");
    ComplexMatrix plus = ComplexMatrix::identity(2);
    plus += pauli_combination(n);
    plus *= 0.5;
    ComplexMatrix minus = ComplexMatrix::identity(2);
    minus -= pauli_combination(n);
    minus *= 0.5;
    std::vector<ComplexMatrix> ps;
    ps.push_back(std::move(plus));
    ps.push_back(std::move(minus));
    return ProjectiveMeasurement(std::move(ps));
}

BlochVector qubit_axis(const ProjectiveMeasurement& m) {
    if (m.dim() != 2) throw validation_error("measurement axis defined only for qubits");
    ComplexMatrix diff = m.projector(0);
    diff -= m.projector(1);
    return {diff(1, 0).real(), diff(1, 0).imag(), diff(0, 0).real()};
}

MeasurementAssembly planar_family(int n_settings) {
    if (n_settings < 2) throw validation_error("planar family needs at least two settings");
    std::vector<ProjectiveMeasurement> ms;
    ms.reserve(n_settings);
    for (int mu = 0; mu < n_settings; ++mu) {
        const double angle = static_cast<double>(mu) * std::numbers::pi / n_settings;
        ms.push_back(qubit_measurement({std::cos(angle), std::sin(angle), 0.0}));
    }
    return MeasurementAssembly::equal_weights(std::move(ms));
}

MeasurementAssembly four_vector_candidate() {
    const double h = std::sqrt(3.0) / 2.0;
    std::vector<ProjectiveMeasurement> ms;
    ms.push_back(qubit_measurement({0.0, 0.0, 1.0}));
    ms.push_back(qubit_measurement({-0.5, h, 0.0}));
    ms.push_back(qubit_measurement({1.0, 0.0, 0.0}));
    ms.push_back(qubit_measurement({-0.5, -h, 0.0}));
    return MeasurementAssembly::equal_weights(std::move(ms));
}

ComplexMatrix fourier_matrix(int d) {
    ComplexMatrix f(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int b = 0; b < d; ++b)
        for (int a = 0; a < d; ++a) {
            const double arg = 2.0 * std::numbers::pi * static_cast<double>(a) * b / d;
            f(b, a) = scale * Complex{std::cos(arg), std::sin(arg)};
        }
    return f;
}

std::pair<ProjectiveMeasurement, ProjectiveMeasurement> fourier_mub_pair(int d) {
    if (d < 2) throw validation_error("mutually unbiased pair needs dimension at least 2");
    std::vector<ComplexMatrix> comp;
    comp.reserve(d);
    for (int a = 0; a < d; ++a) {
        ComplexMatrix p(d);
        p(a, a) = 1.0;
        comp.push_back(std::move(p));
    }
    return {ProjectiveMeasurement(std::move(comp)), basis_from_unitary(fourier_matrix(d))};
}

MeasurementAssembly mub_pair_assembly(int d) {
    auto [first, second] = fourier_mub_pair(d);
    std::vector<ProjectiveMeasurement> ms;
    ms.push_back(std::move(first));
    ms.push_back(std::move(second));
    return MeasurementAssembly::equal_weights(std::move(ms));
}

MeasurementAssembly rotated_pair(double theta) {
    // A Hilbert-space rotation by theta doubles on the Bloch sphere.
    std::vector<ProjectiveMeasurement> ms;
    ms.push_back(qubit_measurement({0.0, 0.0, 1.0}));
    ms.push_back(qubit_measurement({std::sin(2.0 * theta), 0.0, std::cos(2.0 * theta)}));
    return MeasurementAssembly::equal_weights(std::move(ms));
}

bool is_unitary(const ComplexMatrix& u, double tol) {
    return max_entry_distance(u * u.adjoint(), ComplexMatrix::identity(u.dim())) <= tol;
}

ProjectiveMeasurement basis_from_unitary(const ComplexMatrix& u) {
    if (!is_unitary(u)) throw validation_error("basis construction requires a unitary matrix");
    const int d = u.dim();
    std::vector<ComplexMatrix> ps;
    ps.reserve(d);
    for (int k = 0; k < d; ++k) {
        std::vector<Complex> row(d);
        for (int a = 0; a < d; ++a) row[a] = u(k, a);
        ps.push_back(projector_onto(row));
    }
    return ProjectiveMeasurement(std::move(ps));
}

}  // namespace steerkit
