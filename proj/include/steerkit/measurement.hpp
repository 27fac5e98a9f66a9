#pragma once

#include <utility>
#include <vector>

#include "steerkit/bloch.hpp"
#include "steerkit/complex_matrix.hpp"

namespace steerkit {

inline constexpr double kProjectorTol = 1e-10;

/// Complete set of d rank-one orthogonal projectors on a d-dimensional space.
/// Outcome indices are 0-based in code and 1-based in every user-facing report.
class ProjectiveMeasurement {
public:
    explicit ProjectiveMeasurement(std::vector<ComplexMatrix> projectors);

    int dim() const { return static_cast<int>(projectors_.size()); }
    const ComplexMatrix& projector(int outcome) const { return projectors_[outcome]; }
    const std::vector<ComplexMatrix>& projectors() const { return projectors_; }

    /// Entry-wise transpose of every projector; again a valid measurement.
    ProjectiveMeasurement transposed() const;

private:
    std::vector<ComplexMatrix> projectors_;
};

bool measurements_equal(const ProjectiveMeasurement& a, const ProjectiveMeasurement& b, double tol = kProjectorTol);

/// Weighted family of same-dimension projective measurements.
class MeasurementAssembly {
public:
    MeasurementAssembly(std::vector<ProjectiveMeasurement> measurements, std::vector<double> weights);

    static MeasurementAssembly equal_weights(std::vector<ProjectiveMeasurement> measurements);

    int size() const { return static_cast<int>(measurements_.size()); }
    int dim() const { return measurements_.front().dim(); }
    double weight(int mu) const { return weights_[mu]; }
    const std::vector<double>& weights() const { return weights_; }
    const ProjectiveMeasurement& measurement(int mu) const { return measurements_[mu]; }

    MeasurementAssembly transposed() const;

private:
    std::vector<ProjectiveMeasurement> measurements_;
    std::vector<double> weights_;
};

/// Qubit measurement {(I + n.sigma)/2, (I - n.sigma)/2}; n must be unit.
ProjectiveMeasurement qubit_measurement(BlochVector n);

/// Measurement axis of a qubit measurement, Tr[(P+ - P-) sigma]/2.
BlochVector qubit_axis(const ProjectiveMeasurement& m);

/// N equally weighted axes cos((mu-1)pi/N) x + sin((mu-1)pi/N) y.
MeasurementAssembly planar_family(int n_settings);

/// Four axes: z plus three balanced vectors in the x-y plane.
MeasurementAssembly four_vector_candidate();

/// Computational basis and its discrete-Fourier partner; all cross
/// overlaps have squared modulus 1/d.
std::pair<ProjectiveMeasurement, ProjectiveMeasurement> fourier_mub_pair(int d);

/// fourier_mub_pair packed as an equal-weight two-setting assembly.
MeasurementAssembly mub_pair_assembly(int d);

/// Two qubit measurements with Bloch axes z and cos(2 theta) z + sin(2 theta) x.
MeasurementAssembly rotated_pair(double theta);

/// Basis whose k-th vector is the k-th row of u in the computational basis.
ProjectiveMeasurement basis_from_unitary(const ComplexMatrix& u);

bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);

/// Discrete Fourier matrix F_ba = exp(2 pi i a b / d) / sqrt(d).
ComplexMatrix fourier_matrix(int d);

}  // namespace steerkit
