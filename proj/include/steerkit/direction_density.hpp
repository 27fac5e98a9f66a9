#pragma once

#include <vector>

#include "steerkit/bloch.hpp"

namespace steerkit {

/// Probability density over measurement directions, taken with respect to
/// the normalized measure (uniform circle 1/2pi, uniform sphere dOmega/4pi).
/// The weighted kind carries q(n) proportional to |T n| for a 3x3 matrix T.
struct DirectionDensity {
    enum class Kind { UniformCircle, UniformSphere, Weighted, PointMass };

    Kind kind = Kind::UniformSphere;
    Mat3 weight_matrix{};
    BlochVector axis{0.0, 0.0, 1.0};  // PointMass only
    int cos_nodes = 64;     // Gauss-Legendre nodes in cos(theta), per hemisphere panel
    int phi_nodes = 128;    // trapezoid nodes in phi
    int circle_nodes = 4096;

    static DirectionDensity uniform_circle();
    static DirectionDensity uniform_sphere();
    static DirectionDensity weighted(const Mat3& t);
    /// Degenerate density concentrated at a single direction.
    static DirectionDensity point_mass(BlochVector axis);
};

/// Geometric threshold of the continuous family:
/// max over unit u of the quadrature of q(n) |n . u|.
/// Fibonacci-lattice direction scan, golden-section refinement, value
/// certified against a doubled-resolution evaluation (1e-4).
double continuous_nst(const DirectionDensity& density);

/// Quadrature of the bare density; 1 within 1e-6 for a valid density.
double density_total_mass(const DirectionDensity& density);

/// Quadrature of q(n) |T n| over the density's domain (used by the
/// state-adapted continuous criterion).
double density_weighted_correlation(const DirectionDensity& density, const Mat3& t);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Near-uniform unit vectors for direction scans.
std::vector<BlochVector> fibonacci_sphere(int count);

}  // namespace steerkit
