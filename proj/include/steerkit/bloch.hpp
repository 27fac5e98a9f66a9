#pragma once

#include <array>

#include "steerkit/operators.hpp"

namespace steerkit {

/// Real 3-vector on (or inside) the Bloch sphere. Component order (x, y, z).
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline BlochVector operator+(BlochVector a, BlochVector b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline BlochVector operator-(BlochVector a, BlochVector b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline BlochVector operator*(double s, BlochVector v) { return {s * v.x, s * v.y, s * v.z}; }
inline BlochVector operator-(BlochVector v) { return {-v.x, -v.y, -v.z}; }

double norm(BlochVector v);
double dot(BlochVector a, BlochVector b);
BlochVector cross(BlochVector a, BlochVector b);
BlochVector normalized(BlochVector v);

/// Some unit vector orthogonal to v.
BlochVector orthogonal_unit(BlochVector v);

/// Real 3x3 matrix acting on Bloch vectors.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 identity();
    static Mat3 diagonal(double a, double b, double c);

    double operator()(int r, int c) const { return m[r][c]; }
    double& operator()(int r, int c) { return m[r][c]; }
};

BlochVector apply(const Mat3& t, BlochVector v);
Mat3 transpose(const Mat3& t);
Mat3 multiply(const Mat3& a, const Mat3& b);
double frobenius_norm(const Mat3& t);

/// Rotation taking the z axis onto `axis` (|axis| = 1).
Mat3 rotation_to_axis(BlochVector axis);

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

/// r . sigma in the (x, y, z) Pauli order.
ComplexMatrix pauli_combination(BlochVector r);

/// (I + r.sigma)/2; requires |r| <= 1 + 1e-12.
DensityOperator bloch_to_density(BlochVector r);

/// Inverse map, r_i = Tr[rho sigma_i]; requires a qubit state.
BlochVector density_to_bloch(const DensityOperator& rho);

}  // namespace steerkit
