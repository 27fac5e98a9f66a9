#include "steerkit/bloch.hpp"

#include <cmath>
#include <string>

#include "steerkit/errors.hpp"

namespace steerkit {

double norm(BlochVector v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

double dot(BlochVector a, BlochVector b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

BlochVector cross(BlochVector a, BlochVector b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

BlochVector normalized(BlochVector v) {
    const double n = norm(v);
    if (n == 0.0) throw validation_error("cannot normalize the zero vector");
    return {v.x / n, v.y / n, v.z / n};
}

BlochVector orthogonal_unit(BlochVector v) {
    const BlochVector u = normalized(v);
    // Cross with the axis u is least aligned with.
    const BlochVector seed = std::abs(u.z) < 0.9 ? BlochVector{0.0, 0.0, 1.0} : BlochVector{1.0, 0.0, 0.0};
    return normalized(cross(u, seed));
}

Mat3 Mat3::identity() { return diagonal(1.0, 1.0, 1.0); }

Mat3 Mat3::diagonal(double a, double b, double c) {
    Mat3 t;
    t(0, 0) = a;
    t(1, 1) = b;
    t(2, 2) = c;
    return t;
}

BlochVector apply(const Mat3& t, BlochVector v) {
    return {t(0, 0) * v.x + t(0, 1) * v.y + t(0, 2) * v.z,
            t(1, 0) * v.x + t(1, 1) * v.y + t(1, 2) * v.z,
            t(2, 0) * v.x + t(2, 1) * v.y + t(2, 2) * v.z};
}

Mat3 transpose(const Mat3& t) {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out(r, c) = t(c, r);
    return out;
}

Mat3 multiply(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

double frobenius_norm(const Mat3& t) {
    double s = 0.0;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) s += t(r, c) * t(r, c);
    return std::sqrt(s);
}

Mat3 rotation_to_axis(BlochVector axis) {
    const BlochVector w = normalized(axis);
    const BlochVector u = orthogonal_unit(w);
    const BlochVector v = cross(w, u);
    Mat3 r;
    r(0, 0) = u.x; r(1, 0) = u.y; r(2, 0) = u.z;
    r(0, 1) = v.x; r(1, 1) = v.y; r(2, 1) = v.z;
    r(0, 2) = w.x; r(1, 2) = w.y; r(2, 2) = w.z;
    return r;
}

namespace {

ComplexMatrix make_pauli(int which) {
    ComplexMatrix m(2);
    switch (which) {
        case 0: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 1: m(0, 1) = Complex{0.0, -1.0}; m(1, 0) = Complex{0.0, 1.0}; break;
        default: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    }
    return m;
}

}  // namespace

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m = make_pauli(0);
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m = make_pauli(1);
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m = make_pauli(2);
    return m;
}

ComplexMatrix pauli_combination(BlochVector r) {
    ComplexMatrix m(2);
    m(0, 0) = Complex{r.z, 0.0};
    m(1, 1) = Complex{-r.z, 0.0};
    m(0, 1) = Complex{r.x, -r.y};
    m(1, 0) = Complex{r.x, r.y};
    return m;
}

DensityOperator bloch_to_density(BlochVector r) {
    const double len = norm(r);
    if (len > 1.0 + 1e-12)
        throw validation_error("Bloch vector length " + std::to_string(len) + " exceeds 1");
    ComplexMatrix m = ComplexMatrix::identity(2);
    m += pauli_combination(r);
    m *= 0.5;
    return DensityOperator(std::move(m));
}

BlochVector density_to_bloch(const DensityOperator& rho) {
    if (rho.dim() != 2) throw validation_error("Bloch decomposition requires a qubit state");
    const ComplexMatrix& m = rho.matrix();
    return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

}  // namespace steerkit
