#pragma once

// Deterministic generators and independent numeric oracles shared by the
// test suites. Nothing here calls back into the code paths under test:
// eigenvalues are cross-checked through the characteristic polynomial.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "steerkit/bloch.hpp"
#include "steerkit/complex_matrix.hpp"
#include "steerkit/measurement.hpp"
#include "steerkit/operators.hpp"

namespace testsupport {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform_open() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

    double normal() {
        const double u1 = uniform_open();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

inline steerkit::ComplexMatrix random_matrix(Rng& rng, int n) {
    steerkit::ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = steerkit::Complex{rng.normal(), rng.normal()};
    return m;
}

inline steerkit::ComplexMatrix random_hermitian(Rng& rng, int n) {
    const steerkit::ComplexMatrix g = random_matrix(rng, n);
    steerkit::ComplexMatrix h = g;
    h += g.adjoint();
    h *= 0.5;
    return h;
}

/// Gram-Schmidt on Ginibre columns.
inline steerkit::ComplexMatrix random_unitary(Rng& rng, int n) {
    steerkit::ComplexMatrix g = random_matrix(rng, n);
    for (int c = 0; c < n; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            steerkit::Complex overlap{0.0, 0.0};
            for (int r = 0; r < n; ++r) overlap += std::conj(g(r, prev)) * g(r, c);
            for (int r = 0; r < n; ++r) g(r, c) -= overlap * g(r, prev);
        }
        double nrm = 0.0;
        for (int r = 0; r < n; ++r) nrm += std::norm(g(r, c));
        nrm = std::sqrt(nrm);
        for (int r = 0; r < n; ++r) g(r, c) /= nrm;
    }
    return g;
}

inline steerkit::DensityOperator random_density(Rng& rng, int n) {
    const steerkit::ComplexMatrix g = random_matrix(rng, n);
    steerkit::ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return steerkit::DensityOperator(std::move(rho));
}

inline steerkit::BlochVector random_unit_vector(Rng& rng) {
    while (true) {
        const steerkit::BlochVector v{rng.normal(), rng.normal(), rng.normal()};
        if (steerkit::norm(v) > 1e-6) return steerkit::normalized(v);
    }
}

inline steerkit::Mat3 random_rotation(Rng& rng) {
    const steerkit::BlochVector a = random_unit_vector(rng);
    steerkit::BlochVector b{rng.normal(), rng.normal(), rng.normal()};
    b = b - steerkit::dot(b, a) * a;
    while (steerkit::norm(b) < 1e-6) {
        b = {rng.normal(), rng.normal(), rng.normal()};
        b = b - steerkit::dot(b, a) * a;
    }
    b = steerkit::normalized(b);
    const steerkit::BlochVector c = steerkit::cross(a, b);
    steerkit::Mat3 r;
    r(0, 0) = a.x; r(1, 0) = a.y; r(2, 0) = a.z;
    r(0, 1) = b.x; r(1, 1) = b.y; r(2, 1) = b.z;
    r(0, 2) = c.x; r(1, 2) = c.y; r(2, 2) = c.z;
    return r;
}

inline steerkit::ProjectiveMeasurement random_basis_measurement(Rng& rng, int d) {
    return steerkit::basis_from_unitary(random_unitary(rng, d));
}

inline steerkit::MeasurementAssembly random_qubit_assembly(Rng& rng, int settings,
                                                           bool random_weights = true) {
    std::vector<steerkit::ProjectiveMeasurement> ms;
    std::vector<double> w;
    double sum = 0.0;
    for (int mu = 0; mu < settings; ++mu) {
        ms.push_back(steerkit::qubit_measurement(random_unit_vector(rng)));
        const double q = random_weights ? 0.1 + rng.uniform() : 1.0;
        w.push_back(q);
        sum += q;
    }
    for (double& q : w) q /= sum;
    return steerkit::MeasurementAssembly(std::move(ms), std::move(w));
}

/// Monic characteristic polynomial coefficients c[0..n] with c[n] = 1,
/// by the Faddeev-LeVerrier recursion; real for Hermitian input.
inline std::vector<double> char_poly_real(const steerkit::ComplexMatrix& a) {
    const int n = a.dim();
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;
    steerkit::ComplexMatrix m = steerkit::ComplexMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        const steerkit::ComplexMatrix am = a * m;
        c[n - k] = -am.trace().real() / k;
        if (k < n) {
            m = am;
            for (int i = 0; i < n; ++i) m(i, i) += c[n - k];
        }
    }
    return c;
}

inline double eval_poly(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) v = v * x + c[k];
    return v;
}

/// All real roots found by sign scanning plus bisection; adequate for the
/// simple spectra the tests draw.
inline std::vector<double> real_roots(const std::vector<double>& c) {
    double bound = 0.0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) bound = std::max(bound, std::abs(c[k]));
    bound += 1.0;

    const int grid = 40000;
    std::vector<double> roots;
    double x_prev = -bound, f_prev = eval_poly(c, x_prev);
    for (int i = 1; i <= grid; ++i) {
        const double x = -bound + 2.0 * bound * i / grid;
        const double f = eval_poly(c, x);
        if (f_prev == 0.0) roots.push_back(x_prev);
        if (f_prev * f < 0.0) {
            double lo = x_prev, hi = x;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (eval_poly(c, lo) * eval_poly(c, mid) <= 0.0)
                    hi = mid;
                else
                    lo = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        x_prev = x;
        f_prev = f;
    }
    return roots;
}

}  // namespace testsupport
