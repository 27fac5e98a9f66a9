#include "steerkit/direction_density.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "steerkit/errors.hpp"

namespace steerkit {

DirectionDensity DirectionDensity::uniform_circle() {
    DirectionDensity d;
    d.kind = Kind::UniformCircle;
    return d;
}

DirectionDensity DirectionDensity::uniform_sphere() {
    DirectionDensity d;
    d.kind = Kind::UniformSphere;
    return d;
}

DirectionDensity DirectionDensity::weighted(const Mat3& t) {
    DirectionDensity d;
    d.kind = Kind::Weighted;
    d.weight_matrix = t;
    return d;
}

DirectionDensity DirectionDensity::point_mass(BlochVector axis) {
    DirectionDensity d;
    d.kind = Kind::PointMass;
    d.axis = normalized(axis);
    return d;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

std::vector<BlochVector> fibonacci_sphere(int count) {
    std::vector<BlochVector> out;
    out.reserve(count);
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
        const double z = 1.0 - (2.0 * k + 1.0) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * k;
        out.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
    return out;
}

namespace {

struct WeightedPoint {
    BlochVector n;
    double w;
};

// Point cloud whose weighted sums approximate integrals of q(n) f(n)
// over the density's normalized measure.
std::vector<WeightedPoint> build_cloud(const DirectionDensity& density, int scale) {
    std::vector<WeightedPoint> cloud;
    switch (density.kind) {
        case DirectionDensity::Kind::PointMass:
            cloud.push_back({density.axis, 1.0});
            break;
        case DirectionDensity::Kind::UniformCircle: {
            const int m = density.circle_nodes * scale;
            cloud.reserve(m);
            for (int j = 0; j < m; ++j) {
                const double phi = 2.0 * std::numbers::pi * j / m;
                cloud.push_back({{std::cos(phi), std::sin(phi), 0.0}, 1.0 / m});
            }
            break;
        }
        case DirectionDensity::Kind::UniformSphere:
        case DirectionDensity::Kind::Weighted: {
            const int nc = density.cos_nodes * scale;
            const int np = density.phi_nodes * scale;
            std::vector<double> x, w;
            gauss_legendre(nc, x, w);
            cloud.reserve(static_cast<std::size_t>(nc) * np);
            for (int i = 0; i < nc; ++i) {
                const double c = x[i];
                const double r = std::sqrt(std::max(0.0, 1.0 - c * c));
                for (int j = 0; j < np; ++j) {
                    const double phi = 2.0 * std::numbers::pi * j / np;
                    cloud.push_back({{r * std::cos(phi), r * std::sin(phi), c}, w[i] / (2.0 * np)});
                }
            }
            if (density.kind == DirectionDensity::Kind::Weighted) {
                double z = 0.0;
                for (const auto& p : cloud) z += p.w * norm(apply(density.weight_matrix, p.n));
                if (z <= 0.0) throw validation_error("weighted direction density vanishes identically");
                for (auto& p : cloud) p.w *= norm(apply(density.weight_matrix, p.n)) / z;
            }
            break;
        }
    }
    return cloud;
}

double cloud_projection(const std::vector<WeightedPoint>& cloud, BlochVector u) {
    double s = 0.0;
    for (const auto& p : cloud) s += p.w * std::abs(dot(p.n, u));
    return s;
}

// Rotated two-panel Gauss-Legendre x trapezoid rule: the |n.u| kink sits
// exactly on the panel seam, so smooth densities integrate cleanly.
double aligned_projection_sphere(const DirectionDensity& density, BlochVector u, int scale) {
    const int nc = density.cos_nodes * scale;
    const int np = density.phi_nodes * scale;
    std::vector<double> x, w;
    gauss_legendre(nc, x, w);
    const Mat3 rot = rotation_to_axis(u);
    const bool weighted = density.kind == DirectionDensity::Kind::Weighted;

    double total = 0.0, mass = 0.0;
    for (int panel = 0; panel < 2; ++panel) {
        const double lo = panel == 0 ? 0.0 : -1.0;
        for (int i = 0; i < nc; ++i) {
            const double c = lo + 0.5 * (x[i] + 1.0);  // map [-1,1] to the panel
            const double cw = 0.5 * w[i];
            const double r = std::sqrt(std::max(0.0, 1.0 - c * c));
            for (int j = 0; j < np; ++j) {
                const double phi = 2.0 * std::numbers::pi * j / np;
                const BlochVector n = apply(rot, {r * std::cos(phi), r * std::sin(phi), c});
                const double q = weighted ? norm(apply(density.weight_matrix, n)) : 1.0;
                const double cell = cw / (2.0 * np) * q;
                mass += cell;
                total += cell * std::abs(c);
            }
        }
    }
    return total / mass;  // self-normalized; exact 1/mass is 1 for uniform
}

double projection_at_resolution(const DirectionDensity& density, BlochVector u, int scale) {
    switch (density.kind) {
        case DirectionDensity::Kind::UniformCircle:
        case DirectionDensity::Kind::PointMass:
            return cloud_projection(build_cloud(density, scale), u);
        default:
            return aligned_projection_sphere(density, u, scale);
    }
}

}  // namespace

double density_total_mass(const DirectionDensity& density) {
    double s = 0.0;
    for (const auto& p : build_cloud(density, 1)) s += p.w;
    return s;
}

double density_weighted_correlation(const DirectionDensity& density, const Mat3& t) {
    double s = 0.0;
    for (const auto& p : build_cloud(density, 1)) s += p.w * norm(apply(t, p.n));
    return s;
}

double continuous_nst(const DirectionDensity& density) {
    const auto cloud = build_cloud(density, 1);

    // Coarse scan over a Fibonacci lattice.
    BlochVector best{0.0, 0.0, 1.0};
    double best_value = -1.0;
    for (const BlochVector& u : fibonacci_sphere(10000)) {
        const double v = cloud_projection(cloud, u);
        if (v > best_value) {
            best_value = v;
            best = u;
        }
    }

    // Coordinate-wise golden-section walk along tangent directions.
    const double gold = (std::sqrt(5.0) - 1.0) / 2.0;
    double step = 0.04;
    for (int cycle = 0; cycle < 6; ++cycle) {
        const BlochVector e1 = orthogonal_unit(best);
        const BlochVector e2 = cross(best, e1);
        for (const BlochVector& tangent : {e1, e2}) {
            double lo = -step, hi = step;
            auto at = [&](double s) { return cloud_projection(cloud, normalized(best + s * tangent)); };
            double x1 = hi - gold * (hi - lo), x2 = lo + gold * (hi - lo);
            double f1 = at(x1), f2 = at(x2);
            for (int it = 0; it < 40; ++it) {
                if (f1 < f2) {
                    lo = x1; x1 = x2; f1 = f2;
                    x2 = lo + gold * (hi - lo);
                    f2 = at(x2);
                } else {
                    hi = x2; x2 = x1; f2 = f1;
                    x1 = hi - gold * (hi - lo);
                    f1 = at(x1);
                }
            }
            const double s = f1 > f2 ? x1 : x2;
            const double v = at(s);
            if (v > best_value) {
                best_value = v;
                best = normalized(best + s * tangent);
            }
        }
        step *= 0.25;
    }

    const double g1 = projection_at_resolution(density, best, 1);
    const double g2 = projection_at_resolution(density, best, 2);
    if (std::abs(g1 - g2) > 1e-4)
        throw quadrature_error("direction quadrature failed to certify 1e-4: delta " +
                               std::to_string(std::abs(g1 - g2)));
    return g2;
}

}  // namespace steerkit
