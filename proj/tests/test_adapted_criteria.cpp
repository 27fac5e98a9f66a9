#include <doctest.h>

#include <cmath>
#include <numbers>

#include "steerkit/adapted.hpp"
#include "steerkit/errors.hpp"
#include "steerkit/steering.hpp"
#include "support.hpp"

using namespace steerkit;
using testsupport::Rng;

namespace {

BipartiteState local_unitary_conjugate(const BipartiteState& w, const ComplexMatrix& ua,
                                       const ComplexMatrix& ub) {
    const ComplexMatrix u = kron(ua, ub);
    return BipartiteState(DensityOperator(u * w.matrix() * u.adjoint()), 2, 2);
}

double raw_two_setting_ratio(const CorrelationMatrix& cm, BlochVector n, BlochVector n_perp,
                             double q_n, double q_perp) {
    const double num = q_n * max_correlation(cm, n).first + q_perp * max_correlation(cm, n_perp).first;
    return num / std::sqrt(q_n * q_n + q_perp * q_perp);
}

}  // namespace

TEST_CASE("correlation matrices") {
    SUBCASE("pure states have singular values (1, sin, sin)") {
        for (double gamma : {0.2, 0.7, 1.2, std::numbers::pi / 2.0}) {
            const auto cm = correlation_matrix(pure_state(gamma));
            CHECK(std::abs(cm.singular_values[0] - 1.0) < 1e-10);
            CHECK(std::abs(cm.singular_values[1] - std::sin(gamma)) < 1e-10);
            CHECK(std::abs(cm.singular_values[2] - std::sin(gamma)) < 1e-10);
        }
    }
    SUBCASE("isotropic states are fully degenerate") {
        const auto cm = correlation_matrix(isotropic_state(2, 0.37));
        for (int k = 0; k < 3; ++k) CHECK(std::abs(cm.singular_values[k] - 0.37) < 1e-10);
    }
    SUBCASE("white noise vanishes") {
        ComplexMatrix mixed = ComplexMatrix::identity(4);
        mixed *= 0.25;
        const auto cm = correlation_matrix(BipartiteState(DensityOperator(std::move(mixed)), 2, 2));
        for (int k = 0; k < 3; ++k) CHECK(cm.singular_values[k] < 1e-12);
    }
    SUBCASE("decomposition invariants hold on random states") {
        Rng rng(19);
        for (int rep = 0; rep < 25; ++rep) {
            const BipartiteState w(testsupport::random_density(rng, 4), 2, 2);
            const auto cm = correlation_matrix(w);
            CHECK(cm.singular_values[0] >= cm.singular_values[1]);
            CHECK(cm.singular_values[1] >= cm.singular_values[2]);
            CHECK(cm.singular_values[2] >= -1e-15);

            // |t v_k| = s_k and t = sum_k s_k u_k v_k^T
            Mat3 rebuilt{};
            for (int k = 0; k < 3; ++k) {
                CHECK(std::abs(norm(apply(cm.t, cm.bob_axes[k])) - cm.singular_values[k]) < 1e-10);
                const BlochVector u = cm.alice_axes[k], v = cm.bob_axes[k];
                const double s = cm.singular_values[k];
                rebuilt(0, 0) += s * u.x * v.x; rebuilt(0, 1) += s * u.x * v.y; rebuilt(0, 2) += s * u.x * v.z;
                rebuilt(1, 0) += s * u.y * v.x; rebuilt(1, 1) += s * u.y * v.y; rebuilt(1, 2) += s * u.y * v.z;
                rebuilt(2, 0) += s * u.z * v.x; rebuilt(2, 1) += s * u.z * v.y; rebuilt(2, 2) += s * u.z * v.z;
            }
            double resid = 0.0;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) resid += std::pow(cm.t(r, c) - rebuilt(r, c), 2);
            CHECK(std::sqrt(resid) < 1e-10);
        }
    }
    SUBCASE("non-qubit states are rejected") {
        CHECK_THROWS_AS(correlation_matrix(isotropic_state(3, 0.5)), validation_error);
    }
}

TEST_CASE("maximal correlations for the pure family") {
    const double gamma = 0.9;
    const auto cm = correlation_matrix(pure_state(gamma));
    CHECK(max_correlation(cm, {0, 0, 1}).first == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_correlation(cm, {1, 0, 0}).first == doctest::Approx(std::sin(gamma)).epsilon(1e-12));

    for (double theta : {0.3, 0.8, 1.4}) {
        const BlochVector n{std::sin(theta), 0.0, std::cos(theta)};
        const double expected =
            std::sqrt(std::pow(std::cos(theta), 2) +
                      std::pow(std::sin(gamma), 2) * std::pow(std::sin(theta), 2));
        CHECK(std::abs(max_correlation(cm, n).first - expected) < 1e-12);
    }

    ComplexMatrix mixed = ComplexMatrix::identity(4);
    mixed *= 0.25;
    const auto zero = correlation_matrix(BipartiteState(DensityOperator(std::move(mixed)), 2, 2));
    const auto [value, axis] = max_correlation(zero, {1, 0, 0});
    CHECK(value == 0.0);
    CHECK(norm(axis - BlochVector{0, 0, 1}) < 1e-15);
}

TEST_CASE("two-setting adapted criterion") {
    SUBCASE("pure states") {
        for (double gamma : {0.0, 0.4, 1.0, std::numbers::pi / 2.0}) {
            const auto crit = r2_criterion(pure_state(gamma));
            CHECK(std::abs(crit.value - std::sqrt(1.0 + std::pow(std::sin(gamma), 2))) < 1e-10);
            const double s = std::sin(gamma);
            CHECK(std::abs(crit.optimal_weights[0] - 1.0 / (1.0 + s)) < 1e-9);
            CHECK(std::abs(crit.optimal_weights[1] - s / (1.0 + s)) < 1e-9);
            CHECK(crit.steerable == (gamma > 0.0));
        }
    }
    SUBCASE("Werner states") {
        for (double eta : {0.3, std::sqrt(2.0) / 2.0 + 1e-3, 0.9}) {
            const auto crit = r2_criterion(isotropic_state(2, eta));
            CHECK(std::abs(crit.value - std::sqrt(2.0) * eta) < 1e-10);
            CHECK(crit.optimal_weights[0] == doctest::Approx(0.5));
            CHECK(crit.steerable == (eta > std::sqrt(2.0) / 2.0));
        }
    }
    SUBCASE("white noise is silent") {
        ComplexMatrix mixed = ComplexMatrix::identity(4);
        mixed *= 0.25;
        const auto crit = r2_criterion(BipartiteState(DensityOperator(std::move(mixed)), 2, 2));
        CHECK(crit.value < 1e-12);
        CHECK_FALSE(crit.steerable);
        CHECK(crit.optimal_weights[0] == doctest::Approx(0.5));
    }
}

TEST_CASE("three-setting adapted criterion") {
    for (double gamma : {0.0, 0.5, 1.1, std::numbers::pi / 2.0}) {
        const auto crit = r3_criterion(pure_state(gamma));
        CHECK(std::abs(crit.value - std::sqrt(1.0 + 2.0 * std::pow(std::sin(gamma), 2))) < 1e-10);
    }
    const auto zero_gamma = r3_criterion(pure_state(0.0));
    CHECK(zero_gamma.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(zero_gamma.steerable);

    for (double eta : {0.4, 0.6}) {
        const auto crit = r3_criterion(isotropic_state(2, eta));
        CHECK(std::abs(crit.value - std::sqrt(3.0) * eta) < 1e-10);
        CHECK(crit.steerable == (eta > std::sqrt(3.0) / 3.0));
    }
}

TEST_CASE("adapted criteria are local-unitary invariants") {
    Rng rng(301);
    const BipartiteState w = pure_state(0.8);
    const double r2 = r2_criterion(w).value;
    const double r3 = r3_criterion(w).value;
    for (int rep = 0; rep < 100; ++rep) {
        const auto conj = local_unitary_conjugate(w, testsupport::random_unitary(rng, 2),
                                                  testsupport::random_unitary(rng, 2));
        CHECK(std::abs(r2_criterion(conj).value - r2) < 1e-10);
        CHECK(std::abs(r3_criterion(conj).value - r3) < 1e-10);
    }
}

TEST_CASE("two settings never beat three") {
    Rng rng(303);
    for (int rep = 0; rep < 30; ++rep) {
        const BipartiteState w(testsupport::random_density(rng, 4), 2, 2);
        CHECK(r2_criterion(w).value <= r3_criterion(w).value + 1e-12);
    }
}

TEST_CASE("grid search never beats the closed-form optimum") {
    Rng rng(305);
    const BipartiteState w(testsupport::random_density(rng, 4), 2, 2);
    const auto cm = correlation_matrix(w);
    const auto crit = r2_criterion(w);

    double best_grid = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double theta = (i + 0.5) * std::numbers::pi / 20.0;
        for (int j = 0; j < 20; ++j) {
            const double phi = j * 2.0 * std::numbers::pi / 20.0;
            const BlochVector n{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                                std::cos(theta)};
            const BlochVector e1 = orthogonal_unit(n);
            const BlochVector e2 = cross(n, e1);
            const double psi = (i * 20 + j) * 0.61803398875 * 2.0 * std::numbers::pi;
            const BlochVector n_perp = normalized(std::cos(psi) * e1 + std::sin(psi) * e2);
            for (int k = 1; k < 50; ++k) {
                const double q = k / 50.0;
                const double value = raw_two_setting_ratio(cm, n, n_perp, q, 1.0 - q);
                best_grid = std::max(best_grid, value);
                CHECK(value <= crit.value + 1e-6);
            }
        }
    }
    // the optimizer's own configuration attains the optimum
    const double attained = raw_two_setting_ratio(cm, crit.optimal_axes[0], crit.optimal_axes[1],
                                                  crit.optimal_weights[0], crit.optimal_weights[1]);
    CHECK(std::abs(attained - crit.value) < 1e-3);
    CHECK(best_grid <= crit.value + 1e-6);
}

TEST_CASE("continuous adapted criterion") {
    SUBCASE("Werner states scale as two eta") {
        for (double eta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const auto crit = r_infinity_criterion(isotropic_state(2, eta), 48);
            CHECK(std::abs(crit.value - 2.0 * eta) < 1e-3);
            CHECK(crit.steerable == (eta > 0.5));
        }
    }
    SUBCASE("the maximally entangled state reaches two") {
        const auto crit = r_infinity_criterion(pure_state(std::numbers::pi / 2.0), 48);
        CHECK(std::abs(crit.value - 2.0) < 1e-3);
    }
    SUBCASE("vanishing correlations report zero") {
        ComplexMatrix mixed = ComplexMatrix::identity(4);
        mixed *= 0.25;
        const auto crit =
            r_infinity_criterion(BipartiteState(DensityOperator(std::move(mixed)), 2, 2), 48);
        CHECK(crit.value == 0.0);
        CHECK_FALSE(crit.steerable);
    }
    SUBCASE("resolution floor") {
        CHECK_THROWS_AS(r_infinity_criterion(pure_state(1.0), 16), validation_error);
    }
}

TEST_CASE("steering and CHSH operators coincide under the weight mapping") {
    Rng rng(401);
    for (int rep = 0; rep < 100; ++rep) {
        const BlochVector n = testsupport::random_unit_vector(rng);
        const BlochVector n_perp = orthogonal_unit(n);
        const BlochVector a = testsupport::random_unit_vector(rng);
        const BlochVector b = testsupport::random_unit_vector(rng);
        const double q = 0.05 + 0.9 * rng.uniform();
        const auto [steer, chsh] = steer_chsh_operator_pair(a, b, n, n_perp, q, 1.0 - q);
        CHECK(max_entry_distance(steer.matrix(), chsh.matrix()) <= 1e-12);

        const double denom = std::sqrt(q * q + (1.0 - q) * (1.0 - q));
        const double c = q / denom, s = (1.0 - q) / denom;
        CHECK(std::abs(c * c + s * s - 1.0) < 1e-12);
    }

    SUBCASE("balanced weights give the standard CHSH normalization") {
        const auto [steer, chsh] = steer_chsh_operator_pair({0, 0, 1}, {1, 0, 0}, {0, 0, 1},
                                                            {1, 0, 0}, 0.5, 0.5);
        ComplexMatrix expected = kron(pauli_z(), pauli_z());
        expected += kron(pauli_x(), pauli_x());
        expected *= 1.0 / std::sqrt(2.0);
        CHECK(max_entry_distance(chsh.matrix(), expected) < 1e-12);
    }

    SUBCASE("non-orthogonal Bob axes are rejected") {
        CHECK_THROWS_AS(
            steer_chsh_operator_pair({0, 0, 1}, {1, 0, 0}, {0, 0, 1}, {0.6, 0, 0.8}, 0.5, 0.5),
            validation_error);
    }
}

TEST_CASE("CHSH settings recovered from steering weights") {
    const double h = std::sqrt(2.0) / 2.0;
    const auto [n1, n2] = chsh_settings_from_steering(0.5, 0.5, {0, 0, 1}, {1, 0, 0});
    CHECK(norm(n1 - BlochVector{h, 0, h}) < 1e-12);
    CHECK(norm(n2 - BlochVector{h, 0, -h}) < 1e-12);

    Rng rng(402);
    for (int rep = 0; rep < 50; ++rep) {
        const BlochVector n = testsupport::random_unit_vector(rng);
        const BlochVector n_perp = orthogonal_unit(n);
        const double q = 0.05 + 0.9 * rng.uniform();
        const auto [m1, m2] = chsh_settings_from_steering(q, 1.0 - q, n, n_perp);
        CHECK(std::abs(norm(m1) - 1.0) < 1e-12);
        CHECK(std::abs(norm(m2) - 1.0) < 1e-12);
        const double denom = std::sqrt(q * q + (1.0 - q) * (1.0 - q));
        CHECK(norm((m1 - m2) - (2.0 * q / denom) * n) < 1e-12);
        CHECK(norm((m1 + m2) - (2.0 * (1.0 - q) / denom) * n_perp) < 1e-12);
    }
}

TEST_CASE("states caught by the two-setting criterion violate CHSH") {
    Rng rng(403);
    int caught = 0;
    for (int rep = 0; rep < 400 && caught < 100; ++rep) {
        // bias the draw toward steerable states
        ComplexMatrix mix = testsupport::random_density(rng, 4).matrix();
        const double lambda = 0.75 + 0.25 * rng.uniform();
        mix *= 1.0 - lambda;
        {
            const double gamma = 0.3 + rng.uniform() * (std::numbers::pi / 2.0 - 0.3);
            ComplexMatrix pure = pure_state(gamma).matrix();
            pure *= lambda;
            mix += pure;
        }
        const BipartiteState w(DensityOperator(std::move(mix)), 2, 2);
        const auto crit = r2_criterion(w);
        if (crit.value <= 1.0) continue;
        ++caught;
        const auto [n1, n2] =
            chsh_settings_from_steering(crit.optimal_weights[0], crit.optimal_weights[1],
                                        crit.optimal_axes[0], crit.optimal_axes[1]);
        CHECK(chsh_expression_value(w, n1, n2) > 2.0);
    }
    CHECK(caught == 100);
}
