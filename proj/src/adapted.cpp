#include "steerkit/adapted.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "steerkit/errors.hpp"
#include "steerkit/steering.hpp"

namespace steerkit {

namespace {

constexpr double kRankTol = 1e-12;

void fix_sign(BlochVector& v) {
    double lead = v.x;
    if (std::abs(lead) <= 1e-9) lead = v.y;
    if (std::abs(lead) <= 1e-9) lead = v.z;
    if (lead < 0.0) v = -v;
}

bool lex_greater(BlochVector a, BlochVector b) {
    if (a.x != b.x) return a.x > b.x;
    if (a.y != b.y) return a.y > b.y;
    return a.z > b.z;
}

BlochVector column_as_vector(const ComplexMatrix& m, int col) {
    return {m(0, col).real(), m(1, col).real(), m(2, col).real()};
}

}  // namespace

CorrelationMatrix correlation_matrix(const BipartiteState& w) {
    if (w.dim_a() != 2 || w.dim_b() != 2)
        throw validation_error("correlation matrix requires a two-qubit state");

    const ComplexMatrix* paulis[3] = {&pauli_x(), &pauli_y(), &pauli_z()};
    CorrelationMatrix cm;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            cm.t(i, j) = expectation(w, HermitianOperator(*paulis[i]), HermitianOperator(*paulis[j]));

    // Right singular vectors from t^T t; real symmetric input keeps the
    // Jacobi rotations real.
    ComplexMatrix gram(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += cm.t(k, i) * cm.t(k, j);
            gram(i, j) = s;
        }
    const EigenSystem sys = herm_eigensystem(gram);

    struct Pair {
        double s;
        BlochVector v;
    };
    std::array<Pair, 3> pairs;
    for (int k = 0; k < 3; ++k) {
        BlochVector v = column_as_vector(sys.vectors, 2 - k);
        fix_sign(v);
        pairs[k] = {std::sqrt(std::max(0.0, sys.values[2 - k])), v};
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& a, const Pair& b) { return a.s > b.s; });
    // Within degenerate blocks, order axes lexicographically for stable reports.
    for (int pass = 0; pass < 2; ++pass)
        for (int k = 0; k < 2; ++k)
            if (std::abs(pairs[k].s - pairs[k + 1].s) <= kRankTol &&
                lex_greater(pairs[k + 1].v, pairs[k].v))
                std::swap(pairs[k], pairs[k + 1]);

    for (int k = 0; k < 3; ++k) {
        cm.singular_values[k] = pairs[k].s;
        cm.bob_axes[k] = pairs[k].v;
        if (pairs[k].s > kRankTol) {
            cm.alice_axes[k] = normalized(apply(cm.t, pairs[k].v));
        } else {
            // Null direction: complete the left frame deterministically.
            BlochVector u{0.0, 0.0, 0.0};
            for (const BlochVector seed : {BlochVector{1, 0, 0}, BlochVector{0, 1, 0}, BlochVector{0, 0, 1}}) {
                BlochVector cand = seed;
                for (int m = 0; m < k; ++m) cand = cand - dot(cand, cm.alice_axes[m]) * cm.alice_axes[m];
                if (norm(cand) > 0.5) {
                    u = normalized(cand);
                    break;
                }
            }
            fix_sign(u);
            cm.alice_axes[k] = u;
        }
    }
    return cm;
}

std::pair<double, BlochVector> max_correlation(const CorrelationMatrix& t, BlochVector n) {
    if (std::abs(norm(n) - 1.0) > 1e-12) throw validation_error("Bob axis must be a unit vector");
    const BlochVector tn = apply(t.t, n);
    const double value = norm(tn);
    if (value < 1e-15) return {0.0, BlochVector{0.0, 0.0, 1.0}};
    return {value, (1.0 / value) * tn};
}

namespace {

AdaptedCriterion finite_criterion(const BipartiteState& w, int settings) {
    const CorrelationMatrix cm = correlation_matrix(w);
    AdaptedCriterion crit;
    crit.kind = settings == 2 ? CriterionKind::R2 : CriterionKind::R3;

    double sq = 0.0, sum = 0.0;
    for (int k = 0; k < settings; ++k) {
        sq += cm.singular_values[k] * cm.singular_values[k];
        sum += cm.singular_values[k];
    }
    crit.value = std::sqrt(sq);
    for (int k = 0; k < settings; ++k) {
        crit.optimal_weights.push_back(sum > 0.0 ? cm.singular_values[k] / sum
                                                 : 1.0 / settings);
        crit.optimal_axes.push_back(cm.bob_axes[k]);
        crit.optimal_alice_axes.push_back(cm.alice_axes[k]);
    }
    crit.steerable = crit.value > 1.0 + kSteerableMargin;
    return crit;
}

}  // namespace

AdaptedCriterion r2_criterion(const BipartiteState& w) { return finite_criterion(w, 2); }

AdaptedCriterion r3_criterion(const BipartiteState& w) { return finite_criterion(w, 3); }

AdaptedCriterion r_infinity_criterion(const BipartiteState& w, int resolution) {
    if (resolution < 32) throw validation_error("continuous criterion needs resolution at least 32");
    const CorrelationMatrix cm = correlation_matrix(w);

    AdaptedCriterion crit;
    crit.kind = CriterionKind::RInf;
    double sum = 0.0;
    for (int k = 0; k < 3; ++k) sum += cm.singular_values[k];
    for (int k = 0; k < 3; ++k) {
        crit.optimal_weights.push_back(sum > 0.0 ? cm.singular_values[k] / sum : 1.0 / 3.0);
        crit.optimal_axes.push_back(cm.bob_axes[k]);
        crit.optimal_alice_axes.push_back(cm.alice_axes[k]);
    }
    if (frobenius_norm(cm.t) <= 1e-12) {
        crit.value = 0.0;
        crit.steerable = false;
        return crit;
    }

    DirectionDensity density = DirectionDensity::weighted(cm.t);
    density.cos_nodes = resolution;
    density.phi_nodes = 2 * resolution;

    DirectionDensity doubled = density;
    doubled.cos_nodes *= 2;
    doubled.phi_nodes *= 2;

    const double f1 = density_weighted_correlation(density, cm.t);
    const double f2 = density_weighted_correlation(doubled, cm.t);
    if (std::abs(f1 - f2) > 1e-3 * std::max(std::abs(f2), 1e-9))
        throw quadrature_error("fidelity quadrature failed 1e-3 relative certification");

    const double g = continuous_nst(density);
    crit.value = f2 / g;
    crit.steerable = crit.value > 1.0 + kSteerableMargin;
    return crit;
}

namespace {

void check_bob_frame(BlochVector n, BlochVector n_perp, double q_n, double q_perp) {
    if (std::abs(norm(n) - 1.0) > 1e-12 || std::abs(norm(n_perp) - 1.0) > 1e-12)
        throw validation_error("Bob axes must be unit vectors");
    if (std::abs(dot(n, n_perp)) > 1e-10) throw validation_error("Bob axes must be orthogonal");
    if (q_n <= 0.0 || q_perp <= 0.0 || std::abs(q_n + q_perp - 1.0) > 1e-12)
        throw validation_error("setting weights must be positive and sum to 1");
}

}  // namespace

std::pair<HermitianOperator, HermitianOperator> steer_chsh_operator_pair(
    BlochVector a_axis, BlochVector b_axis, BlochVector n, BlochVector n_perp, double q_n,
    double q_perp) {
    check_bob_frame(n, n_perp, q_n, q_perp);
    if (std::abs(norm(a_axis) - 1.0) > 1e-12 || std::abs(norm(b_axis) - 1.0) > 1e-12)
        throw validation_error("Alice axes must be unit vectors");

    const ComplexMatrix first = kron(pauli_combination(a_axis), pauli_combination(n));
    const ComplexMatrix second = kron(pauli_combination(b_axis), pauli_combination(n_perp));

    const double denom = std::sqrt(q_n * q_n + q_perp * q_perp);
    ComplexMatrix steer = first;
    steer *= q_n / denom;
    {
        ComplexMatrix tail = second;
        tail *= q_perp / denom;
        steer += tail;
    }

    const double cos_theta = q_n / denom;
    const double sin_theta = q_perp / denom;
    ComplexMatrix chsh = first;
    chsh *= cos_theta;
    {
        ComplexMatrix tail = second;
        tail *= sin_theta;
        chsh += tail;
    }
    return {HermitianOperator(std::move(steer)), HermitianOperator(std::move(chsh))};
}

std::pair<BlochVector, BlochVector> chsh_settings_from_steering(double q_n, double q_perp,
                                                                BlochVector n, BlochVector n_perp) {
    check_bob_frame(n, n_perp, q_n, q_perp);
    const double denom = std::sqrt(q_n * q_n + q_perp * q_perp);
    const double cos_theta = q_n / denom;
    const double sin_theta = q_perp / denom;
    const BlochVector n1 = cos_theta * n + sin_theta * n_perp;
    const BlochVector n2 = -1.0 * (cos_theta * n) + sin_theta * n_perp;
    return {n1, n2};
}

double chsh_expression_value(const BipartiteState& w, BlochVector n1, BlochVector n2) {
    const CorrelationMatrix cm = correlation_matrix(w);
    return norm(apply(cm.t, n1 - n2)) + norm(apply(cm.t, n1 + n2));
}

}  // namespace steerkit
