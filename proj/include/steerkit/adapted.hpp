#pragma once

#include <array>
#include <utility>
#include <vector>

#include "steerkit/bloch.hpp"
#include "steerkit/direction_density.hpp"
#include "steerkit/operators.hpp"

namespace steerkit {

/// Pauli-Pauli correlation matrix t_ij = <sigma_i (x) sigma_j> of a
/// two-qubit state, with its singular value decomposition. Singular values
/// descend; bob_axes are right singular vectors, alice_axes the matching
/// left ones, so |t . bob_axes[k]| = s_k and alice_axes[k] is the best
/// Alice direction for that Bob axis.
struct CorrelationMatrix {
    Mat3 t;
    std::array<double, 3> singular_values{};
    std::array<BlochVector, 3> bob_axes{};
    std::array<BlochVector, 3> alice_axes{};
};

enum class CriterionKind { R2, R3, RInf };

struct AdaptedCriterion {
    CriterionKind kind = CriterionKind::R2;
    double value = 0.0;
    std::vector<double> optimal_weights;
    std::vector<BlochVector> optimal_axes;
    std::vector<BlochVector> optimal_alice_axes;
    bool steerable = false;
};

CorrelationMatrix correlation_matrix(const BipartiteState& w);

/// Best Alice correlation for Bob axis n: (|t n|, t n / |t n|), with the
/// z axis returned when t n vanishes.
std::pair<double, BlochVector> max_correlation(const CorrelationMatrix& t, BlochVector n);

/// Two-setting optimum sqrt(s1^2 + s2^2) with weights proportional to the
/// singular values.
AdaptedCriterion r2_criterion(const BipartiteState& w);

/// Three-setting optimum sqrt(s1^2 + s2^2 + s3^2).
AdaptedCriterion r3_criterion(const BipartiteState& w);

/// Continuous-setting ratio with density q(n) proportional to |t n|;
/// value 0 when the correlation matrix vanishes.
AdaptedCriterion r_infinity_criterion(const BipartiteState& w, int resolution);

/// The steering-ratio operator and the CHSH operator produced by the
/// weight-to-angle mapping; equal entries up to round-off.
std::pair<HermitianOperator, HermitianOperator> steer_chsh_operator_pair(
    BlochVector a_axis, BlochVector b_axis, BlochVector n, BlochVector n_perp, double q_n,
    double q_perp);

/// Bob's CHSH settings implied by the same mapping.
std::pair<BlochVector, BlochVector> chsh_settings_from_steering(double q_n, double q_perp,
                                                                BlochVector n, BlochVector n_perp);

/// CHSH expression |t (n1 - n2)| + |t (n1 + n2)| with Alice axes chosen
/// optimally per Bob combination.
double chsh_expression_value(const BipartiteState& w, BlochVector n1, BlochVector n2);

}  // namespace steerkit
