#pragma once

#include <variant>
#include <vector>

#include "steerkit/measurement.hpp"
#include "steerkit/operators.hpp"
#include "steerkit/threshold.hpp"

namespace steerkit {

/// Table of unnormalized conditional states rho~(a|mu) on Bob's side.
class Assemblage {
public:
    Assemblage(int dim, std::vector<std::vector<ComplexMatrix>> entries);

    int dim() const { return dim_; }
    int settings() const { return static_cast<int>(entries_.size()); }
    const ComplexMatrix& entry(int mu, int a) const { return entries_[mu][a]; }

    /// p(a|mu) = Tr rho~(a|mu).
    double outcome_probability(int mu, int a) const;

    /// The common marginal sum_a rho~(a|mu).
    DensityOperator bob_marginal() const;

private:
    int dim_;
    std::vector<std::vector<ComplexMatrix>> entries_;
};

struct SteeringVerdict {
    double f_avg = 0.0;
    double f_nst = 0.0;
    double g_avg = 0.0;
    double g_nst = 0.0;
    double ratio = 0.0;
    bool steerable = false;
};

/// Strictness margin on every steerable flag; the criteria are strict
/// inequalities and float equality at a threshold must not flap.
inline constexpr double kSteerableMargin = 1e-12;

/// eta |phi+><phi+| + (1 - eta) I/d^2; eta within the positivity range
/// [-1/(d^2-1), 1].
BipartiteState isotropic_state(int d, double eta);

/// Projector onto cos(gamma/2)|00> + sin(gamma/2)|11>.
BipartiteState pure_state(double gamma);

/// eta A + (1 - eta) Tr(A) I/d.
HermitianOperator depolarize(const HermitianOperator& a, double eta, int d);

/// Maximally entangled |phi+_d><phi+_d|.
BipartiteState maximally_entangled_state(int d);

/// rho~(a|mu) = Tr_A[(P^a_mu (x) I) w].
Assemblage assemblage_from_state(const BipartiteState& w, const MeasurementAssembly& alice);

/// sum_mu q_mu sum_a <P^a_mu (x) Q^a_mu>, weights from Bob's assembly.
double averaged_fidelity(const BipartiteState& w, const MeasurementAssembly& alice,
                         const MeasurementAssembly& bob);

/// Averaged fidelity against the exact threshold of Bob's assembly.
SteeringVerdict verdict(const BipartiteState& w, const MeasurementAssembly& alice,
                        const MeasurementAssembly& bob);

struct RotatedPairKind { double theta; };
struct MubPairKind { int d; };
struct FourVectorKind {};
using VisibilityKind = std::variant<RotatedPairKind, MubPairKind, FourVectorKind>;

/// Published critical-visibility values for the supported families.
double visibility_reference(const VisibilityKind& kind);

/// Discrete hidden-variable model on the circle: cells of equal weight,
/// planar local states at the cell centers, and the response mass each
/// cell contributes to the '+' outcome.
struct LhsModel {
    std::vector<double> phi;
    std::vector<DensityOperator> states;
    std::vector<double> response_plus;  // per-cell p(+|alpha, phi), in [0, 1]
};

/// Reconstruction of the half-circle response model at measurement angle
/// alpha: normalized conditional states with their outcome probabilities.
/// The unnormalized operators p(s) rho(s) are checked against
/// (I +- (2/pi) n(alpha).sigma)/4 at tolerance 1e-4 before returning.
struct PlanarLhsWitness {
    DensityOperator state_plus;
    DensityOperator state_minus;
    double prob_plus = 0.0;
    double prob_minus = 0.0;
    LhsModel model;
};

PlanarLhsWitness planar_lhs_witness(double alpha, int resolution);

}  // namespace steerkit
