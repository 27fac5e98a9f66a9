#include "steerkit/steering.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "steerkit/errors.hpp"

namespace steerkit {

Assemblage::Assemblage(int dim, std::vector<std::vector<ComplexMatrix>> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.empty()) throw validation_error("assemblage needs at least one setting");
    const ComplexMatrix* reference = nullptr;
    ComplexMatrix marginal(dim_);
    for (const auto& row : entries_) {
        if (static_cast<int>(row.size()) != dim_)
            throw validation_error("assemblage row does not have d outcomes");
        ComplexMatrix sum(dim_);
        double prob = 0.0;
        for (const auto& op : row) {
            if (op.dim() != dim_) throw validation_error("assemblage entry dimension mismatch");
            if (op.hermiticity_defect() > kProjectorTol)
                throw validation_error("assemblage entry is not Hermitian");
            if (min_eigenvalue(op) < -kProjectorTol)
                throw validation_error("assemblage entry is not positive");
            sum += op;
            prob += op.trace().real();
        }
        if (std::abs(prob - 1.0) > kProjectorTol)
            throw validation_error("assemblage outcome probabilities sum to " + std::to_string(prob));
        if (reference == nullptr) {
            marginal = sum;
            reference = &marginal;
        } else if (max_entry_distance(*reference, sum) > kProjectorTol) {
            throw validation_error("assemblage violates no-signaling across settings");
        }
    }
}

double Assemblage::outcome_probability(int mu, int a) const { return entries_[mu][a].trace().real(); }

DensityOperator Assemblage::bob_marginal() const {
    ComplexMatrix sum(dim_);
    for (int a = 0; a < dim_; ++a) sum += entries_[0][a];
    sum *= 1.0 / sum.trace().real();
    return DensityOperator(std::move(sum));
}

BipartiteState maximally_entangled_state(int d) {
    ComplexMatrix m(d * d);
    const double amp = 1.0 / d;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i * d + i, j * d + j) = amp;
    return BipartiteState(DensityOperator(std::move(m)), d, d);
}

BipartiteState isotropic_state(int d, double eta) {
    if (d < 2) throw validation_error("isotropic state needs dimension at least 2");
    const double lo = -1.0 / (d * d - 1.0);
    if (eta < lo - 1e-12 || eta > 1.0 + 1e-12)
        throw validation_error("isotropic parameter " + std::to_string(eta) + " outside positivity range");
    ComplexMatrix m = maximally_entangled_state(d).matrix();
    m *= eta;
    const double background = (1.0 - eta) / (d * d);
    for (int i = 0; i < d * d; ++i) m(i, i) += background;
    return BipartiteState(DensityOperator(std::move(m)), d, d);
}

BipartiteState pure_state(double gamma) {
    const double c = std::cos(gamma / 2.0), s = std::sin(gamma / 2.0);
    std::vector<Complex> psi{c, 0.0, 0.0, s};
    return BipartiteState(DensityOperator(projector_onto(psi)), 2, 2);
}

HermitianOperator depolarize(const HermitianOperator& a, double eta, int d) {
    if (eta < 0.0 || eta > 1.0) throw validation_error("depolarizing strength must lie in [0, 1]");
    if (a.dim() != d) throw validation_error("depolarizing dimension mismatch");
    ComplexMatrix m = a.matrix();
    m *= eta;
    const double background = (1.0 - eta) * a.matrix().trace().real() / d;
    for (int i = 0; i < d; ++i) m(i, i) += background;
    return HermitianOperator(std::move(m));
}

Assemblage assemblage_from_state(const BipartiteState& w, const MeasurementAssembly& alice) {
    if (alice.dim() != w.dim_a())
        throw validation_error("Alice's measurement dimension does not match the state");
    const int db = w.dim_b();
    std::vector<std::vector<ComplexMatrix>> rows;
    rows.reserve(alice.size());
    const ComplexMatrix eye_b = ComplexMatrix::identity(db);
    for (int mu = 0; mu < alice.size(); ++mu) {
        std::vector<ComplexMatrix> row;
        row.reserve(alice.dim());
        for (int a = 0; a < alice.dim(); ++a) {
            const ComplexMatrix op = kron(alice.measurement(mu).projector(a), eye_b) * w.matrix();
            row.push_back(partial_trace_first(op, w.dim_a(), db));
        }
        rows.push_back(std::move(row));
    }
    return Assemblage(db, std::move(rows));
}

double averaged_fidelity(const BipartiteState& w, const MeasurementAssembly& alice,
                         const MeasurementAssembly& bob) {
    if (alice.size() != bob.size())
        throw validation_error("Alice and Bob must use the same number of settings");
    double f = 0.0;
    for (int mu = 0; mu < bob.size(); ++mu) {
        double setting = 0.0;
        for (int a = 0; a < bob.dim(); ++a)
            setting += expectation(w, HermitianOperator(alice.measurement(mu).projector(a)),
                                   HermitianOperator(bob.measurement(mu).projector(a)));
        f += bob.weight(mu) * setting;
    }
    return f;
}

SteeringVerdict verdict(const BipartiteState& w, const MeasurementAssembly& alice,
                        const MeasurementAssembly& bob) {
    const ThresholdReport threshold = general_nst(bob);
    SteeringVerdict v;
    v.f_avg = averaged_fidelity(w, alice, bob);
    v.f_nst = threshold.f_nst;
    v.g_avg = (bob.dim() * v.f_avg - 1.0) / (bob.dim() - 1.0);
    v.g_nst = threshold.g_nst;
    v.ratio = v.f_avg / v.f_nst;
    v.steerable = v.f_avg > v.f_nst + kSteerableMargin;
    return v;
}

double visibility_reference(const VisibilityKind& kind) {
    if (const auto* rp = std::get_if<RotatedPairKind>(&kind))
        return 1.0 / (std::abs(std::cos(rp->theta)) + std::abs(std::sin(rp->theta)));
    if (const auto* mub = std::get_if<MubPairKind>(&kind)) {
        if (mub->d < 2) throw validation_error("visibility reference needs dimension at least 2");
        return 0.5 * (1.0 + 1.0 / (std::sqrt(static_cast<double>(mub->d)) + 1.0));
    }
    return 0.5544;
}

PlanarLhsWitness planar_lhs_witness(double alpha, int resolution) {
    if (resolution < 64) throw validation_error("witness resolution must be at least 64");

    // Hidden variable phi uniform on the circle, local states on the
    // planar ring, '+' response on the half circle centered at alpha.
    // Each cell integrates the indicator exactly and the local state at
    // the midpoint of the covered arc.
    LhsModel model;
    model.phi.reserve(resolution);
    model.states.reserve(resolution);
    model.response_plus.reserve(resolution);

    const double two_pi = 2.0 * std::numbers::pi;
    const double cell = two_pi / resolution;
    const auto planar_state = [](double phi) {
        return bloch_to_density({std::cos(phi), std::sin(phi), 0.0});
    };

    // '+' arc is [alpha - pi/2, alpha + pi/2] modulo 2 pi.
    const double arc_lo = alpha - std::numbers::pi / 2.0;
    const double arc_hi = alpha + std::numbers::pi / 2.0;
    const auto plus_overlap = [&](double lo, double hi, double& mid) {
        // Overlap of [lo, hi] with the '+' arc, unwrapped onto neighboring periods.
        double best_len = 0.0;
        for (int shift = -1; shift <= 1; ++shift) {
            const double a = arc_lo + shift * two_pi;
            const double b = arc_hi + shift * two_pi;
            const double l = std::max(lo, a), h = std::min(hi, b);
            if (h > l && h - l > best_len) {
                best_len = h - l;
                mid = 0.5 * (l + h);
            }
        }
        return best_len;
    };

    ComplexMatrix plus_op(2), minus_op(2);
    double p_plus = 0.0, p_minus = 0.0;
    for (int j = 0; j < resolution; ++j) {
        const double lo = j * cell, hi = lo + cell;
        const double mid = 0.5 * (lo + hi);
        double plus_mid = mid;
        const double len_plus = plus_overlap(lo, hi, plus_mid);
        const double len_minus = cell - len_plus;

        model.phi.push_back(mid);
        model.states.push_back(planar_state(mid));
        model.response_plus.push_back(len_plus / cell);

        if (len_plus > 0.0) {
            ComplexMatrix term = planar_state(plus_mid).matrix();
            term *= len_plus / two_pi;
            plus_op += term;
            p_plus += len_plus / two_pi;
        }
        if (len_minus > 0.0) {
            // The '-' piece is whichever gap the '+' interval leaves in the cell.
            double minus_mid = mid;
            if (len_plus > 0.0) {
                const double p_lo = plus_mid - 0.5 * len_plus;
                const double p_hi = plus_mid + 0.5 * len_plus;
                minus_mid = (p_lo - lo > hi - p_hi) ? 0.5 * (lo + p_lo) : 0.5 * (p_hi + hi);
            }
            ComplexMatrix term = planar_state(minus_mid).matrix();
            term *= len_minus / two_pi;
            minus_op += term;
            p_minus += len_minus / two_pi;
        }
    }

    // Reference: p(s) rho(s) = (I +- (2/pi) n(alpha).sigma)/4.
    const BlochVector n_alpha{std::cos(alpha), std::sin(alpha), 0.0};
    const double shrink = 2.0 / std::numbers::pi;
    ComplexMatrix ref_plus = ComplexMatrix::identity(2);
    ref_plus += pauli_combination(shrink * n_alpha);
    ref_plus *= 0.25;
    ComplexMatrix ref_minus = ComplexMatrix::identity(2);
    ref_minus -= pauli_combination(shrink * n_alpha);
    ref_minus *= 0.25;

    const double err = std::max({max_entry_distance(plus_op, ref_plus),
                                 max_entry_distance(minus_op, ref_minus),
                                 std::abs(p_plus - 0.5), std::abs(p_minus - 0.5)});
    if (err > 1e-4)
        throw quadrature_error("hidden-state reconstruction missed tolerance: error " +
                               std::to_string(err));

    PlanarLhsWitness witness{DensityOperator(plus_op * (1.0 / plus_op.trace().real())),
                             DensityOperator(minus_op * (1.0 / minus_op.trace().real())),
                             p_plus, p_minus, std::move(model)};
    return witness;
}

}  // namespace steerkit
