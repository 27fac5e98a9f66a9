#include "steerkit/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "steerkit/errors.hpp"

namespace steerkit {

HermitianOperator::HermitianOperator(ComplexMatrix m) : matrix_(std::move(m)) {
    if (matrix_.dim() == 0) throw validation_error("empty matrix is not a Hermitian operator");
    const double defect = matrix_.hermiticity_defect();
    if (defect > kHermTol)
        throw validation_error("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
}

DensityOperator::DensityOperator(HermitianOperator op) : op_(std::move(op)) {
    const double tr = op_.matrix().trace().real();
    if (std::abs(tr - 1.0) > kTraceTol)
        throw validation_error("density operator trace " + std::to_string(tr) + " is not 1");
    const double lo = min_eigenvalue(op_.matrix());
    if (lo < -kPositivityTol)
        throw validation_error("density operator has negative eigenvalue " + std::to_string(lo));
}

BipartiteState::BipartiteState(DensityOperator state, int dim_a, int dim_b)
    : state_(std::move(state)), dim_a_(dim_a), dim_b_(dim_b) {
    if (dim_a <= 0 || dim_b <= 0 || dim_a * dim_b != state_.dim())
        throw validation_error("subsystem dimensions do not multiply to the state dimension");
}

namespace {

// One two-sided Jacobi rotation zeroing a(p,q); accumulates into v.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
    const Complex apq = a(p, q);
    const double abs_apq = std::abs(apq);
    if (abs_apq == 0.0) return;

    const Complex phase = apq / abs_apq;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * abs_apq);
    const double sign_tau = tau >= 0.0 ? 1.0 : -1.0;
    const double t = -sign_tau / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = a.dim();
    // A <- A J, with J[p][p]=c, J[p][q]=-s*phase, J[q][p]=s*conj(phase), J[q][q]=c.
    for (int r = 0; r < n; ++r) {
        const Complex x = a(r, p), y = a(r, q);
        a(r, p) = c * x + s * std::conj(phase) * y;
        a(r, q) = -s * phase * x + c * y;
    }
    // A <- J^H A
    for (int col = 0; col < n; ++col) {
        const Complex x = a(p, col), y = a(q, col);
        a(p, col) = c * x + s * phase * y;
        a(q, col) = -s * std::conj(phase) * x + c * y;
    }
    for (int r = 0; r < n; ++r) {
        const Complex x = v(r, p), y = v(r, q);
        v(r, p) = c * x + s * std::conj(phase) * y;
        v(r, q) = -s * phase * x + c * y;
    }
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenSystem herm_eigensystem(const ComplexMatrix& hermitian) {
    if (hermitian.hermiticity_defect() > 1e-9)
        throw validation_error("eigensystem requested for a non-Hermitian matrix");

    const int n = hermitian.dim();
    ComplexMatrix a = hermitian;
    // Symmetrize so round-off in the input cannot survive the sweeps.
    for (int i = 0; i < n; ++i) {
        a(i, i) = Complex{a(i, i).real(), 0.0};
        for (int j = i + 1; j < n; ++j) {
            const Complex m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double tol = 1e-12 * std::max(1.0, a.frobenius_norm());
    for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return diag[i] < diag[j]; });

    EigenSystem sys;
    sys.values.resize(n);
    sys.vectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        sys.values[k] = diag[order[k]];
        for (int r = 0; r < n; ++r) sys.vectors(r, k) = v(r, order[k]);
    }
    return sys;
}

std::pair<double, std::vector<Complex>> herm_eig_max(const HermitianOperator& h) {
    const EigenSystem sys = herm_eigensystem(h.matrix());
    const int n = h.dim();
    std::vector<Complex> vec(n);
    for (int r = 0; r < n; ++r) vec[r] = sys.vectors(r, n - 1);
    const double lambda = sys.values[n - 1];

    const auto hv = matvec(h.matrix(), vec);
    double resid = 0.0;
    for (int r = 0; r < n; ++r) resid += std::norm(hv[r] - lambda * vec[r]);
    if (std::sqrt(resid) > 1e-10)
        throw validation_error("eigenpair residual exceeds 1e-10; Jacobi sweep failed to converge");
    return {lambda, vec};
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
    return herm_eigensystem(hermitian).values.front();
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, int dim_a, int dim_b) {
    if (m.dim() != dim_a * dim_b)
        throw validation_error("partial trace dimensions do not match the matrix");
    ComplexMatrix out(dim_b);
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_b; ++j)
            for (int jp = 0; jp < dim_b; ++jp) out(j, jp) += m(i * dim_b + j, i * dim_b + jp);
    return out;
}

DensityOperator partial_trace_A(const BipartiteState& w) {
    return DensityOperator(partial_trace_first(w.matrix(), w.dim_a(), w.dim_b()));
}

ComplexMatrix partial_transpose_second(const ComplexMatrix& m, int dim_a, int dim_b) {
    if (m.dim() != dim_a * dim_b)
        throw validation_error("partial transpose dimensions do not match the matrix");
    ComplexMatrix out(dim_a * dim_b);
    for (int ia = 0; ia < dim_a; ++ia)
        for (int ja = 0; ja < dim_a; ++ja)
            for (int ib = 0; ib < dim_b; ++ib)
                for (int jb = 0; jb < dim_b; ++jb)
                    out(ia * dim_b + jb, ja * dim_b + ib) = m(ia * dim_b + ib, ja * dim_b + jb);
    return out;
}

double expectation(const BipartiteState& w, const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != w.dim_a() || b.dim() != w.dim_b())
        throw validation_error("operator dimensions do not match the bipartite split");
    const ComplexMatrix ab = kron(a.matrix(), b.matrix());
    const ComplexMatrix& m = w.matrix();
    Complex tr{0.0, 0.0};
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) tr += m(r, c) * ab(c, r);
    if (std::abs(tr.imag()) > 1e-9)
        throw validation_error("expectation value has imaginary part " + std::to_string(tr.imag()));
    return tr.real();
}

}  // namespace steerkit
