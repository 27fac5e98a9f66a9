#pragma once

#include <utility>
#include <vector>

#include "steerkit/complex_matrix.hpp"

namespace steerkit {

inline constexpr double kHermTol = 1e-12;      // max-entry distance to the adjoint
inline constexpr double kTraceTol = 1e-12;     // |tr - 1| for density operators
inline constexpr double kPositivityTol = 1e-10;  // admissible negative eigenvalue

/// A matrix equal to its conjugate transpose within kHermTol.
class HermitianOperator {
public:
    explicit HermitianOperator(ComplexMatrix m);

    int dim() const { return matrix_.dim(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    ComplexMatrix matrix_;
};

/// Unit-trace positive Hermitian operator.
class DensityOperator {
public:
    explicit DensityOperator(HermitianOperator op);
    explicit DensityOperator(ComplexMatrix m) : DensityOperator(HermitianOperator(std::move(m))) {}

    int dim() const { return op_.dim(); }
    const HermitianOperator& op() const { return op_; }
    const ComplexMatrix& matrix() const { return op_.matrix(); }

private:
    HermitianOperator op_;
};

/// Density operator on H_A (x) H_B with declared subsystem dimensions.
class BipartiteState {
public:
    BipartiteState(DensityOperator state, int dim_a, int dim_b);

    const DensityOperator& state() const { return state_; }
    const ComplexMatrix& matrix() const { return state_.matrix(); }
    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }

private:
    DensityOperator state_;
    int dim_a_;
    int dim_b_;
};

/// Full spectrum of a Hermitian matrix, eigenvalues ascending,
/// eigenvectors as the matching columns of `vectors`.
struct EigenSystem {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic Jacobi diagonalization. Deterministic; off-diagonal norm
/// driven below 1e-12 relative to the matrix scale.
EigenSystem herm_eigensystem(const ComplexMatrix& hermitian);

/// Largest eigenvalue with a unit eigenvector; residual |Hv - lv| <= 1e-10.
std::pair<double, std::vector<Complex>> herm_eig_max(const HermitianOperator& h);

double min_eigenvalue(const ComplexMatrix& hermitian);

/// Tr_A over the first subsystem of a dim_a*dim_b square matrix.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, int dim_a, int dim_b);

DensityOperator partial_trace_A(const BipartiteState& w);

/// Transpose on the second subsystem only.
ComplexMatrix partial_transpose_second(const ComplexMatrix& m, int dim_a, int dim_b);

/// Tr[w (a (x) b)]; throws if the trace picks up an imaginary part above 1e-9.
double expectation(const BipartiteState& w, const HermitianOperator& a, const HermitianOperator& b);

}  // namespace steerkit
