#pragma once

#include <complex>
#include <vector>

namespace steerkit {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
///
/// Everything in this library lives in Hilbert spaces of dimension <= 16,
/// so the representation is deliberately plain: a dim*dim vector of
/// double-precision complex entries and loops.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& operator()(int row, int col) { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
    const Complex& operator()(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);
    ComplexMatrix& operator*=(double scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= s; }
    friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

    /// Matrix product.
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    /// Max-entry distance to the conjugate transpose.
    double hermiticity_defect() const;

    const std::vector<Complex>& entries() const { return entries_; }

private:
    int dim_ = 0;
    std::vector<Complex> entries_;
};

/// Tensor product, first factor owning the most significant index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |a_ij - b_ij|.
double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// m times a column vector.
std::vector<Complex> matvec(const ComplexMatrix& m, const std::vector<Complex>& v);

/// Rank-one projector |v><v| / <v|v>.
ComplexMatrix projector_onto(const std::vector<Complex>& v);

}  // namespace steerkit
