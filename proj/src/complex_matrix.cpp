#include "steerkit/complex_matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "steerkit/errors.hpp"

namespace steerkit {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim <= 0) throw validation_error("matrix dimension must be positive");
    entries_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) throw validation_error("matrix dimension mismatch in addition");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) throw validation_error("matrix dimension mismatch in subtraction");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw validation_error("matrix dimension mismatch in product");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (int ia = 0; ia < da; ++ia)
        for (int ja = 0; ja < da; ++ja) {
            const Complex av = a(ia, ja);
            if (av == Complex{0.0, 0.0}) continue;
            for (int ib = 0; ib < db; ++ib)
                for (int jb = 0; jb < db; ++jb) out(ia * db + ib, ja * db + jb) = av * b(ib, jb);
        }
    return out;
}

double max_entry_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw validation_error("matrix dimension mismatch in comparison");
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

std::vector<Complex> matvec(const ComplexMatrix& m, const std::vector<Complex>& v) {
    if (static_cast<int>(v.size()) != m.dim()) throw validation_error("vector length does not match matrix dimension");
    std::vector<Complex> out(v.size(), Complex{0.0, 0.0});
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

ComplexMatrix projector_onto(const std::vector<Complex>& v) {
    const int n = static_cast<int>(v.size());
    double nrm2 = 0.0;
    for (const auto& c : v) nrm2 += std::norm(c);
    if (nrm2 <= 0.0) throw validation_error("cannot project onto the zero vector");
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = v[i] * std::conj(v[j]) / nrm2;
    return out;
}

}  // namespace steerkit
