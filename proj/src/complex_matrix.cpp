#include "catkit/complex_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace catkit {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    entries_.assign(static_cast<std::size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("entry count does not match dimensions");
    check_finite();
}

void ComplexMatrix::check_finite() const {
    for (const Complex& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    return catkit::compose(*this, rhs);
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix addition shape mismatch");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix subtraction shape mismatch");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * factor;
    return out;
}

bool ComplexMatrix::allclose(const ComplexMatrix& other, double tol) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    return max_abs_diff(other) <= tol;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("max_abs_diff shape mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    return worst;
}

std::string format_complex(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
    return buf;
}

std::string ComplexMatrix::to_string() const {
    std::string out = "[";
    for (int r = 0; r < rows_; ++r) {
        out += (r ? ", [" : "[");
        for (int c = 0; c < cols_; ++c) {
            if (c) out += ", ";
            out += format_complex(at(r, c));
        }
        out += "]";
    }
    out += "]";
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out.at(c, r) = std::conj(m.at(r, c));
    return out;
}

ComplexMatrix compose(const ComplexMatrix& g, const ComplexMatrix& f) {
    if (g.cols() != f.rows())
        throw std::invalid_argument("compose: codomain of first-applied morphism (" +
                                    std::to_string(f.rows()) + ") does not match domain of second (" +
                                    std::to_string(g.cols()) + ")");
    ComplexMatrix out(g.rows(), f.cols());
    for (int r = 0; r < g.rows(); ++r)
        for (int k = 0; k < g.cols(); ++k) {
            Complex grk = g.at(r, k);
            if (grk == Complex(0.0, 0.0)) continue;
            for (int c = 0; c < f.cols(); ++c) out.at(r, c) += grk * f.at(k, c);
        }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int r1 = 0; r1 < a.rows(); ++r1)
        for (int c1 = 0; c1 < a.cols(); ++c1) {
            Complex v = a.at(r1, c1);
            for (int r2 = 0; r2 < b.rows(); ++r2)
                for (int c2 = 0; c2 < b.cols(); ++c2)
                    out.at(r1 * b.rows() + r2, c1 * b.cols() + c2) = v * b.at(r2, c2);
        }
    return out;
}

} // namespace catkit
