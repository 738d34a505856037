#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace catkit {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. A morphism dom -> cod is stored as a
// cod x dom matrix, so compose(g, f) is the ordinary product g * f.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(int rows, int cols, std::vector<Complex> entries);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Complex& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix scaled(Complex factor) const;

    bool allclose(const ComplexMatrix& other, double tol) const;
    double max_abs_diff(const ComplexMatrix& other) const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Complex> entries_;

    void check_finite() const;
};

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

// g after f; throws std::invalid_argument on a dimension mismatch.
ComplexMatrix compose(const ComplexMatrix& g, const ComplexMatrix& f);

// Kronecker product in row-major block order: entry ((r1,r2),(c1,c2)) lands at
// (r1*rows(b)+r2, c1*cols(b)+c2). Strictly associative at the value level.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

std::string format_complex(Complex z);

} // namespace catkit
