#include "catkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace catkit {

namespace {

// Returns the row-echelon working copy after elimination, along with the rank.
int eliminate(ComplexMatrix& w, double tol) {
    int r = 0;
    for (int c = 0; c < w.cols() && r < w.rows(); ++c) {
        int pivot = -1;
        double best = tol;
        for (int i = r; i < w.rows(); ++i) {
            double mag = std::abs(w.at(i, c));
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < w.cols(); ++j) std::swap(w.at(pivot, j), w.at(r, j));
        for (int i = r + 1; i < w.rows(); ++i) {
            Complex factor = w.at(i, c) / w.at(r, c);
            if (factor == Complex(0.0, 0.0)) continue;
            for (int j = c; j < w.cols(); ++j) w.at(i, j) -= factor * w.at(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace

int rank(const ComplexMatrix& m, double tol) {
    ComplexMatrix w = m;
    return eliminate(w, tol);
}

Complex determinant(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix must be square");
    int n = m.rows();
    ComplexMatrix w = m;
    Complex det(1.0, 0.0);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        double best = 0.0;
        for (int i = c; i < n; ++i) {
            double mag = std::abs(w.at(i, c));
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        if (pivot < 0) return Complex(0.0, 0.0);
        if (pivot != c) {
            for (int j = 0; j < n; ++j) std::swap(w.at(pivot, j), w.at(c, j));
            det = -det;
        }
        det *= w.at(c, c);
        for (int i = c + 1; i < n; ++i) {
            Complex factor = w.at(i, c) / w.at(c, c);
            for (int j = c; j < n; ++j) w.at(i, j) -= factor * w.at(c, j);
        }
    }
    return det;
}

ComplexMatrix inverse(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
    int n = m.rows();
    ComplexMatrix w = m;
    ComplexMatrix inv = ComplexMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        double best = tol;
        for (int i = c; i < n; ++i) {
            double mag = std::abs(w.at(i, c));
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        if (pivot < 0) throw std::invalid_argument("inverse: matrix is singular within tolerance");
        if (pivot != c)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(pivot, j), w.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        Complex d = w.at(c, c);
        for (int j = 0; j < n; ++j) {
            w.at(c, j) /= d;
            inv.at(c, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == c) continue;
            Complex factor = w.at(i, c);
            if (factor == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= factor * w.at(c, j);
                inv.at(i, j) -= factor * inv.at(c, j);
            }
        }
    }
    return inv;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
    int n = m.rows();
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));

    double frob = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) frob += std::norm(a.at(i, j));
    const double stop = 1e-24 * std::max(1.0, frob);

    // Complex Jacobi: zero out a_pq with a unitary rotation in the (p,q) plane.
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(a.at(p, q));
        if (off < stop) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                Complex apq = a.at(p, q);
                double mag = std::abs(apq);
                if (mag < 1e-15) continue;
                double app = a.at(p, p).real();
                double aqq = a.at(q, q).real();
                Complex phase = apq / mag;
                double theta = 0.5 * std::atan2(2.0 * mag, app - aqq);
                double c = std::cos(theta), s = std::sin(theta);
                Complex sp = s * phase;
                // Columns p and q of the rotation: [c, -conj(sp); sp, c].
                for (int k = 0; k < n; ++k) {
                    Complex akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = akp * c + akq * std::conj(sp);
                    a.at(k, q) = -akp * sp + akq * c;
                }
                for (int k = 0; k < n; ++k) {
                    Complex apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = apk * c + aqk * sp;
                    a.at(q, k) = -apk * std::conj(sp) + aqk * c;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a.at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    ComplexMatrix adj = adjoint(m);
    ComplexMatrix gram = (m.rows() <= m.cols()) ? compose(m, adj) : compose(adj, m);
    std::vector<double> eig = hermitian_eigenvalues(gram);
    // Gram eigenvalues carry absolute noise of a few machine epsilons times
    // the largest eigenvalue; taking square roots would inflate that band to
    // about 1e-8. Eigenvalues inside the band are numerically zero, so clamp
    // them before the root rather than after it.
    double largest = 0.0;
    for (double l : eig) largest = std::max(largest, std::abs(l));
    double floor = largest * 256.0 * std::numeric_limits<double>::epsilon();
    std::vector<double> sv;
    sv.reserve(eig.size());
    for (auto it = eig.rbegin(); it != eig.rend(); ++it)
        sv.push_back(*it <= floor ? 0.0 : std::sqrt(*it));
    return sv;
}

} // namespace catkit
