#include "catkit/finhilb.hpp"

#include "catkit/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace catkit::finhilb {

namespace {

double norm_of(const std::vector<Complex>& coeffs) {
    double s = 0.0;
    for (const Complex& z : coeffs) s += std::norm(z);
    return std::sqrt(s);
}

} // namespace

StateVector::StateVector(int dim, std::vector<Complex> coeffs)
    : dim_(dim), coeffs_(std::move(coeffs)) {
    if (dim < 1) throw std::invalid_argument("state dimension must be at least 1");
    if (coeffs_.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("coefficient count does not match dimension");
    double n = norm_of(coeffs_);
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("state vector must have unit norm (got " + std::to_string(n) + ")");
}

StateVector StateVector::normalized(int dim, std::vector<Complex> coeffs) {
    double n = norm_of(coeffs);
    if (n < 1e-12) throw std::invalid_argument("cannot normalize the zero vector");
    for (Complex& z : coeffs) z /= n;
    return StateVector(dim, std::move(coeffs));
}

bool StateVector::phase_equal(const StateVector& other, double tol) const {
    if (dim_ != other.dim_) return false;
    return std::abs(std::abs(inner_product(*this, other)) - 1.0) <= tol;
}

std::string StateVector::to_string() const {
    std::string out = "(";
    for (int i = 0; i < dim_; ++i) {
        if (i) out += ", ";
        out += format_complex(coeffs_[static_cast<std::size_t>(i)]);
    }
    return out + ")";
}

ComplexMatrix ket(const StateVector& psi) {
    return ComplexMatrix(psi.dim(), 1, psi.coeffs());
}

Complex inner_product(const StateVector& phi, const StateVector& psi) {
    if (phi.dim() != psi.dim()) throw std::invalid_argument("inner product dimension mismatch");
    Complex s(0.0, 0.0);
    for (int i = 0; i < phi.dim(); ++i) s += std::conj(phi[i]) * psi[i];
    return s;
}

Complex inner_via_dagger(const StateVector& phi, const StateVector& psi) {
    ComplexMatrix product = compose(adjoint(ket(phi)), ket(psi));
    return product.at(0, 0);
}

double relative_probability(const StateVector& psi, const ComplexMatrix& t,
                            const std::vector<StateVector>& basis, int i, int j,
                            double tol) {
    if (t.cols() != psi.dim()) throw std::invalid_argument("operator domain does not match state");
    if (basis.size() != static_cast<std::size_t>(t.rows()))
        throw std::invalid_argument("basis size does not match operator codomain");
    if (i < 0 || j < 0 || i >= t.rows() || j >= t.rows())
        throw std::invalid_argument("basis index out of range");
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Complex ip = inner_product(basis[a], basis[b]);
            double target = (a == b) ? 1.0 : 0.0;
            if (std::abs(ip - Complex(target, 0.0)) > tol)
                throw std::invalid_argument("basis is not orthonormal within tolerance");
        }

    ComplexMatrix image = compose(t, ket(psi));
    auto amplitude = [&](int k) {
        Complex s(0.0, 0.0);
        for (int r = 0; r < t.rows(); ++r) s += std::conj(basis[static_cast<std::size_t>(k)][r]) * image.at(r, 0);
        return s;
    };
    double denom = std::norm(amplitude(j));
    if (denom <= 1e-12 * 1e-12)
        throw std::invalid_argument("relative probability undefined: denominator amplitude is zero");
    return std::norm(amplitude(i)) / denom;
}

bool is_unitary(const ComplexMatrix& t, double tol) {
    ComplexMatrix adj = adjoint(t);
    return compose(adj, t).allclose(ComplexMatrix::identity(t.cols()), tol) &&
           compose(t, adj).allclose(ComplexMatrix::identity(t.rows()), tol);
}

int schmidt_rank(const StateVector& psi, int dim_a, int dim_b) {
    if (dim_a < 1 || dim_b < 1) throw std::invalid_argument("schmidt_rank: factor dimensions must be positive");
    if (psi.dim() != dim_a * dim_b)
        throw std::invalid_argument("schmidt_rank: state dimension is not dim_a * dim_b");
    ComplexMatrix m(dim_a, dim_b, psi.coeffs());
    int count = 0;
    for (double sv : singular_values(m))
        if (sv > 1e-9) ++count;
    return count;
}

int cloning_solution_dimension(int dim, const std::vector<ComplexMatrix>& constraints) {
    if (dim < 1) throw std::invalid_argument("cloning_solution_dimension: dim must be positive");
    int d = dim, d2 = dim * dim, d3 = dim * dim * dim;
    for (const ComplexMatrix& t : constraints)
        if (t.rows() != d || t.cols() != d)
            throw std::invalid_argument("cloning constraint must be a dim x dim operator");
    if (constraints.empty()) return d3;

    // Unknowns x[p][q] of the candidate d2 x d map, flattened as p*d + q.
    // Each constraint T contributes the d2*d equations of x T - (T x T) x = 0.
    ComplexMatrix system(static_cast<int>(constraints.size()) * d3, d3);
    int row = 0;
    for (const ComplexMatrix& t : constraints) {
        ComplexMatrix tt = kron(t, t);
        for (int r = 0; r < d2; ++r)
            for (int s = 0; s < d; ++s, ++row) {
                for (int q = 0; q < d; ++q) system.at(row, r * d + q) += t.at(q, s);
                for (int p = 0; p < d2; ++p) system.at(row, p * d + s) -= tt.at(r, p);
            }
    }
    return nullity(system, 1e-9);
}

TensorWitness tensor_not_product_witness(int dim_a, int dim_b) {
    if (dim_a < 1 || dim_b < 1)
        throw std::invalid_argument("tensor_not_product_witness: dimensions must be positive");
    TensorWitness w;
    w.tensor_dim = dim_a * dim_b;
    w.direct_sum_dim = dim_a + dim_b;
    w.conclusive = (w.tensor_dim != w.direct_sum_dim);
    if (w.conclusive)
        w.note = "tensor dimension " + std::to_string(w.tensor_dim) +
                 " differs from biproduct dimension " + std::to_string(w.direct_sum_dim);
    else
        w.note = "dimensions coincide at (" + std::to_string(dim_a) + "," + std::to_string(dim_b) +
                 "); see cloning_solution_dimension for the decisive obstruction";
    return w;
}

ComplexMatrix random_matrix(Rng& rng, int rows, int cols) {
    ComplexMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = Complex(rng.uniform_real(-1.0, 1.0), rng.uniform_real(-1.0, 1.0));
    return m;
}

StateVector random_state(Rng& rng, int dim) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(dim));
    double n = 0.0;
    while (n < 1e-6) {
        for (Complex& z : coeffs) z = Complex(rng.uniform_real(-1.0, 1.0), rng.uniform_real(-1.0, 1.0));
        n = 0.0;
        for (const Complex& z : coeffs) n += std::norm(z);
        n = std::sqrt(n);
    }
    return StateVector::normalized(dim, std::move(coeffs));
}

FinHilbBackend::Object FinHilbBackend::sample_object(Rng& rng, int max_size) const {
    if (max_size < 1) throw std::runtime_error("sampler exhausted: no dimension within bounds");
    return rng.uniform_int(1, max_size);
}

FinHilbBackend::Morphism FinHilbBackend::sample_from(Rng& rng, Object dom, int max_size) const {
    int cod = sample_object(rng, max_size);
    return random_matrix(rng, cod, dom);
}

double FinHilbBackend::adjoint_residual(Rng& rng, const Morphism& candidate,
                                        const Morphism& f) const {
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        ComplexMatrix x = random_matrix(rng, f.cols(), 1);
        ComplexMatrix y = random_matrix(rng, f.rows(), 1);
        Complex lhs = compose(adjoint(compose(candidate, y)), x).at(0, 0);
        Complex rhs = compose(adjoint(y), compose(f, x)).at(0, 0);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

} // namespace catkit::finhilb
