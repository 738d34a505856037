#pragma once

#include "catkit/complex_matrix.hpp"
#include "catkit/rng.hpp"

#include <string>
#include <vector>

namespace catkit::finhilb {

// Unit vector up to the 1e-9 norm tolerance; two states are regarded as the
// same preparation when they agree up to a global phase.
class StateVector {
public:
    StateVector(int dim, std::vector<Complex> coeffs);

    static StateVector normalized(int dim, std::vector<Complex> coeffs);

    int dim() const { return dim_; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    const Complex& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

    bool phase_equal(const StateVector& other, double tol = 1e-9) const;

    std::string to_string() const;

private:
    int dim_;
    std::vector<Complex> coeffs_;
};

// Column matrix (dim x 1) of the state's coefficients.
ComplexMatrix ket(const StateVector& psi);

Complex inner_product(const StateVector& phi, const StateVector& psi);

// <phi, psi> recovered as the 1x1 matrix adjoint(ket(phi)) * ket(psi).
Complex inner_via_dagger(const StateVector& phi, const StateVector& psi);

// |<basis[i], T psi>|^2 / |<basis[j], T psi>|^2 for an orthonormal basis;
// throws std::invalid_argument when the basis is not orthonormal within tol or
// the denominator amplitude is zero within 1e-12. Indices are 0-based.
double relative_probability(const StateVector& psi, const ComplexMatrix& t,
                            const std::vector<StateVector>& basis, int i, int j,
                            double tol = 1e-9);

// True iff adjoint(t)*t and t*adjoint(t) are both identities within tol.
bool is_unitary(const ComplexMatrix& t, double tol = 1e-9);

// Number of singular values above 1e-9 of psi reshaped as a dim_a x dim_b
// matrix (row-major split of a state on a tensor product).
int schmidt_rank(const StateVector& psi, int dim_a, int dim_b);

// Dimension of the solution space of candidate cloning maps d: C^dim -> C^dim
// x C^dim satisfying d T = (T x T) d for every constraint T, computed as the
// null-space dimension of the stacked linear system in the dim^3 unknowns.
int cloning_solution_dimension(int dim, const std::vector<ComplexMatrix>& constraints);

struct TensorWitness {
    int tensor_dim;
    int direct_sum_dim;
    bool conclusive;      // false when the two dimensions coincide
    std::string note;
};

// Compares dim(A x B) with dim(A (+) B); when they coincide (for example 2,2)
// the report is inconclusive and points at the cloning-dimension check.
TensorWitness tensor_not_product_witness(int dim_a, int dim_b);

// Entries sampled uniformly from [-1,1] x [-1,1]; no normalization.
ComplexMatrix random_matrix(Rng& rng, int rows, int cols);
StateVector random_state(Rng& rng, int dim);

// Strict monoidal dagger backend over complex matrices. Objects are
// dimensions; the tensor is the Kronecker product, which is associative on
// the nose in row-major layout, so the associator and unitors are typed
// identities.
struct FinHilbBackend {
    static constexpr const char* name = "finhilb";
    static constexpr bool strict_unit = true;

    using Object = int;
    using Morphism = ComplexMatrix;

    double tol = 1e-9;

    Object dom(const Morphism& f) const { return f.cols(); }
    Object cod(const Morphism& f) const { return f.rows(); }
    Morphism identity(Object a) const { return ComplexMatrix::identity(a); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return catkit::compose(g, f); }
    Morphism dagger(const Morphism& f) const { return adjoint(f); }
    Morphism tensor(const Morphism& f, const Morphism& g) const { return kron(f, g); }

    Object tensor_object(Object a, Object b) const { return a * b; }
    Object unit_object() const { return 1; }
    Morphism associator(Object a, Object b, Object c) const {
        return ComplexMatrix::identity(a * b * c);
    }
    Morphism left_unitor(Object a) const { return ComplexMatrix::identity(a); }
    Morphism right_unitor(Object a) const { return ComplexMatrix::identity(a); }

    bool equal(const Morphism& f, const Morphism& g) const { return f.allclose(g, tol); }
    bool object_equal(Object a, Object b) const { return a == b; }

    Object sample_object(Rng& rng, int max_size) const;
    Morphism sample_from(Rng& rng, Object dom, int max_size) const;

    // Largest residual of <candidate y, x> - <y, f x> over a few sampled
    // vector pairs: zero for all x, y exactly when candidate is the adjoint
    // of f. The candidate is passed in so the caller can hold the backend's
    // own dagger against the defining property.
    double adjoint_residual(Rng& rng, const Morphism& candidate, const Morphism& f) const;

    std::string print(const Morphism& f) const { return f.to_string(); }
    std::string print_object(Object a) const { return std::to_string(a); }
};

} // namespace catkit::finhilb
