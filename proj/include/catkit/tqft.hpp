#pragma once

#include "catkit/cob2.hpp"
#include "catkit/complex_matrix.hpp"
#include "catkit/laws.hpp"

#include <string>
#include <vector>

namespace catkit::tqft {


// Candidate algebra data before validation: a dim-dimensional algebra with
// unit (dim x 1), multiplication (dim x dim^2, row-major on input pairs) and
// counit (1 x dim).
struct FrobeniusData {
    int dim = 0;
    ComplexMatrix unit;
    ComplexMatrix mult;
    ComplexMatrix counit;
};

struct FrobeniusLawCheck {
    std::string law;
    double residual = 0.0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<FrobeniusLawCheck> laws;
    bool all_passed() const {
        for (const FrobeniusLawCheck& c : laws)
            if (!c.pass) return false;
        return true;
    }
    std::string to_string() const;
};

// Checks associativity, the unit laws, commutativity, invertibility of the
// pairing e(ab), and the counit laws for the derived comultiplication, all at
// the 1e-9 tolerance (pairing: |det| > 1e-9). Never throws on law failures;
// the report carries them.
ValidationReport validate(const FrobeniusData& data, double tol = 1e-9);

// Commutative Frobenius algebra with the derived structure cached: pairing,
// its inverse, the comultiplication via the dual basis, and the handle
// operator m after comult.
class FrobeniusAlgebra {
public:
    // Validates and throws std::invalid_argument (with the failed report) on
    // any law violation.
    static FrobeniusAlgebra make(const FrobeniusData& data, double tol = 1e-9);

    int dim() const { return data_.dim; }
    const ComplexMatrix& unit() const { return data_.unit; }
    const ComplexMatrix& mult() const { return data_.mult; }
    const ComplexMatrix& counit() const { return data_.counit; }
    const ComplexMatrix& pairing() const { return pairing_; }
    const ComplexMatrix& comult() const { return comult_; }
    const ComplexMatrix& handle() const { return handle_; }

private:
    FrobeniusData data_;
    ComplexMatrix pairing_, comult_, handle_;
};

// Group algebra of the two-element group, with the counit scaled so the
// comultiplication is exactly the adjoint of the multiplication.
FrobeniusAlgebra z2_group_algebra();

// Split algebra on C x C: basis idempotents e_i e_j = delta_ij e_i, counit
// weights (w1, w2); both weights must be nonzero.
FrobeniusAlgebra split_algebra(Complex w1 = 1.0, Complex w2 = 1.0);

// Raw data variants for validate() tests and file round-trips.
FrobeniusData z2_group_algebra_data(Complex counit_scale = 1.0);
FrobeniusData split_algebra_data(Complex w1, Complex w2);

// Permutation of tensor factors, all of dimension factor_dim: output slot j
// carries input slot src_of[j].
ComplexMatrix tensor_factor_permutation(int factor_dim, const std::vector<int>& src_of);

// Multiplication fan (C^n)^(x a) -> C^n, left-nested; a = 0 gives the unit.
ComplexMatrix mult_fan(const FrobeniusAlgebra& a, int inputs);
// Comultiplication fan C^n -> (C^n)^(x b), left-nested; b = 0 gives the counit.
ComplexMatrix comult_fan(const FrobeniusAlgebra& a, int outputs);

// Linear-time-functor on the cobordism category: k circles map to (C^n)^(x k)
// and a connected piece with a inputs, b outputs and genus g maps to
// comult_fan(b) . handle^g . mult_fan(a), conjugated by the permutations that
// align boundary circles with component ports.
class TqftFunctor {
public:
    explicit TqftFunctor(FrobeniusAlgebra algebra) : algebra_(std::move(algebra)) {}

    const FrobeniusAlgebra& algebra() const { return algebra_; }
    long long object_dim(int circles) const;
    ComplexMatrix evaluate(const cob2::Cobordism& m) const;

private:
    FrobeniusAlgebra algebra_;
};

// Laws: identity-preservation (exact), functoriality on seeded composable
// pairs, monoidality on seeded tensor pairs.
laws::LawSuite check_functoriality(const TqftFunctor& z, const laws::SampleSpec& spec,
                                   double tol = 1e-9);

// Whether the derived comultiplication equals adjoint(mult) within tol.
bool dagger_compatible(const FrobeniusAlgebra& a, double tol = 1e-9);

// Z(dagger(M)) = adjoint(Z(M)) on seeded cobordisms; reports not-applicable
// (with a note) when the algebra fails the compatibility precheck.
laws::LawSuite check_dagger_preservation(const TqftFunctor& z, const laws::SampleSpec& spec,
                                         double tol = 1e-9);

} // namespace catkit::tqft
