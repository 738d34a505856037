#include "catkit/tqft.hpp"

#include "catkit/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace catkit::tqft {

namespace {

void check_shapes(const FrobeniusData& d) {
    if (d.dim < 1) throw std::invalid_argument("algebra dimension must be positive");
    if (d.unit.rows() != d.dim || d.unit.cols() != 1)
        throw std::invalid_argument("unit must be dim x 1");
    if (d.mult.rows() != d.dim || d.mult.cols() != d.dim * d.dim)
        throw std::invalid_argument("mult must be dim x dim^2");
    if (d.counit.rows() != 1 || d.counit.cols() != d.dim)
        throw std::invalid_argument("counit must be 1 x dim");
}

ComplexMatrix pairing_of(const FrobeniusData& d) {
    ComplexMatrix em = compose(d.counit, d.mult); // 1 x dim^2
    ComplexMatrix g(d.dim, d.dim);
    for (int i = 0; i < d.dim; ++i)
        for (int j = 0; j < d.dim; ++j) g.at(i, j) = em.at(0, i * d.dim + j);
    return g;
}

// comult(e_a) = sum_i (e_a e_i) (x) f^i with the dual basis f^j of the pairing.
ComplexMatrix comult_of(const FrobeniusData& d, const ComplexMatrix& pairing_inv) {
    int n = d.dim;
    ComplexMatrix delta(n * n, n);
    for (int a = 0; a < n; ++a)
        for (int i = 0; i < n; ++i)
            for (int p = 0; p < n; ++p) {
                Complex prod_p = d.mult.at(p, a * n + i); // (e_a e_i) coefficient on e_p
                if (prod_p == Complex(0.0, 0.0)) continue;
                for (int q = 0; q < n; ++q) {
                    Complex fq = pairing_inv.at(q, i); // f^i coefficient on e_q
                    delta.at(p * n + q, a) += prod_p * fq;
                }
            }
    return delta;
}

} // namespace

std::string ValidationReport::to_string() const {
    std::string out;
    for (const FrobeniusLawCheck& c : laws) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.3e", c.residual);
        const char* tag = c.law == "pairing-nondegeneracy" ? " |det|=" : " residual=";
        out += (c.pass ? "PASS " : "FAIL ") + c.law + tag + buf + "\n";
    }
    return out;
}

ValidationReport validate(const FrobeniusData& d, double tol) {
    check_shapes(d);
    ValidationReport report;
    int n = d.dim;
    ComplexMatrix id = ComplexMatrix::identity(n);

    auto add = [&](const std::string& law, double residual, bool pass) {
        report.laws.push_back(FrobeniusLawCheck{law, residual, pass});
    };

    double assoc = compose(d.mult, kron(d.mult, id))
                       .max_abs_diff(compose(d.mult, kron(id, d.mult)));
    add("associativity", assoc, assoc <= tol);

    double unit_l = compose(d.mult, kron(d.unit, id)).max_abs_diff(id);
    double unit_r = compose(d.mult, kron(id, d.unit)).max_abs_diff(id);
    add("unit-law", std::max(unit_l, unit_r), std::max(unit_l, unit_r) <= tol);

    ComplexMatrix swap = tensor_factor_permutation(n, {1, 0});
    double comm = compose(d.mult, swap).max_abs_diff(d.mult);
    add("commutativity", comm, comm <= tol);

    ComplexMatrix g = pairing_of(d);
    double detmag = std::abs(determinant(g));
    bool nondeg = detmag > 1e-9;
    add("pairing-nondegeneracy", detmag, nondeg);

    if (nondeg) {
        ComplexMatrix ginv = inverse(g, 1e-12);
        ComplexMatrix delta = comult_of(d, ginv);
        double co_l = compose(kron(d.counit, id), delta).max_abs_diff(id);
        double co_r = compose(kron(id, d.counit), delta).max_abs_diff(id);
        add("counit-law", std::max(co_l, co_r), std::max(co_l, co_r) <= tol);
    } else {
        add("counit-law", std::numeric_limits<double>::infinity(), false);
    }
    return report;
}

FrobeniusAlgebra FrobeniusAlgebra::make(const FrobeniusData& data, double tol) {
    ValidationReport report = validate(data, tol);
    if (!report.all_passed())
        throw std::invalid_argument("not a commutative Frobenius algebra:\n" + report.to_string());
    FrobeniusAlgebra a;
    a.data_ = data;
    a.pairing_ = pairing_of(data);
    a.comult_ = comult_of(data, inverse(a.pairing_, 1e-12));
    a.handle_ = compose(data.mult, a.comult_);
    return a;
}

FrobeniusData z2_group_algebra_data(Complex counit_scale) {
    FrobeniusData d;
    d.dim = 2;
    d.unit = ComplexMatrix(2, 1, {1.0, 0.0});
    // Basis {1, s} with s^2 = 1; column order (1,1), (1,s), (s,1), (s,s).
    d.mult = ComplexMatrix(2, 4, {1.0, 0.0, 0.0, 1.0, 0.0, 1.0, 1.0, 0.0});
    d.counit = ComplexMatrix(1, 2, {counit_scale, 0.0});
    return d;
}

FrobeniusAlgebra z2_group_algebra() { return FrobeniusAlgebra::make(z2_group_algebra_data(1.0)); }

FrobeniusData split_algebra_data(Complex w1, Complex w2) {
    FrobeniusData d;
    d.dim = 2;
    d.unit = ComplexMatrix(2, 1, {1.0, 1.0});
    d.mult = ComplexMatrix(2, 4, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0});
    d.counit = ComplexMatrix(1, 2, {w1, w2});
    return d;
}

FrobeniusAlgebra split_algebra(Complex w1, Complex w2) {
    return FrobeniusAlgebra::make(split_algebra_data(w1, w2));
}

ComplexMatrix tensor_factor_permutation(int factor_dim, const std::vector<int>& src_of) {
    int m = static_cast<int>(src_of.size());
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int v : src_of) {
        if (v < 0 || v >= m || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("tensor_factor_permutation: src_of is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
    long long size = 1;
    for (int j = 0; j < m; ++j) size *= factor_dim;
    ComplexMatrix p(static_cast<int>(size), static_cast<int>(size));
    std::vector<int> x(static_cast<std::size_t>(m), 0);
    for (long long col = 0; col < size; ++col) {
        long long rest = col;
        for (int j = m - 1; j >= 0; --j) {
            x[static_cast<std::size_t>(j)] = static_cast<int>(rest % factor_dim);
            rest /= factor_dim;
        }
        long long row = 0;
        for (int j = 0; j < m; ++j)
            row = row * factor_dim + x[static_cast<std::size_t>(src_of[static_cast<std::size_t>(j)])];
        p.at(static_cast<int>(row), static_cast<int>(col)) = 1.0;
    }
    return p;
}

ComplexMatrix mult_fan(const FrobeniusAlgebra& a, int inputs) {
    int n = a.dim();
    if (inputs == 0) return a.unit();
    ComplexMatrix fan = ComplexMatrix::identity(n);
    for (int k = 2; k <= inputs; ++k)
        fan = compose(a.mult(), kron(fan, ComplexMatrix::identity(n)));
    return fan;
}

ComplexMatrix comult_fan(const FrobeniusAlgebra& a, int outputs) {
    int n = a.dim();
    if (outputs == 0) return a.counit();
    ComplexMatrix fan = ComplexMatrix::identity(n);
    for (int k = 2; k <= outputs; ++k)
        fan = compose(kron(fan, ComplexMatrix::identity(n)), a.comult());
    return fan;
}

long long TqftFunctor::object_dim(int circles) const {
    long long d = 1;
    for (int i = 0; i < circles; ++i) d *= algebra_.dim();
    return d;
}

ComplexMatrix TqftFunctor::evaluate(const cob2::Cobordism& m) const {
    int n = algebra_.dim();
    ComplexMatrix mid(1, 1, {Complex(1.0, 0.0)});
    std::vector<int> in_concat, out_concat;
    for (const cob2::Component& c : m.components()) {
        ComplexMatrix piece = mult_fan(algebra_, static_cast<int>(c.in_ports.size()));
        for (int g = 0; g < c.genus; ++g) piece = compose(algebra_.handle(), piece);
        piece = compose(comult_fan(algebra_, static_cast<int>(c.out_ports.size())), piece);
        mid = kron(mid, piece);
        in_concat.insert(in_concat.end(), c.in_ports.begin(), c.in_ports.end());
        out_concat.insert(out_concat.end(), c.out_ports.begin(), c.out_ports.end());
    }

    std::vector<int> in_src(in_concat.size());
    for (std::size_t j = 0; j < in_concat.size(); ++j) in_src[j] = in_concat[j] - 1;
    std::vector<int> out_src(out_concat.size());
    for (std::size_t p = 0; p < out_concat.size(); ++p)
        out_src[static_cast<std::size_t>(out_concat[p] - 1)] = static_cast<int>(p);

    ComplexMatrix p_in = tensor_factor_permutation(n, in_src);
    ComplexMatrix p_out = tensor_factor_permutation(n, out_src);
    return compose(p_out, compose(mid, p_in));
}

laws::LawSuite check_functoriality(const TqftFunctor& z, const laws::SampleSpec& spec, double tol) {
    laws::LawSuite suite{"tqft", spec.seed, spec.samples, {}};
    laws::detail::LawRun ident("identity-preservation"), funct("functoriality"), mono("monoidality");
    Rng rng(spec.seed);
    for (int i = 0; i < spec.samples; ++i) {
        int a = rng.uniform_int(0, spec.max_object_size);
        cob2::Cobordism m = cob2::random_cobordism(rng, a, spec.max_object_size, 6);
        cob2::Cobordism mp = cob2::random_cobordism(rng, m.cod(), spec.max_object_size, 6);
        int nb = rng.uniform_int(0, std::max(0, spec.max_object_size - std::max(m.dom(), m.cod())));
        cob2::Cobordism other = cob2::random_cobordism(rng, nb, spec.max_object_size, 6);

        ident.run(spec.seed, i, [&]() -> std::optional<laws::Violation> {
            ComplexMatrix lhs = z.evaluate(cob2::Cobordism::identity(a));
            ComplexMatrix rhs = ComplexMatrix::identity(static_cast<int>(z.object_dim(a)));
            if (lhs.allclose(rhs, 1e-12)) return std::nullopt;
            return laws::Violation{lhs.to_string(), rhs.to_string(), "identity not preserved"};
        });
        funct.run(spec.seed, i, [&]() -> std::optional<laws::Violation> {
            ComplexMatrix lhs = z.evaluate(cob2::compose(mp, m));
            ComplexMatrix rhs = compose(z.evaluate(mp), z.evaluate(m));
            if (lhs.allclose(rhs, tol)) return std::nullopt;
            return laws::Violation{m.to_string() + " then " + mp.to_string(), "",
                                   "max diff " + std::to_string(lhs.max_abs_diff(rhs))};
        });
        mono.run(spec.seed, i, [&]() -> std::optional<laws::Violation> {
            ComplexMatrix lhs = z.evaluate(cob2::tensor(m, other));
            ComplexMatrix rhs = kron(z.evaluate(m), z.evaluate(other));
            if (lhs.allclose(rhs, tol)) return std::nullopt;
            return laws::Violation{m.to_string() + " (x) " + other.to_string(), "",
                                   "max diff " + std::to_string(lhs.max_abs_diff(rhs))};
        });
    }
    suite.laws.push_back(ident.finalize(spec.samples));
    suite.laws.push_back(funct.finalize(spec.samples));
    suite.laws.push_back(mono.finalize(spec.samples));
    return suite;
}

bool dagger_compatible(const FrobeniusAlgebra& a, double tol) {
    return a.comult().allclose(adjoint(a.mult()), tol);
}

laws::LawSuite check_dagger_preservation(const TqftFunctor& z, const laws::SampleSpec& spec,
                                         double tol) {
    laws::LawSuite suite{"tqft", spec.seed, spec.samples, {}};
    if (!dagger_compatible(z.algebra(), tol)) {
        laws::LawReport r;
        r.law = "dagger-preserving";
        r.status = laws::LawStatus::not_applicable;
        r.note = "comultiplication is not the adjoint of multiplication; the functor need not be dagger-preserving";
        suite.laws.push_back(r);
        return suite;
    }
    laws::detail::LawRun dag("dagger-preserving");
    Rng rng(spec.seed);
    for (int i = 0; i < spec.samples; ++i) {
        int a = rng.uniform_int(0, spec.max_object_size);
        cob2::Cobordism m = cob2::random_cobordism(rng, a, spec.max_object_size, 6);
        dag.run(spec.seed, i, [&]() -> std::optional<laws::Violation> {
            ComplexMatrix lhs = z.evaluate(cob2::dagger(m));
            ComplexMatrix rhs = adjoint(z.evaluate(m));
            if (lhs.allclose(rhs, tol)) return std::nullopt;
            return laws::Violation{m.to_string(), "",
                                   "max diff " + std::to_string(lhs.max_abs_diff(rhs))};
        });
    }
    suite.laws.push_back(dag.finalize(spec.samples));
    return suite;
}

} // namespace catkit::tqft
