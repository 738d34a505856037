// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Tolerances are pinned here and in the library; nothing is configurable.

#include "catkit/cli.hpp"
#include "catkit/cob2.hpp"
#include "catkit/dsl.hpp"
#include "catkit/finhilb.hpp"
#include "catkit/finset.hpp"
#include "catkit/laws.hpp"
#include "catkit/rel.hpp"
#include "catkit/rng.hpp"
#include "catkit/tqft.hpp"

#include "fault_backends.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace catkit;

namespace {

using Failures = std::vector<std::string>;

void expect(Failures& fails, bool ok, const std::string& msg) {
    if (!ok) fails.push_back(msg);
}

const laws::LawReport* find_law(const laws::LawSuite& suite, const std::string& name) {
    for (const laws::LawReport& r : suite.laws)
        if (r.law == name) return &r;
    return nullptr;
}

void expect_suite_green(Failures& fails, const laws::LawSuite& suite, const std::string& where) {
    for (const laws::LawReport& r : suite.laws) {
        if (r.status == laws::LawStatus::fail)
            expect(fails, false, where + ": " + r.law + " FAILED");
        if (r.status == laws::LawStatus::insufficient_samples)
            expect(fails, false, where + ": " + r.law + " ran out of samples");
    }
}

void expect_law_pass(Failures& fails, const laws::LawSuite& suite, const std::string& name,
                     int want_samples, const std::string& where) {
    const laws::LawReport* r = find_law(suite, name);
    if (!r) {
        expect(fails, false, where + ": no report for " + name);
        return;
    }
    expect(fails, r->status == laws::LawStatus::pass, where + ": " + name + " did not pass");
    expect(fails, r->samples_tested == want_samples,
           where + ": " + name + " tested " + std::to_string(r->samples_tested) + " of " +
               std::to_string(want_samples) + " samples");
}

// ---- 1: backend law suites, exhaustive at small sizes, plus fault injection

void rel_exhaustive(Failures& fails) {
    rel::RelBackend b;

    for (int a = 0; a <= 3; ++a)
        for (int c = 0; c <= 3; ++c)
            for (const rel::BoolRelation& r : rel::all_relations(a, c)) {
                bool neutral = rel::compose(r, b.identity(a)) == r &&
                               rel::compose(b.identity(c), r) == r;
                expect(fails, neutral, "rel: identity not neutral on " + r.to_string());
                expect(fails, rel::dagger(rel::dagger(r)) == r,
                       "rel: dagger involution broke on " + r.to_string());
            }

    // Associativity and contravariance quantify over composable tuples; every
    // shape whose full enumeration stays within 2^18 tuples is swept here, the
    // rest is covered by the seeded suite below.
    for (int a = 1; a <= 3; ++a)
        for (int c = 1; c <= 3; ++c)
            for (int d = 1; d <= 3; ++d) {
                if (a * c + c * d > 18) continue;
                for (const rel::BoolRelation& r : rel::all_relations(a, c))
                    for (const rel::BoolRelation& s : rel::all_relations(c, d))
                        if (rel::dagger(rel::compose(s, r)) !=
                            rel::compose(rel::dagger(r), rel::dagger(s))) {
                            expect(fails, false, "rel: contravariance broke at " + r.to_string() +
                                                     " then " + s.to_string());
                            return;
                        }
            }
    for (int a = 1; a <= 3; ++a)
        for (int c = 1; c <= 3; ++c)
            for (int d = 1; d <= 3; ++d)
                for (int e = 1; e <= 3; ++e) {
                    if (a * c + c * d + d * e > 18) continue;
                    for (const rel::BoolRelation& r : rel::all_relations(a, c))
                        for (const rel::BoolRelation& s : rel::all_relations(c, d))
                            for (const rel::BoolRelation& t : rel::all_relations(d, e))
                                if (rel::compose(t, rel::compose(s, r)) !=
                                    rel::compose(rel::compose(t, s), r)) {
                                    expect(fails, false, "rel: associativity broke at shape " +
                                                             std::to_string(a) + "," +
                                                             std::to_string(c) + "," +
                                                             std::to_string(d) + "," +
                                                             std::to_string(e));
                                    return;
                                }
                }

    // Interchange has four free relations; exhaustive at size 2 everywhere.
    std::vector<rel::BoolRelation> sq = rel::all_relations(2, 2);
    for (const rel::BoolRelation& f : sq)
        for (const rel::BoolRelation& g : sq)
            for (const rel::BoolRelation& h : sq)
                for (const rel::BoolRelation& k : sq)
                    if (rel::tensor(rel::compose(g, f), rel::compose(k, h)) !=
                        rel::compose(rel::tensor(g, k), rel::tensor(f, h))) {
                        expect(fails, false, "rel: interchange broke at size 2");
                        return;
                    }
}

void finset_exhaustive(Failures& fails) {
    std::vector<finset::FiniteSet> sets;
    for (int n = 0; n <= 3; ++n) sets.push_back(finset::standard_set(n));

    for (const finset::FiniteSet& a : sets)
        for (const finset::FiniteSet& c : sets)
            for (const finset::FunctionMorphism& f : finset::all_functions(a, c)) {
                bool neutral =
                    finset::compose(f, finset::FunctionMorphism::identity(a)) == f &&
                    finset::compose(finset::FunctionMorphism::identity(c), f) == f;
                expect(fails, neutral, "finset: identity not neutral on " + f.to_string());
            }

    for (const finset::FiniteSet& a : sets)
        for (const finset::FiniteSet& c : sets)
            for (const finset::FiniteSet& d : sets)
                for (const finset::FiniteSet& e : sets)
                    for (const finset::FunctionMorphism& f : finset::all_functions(a, c))
                        for (const finset::FunctionMorphism& g : finset::all_functions(c, d))
                            for (const finset::FunctionMorphism& h : finset::all_functions(d, e))
                                if (finset::compose(h, finset::compose(g, f)) !=
                                    finset::compose(finset::compose(h, g), f)) {
                                    expect(fails, false, "finset: associativity broke on " +
                                                             f.to_string());
                                    return;
                                }
}

Failures criterion_law_suites() {
    Failures fails;

    {
        finhilb::FinHilbBackend b;
        laws::SampleSpec spec{11, 200, 4};
        expect_suite_green(fails, laws::check_category_laws(b, spec), "finhilb category");
        expect_suite_green(fails, laws::check_dagger_laws(b, spec), "finhilb dagger");
        expect_suite_green(fails, laws::check_monoidal_laws(b, spec), "finhilb monoidal");
    }

    rel_exhaustive(fails);
    {
        rel::RelBackend b;
        laws::SampleSpec spec{12, 200, 4};
        expect_suite_green(fails, laws::check_category_laws(b, spec), "rel category");
        expect_suite_green(fails, laws::check_dagger_laws(b, spec), "rel dagger");
        expect_suite_green(fails, laws::check_monoidal_laws(b, spec), "rel monoidal");
    }

    finset_exhaustive(fails);
    {
        finset::FinSetBackend b;
        laws::SampleSpec spec{13, 200, 3};
        expect_suite_green(fails, laws::check_category_laws(b, spec), "finset category");
        expect_suite_green(fails, laws::check_monoidal_laws(b, spec), "finset monoidal");

        // The dagger suite must report the obstruction, not a pass.
        laws::LawSuite dag = laws::check_dagger_laws(b, spec);
        bool obstruction_reported =
            dag.laws.size() == 1 && dag.laws[0].status == laws::LawStatus::not_applicable;
        expect(fails, obstruction_reported, "finset: dagger suite should be a single obstruction");
        finset::NoDaggerWitness w = finset::no_dagger_witness();
        expect(fails,
               w.hom_empty_to_one == 1 && w.hom_one_to_empty == 0 && w.hom_empty_to_empty == 1,
               "finset: hom counts around the empty set are wrong");
    }

    {
        cob2::Cob2Backend b;
        laws::SampleSpec spec{14, 200, 6};
        expect_suite_green(fails, laws::check_category_laws(b, spec), "cob2 category");
        expect_suite_green(fails, laws::check_dagger_laws(b, spec), "cob2 dagger");
        expect_suite_green(fails, laws::check_monoidal_laws(b, spec), "cob2 monoidal");
    }

    // Seeded faults: each wrapped backend must trip at least one FAIL.
    laws::SampleSpec fspec{21, 60, 3};
    auto expect_caught = [&](bool caught, const std::string& which) {
        expect(fails, caught, "fault not detected: " + which);
    };
    expect_caught(laws::check_category_laws(faults::FinHilbSwappedCompose{}, fspec).any_failed(),
                  "finhilb swapped compose");
    expect_caught(laws::check_dagger_laws(faults::FinHilbTransposeDagger{}, fspec).any_failed(),
                  "finhilb transpose dagger");
    expect_caught(laws::check_monoidal_laws(faults::FinHilbBadTensor{}, fspec).any_failed(),
                  "finhilb bad tensor");
    expect_caught(laws::check_category_laws(faults::RelDeMorganCompose{}, fspec).any_failed(),
                  "rel and-or compose");
    expect_caught(laws::check_monoidal_laws(faults::RelBadTensor{}, fspec).any_failed(),
                  "rel bad tensor");
    expect_caught(laws::check_monoidal_laws(faults::Cob2NoShiftTensor{}, laws::SampleSpec{21, 60, 4})
                      .any_failed(),
                  "cob2 unshifted tensor");
    expect_caught(laws::check_dagger_laws(faults::Cob2ShallowDagger{}, laws::SampleSpec{21, 60, 4})
                      .any_failed(),
                  "cob2 shallow dagger");
    expect_caught(laws::check_category_laws(faults::FinSetSwappedCompose{}, fspec).any_failed(),
                  "finset swapped compose");
    return fails;
}

// ---- 2: coherence

Failures criterion_coherence() {
    Failures fails;

    finset::FinSetBackend kb;
    kb.encoding = finset::PairEncoding::kuratowski;
    finset::FiniteSet two = finset::standard_set(2);
    laws::LawSuite fixed = laws::check_pentagon_triangle(kb, two, two, two, two);
    expect_law_pass(fails, fixed, "pentagon", 1, "finset kuratowski (2,2,2,2)");
    expect_law_pass(fails, fixed, "triangle", 1, "finset kuratowski (2,2,2,2)");

    finhilb::FinHilbBackend hb;
    laws::LawSuite monoidal = laws::check_monoidal_laws(hb, laws::SampleSpec{31, 100, 4});
    expect_law_pass(fails, monoidal, "associator-naturality", 100, "finhilb");
    return fails;
}

// ---- 3: inner products through the dagger

Failures criterion_inner_product() {
    Failures fails;
    const double tol = 1e-12;
    Rng rng(33);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        int dim = rng.uniform_int(1, 8);
        finhilb::StateVector phi = finhilb::random_state(rng, dim);
        finhilb::StateVector psi = finhilb::random_state(rng, dim);
        double diff = std::abs(finhilb::inner_product(phi, psi) -
                               finhilb::inner_via_dagger(phi, psi));
        worst = std::max(worst, diff);
    }
    expect(fails, worst <= tol,
           "worst |<phi,psi> - phi* psi| = " + std::to_string(worst) + " > 1e-12");
    return fails;
}

// ---- 4: the functor from surfaces to matrices

Failures criterion_tqft() {
    Failures fails;
    tqft::TqftFunctor z{tqft::z2_group_algebra()};

    for (int n = 0; n <= 3; ++n) {
        double diff = z.evaluate(cob2::Cobordism::identity(n))
                          .max_abs_diff(ComplexMatrix::identity(1 << n));
        expect(fails, diff <= 1e-12,
               "Z(identity on " + std::to_string(n) + ") off by " + std::to_string(diff));
    }

    laws::LawSuite functorial = tqft::check_functoriality(z, laws::SampleSpec{41, 100, 3});
    expect_law_pass(fails, functorial, "functoriality", 100, "z2");
    expect_law_pass(fails, functorial, "monoidality", 100, "z2");
    expect_law_pass(fails, functorial, "identity-preservation", 100, "z2");

    expect(fails, tqft::dagger_compatible(z.algebra()), "z2 algebra should be dagger compatible");
    laws::LawSuite dag = tqft::check_dagger_preservation(z, laws::SampleSpec{42, 100, 3});
    expect_law_pass(fails, dag, "dagger-preserving", 100, "z2");

    Complex torus = z.evaluate(cob2::closed_surface(1)).at(0, 0);
    expect(fails, std::abs(torus - Complex(2.0)) <= 1e-9,
           "Z(torus) = " + format_complex(torus) + ", want 2");
    Complex sphere = z.evaluate(cob2::closed_surface(0)).at(0, 0);
    Complex counit_of_unit = compose(z.algebra().counit(), z.algebra().unit()).at(0, 0);
    expect(fails, std::abs(sphere - counit_of_unit) <= 1e-9,
           "Z(sphere) = " + format_complex(sphere) + ", want " + format_complex(counit_of_unit));
    return fails;
}

// ---- 5: unitarity transfer and the normal-form unitarity test

// Distinct normal forms of all terms of operation depth <= max_depth over the
// generators, keeping every boundary at <= max_circles circles.
std::vector<cob2::Cobordism> enumerate_terms(int max_depth, int max_circles) {
    std::vector<cob2::Cobordism> current;
    auto add = [&](const cob2::Cobordism& m) {
        if (std::find(current.begin(), current.end(), m) == current.end()) current.push_back(m);
    };
    for (int n = 0; n <= max_circles; ++n) add(cob2::Cobordism::identity(n));
    add(cob2::cup());
    add(cob2::cap());
    add(cob2::pants());
    add(cob2::copants());
    add(cob2::swap_circles());

    for (int depth = 2; depth <= max_depth; ++depth) {
        std::vector<cob2::Cobordism> prev = current;
        for (const cob2::Cobordism& m : prev)
            for (const cob2::Cobordism& mp : prev) {
                if (m.cod() == mp.dom()) add(cob2::compose(mp, m));
                if (m.dom() + mp.dom() <= max_circles && m.cod() + mp.cod() <= max_circles)
                    add(cob2::tensor(m, mp));
            }
    }
    return current;
}

Failures criterion_unitarity() {
    Failures fails;
    tqft::TqftFunctor z{tqft::z2_group_algebra()};

    for (int k = 0; k <= 4; ++k) {
        std::vector<int> sigma(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) sigma[static_cast<std::size_t>(i)] = i;
        do {
            if (!finhilb::is_unitary(z.evaluate(cob2::permutation(sigma)), 1e-9)) {
                expect(fails, false, "a permutation on " + std::to_string(k) +
                                         " circles did not evaluate to a unitary");
                break;
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    expect(fails, !finhilb::is_unitary(z.evaluate(cob2::pants()), 1e-9),
           "Z(pants) passed the unitarity test");
    expect(fails, !cob2::is_unitary(cob2::pants()), "pants itself passed is_unitary");

    std::vector<cob2::Cobordism> terms = enumerate_terms(4, 3);
    int checked = 0;
    for (const cob2::Cobordism& m : terms) {
        cob2::Cobordism md = cob2::dagger(m);
        bool definitional = cob2::compose(md, m) == cob2::Cobordism::identity(m.dom()) &&
                            cob2::compose(m, md) == cob2::Cobordism::identity(m.cod());
        if (cob2::is_unitary(m) != definitional) {
            expect(fails, false, "is_unitary disagrees with M*M = 1 = MM* on " + m.to_string());
            break;
        }
        ++checked;
    }
    expect(fails, checked >= 100,
           "term enumeration produced only " + std::to_string(checked) + " cobordisms");
    return fails;
}

// ---- 6: no cloning map is natural

Failures criterion_no_cloning() {
    Failures fails;
    for (int dim = 1; dim <= 4; ++dim) {
        Rng rng(600 + static_cast<std::uint64_t>(dim));
        std::vector<ComplexMatrix> constraints;
        for (int k = 0; k < 5; ++k) constraints.push_back(finhilb::random_matrix(rng, dim, dim));
        int collapsed = finhilb::cloning_solution_dimension(dim, constraints);
        expect(fails, collapsed == 0,
               "dim " + std::to_string(dim) + ": solution space has dimension " +
                   std::to_string(collapsed) + " after 5 random constraints");

        int unconstrained =
            finhilb::cloning_solution_dimension(dim, {ComplexMatrix::identity(dim)});
        expect(fails, unconstrained == dim * dim * dim,
               "dim " + std::to_string(dim) + ": identity constraint gave dimension " +
                   std::to_string(unconstrained));
    }
    return fails;
}

// ---- 7: entanglement detection

Failures criterion_entanglement() {
    Failures fails;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    finhilb::StateVector bell(4, {inv_sqrt2, 0.0, 0.0, inv_sqrt2});
    expect(fails, finhilb::schmidt_rank(bell, 2, 2) == 2, "Bell state is not rank 2");

    Rng rng(77);
    for (int i = 0; i < 1000; ++i) {
        int da = rng.uniform_int(2, 4);
        int db = rng.uniform_int(2, 4);
        finhilb::StateVector a = finhilb::random_state(rng, da);
        finhilb::StateVector b = finhilb::random_state(rng, db);
        std::vector<Complex> coeffs(static_cast<std::size_t>(da * db));
        for (int x = 0; x < da; ++x)
            for (int y = 0; y < db; ++y)
                coeffs[static_cast<std::size_t>(x * db + y)] = a[x] * b[y];
        finhilb::StateVector product(da * db, coeffs);
        if (finhilb::schmidt_rank(product, da, db) != 1) {
            expect(fails, false,
                   "random product state #" + std::to_string(i) + " was not rank 1");
            break;
        }
    }

    finhilb::TensorWitness w = finhilb::tensor_not_product_witness(2, 3);
    expect(fails, w.tensor_dim == 6 && w.direct_sum_dim == 5 && w.conclusive,
           "witness(2,3) should be a conclusive 6 vs 5");
    return fails;
}

// ---- 8: Euler characteristic bookkeeping

Failures criterion_euler() {
    Failures fails;
    Rng rng(88);
    for (int i = 0; i < 500; ++i) {
        int dom = rng.uniform_int(0, 4);
        cob2::Cobordism m = cob2::random_cobordism(rng, dom, 6);
        cob2::Cobordism mp = cob2::random_cobordism(rng, m.cod(), 6);
        try {
            cob2::Cobordism glued = cob2::compose(mp, m);
            if (glued.euler() != m.euler() + mp.euler()) {
                expect(fails, false, "euler additivity broke on trial " + std::to_string(i));
                break;
            }
        } catch (const cob2::InternalError& e) {
            expect(fails, false, std::string("gluing invariant breach: ") + e.what());
            break;
        }
    }

    cob2::Cobordism handle = cob2::compose(cob2::pants(), cob2::copants());
    expect(fails,
           handle.components().size() == 1 && handle.components()[0].genus == 1 &&
               handle.dom() == 1 && handle.cod() == 1,
           "copants then pants is not a genus-1 tube, got " + handle.to_string());

    cob2::Cobordism sphere = cob2::compose(cob2::cap(), cob2::cup());
    expect(fails,
           sphere.dom() == 0 && sphere.cod() == 0 && sphere.components().size() == 1 &&
               sphere.components()[0].genus == 0 && sphere.components()[0].in_ports.empty() &&
               sphere.components()[0].out_ports.empty(),
           "cup then cap is not a closed genus-0 component, got " + sphere.to_string());
    return fails;
}

// ---- 9: expression language

Failures criterion_dsl() {
    Failures fails;
    using dsl::Term;

    dsl::TermPtr t1 = dsl::parse("pants ; cap");
    expect(fails,
           t1->kind == Term::Kind::compose && t1->a->kind == Term::Kind::gen &&
               t1->a->name == "pants" && t1->b->kind == Term::Kind::gen && t1->b->name == "cap",
           "\"pants ; cap\" did not parse to a two-generator composite");

    dsl::TermPtr t2 = dsl::parse("f * g ; h");
    expect(fails,
           t2->kind == Term::Kind::compose && t2->a->kind == Term::Kind::tensor &&
               t2->b->kind == Term::Kind::gen,
           "\"f * g ; h\" should group the tensor first");

    dsl::TermPtr t3 = dsl::parse("dag(f ; g)");
    expect(fails, t3->kind == Term::Kind::dagger && t3->a->kind == Term::Kind::compose,
           "\"dag(f ; g)\" should parse as a dagger of a composite");

    {
        std::ostringstream out, err;
        int code = cli::run_cli({"cob", "normalize", "--expr", "cap ; pants"}, out, err);
        expect(fails, code == 2, "type mismatch should exit with 2, got " + std::to_string(code));
    }

    for (const std::string source :
         {"pants ; cap", "f * g ; h", "dag(f ; g)", "(f ; g) * h", "id[2] ; pants",
          "dag(copants ; (cap * cap))", "id[0]", "f ; (g * id[A]) ; h"}) {
        dsl::TermPtr t = dsl::parse(source);
        expect(fails, dsl::same_term(t, dsl::parse(dsl::print_term(t))),
               "round trip changed \"" + source + "\"");
    }

    // Dagger pushdown keeps the evaluated morphism; typecheck rewrites, the
    // raw tree does not.
    {
        dsl::Signature sig = dsl::Signature::cob2_builtin();
        cob2::Cob2Backend b;
        std::map<std::string, cob2::Cobordism> gens{
            {"cup", cob2::cup()},         {"cap", cob2::cap()},   {"pants", cob2::pants()},
            {"copants", cob2::copants()}, {"swap", cob2::swap_circles()},
        };
        std::map<std::string, int> atoms{{"circle", 1}};
        dsl::TermPtr raw = dsl::parse("dag(cup ; copants ; swap)");
        dsl::TermPtr typed = dsl::typecheck(raw, sig);
        expect(fails, typed->kind != Term::Kind::dagger, "pushdown left a top-level dagger");
        expect(fails,
               dsl::evaluate(b, raw, gens, atoms) == dsl::evaluate(b, typed, gens, atoms),
               "pushdown changed the evaluated cobordism");
    }

    for (const std::string& backend : {std::string("finhilb"), std::string("cob2")}) {
        std::ostringstream out_a, out_b, err_a, err_b;
        std::vector<std::string> args{"check-laws", "--backend", backend,
                                      "--seed",     "99",        "--samples", "40"};
        int code_a = cli::run_cli(args, out_a, err_a);
        int code_b = cli::run_cli(args, out_b, err_b);
        expect(fails, code_a == 0 && code_b == 0, backend + " law run failed under the CLI");
        expect(fails, out_a.str() == out_b.str(),
               backend + " reports differ between identical seeded runs");
    }
    return fails;
}

struct Criterion {
    const char* title;
    Failures (*run)();
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"backend law suites and fault injection", criterion_law_suites},
        {"pentagon, triangle and associator naturality", criterion_coherence},
        {"inner products recovered through the dagger", criterion_inner_product},
        {"functor from surfaces to matrices", criterion_tqft},
        {"unitarity transfer and normal-form unitarity", criterion_unitarity},
        {"no natural cloning map", criterion_no_cloning},
        {"entanglement detection", criterion_entanglement},
        {"euler characteristic bookkeeping", criterion_euler},
        {"expression language", criterion_dsl},
    };

    int failed = 0, number = 0;
    for (const Criterion& c : criteria) {
        ++number;
        Failures fails;
        try {
            fails = c.run();
        } catch (const std::exception& e) {
            fails.push_back(std::string("unexpected exception: ") + e.what());
        }
        if (fails.empty()) {
            std::printf("PASS  criterion %d: %s\n", number, c.title);
        } else {
            ++failed;
            std::printf("FAIL  criterion %d: %s\n", number, c.title);
            for (const std::string& f : fails) std::printf("      - %s\n", f.c_str());
        }
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/9 criteria passed\n", 9 - failed);
    return failed == 0 ? 0 : 1;
}
