#include "catkit/cli.hpp"

#include "catkit/cob2.hpp"
#include "catkit/dsl.hpp"
#include "catkit/finhilb.hpp"
#include "catkit/finset.hpp"
#include "catkit/io.hpp"
#include "catkit/laws.hpp"
#include "catkit/rel.hpp"
#include "catkit/tqft.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <map>
#include <sstream>

namespace catkit::cli {

namespace {

struct LawOptions {
    std::string backend;
    std::uint64_t seed = 0;
    int samples = 100;
    int max_size = 4;
};

int print_suites(std::ostream& out, const std::vector<laws::LawSuite>& suites) {
    bool ok = true;
    for (const laws::LawSuite& s : suites) {
        out << laws::format_suite(s);
        ok = ok && s.all_passed();
    }
    out << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

template <class B>
std::vector<laws::LawSuite> all_suites(const B& b, const laws::SampleSpec& spec) {
    return {laws::check_category_laws(b, spec), laws::check_dagger_laws(b, spec),
            laws::check_monoidal_laws(b, spec), laws::check_pentagon_triangle(b, spec)};
}

int run_check_laws(const LawOptions& opt, std::ostream& out) {
    laws::SampleSpec spec{opt.seed, opt.samples, opt.max_size};
    if (opt.backend == "finhilb") return print_suites(out, all_suites(finhilb::FinHilbBackend{}, spec));
    if (opt.backend == "rel") return print_suites(out, all_suites(rel::RelBackend{}, spec));
    if (opt.backend == "cob2") return print_suites(out, all_suites(cob2::Cob2Backend{}, spec));
    finset::FinSetBackend b;
    finset::NoDaggerWitness w = finset::no_dagger_witness();
    out << "dagger obstruction: |hom({},{*})| = " << w.hom_empty_to_one
        << ", |hom({*},{})| = " << w.hom_one_to_empty << ", |hom({},{})| = " << w.hom_empty_to_empty
        << "\n";
    out << "note: " << w.note << "\n";
    return print_suites(out, all_suites(b, spec));
}

void print_type_line(std::ostream& out, const dsl::TermPtr& typed) {
    out << "term: " << dsl::print_term(typed) << "\n";
    out << "type: " << dsl::print_object_expr(typed->dom) << " -> "
        << dsl::print_object_expr(typed->cod) << "\n";
}

int run_eval(const std::string& sig_path, const std::string& interp_path, const std::string& expr,
             std::ostream& out) {
    dsl::Signature sig = dsl::Signature::parse(io::load_text_file(sig_path));
    dsl::TermPtr typed = dsl::typecheck(dsl::parse(expr), sig);
    io::Interpretation interp = io::interpretation_from_json(io::load_json_file(interp_path), sig);
    print_type_line(out, typed);

    if (auto* h = std::get_if<io::FinHilbInterp>(&interp)) {
        finhilb::FinHilbBackend b;
        ComplexMatrix m = dsl::evaluate(b, typed, h->generators, h->objects);
        out << "result (" << m.rows() << "x" << m.cols() << " matrix):\n" << m.to_string() << "\n";
    } else if (auto* r = std::get_if<io::RelInterp>(&interp)) {
        rel::RelBackend b;
        rel::BoolRelation m = dsl::evaluate(b, typed, r->generators, r->objects);
        out << "result: " << m.to_string() << "\n";
    } else {
        auto& s = std::get<io::FinSetInterp>(interp);
        finset::FinSetBackend b;
        finset::FunctionMorphism m = dsl::evaluate(b, typed, s.generators, s.objects);
        out << "result: " << m.to_string() << "\n";
    }
    return 0;
}

int run_cob_normalize(const std::string& expr, std::ostream& out) {
    dsl::Signature sig = dsl::Signature::cob2_builtin();
    dsl::TermPtr typed = dsl::typecheck(dsl::parse(expr), sig);
    cob2::Cob2Backend b;
    std::map<std::string, cob2::Cobordism> gens{
        {"cup", cob2::cup()},         {"cap", cob2::cap()},   {"pants", cob2::pants()},
        {"copants", cob2::copants()}, {"swap", cob2::swap_circles()},
    };
    std::map<std::string, int> atoms{{"circle", 1}};
    cob2::Cobordism m = dsl::evaluate(b, typed, gens, atoms);
    print_type_line(out, typed);
    out << "dom=" << m.dom() << " cod=" << m.cod() << " euler=" << m.euler() << "\n";
    out << "normal form: " << m.to_string() << "\n";
    out << "unitary: " << (cob2::is_unitary(m) ? "yes" : "no") << "\n";
    return 0;
}

cob2::Cobordism eval_cob_expr(const std::string& expr) {
    dsl::Signature sig = dsl::Signature::cob2_builtin();
    dsl::TermPtr typed = dsl::typecheck(dsl::parse(expr), sig);
    cob2::Cob2Backend b;
    std::map<std::string, cob2::Cobordism> gens{
        {"cup", cob2::cup()},         {"cap", cob2::cap()},   {"pants", cob2::pants()},
        {"copants", cob2::copants()}, {"swap", cob2::swap_circles()},
    };
    std::map<std::string, int> atoms{{"circle", 1}};
    return dsl::evaluate(b, typed, gens, atoms);
}

int run_tqft(const std::string& frobenius_path, const std::string& expr, const std::string& check,
             std::uint64_t seed, int samples, int max_size, std::ostream& out) {
    tqft::FrobeniusData data = io::load_frobenius_file(frobenius_path);
    tqft::ValidationReport report = tqft::validate(data);
    out << report.to_string();
    if (!report.all_passed()) {
        out << "result: FAIL\n";
        return 1;
    }
    tqft::TqftFunctor z{tqft::FrobeniusAlgebra::make(data)};

    if (!expr.empty()) {
        cob2::Cobordism m = eval_cob_expr(expr);
        ComplexMatrix zm = z.evaluate(m);
        out << "Z(" << expr << "): " << zm.rows() << "x" << zm.cols() << " matrix\n"
            << zm.to_string() << "\n";
        if (m.dom() == 0 && m.cod() == 0)
            out << "closed invariant: " << format_complex(zm.at(0, 0)) << "\n";
    }

    if (!check.empty()) {
        laws::SampleSpec spec{seed, samples, max_size};
        laws::LawSuite suite = check == "functoriality" ? tqft::check_functoriality(z, spec)
                                                        : tqft::check_dagger_preservation(z, spec);
        return print_suites(out, {suite});
    }
    return 0;
}

int run_demo_no_cloning(int dim, std::uint64_t seed, int constraints, std::ostream& out) {
    out << "dim=" << dim << " seed=" << seed << "\n";
    finhilb::TensorWitness w = finhilb::tensor_not_product_witness(dim, dim);
    out << "dim(A (x) A) = " << w.tensor_dim << ", dim(A (+) A) = " << w.direct_sum_dim << "\n";
    out << "note: " << w.note << "\n";

    int d3 = dim * dim * dim;
    std::vector<ComplexMatrix> ts;
    out << "candidate cloning maps A -> A (x) A are points of a " << d3
        << "-dimensional space\n";
    ts.push_back(ComplexMatrix::identity(dim));
    out << "naturality against the identity alone: solution dimension "
        << finhilb::cloning_solution_dimension(dim, ts) << "\n";

    Rng rng(seed);
    int final_dim = d3;
    for (int k = 1; k <= constraints; ++k) {
        ts.push_back(finhilb::random_matrix(rng, dim, dim));
        final_dim = finhilb::cloning_solution_dimension(dim, ts);
        out << "after " << k << " random naturality constraints: solution dimension " << final_dim
            << "\n";
    }
    if (final_dim == 0) {
        out << "no map clones every state: the constraint space is empty\n";
        return 0;
    }
    out << "result: FAIL (solution space did not collapse)\n";
    return 1;
}

int run_demo_bell(std::ostream& out) {
    tqft::TqftFunctor z{tqft::z2_group_algebra()};
    cob2::Cobordism entangler = cob2::compose(cob2::copants(), cob2::cup());
    ComplexMatrix zm = z.evaluate(entangler);

    double norm = 0.0;
    for (int r = 0; r < zm.rows(); ++r) norm += std::norm(zm.at(r, 0));
    norm = std::sqrt(norm);
    std::vector<Complex> coeffs;
    for (int r = 0; r < zm.rows(); ++r) coeffs.push_back(zm.at(r, 0) / norm);
    finhilb::StateVector psi(4, coeffs);

    out << "algebra: dim-2 group algebra, Z(cup ; copants) prepares\n";
    out << "state: " << psi.to_string() << "\n";
    int rank = finhilb::schmidt_rank(psi, 2, 2);
    out << "schmidt rank: " << rank << "\n";
    out << "entangled: " << (rank > 1 ? "yes" : "no") << "\n";

    finhilb::StateVector product(4, {1.0, 0.0, 0.0, 0.0});
    out << "product state " << product.to_string()
        << " schmidt rank: " << finhilb::schmidt_rank(product, 2, 2) << "\n";

    std::vector<finhilb::StateVector> basis{
        finhilb::StateVector(4, {1, 0, 0, 0}), finhilb::StateVector(4, {0, 1, 0, 0}),
        finhilb::StateVector(4, {0, 0, 1, 0}), finhilb::StateVector(4, {0, 0, 0, 1})};
    double ratio = finhilb::relative_probability(psi, ComplexMatrix::identity(4), basis, 0, 3);
    out << "P(outcome 00) / P(outcome 11) = " << ratio << "\n";
    out << "amplitude of outcome 01: " << format_complex(psi[1]) << "\n";
    out << "amplitude of outcome 10: " << format_complex(psi[2]) << "\n";
    return rank == 2 && finhilb::schmidt_rank(product, 2, 2) == 1 ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"four categorical backends behind one morphism language"};
    app.name("catkit");
    app.require_subcommand(1);

    LawOptions law_opt;
    CLI::App* check = app.add_subcommand("check-laws", "run the law suites for one backend");
    check->add_option("--backend", law_opt.backend, "finhilb, rel, finset or cob2")
        ->required()
        ->check(CLI::IsMember({"finhilb", "rel", "finset", "cob2"}));
    check->add_option("--seed", law_opt.seed, "sampling seed");
    check->add_option("--samples", law_opt.samples, "samples per law")->check(CLI::PositiveNumber);
    check->add_option("--max-size", law_opt.max_size, "object size bound")
        ->check(CLI::NonNegativeNumber);

    std::string sig_path, interp_path, expr;
    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression in an interpretation");
    eval->add_option("--sig", sig_path, "signature file")->required()->check(CLI::ExistingFile);
    eval->add_option("--interp", interp_path, "interpretation json")
        ->required()
        ->check(CLI::ExistingFile);
    eval->add_option("--expr", expr, "morphism expression")->required();

    std::string cob_expr;
    CLI::App* cob = app.add_subcommand("cob", "two-dimensional cobordisms");
    cob->require_subcommand(1);
    CLI::App* normalize = cob->add_subcommand("normalize", "normal form of a cobordism expression");
    normalize->add_option("--expr", cob_expr, "expression over cup, cap, pants, copants, swap")
        ->required();

    std::string frobenius_path, tqft_expr, tqft_check;
    std::uint64_t tqft_seed = 0;
    int tqft_samples = 50, tqft_max_size = 3;
    CLI::App* tq = app.add_subcommand("tqft", "linear functor from a frobenius algebra");
    tq->add_option("--frobenius", frobenius_path, "algebra json")
        ->required()
        ->check(CLI::ExistingFile);
    tq->add_option("--expr", tqft_expr, "cobordism expression to evaluate");
    tq->add_option("--check", tqft_check, "functoriality or dagger")
        ->check(CLI::IsMember({"functoriality", "dagger"}));
    tq->add_option("--seed", tqft_seed, "sampling seed");
    tq->add_option("--samples", tqft_samples, "samples per law")->check(CLI::PositiveNumber);
    tq->add_option("--max-size", tqft_max_size, "circle count bound")->check(CLI::NonNegativeNumber);

    CLI::App* demo = app.add_subcommand("demo", "worked reproductions");
    demo->require_subcommand(1);
    int clone_dim = 2, clone_constraints = 5;
    std::uint64_t clone_seed = 7;
    CLI::App* cloning = demo->add_subcommand("no-cloning", "collapse of natural cloning maps");
    cloning->add_option("--dim", clone_dim, "state space dimension")->check(CLI::Range(2, 5));
    cloning->add_option("--seed", clone_seed, "sampling seed");
    cloning->add_option("--samples", clone_constraints, "random naturality constraints")
        ->check(CLI::PositiveNumber);
    CLI::App* bell = demo->add_subcommand("bell", "entangled state prepared by a cobordism");

    int code = 0;
    check->callback([&] { code = run_check_laws(law_opt, out); });
    eval->callback([&] { code = run_eval(sig_path, interp_path, expr, out); });
    normalize->callback([&] { code = run_cob_normalize(cob_expr, out); });
    tq->callback([&] {
        code = run_tqft(frobenius_path, tqft_expr, tqft_check, tqft_seed, tqft_samples,
                        tqft_max_size, out);
    });
    cloning->callback([&] { code = run_demo_no_cloning(clone_dim, clone_seed, clone_constraints, out); });
    bell->callback([&] { code = run_demo_bell(out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int cli_code = app.exit(e, out, err);
        return cli_code == 0 ? 0 : 3;
    } catch (const dsl::DslError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const io::IoError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return code;
}

} // namespace catkit::cli
