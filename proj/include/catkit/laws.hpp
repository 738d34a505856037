#pragma once

#include "catkit/rng.hpp"

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace catkit::laws {

struct SampleSpec {
    std::uint64_t seed = 0;
    int samples = 100;
    int max_object_size = 4;
};

enum class LawStatus { pass, fail, insufficient_samples, not_applicable };

struct Counterexample {
    std::uint64_t seed = 0;
    int sample_index = 0;
    std::string lhs, rhs;
    std::string detail;
};

struct LawReport {
    std::string law;
    int samples_tested = 0;
    LawStatus status = LawStatus::pass;
    std::optional<Counterexample> counterexample;
    std::string note;
};

struct LawSuite {
    std::string backend;
    std::uint64_t seed = 0;
    int requested = 0;
    std::vector<LawReport> laws;

    bool all_passed() const {
        for (const LawReport& r : laws)
            if (r.status == LawStatus::fail || r.status == LawStatus::insufficient_samples)
                return false;
        return true;
    }
    bool any_failed() const {
        for (const LawReport& r : laws)
            if (r.status == LawStatus::fail) return true;
        return false;
    }
};

std::string status_word(LawStatus s);
std::string format_report(const LawReport& r);
std::string format_suite(const LawSuite& s);

template <class B>
concept CategoryBackend = requires(const B b, const typename B::Object a,
                                   const typename B::Morphism f, Rng& rng, int bound) {
    { b.dom(f) } -> std::convertible_to<typename B::Object>;
    { b.cod(f) } -> std::convertible_to<typename B::Object>;
    { b.identity(a) } -> std::convertible_to<typename B::Morphism>;
    { b.compose(f, f) } -> std::convertible_to<typename B::Morphism>;
    { b.equal(f, f) } -> std::convertible_to<bool>;
    { b.sample_object(rng, bound) } -> std::convertible_to<typename B::Object>;
    { b.sample_from(rng, a, bound) } -> std::convertible_to<typename B::Morphism>;
    { b.print(f) } -> std::convertible_to<std::string>;
};

template <class B>
concept HasDagger = requires(const B b, const typename B::Morphism f) {
    { b.dagger(f) } -> std::convertible_to<typename B::Morphism>;
};

template <class B>
concept HasTensor = requires(const B b, const typename B::Object a, const typename B::Morphism f) {
    { b.tensor(f, f) } -> std::convertible_to<typename B::Morphism>;
    { b.tensor_object(a, a) } -> std::convertible_to<typename B::Object>;
    { b.unit_object() } -> std::convertible_to<typename B::Object>;
};

template <class B>
concept HasMonoidalWitness = HasTensor<B> && requires(const B b, const typename B::Object a) {
    { b.associator(a, a, a) } -> std::convertible_to<typename B::Morphism>;
    { b.left_unitor(a) } -> std::convertible_to<typename B::Morphism>;
    { b.right_unitor(a) } -> std::convertible_to<typename B::Morphism>;
};

template <class B>
concept HasAdjointResidual = requires(const B b, Rng& rng, const typename B::Morphism f) {
    { b.adjoint_residual(rng, f, f) } -> std::convertible_to<double>;
};

template <class B>
concept HasStrictUnitFlag = requires {
    { B::strict_unit } -> std::convertible_to<bool>;
};

template <class B>
constexpr bool strict_unit_v = [] {
    if constexpr (HasStrictUnitFlag<B>) return static_cast<bool>(B::strict_unit);
    else return false;
}();

template <class B>
concept HasNoDaggerNote = requires(const B b) {
    { b.no_dagger_note() } -> std::convertible_to<std::string>;
};

struct Violation {
    std::string lhs, rhs, detail;
};

namespace detail {

// Per-law accumulator: evaluates the body until the first violation, records
// it, and keeps counting samples for the other laws in the suite.
class LawRun {
public:
    explicit LawRun(std::string law) : law_(std::move(law)) {}

    template <class F>
    void run(std::uint64_t seed, int index, F&& body) {
        if (failed_) return;
        ++tested_;
        std::optional<Violation> v;
        try {
            v = body();
        } catch (const std::exception& e) {
            v = Violation{"", "", e.what()};
        }
        if (v) {
            failed_ = true;
            cex_ = Counterexample{seed, index, v->lhs, v->rhs, v->detail};
        }
    }

    LawReport finalize(int requested) const {
        LawReport r;
        r.law = law_;
        r.samples_tested = tested_;
        if (failed_) {
            r.status = LawStatus::fail;
            r.counterexample = cex_;
        } else if (tested_ < requested || requested == 0) {
            r.status = LawStatus::insufficient_samples;
        } else {
            r.status = LawStatus::pass;
        }
        return r;
    }

private:
    std::string law_;
    int tested_ = 0;
    bool failed_ = false;
    std::optional<Counterexample> cex_;
};

template <class B>
std::optional<Violation> expect_equal(const B& b, const typename B::Morphism& lhs,
                                      const typename B::Morphism& rhs) {
    if (b.equal(lhs, rhs)) return std::nullopt;
    return Violation{b.print(lhs), b.print(rhs), ""};
}

template <class B>
std::optional<Violation> pentagon_violation(const B& b, const typename B::Object& o1,
                                            const typename B::Object& o2,
                                            const typename B::Object& o3,
                                            const typename B::Object& o4) {
    auto path1 = b.compose(b.associator(o1, o2, b.tensor_object(o3, o4)),
                           b.associator(b.tensor_object(o1, o2), o3, o4));
    auto path2 =
        b.compose(b.tensor(b.identity(o1), b.associator(o2, o3, o4)),
                  b.compose(b.associator(o1, b.tensor_object(o2, o3), o4),
                            b.tensor(b.associator(o1, o2, o3), b.identity(o4))));
    return expect_equal(b, path1, path2);
}

template <class B>
std::optional<Violation> triangle_violation(const B& b, const typename B::Object& o1,
                                            const typename B::Object& o2) {
    auto lhs = b.tensor(b.right_unitor(o1), b.identity(o2));
    auto rhs = b.compose(b.tensor(b.identity(o1), b.left_unitor(o2)),
                         b.associator(o1, b.unit_object(), o2));
    return expect_equal(b, lhs, rhs);
}

} // namespace detail

// Associativity and the two unit laws on seeded composable chains. Chains are
// built by construction: sample an object, then walk morphisms forward.
template <CategoryBackend B>
LawSuite check_category_laws(const B& b, const SampleSpec& spec) {
    LawSuite suite{B::name, spec.seed, spec.samples, {}};
    detail::LawRun assoc("associativity"), lunit("left-unit"), runit("right-unit");
    Rng rng(spec.seed);
    for (int i = 0; i < spec.samples; ++i) {
        std::optional<typename B::Morphism> f, g, h;
        try {
            typename B::Object a = b.sample_object(rng, spec.max_object_size);
            f = b.sample_from(rng, a, spec.max_object_size);
            g = b.sample_from(rng, b.cod(*f), spec.max_object_size);
            h = b.sample_from(rng, b.cod(*g), spec.max_object_size);
        } catch (const std::exception&) {
            break;
        }
        assoc.run(spec.seed, i, [&] {
            return detail::expect_equal(b, b.compose(*h, b.compose(*g, *f)),
                                        b.compose(b.compose(*h, *g), *f));
        });
        lunit.run(spec.seed, i, [&] {
            return detail::expect_equal(b, b.compose(b.identity(b.cod(*f)), *f), *f);
        });
        runit.run(spec.seed, i, [&] {
            return detail::expect_equal(b, b.compose(*f, b.identity(b.dom(*f))), *f);
        });
    }
    suite.laws.push_back(assoc.finalize(spec.samples));
    suite.laws.push_back(lunit.finalize(spec.samples));
    suite.laws.push_back(runit.finalize(spec.samples));
    return suite;
}

// Identity preservation, contravariance and involution of the dagger; plus
// the adjoint characterization where the backend exposes an inner-product
// residual. Backends without a dagger get a single not-applicable entry
// carrying the backend's explanation.
template <CategoryBackend B>
LawSuite check_dagger_laws(const B& b, const SampleSpec& spec) {
    LawSuite suite{B::name, spec.seed, spec.samples, {}};
    if constexpr (!HasDagger<B>) {
        LawReport r;
        r.law = "dagger-laws";
        r.status = LawStatus::not_applicable;
        if constexpr (HasNoDaggerNote<B>) r.note = b.no_dagger_note();
        else r.note = "backend has no dagger";
        suite.laws.push_back(r);
        return suite;
    } else {
        detail::LawRun ident("dagger-identity"), contra("dagger-contravariance"),
            invol("dagger-involution");
        std::optional<detail::LawRun> adj;
        if constexpr (HasAdjointResidual<B>) adj.emplace("adjoint-characterization");
        Rng rng(spec.seed);
        for (int i = 0; i < spec.samples; ++i) {
            std::optional<typename B::Object> a;
            std::optional<typename B::Morphism> f, g;
            try {
                a = b.sample_object(rng, spec.max_object_size);
                f = b.sample_from(rng, *a, spec.max_object_size);
                g = b.sample_from(rng, b.cod(*f), spec.max_object_size);
            } catch (const std::exception&) {
                break;
            }
            ident.run(spec.seed, i, [&] {
                return detail::expect_equal(b, b.dagger(b.identity(*a)), b.identity(*a));
            });
            contra.run(spec.seed, i, [&] {
                return detail::expect_equal(b, b.dagger(b.compose(*g, *f)),
                                            b.compose(b.dagger(*f), b.dagger(*g)));
            });
            invol.run(spec.seed, i, [&] {
                return detail::expect_equal(b, b.dagger(b.dagger(*f)), *f);
            });
            if constexpr (HasAdjointResidual<B>) {
                adj->run(spec.seed, i, [&]() -> std::optional<Violation> {
                    double residual = b.adjoint_residual(rng, b.dagger(*f), *f);
                    if (residual <= 1e-9) return std::nullopt;
                    return Violation{b.print(*f), b.print(b.dagger(*f)),
                                     "adjoint residual " + std::to_string(residual)};
                });
            }
        }
        suite.laws.push_back(ident.finalize(spec.samples));
        suite.laws.push_back(contra.finalize(spec.samples));
        suite.laws.push_back(invol.finalize(spec.samples));
        if (adj) suite.laws.push_back(adj->finalize(spec.samples));
        return suite;
    }
}

// Interchange, identity-tensoring, strict unit absorption where declared, and
// naturality of the associator where the backend supplies one.
template <CategoryBackend B>
LawSuite check_monoidal_laws(const B& b, const SampleSpec& spec) {
    LawSuite suite{B::name, spec.seed, spec.samples, {}};
    if constexpr (!HasTensor<B>) {
        LawReport r;
        r.law = "monoidal-laws";
        r.status = LawStatus::not_applicable;
        r.note = "backend has no tensor";
        suite.laws.push_back(r);
        return suite;
    } else {
        detail::LawRun inter("interchange"), tid("tensor-identity");
        std::optional<detail::LawRun> strict, nat;
        if constexpr (strict_unit_v<B>) strict.emplace("unit-strictness");
        if constexpr (HasMonoidalWitness<B>) nat.emplace("associator-naturality");
        Rng rng(spec.seed);
        for (int i = 0; i < spec.samples; ++i) {
            std::optional<typename B::Object> a, x;
            std::optional<typename B::Morphism> fp, f, gp, g, u;
            try {
                a = b.sample_object(rng, spec.max_object_size);
                x = b.sample_object(rng, spec.max_object_size);
                fp = b.sample_from(rng, *a, spec.max_object_size);
                f = b.sample_from(rng, b.cod(*fp), spec.max_object_size);
                gp = b.sample_from(rng, *x, spec.max_object_size);
                g = b.sample_from(rng, b.cod(*gp), spec.max_object_size);
                u = b.sample_from(rng, b.sample_object(rng, spec.max_object_size),
                                  spec.max_object_size);
            } catch (const std::exception&) {
                break;
            }
            inter.run(spec.seed, i, [&] {
                return detail::expect_equal(b, b.compose(b.tensor(*f, *g), b.tensor(*fp, *gp)),
                                            b.tensor(b.compose(*f, *fp), b.compose(*g, *gp)));
            });
            tid.run(spec.seed, i, [&] {
                return detail::expect_equal(b, b.tensor(b.identity(*a), b.identity(*x)),
                                            b.identity(b.tensor_object(*a, *x)));
            });
            if constexpr (strict_unit_v<B>) {
                strict->run(spec.seed, i, [&]() -> std::optional<Violation> {
                    auto left = detail::expect_equal(b, b.tensor(b.identity(b.unit_object()), *f), *f);
                    if (left) return left;
                    return detail::expect_equal(b, b.tensor(*f, b.identity(b.unit_object())), *f);
                });
            }
            if constexpr (HasMonoidalWitness<B>) {
                nat->run(spec.seed, i, [&] {
                    const auto& s = *fp;
                    const auto& t = *gp;
                    const auto& w = *u;
                    auto lhs = b.compose(b.associator(b.cod(s), b.cod(t), b.cod(w)),
                                         b.tensor(b.tensor(s, t), w));
                    auto rhs = b.compose(b.tensor(s, b.tensor(t, w)),
                                         b.associator(b.dom(s), b.dom(t), b.dom(w)));
                    return detail::expect_equal(b, lhs, rhs);
                });
            }
        }
        suite.laws.push_back(inter.finalize(spec.samples));
        suite.laws.push_back(tid.finalize(spec.samples));
        if (strict) suite.laws.push_back(strict->finalize(spec.samples));
        if (nat) suite.laws.push_back(nat->finalize(spec.samples));
        return suite;
    }
}

// Pentagon on a fixed object quadruple and triangle on the first two objects.
// Deterministic: one evaluation each.
template <CategoryBackend B>
LawSuite check_pentagon_triangle(const B& b, const typename B::Object& o1,
                                 const typename B::Object& o2, const typename B::Object& o3,
                                 const typename B::Object& o4) {
    LawSuite suite{B::name, 0, 1, {}};
    if constexpr (!HasMonoidalWitness<B>) {
        LawReport r;
        r.law = "pentagon-triangle";
        r.status = LawStatus::not_applicable;
        r.note = "backend supplies no associator or unitors";
        suite.laws.push_back(r);
        return suite;
    } else {
        detail::LawRun pentagon("pentagon"), triangle("triangle");
        pentagon.run(0, 0, [&] { return detail::pentagon_violation(b, o1, o2, o3, o4); });
        triangle.run(0, 0, [&] { return detail::triangle_violation(b, o1, o2); });
        suite.laws.push_back(pentagon.finalize(1));
        suite.laws.push_back(triangle.finalize(1));
        return suite;
    }
}

// Pentagon and triangle over seeded object quadruples.
template <CategoryBackend B>
LawSuite check_pentagon_triangle(const B& b, const SampleSpec& spec) {
    LawSuite suite{B::name, spec.seed, spec.samples, {}};
    if constexpr (!HasMonoidalWitness<B>) {
        LawReport r;
        r.law = "pentagon-triangle";
        r.status = LawStatus::not_applicable;
        r.note = "backend supplies no associator or unitors";
        suite.laws.push_back(r);
        return suite;
    } else {
        detail::LawRun pentagon("pentagon"), triangle("triangle");
        Rng rng(spec.seed);
        for (int i = 0; i < spec.samples; ++i) {
            std::optional<typename B::Object> o1, o2, o3, o4;
            try {
                o1 = b.sample_object(rng, spec.max_object_size);
                o2 = b.sample_object(rng, spec.max_object_size);
                o3 = b.sample_object(rng, spec.max_object_size);
                o4 = b.sample_object(rng, spec.max_object_size);
            } catch (const std::exception&) {
                break;
            }
            pentagon.run(spec.seed, i,
                         [&] { return detail::pentagon_violation(b, *o1, *o2, *o3, *o4); });
            triangle.run(spec.seed, i, [&] { return detail::triangle_violation(b, *o1, *o2); });
        }
        suite.laws.push_back(pentagon.finalize(spec.samples));
        suite.laws.push_back(triangle.finalize(spec.samples));
        return suite;
    }
}

} // namespace catkit::laws
