#pragma once

#include "catkit/laws.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace catkit::dsl {

struct DslError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : DslError {
    int line, col;
    ParseError(int line_, int col_, const std::string& message)
        : DslError("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " +
                   message),
          line(line_), col(col_) {}
};

struct TypeError : DslError {
    using DslError::DslError;
};

struct EvalError : DslError {
    using DslError::DslError;
};

// Morphism expression. Composition reads left to right: "f ; g" applies f
// first, so it denotes g after f. Tensor binds tighter than composition.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { gen, id, compose, tensor, dagger };

    Kind kind;
    std::string name;                 // gen
    std::vector<std::string> object;  // id
    TermPtr a, b;                     // compose: a first then b; tensor: a (x) b; dagger: a

    // Filled in by typecheck; object expressions as flat atom lists.
    std::vector<std::string> dom, cod;
    bool annotated = false;

    int line = 0, col = 0;
};

TermPtr make_gen(std::string name, int line = 0, int col = 0);
TermPtr make_id(std::vector<std::string> object, int line = 0, int col = 0);
TermPtr make_compose(TermPtr first, TermPtr then);
TermPtr make_tensor(TermPtr lhs, TermPtr rhs);
TermPtr make_dagger(TermPtr inner, int line = 0, int col = 0);

// Structural equality, ignoring annotations and positions.
bool same_term(const TermPtr& s, const TermPtr& t);

// Round-trippable rendering: parse(print(t)) is structurally identical to t.
std::string print_term(const TermPtr& t);

// "0" for the empty list, a count for all-circle lists, otherwise atoms
// joined with " * ".
std::string print_object_expr(const std::vector<std::string>& object);

// expr := term {";" term} ; term := factor {"*" factor} ;
// factor := IDENT | "id" "[" objexpr "]" | "dag" "(" expr ")" | "(" expr ")" ;
// objexpr := NUMBER | atom {"*" atom}. Throws ParseError with position and
// expectation on malformed input.
TermPtr parse(const std::string& text);

struct GenDecl {
    std::vector<std::string> dom, cod;
};

// Declared atoms and generators. Parsed from lines of the form
//   obj A
//   gen f : A * B -> C
// with '#' comments; the object expression 0 denotes the empty (unit) object.
struct Signature {
    std::vector<std::string> atoms;
    std::map<std::string, GenDecl> generators;

    bool has_atom(const std::string& name) const;

    static Signature parse(const std::string& text);
    // cup 0->1, cap 1->0, pants 2->1, copants 1->2, swap 2->2 over the
    // built-in "circle" atom; integer object expressions count circles.
    static Signature cob2_builtin();
};

// Rewrites dagger down to generators ((f;g)* = g*;f*, (f x g)* = f* x g*,
// id* = id, double daggers cancel) and annotates every subterm with flat
// (dom, cod) atom lists. Throws TypeError on unknown names or a composition
// mismatch.
TermPtr typecheck(const TermPtr& t, const Signature& sig);

// Fold of an annotated term in a backend, given morphisms for the generators
// and objects for the atoms. Backends without a dagger hook reject Dagger
// nodes with EvalError("backend has no dagger").
template <laws::CategoryBackend B>
typename B::Morphism evaluate(const B& b, const TermPtr& t,
                              const std::map<std::string, typename B::Morphism>& generators,
                              const std::map<std::string, typename B::Object>& atoms) {
    auto lookup = [&](const std::string& n) -> const typename B::Object& {
        auto it = atoms.find(n);
        if (it == atoms.end()) throw EvalError("no object bound to atom '" + n + "'");
        return it->second;
    };
    auto object_of = [&](const std::vector<std::string>& names) -> typename B::Object {
        if constexpr (laws::HasTensor<B>) {
            if (names.empty()) return b.unit_object();
            typename B::Object acc = lookup(names[0]);
            for (std::size_t i = 1; i < names.size(); ++i)
                acc = b.tensor_object(acc, lookup(names[i]));
            return acc;
        } else {
            if (names.size() != 1)
                throw EvalError("backend has no tensor; object expressions must be single atoms");
            return lookup(names[0]);
        }
    };

    struct Fold {
        const B& b;
        const std::map<std::string, typename B::Morphism>& generators;
        const decltype(object_of)& obj;

        typename B::Morphism go(const TermPtr& t) const {
            switch (t->kind) {
                case Term::Kind::gen: {
                    auto it = generators.find(t->name);
                    if (it == generators.end())
                        throw EvalError("no morphism bound to generator '" + t->name + "'");
                    return it->second;
                }
                case Term::Kind::id:
                    return b.identity(obj(t->object));
                case Term::Kind::compose:
                    return b.compose(go(t->b), go(t->a));
                case Term::Kind::tensor:
                    if constexpr (laws::HasTensor<B>) return b.tensor(go(t->a), go(t->b));
                    else throw EvalError("backend has no tensor");
                case Term::Kind::dagger:
                    if constexpr (laws::HasDagger<B>) return b.dagger(go(t->a));
                    else throw EvalError("backend has no dagger");
            }
            throw EvalError("malformed term");
        }
    };
    return Fold{b, generators, object_of}.go(t);
}

} // namespace catkit::dsl
