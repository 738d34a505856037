#pragma once

#include "catkit/rng.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace catkit::finset {

// Element label: an atom, an opaque ordered pair, or a finite set of labels.
// Set children are kept sorted and deduplicated, so {s,s} collapses to {s} and
// structural equality decides set equality.
class Label {
public:
    enum class Kind { atom, pair, set };

    static Label atom(std::string name);
    static Label pair(Label first, Label second);
    static Label set(std::vector<Label> members);

    Kind kind() const { return kind_; }
    const std::string& atom_name() const { return name_; }
    const std::vector<Label>& children() const { return children_; }

    bool operator==(const Label& other) const;
    bool operator<(const Label& other) const;

    std::string to_string() const;

private:
    Kind kind_ = Kind::atom;
    std::string name_;
    std::vector<Label> children_;
};

// Finite set of distinct labels; stored sorted, so equal sets compare equal
// regardless of construction order. The empty set is permitted.
class FiniteSet {
public:
    FiniteSet() = default;
    explicit FiniteSet(std::vector<Label> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<Label>& labels() const { return labels_; }
    bool contains(const Label& l) const;

    bool operator==(const FiniteSet& other) const = default;

    std::string to_string() const;

private:
    std::vector<Label> labels_;
};

// Total function presented by its table. Construction rejects a nonempty
// domain with an empty codomain: there is no function to choose.
class FunctionMorphism {
public:
    FunctionMorphism(FiniteSet dom, FiniteSet cod, std::map<Label, Label> table);

    static FunctionMorphism identity(const FiniteSet& a);

    const FiniteSet& dom() const { return dom_; }
    const FiniteSet& cod() const { return cod_; }
    const Label& apply(const Label& x) const;
    const std::map<Label, Label>& table() const { return table_; }

    bool operator==(const FunctionMorphism& other) const = default;

    std::string to_string() const;

private:
    FiniteSet dom_, cod_;
    std::map<Label, Label> table_;
};

// g after f; domains must match up.
FunctionMorphism compose(const FunctionMorphism& g, const FunctionMorphism& f);

enum class PairEncoding { kuratowski, flat };

// Product object with projections and the pair-lookup needed to build
// universal morphisms into it.
struct CartesianProduct {
    FiniteSet object;
    FunctionMorphism p1, p2;
    std::map<std::pair<Label, Label>, Label> pair_label;

    const Label& pair_of(const Label& s, const Label& t) const;
};

// Kuratowski encoding builds (s,t) = {{s},{s,t}}; flat builds an opaque
// ordered pair. Either way the product has |S| * |T| distinct elements.
CartesianProduct cartesian_product(const FiniteSet& s, const FiniteSet& t, PairEncoding enc);

// The unique h: X -> S x T with p1 h = f1 and p2 h = f2.
FunctionMorphism pairing(const FunctionMorphism& f1, const FunctionMorphism& f2,
                         const CartesianProduct& product);

// pairing(1_A, 1_A) into the chosen product of A with itself.
FunctionMorphism diagonal(const FiniteSet& a, const CartesianProduct& product_aa);

struct ProductCandidate {
    FiniteSet object;
    FunctionMorphism p1, p2;
};

// The unique projection-commuting bijection between two products of the same
// pair of sets; throws std::invalid_argument when either candidate fails the
// universal property (for that pair of sets, in that order).
FunctionMorphism canonical_product_iso(const ProductCandidate& p, const ProductCandidate& q,
                                       const FiniteSet& s, const FiniteSet& t);

struct TerminalReport {
    FiniteSet terminal;
    FunctionMorphism to_terminal;             // the unique A -> 1
    std::vector<FunctionMorphism> elements;   // all maps 1 -> A
};

TerminalReport terminal_and_elements(const FiniteSet& a);

struct NoDaggerWitness {
    int hom_empty_to_one;   // 1: the empty function
    int hom_one_to_empty;   // 0: nowhere to send the point
    int hom_empty_to_empty; // 1: the empty function is the identity
    std::string note;
};

// The counting obstruction to a dagger on finite sets: reversing the unique
// map {} -> {*} would need a map {*} -> {}, and there is none.
NoDaggerWitness no_dagger_witness();

// All functions from a to b (empty when a is nonempty and b is empty).
std::vector<FunctionMorphism> all_functions(const FiniteSet& a, const FiniteSet& b);

FiniteSet standard_set(int size);    // {a0, .., a(size-1)}
FiniteSet unit_set();                // {*}

// Monoidal backend over finite sets and functions. Non-strict: the tensor is
// a chosen product encoding, and the associator and unitors are genuine
// relabeling bijections. No dagger hook, deliberately.
struct FinSetBackend {
    static constexpr const char* name = "finset";
    static constexpr bool strict_unit = false;

    using Object = FiniteSet;
    using Morphism = FunctionMorphism;

    PairEncoding encoding = PairEncoding::flat;

    Object dom(const Morphism& f) const { return f.dom(); }
    Object cod(const Morphism& f) const { return f.cod(); }
    Morphism identity(const Object& a) const { return FunctionMorphism::identity(a); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return finset::compose(g, f); }
    Morphism tensor(const Morphism& f, const Morphism& g) const;

    Object tensor_object(const Object& a, const Object& b) const {
        return cartesian_product(a, b, encoding).object;
    }
    Object unit_object() const { return unit_set(); }
    Morphism associator(const Object& a, const Object& b, const Object& c) const;
    Morphism left_unitor(const Object& a) const;
    Morphism right_unitor(const Object& a) const;

    bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
    bool object_equal(const Object& a, const Object& b) const { return a == b; }

    std::string no_dagger_note() const {
        return "hom({},{*}) has one element but hom({*},{}) is empty, so no involution can "
               "reverse arrows";
    }

    Object sample_object(Rng& rng, int max_size) const;
    Morphism sample_from(Rng& rng, const Object& dom, int max_size) const;

    std::string print(const Morphism& f) const { return f.to_string(); }
    std::string print_object(const Object& a) const { return a.to_string(); }
};

} // namespace catkit::finset
