#include "catkit/finset.hpp"

#include <algorithm>
#include <stdexcept>

namespace catkit::finset {

Label Label::atom(std::string name) {
    Label l;
    l.kind_ = Kind::atom;
    l.name_ = std::move(name);
    return l;
}

Label Label::pair(Label first, Label second) {
    Label l;
    l.kind_ = Kind::pair;
    l.children_.push_back(std::move(first));
    l.children_.push_back(std::move(second));
    return l;
}

Label Label::set(std::vector<Label> members) {
    Label l;
    l.kind_ = Kind::set;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    l.children_ = std::move(members);
    return l;
}

bool Label::operator==(const Label& other) const {
    return kind_ == other.kind_ && name_ == other.name_ && children_ == other.children_;
}

bool Label::operator<(const Label& other) const {
    if (kind_ != other.kind_) return kind_ < other.kind_;
    if (kind_ == Kind::atom) return name_ < other.name_;
    return children_ < other.children_;
}

std::string Label::to_string() const {
    switch (kind_) {
        case Kind::atom:
            return name_;
        case Kind::pair:
            return "(" + children_[0].to_string() + "," + children_[1].to_string() + ")";
        case Kind::set: {
            std::string out = "{";
            for (std::size_t i = 0; i < children_.size(); ++i) {
                if (i) out += ",";
                out += children_[i].to_string();
            }
            return out + "}";
        }
    }
    return "";
}

FiniteSet::FiniteSet(std::vector<Label> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 1; i < labels_.size(); ++i)
        if (labels_[i - 1] == labels_[i])
            throw std::invalid_argument("finite set labels must be pairwise distinct");
}

bool FiniteSet::contains(const Label& l) const {
    return std::binary_search(labels_.begin(), labels_.end(), l);
}

std::string FiniteSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) out += ",";
        out += labels_[i].to_string();
    }
    return out + "}";
}

FunctionMorphism::FunctionMorphism(FiniteSet dom, FiniteSet cod, std::map<Label, Label> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (dom_.size() > 0 && cod_.size() == 0)
        throw std::invalid_argument("no function exists from a nonempty set to the empty set");
    if (table_.size() != static_cast<std::size_t>(dom_.size()))
        throw std::invalid_argument("function table size does not match domain");
    for (const auto& [x, y] : table_) {
        if (!dom_.contains(x)) throw std::invalid_argument("function table key outside domain");
        if (!cod_.contains(y)) throw std::invalid_argument("function table value outside codomain");
    }
}

FunctionMorphism FunctionMorphism::identity(const FiniteSet& a) {
    std::map<Label, Label> table;
    for (const Label& l : a.labels()) table.emplace(l, l);
    return FunctionMorphism(a, a, std::move(table));
}

const Label& FunctionMorphism::apply(const Label& x) const {
    auto it = table_.find(x);
    if (it == table_.end()) throw std::invalid_argument("function applied outside its domain");
    return it->second;
}

std::string FunctionMorphism::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [x, y] : table_) {
        if (!first) out += ", ";
        first = false;
        out += x.to_string() + "|->" + y.to_string();
    }
    return out + "}";
}

FunctionMorphism compose(const FunctionMorphism& g, const FunctionMorphism& f) {
    if (!(f.cod() == g.dom()))
        throw std::invalid_argument("compose: codomain of first-applied function differs from domain of second");
    std::map<Label, Label> table;
    for (const auto& [x, y] : f.table()) table.emplace(x, g.apply(y));
    return FunctionMorphism(f.dom(), g.cod(), std::move(table));
}

const Label& CartesianProduct::pair_of(const Label& s, const Label& t) const {
    auto it = pair_label.find({s, t});
    if (it == pair_label.end()) throw std::invalid_argument("pair lookup outside product");
    return it->second;
}

CartesianProduct cartesian_product(const FiniteSet& s, const FiniteSet& t, PairEncoding enc) {
    std::vector<Label> labels;
    std::map<std::pair<Label, Label>, Label> pair_label;
    std::map<Label, Label> table1, table2;
    for (const Label& a : s.labels())
        for (const Label& b : t.labels()) {
            Label p = (enc == PairEncoding::flat)
                          ? Label::pair(a, b)
                          : Label::set({Label::set({a}), Label::set({a, b})});
            labels.push_back(p);
            pair_label.emplace(std::make_pair(a, b), p);
            table1.emplace(p, a);
            table2.emplace(p, b);
        }
    FiniteSet object(std::move(labels));
    CartesianProduct out{
        object,
        FunctionMorphism(object, s, std::move(table1)),
        FunctionMorphism(object, t, std::move(table2)),
        std::move(pair_label),
    };
    return out;
}

FunctionMorphism pairing(const FunctionMorphism& f1, const FunctionMorphism& f2,
                         const CartesianProduct& product) {
    if (!(f1.dom() == f2.dom()))
        throw std::invalid_argument("pairing: the two components must share a domain");
    if (!(f1.cod() == product.p1.cod()) || !(f2.cod() == product.p2.cod()))
        throw std::invalid_argument("pairing: component codomains do not match the product factors");
    std::map<Label, Label> table;
    for (const Label& x : f1.dom().labels())
        table.emplace(x, product.pair_of(f1.apply(x), f2.apply(x)));
    return FunctionMorphism(f1.dom(), product.object, std::move(table));
}

FunctionMorphism diagonal(const FiniteSet& a, const CartesianProduct& product_aa) {
    FunctionMorphism id = FunctionMorphism::identity(a);
    return pairing(id, id, product_aa);
}

namespace {

// The universal property for finite sets: x |-> (p1 x, p2 x) must be a
// bijection onto S x T. Returns the inverse lookup when it holds.
std::map<std::pair<Label, Label>, Label> product_inverse(const ProductCandidate& cand,
                                                         const FiniteSet& s, const FiniteSet& t) {
    if (!(cand.p1.dom() == cand.object) || !(cand.p2.dom() == cand.object))
        throw std::invalid_argument("product candidate projections must start at the candidate object");
    if (!(cand.p1.cod() == s) || !(cand.p2.cod() == t))
        throw std::invalid_argument("product candidate projections do not land in the given factors");
    if (cand.object.size() != s.size() * t.size())
        throw std::invalid_argument("product candidate fails the universal property: wrong size");
    std::map<std::pair<Label, Label>, Label> inv;
    for (const Label& x : cand.object.labels()) {
        auto key = std::make_pair(cand.p1.apply(x), cand.p2.apply(x));
        if (!inv.emplace(key, x).second)
            throw std::invalid_argument("product candidate fails the universal property: projections collide");
    }
    return inv;
}

} // namespace

FunctionMorphism canonical_product_iso(const ProductCandidate& p, const ProductCandidate& q,
                                       const FiniteSet& s, const FiniteSet& t) {
    product_inverse(p, s, t);
    auto q_inv = product_inverse(q, s, t);
    std::map<Label, Label> table;
    for (const Label& x : p.object.labels())
        table.emplace(x, q_inv.at({p.p1.apply(x), p.p2.apply(x)}));
    return FunctionMorphism(p.object, q.object, std::move(table));
}

TerminalReport terminal_and_elements(const FiniteSet& a) {
    FiniteSet one = unit_set();
    const Label& star = one.labels()[0];
    std::map<Label, Label> to_one;
    for (const Label& x : a.labels()) to_one.emplace(x, star);
    std::vector<FunctionMorphism> elements;
    for (const Label& x : a.labels())
        elements.push_back(FunctionMorphism(one, a, {{star, x}}));
    return TerminalReport{one, FunctionMorphism(a, one, std::move(to_one)), std::move(elements)};
}

NoDaggerWitness no_dagger_witness() {
    FiniteSet empty;
    FiniteSet one = unit_set();
    NoDaggerWitness w;
    w.hom_empty_to_one = static_cast<int>(all_functions(empty, one).size());
    w.hom_one_to_empty = static_cast<int>(all_functions(one, empty).size());
    w.hom_empty_to_empty = static_cast<int>(all_functions(empty, empty).size());
    w.note = "a dagger would have to send the unique map {}->{*} to a map {*}->{}, and hom({*},{}) is empty";
    return w;
}

std::vector<FunctionMorphism> all_functions(const FiniteSet& a, const FiniteSet& b) {
    std::vector<FunctionMorphism> out;
    if (a.size() == 0) {
        out.push_back(FunctionMorphism(a, b, {}));
        return out;
    }
    if (b.size() == 0) return out;
    std::vector<int> choice(static_cast<std::size_t>(a.size()), 0);
    while (true) {
        std::map<Label, Label> table;
        for (int i = 0; i < a.size(); ++i)
            table.emplace(a.labels()[static_cast<std::size_t>(i)],
                          b.labels()[static_cast<std::size_t>(choice[static_cast<std::size_t>(i)])]);
        out.push_back(FunctionMorphism(a, b, std::move(table)));
        int i = 0;
        while (i < a.size()) {
            if (++choice[static_cast<std::size_t>(i)] < b.size()) break;
            choice[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == a.size()) break;
    }
    return out;
}

FiniteSet standard_set(int size) {
    std::vector<Label> labels;
    for (int i = 0; i < size; ++i) labels.push_back(Label::atom("a" + std::to_string(i)));
    return FiniteSet(std::move(labels));
}

FiniteSet unit_set() { return FiniteSet({Label::atom("*")}); }

FunctionMorphism FinSetBackend::tensor(const Morphism& f, const Morphism& g) const {
    CartesianProduct dom_prod = cartesian_product(f.dom(), g.dom(), encoding);
    CartesianProduct cod_prod = cartesian_product(f.cod(), g.cod(), encoding);
    std::map<Label, Label> table;
    for (const Label& a : f.dom().labels())
        for (const Label& b : g.dom().labels())
            table.emplace(dom_prod.pair_of(a, b), cod_prod.pair_of(f.apply(a), g.apply(b)));
    return FunctionMorphism(dom_prod.object, cod_prod.object, std::move(table));
}

FunctionMorphism FinSetBackend::associator(const Object& a, const Object& b, const Object& c) const {
    CartesianProduct ab = cartesian_product(a, b, encoding);
    CartesianProduct ab_c = cartesian_product(ab.object, c, encoding);
    CartesianProduct bc = cartesian_product(b, c, encoding);
    CartesianProduct a_bc = cartesian_product(a, bc.object, encoding);
    std::map<Label, Label> table;
    for (const Label& x : a.labels())
        for (const Label& y : b.labels())
            for (const Label& z : c.labels())
                table.emplace(ab_c.pair_of(ab.pair_of(x, y), z),
                              a_bc.pair_of(x, bc.pair_of(y, z)));
    return FunctionMorphism(ab_c.object, a_bc.object, std::move(table));
}

FunctionMorphism FinSetBackend::left_unitor(const Object& a) const {
    CartesianProduct ia = cartesian_product(unit_set(), a, encoding);
    Label star = unit_set().labels()[0];
    std::map<Label, Label> table;
    for (const Label& x : a.labels()) table.emplace(ia.pair_of(star, x), x);
    return FunctionMorphism(ia.object, a, std::move(table));
}

FunctionMorphism FinSetBackend::right_unitor(const Object& a) const {
    CartesianProduct ai = cartesian_product(a, unit_set(), encoding);
    Label star = unit_set().labels()[0];
    std::map<Label, Label> table;
    for (const Label& x : a.labels()) table.emplace(ai.pair_of(x, star), x);
    return FunctionMorphism(ai.object, a, std::move(table));
}

FinSetBackend::Object FinSetBackend::sample_object(Rng& rng, int max_size) const {
    if (max_size < 0) throw std::runtime_error("sampler exhausted: negative size bound");
    return standard_set(rng.uniform_int(0, max_size));
}

FunctionMorphism FinSetBackend::sample_from(Rng& rng, const Object& dom, int max_size) const {
    int min_cod = dom.size() > 0 ? 1 : 0;
    if (max_size < min_cod) throw std::runtime_error("sampler exhausted: bounds admit no codomain");
    FiniteSet cod = standard_set(rng.uniform_int(min_cod, max_size));
    std::map<Label, Label> table;
    for (const Label& x : dom.labels())
        table.emplace(x, cod.labels()[static_cast<std::size_t>(rng.uniform_int(0, cod.size() - 1))]);
    return FunctionMorphism(dom, cod, std::move(table));
}

} // namespace catkit::finset
