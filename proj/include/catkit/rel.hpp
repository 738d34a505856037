#pragma once

#include "catkit/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace catkit::rel {

// Relation between finite sets {0..src_size-1} and {0..dst_size-1}, stored as
// a dst_size x src_size truth-value matrix: rows index the codomain, columns
// the domain, and entry (y, x) says x relates to y. Either size may be zero.
class BoolRelation {
public:
    BoolRelation(int src_size, int dst_size);
    BoolRelation(int src_size, int dst_size, std::vector<std::uint8_t> matrix);

    static BoolRelation identity(int n);

    int src_size() const { return src_; }
    int dst_size() const { return dst_; }

    bool at(int y, int x) const { return matrix_[static_cast<std::size_t>(y) * src_ + x] != 0; }
    void set(int y, int x, bool v) { matrix_[static_cast<std::size_t>(y) * src_ + x] = v ? 1 : 0; }

    bool operator==(const BoolRelation& other) const = default;

    std::string to_string() const;

private:
    int src_, dst_;
    std::vector<std::uint8_t> matrix_;
};

// "or of ands" matrix product: x (S.R) z iff some intermediate y has x R y and
// y S z. Throws std::invalid_argument on a size mismatch.
BoolRelation compose(const BoolRelation& s, const BoolRelation& r);

// Transpose.
BoolRelation dagger(const BoolRelation& r);

// Pairwise relation on row-major index pairs: (x,x') relates to (y,y') iff
// x R y and x' S y'.
BoolRelation tensor(const BoolRelation& r, const BoolRelation& s);

// All 2^(src*dst) relations between sets of the given sizes, in a stable
// bit-pattern order. Intended for the exhaustive sweeps at sizes <= 3.
std::vector<BoolRelation> all_relations(int src_size, int dst_size);

BoolRelation random_relation(Rng& rng, int src_size, int dst_size);

// Strict monoidal dagger backend; objects are set sizes, the tensor pairs
// indices row-major, equality is exact.
struct RelBackend {
    static constexpr const char* name = "rel";
    static constexpr bool strict_unit = true;

    using Object = int;
    using Morphism = BoolRelation;

    Object dom(const Morphism& f) const { return f.src_size(); }
    Object cod(const Morphism& f) const { return f.dst_size(); }
    Morphism identity(Object a) const { return BoolRelation::identity(a); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return rel::compose(g, f); }
    Morphism dagger(const Morphism& f) const { return rel::dagger(f); }
    Morphism tensor(const Morphism& f, const Morphism& g) const { return rel::tensor(f, g); }

    Object tensor_object(Object a, Object b) const { return a * b; }
    Object unit_object() const { return 1; }
    Morphism associator(Object a, Object b, Object c) const {
        return BoolRelation::identity(a * b * c);
    }
    Morphism left_unitor(Object a) const { return BoolRelation::identity(a); }
    Morphism right_unitor(Object a) const { return BoolRelation::identity(a); }

    bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
    bool object_equal(Object a, Object b) const { return a == b; }

    Object sample_object(Rng& rng, int max_size) const {
        if (max_size < 0) throw std::runtime_error("sampler exhausted: negative size bound");
        return rng.uniform_int(0, max_size);
    }
    Morphism sample_from(Rng& rng, Object dom, int max_size) const {
        return random_relation(rng, dom, sample_object(rng, max_size));
    }

    std::string print(const Morphism& f) const { return f.to_string(); }
    std::string print_object(Object a) const { return std::to_string(a); }
};

} // namespace catkit::rel
