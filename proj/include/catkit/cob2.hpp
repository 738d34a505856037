#pragma once

#include "catkit/rng.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace catkit::cob2 {

// Raised when internal surface bookkeeping breaks (non-integer or negative
// genus, a failed Euler-characteristic cross-check). These indicate a bug,
// not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Connected piece of a two-dimensional cobordism: which incoming and outgoing
// boundary circles it touches (1-based indices, sorted) and its genus. A
// component with no ports is a closed surface.
struct Component {
    std::vector<int> in_ports;
    std::vector<int> out_ports;
    int genus = 0;

    bool closed() const { return in_ports.empty() && out_ports.empty(); }
    // chi = 2 - 2g - b for a compact orientable surface with b boundary circles.
    int euler() const {
        return 2 - 2 * genus - static_cast<int>(in_ports.size() + out_ports.size());
    }

    bool operator==(const Component& other) const = default;
};

// Diffeomorphism class of a 2-cobordism between m and k circles, kept in a
// canonical normal form: the sorted multiset of its components. Equality of
// normal forms decides equality of morphisms.
class Cobordism {
public:
    Cobordism(int dom_circles, int cod_circles, std::vector<Component> components);

    static Cobordism identity(int circles);

    int dom() const { return dom_; }
    int cod() const { return cod_; }
    const std::vector<Component>& components() const { return components_; }

    int euler() const;

    bool operator==(const Cobordism& other) const = default;

    std::string to_string() const;

private:
    int dom_, cod_;
    std::vector<Component> components_;
};

// Generators.
Cobordism cup();      // 0 -> 1, disk read as a birth
Cobordism cap();      // 1 -> 0, disk read as a death
Cobordism pants();    // 2 -> 1
Cobordism copants();  // 1 -> 2
Cobordism closed_surface(int genus);  // 0 -> 0

// k cylinders routing circle i to circle sigma[i] (0-based images); throws
// std::invalid_argument when sigma is not a bijection.
Cobordism permutation(const std::vector<int>& sigma);
Cobordism swap_circles();  // permutation({1, 0})

// Glue mp after m along mp.dom() = m.cod() circles. Clusters of components
// connected through the glued circles merge; chi adds (circles carry chi 0)
// and the genus of each merged piece is recovered from chi = 2 - 2g - b.
// Cross-checks chi additivity on every call and throws InternalError on a
// breach.
Cobordism compose(const Cobordism& mp, const Cobordism& m);

// Disjoint union, shifting the second argument's port indices.
Cobordism tensor(const Cobordism& m, const Cobordism& n);

// Reverse the arrow by swapping the boundary roles of every component.
Cobordism dagger(const Cobordism& m);

// True iff every component is a genus-0 cylinder carrying one circle to one
// circle, i.e. the cobordism permutes circles without topology change.
bool is_unitary(const Cobordism& m);

// Random composite of generator layers starting from `dom` circles, keeping
// every intermediate object within max_circles. Uses the real structure maps,
// independent of any backend overrides.
Cobordism random_cobordism(Rng& rng, int dom, int max_circles, int max_layers = 3);

// Strict monoidal dagger backend; objects are circle counts.
struct Cob2Backend {
    static constexpr const char* name = "cob2";
    static constexpr bool strict_unit = true;

    using Object = int;
    using Morphism = Cobordism;

    Object dom(const Morphism& f) const { return f.dom(); }
    Object cod(const Morphism& f) const { return f.cod(); }
    Morphism identity(Object a) const { return Cobordism::identity(a); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return cob2::compose(g, f); }
    Morphism dagger(const Morphism& f) const { return cob2::dagger(f); }
    Morphism tensor(const Morphism& f, const Morphism& g) const { return cob2::tensor(f, g); }

    Object tensor_object(Object a, Object b) const { return a + b; }
    Object unit_object() const { return 0; }
    Morphism associator(Object a, Object b, Object c) const {
        return Cobordism::identity(a + b + c);
    }
    Morphism left_unitor(Object a) const { return Cobordism::identity(a); }
    Morphism right_unitor(Object a) const { return Cobordism::identity(a); }

    bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
    bool object_equal(Object a, Object b) const { return a == b; }

    Object sample_object(Rng& rng, int max_size) const {
        if (max_size < 0) throw std::runtime_error("sampler exhausted: negative size bound");
        return rng.uniform_int(0, max_size);
    }
    Morphism sample_from(Rng& rng, Object dom, int max_size) const {
        return random_cobordism(rng, dom, max_size);
    }

    std::string print(const Morphism& f) const { return f.to_string(); }
    std::string print_object(Object a) const { return std::to_string(a); }
};

} // namespace catkit::cob2
