#include "catkit/cob2.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace catkit::cob2 {

namespace {

bool ports_partition(std::vector<std::vector<int>> port_lists, int count) {
    std::vector<int> all;
    for (auto& lst : port_lists) all.insert(all.end(), lst.begin(), lst.end());
    std::sort(all.begin(), all.end());
    if (all.size() != static_cast<std::size_t>(count)) return false;
    for (int i = 0; i < count; ++i)
        if (all[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

Cobordism::Cobordism(int dom_circles, int cod_circles, std::vector<Component> components)
    : dom_(dom_circles), cod_(cod_circles), components_(std::move(components)) {
    if (dom_ < 0 || cod_ < 0) throw std::invalid_argument("circle counts must be nonnegative");
    std::vector<std::vector<int>> ins, outs;
    for (Component& c : components_) {
        std::sort(c.in_ports.begin(), c.in_ports.end());
        std::sort(c.out_ports.begin(), c.out_ports.end());
        if (c.genus < 0) throw std::invalid_argument("component genus must be nonnegative");
        ins.push_back(c.in_ports);
        outs.push_back(c.out_ports);
    }
    if (!ports_partition(std::move(ins), dom_))
        throw std::invalid_argument("component in-ports do not partition the incoming circles");
    if (!ports_partition(std::move(outs), cod_))
        throw std::invalid_argument("component out-ports do not partition the outgoing circles");
    auto key = [](const Component& c) {
        return std::make_tuple(c.closed() ? 1 : 0, c.in_ports, c.out_ports, c.genus);
    };
    std::sort(components_.begin(), components_.end(),
              [&](const Component& a, const Component& b) { return key(a) < key(b); });
}

Cobordism Cobordism::identity(int circles) {
    std::vector<Component> comps;
    for (int i = 1; i <= circles; ++i) comps.push_back(Component{{i}, {i}, 0});
    return Cobordism(circles, circles, std::move(comps));
}

int Cobordism::euler() const {
    int chi = 0;
    for (const Component& c : components_) chi += c.euler();
    return chi;
}

std::string Cobordism::to_string() const {
    auto ports = [](const std::vector<int>& p) {
        std::string s = "{";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(p[i]);
        }
        return s + "}";
    };
    std::string out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += " ";
        const Component& c = components_[i];
        out += "(in=" + ports(c.in_ports) + " out=" + ports(c.out_ports) +
               " g=" + std::to_string(c.genus) + ")";
    }
    if (components_.empty()) out = "(empty)";
    return out;
}

Cobordism cup() { return Cobordism(0, 1, {Component{{}, {1}, 0}}); }
Cobordism cap() { return Cobordism(1, 0, {Component{{1}, {}, 0}}); }
Cobordism pants() { return Cobordism(2, 1, {Component{{1, 2}, {1}, 0}}); }
Cobordism copants() { return Cobordism(1, 2, {Component{{1}, {1, 2}, 0}}); }
Cobordism closed_surface(int genus) { return Cobordism(0, 0, {Component{{}, {}, genus}}); }

Cobordism permutation(const std::vector<int>& sigma) {
    int k = static_cast<int>(sigma.size());
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int v : sigma) {
        if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation: sigma is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::vector<Component> comps;
    for (int i = 0; i < k; ++i) comps.push_back(Component{{i + 1}, {sigma[static_cast<std::size_t>(i)] + 1}, 0});
    return Cobordism(k, k, std::move(comps));
}

Cobordism swap_circles() { return permutation({1, 0}); }

Cobordism compose(const Cobordism& mp, const Cobordism& m) {
    if (m.cod() != mp.dom())
        throw std::invalid_argument("compose: glued boundary mismatch (" + std::to_string(m.cod()) +
                                    " vs " + std::to_string(mp.dom()) + ")");
    int k = m.cod();
    int na = static_cast<int>(m.components().size());
    int nb = static_cast<int>(mp.components().size());

    std::vector<int> out_owner(static_cast<std::size_t>(k) + 1, -1);
    std::vector<int> in_owner(static_cast<std::size_t>(k) + 1, -1);
    for (int i = 0; i < na; ++i)
        for (int p : m.components()[static_cast<std::size_t>(i)].out_ports)
            out_owner[static_cast<std::size_t>(p)] = i;
    for (int j = 0; j < nb; ++j)
        for (int p : mp.components()[static_cast<std::size_t>(j)].in_ports)
            in_owner[static_cast<std::size_t>(p)] = j;

    UnionFind uf(na + nb);
    for (int circle = 1; circle <= k; ++circle)
        uf.unite(out_owner[static_cast<std::size_t>(circle)],
                 na + in_owner[static_cast<std::size_t>(circle)]);

    struct Cluster {
        std::vector<int> in_ports, out_ports;
        int chi = 0;
    };
    std::vector<int> cluster_of(static_cast<std::size_t>(na + nb), -1);
    std::vector<Cluster> clusters;
    auto cluster_index = [&](int node) {
        int root = uf.find(node);
        if (cluster_of[static_cast<std::size_t>(root)] < 0) {
            cluster_of[static_cast<std::size_t>(root)] = static_cast<int>(clusters.size());
            clusters.emplace_back();
        }
        return cluster_of[static_cast<std::size_t>(root)];
    };
    for (int i = 0; i < na; ++i) {
        const Component& c = m.components()[static_cast<std::size_t>(i)];
        Cluster& cl = clusters[static_cast<std::size_t>(cluster_index(i))];
        cl.in_ports.insert(cl.in_ports.end(), c.in_ports.begin(), c.in_ports.end());
        cl.chi += c.euler();
    }
    for (int j = 0; j < nb; ++j) {
        const Component& c = mp.components()[static_cast<std::size_t>(j)];
        Cluster& cl = clusters[static_cast<std::size_t>(cluster_index(na + j))];
        cl.out_ports.insert(cl.out_ports.end(), c.out_ports.begin(), c.out_ports.end());
        cl.chi += c.euler();
    }

    std::vector<Component> result;
    for (Cluster& cl : clusters) {
        int b = static_cast<int>(cl.in_ports.size() + cl.out_ports.size());
        int numerator = 2 - cl.chi - b;
        if (numerator < 0 || numerator % 2 != 0)
            throw InternalError("gluing produced an impossible genus: chi=" + std::to_string(cl.chi) +
                                " b=" + std::to_string(b));
        Component comp{std::move(cl.in_ports), std::move(cl.out_ports), numerator / 2};
        if (comp.euler() != cl.chi)
            throw InternalError("Euler characteristic round-trip failed for a glued component");
        result.push_back(std::move(comp));
    }

    Cobordism out(m.dom(), mp.cod(), std::move(result));
    if (out.euler() != m.euler() + mp.euler())
        throw InternalError("Euler characteristic is not additive across this gluing");
    return out;
}

Cobordism tensor(const Cobordism& m, const Cobordism& n) {
    std::vector<Component> comps = m.components();
    for (const Component& c : n.components()) {
        Component shifted = c;
        for (int& p : shifted.in_ports) p += m.dom();
        for (int& p : shifted.out_ports) p += m.cod();
        comps.push_back(std::move(shifted));
    }
    return Cobordism(m.dom() + n.dom(), m.cod() + n.cod(), std::move(comps));
}

Cobordism dagger(const Cobordism& m) {
    std::vector<Component> comps;
    for (const Component& c : m.components()) comps.push_back(Component{c.out_ports, c.in_ports, c.genus});
    return Cobordism(m.cod(), m.dom(), std::move(comps));
}

bool is_unitary(const Cobordism& m) {
    for (const Component& c : m.components())
        if (c.genus != 0 || c.in_ports.size() != 1 || c.out_ports.size() != 1) return false;
    return true;
}

Cobordism random_cobordism(Rng& rng, int dom, int max_circles, int max_layers) {
    Cobordism m = Cobordism::identity(dom);
    int layers = rng.uniform_int(1, std::max(1, max_layers));
    for (int layer = 0; layer < layers; ++layer) {
        int cur = m.cod();
        if (cur > 1 && rng.uniform_int(0, 3) == 0) {
            std::vector<int> sigma(static_cast<std::size_t>(cur));
            std::iota(sigma.begin(), sigma.end(), 0);
            for (int i = cur - 1; i > 0; --i)
                std::swap(sigma[static_cast<std::size_t>(i)],
                          sigma[static_cast<std::size_t>(rng.uniform_int(0, i))]);
            m = compose(permutation(sigma), m);
            continue;
        }
        Cobordism step(0, 0, {});
        int remaining = cur;
        while (remaining > 0) {
            int produced = step.cod();
            int roll = rng.uniform_int(0, 99);
            if (remaining >= 2 && roll < 35) {
                step = tensor(step, pants());
                remaining -= 2;
            } else if (roll < 55 && produced + (remaining - 1) + 2 <= max_circles) {
                step = tensor(step, copants());
                remaining -= 1;
            } else if (roll < 70) {
                step = tensor(step, cap());
                remaining -= 1;
            } else {
                step = tensor(step, Cobordism::identity(1));
                remaining -= 1;
            }
        }
        if (step.cod() < max_circles && rng.uniform_int(0, 4) == 0)
            step = tensor(step, cup());
        if (step.dom() == 0 && step.cod() == 0 && cur == 0 && rng.coin())
            step = cup();
        if (step.dom() != cur) continue;
        m = compose(step, m);
    }
    return m;
}

} // namespace catkit::cob2
