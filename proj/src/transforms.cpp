#include "polychrome/transforms.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "polychrome/verify.hpp"

namespace polychrome {

namespace {

bool contains(const std::vector<Edge>& edges, const Edge& e) {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

int order_of(const SubgraphWitness& w) {
    int n = 0;
    for (const auto& e : w.edges) n = std::max(n, e.v);
    return n;
}

std::vector<Edge> replace_pair(const std::vector<Edge>& edges, const Edge& e1, const Edge& e2, const Edge& f1,
                               const Edge& f2) {
    std::vector<Edge> out;
    for (const auto& e : edges)
        if (e != e1 && e != e2) out.push_back(e);
    out.push_back(f1);
    out.push_back(f2);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SubgraphWitness twist(const SubgraphWitness& h, const Edge& e1, const Edge& e2) {
    const int n = order_of(h);
    if (h.kind != FamilyKind::HamiltonianCycle || !is_valid_member(h, n))
        throw std::invalid_argument("twist needs a Hamiltonian cycle");
    if (!contains(h.edges, e1) || !contains(h.edges, e2)) throw std::invalid_argument("twist edges must lie on the cycle");
    if (!e1.disjoint(e2)) throw std::invalid_argument("twist edges must be disjoint");
    auto order = cycle_order(h, n);
    auto index_of = [&](const Edge& e) {
        for (int i = 0; i < n; ++i)
            if (Edge(order[i], order[(i + 1) % n]) == e) return i;
        return -1;
    };
    int i = index_of(e1), j = index_of(e2);
    if (i > j) std::swap(i, j);
    // a -> b ... c -> d along the orientation; reversing b..c joins a-c and b-d
    const Vertex a = order[i], b = order[i + 1], c = order[j], d = order[(j + 1) % n];
    return SubgraphWitness{FamilyKind::HamiltonianCycle,
                           replace_pair(h.edges, Edge(a, b), Edge(c, d), Edge(a, c), Edge(b, d))};
}

SubgraphWitness two_switch(const SubgraphWitness& f, const Edge& e1, const Edge& e2, int choice) {
    const int n = order_of(f);
    SubgraphWitness as_factor{FamilyKind::TwoFactor, f.edges};
    if (f.kind == FamilyKind::OneFactor || !is_valid_member(as_factor, n))
        throw std::invalid_argument("2-switch needs a 2-factor");
    if (!contains(f.edges, e1) || !contains(f.edges, e2)) throw std::invalid_argument("2-switch edges must lie in the 2-factor");
    if (!e1.disjoint(e2)) throw std::invalid_argument("2-switch edges must be disjoint");
    if (choice != 0 && choice != 1) throw std::invalid_argument("2-switch choice must be 0 or 1");
    const Edge f1 = choice == 0 ? Edge(e1.u, e2.u) : Edge(e1.u, e2.v);
    const Edge f2 = choice == 0 ? Edge(e1.v, e2.v) : Edge(e1.v, e2.u);
    if (contains(f.edges, f1) || contains(f.edges, f2))
        throw std::invalid_argument("2-switch choice " + std::to_string(choice) + " would duplicate an edge");
    return SubgraphWitness{FamilyKind::TwoFactor, replace_pair(f.edges, e1, e2, f1, f2)};
}

const MaxVertexEntry& MaxVertexProfile::entry(Vertex v) const {
    for (const auto& e : entries)
        if (e.vertex == v) return e;
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not in Z");
}

MaxVertexProfile max_vertex_profile(const EdgeColoring& c, const std::vector<Vertex>& x) {
    MaxVertexProfile p;
    for (Vertex v = 1; v <= c.n(); ++v)
        if (std::find(x.begin(), x.end(), v) == x.end()) p.z.push_back(v);
    if (p.z.empty()) throw std::invalid_argument("max-vertex profile needs V \\ X nonempty");

    for (Vertex v : p.z) {
        std::vector<int> counts(static_cast<std::size_t>(c.k()) + 1, 0);
        for (Vertex w : p.z)
            if (w != v) ++counts[c.color(v, w)];
        MaxVertexEntry e;
        e.vertex = v;
        for (Color col = 1; col <= c.k(); ++col)
            if (counts[col] > e.degree) {
                e.degree = counts[col];
                e.color = col;
            }
        int others = 0;
        Color single = 0;
        bool mixed = false;
        for (Color col = 1; col <= c.k(); ++col) {
            if (col == e.color || counts[col] == 0) continue;
            others += counts[col];
            if (single == 0) single = col;
            else mixed = true;
        }
        if (others > 0 && !mixed) e.minority = single;
        p.max_degree = std::max(p.max_degree, e.degree);
        p.entries.push_back(e);
    }

    std::set<std::pair<Color, Color>> kinds;
    for (auto& e : p.entries) {
        e.is_max = e.degree == p.max_degree;
        if (e.is_max && e.minority) kinds.emplace(e.color, *e.minority);
    }
    if (kinds.size() == 2) {
        auto [a, b] = *kinds.begin();
        if (kinds.count({b, a})) {
            p.pair = std::pair(a, b);
            for (const auto& e : p.entries) {
                if (e.is_max && e.minority && e.color == a && *e.minority == b) p.s.push_back(e.vertex);
                else if (e.is_max && e.minority && e.color == b && *e.minority == a) p.t.push_back(e.vertex);
                else p.w.push_back(e.vertex);
            }
        }
    }
    return p;
}

EdgeColoring recolor_unitary_triple(const EdgeColoring& c, Vertex x, Vertex y, Vertex z) {
    const int n = c.n();
    auto in_range = [n](Vertex v) { return v >= 1 && v <= n; };
    if (n < 3 || !in_range(x) || !in_range(y) || !in_range(z) || x == y || y == z || x == z)
        throw std::invalid_argument("recolor_unitary_triple needs three distinct vertices");
    if (c.k() < 3) throw std::invalid_argument("recolor_unitary_triple needs colors 1, 2 and 3");
    return EdgeColoring::from_function(n, [&](Vertex a, Vertex b) -> Color {
        auto rule = [&](Vertex p, Vertex q) -> Color {
            if (p == x && q != y) return 1;
            if (p == y && q != z) return 2;
            if (p == z && q != x) return 3;
            return 0;
        };
        if (Color r = rule(a, b)) return r;
        if (Color r = rule(b, a)) return r;
        return c.color(a, b);
    });
}

namespace {

// Greedily appends vertices that send one color to every vertex not yet placed.
void extend_prefix(const EdgeColoring& c, std::vector<Vertex>& prefix) {
    std::vector<Vertex> rest;
    for (Vertex v = 1; v <= c.n(); ++v)
        if (std::find(prefix.begin(), prefix.end(), v) == prefix.end()) rest.push_back(v);
    while (!rest.empty()) {
        if (rest.size() <= 2) {
            prefix.insert(prefix.end(), rest.begin(), rest.end());
            return;
        }
        auto it = std::find_if(rest.begin(), rest.end(), [&](Vertex v) {
            const Vertex first = rest[0] == v ? rest[1] : rest[0];
            const Color col = c.color(v, first);
            return std::all_of(rest.begin(), rest.end(), [&](Vertex w) { return w == v || c.color(v, w) == col; });
        });
        if (it == rest.end()) return;
        prefix.push_back(*it);
        rest.erase(it);
    }
}

}  // namespace

std::vector<Vertex> ordered_prefix(const EdgeColoring& c) {
    std::vector<Vertex> prefix;
    extend_prefix(c, prefix);
    return prefix;
}

ImproveResult improve_toward_combed(const EdgeColoring& c, FamilyKind kind) {
    if (!is_polychromatic(c, kind).polychromatic) throw std::invalid_argument("input coloring is not polychromatic");
    EdgeColoring cur = c;
    int moves = 0;
    // X only grows: recolored edges lie inside Z, so the old prefix stays valid
    std::vector<Vertex> x;
    extend_prefix(cur, x);
    while (static_cast<int>(x.size()) < cur.n()) {
        const auto profile = max_vertex_profile(cur, x);

        std::vector<MaxVertexEntry> order;
        for (const auto& e : profile.entries)
            if (e.is_max) order.push_back(e);
        std::stable_sort(order.begin(), order.end(),
                         [](const MaxVertexEntry& a, const MaxVertexEntry& b) { return a.degree > b.degree; });

        bool moved = false;
        for (const auto& entry : order) {
            const Vertex v = entry.vertex;
            for (Vertex u : profile.z) {
                if (u == v || cur.color(u, v) == entry.color) continue;
                const Edge uv(u, v);
                AllowedGraph g = AllowedGraph::avoiding(cur, cur.color(uv));
                g.add(uv);
                if (find_member_through(kind, g, uv)) continue;  // uv is the only edge of its color in some member
                EdgeColoring next = cur.recolored(uv, entry.color);
                if (next.k() != cur.k() || !is_polychromatic(next, kind).polychromatic)
                    throw std::logic_error("exchange move broke polychromaticity");
                auto next_x = x;
                extend_prefix(next, next_x);
                const bool grows = next_x.size() > x.size() ||
                                   (static_cast<int>(next_x.size()) < next.n() &&
                                    max_vertex_profile(next, next_x).max_degree > profile.max_degree);
                if (!grows) throw std::logic_error("exchange move did not improve the measure");
                cur = std::move(next);
                x = std::move(next_x);
                ++moves;
                moved = true;
                break;
            }
            if (moved) break;
        }
        if (!moved) break;
    }
    const bool combed = comb_certificate(cur).has_value();
    return ImproveResult{std::move(cur), moves, combed};
}

}  // namespace polychrome
