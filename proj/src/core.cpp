#include "polychrome/core.hpp"

#include <array>
#include <map>
#include <numeric>

namespace polychrome {

std::vector<Edge> all_edges(int n) {
    std::vector<Edge> edges;
    edges.reserve(edge_count(n));
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return edges;
}

EdgeColoring::EdgeColoring(int n, std::vector<Color> colors) : n_(n), colors_(std::move(colors)) {
    if (n < 2) throw std::invalid_argument("edge coloring needs n >= 2");
    if (colors_.size() != edge_count(n))
        throw std::invalid_argument("expected " + std::to_string(edge_count(n)) + " edge colors, got " +
                                    std::to_string(colors_.size()));
    std::map<Color, Color> relabel;
    for (Color c : colors_) {
        if (c < 1) throw std::invalid_argument("colors must be positive");
        relabel.emplace(c, 0);
    }
    Color next = 0;
    for (auto& [from, to] : relabel) to = ++next;
    for (Color& c : colors_) c = relabel[c];
    k_ = next;
}

EdgeColoring EdgeColoring::monochromatic(int n) {
    return EdgeColoring(n, std::vector<Color>(edge_count(n), 1));
}

EdgeColoring EdgeColoring::recolored(std::span<const std::pair<Edge, Color>> changes) const {
    auto colors = colors_;
    for (const auto& [e, c] : changes) {
        if (e.u < 1 || e.v > n_ || e.u == e.v) throw std::invalid_argument("edge out of range");
        colors[edge_index(n_, e.u, e.v)] = c;
    }
    return EdgeColoring(n_, std::move(colors));
}

EdgeColoring EdgeColoring::recolored(const Edge& e, Color c) const {
    std::pair<Edge, Color> change{e, c};
    return recolored(std::span<const std::pair<Edge, Color>>(&change, 1));
}

EdgeColoring EdgeColoring::canonical() const {
    std::vector<Color> relabel(static_cast<std::size_t>(k_) + 1, 0);
    Color next = 0;
    auto colors = colors_;
    for (Color& c : colors) {
        if (relabel[c] == 0) relabel[c] = ++next;
        c = relabel[c];
    }
    return EdgeColoring(n_, std::move(colors));
}

std::vector<int> EdgeColoring::color_degrees(Vertex v) const {
    std::vector<int> counts(static_cast<std::size_t>(k_) + 1, 0);
    for (Vertex w = 1; w <= n_; ++w)
        if (w != v) ++counts[color(v, w)];
    return counts;
}

std::size_t EdgeColoring::class_size(Color c) const {
    return static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), c));
}

VertexOrdering::VertexOrdering(std::vector<Vertex> order) : order_(std::move(order)) {
    const int n = static_cast<int>(order_.size());
    position_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int p = 1; p <= n; ++p) {
        Vertex v = order_[p - 1];
        if (v < 1 || v > n || position_[v] != 0) throw std::invalid_argument("ordering is not a permutation of 1..n");
        position_[v] = p;
    }
}

VertexOrdering VertexOrdering::identity(int n) {
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    return VertexOrdering(std::move(order));
}

InheritedColoring::InheritedColoring(VertexOrdering ordering, std::vector<Color> main_by_position, int k,
                                     std::vector<UnitaryVertex> unitary)
    : ordering_(std::move(ordering)),
      main_by_position_(std::move(main_by_position)),
      k_(k),
      unitary_(std::move(unitary)) {
    const int n = ordering_.n();
    if (static_cast<int>(main_by_position_.size()) != n) throw std::invalid_argument("one main color per position");
    classes_.assign(static_cast<std::size_t>(k_), {});
    prefix_.assign(static_cast<std::size_t>(k_) * static_cast<std::size_t>(n + 1), 0);
    for (int p = 1; p <= n; ++p) {
        Color t = main_by_position_[p - 1];
        if (t < 1 || t > k_) throw std::invalid_argument("main color outside palette");
        classes_[t - 1].push_back(ordering_.at(p));
    }
    for (Color t = 1; t <= k_; ++t) {
        int* row = &prefix_[static_cast<std::size_t>(t - 1) * static_cast<std::size_t>(n + 1)];
        for (int p = 1; p <= n; ++p) row[p] = row[p - 1] + (main_by_position_[p - 1] == t ? 1 : 0);
    }
}

std::vector<int> InheritedColoring::class_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(classes_.size());
    for (const auto& cls : classes_) sizes.push_back(static_cast<int>(cls.size()));
    return sizes;
}

bool InheritedColoring::is_unitary(Vertex v) const {
    return std::any_of(unitary_.begin(), unitary_.end(), [v](const UnitaryVertex& u) { return u.vertex == v; });
}

bool InheritedColoring::class_has_unitary(Color t) const {
    return std::any_of(unitary_.begin(), unitary_.end(), [t](const UnitaryVertex& u) { return u.main == t; });
}

bool MajorityCertificate::complete() const {
    return std::none_of(per_color.begin(), per_color.end(),
                        [](const ColorWitness& w) { return w.kind == ColorWitness::Kind::Fails; });
}

std::vector<Color> MajorityCertificate::failing() const {
    std::vector<Color> out;
    for (Color t = 1; t <= k(); ++t)
        if (at(t).kind == ColorWitness::Kind::Fails) out.push_back(t);
    return out;
}

std::vector<Color> MajorityCertificate::colors_by_witness() const {
    std::vector<Color> out;
    for (Color t = 1; t <= k(); ++t)
        if (at(t).kind == ColorWitness::Kind::Prefix) out.push_back(t);
    std::sort(out.begin(), out.end(), [this](Color a, Color b) { return at(a).j < at(b).j; });
    return out;
}

std::optional<Color> is_ordered_at(const EdgeColoring& c, const VertexOrdering& o, int i) {
    const int n = c.n();
    if (o.n() != n) throw std::invalid_argument("ordering size differs from coloring");
    if (i < 1 || i > n) throw std::invalid_argument("position out of range");
    if (i >= n - 1) return c.color(o.at(n - 1), o.at(n));
    const Vertex v = o.at(i);
    const Color main = c.color(v, o.at(i + 1));
    for (int p = i + 2; p <= n; ++p)
        if (c.color(v, o.at(p)) != main) return std::nullopt;
    return main;
}

std::optional<UnitaryVertex> is_unitary(const EdgeColoring& c, Vertex v) {
    const int n = c.n();
    if (n < 3) throw std::invalid_argument("unitary vertices need n >= 3");
    auto degrees = c.color_degrees(v);
    for (Vertex u = 1; u <= n; ++u) {
        if (u == v) continue;
        const Color b = c.color(v, u);
        // the remaining n-2 edges at v share one color a != b
        Color a = 0;
        for (Color col = 1; col <= c.k(); ++col)
            if (col != b && degrees[col] == n - 2) a = col;
        if (a == 0 || degrees[b] != 1) continue;
        if (c.color_degrees(u)[b] == n - 2) return UnitaryVertex{v, a, b, u};
    }
    return std::nullopt;
}

namespace {

using Triple = std::array<UnitaryVertex, 3>;
using Quad = std::array<UnitaryVertex, 4>;

bool sends_single_color(const EdgeColoring& c, Vertex v, std::span<const Vertex> inside, Color col) {
    for (Vertex w = 1; w <= c.n(); ++w) {
        if (std::find(inside.begin(), inside.end(), w) != inside.end()) continue;
        if (c.color(v, w) != col) return false;
    }
    return true;
}

// Cyclic orientation p0 -> p1 -> p2 -> p0: the minority edge of p_i goes to
// p_{i+1} and carries the main color of p_{i+1}.
std::optional<Triple> oriented_triple(const EdgeColoring& c, std::array<Vertex, 3> p) {
    std::array<Color, 3> main{};
    for (int i = 0; i < 3; ++i) main[i] = c.color(p[(i + 2) % 3], p[i]);
    if (main[0] == main[1] || main[1] == main[2] || main[0] == main[2]) return std::nullopt;
    for (int i = 0; i < 3; ++i)
        if (!sends_single_color(c, p[i], p, main[i])) return std::nullopt;
    Triple out;
    for (int i = 0; i < 3; ++i) out[i] = UnitaryVertex{p[i], main[i], main[(i + 1) % 3], p[(i + 1) % 3]};
    return out;
}

std::optional<Triple> unitary_triple(const EdgeColoring& c, Vertex x, Vertex y, Vertex z) {
    if (auto t = oriented_triple(c, {x, z, y})) return t;
    return oriented_triple(c, {x, y, z});
}

std::optional<Quad> unitary_quad(const EdgeColoring& c, std::array<Vertex, 4> s) {
    if (c.n() < 4) return std::nullopt;
    Quad out;
    std::map<Color, int> main_counts;
    for (int i = 0; i < 4; ++i) {
        auto u = is_unitary(c, s[i]);
        if (!u || std::find(s.begin(), s.end(), u->partner) == s.end()) return std::nullopt;
        out[i] = *u;
        ++main_counts[u->main];
    }
    if (main_counts.size() != 2) return std::nullopt;
    for (const auto& [col, count] : main_counts)
        if (count != 2) return std::nullopt;
    return out;
}

// Greedy smallest-label ordering of `rest`: each placed vertex sends one
// color to every vertex placed after it.
std::optional<std::vector<Vertex>> greedy_order(const EdgeColoring& c, std::vector<Vertex> rest) {
    std::vector<Vertex> placed;
    placed.reserve(rest.size());
    while (rest.size() > 2) {
        bool found = false;
        for (std::size_t idx = 0; idx < rest.size() && !found; ++idx) {
            const Vertex v = rest[idx];
            const Vertex first = rest[idx == 0 ? 1 : 0];
            const Color col = c.color(v, first);
            bool mono = true;
            for (Vertex w : rest)
                if (w != v && c.color(v, w) != col) {
                    mono = false;
                    break;
                }
            if (mono) {
                placed.push_back(v);
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    placed.insert(placed.end(), rest.begin(), rest.end());
    return placed;
}

std::vector<Vertex> complement(int n, std::span<const Vertex> taken) {
    std::vector<Vertex> rest;
    for (Vertex v = 1; v <= n; ++v)
        if (std::find(taken.begin(), taken.end(), v) == taken.end()) rest.push_back(v);
    return rest;
}

}  // namespace

InheritedColoring inherited_coloring(const EdgeColoring& c, const VertexOrdering& o) {
    const int n = c.n();
    if (o.n() != n) throw std::invalid_argument("ordering size differs from coloring");
    std::vector<UnitaryVertex> unitary;
    if (n >= 3) {
        if (auto t = unitary_triple(c, o.at(1), o.at(2), o.at(3))) {
            unitary.assign(t->begin(), t->end());
        } else if (n >= 4) {
            if (auto q = unitary_quad(c, {o.at(1), o.at(2), o.at(3), o.at(4)})) unitary.assign(q->begin(), q->end());
        }
    }
    std::sort(unitary.begin(), unitary.end(),
              [&o](const UnitaryVertex& a, const UnitaryVertex& b) { return o.position(a.vertex) < o.position(b.vertex); });

    const int prefix = static_cast<int>(unitary.size());
    std::vector<Color> main(static_cast<std::size_t>(n), 0);
    for (int p = 1; p <= prefix; ++p) main[p - 1] = unitary[p - 1].main;
    for (int p = prefix + 1; p <= n; ++p) {
        if (p == n) {
            main[p - 1] = main[p - 2];
            continue;
        }
        auto col = is_ordered_at(c, o, p);
        if (!col)
            throw std::invalid_argument("vertex " + std::to_string(o.at(p)) + " at position " + std::to_string(p) +
                                        " is neither ordered nor unitary");
        main[p - 1] = *col;
    }
    return InheritedColoring(o, std::move(main), c.k(), std::move(unitary));
}

std::optional<InheritedColoring> comb_certificate(const EdgeColoring& c) {
    const int n = c.n();
    if (n >= 3) {
        std::vector<Vertex> candidates;
        for (Vertex v = 1; v <= n; ++v)
            if (n == 3 || is_unitary(c, v)) candidates.push_back(v);
        const auto m = candidates.size();

        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                for (std::size_t d = b + 1; d < m; ++d) {
                    std::array<Vertex, 3> t{candidates[a], candidates[b], candidates[d]};
                    if (!unitary_triple(c, t[0], t[1], t[2])) continue;
                    if (auto rest = greedy_order(c, complement(n, t))) {
                        std::vector<Vertex> order(t.begin(), t.end());
                        order.insert(order.end(), rest->begin(), rest->end());
                        return inherited_coloring(c, VertexOrdering(std::move(order)));
                    }
                }

        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                for (std::size_t d = b + 1; d < m; ++d)
                    for (std::size_t e = d + 1; e < m; ++e) {
                        std::array<Vertex, 4> s{candidates[a], candidates[b], candidates[d], candidates[e]};
                        auto quad = unitary_quad(c, s);
                        if (!quad) continue;
                        auto rest = greedy_order(c, complement(n, s));
                        if (!rest) continue;
                        // grouped by main color so that for n = 4 the last two share one
                        std::sort(quad->begin(), quad->end(), [](const UnitaryVertex& x, const UnitaryVertex& y) {
                            return std::pair(x.main, x.vertex) < std::pair(y.main, y.vertex);
                        });
                        std::vector<Vertex> order;
                        for (const auto& u : *quad) order.push_back(u.vertex);
                        order.insert(order.end(), rest->begin(), rest->end());
                        return inherited_coloring(c, VertexOrdering(std::move(order)));
                    }
    }
    auto order = greedy_order(c, complement(n, {}));
    if (!order) return std::nullopt;
    return inherited_coloring(c, VertexOrdering(std::move(*order)));
}

MajorityCertificate majority_certificate(const InheritedColoring& ic, MajorityMode mode) {
    MajorityCertificate cert;
    cert.n = ic.n();
    cert.mode = mode;
    cert.per_color.resize(static_cast<std::size_t>(ic.k()));
    for (Color t = 1; t <= ic.k(); ++t) {
        ColorWitness& w = cert.per_color[t - 1];
        if (mode == MajorityMode::Weak && ic.class_has_unitary(t)) {
            w.kind = ColorWitness::Kind::Unitary;
            continue;
        }
        for (int j = 1; j <= ic.n() - 1; ++j) {
            const int twice = 2 * ic.prefix_count(t, j);
            if (mode == MajorityMode::Strict ? twice > j : twice >= j) {
                w = {ColorWitness::Kind::Prefix, j};
                break;
            }
        }
    }
    return cert;
}

}  // namespace polychrome
