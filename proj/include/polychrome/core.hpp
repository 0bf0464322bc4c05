#pragma once

// Edge-colorings of K_n and the structural predicates used throughout the
// library: ordered vertices, unitary vertices, combed colorings, inherited
// (main-color) vertex colorings and majority-prefix certificates.
//
// Vertices are 1-indexed. Edges are unordered pairs {i, j} with i < j and are
// stored once, in lexicographic order, in a dense triangular array.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polychrome {

using Vertex = int;
using Color = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool touches(Vertex w) const { return u == w || v == w; }
    bool disjoint(const Edge& o) const { return !touches(o.u) && !touches(o.v); }
    Vertex other(Vertex w) const { return w == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr std::size_t edge_count(int n) {
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Position of edge {i, j} (i < j) in lexicographic order.
constexpr std::size_t edge_index(int n, Vertex i, Vertex j) {
    auto row = static_cast<std::size_t>(i - 1);
    return row * static_cast<std::size_t>(2 * n - i) / 2 + static_cast<std::size_t>(j - i - 1);
}

/// All edges of K_n in lexicographic order; `edge_index` inverts this.
std::vector<Edge> all_edges(int n);

class EdgeColoring {
public:
    /// `colors` lists the color of every edge in lexicographic edge order.
    /// Colors must be positive; unused labels are compacted away so that the
    /// palette is exactly 1..k, preserving the relative order of labels.
    EdgeColoring(int n, std::vector<Color> colors);

    static EdgeColoring monochromatic(int n);

    template <class F>
    static EdgeColoring from_function(int n, F&& color_of) {
        std::vector<Color> colors;
        colors.reserve(edge_count(n));
        for (Vertex i = 1; i <= n; ++i)
            for (Vertex j = i + 1; j <= n; ++j) colors.push_back(color_of(i, j));
        return EdgeColoring(n, std::move(colors));
    }

    int n() const { return n_; }
    int k() const { return k_; }

    Color color(Vertex a, Vertex b) const {
        if (a > b) std::swap(a, b);
        return colors_[edge_index(n_, a, b)];
    }
    Color color(const Edge& e) const { return colors_[edge_index(n_, e.u, e.v)]; }

    std::span<const Color> colors() const { return colors_; }

    /// Copy with the listed edges recolored (palette compacted afterwards).
    EdgeColoring recolored(std::span<const std::pair<Edge, Color>> changes) const;
    EdgeColoring recolored(const Edge& e, Color c) const;

    /// Relabel colors by first occurrence along the lexicographic edge order.
    EdgeColoring canonical() const;

    /// counts[c] = number of edges at v colored c (index 0 unused).
    std::vector<int> color_degrees(Vertex v) const;

    /// Number of edges colored c.
    std::size_t class_size(Color c) const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<Color> colors_;
};

class VertexOrdering {
public:
    /// `order[p-1]` is the vertex at position p.
    explicit VertexOrdering(std::vector<Vertex> order);
    static VertexOrdering identity(int n);

    int n() const { return static_cast<int>(order_.size()); }
    Vertex at(int position) const { return order_[position - 1]; }
    int position(Vertex v) const { return position_[v]; }
    std::span<const Vertex> order() const { return order_; }

    friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;

private:
    std::vector<Vertex> order_;
    std::vector<int> position_;
};

struct UnitaryVertex {
    Vertex vertex = 0;
    Color main = 0;
    Color minority = 0;
    Vertex partner = 0;

    friend bool operator==(const UnitaryVertex&, const UnitaryVertex&) = default;
};

/// Main colors, inherited classes M_1..M_k and their prefix counts for a
/// coloring that is combed under a fixed ordering.
class InheritedColoring {
public:
    InheritedColoring(VertexOrdering ordering, std::vector<Color> main_by_position, int k,
                      std::vector<UnitaryVertex> unitary);

    int n() const { return ordering_.n(); }
    int k() const { return k_; }
    const VertexOrdering& ordering() const { return ordering_; }

    Color main(Vertex v) const { return main_by_position_[ordering_.position(v) - 1]; }
    Color main_at(int position) const { return main_by_position_[position - 1]; }

    /// Vertices of M_t, left to right.
    const std::vector<Vertex>& members(Color t) const { return classes_[t - 1]; }
    std::vector<int> class_sizes() const;

    /// |M_t(j)|: members of M_t among the first j positions.
    int prefix_count(Color t, int j) const {
        return prefix_[static_cast<std::size_t>(t - 1) * static_cast<std::size_t>(n() + 1) +
                       static_cast<std::size_t>(j)];
    }

    std::span<const UnitaryVertex> unitary() const { return unitary_; }
    bool is_unitary(Vertex v) const;
    bool class_has_unitary(Color t) const;

private:
    VertexOrdering ordering_;
    std::vector<Color> main_by_position_;
    int k_ = 0;
    std::vector<UnitaryVertex> unitary_;
    std::vector<std::vector<Vertex>> classes_;
    std::vector<int> prefix_;
};

enum class MajorityMode { Strict, Weak };

struct ColorWitness {
    enum class Kind { Prefix, Unitary, Fails };
    Kind kind = Kind::Fails;
    int j = 0;  // witnessing prefix length when kind == Prefix

    friend bool operator==(const ColorWitness&, const ColorWitness&) = default;
};

struct MajorityCertificate {
    int n = 0;
    MajorityMode mode = MajorityMode::Strict;
    std::vector<ColorWitness> per_color;  // index t-1

    int k() const { return static_cast<int>(per_color.size()); }
    const ColorWitness& at(Color t) const { return per_color[t - 1]; }
    bool complete() const;
    std::vector<Color> failing() const;
    /// Prefix-witnessed colors sorted by their witness index j_t.
    std::vector<Color> colors_by_witness() const;
};

/// Main color at position i if every edge from v_i to a later vertex has one
/// color. Positions n-1 and n return the color of v_{n-1} v_n.
std::optional<Color> is_ordered_at(const EdgeColoring& c, const VertexOrdering& o, int i);

/// (main a, minority b, partner u) when v has n-2 edges colored a, one edge
/// vu colored b != a, and u has n-2 edges colored b. For n = 3 every
/// two-colored vertex has two readings; the first one found scanning the
/// minority edge by ascending neighbor label is returned.
std::optional<UnitaryVertex> is_unitary(const EdgeColoring& c, Vertex v);

/// Main colors and classes under `o`. Throws std::invalid_argument when some
/// position is neither ordered nor part of a unitary prefix of size 3 or 4.
InheritedColoring inherited_coloring(const EdgeColoring& c, const VertexOrdering& o);

/// Searches for an ordering under which `c` is combed: a unitary prefix of
/// size 3 or 4 is tried first, then greedy smallest-label ordering.
std::optional<InheritedColoring> comb_certificate(const EdgeColoring& c);

MajorityCertificate majority_certificate(const InheritedColoring& ic, MajorityMode mode);

}  // namespace polychrome
