#pragma once

// Local moves on members and colorings: twists of Hamiltonian cycles,
// 2-switches of 2-factors, max-vertex profiles, the unitary-triple recoloring
// and a greedy exchange search toward ordered colorings.

#include <optional>
#include <vector>

#include "polychrome/core.hpp"
#include "polychrome/families.hpp"

namespace polychrome {

/// Removes the disjoint cycle edges e1, e2 and adds the unique pair that keeps
/// a single Hamiltonian cycle.
SubgraphWitness twist(const SubgraphWitness& h, const Edge& e1, const Edge& e2);

/// Replaces disjoint edges e1 = {a, b}, e2 = {c, d} (a < b, c < d) by
/// {a, c}, {b, d} (choice 0) or {a, d}, {b, c} (choice 1).
SubgraphWitness two_switch(const SubgraphWitness& f, const Edge& e1, const Edge& e2, int choice);

struct MaxVertexEntry {
    Vertex vertex = 0;
    int degree = 0;               // largest monochromatic degree inside Z
    Color color = 0;              // smallest color attaining it
    std::optional<Color> minority;  // set when every other edge inside Z has one color
    bool is_max = false;          // degree equals the maximum over Z
};

struct MaxVertexProfile {
    std::vector<Vertex> z;  // V \ X, ascending
    int max_degree = 0;
    std::vector<MaxVertexEntry> entries;  // one per vertex of z, same order
    // (a, b)- and (b, a)-max-vertices when these are the only paired kinds
    std::optional<std::pair<Color, Color>> pair;
    std::vector<Vertex> s, t, w;

    const MaxVertexEntry& entry(Vertex v) const;
};

MaxVertexProfile max_vertex_profile(const EdgeColoring& c, const std::vector<Vertex>& x);

/// Edges at x become 1 except xy, at y become 2 except yz, at z become 3
/// except zx; afterwards x, y, z are unitary with main colors 1, 2, 3.
EdgeColoring recolor_unitary_triple(const EdgeColoring& c, Vertex x, Vertex y, Vertex z);

struct ImproveResult {
    EdgeColoring coloring;
    int moves = 0;
    bool combed = false;  // comb_certificate succeeded on the output
};

/// Greedy exchange search: while some max-vertex v of the non-ordered part Z
/// has an edge uv (u in Z) whose color appears again in every member through
/// uv, recolor uv to v's majority color. Throws std::invalid_argument if c is
/// not polychromatic for the family.
ImproveResult improve_toward_combed(const EdgeColoring& c, FamilyKind kind);

/// Largest X-ordered prefix, built greedily by smallest label.
std::vector<Vertex> ordered_prefix(const EdgeColoring& c);

}  // namespace polychrome
