#pragma once

// Exact existence and enumeration engines for 1-factors, 2-factors and
// Hamiltonian cycles inside an allowed edge set of K_n.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "polychrome/bitset.hpp"
#include "polychrome/constructions.hpp"
#include "polychrome/core.hpp"

namespace polychrome {

class AllowedGraph {
public:
    explicit AllowedGraph(int n);
    static AllowedGraph complete(int n);
    /// K_n minus the edges colored t.
    static AllowedGraph avoiding(const EdgeColoring& c, Color t);
    static AllowedGraph from_edges(int n, std::span<const Edge> edges);

    int n() const { return n_; }
    bool has(Vertex a, Vertex b) const { return adjacency_[a].test(b); }
    bool has(const Edge& e) const { return has(e.u, e.v); }
    void add(const Edge& e);
    void remove(const Edge& e);
    int degree(Vertex v) const { return adjacency_[v].count(); }
    /// Neighbors of v as a bitset over 0..n (bit 0 unused).
    const Bitset& neighbors(Vertex v) const { return adjacency_[v]; }
    std::vector<Edge> edges() const;

private:
    int n_ = 0;
    std::vector<Bitset> adjacency_;
};

struct SubgraphWitness {
    FamilyKind kind = FamilyKind::OneFactor;
    std::vector<Edge> edges;  // sorted

    friend bool operator==(const SubgraphWitness&, const SubgraphWitness&) = default;
};

/// Checks the family invariants: perfect matching; spanning 2-regular simple
/// subgraph; or a single spanning cycle.
bool is_valid_member(const SubgraphWitness& w, int n);

/// True when no edge of w has color t.
bool avoids_color(const SubgraphWitness& w, const EdgeColoring& c, Color t);

/// Vertex sequence of a Hamiltonian cycle starting at its smallest vertex and
/// continuing to the smaller of its two neighbors.
std::vector<Vertex> cycle_order(const SubgraphWitness& w, int n);

struct HamiltonOptions {
    int dp_max_n = 24;             // bitmask DP up to this order, backtracking above
    int connectivity_interval = 4;  // flood-fill check every this many levels
};

/// A member of the family inside g, if any. Exact.
std::optional<SubgraphWitness> find_member(FamilyKind kind, const AllowedGraph& g,
                                           const HamiltonOptions& options = {});

/// A member that contains `forced` (which must be allowed in g).
std::optional<SubgraphWitness> find_member_through(FamilyKind kind, const AllowedGraph& g, const Edge& forced,
                                                   const HamiltonOptions& options = {});

/// Maximum matching in g (Edmonds' blossom algorithm); mate[v] == 0 when v
/// is exposed. Index 0 unused.
std::vector<Vertex> maximum_matching(const AllowedGraph& g);

struct EnumerationCaps {
    int one_factor = 16;
    int two_factor = 12;
    int hamiltonian = 12;

    int cap(FamilyKind kind) const;
};

/// Streams every member of the family in K_n exactly once, in lexicographic
/// order of sorted edge lists. The visitor returns false to stop early.
void for_each_member(FamilyKind kind, int n, const std::function<bool(std::span<const Edge>)>& visit,
                     const EnumerationCaps& caps = {});

std::vector<SubgraphWitness> enumerate_members(FamilyKind kind, int n, const EnumerationCaps& caps = {});

std::uint64_t count_members(FamilyKind kind, int n, const EnumerationCaps& caps = {});

}  // namespace polychrome
