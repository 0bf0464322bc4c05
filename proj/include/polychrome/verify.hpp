#pragma once

#include <optional>
#include <vector>

#include "polychrome/core.hpp"
#include "polychrome/families.hpp"

namespace polychrome {

struct PolyCertificate {
    bool polychromatic = false;
    // on violation: the first color (ascending) avoided by some member
    Color color = 0;
    std::optional<SubgraphWitness> witness;
    // on success: one member of K_n and, per color, an edge of it carrying
    // that color (index t-1)
    std::optional<SubgraphWitness> spot_check;
    std::vector<Edge> spot_edges;
};

/// For each color t, asks the family engine for a member of K_n minus the
/// t-colored edges; polychromatic iff every query fails.
PolyCertificate is_polychromatic(const EdgeColoring& c, FamilyKind kind, const HamiltonOptions& options = {});

/// Recheck of a violation: valid member, no edge of color t.
bool confirms_violation(const EdgeColoring& c, const SubgraphWitness& w, Color t);

/// The 1-factor y1x1, ..., ymxm plus consecutive pairs of the leftover y's,
/// where x1..xm is M_t and y1.. the other vertices, both left to right.
/// Requires even n and a failing strict majority condition for t; throws
/// std::invalid_argument otherwise, or std::logic_error if the result would
/// contain color t.
SubgraphWitness adversarial_matching(const EdgeColoring& c, const InheritedColoring& ic, Color t);

/// The Hamiltonian cycle y1 x1 y2 x2 ... ym xm y(m+1) ... y(n-m) y1. Requires a
/// failing weak majority condition for t and no unitary vertex in M_t.
SubgraphWitness adversarial_hamcycle(const EdgeColoring& c, const InheritedColoring& ic, Color t);

/// Largest color count compatible with the counting chain of a complete
/// certificate. Strict: classes grow as 2^(t-1), so 2^k - 1 <= n (2^k <= n for
/// even n). Weak: the non-unitary classes grow as 1, 1, 2, 4, ..., so with
/// k' of them 2^(k'-1) <= n - unitary_count; the unitary vertices contribute
/// 3 colors (triple) or 2 (quad).
int majority_upper_bound(const MajorityCertificate& cert, MajorityMode mode, int unitary_count);

}  // namespace polychrome
