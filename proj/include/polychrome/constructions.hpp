#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polychrome/core.hpp"

namespace polychrome {

enum class FamilyKind { OneFactor, TwoFactor, HamiltonianCycle };

/// "f1", "f2", "hc".
std::string_view family_name(FamilyKind kind);
FamilyKind parse_family(std::string_view name);

/// Throws std::invalid_argument unless n is valid for the family
/// (even n >= 2 for 1-factors, n >= 3 otherwise).
void require_valid_order(FamilyKind kind, int n);

/// Largest k satisfying the family's defining inequality, by integer doubling:
///   1-factors:         2^k <= n
///   2-factors:         2^(k-1) - 1 <= n
///   Hamiltonian cycles 3 * 2^(k-3) + 1 <= n
int palette_size(FamilyKind kind, int n);

/// Sizes of the inherited classes M_1..M_k of build(kind, n).
std::vector<int> class_sizes(FamilyKind kind, int n);

/// The polychromatic coloring for the family: an ordered coloring with
/// class_sizes(kind, n), and for 2-factors and Hamiltonian cycles (k >= 3)
/// the edge v1 v3 recolored to 3 so that v1, v2, v3 are unitary.
EdgeColoring build(FamilyKind kind, int n);

/// Ordered coloring with edge v_i v_j (i < j) colored main[i]. The last entry
/// is ignored (v_n inherits the main color of v_{n-1}).
EdgeColoring build_ordered(std::span<const Color> main);

enum class UnitaryPrefix { None, Triple, Quad };

/// Combed coloring with a canonical unitary prefix on v1..v3 (Triple: mains
/// pairwise distinct, v1 -> v3 -> v2 -> v1 minority cycle) or v1..v4 (Quad:
/// main[0] == main[1] != main[2] == main[3]); remaining vertices ordered.
EdgeColoring build_combed(UnitaryPrefix prefix, std::span<const Color> main);

}  // namespace polychrome
