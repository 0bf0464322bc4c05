#pragma once

// Exact polychromatic numbers of K_n at small orders: exhaustive search over
// all colorings, and search restricted to ordered or combed colorings.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "polychrome/constructions.hpp"
#include "polychrome/core.hpp"

namespace polychrome {

enum class SearchMode { Full, Ordered, Combed };

std::string_view mode_name(SearchMode mode);
SearchMode parse_mode(std::string_view name);

struct SearchReport {
    int n = 0;
    FamilyKind kind = FamilyKind::OneFactor;
    SearchMode mode = SearchMode::Full;
    int k = 0;
    EdgeColoring coloring = EdgeColoring::monochromatic(2);
    // smallest color count shown infeasible within the searched class, or 0
    // when the search stopped at max_k
    int refuted_k = 0;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    // true when the optimum over the searched class is the true polychromatic
    // number: always for full search, and for ordered 1-factor search
    bool exact = false;
};

struct SearchOptions {
    int threads = 1;
};

struct SearchCaps {
    int full_one_factor = 6;
    int full_other = 5;
    int ordered = 16;
    int combed = 14;
};

/// Optimum over all colorings: k ascends until no polychromatic k-coloring
/// exists (or max_k is reached). Colorings are generated with colors labeled
/// by first occurrence along the lexicographic edge order.
SearchReport brute_force_poly(int n, FamilyKind kind, int max_k, const SearchOptions& options = {},
                              const SearchCaps& caps = {});

/// Optimum over ordered colorings (main-color sequences) or combed colorings
/// (additionally a unitary triple or quad prefix). Branches are cut when the
/// strict (1-factors) or weak (2-factors, Hamiltonian cycles) majority
/// condition can no longer be met by some color.
SearchReport structured_poly(int n, FamilyKind kind, SearchMode mode, const SearchOptions& options = {},
                             const SearchCaps& caps = {});

/// floor(log2 n), floor(log2 2(n+1)), floor(log2 floor(8(n-1)/3)).
int formula_k(FamilyKind kind, int n);

struct TableRow {
    int n = 0;
    FamilyKind kind = FamilyKind::OneFactor;
    int construction_k = 0;
    int formula_k = 0;
    std::optional<int> search_k;
    std::optional<SearchMode> search_mode;
    bool agrees = false;
};

struct TableOptions {
    bool search = true;
    SearchOptions search_options;
    SearchCaps caps;
};

/// One row per valid n in [lo, hi] (even n only for 1-factors). Agreement
/// means construction_k == formula_k, and when a search value is present it
/// equals the formula for 1-factors and is at least construction_k otherwise.
std::vector<TableRow> theorem_table(FamilyKind kind, int lo, int hi, const TableOptions& options = {});

}  // namespace polychrome
