#pragma once

// Serialization: coloring documents (JSON), witnesses, search reports,
// theorem tables, DOT and CSV.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polychrome/core.hpp"
#include "polychrome/families.hpp"
#include "polychrome/search.hpp"
#include "polychrome/verify.hpp"

namespace polychrome {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// {"n": n, "k": k, "edges": [[i, j, c], ...]} with edges in lexicographic order.
std::string coloring_to_json(const EdgeColoring& c, int indent = -1);

/// Accepts the triples in any order; requires each edge of K_n exactly once,
/// i < j, colors in 1..k and every color used.
EdgeColoring coloring_from_json(std::string_view text);

std::string witness_to_json(const SubgraphWitness& w, int indent = -1);
std::string certificate_to_json(const PolyCertificate& cert, int indent = -1);
std::string report_to_json(const SearchReport& r, int indent = -1);
std::string table_to_json(const std::vector<TableRow>& rows, int indent = -1);

/// Undirected graph with edge attribute `color` from a fixed 12-entry palette,
/// cycling by color index, and `label` holding the color number.
std::string coloring_to_dot(const EdgeColoring& c);

/// i,j,color rows with a header line.
std::string coloring_to_csv(const EdgeColoring& c);

/// n,family,construction_k,formula_k,search_k,search_mode,agrees
std::string table_to_csv(const std::vector<TableRow>& rows);

/// Aligned plain-text columns of the same fields.
std::string table_to_text(const std::vector<TableRow>& rows);

}  // namespace polychrome
