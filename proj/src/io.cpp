#include "polychrome/io.hpp"

#include <array>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace polychrome {

using nlohmann::json;

namespace {

constexpr std::array<std::string_view, 12> kDotPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#000000", "#aec7e8",
};

json edges_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

json witness_json(const SubgraphWitness& w) {
    return {{"family", family_name(w.kind)}, {"edges", edges_json(w.edges)}};
}

int as_int(const json& v, const char* what) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    const auto x = v.get<long long>();
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw ParseError(std::string(what) + " is out of range");
    return static_cast<int>(x);
}

std::string search_cell(const TableRow& r) { return r.search_k ? std::to_string(*r.search_k) : "-"; }
std::string mode_cell(const TableRow& r) { return r.search_mode ? std::string(mode_name(*r.search_mode)) : "-"; }

}  // namespace

std::string coloring_to_json(const EdgeColoring& c, int indent) {
    json edges = json::array();
    for (Vertex i = 1; i <= c.n(); ++i)
        for (Vertex j = i + 1; j <= c.n(); ++j) edges.push_back({i, j, c.color(i, j)});
    json doc = {{"n", c.n()}, {"k", c.k()}, {"edges", std::move(edges)}};
    return doc.dump(indent);
}

EdgeColoring coloring_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("coloring document must be an object");
    for (const char* key : {"n", "k", "edges"})
        if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    const int n = as_int(doc["n"], "n");
    const int k = as_int(doc["k"], "k");
    if (n < 2) throw ParseError("n must be at least 2");
    if (n > 5000) throw ParseError("n is too large");
    const auto& edges = doc["edges"];
    if (!edges.is_array()) throw ParseError("edges must be an array");
    if (edges.size() != edge_count(n))
        throw ParseError("expected " + std::to_string(edge_count(n)) + " edges, got " + std::to_string(edges.size()));
    if (k < 1) throw ParseError("k must be positive");

    std::vector<Color> colors(edge_count(n), 0);
    std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
    for (const auto& t : edges) {
        if (!t.is_array() || t.size() != 3) throw ParseError("each edge must be a triple [i, j, color]");
        const int i = as_int(t[0], "i"), j = as_int(t[1], "j"), col = as_int(t[2], "color");
        if (i < 1 || j > n || i >= j) throw ParseError("edge [" + std::to_string(i) + ", " + std::to_string(j) + "] needs 1 <= i < j <= n");
        if (col < 1 || col > k) throw ParseError("color " + std::to_string(col) + " outside 1.." + std::to_string(k));
        auto& slot = colors[edge_index(n, i, j)];
        if (slot != 0) throw ParseError("edge [" + std::to_string(i) + ", " + std::to_string(j) + "] listed twice");
        slot = col;
        used[static_cast<std::size_t>(col)] = 1;
    }
    for (Color col = 1; col <= k; ++col)
        if (!used[static_cast<std::size_t>(col)]) throw ParseError("color " + std::to_string(col) + " is unused; k must be tight");
    return EdgeColoring(n, std::move(colors));
}

std::string witness_to_json(const SubgraphWitness& w, int indent) { return witness_json(w).dump(indent); }

std::string certificate_to_json(const PolyCertificate& cert, int indent) {
    json doc = {{"polychromatic", cert.polychromatic}};
    if (!cert.polychromatic) {
        doc["color"] = cert.color;
        if (cert.witness) doc["witness"] = witness_json(*cert.witness);
    } else if (cert.spot_check) {
        doc["spot_check"] = witness_json(*cert.spot_check);
        doc["spot_edges"] = edges_json(cert.spot_edges);
    }
    return doc.dump(indent);
}

std::string report_to_json(const SearchReport& r, int indent) {
    json doc = {
        {"n", r.n},
        {"family", family_name(r.kind)},
        {"mode", mode_name(r.mode)},
        {"k", r.k},
        {"exact", r.exact},
        {"refuted_k", r.refuted_k},
        {"nodes", r.nodes},
        {"seconds", r.seconds},
        {"coloring", json::parse(coloring_to_json(r.coloring))},
    };
    return doc.dump(indent);
}

std::string table_to_json(const std::vector<TableRow>& rows, int indent) {
    json out = json::array();
    for (const auto& r : rows) {
        json row = {{"n", r.n},
                    {"family", family_name(r.kind)},
                    {"construction_k", r.construction_k},
                    {"formula_k", r.formula_k},
                    {"search_k", nullptr},
                    {"search_mode", nullptr},
                    {"agrees", r.agrees}};
        if (r.search_k) row["search_k"] = *r.search_k;
        if (r.search_mode) row["search_mode"] = mode_name(*r.search_mode);
        out.push_back(std::move(row));
    }
    return out.dump(indent);
}

std::string coloring_to_dot(const EdgeColoring& c) {
    std::ostringstream os;
    os << "graph K" << c.n() << " {\n";
    for (Vertex v = 1; v <= c.n(); ++v) os << "  " << v << ";\n";
    for (Vertex i = 1; i <= c.n(); ++i)
        for (Vertex j = i + 1; j <= c.n(); ++j) {
            const Color col = c.color(i, j);
            os << "  " << i << " -- " << j << " [color=\"" << kDotPalette[static_cast<std::size_t>(col - 1) % kDotPalette.size()]
               << "\", label=\"" << col << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

std::string coloring_to_csv(const EdgeColoring& c) {
    std::ostringstream os;
    os << "i,j,color\n";
    for (Vertex i = 1; i <= c.n(); ++i)
        for (Vertex j = i + 1; j <= c.n(); ++j) os << i << ',' << j << ',' << c.color(i, j) << '\n';
    return os.str();
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "n,family,construction_k,formula_k,search_k,search_mode,agrees\n";
    for (const auto& r : rows)
        os << r.n << ',' << family_name(r.kind) << ',' << r.construction_k << ',' << r.formula_k << ','
           << (r.search_k ? std::to_string(*r.search_k) : "") << ',' << (r.search_mode ? mode_name(*r.search_mode) : "")
           << ',' << (r.agrees ? "true" : "false") << '\n';
    return os.str();
}

std::string table_to_text(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << std::setw(6) << "n" << std::setw(8) << "family" << std::setw(8) << "constr" << std::setw(9) << "formula"
       << std::setw(8) << "search" << std::setw(9) << "mode" << std::setw(8) << "agrees" << '\n';
    for (const auto& r : rows)
        os << std::setw(6) << r.n << std::setw(8) << family_name(r.kind) << std::setw(8) << r.construction_k
           << std::setw(9) << r.formula_k << std::setw(8) << search_cell(r) << std::setw(9) << mode_cell(r)
           << std::setw(8) << (r.agrees ? "yes" : "NO") << '\n';
    return os.str();
}

}  // namespace polychrome
