#include "polychrome/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polychrome/constructions.hpp"
#include "polychrome/io.hpp"
#include "polychrome/search.hpp"
#include "polychrome/transforms.hpp"
#include "polychrome/verify.hpp"

namespace polychrome {

namespace {

struct Flags {
    std::string family;
    int n = 0;
    std::string n_range;
    std::string mode = "ordered";
    int color = 0;
    std::string format;
    int threads = 1;
    std::string out;
    std::uint64_t seed = 0;
    std::string input;
    std::string op;
    std::vector<int> vertices;
    int max_k = 0;
    bool no_search = false;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
    if (path.empty()) throw UsageError("--input is required");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FamilyKind family_of(const Flags& f) {
    if (f.family.empty()) throw UsageError("--family is required");
    return parse_family(f.family);
}

std::string render_coloring(const EdgeColoring& c, const std::string& format) {
    if (format.empty() || format == "json") return coloring_to_json(c) + "\n";
    if (format == "dot") return coloring_to_dot(c);
    if (format == "csv") return coloring_to_csv(c);
    throw UsageError("format '" + format + "' does not apply to colorings");
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--n-range expects a:b");
    try {
        std::size_t used = 0;
        const int a = std::stoi(text.substr(0, colon), &used);
        if (used != colon) throw UsageError("--n-range expects a:b");
        const std::string rest = text.substr(colon + 1);
        const int b = std::stoi(rest, &used);
        if (used != rest.size()) throw UsageError("--n-range expects a:b");
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("--n-range expects a:b");
    }
}

InheritedColoring inherited_for_witness(const EdgeColoring& c) {
    try {
        return inherited_coloring(c, VertexOrdering::identity(c.n()));
    } catch (const std::invalid_argument&) {
    }
    if (auto ic = comb_certificate(c)) return *ic;
    throw UsageError("coloring is neither ordered nor combed");
}

int cmd_construct(const Flags& f, std::ostream& out) {
    const FamilyKind kind = family_of(f);
    require_valid_order(kind, f.n);
    out << render_coloring(build(kind, f.n), f.format);
    return 0;
}

int cmd_verify(const Flags& f, std::ostream& out) {
    const FamilyKind kind = family_of(f);
    const EdgeColoring c = coloring_from_json(read_file(f.input));
    require_valid_order(kind, c.n());
    const auto cert = is_polychromatic(c, kind);
    if (f.format == "table") {
        out << (cert.polychromatic ? "polychromatic" : "violated") << " family=" << family_name(kind) << " n=" << c.n()
            << " k=" << c.k();
        if (!cert.polychromatic) out << " color=" << cert.color;
        out << '\n';
    } else {
        out << certificate_to_json(cert) << '\n';
    }
    return cert.polychromatic ? 0 : 1;
}

int cmd_witness(const Flags& f, std::ostream& out) {
    const FamilyKind kind = family_of(f);
    const EdgeColoring c = coloring_from_json(read_file(f.input));
    require_valid_order(kind, c.n());
    const InheritedColoring ic = inherited_for_witness(c);
    const SubgraphWitness w =
        kind == FamilyKind::OneFactor ? adversarial_matching(c, ic, f.color) : adversarial_hamcycle(c, ic, f.color);
    out << witness_to_json(w) << '\n';
    return 0;
}

int cmd_search(const Flags& f, std::ostream& out) {
    const FamilyKind kind = family_of(f);
    const SearchMode mode = parse_mode(f.mode);
    const SearchOptions options{std::max(1, f.threads)};
    const SearchReport r = mode == SearchMode::Full
                               ? brute_force_poly(f.n, kind, f.max_k > 0 ? f.max_k : static_cast<int>(edge_count(f.n)), options)
                               : structured_poly(f.n, kind, mode, options);
    if (f.format == "table") {
        out << "n=" << r.n << " family=" << family_name(r.kind) << " mode=" << mode_name(r.mode) << " optimum=" << r.k
            << (r.exact ? "" : " (restricted optimum)") << " nodes=" << r.nodes << '\n';
        out << coloring_to_json(r.coloring) << '\n';
    } else if (f.format.empty() || f.format == "json") {
        out << report_to_json(r) << '\n';
    } else {
        out << render_coloring(r.coloring, f.format);
    }
    return 0;
}

int cmd_table(const Flags& f, std::ostream& out) {
    const FamilyKind kind = family_of(f);
    const auto [lo, hi] = f.n_range.empty() ? std::pair(f.n, f.n) : parse_range(f.n_range);
    TableOptions options;
    options.search = !f.no_search;
    options.search_options.threads = std::max(1, f.threads);
    const auto rows = theorem_table(kind, lo, hi, options);
    if (f.format == "csv") out << table_to_csv(rows);
    else if (f.format == "json") out << table_to_json(rows) << '\n';
    else if (f.format.empty() || f.format == "table") out << table_to_text(rows);
    else throw UsageError("format '" + f.format + "' does not apply to tables");
    return 0;
}

int cmd_transform(const Flags& f, std::ostream& out, std::ostream& err) {
    const EdgeColoring c = coloring_from_json(read_file(f.input));
    if (f.op == "canonicalize") {
        out << render_coloring(c.canonical(), f.format);
    } else if (f.op == "recolor-triple") {
        if (f.vertices.size() != 3) throw UsageError("--vertices expects x,y,z");
        out << render_coloring(recolor_unitary_triple(c, f.vertices[0], f.vertices[1], f.vertices[2]), f.format);
    } else if (f.op == "improve") {
        const auto r = improve_toward_combed(c, family_of(f));
        err << "moves=" << r.moves << " combed=" << (r.combed ? "yes" : "no") << '\n';
        out << render_coloring(r.coloring, f.format);
    } else {
        throw UsageError("--op must be improve, recolor-triple or canonicalize");
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Polychromatic edge-colorings of complete graphs"};
    app.require_subcommand(1);
    Flags f;

    const std::vector<std::string> families{"f1", "f2", "hc"};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--family", f.family, "f1 (1-factors), f2 (2-factors) or hc (Hamiltonian cycles)")
            ->check(CLI::IsMember(families));
        sub->add_option("--out", f.out, "write output to this file");
        sub->add_option("--format", f.format, "json, dot, csv or table");
        sub->add_option("--seed", f.seed, "reserved; all algorithms are deterministic");
    };

    auto* construct = app.add_subcommand("construct", "build the polychromatic coloring of K_n");
    common(construct);
    construct->add_option("--n", f.n)->required();

    auto* verify = app.add_subcommand("verify", "check polychromaticity of a coloring document");
    common(verify);
    verify->add_option("--input", f.input)->required();

    auto* witness = app.add_subcommand("witness", "adversarial member avoiding a color whose majority condition fails");
    common(witness);
    witness->add_option("--input", f.input)->required();
    witness->add_option("--color", f.color)->required();

    auto* search = app.add_subcommand("search", "exact polychromatic number");
    common(search);
    search->add_option("--n", f.n)->required();
    search->add_option("--mode", f.mode, "full, ordered or combed")->check(CLI::IsMember({"full", "ordered", "combed"}));
    search->add_option("--threads", f.threads);
    search->add_option("--max-k", f.max_k, "largest color count tried by full search");

    auto* table = app.add_subcommand("table", "construction, formula and search values per n");
    common(table);
    table->add_option("--n", f.n);
    table->add_option("--n-range", f.n_range, "a:b");
    table->add_option("--threads", f.threads);
    table->add_flag("--no-search", f.no_search, "leave the search column empty");

    auto* transform = app.add_subcommand("transform", "local moves on a coloring document");
    common(transform);
    transform->add_option("--input", f.input)->required();
    transform->add_option("--op", f.op, "improve, recolor-triple or canonicalize")->required();
    transform->add_option("--vertices", f.vertices, "x,y,z for recolor-triple")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    std::ostringstream buffer;
    int code = 0;
    try {
        if (*construct) code = cmd_construct(f, buffer);
        else if (*verify) code = cmd_verify(f, buffer);
        else if (*witness) code = cmd_witness(f, buffer);
        else if (*search) code = cmd_search(f, buffer);
        else if (*table) code = cmd_table(f, buffer);
        else code = cmd_transform(f, buffer, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    if (f.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(f.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << f.out << '\n';
            return 2;
        }
        file << buffer.str();
    }
    return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"polychrome"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace polychrome
