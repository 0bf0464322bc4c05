#include "polychrome/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "polychrome/families.hpp"
#include "polychrome/verify.hpp"

namespace polychrome {

std::string_view mode_name(SearchMode mode) {
    switch (mode) {
        case SearchMode::Full: return "full";
        case SearchMode::Ordered: return "ordered";
        case SearchMode::Combed: return "combed";
    }
    return "full";
}

SearchMode parse_mode(std::string_view name) {
    if (name == "full") return SearchMode::Full;
    if (name == "ordered") return SearchMode::Ordered;
    if (name == "combed") return SearchMode::Combed;
    throw std::invalid_argument("unknown search mode '" + std::string(name) + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

struct BranchResult {
    std::optional<EdgeColoring> coloring;
    std::uint64_t nodes = 0;
};

struct Outcome {
    std::optional<EdgeColoring> coloring;
    std::uint64_t nodes = 0;
};

// Runs branches in index order across workers. The result is the solution of
// the lowest-index successful branch and the node total over branches up to
// it, so it does not depend on the thread count.
template <class Branch, class Solve>
Outcome run_branches(const std::vector<Branch>& branches, int threads, Solve solve) {
    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<BranchResult> results(branches.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{none};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= branches.size() || i > best.load()) return;
            results[i] = solve(branches[i]);
            if (results[i].coloring) {
                std::size_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };

    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(branches.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    Outcome out;
    const std::size_t last = best.load() == none ? branches.size() : best.load() + 1;
    for (std::size_t i = 0; i < last; ++i) out.nodes += results[i].nodes;
    if (best.load() != none) out.coloring = std::move(results[best.load()].coloring);
    return out;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Unrestricted search

class BruteForce {
public:
    BruteForce(int n, FamilyKind kind) : n_(n), m_(static_cast<int>(edge_count(n))), kind_(kind) {
        closing_.resize(static_cast<std::size_t>(m_));
        for_each_member(kind, n, [&](std::span<const Edge> edges) {
            std::vector<int> idx;
            for (const Edge& e : edges) idx.push_back(static_cast<int>(edge_index(n, e.u, e.v)));
            const int last = *std::max_element(idx.begin(), idx.end());
            closing_[static_cast<std::size_t>(last)].push_back(static_cast<int>(members_.size()));
            members_.push_back(std::move(idx));
            return true;
        });
    }

    int edges() const { return m_; }

    // Whether an assignment of the first colors.size() edges survives the
    // surjectivity and closed-member checks.
    bool consistent(const std::vector<Color>& colors, int k) const {
        const int p = static_cast<int>(colors.size());
        const Color used = p == 0 ? 0 : *std::max_element(colors.begin(), colors.end());
        if (m_ - p < k - used) return false;
        return p == 0 || members_closed_ok(colors, p - 1, k);
    }

    // Completes an assignment of the first prefix.size() edges.
    BranchResult solve(const std::vector<Color>& prefix, int k) const {
        BranchResult r;
        const Color used = prefix.empty() ? 0 : *std::max_element(prefix.begin(), prefix.end());
        std::vector<Color> colors = prefix;
        colors.resize(static_cast<std::size_t>(m_));
        if (dfs(colors, static_cast<int>(prefix.size()), used, k, r.nodes)) r.coloring = EdgeColoring(n_, colors);
        return r;
    }

    // Assignments of the first `depth` edges, in search order.
    std::vector<std::vector<Color>> prefixes(int depth, int k, std::uint64_t& nodes) const {
        std::vector<std::vector<Color>> out;
        std::vector<Color> cur;
        expand(cur, depth, k, out, nodes);
        return out;
    }

    bool verify(const EdgeColoring& c) const { return is_polychromatic(c, kind_).polychromatic; }

private:
    bool members_closed_ok(const std::vector<Color>& colors, int e, int k) const {
        const unsigned full = (1u << k) - 1u;
        for (int mi : closing_[static_cast<std::size_t>(e)]) {
            unsigned seen = 0;
            for (int idx : members_[static_cast<std::size_t>(mi)]) seen |= 1u << (colors[static_cast<std::size_t>(idx)] - 1);
            if (seen != full) return false;
        }
        return true;
    }

    void expand(std::vector<Color>& cur, int depth, int k, std::vector<std::vector<Color>>& out,
                std::uint64_t& nodes) const {
        if (static_cast<int>(cur.size()) == depth) {
            out.push_back(cur);
            return;
        }
        const Color used = cur.empty() ? 0 : *std::max_element(cur.begin(), cur.end());
        for (Color c = 1; c <= std::min<Color>(k, used + 1); ++c) {
            ++nodes;
            cur.push_back(c);
            if (consistent(cur, k)) expand(cur, depth, k, out, nodes);
            cur.pop_back();
        }
    }

    // colors[0..p) fixed; fills the rest.
    bool dfs(std::vector<Color>& colors, int p, Color used, int k, std::uint64_t& nodes) const {
        if (p == m_) return used == k && verify(EdgeColoring(n_, colors));
        for (Color c = 1; c <= std::min<Color>(k, used + 1); ++c) {
            ++nodes;
            const Color now = std::max(used, c);
            if (m_ - p - 1 < k - now) continue;
            colors[static_cast<std::size_t>(p)] = c;
            if (members_closed_ok(colors, p, k) && dfs(colors, p + 1, now, k, nodes)) return true;
        }
        return false;
    }

    int n_;
    int m_;
    FamilyKind kind_;
    std::vector<std::vector<int>> members_;
    std::vector<std::vector<int>> closing_;  // members whose last edge is this index
};

// ---------------------------------------------------------------------------
// Ordered / combed search over main-color sequences

struct Layout {
    UnitaryPrefix prefix = UnitaryPrefix::None;
    std::vector<Color> fixed;  // main colors of the unitary prefix
};

class StructuredSearch {
public:
    StructuredSearch(int n, FamilyKind kind, const Layout& layout)
        : n_(n), kind_(kind), layout_(layout),
          strict_(kind == FamilyKind::OneFactor) {
        for (Color c : layout.fixed) unitary_colors_ = std::max(unitary_colors_, c);
    }

    struct State {
        std::vector<Color> main;  // positions 1..p
        std::vector<int> count;   // index t
        std::vector<char> witnessed;
        Color used = 0;
    };

    State initial(int k) const {
        State s;
        s.count.assign(static_cast<std::size_t>(k) + 2, 0);
        s.witnessed.assign(static_cast<std::size_t>(k) + 2, 0);
        for (Color c : layout_.fixed) {
            if (c > k) return invalid_state();
            push(s, c);
        }
        for (Color c = 1; c <= unitary_colors_ && c <= k; ++c) s.witnessed[static_cast<std::size_t>(c)] = 1;
        return s;
    }

    static State invalid_state() {
        State s;
        s.used = -1;
        return s;
    }

    // Positions whose main colors are free: fixed.size()+1 .. n-1.
    int last_position() const { return n_ - 1; }

    bool feasible(const State& s, int k) const {
        if (s.used < 0 || s.used > k) return false;
        const int p = static_cast<int>(s.main.size());
        long long need = 0;
        for (Color t = 1; t <= s.used; ++t) {
            if (s.witnessed[static_cast<std::size_t>(t)]) continue;
            need += strict_ ? p - 2 * s.count[static_cast<std::size_t>(t)] + 1 : p - 2 * s.count[static_cast<std::size_t>(t)];
        }
        const long long fresh = strict_ ? p + 1 : std::max(p, 1);
        need += static_cast<long long>(k - s.used) * fresh;
        return need <= last_position() - p;
    }

    void push(State& s, Color c) const {
        s.main.push_back(c);
        s.used = std::max(s.used, c);
        const int j = static_cast<int>(s.main.size());
        const int cnt = ++s.count[static_cast<std::size_t>(c)];
        if (j <= n_ - 1 && (strict_ ? 2 * cnt > j : 2 * cnt >= j)) s.witnessed[static_cast<std::size_t>(c)] = 1;
    }

    void pop(State& s, Color prev_used, char prev_witnessed) const {
        const Color c = s.main.back();
        s.main.pop_back();
        --s.count[static_cast<std::size_t>(c)];
        s.witnessed[static_cast<std::size_t>(c)] = prev_witnessed;
        s.used = prev_used;
    }

    EdgeColoring realize(const State& s) const {
        std::vector<Color> main = s.main;
        main.push_back(main.back());
        return layout_.prefix == UnitaryPrefix::None ? build_ordered(main) : build_combed(layout_.prefix, main);
    }

    bool accept(const State& s, int k) const {
        if (s.used != k) return false;
        for (Color t = 1; t <= k; ++t)
            if (!s.witnessed[static_cast<std::size_t>(t)]) return false;
        return is_polychromatic(realize(s), kind_).polychromatic;
    }

    bool dfs(State& s, int k, std::uint64_t& nodes) const {
        if (static_cast<int>(s.main.size()) == last_position()) return accept(s, k);
        for (Color c = 1; c <= std::min<Color>(k, s.used + 1); ++c) {
            ++nodes;
            const Color prev_used = s.used;
            const char prev_w = s.witnessed[static_cast<std::size_t>(c)];
            push(s, c);
            if (feasible(s, k) && dfs(s, k, nodes)) return true;
            pop(s, prev_used, prev_w);
        }
        return false;
    }

    void expand(State& s, int k, int depth, std::vector<State>& out, std::uint64_t& nodes) const {
        if (static_cast<int>(s.main.size()) >= std::min(depth, last_position())) {
            out.push_back(s);
            return;
        }
        for (Color c = 1; c <= std::min<Color>(k, s.used + 1); ++c) {
            ++nodes;
            const Color prev_used = s.used;
            const char prev_w = s.witnessed[static_cast<std::size_t>(c)];
            push(s, c);
            if (feasible(s, k)) expand(s, k, depth, out, nodes);
            pop(s, prev_used, prev_w);
        }
    }

    bool applicable() const {
        const int size = static_cast<int>(layout_.fixed.size());
        return size == 0 || n_ >= std::max(size, 4) || (size == 3 && n_ == 3);
    }

private:
    int n_;
    FamilyKind kind_;
    Layout layout_;
    bool strict_;
    Color unitary_colors_ = 0;
};

std::vector<Layout> layouts(SearchMode mode) {
    std::vector<Layout> out{Layout{}};
    if (mode == SearchMode::Combed) {
        out.push_back(Layout{UnitaryPrefix::Triple, {1, 2, 3}});
        out.push_back(Layout{UnitaryPrefix::Quad, {1, 1, 2, 2}});
    }
    return out;
}

Outcome structured_attempt(int n, FamilyKind kind, SearchMode mode, int k, int threads) {
    Outcome total;
    for (const Layout& layout : layouts(mode)) {
        StructuredSearch search(n, kind, layout);
        if (!search.applicable()) continue;
        if (static_cast<int>(layout.fixed.size()) == n) {
            // the prefix covers every vertex
            ++total.nodes;
            EdgeColoring c = build_combed(layout.prefix, layout.fixed);
            if (c.k() == k && is_polychromatic(c, kind).polychromatic) {
                total.coloring = std::move(c);
                return total;
            }
            continue;
        }
        auto root = search.initial(k);
        if (!search.feasible(root, k)) continue;
        std::vector<StructuredSearch::State> branches;
        const int depth = static_cast<int>(root.main.size()) + (threads > 1 ? 5 : 0);
        search.expand(root, k, depth, branches, total.nodes);
        auto out = run_branches(branches, threads, [&](const StructuredSearch::State& b) {
            BranchResult r;
            auto s = b;
            if (search.dfs(s, k, r.nodes)) r.coloring = search.realize(s);
            return r;
        });
        total.nodes += out.nodes;
        if (out.coloring) {
            total.coloring = std::move(out.coloring);
            return total;
        }
    }
    return total;
}

}  // namespace

SearchReport brute_force_poly(int n, FamilyKind kind, int max_k, const SearchOptions& options, const SearchCaps& caps) {
    require_valid_order(kind, n);
    const int cap = kind == FamilyKind::OneFactor ? caps.full_one_factor : caps.full_other;
    if (n > cap) throw std::invalid_argument("full search is capped at n = " + std::to_string(cap));
    const int m = static_cast<int>(edge_count(n));
    if (max_k < 1 || max_k > m) throw std::invalid_argument("max_k must lie in 1..n(n-1)/2");

    const auto start = Clock::now();
    BruteForce search(n, kind);
    SearchReport report;
    report.n = n;
    report.kind = kind;
    report.mode = SearchMode::Full;
    report.exact = true;
    report.k = 1;
    report.coloring = EdgeColoring::monochromatic(n);
    for (int k = 2; k <= max_k; ++k) {
        std::uint64_t nodes = 0;
        const int depth = std::min(m, options.threads > 1 ? 6 : 1);
        auto branches = search.prefixes(depth, k, nodes);
        auto out = run_branches(branches, options.threads,
                                [&](const std::vector<Color>& prefix) { return search.solve(prefix, k); });
        report.nodes += nodes + out.nodes;
        if (!out.coloring) {
            report.refuted_k = k;
            break;
        }
        report.k = k;
        report.coloring = std::move(*out.coloring);
    }
    report.seconds = seconds_since(start);
    return report;
}

SearchReport structured_poly(int n, FamilyKind kind, SearchMode mode, const SearchOptions& options,
                             const SearchCaps& caps) {
    require_valid_order(kind, n);
    if (mode == SearchMode::Full) throw std::invalid_argument("structured search needs mode ordered or combed");
    if (mode == SearchMode::Combed && kind == FamilyKind::OneFactor)
        throw std::invalid_argument("combed search applies to 2-factors and Hamiltonian cycles; use ordered for 1-factors");
    const int cap = mode == SearchMode::Ordered ? caps.ordered : caps.combed;
    if (n > cap) throw std::invalid_argument(std::string(mode_name(mode)) + " search is capped at n = " + std::to_string(cap));

    const auto start = Clock::now();
    SearchReport report;
    report.n = n;
    report.kind = kind;
    report.mode = mode;
    report.exact = kind == FamilyKind::OneFactor;
    report.k = 1;
    report.coloring = EdgeColoring::monochromatic(n);
    for (int k = 2; k <= static_cast<int>(edge_count(n)); ++k) {
        auto out = structured_attempt(n, kind, mode, k, options.threads);
        report.nodes += out.nodes;
        if (out.coloring) {
            report.k = k;
            report.coloring = std::move(*out.coloring);
            continue;
        }
        if (report.refuted_k == 0) report.refuted_k = k;
        // merging the two largest non-unitary colors maps a feasible (k+1)-coloring
        // of the class to a feasible k-coloring, so only small k may be skipped over
        if (mode == SearchMode::Ordered || k >= 4) break;
    }
    if (report.refuted_k <= report.k) report.refuted_k = report.k + 1;
    report.seconds = seconds_since(start);
    return report;
}

int formula_k(FamilyKind kind, int n) {
    auto floor_log2 = [](long long x) { return x <= 0 ? 0 : static_cast<int>(std::bit_width(static_cast<unsigned long long>(x))) - 1; };
    switch (kind) {
        case FamilyKind::OneFactor: return floor_log2(n);
        case FamilyKind::TwoFactor: return floor_log2(2LL * (n + 1));
        case FamilyKind::HamiltonianCycle: return floor_log2(8LL * (n - 1) / 3);
    }
    return 0;
}

std::vector<TableRow> theorem_table(FamilyKind kind, int lo, int hi, const TableOptions& options) {
    if (lo > hi) throw std::invalid_argument("empty range");
    std::vector<TableRow> rows;
    for (int n = lo; n <= hi; ++n) {
        if (n < 2 || (kind == FamilyKind::OneFactor && n % 2 != 0) || (kind != FamilyKind::OneFactor && n < 3)) continue;
        TableRow row;
        row.n = n;
        row.kind = kind;
        row.construction_k = palette_size(kind, n);
        row.formula_k = formula_k(kind, n);
        if (options.search) {
            const int full_cap = kind == FamilyKind::OneFactor ? options.caps.full_one_factor : options.caps.full_other;
            if (n <= full_cap) {
                row.search_k = brute_force_poly(n, kind, static_cast<int>(edge_count(n)), options.search_options, options.caps).k;
                row.search_mode = SearchMode::Full;
            } else {
                const SearchMode mode = kind == FamilyKind::OneFactor ? SearchMode::Ordered : SearchMode::Combed;
                if (n <= (mode == SearchMode::Ordered ? options.caps.ordered : options.caps.combed)) {
                    row.search_k = structured_poly(n, kind, mode, options.search_options, options.caps).k;
                    row.search_mode = mode;
                }
            }
        }
        row.agrees = row.construction_k == row.formula_k;
        if (row.search_k)
            row.agrees = row.agrees && (kind == FamilyKind::OneFactor ? *row.search_k == row.formula_k
                                                                       : *row.search_k >= row.construction_k);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace polychrome
