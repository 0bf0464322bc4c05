#include "polychrome/families.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace polychrome {

AllowedGraph::AllowedGraph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n) + 1, Bitset(n + 1)) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
}

AllowedGraph AllowedGraph::complete(int n) {
    AllowedGraph g(n);
    for (Vertex i = 1; i <= n; ++i)
        for (Vertex j = i + 1; j <= n; ++j) g.add(Edge(i, j));
    return g;
}

AllowedGraph AllowedGraph::avoiding(const EdgeColoring& c, Color t) {
    AllowedGraph g(c.n());
    for (Vertex i = 1; i <= c.n(); ++i)
        for (Vertex j = i + 1; j <= c.n(); ++j)
            if (c.color(i, j) != t) g.add(Edge(i, j));
    return g;
}

AllowedGraph AllowedGraph::from_edges(int n, std::span<const Edge> edges) {
    AllowedGraph g(n);
    for (const auto& e : edges) g.add(e);
    return g;
}

void AllowedGraph::add(const Edge& e) {
    if (e.u < 1 || e.v > n_ || e.u == e.v) throw std::invalid_argument("edge outside the vertex set");
    adjacency_[e.u].set(e.v);
    adjacency_[e.v].set(e.u);
}

void AllowedGraph::remove(const Edge& e) {
    adjacency_[e.u].reset(e.v);
    adjacency_[e.v].reset(e.u);
}

std::vector<Edge> AllowedGraph::edges() const {
    std::vector<Edge> out;
    for (Vertex i = 1; i <= n_; ++i)
        for (int j = adjacency_[i].next(i + 1); j != -1; j = adjacency_[i].next(j + 1)) out.emplace_back(i, j);
    return out;
}

bool avoids_color(const SubgraphWitness& w, const EdgeColoring& c, Color t) {
    return std::none_of(w.edges.begin(), w.edges.end(), [&](const Edge& e) { return c.color(e) == t; });
}

bool is_valid_member(const SubgraphWitness& w, int n) {
    const int target = w.kind == FamilyKind::OneFactor ? 1 : 2;
    if (w.kind == FamilyKind::OneFactor ? (n % 2 != 0 || n < 2) : n < 3) return false;
    if (w.edges.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(target) / 2) return false;
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        const Edge& e = w.edges[i];
        if (e.u < 1 || e.v > n || e.u >= e.v) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (w.edges[j] == e) return false;
        ++degree[e.u];
        ++degree[e.v];
    }
    for (Vertex v = 1; v <= n; ++v)
        if (degree[v] != target) return false;
    if (w.kind != FamilyKind::HamiltonianCycle) return true;
    return cycle_order(w, n).size() == static_cast<std::size_t>(n);
}

std::vector<Vertex> cycle_order(const SubgraphWitness& w, int n) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n) + 1);
    for (const auto& e : w.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    Vertex start = 1;
    while (start <= n && adj[start].empty()) ++start;
    if (start > n || adj[start].size() != 2) return {};
    std::vector<Vertex> order{start};
    Vertex prev = start;
    Vertex cur = std::min(adj[start][0], adj[start][1]);
    while (cur != start) {
        if (adj[cur].size() != 2 || static_cast<int>(order.size()) > n) return {};
        order.push_back(cur);
        Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    }
    return order;
}

namespace {

// Edmonds' blossom algorithm on a 0-indexed graph.
class BlossomMatcher {
public:
    explicit BlossomMatcher(std::vector<std::vector<int>> adj)
        : n_(static_cast<int>(adj.size())),
          adj_(std::move(adj)),
          match_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_)),
          base_(static_cast<std::size_t>(n_)),
          used_(static_cast<std::size_t>(n_)),
          blossom_(static_cast<std::size_t>(n_)) {}

    /// Grows the matching; with `stop_on_exposed` returns false as soon as a
    /// vertex is proven to stay exposed in every maximum matching extension.
    bool solve(bool stop_on_exposed) {
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1)
                for (int to : adj_[v])
                    if (match_[to] == -1) {
                        match_[v] = to;
                        match_[to] = v;
                        break;
                    }
        bool perfect = true;
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int end = find_path(v);
            if (end == -1) {
                perfect = false;
                if (stop_on_exposed) return false;
                continue;
            }
            while (end != -1) {
                int pv = parent_[end];
                int ppv = match_[pv];
                match_[end] = pv;
                match_[pv] = end;
                end = ppv;
            }
        }
        return perfect;
    }

    const std::vector<int>& mates() const { return match_; }

private:
    int lca(int a, int b) {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        while (true) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;
};

std::vector<std::vector<int>> adjacency_lists(const AllowedGraph& g, const Bitset* removed) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n()));
    for (Vertex v = 1; v <= g.n(); ++v) {
        if (removed && removed->test(v)) continue;
        const Bitset& nb = g.neighbors(v);
        for (int w = nb.next(1); w != -1; w = nb.next(w + 1))
            if (!(removed && removed->test(w))) adj[v - 1].push_back(w - 1);
    }
    return adj;
}

std::optional<SubgraphWitness> one_factor(const AllowedGraph& g, const Edge* forced) {
    const int n = g.n();
    Bitset removed(n + 1);
    if (forced) {
        removed.set(forced->u);
        removed.set(forced->v);
    }
    BlossomMatcher matcher(adjacency_lists(g, &removed));
    matcher.solve(false);
    SubgraphWitness w{FamilyKind::OneFactor, {}};
    if (forced) w.edges.push_back(*forced);
    const auto& mate = matcher.mates();
    for (int v = 0; v < n; ++v) {
        if (removed.test(v + 1)) continue;
        if (mate[v] == -1) return std::nullopt;
        if (v < mate[v]) w.edges.emplace_back(v + 1, mate[v] + 1);
    }
    std::sort(w.edges.begin(), w.edges.end());
    return w;
}

// 2-factors of g correspond to perfect matchings of the gadget graph: every
// edge e = uv becomes two adjacent vertices e_u, e_v, and every vertex v of
// degree d gets d - 2 core vertices joined to each e_v. The edge e is in the
// 2-factor exactly when e_u is matched to e_v.
std::optional<SubgraphWitness> two_factor(const AllowedGraph& g, const Edge* forced) {
    const int n = g.n();
    for (Vertex v = 1; v <= n; ++v)
        if (g.degree(v) < 2) return std::nullopt;
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::vector<int> core_start(static_cast<std::size_t>(n) + 1, 0);
    int next = 2 * m;
    for (Vertex v = 1; v <= n; ++v) {
        core_start[v] = next;
        next += g.degree(v) - 2;
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(next));
    auto link = [&adj](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int ei = 0; ei < m; ++ei) {
        const Edge& e = edges[ei];
        link(2 * ei, 2 * ei + 1);
        if (forced && e == *forced) continue;
        for (int c = 0; c < g.degree(e.u) - 2; ++c) link(2 * ei, core_start[e.u] + c);
        for (int c = 0; c < g.degree(e.v) - 2; ++c) link(2 * ei + 1, core_start[e.v] + c);
    }
    BlossomMatcher matcher(std::move(adj));
    if (!matcher.solve(true)) return std::nullopt;
    SubgraphWitness w{FamilyKind::TwoFactor, {}};
    for (int ei = 0; ei < m; ++ei)
        if (matcher.mates()[2 * ei] == 2 * ei + 1) w.edges.push_back(edges[ei]);
    return w;
}

SubgraphWitness cycle_witness(const std::vector<Vertex>& order) {
    SubgraphWitness w{FamilyKind::HamiltonianCycle, {}};
    for (std::size_t i = 0; i < order.size(); ++i) w.edges.emplace_back(order[i], order[(i + 1) % order.size()]);
    std::sort(w.edges.begin(), w.edges.end());
    return w;
}

// Hamiltonian path DP over subsets of V \ {start}: reach[mask] holds the
// possible last vertices of a path from start visiting exactly mask.
std::optional<SubgraphWitness> hamiltonian_dp(const AllowedGraph& g, Vertex start, Vertex required_end) {
    const int n = g.n();
    std::vector<Vertex> label;  // dp index -> vertex
    for (Vertex v = 1; v <= n; ++v)
        if (v != start) label.push_back(v);
    const int bits = n - 1;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(bits), 0);
    std::uint32_t start_adj = 0;
    for (int a = 0; a < bits; ++a) {
        if (g.has(start, label[a])) start_adj |= 1U << a;
        for (int b = 0; b < bits; ++b)
            if (a != b && g.has(label[a], label[b])) adj[a] |= 1U << b;
    }
    const std::uint32_t full = bits == 32 ? ~0U : (1U << bits) - 1;
    std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);
    for (int a = 0; a < bits; ++a)
        if (start_adj >> a & 1U) reach[1U << a] = 1U << a;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        if ((mask & (mask - 1)) == 0) continue;
        std::uint32_t ends = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            int x = std::countr_zero(rest);
            if (reach[mask ^ (1U << x)] & adj[x]) ends |= 1U << x;
        }
        reach[mask] = ends;
    }
    std::uint32_t closing = required_end ? 0 : start_adj;
    if (required_end) {
        for (int a = 0; a < bits; ++a)
            if (label[a] == required_end) closing = (start_adj >> a & 1U) << a;
    }
    std::uint32_t ends = reach[full] & closing;
    if (!ends) return std::nullopt;
    std::vector<Vertex> order;
    std::uint32_t mask = full;
    int cur = std::countr_zero(ends);
    while (true) {
        order.push_back(label[cur]);
        std::uint32_t prev_mask = mask ^ (1U << cur);
        if (!prev_mask) break;
        int prev = std::countr_zero(reach[prev_mask] & adj[cur]);
        mask = prev_mask;
        cur = prev;
    }
    order.push_back(start);
    std::reverse(order.begin(), order.end());
    return cycle_witness(order);
}

class HamiltonSearch {
public:
    HamiltonSearch(const AllowedGraph& g, int interval) : g_(g), interval_(std::max(1, interval)), unvisited_(g.n() + 1) {}

    std::optional<SubgraphWitness> run(Vertex start, Vertex second) {
        start_ = start;
        for (Vertex v = 1; v <= g_.n(); ++v) unvisited_.set(v);
        unvisited_.reset(start);
        path_ = {start};
        if (second) {
            unvisited_.reset(second);
            path_.push_back(second);
        }
        if (!extend()) return std::nullopt;
        return cycle_witness(path_);
    }

private:
    bool viable() const {
        const Vertex last = path_.back();
        for (int w = unvisited_.next(1); w != -1; w = unvisited_.next(w + 1)) {
            const Bitset& nb = g_.neighbors(w);
            int avail = nb.count_and(unvisited_) + (nb.test(last) ? 1 : 0) + (nb.test(start_) ? 1 : 0);
            if (avail < 2) return false;
        }
        return true;
    }

    bool connected() const {
        // unvisited vertices plus the path end must form one component
        Bitset seen(g_.n() + 1);
        std::vector<int> stack{path_.back()};
        seen.set(path_.back());
        int reached = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            const Bitset& nb = g_.neighbors(v);
            for (int w = nb.next(1); w != -1; w = nb.next(w + 1))
                if (unvisited_.test(w) && !seen.test(w)) {
                    seen.set(w);
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == unvisited_.count();
    }

    bool extend() {
        const int n = g_.n();
        const Vertex last = path_.back();
        if (static_cast<int>(path_.size()) == n) return g_.has(last, start_);
        if (!viable()) return false;
        if (static_cast<int>(path_.size()) % interval_ == 0 && !connected()) return false;
        std::vector<std::pair<int, Vertex>> options;
        const Bitset& nb = g_.neighbors(last);
        for (int w = nb.next(1); w != -1; w = nb.next(w + 1))
            if (unvisited_.test(w)) options.emplace_back(g_.neighbors(w).count_and(unvisited_), w);
        std::sort(options.begin(), options.end());
        for (const auto& [deg, w] : options) {
            unvisited_.reset(w);
            path_.push_back(w);
            if (extend()) return true;
            path_.pop_back();
            unvisited_.set(w);
        }
        return false;
    }

    const AllowedGraph& g_;
    int interval_;
    Bitset unvisited_;
    std::vector<Vertex> path_;
    Vertex start_ = 0;
};

// Connected and without cut vertices (Tarjan low-link, iterative).
bool biconnected(const AllowedGraph& g) {
    const int n = g.n();
    std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0), low(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0), cursor(static_cast<std::size_t>(n) + 1, 1);
    int time = 0, root_children = 0;
    std::vector<int> stack{1};
    disc[1] = low[1] = ++time;
    while (!stack.empty()) {
        const int v = stack.back();
        const int w = g.neighbors(v).next(cursor[v]);
        if (w != -1) {
            cursor[v] = w + 1;
            if (!disc[w]) {
                parent[w] = v;
                disc[w] = low[w] = ++time;
                if (v == 1) ++root_children;
                stack.push_back(w);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
            continue;
        }
        stack.pop_back();
        const int p = parent[v];
        if (p) {
            low[p] = std::min(low[p], low[v]);
            if (p != 1 && low[v] >= disc[p]) return false;
        }
    }
    return time == n && root_children <= 1;
}

std::optional<SubgraphWitness> hamiltonian_cycle(const AllowedGraph& g, const Edge* forced, const HamiltonOptions& options) {
    const int n = g.n();
    for (Vertex v = 1; v <= n; ++v)
        if (g.degree(v) < 2) return std::nullopt;
    if (!biconnected(g)) return std::nullopt;
    if (n <= std::min(options.dp_max_n, 28)) {
        if (forced) return hamiltonian_dp(g, forced->u, forced->v);
        return hamiltonian_dp(g, 1, 0);
    }
    HamiltonSearch search(g, options.connectivity_interval);
    if (forced) return search.run(forced->u, forced->v);
    return search.run(1, 0);
}

void check_order(FamilyKind kind, int n) {
    if (kind == FamilyKind::OneFactor ? (n < 2 || n % 2 != 0) : n < 3)
        throw std::invalid_argument("invalid order " + std::to_string(n) + " for family " +
                                    std::string(family_name(kind)));
}

}  // namespace

std::vector<Vertex> maximum_matching(const AllowedGraph& g) {
    BlossomMatcher matcher(adjacency_lists(g, nullptr));
    matcher.solve(false);
    std::vector<Vertex> mate(static_cast<std::size_t>(g.n()) + 1, 0);
    for (int v = 0; v < g.n(); ++v) mate[v + 1] = matcher.mates()[v] + 1;
    return mate;
}

std::optional<SubgraphWitness> find_member(FamilyKind kind, const AllowedGraph& g, const HamiltonOptions& options) {
    check_order(kind, g.n());
    switch (kind) {
        case FamilyKind::OneFactor: return one_factor(g, nullptr);
        case FamilyKind::TwoFactor: return two_factor(g, nullptr);
        case FamilyKind::HamiltonianCycle: return hamiltonian_cycle(g, nullptr, options);
    }
    return std::nullopt;
}

std::optional<SubgraphWitness> find_member_through(FamilyKind kind, const AllowedGraph& g, const Edge& forced,
                                                   const HamiltonOptions& options) {
    check_order(kind, g.n());
    if (!g.has(forced)) throw std::invalid_argument("forced edge is not allowed");
    switch (kind) {
        case FamilyKind::OneFactor: return one_factor(g, &forced);
        case FamilyKind::TwoFactor: return two_factor(g, &forced);
        case FamilyKind::HamiltonianCycle: return hamiltonian_cycle(g, &forced, options);
    }
    return std::nullopt;
}

int EnumerationCaps::cap(FamilyKind kind) const {
    switch (kind) {
        case FamilyKind::OneFactor: return one_factor;
        case FamilyKind::TwoFactor: return two_factor;
        case FamilyKind::HamiltonianCycle: return hamiltonian;
    }
    return 0;
}

namespace {

// Include/exclude recursion over edges in lexicographic order, include
// first, so members come out in lexicographic order of sorted edge lists.
class MemberEnumerator {
public:
    MemberEnumerator(FamilyKind kind, int n, const std::function<bool(std::span<const Edge>)>& visit)
        : kind_(kind),
          n_(n),
          target_(kind == FamilyKind::OneFactor ? 1 : 2),
          visit_(visit),
          degree_(static_cast<std::size_t>(n) + 1, 0),
          other_end_(static_cast<std::size_t>(n) + 1) {
        for (Vertex v = 0; v <= n; ++v) other_end_[v] = v;
    }

    void run() { step(1, 2); }

private:
    // returns false once the visitor asked to stop
    bool step(Vertex i, Vertex j) {
        if (i == n_) {
            if (degree_[n_] != target_) return true;
            if (kind_ == FamilyKind::HamiltonianCycle && !closed_) return true;
            return visit_(chosen_);
        }
        if (j > n_) {
            if (degree_[i] != target_) return true;
            return step(i + 1, i + 2);
        }
        if (degree_[i] + (n_ - j + 1) < target_) return true;
        if (degree_[i] == target_) return step(i + 1, i + 2);

        if (degree_[j] < target_) {
            const bool same_path = kind_ != FamilyKind::OneFactor && other_end_[i] == j;
            const bool allowed = !same_path || kind_ == FamilyKind::TwoFactor ||
                                 static_cast<int>(chosen_.size()) + 1 == n_;
            if (allowed) {
                Vertex a = other_end_[i], b = other_end_[j];
                Vertex old_a = other_end_[a], old_b = other_end_[b];
                if (!same_path) {
                    other_end_[a] = b;
                    other_end_[b] = a;
                } else if (kind_ == FamilyKind::HamiltonianCycle) {
                    closed_ = true;
                }
                ++degree_[i];
                ++degree_[j];
                chosen_.emplace_back(i, j);
                bool go_on = step(i, j + 1);
                chosen_.pop_back();
                --degree_[i];
                --degree_[j];
                if (!same_path) {
                    other_end_[a] = old_a;
                    other_end_[b] = old_b;
                } else if (kind_ == FamilyKind::HamiltonianCycle) {
                    closed_ = false;
                }
                if (!go_on) return false;
            }
        }
        return step(i, j + 1);
    }

    FamilyKind kind_;
    int n_;
    int target_;
    const std::function<bool(std::span<const Edge>)>& visit_;
    std::vector<int> degree_;
    std::vector<Vertex> other_end_;  // for path endpoints: the opposite endpoint
    std::vector<Edge> chosen_;
    bool closed_ = false;
};

}  // namespace

void for_each_member(FamilyKind kind, int n, const std::function<bool(std::span<const Edge>)>& visit,
                     const EnumerationCaps& caps) {
    check_order(kind, n);
    if (n > caps.cap(kind))
        throw std::invalid_argument("enumeration cap exceeded: n = " + std::to_string(n) + " > " +
                                    std::to_string(caps.cap(kind)));
    MemberEnumerator(kind, n, visit).run();
}

std::vector<SubgraphWitness> enumerate_members(FamilyKind kind, int n, const EnumerationCaps& caps) {
    std::vector<SubgraphWitness> out;
    for_each_member(
        kind, n,
        [&](std::span<const Edge> edges) {
            out.push_back(SubgraphWitness{kind, std::vector<Edge>(edges.begin(), edges.end())});
            return true;
        },
        caps);
    return out;
}

std::uint64_t count_members(FamilyKind kind, int n, const EnumerationCaps& caps) {
    std::uint64_t count = 0;
    for_each_member(
        kind, n,
        [&count](std::span<const Edge>) {
            ++count;
            return true;
        },
        caps);
    return count;
}

}  // namespace polychrome
