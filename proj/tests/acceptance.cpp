#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "polychrome/constructions.hpp"
#include "polychrome/search.hpp"
#include "polychrome/transforms.hpp"
#include "polychrome/verify.hpp"

using namespace polychrome;

namespace {

constexpr FamilyKind kAll[] = {FamilyKind::OneFactor, FamilyKind::TwoFactor, FamilyKind::HamiltonianCycle};

int floor_log2(long long x) {
    int k = -1;
    while (x > 0) x >>= 1, ++k;
    return k;
}

int f1_formula(int n) { return floor_log2(n); }
int f2_formula(int n) { return floor_log2(2LL * (n + 1)); }
int hc_formula(int n) { return floor_log2(8LL * (n - 1) / 3); }

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& what) {
        if (ok) detail << what;
        ok = false;
    }
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<void(Outcome&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string detail = out.detail.str();
    std::printf("%s %-3s %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, detail.empty() ? "" : ": ",
                detail.c_str());
    std::fflush(stdout);
    if (!out.ok) ++failures;
}

std::string at(const char* what, int n) { return std::string(what) + " at n=" + std::to_string(n); }

// Every main-color sequence for positions 1..n-1 up to relabeling, with the
// last vertex copying its predecessor; `fixed` pins a prefix.
void for_each_main(int n, const std::vector<Color>& fixed, const std::function<void(const std::vector<Color>&)>& visit) {
    std::vector<Color> main(static_cast<std::size_t>(n), 1);
    std::copy(fixed.begin(), fixed.end(), main.begin());
    const Color used0 = fixed.empty() ? 0 : *std::max_element(fixed.begin(), fixed.end());
    std::function<void(int, Color)> go = [&](int p, Color used) {
        if (p >= n - 1) {
            if (static_cast<int>(fixed.size()) < n) main[n - 1] = main[n - 2];
            visit(main);
            return;
        }
        for (Color c = 1; c <= used + 1; ++c) {
            main[p] = c;
            go(p + 1, std::max(used, c));
        }
    };
    go(static_cast<int>(fixed.size()), used0);
}

std::uint64_t edge_mask(int n, std::span<const Edge> edges) {
    std::uint64_t m = 0;
    for (const Edge& e : edges) m |= std::uint64_t{1} << edge_index(n, e.u, e.v);
    return m;
}

EdgeColoring scramble(std::mt19937_64& rng, const EdgeColoring& c, FamilyKind kind, int attempts) {
    const int n = c.n();
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    EdgeColoring cur = EdgeColoring::from_function(n, [&](Vertex a, Vertex b) { return c.color(perm[a - 1], perm[b - 1]); });
    const auto edges = all_edges(n);
    for (int i = 0; i < attempts; ++i) {
        const Edge e = edges[rng() % edges.size()];
        const Color col = 1 + static_cast<int>(rng() % static_cast<unsigned>(cur.k()));
        auto next = cur.recolored(e, col);
        if (next.k() == cur.k() && is_polychromatic(next, kind).polychromatic) cur = std::move(next);
    }
    return cur;
}

std::vector<int> degrees(const SubgraphWitness& w, int n) {
    std::vector<int> d(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : w.edges) ++d[e.u], ++d[e.v];
    return d;
}

}  // namespace

int main() {
    criterion("1", "build(f1, n) verifies with floor(log2 n) colors, even n in 2..20", [](Outcome& o) {
        for (int n = 2; n <= 20; n += 2) {
            const auto c = build(FamilyKind::OneFactor, n);
            if (c.k() != f1_formula(n)) o.fail(at("palette", n));
            if (!is_polychromatic(c, FamilyKind::OneFactor).polychromatic) o.fail(at("violation", n));
        }
    });

    criterion("2", "build(f2) for n in 3..12 and build(hc) for n in 3..14 verify with the formula palettes",
              [](Outcome& o) {
                  for (int n = 3; n <= 12; ++n) {
                      const auto c = build(FamilyKind::TwoFactor, n);
                      if (c.k() != f2_formula(n)) o.fail(at("f2 palette", n));
                      if (!is_polychromatic(c, FamilyKind::TwoFactor).polychromatic) o.fail(at("f2 violation", n));
                  }
                  for (int n = 3; n <= 14; ++n) {
                      const auto c = build(FamilyKind::HamiltonianCycle, n);
                      if (c.k() != hc_formula(n)) o.fail(at("hc palette", n));
                      if (!is_polychromatic(c, FamilyKind::HamiltonianCycle).polychromatic)
                          o.fail(at("hc violation", n));
                  }
              });

    struct Tiny {
        int n;
        FamilyKind kind;
        int expected;
    };
    const Tiny tiny[] = {{4, FamilyKind::OneFactor, 2},        {6, FamilyKind::OneFactor, 2},
                         {3, FamilyKind::HamiltonianCycle, 3}, {4, FamilyKind::HamiltonianCycle, 3},
                         {3, FamilyKind::TwoFactor, 3},        {4, FamilyKind::TwoFactor, 3},
                         {5, FamilyKind::TwoFactor, 3}};
    criterion("3", "brute-force optima at tiny n match the expected values and formulas", [&](Outcome& o) {
        for (const Tiny& t : tiny) {
            const auto r = brute_force_poly(t.n, t.kind, static_cast<int>(edge_count(t.n)));
            const int formula = t.kind == FamilyKind::OneFactor   ? f1_formula(t.n)
                                : t.kind == FamilyKind::TwoFactor ? f2_formula(t.n)
                                                                  : std::max(f2_formula(t.n), hc_formula(t.n));
            const std::string tag = std::string(family_name(t.kind)) + " n=" + std::to_string(t.n);
            if (r.k != t.expected) o.fail(tag + " search gave " + std::to_string(r.k));
            if (r.k != formula) o.fail(tag + " formula gives " + std::to_string(formula));
            if (!r.exact || (r.refuted_k != r.k + 1 && r.k != static_cast<int>(edge_count(t.n)))) o.fail(tag + " not exhausted");
            if (!oracle::polychromatic(r.coloring, t.kind)) o.fail(tag + " optimal coloring rejected by oracle");
        }
    });

    criterion("4", "ordered search for f1 equals floor(log2 n) and refutes one more color, even n in 2..12",
              [](Outcome& o) {
                  for (int n = 2; n <= 12; n += 2) {
                      const auto r = structured_poly(n, FamilyKind::OneFactor, SearchMode::Ordered);
                      if (r.k != f1_formula(n)) o.fail(at("optimum", n));
                      if (r.refuted_k != f1_formula(n) + 1) o.fail(at("refutation", n));
                      if (!is_polychromatic(r.coloring, FamilyKind::OneFactor).polychromatic) o.fail(at("witness", n));
                  }
              });

    criterion("5", "majority conditions: strict suite on ordered colorings, weak suite on combed colorings, n <= 8",
              [](Outcome& o) {
                  long instances = 0, witnesses = 0;
                  for (int n = 2; n <= 8; n += 2)
                      for_each_main(n, {}, [&](const std::vector<Color>& main) {
                          const auto c = build_ordered(main);
                          const auto ic = inherited_coloring(c, VertexOrdering::identity(n));
                          const auto cert = majority_certificate(ic, MajorityMode::Strict);
                          ++instances;
                          if (oracle::polychromatic(c, FamilyKind::OneFactor) && !cert.complete())
                              o.fail(at("polychromatic ordered coloring with incomplete strict certificate", n));
                          for (Color t : cert.failing()) {
                              ++witnesses;
                              if (!confirms_violation(c, adversarial_matching(c, ic, t), t))
                                  o.fail(at("adversarial matching rejected", n));
                          }
                      });
                  const std::vector<std::pair<UnitaryPrefix, std::vector<Color>>> layouts = {
                      {UnitaryPrefix::None, {}}, {UnitaryPrefix::Triple, {1, 2, 3}}, {UnitaryPrefix::Quad, {1, 1, 2, 2}}};
                  for (int n = 3; n <= 8; ++n)
                      for (const auto& [prefix, fixed] : layouts) {
                          if (static_cast<int>(fixed.size()) > n) continue;
                          for_each_main(n, fixed, [&](const std::vector<Color>& main) {
                              const auto c = prefix == UnitaryPrefix::None ? build_ordered(main) : build_combed(prefix, main);
                              if (!oracle::combed_some_order(c)) o.fail(at("generated coloring is not combed", n));
                              const auto ic = inherited_coloring(c, VertexOrdering::identity(n));
                              const auto cert = majority_certificate(ic, MajorityMode::Weak);
                              ++instances;
                              if (oracle::polychromatic(c, FamilyKind::HamiltonianCycle) && !cert.complete())
                                  o.fail(at("HC-polychromatic combed coloring with incomplete weak certificate", n));
                              for (Color t : cert.failing()) {
                                  ++witnesses;
                                  const auto w = adversarial_hamcycle(c, ic, t);
                                  if (!oracle::is_member(FamilyKind::HamiltonianCycle, n, w.edges) ||
                                      !confirms_violation(c, w, t))
                                      o.fail(at("adversarial Hamiltonian cycle rejected", n));
                              }
                          });
                      }
                  if (o.ok) o.detail << instances << " colorings, " << witnesses << " witnesses";
              });

    criterion("6", "member counts and find_member against enumeration on 1000 random subgraphs per kind and n <= 9",
              [](Outcome& o) {
                  for (int n = 2; n <= 12; n += 2)
                      if (count_members(FamilyKind::OneFactor, n) != oracle::double_factorial_odd(n))
                          o.fail(at("1-factor count", n));
                  for (int n = 3; n <= 9; ++n)
                      if (count_members(FamilyKind::HamiltonianCycle, n) != oracle::hamiltonian_count(n))
                          o.fail(at("Hamiltonian cycle count", n));
                  std::mt19937_64 rng(9);
                  for (FamilyKind kind : kAll)
                      for (int n = 3; n <= 9; ++n) {
                          if (kind == FamilyKind::OneFactor && n % 2) continue;
                          std::vector<std::uint64_t> members;
                          for_each_member(kind, n, [&](std::span<const Edge> edges) {
                              members.push_back(edge_mask(n, edges));
                              return true;
                          });
                          const auto edges = all_edges(n);
                          for (int trial = 0; trial < 1000; ++trial) {
                              std::bernoulli_distribution keep(0.3 + 0.65 * (trial % 20) / 20.0);
                              AllowedGraph g(n);
                              for (const Edge& e : edges)
                                  if (keep(rng)) g.add(e);
                              const std::uint64_t allowed = edge_mask(n, g.edges());
                              const bool expected = std::any_of(members.begin(), members.end(),
                                                                [&](std::uint64_t m) { return (m & ~allowed) == 0; });
                              const auto w = find_member(kind, g);
                              if (w.has_value() != expected) o.fail(at(std::string(family_name(kind)).c_str(), n) + " disagreement");
                              if (w && (!oracle::is_member(kind, n, w->edges) || (edge_mask(n, w->edges) & ~allowed)))
                                  o.fail(at(std::string(family_name(kind)).c_str(), n) + " invalid witness");
                          }
                      }
              });

    criterion("7", "transforms: twist, two_switch, recolor_unitary_triple, improve_toward_combed", [](Outcome& o) {
        for (int n = 4; n <= 7; ++n)
            for (const auto& h : enumerate_members(FamilyKind::HamiltonianCycle, n))
                for (std::size_t i = 0; i < h.edges.size(); ++i)
                    for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
                        if (!h.edges[i].disjoint(h.edges[j])) continue;
                        const auto t = twist(h, h.edges[i], h.edges[j]);
                        if (!oracle::is_member(FamilyKind::HamiltonianCycle, n, t.edges)) o.fail(at("twist invalid", n));
                        std::vector<Edge> back;
                        std::set_difference(t.edges.begin(), t.edges.end(), h.edges.begin(), h.edges.end(),
                                            std::back_inserter(back));
                        if (back.size() != 2 || twist(t, back[0], back[1]) != h) o.fail(at("twist not involutive", n));
                    }
        for (int n = 4; n <= 6; ++n)
            for (const auto& f : enumerate_members(FamilyKind::TwoFactor, n))
                for (std::size_t i = 0; i < f.edges.size(); ++i)
                    for (std::size_t j = i + 1; j < f.edges.size(); ++j) {
                        if (!f.edges[i].disjoint(f.edges[j])) continue;
                        for (int choice : {0, 1}) {
                            SubgraphWitness g;
                            try {
                                g = two_switch(f, f.edges[i], f.edges[j], choice);
                            } catch (const std::invalid_argument&) {
                                continue;
                            }
                            if (!oracle::is_member(FamilyKind::TwoFactor, n, g.edges) || degrees(g, n) != degrees(f, n))
                                o.fail(at("two_switch broke degrees", n));
                        }
                    }
        std::mt19937_64 rng(31);
        for (int done = 0; done < 100;) {
            const int n = 4 + static_cast<int>(rng() % 6);
            const auto c = oracle::random_coloring(rng, n, 3 + static_cast<int>(rng() % 3));
            if (c.k() < 3) continue;
            ++done;
            std::vector<Vertex> vs(static_cast<std::size_t>(n));
            std::iota(vs.begin(), vs.end(), 1);
            std::shuffle(vs.begin(), vs.end(), rng);
            const Vertex x = vs[0], y = vs[1], z = vs[2];
            const auto out = recolor_unitary_triple(c, x, y, z);
            for (auto [v, main, partner] : {std::tuple{x, 1, y}, std::tuple{y, 2, z}, std::tuple{z, 3, x}}) {
                const auto u = oracle::unitary(out, v);
                if (!u || u->first != main || u->second != partner)
                    o.fail(at("recolored vertex not unitary as specified", n));
            }
            // outside edges keep their colors up to palette compaction
            std::map<Color, Color> relabel;
            for (const Edge& e : all_edges(n))
                if (!e.touches(x) && !e.touches(y) && !e.touches(z)) {
                    const auto [it, fresh] = relabel.emplace(c.color(e), out.color(e));
                    if (!fresh && it->second != out.color(e)) o.fail(at("recolor merged outside classes", n));
                }
            Color prev = 0;
            for (const auto& [from, to] : relabel) {
                if ((from <= 3 && to != from) || to <= prev) o.fail(at("recolor relabeled an outside edge", n));
                prev = to;
            }
        }
        int reached = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const FamilyKind kind = kAll[trial % 3];
            int n = 3 + static_cast<int>(rng() % 6);
            if (kind == FamilyKind::OneFactor && n % 2) ++n;
            const auto c = scramble(rng, build(kind, n), kind, 10);
            const auto r = improve_toward_combed(c, kind);
            if (r.coloring.k() != c.k()) o.fail(at("improve changed the palette", n));
            if (!is_polychromatic(r.coloring, kind).polychromatic) o.fail(at("improve lost polychromaticity", n));
            reached += r.combed;
        }
        if (o.ok) o.detail << reached << " of 1000 improve outputs combed";
    });

    criterion("8a", "every computed pair satisfies poly_F2 <= poly_HC", [](Outcome& o) {
        for (int n = 3; n <= 5; ++n) {
            const int m = static_cast<int>(edge_count(n));
            if (brute_force_poly(n, FamilyKind::TwoFactor, m).k > brute_force_poly(n, FamilyKind::HamiltonianCycle, m).k)
                o.fail(at("exact pair", n));
        }
        for (int n = 6; n <= 12; ++n)
            if (structured_poly(n, FamilyKind::TwoFactor, SearchMode::Combed).k >
                structured_poly(n, FamilyKind::HamiltonianCycle, SearchMode::Combed).k)
                o.fail(at("combed pair", n));
    });

    criterion("8b", "floor(log2 2(n+1)) <= floor(log2 8(n-1)/3) <= floor(log2 n) + 4 for n in 3..10^4", [](Outcome& o) {
        std::vector<int> bad;
        for (int n = 3; n <= 10000; ++n) {
            if (palette_size(FamilyKind::TwoFactor, n) != f2_formula(n) ||
                palette_size(FamilyKind::HamiltonianCycle, n) != hc_formula(n))
                o.fail(at("palette differs from formula", n));
            if (!(f2_formula(n) <= hc_formula(n) && hc_formula(n) <= f1_formula(n) + 4)) bad.push_back(n);
        }
        if (!bad.empty()) {
            std::ostringstream s;
            s << "chain fails at " << bad.size() << " value(s), first n=" << bad.front() << " ("
              << f2_formula(bad.front()) << " > " << hc_formula(bad.front()) << ")";
            o.fail(s.str());
        }
    });

    std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : (std::to_string(failures) + " criteria failed").c_str());
    return failures == 0 ? 0 : 1;
}
