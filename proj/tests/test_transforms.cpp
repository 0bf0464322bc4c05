#include <doctest.h>

#include "oracles.hpp"
#include "polychrome/transforms.hpp"
#include "polychrome/verify.hpp"

using namespace polychrome;

namespace {

SubgraphWitness hc(const std::vector<Vertex>& cycle) {
    return SubgraphWitness{FamilyKind::HamiltonianCycle, oracle::cycle_edges(cycle)};
}

std::vector<int> degrees(const SubgraphWitness& w, int n) {
    std::vector<int> d(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : w.edges) ++d[e.u], ++d[e.v];
    return d;
}

std::vector<Edge> added(const SubgraphWitness& before, const SubgraphWitness& after) {
    std::vector<Edge> out;
    std::set_difference(after.edges.begin(), after.edges.end(), before.edges.begin(), before.edges.end(),
                        std::back_inserter(out));
    return out;
}

// Random vertex relabeling followed by random recolorings that keep the
// coloring polychromatic with the same palette.
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

}  // namespace

TEST_CASE("twist example and involution") {
    const auto h = hc({1, 2, 3, 4, 5, 6});
    const auto t = twist(h, Edge(1, 2), Edge(4, 5));
    CHECK(t == hc({1, 4, 3, 2, 5, 6}));
    const auto back = added(h, t);
    REQUIRE(back.size() == 2);
    CHECK(twist(t, back[0], back[1]) == h);

    CHECK_THROWS_AS(twist(h, Edge(1, 2), Edge(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(twist(h, Edge(1, 3), Edge(4, 5)), std::invalid_argument);
}

TEST_CASE("twist is valid and involutive on every cycle of K_n, n <= 7") {
    for (int n = 4; n <= 7; ++n)
        for (const auto& h : enumerate_members(FamilyKind::HamiltonianCycle, n))
            for (std::size_t i = 0; i < h.edges.size(); ++i)
                for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
                    if (!h.edges[i].disjoint(h.edges[j])) continue;
                    const auto t = twist(h, h.edges[i], h.edges[j]);
                    REQUIRE(oracle::is_member(FamilyKind::HamiltonianCycle, n, t.edges));
                    const auto back = added(h, t);
                    REQUIRE(back.size() == 2);
                    REQUIRE(twist(t, back[0], back[1]) == h);
                }
}

TEST_CASE("two_switch examples") {
    SubgraphWitness triangles{FamilyKind::TwoFactor,
                              {Edge(1, 2), Edge(1, 3), Edge(2, 3), Edge(4, 5), Edge(4, 6), Edge(5, 6)}};
    const auto a = two_switch(triangles, Edge(1, 2), Edge(4, 5), 0);
    const auto b = two_switch(triangles, Edge(1, 2), Edge(4, 5), 1);
    CHECK(a.edges == oracle::cycle_edges({1, 4, 6, 5, 2, 3}));
    CHECK(b.edges == oracle::cycle_edges({1, 5, 6, 4, 2, 3}));
    CHECK(a != b);
    CHECK(oracle::is_member(FamilyKind::HamiltonianCycle, 6, a.edges));
    CHECK(oracle::is_member(FamilyKind::HamiltonianCycle, 6, b.edges));
    CHECK_THROWS_AS(two_switch(triangles, Edge(1, 2), Edge(4, 5), 2), std::invalid_argument);
    CHECK_THROWS_AS(two_switch(triangles, Edge(1, 2), Edge(1, 3), 0), std::invalid_argument);

    // choice 0 on a 4-cycle's opposite edges would reuse an edge
    const auto square = hc({1, 2, 4, 3});
    CHECK_THROWS_AS(two_switch(square, Edge(1, 2), Edge(3, 4), 0), std::invalid_argument);
}

TEST_CASE("two_switch preserves degrees on every 2-factor of K_n, n <= 6") {
    for (int n = 4; n <= 6; ++n)
        for (const auto& f : enumerate_members(FamilyKind::TwoFactor, n))
            for (std::size_t i = 0; i < f.edges.size(); ++i)
                for (std::size_t j = i + 1; j < f.edges.size(); ++j) {
                    if (!f.edges[i].disjoint(f.edges[j])) continue;
                    int legal = 0;
                    for (int choice : {0, 1}) {
                        try {
                            const auto g = two_switch(f, f.edges[i], f.edges[j], choice);
                            ++legal;
                            REQUIRE(oracle::is_member(FamilyKind::TwoFactor, n, g.edges));
                            REQUIRE(degrees(g, n) == degrees(f, n));
                        } catch (const std::invalid_argument&) {
                        }
                    }
                    CHECK(legal >= 1);
                }
}

TEST_CASE("max_vertex_profile") {
    const auto mono = max_vertex_profile(EdgeColoring::monochromatic(5), {});
    CHECK(mono.max_degree == 4);
    for (const auto& e : mono.entries) {
        CHECK(e.degree == 4);
        CHECK_FALSE(e.minority.has_value());
        CHECK(e.is_max);
    }
    CHECK_FALSE(mono.pair.has_value());

    const auto f2 = max_vertex_profile(build(FamilyKind::TwoFactor, 15), {});
    CHECK(f2.entry(1).color == 1);
    CHECK(f2.entry(1).degree == 13);
    CHECK(f2.entry(1).minority == 3);

    // S = {1, 2} are (1,2)-max-vertices, T = {3, 4} are (2,1)-max-vertices
    const EdgeColoring st = EdgeColoring::from_function(5, [](Vertex a, Vertex b) -> Color {
        const Edge e(a, b);
        const std::vector<Edge> twos{Edge(1, 3), Edge(2, 4), Edge(3, 4), Edge(3, 5), Edge(4, 5)};
        return std::find(twos.begin(), twos.end(), e) != twos.end() ? 2 : 1;
    });
    const auto p = max_vertex_profile(st, {});
    CHECK(p.max_degree == 3);
    REQUIRE(p.pair.has_value());
    CHECK(*p.pair == std::pair<Color, Color>(1, 2));
    CHECK(p.s == std::vector<Vertex>{1, 2});
    CHECK(p.t == std::vector<Vertex>{3, 4});
    CHECK(p.w == std::vector<Vertex>{5});
    CHECK_FALSE(p.entry(5).is_max);

    // the same structure inside Z when an extra vertex sits in X
    const EdgeColoring st6 = EdgeColoring::from_function(6, [&](Vertex a, Vertex b) -> Color {
        return b == 6 ? 3 : st.color(a, b);
    });
    const auto p6 = max_vertex_profile(st6, {6});
    CHECK(p6.z == std::vector<Vertex>{1, 2, 3, 4, 5});
    CHECK(p6.s == p.s);
    CHECK(p6.t == p.t);
    CHECK_THROWS_AS(max_vertex_profile(st6, {1, 2, 3, 4, 5, 6}), std::invalid_argument);

    // degree counts replayed from the definition
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const auto c = oracle::random_coloring(rng, n, 3);
        std::vector<Vertex> x;
        for (Vertex v = 1; v <= n; ++v)
            if (rng() % 4 == 0) x.push_back(v);
        if (static_cast<int>(x.size()) == n) continue;
        const auto prof = max_vertex_profile(c, x);
        for (const auto& e : prof.entries) {
            std::vector<int> counts(4, 0);
            for (Vertex w : prof.z)
                if (w != e.vertex) ++counts[c.color(e.vertex, w)];
            CHECK(e.degree == *std::max_element(counts.begin() + 1, counts.end()));
            CHECK(counts[e.color] == e.degree);
            CHECK(e.is_max == (e.degree == prof.max_degree));
        }
    }
}

TEST_CASE("recolor_unitary_triple") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        auto c = oracle::random_coloring(rng, n, 3 + static_cast<int>(rng() % 2));
        if (c.k() < 3) continue;
        std::vector<Vertex> vs(static_cast<std::size_t>(n));
        std::iota(vs.begin(), vs.end(), 1);
        std::shuffle(vs.begin(), vs.end(), rng);
        const Vertex x = vs[0], y = vs[1], z = vs[2];
        const auto out = recolor_unitary_triple(c, x, y, z);
        for (auto [v, main, partner] : {std::tuple{x, 1, y}, std::tuple{y, 2, z}, std::tuple{z, 3, x}}) {
            const auto u = is_unitary(out, v);
            REQUIRE(u.has_value());
            CHECK(u->main == main);
            CHECK(u->partner == partner);
        }
        CHECK(out.color(x, y) == 2);
        CHECK(out.color(y, z) == 3);
        CHECK(out.color(z, x) == 1);
        for (const Edge& e : all_edges(n))
            if (!e.touches(x) && !e.touches(y) && !e.touches(z)) CHECK(out.color(e) == c.color(e));
        CHECK(recolor_unitary_triple(out, x, y, z) == out);
    }
    CHECK_THROWS_AS(recolor_unitary_triple(EdgeColoring(3, {1, 2, 2}), 1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(recolor_unitary_triple(build(FamilyKind::HamiltonianCycle, 6), 1, 1, 2), std::invalid_argument);
}

TEST_CASE("recolor_unitary_triple on max-vertex fixtures stays polychromatic") {
    for (FamilyKind kind : {FamilyKind::TwoFactor, FamilyKind::HamiltonianCycle})
        for (int n = 5; n <= 8; ++n) {
            // v1, v2, v3 become (1,2)-, (2,3)- and (3,1)-max-vertices
            const auto fixture = recolor_unitary_triple(build(kind, n), 1, 2, 3);
            const auto prof = max_vertex_profile(fixture, {});
            CHECK(prof.entry(1).minority == 2);
            CHECK(prof.entry(2).minority == 3);
            CHECK(prof.entry(3).minority == 1);
            for (Vertex v = 1; v <= 3; ++v) CHECK(prof.entry(v).is_max);
            CHECK(is_polychromatic(fixture, kind).polychromatic);
            CHECK(oracle::polychromatic(fixture, kind));
            CHECK(is_polychromatic(recolor_unitary_triple(fixture, 1, 2, 3), kind).polychromatic);
        }
}

TEST_CASE("improve_toward_combed fixed point and fixtures") {
    const auto f8 = build(FamilyKind::OneFactor, 8);
    const auto r8 = improve_toward_combed(f8, FamilyKind::OneFactor);
    CHECK(r8.coloring == f8);
    CHECK(r8.moves == 0);
    CHECK(r8.combed);

    CHECK_THROWS_AS(improve_toward_combed(EdgeColoring(4, {2, 1, 1, 1, 1, 1}), FamilyKind::OneFactor),
                    std::invalid_argument);

    // every polychromatic 3-coloring of K_5 that is not combed
    for (FamilyKind kind : {FamilyKind::TwoFactor, FamilyKind::HamiltonianCycle}) {
        int fixtures = 0, reached = 0;
        std::vector<Color> colors(10);
        for (int code = 0; code < 59049; ++code) {
            int x = code;
            for (auto& col : colors) col = 1 + x % 3, x /= 3;
            const EdgeColoring c(5, colors);
            if (c.k() != 3 || comb_certificate(c) || !oracle::polychromatic(c, kind)) continue;
            ++fixtures;
            const auto r = improve_toward_combed(c, kind);
            CHECK(r.coloring.k() == 3);
            CHECK(oracle::polychromatic(r.coloring, kind));
            CHECK(r.combed == comb_certificate(r.coloring).has_value());
            if (r.combed) {
                CHECK(r.moves >= 1);
                ++reached;
            }
        }
        CHECK(fixtures > 0);
        CHECK(reached > 0);
        MESSAGE(family_name(kind), ": ", reached, " of ", fixtures, " reach a combed coloring");
    }

    const EdgeColoring one_move(5, {3, 3, 3, 2, 2, 2, 2, 1, 1, 1});
    CHECK_FALSE(comb_certificate(one_move).has_value());
    const auto r = improve_toward_combed(one_move, FamilyKind::HamiltonianCycle);
    CHECK(r.moves == 1);
    CHECK(r.combed);
}

TEST_CASE("improve_toward_combed keeps polychromaticity and palette") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 150; ++trial) {
        const FamilyKind kind = trial % 3 == 0   ? FamilyKind::OneFactor
                                : trial % 3 == 1 ? FamilyKind::TwoFactor
                                                 : FamilyKind::HamiltonianCycle;
        int n = 4 + static_cast<int>(rng() % 5);
        if (kind == FamilyKind::OneFactor && n % 2) ++n;
        const auto c = scramble(rng, build(kind, n), kind, 12);
        const auto r = improve_toward_combed(c, kind);
        CHECK(r.coloring.k() == c.k());
        CHECK(is_polychromatic(r.coloring, kind).polychromatic);
        CHECK(r.combed == comb_certificate(r.coloring).has_value());
    }
}

TEST_CASE("ordered_prefix") {
    CHECK(ordered_prefix(build(FamilyKind::OneFactor, 10)).size() == 10);
    const EdgeColoring mixed(6, {1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3});
    CHECK(ordered_prefix(mixed).size() < 6);
}
