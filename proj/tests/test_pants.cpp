#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <set>

#include "pgraph/chart.hpp"
#include "pgraph/pants.hpp"

using namespace pgraph;

namespace {

CurveId by_word(const Universe& u, const Word& w) { return u.id_of_word(w); }

std::vector<int> two_side(const Universe& u, CurveId c) {
    auto [x, y] = *u.separation(c).puncture_partition;
    return x.size() == 2 ? x : y;
}

}  // namespace

TEST(Pants, Decompositions) {
    Universe t({1, 1}, 4);
    CurveId zero = *t.find(curve_of_slope(t.triangulation(), {0, 1}).weights);
    EXPECT_TRUE(is_pants_decomposition(t, {zero}));

    Universe u({0, 5}, 6);
    CurveId c12 = by_word(u, {1, 2}), c34 = by_word(u, {3, 4}), c23 = by_word(u, {2, 3});
    EXPECT_TRUE(is_pants_decomposition(u, canonical_pants({c12, c34})));
    EXPECT_EQ(u.intersection(c12, c23), 2);
    EXPECT_FALSE(is_pants_decomposition(u, canonical_pants({c12, c23})));
    EXPECT_FALSE(is_pants_decomposition(u, {c12}));
}

TEST(Pants, DisjointSubsurfacesOnChain) {
    Universe u({0, 6}, 4);
    auto seed = standard_seed(u);
    ASSERT_EQ(seed.size(), 3u);
    CurveId a1 = by_word(u, {1, 2}), a2 = by_word(u, {1, 2, 3}), a3 = by_word(u, {1, 2, 3, 4});
    auto adj = pants_adjacency(u, seed);
    EXPECT_EQ(adj.pants_count, 4);
    EXPECT_TRUE(adj.lie_on_disjoint_subsurfaces(a1, a3));
    EXPECT_FALSE(adj.lie_on_disjoint_subsurfaces(a1, a2));
    EXPECT_FALSE(adj.lie_on_disjoint_subsurfaces(a2, a3));
    EXPECT_THROW(adj.position(by_word(u, {2, 3})), CurveNotInDecomposition);
}

TEST(Pants, FiveHoledSphereNeverDisjointSubsurfaces) {
    Universe u({0, 5}, 4);
    int seen = 0;
    for (CurveId a = 0; a < u.size(); ++a)
        for (CurveId b : u.disjoint_from(a)) {
            if (b < a) continue;
            auto p = canonical_pants({a, b});
            auto adj = pants_adjacency(u, p);
            EXPECT_FALSE(adj.lie_on_disjoint_subsurfaces(a, b));
            EXPECT_EQ(adj.pants_count, 3);
            ++seen;
        }
    EXPECT_GT(seen, 0);
}

TEST(Pants, ComplementKinds) {
    Universe t({1, 1}, 4);
    CurveId c = 0;
    EXPECT_EQ(pants_adjacency(t, {c}).classify_complement(c), ChartKind::OneHoledTorus);
    Universe u({1, 2}, 6);
    auto seed = standard_seed(u);
    auto b = build_ball(u, seed, 1);
    for (const auto& p : b.vertices)
        for (CurveId x : p) {
            auto ms = elementary_moves(u, p, x);
            if (ms.minimum == 0) continue;  // no candidate inside the universe
            EXPECT_EQ(ms.minimum, chart_minimum(pants_adjacency(u, p).classify_complement(x))) << u.key(x);
        }
}

TEST(Moves, OneHoledTorusMatchesFarey) {
    const int W = 20;
    Universe u({1, 1}, W);
    const auto& t = u.triangulation();
    CurveId zero = *u.find(curve_of_slope(t, {0, 1}).weights);
    auto ms = elementary_moves(u, {zero}, zero);
    EXPECT_EQ(ms.minimum, 1);
    EXPECT_TRUE(ms.kind_agrees);
    std::set<Slope> got, want;
    for (const auto& m : ms.moves) got.insert(slope_of_curve(t, u.curve(m.added)));
    for (Slope s : farey_neighbors({0, 1}, W))
        if (u.find(curve_of_slope(t, s).weights)) want.insert(s);
    EXPECT_EQ(got, want);
}

TEST(Moves, SeparatingCurveMovesToNonseparating) {
    Universe u({1, 2}, 8);
    auto b = build_ball(u, standard_seed(u), 2);
    int checked = 0;
    for (const auto& p : b.vertices)
        for (CurveId a : p) {
            if (!u.separation(a).separating) continue;
            for (const auto& m : elementary_moves(u, p, a).moves) {
                EXPECT_FALSE(u.separation(m.added).separating);
                ++checked;
            }
        }
    EXPECT_GT(checked, 0);
}

TEST(Moves, FiveHoledSphereShareOnePuncture) {
    Universe u({0, 5}, 8);
    CurveId c12 = by_word(u, {1, 2}), c34 = by_word(u, {3, 4});
    auto ms = elementary_moves(u, canonical_pants({c12, c34}), c12);
    EXPECT_EQ(ms.minimum, 2);
    ASSERT_FALSE(ms.moves.empty());
    for (const auto& m : ms.moves) {
        auto side = two_side(u, m.added);
        int shared = 0;
        for (int p : side) shared += (p == 1 || p == 2);
        EXPECT_EQ(shared, 1) << u.key(m.added);
        EXPECT_TRUE(u.disjoint(m.added, c34));
    }
}

TEST(Ball, RadiusZero) {
    Universe u({0, 5}, 4);
    auto b = build_ball(u, standard_seed(u), 0);
    EXPECT_EQ(b.size(), 1);
    EXPECT_TRUE(b.edges.empty());
}

TEST(Ball, OneHoledTorusIsFareyBall) {
    const int W = 16;
    Universe u({1, 1}, W);
    const auto& t = u.triangulation();
    CurveId zero = *u.find(curve_of_slope(t, {0, 1}).weights);
    auto b = build_ball(u, {zero}, 2);
    // Farey ball restricted to slopes whose curves lie in the universe
    auto inside = [&](Slope s) { return u.find(curve_of_slope(t, s).weights).has_value(); };
    std::map<Slope, int> dist{{{0, 1}, 0}};
    std::queue<Slope> q;
    q.push({0, 1});
    while (!q.empty()) {
        Slope s = q.front();
        q.pop();
        if (dist[s] == 2) continue;
        for (Slope n : farey_neighbors(s, W))
            if (inside(n) && !dist.count(n)) {
                dist[n] = dist[s] + 1;
                q.push(n);
            }
    }
    std::map<Slope, int> got;
    for (int v = 0; v < b.size(); ++v) got[slope_of_curve(t, u.curve(b.vertices[v][0]))] = b.depth[v];
    EXPECT_EQ(got, dist);
    std::set<std::pair<Slope, Slope>> edges, want;
    for (const auto& e : b.edges) {
        Slope x = slope_of_curve(t, u.curve(e.removed)), y = slope_of_curve(t, u.curve(e.added));
        edges.insert(std::minmax(x, y));
    }
    for (auto [x, dx] : dist)
        for (auto [y, dy] : dist)
            if (x < y && is_farey_edge(x, y)) want.insert({x, y});
    EXPECT_EQ(edges, want);
}

TEST(Ball, EdgeLabelsAndCompleteness) {
    Universe u({0, 5}, 8);
    auto b = build_ball(u, standard_seed(u), 2);
    std::set<std::pair<int, int>> edges;
    for (const auto& e : b.edges) {
        const auto& x = b.vertices[e.u];
        const auto& y = b.vertices[e.v];
        PantsDecomposition only_x, only_y;
        std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(only_x));
        std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(only_y));
        EXPECT_EQ(only_x, PantsDecomposition{e.removed});
        EXPECT_EQ(only_y, PantsDecomposition{e.added});
        EXPECT_EQ(b.move_label(e.v, e.u), std::make_pair(e.added, e.removed));
        edges.insert(std::minmax(e.u, e.v));
    }
    // every elementary move between discovered vertices is an edge
    for (int v = 0; v < b.size(); ++v)
        for (CurveId a : b.vertices[v])
            for (const auto& m : elementary_moves(u, b.vertices[v], a).moves)
                if (auto w = b.find(m.target)) {
                    EXPECT_TRUE(edges.count(std::minmax(v, *w)));
                }
    for (int v = 0; v < b.size(); ++v) {
        EXPECT_EQ(b.frontier[v] != 0, b.depth[v] == b.radius);
        EXPECT_EQ(b.certified[v] != 0, vertex_certifiable(u, b.vertices[v]));
    }
    EXPECT_TRUE(b.chart_mismatches.empty());
    EXPECT_THROW(b.move_label(0, 0), NotAPath);
}
