#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "pgraph/bridge.hpp"
#include "pgraph/chart.hpp"

using namespace pgraph;

TEST(Chart, FiveHoledSphere) {
    auto [u, b] = fixture(0, 5);
    CurveId c12 = u.id_of_word({1, 2}), c34 = u.id_of_word({3, 4});
    int P = *b.find(canonical_pants({c12, c34}));
    auto ch = farey_chart(b, P, c12);
    EXPECT_EQ(ch.fixed, PantsDecomposition{c34});
    EXPECT_EQ(ch.label, c12);
    for (int v = 0; v < b.size(); ++v)
        EXPECT_EQ(std::binary_search(ch.vertices.begin(), ch.vertices.end(), v),
                  std::count(b.vertices[v].begin(), b.vertices[v].end(), c34) > 0);
    EXPECT_EQ(chart_label(b, ch.vertices, P), c12);
    EXPECT_THROW(farey_chart(b, P, u.id_of_word({2, 3})), CurveNotInDecomposition);
}

TEST(Chart, OneHoledTorusChartIsTheBall) {
    Universe u({1, 1}, 8);
    auto b = build_ball(u, {0}, 2);
    auto ch = farey_chart(b, 0, 0);
    EXPECT_EQ(static_cast<int>(ch.vertices.size()), b.size());
}

TEST(Chart, Intersections) {
    auto [u, b] = fixture(0, 5);
    CurveId c12 = u.id_of_word({1, 2}), c34 = u.id_of_word({3, 4});
    int P = *b.find(canonical_pants({c12, c34}));
    auto r = chart_intersection_properties(u, b, farey_chart(b, P, c12), farey_chart(b, P, c34));
    EXPECT_EQ(r.common, std::vector<int>{P});
    EXPECT_TRUE(r.ok);
    // charts whose fixed curves intersect share nothing
    CurveId c23 = u.id_of_word({2, 3});
    int Q = *b.find(canonical_pants({c23, u.id_of_word({1, 2, 3})}));
    auto s = chart_intersection_properties(u, b, farey_chart(b, P, c12), farey_chart(b, Q, u.id_of_word({1, 2, 3})));
    ASSERT_GT(u.intersection(c34, c23), 0);
    EXPECT_TRUE(s.common.empty());
    int checked = 0;
    for (int v = 0; v < b.size(); v += 7)
        for (int w = 0; w < b.size(); w += 5)
            for (CurveId a : b.vertices[v])
                for (CurveId c : b.vertices[w]) {
                    auto x = chart_intersection_properties(u, b, farey_chart(b, v, a), farey_chart(b, w, c));
                    EXPECT_TRUE(x.ok);
                    ++checked;
                }
    EXPECT_GT(checked, 100);
}

TEST(Chart, VertexIsIntersectionOfItsCharts) {
    for (auto [g, r] : {std::pair{0, 5}, std::pair{1, 2}, std::pair{0, 6}}) {
        auto [u, b] = fixture(g, r);
        for (int v = 0; v < b.size(); ++v) {
            std::vector<int> common;
            bool first = true;
            for (CurveId a : b.vertices[v]) {
                auto vs = farey_chart(b, v, a).vertices;
                if (first)
                    common = vs;
                else {
                    std::vector<int> next;
                    std::set_intersection(common.begin(), common.end(), vs.begin(), vs.end(), std::back_inserter(next));
                    common = next;
                }
                first = false;
            }
            EXPECT_EQ(common, std::vector<int>{v});
        }
    }
}

TEST(WellDefinedness, ThreeCases) {
    {
        auto [u, b] = fixture(0, 6);
        int P = *b.find(standard_seed(u));
        CurveId a1 = u.id_of_word({1, 2}), a3 = u.id_of_word({1, 2, 3, 4});
        int Pp = *step(u, b, P, a3);
        auto wl = find_welldefinedness_loop(u, b, P, Pp, a1);
        EXPECT_EQ(wl.instance.kind, LoopCase::DisjointSubsurfaces);
        EXPECT_EQ(wl.tag, LoopTag::AlternatingSquare);
        EXPECT_TRUE(wl.wxxy_alternating);
    }
    {
        auto [u, b] = fixture(0, 5);
        CurveId c12 = u.id_of_word({1, 2}), c34 = u.id_of_word({3, 4});
        int P = *b.find(canonical_pants({c12, c34}));
        int Pp = *step(u, b, P, c34);
        auto wl = find_welldefinedness_loop(u, b, P, Pp, c12);
        EXPECT_EQ(wl.instance.kind, LoopCase::FiveHoledSphere);
        EXPECT_EQ(wl.tag, LoopTag::AlternatingPentagon);
        EXPECT_EQ(wl.loop.vertices.size(), 5u);
        EXPECT_TRUE(wl.wxxy_alternating);
    }
    {
        auto [u, b] = fixture(1, 2);
        int found = 0, illegal = 0;
        for (const auto& e : b.edges) {
            if (!move_certified(b, e.u, e.v)) continue;
            CurveId a1 = without(b.vertices[e.u], e.removed)[0];
            auto m = classify_move(u, b, e.u, e.v, a1);
            EXPECT_EQ(m.kind, LoopCase::TwiceHoledTorus);
            if (m.illegal) {
                EXPECT_THROW(find_welldefinedness_loop(u, b, e.u, e.v, a1), IllegalMove);
                ++illegal;
                continue;
            }
            if (u.separation(a1).separating || !u.separation(e.added).separating) continue;
            auto wl = find_welldefinedness_loop(u, b, e.u, e.v, a1);
            EXPECT_EQ(wl.tag, LoopTag::AlmostAlternatingHexagon);
            EXPECT_EQ(wl.loop.vertices.size(), 6u);
            ++found;
        }
        EXPECT_GT(found, 0);
        EXPECT_GT(illegal, 0);
    }
}

TEST(WellDefinedness, Circumvention) {
    auto [u, b] = fixture(1, 2);
    int seen = 0;
    for (const auto& e : b.edges) {
        if (!move_certified(b, e.u, e.v)) continue;
        CurveId a1 = without(b.vertices[e.u], e.removed)[0];
        if (!classify_move(u, b, e.u, e.v, a1).illegal) {
            EXPECT_THROW(circumvent_illegal_move(u, b.vertices[e.u], b.vertices[e.v]), NotIllegal);
            continue;
        }
        auto c = circumvent_illegal_move(u, b.vertices[e.u], b.vertices[e.v]);
        ASSERT_EQ(c.choices.size(), 2u);
        for (CurveId x : c.choices) {
            EXPECT_TRUE(u.separation(x).separating);
            EXPECT_TRUE(u.disjoint(x, a1));
            EXPECT_EQ(u.intersection(x, c.a2), 2);
            EXPECT_EQ(u.intersection(x, c.a2p), 2);
        }
        EXPECT_EQ(u.intersection(c.choices[0], c.choices[1]), 4);
        ++seen;
    }
    EXPECT_GT(seen, 0);
    auto [v, f] = fixture(0, 5);
    EXPECT_THROW(circumvent_illegal_move(v, f.vertices[f.edges[0].u], f.vertices[f.edges[0].v]), NotIllegal);
}

TEST(Automorphism, IdentityAndInverse) {
    auto [u, b] = fixture(0, 5);
    auto id = induced_automorphism(u, b, {});
    for (int v = 0; v < b.size(); ++v) EXPECT_EQ(id.vertex_map[v], v);
    EXPECT_EQ(id.partial, 0);
    auto w = parse_word({0, 5}, "s1 s3^-1 rho");
    auto A = induced_automorphism(u, b, compose(inverse_word(w), w));
    for (int v = 0; v < b.size(); ++v)
        if (b.certified[v] && A.vertex_map[v] >= 0) {
            EXPECT_EQ(A.vertex_map[v], v);
        }
    EXPECT_THROW(induced_automorphism(u, b, parse_word({1, 2}, "ta")), UnknownGenerator);
}

TEST(Phi, GeneratorsPass) {
    for (auto [g, r] : {std::pair{0, 5}, std::pair{1, 2}}) {
        auto [u, b] = fixture(g, r);
        auto d = transport_data(u, b);
        auto loops = enumerate_loops(b, 6, VertexFilter::Certified);
        for (const auto& t : generator_tokens({g, r})) {
            auto rep = verify_phi(u, b, induced_automorphism(u, b, {t}), d, loops);
            for (const auto& [name, c] : rep.checks) {
                EXPECT_TRUE(c.ok()) << t.str() << " " << name << ": " << (c.ok() ? "" : c.counterexamples[0]);
                if (name != "path independence") {
                    EXPECT_GT(c.checked, 0) << name;
                }
            }
        }
    }
}

TEST(Phi, ChartsOfOneCurveAgree) {
    auto [u, b] = fixture(0, 5);
    auto charts = chart_index(b);
    auto A = induced_automorphism(u, b, parse_word({0, 5}, "s2"));
    int checked = 0;
    for (const auto& e : b.edges) {
        if (!move_interior(b, e.u, e.v) || A.vertex_map[e.u] < 0 || A.vertex_map[e.v] < 0) continue;
        for (CurveId a : without(b.vertices[e.u], e.removed)) {
            auto img = [&](int v) -> std::optional<CurveId> {
                std::vector<int> vs;
                for (int x : charts.at(without(b.vertices[v], a)))
                    if (A.vertex_map[x] >= 0) vs.push_back(A.vertex_map[x]);
                return chart_label(b, vs, A.vertex_map[v]);
            };
            auto x = img(e.u), y = img(e.v);
            if (!x || !y) continue;
            EXPECT_EQ(*x, *y);
            EXPECT_EQ(*x, A.curve_map[a]);
            ++checked;
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(Phi, RejectsSyntheticBijections) {
    auto [u, b] = fixture(0, 5);
    auto d = transport_data(u, b);
    auto loops = enumerate_loops(b, 6, VertexFilter::Certified);
    auto A = induced_automorphism(u, b, parse_word({0, 5}, "s1"));
    // swap two certified vertices that are not images of each other
    auto swapped = A;
    int x = -1, y = -1;
    for (int v = 0; v < b.size() && y < 0; ++v) {
        if (!b.certified[v] || b.frontier[v] || swapped.vertex_map[v] < 0) continue;
        if (x < 0)
            x = v;
        else if (!b.adjacent(x, v))
            y = v;
    }
    ASSERT_GE(y, 0);
    std::swap(swapped.vertex_map[x], swapped.vertex_map[y]);
    EXPECT_FALSE(verify_phi(u, b, swapped, d, loops).ok());

    // a vertex bijection that is a graph automorphism of nothing: shift every vertex by one
    auto shifted = A;
    for (int v = 0; v < b.size(); ++v) shifted.vertex_map[v] = (v + 1) % b.size();
    EXPECT_FALSE(verify_phi(u, b, shifted, d, loops).ok());

    // the right vertex map paired with the wrong curve action
    auto mislabelled = induced_automorphism(b, A.word, CurveAction(u).word(parse_word({0, 5}, "s2")));
    mislabelled.vertex_map = A.vertex_map;
    EXPECT_FALSE(verify_phi(u, b, mislabelled, d, loops).ok());
}

TEST(Phi, Composition) {
    auto [u, b] = fixture(1, 2);
    auto charts = chart_index(b);
    CurveAction act(u);
    auto wu = parse_word({1, 2}, "ta rho"), wv = parse_word({1, 2}, "tb^-1");
    auto Au = induced_automorphism(b, wu, act.word(wu));
    auto Av = induced_automorphism(b, wv, act.word(wv));
    auto Auv = induced_automorphism(b, compose(wu, wv), act.word(compose(wu, wv)));
    auto c = verify_composition(b, charts, Au, Av, Auv);
    EXPECT_TRUE(c.ok());
    EXPECT_GT(c.checked, 0);
    auto Avu = induced_automorphism(b, compose(wv, wu), act.word(compose(wv, wu)));
    EXPECT_FALSE(verify_composition(b, charts, Au, Av, Avu).ok());
}
