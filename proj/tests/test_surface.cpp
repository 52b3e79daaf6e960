#include <gtest/gtest.h>

#include <map>
#include <set>

#include "pgraph/chart.hpp"
#include "pgraph/curve.hpp"
#include "pgraph/mapping_class.hpp"
#include "pgraph/triangulation.hpp"
#include "pgraph/universe.hpp"

using namespace pgraph;

namespace {

const IdealTriangulation& T(int g, int r) { return standard_triangulation({g, r}); }

MCToken tok(SurfaceId s, const char* name) { return parse_token(s, name); }

}  // namespace

TEST(Triangulation, EulerCounts) {
    EXPECT_EQ(T(1, 1).triangles.size(), 2u);
    EXPECT_EQ(T(1, 1).edge_count, 3);
    EXPECT_EQ(T(0, 5).triangles.size(), 6u);
    EXPECT_EQ(T(0, 5).edge_count, 9);
    for (SurfaceId s : supported_surfaces()) {
        const auto& t = standard_triangulation(s);
        EXPECT_EQ(2 * t.edge_count, 3 * static_cast<int>(t.triangles.size())) << s.str();
        EXPECT_EQ(static_cast<int>(t.triangles.size()), -2 * s.euler()) << s.str();
        EXPECT_EQ(static_cast<int>(t.peripheral.size()), s.r);
    }
    EXPECT_THROW(build_triangulation({3, 0}), Unsupported);
}

TEST(NormalCurve, Validation) {
    const auto& t = T(0, 5);
    EXPECT_FALSE(validate_normal_curve(t, std::vector<int>(t.edge_count, 0)));
    for (const auto& p : t.peripheral) EXPECT_FALSE(validate_normal_curve(t, weights_from_word(t, p)));
    std::vector<int> odd(t.edge_count, 0);
    odd[0] = odd[1] = 1;
    EXPECT_FALSE(validate_normal_curve(t, odd));
    EXPECT_THROW(validate_normal_curve(t, {1, 1}), ShapeError);
    EXPECT_TRUE(validate_normal_curve(t, weights_from_word(t, {1, 2})));
}

TEST(NormalCurve, TraceConservesWeights) {
    Universe u({1, 2}, 6);
    ASSERT_GT(u.size(), 0);
    for (CurveId c = 0; c < u.size(); ++c) {
        std::vector<int> seen(u.triangulation().edge_count, 0);
        for (const auto& x : trace_curve(u.triangulation(), u.curve(c))) ++seen[x.edge];
        EXPECT_EQ(seen, u.curve(c).weights);
        EXPECT_EQ(weights_from_word(u.triangulation(), u.word(c)), u.curve(c).weights);
    }
}

TEST(NormalCurve, DisconnectedWeightsRejected) {
    const auto& t = T(0, 5);
    auto a = weights_from_word(t, {1, 2}), b = weights_from_word(t, {3, 4});
    std::vector<int> sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
    EXPECT_THROW(trace_curve(t, {t.surface, sum}), NotConnected);
    EXPECT_TRUE(disjoint_by_sum(t, a, b));
}

TEST(Intersection, Basics) {
    const auto& t = T(0, 4);
    auto a = curve_of_slope(t, {0, 1}), b = curve_of_slope(t, {1, 0});
    EXPECT_EQ(geometric_intersection(t, a, a), 0);
    EXPECT_EQ(geometric_intersection(t, a, b), 2);
    EXPECT_EQ(geometric_intersection(T(1, 1), curve_of_slope(T(1, 1), {0, 1}), curve_of_slope(T(1, 1), {1, 0})), 1);
}

TEST(Intersection, ZeroIffSumIsDisjointMulticurve) {
    for (SurfaceId s : {SurfaceId{0, 5}, SurfaceId{1, 2}}) {
        Universe u(s, 4);
        const auto& t = u.triangulation();
        for (CurveId a = 0; a < u.size(); ++a)
            for (CurveId b = a + 1; b < u.size(); ++b) {
                int i = u.intersection(a, b);
                EXPECT_EQ(i, u.intersection(b, a));
                EXPECT_EQ(i == 0, disjoint_by_sum(t, u.curve(a).weights, u.curve(b).weights))
                    << s.str() << " " << u.key(a) << " " << u.key(b);
            }
    }
}

TEST(Intersection, InvariantUnderGenerators) {
    for (SurfaceId s : {SurfaceId{0, 5}, SurfaceId{1, 2}}) {
        Universe u(s, 4);
        const auto& t = u.triangulation();
        for (const auto& g : generator_tokens(s))
            for (CurveId a = 0; a < u.size(); a += 3)
                for (CurveId b = a + 1; b < u.size(); b += 5) {
                    auto ga = apply_generator(t, {g}, u.curve(a)), gb = apply_generator(t, {g}, u.curve(b));
                    EXPECT_EQ(geometric_intersection(t, ga, gb), u.intersection(a, b)) << g.str();
                }
    }
}

TEST(Intersection, SeparatingCurvesOnTwiceHoledTorus) {
    Universe u({1, 2}, 8);
    std::vector<CurveId> sep;
    for (CurveId c = 0; c < u.size(); ++c)
        if (u.separation(c).separating) sep.push_back(c);
    ASSERT_GE(sep.size(), 2u);
    for (std::size_t i = 0; i < sep.size(); ++i)
        for (std::size_t j = i + 1; j < sep.size(); ++j) EXPECT_GE(u.intersection(sep[i], sep[j]), 4);
}

TEST(Separation, FiveHoledSphere) {
    Universe u({0, 5}, 6);
    for (CurveId c = 0; c < u.size(); ++c) {
        const auto& sd = u.separation(c);
        ASSERT_TRUE(sd.separating);
        ASSERT_TRUE(sd.puncture_partition);
        auto [x, y] = *sd.puncture_partition;
        EXPECT_TRUE(x.size() == 2 || y.size() == 2) << u.key(c);
        EXPECT_EQ(x.size() + y.size(), 5u);
    }
}

TEST(Separation, TwiceHoledTorus) {
    const auto& t = T(1, 2);
    // boundary of a neighbourhood of an arc joining the two punctures
    NormalCurve around = curve_from_word(t, {1, 2, -1, -2});
    ASSERT_TRUE(validate_normal_curve(t, around.weights));
    EXPECT_TRUE(separation_data(t, around).separating);
    EXPECT_EQ(complement_of(t, around.weights).regions, 2);
    NormalCurve a = curve_from_word(t, {1});
    EXPECT_FALSE(separation_data(t, a).separating);
    EXPECT_EQ(complement_of(t, a.weights).regions, 1);
    auto ty = torus_type(t, a);
    EXPECT_FALSE(ty.separating);
    EXPECT_TRUE(torus_type(t, around).separating);
}

TEST(Separation, AgreesWithComplementCount) {
    for (SurfaceId s : {SurfaceId{1, 1}, SurfaceId{1, 2}, SurfaceId{0, 6}}) {
        Universe u(s, 4);
        for (CurveId c = 0; c < u.size(); ++c)
            EXPECT_EQ(u.separation(c).separating, complement_of(u.triangulation(), u.curve(c).weights).regions == 2)
                << s.str() << " " << u.key(c);
    }
}

TEST(TorusType, TwistActsOnHomology) {
    const auto& t = T(1, 2);
    SurfaceId s{1, 2};
    NormalCurve a = curve_from_word(t, {1}), b = curve_from_word(t, {2});
    EXPECT_EQ(torus_type(t, a).slope, (Slope{1, 0}));
    EXPECT_EQ(torus_type(t, b).slope, (Slope{0, 1}));
    auto img = torus_type(t, apply_generator(t, {tok(s, "tb")}, a)).slope;
    EXPECT_TRUE(img == (Slope{1, 1}) || img == (Slope{-1, 1})) << img.str();
}

TEST(MappingClass, Action) {
    const auto& t = T(0, 5);
    SurfaceId s{0, 5};
    NormalCurve c12 = curve_from_word(t, {1, 2});
    EXPECT_EQ(apply_generator(t, {}, c12), c12);
    EXPECT_EQ(apply_generator(t, {tok(s, "s1")}, c12), c12);
    NormalCurve c23 = curve_from_word(t, {2, 3});
    EXPECT_NE(apply_generator(t, {tok(s, "s1")}, c23), c23);
    const auto& t2 = T(1, 2);
    NormalCurve a = curve_from_word(t2, {1});
    EXPECT_EQ(apply_generator(t2, {tok({1, 2}, "ta")}, a), a);
    EXPECT_THROW(parse_token(s, "ta"), UnknownGenerator);
    EXPECT_THROW(parse_token(s, "s5"), UnknownGenerator);
    EXPECT_THROW(parse_token(s, "rho^-1"), UnknownGenerator);
}

TEST(MappingClass, InverseWordUndoes) {
    for (SurfaceId s : {SurfaceId{0, 5}, SurfaceId{1, 2}}) {
        Universe u(s, 4);
        const auto& t = u.triangulation();
        auto w = parse_word(s, s.g == 0 ? "s1 s3^-1 rho s2" : "ta tb^-1 rho ta");
        for (CurveId c = 0; c < u.size(); ++c)
            EXPECT_EQ(apply_generator(t, compose(inverse_word(w), w), u.curve(c)), u.curve(c));
    }
}

TEST(Universe, EmptyAtZero) {
    Universe u({1, 1}, 0);
    EXPECT_EQ(u.size(), 0);
}

TEST(Universe, OneHoledTorusCensusMatchesSlopes) {
    const int W = 12;
    Universe u({1, 1}, W);
    const auto& t = u.triangulation();
    std::set<std::vector<int>> from_slopes;
    for (i64 p = -W; p <= W; ++p)
        for (i64 q = 0; q <= W; ++q) {
            if (std::gcd(std::llabs(p), q) != 1) continue;
            auto c = curve_of_slope(t, normalize_slope(p, q));
            if (c.max_weight() <= W) from_slopes.insert(c.weights);
        }
    std::set<std::vector<int>> enumerated;
    for (CurveId c = 0; c < u.size(); ++c) enumerated.insert(u.curve(c).weights);
    EXPECT_EQ(enumerated, from_slopes);
}

TEST(Universe, FourHoledSphereMinimalCurves) {
    Universe u({0, 4}, 2);
    const auto& t = u.triangulation();
    for (Slope a : {Slope{0, 1}, Slope{1, 0}, Slope{1, 1}}) EXPECT_TRUE(u.find(curve_of_slope(t, a).weights)) << a.str();
}

TEST(Chart, SlopeRoundTrip) {
    for (SurfaceId s : {SurfaceId{1, 1}, SurfaceId{0, 4}}) {
        Universe u(s, 10);
        for (CurveId c = 0; c < u.size(); ++c)
            EXPECT_EQ(curve_of_slope(u.triangulation(), slope_of_curve(u.triangulation(), u.curve(c))), u.curve(c));
    }
}
