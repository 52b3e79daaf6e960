#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "pgraph/farey.hpp"
#include "pgraph/suites.hpp"

using namespace pgraph;

namespace {

Slope S(const char* s) { return parse_slope(s); }

std::set<Slope> slopes(std::initializer_list<const char*> xs) {
    std::set<Slope> out;
    for (auto x : xs) out.insert(S(x));
    return out;
}

// Every reduced slope with both entries bounded, by direct scan.
std::vector<Slope> scan(i64 bound) {
    std::set<Slope> out;
    for (i64 p = -bound; p <= bound; ++p)
        for (i64 q = -bound; q <= bound; ++q)
            if (p != 0 || q != 0) out.insert(normalize_slope(p, q));
    return {out.begin(), out.end()};
}

std::set<Slope> brute_neighbors(Slope a, i64 bound) {
    std::set<Slope> out;
    for (Slope b : scan(bound)) {
        i64 d = a.p * b.q - a.q * b.p;
        if (d == 1 || d == -1) out.insert(b);
    }
    return out;
}

}  // namespace

TEST(Slope, Normalization) {
    EXPECT_EQ(normalize_slope(2, 4), S("1/2"));
    EXPECT_EQ(normalize_slope(-3, 0), S("1/0"));
    EXPECT_EQ(normalize_slope(3, -6), S("-1/2"));
    EXPECT_THROW(normalize_slope(0, 0), InvalidSlope);
    EXPECT_THROW(parse_slope("7"), InvalidSlope);
    EXPECT_EQ(S("-1/2").str(), "-1/2");
}

TEST(Slope, FareyEdges) {
    EXPECT_TRUE(is_farey_edge(S("0/1"), S("1/0")));
    EXPECT_TRUE(is_farey_edge(S("1/2"), S("1/3")));
    EXPECT_FALSE(is_farey_edge(S("1/3"), S("2/3")));
}

TEST(Slope, NeighborsMatchScan) {
    EXPECT_EQ(farey_neighbors(S("0/1"), 3), slopes({"1/0", "1/1", "-1/1", "1/2", "-1/2", "1/3", "-1/3"}));
    EXPECT_EQ(farey_neighbors(S("1/0"), 2), slopes({"0/1", "1/1", "-1/1", "2/1", "-2/1"}));
    EXPECT_EQ(farey_neighbors(S("1/1"), 1), slopes({"0/1", "1/0"}));
    for (Slope a : scan(5))
        for (i64 bound : {1, 4, 7}) EXPECT_EQ(farey_neighbors(a, bound), brute_neighbors(a, bound)) << a.str();
}

TEST(Slope, TriangleCompletions) {
    auto c = triangle_completions(S("0/1"), S("1/0"));
    EXPECT_EQ(std::set<Slope>(c.begin(), c.end()), slopes({"1/1", "-1/1"}));
    c = triangle_completions(S("1/1"), S("1/2"));
    EXPECT_EQ(std::set<Slope>(c.begin(), c.end()), slopes({"2/3", "0/1"}));
    EXPECT_THROW(triangle_completions(S("0/1"), S("0/1")), NotAnEdge);
    // brute force: common neighbours of an edge among all slopes with entries at most 8
    for (Slope a : scan(4))
        for (Slope b : farey_neighbors(a, 4)) {
            std::set<Slope> common;
            for (Slope x : brute_neighbors(a, 8))
                if (x != b && is_farey_edge(x, b)) common.insert(x);
            c = triangle_completions(a, b);
            EXPECT_EQ(common, std::set<Slope>(c.begin(), c.end()));
        }
}

TEST(Slope, ChartIntersection) {
    EXPECT_EQ(slope_intersection(S("0/1"), S("1/0"), ChartKind::OneHoledTorus), 1);
    EXPECT_EQ(slope_intersection(S("0/1"), S("1/0"), ChartKind::FourHoledSphere), 2);
    EXPECT_EQ(slope_intersection(S("2/3"), S("2/3"), ChartKind::FourHoledSphere), 0);
}

TEST(Association, Convention) {
    EXPECT_EQ(slope_association(S("0/1")).str(), "{1,2}|{3,4}");
    EXPECT_EQ(slope_association(S("1/0")).str(), "{1,3}|{2,4}");
    EXPECT_EQ(slope_association(S("3/5")).str(), "{1,4}|{2,3}");
}

TEST(Association, Candidates) {
    EXPECT_EQ(associativity_candidates(S("0/1"), slope_association(S("1/0")), 6),
              slopes({"1/0", "1/2", "-1/2", "1/4", "-1/4", "1/6", "-1/6"}));
    EXPECT_EQ(associativity_candidates(S("0/1"), slope_association(S("1/1")), 3),
              slopes({"1/1", "-1/1", "1/3", "-1/3"}));
    EXPECT_THROW(associativity_candidates(S("0/1"), slope_association(S("0/1")), 3), NoSuchAssociation);
}

TEST(Association, AdjacentSlopesDiffer) {
    for (Slope a : scan(9))
        for (Slope b : farey_neighbors(a, 9)) EXPECT_NE(slope_association(a), slope_association(b));
}

TEST(Quadrilateral, Triples) {
    auto q = quadrilateral_triple(S("1/0"), S("0/1"), S("2/1"));
    ASSERT_TRUE(q);
    EXPECT_EQ(q->central, S("1/0"));
    EXPECT_EQ(q->witness, S("1/1"));
    EXPECT_FALSE(quadrilateral_triple(S("0/1"), S("1/0"), S("1/1")));
    EXPECT_FALSE(quadrilateral_triple(S("0/1"), S("1/0"), S("5/1")));
    // no slope within bound 8 is adjacent to all of 0/1, 1/0 and 5/1
    for (Slope w : scan(8))
        EXPECT_FALSE(is_farey_edge(w, S("0/1")) && is_farey_edge(w, S("1/0")) && is_farey_edge(w, S("5/1")));
}

TEST(PGL2, Action) {
    EXPECT_EQ(apply_pgl2({}, S("3/5")), S("3/5"));
    EXPECT_EQ(apply_pgl2({PGL2Token::TwistZero}, S("1/0")), S("1/1"));
    EXPECT_EQ(apply_pgl2({PGL2Token::TwistZero}, S("0/1")), S("0/1"));
    EXPECT_EQ(apply_pgl2({PGL2Token::Reflect}, S("1/2")), S("-1/2"));
    for (Slope a : scan(6)) {
        auto w = word_from_zero(a);
        EXPECT_EQ(apply_pgl2(w, S("0/1")), a);
        EXPECT_EQ(apply_pgl2(inverse_word(w), a), S("0/1"));
    }
}

TEST(PGL2, PreservesEdges) {
    for (Slope a : scan(5))
        for (Slope b : farey_neighbors(a, 5))
            for (PGL2Token t : all_pgl2_tokens)
                EXPECT_TRUE(is_farey_edge(apply_pgl2({t}, a), apply_pgl2({t}, b)));
}

TEST(FareySuite, PassesAndCatchesCorruptedTable) {
    auto r = farey_suite(8);
    EXPECT_TRUE(r.ok) << r.counterexamples.dump();
    AssociationTable bad{Association{0}, Association{0}, Association{2}};
    auto b = farey_suite(4, bad);
    EXPECT_FALSE(b.ok);
    EXPECT_FALSE(b.counterexamples.empty());
}
