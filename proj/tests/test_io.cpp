#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "pgraph/io.hpp"

using namespace pgraph;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Data, ShippedTriangulationsMatch) {
    for (SurfaceId s : supported_surfaces()) {
        fs::path p = fs::path(PGRAPH_DATA_DIR) / "triangulations" / (s.file_stem() + ".json");
        ASSERT_TRUE(fs::exists(p)) << p;
        EXPECT_EQ(slurp(p), dump(triangulation_json(standard_triangulation(s)))) << p;
        auto j = json::parse(slurp(p));
        EXPECT_EQ(j["schema_version"], schema_version);
        EXPECT_EQ(j["triangles"].size(), standard_triangulation(s).triangles.size());
    }
}

TEST(Json, CurvesAndBall) {
    Universe u({0, 5}, 4);
    auto cj = curves_json(u);
    EXPECT_EQ(cj["count"], u.size());
    EXPECT_EQ(cj["curves"].size(), static_cast<std::size_t>(u.size()));
    EXPECT_EQ(cj["curves"][0]["weights"].size(), static_cast<std::size_t>(u.triangulation().edge_count));

    auto b = build_ball(u, standard_seed(u), 2);
    auto bj = ball_json(u, b);
    EXPECT_EQ(bj["vertices"].size(), static_cast<std::size_t>(b.size()));
    EXPECT_EQ(bj["edges"].size(), b.edges.size());
    Universe u2({0, 5}, 4);
    EXPECT_EQ(dump(bj), dump(ball_json(u2, build_ball(u2, standard_seed(u2), 2))));
}

TEST(Dot, MoveLabels) {
    Universe u({1, 1}, 4);
    auto b = build_ball(u, {0}, 1);
    auto dot = ball_dot(u, b);
    EXPECT_EQ(dot.rfind("graph pants {", 0), 0u);
    EXPECT_NE(dot.find("→"), std::string::npos);
    EXPECT_NE(dot.find("style=dashed"), std::string::npos);
    std::size_t edges = 0;
    for (std::size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++edges;
    EXPECT_EQ(edges, b.edges.size());
    EXPECT_EQ(dot_escape("a\"b\\"), "a\\\"b\\\\");
}

TEST(Json, Inventory) {
    auto [u, b] = fixture(0, 5);
    auto j = inventory_json(u, b, fixture_cells(0, 5));
    EXPECT_GT(j["pentagons"].size(), 0u);
    EXPECT_EQ(j["squares"].size(), 0u);
    EXPECT_EQ(j["pentagons"][0]["tag"], "AlternatingPentagon");
    EXPECT_EQ(j["pentagons"][0]["keys"].size(), 5u);
}

TEST(Files, AtomicWrite) {
    fs::path dir = fs::temp_directory_path() / "pgraph_io_test";
    fs::remove_all(dir);
    write_atomic(dir / "x.json", "{}\n");
    EXPECT_EQ(slurp(dir / "x.json"), "{}\n");
    EXPECT_FALSE(fs::exists(dir / "x.json.tmp"));
    write_atomic(dir / "x.json", "[]\n");
    EXPECT_EQ(slurp(dir / "x.json"), "[]\n");
    fs::remove_all(dir);
}

TEST(Report, SuiteJson) {
    SuiteReport r;
    r.name = "demo";
    r.check(true, "fine");
    EXPECT_TRUE(r.ok);
    r.check(false, "broken", {{"x", 1}});
    EXPECT_FALSE(r.ok);
    auto j = r.to_json();
    EXPECT_EQ(j["counterexamples"].size(), 1u);
    EXPECT_EQ(j["counterexamples"][0]["check"], "broken");
}
