#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "freegroup.hpp"

namespace pgraph {

struct SurfaceId {
    int g = 0;
    int r = 0;
    auto operator<=>(const SurfaceId&) const = default;
    int n() const { return 3 * g - 3 + r; }
    int euler() const { return 2 - 2 * g - r; }
    int pants_count() const { return 2 * g - 2 + r; }
    int rank() const { return 2 * g + r - 1; }
    std::string str() const { return std::to_string(g) + "," + std::to_string(r); }
    std::string file_stem() const { return "S_" + std::to_string(g) + "_" + std::to_string(r); }
};

inline const std::vector<SurfaceId>& supported_surfaces() {
    static const std::vector<SurfaceId> s{{1, 1}, {0, 4}, {0, 5}, {1, 2}, {0, 6}, {0, 7}, {0, 8}};
    return s;
}

inline bool is_supported(SurfaceId s) {
    for (auto t : supported_surfaces())
        if (t == s) return true;
    return false;
}

// A polygon segment: a side of the fundamental polygon or a diagonal, oriented u -> v.
struct Segment {
    int edge = -1;
    int u = 0, v = 0;
    int side = -1;  // polygon side index, -1 for diagonals
};

// corner[] counter-clockwise; seg[i] joins corner[i] -> corner[i+1]
struct Triangle {
    std::array<int, 3> corner{};
    std::array<int, 3> seg{};
};

// Ideal triangulation obtained from a one-vertex ribbon spine: the 2k-gon whose sides are the
// half-edges of the spine in cyclic order, cut into monogons around the interior punctures and a fan.
struct IdealTriangulation {
    static constexpr int format_version = 1;
    SurfaceId surface;
    int rank = 0;
    std::vector<Letter> side_letter;    // letter read when leaving the polygon through side j
    std::vector<int> vertex_puncture;   // polygon vertex -> puncture label (1-based)
    std::vector<Segment> segments;      // sides first (index = side), then diagonals
    std::vector<Triangle> triangles;
    int edge_count = 0;
    std::vector<int> primary_segment;   // per edge: the segment whose orientation defines point order
    std::vector<Word> peripheral;       // per puncture (index label-1): boundary word

    int polygon_size() const { return static_cast<int>(side_letter.size()); }

    int side_of_letter(Letter l) const {
        for (int j = 0; j < polygon_size(); ++j)
            if (side_letter[j] == l) return j;
        return -1;
    }

    int partner_side(int j) const { return side_of_letter(-side_letter[j]); }

    bool is_generator_edge(int e) const { return e < rank; }
};

namespace detail {

inline std::vector<Letter> ribbon_order(SurfaceId s) {
    std::vector<Letter> order;
    if (s.g == 0) {
        for (int i = 1; i <= s.r - 1; ++i) {
            order.push_back(i);
            order.push_back(-i);
        }
    } else {
        order = {1, 2, -1, -2};
        for (int i = 1; i <= s.r - 1; ++i) {
            order.push_back(i + 2);
            order.push_back(-(i + 2));
        }
    }
    return order;
}

}  // namespace detail

inline IdealTriangulation build_triangulation(SurfaceId s) {
    if (!is_supported(s)) throw Unsupported("surface " + s.str());
    IdealTriangulation t;
    t.surface = s;
    t.rank = s.rank();
    t.side_letter = detail::ribbon_order(s);
    const int m = t.polygon_size();

    // sides
    for (int j = 0; j < m; ++j) t.segments.push_back({gen_of(t.side_letter[j]), j, (j + 1) % m, j});
    t.edge_count = t.rank;
    t.primary_segment.assign(t.rank, -1);
    for (int j = 0; j < m; ++j)
        if (t.side_letter[j] > 0) t.primary_segment[gen_of(t.side_letter[j])] = j;

    auto add_diagonal = [&](int a, int b) {
        int e = t.edge_count++;
        t.segments.push_back({e, std::min(a, b), std::max(a, b), -1});
        t.primary_segment.push_back(static_cast<int>(t.segments.size()) - 1);
        return static_cast<int>(t.segments.size()) - 1;
    };
    auto find_segment = [&](int a, int b) {
        for (int i = 0; i < static_cast<int>(t.segments.size()); ++i) {
            const auto& sg = t.segments[i];
            if ((sg.u == a && sg.v == b) || (sg.u == b && sg.v == a)) return i;
        }
        return -1;
    };

    t.vertex_puncture.assign(m, s.r);
    std::vector<int> outer;  // vertices of the inner polygon after cutting monogons
    std::vector<int> outer_seg;
    int first_monogon_gen = s.g == 0 ? 0 : 2;
    for (int j = 0; j < m;) {
        int gen = gen_of(t.side_letter[j]);
        bool monogon = gen >= first_monogon_gen && t.side_letter[j] > 0 && j + 1 < m &&
                       t.side_letter[j + 1] == -t.side_letter[j];
        if (monogon) {
            int apex = j + 1;
            t.vertex_puncture[apex] = gen - first_monogon_gen + 1;
            int d = add_diagonal(j, (j + 2) % m);
            t.triangles.push_back({{j, j + 1, (j + 2) % m}, {j, j + 1, d}});
            outer.push_back(j);
            outer_seg.push_back(d);
            j += 2;
        } else {
            outer.push_back(j);
            outer_seg.push_back(j);
            j += 1;
        }
    }
    // fan from outer[0]
    const int q = static_cast<int>(outer.size());
    for (int i = 1; i + 1 < q; ++i) {
        int a = outer[0], b = outer[i], c = outer[i + 1];
        int s_ab = i == 1 ? outer_seg[0] : find_segment(a, b);
        int s_bc = outer_seg[i];
        int s_ca = i + 2 == q ? outer_seg[q - 1] : add_diagonal(a, c);
        t.triangles.push_back({{a, b, c}, {s_ab, s_bc, s_ca}});
    }

    // boundary words from the faces of the ribbon graph
    t.peripheral.assign(s.r, {});
    for (int j = 0; j < m; ++j)
        if (t.vertex_puncture[j] != s.r) t.peripheral[t.vertex_puncture[j] - 1] = {t.side_letter[j]};
    {
        Word big;
        if (s.g == 1) big = {1, -2, -1, 2};
        for (int i = 1; i <= s.r - 1; ++i) big.push_back(first_monogon_gen + i);
        t.peripheral[s.r - 1] = big;
    }
    for (auto& w : t.peripheral) w = canonical_cyclic(w);
    return t;
}

inline const IdealTriangulation& standard_triangulation(SurfaceId s) {
    static std::map<SurfaceId, IdealTriangulation> cache;
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, build_triangulation(s)).first;
    return it->second;
}

}  // namespace pgraph
