#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "errors.hpp"
#include "farey.hpp"
#include "universe.hpp"

namespace pgraph {

using PantsDecomposition = std::vector<CurveId>;  // sorted

inline PantsDecomposition canonical_pants(std::vector<CurveId> c) {
    std::sort(c.begin(), c.end());
    return c;
}

inline std::string pants_key(const Universe& u, const PantsDecomposition& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " | " : "") + u.key(p[i]);
    return s + "}";
}

inline bool is_pants_decomposition(const Universe& u, const std::vector<CurveId>& curves) {
    for (CurveId c : curves) u.curve(c);
    if (static_cast<int>(curves.size()) != u.n()) return false;
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (curves[i] == curves[j] || !u.disjoint(curves[i], curves[j])) return false;
    return true;
}

inline PantsDecomposition without(const PantsDecomposition& p, CurveId a) {
    PantsDecomposition out;
    for (CurveId c : p)
        if (c != a) out.push_back(c);
    return out;
}

inline PantsDecomposition replace_curve(const PantsDecomposition& p, CurveId a, CurveId b) {
    PantsDecomposition out = without(p, a);
    out.push_back(b);
    return canonical_pants(out);
}

// Pants of the complement and the curves bounding each of them.
struct PantsAdjacency {
    PantsDecomposition curves;
    int pants_count = 0;
    std::vector<std::pair<int, int>> curve_pants;  // per position in curves
    std::vector<std::set<int>> pants_punctures;
    std::vector<int> degree;  // boundary slots per pants, punctures included

    int position(CurveId a) const {
        auto it = std::find(curves.begin(), curves.end(), a);
        if (it == curves.end()) throw CurveNotInDecomposition("curve " + std::to_string(a));
        return static_cast<int>(it - curves.begin());
    }

    bool lie_on_disjoint_subsurfaces(CurveId a, CurveId b) const {
        auto pa = curve_pants[position(a)], pb = curve_pants[position(b)];
        return pa.first != pb.first && pa.first != pb.second && pa.second != pb.first && pa.second != pb.second;
    }

    ChartKind classify_complement(CurveId a) const {
        auto pa = curve_pants[position(a)];
        return pa.first == pa.second ? ChartKind::OneHoledTorus : ChartKind::FourHoledSphere;
    }
};

inline PantsAdjacency pants_adjacency(const Universe& u, const PantsDecomposition& p) {
    if (!is_pants_decomposition(u, p)) throw NotAPantsDecomposition(pants_key(u, p));
    const auto& t = u.triangulation();
    std::vector<int> sum(t.edge_count, 0);
    for (CurveId c : p)
        for (int e = 0; e < t.edge_count; ++e) sum[e] += u.curve(c).weights[e];
    Arrangement arr(t, sum);
    auto comp = arr.complement();
    PantsAdjacency out;
    out.curves = p;
    out.pants_count = comp.regions;
    out.pants_punctures = comp.punctures;
    out.curve_pants.assign(p.size(), {-1, -1});
    for (int k = 0; k < arr.component_count(); ++k) {
        auto w = arr.component_weights(k);
        for (std::size_t i = 0; i < p.size(); ++i)
            if (u.curve(p[i]).weights == w) out.curve_pants[i] = comp.sides[k];
    }
    out.degree.assign(out.pants_count, 0);
    for (int q = 0; q < out.pants_count; ++q) out.degree[q] = static_cast<int>(out.pants_punctures[q].size());
    for (auto [x, y] : out.curve_pants) {
        ++out.degree[x];
        ++out.degree[y];
    }
    return out;
}

struct Move {
    CurveId added = -1;
    PantsDecomposition target;
};

struct MoveSet {
    CurveId removed = -1;
    int minimum = 0;  // achieved minimal intersection, 0 when there is no candidate
    ChartKind kind = ChartKind::FourHoledSphere;  // from the pants adjacency
    bool kind_agrees = true;
    std::vector<Move> moves;
};

inline int chart_minimum(ChartKind k) { return k == ChartKind::OneHoledTorus ? 1 : 2; }

// Curves of the chart of a in p: everything disjoint from the other curves, a excluded.
inline std::vector<CurveId> chart_curves(const Universe& u, const PantsDecomposition& p, CurveId a) {
    auto out = u.disjoint_from_all(without(p, a));
    std::erase(out, a);
    return out;
}

inline MoveSet elementary_moves(const Universe& u, const PantsDecomposition& p, CurveId a) {
    if (std::find(p.begin(), p.end(), a) == p.end()) throw CurveNotInDecomposition("curve " + std::to_string(a));
    MoveSet ms;
    ms.removed = a;
    ms.kind = pants_adjacency(u, p).classify_complement(a);
    std::vector<std::pair<int, CurveId>> cand;
    for (CurveId c : chart_curves(u, p, a)) {
        int i = u.intersection(a, c);
        if (i > 0) cand.push_back({i, c});
    }
    bool any1 = std::any_of(cand.begin(), cand.end(), [](auto& x) { return x.first == 1; });
    bool any2 = std::any_of(cand.begin(), cand.end(), [](auto& x) { return x.first == 2; });
    ms.minimum = any1 ? 1 : (any2 ? 2 : 0);
    if (ms.minimum) ms.kind_agrees = ms.minimum == chart_minimum(ms.kind);
    for (auto [i, c] : cand)
        if (i == ms.minimum) ms.moves.push_back({c, replace_curve(p, a, c)});
    return ms;
}

struct BallEdge {
    int u = -1, v = -1;
    CurveId removed = -1;  // in u, not in v
    CurveId added = -1;    // in v, not in u
};

struct PantsGraphBall {
    SurfaceId surface;
    int weight_bound = 0;
    int radius = 0;
    std::vector<PantsDecomposition> vertices;
    std::vector<int> depth;
    std::vector<char> frontier;
    std::vector<char> certified;  // every chart of the vertex lies inside the universe
    std::vector<BallEdge> edges;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, edge)
    std::vector<std::string> chart_mismatches;
    std::map<PantsDecomposition, int> index;

    int size() const { return static_cast<int>(vertices.size()); }

    std::optional<int> find(const PantsDecomposition& p) const {
        auto it = index.find(p);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    std::optional<int> edge_between(int a, int b) const {
        for (auto [nb, e] : adj[a])
            if (nb == b) return e;
        return std::nullopt;
    }

    bool adjacent(int a, int b) const { return edge_between(a, b).has_value(); }

    // (removed, added) for the step a -> b
    std::pair<CurveId, CurveId> move_label(int a, int b) const {
        auto e = edge_between(a, b);
        if (!e) throw NotAPath("vertices " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
        const auto& ed = edges[*e];
        return ed.u == a ? std::make_pair(ed.removed, ed.added) : std::make_pair(ed.added, ed.removed);
    }

    // Both ends certified and the neighbourhood of one end fully discovered.
    bool edge_certified(int e) const {
        const auto& ed = edges[e];
        return certified[ed.u] && certified[ed.v] && (!frontier[ed.u] || !frontier[ed.v]);
    }
};

inline bool vertex_certifiable(const Universe& u, const PantsDecomposition& p) {
    for (CurveId c : p)
        if (2 * u.curve(c).max_weight() > u.weight_bound()) return false;
    return true;
}

inline PantsGraphBall build_ball(const Universe& u, const PantsDecomposition& seed_in, int radius) {
    PantsDecomposition seed = canonical_pants(seed_in);
    if (!is_pants_decomposition(u, seed)) throw NotAPantsDecomposition(pants_key(u, seed));
    PantsGraphBall b;
    b.surface = u.surface();
    b.weight_bound = u.weight_bound();
    b.radius = radius;
    auto add_vertex = [&](const PantsDecomposition& p, int d) {
        auto [it, fresh] = b.index.emplace(p, b.size());
        if (fresh) {
            b.vertices.push_back(p);
            b.depth.push_back(d);
        }
        return it->second;
    };
    add_vertex(seed, 0);
    std::map<PantsDecomposition, int> chart_min;  // keyed by the fixed curves
    for (std::size_t head = 0; head < b.vertices.size(); ++head) {
        if (b.depth[head] >= radius) continue;
        PantsDecomposition p = b.vertices[head];
        for (CurveId a : p) {
            PantsDecomposition fixed = without(p, a);
            MoveSet ms = elementary_moves(u, p, a);
            if (!ms.kind_agrees)
                b.chart_mismatches.push_back(pants_key(u, p) + " curve " + u.key(a) + ": minimum " +
                                             std::to_string(ms.minimum) + " vs " + to_string(ms.kind));
            if (ms.minimum) chart_min.emplace(fixed, ms.minimum);
            for (const auto& mv : ms.moves) add_vertex(mv.target, b.depth[head] + 1);
        }
    }
    const int V = b.size();
    b.frontier.assign(V, 0);
    b.certified.assign(V, 0);
    for (int v = 0; v < V; ++v) {
        b.frontier[v] = b.depth[v] == radius;
        b.certified[v] = vertex_certifiable(u, b.vertices[v]);
    }
    // edges among all discovered vertices, chart by chart
    std::map<PantsDecomposition, std::vector<std::pair<int, CurveId>>> buckets;
    for (int v = 0; v < V; ++v)
        for (CurveId a : b.vertices[v]) buckets[without(b.vertices[v], a)].push_back({v, a});
    b.adj.assign(V, {});
    for (auto& [fixed, members] : buckets) {
        if (members.size() < 2) continue;
        int m;
        if (auto it = chart_min.find(fixed); it != chart_min.end()) {
            m = it->second;
        } else {
            const auto& [v0, a0] = members.front();
            m = chart_minimum(pants_adjacency(u, b.vertices[v0]).classify_complement(a0));
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                auto [v, x] = members[i];
                auto [w, y] = members[j];
                if (u.intersection(x, y) != m) continue;
                int id = static_cast<int>(b.edges.size());
                int lo = std::min(v, w), hi = std::max(v, w);
                b.edges.push_back({lo, hi, lo == v ? x : y, lo == v ? y : x});
                b.adj[lo].push_back({hi, id});
                b.adj[hi].push_back({lo, id});
            }
        }
    }
    std::sort(b.edges.begin(), b.edges.end(), [](const BallEdge& x, const BallEdge& y) {
        return std::tie(x.u, x.v) < std::tie(y.u, y.v);
    });
    for (auto& a : b.adj) a.clear();
    for (int e = 0; e < static_cast<int>(b.edges.size()); ++e) {
        b.adj[b.edges[e].u].push_back({b.edges[e].v, e});
        b.adj[b.edges[e].v].push_back({b.edges[e].u, e});
    }
    for (auto& a : b.adj) std::sort(a.begin(), a.end());
    return b;
}

// Chain decompositions used as seeds, written as words.
inline std::vector<Word> seed_words(SurfaceId s) {
    if (!is_supported(s)) throw Unsupported("surface " + s.str());
    if (s == SurfaceId{1, 1}) return {{2}};
    if (s == SurfaceId{1, 2}) return {{2}, {2, 3}};
    if (s == SurfaceId{0, 5}) return {{1, 2}, {3, 4}};
    std::vector<Word> out;
    for (int len = 2; len <= s.r - 2; ++len) {
        Word w;
        for (int i = 1; i <= len; ++i) w.push_back(i);
        out.push_back(w);
    }
    return out;
}

inline PantsDecomposition standard_seed(const Universe& u) {
    PantsDecomposition p;
    for (const auto& w : seed_words(u.surface())) p.push_back(u.id_of_word(w));
    return canonical_pants(p);
}

}  // namespace pgraph
