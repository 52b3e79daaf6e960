#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "loops.hpp"
#include "mapping_class.hpp"
#include "pants.hpp"
#include "universe.hpp"

namespace pgraph {

// ---- marked Farey charts

struct MarkedFareyChart {
    PantsDecomposition fixed;
    std::vector<int> vertices;  // ball vertices containing the fixed curves
    int marked = -1;
    CurveId label = -1;  // the moving curve at the marked vertex
};

inline bool contains_all(const PantsDecomposition& p, const PantsDecomposition& fixed) {
    return std::includes(p.begin(), p.end(), fixed.begin(), fixed.end());
}

inline MarkedFareyChart farey_chart(const PantsGraphBall& b, int P, CurveId a) {
    if (P < 0 || P >= b.size()) throw NotAPath("vertex " + std::to_string(P));
    const auto& p = b.vertices[P];
    if (std::find(p.begin(), p.end(), a) == p.end()) throw CurveNotInDecomposition("curve " + std::to_string(a));
    MarkedFareyChart c;
    c.fixed = without(p, a);
    c.marked = P;
    c.label = a;
    for (int v = 0; v < b.size(); ++v)
        if (contains_all(b.vertices[v], c.fixed)) c.vertices.push_back(v);
    return c;
}

// Chart vertex sets of a ball, keyed by the fixed curves.
inline std::map<PantsDecomposition, std::vector<int>> chart_index(const PantsGraphBall& b) {
    std::map<PantsDecomposition, std::vector<int>> out;
    for (int v = 0; v < b.size(); ++v)
        for (CurveId a : b.vertices[v]) out[without(b.vertices[v], a)].push_back(v);
    return out;
}

// The moving curve read off the graph: the curve of the marked vertex not shared by the whole set.
inline std::optional<CurveId> chart_label(const PantsGraphBall& b, const std::vector<int>& vertices, int marked) {
    if (vertices.size() < 2) return std::nullopt;
    std::vector<PantsDecomposition> ps;
    for (int v : vertices) ps.push_back(b.vertices[v]);
    auto common = common_curves(ps);
    if (static_cast<int>(common.size()) != static_cast<int>(b.vertices[marked].size()) - 1) return std::nullopt;
    for (CurveId x : b.vertices[marked])
        if (!std::binary_search(common.begin(), common.end(), x)) return x;
    return std::nullopt;
}

struct ChartIntersection {
    std::vector<int> common;
    bool singleton = false;
    bool expected_singleton = false;  // the fixed curves together form a decomposition in the ball
    bool shared_marked = false;
    bool labels_disjoint = false;
    bool ok = false;
};

inline ChartIntersection chart_intersection_properties(const Universe& u, const PantsGraphBall& b,
                                                       const MarkedFareyChart& v, const MarkedFareyChart& w) {
    ChartIntersection r;
    std::set_intersection(v.vertices.begin(), v.vertices.end(), w.vertices.begin(), w.vertices.end(),
                          std::back_inserter(r.common));
    r.singleton = r.common.size() == 1;
    std::vector<CurveId> all = v.fixed;
    all.insert(all.end(), w.fixed.begin(), w.fixed.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    r.expected_singleton = v.fixed != w.fixed && static_cast<int>(all.size()) == u.n() && b.find(all).has_value();
    r.shared_marked = v.marked == w.marked;
    r.labels_disjoint = v.label != w.label && u.disjoint(v.label, w.label);
    if (v.fixed == w.fixed) {
        r.ok = r.common == v.vertices;
        return r;
    }
    r.ok =r.singleton == r.expected_singleton && (!r.shared_marked || v.label == w.label || r.labels_disjoint);
    if (r.shared_marked && v.label != w.label) r.ok = r.ok && r.singleton && r.common[0] == v.marked;
    return r;
}

// ---- well-definedness loops

enum class LoopCase { DisjointSubsurfaces = 1, FiveHoledSphere = 2, TwiceHoledTorus = 3 };

inline const char* to_string(LoopCase c) {
    switch (c) {
        case LoopCase::DisjointSubsurfaces: return "disjoint subsurfaces";
        case LoopCase::FiveHoledSphere: return "five-holed sphere";
        case LoopCase::TwiceHoledTorus: return "twice-holed torus";
    }
    return "?";
}

inline LoopTag predicted_tag(LoopCase c) {
    switch (c) {
        case LoopCase::DisjointSubsurfaces: return LoopTag::AlternatingSquare;
        case LoopCase::FiveHoledSphere: return LoopTag::AlternatingPentagon;
        case LoopCase::TwiceHoledTorus: return LoopTag::AlmostAlternatingHexagon;
    }
    return LoopTag::Unclassified;
}

struct MoveInstance {
    CurveId a1 = -1, a2 = -1, a2p = -1;
    LoopCase kind = LoopCase::DisjointSubsurfaces;
    bool illegal = false;
};

inline MoveInstance classify_move(const Universe& u, const PantsGraphBall& b, int X, int Xp, CurveId a1) {
    auto [a2, a2p] = b.move_label(X, Xp);
    if (a1 == a2 || std::find(b.vertices[X].begin(), b.vertices[X].end(), a1) == b.vertices[X].end())
        throw CurveNotInDecomposition("curve " + std::to_string(a1) + " is not fixed by the move");
    MoveInstance m{a1, a2, a2p};
    auto adj = pants_adjacency(u, b.vertices[X]);
    if (adj.lie_on_disjoint_subsurfaces(a1, a2)) {
        m.kind = LoopCase::DisjointSubsurfaces;
        return m;
    }
    SurfaceId sup = two_curve_support(u, b.vertices[X], a1, a2);
    if (sup == SurfaceId{0, 5}) {
        m.kind = LoopCase::FiveHoledSphere;
    } else if (sup == SurfaceId{1, 2}) {
        if (u.surface() != SurfaceId{1, 2}) throw Unsupported("twice-holed torus charts inside " + u.surface().str());
        m.kind = LoopCase::TwiceHoledTorus;
        m.illegal = !u.separation(a1).separating && !u.separation(a2).separating && !u.separation(a2p).separating;
    } else {
        throw Unsupported("support " + sup.str());
    }
    return m;
}

struct WellDefinednessLoop {
    MoveInstance instance;
    LoopInBall loop;  // W X X' Y ...
    LoopTag tag = LoopTag::Unclassified;
    bool wxxy_alternating = false;
};

// A loop W X X' Y ... of the predicted type in which W X and X' Y are moves of a1.
inline WellDefinednessLoop find_welldefinedness_loop(const Universe& u, const PantsGraphBall& b, int X, int Xp,
                                                     CurveId a1) {
    WellDefinednessLoop r;
    r.instance = classify_move(u, b, X, Xp, a1);
    if (r.instance.illegal) throw IllegalMove("a1, a2 and a2' are all nonseparating");
    const LoopTag want = predicted_tag(r.instance.kind);
    const int len = want == LoopTag::AlternatingSquare ? 4 : want == LoopTag::AlternatingPentagon ? 5 : 6;
    auto moves_of_a1 = [&](int v) {
        std::vector<int> out;
        for (auto [nb, e] : b.adj[v]) {
            (void)e;
            if (b.move_label(v, nb).first == a1) out.push_back(nb);
        }
        return out;
    };
    std::vector<int> path;
    std::function<bool(int)> close = [&](int cur) -> bool {
        const int W = path[0];
        if (static_cast<int>(path.size()) == len - 1) {
            if (!b.adjacent(cur, W)) return false;
            path.push_back(cur);
            LoopInBall l{path};
            path.pop_back();
            if (classify_small_loop(b, u, l).tag != want) return false;
            r.loop = l;
            return true;
        }
        for (auto [nb, e] : b.adj[cur]) {
            (void)e;
            if (std::find(path.begin(), path.end(), nb) != path.end() || nb == cur) continue;
            path.push_back(cur);
            bool ok = close(nb);
            path.pop_back();
            if (ok) return true;
        }
        return false;
    };
    for (int W : moves_of_a1(X)) {
        for (int Y : moves_of_a1(Xp)) {
            if (W == Y) continue;
            path = {W, X, Xp};
            if (close(Y)) {
                r.tag = want;
                r.wxxy_alternating = is_alternating(b, {r.loop.vertices[0], X, Xp, r.loop.vertices[3]}, false);
                return r;
            }
        }
    }
    throw NotCertified("no " + std::string(to_string(want)) + " through the move inside the ball");
}

struct Circumvention {
    CurveId a1 = -1, a2 = -1, a2p = -1;
    std::vector<CurveId> choices;  // separating a2'' with a2 -> a2'' -> a2' legal
    std::vector<PantsDecomposition> via;
};

inline Circumvention circumvent_illegal_move(const Universe& u, const PantsDecomposition& P,
                                             const PantsDecomposition& Pp) {
    if (u.surface() != SurfaceId{1, 2}) throw NotIllegal("illegal moves live on a twice-holed torus");
    auto fixed = common_curves({P, Pp});
    if (static_cast<int>(fixed.size()) != u.n() - 1) throw NotAPath("decompositions are not one move apart");
    Circumvention c;
    c.a1 = fixed[0];
    c.a2 = without(P, c.a1)[0];
    c.a2p = without(Pp, c.a1)[0];
    if (!is_move(u, fixed, c.a2, c.a2p)) throw NotAPath("decompositions are not one move apart");
    for (CurveId x : {c.a1, c.a2, c.a2p})
        if (u.separation(x).separating) throw NotIllegal("curve " + u.key(x) + " is separating");
    for (CurveId x : chart_curves(u, P, c.a2)) {
        if (x == c.a2p || !u.separation(x).separating) continue;
        if (is_move(u, fixed, c.a2, x) && is_move(u, fixed, x, c.a2p)) {
            c.choices.push_back(x);
            c.via.push_back(replace_curve(P, c.a2, x));
        }
    }
    if (c.choices.empty()) throw NotCertified("no separating intermediate curve inside the universe");
    return c;
}

// ---- mapping classes acting on the universe and the ball

// Images of universe curves under mapping class words, -1 outside the universe.
class CurveAction {
public:
    explicit CurveAction(const Universe& u) : u_(u) {}

    const std::vector<CurveId>& token(const MCToken& t) {
        auto it = cache_.find(t);
        if (it != cache_.end()) return it->second;
        std::vector<CurveId> img(u_.size(), -1);
        for (CurveId c = 0; c < u_.size(); ++c)
            if (auto d = u_.find_word(apply_to_word(u_.surface(), {t}, u_.word(c)))) img[c] = *d;
        return cache_.emplace(t, std::move(img)).first->second;
    }

    std::vector<CurveId> word(const MappingClassWord& w) {
        std::vector<CurveId> img(u_.size());
        for (CurveId c = 0; c < u_.size(); ++c) img[c] = c;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const auto& t = token(*it);
            for (auto& x : img)
                if (x >= 0) x = t[x];
        }
        return img;
    }

private:
    const Universe& u_;
    std::map<MCToken, std::vector<CurveId>> cache_;
};

struct InducedAutomorphism {
    MappingClassWord word;
    std::vector<CurveId> curve_map;
    std::vector<int> vertex_map;  // -1 where the image leaves the ball
    int partial = 0;
};

inline InducedAutomorphism induced_automorphism(const PantsGraphBall& b, const MappingClassWord& w,
                                                std::vector<CurveId> curve_map) {
    InducedAutomorphism A;
    A.word = w;
    A.curve_map = std::move(curve_map);
    A.vertex_map.assign(b.size(), -1);
    for (int v = 0; v < b.size(); ++v) {
        PantsDecomposition img;
        bool ok = true;
        for (CurveId c : b.vertices[v]) {
            if (A.curve_map[c] < 0) ok = false;
            img.push_back(A.curve_map[c]);
        }
        if (ok)
            if (auto t = b.find(canonical_pants(img))) A.vertex_map[v] = *t;
        if (A.vertex_map[v] < 0) ++A.partial;
    }
    return A;
}

inline InducedAutomorphism induced_automorphism(const Universe& u, const PantsGraphBall& b,
                                                const MappingClassWord& w) {
    for (const auto& t : w)
        if (!token_valid(u.surface(), t)) throw UnknownGenerator(t.str());
    CurveAction act(u);
    return induced_automorphism(b, w, act.word(w));
}

// Curve labels of phi(A): the moving curve of A(F) at A(P), from the first certified chart of each
// curve.  -1 where the image chart leaves the ball.
inline std::map<CurveId, CurveId> phi_labels(const PantsGraphBall& b,
                                             const std::map<PantsDecomposition, std::vector<int>>& charts,
                                             const InducedAutomorphism& A) {
    std::map<CurveId, CurveId> out;
    for (int v = 0; v < b.size(); ++v) {
        if (!b.certified[v] || b.frontier[v]) continue;
        for (CurveId a : b.vertices[v]) {
            if (out.count(a)) continue;
            const auto& members = charts.at(without(b.vertices[v], a));
            std::vector<int> img;
            bool ok = A.vertex_map[v] >= 0;
            for (int x : members) {
                if (A.vertex_map[x] < 0) continue;
                img.push_back(A.vertex_map[x]);
            }
            std::optional<CurveId> l;
            if (ok) l = chart_label(b, img, A.vertex_map[v]);
            out[a] = l ? *l : -1;
        }
    }
    return out;
}

struct CheckResult {
    long checked = 0;
    long skipped = 0;  // partial: images outside the ball
    std::vector<std::string> counterexamples;
    bool ok() const { return counterexamples.empty(); }
    void fail(std::string s) {
        if (counterexamples.size() < 20) counterexamples.push_back(std::move(s));
        else counterexamples.back() = "(further counterexamples omitted)";
    }
};

// Loops through each certified move, computed once per ball and reused for every automorphism.
// Illegal moves are replaced by the two legal moves through a separating middle curve.
struct TransportData {
    std::map<PantsDecomposition, std::vector<int>> charts;
    std::vector<int> rank;
    std::vector<WellDefinednessLoop> loops;
    std::vector<std::tuple<int, int, CurveId>> uncertified;
    int illegal = 0;
    std::map<LoopInBall, LoopTag> tags;
};

// Certified moves sit two steps inside the ball, so every loop through them is discovered.
inline bool move_certified(const PantsGraphBall& b, int X, int Xp) {
    return b.certified[X] && b.certified[Xp] && b.depth[X] + 2 <= b.radius && b.depth[Xp] + 2 <= b.radius;
}

inline bool move_interior(const PantsGraphBall& b, int X, int Xp) {
    return b.certified[X] && b.certified[Xp] && !b.frontier[X] && !b.frontier[Xp];
}

inline TransportData transport_data(const Universe& u, const PantsGraphBall& b) {
    TransportData d;
    d.charts = chart_index(b);
    d.rank = vertex_ranks(b);
    auto add = [&](int X, int Xp, CurveId a1) {
        try {
            d.loops.push_back(find_welldefinedness_loop(u, b, X, Xp, a1));
            d.loops.back().loop.vertices.shrink_to_fit();
        } catch (const NotCertified&) {
            d.uncertified.push_back({X, Xp, a1});
        }
    };
    for (const auto& e : b.edges) {
        if (!move_interior(b, e.u, e.v)) continue;
        for (CurveId a1 : without(b.vertices[e.u], e.removed)) {
            if (!classify_move(u, b, e.u, e.v, a1).illegal) {
                add(e.u, e.v, a1);
                continue;
            }
            ++d.illegal;
            auto c = circumvent_illegal_move(u, b.vertices[e.u], b.vertices[e.v]);
            auto mid = b.find(c.via[0]);
            if (!mid) {
                d.uncertified.push_back({e.u, e.v, a1});
                continue;
            }
            add(e.u, *mid, a1);
            add(*mid, e.v, a1);
        }
    }
    return d;
}

struct PhiReport {
    std::map<std::string, CheckResult> checks;
    bool ok() const {
        for (const auto& [k, c] : checks)
            if (!c.ok()) return false;
        return true;
    }
};

inline LoopTag memo_tag(const Universe& u, const PantsGraphBall& b, TransportData& d, const LoopInBall& l) {
    auto it = d.tags.find(l);
    if (it != d.tags.end()) return it->second;
    LoopTag t = classify_small_loop(b, u, l).tag;
    d.tags.emplace(l, t);
    return t;
}

// Checks of an automorphism of the ball against the curve action it claims to induce.
inline PhiReport verify_phi(const Universe& u, const PantsGraphBall& b, const InducedAutomorphism& A, TransportData& d,
                            const std::vector<LoopInBall>& loops) {
    PhiReport rep;
    const std::string ws = word_str(A.word);
    const auto& M = A.vertex_map;
    auto in_region = [&](int v) { return v >= 0 && b.certified[v]; };

    auto& inj = rep.checks["bijective"];
    std::vector<int> pre(b.size(), -1);
    for (int v = 0; v < b.size(); ++v) {
        if (M[v] < 0) continue;
        ++inj.checked;
        if (pre[M[v]] >= 0) inj.fail(ws + ": vertices collide at " + pants_key(u, b.vertices[M[v]]));
        pre[M[v]] = v;
    }

    auto& edges = rep.checks["edges"];
    for (const auto& e : b.edges) {
        if (in_region(e.u) && in_region(e.v) && M[e.u] >= 0 && M[e.v] >= 0) {
            ++edges.checked;
            if (!b.adjacent(M[e.u], M[e.v])) {
                edges.fail(ws + ": edge " + pants_key(u, b.vertices[e.u]) + " - " + pants_key(u, b.vertices[e.v]) + " is lost");
            } else {
                auto [ri, ai] = b.move_label(M[e.u], M[e.v]);
                if (A.curve_map[e.removed] != ri || A.curve_map[e.added] != ai)
                    edges.fail(ws + ": move label of " + pants_key(u, b.vertices[e.u]) + " -> " + pants_key(u, b.vertices[e.v]));
            }
        }
        int pu = pre[e.u], pv = pre[e.v];
        if (pu >= 0 && pv >= 0 && in_region(pu) && in_region(pv)) {
            ++edges.checked;
            if (!b.adjacent(pu, pv))
                edges.fail(ws + ": edge " + pants_key(u, b.vertices[e.u]) + " - " + pants_key(u, b.vertices[e.v]) +
                           " has no preimage edge");
        }
    }

    auto& tags = rep.checks["cell tags"];
    for (const auto& l : loops) {
        std::vector<int> img;
        for (int v : l.vertices) img.push_back(M[v]);
        if (!std::all_of(img.begin(), img.end(), in_region)) {
            ++tags.skipped;
            continue;
        }
        ++tags.checked;
        bool closed = true;
        for (std::size_t i = 0; i < img.size(); ++i) closed = closed && b.adjacent(img[i], img[(i + 1) % img.size()]);
        if (!closed || memo_tag(u, b, d, l) != memo_tag(u, b, d, canonical_loop(img, d.rank)))
            tags.fail(ws + ": loop through " + pants_key(u, b.vertices[l.vertices[0]]) + " changes type");
    }

    // chart label of phi(A) at each certified vertex, read off the image chart
    auto& charts = rep.checks["charts"];
    std::map<std::pair<int, CurveId>, CurveId> label;
    for (int v = 0; v < b.size(); ++v) {
        if (!b.certified[v] || b.frontier[v] || M[v] < 0) continue;
        for (CurveId a : b.vertices[v]) {
            const auto& members = d.charts.at(without(b.vertices[v], a));
            std::vector<int> img;
            for (int x : members)
                if (M[x] >= 0) img.push_back(M[x]);
            auto l = chart_label(b, img, M[v]);
            if (!l) {
                ++charts.skipped;
                continue;
            }
            ++charts.checked;
            label[{v, a}] = *l;
            if (*l != A.curve_map[a])
                charts.fail(ws + ": chart of " + u.key(a) + " at " + pants_key(u, b.vertices[v]) + " maps to label " +
                            u.key(*l));
            PantsDecomposition fixed_img;
            for (CurveId c : without(b.vertices[v], a)) fixed_img.push_back(A.curve_map[c]);
            auto it = d.charts.find(canonical_pants(fixed_img));
            if (it == d.charts.end()) continue;
            std::sort(img.begin(), img.end());
            for (int x : it->second)
                if (pre[x] >= 0 && !std::binary_search(img.begin(), img.end(), x))
                    charts.fail(ws + ": image chart of " + u.key(a) + " at " + pants_key(u, b.vertices[v]) + " is not onto");
        }
    }

    // Transport across each certified move by its loop: the image of W X X' Y stays alternating and its
    // first and last steps move one curve.  Labels carried along a spanning tree of each curve's
    // chart-adjacency graph must match the labels read off the charts.
    auto& transport = rep.checks["transport"];
    std::map<CurveId, std::vector<std::tuple<int, int, CurveId>>> graph;  // curve -> (X, X', carried label)
    for (const auto& wl : d.loops) {
        const auto& lv = wl.loop.vertices;
        std::vector<int> img;
        for (int v : lv) img.push_back(M[v]);
        if (std::find(img.begin(), img.end(), -1) != img.end()) {
            ++transport.skipped;
            continue;
        }
        ++transport.checked;
        bool ok = b.adjacent(img[0], img[1]) && b.adjacent(img[1], img[2]) && b.adjacent(img[2], img[3]) &&
                  is_alternating(b, {img[0], img[1], img[2], img[3]}, false);
        CurveId beta = -1;
        if (ok) {
            beta = b.move_label(img[1], img[0]).first;
            ok = beta == b.move_label(img[2], img[3]).first;
        }
        if (!ok) {
            transport.fail(ws + ": loop image breaks at " + pants_key(u, b.vertices[lv[1]]) + " -> " +
                           pants_key(u, b.vertices[lv[2]]));
            continue;
        }
        graph[wl.instance.a1].push_back({lv[1], lv[2], beta});
    }
    auto& paths = rep.checks["path independence"];
    for (auto& [c, es] : graph) {
        std::map<int, std::vector<std::pair<int, CurveId>>> nb;
        for (auto [x, y, beta] : es) {
            nb[x].push_back({y, beta});
            nb[y].push_back({x, beta});
        }
        std::map<int, CurveId> carried;
        for (auto& [root, unused] : nb) {
            (void)unused;
            if (carried.count(root)) continue;
            auto it = label.find({root, c});
            if (it == label.end()) continue;
            carried[root] = it->second;
            std::queue<int> q;
            q.push(root);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (auto [y, beta] : nb[x]) {
                    ++paths.checked;
                    if (beta != carried[x]) {
                        paths.fail(ws + ": label of " + u.key(c) + " changes across " + pants_key(u, b.vertices[x]) +
                                   " - " + pants_key(u, b.vertices[y]));
                        continue;
                    }
                    if (!carried.count(y)) {
                        carried[y] = beta;
                        q.push(y);
                    }
                    auto ly = label.find({y, c});
                    if (ly != label.end() && ly->second != carried[y])
                        paths.fail(ws + ": carried label of " + u.key(c) + " disagrees at " + pants_key(u, b.vertices[y]));
                }
            }
        }
    }

    // Each certified vertex is the only common point of its n charts, and so is its image.
    auto& unique = rep.checks["unique intersection"];
    auto only_point = [&](int p) {
        std::vector<int> cur;
        bool first = true;
        for (CurveId a : b.vertices[p]) {
            const auto& members = d.charts.at(without(b.vertices[p], a));
            if (first) {
                cur = members;
                first = false;
                continue;
            }
            std::vector<int> next;
            std::set_intersection(cur.begin(), cur.end(), members.begin(), members.end(), std::back_inserter(next));
            cur = std::move(next);
        }
        return cur == std::vector<int>{p};
    };
    for (int v = 0; v < b.size(); ++v) {
        if (!b.certified[v] || M[v] < 0) continue;
        ++unique.checked;
        if (!only_point(v) || !only_point(M[v])) unique.fail(ws + ": charts of " + pants_key(u, b.vertices[v]) + " meet elsewhere");
    }
    return rep;
}

// phi(uv) = phi(u) phi(v) on chart labels, where all three are defined.
inline CheckResult verify_composition(const PantsGraphBall& b, const std::map<PantsDecomposition, std::vector<int>>& charts,
                                      const InducedAutomorphism& Au, const InducedAutomorphism& Av,
                                      const InducedAutomorphism& Auv) {
    CheckResult r;
    auto lu = phi_labels(b, charts, Au), lv = phi_labels(b, charts, Av), luv = phi_labels(b, charts, Auv);
    for (auto [c, img] : luv) {
        auto v = lv.find(c);
        if (img < 0 || v == lv.end() || v->second < 0) {
            ++r.skipped;
            continue;
        }
        auto w = lu.find(v->second);
        if (w == lu.end() || w->second < 0) {
            ++r.skipped;
            continue;
        }
        ++r.checked;
        if (w->second != img)
            r.fail(word_str(Auv.word) + ": curve " + std::to_string(c) + " goes to " + std::to_string(img) + " but " +
                   word_str(Au.word) + " after " + word_str(Av.word) + " gives " + std::to_string(w->second));
    }
    return r;
}

}  // namespace pgraph
