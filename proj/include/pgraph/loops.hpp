#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "pants.hpp"
#include "universe.hpp"

namespace pgraph {

inline PantsDecomposition common_curves(const std::vector<PantsDecomposition>& ps) {
    if (ps.empty()) return {};
    PantsDecomposition cur = ps[0];
    for (std::size_t i = 1; i < ps.size(); ++i) {
        PantsDecomposition next;
        std::set_intersection(cur.begin(), cur.end(), ps[i].begin(), ps[i].end(), std::back_inserter(next));
        cur = std::move(next);
    }
    return cur;
}

inline void check_path(const PantsGraphBall& b, const std::vector<int>& path, bool cyclic) {
    for (int v : path)
        if (v < 0 || v >= b.size()) throw NotAPath("vertex " + std::to_string(v));
    const std::size_t k = path.size();
    for (std::size_t i = 0; i + 1 < k + (cyclic ? 1 : 0); ++i)
        if (!b.adjacent(path[i], path[(i + 1) % k]))
            throw NotAPath("no edge " + std::to_string(path[i]) + " - " + std::to_string(path[(i + 1) % k]));
}

inline bool triple_alternates(const PantsGraphBall& b, int x, int y, int z) {
    auto c = common_curves({b.vertices[x], b.vertices[y], b.vertices[z]});
    return static_cast<int>(c.size()) < static_cast<int>(b.vertices[x].size()) - 1;
}

// Every three consecutive vertices share fewer than n-1 curves.
inline bool is_alternating(const PantsGraphBall& b, const std::vector<int>& path, bool cyclic = false) {
    check_path(b, path, cyclic);
    const std::size_t k = path.size();
    if (k < 3) throw NotAPath("alternation needs three vertices");
    std::size_t triples = cyclic ? k : k - 2;
    for (std::size_t i = 0; i < triples; ++i)
        if (!triple_alternates(b, path[i], path[(i + 1) % k], path[(i + 2) % k])) return false;
    return true;
}

// Farey-subgraph form of the same test: the two steps stay inside one chart.
inline bool is_alternating_geometric(const PantsGraphBall& b, const std::vector<int>& path) {
    check_path(b, path, false);
    for (std::size_t i = 0; i + 2 < path.size(); ++i) {
        auto [r1, a1] = b.move_label(path[i], path[i + 1]);
        auto [r2, a2] = b.move_label(path[i + 1], path[i + 2]);
        (void)r1;
        (void)a2;
        if (r2 == a1) return false;
    }
    return true;
}

struct LoopInBall {
    std::vector<int> vertices;
    auto operator<=>(const LoopInBall&) const = default;
};

enum class LoopTag {
    Triangle,
    AlternatingSquare,
    AlternatingPentagon,
    AlmostAlternatingHexagon,
    TwoCurveSmallLoop,
    ThreeCurveSmallLoop,
    NotTrueLoop,
    Unclassified
};

inline const char* to_string(LoopTag t) {
    switch (t) {
        case LoopTag::Triangle: return "Triangle";
        case LoopTag::AlternatingSquare: return "AlternatingSquare";
        case LoopTag::AlternatingPentagon: return "AlternatingPentagon";
        case LoopTag::AlmostAlternatingHexagon: return "AlmostAlternatingHexagon";
        case LoopTag::TwoCurveSmallLoop: return "TwoCurveSmallLoop";
        case LoopTag::ThreeCurveSmallLoop: return "ThreeCurveSmallLoop";
        case LoopTag::NotTrueLoop: return "NotTrueLoop";
        case LoopTag::Unclassified: return "Unclassified";
    }
    return "?";
}

struct LoopClassification {
    LoopTag tag = LoopTag::Unclassified;
    std::optional<ChartKind> chart;           // triangles
    std::optional<std::pair<int, int>> chord;  // NotTrueLoop witness
    int common = 0;                            // curves shared by every vertex
};

enum class VertexFilter { NonFrontier, Certified, All };

inline bool vertex_allowed(const PantsGraphBall& b, int v, VertexFilter f) {
    switch (f) {
        case VertexFilter::NonFrontier: return !b.frontier[v];
        case VertexFilter::Certified: return b.certified[v];
        case VertexFilter::All: return true;
    }
    return false;
}

// Ranks of the vertices in the order of their curve sets.
inline std::vector<int> vertex_ranks(const PantsGraphBall& b) {
    std::vector<int> order(b.size());
    for (int i = 0; i < b.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return b.vertices[x] < b.vertices[y]; });
    std::vector<int> rank(b.size());
    for (int i = 0; i < b.size(); ++i) rank[order[i]] = i;
    return rank;
}

inline LoopInBall canonical_loop(const std::vector<int>& cyc, const std::vector<int>& rank) {
    const std::size_t k = cyc.size();
    std::vector<int> best;
    std::vector<int> best_r;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t s = 0; s < k; ++s) {
            std::vector<int> c(k), r(k);
            for (std::size_t i = 0; i < k; ++i) {
                c[i] = dir == 0 ? cyc[(s + i) % k] : cyc[(s + k - i) % k];
                r[i] = rank[c[i]];
            }
            if (best.empty() || r < best_r) {
                best = c;
                best_r = r;
            }
        }
    }
    return {best};
}

// Simple cycles of length 3..max_len among allowed vertices, one per rotation/reflection class.
// visit returns false to stop early.
inline void for_each_loop(const PantsGraphBall& b, int max_len, VertexFilter filter,
                          const std::function<bool(const LoopInBall&)>& visit) {
    const int V = b.size();
    auto rank = vertex_ranks(b);
    std::vector<int> order(V);
    for (int i = 0; i < V; ++i) order[rank[i]] = i;
    std::vector<char> on_path(V, 0);
    std::vector<int> dist(V, -1), path;
    bool stop = false;
    for (int s : order) {
        if (stop) return;
        if (!vertex_allowed(b, s, filter)) continue;
        // distances back to s through admissible vertices (rank above s)
        std::fill(dist.begin(), dist.end(), -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int x = queue[h];
            if (dist[x] >= max_len / 2 + 1) continue;
            for (auto [y, e] : b.adj[x]) {
                (void)e;
                if (dist[y] >= 0 || rank[y] < rank[s] || !vertex_allowed(b, y, filter)) continue;
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        path.assign(1, s);
        on_path[s] = 1;
        auto dfs = [&](auto& self, int x) -> void {
            if (stop) return;
            const int len = static_cast<int>(path.size());
            for (auto [y, e] : b.adj[x]) {
                (void)e;
                if (y == s && len >= 3) {
                    if (rank[path[1]] < rank[path.back()]) {
                        if (!visit(canonical_loop(path, rank))) {
                            stop = true;
                            return;
                        }
                    }
                    continue;
                }
                if (on_path[y] || rank[y] <= rank[s] || !vertex_allowed(b, y, filter)) continue;
                if (len + 1 > max_len) continue;
                if (dist[y] < 0 || len + dist[y] > max_len) continue;
                path.push_back(y);
                on_path[y] = 1;
                self(self, y);
                on_path[y] = 0;
                path.pop_back();
                if (stop) return;
            }
        };
        dfs(dfs, s);
        on_path[s] = 0;
    }
}

inline std::vector<LoopInBall> enumerate_loops(const PantsGraphBall& b, int max_len,
                                               VertexFilter filter = VertexFilter::NonFrontier) {
    if (max_len > 6) throw TooLong("loops longer than 6 are not enumerated");
    std::vector<LoopInBall> out;
    for_each_loop(b, max_len, filter, [&](const LoopInBall& l) {
        out.push_back(l);
        return true;
    });
    std::sort(out.begin(), out.end(), [&](const LoopInBall& x, const LoopInBall& y) {
        if (x.vertices.size() != y.vertices.size()) return x.vertices.size() < y.vertices.size();
        return x.vertices < y.vertices;
    });
    return out;
}

// ---- charts inside the universe

// Intersection number realised by an elementary move of a with the given fixed curves.
inline int move_minimum(const Universe& u, const PantsDecomposition& fixed, CurveId a) {
    PantsDecomposition p = fixed;
    p.push_back(a);
    return chart_minimum(pants_adjacency(u, canonical_pants(p)).classify_complement(a));
}

inline bool is_move(const Universe& u, const PantsDecomposition& fixed, CurveId a, CurveId b) {
    if (a == b) return false;
    for (CurveId c : fixed)
        if (!u.disjoint(c, a) || !u.disjoint(c, b)) return false;
    return u.intersection(a, b) == move_minimum(u, fixed, a);
}

// The three vertices fixed+{x}, fixed+{centre}, fixed+{y} form a quadrilateral triple with the
// given centre: two edges, no third, and a common neighbour.
inline std::optional<CurveId> quadrilateral_witness(const Universe& u, const PantsDecomposition& fixed, CurveId centre,
                                                    CurveId x, CurveId y) {
    if (!is_move(u, fixed, centre, x) || !is_move(u, fixed, centre, y) || x == y || is_move(u, fixed, x, y))
        return std::nullopt;
    const int m = move_minimum(u, fixed, centre);
    for (CurveId d : u.disjoint_from_all(fixed)) {
        if (d == centre || d == x || d == y) continue;
        if (u.intersection(d, centre) == m && u.intersection(d, x) == m && u.intersection(d, y) == m) return d;
    }
    return std::nullopt;
}

// Label PQRSTU of an almost-alternating hexagon: P central in the triple UPQ, PQRSTU alternating.
struct HexagonLabels {
    std::array<int, 6> v{};  // P Q R S T U
};

inline std::optional<HexagonLabels> hexagon_labels(const Universe& u, const PantsGraphBall& b, const LoopInBall& l) {
    if (l.vertices.size() != 6) return std::nullopt;
    const auto& c = l.vertices;
    for (int dir = 0; dir < 2; ++dir) {
        for (int s = 0; s < 6; ++s) {
            HexagonLabels h;
            for (int i = 0; i < 6; ++i) h.v[i] = dir == 0 ? c[(s + i) % 6] : c[(s + 6 - i) % 6];
            std::vector<int> seq(h.v.begin(), h.v.end());
            if (!is_alternating(b, seq, false)) continue;
            int P = h.v[0], Q = h.v[1], U = h.v[5];
            auto fixed = common_curves({b.vertices[P], b.vertices[Q], b.vertices[U]});
            if (static_cast<int>(fixed.size()) != u.n() - 1) continue;
            auto moving = [&](int v) {
                for (CurveId x : b.vertices[v])
                    if (!std::binary_search(fixed.begin(), fixed.end(), x)) return x;
                return -1;
            };
            if (quadrilateral_witness(u, fixed, moving(P), moving(Q), moving(U))) return h;
        }
    }
    return std::nullopt;
}

inline bool half_square_at(const Universe& u, const PantsGraphBall& b, int P, int Q, int R);

inline LoopClassification classify_small_loop(const PantsGraphBall& b, const Universe& u, const LoopInBall& l) {
    const auto& c = l.vertices;
    const int k = static_cast<int>(c.size());
    if (k > 6) throw TooLong("loop of length " + std::to_string(k));
    check_path(b, c, true);
    LoopClassification out;
    std::vector<PantsDecomposition> ps;
    for (int v : c) ps.push_back(b.vertices[v]);
    auto common = common_curves(ps);
    out.common = static_cast<int>(common.size());
    const int n = u.n();
    if (k == 3) {
        out.tag = LoopTag::Triangle;
        auto [removed, added] = b.move_label(c[0], c[1]);
        (void)added;
        out.chart = pants_adjacency(u, b.vertices[c[0]]).classify_complement(removed);
        return out;
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if (b.adjacent(c[i], c[j])) {
                out.tag = LoopTag::NotTrueLoop;
                out.chord = std::make_pair(c[i], c[j]);
                return out;
            }
        }
    }
    if (out.common >= n - 2) {
        bool alt = is_alternating(b, c, true);
        if (k == 4 && alt)
            out.tag = LoopTag::AlternatingSquare;
        else if (k == 5 && alt)
            out.tag = LoopTag::AlternatingPentagon;
        else if (k == 6 && hexagon_labels(u, b, l))
            out.tag = LoopTag::AlmostAlternatingHexagon;
        else
            out.tag = LoopTag::TwoCurveSmallLoop;
        return out;
    }
    if (out.common == n - 3 && k == 6) {
        bool all = true;
        for (int i = 0; i < k && all; ++i) all = half_square_at(u, b, c[i], c[(i + 1) % k], c[(i + 2) % k]);
        if (all) {
            out.tag = LoopTag::ThreeCurveSmallLoop;
            return out;
        }
    }
    out.tag = LoopTag::Unclassified;
    return out;
}

// ---- half squares

struct HalfSquare {
    PantsDecomposition partner;
    std::optional<int> vertex;  // index in the ball when present
};

// PQ is a2 -> a2', QR is a1 -> a1'.  The partner {a1', a2, rest} completes the square when it is a
// decomposition joined to P and R by moves.
inline std::optional<HalfSquare> half_square_partner(const PantsGraphBall& b, const Universe& u, int P, int Q, int R) {
    check_path(b, {P, Q, R}, false);
    auto [a2, a2p] = b.move_label(P, Q);
    auto [a1, a1p] = b.move_label(Q, R);
    if (a1 == a2p) throw NotAlternating("both moves act in one chart");
    const auto& t = u.triangulation();
    PantsDecomposition rest = without(without(b.vertices[P], a1), a2);
    for (CurveId c : rest)
        if (!disjoint_by_sum(t, u.curve(c).weights, u.curve(a1p).weights)) return std::nullopt;
    if (!disjoint_by_sum(t, u.curve(a1p).weights, u.curve(a2).weights)) return std::nullopt;
    PantsDecomposition s = replace_curve(b.vertices[P], a1, a1p);
    PantsDecomposition fixed_p = without(b.vertices[P], a1);
    PantsDecomposition fixed_r = without(b.vertices[R], a2p);
    if (!is_move(u, fixed_p, a1, a1p) || !is_move(u, fixed_r, a2p, a2)) return std::nullopt;
    return HalfSquare{s, b.find(s)};
}

inline bool half_square_at(const Universe& u, const PantsGraphBall& b, int P, int Q, int R) {
    if (!triple_alternates(b, P, Q, R)) return false;
    return half_square_partner(b, u, P, Q, R).has_value();
}

// ---- support of two moving curves

// Complementary piece of the n-2 common curves that carries x and y, as (genus, boundary count).
inline SurfaceId two_curve_support(const Universe& u, const PantsDecomposition& p, CurveId x, CurveId y) {
    auto adj = pants_adjacency(u, p);
    auto px = adj.curve_pants[adj.position(x)], py = adj.curve_pants[adj.position(y)];
    std::set<int> pieces{px.first, px.second, py.first, py.second};
    int k = static_cast<int>(pieces.size());
    if (k == 4) return {-1, -1};  // disjoint subsurfaces
    return {3 - k, 3 * k - 4};
}

struct PentagonReport {
    bool ok = false;
    std::vector<CurveId> cycle;  // five curves, consecutive ones intersect minimally
    std::string failure;
};

inline PentagonReport verify_pentagon(const Universe& u, const PantsGraphBall& b, const LoopInBall& l) {
    if (l.vertices.size() != 5 || classify_small_loop(b, u, l).tag != LoopTag::AlternatingPentagon)
        throw NotAPentagon("loop is not an alternating pentagon");
    PentagonReport r;
    const auto& c = l.vertices;
    std::map<CurveId, std::vector<CurveId>> nb;
    std::vector<std::pair<CurveId, CurveId>> moves;
    for (int i = 0; i < 5; ++i) {
        auto [x, y] = b.move_label(c[i], c[(i + 1) % 5]);
        moves.push_back({x, y});
        nb[x].push_back(y);
        nb[y].push_back(x);
    }
    if (nb.size() != 5) {
        r.failure = "expected five moving curves, found " + std::to_string(nb.size());
        return r;
    }
    for (auto& [x, v] : nb)
        if (v.size() != 2) {
            r.failure = "moves do not form a 5-cycle of curves";
            return r;
        }
    CurveId start = nb.begin()->first, prev = -1, cur = start;
    do {
        r.cycle.push_back(cur);
        CurveId next = nb[cur][0] == prev ? nb[cur][1] : nb[cur][0];
        prev = cur;
        cur = next;
    } while (cur != start && r.cycle.size() <= 5);
    if (r.cycle.size() != 5) {
        r.failure = "curve graph is not a single 5-cycle";
        return r;
    }
    auto common = common_curves({b.vertices[c[0]], b.vertices[c[1]], b.vertices[c[2]], b.vertices[c[3]], b.vertices[c[4]]});
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            CurveId x = r.cycle[i], y = r.cycle[j];
            bool adjacent = j == i + 1 || (i == 0 && j == 4);
            int inter = u.intersection(x, y);
            if (adjacent) {
                int step = -1;
                for (int e = 0; e < 5; ++e)
                    if ((moves[e].first == x && moves[e].second == y) || (moves[e].first == y && moves[e].second == x)) step = e;
                CurveId from = moves[step].first;
                int m = move_minimum(u, without(b.vertices[c[step]], from), from);
                if (inter != m) {
                    r.failure = "adjacent curves " + u.key(x) + ", " + u.key(y) + " meet " + std::to_string(inter) + " times";
                    return r;
                }
            } else if (inter != 0) {
                r.failure = "non-adjacent curves " + u.key(x) + ", " + u.key(y) + " intersect";
                return r;
            }
        }
    }
    const auto& P = b.vertices[c[0]];
    PantsDecomposition mv;
    for (CurveId x : P)
        if (!std::binary_search(common.begin(), common.end(), x)) mv.push_back(x);
    SurfaceId sup = two_curve_support(u, P, mv[0], mv[1]);
    if (sup != SurfaceId{0, 5}) {
        r.failure = "moving curves are supported on " + sup.str() + ", not a five-holed sphere";
        return r;
    }
    r.ok = true;
    return r;
}

struct HexagonReport {
    bool ok = false;
    HexagonLabels labels;
    // a1, a1', a1'', a2, a2', a2''
    std::array<CurveId, 6> curves{};
    std::array<bool, 6> separating{};
    int a2p_choices = 0;
    int a2pp_choices = 0;  // up to twists about a2
    int completions = 0;
    std::string failure;
};

inline HexagonReport verify_hexagon(const Universe& u, const PantsGraphBall& b, const LoopInBall& l) {
    auto lab = hexagon_labels(u, b, l);
    if (!lab || classify_small_loop(b, u, l).tag != LoopTag::AlmostAlternatingHexagon)
        throw NotAHexagon("loop is not an almost-alternating hexagon");
    HexagonReport r;
    r.labels = *lab;
    const auto& v = lab->v;
    std::vector<PantsDecomposition> ps;
    for (int x : v) ps.push_back(b.vertices[x]);
    auto common = common_curves(ps);
    auto mov = [&](int i) {
        PantsDecomposition out;
        for (CurveId x : ps[i])
            if (!std::binary_search(common.begin(), common.end(), x)) out.push_back(x);
        return out;
    };
    auto only = [&](const PantsDecomposition& a, const PantsDecomposition& bb) {
        for (CurveId x : a)
            if (std::find(bb.begin(), bb.end(), x) == bb.end()) return x;
        return -1;
    };
    auto both = [&](const PantsDecomposition& a, const PantsDecomposition& bb) {
        for (CurveId x : a)
            if (std::find(bb.begin(), bb.end(), x) != bb.end()) return x;
        return -1;
    };
    auto P = mov(0), Q = mov(1), R = mov(2), S = mov(3), T = mov(4), U = mov(5);
    CurveId a2 = both(P, Q), a1 = only(P, Q), a1p = only(Q, P), a1pp = only(U, P);
    CurveId a2p = only(R, Q), a2pp = only(T, U);
    r.curves = {a1, a1p, a1pp, a2, a2p, a2pp};
    for (int i = 0; i < 6; ++i) r.separating[i] = r.curves[i] >= 0 && u.separation(r.curves[i]).separating;
    if (std::find(r.curves.begin(), r.curves.end(), -1) != r.curves.end() || S != canonical_pants({a2p, a2pp})) {
        r.failure = "vertex pattern does not match P Q R S T U";
        return r;
    }
    SurfaceId sup = two_curve_support(u, ps[0], a1, a2);
    if (sup != SurfaceId{1, 2}) {
        r.failure = "moving curves are supported on " + sup.str() + ", not a twice-holed torus";
        return r;
    }
    if (r.separating[3]) {
        r.failure = "a2 is separating";
        return r;
    }
    if (r.separating[0]) {
        r.failure = "a1 is separating";
        return r;
    }
    if (!r.separating[1] || !r.separating[2]) {
        r.failure = "a1' or a1'' is nonseparating";
        return r;
    }
    auto with = [&](std::initializer_list<CurveId> extra) {
        PantsDecomposition f = common;
        f.insert(f.end(), extra.begin(), extra.end());
        return canonical_pants(f);
    };
    // completions (x, y) of the quadrilateral triple U P Q to a hexagon with R = {a1', x},
    // S = {x, y}, T = {a1'', y}
    auto side = [&](CurveId sep) {
        std::vector<CurveId> out;
        for (CurveId x : u.disjoint_from_all(with({sep})))
            if (x != a2 && is_move(u, with({sep}), a2, x)) out.push_back(x);
        return out;
    };
    std::vector<std::pair<CurveId, CurveId>> pairs;
    for (CurveId x : side(a1p))
        for (CurveId y : side(a1pp)) {
            if (x == y || !u.disjoint(x, y)) continue;
            if (is_move(u, with({x}), a1p, y) && is_move(u, with({y}), a1pp, x)) pairs.push_back({x, y});
        }
    r.completions = static_cast<int>(pairs.size());
    // A twist about a2 fixes a1, a1', a1'' and a2, so completions come in twist orbits.  The
    // x's all meet a2 once inside the torus cut off by a1', hence form one orbit there; the
    // completions form one orbit iff y is a function of x (and back) compatible with the twist.
    std::set<CurveId> xs, ys;
    for (auto [x, y] : pairs) {
        xs.insert(x);
        ys.insert(y);
    }
    bool one_orbit = !pairs.empty() && xs.size() == pairs.size() && ys.size() == pairs.size();
    for (std::size_t i = 0; one_orbit && i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto [x, y] = pairs[i];
            auto [x2, y2] = pairs[j];
            if (u.intersection(x, x2) != u.intersection(y, y2) || u.intersection(x, y2) != u.intersection(x2, y)) {
                one_orbit = false;
                break;
            }
        }
    r.a2p_choices = one_orbit ? 1 : static_cast<int>(xs.size());
    r.a2pp_choices = one_orbit ? 1 : static_cast<int>(ys.size());
    if (r.a2p_choices != 1 || r.a2pp_choices != 1) {
        r.failure = "a2'/a2'' choices: " + std::to_string(r.a2p_choices) + "/" + std::to_string(r.a2pp_choices);
        return r;
    }
    r.ok = true;
    return r;
}

struct CellInventory {
    std::vector<LoopInBall> triangles, squares, pentagons, hexagons;
    std::map<LoopTag, int> counts;
    int loops = 0;
    std::vector<std::string> failures;
};

inline CellInventory detect_cells(const PantsGraphBall& b, const Universe& u,
                                  VertexFilter filter = VertexFilter::Certified) {
    CellInventory inv;
    for (const auto& l : enumerate_loops(b, 6, filter)) {
        ++inv.loops;
        auto cl = classify_small_loop(b, u, l);
        ++inv.counts[cl.tag];
        switch (cl.tag) {
            case LoopTag::Triangle: inv.triangles.push_back(l); break;
            case LoopTag::AlternatingSquare: inv.squares.push_back(l); break;
            case LoopTag::AlternatingPentagon: {
                auto rep = verify_pentagon(u, b, l);
                if (rep.ok)
                    inv.pentagons.push_back(l);
                else
                    inv.failures.push_back("pentagon: " + rep.failure);
                break;
            }
            case LoopTag::AlmostAlternatingHexagon: {
                auto rep = verify_hexagon(u, b, l);
                if (rep.ok)
                    inv.hexagons.push_back(l);
                else
                    inv.failures.push_back("hexagon: " + rep.failure);
                break;
            }
            default: break;
        }
    }
    return inv;
}

}  // namespace pgraph
