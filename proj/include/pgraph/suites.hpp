#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bridge.hpp"
#include "chart.hpp"
#include "farey.hpp"
#include "io.hpp"
#include "loops.hpp"
#include "pants.hpp"
#include "universe.hpp"

namespace pgraph {

struct SuiteReport {
    std::string name;
    bool ok = true;
    std::vector<std::string> lines;
    json counterexamples = json::array();
    json stats = json::object();
    double seconds = 0;

    void note(std::string s) { lines.push_back(std::move(s)); }

    bool check(bool cond, const std::string& what, json example = nullptr) {
        if (!cond) {
            ok = false;
            if (counterexamples.size() < 50) counterexamples.push_back({{"check", what}, {"example", example}});
        }
        return cond;
    }

    void merge(const SuiteReport& o) {
        ok = ok && o.ok;
        for (const auto& l : o.lines) lines.push_back(l);
        for (const auto& c : o.counterexamples) counterexamples.push_back(c);
        stats[o.name] = o.stats;
        seconds += o.seconds;
    }

    json to_json() const {
        return {{"schema_version", schema_version}, {"suite", name},      {"ok", ok},
                {"summary", lines},                 {"stats", stats},     {"counterexamples", counterexamples}};
    }
};

struct BallConfig {
    SurfaceId surface;
    int weight_bound = 0;
    int radius = 0;

    auto operator<=>(const BallConfig&) const = default;
    std::string str() const {
        return "S(" + surface.str() + ") W=" + std::to_string(weight_bound) + " r=" + std::to_string(radius);
    }
};

inline BallConfig default_config(SurfaceId s) {
    if (s == SurfaceId{1, 1} || s == SurfaceId{0, 4}) return {s, 30, 2};
    if (s == SurfaceId{0, 5} || s == SurfaceId{1, 2}) return {s, 12, 3};
    if (s == SurfaceId{0, 6}) return {s, 8, 3};
    if (s == SurfaceId{0, 7}) return {s, 6, 2};
    if (s == SurfaceId{0, 8}) return {s, 4, 2};
    throw Unsupported("surface " + s.str());
}

// Universes and balls shared by the suites of one run.
class Workspace {
public:
    explicit Workspace(int jobs = 1) : jobs_(jobs) {}

    const Universe& universe(SurfaceId s, int W) {
        auto& slot = universes_[{s, W}];
        if (!slot) slot = std::make_unique<Universe>(s, W, jobs_);
        return *slot;
    }

    const PantsGraphBall& ball(const BallConfig& c) {
        auto& slot = balls_[c];
        if (!slot) {
            const auto& u = universe(c.surface, c.weight_bound);
            slot = std::make_unique<PantsGraphBall>(build_ball(u, standard_seed(u), c.radius));
        }
        return *slot;
    }

    const CellInventory& cells(const BallConfig& c) {
        auto& slot = cells_[c];
        if (!slot) slot = std::make_unique<CellInventory>(detect_cells(ball(c), universe(c.surface, c.weight_bound)));
        return *slot;
    }

private:
    int jobs_;
    std::map<std::pair<SurfaceId, int>, std::unique_ptr<Universe>> universes_;
    std::map<BallConfig, std::unique_ptr<PantsGraphBall>> balls_;
    std::map<BallConfig, std::unique_ptr<CellInventory>> cells_;
};

namespace detail {

template <class F>
SuiteReport timed(const std::string& name, F&& body) {
    SuiteReport r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::vector<Slope> slopes_within(i64 bound) {
    std::set<Slope> s;
    for (i64 p = -bound; p <= bound; ++p)
        for (i64 q = 0; q <= bound; ++q)
            if ((p != 0 || q != 0) && std::gcd(std::llabs(p), q) == 1) s.insert(normalize_slope(p, q));
    return {s.begin(), s.end()};
}

inline bool within(Slope a, i64 bound) { return std::llabs(a.p) <= bound && std::llabs(a.q) <= bound; }

// Triangles through a certified edge: common neighbours in the chart of the edge.
inline std::vector<int> edge_triangles(const PantsGraphBall& b, const BallEdge& e) {
    auto fixed = without(b.vertices[e.u], e.removed);
    std::vector<int> out;
    for (auto [w, unused] : b.adj[e.u]) {
        (void)unused;
        if (w != e.v && b.adjacent(w, e.v) && contains_all(b.vertices[w], fixed)) out.push_back(w);
    }
    return out;
}

}  // namespace detail

// ---- farey

struct QuadState {
    Slope centre, y, z;  // y < z
    auto operator<=>(const QuadState&) const = default;
};

inline QuadState quad_state(Slope c, Slope y, Slope z) {
    if (z < y) std::swap(y, z);
    return {c, y, z};
}

inline SuiteReport farey_suite(i64 bound = 12, const AssociationTable& table = standard_association_table) {
    return detail::timed("farey", [&](SuiteReport& r) {
        long edges = 0, triangles = 0;
        for (Slope a : detail::slopes_within(bound)) {
            for (Slope b : farey_neighbors(a, bound)) {
                if (!(a < b)) continue;
                ++edges;
                json ex = {a.str(), b.str()};
                auto comp = triangle_completions(a, b);
                std::set<Slope> brute;
                for (Slope c : farey_neighbors(a, 2 * bound))
                    if (c != b && is_farey_edge(c, b)) brute.insert(c);
                r.check(brute.size() == 2 && brute == std::set<Slope>{comp[0], comp[1]}, "exactly two triangle completions",
                        ex);
                r.check(slope_association(a, table) != slope_association(b, table), "adjacent slopes have distinct associations",
                        {{"slopes", ex},
                         {"association", slope_association(a, table).str()}});
                for (Slope c : comp) {
                    ++triangles;
                    std::set<Association> three{slope_association(a, table), slope_association(b, table),
                                                slope_association(c, table)};
                    r.check(three.size() == 3, "triangle carries all three associations", {a.str(), b.str(), c.str()});
                }
            }
        }
        // Quadrilateral triples form one orbit: everything with small entries is reached from one
        // triple by the generators, staying within twice the bound.
        const QuadState base = quad_state({0, 1}, {1, 1}, {-1, 1});
        std::set<QuadState> seen{base};
        std::vector<QuadState> queue{base};
        for (std::size_t h = 0; h < queue.size(); ++h) {
            QuadState s = queue[h];
            auto q = quadrilateral_triple(s.y, s.centre, s.z);
            r.check(q && q->central == s.centre, "generator image is a quadrilateral triple",
                    {s.centre.str(), s.y.str(), s.z.str()});
            for (PGL2Token t : all_pgl2_tokens) {
                Mat2 m = token_matrix(t);
                QuadState n = quad_state(apply_mat(m, s.centre), apply_mat(m, s.y), apply_mat(m, s.z));
                if (!detail::within(n.centre, 2 * bound) || !detail::within(n.y, 2 * bound) ||
                    !detail::within(n.z, 2 * bound))
                    continue;
                if (seen.insert(n).second) queue.push_back(n);
            }
        }
        long quads = 0;
        for (Slope x : detail::slopes_within(bound)) {
            auto nb = farey_neighbors(x, bound);
            std::vector<Slope> v(nb.begin(), nb.end());
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j) {
                    auto q = quadrilateral_triple(v[i], x, v[j]);
                    if (!q || q->central != x) continue;
                    ++quads;
                    r.check(seen.count(quad_state(x, v[i], v[j])) > 0, "quadrilateral triple in the orbit of the base",
                            {x.str(), v[i].str(), v[j].str()});
                }
        }
        r.stats = {{"bound", bound}, {"edges", edges}, {"triangles", triangles}, {"quadrilateral_triples", quads},
                   {"orbit_size", seen.size()}};
        r.note("farey: " + std::to_string(edges) + " edges, " + std::to_string(quads) +
               " quadrilateral triples in one orbit of " + std::to_string(seen.size()));
    });
}

// ---- charts

inline SuiteReport charts_suite(Workspace& ws, SurfaceId s, int W) {
    return detail::timed("charts", [&](SuiteReport& r) {
        const auto& u = ws.universe(s, W);
        const auto& t = u.triangulation();
        const ChartKind kind = chart_kind_of(s);
        std::vector<Slope> slope(u.size());
        std::set<Slope> distinct;
        for (CurveId c = 0; c < u.size(); ++c) {
            slope[c] = slope_of_curve(t, u.curve(c));
            distinct.insert(slope[c]);
            r.check(curve_of_slope(t, slope[c]) == u.curve(c), "slope chart round trip", {u.key(c), slope[c].str()});
        }
        r.check(static_cast<int>(distinct.size()) == u.size(), "distinct curves have distinct slopes");
        long pairs = 0;
        for (CurveId a = 0; a < u.size(); ++a)
            for (CurveId b = a + 1; b < u.size(); ++b) {
                ++pairs;
                int gi = u.intersection(a, b);
                i64 si = slope_intersection(slope[a], slope[b], kind);
                r.check(gi == si, "geometric intersection equals slope intersection",
                        {{"curves", {u.key(a), u.key(b)}}, {"slopes", {slope[a].str(), slope[b].str()}}, {"geometric", gi},
                         {"slope", si}});
            }
        r.stats = {{"surface", s.str()}, {"weight_bound", W}, {"curves", u.size()}, {"pairs", pairs}};
        r.note("charts S(" + s.str() + "): " + std::to_string(pairs) + " pairs of " + std::to_string(u.size()) +
               " curves agree with slope intersection");
    });
}

// ---- cells

inline bool expects_pentagons(SurfaceId s) { return s.g == 0 && s.r >= 5; }
inline bool expects_squares(SurfaceId s) { return s.g == 0 && s.r >= 6; }
inline bool expects_hexagons(SurfaceId s) { return s == SurfaceId{1, 2}; }

inline void check_edge_triangles(SuiteReport& r, const Universe& u, const PantsGraphBall& b) {
    long edges = 0;
    for (int e = 0; e < static_cast<int>(b.edges.size()); ++e) {
        if (!b.edge_certified(e)) continue;
        ++edges;
        auto tri = detail::edge_triangles(b, b.edges[e]);
        r.check(tri.size() == 2, "certified edge lies in exactly two triangles",
                {{"edge", {pants_key(u, b.vertices[b.edges[e].u]), pants_key(u, b.vertices[b.edges[e].v])}},
                 {"triangles", tri.size()}});
    }
    r.stats["certified_edges"] = edges;
}

inline SuiteReport pentagons_suite(Workspace& ws, const BallConfig& c) {
    return detail::timed("pentagons", [&](SuiteReport& r) {
        const auto& u = ws.universe(c.surface, c.weight_bound);
        const auto& b = ws.ball(c);
        const auto& inv = ws.cells(c);
        check_edge_triangles(r, u, b);
        for (const auto& f : inv.failures) r.check(false, "cell verification", f);
        const auto np = inv.pentagons.size();
        if (expects_pentagons(c.surface))
            r.check(np >= 1, "at least one verified alternating pentagon");
        else
            r.check(np == 0, "no alternating pentagons");
        for (const auto& l : inv.pentagons) {
            auto rep = verify_pentagon(u, b, l);
            r.check(rep.ok, "pentagon curve cycle", loop_json(u, b, l));
        }
        if (c.surface == SurfaceId{0, 5}) {
            r.check(inv.squares.empty(), "no alternating squares");
            r.check(inv.hexagons.empty(), "no almost-alternating hexagons");
            r.check(!inv.triangles.empty(), "triangles present");
        }
        r.stats.update({{"config", c.str()},
                        {"vertices", b.size()},
                        {"triangles", inv.triangles.size()},
                        {"squares", inv.squares.size()},
                        {"pentagons", np},
                        {"hexagons", inv.hexagons.size()}});
        r.note(c.str() + ": " + std::to_string(np) + " pentagons found (" + std::to_string(inv.triangles.size()) +
               " triangles, " + std::to_string(inv.squares.size()) + " squares, " + std::to_string(inv.hexagons.size()) +
               " hexagons)");
    });
}

inline SuiteReport hexagons_suite(Workspace& ws, const BallConfig& c) {
    return detail::timed("hexagons", [&](SuiteReport& r) {
        const auto& u = ws.universe(c.surface, c.weight_bound);
        const auto& b = ws.ball(c);
        const auto& inv = ws.cells(c);
        for (const auto& f : inv.failures) r.check(false, "cell verification", f);
        const auto nh = inv.hexagons.size();
        if (expects_hexagons(c.surface))
            r.check(nh >= 1, "at least one verified almost-alternating hexagon");
        else
            r.check(nh == 0, "no almost-alternating hexagons");
        if (c.surface == SurfaceId{1, 2}) r.check(inv.pentagons.empty(), "no alternating pentagons");
        long completions = 0;
        for (const auto& l : inv.hexagons) {
            auto rep = verify_hexagon(u, b, l);
            const auto& sp = rep.separating;
            r.check(rep.ok && !sp[0] && !sp[3] && sp[1] && sp[2] && rep.a2p_choices == 1 && rep.a2pp_choices == 1,
                    "hexagon pattern", loop_json(u, b, l));
            completions += rep.completions;
        }
        long sep_pairs = 0;
        if (c.surface.g > 0) {
            std::vector<CurveId> sep;
            for (CurveId x = 0; x < u.size(); ++x)
                if (u.separation(x).separating) sep.push_back(x);
            for (std::size_t i = 0; i < sep.size(); ++i)
                for (std::size_t j = i + 1; j < sep.size(); ++j) {
                    ++sep_pairs;
                    int k = u.intersection(sep[i], sep[j]);
                    r.check(k >= 4, "distinct separating curves meet at least four times",
                            {{"curves", {u.key(sep[i]), u.key(sep[j])}}, {"intersection", k}});
                }
        }
        r.stats.update({{"config", c.str()},
                        {"hexagons", nh},
                        {"pentagons", inv.pentagons.size()},
                        {"hexagon_completions", completions},
                        {"separating_pairs", sep_pairs}});
        r.note(c.str() + ": " + std::to_string(nh) + " hexagons verified, " + std::to_string(inv.pentagons.size()) +
               " pentagons, " + std::to_string(sep_pairs) + " separating pairs checked");
    });
}

// ---- half squares and squares

inline SuiteReport squares_suite(Workspace& ws, const BallConfig& c) {
    return detail::timed("squares", [&](SuiteReport& r) {
        const auto& u = ws.universe(c.surface, c.weight_bound);
        const auto& b = ws.ball(c);
        const auto& inv = ws.cells(c);
        long triples = 0, partners = 0, sep_configs = 0;
        for (int Q = 0; Q < b.size(); ++Q) {
            if (!b.certified[Q] || b.frontier[Q]) continue;
            for (auto [P, e1] : b.adj[Q]) {
                (void)e1;
                for (auto [R, e2] : b.adj[Q]) {
                    (void)e2;
                    if (P == R || !b.certified[P] || !b.certified[R]) continue;
                    auto [a2, a2p] = b.move_label(P, Q);
                    auto [a1, a1p] = b.move_label(Q, R);
                    if (a1 == a2p) continue;
                    ++triples;
                    bool hp = half_square_partner(b, u, P, Q, R).has_value();
                    bool zero = u.intersection(a1p, a2) == 0;
                    bool ds = pants_adjacency(u, b.vertices[P]).lie_on_disjoint_subsurfaces(a1, a2);
                    partners += hp;
                    json ex = {pants_key(u, b.vertices[P]), pants_key(u, b.vertices[Q]), pants_key(u, b.vertices[R])};
                    r.check(hp == zero && zero == ds, "partner exists iff i(a1',a2)=0 iff disjoint subsurfaces", ex);
                    if (c.surface == SurfaceId{0, 5}) r.check(!hp, "no half-square partner", ex);
                    if (c.surface == SurfaceId{1, 2}) {
                        bool sep = u.separation(a1).separating || u.separation(a2).separating ||
                                   u.separation(a1p).separating || u.separation(a2p).separating;
                        if (sep) {
                            ++sep_configs;
                            r.check(!hp, "no half-square partner with a separating curve", ex);
                        }
                    }
                }
            }
        }
        const auto ns = inv.squares.size();
        if (expects_squares(c.surface))
            r.check(ns >= 1, "alternating squares present");
        else
            r.check(ns == 0, "no alternating squares");
        for (const auto& l : inv.squares) {
            auto [x, y] = b.move_label(l.vertices[0], l.vertices[1]);
            auto [z, w] = b.move_label(l.vertices[1], l.vertices[2]);
            (void)y;
            (void)w;
            r.check(pants_adjacency(u, b.vertices[l.vertices[0]]).lie_on_disjoint_subsurfaces(x, z),
                    "square moves lie on disjoint subsurfaces", loop_json(u, b, l));
        }
        r.stats.update({{"config", c.str()},
                        {"triples", triples},
                        {"partners", partners},
                        {"separating_configurations", sep_configs},
                        {"squares", ns}});
        r.note(c.str() + ": " + std::to_string(triples) + " alternating triples, " + std::to_string(partners) +
               " half-square partners, " + std::to_string(ns) + " squares");
    });
}

// ---- small loops

struct ThreeCurveSearch {
    std::optional<LoopInBall> loop;
    long examined = 0;
    bool capped = false;
};

inline ThreeCurveSearch find_three_curve_loop(const Universe& u, const PantsGraphBall& b, long cap) {
    ThreeCurveSearch s;
    for_each_loop(b, 6, VertexFilter::All, [&](const LoopInBall& l) {
        if (l.vertices.size() != 6) return true;
        if (++s.examined > cap) {
            s.capped = true;
            return false;
        }
        if (classify_small_loop(b, u, l).tag == LoopTag::ThreeCurveSmallLoop) {
            s.loop = l;
            return false;
        }
        return true;
    });
    return s;
}

inline constexpr long three_curve_cap = 2'000'000;

inline SuiteReport small_loops_suite(Workspace& ws, const BallConfig& c) {
    return detail::timed("small-loops", [&](SuiteReport& r) {
        const auto& u = ws.universe(c.surface, c.weight_bound);
        const auto& b = ws.ball(c);
        if (c.surface == SurfaceId{0, 8}) {
            auto s = find_three_curve_loop(u, b, three_curve_cap);
            if (s.capped) {
                r.note(c.str() + ": three-curve search waived after " + std::to_string(s.examined) + " hexagonal loops");
            } else {
                r.check(s.loop.has_value(), "a three-curve small loop exists");
                if (s.loop) r.stats["three_curve_loop"] = loop_json(u, b, *s.loop);
                r.note(c.str() + ": three-curve small loop " + (s.loop ? "found" : "not found") + " after " +
                       std::to_string(s.examined) + " hexagonal loops");
            }
            r.stats["examined"] = s.examined;
            return;
        }
        const auto& inv = ws.cells(c);
        for (const auto& l : enumerate_loops(b, 6, VertexFilter::Certified)) {
            auto cl = classify_small_loop(b, u, l);
            r.check(cl.tag != LoopTag::Unclassified, "loop is two-curve, three-curve or chordal", loop_json(u, b, l));
            if (cl.tag == LoopTag::NotTrueLoop)
                r.check(cl.chord && b.adjacent(cl.chord->first, cl.chord->second), "chord witness is an edge",
                        loop_json(u, b, l));
        }
        json counts = json::object();
        for (auto [t, n] : inv.counts) counts[to_string(t)] = n;
        r.stats.update({{"config", c.str()}, {"loops", inv.loops}, {"counts", counts}});
        int unclassified = inv.counts.count(LoopTag::Unclassified) ? inv.counts.at(LoopTag::Unclassified) : 0;
        r.note(c.str() + ": " + std::to_string(inv.loops) + " loops, " + std::to_string(unclassified) + " unclassified");
    });
}

// ---- well-definedness and phi

inline SuiteReport welldefinedness_suite(Workspace& ws, const BallConfig& c) {
    return detail::timed("well-definedness", [&](SuiteReport& r) {
        const auto& u = ws.universe(c.surface, c.weight_bound);
        const auto& b = ws.ball(c);
        std::map<LoopCase, long> found;
        long illegal = 0;
        for (const auto& e : b.edges) {
            if (!move_certified(b, e.u, e.v)) continue;
            for (CurveId a1 : without(b.vertices[e.u], e.removed)) {
                json ex = {{"X", pants_key(u, b.vertices[e.u])}, {"X'", pants_key(u, b.vertices[e.v])}, {"a1", u.key(a1)}};
                auto m = classify_move(u, b, e.u, e.v, a1);
                if (m.illegal) {
                    ++illegal;
                    auto circ = circumvent_illegal_move(u, b.vertices[e.u], b.vertices[e.v]);
                    bool ok = circ.choices.size() == 2;
                    for (CurveId x : circ.choices) ok = ok && u.separation(x).separating;
                    if (ok) ok = u.intersection(circ.choices[0], circ.choices[1]) == 4;
                    r.check(ok, "illegal move circumvented by two separating choices", ex);
                    continue;
                }
                try {
                    auto wl = find_welldefinedness_loop(u, b, e.u, e.v, a1);
                    r.check(wl.tag == predicted_tag(m.kind) && wl.wxxy_alternating, "loop of the predicted type", ex);
                    ++found[m.kind];
                } catch (const NotCertified&) {
                    r.check(false, "loop found inside the ball", ex);
                }
            }
        }
        auto expect = [&](LoopCase k, bool want) {
            if (want) r.check(found[k] > 0, std::string("instances of case ") + to_string(k));
        };
        expect(LoopCase::DisjointSubsurfaces, c.surface == SurfaceId{0, 6});
        expect(LoopCase::FiveHoledSphere, c.surface == SurfaceId{0, 5});
        expect(LoopCase::TwiceHoledTorus, c.surface == SurfaceId{1, 2});
        if (c.surface == SurfaceId{1, 2}) r.check(illegal > 0, "illegal moves present");
        r.stats.update({{"config", c.str()},
                        {"squares", found[LoopCase::DisjointSubsurfaces]},
                        {"pentagons", found[LoopCase::FiveHoledSphere]},
                        {"hexagons", found[LoopCase::TwiceHoledTorus]},
                        {"illegal", illegal}});
        r.note(c.str() + ": loops through certified moves: " + std::to_string(found[LoopCase::DisjointSubsurfaces]) +
               " squares, " + std::to_string(found[LoopCase::FiveHoledSphere]) + " pentagons, " +
               std::to_string(found[LoopCase::TwiceHoledTorus]) + " hexagons; " + std::to_string(illegal) +
               " illegal moves circumvented");
    });
}

inline std::vector<MCToken> word_alphabet(SurfaceId s) {
    std::vector<MCToken> out;
    for (auto t : generator_tokens(s)) {
        out.push_back(t);
        if (t.kind != MCToken::Reflection) {
            t.inverse = true;
            out.push_back(t);
        }
    }
    return out;
}

inline std::vector<MappingClassWord> words_up_to(SurfaceId s, int max_len) {
    std::vector<MappingClassWord> out{{}};
    auto alphabet = word_alphabet(s);
    for (std::size_t h = 0; h < out.size(); ++h) {
        if (static_cast<int>(out[h].size()) == max_len) continue;
        for (const auto& t : alphabet) {
            auto w = out[h];
            w.push_back(t);
            out.push_back(w);
        }
    }
    return out;
}

inline SuiteReport phi_suite(Workspace& ws, const BallConfig& c, int max_len = 4) {
    return detail::timed("phi", [&](SuiteReport& r) {
        const auto& u = ws.universe(c.surface, c.weight_bound);
        const auto& b = ws.ball(c);
        auto d = transport_data(u, b);
        auto loops = enumerate_loops(b, 6, VertexFilter::Certified);
        CurveAction act(u);
        auto words = words_up_to(c.surface, max_len);
        std::map<std::string, std::pair<long, long>> totals;
        std::map<MappingClassWord, InducedAutomorphism> autos;
        for (const auto& w : words) {
            auto A = induced_automorphism(b, w, act.word(w));
            auto rep = verify_phi(u, b, A, d, loops);
            for (const auto& [name, chk] : rep.checks) {
                totals[name].first += chk.checked;
                totals[name].second += chk.skipped;
                for (const auto& ce : chk.counterexamples) r.check(false, name, ce);
            }
            autos.emplace(w, std::move(A));
        }
        // phi(uv) = phi(u) phi(v)
        CheckResult comp;
        std::map<MappingClassWord, std::map<CurveId, CurveId>> labels;
        for (const auto& [w, A] : autos) labels.emplace(w, phi_labels(b, d.charts, A));
        for (const auto& w : words) {
            for (std::size_t k = 1; k < w.size(); ++k) {
                MappingClassWord uw(w.begin(), w.begin() + k), vw(w.begin() + k, w.end());
                const auto& luv = labels.at(w);
                const auto& lu = labels.at(uw);
                const auto& lv = labels.at(vw);
                for (auto [x, img] : luv) {
                    auto v = lv.find(x);
                    if (img < 0 || v == lv.end() || v->second < 0) {
                        ++comp.skipped;
                        continue;
                    }
                    auto uu = lu.find(v->second);
                    if (uu == lu.end() || uu->second < 0) {
                        ++comp.skipped;
                        continue;
                    }
                    ++comp.checked;
                    if (uu->second != img) comp.fail(word_str(uw) + " after " + word_str(vw) + " on " + u.key(x));
                }
            }
        }
        totals["composition"] = {comp.checked, comp.skipped};
        for (const auto& ce : comp.counterexamples) r.check(false, "composition", ce);
        json t = json::object();
        for (const auto& [name, p] : totals) t[name] = {{"checked", p.first}, {"skipped", p.second}};
        r.stats.update({{"config", c.str()},
                        {"words", words.size()},
                        {"transport_loops", d.loops.size()},
                        {"transport_uncertified", d.uncertified.size()},
                        {"illegal_detours", d.illegal},
                        {"checks", t}});
        r.check(totals["transport"].first > 0 && totals["path independence"].first > 0, "transport exercised");
        r.note(c.str() + ": " + std::to_string(words.size()) + " words up to length " + std::to_string(max_len) + ", " +
               std::to_string(totals["edges"].first) + " edge images, " + std::to_string(totals["charts"].first) +
               " chart labels, " + std::to_string(totals["transport"].first) + " loop transports, " +
               std::to_string(comp.checked) + " compositions");
    });
}

// ---- registry

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n{"farey", "charts", "squares", "pentagons", "hexagons", "small-loops", "phi"};
    return n;
}

inline std::vector<SurfaceId> default_surfaces(const std::string& suite) {
    if (suite == "charts") return {{1, 1}, {0, 4}};
    if (suite == "squares") return {{0, 6}, {0, 5}, {1, 2}};
    if (suite == "pentagons") return {{0, 5}};
    if (suite == "hexagons") return {{1, 2}};
    if (suite == "small-loops") return {{0, 5}, {1, 2}, {0, 6}, {0, 8}};
    if (suite == "phi") return {{0, 6}, {0, 5}, {1, 2}};
    return {};
}

struct SuiteOptions {
    i64 farey_bound = 12;
    AssociationTable table = standard_association_table;
    int max_word_length = 4;
};

// One suite on one configuration.  phi covers both the well-definedness loops and the automorphism checks.
inline SuiteReport run_suite(Workspace& ws, const std::string& suite, const BallConfig& c, const SuiteOptions& opt = {}) {
    if (suite == "farey") return farey_suite(opt.farey_bound, opt.table);
    if (suite == "charts") return charts_suite(ws, c.surface, c.weight_bound);
    if (suite == "squares") return squares_suite(ws, c);
    if (suite == "pentagons") return pentagons_suite(ws, c);
    if (suite == "hexagons") return hexagons_suite(ws, c);
    if (suite == "small-loops") return small_loops_suite(ws, c);
    if (suite == "phi") {
        SuiteReport r = welldefinedness_suite(ws, c);
        r.name = "phi";
        if (c.surface == SurfaceId{0, 5} || c.surface == SurfaceId{1, 2}) r.merge(phi_suite(ws, c, opt.max_word_length));
        return r;
    }
    throw Unsupported("suite " + suite);
}

}  // namespace pgraph
