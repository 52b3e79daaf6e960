#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "farey.hpp"
#include "freegroup.hpp"
#include "triangulation.hpp"

namespace pgraph {

struct NormalCurve {
    SurfaceId surface;
    std::vector<int> weights;
    auto operator<=>(const NormalCurve&) const = default;
    int max_weight() const { return weights.empty() ? 0 : *std::max_element(weights.begin(), weights.end()); }
};

struct Crossing {
    int edge = 0;
    int dir = 1;
    auto operator<=>(const Crossing&) const = default;
};

inline bool satisfies_triangle_conditions(const IdealTriangulation& t, const std::vector<int>& w) {
    for (const auto& tr : t.triangles) {
        int x = w[t.segments[tr.seg[0]].edge], y = w[t.segments[tr.seg[1]].edge], z = w[t.segments[tr.seg[2]].edge];
        if (x < 0 || y < 0 || z < 0) return false;
        if ((x + y + z) % 2) return false;
        if (x > y + z || y > x + z || z > x + y) return false;
    }
    return true;
}

// Normal arcs of a normal multicurve, with the points on each edge as nodes.
class Arrangement {
public:
    struct Arc {
        int node[2];
        int seg[2];
        int tri;
        int corner;
        int level;
    };

    Arrangement(const IdealTriangulation& t, const std::vector<int>& w) : t_(t), w_(w) {
        offset_.assign(t.edge_count + 1, 0);
        for (int e = 0; e < t.edge_count; ++e) offset_[e + 1] = offset_[e] + w[e];
        node_arcs_.assign(offset_.back(), {-1, -1});
        corner_.resize(t.triangles.size());
        for (int ti = 0; ti < static_cast<int>(t.triangles.size()); ++ti) {
            const auto& tr = t.triangles[ti];
            int x[3];
            for (int i = 0; i < 3; ++i) x[i] = w[t.segments[tr.seg[i]].edge];
            for (int i = 0; i < 3; ++i) corner_[ti][i] = (x[i] + x[(i + 2) % 3] - x[(i + 1) % 3]) / 2;
            for (int i = 0; i < 3; ++i) {
                int s_out = tr.seg[i], s_in = tr.seg[(i + 2) % 3];
                for (int lv = 0; lv < corner_[ti][i]; ++lv) {
                    Arc a{};
                    a.node[0] = node_on(ti, i, lv, true);
                    a.node[1] = node_on(ti, i, lv, false);
                    a.seg[0] = s_out;
                    a.seg[1] = s_in;
                    a.tri = ti;
                    a.corner = i;
                    a.level = lv;
                    int id = static_cast<int>(arcs_.size());
                    arcs_.push_back(a);
                    attach(a.node[0], id);
                    attach(a.node[1], id);
                }
            }
        }
        trace();
    }

    int component_count() const { return static_cast<int>(components_.size()); }
    const std::vector<std::vector<Crossing>>& components() const { return components_; }
    const std::vector<int>& arc_component() const { return arc_component_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    int corner_count(int tri, int i) const { return corner_[tri][i]; }

    // Weight vector of one component.
    std::vector<int> component_weights(int c) const {
        std::vector<int> out(t_.edge_count, 0);
        for (const auto& x : components_[c]) ++out[x.edge];
        return out;
    }

    // Connected components of the complement; punctures and curve sides per region class.
    struct Complement {
        int regions = 0;
        std::vector<std::set<int>> punctures;              // per region class
        std::vector<std::pair<int, int>> sides;            // per curve component
    };

    Complement complement() const {
        const int T = static_cast<int>(t_.triangles.size());
        std::vector<int> base(T + 1, 0);
        for (int ti = 0; ti < T; ++ti) base[ti + 1] = base[ti] + corner_[ti][0] + corner_[ti][1] + corner_[ti][2] + 1;
        std::vector<int> parent(base.back());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        auto region = [&](int ti, int i, int lv) {
            const auto& c = corner_[ti];
            if (lv >= c[i]) return base[ti] + c[0] + c[1] + c[2];
            int off = 0;
            for (int k = 0; k < i; ++k) off += c[k];
            return base[ti] + off + lv;
        };
        // gap g (0..x) on edge-level coordinates -> first region seen
        std::vector<std::vector<int>> gap_owner(t_.edge_count);
        for (int e = 0; e < t_.edge_count; ++e) gap_owner[e].assign(w_[e] + 1, -1);
        for (int ti = 0; ti < T; ++ti) {
            const auto& tr = t_.triangles[ti];
            for (int i = 0; i < 3; ++i) {
                int sg = tr.seg[i], e = t_.segments[sg].edge, x = w_[e];
                int ci = corner_[ti][i];
                for (int g = 0; g <= x; ++g) {
                    int r = g <= ci ? region(ti, i, g) : region(ti, (i + 1) % 3, x - g);
                    int G = edge_gap(ti, i, g);
                    int& own = gap_owner[e][G];
                    if (own < 0)
                        own = r;
                    else
                        unite(own, r);
                }
            }
        }
        std::vector<int> cls(base.back(), -1);
        Complement out;
        for (int v = 0; v < base.back(); ++v) {
            int f = find(v);
            if (cls[f] < 0) cls[f] = out.regions++;
            cls[v] = cls[f];
        }
        out.punctures.assign(out.regions, {});
        for (int ti = 0; ti < T; ++ti)
            for (int i = 0; i < 3; ++i)
                out.punctures[cls[region(ti, i, 0)]].insert(t_.vertex_puncture[t_.triangles[ti].corner[i]]);
        out.sides.assign(components_.size(), {-1, -1});
        for (int a = 0; a < static_cast<int>(arcs_.size()); ++a) {
            const auto& arc = arcs_[a];
            auto& sd = out.sides[arc_component_[a]];
            if (sd.first < 0) {
                int r1 = cls[region(arc.tri, arc.corner, arc.level)];
                int r2 = cls[region(arc.tri, arc.corner, arc.level + 1)];
                sd = {std::min(r1, r2), std::max(r1, r2)};
            }
        }
        return out;
    }

private:
    // index along the edge of the point at distance d from corner i of the triangle, on the
    // triangle side leaving the corner (outgoing) or arriving at it
    int node_on(int ti, int i, int d, bool outgoing) const {
        const auto& tr = t_.triangles[ti];
        int side = outgoing ? i : (i + 2) % 3;
        int sg = tr.seg[side];
        int e = t_.segments[sg].edge, x = w_[e];
        // position from the start of the triangle side (corner[side])
        int from_start = outgoing ? d : x - 1 - d;
        return offset_[e] + seg_to_edge(sg, along_segment(ti, side, from_start, x), x);
    }

    int along_segment(int ti, int side, int from_start, int x) const {
        const auto& tr = t_.triangles[ti];
        const auto& s = t_.segments[tr.seg[side]];
        bool same = s.u == tr.corner[side] && s.v == tr.corner[(side + 1) % 3];
        return same ? from_start : x - 1 - from_start;
    }

    int seg_to_edge(int sg, int idx, int x) const {
        return t_.primary_segment[t_.segments[sg].edge] == sg ? idx : x - 1 - idx;
    }

    int edge_gap(int ti, int side, int g) const {
        const auto& tr = t_.triangles[ti];
        int sg = tr.seg[side];
        const auto& s = t_.segments[sg];
        int x = w_[s.edge];
        bool same = s.u == tr.corner[side] && s.v == tr.corner[(side + 1) % 3];
        int G = same ? g : x - g;
        return t_.primary_segment[s.edge] == sg ? G : x - G;
    }

    void attach(int node, int arc) {
        auto& slot = node_arcs_[node];
        (slot[0] < 0 ? slot[0] : slot[1]) = arc;
    }

    int left_triangle(int sg) const {
        const auto& s = t_.segments[sg];
        for (int ti = 0; ti < static_cast<int>(t_.triangles.size()); ++ti) {
            const auto& tr = t_.triangles[ti];
            for (int i = 0; i < 3; ++i)
                if (tr.seg[i] == sg && tr.corner[i] == s.u && tr.corner[(i + 1) % 3] == s.v) return ti;
        }
        return -1;
    }

    Crossing crossing_at(int node, int from_arc, int to_arc) const {
        const Arc& a = arcs_[from_arc];
        int sg = a.node[0] == node ? a.seg[0] : a.seg[1];
        const auto& s = t_.segments[sg];
        if (s.side >= 0) {
            Letter l = t_.side_letter[s.side];
            return {s.edge, l > 0 ? 1 : -1};
        }
        (void)to_arc;
        return {s.edge, a.tri == left_triangle(sg) ? 1 : -1};
    }

    void trace() {
        arc_component_.assign(arcs_.size(), -1);
        std::vector<char> seen(node_arcs_.size(), 0);
        for (int start = 0; start < static_cast<int>(node_arcs_.size()); ++start) {
            if (seen[start]) continue;
            int comp = static_cast<int>(components_.size());
            components_.emplace_back();
            int node = start, arc = node_arcs_[start][0];
            while (!seen[node]) {
                seen[node] = 1;
                int next_arc = node_arcs_[node][0] == arc ? node_arcs_[node][1] : node_arcs_[node][0];
                components_[comp].push_back(crossing_at(node, arc, next_arc));
                arc_component_[next_arc] = comp;
                const Arc& na = arcs_[next_arc];
                node = na.node[0] == node ? na.node[1] : na.node[0];
                arc = next_arc;
            }
        }
    }

    const IdealTriangulation& t_;
    std::vector<int> w_;
    std::vector<int> offset_;
    std::vector<std::array<int, 2>> node_arcs_;
    std::vector<std::array<int, 3>> corner_;
    std::vector<Arc> arcs_;
    std::vector<int> arc_component_;
    std::vector<std::vector<Crossing>> components_;
};

inline std::vector<Crossing> canonical_crossings(const std::vector<Crossing>& seq) {
    std::vector<Crossing> rev(seq.rbegin(), seq.rend());
    for (auto& c : rev) c.dir = -c.dir;
    std::vector<Crossing> best;
    for (const std::vector<Crossing>* s : {&seq, static_cast<const std::vector<Crossing>*>(&rev)}) {
        for (std::size_t k = 0; k < s->size(); ++k) {
            std::vector<Crossing> cand(s->begin() + static_cast<long>(k), s->end());
            cand.insert(cand.end(), s->begin(), s->begin() + static_cast<long>(k));
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

inline Word word_of_crossings(const IdealTriangulation& t, const std::vector<Crossing>& seq) {
    Word w;
    for (const auto& c : seq)
        if (t.is_generator_edge(c.edge)) w.push_back(c.dir * (c.edge + 1));
    return w;
}

struct Validation {
    bool valid = false;
    std::string reason;
    explicit operator bool() const { return valid; }
};

inline Validation validate_normal_curve(const IdealTriangulation& t, const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != t.edge_count)
        throw ShapeError("expected " + std::to_string(t.edge_count) + " weights, got " + std::to_string(w.size()));
    if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) return {false, "empty"};
    if (!satisfies_triangle_conditions(t, w)) return {false, "matching or parity condition fails"};
    Arrangement arr(t, w);
    if (arr.component_count() != 1)
        return {false, "traces to " + std::to_string(arr.component_count()) + " components"};
    Word word = canonical_cyclic(word_of_crossings(t, arr.components()[0]));
    for (std::size_t p = 0; p < t.peripheral.size(); ++p)
        if (word == t.peripheral[p]) return {false, "peripheral around puncture " + std::to_string(p + 1)};
    return {true, "ok"};
}

inline std::vector<Crossing> trace_curve(const IdealTriangulation& t, const NormalCurve& c) {
    if (static_cast<int>(c.weights.size()) != t.edge_count) throw ShapeError("weight vector length");
    if (!satisfies_triangle_conditions(t, c.weights)) throw NotConnected("not a normal curve");
    Arrangement arr(t, c.weights);
    if (arr.component_count() != 1)
        throw NotConnected("traces to " + std::to_string(arr.component_count()) + " components");
    return canonical_crossings(arr.components()[0]);
}

inline Word curve_word(const IdealTriangulation& t, const NormalCurve& c) {
    return canonical_cyclic(word_of_crossings(t, trace_curve(t, c)));
}

// Normal coordinates of the curve carried by a cyclically reduced word.
inline std::vector<int> weights_from_word(const IdealTriangulation& t, const Word& word) {
    Word w = cyclic_reduce(word);
    std::vector<int> out(t.edge_count, 0);
    const int n = static_cast<int>(w.size());
    for (Letter l : w) ++out[gen_of(l)];
    for (int i = 0; i < n; ++i) {
        int from = t.side_of_letter(-w[i]);
        int to = t.side_of_letter(w[(i + 1) % n]);
        for (const auto& s : t.segments) {
            if (s.side >= 0) continue;
            auto inside = [&](int side) { return s.u <= side && side < s.v; };
            if (inside(from) != inside(to)) ++out[s.edge];
        }
    }
    return out;
}

inline NormalCurve curve_from_word(const IdealTriangulation& t, const Word& word) {
    return {t.surface, weights_from_word(t, word)};
}

// Geometric intersection of two distinct primitive cyclic words, counted as linked pairs of
// lifts in the universal cover of the ribbon spine.
inline int intersection_of_words(const IdealTriangulation& t, const Word& u, const Word& v) {
    if (u.empty() || v.empty()) return 0;
    if (canonical_cyclic(u) == canonical_cyclic(v)) return 0;
    const int m = t.polygon_size();
    std::vector<int> pos(2 * t.rank + 1);
    for (int j = 0; j < m; ++j) pos[t.side_letter[j] + t.rank] = j;
    auto P = [&](Letter l) { return pos[l + t.rank]; };
    auto ccw = [&](int x, int y, int z) { return ((y - x + m) % m) < ((z - x + m) % m); };
    const int n1 = static_cast<int>(u.size());
    const int cap = n1 + static_cast<int>(v.size()) + 2;
    int count = 0;
    for (int eps = 0; eps < 2; ++eps) {
        Word w = eps == 0 ? v : inverse(v);
        const int n2 = static_cast<int>(w.size());
        for (int i = 0; i < n1; ++i) {
            for (int j = 0; j < n2; ++j) {
                int a_in = P(-u[(i + n1 - 1) % n1]), b_in = P(-w[(j + n2 - 1) % n2]);
                if (a_in == b_in) continue;
                int len = 0;
                while (len < cap && u[(i + len) % n1] == w[(j + len) % n2]) ++len;
                if (len >= cap) return 0;
                int a_out = P(u[(i + len) % n1]), b_out = P(w[(j + len) % n2]);
                if (len == 0) {
                    if (eps == 1) continue;
                    if (a_in == b_out || a_out == b_in) continue;
                    bool b_in_side = ccw(a_in, b_in, a_out);
                    bool b_out_side = ccw(a_in, b_out, a_out);
                    if (b_in_side != b_out_side) ++count;
                } else {
                    int c = P(u[i]);
                    int d = P(-u[(i + len - 1) % n1]);
                    if (ccw(c, a_in, b_in) == ccw(d, a_out, b_out)) ++count;
                }
            }
        }
    }
    return count;
}

inline int geometric_intersection(const IdealTriangulation& t, const NormalCurve& a, const NormalCurve& b) {
    if (a.weights == b.weights) return 0;
    return intersection_of_words(t, curve_word(t, a), curve_word(t, b));
}

// Exponent sum of each generator.
inline std::vector<int> abelianization(const IdealTriangulation& t, const Word& w) {
    std::vector<int> e(t.rank, 0);
    for (Letter l : w) e[gen_of(l)] += l > 0 ? 1 : -1;
    return e;
}

struct SeparationData {
    bool separating = false;
    // punctures on each side; the first part is the lexicographically smaller one
    std::optional<std::pair<std::vector<int>, std::vector<int>>> puncture_partition;
};

inline SeparationData separation_data(const IdealTriangulation& t, const NormalCurve& c) {
    const SurfaceId s = t.surface;
    std::vector<int> e = abelianization(t, curve_word(t, c));
    SeparationData out;
    int first_x = s.g == 0 ? 0 : 2;
    if (s.g == 1 && ((e[0] % 2) != 0 || (e[1] % 2) != 0)) return out;
    out.separating = true;
    std::vector<int> a, b;
    for (int i = 1; i <= s.r - 1; ++i) (e[first_x + i - 1] != 0 ? a : b).push_back(i);
    b.push_back(s.r);
    if (s.g == 1) {
        // the genus-zero side holds at least two punctures; on the torus side homology is silent
        std::vector<int> all;
        for (int i = 1; i <= s.r; ++i) all.push_back(i);
        if (a.size() < 2) {
            a = all;
            b.clear();
        }
    }
    if (b < a) std::swap(a, b);
    out.puncture_partition = std::make_pair(a, b);
    return out;
}

struct TorusType {
    bool separating = false;
    Slope slope;
    bool operator==(const TorusType&) const = default;
};

inline TorusType torus_type(const IdealTriangulation& t, const NormalCurve& c) {
    if (t.surface.g != 1) throw Unsupported("torus_type needs genus one");
    std::vector<int> e = abelianization(t, curve_word(t, c));
    if ((e[0] % 2) == 0 && (e[1] % 2) == 0) return {true, {}};
    return {false, normalize_slope(e[0], e[1])};
}

// Complement of a single curve: number of components and punctures on each.
inline Arrangement::Complement complement_of(const IdealTriangulation& t, const std::vector<int>& w) {
    Arrangement arr(t, w);
    return arr.complement();
}

}  // namespace pgraph
