#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "curve.hpp"
#include "errors.hpp"
#include "triangulation.hpp"

namespace pgraph {

namespace detail {

// Backtracking over weight vectors that satisfy the triangle conditions.  A connected
// nonperipheral curve never has a corner at the apex of a monogon, so each monogon diagonal is
// forced to twice its generator weight.
template <class Visit>
void for_each_normal_vector(const IdealTriangulation& t, int W, Visit&& visit) {
    const SurfaceId s = t.surface;
    const int k = t.rank;
    const int first_x = s.g == 0 ? 0 : 2;
    std::vector<int> w(t.edge_count, 0);
    std::vector<int> monogon_of(k, -1);  // generator -> monogon diagonal edge
    std::vector<int> fan;                // triangles of the fan, in order
    for (const auto& tr : t.triangles) {
        int e0 = t.segments[tr.seg[0]].edge, e1 = t.segments[tr.seg[1]].edge;
        if (e0 == e1) monogon_of[e0] = t.segments[tr.seg[2]].edge;
    }
    for (int ti = 0; ti < static_cast<int>(t.triangles.size()); ++ti) {
        const auto& tr = t.triangles[ti];
        if (t.segments[tr.seg[0]].edge != t.segments[tr.seg[1]].edge) fan.push_back(ti);
    }
    auto edge_at = [&](int ti, int i) { return t.segments[t.triangles[ti].seg[i]].edge; };

    std::vector<char> known(t.edge_count, 0);
    auto fan_step = [&](auto& self, std::size_t f) -> void {
        if (f == fan.size()) {
            visit(w);
            return;
        }
        int ti = fan[f];
        int e[3] = {edge_at(ti, 0), edge_at(ti, 1), edge_at(ti, 2)};
        int unknown = -1;
        for (int i = 0; i < 3; ++i)
            if (!known[e[i]]) unknown = i;
        if (unknown < 0) {
            int x = w[e[0]], y = w[e[1]], z = w[e[2]];
            if ((x + y + z) % 2 == 0 && x <= y + z && y <= x + z && z <= x + y) self(self, f + 1);
            return;
        }
        int x = w[e[(unknown + 1) % 3]], y = w[e[(unknown + 2) % 3]];
        int lo = std::abs(x - y), hi = std::min(x + y, W);
        known[e[unknown]] = 1;
        for (int v = lo; v <= hi; v += 2) {
            w[e[unknown]] = v;
            self(self, f + 1);
        }
        w[e[unknown]] = 0;
        known[e[unknown]] = 0;
    };
    auto gen_step = [&](auto& self, int g) -> void {
        if (g == k) {
            fan_step(fan_step, 0);
            return;
        }
        bool puncture_gen = g >= first_x;
        int cap = puncture_gen ? W / 2 : W;
        known[g] = 1;
        if (monogon_of[g] >= 0) known[monogon_of[g]] = 1;
        for (int v = 0; v <= cap; ++v) {
            w[g] = v;
            if (monogon_of[g] >= 0) w[monogon_of[g]] = 2 * v;
            self(self, g + 1);
        }
        w[g] = 0;
        if (monogon_of[g] >= 0) w[monogon_of[g]] = 0;
    };
    gen_step(gen_step, 0);
}

// True when some corner at every triangle vertex labelled p is occupied, i.e. a loop around p splits off.
inline bool has_vertex_link(const IdealTriangulation& t, const std::vector<int>& w, int puncture) {
    for (const auto& tr : t.triangles) {
        for (int i = 0; i < 3; ++i) {
            if (t.vertex_puncture[tr.corner[i]] != puncture) continue;
            int x = w[t.segments[tr.seg[i]].edge], y = w[t.segments[tr.seg[(i + 1) % 3]].edge],
                z = w[t.segments[tr.seg[(i + 2) % 3]].edge];
            if (x + z - y == 0) return false;
        }
    }
    return true;
}

}  // namespace detail

// Every valid curve with all weights at most W, ordered by weight vector.
inline std::vector<NormalCurve> enumerate_curves(const IdealTriangulation& t, int W) {
    std::vector<NormalCurve> out;
    if (W <= 0) return out;
    detail::for_each_normal_vector(t, W, [&](const std::vector<int>& w) {
        if (std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })) return;
        if (detail::has_vertex_link(t, w, t.surface.r)) return;
        if (validate_normal_curve(t, w)) out.push_back({t.surface, w});
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::string weights_key(const std::vector<int>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

// a and b (distinct) are disjoint iff their normal sum splits into exactly a and b.
inline bool disjoint_by_sum(const IdealTriangulation& t, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    Arrangement arr(t, s);
    if (arr.component_count() != 2) return false;
    auto c0 = arr.component_weights(0);
    return c0 == a || c0 == b;
}

using CurveId = int;

// The finite set of curves with weights bounded by W, with cached pairings.
class Universe {
public:
    Universe(SurfaceId s, int weight_bound, int jobs = 1)
        : t_(standard_triangulation(s)), W_(weight_bound), jobs_(std::max(1, jobs)) {
        curves_ = enumerate_curves(t_, weight_bound);
        for (int i = 0; i < size(); ++i) {
            index_.emplace(curves_[i].weights, i);
            words_.push_back(curve_word(t_, curves_[i]));
            separation_.push_back(separation_data(t_, curves_[i]));
        }
        disjoint_lists_.resize(curves_.size());
        disjoint_ready_.assign(curves_.size(), 0);
    }

    Universe(const Universe&) = delete;
    Universe& operator=(const Universe&) = delete;

    SurfaceId surface() const { return t_.surface; }
    const IdealTriangulation& triangulation() const { return t_; }
    int weight_bound() const { return W_; }
    int size() const { return static_cast<int>(curves_.size()); }
    int n() const { return t_.surface.n(); }

    const NormalCurve& curve(CurveId c) const { return curves_.at(check(c)); }
    const Word& word(CurveId c) const { return words_.at(check(c)); }
    const SeparationData& separation(CurveId c) const { return separation_.at(check(c)); }
    std::string key(CurveId c) const { return weights_key(curve(c).weights); }

    std::optional<CurveId> find(const std::vector<int>& w) const {
        auto it = index_.find(w);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<CurveId> find_word(const Word& w) const {
        auto weights = weights_from_word(t_, w);
        return find(weights);
    }

    CurveId id(const std::vector<int>& w) const {
        auto c = find(w);
        if (!c) throw UnknownCurve(weights_key(w));
        return *c;
    }

    CurveId id_of_word(const Word& w) const {
        auto c = find_word(w);
        if (!c) throw UnknownCurve(word_string(w));
        return *c;
    }

    int intersection(CurveId a, CurveId b) const {
        check(a);
        check(b);
        if (a == b) return 0;
        std::uint64_t k = pair_key(a, b);
        {
            std::lock_guard lk(mu_);
            auto it = inter_.find(k);
            if (it != inter_.end()) return it->second;
        }
        int v = intersection_of_words(t_, words_[a], words_[b]);
        std::lock_guard lk(mu_);
        inter_.emplace(k, v);
        return v;
    }

    bool disjoint(CurveId a, CurveId b) const {
        check(a);
        check(b);
        if (a == b) return true;
        {
            std::lock_guard lk(mu_);
            if (disjoint_ready_[a]) return std::binary_search(disjoint_lists_[a].begin(), disjoint_lists_[a].end(), b);
            if (disjoint_ready_[b]) return std::binary_search(disjoint_lists_[b].begin(), disjoint_lists_[b].end(), a);
        }
        return intersection(a, b) == 0;
    }

    // Curves other than c that are disjoint from c.
    const std::vector<CurveId>& disjoint_from(CurveId c) const {
        check(c);
        {
            std::lock_guard lk(mu_);
            if (disjoint_ready_[c]) return disjoint_lists_[c];
        }
        std::vector<CurveId> out;
        const int N = size();
        auto scan = [&](int lo, int hi, std::vector<CurveId>& dst) {
            for (int d = lo; d < hi; ++d)
                if (d != c && disjoint_by_sum(t_, curves_[c].weights, curves_[d].weights)) dst.push_back(d);
        };
        if (jobs_ == 1 || N < 256) {
            scan(0, N, out);
        } else {
            std::vector<std::vector<CurveId>> parts(jobs_);
            std::vector<std::thread> pool;
            for (int j = 0; j < jobs_; ++j)
                pool.emplace_back([&, j] { scan(N * j / jobs_, N * (j + 1) / jobs_, parts[j]); });
            for (auto& th : pool) th.join();
            for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        }
        std::lock_guard lk(mu_);
        if (!disjoint_ready_[c]) {
            disjoint_lists_[c] = std::move(out);
            disjoint_ready_[c] = 1;
        }
        return disjoint_lists_[c];
    }

    // Curves disjoint from every member of fixed (and distinct from them).
    std::vector<CurveId> disjoint_from_all(const std::vector<CurveId>& fixed) const {
        if (fixed.empty()) {
            std::vector<CurveId> all(size());
            for (int i = 0; i < size(); ++i) all[i] = i;
            return all;
        }
        std::vector<CurveId> cur = disjoint_from(fixed[0]);
        for (std::size_t i = 1; i < fixed.size(); ++i) {
            const auto& other = disjoint_from(fixed[i]);
            std::vector<CurveId> next;
            std::set_intersection(cur.begin(), cur.end(), other.begin(), other.end(), std::back_inserter(next));
            cur = std::move(next);
        }
        std::erase_if(cur, [&](CurveId x) { return std::find(fixed.begin(), fixed.end(), x) != fixed.end(); });
        return cur;
    }

    int jobs() const { return jobs_; }

private:
    int check(CurveId c) const {
        if (c < 0 || c >= size()) throw UnknownCurve("curve id " + std::to_string(c));
        return c;
    }

    static std::uint64_t pair_key(CurveId a, CurveId b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    }

    const IdealTriangulation& t_;
    int W_;
    int jobs_;
    std::vector<NormalCurve> curves_;
    std::map<std::vector<int>, CurveId> index_;
    std::vector<Word> words_;
    std::vector<SeparationData> separation_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::uint64_t, int> inter_;
    mutable std::vector<std::vector<CurveId>> disjoint_lists_;
    mutable std::vector<char> disjoint_ready_;
};

}  // namespace pgraph
