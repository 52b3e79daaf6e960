#pragma once

#include <array>
#include <optional>

#include "curve.hpp"
#include "errors.hpp"
#include "farey.hpp"
#include "mapping_class.hpp"
#include "triangulation.hpp"

namespace pgraph {

// Identification of curves on the one-holed torus and the four-holed sphere with slopes.
// 0/1 is the curve b (torus) or the curve around punctures 1,2 (sphere).

inline bool is_chart_surface(SurfaceId s) { return s == SurfaceId{1, 1} || s == SurfaceId{0, 4}; }

inline ChartKind chart_kind_of(SurfaceId s) {
    if (s == SurfaceId{1, 1}) return ChartKind::OneHoledTorus;
    if (s == SurfaceId{0, 4}) return ChartKind::FourHoledSphere;
    throw Unsupported("no slope chart on surface " + s.str());
}

inline MappingClassWord chart_token_word(SurfaceId s, PGL2Token tok) {
    const bool torus = chart_kind_of(s) == ChartKind::OneHoledTorus;
    auto tk = [](MCToken::Kind k, int i, bool inv) { return MCToken{k, i, inv}; };
    auto half = [&](int i, bool inv) { return tk(MCToken::HalfTwist, i, inv); };
    switch (tok) {
        case PGL2Token::TwistZero:
        case PGL2Token::TwistZeroInv: {
            bool inv = tok == PGL2Token::TwistZeroInv;
            if (torus) return {tk(MCToken::TwistB, 0, inv)};
            return {half(1, !inv)};
        }
        case PGL2Token::TwistInf:
        case PGL2Token::TwistInfInv: {
            bool inv = tok == PGL2Token::TwistInfInv;
            if (torus) return {tk(MCToken::TwistA, 0, inv)};
            return {half(2, true), half(1, inv), half(2, false)};
        }
        case PGL2Token::Reflect:
            if (torus)
                return {tk(MCToken::Reflection, 0, false), tk(MCToken::TwistA, 0, false),
                        tk(MCToken::TwistB, 0, true), tk(MCToken::TwistA, 0, false)};
            return {half(1, false), half(1, false), tk(MCToken::Reflection, 0, false)};
    }
    return {};
}

inline MappingClassWord chart_word(SurfaceId s, const PGL2Word& w) {
    MappingClassWord out;
    for (PGL2Token tok : w) {
        auto part = chart_token_word(s, tok);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline Word chart_base_word(SurfaceId s) {
    if (chart_kind_of(s) == ChartKind::OneHoledTorus) return {2};
    return {1, 2};
}

inline NormalCurve curve_of_slope(const IdealTriangulation& t, Slope a) {
    Word w = apply_to_word(t.surface, chart_word(t.surface, word_from_zero(a)), chart_base_word(t.surface));
    return curve_from_word(t, w);
}

namespace detail {

inline int total_weight(const NormalCurve& c) {
    int s = 0;
    for (int x : c.weights) s += x;
    return s;
}

}  // namespace detail

// Torus: the homology class.  Sphere: greedy descent by the chart twists down to a slope of
// height one, then the descent word is undone on slopes.
inline Slope slope_of_curve(const IdealTriangulation& t, const NormalCurve& c) {
    const SurfaceId s = t.surface;
    if (chart_kind_of(s) == ChartKind::OneHoledTorus) {
        auto e = abelianization(t, curve_word(t, c));
        return normalize_slope(e[0], e[1]);
    }
    static constexpr std::array<PGL2Token, 4> twists{PGL2Token::TwistZero, PGL2Token::TwistZeroInv,
                                                     PGL2Token::TwistInf, PGL2Token::TwistInfInv};
    Word cur = curve_word(t, c);
    NormalCurve cc = c;
    PGL2Word applied;  // applied[0] first
    for (;;) {
        int best = detail::total_weight(cc);
        std::optional<PGL2Token> pick;
        Word pick_word;
        NormalCurve pick_curve;
        for (PGL2Token tok : twists) {
            Word w = apply_to_word(s, chart_token_word(s, tok), cur);
            NormalCurve nc = curve_from_word(t, w);
            if (detail::total_weight(nc) < best) {
                best = detail::total_weight(nc);
                pick = tok;
                pick_word = w;
                pick_curve = nc;
            }
        }
        if (!pick) break;
        applied.push_back(*pick);
        cur = pick_word;
        cc = pick_curve;
    }
    static constexpr std::array<Slope, 4> base{Slope{0, 1}, Slope{1, 0}, Slope{1, 1}, Slope{-1, 1}};
    for (Slope b : base) {
        if (curve_of_slope(t, b).weights != cc.weights) continue;
        PGL2Word back;
        for (auto it = applied.begin(); it != applied.end(); ++it) back.push_back(inverse_word({*it})[0]);
        // c = g1^-1 ... gk^-1 (cc), rightmost first
        return apply_pgl2(back, b);
    }
    throw Unsupported("slope descent did not terminate at a base curve");
}

}  // namespace pgraph
