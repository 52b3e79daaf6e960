#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace pgraph {

using i64 = std::int64_t;

struct Slope {
    i64 p = 0;
    i64 q = 1;
    auto operator<=>(const Slope&) const = default;
    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
};

inline Slope normalize_slope(i64 p, i64 q) {
    if (p == 0 && q == 0) throw InvalidSlope("slope 0/0");
    i64 g = std::gcd(std::llabs(p), std::llabs(q));
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

inline Slope parse_slope(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) throw InvalidSlope("bad slope text: " + s);
    return normalize_slope(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

inline i64 slope_det(Slope a, Slope b) { return a.p * b.q - a.q * b.p; }

inline bool is_farey_edge(Slope a, Slope b) { return std::llabs(slope_det(a, b)) == 1; }

inline std::set<Slope> farey_neighbors(Slope a, i64 bound) {
    // one solution of p*s - q*r = 1, then the whole pencil (r + t p, s + t q)
    i64 r0 = 0, s0 = 0;
    {
        i64 old_r = a.p, r = a.q, old_x = 1, x = 0, old_y = 0, y = 1;
        while (r != 0) {
            i64 k = old_r / r;
            old_r -= k * r; std::swap(old_r, r);
            old_x -= k * x; std::swap(old_x, x);
            old_y -= k * y; std::swap(old_y, y);
        }
        // old_x*p + old_y*q = old_r = +-1, so (r,s) = (-old_y, old_x) * old_r
        r0 = -old_y * old_r;
        s0 = old_x * old_r;
    }
    std::set<Slope> out;
    i64 span = bound + std::llabs(r0) + std::llabs(s0) + 1;
    for (i64 t = -span; t <= span; ++t) {
        i64 r = r0 + t * a.p, s = s0 + t * a.q;
        if (std::llabs(r) <= bound && std::llabs(s) <= bound) out.insert(normalize_slope(r, s));
    }
    return out;
}

inline std::array<Slope, 2> triangle_completions(Slope a, Slope b) {
    if (!is_farey_edge(a, b)) throw NotAnEdge(a.str() + " " + b.str());
    std::array<Slope, 2> c{normalize_slope(a.p + b.p, a.q + b.q), normalize_slope(a.p - b.p, a.q - b.q)};
    if (c[1] < c[0]) std::swap(c[0], c[1]);
    return c;
}

enum class ChartKind { FourHoledSphere, OneHoledTorus };

inline const char* to_string(ChartKind k) {
    return k == ChartKind::OneHoledTorus ? "OneHoledTorus" : "FourHoledSphere";
}

inline i64 slope_intersection(Slope a, Slope b, ChartKind kind) {
    i64 d = std::llabs(slope_det(a, b));
    return kind == ChartKind::OneHoledTorus ? d : 2 * d;
}

// The three ways of pairing up the punctures 1..4; index is the partner of puncture 1 minus 2.
struct Association {
    int index = 0;
    auto operator<=>(const Association&) const = default;
    std::array<std::array<int, 2>, 2> pairs() const {
        switch (index) {
            case 0: return {{{1, 2}, {3, 4}}};
            case 1: return {{{1, 3}, {2, 4}}};
            default: return {{{1, 4}, {2, 3}}};
        }
    }
    std::string str() const {
        auto pr = pairs();
        return "{" + std::to_string(pr[0][0]) + "," + std::to_string(pr[0][1]) + "}|{" +
               std::to_string(pr[1][0]) + "," + std::to_string(pr[1][1]) + "}";
    }
};

inline int parity_class(Slope a) {
    bool po = (a.p % 2) != 0, qo = (a.q % 2) != 0;
    if (!po) return 0;  // (0,1)
    return qo ? 2 : 1;  // (1,1) : (1,0)
}

// parity class (0,1),(1,0),(1,1) -> association; swappable so the suites can be fed a corrupted table
using AssociationTable = std::array<Association, 3>;

inline constexpr AssociationTable standard_association_table{Association{0}, Association{1}, Association{2}};

inline Association slope_association(Slope a, const AssociationTable& table = standard_association_table) {
    return table[parity_class(a)];
}

inline std::set<Slope> associativity_candidates(Slope a, Association target, i64 bound,
                                                const AssociationTable& table = standard_association_table) {
    if (target == slope_association(a, table)) throw NoSuchAssociation(a.str());
    std::set<Slope> out;
    for (Slope b : farey_neighbors(a, bound))
        if (slope_association(b, table) == target) out.insert(b);
    return out;
}

struct QuadrilateralTriple {
    Slope central;
    Slope witness;
};

inline std::optional<QuadrilateralTriple> quadrilateral_triple(Slope a, Slope b, Slope c) {
    std::array<Slope, 3> t{a, b, c};
    int edges = 0, centre = -1;
    for (int i = 0; i < 3; ++i) {
        bool e1 = is_farey_edge(t[i], t[(i + 1) % 3]), e2 = is_farey_edge(t[i], t[(i + 2) % 3]);
        edges += e1;
        if (e1 && e2) centre = i;
    }
    if (edges != 2 || centre < 0) return std::nullopt;
    Slope x = t[centre], y = t[(centre + 1) % 3], z = t[(centre + 2) % 3];
    for (Slope d : triangle_completions(x, y))
        if (is_farey_edge(d, z)) return QuadrilateralTriple{x, d};
    return std::nullopt;
}

inline std::optional<Slope> find_quadrilateral_triple_central(Slope a, Slope b, Slope c) {
    auto q = quadrilateral_triple(a, b, c);
    if (!q) return std::nullopt;
    return q->central;
}

// ---- PGL2(Z) words

struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;
    i64 det() const { return a * d - b * c; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const Mat2&) const = default;
};

enum class PGL2Token { TwistZero, TwistZeroInv, TwistInf, TwistInfInv, Reflect };

inline constexpr std::array<PGL2Token, 5> all_pgl2_tokens{PGL2Token::TwistZero, PGL2Token::TwistZeroInv,
                                                         PGL2Token::TwistInf, PGL2Token::TwistInfInv,
                                                         PGL2Token::Reflect};

// TwistZero fixes 0/1, TwistInf fixes 1/0, Reflect is p/q -> -p/q
inline Mat2 token_matrix(PGL2Token t) {
    switch (t) {
        case PGL2Token::TwistZero: return {1, 0, 1, 1};
        case PGL2Token::TwistZeroInv: return {1, 0, -1, 1};
        case PGL2Token::TwistInf: return {1, 1, 0, 1};
        case PGL2Token::TwistInfInv: return {1, -1, 0, 1};
        case PGL2Token::Reflect: return {-1, 0, 0, 1};
    }
    return {};
}

inline const char* token_name(PGL2Token t) {
    switch (t) {
        case PGL2Token::TwistZero: return "U";
        case PGL2Token::TwistZeroInv: return "u";
        case PGL2Token::TwistInf: return "T";
        case PGL2Token::TwistInfInv: return "t";
        case PGL2Token::Reflect: return "R";
    }
    return "?";
}

// A word acts as a composition: the rightmost token is applied first.
using PGL2Word = std::vector<PGL2Token>;

inline Mat2 word_matrix(const PGL2Word& w) {
    Mat2 m;
    for (PGL2Token t : w) m = m * token_matrix(t);
    return m;
}

inline Slope apply_mat(const Mat2& m, Slope s) { return normalize_slope(m.a * s.p + m.b * s.q, m.c * s.p + m.d * s.q); }

inline Slope apply_pgl2(const PGL2Word& w, Slope s) { return apply_mat(word_matrix(w), s); }

inline PGL2Word inverse_word(const PGL2Word& w) {
    PGL2Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        switch (*it) {
            case PGL2Token::TwistZero: out.push_back(PGL2Token::TwistZeroInv); break;
            case PGL2Token::TwistZeroInv: out.push_back(PGL2Token::TwistZero); break;
            case PGL2Token::TwistInf: out.push_back(PGL2Token::TwistInfInv); break;
            case PGL2Token::TwistInfInv: out.push_back(PGL2Token::TwistInf); break;
            case PGL2Token::Reflect: out.push_back(PGL2Token::Reflect); break;
        }
    }
    return out;
}

// Euclid descent: a word in the two twists sending 0/1 to s.
inline PGL2Word word_from_zero(Slope s) {
    PGL2Word w;
    i64 p = s.p, q = s.q;
    auto push = [&](PGL2Token t, i64 k) {
        for (i64 i = 0; i < std::llabs(k); ++i) w.push_back(k > 0 ? t : inverse_word({t})[0]);
    };
    while (p != 0) {
        if (q == 0) {
            w.push_back(PGL2Token::TwistZeroInv);
            w.push_back(PGL2Token::TwistInf);
            return w;
        }
        if (std::llabs(p) >= std::llabs(q)) {
            i64 k = p / q;
            push(PGL2Token::TwistInf, k);
            p -= k * q;
        } else {
            i64 k = q / p;
            push(PGL2Token::TwistZero, k);
            q -= k * p;
        }
    }
    return w;
}

}  // namespace pgraph
