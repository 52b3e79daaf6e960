#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "curve.hpp"
#include "errors.hpp"
#include "freegroup.hpp"
#include "triangulation.hpp"

namespace pgraph {

// Half-twists s<i> on punctured spheres, twists ta/tb about the basis curves on tori, and the
// reflection rho.  "^-1" marks an inverse.
struct MCToken {
    enum Kind { HalfTwist, TwistA, TwistB, Reflection } kind = Reflection;
    int index = 0;
    bool inverse = false;
    auto operator<=>(const MCToken&) const = default;

    std::string str() const {
        std::string s;
        switch (kind) {
            case HalfTwist: s = "s" + std::to_string(index); break;
            case TwistA: s = "ta"; break;
            case TwistB: s = "tb"; break;
            case Reflection: return "rho";
        }
        return inverse ? s + "^-1" : s;
    }
};

// Acts as a composition: the rightmost token is applied first.
using MappingClassWord = std::vector<MCToken>;

inline std::string word_str(const MappingClassWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i].str();
    return s.empty() ? "id" : s;
}

inline bool token_valid(SurfaceId s, const MCToken& t) {
    switch (t.kind) {
        case MCToken::HalfTwist: return s.g == 0 && t.index >= 1 && t.index <= s.r - 1;
        case MCToken::TwistA:
        case MCToken::TwistB: return s.g == 1;
        case MCToken::Reflection: return !t.inverse;
    }
    return false;
}

inline MCToken parse_token(SurfaceId s, const std::string& text) {
    std::string body = text;
    bool inv = false;
    if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
        inv = true;
        body = body.substr(0, body.size() - 3);
    }
    MCToken t;
    t.inverse = inv;
    if (body == "rho") {
        t.kind = MCToken::Reflection;
    } else if (body == "ta") {
        t.kind = MCToken::TwistA;
    } else if (body == "tb") {
        t.kind = MCToken::TwistB;
    } else if (body.size() >= 2 && body[0] == 's' &&
               body.find_first_not_of("0123456789", 1) == std::string::npos) {
        t.kind = MCToken::HalfTwist;
        t.index = std::stoi(body.substr(1));
    } else {
        throw UnknownGenerator(text);
    }
    if (!token_valid(s, t)) throw UnknownGenerator(text + " on surface " + s.str());
    return t;
}

inline MappingClassWord parse_word(SurfaceId s, const std::string& text) {
    MappingClassWord w;
    std::string tok;
    std::istringstream in(text);
    while (in >> tok)
        if (tok != "id") w.push_back(parse_token(s, tok));
    return w;
}

inline MappingClassWord inverse_word(const MappingClassWord& w) {
    MappingClassWord out(w.rbegin(), w.rend());
    for (auto& t : out)
        if (t.kind != MCToken::Reflection) t.inverse = !t.inverse;
    return out;
}

inline MappingClassWord compose(const MappingClassWord& u, const MappingClassWord& v) {
    MappingClassWord out = u;
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

inline std::vector<MCToken> generator_tokens(SurfaceId s) {
    std::vector<MCToken> out;
    if (s.g == 0) {
        for (int i = 1; i <= s.r - 1; ++i) out.push_back({MCToken::HalfTwist, i, false});
    } else {
        out.push_back({MCToken::TwistA, 0, false});
        out.push_back({MCToken::TwistB, 0, false});
    }
    out.push_back({MCToken::Reflection, 0, false});
    return out;
}

namespace detail {

inline Word prefix_product(int first, int count) {
    Word w;
    for (int i = 0; i < count; ++i) w.push_back(first + i);
    return w;
}

// x_i -> P x_i^-1 P^-1 with P = x_1 ... x_{i-1}, over generators first..first+count-1
inline void reflect_block(Automorphism& a, int first_letter, int count, const Word& conj) {
    for (int i = 0; i < count; ++i) {
        Word p = prefix_product(first_letter, i);
        Word y = concat({p, {-(first_letter + i)}, inverse(p)});
        a.images[first_letter + i - 1] = concat({inverse(conj), y, conj});
    }
}

inline Automorphism token_automorphism(SurfaceId s, const MCToken& t) {
    const int k = s.rank();
    Automorphism a = Automorphism::identity(k);
    if (s.g == 0) {
        if (t.kind == MCToken::Reflection) {
            reflect_block(a, 1, k, {});
            return a;
        }
        int i = t.index;  // swaps punctures i, i+1; puncture r is (x_1...x_k)^-1
        if (i < k) {
            if (!t.inverse) {
                a.images[i - 1] = {i, i + 1, -i};
                a.images[i] = {i};
            } else {
                a.images[i - 1] = {i + 1};
                a.images[i] = {-(i + 1), i, i + 1};
            }
        } else {
            Word xr = inverse(prefix_product(1, k));
            if (!t.inverse)
                a.images[k - 1] = concat({{k}, xr, {-k}});
            else
                a.images[k - 1] = xr;
        }
        return a;
    }
    // genus one: a = 1, b = 2, punctures x_i = i + 2
    switch (t.kind) {
        case MCToken::TwistA: a.images[1] = t.inverse ? Word{-1, 2} : Word{1, 2}; break;
        case MCToken::TwistB: a.images[0] = t.inverse ? Word{1, -2} : Word{1, 2}; break;
        case MCToken::Reflection:
            a.images[0] = {2};
            a.images[1] = {1};
            reflect_block(a, 3, k - 2, {-2, 1});
            break;
        default: throw UnknownGenerator(t.str());
    }
    return a;
}

}  // namespace detail

inline const Automorphism& token_automorphism(SurfaceId s, const MCToken& t) {
    static std::map<std::pair<SurfaceId, MCToken>, Automorphism> cache;
    auto key = std::make_pair(s, t);
    auto it = cache.find(key);
    if (it == cache.end()) {
        if (!token_valid(s, t)) throw UnknownGenerator(t.str());
        it = cache.emplace(key, detail::token_automorphism(s, t)).first;
    }
    return it->second;
}

inline Word apply_to_word(SurfaceId s, const MappingClassWord& w, const Word& word) {
    Word cur = word;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = cyclic_reduce(token_automorphism(s, *it)(cur));
    return canonical_cyclic(cur);
}

inline NormalCurve apply_generator(const IdealTriangulation& t, const MappingClassWord& w, const NormalCurve& c) {
    for (const auto& tok : w)
        if (!token_valid(t.surface, tok)) throw UnknownGenerator(tok.str());
    return curve_from_word(t, apply_to_word(t.surface, w, curve_word(t, c)));
}

}  // namespace pgraph
