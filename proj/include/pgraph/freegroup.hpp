#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace pgraph {

// Letter g+1 is generator g, -(g+1) its inverse.
using Letter = int;
using Word = std::vector<Letter>;

inline int gen_of(Letter l) { return std::abs(l) - 1; }

inline Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) l = -l;
    return out;
}

inline Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return free_reduce(out);
}

inline Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
        ++i;
        --j;
    }
    return Word(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

inline Word min_rotation(const Word& w) {
    if (w.empty()) return w;
    std::size_t n = w.size(), best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            Letter a = w[(s + t) % n], b = w[(best + t) % n];
            if (a != b) {
                if (a < b) best = s;
                break;
            }
        }
    }
    Word out(n);
    for (std::size_t t = 0; t < n; ++t) out[t] = w[(best + t) % n];
    return out;
}

// Canonical representative of an unoriented conjugacy class.
inline Word canonical_cyclic(const Word& w) {
    Word r = cyclic_reduce(w);
    Word a = min_rotation(r), b = min_rotation(inverse(r));
    return std::min(a, b);
}

inline std::string word_string(const Word& w) {
    std::string s;
    for (Letter l : w) {
        char c = static_cast<char>('a' + gen_of(l));
        s += l > 0 ? c : static_cast<char>(c - 'a' + 'A');
    }
    return s;
}

// Images of the generators; acts letter by letter.
struct Automorphism {
    std::vector<Word> images;

    Word image(Letter l) const { return l > 0 ? images[gen_of(l)] : inverse(images[gen_of(l)]); }

    Word operator()(const Word& w) const {
        Word out;
        for (Letter l : w) {
            Word im = image(l);
            out.insert(out.end(), im.begin(), im.end());
        }
        return free_reduce(out);
    }

    static Automorphism identity(int rank) {
        Automorphism a;
        for (int g = 0; g < rank; ++g) a.images.push_back({g + 1});
        return a;
    }
};

}  // namespace pgraph
