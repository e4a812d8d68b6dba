#pragma once

// Test-only set-level language operations, independent of the automaton
// constructions. Words are encoded as strings of alphabet indices so that
// large bounded sets stay cheap.

#include <set>
#include <string>

#include "idfa/automata.hpp"

namespace idfa::testset {

using WordSet = std::set<std::string>;

inline std::string encode(const Word& w, const std::vector<Symbol>& alphabet) {
    std::string out;
    out.reserve(w.size());
    for (const Symbol& s : w) {
        auto it = std::lower_bound(alphabet.begin(), alphabet.end(), s);
        out.push_back(static_cast<char>('0' + (it - alphabet.begin())));
    }
    return out;
}

inline WordSet encode_all(const FiniteLanguage& lang, const std::vector<Symbol>& alphabet) {
    WordSet out;
    for (const Word& w : lang.words) out.insert(encode(w, alphabet));
    return out;
}

inline WordSet set_union(const WordSet& a, const WordSet& b) {
    WordSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

inline WordSet set_intersection(const WordSet& a, const WordSet& b) {
    WordSet out;
    for (const auto& w : a)
        if (b.count(w)) out.insert(w);
    return out;
}

inline WordSet set_concat(const WordSet& a, const WordSet& b) {
    WordSet out;
    for (const auto& u : a)
        for (const auto& v : b) out.insert(u + v);
    return out;
}

inline WordSet set_reverse(const WordSet& a) {
    WordSet out;
    for (auto w : a) {
        std::string r(w.rbegin(), w.rend());
        out.insert(std::move(r));
    }
    return out;
}

// All star words of length <= max_len, by breadth-first appending.
inline WordSet set_star_bounded(const WordSet& a, int max_len) {
    WordSet out{""};
    std::vector<std::string> frontier{""};
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const auto& u : frontier) {
            for (const auto& v : a) {
                if (v.empty()) continue;
                if (u.size() + v.size() > static_cast<std::size_t>(max_len)) continue;
                std::string w = u + v;
                if (out.insert(w).second) next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// Words of length <= max_len over an alphabet of k symbols not in the set.
inline long long count_words_upto(int k, int max_len) {
    long long total = 0, pow = 1;
    for (int i = 0; i <= max_len; ++i) {
        total += pow;
        pow *= k;
    }
    return total;
}

}  // namespace idfa::testset
