#include "idfa/oracle.hpp"

#include <algorithm>
#include <map>

namespace idfa {

namespace {

// Left quotient of a sorted word set by one symbol.
std::set<Word> quotient(const std::set<Word>& words, const Symbol& s) {
    std::set<Word> out;
    for (const Word& w : words) {
        if (!w.empty() && w.front() == s) out.insert(Word(w.begin() + 1, w.end()));
    }
    return out;
}

}  // namespace

QuotientTable quotient_table(const FiniteLanguage& lang) {
    QuotientTable table;
    table.alphabet = lang.alphabet;
    std::sort(table.alphabet.begin(), table.alphabet.end());
    table.alphabet.erase(std::unique(table.alphabet.begin(), table.alphabet.end()),
                         table.alphabet.end());
    if (lang.words.empty()) return table;

    // BFS over distinct nonempty quotients in canonical symbol order gives the
    // canonical numbering directly.
    table.quotients.push_back(lang.words);
    table.ids.emplace(lang.words, 0);
    for (std::size_t qi = 0; qi < table.quotients.size(); ++qi) {
        std::set<Word> cur = table.quotients[qi];
        int cur_id = static_cast<int>(qi);
        for (const Symbol& a : table.alphabet) {
            std::set<Word> q = quotient(cur, a);
            if (q.empty()) continue;
            auto [it, fresh] = table.ids.emplace(q, static_cast<int>(table.quotients.size()));
            if (fresh) table.quotients.push_back(std::move(q));
            table.transitions.push_back({cur_id, a, it->second});
        }
    }
    return table;
}

Dfa minimal_dfa_from_words(const FiniteLanguage& lang) {
    QuotientTable table = quotient_table(lang);
    if (table.quotients.empty()) return empty_language_dfa(table.alphabet);
    std::vector<int> finals;
    for (std::size_t i = 0; i < table.quotients.size(); ++i) {
        if (table.quotients[i].count(Word{})) finals.push_back(static_cast<int>(i));
    }
    return make_dfa(table.alphabet, static_cast<int>(table.quotients.size()),
                    std::move(finals), table.transitions);
}

FiniteLanguage bounded_words(const Dfa& d, int max_len) {
    require_valid(d);
    FiniteLanguage out;
    out.alphabet = d.alphabet;
    DeltaTable dt(d);
    const int k = static_cast<int>(d.alphabet.size());
    Word word;
    auto walk = [&](auto&& self, int s, int depth) -> void {
        if (d.is_final(s)) out.words.insert(word);
        if (depth == max_len) return;
        for (int a = 0; a < k; ++a) {
            int nxt = dt.step(s, a);
            if (nxt < 0) continue;
            word.push_back(d.alphabet[a]);
            self(self, nxt, depth + 1);
            word.pop_back();
        }
    };
    walk(walk, d.initial, 0);
    return out;
}

long long count_accepted(const Dfa& d, int max_len) {
    require_valid(d);
    DeltaTable dt(d);
    const int k = static_cast<int>(d.alphabet.size());
    std::vector<long long> cur(d.state_count, 0);
    cur[d.initial] = 1;
    long long total = d.is_final(d.initial) ? 1 : 0;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<long long> nxt(d.state_count, 0);
        for (int s = 0; s < d.state_count; ++s) {
            if (!cur[s]) continue;
            for (int a = 0; a < k; ++a) {
                int t = dt.step(s, a);
                if (t >= 0) nxt[t] += cur[s];
            }
        }
        cur = std::move(nxt);
        for (int f : d.finals) total += cur[f];
    }
    return total;
}

}  // namespace idfa
