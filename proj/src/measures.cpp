#include "idfa/measures.hpp"

#include "idfa/oracle.hpp"

namespace idfa {

SymbolMeasures MeasureSet::symbol(const Symbol& s) const {
    auto it = per_symbol.find(s);
    if (it != per_symbol.end()) return it->second;
    SymbolMeasures zero;
    zero.s_bar = 1;
    zero.e_bar = f;
    zero.t_bar = m;
    return zero;
}

int MeasureSet::s_total() const {
    int total = 0;
    for (const auto& [sym, sm] : per_symbol) total += sm.s;
    return total;
}

MeasureSet measure(const Dfa& input) {
    Dfa d = minimize(input);
    MeasureSet ms;
    ms.alphabet = d.alphabet;
    ms.m = d.state_count;
    ms.itc_total = static_cast<int>(d.transitions.size());
    ms.f = static_cast<int>(d.finals.size());

    ms.f_at.assign(ms.m + 1, 0);
    for (int i = 1; i <= ms.m; ++i) {
        ms.f_at[i] = ms.f_at[i - 1] + (d.is_final(i - 1) ? 1 : 0);
    }

    for (const Symbol& sym : d.alphabet) {
        ms.in_at[sym].assign(ms.m, 0);
        ms.t_at[sym].assign(ms.m, 0);
    }
    for (const Transition& t : d.transitions) {
        ms.in_at[t.symbol][t.to] += 1;
        ms.t_at[t.symbol][t.from] = 1;
    }
    for (const Symbol& sym : d.alphabet) {
        SymbolMeasures sm;
        const auto& tv = ms.t_at[sym];
        const auto& iv = ms.in_at[sym];
        for (int s = 0; s < ms.m; ++s) sm.itc += tv[s] ? 1 : 0;
        sm.s = tv[0];
        sm.s_bar = 1 - sm.s;
        for (int f : d.finals) {
            sm.a += iv[f];
            sm.e += tv[f];
        }
        sm.e_bar = ms.f - sm.e;
        sm.t_bar = ms.m - sm.itc;
        ms.per_symbol[sym] = sm;
    }

    ms.levels = state_levels(d);

    // Pre-dead state: the unique final with no out-transitions. Only exists
    // for nonempty finite (acyclic) languages.
    std::vector<int> outdeg(ms.m, 0);
    for (const Transition& t : d.transitions) outdeg[t.from] += 1;
    for (int f : d.finals) {
        if (outdeg[f] == 0) {
            ms.pre_dead = f;
            ms.automaton_level = ms.levels[f];
            break;
        }
    }
    return ms;
}

int isc(const Dfa& d) { return minimize(d).state_count; }

int itc(const Dfa& d) { return static_cast<int>(minimize(d).transitions.size()); }

int isc(const FiniteLanguage& words) {
    return minimal_dfa_from_words(words).state_count;
}

int itc(const FiniteLanguage& words) {
    return static_cast<int>(minimal_dfa_from_words(words).transitions.size());
}

}  // namespace idfa
