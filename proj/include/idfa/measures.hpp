#pragma once

#include <map>
#include <optional>

#include "idfa/automata.hpp"

namespace idfa {

// Per-symbol refined measures of a minimal DFA.
//   itc   tau-transition count
//   s     1 iff a tau-transition leaves the initial state
//   a     tau-transitions reaching final states (in-degree sum over finals)
//   e     finals with an outgoing tau-transition
//   s_bar 1 - s
//   e_bar finals without an outgoing tau-transition
//   t_bar states without an outgoing tau-transition
struct SymbolMeasures {
    int itc = 0;
    int s = 0;
    int a = 0;
    int e = 0;
    int s_bar = 1;
    int e_bar = 0;
    int t_bar = 0;
};

struct MeasureSet {
    std::vector<Symbol> alphabet;
    int m = 1;          // state count of the minimal partial DFA (isc)
    int itc_total = 0;  // transition count (itc)
    int f = 0;          // number of final states
    std::map<Symbol, SymbolMeasures> per_symbol;
    std::vector<int> f_at;                  // f_at[i] = |F cap [0, i-1]|, i in [0, m]
    std::map<Symbol, std::vector<int>> in_at;  // in-degree per (symbol, state)
    std::map<Symbol, std::vector<int>> t_at;   // out indicator per (symbol, state)
    std::vector<int> levels;                // BFS distance per state
    std::optional<int> pre_dead;            // the unique final state with no out-transitions
    std::optional<int> automaton_level;     // level of the pre-dead state

    int k() const { return static_cast<int>(alphabet.size()); }
    // Zero measures for symbols outside the alphabet.
    SymbolMeasures symbol(const Symbol& s) const;
    // s(L) = sum of per-symbol s.
    int s_total() const;
};

// Measures are defined on the canonical minimal DFA; any other input is
// silently minimized first.
MeasureSet measure(const Dfa& d);

int isc(const Dfa& d);
int itc(const Dfa& d);
int isc(const FiniteLanguage& words);
int itc(const FiniteLanguage& words);

}  // namespace idfa
