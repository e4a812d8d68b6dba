#pragma once

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "idfa/symbol.hpp"

namespace idfa {

struct Transition {
    int from = 0;
    Symbol symbol;
    int to = 0;

    bool operator==(const Transition&) const = default;
    auto operator<=>(const Transition&) const = default;
};

// Deterministic automaton with a partial transition function. A missing
// transition means rejection; no dead state is ever stored.
struct Dfa {
    std::vector<Symbol> alphabet;  // canonical order, duplicate-free
    int state_count = 1;           // states are [0, state_count-1]
    int initial = 0;
    std::vector<int> finals;       // sorted, duplicate-free
    std::vector<Transition> transitions;  // sorted by (from, symbol, to)

    bool is_final(int s) const;
    int symbol_index(const Symbol& s) const;  // -1 if not in alphabet
    std::optional<int> step(int state, const Symbol& s) const;

    bool operator==(const Dfa&) const = default;
};

// Nondeterministic automaton; only used as the intermediate for reversal.
struct Nfa {
    std::vector<Symbol> alphabet;
    int state_count = 0;
    std::vector<int> initials;
    std::vector<int> finals;
    std::vector<Transition> transitions;
};

struct FiniteLanguage {
    std::vector<Symbol> alphabet;
    std::set<Word> words;

    bool operator==(const FiniteLanguage&) const = default;
};

// Normalizing constructors: sort/dedupe alphabet, finals and transitions.
Dfa make_dfa(std::vector<Symbol> alphabet, int states, std::vector<int> finals,
             std::vector<Transition> transitions, int initial = 0);
Dfa make_dfa(const std::vector<std::string>& alphabet, int states,
             const std::vector<int>& finals,
             const std::vector<std::tuple<int, std::string, int>>& transitions,
             int initial = 0);

// 1 state, no finals, no transitions: the canonical empty-language DFA.
Dfa empty_language_dfa(std::vector<Symbol> alphabet);

std::vector<Symbol> united_alphabet(const std::vector<Symbol>& a,
                                    const std::vector<Symbol>& b);

// Dense (state, symbol) -> state lookup for a valid Dfa; -1 = missing.
struct DeltaTable {
    int k = 0;
    std::vector<int> next;

    explicit DeltaTable(const Dfa& d);
    int step(int state, int sym) const { return next[state * k + sym]; }
};

// Every invariant violation as a human-readable diagnostic; empty = valid.
std::vector<std::string> validate(const Dfa& d);
bool is_valid(const Dfa& d);
void require_valid(const Dfa& d);  // throws std::invalid_argument

// Removes unreachable and non-coaccessible states and renumbers canonically
// (BFS from the initial state, symbols in canonical order). An empty language
// collapses to the 1-state convention.
Dfa trim(const Dfa& d);

// True iff the transition graph restricted to accessible states is acyclic.
bool is_acyclic(const Dfa& d);

// Runs the word; throws if it uses a symbol outside the alphabet.
bool accepts(const Dfa& d, const Word& w);

// All accepted words of an acyclic automaton; throws on cyclic input.
FiniteLanguage enumerate_language(const Dfa& d);

// Accessible subset construction. Non-coaccessible NFA states are dropped
// first so no useless subset state is ever emitted; the empty subset is never
// materialized. When given, subsets_out receives the subset behind each state.
Dfa determinize(const Nfa& n, std::vector<std::set<int>>* subsets_out = nullptr);

// Unique minimal partial DFA, canonical numbering. Handles cyclic input
// (partition refinement with an implicit dead block).
Dfa minimize(const Dfa& d);

// Equality after canonical renumbering (same alphabet, finals, delta).
bool is_isomorphic(const Dfa& a, const Dfa& b);

// Renumber states by BFS discovery order; unreachable states keep their
// relative order after the reachable ones.
Dfa renumber_bfs(const Dfa& d);

// Total transition function; adds a sink state only if something is missing.
Dfa complete_with_sink(const Dfa& d);

// BFS distance from the initial state per state; -1 if unreachable.
std::vector<int> state_levels(const Dfa& d);
int level(const Dfa& d, int state);  // throws if unreachable

}  // namespace idfa
