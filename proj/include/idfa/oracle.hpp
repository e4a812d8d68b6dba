#pragma once

#include <map>

#include "idfa/automata.hpp"

namespace idfa {

// The distinct nonempty left quotients of a word set, numbered in BFS
// discovery order, with the transition relation between them. The empty
// quotient (the dead state) is never stored.
struct QuotientTable {
    std::vector<Symbol> alphabet;
    std::map<std::set<Word>, int> ids;
    std::vector<std::set<Word>> quotients;  // indexed by id
    std::vector<Transition> transitions;
};

QuotientTable quotient_table(const FiniteLanguage& words);

// Independent ground truth. Builds the minimal partial DFA of a word set
// directly from its left quotients (Myhill-Nerode); never calls the
// operation constructions or the bound evaluators.
Dfa minimal_dfa_from_words(const FiniteLanguage& words);

// All accepted words of length <= max_len; works on cyclic automata.
FiniteLanguage bounded_words(const Dfa& d, int max_len);

// Number of accepted words of length <= max_len (distinct by determinism).
long long count_accepted(const Dfa& d, int max_len);

}  // namespace idfa
