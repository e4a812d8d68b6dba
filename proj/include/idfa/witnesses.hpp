#pragma once

#include <utility>

#include "idfa/automata.hpp"

namespace idfa {

// Deterministic generators for the witness families used by the verification
// harness. Every generated automaton is already minimal.

// Shared alphabet {b, c} plus a_i_j for i in [1,m-1], j in [1,n-1] with
// (i,j) != (m-1,n-1). A is a b-chain with a_i_j jumps 0 -> i; B is a c-chain
// with jumps 0 -> j. Requires m, n >= 2.
std::pair<Dfa, Dfa> union_witness(int m, int n);

// Alphabet a_i_j for i in [1,m-2], j in [1,n-2], plus the jump symbol
// a_{m-1}_{n-1}. Chain steps +i in A and +j in B wherever the target stays in
// range. Requires m, n >= 2.
std::pair<Dfa, Dfa> intersection_witness(int m, int n);

// The chain accepting exactly {b^m}. Requires m >= 1.
Dfa complement_witness(int m);

// Alphabet {a, b}. A: all states final, full chain; B: b-only first step,
// then a full chain to the single final state. Requires m, n >= 2
// (tightness additionally needs m+1 >= n).
std::pair<Dfa, Dfa> concat_witness_case1(int m, int n);

// Alphabet {b} plus a_i for i in [1,n-2]. A: full chain, all states final;
// B: b-chain with +j jumps. Requires m >= 2 and n > m+1.
std::pair<Dfa, Dfa> concat_witness_case2(int m, int n);

// Alphabet {a, b, c}; chain whose edge labels alternate between {a,b} and
// {a,b,c} (phase depends on the parity of m), plus a b-shortcut 0 -> m-1;
// finals {m-2, m-1}. Requires m >= 4.
Dfa star_witness(int m);

// Alphabet {a, b}; full chain except one b-only edge in the middle; all
// states after that edge are final. Requires m >= 4.
Dfa reversal_witness(int m);

}  // namespace idfa
