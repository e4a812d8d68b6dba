#pragma once

#include <string>

#include "idfa/automata.hpp"

namespace idfa {

// Construction-level output: the raw accessible construction before
// minimization, with a provenance label per state (the pair/subset it came
// from) so transition-form accounting can be inspected. minimize() drops
// labels.
struct Construction {
    Dfa dfa;
    std::vector<std::string> labels;
};

// Product with a dead tag allowed on one side only; (dead,dead) is never
// materialized. Accepts iff either component accepts. Inputs must accept
// finite languages (acyclic after trim); throws otherwise.
Construction union_construction(const Dfa& a, const Dfa& b);
Dfa union_of(const Dfa& a, const Dfa& b);

// Standard product: a missing transition on either side kills the pair.
Construction intersection_construction(const Dfa& a, const Dfa& b);
Dfa intersection_of(const Dfa& a, const Dfa& b);

// Completes with a sink, then flips finals; the result is complete and cyclic.
Construction complement_construction(const Dfa& a);
Dfa complement_of(const Dfa& a);

// Pair-subset construction <i, P> with i a state of A or its dead tag and
// P a subset of B's states; B's initial re-enters P whenever the A component
// lands on a final state.
Construction concat_construction(const Dfa& a, const Dfa& b);
Dfa concat_of(const Dfa& a, const Dfa& b);

// Subset construction with re-entry of {0} on final hits; the initial subset
// is final (the empty word).
Construction star_construction(const Dfa& a);
Dfa star_of(const Dfa& a);

// Reverse all transitions, then determinize.
Construction reversal_construction(const Dfa& a);
Dfa reversal_of(const Dfa& a);

}  // namespace idfa
