#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "idfa/automata.hpp"

namespace idfa {

// One grid cell of the verification harness.
struct BoundReport {
    std::string op;
    int m = 0;
    int n = 0;  // 0 when the operation is unary
    int k = 0;
    long long state_bound = 0;
    long long state_claim = 0;
    long long state_measured = 0;
    long long trans_bound = 0;
    long long trans_claim = 0;
    long long trans_measured = 0;
    std::string state_verdict;
    std::string trans_verdict;
    double ms = 0.0;
};

// VIOLATED iff measured > bound; TIGHT iff measured equals the claim;
// SOUND_NOT_TIGHT otherwise.
std::string verdict(long long measured, long long bound, long long claim);

// Deterministic pseudo-random stream (splitmix64); identical across
// platforms, unlike the standard distributions.
struct RandomSource {
    std::uint64_t state;
    explicit RandomSource(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    int below(int n);        // uniform in [0, n)
    bool chance(int num, int den);
};

// Trim-acyclic random automaton over 2..3 symbols with at most max_states
// states, sampled as a topologically ordered partial transition table.
Dfa random_finite_dfa(RandomSource& rng, int max_states = 6);

// Witness grids. Cells whose parameters fall outside a family's constraint
// are skipped.
std::vector<BoundReport> run_union_grid(int m_lo, int m_hi, int n_lo, int n_hi);
std::vector<BoundReport> run_intersection_grid(int m_lo, int m_hi, int n_lo, int n_hi);
std::vector<BoundReport> run_complement_grid(int m_lo, int m_hi);
std::vector<BoundReport> run_concat_case1_grid(int m_lo, int m_hi, int n_lo, int n_hi);
std::vector<BoundReport> run_concat_case2_grid(int m_lo, int m_hi, int n_lo, int n_hi);
std::vector<BoundReport> run_star_grid(int m_lo, int m_hi);
std::vector<BoundReport> run_reversal_grid(int m_lo, int m_hi);

// Random soundness mode: one operand pair per seed in [seed_lo, seed_hi],
// every operation applied, measured values checked against the bound
// formulas. Claims equal bounds in this mode.
std::vector<BoundReport> run_random_soundness(std::uint64_t seed_lo, std::uint64_t seed_hi);

// Star bound checks use the operand without the empty word (the star is
// unchanged and the formulas assume a non-final initial state).
Dfa strip_empty_word(const Dfa& d);

void write_csv(std::ostream& os, const std::vector<BoundReport>& rows);
void write_markdown(std::ostream& os, const std::vector<BoundReport>& rows);

bool any_violation(const std::vector<BoundReport>& rows);

// The exponent in the star witness transition count 9*2^(m-3) - 2^e - 2:
// (m-2)/2 for even m, (m-1)/2 for odd m.
int star_witness_exponent(int m);

}  // namespace idfa
