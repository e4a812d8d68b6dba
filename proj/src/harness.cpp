#include "idfa/harness.hpp"

#include <chrono>
#include <ostream>

#include "idfa/bounds.hpp"
#include "idfa/measures.hpp"
#include "idfa/ops.hpp"
#include "idfa/oracle.hpp"
#include "idfa/witnesses.hpp"

namespace idfa {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Measured {
    long long states = 0;
    long long transitions = 0;
};

Measured measure_minimized(const Dfa& d) {
    Dfa mind = minimize(d);
    return {mind.state_count, static_cast<long long>(mind.transitions.size())};
}

void finish(BoundReport& r, const Measured& got) {
    r.state_measured = got.states;
    r.trans_measured = got.transitions;
    r.state_verdict = verdict(r.state_measured, r.state_bound, r.state_claim);
    r.trans_verdict = verdict(r.trans_measured, r.trans_bound, r.trans_claim);
}

}  // namespace

std::string verdict(long long measured, long long bound, long long claim) {
    if (measured > bound) return "VIOLATED";
    if (measured == claim) return "TIGHT";
    return "SOUND_NOT_TIGHT";
}

std::uint64_t RandomSource::next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int RandomSource::below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

bool RandomSource::chance(int num, int den) { return below(den) < num; }

Dfa random_finite_dfa(RandomSource& rng, int max_states) {
    const int n = 1 + rng.below(max_states);
    const int k = 2 + rng.below(2);
    std::vector<Symbol> alphabet;
    const char* names[3] = {"a", "b", "c"};
    for (int i = 0; i < k; ++i) alphabet.push_back(Symbol(names[i]));

    std::vector<Transition> trans;
    for (int s = 0; s + 1 < n; ++s) {
        for (int a = 0; a < k; ++a) {
            if (rng.chance(1, 2)) {
                int target = s + 1 + rng.below(n - 1 - s);
                trans.push_back({s, alphabet[a], target});
            }
        }
    }
    std::vector<int> finals;
    for (int s = 0; s < n; ++s) {
        if (rng.chance(s == 0 ? 1 : 3, 6)) finals.push_back(s);
    }
    if (n > 1) finals.push_back(n - 1);  // keep trivial languages rare
    return trim(make_dfa(alphabet, n, std::move(finals), std::move(trans)));
}

Dfa strip_empty_word(const Dfa& d) {
    Dfa m = minimize(d);
    if (!m.is_final(m.initial)) return m;
    std::vector<int> finals;
    for (int f : m.finals)
        if (f != m.initial) finals.push_back(f);
    return minimize(make_dfa(m.alphabet, m.state_count, std::move(finals), m.transitions,
                             m.initial));
}

std::vector<BoundReport> run_union_grid(int m_lo, int m_hi, int n_lo, int n_hi) {
    std::vector<BoundReport> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int n = n_lo; n <= n_hi; ++n) {
            auto t0 = Clock::now();
            auto [a, b] = union_witness(m, n);
            auto [sb, tb] = union_bounds(measure(a), measure(b));
            BoundReport r;
            r.op = "union";
            r.m = m;
            r.n = n;
            r.k = static_cast<int>(a.alphabet.size());
            r.state_bound = sb.value;
            r.trans_bound = tb.value;
            r.state_claim = union_witness_states(m, n);
            r.trans_claim = union_witness_transitions(m, n);
            finish(r, measure_minimized(union_of(a, b)));
            r.ms = elapsed_ms(t0);
            rows.push_back(r);
        }
    }
    return rows;
}

std::vector<BoundReport> run_intersection_grid(int m_lo, int m_hi, int n_lo, int n_hi) {
    std::vector<BoundReport> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int n = n_lo; n <= n_hi; ++n) {
            auto t0 = Clock::now();
            auto [a, b] = intersection_witness(m, n);
            auto [sb, tb] = intersection_bounds(measure(a), measure(b));
            BoundReport r;
            r.op = "intersection";
            r.m = m;
            r.n = n;
            r.k = static_cast<int>(a.alphabet.size());
            r.state_bound = sb.value;
            r.trans_bound = tb.value;
            r.state_claim = intersection_witness_states(m, n);
            r.trans_claim = intersection_witness_transitions(m, n);
            finish(r, measure_minimized(intersection_of(a, b)));
            r.ms = elapsed_ms(t0);
            rows.push_back(r);
        }
    }
    return rows;
}

std::vector<BoundReport> run_complement_grid(int m_lo, int m_hi) {
    std::vector<BoundReport> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        auto t0 = Clock::now();
        Dfa w = complement_witness(m);
        MeasureSet ms = measure(w);
        auto [sb, tb] = complement_bounds(ms, ms.k());
        BoundReport r;
        r.op = "complement";
        r.m = m;
        r.k = ms.k();
        r.state_bound = sb.value;
        r.trans_bound = tb.value;
        r.state_claim = complement_witness_states(ms.m);
        r.trans_claim = complement_witness_transitions(ms.m, ms.k());
        finish(r, measure_minimized(complement_of(w)));
        r.ms = elapsed_ms(t0);
        rows.push_back(r);
    }
    return rows;
}

std::vector<BoundReport> run_concat_case1_grid(int m_lo, int m_hi, int n_lo, int n_hi) {
    std::vector<BoundReport> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int n = n_lo; n <= n_hi; ++n) {
            if (m + 1 < n) continue;  // case 1 needs m+1 >= n
            auto t0 = Clock::now();
            auto [a, b] = concat_witness_case1(m, n);
            MeasureSet ma = measure(a);
            MeasureSet mb = measure(b);
            int k = static_cast<int>(a.alphabet.size());
            BoundReport r;
            r.op = "concat-case1";
            r.m = m;
            r.n = n;
            r.k = k;
            r.state_bound = concat_state_bound_incomplete(m, n, k, f_profile(ma)).value;
            r.trans_bound = concat_transition_bound(ma, mb, k).value;
            r.state_claim = concat_case1_witness_states(m, n);
            r.trans_claim = concat_case1_witness_transitions(n);
            finish(r, measure_minimized(concat_of(a, b)));
            r.ms = elapsed_ms(t0);
            rows.push_back(r);
        }
    }
    return rows;
}

std::vector<BoundReport> run_concat_case2_grid(int m_lo, int m_hi, int n_lo, int n_hi) {
    std::vector<BoundReport> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int n = n_lo; n <= n_hi; ++n) {
            if (n <= m + 1) continue;  // case 2 needs n > m+1
            auto t0 = Clock::now();
            auto [a, b] = concat_witness_case2(m, n);
            MeasureSet ma = measure(a);
            MeasureSet mb = measure(b);
            int k = static_cast<int>(a.alphabet.size());
            BoundReport r;
            r.op = "concat-case2";
            r.m = m;
            r.n = n;
            r.k = k;
            r.state_bound = concat_state_bound_incomplete(m, n, k, f_profile(ma)).value;
            r.trans_bound = concat_transition_bound(ma, mb, k).value;
            // Case 2 claims the bounds themselves are reached.
            r.state_claim = r.state_bound;
            r.trans_claim = r.trans_bound;
            finish(r, measure_minimized(concat_of(a, b)));
            r.ms = elapsed_ms(t0);
            rows.push_back(r);
        }
    }
    return rows;
}

int star_witness_exponent(int m) { return m % 2 == 0 ? (m - 2) / 2 : (m - 1) / 2; }

std::vector<BoundReport> run_star_grid(int m_lo, int m_hi) {
    std::vector<BoundReport> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        auto t0 = Clock::now();
        Dfa w = star_witness(m);
        MeasureSet ms = measure(w);
        auto [sb, tb] = star_bounds(ms, ms.k());
        BoundReport r;
        r.op = "star";
        r.m = m;
        r.k = ms.k();
        r.state_bound = sb.value;
        r.trans_bound = tb.value;
        r.state_claim = star_witness_states(m);
        r.trans_claim = star_witness_transitions(m, star_witness_exponent(m));
        finish(r, measure_minimized(star_of(w)));
        r.ms = elapsed_ms(t0);
        rows.push_back(r);
    }
    return rows;
}

std::vector<BoundReport> run_reversal_grid(int m_lo, int m_hi) {
    std::vector<BoundReport> rows;
    for (int m = m_lo; m <= m_hi; ++m) {
        auto t0 = Clock::now();
        Dfa w = reversal_witness(m);
        MeasureSet ms = measure(w);
        ReversalBounds rb = reversal_bounds(ms, ms.k());
        BoundReport r;
        r.op = "reversal";
        r.m = m;
        r.k = ms.k();
        r.state_bound = rb.states.value;
        r.trans_bound = rb.transitions.value;
        r.state_claim = reversal_witness_states(m);
        r.trans_claim = reversal_witness_transitions(m);
        finish(r, measure_minimized(reversal_of(w)));
        r.ms = elapsed_ms(t0);
        rows.push_back(r);
    }
    return rows;
}

namespace {

BoundReport random_row(const char* op, int m, int n, int k, long long sb, long long tb,
                       const Measured& got, double ms) {
    BoundReport r;
    r.op = op;
    r.m = m;
    r.n = n;
    r.k = k;
    r.state_bound = sb;
    r.state_claim = sb;
    r.trans_bound = tb;
    r.trans_claim = tb;
    finish(r, got);
    r.ms = ms;
    return r;
}

}  // namespace

std::vector<BoundReport> run_random_soundness(std::uint64_t seed_lo, std::uint64_t seed_hi) {
    std::vector<BoundReport> rows;
    for (std::uint64_t seed = seed_lo; seed <= seed_hi; ++seed) {
        RandomSource rng(seed * 0x100000001B3ULL + 0x9E3779B9ULL);
        Dfa d1 = random_finite_dfa(rng);
        Dfa d2 = random_finite_dfa(rng);
        Dfa m1 = minimize(d1);
        Dfa m2 = minimize(d2);
        MeasureSet a = measure(m1);
        MeasureSet b = measure(m2);
        int k2 = static_cast<int>(united_alphabet(m1.alphabet, m2.alphabet).size());

        if (a.m >= 2 && b.m >= 2) {
            auto t0 = Clock::now();
            auto [sb, tb] = union_bounds(a, b);
            Measured got = measure_minimized(union_of(m1, m2));
            rows.push_back(random_row("union", a.m, b.m, k2, sb.value, tb.value, got,
                                      elapsed_ms(t0)));
            t0 = Clock::now();
            auto [isb, itb] = intersection_bounds(a, b);
            got = measure_minimized(intersection_of(m1, m2));
            rows.push_back(random_row("intersection", a.m, b.m, k2, isb.value, itb.value,
                                      got, elapsed_ms(t0)));
        }
        {
            auto t0 = Clock::now();
            auto [sb, tb] = complement_bounds(a, a.k());
            Measured got = measure_minimized(complement_of(m1));
            rows.push_back(random_row("complement", a.m, 0, a.k(), sb.value, tb.value, got,
                                      elapsed_ms(t0)));
        }
        {
            auto t0 = Clock::now();
            long long sb = concat_state_bound_incomplete(a.m, b.m, k2, f_profile(a)).value;
            long long tb = concat_transition_bound(a, b, k2).value;
            Measured got = measure_minimized(concat_of(m1, m2));
            rows.push_back(random_row("concat", a.m, b.m, k2, sb, tb, got, elapsed_ms(t0)));
        }
        {
            auto t0 = Clock::now();
            MeasureSet sa = measure(strip_empty_word(m1));
            auto [sb, tb] = star_bounds(sa, sa.k());
            Measured got = measure_minimized(star_of(m1));
            rows.push_back(random_row("star", sa.m, 0, sa.k(), sb.value, tb.value, got,
                                      elapsed_ms(t0)));
        }
        if (a.m >= 2) {  // the reversal bound formulas need at least two states
            auto t0 = Clock::now();
            ReversalBounds rb = reversal_bounds(a, a.k());
            Measured got = measure_minimized(reversal_of(m1));
            rows.push_back(random_row("reversal", a.m, 0, a.k(), rb.states.value,
                                      rb.transitions.value, got, elapsed_ms(t0)));
        }
    }
    return rows;
}

void write_csv(std::ostream& os, const std::vector<BoundReport>& rows) {
    os << "op,m,n,k,state_bound,state_claim,state_measured,trans_bound,trans_claim,"
          "trans_measured,state_verdict,trans_verdict,ms\n";
    for (const BoundReport& r : rows) {
        os << r.op << ',' << r.m << ',' << r.n << ',' << r.k << ',' << r.state_bound << ','
           << r.state_claim << ',' << r.state_measured << ',' << r.trans_bound << ','
           << r.trans_claim << ',' << r.trans_measured << ',' << r.state_verdict << ','
           << r.trans_verdict << ',' << static_cast<long long>(r.ms * 1000) / 1000.0
           << '\n';
    }
}

void write_markdown(std::ostream& os, const std::vector<BoundReport>& rows) {
    os << "| op | m | n | k | state bound | state claim | state measured | "
          "trans bound | trans claim | trans measured | state verdict | trans verdict |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const BoundReport& r : rows) {
        os << "| " << r.op << " | " << r.m << " | " << r.n << " | " << r.k << " | "
           << r.state_bound << " | " << r.state_claim << " | " << r.state_measured
           << " | " << r.trans_bound << " | " << r.trans_claim << " | "
           << r.trans_measured << " | " << r.state_verdict << " | " << r.trans_verdict
           << " |\n";
    }
}

bool any_violation(const std::vector<BoundReport>& rows) {
    for (const BoundReport& r : rows) {
        if (r.state_verdict == "VIOLATED" || r.trans_verdict == "VIOLATED") return true;
    }
    return false;
}

}  // namespace idfa
