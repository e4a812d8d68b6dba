#include "idfa/bounds.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace idfa {

namespace {

constexpr long long kSaturate = std::numeric_limits<long long>::max() / 4;

long long sat_pow(long long base, long long exp) {
    long long out = 1;
    for (long long i = 0; i < exp; ++i) {
        if (out > kSaturate / std::max<long long>(base, 1)) return kSaturate;
        out *= base;
    }
    return out;
}

long long pow2(long long e) { return sat_pow(2, e); }

// Geometric sum k^0 + ... + k^top (0 when top < 0).
long long pow_sum(long long k, long long top) {
    long long out = 0;
    for (long long i = 0; i <= top; ++i) {
        out += sat_pow(k, i);
        if (out > kSaturate) return kSaturate;
    }
    return out;
}

void require_sizes(const MeasureSet& a, const MeasureSet& b, const char* id) {
    if (a.m < 2 || b.m < 2) {
        throw std::invalid_argument(std::string(id) + ": requires operand complexities >= 2");
    }
}

std::string echo_mnk(int m, int n, int k) {
    std::ostringstream os;
    os << "m=" << m << " n=" << n << " k=" << k;
    return os.str();
}

std::vector<Symbol> measure_alphabet_union(const MeasureSet& a, const MeasureSet& b) {
    return united_alphabet(a.alphabet, b.alphabet);
}

}  // namespace

FProfile f_profile(const MeasureSet& ms) {
    FProfile fp;
    fp.finals_below = ms.f_at;
    fp.f = ms.f;
    return fp;
}

FProfile f_profile(const Dfa& d) {
    FProfile fp;
    fp.finals_below.assign(d.state_count + 1, 0);
    for (int i = 1; i <= d.state_count; ++i) {
        fp.finals_below[i] = fp.finals_below[i - 1] + (d.is_final(i - 1) ? 1 : 0);
    }
    fp.f = static_cast<int>(d.finals.size());
    return fp;
}

long long binomial(long long x, long long j) {
    if (j < 0 || x < 0 || j > x) return 0;
    j = std::min(j, x - j);
    long long out = 1;
    for (long long i = 1; i <= j; ++i) {
        out = out * (x - j + i) / i;
        if (out > kSaturate) return kSaturate;
    }
    return out;
}

std::pair<BoundValue, BoundValue> union_bounds(const MeasureSet& a, const MeasureSet& b) {
    require_sizes(a, b, "union_bounds");
    const long long m = a.m, n = b.m;
    BoundValue states{"union.states", BoundKind::state, m * n - 2,
                      echo_mnk(a.m, b.m, 0)};

    long long per_symbol = 0;
    for (const Symbol& sym : measure_alphabet_union(a, b)) {
        SymbolMeasures sa = a.symbol(sym);
        SymbolMeasures sb = b.symbol(sym);
        long long boxplus = std::min(sa.s + sb.s, 1);
        per_symbol += boxplus - static_cast<long long>(sa.itc - sa.s) * (sb.itc - sb.s);
    }
    long long total = per_symbol + n * (a.itc_total - a.s_total()) +
                      m * (b.itc_total - b.s_total());
    BoundValue trans{"union.transitions", BoundKind::transition, total,
                     echo_mnk(a.m, b.m, 0)};
    return {states, trans};
}

std::pair<BoundValue, BoundValue> intersection_bounds(const MeasureSet& a,
                                                      const MeasureSet& b) {
    require_sizes(a, b, "intersection_bounds");
    const long long m = a.m, n = b.m;
    BoundValue states{"intersection.states", BoundKind::state, m * n - 2 * (m + n) + 6,
                      echo_mnk(a.m, b.m, 0)};
    long long total = 0;
    for (const Symbol& sym : measure_alphabet_union(a, b)) {
        SymbolMeasures sa = a.symbol(sym);
        SymbolMeasures sb = b.symbol(sym);
        // The middle factors count transitions leaving non-initial non-final
        // states, which cannot be negative; itc - s - a dips below zero when
        // one transition both leaves the initial state and reaches a final.
        long long mid_a = std::max(0, sa.itc - sa.s - sa.a);
        long long mid_b = std::max(0, sb.itc - sb.s - sb.a);
        total += static_cast<long long>(sa.s) * sb.s + mid_a * mid_b +
                 static_cast<long long>(sa.a) * sb.a;
    }
    BoundValue trans{"intersection.transitions", BoundKind::transition, total,
                     echo_mnk(a.m, b.m, 0)};
    return {states, trans};
}

std::pair<BoundValue, BoundValue> complement_bounds(const MeasureSet& a, int k) {
    BoundValue states{"complement.states", BoundKind::state, a.m + 1LL,
                      echo_mnk(a.m, 0, k)};
    BoundValue trans{"complement.transitions", BoundKind::transition,
                     static_cast<long long>(k) * (a.m + 1), echo_mnk(a.m, 0, k)};
    return {states, trans};
}

namespace {

long long binom_sum(long long x, long long j_max) {
    long long out = 0;
    for (long long j = 0; j <= j_max; ++j) {
        out += binomial(x, j);
        if (out > kSaturate) return kSaturate;
    }
    return out;
}

int fp_at(const FProfile& fp, int i) {
    if (i < 0) return 0;
    if (i >= static_cast<int>(fp.finals_below.size())) return fp.f;
    return fp.finals_below[i];
}

}  // namespace

BoundValue concat_state_bound_complete_old(int m, int n, int k, const FProfile& fp) {
    long long total = 0;
    for (int i = 0; i <= m - 2; ++i) {
        total += std::min(sat_pow(k, i), binom_sum(n - 2, fp_at(fp, i)));
    }
    total += std::min(sat_pow(k, m - 1), binom_sum(n - 2, fp.f));
    return {"concat.states.complete_old", BoundKind::state, total, echo_mnk(m, n, k)};
}

BoundValue concat_state_bound_complete(int m, int n, int k, const FProfile& fp) {
    long long total = 0;
    for (int i = 0; i <= m - 2; ++i) {
        total += std::min(sat_pow(k, i), binom_sum(n - 2, fp_at(fp, i)));
    }
    total += binom_sum(n - 2, fp.f);
    return {"concat.states.complete", BoundKind::state, total, echo_mnk(m, n, k)};
}

BoundValue concat_state_bound_incomplete(int m, int n, int k, const FProfile& fp) {
    long long total = 0;
    for (int i = 0; i <= m - 1; ++i) {
        total += std::min(sat_pow(k, i), binom_sum(n - 1, fp_at(fp, i)));
    }
    total += binom_sum(n - 1, fp.f) - 1;
    return {"concat.states.incomplete", BoundKind::state, total, echo_mnk(m, n, k)};
}

BoundValue concat_transition_bound(const MeasureSet& a, const MeasureSet& b, int k) {
    const int m = a.m;
    const int n = b.m;
    const int f1 = a.f;
    const FProfile fp = f_profile(a);
    long long total = 0;
    for (int i = 0; i <= m - 2; ++i) {
        total += std::min(sat_pow(k, i), binom_sum(n - 1, fp_at(fp, i)));
    }
    total *= k;
    for (const Symbol& sym : measure_alphabet_union(a, b)) {
        SymbolMeasures sb = b.symbol(sym);
        const long long lacking_non_initial = sb.t_bar - sb.s_bar;
        // Pre-dead-level pairs always contain B's initial, so when the
        // initial has a sym-transition none of them can lack the move; the
        // all-lacking subtraction only applies when it does not (s_bar = 1).
        long long delta_small = 0;  // sum over j <= f1-1, pre-dead-level arm
        long long delta_full = 0;   // sum over j <= f1, dead-level arm
        for (int j = 0; j <= f1; ++j) {
            long long missing = binomial(lacking_non_initial, j);
            if (j <= f1 - 1) delta_small += binomial(n - 1, j) - sb.s_bar * missing;
            delta_full += binomial(n - 1, j) - missing;
        }
        total += std::min(sat_pow(k, m - 1) - sb.s_bar, delta_small) + delta_full;
    }
    return {"concat.transitions", BoundKind::transition, total, echo_mnk(m, n, k)};
}

std::pair<BoundValue, BoundValue> star_bounds(const MeasureSet& a, int k) {
    const int m = a.m;
    const int f = a.f;
    std::string echo = echo_mnk(m, 0, k) + " f=" + std::to_string(f);
    if (f == 0) {
        return {{"star.states", BoundKind::state, 1, echo},
                {"star.transitions", BoundKind::transition, 0, echo}};
    }
    if (f == 1) {
        return {{"star.states", BoundKind::state, m, echo},
                {"star.transitions", BoundKind::transition, a.itc_total, echo}};
    }
    // Exponents can reach -1 when every state is final; compute in half-units
    // and floor at the end, which is exact for integer comparisons.
    auto pow2_halves = [](long long e) { return e >= -1 ? pow2(e + 1) : 0; };
    long long states2 = pow2_halves(m - f - 1) + pow2_halves(m - 2) - 2;
    long long states = states2 >= 0 ? states2 / 2 : -((-states2 + 1) / 2);

    long long sum_e = 0;
    long long sub2 = 0;
    for (const Symbol& sym : a.alphabet) {
        SymbolMeasures sm = a.symbol(sym);
        sum_e += pow2(sm.e);
        long long n_tau = static_cast<long long>(sm.t_bar) - sm.s_bar - sm.e_bar;
        sub2 += pow2_halves(n_tau);
        if (sm.s == 0) sub2 += pow2_halves(n_tau);  // tau in X
    }
    long long trans2 = pow2_halves(m - f - 1) * (k + sum_e) - sub2;
    long long trans = trans2 >= 0 ? trans2 / 2 : -((-trans2 + 1) / 2);
    return {{"star.states", BoundKind::state, states, echo},
            {"star.transitions", BoundKind::transition, trans, echo}};
}

ReversalBounds reversal_bounds(const MeasureSet& a, int k) {
    if (k < 2) throw std::invalid_argument("reversal_bounds: requires alphabet size >= 2");
    const int m = a.m;
    int l = 1;
    while (pow2(m - l) > sat_pow(k, l)) ++l;

    ReversalBounds out;
    out.l = l;
    std::string echo = echo_mnk(m, 0, k) + " l=" + std::to_string(l);
    out.states = {"reversal.states", BoundKind::state,
                  pow_sum(k, l - 1) + pow2(m - l) - 1, echo};

    auto lacking_prefix = [&](const Symbol& sym, int top) {
        // number of states in [0, top] without an outgoing sym-transition
        long long total = 0;
        auto it = a.t_at.find(sym);
        for (int i = 0; i <= top; ++i) {
            int has = (it != a.t_at.end() && i < static_cast<int>(it->second.size()))
                          ? it->second[i]
                          : 0;
            total += 1 - has;
        }
        return total;
    };
    auto reaches_state = [&](const Symbol& sym, int state) {
        auto it = a.in_at.find(sym);
        if (it == a.in_at.end()) return false;
        if (state < 0 || state >= static_cast<int>(it->second.size())) return false;
        return it->second[state] > 0;
    };

    long long trans = pow_sum(k, l) - 1 + static_cast<long long>(k) * pow2(m - l);
    if (m % 2 == 1) {
        for (const Symbol& sym : a.alphabet) {
            trans -= pow2(lacking_prefix(sym, l - 1) + 1);
        }
    } else {
        for (const Symbol& sym : a.alphabet) {
            long long c = reaches_state(sym, l) ? 0 : 1;
            trans -= pow2(lacking_prefix(sym, l - 2) + 1) - c;
        }
    }
    out.transitions = {"reversal.transitions", BoundKind::transition, trans, echo};
    return out;
}

long long union_witness_states(int m, int n) { return 1LL * m * n - 2; }

long long union_witness_transitions(int m, int n) {
    return 3LL * (1LL * m * n - n - m) + 2;
}

long long intersection_witness_states(int m, int n) {
    return 1LL * m * n - 2LL * (m + n) + 6;
}

long long intersection_witness_transitions(int m, int n) {
    long long inner = 2;
    for (int i = 1; i <= std::min(m, n) - 3; ++i) {
        inner += static_cast<long long>(m - 2 - i) * (n - 2 - i);
    }
    return static_cast<long long>(m - 2) * (n - 2) * inner + 2;
}

long long complement_witness_states(int isc_m) { return isc_m + 1LL; }

long long complement_witness_transitions(int isc_m, int k) {
    return static_cast<long long>(k) * (isc_m + 1);
}

long long concat_case1_witness_states(int m, int n) {
    return static_cast<long long>(m - n + 3) * pow2(n - 1) - 2;
}

long long concat_case1_witness_transitions(int n) { return 6 * pow2(n - 1) - 8; }

long long star_witness_states(int m) { return pow2(m - 2) + pow2(m - 3) - 1; }

long long star_witness_transitions(int m, int e) {
    return 9 * pow2(m - 3) - pow2(e) - 2;
}

long long reversal_witness_states(int m) {
    if (m % 2 == 0) {
        int p = m / 2;
        return pow2(p + 1) - 2;
    }
    int p = (m + 1) / 2;
    return 3 * pow2(p - 1) + 2;
}

long long reversal_witness_transitions(int m) {
    if (m % 2 == 0) {
        int p = m / 2;
        return pow2(p + 2) - 7;
    }
    int p = (m + 1) / 2;
    return 3 * pow2(p) - 8;
}

}  // namespace idfa
