#include "doctest.h"
#include "idfa/harness.hpp"
#include "idfa/measures.hpp"
#include "idfa/ops.hpp"
#include "idfa/oracle.hpp"
#include "idfa/witnesses.hpp"

using namespace idfa;

TEST_CASE("measure on {b}") {
    Dfa d = minimal_dfa_from_words({{Symbol("b")}, {parse_word("b")}});
    MeasureSet ms = measure(d);
    CHECK(ms.m == 2);
    CHECK(ms.itc_total == 1);
    CHECK(ms.f == 1);
    SymbolMeasures b = ms.symbol(Symbol("b"));
    CHECK(b.s == 1);
    CHECK(b.a == 1);
    CHECK(b.e == 0);
    CHECK(ms.pre_dead == 1);
    CHECK(ms.automaton_level == 1);
}

TEST_CASE("measure on {eps}") {
    Dfa d = minimal_dfa_from_words({{Symbol("b")}, {Word{}}});
    MeasureSet ms = measure(d);
    CHECK(ms.m == 1);
    CHECK(ms.itc_total == 0);
    CHECK(ms.f == 1);
    CHECK(ms.pre_dead == 0);
    CHECK(ms.automaton_level == 0);
}

TEST_CASE("measure on the star witness") {
    // m=6: finals are m-2 and m-1; only m-2 has out-transitions, on a, b, c
    MeasureSet ms = measure(star_witness(6));
    CHECK(ms.f == 2);
    CHECK(ms.symbol(Symbol("a")).e == 1);
    CHECK(ms.symbol(Symbol("b")).e == 1);
    CHECK(ms.symbol(Symbol("c")).e == 1);
}

TEST_CASE("measure minimizes non-minimal input first") {
    Dfa redundant = make_dfa({"b"}, 3, std::vector<int>{1, 2},
                             {{0, "b", 1}, {1, "b", 2}, {0, "b", 1}});
    // {b, bb}: minimal has 3 states; but a bloated DFA for {b} must shrink
    Dfa bloated = make_dfa({"b"}, 4, std::vector<int>{1, 3},
                           {{0, "b", 1}, {2, "b", 3}});
    CHECK(measure(bloated).m == 2);
    CHECK(measure(redundant).m == 3);
}

TEST_CASE("levels and the correction instance") {
    Dfa w = complement_witness(3);
    CHECK(level(w, 0) == 0);
    CHECK(level(w, 3) == 3);

    // concatenation of the two-final-chain pair at (3,5): the minimized
    // result has four states of level 4, beyond the left operand's deepest
    // level of 2 (this is what breaks the k^(m-1) cap).
    auto [a, b] = concat_witness_case1(3, 5);
    Dfa m = minimize(concat_of(a, b));
    MeasureSet ms = measure(m);
    int deep = 0, deepest = 0;
    for (int s = 0; s < ms.m; ++s) {
        deepest = std::max(deepest, ms.levels[s]);
        if (ms.levels[s] == 4) ++deep;
    }
    CHECK(deepest == 4);
    CHECK(deep == 4);
    CHECK(deepest > 3 - 1);
}

TEST_CASE("per symbol transition counts add up") {
    RandomSource rng(17);
    for (int i = 0; i < 200; ++i) {
        MeasureSet ms = measure(random_finite_dfa(rng));
        int sum = 0;
        for (const Symbol& s : ms.alphabet) sum += ms.symbol(s).itc;
        CHECK(sum == ms.itc_total);
        // complements are consistent
        for (const Symbol& s : ms.alphabet) {
            SymbolMeasures sm = ms.symbol(s);
            CHECK(sm.s_bar == 1 - sm.s);
            CHECK(sm.e_bar == ms.f - sm.e);
            CHECK(sm.t_bar == ms.m - sm.itc);
        }
        // f_at is monotone and ends at f
        for (int j = 1; j <= ms.m; ++j) CHECK(ms.f_at[j] >= ms.f_at[j - 1]);
        CHECK(ms.f_at[ms.m] == ms.f);
    }
}

TEST_CASE("nothing enters the initial state of a minimal finite DFA") {
    RandomSource rng(19);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        MeasureSet ms = measure(random_finite_dfa(rng));
        if (ms.f == 0) continue;
        ++checked;
        int indeg = 0;
        for (const Symbol& s : ms.alphabet) indeg += ms.in_at.at(s)[0];
        CHECK(indeg == 0);
        // level bound in a trimmed acyclic automaton
        for (int st = 0; st < ms.m; ++st) CHECK(ms.levels[st] <= ms.m - 1);
        // exactly one pre-dead state
        CHECK(ms.pre_dead.has_value());
    }
    CHECK(checked > 100);
}
