#include "doctest.h"
#include "idfa/harness.hpp"
#include "idfa/measures.hpp"
#include "idfa/ops.hpp"
#include "idfa/oracle.hpp"
#include "idfa/witnesses.hpp"
#include "set_ops.hpp"

using namespace idfa;
using namespace idfa::testset;

namespace {

FiniteLanguage words_of(const Dfa& d) { return enumerate_language(d); }

Dfa dfa_for(std::initializer_list<const char*> words,
            std::initializer_list<const char*> alphabet) {
    FiniteLanguage lang;
    for (const char* a : alphabet) lang.alphabet.push_back(Symbol::parse(a));
    for (const char* w : words) lang.words.insert(parse_word(w));
    return minimal_dfa_from_words(lang);
}

}  // namespace

TEST_CASE("union") {
    auto [a2, b2] = union_witness(2, 2);
    Dfa u2 = minimize(union_of(a2, b2));
    CHECK(u2.state_count == 2);
    CHECK(u2.transitions.size() == 2);

    auto [a3, b3] = union_witness(2, 3);
    Dfa u3 = minimize(union_of(a3, b3));
    CHECK(u3.state_count == 4);
    CHECK(u3.transitions.size() == 5);

    CHECK(is_isomorphic(minimize(union_of(a3, a3)), minimize(a3)));

    CHECK_THROWS(union_of(complement_of(a3), b3));

    // the dead pair never materializes
    Construction c = union_construction(a3, b3);
    for (const std::string& label : c.labels) CHECK(label != "(-,-)");
}

TEST_CASE("intersection") {
    auto [a, b] = intersection_witness(3, 3);
    CHECK(words_of(a).words ==
          std::set<Word>{parse_word("a_1_1 a_1_1"), parse_word("a_2_2")});
    Dfa i = minimize(intersection_of(a, b));
    CHECK(i.state_count == 3);

    Dfa db = dfa_for({"b"}, {"b", "c"});
    Dfa dc = dfa_for({"c"}, {"b", "c"});
    Dfa disjoint = minimize(intersection_of(db, dc));
    CHECK(disjoint.state_count == 1);
    CHECK(disjoint.finals.empty());

    CHECK(is_isomorphic(minimize(intersection_of(a, a)), minimize(a)));
}

TEST_CASE("complement") {
    // {b^3} over {b}: 5 states, 5 transitions after minimizing
    Dfa w = complement_witness(3);
    Dfa c = minimize(complement_of(w));
    CHECK(c.state_count == 5);
    CHECK(c.transitions.size() == 5);
    CHECK(bounded_words(c, 8).words.count(Word{}) == 1);
    CHECK(bounded_words(c, 8).words.count(parse_word("b b b")) == 0);

    // complement of the empty language accepts everything
    Dfa empty = empty_language_dfa({Symbol("b")});
    Dfa all = minimize(complement_of(empty));
    CHECK(all.state_count == 1);
    CHECK(all.finals == std::vector<int>{0});
    CHECK(all.transitions.size() == 1);

    // involution up to bounded length
    RandomSource rng(37);
    for (int i = 0; i < 50; ++i) {
        Dfa d = random_finite_dfa(rng);
        Dfa twice = complement_of(complement_of(d));
        int len = isc(d) + 2;
        CHECK(bounded_words(twice, len).words == bounded_words(d, len).words);
    }
}

TEST_CASE("concatenation") {
    Dfa eps = dfa_for({""}, {"a", "b"});
    Dfa any = dfa_for({"a", "b b"}, {"a", "b"});
    CHECK(is_isomorphic(minimize(concat_of(eps, any)), minimize(any)));

    // the (3,5) instance: 18 live construction states
    auto [a, b] = concat_witness_case1(3, 5);
    Construction c = concat_construction(a, b);
    CHECK(c.dfa.state_count == 18);
    CHECK(is_isomorphic(minimize(c.dfa), c.dfa));  // already minimal here

    // case 1 at (3,3): 10 states, 16 transitions
    auto [a33, b33] = concat_witness_case1(3, 3);
    Dfa m33 = minimize(concat_of(a33, b33));
    CHECK(m33.state_count == 10);
    CHECK(m33.transitions.size() == 16);

    // whenever the left part of a construction state is final, B's initial
    // is in the right part
    for (std::size_t s = 0; s < c.labels.size(); ++s) {
        const std::string& label = c.labels[s];
        auto comma = label.find(',');
        std::string left = label.substr(1, comma - 1);
        if (left == "-") continue;
        if (a.is_final(std::stoi(left))) {
            CHECK(label.find("{0") != std::string::npos);
        }
    }
}

TEST_CASE("star") {
    Dfa eps = dfa_for({""}, {"b"});
    Dfa s1 = minimize(star_of(eps));
    CHECK(s1.state_count == 1);
    CHECK(s1.finals == std::vector<int>{0});
    CHECK(s1.transitions.empty());
    Dfa none = empty_language_dfa({Symbol("b")});
    CHECK(is_isomorphic(minimize(star_of(none)), s1));

    // {b}* = b*
    Dfa b = dfa_for({"b"}, {"b"});
    Dfa sb = minimize(star_of(b));
    CHECK(sb.state_count == 1);
    CHECK(sb.transitions.size() == 1);
    WordSet expect = set_star_bounded({"0"}, 5);
    CHECK(encode_all(bounded_words(sb, 5), b.alphabet) == expect);

    // witness m=4 minimizes to 2^(m-2)+2^(m-3)-1 = 5 states
    Dfa w = star_witness(4);
    CHECK(minimize(star_of(w)).state_count == 5);
}

TEST_CASE("reversal") {
    Dfa pal = dfa_for({"a b a"}, {"a", "b"});
    CHECK(words_of(minimize(reversal_of(pal))).words == words_of(pal).words);

    Dfa ab = dfa_for({"a b"}, {"a", "b"});
    CHECK(words_of(minimize(reversal_of(ab))).words == std::set<Word>{parse_word("b a")});

    Dfa w = reversal_witness(4);
    Dfa r = minimize(reversal_of(w));
    CHECK(r.state_count == 6);
    CHECK(r.transitions.size() == 9);

    RandomSource rng(41);
    for (int i = 0; i < 50; ++i) {
        Dfa d = random_finite_dfa(rng);
        Dfa twice = minimize(reversal_of(reversal_of(d)));
        CHECK(words_of(twice).words == words_of(d).words);
    }
}

TEST_CASE("operation languages match the set-level operations") {
    RandomSource rng(43);
    for (int i = 0; i < 150; ++i) {
        Dfa d1 = random_finite_dfa(rng);
        Dfa d2 = random_finite_dfa(rng);
        auto alpha = united_alphabet(d1.alphabet, d2.alphabet);
        WordSet w1 = encode_all(words_of(d1), alpha);
        WordSet w2 = encode_all(words_of(d2), alpha);

        CHECK(encode_all(words_of(union_of(d1, d2)), alpha) == set_union(w1, w2));
        CHECK(encode_all(words_of(intersection_of(d1, d2)), alpha) ==
              set_intersection(w1, w2));
        CHECK(encode_all(words_of(concat_of(d1, d2)), alpha) == set_concat(w1, w2));
        CHECK(encode_all(words_of(reversal_of(d1)), alpha) == set_reverse(w1));
    }
}
