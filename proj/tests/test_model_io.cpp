#include "doctest.h"
#include "idfa/harness.hpp"
#include "idfa/model_io.hpp"
#include "idfa/witnesses.hpp"

using namespace idfa;

TEST_CASE("serialize produces the documented layout") {
    Dfa chain = make_dfa({"b"}, 2, std::vector<int>{1}, {{0, "b", 1}});
    CHECK(serialize_dfa(chain) ==
          "alphabet: b\n"
          "states: 2\n"
          "initial: 0\n"
          "finals: 1\n"
          "trans:\n"
          "0 b 1\n");
    // stable across invocations
    CHECK(serialize_dfa(chain) == serialize_dfa(chain));
}

TEST_CASE("parse accepts comments and blank lines") {
    Dfa d = parse_dfa(
        "# witness automaton\n"
        "alphabet: b c a_1_1\n"
        "\n"
        "states: 4\n"
        "initial: 0\n"
        "finals: 2 3\n"
        "trans:\n"
        "0 b 1\n"
        "1 c 2\n"
        "# trailing comment\n"
        "1 a_1_1 3\n");
    CHECK(d.state_count == 4);
    CHECK(d.finals == std::vector<int>{2, 3});
    CHECK(d.transitions.size() == 3);
}

TEST_CASE("parse rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_dfa("alphabet: b\nstates: x\ninitial: 0\nfinals:\ntrans:\n"),
                    ParseError);
    try {
        parse_dfa("alphabet: b\nstates: 2\ninitial: 0\nfinals: 1\ntrans:\n0 b\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 6);
    }
    // duplicate targets for one (state, symbol) pair
    CHECK_THROWS_WITH_AS(
        parse_dfa("alphabet: b\nstates: 3\ninitial: 0\nfinals: 2\ntrans:\n0 b 1\n0 b 2\n"),
        doctest::Contains("nondeterministic"), ParseError);
    // unknown symbol in a transition
    CHECK_THROWS_WITH_AS(
        parse_dfa("alphabet: b\nstates: 2\ninitial: 0\nfinals: 1\ntrans:\n0 c 1\n"),
        doctest::Contains("not in alphabet"), ParseError);
    // missing header line
    CHECK_THROWS_AS(parse_dfa("states: 1\ninitial: 0\nfinals:\ntrans:\n"), ParseError);
}

TEST_CASE("round trip is the identity up to isomorphism") {
    auto [a, b] = union_witness(3, 3);
    CHECK(is_isomorphic(parse_dfa(serialize_dfa(a)), a));
    CHECK(is_isomorphic(parse_dfa(serialize_dfa(b)), b));

    RandomSource rng(61);
    for (int i = 0; i < 1000; ++i) {
        Dfa d = random_finite_dfa(rng);
        Dfa back = parse_dfa(serialize_dfa(d));
        CHECK(back == d);  // canonical outputs round-trip exactly
    }
}

TEST_CASE("empty alphabet and empty finals") {
    Dfa d = parse_dfa("alphabet:\nstates: 1\ninitial: 0\nfinals:\ntrans:\n");
    CHECK(d.state_count == 1);
    CHECK(d.alphabet.empty());
    CHECK(d.finals.empty());
    CHECK(is_isomorphic(parse_dfa(serialize_dfa(d)), d));
}
