#include "idfa/witnesses.hpp"

#include <stdexcept>

namespace idfa {

namespace {

Symbol sym(const char* base) { return Symbol(base); }
Symbol sym2(int i, int j) { return Symbol("a", {i, j}); }
Symbol sym1(int i) { return Symbol("a", {i}); }

void require_min(int value, int least, const char* what) {
    if (value < least) {
        throw std::invalid_argument(std::string(what) + " must be at least " +
                                    std::to_string(least));
    }
}

}  // namespace

std::pair<Dfa, Dfa> union_witness(int m, int n) {
    require_min(m, 2, "union witness m");
    require_min(n, 2, "union witness n");
    std::vector<Symbol> alphabet{sym("b"), sym("c")};
    for (int i = 1; i <= m - 1; ++i) {
        for (int j = 1; j <= n - 1; ++j) {
            if (i == m - 1 && j == n - 1) continue;
            alphabet.push_back(sym2(i, j));
        }
    }
    std::vector<Transition> ta;
    for (int i = 0; i <= m - 2; ++i) ta.push_back({i, sym("b"), i + 1});
    std::vector<Transition> tb;
    for (int i = 0; i <= n - 2; ++i) tb.push_back({i, sym("c"), i + 1});
    for (int i = 1; i <= m - 1; ++i) {
        for (int j = 1; j <= n - 1; ++j) {
            if (i == m - 1 && j == n - 1) continue;
            ta.push_back({0, sym2(i, j), i});
            tb.push_back({0, sym2(i, j), j});
        }
    }
    Dfa a = make_dfa(alphabet, m, {m - 1}, std::move(ta));
    Dfa b = make_dfa(alphabet, n, {n - 1}, std::move(tb));
    return {a, b};
}

std::pair<Dfa, Dfa> intersection_witness(int m, int n) {
    require_min(m, 2, "intersection witness m");
    require_min(n, 2, "intersection witness n");
    std::vector<Symbol> alphabet{sym2(m - 1, n - 1)};
    for (int i = 1; i <= m - 2; ++i) {
        for (int j = 1; j <= n - 2; ++j) alphabet.push_back(sym2(i, j));
    }
    std::vector<Transition> ta{{0, sym2(m - 1, n - 1), m - 1}};
    std::vector<Transition> tb{{0, sym2(m - 1, n - 1), n - 1}};
    for (int i = 1; i <= m - 2; ++i) {
        for (int j = 1; j <= n - 2; ++j) {
            for (int x = 0; x + i <= m - 1; ++x) ta.push_back({x, sym2(i, j), x + i});
            for (int x = 0; x + j <= n - 1; ++x) tb.push_back({x, sym2(i, j), x + j});
        }
    }
    Dfa a = make_dfa(alphabet, m, {m - 1}, std::move(ta));
    Dfa b = make_dfa(alphabet, n, {n - 1}, std::move(tb));
    return {a, b};
}

Dfa complement_witness(int m) {
    require_min(m, 1, "complement witness m");
    std::vector<Transition> trans;
    for (int i = 0; i < m; ++i) trans.push_back({i, sym("b"), i + 1});
    return make_dfa({sym("b")}, m + 1, {m}, std::move(trans));
}

std::pair<Dfa, Dfa> concat_witness_case1(int m, int n) {
    require_min(m, 2, "case-1 witness m");
    require_min(n, 2, "case-1 witness n");
    std::vector<Symbol> alphabet{sym("a"), sym("b")};
    std::vector<Transition> ta;
    std::vector<int> final_a;
    for (int i = 0; i <= m - 1; ++i) final_a.push_back(i);
    for (int i = 0; i <= m - 2; ++i) {
        ta.push_back({i, sym("a"), i + 1});
        ta.push_back({i, sym("b"), i + 1});
    }
    std::vector<Transition> tb{{0, sym("b"), 1}};
    for (int i = 1; i <= n - 2; ++i) {
        tb.push_back({i, sym("a"), i + 1});
        tb.push_back({i, sym("b"), i + 1});
    }
    Dfa a = make_dfa(alphabet, m, std::move(final_a), std::move(ta));
    Dfa b = make_dfa(alphabet, n, {n - 1}, std::move(tb));
    return {a, b};
}

std::pair<Dfa, Dfa> concat_witness_case2(int m, int n) {
    require_min(m, 2, "case-2 witness m");
    if (n <= m + 1) {
        throw std::invalid_argument("case-2 witness requires n > m+1");
    }
    std::vector<Symbol> alphabet{sym("b")};
    for (int i = 1; i <= n - 2; ++i) alphabet.push_back(sym1(i));
    std::vector<Transition> ta;
    std::vector<int> final_a;
    for (int i = 0; i <= m - 1; ++i) final_a.push_back(i);
    for (int i = 0; i <= m - 2; ++i) {
        for (const Symbol& s : alphabet) ta.push_back({i, s, i + 1});
    }
    std::vector<Transition> tb;
    for (int i = 0; i <= n - 2; ++i) tb.push_back({i, sym("b"), i + 1});
    for (int i = 1; i <= n - 2; ++i) {
        for (int j = 1; j <= n - 2; ++j) {
            if (i + j >= 2 && i + j <= n - 1) tb.push_back({i, sym1(j), i + j});
        }
    }
    for (int j = 2; j <= n - 2; ++j) tb.push_back({0, sym1(j), j});
    Dfa a = make_dfa(alphabet, m, std::move(final_a), std::move(ta));
    Dfa b = make_dfa(alphabet, n, {n - 1}, std::move(tb));
    return {a, b};
}

Dfa star_witness(int m) {
    require_min(m, 4, "star witness m");
    const bool even = m % 2 == 0;
    std::vector<Transition> trans;
    auto edge = [&](int i, std::initializer_list<const char*> labels) {
        for (const char* l : labels) trans.push_back({i, sym(l), i + 1});
    };
    if (even) {
        edge(0, {"a", "c"});
    } else {
        edge(0, {"a"});
    }
    for (int i = 1; i <= m - 2; ++i) {
        // Alternation phase differs by parity so the last edge
        // m-2 -> m-1 always carries {a, b, c}.
        bool full = even ? (i % 2 == 0) : (i % 2 == 1);
        if (full) {
            edge(i, {"a", "b", "c"});
        } else {
            edge(i, {"a", "b"});
        }
    }
    trans.push_back({0, sym("b"), m - 1});
    return make_dfa({sym("a"), sym("b"), sym("c")}, m, {m - 2, m - 1}, std::move(trans));
}

Dfa reversal_witness(int m) {
    require_min(m, 4, "reversal witness m");
    const int q = m / 2 - 1;  // the single b-only edge sits at q -> q+1
    std::vector<Transition> trans;
    for (int i = 0; i <= m - 2; ++i) {
        trans.push_back({i, sym("b"), i + 1});
        if (i != q) trans.push_back({i, sym("a"), i + 1});
    }
    std::vector<int> finals;
    for (int i = q + 1; i <= m - 1; ++i) finals.push_back(i);
    return make_dfa({sym("a"), sym("b")}, m, std::move(finals), std::move(trans));
}

}  // namespace idfa
