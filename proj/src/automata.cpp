#include "idfa/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace idfa {

bool Dfa::is_final(int s) const {
    return std::binary_search(finals.begin(), finals.end(), s);
}

int Dfa::symbol_index(const Symbol& s) const {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), s);
    if (it == alphabet.end() || !(*it == s)) return -1;
    return static_cast<int>(it - alphabet.begin());
}

std::optional<int> Dfa::step(int state, const Symbol& s) const {
    for (const Transition& t : transitions) {
        if (t.from == state && t.symbol == s) return t.to;
    }
    return std::nullopt;
}

Dfa make_dfa(std::vector<Symbol> alphabet, int states, std::vector<int> finals,
             std::vector<Transition> transitions, int initial) {
    Dfa d;
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    d.alphabet = std::move(alphabet);
    d.state_count = states;
    d.initial = initial;
    std::sort(finals.begin(), finals.end());
    finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
    d.finals = std::move(finals);
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());
    d.transitions = std::move(transitions);
    return d;
}

Dfa make_dfa(const std::vector<std::string>& alphabet, int states,
             const std::vector<int>& finals,
             const std::vector<std::tuple<int, std::string, int>>& transitions,
             int initial) {
    std::vector<Symbol> syms;
    syms.reserve(alphabet.size());
    for (const auto& a : alphabet) syms.push_back(Symbol::parse(a));
    std::vector<Transition> trans;
    trans.reserve(transitions.size());
    for (const auto& [f, s, t] : transitions) trans.push_back({f, Symbol::parse(s), t});
    return make_dfa(std::move(syms), states, finals, std::move(trans), initial);
}

Dfa empty_language_dfa(std::vector<Symbol> alphabet) {
    return make_dfa(std::move(alphabet), 1, {}, {});
}

std::vector<Symbol> united_alphabet(const std::vector<Symbol>& a,
                                    const std::vector<Symbol>& b) {
    std::vector<Symbol> out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DeltaTable::DeltaTable(const Dfa& d) : k(static_cast<int>(d.alphabet.size())) {
    next.assign(static_cast<std::size_t>(d.state_count) * std::max(k, 1), -1);
    for (const Transition& t : d.transitions) {
        int a = d.symbol_index(t.symbol);
        next[static_cast<std::size_t>(t.from) * k + a] = t.to;
    }
}

std::vector<std::string> validate(const Dfa& d) {
    std::vector<std::string> out;
    if (d.state_count < 1) out.push_back("state count must be at least 1");
    if (d.initial < 0 || d.initial >= d.state_count) out.push_back("initial state out of range");
    for (std::size_t i = 1; i < d.alphabet.size(); ++i) {
        if (d.alphabet[i - 1] == d.alphabet[i]) {
            out.push_back("duplicate symbol " + d.alphabet[i].str() + " in alphabet");
        }
    }
    for (int f : d.finals) {
        if (f < 0 || f >= d.state_count) {
            out.push_back("final state " + std::to_string(f) + " out of range");
        }
    }
    std::map<std::pair<int, Symbol>, int> seen;
    for (const Transition& t : d.transitions) {
        if (t.from < 0 || t.from >= d.state_count) {
            out.push_back("transition source " + std::to_string(t.from) + " out of range");
        }
        if (t.to < 0 || t.to >= d.state_count) {
            out.push_back("transition target " + std::to_string(t.to) + " out of range");
        }
        if (d.symbol_index(t.symbol) < 0) {
            out.push_back("transition symbol " + t.symbol.str() + " not in alphabet");
        }
        auto key = std::make_pair(t.from, t.symbol);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(key, t.to);
        } else if (it->second == t.to) {
            out.push_back("duplicate transition (" + std::to_string(t.from) + "," +
                          t.symbol.str() + "," + std::to_string(t.to) + ")");
        } else {
            out.push_back("nondeterministic on (" + std::to_string(t.from) + "," +
                          t.symbol.str() + ")");
        }
    }
    return out;
}

bool is_valid(const Dfa& d) { return validate(d).empty(); }

void require_valid(const Dfa& d) {
    auto diags = validate(d);
    if (diags.empty()) return;
    std::string msg = "invalid DFA:";
    for (const auto& s : diags) msg += " " + s + ";";
    throw std::invalid_argument(msg);
}

namespace {

std::vector<char> accessible_states(const Dfa& d) {
    std::vector<char> seen(d.state_count, 0);
    std::deque<int> queue{d.initial};
    seen[d.initial] = 1;
    DeltaTable dt(d);
    const int k = static_cast<int>(d.alphabet.size());
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int a = 0; a < k; ++a) {
            int t = dt.step(s, a);
            if (t >= 0 && !seen[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
        }
    }
    return seen;
}

std::vector<char> coaccessible_states(const Dfa& d) {
    std::vector<std::vector<int>> rev(d.state_count);
    for (const Transition& t : d.transitions) rev[t.to].push_back(t.from);
    std::vector<char> seen(d.state_count, 0);
    std::deque<int> queue;
    for (int f : d.finals) {
        if (!seen[f]) {
            seen[f] = 1;
            queue.push_back(f);
        }
    }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int p : rev[s]) {
            if (!seen[p]) {
                seen[p] = 1;
                queue.push_back(p);
            }
        }
    }
    return seen;
}

}  // namespace

Dfa trim(const Dfa& d) {
    require_valid(d);
    auto acc = accessible_states(d);
    auto coacc = coaccessible_states(d);
    if (!coacc[d.initial] || !acc[d.initial]) return empty_language_dfa(d.alphabet);

    // BFS over kept states assigns the canonical numbering directly.
    std::vector<int> renum(d.state_count, -1);
    std::vector<int> order;
    DeltaTable dt(d);
    const int k = static_cast<int>(d.alphabet.size());
    renum[d.initial] = 0;
    order.push_back(d.initial);
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int s = order[qi];
        for (int a = 0; a < k; ++a) {
            int t = dt.step(s, a);
            if (t >= 0 && acc[t] && coacc[t] && renum[t] < 0) {
                renum[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }

    std::vector<int> finals;
    for (int f : d.finals)
        if (renum[f] >= 0) finals.push_back(renum[f]);
    std::vector<Transition> trans;
    for (const Transition& t : d.transitions) {
        if (renum[t.from] >= 0 && renum[t.to] >= 0) {
            trans.push_back({renum[t.from], t.symbol, renum[t.to]});
        }
    }
    return make_dfa(d.alphabet, static_cast<int>(order.size()), std::move(finals),
                    std::move(trans));
}

bool is_acyclic(const Dfa& d) {
    require_valid(d);
    auto acc = accessible_states(d);
    DeltaTable dt(d);
    const int k = static_cast<int>(d.alphabet.size());
    // Iterative DFS, colors: 0 unseen, 1 on stack, 2 done.
    std::vector<char> color(d.state_count, 0);
    for (int root = 0; root < d.state_count; ++root) {
        if (!acc[root] || color[root]) continue;
        std::vector<std::pair<int, int>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [s, a] = stack.back();
            if (a >= k) {
                color[s] = 2;
                stack.pop_back();
                continue;
            }
            int t = dt.step(s, a++);
            if (t < 0) continue;
            if (color[t] == 1) return false;
            if (color[t] == 0) {
                color[t] = 1;
                stack.push_back({t, 0});
            }
        }
    }
    return true;
}

bool accepts(const Dfa& d, const Word& w) {
    DeltaTable dt(d);
    int s = d.initial;
    for (const Symbol& sym : w) {
        int a = d.symbol_index(sym);
        if (a < 0) {
            throw std::invalid_argument("word symbol " + sym.str() + " not in alphabet");
        }
        s = dt.step(s, a);
        if (s < 0) return false;
    }
    return d.is_final(s);
}

FiniteLanguage enumerate_language(const Dfa& d) {
    Dfa t = trim(d);
    if (!is_acyclic(t)) throw std::domain_error("infinite language: automaton is cyclic");
    FiniteLanguage lang;
    lang.alphabet = d.alphabet;
    DeltaTable dt(t);
    const int k = static_cast<int>(t.alphabet.size());
    Word word;
    // Trimmed acyclic automaton: plain DFS path enumeration terminates.
    auto walk = [&](auto&& self, int s) -> void {
        if (t.is_final(s)) lang.words.insert(word);
        for (int a = 0; a < k; ++a) {
            int nxt = dt.step(s, a);
            if (nxt < 0) continue;
            word.push_back(t.alphabet[a]);
            self(self, nxt);
            word.pop_back();
        }
    };
    if (t.state_count > 0 && !t.finals.empty()) walk(walk, t.initial);
    return lang;
}

Dfa determinize(const Nfa& n, std::vector<std::set<int>>* subsets_out) {
    // Keep only states that can reach a final state.
    std::vector<std::vector<int>> rev(n.state_count);
    for (const Transition& t : n.transitions) rev[t.to].push_back(t.from);
    std::vector<char> useful(n.state_count, 0);
    std::deque<int> queue;
    for (int f : n.finals) {
        if (f >= 0 && f < n.state_count && !useful[f]) {
            useful[f] = 1;
            queue.push_back(f);
        }
    }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int p : rev[s])
            if (!useful[p]) {
                useful[p] = 1;
                queue.push_back(p);
            }
    }

    std::vector<Symbol> alphabet = n.alphabet;
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    std::set<int> start;
    for (int i : n.initials)
        if (useful[i]) start.insert(i);
    if (start.empty()) {
        if (subsets_out) *subsets_out = {{}};
        return empty_language_dfa(alphabet);
    }

    // delta[s][a] = sorted targets
    std::map<std::pair<int, Symbol>, std::set<int>> delta;
    for (const Transition& t : n.transitions) {
        if (useful[t.from] && useful[t.to]) delta[{t.from, t.symbol}].insert(t.to);
    }
    std::set<int> nfa_finals(n.finals.begin(), n.finals.end());

    std::map<std::set<int>, int> ids;
    std::vector<std::set<int>> order{start};
    ids.emplace(start, 0);
    std::vector<Transition> trans;
    std::vector<int> finals;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        std::set<int> cur = order[qi];
        int cur_id = static_cast<int>(qi);
        bool fin = false;
        for (int s : cur)
            if (nfa_finals.count(s)) fin = true;
        if (fin) finals.push_back(cur_id);
        for (const Symbol& a : alphabet) {
            std::set<int> tgt;
            for (int s : cur) {
                auto it = delta.find({s, a});
                if (it != delta.end()) tgt.insert(it->second.begin(), it->second.end());
            }
            if (tgt.empty()) continue;  // the dead subset is never materialized
            auto [it, fresh] = ids.emplace(tgt, static_cast<int>(order.size()));
            if (fresh) order.push_back(tgt);
            trans.push_back({cur_id, a, it->second});
        }
    }
    if (subsets_out) *subsets_out = order;
    return make_dfa(alphabet, static_cast<int>(order.size()), std::move(finals),
                    std::move(trans));
}

Dfa renumber_bfs(const Dfa& d) {
    DeltaTable dt(d);
    const int k = static_cast<int>(d.alphabet.size());
    std::vector<int> renum(d.state_count, -1);
    std::vector<int> order{d.initial};
    renum[d.initial] = 0;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int s = order[qi];
        for (int a = 0; a < k; ++a) {
            int t = dt.step(s, a);
            if (t >= 0 && renum[t] < 0) {
                renum[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }
    for (int s = 0; s < d.state_count; ++s) {
        if (renum[s] < 0) {
            renum[s] = static_cast<int>(order.size());
            order.push_back(s);
        }
    }
    std::vector<int> finals;
    for (int f : d.finals) finals.push_back(renum[f]);
    std::vector<Transition> trans;
    for (const Transition& t : d.transitions) {
        trans.push_back({renum[t.from], t.symbol, renum[t.to]});
    }
    return make_dfa(d.alphabet, d.state_count, std::move(finals), std::move(trans), 0);
}

Dfa minimize(const Dfa& d) {
    Dfa t = trim(d);
    if (t.finals.empty()) return t;
    const int n = t.state_count;
    const int k = static_cast<int>(t.alphabet.size());
    DeltaTable dt(t);

    // Moore refinement over trimmed states; a missing target refines against
    // the implicit dead block (-1). Trimmed states never merge into it.
    std::vector<int> block(n);
    for (int s = 0; s < n; ++s) block[s] = t.is_final(s) ? 1 : 0;
    int nblocks = 0;
    {
        std::set<int> distinct(block.begin(), block.end());
        nblocks = static_cast<int>(distinct.size());
    }
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_block(n);
        for (int s = 0; s < n; ++s) {
            std::vector<int> sig;
            sig.reserve(k + 1);
            sig.push_back(block[s]);
            for (int a = 0; a < k; ++a) {
                int tgt = dt.step(s, a);
                sig.push_back(tgt < 0 ? -1 : block[tgt]);
            }
            auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
            next_block[s] = it->second;
        }
        int count = static_cast<int>(sig_ids.size());
        block = std::move(next_block);
        if (count == nblocks) break;
        nblocks = count;
    }

    std::vector<int> rep(nblocks, -1);
    for (int s = 0; s < n; ++s)
        if (rep[block[s]] < 0) rep[block[s]] = s;
    std::vector<int> finals;
    std::vector<Transition> trans;
    for (int b = 0; b < nblocks; ++b) {
        int s = rep[b];
        if (t.is_final(s)) finals.push_back(b);
        for (int a = 0; a < k; ++a) {
            int tgt = dt.step(s, a);
            if (tgt >= 0) trans.push_back({b, t.alphabet[a], block[tgt]});
        }
    }
    Dfa quotient = make_dfa(t.alphabet, nblocks, std::move(finals), std::move(trans),
                            block[t.initial]);
    return renumber_bfs(quotient);
}

bool is_isomorphic(const Dfa& a, const Dfa& b) {
    return renumber_bfs(a) == renumber_bfs(b);
}

Dfa complete_with_sink(const Dfa& d) {
    DeltaTable dt(d);
    const int k = static_cast<int>(d.alphabet.size());
    bool missing = false;
    for (int s = 0; s < d.state_count && !missing; ++s) {
        for (int a = 0; a < k; ++a) {
            if (dt.step(s, a) < 0) {
                missing = true;
                break;
            }
        }
    }
    if (!missing) return d;
    const int sink = d.state_count;
    std::vector<Transition> trans = d.transitions;
    for (int s = 0; s <= sink; ++s) {
        for (int a = 0; a < k; ++a) {
            int tgt = s < sink ? dt.step(s, a) : -1;
            if (tgt < 0) trans.push_back({s, d.alphabet[a], sink});
        }
    }
    return make_dfa(d.alphabet, d.state_count + 1, d.finals, std::move(trans), d.initial);
}

std::vector<int> state_levels(const Dfa& d) {
    DeltaTable dt(d);
    const int k = static_cast<int>(d.alphabet.size());
    std::vector<int> dist(d.state_count, -1);
    std::deque<int> queue{d.initial};
    dist[d.initial] = 0;
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int a = 0; a < k; ++a) {
            int t = dt.step(s, a);
            if (t >= 0 && dist[t] < 0) {
                dist[t] = dist[s] + 1;
                queue.push_back(t);
            }
        }
    }
    return dist;
}

int level(const Dfa& d, int state) {
    if (state < 0 || state >= d.state_count) {
        throw std::invalid_argument("state out of range");
    }
    int lvl = state_levels(d)[state];
    if (lvl < 0) throw std::invalid_argument("state " + std::to_string(state) + " is inaccessible");
    return lvl;
}

}  // namespace idfa
