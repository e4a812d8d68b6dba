#include "idfa/ops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace idfa {

namespace {

void require_finite(const Dfa& d, const char* op) {
    require_valid(d);
    // Finite language <=> acyclic once trimmed (a completed chain still
    // qualifies: its sink is not co-accessible).
    if (!is_acyclic(trim(d))) {
        throw std::domain_error(std::string(op) + ": operand accepts an infinite language");
    }
}

std::string set_label(const std::set<int>& p) {
    std::string out = "{";
    bool first = true;
    for (int s : p) {
        if (!first) out += " ";
        out += std::to_string(s);
        first = false;
    }
    return out + "}";
}

// Pairs with -1 as the dead tag on either side.
Construction product_construction(const Dfa& a, const Dfa& b, bool is_union) {
    std::vector<Symbol> alphabet = united_alphabet(a.alphabet, b.alphabet);
    DeltaTable da(a);
    DeltaTable db(b);

    using Pair = std::pair<int, int>;
    std::map<Pair, int> ids;
    std::vector<Pair> order{{a.initial, b.initial}};
    ids.emplace(order[0], 0);
    std::vector<Transition> trans;
    std::vector<int> finals;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        auto [i, j] = order[qi];
        int cur = static_cast<int>(qi);
        bool fin_a = i >= 0 && a.is_final(i);
        bool fin_b = j >= 0 && b.is_final(j);
        if (is_union ? (fin_a || fin_b) : (fin_a && fin_b)) finals.push_back(cur);
        for (const Symbol& sym : alphabet) {
            int ai = a.symbol_index(sym);
            int bi = b.symbol_index(sym);
            int ni = (i >= 0 && ai >= 0) ? da.step(i, ai) : -1;
            int nj = (j >= 0 && bi >= 0) ? db.step(j, bi) : -1;
            if (is_union) {
                if (ni < 0 && nj < 0) continue;  // (dead,dead) is ignored
            } else {
                if (ni < 0 || nj < 0) continue;  // either dead kills the pair
            }
            auto [it, fresh] = ids.emplace(Pair{ni, nj}, static_cast<int>(order.size()));
            if (fresh) order.push_back({ni, nj});
            trans.push_back({cur, sym, it->second});
        }
    }
    Construction out;
    out.dfa = make_dfa(alphabet, static_cast<int>(order.size()), std::move(finals),
                       std::move(trans));
    out.labels.reserve(order.size());
    for (auto [i, j] : order) {
        out.labels.push_back("(" + (i < 0 ? std::string("-") : std::to_string(i)) + "," +
                             (j < 0 ? std::string("-") : std::to_string(j)) + ")");
    }
    return out;
}

}  // namespace

Construction union_construction(const Dfa& a, const Dfa& b) {
    require_finite(a, "union");
    require_finite(b, "union");
    return product_construction(a, b, /*is_union=*/true);
}

Dfa union_of(const Dfa& a, const Dfa& b) { return union_construction(a, b).dfa; }

Construction intersection_construction(const Dfa& a, const Dfa& b) {
    require_finite(a, "intersection");
    require_finite(b, "intersection");
    return product_construction(a, b, /*is_union=*/false);
}

Dfa intersection_of(const Dfa& a, const Dfa& b) {
    return intersection_construction(a, b).dfa;
}

Construction complement_construction(const Dfa& a) {
    require_valid(a);
    Dfa completed = complete_with_sink(a);
    std::vector<int> finals;
    for (int s = 0; s < completed.state_count; ++s) {
        if (!completed.is_final(s)) finals.push_back(s);
    }
    Construction out;
    out.dfa = make_dfa(completed.alphabet, completed.state_count, std::move(finals),
                       completed.transitions, completed.initial);
    for (int s = 0; s < a.state_count; ++s) out.labels.push_back(std::to_string(s));
    if (completed.state_count > a.state_count) out.labels.push_back("sink");
    return out;
}

Dfa complement_of(const Dfa& a) { return complement_construction(a).dfa; }

Construction concat_construction(const Dfa& a, const Dfa& b) {
    require_finite(a, "concatenation");
    require_finite(b, "concatenation");
    std::vector<Symbol> alphabet = united_alphabet(a.alphabet, b.alphabet);
    DeltaTable da(a);
    DeltaTable db(b);

    using State = std::pair<int, std::set<int>>;  // A state or -1, subset of B
    State start{a.initial, {}};
    if (a.is_final(a.initial)) start.second.insert(b.initial);

    std::map<State, int> ids;
    std::vector<State> order{start};
    ids.emplace(start, 0);
    std::vector<Transition> trans;
    std::vector<int> finals;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        State cur = order[qi];
        int cur_id = static_cast<int>(qi);
        bool fin = false;
        for (int p : cur.second)
            if (b.is_final(p)) fin = true;
        if (fin) finals.push_back(cur_id);
        for (const Symbol& sym : alphabet) {
            int ai = a.symbol_index(sym);
            int bi = b.symbol_index(sym);
            int ni = (cur.first >= 0 && ai >= 0) ? da.step(cur.first, ai) : -1;
            std::set<int> np;
            if (bi >= 0) {
                for (int p : cur.second) {
                    int t = db.step(p, bi);
                    if (t >= 0) np.insert(t);
                }
            }
            if (ni >= 0 && a.is_final(ni)) np.insert(b.initial);
            if (ni < 0 && np.empty()) continue;  // (dead, empty) pruned
            State nxt{ni, std::move(np)};
            auto [it, fresh] = ids.emplace(nxt, static_cast<int>(order.size()));
            if (fresh) order.push_back(it->first);
            trans.push_back({cur_id, sym, it->second});
        }
    }
    Construction out;
    out.dfa = make_dfa(alphabet, static_cast<int>(order.size()), std::move(finals),
                       std::move(trans));
    out.labels.reserve(order.size());
    for (const auto& [i, p] : order) {
        out.labels.push_back("(" + (i < 0 ? std::string("-") : std::to_string(i)) + "," +
                             set_label(p) + ")");
    }
    return out;
}

Dfa concat_of(const Dfa& a, const Dfa& b) { return concat_construction(a, b).dfa; }

Construction star_construction(const Dfa& a) {
    require_finite(a, "star");
    DeltaTable da(a);
    const int k = static_cast<int>(a.alphabet.size());

    std::set<int> start{a.initial};
    std::map<std::set<int>, int> ids;
    std::vector<std::set<int>> order{start};
    ids.emplace(start, 0);
    std::vector<Transition> trans;
    std::vector<int> finals;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        std::set<int> cur = order[qi];
        int cur_id = static_cast<int>(qi);
        bool fin = cur == start;  // the initial subset accepts the empty word
        for (int p : cur)
            if (a.is_final(p)) fin = true;
        if (fin) finals.push_back(cur_id);
        for (int sym = 0; sym < k; ++sym) {
            std::set<int> r;
            for (int p : cur) {
                int t = da.step(p, sym);
                if (t >= 0) r.insert(t);
            }
            if (r.empty()) continue;
            bool hits_final = false;
            for (int p : r)
                if (a.is_final(p)) hits_final = true;
            if (hits_final) r.insert(a.initial);
            auto [it, fresh] = ids.emplace(r, static_cast<int>(order.size()));
            if (fresh) order.push_back(it->first);
            trans.push_back({cur_id, a.alphabet[sym], it->second});
        }
    }
    Construction out;
    out.dfa = make_dfa(a.alphabet, static_cast<int>(order.size()), std::move(finals),
                       std::move(trans));
    out.labels.reserve(order.size());
    for (const auto& p : order) out.labels.push_back(set_label(p));
    return out;
}

Dfa star_of(const Dfa& a) { return star_construction(a).dfa; }

Construction reversal_construction(const Dfa& a) {
    require_finite(a, "reversal");
    Nfa rev;
    rev.alphabet = a.alphabet;
    rev.state_count = a.state_count;
    rev.initials = a.finals;
    rev.finals = {a.initial};
    rev.transitions.reserve(a.transitions.size());
    for (const Transition& t : a.transitions) {
        rev.transitions.push_back({t.to, t.symbol, t.from});
    }
    std::vector<std::set<int>> subsets;
    Construction out;
    out.dfa = determinize(rev, &subsets);
    out.labels.reserve(subsets.size());
    for (const auto& p : subsets) out.labels.push_back(set_label(p));
    return out;
}

Dfa reversal_of(const Dfa& a) { return reversal_construction(a).dfa; }

}  // namespace idfa
