#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace idfa {

// Alphabet letter: a lowercase name, optionally carrying integer indices
// (a, b, a_1, a_2_5). Token grammar: [a-z]+(_[0-9]+)*.
// Canonical order puts atomic letters (no indices) first, lexicographically,
// then indexed letters by (name, index tuple).
struct Symbol {
    std::string base;
    std::vector<int> indices;

    Symbol() = default;
    explicit Symbol(std::string b, std::vector<int> idx = {})
        : base(std::move(b)), indices(std::move(idx)) {}

    bool atomic() const { return indices.empty(); }

    std::string str() const;

    static Symbol parse(std::string_view token);

    bool operator==(const Symbol& o) const = default;

    std::strong_ordering operator<=>(const Symbol& o) const {
        const int fam = atomic() ? 0 : 1;
        const int ofam = o.atomic() ? 0 : 1;
        if (auto c = fam <=> ofam; c != std::strong_ordering::equal) return c;
        if (auto c = base <=> o.base; c != std::strong_ordering::equal) return c;
        return indices <=> o.indices;
    }
};

using Word = std::vector<Symbol>;

// "a b a_1_2" <-> Word; used by tests and error messages.
std::string word_str(const Word& w);
Word parse_word(std::string_view spaced);

}  // namespace idfa
