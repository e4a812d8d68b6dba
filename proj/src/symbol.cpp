#include "idfa/symbol.hpp"

#include <cctype>
#include <stdexcept>

namespace idfa {

std::string Symbol::str() const {
    std::string out = base;
    for (int i : indices) {
        out += '_';
        out += std::to_string(i);
    }
    return out;
}

Symbol Symbol::parse(std::string_view token) {
    std::size_t pos = 0;
    std::string name;
    while (pos < token.size() && token[pos] >= 'a' && token[pos] <= 'z') {
        name += token[pos++];
    }
    if (name.empty()) {
        throw std::invalid_argument("bad symbol token '" + std::string(token) +
                                    "': expected [a-z]+(_[0-9]+)*");
    }
    std::vector<int> idx;
    while (pos < token.size()) {
        if (token[pos] != '_') {
            throw std::invalid_argument("bad symbol token '" + std::string(token) + "'");
        }
        ++pos;
        if (pos >= token.size() || !std::isdigit(static_cast<unsigned char>(token[pos]))) {
            throw std::invalid_argument("bad symbol token '" + std::string(token) +
                                        "': index digits expected after '_'");
        }
        long v = 0;
        while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
            v = v * 10 + (token[pos++] - '0');
            if (v > 1000000) throw std::invalid_argument("symbol index too large");
        }
        idx.push_back(static_cast<int>(v));
    }
    return Symbol(std::move(name), std::move(idx));
}

std::string word_str(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].str();
    }
    return out;
}

Word parse_word(std::string_view spaced) {
    Word w;
    std::size_t pos = 0;
    while (pos < spaced.size()) {
        while (pos < spaced.size() && spaced[pos] == ' ') ++pos;
        std::size_t end = pos;
        while (end < spaced.size() && spaced[end] != ' ') ++end;
        if (end > pos) w.push_back(Symbol::parse(spaced.substr(pos, end - pos)));
        pos = end;
    }
    return w;
}

}  // namespace idfa
