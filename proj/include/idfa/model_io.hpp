#pragma once

#include <stdexcept>
#include <string>

#include "idfa/automata.hpp"

namespace idfa {

// Line-oriented text format, '#' starts a comment line:
//
//   alphabet: b c a_1_1
//   states: 4
//   initial: 0
//   finals: 2 3
//   trans:
//   0 b 1
//   1 c 2
//
// serialize_dfa is deterministic (canonical symbol and state order) and
// parse(serialize(d)) is the identity up to isomorphism.

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
};

Dfa parse_dfa(const std::string& text);
std::string serialize_dfa(const Dfa& d);

Dfa load_dfa_file(const std::string& path);
void save_dfa_file(const std::string& path, const Dfa& d,
                   const std::vector<std::string>& label_comments = {});

}  // namespace idfa
