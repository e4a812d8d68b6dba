#include "idfa/model_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace idfa {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool content_line(const std::string& s) {
    for (char c : s) {
        if (c == '#') return false;
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

int parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace

Dfa parse_dfa(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int line_no = 0;

    struct Line {
        int no;
        std::string text;
    };
    std::vector<Line> lines;
    while (std::getline(is, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (content_line(raw)) lines.push_back({line_no, raw});
    }

    auto expect_key = [&](std::size_t idx, const std::string& key) -> std::pair<int, std::string> {
        if (idx >= lines.size()) {
            throw ParseError(line_no, "missing '" + key + ":' line");
        }
        const auto& ln = lines[idx];
        auto pos = ln.text.find(':');
        if (pos == std::string::npos ||
            split_ws(ln.text.substr(0, pos)) != std::vector<std::string>{key}) {
            throw ParseError(ln.no, "expected '" + key + ":' line");
        }
        return {ln.no, ln.text.substr(pos + 1)};
    };

    auto [al_line, al_rest] = expect_key(0, "alphabet");
    std::vector<Symbol> alphabet;
    for (const std::string& tok : split_ws(al_rest)) {
        try {
            alphabet.push_back(Symbol::parse(tok));
        } catch (const std::exception& e) {
            throw ParseError(al_line, e.what());
        }
    }

    auto [st_line, st_rest] = expect_key(1, "states");
    auto st_toks = split_ws(st_rest);
    if (st_toks.size() != 1) throw ParseError(st_line, "expected a single state count");
    int states = parse_int(st_toks[0], st_line);

    auto [in_line, in_rest] = expect_key(2, "initial");
    auto in_toks = split_ws(in_rest);
    if (in_toks.size() != 1) throw ParseError(in_line, "expected a single initial state");
    int initial = parse_int(in_toks[0], in_line);

    auto [fi_line, fi_rest] = expect_key(3, "finals");
    std::vector<int> finals;
    for (const std::string& tok : split_ws(fi_rest)) finals.push_back(parse_int(tok, fi_line));

    auto [tr_line, tr_rest] = expect_key(4, "trans");
    if (!split_ws(tr_rest).empty()) throw ParseError(tr_line, "'trans:' takes no arguments");

    std::vector<Transition> trans;
    for (std::size_t idx = 5; idx < lines.size(); ++idx) {
        const auto& ln = lines[idx];
        auto toks = split_ws(ln.text);
        if (toks.size() != 3) {
            throw ParseError(ln.no, "expected '<src> <symbol> <dst>'");
        }
        Transition t;
        t.from = parse_int(toks[0], ln.no);
        try {
            t.symbol = Symbol::parse(toks[1]);
        } catch (const std::exception& e) {
            throw ParseError(ln.no, e.what());
        }
        t.to = parse_int(toks[2], ln.no);
        trans.push_back(t);
    }

    Dfa d = make_dfa(std::move(alphabet), states, std::move(finals), std::move(trans), initial);
    auto diags = validate(d);
    if (!diags.empty()) {
        std::string msg = "invalid automaton:";
        for (const auto& s : diags) msg += " " + s + ";";
        throw ParseError(line_no, msg);
    }
    return d;
}

std::string serialize_dfa(const Dfa& d) {
    std::ostringstream os;
    os << "alphabet:";
    for (const Symbol& s : d.alphabet) os << ' ' << s.str();
    os << "\nstates: " << d.state_count;
    os << "\ninitial: " << d.initial;
    os << "\nfinals:";
    for (int f : d.finals) os << ' ' << f;
    os << "\ntrans:\n";
    for (const Transition& t : d.transitions) {
        os << t.from << ' ' << t.symbol.str() << ' ' << t.to << '\n';
    }
    return os.str();
}

Dfa load_dfa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_dfa(buf.str());
}

void save_dfa_file(const std::string& path, const Dfa& d,
                   const std::vector<std::string>& label_comments) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    for (std::size_t i = 0; i < label_comments.size(); ++i) {
        out << "# state " << i << " = " << label_comments[i] << '\n';
    }
    out << serialize_dfa(d);
}

}  // namespace idfa
