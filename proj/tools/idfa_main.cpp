// Command-line front end: generate witness automata, apply operations,
// measure, minimize, and run verification grids.
//
// Exit codes: 0 ok, 1 soundness violation in a verify run, 2 usage or
// input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "idfa/bounds.hpp"
#include "idfa/harness.hpp"
#include "idfa/measures.hpp"
#include "idfa/model_io.hpp"
#include "idfa/ops.hpp"
#include "idfa/oracle.hpp"
#include "idfa/witnesses.hpp"

using namespace idfa;

namespace {

struct Range {
    long long lo = 0;
    long long hi = 0;
};

Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoll(text);
        } else {
            r.lo = std::stoll(text.substr(0, dots));
            r.hi = std::stoll(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("expected <n> or <lo>..<hi>, got '" + text + "'");
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
    return r;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open " + out_path + " for writing");
    os << text;
}

int run_gen(const std::string& op, int m, int n, std::vector<std::string> outputs) {
    auto need_outputs = [&](std::size_t count) {
        if (outputs.size() != count) {
            throw std::invalid_argument("'" + op + "' expects " + std::to_string(count) +
                                        " output path(s)");
        }
    };
    if (op == "union" || op == "intersection" || op == "concat-case1" ||
        op == "concat-case2") {
        need_outputs(2);
        std::pair<Dfa, Dfa> pair;
        if (op == "union") pair = union_witness(m, n);
        if (op == "intersection") pair = intersection_witness(m, n);
        if (op == "concat-case1") pair = concat_witness_case1(m, n);
        if (op == "concat-case2") pair = concat_witness_case2(m, n);
        save_dfa_file(outputs[0], pair.first);
        save_dfa_file(outputs[1], pair.second);
        return 0;
    }
    need_outputs(1);
    if (op == "complement") {
        save_dfa_file(outputs[0], complement_witness(m));
    } else if (op == "star") {
        save_dfa_file(outputs[0], star_witness(m));
    } else if (op == "reversal") {
        save_dfa_file(outputs[0], reversal_witness(m));
    } else {
        throw std::invalid_argument("unknown witness family '" + op + "'");
    }
    return 0;
}

int run_apply(const std::string& op, const std::vector<std::string>& inputs,
              bool minimize_out, bool complete_inputs, const std::string& out_path) {
    auto need_inputs = [&](std::size_t count) {
        if (inputs.size() != count) {
            throw std::invalid_argument("'" + op + "' expects " + std::to_string(count) +
                                        " input file(s)");
        }
    };
    std::vector<Dfa> operands;
    for (const std::string& path : inputs) {
        Dfa d = load_dfa_file(path);
        if (complete_inputs) d = complete_with_sink(d);
        operands.push_back(std::move(d));
    }

    Construction result;
    if (op == "union" || op == "intersection" || op == "concat") {
        need_inputs(2);
        if (op == "union") result = union_construction(operands[0], operands[1]);
        if (op == "intersection")
            result = intersection_construction(operands[0], operands[1]);
        if (op == "concat") result = concat_construction(operands[0], operands[1]);
    } else if (op == "complement" || op == "star" || op == "reversal") {
        need_inputs(1);
        if (op == "complement") result = complement_construction(operands[0]);
        if (op == "star") result = star_construction(operands[0]);
        if (op == "reversal") result = reversal_construction(operands[0]);
    } else {
        throw std::invalid_argument("unknown operation '" + op + "'");
    }

    std::ostringstream os;
    if (minimize_out) {
        os << serialize_dfa(minimize(result.dfa));
    } else {
        for (std::size_t i = 0; i < result.labels.size(); ++i) {
            os << "# state " << i << " = " << result.labels[i] << "\n";
        }
        os << serialize_dfa(result.dfa);
    }
    emit(out_path, os.str());
    return 0;
}

int run_measure(const std::string& input, const std::string& out_path) {
    MeasureSet ms = measure(load_dfa_file(input));
    std::ostringstream os;
    os << "isc: " << ms.m << "\n";
    os << "itc: " << ms.itc_total << "\n";
    os << "finals: " << ms.f << "\n";
    if (ms.pre_dead) {
        os << "pre_dead: " << *ms.pre_dead << "\n";
        os << "level: " << *ms.automaton_level << "\n";
    }
    os << "symbol itc s a e s_bar e_bar t_bar\n";
    for (const Symbol& sym : ms.alphabet) {
        SymbolMeasures sm = ms.symbol(sym);
        os << sym.str() << ' ' << sm.itc << ' ' << sm.s << ' ' << sm.a << ' ' << sm.e
           << ' ' << sm.s_bar << ' ' << sm.e_bar << ' ' << sm.t_bar << "\n";
    }
    emit(out_path, os.str());
    return 0;
}

int run_verify(const std::string& op, const std::string& m_range,
               const std::string& n_range, const std::string& format,
               std::uint64_t seed, const std::string& out_path) {
    Range mr = parse_range(m_range);
    Range nr = n_range.empty() ? mr : parse_range(n_range);

    // Desk-scale guard: subset constructions stay under ~2^20 states.
    auto oversize = [&](const char* what) {
        throw std::invalid_argument(std::string("range too large for ") + what +
                                    " (subset constructions would exceed 2^20 states)");
    };
    std::vector<BoundReport> rows;
    if (op == "union" || op == "intersection") {
        if (mr.hi * nr.hi > (1 << 20)) oversize(op.c_str());
        rows = op == "union" ? run_union_grid((int)mr.lo, (int)mr.hi, (int)nr.lo, (int)nr.hi)
                             : run_intersection_grid((int)mr.lo, (int)mr.hi, (int)nr.lo,
                                                     (int)nr.hi);
    } else if (op == "complement") {
        if (mr.hi > (1 << 20)) oversize("complement");
        rows = run_complement_grid((int)mr.lo, (int)mr.hi);
    } else if (op == "concat-case1" || op == "concat-case2") {
        if (nr.hi > 20 || (mr.hi + 1) * (1LL << nr.hi) > (1 << 20)) oversize(op.c_str());
        rows = op == "concat-case1"
                   ? run_concat_case1_grid((int)mr.lo, (int)mr.hi, (int)nr.lo, (int)nr.hi)
                   : run_concat_case2_grid((int)mr.lo, (int)mr.hi, (int)nr.lo, (int)nr.hi);
    } else if (op == "star") {
        if (mr.hi > 20) oversize("star");
        rows = run_star_grid((int)mr.lo, (int)mr.hi);
    } else if (op == "reversal") {
        if (mr.hi > 20) oversize("reversal");
        rows = run_reversal_grid((int)mr.lo, (int)mr.hi);
    } else if (op == "random") {
        if (mr.hi - mr.lo > 100000) oversize("random mode");
        rows = run_random_soundness((std::uint64_t)mr.lo + seed, (std::uint64_t)mr.hi + seed);
    } else {
        throw std::invalid_argument("unknown verify target '" + op + "'");
    }

    std::ostringstream os;
    if (format == "md") {
        write_markdown(os, rows);
    } else {
        write_csv(os, rows);
    }
    emit(out_path, os.str());
    return any_violation(rows) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"incomplete-DFA operations and complexity-bound verification"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate witness automata");
    std::string gen_op;
    std::vector<std::string> gen_args;
    gen->add_option("family", gen_op,
                    "union|intersection|complement|concat-case1|concat-case2|star|reversal")
        ->required();
    gen->add_option("args", gen_args, "m [n] followed by output path(s)")->required();

    auto* apply = app.add_subcommand("apply", "apply an operation to automaton files");
    std::string apply_op, apply_out;
    std::vector<std::string> apply_inputs;
    bool apply_min = false, apply_complete = false;
    apply->add_option("op", apply_op, "union|intersection|complement|concat|star|reversal")
        ->required();
    apply->add_option("inputs", apply_inputs, "input automaton file(s)")->required();
    apply->add_flag("--minimize", apply_min, "emit the minimized result");
    apply->add_flag("--complete-inputs", apply_complete,
                    "complete the operands with explicit sinks first");
    apply->add_option("--out", apply_out, "output path (default: stdout)");

    auto* meas = app.add_subcommand("measure", "print the refined measures");
    std::string meas_in, meas_out;
    meas->add_option("input", meas_in, "automaton file")->required();
    meas->add_option("--out", meas_out, "output path (default: stdout)");

    auto* mini = app.add_subcommand("minimize", "write the minimal automaton");
    std::string mini_in, mini_out;
    mini->add_option("input", mini_in, "automaton file")->required();
    mini->add_option("--out", mini_out, "output path (default: stdout)");

    auto* verify = app.add_subcommand("verify", "run a bound-verification grid");
    std::string verify_op, verify_m, verify_n, verify_fmt = "csv", verify_out;
    std::uint64_t verify_seed = 0;
    verify->add_option("op", verify_op,
                       "union|intersection|complement|concat-case1|concat-case2|star|"
                       "reversal|random")
        ->required();
    verify->add_option("m-range", verify_m, "m range, e.g. 2..6 (seed range for random)")
        ->required();
    verify->add_option("n-range", verify_n, "n range for binary operations");
    verify->add_option("--format", verify_fmt, "csv|md")
        ->check(CLI::IsMember({"csv", "md"}));
    verify->add_option("--seed", verify_seed, "seed offset for random mode");
    verify->add_option("--out", verify_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            bool pair_family = gen_op == "union" || gen_op == "intersection" ||
                               gen_op == "concat-case1" || gen_op == "concat-case2";
            std::size_t params = pair_family ? 2 : 1;
            if (gen_args.size() < params + 1) {
                throw std::invalid_argument("expected " + std::to_string(params) +
                                            " size parameter(s) plus output path(s)");
            }
            int m = std::stoi(gen_args[0]);
            int n = pair_family ? std::stoi(gen_args[1]) : 0;
            std::vector<std::string> outputs(gen_args.begin() + params, gen_args.end());
            return run_gen(gen_op, m, n, outputs);
        }
        if (apply->parsed()) {
            return run_apply(apply_op, apply_inputs, apply_min, apply_complete, apply_out);
        }
        if (meas->parsed()) return run_measure(meas_in, meas_out);
        if (mini->parsed()) {
            emit(mini_out, serialize_dfa(minimize(load_dfa_file(mini_in))));
            return 0;
        }
        if (verify->parsed()) {
            return run_verify(verify_op, verify_m, verify_n, verify_fmt, verify_seed,
                              verify_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
