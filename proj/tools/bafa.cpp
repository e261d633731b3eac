// Command-line front end: witness generators, regular operations on
// Boolean/alternating automata, model conversions, minimization, language
// queries, and the state-complexity bounds table.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 precondition violation,
// 4 internal bound-check failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "bafa/complexity.hpp"
#include "bafa/format.hpp"
#include "bafa/ops.hpp"
#include "bafa/oracle.hpp"
#include "bafa/witnesses.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CLI::ValidationError("input", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bafa::Machine load_machine(const std::string& path) {
    return bafa::parse_automaton(read_input(path));
}

const bafa::Bfa& need_bfa(const bafa::Machine& m, const char* who) {
    if (const bafa::Bfa* a = std::get_if<bafa::Bfa>(&m))
        return *a;
    throw bafa::PreconditionError(std::string(who) + ": input must be a bfa file");
}

const bafa::Dfa& need_dfa(const bafa::Machine& m, const char* who) {
    if (const bafa::Dfa* d = std::get_if<bafa::Dfa>(&m))
        return *d;
    throw bafa::PreconditionError(std::string(who) + ": input must be a dfa file");
}

bafa::Mnfa as_mnfa(const bafa::Machine& m) {
    if (const bafa::Bfa* a = std::get_if<bafa::Bfa>(&m))
        return bafa::bfa_to_mnfa(*a);
    if (const bafa::Dfa* d = std::get_if<bafa::Dfa>(&m))
        return bafa::dfa_to_mnfa(*d);
    return std::get<bafa::Mnfa>(m);
}

// Minimal complete DFA of the machine's language, in canonical numbering.
bafa::Dfa canonical_dfa(const bafa::Machine& m) {
    if (const bafa::Bfa* a = std::get_if<bafa::Bfa>(&m))
        return bafa::bfa_canonical_dfa(*a);
    if (const bafa::Dfa* d = std::get_if<bafa::Dfa>(&m))
        return bafa::minimize(bafa::reachable_dfa(*d));
    return bafa::minimize(bafa::determinize(std::get<bafa::Mnfa>(m)));
}

int required_param(const std::optional<int>& value, const std::string& id,
                   const char* flag) {
    if (!value)
        throw CLI::ValidationError("witness", std::string(flag) + " is required for " + id);
    return *value;
}

void run_witness(const std::string& id, const std::optional<int>& m,
                 const std::optional<int>& n, bool padded) {
    if (padded && id != "unary_union_l")
        throw CLI::ValidationError("witness", "--padded only applies to unary_union_l");
    if (id == "cycle" || id == "cycle_mnfa")
        std::cout << bafa::print_automaton(bafa::cycle_mnfa(required_param(n, id, "--n")));
    else if (id == "cycle_afa")
        std::cout << bafa::print_automaton(bafa::cycle_afa(required_param(n, id, "--n")));
    else if (id == "maslov_a")
        std::cout << bafa::print_automaton(bafa::maslov_a(required_param(m, id, "--m")));
    else if (id == "maslov_b")
        std::cout << bafa::print_automaton(bafa::maslov_b(required_param(n, id, "--n")));
    else if (id == "hf_concat_a")
        std::cout << bafa::print_automaton(bafa::hf_concat_a(required_param(m, id, "--m")));
    else if (id == "hf_concat_b")
        std::cout << bafa::print_automaton(bafa::hf_concat_b(required_param(n, id, "--n")));
    else if (id == "palmovsky_star")
        std::cout << bafa::print_automaton(
            bafa::palmovsky_star(required_param(n, id, "--n")));
    else if (id == "unary_union_k")
        std::cout << bafa::print_automaton(
            bafa::unary_union_k(required_param(m, id, "--m")));
    else if (id == "unary_union_l")
        std::cout << bafa::print_automaton(
            padded ? bafa::unary_union_l_padded(required_param(n, id, "--n"))
                   : bafa::unary_union_l(required_param(n, id, "--n")));
    else
        throw CLI::ValidationError("witness", "unknown witness id '" + id + "'");
}

bool is_binary_op(const std::string& op) {
    return op == "union" || op == "intersection" || op == "difference" ||
           op == "symmetric-difference" || op == "concat" || op == "right-quotient" ||
           op == "left-quotient";
}

bafa::SetOp set_op_of(const std::string& op) {
    if (op == "union")
        return bafa::SetOp::union_;
    if (op == "intersection")
        return bafa::SetOp::intersection;
    if (op == "difference")
        return bafa::SetOp::difference;
    return bafa::SetOp::symmetric_difference;
}

void run_apply(const std::string& op, const std::string& model,
               const std::string& a_path, const std::optional<std::string>& b_path) {
    const auto& known = bafa::bounds_operations();
    if (std::find(known.begin(), known.end(), op) == known.end())
        throw CLI::ValidationError("apply", "unknown operation '" + op + "'");
    if (is_binary_op(op) && !b_path)
        throw CLI::ValidationError("apply", op + " needs two operands");
    if (!is_binary_op(op) && b_path)
        throw CLI::ValidationError("apply", op + " takes one operand");

    bafa::Machine ma = load_machine(a_path);
    const bafa::Bfa& a = need_bfa(ma, "apply");
    bool afa = model == "afa";
    bafa::Bfa out;
    if (is_binary_op(op)) {
        bafa::Machine mb = load_machine(*b_path);
        const bafa::Bfa& b = need_bfa(mb, "apply");
        if (op == "concat")
            out = afa ? bafa::concat_afa(a, b) : bafa::concat_bfa(a, b);
        else if (op == "right-quotient")
            out = afa ? bafa::right_quotient_afa(a, b) : bafa::right_quotient_bfa(a, b);
        else if (op == "left-quotient")
            out = afa ? bafa::left_quotient_afa(a, b) : bafa::left_quotient_bfa(a, b);
        else
            out = afa ? bafa::boolean_op_afa(a, b, set_op_of(op))
                      : bafa::boolean_op_bfa(a, b, set_op_of(op));
    } else if (op == "complement") {
        out = afa ? bafa::complement_afa(a) : bafa::complement_bfa(a);
    } else if (op == "star") {
        out = afa ? bafa::star_afa(a) : bafa::star_bfa(a);
    } else if (op == "reverse") {
        out = afa ? bafa::reverse_afa(a) : bafa::reverse_bfa(a);
    } else {
        out = afa ? bafa::square_afa(a) : bafa::square_bfa(a);
    }
    std::cout << bafa::print_automaton(out);
}

void run_convert(const std::string& to, const std::string& a_path) {
    static const std::set<std::string> known{"to-mnfa",           "to-nfa",
                                             "to-dfa",            "to-bfa-of-reverse",
                                             "to-afa-of-reverse", "to-afa"};
    if (!known.count(to))
        throw CLI::ValidationError("convert", "unknown conversion '" + to + "'");
    bafa::Machine m = load_machine(a_path);
    if (to == "to-mnfa") {
        std::cout << bafa::print_automaton(as_mnfa(m));
    } else if (to == "to-nfa") {
        std::cout << bafa::print_automaton(bafa::mnfa_to_nfa(as_mnfa(m)));
    } else if (to == "to-dfa") {
        if (const bafa::Dfa* d = std::get_if<bafa::Dfa>(&m))
            std::cout << bafa::print_automaton(*d);
        else
            std::cout << bafa::print_automaton(bafa::determinize(as_mnfa(m)));
    } else if (to == "to-bfa-of-reverse") {
        std::cout << bafa::print_automaton(
            bafa::dfa_to_bfa_of_reverse(need_dfa(m, "convert to-bfa-of-reverse")));
    } else if (to == "to-afa-of-reverse") {
        std::cout << bafa::print_automaton(
            bafa::dfa_to_afa_of_reverse(need_dfa(m, "convert to-afa-of-reverse")));
    } else if (to == "to-afa") {
        bafa::Bfa a;
        if (const bafa::Bfa* p = std::get_if<bafa::Bfa>(&m))
            a = *p;
        else if (const bafa::Dfa* d = std::get_if<bafa::Dfa>(&m))
            a = bafa::bfa_from_dfa(*d);
        else
            a = bafa::mnfa_to_bfa(std::get<bafa::Mnfa>(m));
        std::cout << bafa::print_automaton(bafa::bfa_to_afa(a));
    } else {
        throw CLI::ValidationError("convert", "unknown conversion '" + to + "'");
    }
}

void run_bounds_table(int max_m, int max_n, const std::string& ops_list,
                      std::uint64_t seed) {
    std::vector<std::string> ops;
    if (ops_list.empty()) {
        ops = bafa::bounds_operations();
    } else {
        std::stringstream ss(ops_list);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                ops.push_back(item);
    }
    std::cout << bafa::to_tsv(bafa::bounds_report(ops, max_m, max_n, seed));
}

bool accepts(const bafa::Bfa& a, const std::string& w) { return bafa::bfa_accepts(a, w); }
bool accepts(const bafa::Mnfa& m, const std::string& w) { return bafa::mnfa_accepts(m, w); }
bool accepts(const bafa::Dfa& d, const std::string& w) { return bafa::dfa_accepts(d, w); }

int state_count(const bafa::Bfa& a) { return a.n; }
int state_count(const bafa::Mnfa& m) { return m.k; }
int state_count(const bafa::Dfa& d) { return d.k; }

int run(int argc, char** argv) {
    CLI::App app{"Boolean and alternating finite automata toolkit"};
    app.require_subcommand(1);

    auto* witness = app.add_subcommand("witness", "print a named witness automaton");
    std::string witness_id;
    std::optional<int> witness_m, witness_n;
    bool witness_padded = false;
    witness->add_option("id", witness_id, "witness family")->required();
    witness->add_option("--m", witness_m, "first-operand size parameter");
    witness->add_option("--n", witness_n, "second-operand size parameter");
    witness->add_flag("--padded", witness_padded, "pad unary_union_l to 2^n states");
    witness->callback([&] { run_witness(witness_id, witness_m, witness_n, witness_padded); });

    auto* apply = app.add_subcommand("apply", "apply a regular operation");
    std::string apply_op, apply_model = "bfa", apply_a;
    std::optional<std::string> apply_b;
    apply->add_option("op", apply_op, "operation name")->required();
    apply->add_option("a", apply_a, "first operand file ('-' = stdin)")->required();
    apply->add_option("b", apply_b, "second operand file");
    apply->add_option("--model", apply_model, "construction variant")
        ->check(CLI::IsMember({"bfa", "afa"}));
    apply->callback([&] { run_apply(apply_op, apply_model, apply_a, apply_b); });

    auto* convert = app.add_subcommand("convert", "convert between automaton models");
    std::string convert_to, convert_a = "-";
    convert->add_option("to", convert_to, "target model")->required();
    convert->add_option("a", convert_a, "input file ('-' = stdin)");
    convert->callback([&] { run_convert(convert_to, convert_a); });

    auto* minimize = app.add_subcommand("minimize", "minimal DFA of the language");
    std::string minimize_a = "-";
    minimize->add_option("a", minimize_a, "input file ('-' = stdin)");
    minimize->callback(
        [&] { std::cout << bafa::print_automaton(canonical_dfa(load_machine(minimize_a))); });

    auto* equiv = app.add_subcommand("equiv", "compare two machines' languages");
    std::string equiv_a, equiv_b;
    equiv->add_option("a", equiv_a, "first file")->required();
    equiv->add_option("b", equiv_b, "second file")->required();
    equiv->callback([&] {
        bafa::Dfa da = canonical_dfa(load_machine(equiv_a));
        bafa::Dfa db = canonical_dfa(load_machine(equiv_b));
        bafa::detail::require_same_alphabet(da.alphabet, db.alphabet, "equiv");
        std::cout << (bafa::dfa_equal(da, db) ? "equivalent\n" : "different\n");
    });

    auto* accept = app.add_subcommand("accept", "test whether a word is accepted");
    std::string accept_a, accept_word;
    accept->add_option("a", accept_a, "input file ('-' = stdin)")->required();
    accept->add_option("word", accept_word, "word over the alphabet ('' = empty word)")
        ->required();
    accept->callback([&] {
        bafa::Machine m = load_machine(accept_a);
        bool ok = std::visit([&](const auto& x) { return accepts(x, accept_word); }, m);
        std::cout << (ok ? "accepted\n" : "rejected\n");
    });

    auto* states = app.add_subcommand("states", "print the state count");
    std::string states_a = "-";
    states->add_option("a", states_a, "input file ('-' = stdin)");
    states->callback([&] {
        bafa::Machine m = load_machine(states_a);
        std::cout << std::visit([](const auto& x) { return state_count(x); }, m) << "\n";
    });

    auto* bounds = app.add_subcommand("bounds-table", "state-complexity bounds report");
    int bounds_m = 0, bounds_n = 0;
    std::string bounds_ops;
    std::uint64_t bounds_seed = 0;
    bounds->add_option("--max-m", bounds_m, "largest first-operand parameter")->required();
    bounds->add_option("--max-n", bounds_n, "largest second-operand parameter")->required();
    bounds->add_option("--ops", bounds_ops, "comma-separated operation subset");
    bounds->add_option("--seed", bounds_seed, "recorded in the report header");
    bounds->callback([&] { run_bounds_table(bounds_m, bounds_n, bounds_ops, bounds_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bafa::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bafa::ExprParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bafa::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const bafa::BoundCheckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
