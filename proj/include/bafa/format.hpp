#pragma once

#include <map>
#include <sstream>
#include <variant>

#include "bafa/machines.hpp"

// Textual automaton files. One automaton per file: `type:`, `states:`,
// `alphabet:`, `initial:`, `final:` headers followed by one `trans:` line
// per (state, symbol). Boolean-form automata name their states q1..qn and
// use Boolean expressions on transition right-hand sides; mnfa/dfa files
// use 0-based state numbers and target lists. '#' starts a comment.
// Printing is canonical (fixed header order, transitions sorted by state
// then symbol) and parse(print(x)) = x.

namespace bafa {

using Machine = std::variant<Bfa, Mnfa, Dfa>;

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        cur = trim(cur);
        if (cur.empty())
            throw std::invalid_argument("empty list item");
        out.push_back(cur);
    }
    return out;
}

inline int parse_int(const std::string& s, std::size_t line, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected a number for " + what + ", got '" + s + "'");
    }
    if (used != s.size() || value < 0)
        throw ParseError(line, "expected a non-negative number for " + what + ", got '" + s + "'");
    return value;
}

inline std::vector<int> parse_state_list(const std::string& s, std::size_t line, int limit,
                                         const std::string& what) {
    std::vector<int> out;
    if (trim(s).empty())
        return out;
    std::vector<std::string> parts;
    try {
        parts = split_list(s, ',');
    } catch (const std::exception&) {
        throw ParseError(line, "malformed " + what + " list '" + s + "'");
    }
    for (const std::string& p : parts) {
        int q = parse_int(p, line, what);
        if (q >= limit)
            throw ParseError(line, what + " state " + p + " out of range (states: " +
                                        std::to_string(limit) + ")");
        out.push_back(q);
    }
    return out;
}

struct RawLine {
    std::size_t number;
    std::string key;
    std::string value;
};

inline std::vector<RawLine> raw_lines(const std::string& text) {
    std::vector<RawLine> out;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(number, "expected 'key: value', got '" + line + "'");
        out.push_back({number, trim(line.substr(0, colon)), trim(line.substr(colon + 1))});
    }
    return out;
}

struct TransLine {
    std::size_t number;
    int state; // bfa: 1-based; mnfa/dfa: 0-based
    int sym;
    std::string rhs;
};

// Shared header/transition scaffolding for the three machine kinds.
struct FileShape {
    std::string type;
    int states = 0;
    Alphabet alphabet;
    std::string initial;
    std::size_t initial_line = 0;
    std::string final;
    std::size_t final_line = 0;
    std::vector<TransLine> trans;
};

inline FileShape file_shape(const std::string& text) {
    FileShape shape;
    std::map<std::string, std::size_t> seen;
    bool have_states = false, have_alphabet = false, have_type = false;
    bool have_initial = false, have_final = false;
    for (const RawLine& raw : raw_lines(text)) {
        if (raw.key == "trans") {
            if (!have_type || !have_states || !have_alphabet)
                throw ParseError(raw.number,
                                 "trans line before type/states/alphabet headers");
            std::size_t eq = raw.value.find('=');
            if (eq == std::string::npos)
                throw ParseError(raw.number, "expected 'trans: state,symbol = ...'");
            std::string left = trim(raw.value.substr(0, eq));
            std::size_t comma = left.find(',');
            if (comma == std::string::npos)
                throw ParseError(raw.number, "expected 'state,symbol' before '='");
            std::string state_text = trim(left.substr(0, comma));
            std::string sym_text = trim(left.substr(comma + 1));
            if (sym_text.size() != 1)
                throw ParseError(raw.number, "expected a single symbol, got '" + sym_text + "'");
            if (!shape.alphabet.contains(sym_text[0]))
                throw ParseError(raw.number, "unknown symbol '" + sym_text + "'");
            int state;
            if (shape.type == "bfa") {
                if (state_text.empty() || state_text[0] != 'q')
                    throw ParseError(raw.number,
                                     "expected a state q1..q" + std::to_string(shape.states) +
                                         ", got '" + state_text + "'");
                state = parse_int(state_text.substr(1), raw.number, "state");
                if (state < 1 || state > shape.states)
                    throw ParseError(raw.number, "state '" + state_text + "' out of range");
            } else {
                state = parse_int(state_text, raw.number, "state");
                if (state >= shape.states)
                    throw ParseError(raw.number, "state " + state_text + " out of range (states: " +
                                                     std::to_string(shape.states) + ")");
            }
            for (const TransLine& t : shape.trans)
                if (t.state == state && t.sym == shape.alphabet.index(sym_text[0]))
                    throw ParseError(raw.number,
                                     "duplicate trans line for " + state_text + "," + sym_text);
            shape.trans.push_back(
                {raw.number, state, shape.alphabet.index(sym_text[0]), trim(raw.value.substr(eq + 1))});
            continue;
        }
        if (raw.key != "type" && raw.key != "states" && raw.key != "alphabet" &&
            raw.key != "initial" && raw.key != "final")
            throw ParseError(raw.number, "unknown header '" + raw.key + ":'");
        if (auto [it, fresh] = seen.emplace(raw.key, raw.number); !fresh)
            throw ParseError(raw.number, "duplicate '" + raw.key + ":' line (first on line " +
                                             std::to_string(it->second) + ")");
        if (raw.key == "type") {
            if (raw.value != "bfa" && raw.value != "mnfa" && raw.value != "dfa")
                throw ParseError(raw.number, "type must be bfa, mnfa, or dfa, got '" +
                                                 raw.value + "'");
            shape.type = raw.value;
            have_type = true;
        } else if (raw.key == "states") {
            shape.states = parse_int(raw.value, raw.number, "states");
            if (shape.states < 1)
                throw ParseError(raw.number, "states must be at least 1");
            have_states = true;
        } else if (raw.key == "alphabet") {
            std::string syms;
            std::vector<std::string> parts;
            try {
                parts = split_list(raw.value, ',');
            } catch (const std::exception&) {
                throw ParseError(raw.number, "malformed alphabet '" + raw.value + "'");
            }
            for (const std::string& p : parts) {
                if (p.size() != 1)
                    throw ParseError(raw.number, "alphabet symbols must be single characters, got '" +
                                                     p + "'");
                syms += p;
            }
            try {
                shape.alphabet = Alphabet(syms);
            } catch (const std::exception& e) {
                throw ParseError(raw.number, e.what());
            }
            have_alphabet = true;
        } else if (raw.key == "initial") {
            shape.initial = raw.value;
            shape.initial_line = raw.number;
            have_initial = true;
        } else {
            shape.final = raw.value;
            shape.final_line = raw.number;
            have_final = true;
        }
    }
    if (!have_type)
        throw ParseError(0, "missing 'type:' header");
    if (!have_states)
        throw ParseError(0, "missing 'states:' header");
    if (!have_alphabet)
        throw ParseError(0, "missing 'alphabet:' header");
    if (!have_initial)
        throw ParseError(0, "missing 'initial:' header");
    if (!have_final)
        throw ParseError(0, "missing 'final:' header");
    return shape;
}

} // namespace detail

inline Machine parse_automaton(const std::string& text) {
    detail::FileShape shape = detail::file_shape(text);
    int nsym = shape.alphabet.size();
    if (shape.type == "bfa") {
        if (shape.states > BoolFn::max_arity)
            throw ParseError(0, "too many states for Boolean form (max " +
                                    std::to_string(BoolFn::max_arity) + ")");
        Bfa a;
        a.alphabet = shape.alphabet;
        a.n = shape.states;
        try {
            a.init = parse_expr(shape.initial, a.n);
        } catch (const ExprParseError& e) {
            throw ParseError(shape.initial_line, std::string("initial function: ") + e.what());
        }
        a.finals = 0;
        for (int q : detail::parse_state_list(shape.final, shape.final_line, shape.states + 1,
                                              "final")) {
            if (q < 1)
                throw ParseError(shape.final_line, "final states are numbered from 1");
            a.finals |= std::uint32_t{1} << (q - 1);
        }
        a.delta.assign(static_cast<std::size_t>(a.n),
                       std::vector<BoolFn>(static_cast<std::size_t>(nsym), BoolFn(a.n)));
        std::vector<std::vector<bool>> have(static_cast<std::size_t>(a.n),
                                            std::vector<bool>(static_cast<std::size_t>(nsym)));
        for (const detail::TransLine& t : shape.trans) {
            try {
                a.delta[static_cast<std::size_t>(t.state - 1)][static_cast<std::size_t>(t.sym)] =
                    parse_expr(t.rhs, a.n);
            } catch (const ExprParseError& e) {
                throw ParseError(t.number, std::string("transition: ") + e.what());
            }
            have[static_cast<std::size_t>(t.state - 1)][static_cast<std::size_t>(t.sym)] = true;
        }
        for (int q = 0; q < a.n; ++q)
            for (int s = 0; s < nsym; ++s)
                if (!have[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)])
                    throw ParseError(0, "missing transition for q" + std::to_string(q + 1) + "," +
                                            shape.alphabet.symbol(s));
        a.validate();
        return a;
    }
    StateSet finals(static_cast<std::size_t>(shape.states));
    for (int q : detail::parse_state_list(shape.final, shape.final_line, shape.states, "final"))
        finals.set(static_cast<std::size_t>(q));
    if (shape.type == "dfa") {
        Dfa d;
        d.alphabet = shape.alphabet;
        d.k = shape.states;
        d.finals = finals;
        d.initial = detail::parse_int(shape.initial, shape.initial_line, "initial");
        if (d.initial >= d.k)
            throw ParseError(shape.initial_line, "initial state out of range");
        d.delta.assign(static_cast<std::size_t>(d.k),
                       std::vector<int>(static_cast<std::size_t>(nsym), -1));
        for (const detail::TransLine& t : shape.trans) {
            std::vector<int> targets =
                detail::parse_state_list(t.rhs, t.number, shape.states, "target");
            if (targets.size() != 1)
                throw ParseError(t.number, "dfa transitions need exactly one target");
            d.delta[static_cast<std::size_t>(t.state)][static_cast<std::size_t>(t.sym)] =
                targets[0];
        }
        for (int q = 0; q < d.k; ++q)
            for (int s = 0; s < nsym; ++s)
                if (d.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)] < 0)
                    throw ParseError(0, "missing transition for " + std::to_string(q) + "," +
                                            shape.alphabet.symbol(s));
        d.validate();
        return d;
    }
    Mnfa m;
    m.alphabet = shape.alphabet;
    m.k = shape.states;
    m.finals = finals;
    m.initials = StateSet(static_cast<std::size_t>(shape.states));
    for (int q :
         detail::parse_state_list(shape.initial, shape.initial_line, shape.states, "initial"))
        m.initials.set(static_cast<std::size_t>(q));
    m.delta.assign(static_cast<std::size_t>(m.k),
                   std::vector<StateSet>(static_cast<std::size_t>(nsym),
                                         StateSet(static_cast<std::size_t>(m.k))));
    for (const detail::TransLine& t : shape.trans)
        for (int q : detail::parse_state_list(t.rhs, t.number, shape.states, "target"))
            m.delta[static_cast<std::size_t>(t.state)][static_cast<std::size_t>(t.sym)].set(
                static_cast<std::size_t>(q));
    m.validate();
    return m;
}

namespace detail {

inline std::string join_states(const StateSet& set) {
    std::string out;
    for (auto q = set.find_first(); q != StateSet::npos; q = set.find_next(q)) {
        if (!out.empty())
            out += ",";
        out += std::to_string(q);
    }
    return out;
}

inline std::string alphabet_line(const Alphabet& alphabet) {
    std::string out;
    for (int s = 0; s < alphabet.size(); ++s) {
        if (s)
            out += ",";
        out += alphabet.symbol(s);
    }
    return out;
}

} // namespace detail

inline std::string print_automaton(const Bfa& a) {
    a.validate();
    std::ostringstream out;
    out << "type: bfa\n";
    out << "states: " << a.n << "\n";
    out << "alphabet: " << detail::alphabet_line(a.alphabet) << "\n";
    out << "initial: " << print_expr(a.init) << "\n";
    out << "final:";
    bool first = true;
    for (int q = 1; q <= a.n; ++q)
        if (a.finals >> (q - 1) & 1u) {
            out << (first ? " " : ",") << q;
            first = false;
        }
    out << "\n";
    for (int q = 1; q <= a.n; ++q)
        for (int s = 0; s < a.alphabet.size(); ++s)
            out << "trans: q" << q << "," << a.alphabet.symbol(s) << " = "
                << print_expr(a.transition(q, s)) << "\n";
    return out.str();
}

inline std::string print_automaton(const Mnfa& m) {
    m.validate();
    std::ostringstream out;
    out << "type: mnfa\n";
    out << "states: " << m.k << "\n";
    out << "alphabet: " << detail::alphabet_line(m.alphabet) << "\n";
    std::string initials = detail::join_states(m.initials);
    out << "initial:" << (initials.empty() ? "" : " ") << initials << "\n";
    std::string finals = detail::join_states(m.finals);
    out << "final:" << (finals.empty() ? "" : " ") << finals << "\n";
    for (int q = 0; q < m.k; ++q)
        for (int s = 0; s < m.alphabet.size(); ++s) {
            std::string targets = detail::join_states(
                m.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)]);
            out << "trans: " << q << "," << m.alphabet.symbol(s) << " ="
                << (targets.empty() ? "" : " ") << targets << "\n";
        }
    return out.str();
}

inline std::string print_automaton(const Dfa& d) {
    d.validate();
    std::ostringstream out;
    out << "type: dfa\n";
    out << "states: " << d.k << "\n";
    out << "alphabet: " << detail::alphabet_line(d.alphabet) << "\n";
    out << "initial: " << d.initial << "\n";
    std::string finals = detail::join_states(d.finals);
    out << "final:" << (finals.empty() ? "" : " ") << finals << "\n";
    for (int q = 0; q < d.k; ++q)
        for (int s = 0; s < d.alphabet.size(); ++s)
            out << "trans: " << q << "," << d.alphabet.symbol(s) << " = "
                << d.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)] << "\n";
    return out.str();
}

inline std::string print_automaton(const Machine& machine) {
    return std::visit([](const auto& m) { return print_automaton(m); }, machine);
}

} // namespace bafa
