#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "bafa/boolfn.hpp"
#include "bafa/errors.hpp"

namespace bafa {

using StateSet = boost::dynamic_bitset<>;

/// Ordered input alphabet of distinct single ASCII alphanumeric symbols.
class Alphabet {
  public:
    Alphabet() = default;

    explicit Alphabet(std::string_view symbols) : syms_(symbols) {
        if (syms_.empty())
            throw PreconditionError("alphabet: must not be empty");
        for (std::size_t i = 0; i < syms_.size(); ++i) {
            if (!std::isalnum(static_cast<unsigned char>(syms_[i])))
                throw PreconditionError("alphabet: symbols must be ASCII alphanumeric");
            if (syms_.find(syms_[i], i + 1) != std::string::npos)
                throw PreconditionError("alphabet: symbols must be distinct");
        }
    }

    int size() const { return static_cast<int>(syms_.size()); }
    char symbol(int i) const { return syms_[static_cast<std::size_t>(i)]; }
    const std::string& symbols() const { return syms_; }

    int index(char c) const {
        auto p = syms_.find(c);
        if (p == std::string::npos)
            throw PreconditionError(std::string("unknown symbol '") + c + "'");
        return static_cast<int>(p);
    }

    bool contains(char c) const { return syms_.find(c) != std::string::npos; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

  private:
    std::string syms_;
};

/// Boolean finite automaton over states q_1..q_n: an initial Boolean
/// function, a transition function per (state, symbol), and a set of final
/// states packed as a bit mask (bit i-1 for q_i). The mask is also the
/// finality assignment the evolved initial function is evaluated at.
struct Bfa {
    Alphabet alphabet;
    int n = 0;
    BoolFn init;
    std::uint32_t finals = 0;
    std::vector<std::vector<BoolFn>> delta; // delta[state-1][symbol index]

    const BoolFn& transition(int state, int sym) const {
        return delta[static_cast<std::size_t>(state - 1)][static_cast<std::size_t>(sym)];
    }

    const BoolFn& transition(int state, char a) const {
        return transition(state, alphabet.index(a));
    }

    Assignment finality() const { return {n, finals}; }

    bool is_final(int state) const { return finals >> (state - 1) & 1u; }

    void validate() const {
        if (n < 1 || n > BoolFn::max_arity)
            throw PreconditionError("bfa: state count out of range");
        if (alphabet.size() == 0)
            throw PreconditionError("bfa: empty alphabet");
        if (init.arity() != n)
            throw PreconditionError("bfa: initial function arity must equal the state count");
        if (n < 32 && finals >> n)
            throw PreconditionError("bfa: final state out of range");
        if (static_cast<int>(delta.size()) != n)
            throw PreconditionError("bfa: one transition row per state required");
        for (const auto& row : delta) {
            if (static_cast<int>(row.size()) != alphabet.size())
                throw PreconditionError("bfa: one transition per (state, symbol) required");
            for (const BoolFn& f : row)
                if (f.arity() != n)
                    throw PreconditionError("bfa: transition arity must equal the state count");
        }
    }
};

/// Nondeterministic automaton with any number of initial states and
/// possibly empty transition sets. States are 0..k-1.
struct Mnfa {
    Alphabet alphabet;
    int k = 0;
    StateSet initials, finals;
    std::vector<std::vector<StateSet>> delta; // delta[state][symbol index]

    void validate() const {
        if (k < 1)
            throw PreconditionError("mnfa: at least one state required");
        if (alphabet.size() == 0)
            throw PreconditionError("mnfa: empty alphabet");
        if (static_cast<int>(initials.size()) != k || static_cast<int>(finals.size()) != k)
            throw PreconditionError("mnfa: state set size mismatch");
        if (static_cast<int>(delta.size()) != k)
            throw PreconditionError("mnfa: one transition row per state required");
        for (const auto& row : delta) {
            if (static_cast<int>(row.size()) != alphabet.size())
                throw PreconditionError("mnfa: one transition set per (state, symbol) required");
            for (const StateSet& s : row)
                if (static_cast<int>(s.size()) != k)
                    throw PreconditionError("mnfa: transition set size mismatch");
        }
    }
};

/// Complete deterministic automaton. States are 0..k-1.
struct Dfa {
    Alphabet alphabet;
    int k = 0;
    int initial = 0;
    StateSet finals;
    std::vector<std::vector<int>> delta; // delta[state][symbol index]

    bool is_final(int state) const { return finals.test(static_cast<std::size_t>(state)); }

    void validate() const {
        if (k < 1)
            throw PreconditionError("dfa: at least one state required");
        if (alphabet.size() == 0)
            throw PreconditionError("dfa: empty alphabet");
        if (initial < 0 || initial >= k)
            throw PreconditionError("dfa: initial state out of range");
        if (static_cast<int>(finals.size()) != k)
            throw PreconditionError("dfa: state set size mismatch");
        if (static_cast<int>(delta.size()) != k)
            throw PreconditionError("dfa: one transition row per state required");
        for (const auto& row : delta) {
            if (static_cast<int>(row.size()) != alphabet.size())
                throw PreconditionError("dfa: one transition per (state, symbol) required");
            for (int t : row)
                if (t < 0 || t >= k)
                    throw PreconditionError("dfa: transition target out of range");
        }
    }
};

enum class SetOp { union_, intersection, difference, symmetric_difference };

/// One step of the evolved initial function: g(q_1 a, ..., q_n a).
inline BoolFn bfa_step(const Bfa& a, const BoolFn& g, int sym) {
    if (g.arity() != a.n)
        throw PreconditionError("bfa_step: function arity must equal the state count");
    std::vector<BoolFn> row;
    row.reserve(static_cast<std::size_t>(a.n));
    for (int i = 1; i <= a.n; ++i)
        row.push_back(a.transition(i, sym));
    return substitute(g, row);
}

inline BoolFn bfa_step(const Bfa& a, const BoolFn& g, char sym) {
    return bfa_step(a, g, a.alphabet.index(sym));
}

/// Evolve the initial function along w and evaluate it at the finality
/// assignment; the empty word evaluates the initial function directly.
inline bool bfa_accepts(const Bfa& a, std::string_view w) {
    BoolFn g = a.init;
    for (char c : w)
        g = bfa_step(a, g, c);
    return g.evaluate(a.finals);
}

inline StateSet mnfa_step(const Mnfa& m, const StateSet& s, int sym) {
    StateSet t(static_cast<std::size_t>(m.k));
    for (auto q = s.find_first(); q != StateSet::npos; q = s.find_next(q))
        t |= m.delta[q][static_cast<std::size_t>(sym)];
    return t;
}

inline bool mnfa_accepts(const Mnfa& m, std::string_view w) {
    StateSet s = m.initials;
    for (char c : w)
        s = mnfa_step(m, s, m.alphabet.index(c));
    return s.intersects(m.finals);
}

inline int dfa_run(const Dfa& d, std::string_view w) {
    int q = d.initial;
    for (char c : w)
        q = d.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(d.alphabet.index(c))];
    return q;
}

inline bool dfa_accepts(const Dfa& d, std::string_view w) { return d.is_final(dfa_run(d, w)); }

/// Where an automaton sits in the model hierarchy. The flags are monotone:
/// dfa implies nfa implies mnfa, and afa implies bfa.
struct MachineClass {
    bool bfa = false, afa = false, mnfa = false, nfa = false, dfa = false;
};

inline MachineClass classify_machine(const Bfa& a) {
    MachineClass c;
    c.bfa = true;
    c.afa = a.init == BoolFn::projection(a.n, 1);
    auto disj_form = [](const BoolFn& f) { return classify(f).disjunction_vars.has_value(); };
    auto proj_form = [](const BoolFn& f) { return classify(f).projection_var.has_value(); };
    bool trans_disj = true, trans_proj = true;
    for (const auto& row : a.delta) {
        for (const BoolFn& f : row) {
            trans_disj = trans_disj && disj_form(f);
            trans_proj = trans_proj && proj_form(f);
        }
    }
    c.mnfa = trans_disj && disj_form(a.init);
    c.nfa = c.mnfa && proj_form(a.init);
    c.dfa = c.nfa && trans_proj;
    return c;
}

inline MachineClass classify_machine(const Mnfa& m) {
    MachineClass c;
    c.bfa = true;
    c.mnfa = true;
    c.nfa = m.initials.count() == 1;
    c.afa = c.nfa && m.initials.test(0);
    c.dfa = c.nfa;
    for (const auto& row : m.delta)
        for (const StateSet& s : row)
            c.dfa = c.dfa && s.count() == 1;
    return c;
}

inline MachineClass classify_machine(const Dfa& d) {
    MachineClass c;
    c.bfa = c.mnfa = c.nfa = c.dfa = true;
    c.afa = d.initial == 0;
    return c;
}

/// Swap initial and final sets and invert every edge. An involution.
inline Mnfa reverse_mnfa(const Mnfa& m) {
    m.validate();
    Mnfa r;
    r.alphabet = m.alphabet;
    r.k = m.k;
    r.initials = m.finals;
    r.finals = m.initials;
    r.delta.assign(static_cast<std::size_t>(m.k),
                   std::vector<StateSet>(static_cast<std::size_t>(m.alphabet.size()),
                                         StateSet(static_cast<std::size_t>(m.k))));
    for (std::size_t v = 0; v < m.delta.size(); ++v)
        for (std::size_t s = 0; s < m.delta[v].size(); ++s)
            for (auto u = m.delta[v][s].find_first(); u != StateSet::npos;
                 u = m.delta[v][s].find_next(u))
                r.delta[u][s].set(v);
    return r;
}

/// True iff the reversed automaton is a complete DFA: one final state and
/// exactly one incoming edge per (state, symbol).
inline bool is_reverse_deterministic(const Mnfa& m) {
    return classify_machine(reverse_mnfa(m)).dfa;
}

/// View an Mnfa as a Bfa: state i becomes q_{i+1}, every transition set
/// becomes the disjunction of its members, the initial function the
/// disjunction of initial states. Preserves the language.
inline Bfa embed_mnfa(const Mnfa& m) {
    m.validate();
    if (m.k > BoolFn::max_arity)
        throw PreconditionError("embed_mnfa: too many states for Boolean-function form");
    auto disj_of = [&](const StateSet& s) {
        std::vector<int> vars;
        for (auto q = s.find_first(); q != StateSet::npos; q = s.find_next(q))
            vars.push_back(static_cast<int>(q) + 1);
        return BoolFn::disjunction(m.k, vars);
    };
    Bfa a;
    a.alphabet = m.alphabet;
    a.n = m.k;
    a.init = disj_of(m.initials);
    for (auto q = m.finals.find_first(); q != StateSet::npos; q = m.finals.find_next(q))
        a.finals |= std::uint32_t{1} << q;
    a.delta.assign(static_cast<std::size_t>(m.k), {});
    for (int i = 0; i < m.k; ++i)
        for (int s = 0; s < m.alphabet.size(); ++s)
            a.delta[static_cast<std::size_t>(i)].push_back(
                disj_of(m.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)]));
    return a;
}

inline Mnfa dfa_to_mnfa(const Dfa& d) {
    d.validate();
    Mnfa m;
    m.alphabet = d.alphabet;
    m.k = d.k;
    m.initials = StateSet(static_cast<std::size_t>(d.k));
    m.initials.set(static_cast<std::size_t>(d.initial));
    m.finals = d.finals;
    m.delta.assign(static_cast<std::size_t>(d.k),
                   std::vector<StateSet>(static_cast<std::size_t>(d.alphabet.size()),
                                         StateSet(static_cast<std::size_t>(d.k))));
    for (std::size_t q = 0; q < m.delta.size(); ++q)
        for (std::size_t s = 0; s < m.delta[q].size(); ++s)
            m.delta[q][s].set(static_cast<std::size_t>(d.delta[q][s]));
    return m;
}

/// Lift a DFA to Boolean-function form (all transitions projections).
inline Bfa bfa_from_dfa(const Dfa& d) { return embed_mnfa(dfa_to_mnfa(d)); }

/// Rename states: old q_i becomes q_{perm[i-1]}. Language preserved.
inline Bfa permute_bfa(const Bfa& a, std::span<const int> perm) {
    a.validate();
    if (static_cast<int>(perm.size()) != a.n)
        throw PreconditionError("permute_bfa: permutation size must equal the state count");
    std::vector<int> seen(static_cast<std::size_t>(a.n), 0);
    for (int p : perm) {
        if (p < 1 || p > a.n || seen[static_cast<std::size_t>(p - 1)]++)
            throw PreconditionError("permute_bfa: not a permutation of 1..n");
    }
    Bfa r;
    r.alphabet = a.alphabet;
    r.n = a.n;
    r.init = permute_vars(a.init, perm);
    for (int i = 1; i <= a.n; ++i)
        if (a.is_final(i))
            r.finals |= std::uint32_t{1} << (perm[static_cast<std::size_t>(i - 1)] - 1);
    r.delta.assign(static_cast<std::size_t>(a.n), {});
    for (int i = 1; i <= a.n; ++i) {
        auto& row = r.delta[static_cast<std::size_t>(perm[static_cast<std::size_t>(i - 1)] - 1)];
        for (int s = 0; s < a.alphabet.size(); ++s)
            row.push_back(permute_vars(a.transition(i, s), perm));
    }
    return r;
}

/// Renumber so the designated state becomes q_1 (other states keep order).
inline Bfa move_state_first(const Bfa& a, int state) {
    if (state < 1 || state > a.n)
        throw PreconditionError("move_state_first: state out of range");
    std::vector<int> perm(static_cast<std::size_t>(a.n));
    int next = 2;
    for (int i = 1; i <= a.n; ++i)
        perm[static_cast<std::size_t>(i - 1)] = i == state ? 1 : next++;
    return permute_bfa(a, perm);
}

} // namespace bafa
