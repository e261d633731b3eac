#pragma once

#include <set>

#include "bafa/oracle.hpp"

// Language operations on Boolean-form automata. Each *_bfa construction
// accepts any Bfa; the *_afa variants take alternating automata (initial
// function = projection onto q_1), yield alternating automata, and realize
// the corresponding state counts.

namespace bafa {

namespace detail {

inline void require_afa(const Bfa& a, const char* who) {
    if (!classify_machine(a).afa)
        throw PreconditionError(std::string(who) +
                                ": operand must be alternating (initial function q_1)");
}

inline bool accepts_empty_word(const Bfa& a) { return a.init.evaluate(a.finals); }

} // namespace detail

/// Complement by negating the initial function; states and transitions
/// untouched. An involution.
inline Bfa complement_bfa(const Bfa& a) {
    a.validate();
    Bfa r = a;
    r.init = ~a.init;
    return r;
}

/// Complement that stays alternating: dualize every transition function and
/// flip the finality of every state. The q_1 projection is self-dual, so
/// the initial function stands. An involution on alternating automata.
inline Bfa complement_afa(const Bfa& a) {
    a.validate();
    detail::require_afa(a, "complement_afa");
    Bfa r = a;
    r.finals = a.finals ^ ((std::uint32_t{1} << a.n) - 1);
    for (auto& row : r.delta)
        for (auto& fn : row)
            fn = dual(fn);
    return r;
}

/// Boolean set operations on a disjoint union of the two state sets: the
/// second operand's states are renamed q_{m+1}..q_{m+n}, transition rows
/// are kept apart, and only the initial functions are combined. m+n states.
inline Bfa boolean_op_bfa(const Bfa& a, const Bfa& b, SetOp op) {
    a.validate();
    b.validate();
    detail::require_same_alphabet(a.alphabet, b.alphabet, "boolean_op_bfa");
    int n = a.n + b.n;
    if (n > BoolFn::max_arity)
        throw PreconditionError("boolean_op_bfa: combined state count too large");
    Bfa r;
    r.alphabet = a.alphabet;
    r.n = n;
    BoolFn ia = shift_vars(a.init, 0, n);
    BoolFn ib = shift_vars(b.init, a.n, n);
    switch (op) {
    case SetOp::union_: r.init = ia | ib; break;
    case SetOp::intersection: r.init = ia & ib; break;
    case SetOp::difference: r.init = ia & ~ib; break;
    case SetOp::symmetric_difference: r.init = ia ^ ib; break;
    }
    r.finals = a.finals | b.finals << a.n;
    r.delta.assign(static_cast<std::size_t>(n), {});
    for (int i = 1; i <= a.n; ++i)
        for (int s = 0; s < a.alphabet.size(); ++s)
            r.delta[static_cast<std::size_t>(i - 1)].push_back(
                shift_vars(a.transition(i, s), 0, n));
    for (int i = 1; i <= b.n; ++i)
        for (int s = 0; s < a.alphabet.size(); ++s)
            r.delta[static_cast<std::size_t>(a.n + i - 1)].push_back(
                shift_vars(b.transition(i, s), a.n, n));
    return r;
}

namespace detail {

// Full-space pairing of the two assignment DFAs of the reverse languages,
// with symmetric-difference finality. For alternating operands both
// factors are exactly half final, hence so is the pairing, and collapsing
// it back yields an alternating automaton with m+n states and no padding.
inline Bfa symmetric_difference_afa(const Bfa& a, const Bfa& b) {
    auto phi_a = assignment_maps(a);
    auto phi_b = assignment_maps(b);
    int n = a.n + b.n;
    if (n > BoolFn::max_arity)
        throw PreconditionError("boolean_op_afa: combined state count too large");
    std::uint32_t ka = std::uint32_t{1} << a.n, kb = std::uint32_t{1} << b.n;
    Dfa p;
    p.alphabet = a.alphabet;
    p.k = static_cast<int>(ka * kb);
    p.initial = static_cast<int>(b.finals * ka + a.finals);
    p.finals = StateSet(ka * kb);
    p.delta.assign(ka * kb,
                   std::vector<int>(static_cast<std::size_t>(a.alphabet.size()), 0));
    for (std::uint32_t v = 0; v < kb; ++v)
        for (std::uint32_t u = 0; u < ka; ++u) {
            std::uint32_t idx = v * ka + u;
            if (a.init.evaluate(u) != b.init.evaluate(v))
                p.finals.set(idx);
            for (int s = 0; s < a.alphabet.size(); ++s)
                p.delta[idx][static_cast<std::size_t>(s)] = static_cast<int>(
                    phi_b[static_cast<std::size_t>(s)][v] * ka +
                    phi_a[static_cast<std::size_t>(s)][u]);
        }
    return dfa_to_afa_of_reverse(p);
}

} // namespace detail

/// Boolean set operations that stay alternating. Union, intersection and
/// difference take the disjoint-union form and re-root it: m+n+1 states.
/// Symmetric difference admits a tighter route through the assignment
/// space: m+n states.
inline Bfa boolean_op_afa(const Bfa& a, const Bfa& b, SetOp op) {
    a.validate();
    b.validate();
    detail::require_same_alphabet(a.alphabet, b.alphabet, "boolean_op_afa");
    detail::require_afa(a, "boolean_op_afa");
    detail::require_afa(b, "boolean_op_afa");
    if (op == SetOp::symmetric_difference)
        return detail::symmetric_difference_afa(a, b);
    return bfa_to_afa(boolean_op_bfa(a, b, op));
}

/// Concatenation with 2^m + n states: the first operand is blown up to its
/// assignment-space form q_1..q_{2^m} (disjunction transitions, unique
/// final state), the second keeps its Boolean form on q_{2^m+1}... The
/// unique final's transitions additionally start the second operand one
/// symbol in; the final state itself is final exactly when the second
/// operand accepts the empty word.
inline Bfa concat_bfa(const Bfa& a, const Bfa& b) {
    a.validate();
    b.validate();
    detail::require_same_alphabet(a.alphabet, b.alphabet, "concat_bfa");
    Mnfa m = bfa_to_mnfa(a);
    int ka = m.k;
    int n = ka + b.n;
    if (n > BoolFn::max_arity)
        throw PreconditionError("concat_bfa: combined state count too large");
    std::uint32_t fm = a.finals; // index of m's unique final state
    Bfa r;
    r.alphabet = a.alphabet;
    r.n = n;
    std::vector<int> ivars;
    for (auto u = m.initials.find_first(); u != StateSet::npos; u = m.initials.find_next(u))
        ivars.push_back(static_cast<int>(u) + 1);
    r.init = BoolFn::disjunction(n, ivars);
    if (detail::accepts_empty_word(a))
        r.init = r.init | shift_vars(b.init, ka, n);
    r.finals = b.finals << ka;
    if (detail::accepts_empty_word(b))
        r.finals |= std::uint32_t{1} << fm;
    r.delta.assign(static_cast<std::size_t>(n), {});
    for (int u = 0; u < ka; ++u)
        for (int s = 0; s < a.alphabet.size(); ++s) {
            std::vector<int> succ;
            const StateSet& t = m.delta[static_cast<std::size_t>(u)][static_cast<std::size_t>(s)];
            for (auto v = t.find_first(); v != StateSet::npos; v = t.find_next(v))
                succ.push_back(static_cast<int>(v) + 1);
            BoolFn fn = BoolFn::disjunction(n, succ);
            if (static_cast<std::uint32_t>(u) == fm)
                fn = fn | shift_vars(bfa_step(b, b.init, s), ka, n);
            r.delta[static_cast<std::size_t>(u)].push_back(std::move(fn));
        }
    for (int i = 1; i <= b.n; ++i)
        for (int s = 0; s < a.alphabet.size(); ++s)
            r.delta[static_cast<std::size_t>(ka + i - 1)].push_back(
                shift_vars(b.transition(i, s), ka, n));
    return r;
}

inline Bfa concat_afa(const Bfa& a, const Bfa& b) {
    detail::require_afa(a, "concat_afa");
    detail::require_afa(b, "concat_afa");
    return bfa_to_afa(concat_bfa(a, b));
}

inline Bfa square_bfa(const Bfa& a) { return concat_bfa(a, a); }

inline Bfa square_afa(const Bfa& a) {
    detail::require_afa(a, "square_afa");
    return bfa_to_afa(square_bfa(a));
}

/// Kleene star with 2^n states: star the assignment DFA of the reverse
/// language (reversal and star commute), minimize, balance finality by
/// padding to 2^(2^n) states, and collapse back to Boolean form. The
/// result is alternating.
inline Bfa star_bfa(const Bfa& a) {
    a.validate();
    if (std::uint64_t{1} << a.n > BoolFn::max_arity)
        throw PreconditionError("star_bfa: state count limit exceeded");
    Dfa s = minimize(star_dfa(reverse_dfa_of_bfa(a)));
    std::uint64_t target = std::uint64_t{1} << (std::uint64_t{1} << a.n);
    if (static_cast<std::uint64_t>(s.k) > target)
        throw BoundCheckError("star_bfa: starred language exceeds the padded state space");
    return dfa_to_bfa_of_reverse(s, target);
}

/// For an alternating operand the reverse-language DFA is exactly
/// half-final, which keeps the starred DFA's profile balanceable within
/// the 2^(2^n) padded state space, so the result is again alternating.
inline Bfa star_afa(const Bfa& a) {
    detail::require_afa(a, "star_afa");
    if (std::uint64_t{1} << a.n > BoolFn::max_arity)
        throw PreconditionError("star_afa: state count limit exceeded");
    Dfa s = minimize(star_dfa(reverse_dfa_of_bfa(a)));
    std::uint64_t target = std::uint64_t{1} << (std::uint64_t{1} << a.n);
    if (static_cast<std::uint64_t>(s.k) > target)
        throw BoundCheckError("star_afa: starred language exceeds the padded state space");
    return dfa_to_afa_of_reverse(s, target);
}

/// Reversal with 2^n states: the assignment DFA of the reverse language,
/// re-embedded in Boolean form with its initial state moved to position 1.
/// The result is alternating.
inline Bfa reverse_bfa(const Bfa& a) {
    a.validate();
    if (std::uint64_t{1} << a.n > BoolFn::max_arity)
        throw PreconditionError("reverse_bfa: state count limit exceeded");
    Dfa d = reverse_dfa_of_bfa(a);
    return move_state_first(bfa_from_dfa(d), d.initial + 1);
}

inline Bfa reverse_afa(const Bfa& a) {
    detail::require_afa(a, "reverse_afa");
    return reverse_bfa(a);
}

/// Right quotient (words w with wu in the first language for some u in the
/// second), 2^m states: in the assignment-space form of the first operand,
/// a state p is re-marked final when some word of the second language leads
/// from p to the old final state. That set is collected by a forward pair
/// walk of the two assignment DFAs of the reverse languages.
inline Bfa right_quotient_bfa(const Bfa& k, const Bfa& l) {
    k.validate();
    l.validate();
    detail::require_same_alphabet(k.alphabet, l.alphabet, "right_quotient_bfa");
    Mnfa m = bfa_to_mnfa(k);
    Dfa rk = reverse_dfa_of_bfa(k);
    Dfa rl = reverse_dfa_of_bfa(l);
    int nsym = k.alphabet.size();
    std::size_t nl = static_cast<std::size_t>(rl.k);
    std::vector<char> seen(static_cast<std::size_t>(rk.k) * nl, 0);
    std::vector<std::pair<int, int>> work;
    seen[static_cast<std::size_t>(rk.initial) * nl + static_cast<std::size_t>(rl.initial)] = 1;
    work.emplace_back(rk.initial, rl.initial);
    StateSet finals(static_cast<std::size_t>(m.k));
    while (!work.empty()) {
        auto [p, q] = work.back();
        work.pop_back();
        if (rl.finals.test(static_cast<std::size_t>(q)))
            finals.set(static_cast<std::size_t>(p));
        for (int s = 0; s < nsym; ++s) {
            int tp = rk.delta[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)];
            int tq = rl.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)];
            if (!seen[static_cast<std::size_t>(tp) * nl + static_cast<std::size_t>(tq)]) {
                seen[static_cast<std::size_t>(tp) * nl + static_cast<std::size_t>(tq)] = 1;
                work.emplace_back(tp, tq);
            }
        }
    }
    m.finals = finals;
    return embed_mnfa(m);
}

inline Bfa right_quotient_afa(const Bfa& k, const Bfa& l) {
    detail::require_afa(k, "right_quotient_afa");
    detail::require_afa(l, "right_quotient_afa");
    return bfa_to_afa(right_quotient_bfa(k, l));
}

/// Left quotient (words w with uw in the first language for some u in the
/// second), m states: states and transitions of the first operand are kept;
/// the initial function becomes the disjunction of all functions g·u with u
/// in the second language, collected by walking the function automaton of
/// the first operand in step with a forward DFA of the second.
inline Bfa left_quotient_bfa(const Bfa& k, const Bfa& l) {
    k.validate();
    l.validate();
    detail::require_same_alphabet(k.alphabet, l.alphabet, "left_quotient_bfa");
    Dfa dl = determinize(bfa_to_mnfa(l));
    int nsym = k.alphabet.size();
    std::map<std::pair<BoolFn, int>, bool> seen;
    std::vector<std::pair<BoolFn, int>> work;
    std::set<BoolFn> collected;
    work.emplace_back(k.init, dl.initial);
    seen.emplace(work.back(), true);
    while (!work.empty()) {
        auto [h, q] = work.back();
        work.pop_back();
        if (dl.finals.test(static_cast<std::size_t>(q)))
            collected.insert(h);
        for (int s = 0; s < nsym; ++s) {
            std::pair<BoolFn, int> next(
                bfa_step(k, h, s),
                dl.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)]);
            if (seen.emplace(next, true).second) {
                if (seen.size() > 65536)
                    throw BoundCheckError("left_quotient_bfa: function space explosion");
                work.push_back(std::move(next));
            }
        }
    }
    Bfa r = k;
    r.init = BoolFn::constant(k.n, false);
    for (const BoolFn& h : collected)
        r.init = r.init | h;
    return r;
}

inline Bfa left_quotient_afa(const Bfa& k, const Bfa& l) {
    detail::require_afa(k, "left_quotient_afa");
    detail::require_afa(l, "left_quotient_afa");
    return bfa_to_afa(left_quotient_bfa(k, l));
}

} // namespace bafa
