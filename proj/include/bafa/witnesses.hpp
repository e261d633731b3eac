#pragma once

#include "bafa/convert.hpp"

// Hard-coded automaton families used by the bounds harness and the test
// suite as tightness witnesses. All are parameterized by their state count;
// states are numbered from 0.

namespace bafa {

namespace detail {

inline Dfa empty_dfa(std::string syms, int k, int initial) {
    Dfa d;
    d.alphabet = Alphabet(std::move(syms));
    d.k = k;
    d.initial = initial;
    d.finals = StateSet(static_cast<std::size_t>(k));
    d.delta.assign(static_cast<std::size_t>(k),
                   std::vector<int>(d.alphabet.symbols().size(), 0));
    return d;
}

} // namespace detail

/// 2^n-state MNFA over {a,b} whose reverse is deterministic: the lower half
/// of the states is initial, state 2^n-1 is the only final one, a advances
/// the full cycle, and b maps the top state onto everything but 0 while 0
/// keeps a b-loop. Collapses to an n-state automaton in Boolean form.
inline Mnfa cycle_mnfa(int n) {
    if (n < 2)
        throw PreconditionError("cycle_mnfa: requires n >= 2");
    if (n > 13)
        throw PreconditionError("cycle_mnfa: state space too large");
    std::uint32_t k = std::uint32_t{1} << n;
    Mnfa m;
    m.alphabet = Alphabet("ab");
    m.k = static_cast<int>(k);
    m.initials = StateSet(k);
    m.finals = StateSet(k);
    for (std::uint32_t q = 0; q < k / 2; ++q)
        m.initials.set(q);
    m.finals.set(k - 1);
    m.delta.assign(k, std::vector<StateSet>(2, StateSet(k)));
    for (std::uint32_t q = 0; q < k; ++q)
        m.delta[q][0].set((q + 1) % k);
    m.delta[0][1].set(0);
    for (std::uint32_t q = 1; q < k; ++q)
        m.delta[k - 1][1].set(q);
    return m;
}

/// cycle_mnfa collapsed with the state coding that sends initial states to
/// odd assignments: the result is an n-state alternating automaton.
inline Bfa cycle_afa(int n) {
    Mnfa m = cycle_mnfa(n);
    std::uint32_t k = static_cast<std::uint32_t>(m.k);
    std::vector<std::uint32_t> code(k);
    for (std::uint32_t s = 0; s < k; ++s)
        code[s] = s < k / 2 ? 2 * s + 1 : 2 * (s - k / 2);
    Bfa a = mnfa_to_bfa(m, code);
    if (!classify_machine(a).afa)
        throw BoundCheckError("cycle_afa: result is not alternating");
    return a;
}

/// Concatenation witness pair over {a,b}, single final state each.
/// First factor: a advances an m-cycle, b changes nothing.
inline Dfa maslov_a(int m) {
    if (m < 2)
        throw PreconditionError("maslov_a: requires m >= 2");
    Dfa d = detail::empty_dfa("ab", m, 0);
    d.finals.set(static_cast<std::size_t>(m - 1));
    for (int q = 0; q < m; ++q) {
        d.delta[static_cast<std::size_t>(q)][0] = (q + 1) % m;
        d.delta[static_cast<std::size_t>(q)][1] = q;
    }
    return d;
}

/// Second factor: b climbs a chain and parks at the top, a swaps the two
/// topmost states and fixes the rest. The two-state member degenerates
/// (chain and swap overlap), so it is defined separately as the unique
/// two-state automaton for which the pair still needs m*2^n - 2^(n-1)
/// states: a swaps, b resets to the bottom state.
inline Dfa maslov_b(int n) {
    if (n < 2)
        throw PreconditionError("maslov_b: requires n >= 2");
    Dfa d = detail::empty_dfa("ab", n, 0);
    d.finals.set(static_cast<std::size_t>(n - 1));
    for (int q = 0; q < n; ++q) {
        d.delta[static_cast<std::size_t>(q)][0] =
            q >= n - 2 ? (n - 2) + (n - 1) - q : q;
        d.delta[static_cast<std::size_t>(q)][1] =
            n == 2 ? 0 : (q < n - 1 ? q + 1 : q);
    }
    return d;
}

/// Concatenation witness pair with exactly half the states final.
/// First factor: a advances an m-cycle, b steps back with a floor at 0.
inline Dfa hf_concat_a(int m) {
    if (m < 2 || m % 2 != 0)
        throw PreconditionError("hf_concat_a: requires even m >= 2");
    Dfa d = detail::empty_dfa("ab", m, 0);
    for (int q = m / 2; q < m; ++q)
        d.finals.set(static_cast<std::size_t>(q));
    for (int q = 0; q < m; ++q) {
        d.delta[static_cast<std::size_t>(q)][0] = (q + 1) % m;
        d.delta[static_cast<std::size_t>(q)][1] = q == 0 ? 0 : q - 1;
    }
    return d;
}

/// Second factor: a cycles states 1..n-1 and fixes 0, b pushes 0 and 1 one
/// step up and fixes the rest. The two-state member degenerates (the
/// a-cycle shrinks to a loop and b's climb runs out of states), so it is
/// defined separately as the unique two-state automaton with this initial
/// and final layout for which the pair still needs m*2^n - (m/2)*2^(n-1)
/// states: a pushes everything to the top, b swaps.
inline Dfa hf_concat_b(int n) {
    if (n < 2 || n % 2 != 0)
        throw PreconditionError("hf_concat_b: requires even n >= 2");
    Dfa d = detail::empty_dfa("ab", n, 0);
    for (int q = n / 2; q < n; ++q)
        d.finals.set(static_cast<std::size_t>(q));
    if (n == 2) {
        d.delta = {{1, 1}, {1, 0}};
        return d;
    }
    for (int q = 0; q < n; ++q) {
        d.delta[static_cast<std::size_t>(q)][0] = q == 0 ? 0 : q % (n - 1) + 1;
        d.delta[static_cast<std::size_t>(q)][1] = q;
    }
    d.delta[0][1] = 1;
    d.delta[1][1] = 2;
    return d;
}

/// Star witness with half the states final: a advances the full n-cycle;
/// b fixes the endpoints 0 and n-1, climbs in between, and drops from n-2
/// back to 0.
inline Dfa palmovsky_star(int n) {
    if (n < 4 || n % 2 != 0)
        throw PreconditionError("palmovsky_star: requires even n >= 4");
    Dfa d = detail::empty_dfa("ab", n, 0);
    for (int q = n / 2; q < n; ++q)
        d.finals.set(static_cast<std::size_t>(q));
    for (int q = 0; q < n; ++q) {
        d.delta[static_cast<std::size_t>(q)][0] = (q + 1) % n;
        int b;
        if (q == 0 || q == n - 1)
            b = q;
        else if (q == n - 2)
            b = 0;
        else
            b = q + 1;
        d.delta[static_cast<std::size_t>(q)][1] = b;
    }
    return d;
}

/// Unary Boolean-operation witness: a 2^m-cycle with the upper half final.
/// Its own reverse (unary languages are reversal-invariant), exactly half
/// final, so it collapses to an m-state alternating automaton directly.
inline Dfa unary_union_k(int m) {
    if (m < 1)
        throw PreconditionError("unary_union_k: requires m >= 1");
    if (m > 13)
        throw PreconditionError("unary_union_k: state space too large");
    int k = 1 << m;
    Dfa d = detail::empty_dfa("a", k, 0);
    for (int q = k / 2; q < k; ++q)
        d.finals.set(static_cast<std::size_t>(q));
    for (int q = 0; q < k; ++q)
        d.delta[static_cast<std::size_t>(q)][0] = (q + 1) % k;
    return d;
}

/// Companion witness on a coprime cycle: 2^n-1 states with the top 2^(n-1)
/// of them final, chosen so that the union with unary_union_k needs the
/// full 2^m(2^n-1)-state cycle and keeps more than half of it final.
inline Dfa unary_union_l(int n) {
    if (n < 1)
        throw PreconditionError("unary_union_l: requires n >= 1");
    if (n > 13)
        throw PreconditionError("unary_union_l: state space too large");
    int k = (1 << n) - 1;
    Dfa d = detail::empty_dfa("a", k, 0);
    for (int q = (1 << (n - 1)) - 1; q < k; ++q)
        d.finals.set(static_cast<std::size_t>(q));
    for (int q = 0; q < k; ++q)
        d.delta[static_cast<std::size_t>(q)][0] = (q + 1) % k;
    return d;
}

/// unary_union_l brought to a power-of-two state count by one unreachable
/// non-final self-loop state, leaving exactly half the states final for
/// the alternating path.
inline Dfa unary_union_l_padded(int n) {
    return pad_dfa(unary_union_l(n), std::uint64_t{1} << n, 0);
}

} // namespace bafa
