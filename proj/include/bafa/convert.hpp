#pragma once

#include <map>
#include <optional>

#include "bafa/machines.hpp"

namespace bafa {

inline int ceil_log2(std::uint64_t s) {
    int n = 0;
    while ((std::uint64_t{1} << n) < s)
        ++n;
    return n;
}

inline std::uint64_t next_pow2(std::uint64_t s) { return std::uint64_t{1} << ceil_log2(s); }

namespace detail {

// Per-symbol successor map of the assignment space: phi_a(u) is the
// assignment (q_1 a, ..., q_n a) evaluated at u.
inline std::vector<std::vector<std::uint32_t>> assignment_maps(const Bfa& a) {
    std::uint32_t k = std::uint32_t{1} << a.n;
    std::vector<std::vector<std::uint32_t>> phi(
        static_cast<std::size_t>(a.alphabet.size()), std::vector<std::uint32_t>(k, 0));
    for (int s = 0; s < a.alphabet.size(); ++s)
        for (std::uint32_t u = 0; u < k; ++u) {
            std::uint32_t v = 0;
            for (int i = 1; i <= a.n; ++i)
                v |= static_cast<std::uint32_t>(a.transition(i, s).evaluate(u)) << (i - 1);
            phi[static_cast<std::size_t>(s)][u] = v;
        }
    return phi;
}

} // namespace detail

/// Assignment-space automaton of a Bfa: states are the 2^n assignments,
/// initial states those satisfying the initial function, the single final
/// state is the finality assignment, and u goes to u' on a exactly when
/// (q_1 a, ..., q_n a) maps u' to u. The result accepts the same language
/// and its reverse is a complete DFA.
inline Mnfa bfa_to_mnfa(const Bfa& a) {
    a.validate();
    if (a.n > 13)
        throw PreconditionError("bfa_to_mnfa: assignment space too large (max 13 states)");
    auto phi = detail::assignment_maps(a);
    std::uint32_t k = std::uint32_t{1} << a.n;
    Mnfa m;
    m.alphabet = a.alphabet;
    m.k = static_cast<int>(k);
    m.initials = StateSet(k);
    m.finals = StateSet(k);
    for (std::uint32_t u = 0; u < k; ++u)
        if (a.init.evaluate(u))
            m.initials.set(u);
    m.finals.set(a.finals);
    m.delta.assign(k, std::vector<StateSet>(static_cast<std::size_t>(a.alphabet.size()),
                                            StateSet(k)));
    for (int s = 0; s < a.alphabet.size(); ++s)
        for (std::uint32_t u = 0; u < k; ++u)
            m.delta[phi[static_cast<std::size_t>(s)][u]][static_cast<std::size_t>(s)].set(u);
    return m;
}

/// Inverse direction: a reverse-deterministic Mnfa on 2^n states collapses
/// to an n-state Bfa. States are read as assignments through `code`
/// (state -> assignment, a bijection; identity when omitted). Component i
/// of the transition tuple at assignment u is bit i of the unique
/// a-predecessor of u; the initial function tests membership in the
/// initial set; the finality mask is the code of the unique final state.
inline Bfa mnfa_to_bfa(const Mnfa& m, const std::vector<std::uint32_t>& code) {
    m.validate();
    std::uint32_t k = static_cast<std::uint32_t>(m.k);
    if ((k & (k - 1)) != 0)
        throw PreconditionError("mnfa_to_bfa: state count must be a power of two");
    int n = ceil_log2(k);
    if (n < 1)
        throw PreconditionError("mnfa_to_bfa: at least two states required");
    if (m.finals.count() != 1)
        throw PreconditionError("mnfa_to_bfa: exactly one final state required");
    if (code.size() != k)
        throw PreconditionError("mnfa_to_bfa: state coding size mismatch");
    std::vector<std::uint32_t> decode(k, k);
    for (std::uint32_t s = 0; s < k; ++s) {
        if (code[s] >= k || decode[code[s]] != k)
            throw PreconditionError("mnfa_to_bfa: state coding is not a bijection");
        decode[code[s]] = s;
    }
    // Unique predecessor per (state, symbol); its absence or duplication
    // means the reverse is not deterministic and complete.
    std::vector<std::vector<std::uint32_t>> pred(
        static_cast<std::size_t>(m.alphabet.size()), std::vector<std::uint32_t>(k, k));
    for (int s = 0; s < m.alphabet.size(); ++s)
        for (std::uint32_t v = 0; v < k; ++v) {
            const StateSet& succ = m.delta[v][static_cast<std::size_t>(s)];
            for (auto u = succ.find_first(); u != StateSet::npos; u = succ.find_next(u)) {
                if (pred[static_cast<std::size_t>(s)][u] != k)
                    throw PreconditionError("mnfa_to_bfa: reverse is not deterministic");
                pred[static_cast<std::size_t>(s)][u] = v;
            }
        }
    for (const auto& row : pred)
        for (std::uint32_t p : row)
            if (p == k)
                throw PreconditionError("mnfa_to_bfa: reverse is not complete");
    Bfa a;
    a.alphabet = m.alphabet;
    a.n = n;
    a.init = BoolFn(n);
    for (std::uint32_t c = 0; c < k; ++c)
        if (m.initials.test(decode[c]))
            a.init.set(c, true);
    a.finals = code[static_cast<std::uint32_t>(m.finals.find_first())];
    a.delta.assign(static_cast<std::size_t>(n),
                   std::vector<BoolFn>(static_cast<std::size_t>(m.alphabet.size()), BoolFn(n)));
    for (int s = 0; s < m.alphabet.size(); ++s)
        for (std::uint32_t c = 0; c < k; ++c) {
            std::uint32_t pc = code[pred[static_cast<std::size_t>(s)][decode[c]]];
            for (int i = 0; i < n; ++i)
                if (pc >> i & 1u)
                    a.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)].set(c, true);
        }
    return a;
}

inline Bfa mnfa_to_bfa(const Mnfa& m) {
    std::vector<std::uint32_t> identity(static_cast<std::size_t>(m.k));
    for (std::uint32_t s = 0; s < identity.size(); ++s)
        identity[s] = s;
    return mnfa_to_bfa(m, identity);
}

/// Subset construction. Subset states are numbered in BFS discovery order
/// (symbols scanned in alphabet order); if the empty subset is reachable it
/// becomes a single dead state placed last.
inline Dfa determinize(const Mnfa& m) {
    m.validate();
    Dfa d;
    d.alphabet = m.alphabet;
    int nsym = m.alphabet.size();
    if (m.initials.none()) {
        d.k = 1;
        d.initial = 0;
        d.finals = StateSet(1);
        d.delta.assign(1, std::vector<int>(static_cast<std::size_t>(nsym), 0));
        return d;
    }
    std::map<StateSet, int> index;
    std::vector<StateSet> sets;
    std::vector<std::vector<int>> trans;
    bool dead_used = false;
    index.emplace(m.initials, 0);
    sets.push_back(m.initials);
    for (std::size_t next = 0; next < sets.size(); ++next) {
        StateSet cur = sets[next];
        trans.emplace_back();
        for (int s = 0; s < nsym; ++s) {
            StateSet t = mnfa_step(m, cur, s);
            if (t.none()) {
                dead_used = true;
                trans.back().push_back(-1);
                continue;
            }
            auto [it, fresh] = index.emplace(t, static_cast<int>(sets.size()));
            if (fresh) {
                sets.push_back(t);
                if (sets.size() > (std::size_t{1} << 20))
                    throw BoundCheckError("determinize: subset explosion");
            }
            trans.back().push_back(it->second);
        }
    }
    int dead = static_cast<int>(sets.size());
    d.k = dead + (dead_used ? 1 : 0);
    d.initial = 0;
    d.finals = StateSet(static_cast<std::size_t>(d.k));
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].intersects(m.finals))
            d.finals.set(i);
    for (auto& row : trans)
        for (int& t : row)
            if (t < 0)
                t = dead;
    d.delta = std::move(trans);
    if (dead_used)
        d.delta.emplace_back(static_cast<std::size_t>(nsym), dead);
    return d;
}

/// Single-initial form: a fresh initial state (index k) copies the joint
/// successors of the old initial states and is final exactly when the old
/// automaton accepted the empty word.
inline Mnfa mnfa_to_nfa(const Mnfa& m) {
    m.validate();
    Mnfa r;
    r.alphabet = m.alphabet;
    r.k = m.k + 1;
    std::size_t k = static_cast<std::size_t>(r.k);
    r.initials = StateSet(k);
    r.initials.set(static_cast<std::size_t>(m.k));
    r.finals = StateSet(k);
    for (auto q = m.finals.find_first(); q != StateSet::npos; q = m.finals.find_next(q))
        r.finals.set(q);
    if (m.initials.intersects(m.finals))
        r.finals.set(static_cast<std::size_t>(m.k));
    r.delta.assign(k, std::vector<StateSet>(static_cast<std::size_t>(m.alphabet.size()),
                                            StateSet(k)));
    for (int q = 0; q < m.k; ++q)
        for (int s = 0; s < m.alphabet.size(); ++s) {
            const StateSet& t = m.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)];
            for (auto v = t.find_first(); v != StateSet::npos; v = t.find_next(v))
                r.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)].set(v);
        }
    for (int s = 0; s < m.alphabet.size(); ++s) {
        StateSet joint = mnfa_step(m, m.initials, s);
        for (auto v = joint.find_first(); v != StateSet::npos; v = joint.find_next(v))
            r.delta[static_cast<std::size_t>(m.k)][static_cast<std::size_t>(s)].set(v);
    }
    return r;
}

/// Append unreachable self-loop states up to `size` states in total; the
/// first `extra_finals` of the appended states are final.
inline Dfa pad_dfa(const Dfa& d, std::uint64_t size, std::uint64_t extra_finals) {
    d.validate();
    std::uint64_t k = static_cast<std::uint64_t>(d.k);
    if (size < k)
        throw PreconditionError("pad_dfa: target size below current state count");
    if (extra_finals > size - k)
        throw PreconditionError("pad_dfa: more padding finals than padding states");
    Dfa r = d;
    r.k = static_cast<int>(size);
    r.finals.resize(static_cast<std::size_t>(size));
    for (std::uint64_t q = k; q < size; ++q) {
        if (q - k < extra_finals)
            r.finals.set(static_cast<std::size_t>(q));
        r.delta.emplace_back(static_cast<std::size_t>(d.alphabet.size()),
                             static_cast<int>(q));
    }
    return r;
}

namespace detail {

inline int reverse_arity(std::uint64_t padded) {
    int n = ceil_log2(padded < 2 ? 2 : padded);
    if (n > BoolFn::max_arity)
        throw PreconditionError("padded state space too large for Boolean-function form");
    return n;
}

// Shared core of the reverse-language constructions: with states read as
// assignments through `code`, component i on symbol a at assignment u is
// bit i of the code of the padded DFA's a-successor, the initial function
// tests finality of the padded DFA's state, and the finality mask is the
// code of the DFA's initial state.
inline Bfa reverse_of_padded_dfa(const Dfa& d, int n, const std::vector<std::uint32_t>& code,
                                 const StateSet& padded_finals) {
    std::uint32_t p = std::uint32_t{1} << n;
    std::vector<std::uint32_t> decode(p);
    for (std::uint32_t s = 0; s < p; ++s)
        decode[code[s]] = s;
    auto succ = [&](std::uint32_t q, int sym) {
        return q < static_cast<std::uint32_t>(d.k)
                   ? static_cast<std::uint32_t>(d.delta[q][static_cast<std::size_t>(sym)])
                   : q;
    };
    Bfa a;
    a.alphabet = d.alphabet;
    a.n = n;
    a.init = BoolFn(n);
    for (std::uint32_t c = 0; c < p; ++c)
        if (padded_finals.test(decode[c]))
            a.init.set(c, true);
    a.finals = code[static_cast<std::uint32_t>(d.initial)];
    a.delta.assign(static_cast<std::size_t>(n),
                   std::vector<BoolFn>(static_cast<std::size_t>(d.alphabet.size()), BoolFn(n)));
    for (int s = 0; s < d.alphabet.size(); ++s)
        for (std::uint32_t c = 0; c < p; ++c) {
            std::uint32_t sc = code[succ(decode[c], s)];
            for (int i = 0; i < n; ++i)
                if (sc >> i & 1u)
                    a.delta[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)].set(c, true);
        }
    return a;
}

} // namespace detail

/// A k-state DFA yields a ceil(log2 k)-state Bfa for the reverse language.
/// The DFA is padded with unreachable non-final self-loop states to the
/// next power of two before states are read as assignments.  `padded_size`
/// forces a larger padded state count (a power of two >= k).
inline Bfa dfa_to_bfa_of_reverse(const Dfa& d, std::optional<std::uint64_t> padded_size = {}) {
    d.validate();
    std::uint64_t k = static_cast<std::uint64_t>(d.k);
    std::uint64_t forced = padded_size.value_or(next_pow2(k < 2 ? 2 : k));
    if (forced < k || (forced & (forced - 1)) != 0 || forced < 2)
        throw PreconditionError("dfa_to_bfa_of_reverse: padded size must be a power of two >= the state count");
    int n = detail::reverse_arity(forced);
    std::uint32_t p = std::uint32_t{1} << n;
    std::vector<std::uint32_t> code(p);
    for (std::uint32_t s = 0; s < p; ++s)
        code[s] = s;
    StateSet padded_finals = d.finals;
    padded_finals.resize(p);
    return detail::reverse_of_padded_dfa(d, n, code, padded_finals);
}

/// Like dfa_to_bfa_of_reverse, but padding finality is balanced to exactly
/// half the padded states and the assignment coding sends final states to
/// odd assignments, making the initial function the projection onto q_1.
/// `padded_size` forces the padded state count (a power of two >= k); by
/// default the smallest power of two whose half accommodates both the
/// final and the non-final states is used.
inline Bfa dfa_to_afa_of_reverse(const Dfa& d, std::optional<std::uint64_t> padded_size = {}) {
    d.validate();
    std::uint64_t k = static_cast<std::uint64_t>(d.k);
    std::uint64_t f = d.finals.count();
    std::uint64_t p = padded_size.value_or(next_pow2(std::max({k, 2 * f, 2 * (k - f), std::uint64_t{2}})));
    if (p < k || (p & (p - 1)) != 0 || p < 2)
        throw PreconditionError("dfa_to_afa_of_reverse: padded size must be a power of two >= the state count");
    int n = detail::reverse_arity(p);
    std::uint64_t half = p / 2;
    if (f > half || k - f > half)
        throw PreconditionError(
            "dfa_to_afa_of_reverse: cannot balance finality to half of " + std::to_string(p) +
            " states (" + std::to_string(f) + " final, " + std::to_string(k - f) + " non-final)");
    StateSet padded_finals = d.finals;
    padded_finals.resize(static_cast<std::size_t>(p));
    for (std::uint64_t q = k; q < k + (half - f); ++q)
        padded_finals.set(static_cast<std::size_t>(q));
    // Final states get the odd assignments, in state order.
    std::vector<std::uint32_t> code(static_cast<std::size_t>(p));
    std::uint32_t next_odd = 1, next_even = 0;
    for (std::uint64_t s = 0; s < p; ++s) {
        if (padded_finals.test(static_cast<std::size_t>(s))) {
            code[static_cast<std::size_t>(s)] = next_odd;
            next_odd += 2;
        } else {
            code[static_cast<std::size_t>(s)] = next_even;
            next_even += 2;
        }
    }
    Bfa a = detail::reverse_of_padded_dfa(d, n, code, padded_finals);
    if (!(a.init == BoolFn::projection(n, 1)))
        throw BoundCheckError("dfa_to_afa_of_reverse: initial function is not the q_1 projection");
    return a;
}

/// Make the initial function a projection by adding one fresh state at
/// index 1. The fresh state's transition on a is the old initial function
/// advanced by a; it is final exactly when the automaton accepted the
/// empty word. Old state q_i becomes q_{i+1}.
inline Bfa bfa_to_afa(const Bfa& a) {
    a.validate();
    if (a.n + 1 > BoolFn::max_arity)
        throw PreconditionError("bfa_to_afa: state count limit exceeded");
    int n = a.n + 1;
    Bfa r;
    r.alphabet = a.alphabet;
    r.n = n;
    r.init = BoolFn::projection(n, 1);
    r.finals = a.finals << 1 | static_cast<std::uint32_t>(a.init.evaluate(a.finals));
    r.delta.assign(static_cast<std::size_t>(n), {});
    for (int s = 0; s < a.alphabet.size(); ++s)
        r.delta[0].push_back(shift_vars(bfa_step(a, a.init, s), 1, n));
    for (int i = 1; i <= a.n; ++i)
        for (int s = 0; s < a.alphabet.size(); ++s)
            r.delta[static_cast<std::size_t>(i)].push_back(shift_vars(a.transition(i, s), 1, n));
    if (!classify_machine(r).afa)
        throw BoundCheckError("bfa_to_afa: result is not an alternating automaton");
    return r;
}

/// The reverse of bfa_to_mnfa(a), already deterministic, materialized as a
/// DFA without building the intermediate edge sets: the a-successor of
/// assignment u is (q_1 a, ..., q_n a) evaluated at u, the initial state is
/// the finality assignment, and assignments satisfying the initial function
/// are final. Accepts the reverse language of a.
inline Dfa reverse_dfa_of_bfa(const Bfa& a) {
    a.validate();
    auto phi = detail::assignment_maps(a);
    std::uint32_t k = std::uint32_t{1} << a.n;
    Dfa d;
    d.alphabet = a.alphabet;
    d.k = static_cast<int>(k);
    d.initial = static_cast<int>(a.finals);
    d.finals = StateSet(k);
    for (std::uint32_t u = 0; u < k; ++u)
        if (a.init.evaluate(u))
            d.finals.set(u);
    d.delta.assign(k, std::vector<int>(static_cast<std::size_t>(a.alphabet.size()), 0));
    for (std::uint32_t u = 0; u < k; ++u)
        for (int s = 0; s < a.alphabet.size(); ++s)
            d.delta[u][static_cast<std::size_t>(s)] =
                static_cast<int>(phi[static_cast<std::size_t>(s)][u]);
    return d;
}

} // namespace bafa
