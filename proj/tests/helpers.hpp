#pragma once

// Shared test utilities: deterministic pseudo-random machines (raw engine
// bits only, so sequences are identical on every platform) and helpers for
// comparing languages through canonical minimal DFAs.

#include <random>
#include <string>
#include <vector>

#include "bafa/convert.hpp"
#include "bafa/oracle.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline bool coin(Rng& rng) { return rng() & 1; }

inline int pick(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline bafa::BoolFn random_fn(Rng& rng, int arity) {
    bafa::BoolFn f = bafa::BoolFn::constant(arity, false);
    for (std::uint32_t u = 0; u < f.size(); ++u)
        f.set(u, coin(rng));
    return f;
}

inline bafa::Bfa random_bfa(Rng& rng, int n) {
    bafa::Bfa a;
    a.alphabet = bafa::Alphabet("ab");
    a.n = n;
    a.init = random_fn(rng, n);
    a.finals = static_cast<std::uint32_t>(rng()) & ((std::uint32_t{1} << n) - 1);
    a.delta.assign(static_cast<std::size_t>(n), {});
    for (auto& row : a.delta)
        row = {random_fn(rng, n), random_fn(rng, n)};
    return a;
}

inline bafa::Bfa random_afa(Rng& rng, int n) {
    bafa::Bfa a = random_bfa(rng, n);
    a.init = bafa::BoolFn::projection(n, 1);
    return a;
}

inline bafa::Dfa random_dfa(Rng& rng, int k) {
    bafa::Dfa d;
    d.alphabet = bafa::Alphabet("ab");
    d.k = k;
    d.initial = pick(rng, 0, k - 1);
    d.finals = bafa::StateSet(static_cast<std::size_t>(k));
    for (int q = 0; q < k; ++q)
        if (coin(rng))
            d.finals.set(static_cast<std::size_t>(q));
    d.delta.assign(static_cast<std::size_t>(k), std::vector<int>(2, 0));
    for (auto& row : d.delta)
        for (int& t : row)
            t = pick(rng, 0, k - 1);
    return d;
}

inline bool bfa_equal(const bafa::Bfa& a, const bafa::Bfa& b) {
    return a.alphabet == b.alphabet && a.n == b.n && a.init == b.init &&
           a.finals == b.finals && a.delta == b.delta;
}

inline bafa::Dfa canon(const bafa::Bfa& a) { return bafa::bfa_canonical_dfa(a); }
inline bafa::Dfa canon(const bafa::Dfa& d) {
    return bafa::minimize(bafa::reachable_dfa(d));
}

// Language equality between a construction output and an oracle DFA.
inline bool same_language(const bafa::Bfa& got, const bafa::Dfa& expected) {
    return bafa::dfa_equal(canon(got), canon(expected));
}

// Two-state machine used across the suites: initial function q1&q2, state
// q1 final, and transitions q1,a = q1|q2; q1,b = q1; q2,a = q2; q2,b = q1&!q2.
inline bafa::Bfa example_bfa() {
    bafa::Bfa a;
    a.alphabet = bafa::Alphabet("ab");
    a.n = 2;
    a.init = bafa::parse_expr("q1&q2", 2);
    a.finals = 0b01;
    a.delta = {{bafa::parse_expr("q1|q2", 2), bafa::parse_expr("q1", 2)},
               {bafa::parse_expr("q2", 2), bafa::parse_expr("q1&!q2", 2)}};
    return a;
}

inline const char* example_bfa_text() {
    return "type: bfa\n"
           "states: 2\n"
           "alphabet: a,b\n"
           "initial: q1&q2\n"
           "final: 1\n"
           "trans: q1,a = q1|q2\n"
           "trans: q1,b = q1\n"
           "trans: q2,a = q2\n"
           "trans: q2,b = q1&!q2\n";
}

inline std::vector<std::string> words_upto(const std::string& alphabet, int maxlen) {
    std::vector<std::string> out{""};
    std::size_t begin = 0;
    for (int len = 1; len <= maxlen; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (char c : alphabet)
                out.push_back(out[i] + c);
        begin = end;
    }
    return out;
}

} // namespace testutil
