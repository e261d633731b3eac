#pragma once

#include <map>
#include <utility>

#include "bafa/convert.hpp"

// Reference constructions on plain DFAs. Everything here is independent of
// the Boolean-function machinery: languages are compared by minimizing to a
// canonical form and testing structural equality.

namespace bafa {

namespace detail {

inline void require_same_alphabet(const Alphabet& a, const Alphabet& b, const char* who) {
    if (a.symbols() != b.symbols())
        throw PreconditionError(std::string(who) + ": operands use different alphabets");
}

// Renumber the reachable part in BFS discovery order (symbols in alphabet
// order). Two equivalent minimal DFAs renumbered this way are identical.
inline Dfa canonical_numbering(const Dfa& d) {
    int nsym = d.alphabet.size();
    std::vector<int> order;
    std::vector<int> number(static_cast<std::size_t>(d.k), -1);
    order.push_back(d.initial);
    number[static_cast<std::size_t>(d.initial)] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int s = 0; s < nsym; ++s) {
            int t = d.delta[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(s)];
            if (number[static_cast<std::size_t>(t)] < 0) {
                number[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    Dfa r;
    r.alphabet = d.alphabet;
    r.k = static_cast<int>(order.size());
    r.initial = 0;
    r.finals = StateSet(order.size());
    r.delta.assign(order.size(), std::vector<int>(static_cast<std::size_t>(nsym), 0));
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (d.finals.test(static_cast<std::size_t>(order[i])))
            r.finals.set(i);
        for (int s = 0; s < nsym; ++s)
            r.delta[i][static_cast<std::size_t>(s)] = number[static_cast<std::size_t>(
                d.delta[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(s)])];
    }
    return r;
}

} // namespace detail

/// Drop unreachable states, renumbering the rest in BFS order.
inline Dfa reachable_dfa(const Dfa& d) {
    d.validate();
    return detail::canonical_numbering(d);
}

/// Minimal complete DFA in canonical (BFS) numbering. Partition refinement
/// on successor-class signatures, then quotient and renumber.
inline Dfa minimize(const Dfa& d) {
    Dfa r = reachable_dfa(d);
    int nsym = r.alphabet.size();
    std::size_t k = static_cast<std::size_t>(r.k);
    std::vector<int> cls(k);
    for (std::size_t q = 0; q < k; ++q)
        cls[q] = r.finals.test(q) ? 1 : 0;
    int count = 2;
    for (;;) {
        std::map<std::vector<int>, int> fresh;
        std::vector<int> next(k);
        for (std::size_t q = 0; q < k; ++q) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(nsym) + 1);
            sig.push_back(cls[q]);
            for (int s = 0; s < nsym; ++s)
                sig.push_back(cls[static_cast<std::size_t>(r.delta[q][static_cast<std::size_t>(s)])]);
            auto [it, ins] = fresh.emplace(std::move(sig), static_cast<int>(fresh.size()));
            (void)ins;
            next[q] = it->second;
        }
        bool stable = static_cast<int>(fresh.size()) == count;
        count = static_cast<int>(fresh.size());
        cls = std::move(next);
        if (stable)
            break;
    }
    Dfa q;
    q.alphabet = r.alphabet;
    q.k = count;
    q.initial = cls[static_cast<std::size_t>(r.initial)];
    q.finals = StateSet(static_cast<std::size_t>(count));
    q.delta.assign(static_cast<std::size_t>(count),
                   std::vector<int>(static_cast<std::size_t>(nsym), -1));
    for (std::size_t s0 = 0; s0 < k; ++s0) {
        std::size_t c = static_cast<std::size_t>(cls[s0]);
        if (r.finals.test(s0))
            q.finals.set(c);
        for (int s = 0; s < nsym; ++s)
            q.delta[c][static_cast<std::size_t>(s)] =
                cls[static_cast<std::size_t>(r.delta[s0][static_cast<std::size_t>(s)])];
    }
    return detail::canonical_numbering(q);
}

inline bool dfa_equal(const Dfa& a, const Dfa& b) {
    return a.alphabet.symbols() == b.alphabet.symbols() && a.k == b.k &&
           a.initial == b.initial && a.finals == b.finals && a.delta == b.delta;
}

inline bool equivalent(const Dfa& a, const Dfa& b) {
    detail::require_same_alphabet(a.alphabet, b.alphabet, "equivalent");
    return dfa_equal(minimize(a), minimize(b));
}

inline Dfa complement_dfa(const Dfa& d) {
    d.validate();
    Dfa r = d;
    r.finals = ~r.finals;
    return r;
}

/// Pairing construction for the Boolean set operations.
inline Dfa product_dfa(const Dfa& a, const Dfa& b, SetOp op) {
    a.validate();
    b.validate();
    detail::require_same_alphabet(a.alphabet, b.alphabet, "product_dfa");
    int nsym = a.alphabet.size();
    std::map<std::pair<int, int>, int> index;
    std::vector<std::pair<int, int>> pairs;
    auto intern = [&](int p, int q) {
        auto [it, fresh] = index.emplace(std::make_pair(p, q), static_cast<int>(pairs.size()));
        if (fresh)
            pairs.emplace_back(p, q);
        return it->second;
    };
    intern(a.initial, b.initial);
    Dfa r;
    r.alphabet = a.alphabet;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        r.delta.emplace_back();
        for (int s = 0; s < nsym; ++s)
            r.delta.back().push_back(intern(a.delta[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)],
                                            b.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)]));
    }
    r.k = static_cast<int>(pairs.size());
    r.initial = 0;
    r.finals = StateSet(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        bool fa = a.finals.test(static_cast<std::size_t>(pairs[i].first));
        bool fb = b.finals.test(static_cast<std::size_t>(pairs[i].second));
        bool fin = false;
        switch (op) {
        case SetOp::union_: fin = fa || fb; break;
        case SetOp::intersection: fin = fa && fb; break;
        case SetOp::difference: fin = fa && !fb; break;
        case SetOp::symmetric_difference: fin = fa != fb; break;
        }
        if (fin)
            r.finals.set(i);
    }
    return r;
}

/// Concatenation via (state of a, subset of b) pairs: whenever the first
/// component is final the subset absorbs b's initial state.
inline Dfa concat_dfa(const Dfa& a, const Dfa& b) {
    a.validate();
    b.validate();
    detail::require_same_alphabet(a.alphabet, b.alphabet, "concat_dfa");
    int nsym = a.alphabet.size();
    using Node = std::pair<int, StateSet>;
    auto with_start = [&](int p, StateSet s) {
        if (a.finals.test(static_cast<std::size_t>(p)))
            s.set(static_cast<std::size_t>(b.initial));
        return Node(p, std::move(s));
    };
    std::map<Node, int> index;
    std::vector<Node> nodes;
    auto intern = [&](Node n) {
        auto [it, fresh] = index.emplace(n, static_cast<int>(nodes.size()));
        if (fresh) {
            nodes.push_back(std::move(n));
            if (nodes.size() > 200000)
                throw BoundCheckError("concat_dfa: state explosion");
        }
        return it->second;
    };
    intern(with_start(a.initial, StateSet(static_cast<std::size_t>(b.k))));
    Dfa r;
    r.alphabet = a.alphabet;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Node cur = nodes[i];
        r.delta.emplace_back();
        for (int s = 0; s < nsym; ++s) {
            int p = a.delta[static_cast<std::size_t>(cur.first)][static_cast<std::size_t>(s)];
            StateSet t(static_cast<std::size_t>(b.k));
            for (auto q = cur.second.find_first(); q != StateSet::npos;
                 q = cur.second.find_next(q))
                t.set(static_cast<std::size_t>(
                    b.delta[q][static_cast<std::size_t>(s)]));
            r.delta.back().push_back(intern(with_start(p, std::move(t))));
        }
    }
    r.k = static_cast<int>(nodes.size());
    r.initial = 0;
    r.finals = StateSet(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].second.intersects(b.finals))
            r.finals.set(i);
    return r;
}

/// Kleene star via subset construction with restart closure: any subset
/// touching a final state also contains the initial state. When the
/// initial state is already final it doubles as the star's start; otherwise
/// a fresh start state (placed last) accepts the empty word.
inline Dfa star_dfa(const Dfa& d) {
    d.validate();
    int nsym = d.alphabet.size();
    auto close = [&](StateSet s) {
        if (s.intersects(d.finals))
            s.set(static_cast<std::size_t>(d.initial));
        return s;
    };
    std::map<StateSet, int> index;
    std::vector<StateSet> sets;
    auto intern = [&](StateSet s) {
        auto [it, fresh] = index.emplace(s, static_cast<int>(sets.size()));
        if (fresh)
            sets.push_back(std::move(s));
        return it->second;
    };
    StateSet start(static_cast<std::size_t>(d.k));
    start.set(static_cast<std::size_t>(d.initial));
    intern(close(start));
    std::vector<std::vector<int>> trans;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        StateSet cur = sets[i];
        trans.emplace_back();
        for (int s = 0; s < nsym; ++s) {
            StateSet t(static_cast<std::size_t>(d.k));
            for (auto q = cur.find_first(); q != StateSet::npos; q = cur.find_next(q))
                t.set(static_cast<std::size_t>(d.delta[q][static_cast<std::size_t>(s)]));
            trans.back().push_back(intern(close(std::move(t))));
        }
    }
    bool merged = d.is_final(d.initial);
    int nsub = static_cast<int>(sets.size());
    Dfa r;
    r.alphabet = d.alphabet;
    r.k = nsub + (merged ? 0 : 1);
    r.finals = StateSet(static_cast<std::size_t>(r.k));
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].intersects(d.finals))
            r.finals.set(i);
    r.delta = std::move(trans);
    if (merged) {
        r.initial = 0;
    } else {
        r.initial = nsub;
        r.finals.set(static_cast<std::size_t>(nsub));
        r.delta.emplace_back();
        for (int s = 0; s < nsym; ++s)
            r.delta.back().push_back(r.delta[0][static_cast<std::size_t>(s)]);
    }
    return r;
}

/// DFA of the reverse language: reverse the transition graph, then
/// determinize.
inline Dfa reverse_to_dfa(const Dfa& d) {
    d.validate();
    return determinize(reverse_mnfa(dfa_to_mnfa(d)));
}

/// Right quotient: words w with wu accepted by k for some u accepted by l.
/// Keeps k's states, re-deriving finality by a backward reachability pass
/// over the pair graph of k and l.
inline Dfa right_quotient_dfa(const Dfa& k, const Dfa& l) {
    k.validate();
    l.validate();
    detail::require_same_alphabet(k.alphabet, l.alphabet, "right_quotient_dfa");
    int nsym = k.alphabet.size();
    std::size_t nk = static_cast<std::size_t>(k.k), nl = static_cast<std::size_t>(l.k);
    std::vector<char> good(nk * nl, 0);
    std::vector<std::size_t> work;
    for (std::size_t p = 0; p < nk; ++p)
        for (std::size_t q = 0; q < nl; ++q)
            if (k.finals.test(p) && l.finals.test(q)) {
                good[p * nl + q] = 1;
                work.push_back(p * nl + q);
            }
    // Backward edges of the pair graph, built once.
    std::vector<std::vector<std::size_t>> preds(nk * nl);
    for (std::size_t p = 0; p < nk; ++p)
        for (std::size_t q = 0; q < nl; ++q)
            for (int s = 0; s < nsym; ++s) {
                std::size_t tp = static_cast<std::size_t>(k.delta[p][static_cast<std::size_t>(s)]);
                std::size_t tq = static_cast<std::size_t>(l.delta[q][static_cast<std::size_t>(s)]);
                preds[tp * nl + tq].push_back(p * nl + q);
            }
    while (!work.empty()) {
        std::size_t node = work.back();
        work.pop_back();
        for (std::size_t pre : preds[node])
            if (!good[pre]) {
                good[pre] = 1;
                work.push_back(pre);
            }
    }
    Dfa r = k;
    r.finals = StateSet(nk);
    for (std::size_t p = 0; p < nk; ++p)
        if (good[p * nl + static_cast<std::size_t>(l.initial)])
            r.finals.set(p);
    return r;
}

/// Left quotient: words w with uw accepted by k for some u accepted by l.
/// Collects the k-states reachable under words of l (forward pair walk),
/// then determinizes k from that state set.
inline Dfa left_quotient_dfa(const Dfa& k, const Dfa& l) {
    k.validate();
    l.validate();
    detail::require_same_alphabet(k.alphabet, l.alphabet, "left_quotient_dfa");
    int nsym = k.alphabet.size();
    std::size_t nl = static_cast<std::size_t>(l.k);
    std::vector<char> seen(static_cast<std::size_t>(k.k) * nl, 0);
    std::vector<std::pair<int, int>> work;
    seen[static_cast<std::size_t>(k.initial) * nl + static_cast<std::size_t>(l.initial)] = 1;
    work.emplace_back(k.initial, l.initial);
    StateSet starts(static_cast<std::size_t>(k.k));
    while (!work.empty()) {
        auto [p, q] = work.back();
        work.pop_back();
        if (l.finals.test(static_cast<std::size_t>(q)))
            starts.set(static_cast<std::size_t>(p));
        for (int s = 0; s < nsym; ++s) {
            int tp = k.delta[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)];
            int tq = l.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(s)];
            if (!seen[static_cast<std::size_t>(tp) * nl + static_cast<std::size_t>(tq)]) {
                seen[static_cast<std::size_t>(tp) * nl + static_cast<std::size_t>(tq)] = 1;
                work.emplace_back(tp, tq);
            }
        }
    }
    Mnfa m = dfa_to_mnfa(k);
    m.initials = starts;
    return determinize(m);
}

/// Minimal DFA of a Bfa's language without a forward subset construction:
/// the assignment-space DFA of the reverse language is determinized back
/// (reachable part first), which lands directly on the minimal DFA.
inline Dfa bfa_canonical_dfa(const Bfa& a) {
    Dfa rev = reachable_dfa(reverse_dfa_of_bfa(a));
    return minimize(reverse_to_dfa(rev));
}

/// Shared-alphabet word-by-word comparison up to a length bound; the blunt
/// instrument backing the sharper language-equality checks.
inline bool agree_upto(const Bfa& a, const Dfa& d, int maxlen) {
    detail::require_same_alphabet(a.alphabet, d.alphabet, "agree_upto");
    std::vector<std::string> layer{""};
    for (int len = 0; len <= maxlen; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : layer) {
            if (bfa_accepts(a, w) != dfa_accepts(d, w))
                return false;
            if (len < maxlen)
                for (int s = 0; s < a.alphabet.size(); ++s)
                    next.push_back(w + a.alphabet.symbol(s));
        }
        layer = std::move(next);
    }
    return true;
}

} // namespace bafa
