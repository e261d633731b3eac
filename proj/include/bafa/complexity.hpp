#pragma once

#include <algorithm>
#include <set>
#include <sstream>

#include "bafa/ops.hpp"
#include "bafa/witnesses.hpp"

// The reversal lower-bound technique and the harness that measures every
// operation row at small sizes: an n-state Boolean automaton forces a
// 2^n-state DFA for the reverse language, so the minimal DFA of L^R bounds
// the Boolean size of L from below; in the alternating case the 2^n-state
// DFA additionally has exactly half of its states final, up to unreachable
// padding, so both the final and the non-final count of the minimal DFA
// must fit in half the space.

namespace bafa {

struct ReverseProfile {
    std::uint64_t states = 0; // state count of the minimal DFA of L^R
    std::uint64_t finals = 0; // its final-state count
};

inline ReverseProfile profile_of_minimal(const Dfa& min) {
    return {static_cast<std::uint64_t>(min.k), min.finals.count()};
}

/// Profile of L(d)^R via reversal and determinization.
inline ReverseProfile reverse_profile(const Dfa& d) {
    return profile_of_minimal(minimize(reverse_to_dfa(d)));
}

/// Profile of L(a)^R, computed directly from the assignment DFA — no
/// forward subset construction involved.
inline ReverseProfile reverse_profile(const Bfa& a) {
    return profile_of_minimal(minimize(reverse_dfa_of_bfa(a)));
}

inline int bsc_lower_of(const ReverseProfile& p) {
    return ceil_log2(p.states);
}

inline int asc_lower_of(const ReverseProfile& p) {
    int n = 1;
    while (p.finals > std::uint64_t{1} << (n - 1) ||
           p.states - p.finals > std::uint64_t{1} << (n - 1))
        ++n;
    return n;
}

/// Lower bound on the state count of any Boolean-form automaton for L(d).
inline int bsc_lower(const Dfa& d) { return bsc_lower_of(reverse_profile(d)); }

/// Lower bound on the state count of any alternating automaton for L(d).
inline int asc_lower(const Dfa& d) { return asc_lower_of(reverse_profile(d)); }

/// True iff every singleton {q} is both the exact image of the initial set
/// under some word and the exact set of states from which some word is
/// accepted. Forward and backward subset walks.
inline bool check_singletons(const Mnfa& m) {
    m.validate();
    int nsym = m.alphabet.size();
    auto explore = [&](const StateSet& start, auto step) {
        std::set<StateSet> seen;
        std::vector<StateSet> work{start};
        seen.insert(start);
        while (!work.empty()) {
            StateSet cur = work.back();
            work.pop_back();
            for (int s = 0; s < nsym; ++s) {
                StateSet t = step(cur, s);
                if (seen.insert(t).second) {
                    if (seen.size() > (std::size_t{1} << 20))
                        throw BoundCheckError("check_singletons: subset explosion");
                    work.push_back(std::move(t));
                }
            }
        }
        return seen;
    };
    auto forward = explore(m.initials, [&](const StateSet& s, int sym) {
        return mnfa_step(m, s, sym);
    });
    auto backward = explore(m.finals, [&](const StateSet& s, int sym) {
        StateSet pre(static_cast<std::size_t>(m.k));
        for (int q = 0; q < m.k; ++q)
            if (m.delta[static_cast<std::size_t>(q)][static_cast<std::size_t>(sym)].intersects(s))
                pre.set(static_cast<std::size_t>(q));
        return pre;
    });
    for (int q = 0; q < m.k; ++q) {
        StateSet single(static_cast<std::size_t>(m.k));
        single.set(static_cast<std::size_t>(q));
        if (!forward.count(single) || !backward.count(single))
            return false;
    }
    return true;
}

struct BoundsRow {
    std::string operation;
    std::string model; // "bfa" or "afa"
    int m = 0;         // 0 for unary operations
    int n = 0;
    std::uint64_t constructed = 0;
    std::uint64_t formula = 0;
    int lower = 0;
    bool tight = false;
};

struct BoundsReport {
    int max_m = 0;
    int max_n = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> operations;
    std::vector<BoundsRow> rows;
};

inline const std::vector<std::string>& bounds_operations() {
    static const std::vector<std::string> ops = {
        "complement",     "union",        "intersection", "difference",
        "symmetric-difference", "star",   "reverse",      "right-quotient",
        "left-quotient",  "concat",       "square"};
    return ops;
}

namespace detail {

// Alternating witnesses prescribed by the operation proofs: the unary
// cycle pair for the Boolean operations and quotients, collapsed through
// the reverse (unary languages equal their reverses).
inline Bfa unary_k_afa(int m) { return dfa_to_afa_of_reverse(unary_union_k(m)); }
inline Bfa unary_l_afa(int n) { return dfa_to_afa_of_reverse(unary_union_l_padded(n)); }

inline BoundsRow measure_row(std::string operation, std::string model, int m, int n,
                             const Bfa& result, std::uint64_t formula) {
    BoundsRow row;
    row.operation = std::move(operation);
    row.model = std::move(model);
    row.m = m;
    row.n = n;
    row.constructed = static_cast<std::uint64_t>(result.n);
    row.formula = formula;
    ReverseProfile p = reverse_profile(result);
    row.lower = row.model == "afa" ? asc_lower_of(p) : bsc_lower_of(p);
    if (row.lower > static_cast<int>(row.constructed))
        throw BoundCheckError("bounds_report: lower-bound estimate exceeds a constructed size");
    row.tight = p.states > 1 && row.constructed == row.formula &&
                static_cast<std::uint64_t>(row.lower) == row.constructed;
    return row;
}

} // namespace detail

/// Measure the requested operation rows at all sizes up to the caps:
/// construct the prescribed witnesses, run the construction for each model,
/// and pair the achieved size with the reversal lower bound. `operations`
/// empty means all rows; row order follows bounds_operations() with the
/// bfa model before afa and sizes ascending.
inline BoundsReport bounds_report(const std::vector<std::string>& operations, int max_m,
                                  int max_n, std::uint64_t seed) {
    if (max_m < 2 || max_m > 3 || max_n < 2 || max_n > 3)
        throw PreconditionError("bounds_report: cap exceeded (supported range is 2..3)");
    std::set<std::string> wanted(operations.begin(), operations.end());
    for (const std::string& op : wanted)
        if (std::find(bounds_operations().begin(), bounds_operations().end(), op) ==
            bounds_operations().end())
            throw PreconditionError("bounds_report: unknown operation '" + op + "'");
    BoundsReport report;
    report.max_m = max_m;
    report.max_n = max_n;
    report.seed = seed;
    for (const std::string& op : bounds_operations())
        if (wanted.empty() || wanted.count(op))
            report.operations.push_back(op);
    auto pow2 = [](int e) { return std::uint64_t{1} << e; };
    for (const std::string& op : report.operations) {
        for (const std::string& model : {std::string("bfa"), std::string("afa")}) {
            bool afa = model == "afa";
            if (op == "complement" || op == "star" || op == "reverse" || op == "square") {
                for (int n = 2; n <= max_n; ++n) {
                    Bfa result;
                    std::uint64_t formula = 0;
                    if (op == "complement") {
                        Bfa k = detail::unary_k_afa(n);
                        result = afa ? complement_afa(k) : complement_bfa(k);
                        formula = static_cast<std::uint64_t>(n);
                    } else if (op == "star") {
                        Bfa p = dfa_to_afa_of_reverse(palmovsky_star(1 << n));
                        result = afa ? star_afa(p) : star_bfa(p);
                        formula = pow2(n);
                    } else if (op == "reverse") {
                        Bfa f = cycle_afa(n);
                        result = afa ? reverse_afa(f) : reverse_bfa(f);
                        formula = pow2(n);
                    } else {
                        Bfa a = afa ? dfa_to_afa_of_reverse(hf_concat_a(1 << n))
                                    : dfa_to_bfa_of_reverse(maslov_a(1 << n));
                        result = afa ? square_afa(a) : square_bfa(a);
                        formula = pow2(n) + static_cast<std::uint64_t>(n) + (afa ? 1 : 0);
                    }
                    report.rows.push_back(detail::measure_row(op, model, 0, n, result, formula));
                }
                continue;
            }
            for (int m = 2; m <= max_m; ++m)
                for (int n = 2; n <= max_n; ++n) {
                    Bfa result;
                    std::uint64_t formula = 0;
                    if (op == "concat") {
                        if (afa) {
                            result = concat_afa(dfa_to_afa_of_reverse(hf_concat_b(1 << m)),
                                                dfa_to_afa_of_reverse(hf_concat_a(1 << n)));
                        } else {
                            result = concat_bfa(dfa_to_bfa_of_reverse(maslov_b(1 << m)),
                                                dfa_to_bfa_of_reverse(maslov_a(1 << n)));
                        }
                        formula = pow2(m) + static_cast<std::uint64_t>(n) + (afa ? 1 : 0);
                    } else if (op == "right-quotient") {
                        Bfa k = detail::unary_k_afa(m), l = detail::unary_l_afa(n);
                        result = afa ? right_quotient_afa(k, l) : right_quotient_bfa(k, l);
                        formula = pow2(m) + (afa ? 1 : 0);
                    } else if (op == "left-quotient") {
                        Bfa k = detail::unary_k_afa(m), l = detail::unary_l_afa(n);
                        result = afa ? left_quotient_afa(k, l) : left_quotient_bfa(k, l);
                        formula = static_cast<std::uint64_t>(m) + (afa ? 1 : 0);
                    } else {
                        SetOp sop;
                        Bfa k, l;
                        if (op == "union") {
                            sop = SetOp::union_;
                            k = detail::unary_k_afa(m);
                            l = detail::unary_l_afa(n);
                        } else if (op == "intersection") {
                            sop = SetOp::intersection;
                            k = complement_afa(detail::unary_k_afa(m));
                            l = complement_afa(detail::unary_l_afa(n));
                        } else if (op == "difference") {
                            sop = SetOp::difference;
                            k = complement_afa(detail::unary_k_afa(m));
                            l = detail::unary_l_afa(n);
                        } else {
                            sop = SetOp::symmetric_difference;
                            k = detail::unary_k_afa(m);
                            l = detail::unary_l_afa(n);
                        }
                        result = afa ? boolean_op_afa(k, l, sop) : boolean_op_bfa(k, l, sop);
                        bool plus_one = afa && op != "symmetric-difference";
                        formula = static_cast<std::uint64_t>(m + n) + (plus_one ? 1 : 0);
                    }
                    report.rows.push_back(detail::measure_row(op, model, m, n, result, formula));
                }
        }
    }
    return report;
}

/// Tab-separated serialization: '#' metadata lines, a fixed header, then
/// one row per measurement. Byte-stable for fixed inputs.
inline std::string to_tsv(const BoundsReport& report) {
    std::ostringstream out;
    out << "# caps: max_m=" << report.max_m << " max_n=" << report.max_n << "\n";
    out << "# seed: " << report.seed << "\n";
    out << "# operations:";
    for (const std::string& op : report.operations)
        out << " " << op;
    out << "\n";
    out << "operation\tmodel\tm\tn\tconstructed\tformula\tlower\ttight\n";
    for (const BoundsRow& row : report.rows)
        out << row.operation << "\t" << row.model << "\t" << row.m << "\t" << row.n << "\t"
            << row.constructed << "\t" << row.formula << "\t" << row.lower << "\t"
            << (row.tight ? "true" : "false") << "\n";
    return out.str();
}

} // namespace bafa
