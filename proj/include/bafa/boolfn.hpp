#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bafa/errors.hpp"

namespace bafa {

/// One truth assignment to the variables q_1..q_arity. Bit i-1 of `bits`
/// holds the value of q_i, so q_1 is the least significant bit. The same
/// packing doubles as the row index into a truth table.
struct Assignment {
    int arity = 0;
    std::uint32_t bits = 0;
};

/// A Boolean function of q_1..q_n in canonical truth-table form. Row k of
/// the table is the value at the assignment whose packed bits equal k.
/// Equality of tables is equality of functions.
class BoolFn {
  public:
    static constexpr int max_arity = 20;

    BoolFn() : BoolFn(1) {}

    explicit BoolFn(int arity) : arity_(checked_arity(arity)), words_(word_count(arity_), 0) {}

    static BoolFn constant(int arity, bool value) {
        BoolFn f(arity);
        if (value) {
            std::fill(f.words_.begin(), f.words_.end(), ~std::uint64_t{0});
            f.mask_tail();
        }
        return f;
    }

    /// The function q_var (1-based variable index).
    static BoolFn projection(int arity, int var) {
        BoolFn f(arity);
        if (var < 1 || var > arity)
            throw PreconditionError("projection: variable index out of range");
        for (std::uint32_t k = 0; k < f.size(); ++k)
            if (k >> (var - 1) & 1u)
                f.set(k, true);
        return f;
    }

    /// q_{v1} | q_{v2} | ... ; the empty list yields the constant 0.
    static BoolFn disjunction(int arity, std::span<const int> vars) {
        BoolFn f(arity);
        std::uint32_t mask = 0;
        for (int v : vars) {
            if (v < 1 || v > arity)
                throw PreconditionError("disjunction: variable index out of range");
            mask |= 1u << (v - 1);
        }
        for (std::uint32_t k = 0; k < f.size(); ++k)
            if (k & mask)
                f.set(k, true);
        return f;
    }

    /// Build from a row string, bits[k] = value at assignment k ('0'/'1').
    static BoolFn from_table(int arity, std::string_view bits) {
        BoolFn f(arity);
        if (bits.size() != f.size())
            throw PreconditionError("from_table: row count does not match arity");
        for (std::uint32_t k = 0; k < f.size(); ++k) {
            if (bits[k] != '0' && bits[k] != '1')
                throw PreconditionError("from_table: rows must be '0' or '1'");
            f.set(k, bits[k] == '1');
        }
        return f;
    }

    int arity() const { return arity_; }

    /// Number of truth-table rows, 2^arity.
    std::uint32_t size() const { return std::uint32_t{1} << arity_; }

    bool evaluate(std::uint32_t assignment) const {
        return words_[assignment >> 6] >> (assignment & 63) & 1u;
    }

    bool evaluate(const Assignment& u) const {
        if (u.arity != arity_)
            throw PreconditionError("evaluate: assignment arity does not match function arity");
        return evaluate(u.bits);
    }

    void set(std::uint32_t assignment, bool value) {
        std::uint64_t bit = std::uint64_t{1} << (assignment & 63);
        if (value)
            words_[assignment >> 6] |= bit;
        else
            words_[assignment >> 6] &= ~bit;
    }

    std::string table() const {
        std::string s(size(), '0');
        for (std::uint32_t k = 0; k < size(); ++k)
            if (evaluate(k))
                s[k] = '1';
        return s;
    }

    friend bool operator==(const BoolFn&, const BoolFn&) = default;

    friend BoolFn operator~(BoolFn f) {
        for (auto& w : f.words_)
            w = ~w;
        f.mask_tail();
        return f;
    }

    friend BoolFn operator&(BoolFn f, const BoolFn& g) {
        f.check_same_arity(g, "&");
        for (std::size_t i = 0; i < f.words_.size(); ++i)
            f.words_[i] &= g.words_[i];
        return f;
    }

    friend BoolFn operator|(BoolFn f, const BoolFn& g) {
        f.check_same_arity(g, "|");
        for (std::size_t i = 0; i < f.words_.size(); ++i)
            f.words_[i] |= g.words_[i];
        return f;
    }

    friend BoolFn operator^(BoolFn f, const BoolFn& g) {
        f.check_same_arity(g, "^");
        for (std::size_t i = 0; i < f.words_.size(); ++i)
            f.words_[i] ^= g.words_[i];
        return f;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(arity_);
        for (std::uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    bool operator<(const BoolFn& g) const {
        if (arity_ != g.arity_)
            return arity_ < g.arity_;
        return words_ < g.words_;
    }

  private:
    static int checked_arity(int arity) {
        if (arity < 1 || arity > max_arity)
            throw PreconditionError("arity must be between 1 and " + std::to_string(max_arity));
        return arity;
    }

    static std::size_t word_count(int arity) {
        return arity < 6 ? 1 : (std::size_t{1} << (arity - 6));
    }

    void check_same_arity(const BoolFn& g, const char* op) const {
        if (arity_ != g.arity_)
            throw PreconditionError(std::string("combine '") + op + "': arity mismatch");
    }

    // Zero out the unused high bits of the last word so tables compare equal.
    void mask_tail() {
        if (arity_ < 6)
            words_[0] &= (std::uint64_t{1} << size()) - 1;
    }

    int arity_;
    std::vector<std::uint64_t> words_;
};

enum class Connective { conj, disj, exclusive_or };

inline BoolFn combine(Connective c, const BoolFn& f, const BoolFn& g) {
    switch (c) {
    case Connective::conj: return f & g;
    case Connective::disj: return f | g;
    case Connective::exclusive_or: return f ^ g;
    }
    throw PreconditionError("combine: unknown connective");
}

inline BoolFn negate(const BoolFn& f) { return ~f; }

/// Simultaneous substitution: g(h_1, ..., h_n). All h_j share one arity m;
/// the result has arity m and value g(h_1(u), ..., h_n(u)) at each u.
inline BoolFn substitute(const BoolFn& g, std::span<const BoolFn> h) {
    if (static_cast<int>(h.size()) != g.arity())
        throw PreconditionError("substitute: need one replacement per variable");
    int m = h.empty() ? 1 : h[0].arity();
    for (const BoolFn& hj : h)
        if (hj.arity() != m)
            throw PreconditionError("substitute: replacements must share one arity");
    BoolFn r(m);
    for (std::uint32_t u = 0; u < r.size(); ++u) {
        std::uint32_t k = 0;
        for (int j = 0; j < g.arity(); ++j)
            k |= static_cast<std::uint32_t>(h[static_cast<std::size_t>(j)].evaluate(u)) << j;
        r.set(u, g.evaluate(k));
    }
    return r;
}

/// The dual function u -> !f(!u), where !u flips every bit of the assignment.
inline BoolFn dual(const BoolFn& f) {
    BoolFn r(f.arity());
    std::uint32_t all = r.size() - 1;
    for (std::uint32_t u = 0; u < r.size(); ++u)
        r.set(u, !f.evaluate(all ^ u));
    return r;
}

/// Re-express f over a wider variable set: old q_i becomes q_{i+offset}.
/// Added variables are ignored by the result.
inline BoolFn shift_vars(const BoolFn& f, int offset, int new_arity) {
    if (offset < 0 || f.arity() + offset > new_arity)
        throw PreconditionError("shift_vars: shifted variables exceed the new arity");
    BoolFn r(new_arity);
    std::uint32_t src_mask = (std::uint32_t{1} << f.arity()) - 1;
    for (std::uint32_t u = 0; u < r.size(); ++u)
        r.set(u, f.evaluate(u >> offset & src_mask));
    return r;
}

/// Rename variables: old q_i becomes q_{perm[i-1]} (perm is a 1-based bijection).
inline BoolFn permute_vars(const BoolFn& f, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != f.arity())
        throw PreconditionError("permute_vars: permutation size must equal arity");
    std::uint32_t seen = 0;
    for (int v : perm) {
        if (v < 1 || v > f.arity() || (seen >> (v - 1) & 1u))
            throw PreconditionError("permute_vars: not a permutation of 1..arity");
        seen |= std::uint32_t{1} << (v - 1);
    }
    BoolFn r(f.arity());
    for (std::uint32_t u = 0; u < r.size(); ++u) {
        // Gather the old assignment whose renamed image is u.
        std::uint32_t old_bits = 0;
        for (int i = 0; i < f.arity(); ++i)
            if (u >> (perm[static_cast<std::size_t>(i)] - 1) & 1u)
                old_bits |= std::uint32_t{1} << i;
        r.set(u, f.evaluate(old_bits));
    }
    return r;
}

/// Structural classification. A projection is also reported as the
/// one-variable disjunction; the constant 0 is the empty disjunction.
struct FnClass {
    std::optional<bool> constant_value;
    std::optional<int> projection_var;
    std::optional<std::vector<int>> disjunction_vars;
};

inline FnClass classify(const BoolFn& f) {
    FnClass c;
    bool all0 = true, all1 = true;
    for (std::uint32_t k = 0; k < f.size(); ++k)
        (f.evaluate(k) ? all0 : all1) = false;
    if (all0)
        c.constant_value = false;
    if (all1)
        c.constant_value = true;
    std::vector<int> vars;
    for (int i = 1; i <= f.arity(); ++i)
        if (f.evaluate(std::uint32_t{1} << (i - 1)))
            vars.push_back(i);
    if (f == BoolFn::disjunction(f.arity(), vars)) {
        c.disjunction_vars = vars;
        if (vars.size() == 1)
            c.projection_var = vars[0];
    }
    return c;
}

namespace detail {

class ExprParser {
  public:
    ExprParser(std::string_view text, int arity) : text_(text), arity_(arity) {}

    BoolFn parse() {
        BoolFn f = parse_or();
        skip_ws();
        if (pos_ != text_.size())
            throw ExprParseError(pos_, "unexpected trailing input");
        return f;
    }

  private:
    BoolFn parse_or() {
        BoolFn f = parse_xor();
        while (peek() == '|') {
            ++pos_;
            f = f | parse_xor();
        }
        return f;
    }

    BoolFn parse_xor() {
        BoolFn f = parse_and();
        while (peek() == '^') {
            ++pos_;
            f = f ^ parse_and();
        }
        return f;
    }

    BoolFn parse_and() {
        BoolFn f = parse_unary();
        while (peek() == '&') {
            ++pos_;
            f = f & parse_unary();
        }
        return f;
    }

    BoolFn parse_unary() {
        if (peek() == '!') {
            ++pos_;
            return ~parse_unary();
        }
        return parse_atom();
    }

    BoolFn parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            BoolFn f = parse_or();
            if (peek() != ')')
                throw ExprParseError(pos_, "expected ')'");
            ++pos_;
            return f;
        }
        if (c == '0') {
            ++pos_;
            return BoolFn::constant(arity_, false);
        }
        if (c == '1') {
            ++pos_;
            return BoolFn::constant(arity_, true);
        }
        if (c == 'q') {
            std::size_t start = pos_++;
            std::size_t digits = 0;
            long var = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                var = var * 10 + (text_[pos_] - '0');
                if (var > BoolFn::max_arity)
                    throw ExprParseError(start, "variable index out of range");
                ++pos_;
                ++digits;
            }
            if (digits == 0)
                throw ExprParseError(start, "expected digits after 'q'");
            if (var < 1 || var > arity_)
                throw ExprParseError(start, "variable index out of range");
            return BoolFn::projection(arity_, static_cast<int>(var));
        }
        if (c == '\0')
            throw ExprParseError(pos_, "unexpected end of expression");
        throw ExprParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    // Returns the next significant character without consuming it, '\0' at end.
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    int arity_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parse an expression over q_1..q_arity with connectives ! & ^ |
/// (in decreasing binding strength), constants 0/1 and parentheses.
inline BoolFn parse_expr(std::string_view text, int arity) {
    if (arity < 1 || arity > BoolFn::max_arity)
        throw PreconditionError("parse_expr: arity out of range");
    return detail::ExprParser(text, arity).parse();
}

/// Deterministic rendering: equal tables always print as the same text.
/// Constants print as 0/1, variable disjunctions as q_i|q_j|..., anything
/// else as the full sum of products over its true rows.
inline std::string print_expr(const BoolFn& f) {
    FnClass c = classify(f);
    if (c.constant_value)
        return *c.constant_value ? "1" : "0";
    if (c.disjunction_vars) {
        std::string s;
        for (int v : *c.disjunction_vars) {
            if (!s.empty())
                s += '|';
            s += 'q' + std::to_string(v);
        }
        return s;
    }
    std::string s;
    for (std::uint32_t k = 0; k < f.size(); ++k) {
        if (!f.evaluate(k))
            continue;
        if (!s.empty())
            s += '|';
        for (int i = 1; i <= f.arity(); ++i) {
            if (i > 1)
                s += '&';
            if (!(k >> (i - 1) & 1u))
                s += '!';
            s += 'q' + std::to_string(i);
        }
    }
    return s;
}

} // namespace bafa
