#include <catch2/catch_amalgamated.hpp>

#include "bafa/ops.hpp"
#include "bafa/oracle.hpp"

#include "helpers.hpp"

using namespace bafa;

namespace {

Dfa dfa_for(std::initializer_list<const char*> words) {
    // Minimal DFA of a finite language over {a,b}, built through the oracle.
    Mnfa m;
    m.alphabet = Alphabet("ab");
    std::vector<std::string> list;
    for (const char* w : words)
        list.emplace_back(w);
    std::size_t total = 1;
    for (const std::string& w : list)
        total += w.size();
    m.k = static_cast<int>(total);
    m.initials = StateSet(total);
    m.initials.set(0);
    m.finals = StateSet(total);
    m.delta.assign(total, std::vector<StateSet>(2, StateSet(total)));
    std::size_t next = 1;
    for (const std::string& w : list) {
        std::size_t at = 0;
        for (char c : w) {
            m.delta[at][static_cast<std::size_t>(c - 'a')].set(next);
            at = next++;
        }
        m.finals.set(at);
    }
    return minimize(determinize(m));
}

Bfa bfa_for(std::initializer_list<const char*> words) { return bfa_from_dfa(dfa_for(words)); }

} // namespace

TEST_CASE("complement flips acceptance and is an involution") {
    testutil::Rng rng(301);
    for (int round = 0; round < 25; ++round) {
        Bfa a = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Bfa c = complement_bfa(a);
        REQUIRE(c.n == a.n);
        for (const std::string& w : testutil::words_upto("ab", 5))
            REQUIRE(bfa_accepts(c, w) == !bfa_accepts(a, w));
        REQUIRE(testutil::bfa_equal(complement_bfa(c), a));

        Bfa f = testutil::random_afa(rng, testutil::pick(rng, 1, 3));
        Bfa cf = complement_afa(f);
        REQUIRE(classify_machine(cf).afa);
        for (const std::string& w : testutil::words_upto("ab", 5))
            REQUIRE(bfa_accepts(cf, w) == !bfa_accepts(f, w));
        REQUIRE(testutil::bfa_equal(complement_afa(cf), f));
    }
    REQUIRE_THROWS_AS(complement_afa(testutil::example_bfa()), PreconditionError);
}

TEST_CASE("disjoint-union Boolean operations have m+n states and the right language") {
    testutil::Rng rng(307);
    for (int round = 0; round < 20; ++round) {
        Bfa a = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Bfa b = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        for (SetOp op : {SetOp::union_, SetOp::intersection, SetOp::difference,
                         SetOp::symmetric_difference}) {
            Bfa r = boolean_op_bfa(a, b, op);
            REQUIRE(r.n == a.n + b.n);
            for (const std::string& w : testutil::words_upto("ab", 4)) {
                bool wa = bfa_accepts(a, w), wb = bfa_accepts(b, w);
                bool expect = op == SetOp::union_          ? wa || wb
                              : op == SetOp::intersection  ? wa && wb
                              : op == SetOp::difference    ? wa && !wb
                                                           : wa != wb;
                REQUIRE(bfa_accepts(r, w) == expect);
            }
        }
    }
}

TEST_CASE("alternating Boolean operations re-root or pair up") {
    testutil::Rng rng(311);
    for (int round = 0; round < 15; ++round) {
        Bfa a = testutil::random_afa(rng, testutil::pick(rng, 1, 3));
        Bfa b = testutil::random_afa(rng, testutil::pick(rng, 1, 3));
        for (SetOp op : {SetOp::union_, SetOp::intersection, SetOp::difference}) {
            Bfa r = boolean_op_afa(a, b, op);
            REQUIRE(r.n == a.n + b.n + 1);
            REQUIRE(classify_machine(r).afa);
        }
        Bfa x = boolean_op_afa(a, b, SetOp::symmetric_difference);
        REQUIRE(x.n == a.n + b.n);
        REQUIRE(classify_machine(x).afa);
        for (const std::string& w : testutil::words_upto("ab", 4))
            REQUIRE(bfa_accepts(x, w) == (bfa_accepts(a, w) != bfa_accepts(b, w)));
    }
    Bfa not_afa = testutil::example_bfa();
    REQUIRE_THROWS_AS(boolean_op_afa(not_afa, not_afa, SetOp::union_), PreconditionError);
}

TEST_CASE("concatenation blows up the first operand only") {
    testutil::Rng rng(313);
    for (int round = 0; round < 20; ++round) {
        Bfa a = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Bfa b = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Bfa r = concat_bfa(a, b);
        REQUIRE(r.n == (1 << a.n) + b.n);
        for (const std::string& w : testutil::words_upto("ab", 5)) {
            bool expect = false;
            for (std::size_t cut = 0; cut <= w.size() && !expect; ++cut)
                expect = bfa_accepts(a, w.substr(0, cut)) && bfa_accepts(b, w.substr(cut));
            REQUIRE(bfa_accepts(r, w) == expect);
        }
    }
}

TEST_CASE("concatenation empty-word corners") {
    // Second factor accepting the empty word: "a" . {ε,b} must accept "a".
    Bfa a = bfa_for({"a"});
    Bfa b = bfa_for({"", "b"});
    Bfa cat = concat_bfa(a, b);
    REQUIRE(bfa_accepts(cat, "a"));
    REQUIRE(bfa_accepts(cat, "ab"));
    REQUIRE_FALSE(bfa_accepts(cat, ""));
    REQUIRE_FALSE(bfa_accepts(cat, "b"));
    REQUIRE_FALSE(bfa_accepts(cat, "abb"));

    // First factor accepting the empty word: {ε,a} . {b} must accept "b".
    Bfa c = concat_bfa(bfa_for({"", "a"}), bfa_for({"b"}));
    REQUIRE(bfa_accepts(c, "b"));
    REQUIRE(bfa_accepts(c, "ab"));
    REQUIRE_FALSE(bfa_accepts(c, ""));
    REQUIRE_FALSE(bfa_accepts(c, "a"));

    // Both accept ε.
    Bfa d = concat_bfa(bfa_for({"", "a"}), bfa_for({"", "b"}));
    REQUIRE(bfa_accepts(d, ""));
    REQUIRE(bfa_accepts(d, "a"));
    REQUIRE(bfa_accepts(d, "b"));
    REQUIRE(bfa_accepts(d, "ab"));
    REQUIRE_FALSE(bfa_accepts(d, "ba"));
}

TEST_CASE("alternating concatenation and square add the fresh root") {
    testutil::Rng rng(317);
    for (int round = 0; round < 15; ++round) {
        Bfa a = testutil::random_afa(rng, testutil::pick(rng, 1, 3));
        Bfa b = testutil::random_afa(rng, testutil::pick(rng, 1, 3));
        Bfa r = concat_afa(a, b);
        REQUIRE(r.n == (1 << a.n) + b.n + 1);
        REQUIRE(classify_machine(r).afa);
        REQUIRE(testutil::same_language(r, bfa_canonical_dfa(concat_bfa(a, b))));

        Bfa s = square_bfa(a);
        REQUIRE(s.n == (1 << a.n) + a.n);
        Bfa sa = square_afa(a);
        REQUIRE(sa.n == (1 << a.n) + a.n + 1);
        REQUIRE(classify_machine(sa).afa);
        REQUIRE(testutil::same_language(sa, bfa_canonical_dfa(s)));
    }
}

TEST_CASE("star has exactly 2^n states and the iterated language") {
    testutil::Rng rng(331);
    for (int round = 0; round < 20; ++round) {
        Bfa a = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Bfa s = star_bfa(a);
        REQUIRE(s.n == 1 << a.n);
        REQUIRE(testutil::same_language(s, star_dfa(bfa_canonical_dfa(a))));
        REQUIRE(bfa_accepts(s, "")); // the empty word is always in the star

        Bfa aa = testutil::random_afa(rng, testutil::pick(rng, 1, 3));
        Bfa sa = star_afa(aa);
        REQUIRE(sa.n == 1 << aa.n);
        REQUIRE(classify_machine(sa).afa);
        REQUIRE(testutil::same_language(sa, star_dfa(bfa_canonical_dfa(aa))));
    }
    Bfa big = testutil::random_bfa(rng, 3);
    REQUIRE_THROWS_AS([&] {
        Bfa five = boolean_op_bfa(big, testutil::random_bfa(rng, 2), SetOp::union_);
        return star_bfa(five);
    }(), PreconditionError);
}

TEST_CASE("reversal has exactly 2^n states and the mirrored language") {
    testutil::Rng rng(337);
    for (int round = 0; round < 20; ++round) {
        Bfa a = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Bfa r = reverse_bfa(a);
        REQUIRE(r.n == 1 << a.n);
        for (const std::string& w : testutil::words_upto("ab", 5)) {
            std::string rev(w.rbegin(), w.rend());
            REQUIRE(bfa_accepts(r, w) == bfa_accepts(a, rev));
        }
        Bfa f = testutil::random_afa(rng, testutil::pick(rng, 1, 3));
        REQUIRE(classify_machine(reverse_afa(f)).afa);
    }
}

TEST_CASE("quotient constructions have the operand-driven sizes") {
    testutil::Rng rng(347);
    for (int round = 0; round < 20; ++round) {
        Bfa k = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Bfa l = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Bfa right = right_quotient_bfa(k, l);
        REQUIRE(right.n == 1 << k.n);
        Bfa left = left_quotient_bfa(k, l);
        REQUIRE(left.n == k.n);
        REQUIRE(testutil::same_language(
            right, right_quotient_dfa(bfa_canonical_dfa(k), bfa_canonical_dfa(l))));
        REQUIRE(testutil::same_language(
            left, left_quotient_dfa(bfa_canonical_dfa(k), bfa_canonical_dfa(l))));

        Bfa ak = testutil::random_afa(rng, testutil::pick(rng, 1, 3));
        Bfa al = testutil::random_afa(rng, testutil::pick(rng, 1, 3));
        REQUIRE(right_quotient_afa(ak, al).n == (1 << ak.n) + 1);
        REQUIRE(left_quotient_afa(ak, al).n == ak.n + 1);
    }
}

TEST_CASE("known quotients come out right") {
    // K = {b, ab}: dividing out {b} on the right leaves {"", a}, and
    // dividing out {a} on the left leaves {b}.
    Bfa k = bfa_for({"b", "ab"});
    Bfa right = right_quotient_bfa(k, bfa_for({"b"}));
    REQUIRE(bfa_accepts(right, ""));
    REQUIRE(bfa_accepts(right, "a"));
    REQUIRE_FALSE(bfa_accepts(right, "b"));
    REQUIRE_FALSE(bfa_accepts(right, "ab"));

    Bfa left = left_quotient_bfa(k, bfa_for({"a"}));
    REQUIRE(bfa_accepts(left, "b"));
    REQUIRE_FALSE(bfa_accepts(left, ""));
    REQUIRE_FALSE(bfa_accepts(left, "a"));
    REQUIRE_FALSE(bfa_accepts(left, "ab"));
}

TEST_CASE("De Morgan holds at the minimal-DFA level") {
    testutil::Rng rng(353);
    for (int round = 0; round < 15; ++round) {
        Bfa a = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Bfa b = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Dfa lhs = bfa_canonical_dfa(complement_bfa(boolean_op_bfa(a, b, SetOp::union_)));
        Dfa rhs = bfa_canonical_dfa(
            boolean_op_bfa(complement_bfa(a), complement_bfa(b), SetOp::intersection));
        REQUIRE(dfa_equal(lhs, rhs));

        Dfa lhs2 = bfa_canonical_dfa(complement_bfa(boolean_op_bfa(a, b, SetOp::intersection)));
        Dfa rhs2 = bfa_canonical_dfa(
            boolean_op_bfa(complement_bfa(a), complement_bfa(b), SetOp::union_));
        REQUIRE(dfa_equal(lhs2, rhs2));
    }
}

TEST_CASE("concatenation reverses contravariantly") {
    testutil::Rng rng(359);
    for (int round = 0; round < 12; ++round) {
        int nk = testutil::pick(rng, 1, 2);
        int nl = nk == 2 ? 1 : testutil::pick(rng, 1, 2);
        Bfa k = testutil::random_bfa(rng, nk);
        Bfa l = testutil::random_bfa(rng, nl);
        // L^R K^R equals (KL)^R iff its reverse equals KL; comparing there
        // keeps the big side in the assignment DFA, where minimization is
        // cheap, instead of determinizing an up-to-2^18-state reversal.
        Bfa rhs = concat_bfa(reverse_bfa(l), reverse_bfa(k));
        Dfa rhs_rev = minimize(reverse_dfa_of_bfa(rhs));
        Dfa kl = bfa_canonical_dfa(concat_bfa(k, l));
        REQUIRE(dfa_equal(rhs_rev, kl));
    }
}
