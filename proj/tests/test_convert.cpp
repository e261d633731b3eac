#include <catch2/catch_amalgamated.hpp>

#include "bafa/convert.hpp"
#include "bafa/oracle.hpp"
#include "bafa/witnesses.hpp"

#include "helpers.hpp"

using namespace bafa;

TEST_CASE("ceil_log2 and next_pow2") {
    REQUIRE(ceil_log2(1) == 0);
    REQUIRE(ceil_log2(2) == 1);
    REQUIRE(ceil_log2(3) == 2);
    REQUIRE(ceil_log2(4) == 2);
    REQUIRE(ceil_log2(5) == 3);
    REQUIRE(ceil_log2(1024) == 10);
    REQUIRE(next_pow2(1) == 1);
    REQUIRE(next_pow2(3) == 4);
    REQUIRE(next_pow2(136) == 256);
}

TEST_CASE("bfa_to_mnfa produces the reverse-deterministic assignment automaton") {
    testutil::Rng rng(101);
    for (int round = 0; round < 30; ++round) {
        Bfa a = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Mnfa m = bfa_to_mnfa(a);
        REQUIRE(m.k == 1 << a.n);
        REQUIRE(m.finals.count() == 1);
        REQUIRE(m.finals.test(a.finals));
        REQUIRE(is_reverse_deterministic(m));
        for (const std::string& w : testutil::words_upto("ab", 5))
            REQUIRE(mnfa_accepts(m, w) == bfa_accepts(a, w));
    }
}

TEST_CASE("collapsing the assignment automaton is the exact inverse") {
    testutil::Rng rng(103);
    for (int round = 0; round < 30; ++round) {
        Bfa a = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Bfa back = mnfa_to_bfa(bfa_to_mnfa(a));
        REQUIRE(testutil::bfa_equal(back, a));
    }
}

TEST_CASE("collapsing under a different coding keeps the language") {
    Mnfa m = bfa_to_mnfa(testutil::example_bfa());
    // Reverse the role of the four assignment codes.
    std::vector<std::uint32_t> code{3, 2, 1, 0};
    Bfa b = mnfa_to_bfa(m, code);
    REQUIRE(b.n == 2);
    for (const std::string& w : testutil::words_upto("ab", 6))
        REQUIRE(bfa_accepts(b, w) == mnfa_accepts(m, w));
}

TEST_CASE("collapse preconditions") {
    // Two final states: not the image of any Boolean automaton.
    Mnfa m = bfa_to_mnfa(testutil::example_bfa());
    m.finals.set(0);
    REQUIRE_THROWS_WITH(mnfa_to_bfa(m), Catch::Matchers::ContainsSubstring("final"));

    // Three states: not a power of two.
    Mnfa odd;
    odd.alphabet = Alphabet("a");
    odd.k = 3;
    odd.initials = StateSet(3);
    odd.initials.set(0);
    odd.finals = StateSet(3);
    odd.finals.set(2);
    odd.delta.assign(3, std::vector<StateSet>(1, StateSet(3)));
    for (int q = 0; q < 3; ++q)
        odd.delta[static_cast<std::size_t>(q)][0].set(static_cast<std::size_t>((q + 1) % 3));
    REQUIRE_THROWS_AS(mnfa_to_bfa(odd), PreconditionError);

    // Forward-deterministic but not reverse-deterministic: both states of a
    // two-state cycle map to state 0 under a.
    Mnfa fwd;
    fwd.alphabet = Alphabet("a");
    fwd.k = 2;
    fwd.initials = StateSet(2);
    fwd.initials.set(0);
    fwd.finals = StateSet(2);
    fwd.finals.set(1);
    fwd.delta.assign(2, std::vector<StateSet>(1, StateSet(2)));
    fwd.delta[0][0].set(0);
    fwd.delta[1][0].set(0);
    REQUIRE_THROWS_WITH(mnfa_to_bfa(fwd), Catch::Matchers::ContainsSubstring("deterministic"));
}

TEST_CASE("determinize matches set simulation") {
    testutil::Rng rng(107);
    for (int round = 0; round < 25; ++round) {
        Bfa a = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Mnfa m = bfa_to_mnfa(a);
        Dfa d = determinize(m);
        REQUIRE(classify_machine(d).dfa);
        for (const std::string& w : testutil::words_upto("ab", 5))
            REQUIRE(dfa_accepts(d, w) == mnfa_accepts(m, w));
    }
}

TEST_CASE("determinize of an empty initial set yields the one-state reject automaton") {
    Mnfa m;
    m.alphabet = Alphabet("ab");
    m.k = 2;
    m.initials = StateSet(2);
    m.finals = StateSet(2);
    m.finals.set(1);
    m.delta.assign(2, std::vector<StateSet>(2, StateSet(2)));
    Dfa d = determinize(m);
    REQUIRE(d.k == 1);
    REQUIRE(d.finals.none());
}

TEST_CASE("mnfa_to_nfa funnels all initial states through a fresh one") {
    for (int n = 2; n <= 4; ++n) {
        Mnfa m = cycle_mnfa(n);
        Mnfa f = mnfa_to_nfa(m);
        REQUIRE(f.k == m.k + 1);
        REQUIRE(f.initials.count() == 1);
        REQUIRE(classify_machine(f).nfa);
        for (const std::string& w : testutil::words_upto("ab", 5))
            REQUIRE(mnfa_accepts(f, w) == mnfa_accepts(m, w));
    }
}

TEST_CASE("pad_dfa appends unreachable sink states") {
    Dfa l = unary_union_l(2);
    Dfa p = pad_dfa(l, 4, 0);
    REQUIRE(p.k == 4);
    REQUIRE(p.finals.count() == l.finals.count());
    REQUIRE(equivalent(minimize(reachable_dfa(p)), minimize(l)));
    Dfa pf = pad_dfa(l, 5, 2);
    REQUIRE(pf.k == 5);
    REQUIRE(pf.finals.count() == l.finals.count() + 2);
    REQUIRE_THROWS_AS(pad_dfa(l, 2, 0), PreconditionError);
}

TEST_CASE("reverse collapse of a DFA recognizes the reverse language") {
    testutil::Rng rng(109);
    for (int round = 0; round < 25; ++round) {
        Dfa d = testutil::random_dfa(rng, testutil::pick(rng, 2, 6));
        Bfa r = dfa_to_bfa_of_reverse(d);
        REQUIRE(r.n == ceil_log2(next_pow2(static_cast<std::uint64_t>(d.k))));
        for (const std::string& w : testutil::words_upto("ab", 5)) {
            std::string rev(w.rbegin(), w.rend());
            REQUIRE(bfa_accepts(r, w) == dfa_accepts(d, rev));
        }
    }
}

TEST_CASE("alternating reverse collapse balances the final states") {
    // Half-final input: no padding, the result starts at q1.
    Dfa k = unary_union_k(2);
    Bfa a = dfa_to_afa_of_reverse(k);
    REQUIRE(a.n == 2);
    REQUIRE(classify_machine(a).afa);
    for (const std::string& w : testutil::words_upto("a", 8)) {
        std::string rev(w.rbegin(), w.rend());
        REQUIRE(bfa_accepts(a, w) == dfa_accepts(k, rev));
    }

    // A quarter-final input needs one extra variable of padding.
    Dfa q = unary_union_k(2);
    q.finals.reset();
    q.finals.set(3);
    Bfa b = dfa_to_afa_of_reverse(q);
    REQUIRE(b.n == 3);
    REQUIRE(classify_machine(b).afa);
    for (const std::string& w : testutil::words_upto("a", 8)) {
        std::string rev(w.rbegin(), w.rend());
        REQUIRE(bfa_accepts(b, w) == dfa_accepts(q, rev));
    }

    // Explicit target size, as used by the star construction.
    Bfa wide = dfa_to_afa_of_reverse(k, 16);
    REQUIRE(wide.n == 4);
    REQUIRE(classify_machine(wide).afa);

    // More finals than half of any padding: impossible.
    Dfa full = unary_union_k(2);
    full.finals.set();
    REQUIRE_THROWS_WITH(dfa_to_afa_of_reverse(full, 4),
                        Catch::Matchers::ContainsSubstring("final"));
}

TEST_CASE("bfa_to_afa re-roots behind a fresh projection state") {
    testutil::Rng rng(113);
    for (int round = 0; round < 25; ++round) {
        Bfa a = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Bfa r = bfa_to_afa(a);
        REQUIRE(r.n == a.n + 1);
        REQUIRE(classify_machine(r).afa);
        for (const std::string& w : testutil::words_upto("ab", 5))
            REQUIRE(bfa_accepts(r, w) == bfa_accepts(a, w));
    }
}

TEST_CASE("the assignment-space DFA tracks evolved initial functions backwards") {
    testutil::Rng rng(127);
    for (int round = 0; round < 25; ++round) {
        Bfa a = testutil::random_bfa(rng, testutil::pick(rng, 1, 3));
        Dfa r = reverse_dfa_of_bfa(a);
        REQUIRE(r.k == 1 << a.n);
        for (const std::string& w : testutil::words_upto("ab", 5)) {
            std::string rev(w.rbegin(), w.rend());
            REQUIRE(dfa_accepts(r, w) == bfa_accepts(a, rev));
        }
    }
}
