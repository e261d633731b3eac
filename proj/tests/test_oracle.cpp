#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bafa/oracle.hpp"

#include "helpers.hpp"

using namespace bafa;

namespace {

const std::vector<std::string>& corpus() {
    static const std::vector<std::string> words = testutil::words_upto("ab", 6);
    return words;
}

std::set<std::string> language(const Dfa& d, int maxlen = 6) {
    std::set<std::string> out;
    for (const std::string& w : corpus())
        if (static_cast<int>(w.size()) <= maxlen && dfa_accepts(d, w))
            out.insert(w);
    return out;
}

} // namespace

TEST_CASE("minimization is a sound, idempotent canonical form") {
    testutil::Rng rng(211);
    for (int round = 0; round < 40; ++round) {
        Dfa d = testutil::random_dfa(rng, testutil::pick(rng, 1, 6));
        Dfa m = minimize(reachable_dfa(d));
        REQUIRE(m.k <= d.k);
        for (const std::string& w : corpus())
            REQUIRE(dfa_accepts(m, w) == dfa_accepts(d, w));
        REQUIRE(dfa_equal(minimize(m), m));
        REQUIRE(equivalent(m, d));

        // No two states of the result are language-equivalent.
        for (int p = 0; p < m.k; ++p)
            for (int q = p + 1; q < m.k; ++q) {
                bool distinguished = false;
                for (const std::string& w : corpus()) {
                    Dfa from_p = m, from_q = m;
                    from_p.initial = p;
                    from_q.initial = q;
                    if (dfa_accepts(from_p, w) != dfa_accepts(from_q, w)) {
                        distinguished = true;
                        break;
                    }
                }
                REQUIRE(distinguished);
            }
    }
}

TEST_CASE("canonical numbering makes equivalence structural") {
    // With at most 3 states a side, words up to the 3*3-1 product bound
    // decide equivalence exactly.
    std::vector<std::string> decisive = testutil::words_upto("ab", 8);
    testutil::Rng rng(223);
    int hits = 0;
    for (int round = 0; round < 60; ++round) {
        Dfa a = testutil::random_dfa(rng, testutil::pick(rng, 1, 3));
        Dfa b = testutil::random_dfa(rng, testutil::pick(rng, 1, 3));
        bool same = true;
        for (const std::string& w : decisive)
            same = same && dfa_accepts(a, w) == dfa_accepts(b, w);
        REQUIRE(equivalent(minimize(reachable_dfa(a)), minimize(reachable_dfa(b))) == same);
        REQUIRE(dfa_equal(minimize(reachable_dfa(a)), minimize(reachable_dfa(b))) == same);
        hits += same;
    }
    REQUIRE(hits > 0); // the sample really contains equivalent pairs
}

TEST_CASE("set operations match word-level truth") {
    testutil::Rng rng(227);
    for (int round = 0; round < 25; ++round) {
        Dfa a = testutil::random_dfa(rng, testutil::pick(rng, 1, 4));
        Dfa b = testutil::random_dfa(rng, testutil::pick(rng, 1, 4));
        Dfa u = product_dfa(a, b, SetOp::union_);
        Dfa i = product_dfa(a, b, SetOp::intersection);
        Dfa m = product_dfa(a, b, SetOp::difference);
        Dfa x = product_dfa(a, b, SetOp::symmetric_difference);
        Dfa c = complement_dfa(a);
        for (const std::string& w : corpus()) {
            bool wa = dfa_accepts(a, w), wb = dfa_accepts(b, w);
            REQUIRE(dfa_accepts(u, w) == (wa || wb));
            REQUIRE(dfa_accepts(i, w) == (wa && wb));
            REQUIRE(dfa_accepts(m, w) == (wa && !wb));
            REQUIRE(dfa_accepts(x, w) == (wa != wb));
            REQUIRE(dfa_accepts(c, w) == !wa);
        }
    }
}

TEST_CASE("concatenation matches the split-point definition") {
    testutil::Rng rng(229);
    for (int round = 0; round < 25; ++round) {
        Dfa a = testutil::random_dfa(rng, testutil::pick(rng, 1, 4));
        Dfa b = testutil::random_dfa(rng, testutil::pick(rng, 1, 4));
        Dfa cat = concat_dfa(a, b);
        for (const std::string& w : corpus()) {
            bool expect = false;
            for (std::size_t cut = 0; cut <= w.size() && !expect; ++cut)
                expect = dfa_accepts(a, w.substr(0, cut)) && dfa_accepts(b, w.substr(cut));
            REQUIRE(dfa_accepts(cat, w) == expect);
        }
    }
}

TEST_CASE("star matches the prefix-decomposition definition") {
    testutil::Rng rng(233);
    for (int round = 0; round < 25; ++round) {
        Dfa a = testutil::random_dfa(rng, testutil::pick(rng, 1, 4));
        Dfa s = star_dfa(a);
        for (const std::string& w : corpus()) {
            // in_star[i]: the prefix of length i splits into nonempty accepted blocks
            std::vector<bool> in_star(w.size() + 1, false);
            in_star[0] = true;
            for (std::size_t i = 1; i <= w.size(); ++i)
                for (std::size_t j = 0; j < i && !in_star[i]; ++j)
                    in_star[i] = in_star[j] && dfa_accepts(a, w.substr(j, i - j));
            REQUIRE(dfa_accepts(s, w) == in_star[w.size()]);
        }
    }
}

TEST_CASE("reversal matches word reversal") {
    testutil::Rng rng(239);
    for (int round = 0; round < 25; ++round) {
        Dfa a = testutil::random_dfa(rng, testutil::pick(rng, 1, 4));
        Dfa r = reverse_to_dfa(a);
        REQUIRE(classify_machine(r).dfa);
        for (const std::string& w : corpus()) {
            std::string rev(w.rbegin(), w.rend());
            REQUIRE(dfa_accepts(r, w) == dfa_accepts(a, rev));
        }
    }
}

TEST_CASE("quotients match their existential definitions") {
    testutil::Rng rng(241);
    for (int round = 0; round < 15; ++round) {
        Dfa k = testutil::random_dfa(rng, testutil::pick(rng, 1, 3));
        Dfa l = testutil::random_dfa(rng, testutil::pick(rng, 1, 3));
        Dfa right = right_quotient_dfa(k, l);
        Dfa left = left_quotient_dfa(k, l);
        // A witness u never needs more letters than there are state pairs.
        int bound = k.k * l.k;
        std::vector<std::string> tails = testutil::words_upto("ab", bound);
        for (const std::string& w : corpus()) {
            if (w.size() > 4)
                continue;
            bool expect_right = false, expect_left = false;
            for (const std::string& u : tails) {
                expect_right = expect_right || (dfa_accepts(k, w + u) && dfa_accepts(l, u));
                expect_left = expect_left || (dfa_accepts(k, u + w) && dfa_accepts(l, u));
            }
            REQUIRE(dfa_accepts(right, w) == expect_right);
            REQUIRE(dfa_accepts(left, w) == expect_left);
        }
    }
}

TEST_CASE("the double-reversal canonical form agrees with direct minimization") {
    testutil::Rng rng(251);
    for (int round = 0; round < 20; ++round) {
        Dfa d = testutil::random_dfa(rng, testutil::pick(rng, 1, 5));
        Dfa brz = minimize(reverse_to_dfa(reachable_dfa(reverse_to_dfa(d))));
        REQUIRE(dfa_equal(brz, minimize(reachable_dfa(d))));
    }
}

TEST_CASE("agree_upto compares a machine against a reference automaton") {
    Bfa a = testutil::example_bfa();
    Dfa d = bfa_canonical_dfa(a);
    REQUIRE(agree_upto(a, d, 6));
    Dfa wrong = complement_dfa(d);
    REQUIRE_FALSE(agree_upto(a, wrong, 2));
}
