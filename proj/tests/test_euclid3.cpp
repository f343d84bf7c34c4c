#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "nsg/euclid3.hpp"
#include "nsg/oracle.hpp"

using namespace nsg;

namespace {

std::vector<Binomial> sorted_by_lead(std::vector<Binomial> v) {
    std::sort(v.begin(), v.end(), [](const Binomial& a, const Binomial& b) {
        return a.lead.exps < b.lead.exps;
    });
    return v;
}

std::vector<std::vector<Int>> sorted_exps(const std::vector<ExponentVector>& v) {
    std::vector<std::vector<Int>> out;
    for (const auto& m : v) out.push_back(m.exps);
    std::sort(out.begin(), out.end());
    return out;
}

// general engine with the same parameter and the same variable labels
// (requires distinct a, b, c and b < c)
Gb3Result general_engine(Int a, Int b, Int c) {
    GeneratorSet g = normalize({a, b, c});
    auto it = std::find(g.sorted.begin(), g.sorted.end(), a);
    g.param_index = static_cast<std::size_t>(it - g.sorted.begin());
    AperyTable t = compute_apery(g);
    Gb3Result out;
    out.binomials = groebner_basis(g, t);
    out.staircase = staircase_report(g, t);
    out.staircase_size = t.base;
    out.frobenius = frobenius(t);
    return out;
}

}  // namespace

TEST_CASE("negative-remainder euclid") {
    EuclidPair e = neg_remainder_euclid(10, 7);
    CHECK(e.q == std::vector<Int>{2, 2, 4});
    CHECK(e.s == std::vector<Int>{10, 7, 4, 1, 0});

    EuclidPair e2 = neg_remainder_euclid(4, 1);
    CHECK(e2.q == std::vector<Int>{4});
    CHECK(e2.s == std::vector<Int>{4, 1, 0});

    EuclidPair e3 = neg_remainder_euclid(5, 2);
    CHECK(e3.q == std::vector<Int>{3, 2});
    CHECK(e3.s == std::vector<Int>{5, 2, 1, 0});
}

TEST_CASE("negative-remainder euclid rejects bad pairs") {
    CHECK_THROWS_AS(neg_remainder_euclid(7, 10), InvalidPairError);
    CHECK_THROWS_AS(neg_remainder_euclid(5, 5), InvalidPairError);
    CHECK_THROWS_AS(neg_remainder_euclid(5, 0), InvalidPairError);
    CHECK_THROWS_AS(neg_remainder_euclid(5, -2), InvalidPairError);
}

TEST_CASE("quotients are at least two and remainders decrease") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> d(2, 100000);
    for (int trial = 0; trial < 200; ++trial) {
        Int s0 = d(rng), s1 = d(rng);
        if (s0 == s1) continue;
        if (s0 < s1) std::swap(s0, s1);
        EuclidPair e = neg_remainder_euclid(s0, s1);
        for (Int q : e.q) CHECK(q >= 2);
        CHECK(std::is_sorted(e.s.rbegin(), e.s.rend()));
        CHECK(e.s.back() == 0);
        for (std::size_t i = 1; i + 1 < e.s.size(); ++i)
            CHECK(e.s[i - 1] == e.q[i - 1] * e.s[i] - e.s[i + 1]);
    }
}

TEST_CASE("sequences for 10,7,9") {
    Euclid3Table t = sequences3(10, 7, 9);
    CHECK(t.s == std::vector<Int>{10, 7, 4, 1, 0});
    CHECK(t.p == std::vector<Int>{0, 1, 2, 3, 10});
    CHECK(t.r == std::vector<Int>{7, 4, 1, -2, -9});
    CHECK(t.mu == 2);
}

TEST_CASE("sequences for 6,9,20 degenerate to the short table") {
    Euclid3Table t = sequences3(6, 9, 20);
    CHECK(t.s == std::vector<Int>{2, 0});
    CHECK(t.p == std::vector<Int>{0, 3});
    CHECK(t.r == std::vector<Int>{3, -10});
    CHECK(t.mu == 0);
    CHECK(t.q.empty());
}

TEST_CASE("determinant identity on random triples") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<Int> d(2, 5000);
    for (int trial = 0; trial < 300; ++trial) {
        Int a = d(rng), b = d(rng), c = d(rng);
        Euclid3Table t = sequences3(a, b, c);
        Int det = a / std::gcd(std::gcd(a, b), c);
        for (std::size_t i = 0; i + 1 < t.s.size(); ++i)
            CHECK(t.s[i] * t.p[i + 1] - t.s[i + 1] * t.p[i] == det);
        CHECK(t.r[t.mu] > 0);
        CHECK(t.r[t.mu + 1] <= 0);
    }
}

TEST_CASE("s1 agrees with a brute-force congruence scan") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<Int> d(2, 300);
    for (int trial = 0; trial < 200; ++trial) {
        Int a = d(rng), b = d(rng), c = d(rng);
        Euclid3Table t = sequences3(a, b, c);
        Int p1 = std::gcd(a, b) / std::gcd(std::gcd(a, b), c);
        Int expect = -1;
        for (Int s = 0; s < a; ++s)
            if ((s * b - p1 * c) % a == 0) {
                expect = s;
                break;
            }
        REQUIRE(expect >= 0);
        CHECK(t.s[1] == expect);
    }
}

TEST_CASE("gb3 for 10,7,9") {
    Gb3Result res = gb3(10, 7, 9);
    CHECK_FALSE(res.used_fallback);
    REQUIRE(res.binomials.size() == 3);
    std::vector<Binomial> got = sorted_by_lead(res.binomials);
    // x3^3 - x1^2 x2, x2^3 x3 - x1^3, x2^4 - x1 x3^2
    CHECK(got[0].lead.exps == std::vector<Int>{0, 3});
    CHECK(got[0].tail_param_exp == 2);
    CHECK(got[0].tail_witness.exps == std::vector<Int>{1, 0});
    CHECK(got[1].lead.exps == std::vector<Int>{3, 1});
    CHECK(got[1].tail_param_exp == 3);
    CHECK(got[1].tail_witness.exps == std::vector<Int>{0, 0});
    CHECK(got[2].lead.exps == std::vector<Int>{4, 0});
    CHECK(got[2].tail_param_exp == 1);
    CHECK(got[2].tail_witness.exps == std::vector<Int>{0, 2});
    CHECK(res.staircase_size == 10);
    CHECK(res.staircase.standard.size() == 10);
    CHECK(res.frobenius == 22);
    // oracle: 22 is a gap, everything above up to 32 is not
    GeneratorSet g = normalize({10, 7, 9});
    CHECK_FALSE(oracle::member_dp(g, 22));
    for (Int b = 23; b <= 32; ++b) CHECK(oracle::member_dp(g, b));
}

TEST_CASE("gb3 for 6,9,20 collapses the redundant binomial") {
    Gb3Result res = gb3(6, 9, 20);
    CHECK_FALSE(res.used_fallback);
    std::vector<Binomial> got = sorted_by_lead(res.binomials);
    REQUIRE(got.size() == 2);
    CHECK(got[0].lead.exps == std::vector<Int>{0, 3});
    CHECK(got[0].tail_param_exp == 10);
    CHECK(got[1].lead.exps == std::vector<Int>{2, 0});
    CHECK(got[1].tail_param_exp == 3);
    CHECK(res.frobenius == 43);
    CHECK(res.staircase_size == 6);
}

TEST_CASE("gb3 handles gcd scaling") {
    Gb3Result res = gb3(4, 6, 10);  // gcd 2, reduced (2,3,5)
    CHECK(res.staircase_size == 2);
    CHECK(res.frobenius == 2);
}

TEST_CASE("staircase cardinality equals a over the gcd") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<Int> d(2, 2000);
    for (int trial = 0; trial < 150; ++trial) {
        Int a = d(rng), b = d(rng), c = d(rng);
        Gb3Result res = gb3(a, b, c);
        CHECK(res.staircase_size == a / std::gcd(std::gcd(a, b), c));
    }
}

TEST_CASE("gb3 matches the general engine") {
    // fixed instances, parameter not always smallest
    for (auto [a, b, c] : std::vector<std::array<Int, 3>>{
             {10, 7, 9}, {6, 9, 20}, {4, 3, 6}, {5, 7, 11}, {12, 13, 22},
             {101, 37, 80}, {30, 42, 55}}) {
        CAPTURE(a);
        Gb3Result fast = gb3(a, b, c);
        Gb3Result gen = general_engine(a, b, c);
        CHECK(sorted_by_lead(fast.binomials) == sorted_by_lead(gen.binomials));
        CHECK(sorted_exps(fast.staircase.standard) ==
              sorted_exps(gen.staircase.standard));
        CHECK(fast.frobenius == gen.frobenius);
    }
}

TEST_CASE("frobenius2 closed form") {
    CHECK(frobenius2(2, 3) == 1);
    CHECK(frobenius2(1, 7) == -1);
    CHECK(frobenius2(1, 1000) == -1);
    CHECK(frobenius2(7, 9) == 47);
    GeneratorSet g = normalize({7, 9});
    CHECK_FALSE(oracle::member_dp(g, 47));
    for (Int b = 48; b <= 60; ++b) CHECK(oracle::member_dp(g, b));
    CHECK_THROWS_AS(frobenius2(6, 9), NotCoprimeError);
    CHECK_THROWS_AS(frobenius2(0, 9), NonPositiveGeneratorError);
}

TEST_CASE("sequences3 rejects nonpositive input") {
    CHECK_THROWS_AS(sequences3(0, 3, 5), NonPositiveGeneratorError);
    CHECK_THROWS_AS(sequences3(4, -3, 5), NonPositiveGeneratorError);
}
