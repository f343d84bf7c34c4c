#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "nsg/apery.hpp"
#include "nsg/oracle.hpp"

using namespace nsg;

namespace {

std::vector<std::vector<Int>> witnesses_of(const AperyTable& t) {
    std::vector<std::vector<Int>> out;
    for (Int r = 0; r < t.base; ++r) {
        auto w = t.witness(r);
        out.emplace_back(w.begin(), w.end());
    }
    return out;
}

const std::vector<Int> kPaper17 = {1030, 1031, 1034, 1039, 1046, 1055,
                                   1066, 1079, 1094, 1111, 1130, 1151,
                                   1373, 1393, 1423, 1433, 1493};

}  // namespace

TEST_CASE("apery table of 2,3") {
    GeneratorSet g = normalize({2, 3});
    AperyTable t = compute_apery(g);
    CHECK(t.values == std::vector<Int>{0, 3});
    CHECK(witnesses_of(t) == std::vector<std::vector<Int>>{{0}, {1}});
}

TEST_CASE("apery table of 6,9,20") {
    GeneratorSet g = normalize({6, 9, 20});
    AperyTable t = compute_apery(g);
    CHECK(t.values == std::vector<Int>{0, 49, 20, 9, 40, 29});
    CHECK(witnesses_of(t) ==
          std::vector<std::vector<Int>>{
              {0, 0}, {1, 2}, {0, 1}, {1, 0}, {0, 2}, {1, 1}});
}

TEST_CASE("5,6,29 regression: residue coverage is not a sound stop") {
    // All residues are covered at level 2 with values {0,6,12,58,29}; the
    // true 18 and 24 only appear at levels 3 and 4.
    GeneratorSet g = normalize({5, 6, 29});
    AperyTable t = compute_apery(g);
    CHECK(t.values == std::vector<Int>{0, 6, 12, 18, 24});
    CHECK(witnesses_of(t) ==
          std::vector<std::vector<Int>>{
              {0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
    CHECK(frobenius(t) == 19);
}

TEST_CASE("frobenius numbers") {
    CHECK(frobenius(compute_apery(normalize({2, 3}))) == 1);
    CHECK(frobenius(compute_apery(normalize({6, 9, 20}))) == 43);
    CHECK(frobenius(compute_apery(normalize({4, 6}))) == 2);
    // reduced semigroup is all of N: degree convention gives -lambda
    CHECK(frobenius(compute_apery(normalize({7}))) == -7);
    CHECK(frobenius(compute_apery(normalize({1, 5}))) == -1);
}

TEST_CASE("membership certificates") {
    GeneratorSet g = normalize({6, 9, 20});
    AperyTable t = compute_apery(g);

    MembershipCertificate no = is_member(t, g, 43);
    CHECK_FALSE(no.member);
    REQUIRE(no.blocking.has_value());
    CHECK(*no.blocking == 49);

    MembershipCertificate yes = is_member(t, g, 44);
    CHECK(yes.member);
    CHECK(yes.representation == std::vector<Int>{4, 0, 1});

    MembershipCertificate zero = is_member(t, g, 0);
    CHECK(zero.member);
    CHECK(zero.representation == std::vector<Int>{0, 0, 0});

    CHECK_THROWS_AS(is_member(t, g, -1), NegativeQueryError);
}

TEST_CASE("representation reproduces the query exactly") {
    GeneratorSet g = normalize({6, 9, 20});
    AperyTable t = compute_apery(g);
    for (Int b = 0; b <= 200; ++b) {
        MembershipCertificate c = is_member(t, g, b);
        if (!c.member) continue;
        Int sum = 0;
        for (std::size_t i = 0; i < g.sorted.size(); ++i)
            sum += c.representation[i] * g.sorted[i];
        CHECK(sum == b);
    }
}

TEST_CASE("membership with a nontrivial gcd") {
    GeneratorSet g = normalize({4, 6});
    AperyTable t = compute_apery(g);
    CHECK_FALSE(is_member(t, g, 7).member);
    CHECK_FALSE(is_member(t, g, 7).blocking.has_value());  // 7 is odd
    CHECK_FALSE(is_member(t, g, 2).member);
    CHECK(is_member(t, g, 2).blocking == 6);
    CHECK(is_member(t, g, 10).member);
}

TEST_CASE("hilbert series") {
    GeneratorSet g = normalize({2, 3});
    HilbertSeries h = hilbert_series(compute_apery(g), g);
    CHECK(h.numerator_exponents == std::vector<Int>{0, 3});
    CHECK(h.denominator_exponent == 2);
    CHECK(h.degree == 1);

    GeneratorSet g2 = normalize({6, 9, 20});
    HilbertSeries h2 = hilbert_series(compute_apery(g2), g2);
    CHECK(h2.numerator_exponents == std::vector<Int>{0, 9, 20, 29, 40, 49});
    CHECK(h2.degree == 43);

    GeneratorSet g3 = normalize({4, 6});
    HilbertSeries h3 = hilbert_series(compute_apery(g3), g3);
    CHECK(h3.numerator_exponents == std::vector<Int>{0, 6});
    CHECK(h3.denominator_exponent == 4);
    CHECK(h3.degree == 2);
}

TEST_CASE("module decomposition") {
    GeneratorSet g = normalize({2, 3});
    CHECK(module_decomposition(compute_apery(g)) == std::vector<Int>{0, 3});
    GeneratorSet g2 = normalize({6, 9, 20});
    CHECK(module_decomposition(compute_apery(g2)) ==
          std::vector<Int>{0, 9, 20, 29, 40, 49});
    GeneratorSet g3 = normalize({7});
    CHECK(module_decomposition(compute_apery(g3)) == std::vector<Int>{0});
}

TEST_CASE("hilbert degree equals the frobenius number") {
    for (auto gens : std::vector<std::vector<Int>>{
             {2, 3}, {6, 9, 20}, {5, 6, 29}, {4, 6}, {10, 7, 9}, {7}}) {
        GeneratorSet g = normalize(std::span<const Int>(gens));
        AperyTable t = compute_apery(g);
        CHECK(hilbert_series(t, g).degree == frobenius(t));
    }
}

TEST_CASE("witnesses are divisor-closed and within the cube bound") {
    for (auto gens : std::vector<std::vector<Int>>{
             {6, 9, 20}, {5, 6, 29}, {10, 7, 9}, {31, 45, 58, 77}}) {
        GeneratorSet g = normalize(std::span<const Int>(gens));
        AperyTable t = compute_apery(g);
        MonomialOrder order(g);
        for (Int r = 0; r < t.base; ++r) {
            ExponentVector w = t.witness_vec(r);
            CHECK(w.cube() <= t.base);
            CHECK(order.qsum(w.exps) == t.value(r));
            for (std::size_t i = 0; i < w.exps.size(); ++i) {
                if (w.exps[i] == 0) continue;
                --w.exps[i];
                Int q = order.qsum(w.exps);
                Int rr = q % t.base;
                CHECK(t.value(rr) == q);
                CHECK(std::equal(w.exps.begin(), w.exps.end(),
                                 t.witness(rr).begin()));
                ++w.exps[i];
            }
        }
    }
}

TEST_CASE("witnesses are order-minimal among all representations") {
    // brute-force every representation of each slot value
    for (auto gens : std::vector<std::vector<Int>>{
             {6, 9, 20}, {4, 3, 6}, {10, 7, 9}, {13, 17, 20, 31}}) {
        GeneratorSet g = normalize(std::span<const Int>(gens));
        AperyTable t = compute_apery(g);
        MonomialOrder order(g);
        std::vector<Int> w = g.nonparam_reduced();
        for (Int r = 0; r < t.base; ++r) {
            Int target = t.value(r);
            std::vector<Int> k(w.size(), 0);
            auto rec = [&](auto&& self, std::size_t i, Int rem) -> void {
                if (i + 1 == k.size()) {
                    if (rem % w[i] != 0) return;
                    k[i] = rem / w[i];
                    CHECK(order.compare(t.witness(r), k) != Cmp::Greater);
                    k[i] = 0;
                    return;
                }
                for (Int v = 0; v * w[i] <= rem; ++v) {
                    k[i] = v;
                    self(self, i + 1, rem - v * w[i]);
                }
                k[i] = 0;
            };
            if (!k.empty()) rec(rec, 0, target);
        }
    }
}

TEST_CASE("table values equal the shortest-path oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<Int> da(20, 400);
        std::uniform_int_distribution<Int> dn(2, 5);
        Int a = da(rng);
        std::vector<Int> gens{a};
        Int n = dn(rng);
        std::uniform_int_distribution<Int> dg(a + 1, 6 * a);
        for (Int i = 1; i < n; ++i) gens.push_back(dg(rng));
        GeneratorSet g = normalize(std::span<const Int>(gens));
        AperyTable t = compute_apery(g);
        CHECK(t.values == oracle::apery_shortest_path(g));
    }
}

TEST_CASE("membership agrees with the reachability oracle") {
    for (auto gens : std::vector<std::vector<Int>>{
             {6, 9, 20}, {5, 6, 29}, {4, 6}, {10, 7, 9}}) {
        GeneratorSet g = normalize(std::span<const Int>(gens));
        AperyTable t = compute_apery(g);
        Int bound = frobenius(t) + g.param() + g.sorted.back();
        std::vector<bool> reach = oracle::member_table(g, bound);
        for (Int b = 0; b <= bound; ++b)
            CHECK(is_member(t, g, b).member == reach[std::size_t(b)]);
    }
}

TEST_CASE("parallel scan produces the identical table") {
    GeneratorSet g = normalize(std::span<const Int>(kPaper17));
    AperyTable serial = compute_apery(g);
    AperyParams par;
    par.threads = 4;
    AperyTable threaded = compute_apery(g, par);
    CHECK(serial.values == threaded.values);
    CHECK(serial.witness_data == threaded.witness_data);
    CHECK(serial.levels_scanned == threaded.levels_scanned);
}

TEST_CASE("threaded determinism on random wide instances") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        std::uniform_int_distribution<Int> da(800, 1800);
        Int a = da(rng);
        std::vector<Int> gens{a};
        std::uniform_int_distribution<Int> dg(a + 1, 4 * a);
        for (int i = 0; i < 5; ++i) gens.push_back(dg(rng));
        GeneratorSet g = normalize(std::span<const Int>(gens));
        AperyTable serial = compute_apery(g);
        for (unsigned threads : {2u, 3u, 7u}) {
            AperyParams p;
            p.threads = threads;
            AperyTable par = compute_apery(g, p);
            CHECK(par.values == serial.values);
            CHECK(par.witness_data == serial.witness_data);
            CHECK(par.levels_scanned == serial.levels_scanned);
        }
        CHECK(serial.values == oracle::apery_shortest_path(g));
    }
}

TEST_CASE("flagship 17-generator instance table facts") {
    GeneratorSet g = normalize(std::span<const Int>(kPaper17));
    AperyTable t = compute_apery(g);
    CHECK(t.base == 1030);
    CHECK(t.complete());
    CHECK(t.values == oracle::apery_shortest_path(g));
    CHECK(frobenius(t) == 5145);
}

TEST_CASE("incomplete tables are rejected downstream") {
    GeneratorSet g = normalize({6, 9, 20});
    AperyParams p;
    p.max_level = 1;  // too shallow to fill every slot
    AperyTable t = compute_apery(g, p);
    CHECK_FALSE(t.complete());
    CHECK_THROWS_AS(frobenius(t), Error);
    CHECK_THROWS_AS(is_member(t, g, 5), Error);
}

TEST_CASE("a larger product cap changes nothing") {
    // every witness has cube <= base, so any cap >= base + 1 is equivalent
    GeneratorSet g = normalize({31, 45, 58, 77});
    AperyTable def = compute_apery(g);
    AperyParams wide;
    wide.product_cap = 10 * def.base;
    AperyTable t = compute_apery(g, wide);
    CHECK(t.values == def.values);
    CHECK(t.witness_data == def.witness_data);
}

TEST_CASE("residue classes partition the table") {
    GeneratorSet g = normalize({5, 6, 29});
    AperyTable t = compute_apery(g);
    for (Int r = 0; r < t.base; ++r) CHECK(t.value(r) % t.base == r);
}
