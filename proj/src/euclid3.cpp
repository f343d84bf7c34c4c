#include "nsg/euclid3.hpp"

#include <algorithm>
#include <numeric>

namespace nsg {

namespace {

// Least nonnegative solution of x*u = t (mod m), given gcd(u, m) | t.
Int solve_congruence(Int u, Int t, Int m) {
    if (m == 1) return 0;
    u %= m;
    t %= m;
    Int g = std::gcd(u, m);
    if (t % g != 0)
        throw DegenerateInputError("congruence for s1 has no solution");
    Int mu = m / g;
    Int uu = (u / g) % mu;
    Int tt = (t / g) % mu;
    // extended euclid for the inverse of uu mod mu
    Int r0 = mu, r1 = uu, x0 = 0, x1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int x2 = x0 - q * x1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
    }
    Int inv = x0 % mu;
    if (inv < 0) inv += mu;
    return static_cast<Int>(static_cast<__int128>(tt) * inv % mu);
}

}  // namespace

EuclidPair neg_remainder_euclid(Int s0, Int s1) {
    if (s1 <= 0 || s0 <= s1)
        throw InvalidPairError("neg_remainder_euclid requires s0 > s1 > 0");
    EuclidPair out;
    out.s = {s0, s1};
    while (out.s.back() > 0) {
        Int prev = out.s[out.s.size() - 2];
        Int cur = out.s.back();
        Int q = (prev + cur - 1) / cur;  // ceil, >= 2 since prev > cur
        out.q.push_back(q);
        out.s.push_back(checked_sub(checked_mul(q, cur), prev));
    }
    return out;
}

Euclid3Table sequences3(Int a, Int b, Int c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw NonPositiveGeneratorError("generators must be positive");
    Euclid3Table t;
    t.a = a;
    t.b = b;
    t.c = c;
    const Int gab = std::gcd(a, b);
    const Int gabc = std::gcd(gab, c);
    const Int s0 = a / gab;
    const Int r0 = b / gab;
    const Int p1 = gab / gabc;

    const Int s1 = solve_congruence(b, checked_mul(p1, c) % a, a);
    // s1 < a/gcd(a,b) = s0 by construction
    Int num = checked_sub(checked_mul(s1, b), checked_mul(p1, c));
    if (num % a != 0)
        throw DegenerateInputError("s1 does not satisfy its congruence");
    const Int r1 = num / a;

    if (s1 == 0) {
        t.s = {s0, 0};
    } else {
        EuclidPair e = neg_remainder_euclid(s0, s1);
        t.s = std::move(e.s);
        t.q = std::move(e.q);
    }
    const std::size_t m = t.s.size() - 2;
    t.p = {0, p1};
    t.r = {r0, r1};
    for (std::size_t i = 1; i <= m; ++i) {
        Int qi = t.q[i - 1];
        t.p.push_back(checked_sub(checked_mul(t.p[i], qi), t.p[i - 1]));
        t.r.push_back(checked_sub(checked_mul(t.r[i], qi), t.r[i - 1]));
    }

    const Int det = a / gabc;
    for (std::size_t i = 0; i <= m; ++i) {
        Int d = checked_sub(checked_mul(t.s[i], t.p[i + 1]),
                            checked_mul(t.s[i + 1], t.p[i]));
        if (d != det)
            throw DegenerateInputError("determinant identity failed at index " +
                                       std::to_string(i));
    }

    std::size_t hits = 0;
    for (std::size_t i = 0; i <= m; ++i) {
        if (t.r[i] > 0 && t.r[i + 1] <= 0) {
            t.mu = i;
            ++hits;
        }
    }
    if (hits != 1)
        throw DegenerateInputError("sign-change index mu is not unique");
    return t;
}

namespace {

bool divides(const ExponentVector& d, const ExponentVector& m) {
    for (std::size_t i = 0; i < d.exps.size(); ++i)
        if (d.exps[i] > m.exps[i]) return false;
    return true;
}

Gb3Result gb3_fallback(Int a, Int b, Int c, Euclid3Table table) {
    GeneratorSet g = normalize({a, b, c});
    auto it = std::find(g.sorted.begin(), g.sorted.end(), a);
    g.param_index = static_cast<std::size_t>(it - g.sorted.begin());
    AperyTable t = compute_apery(g);

    Gb3Result out;
    out.table = std::move(table);
    out.staircase = staircase_report(g, t);
    out.binomials = groebner_basis(g, t);
    out.staircase_size = t.base;
    out.frobenius = frobenius(t);
    out.used_fallback = true;

    // The general engine labels non-parameter variables in sorted order; map
    // back to x2<->b, x3<->c when that is a plain swap.
    if (g.var_count() == 3 && b > c) {
        auto flip = [](ExponentVector& v) { std::swap(v.exps[0], v.exps[1]); };
        for (auto& v : out.staircase.standard) flip(v);
        for (auto& v : out.staircase.generators) flip(v);
        for (auto& bi : out.binomials) {
            flip(bi.lead);
            flip(bi.tail_witness);
        }
    }
    return out;
}

}  // namespace

Gb3Result gb3(Int a, Int b, Int c) {
    Euclid3Table t;
    try {
        t = sequences3(a, b, c);
    } catch (const DegenerateInputError&) {
        Euclid3Table bare;
        bare.a = a;
        bare.b = b;
        bare.c = c;
        return gb3_fallback(a, b, c, std::move(bare));
    }

    const Int gabc = std::gcd(std::gcd(a, b), c);
    const std::size_t mu = t.mu;
    const Int smu = t.s[mu], smu1 = t.s[mu + 1];
    const Int pmu = t.p[mu], pmu1 = t.p[mu + 1];
    const Int rmu = t.r[mu], rmu1 = t.r[mu + 1];

    std::vector<Binomial> cand(3);
    cand[0].lead = ExponentVector({smu, 0});
    cand[0].tail_param_exp = rmu;
    cand[0].tail_witness = ExponentVector({0, pmu});
    cand[1].lead = ExponentVector({0, pmu1});
    cand[1].tail_param_exp = -rmu1;
    cand[1].tail_witness = ExponentVector({smu1, 0});
    cand[2].lead = ExponentVector({checked_sub(smu, smu1),
                                   checked_sub(pmu1, pmu)});
    cand[2].tail_param_exp = checked_sub(rmu, rmu1);
    cand[2].tail_witness = ExponentVector({0, 0});

    std::vector<Binomial> kept;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        const ExponentVector& lead = cand[i].lead;
        if (std::all_of(lead.exps.begin(), lead.exps.end(),
                        [](Int k) { return k == 0; }))
            continue;
        bool redundant = false;
        for (std::size_t j = 0; j < cand.size() && !redundant; ++j)
            redundant = j != i && cand[j].lead != lead &&
                        divides(cand[j].lead, lead);
        if (!redundant) kept.push_back(cand[i]);
    }

    // Self-checks: homogeneity and lead position under the order, and the
    // staircase counting identity. Any failure routes to the general engine.
    MonomialOrder order(a / gabc, {b / gabc, c / gabc});
    for (const Binomial& bi : kept) {
        bool homogeneous =
            order.qsum(bi.lead.exps) ==
            checked_add(checked_mul(bi.tail_param_exp, a / gabc),
                        order.qsum(bi.tail_witness.exps));
        bool lead_ok = bi.tail_param_exp >= 0 &&
                       order.compare(0, bi.lead.exps, bi.tail_param_exp,
                                     bi.tail_witness.exps) == Cmp::Greater;
        if (!homogeneous || !lead_ok) return gb3_fallback(a, b, c, std::move(t));
    }

    const Int k1 = checked_sub(smu, smu1);  // first block: k < k1, l < pmu1
    const Int l2 = checked_sub(pmu1, pmu);  // second block: k < smu, l < l2
    const Int size =
        checked_add(checked_mul(k1, pmu1), checked_mul(smu1, l2));
    if (size != a / gabc) return gb3_fallback(a, b, c, std::move(t));

    Gb3Result out;
    out.staircase_size = size;
    out.binomials = std::move(kept);

    Int best = checked_add(checked_mul(k1 - 1, b), checked_mul(pmu1 - 1, c));
    if (smu1 >= 1 && l2 >= 1) {
        Int alt =
            checked_add(checked_mul(smu - 1, b), checked_mul(l2 - 1, c));
        if (alt > best) best = alt;
    }
    out.frobenius = checked_sub(best, a);

    out.staircase.standard.reserve(static_cast<std::size_t>(size));
    Int maxdeg = 0;
    for (Int k = 0; k < smu; ++k) {
        const Int lim = k < k1 ? pmu1 : l2;
        for (Int l = 0; l < lim; ++l) {
            out.staircase.standard.push_back(ExponentVector({k, l}));
            if (k + l > maxdeg) maxdeg = k + l;
        }
    }
    std::sort(out.staircase.standard.begin(), out.staircase.standard.end(),
              [&](const ExponentVector& x, const ExponentVector& y) {
                  return order.less(x.exps, y.exps);
              });
    out.staircase.max_standard_totaldeg = maxdeg;
    for (const Binomial& bi : out.binomials)
        out.staircase.generators.push_back(bi.lead);
    out.table = std::move(t);
    return out;
}

Int frobenius2(Int a1, Int a2) {
    if (a1 <= 0 || a2 <= 0)
        throw NonPositiveGeneratorError("generators must be positive");
    if (std::gcd(a1, a2) != 1)
        throw NotCoprimeError("frobenius2 requires coprime generators");
    return checked_sub(checked_mul(a1 - 1, a2 - 1), 1);
}

}  // namespace nsg
