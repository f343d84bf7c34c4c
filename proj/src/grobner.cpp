#include "nsg/grobner.hpp"

#include <algorithm>

#include "nsg/enumerate.hpp"

namespace nsg {

namespace {

void require_complete(const AperyTable& t) {
    if (!t.complete()) throw Error("apery table is incomplete");
}

Int max_witness_totaldeg(const AperyTable& t) {
    Int best = 0;
    for (Int r = 0; r < t.base; ++r) {
        Int d = 0;
        for (Int k : t.witness(r)) d += k;
        if (d > best) best = d;
    }
    return best;
}

}  // namespace

bool is_standard(const GeneratorSet& g, const AperyTable& t,
                 std::span<const Int> k) {
    MonomialOrder order(g);
    Int q = order.qsum(k);
    Int r = q % t.base;
    if (t.value(r) != q) return false;
    auto w = t.witness(r);
    return std::equal(k.begin(), k.end(), w.begin(), w.end());
}

std::vector<ExponentVector> standard_monomials(const GeneratorSet& g,
                                               const AperyTable& t) {
    require_complete(t);
    std::vector<ExponentVector> out;
    out.reserve(static_cast<std::size_t>(t.base));
    for (Int r = 0; r < t.base; ++r) out.push_back(t.witness_vec(r));
    MonomialOrder order(g);
    std::sort(out.begin(), out.end(),
              [&](const ExponentVector& a, const ExponentVector& b) {
                  return order.less(a.exps, b.exps);
              });
    return out;
}

std::vector<ExponentVector> initial_ideal(const GeneratorSet& g,
                                          const AperyTable& t) {
    require_complete(t);
    std::vector<ExponentVector> gens;
    const std::size_t nv = t.witness_len;
    if (nv == 0) return gens;
    const Int cap = t.base + 1;  // cube bound also covers minimal generators
    const Int ceiling = max_witness_totaldeg(t) + 1;
    MonomialOrder order(g);
    auto standard = [&](std::span<const Int> k) {
        Int q = order.qsum(k);
        Int r = q % t.base;
        if (t.value(r) != q) return false;
        auto w = t.witness(r);
        return std::equal(k.begin(), k.end(), w.begin(), w.end());
    };
    std::vector<Int> scratch(nv);
    for (Int s = 1; s <= ceiling; ++s) {
        visit_level(nv, s, cap, [&](std::span<const Int> k) {
            if (standard(k)) return;
            std::copy(k.begin(), k.end(), scratch.begin());
            for (std::size_t i = 0; i < nv; ++i) {
                if (k[i] == 0) continue;
                --scratch[i];
                bool quotient_standard = standard(scratch);
                ++scratch[i];
                if (!quotient_standard) return;  // not a minimal generator
            }
            gens.emplace_back(std::vector<Int>(k.begin(), k.end()));
        });
    }
    return gens;
}

std::vector<Binomial> groebner_basis(const GeneratorSet& g,
                                     const AperyTable& t) {
    std::vector<ExponentVector> gens = initial_ideal(g, t);
    MonomialOrder order(g);
    std::vector<Binomial> gb;
    gb.reserve(gens.size());
    for (ExponentVector& m : gens) {
        Int q = order.qsum(m.exps);
        Int r = q % t.base;
        // Slot value is the class minimum, so the quotient is a nonnegative
        // integer and the tail is in normal form.
        Int e = (q - t.value(r)) / t.base;
        Binomial b;
        b.tail_param_exp = e;
        b.tail_witness = t.witness_vec(r);
        b.lead = std::move(m);
        gb.push_back(std::move(b));
    }
    return gb;
}

StaircaseReport staircase_report(const GeneratorSet& g, const AperyTable& t) {
    StaircaseReport rep;
    rep.standard = standard_monomials(g, t);
    rep.generators = initial_ideal(g, t);
    rep.max_standard_totaldeg = max_witness_totaldeg(t);
    return rep;
}

NormalFormResult normal_form(const GeneratorSet& g, const AperyTable& t,
                             Int param_exp, const ExponentVector& rest) {
    require_complete(t);
    if (param_exp < 0) throw Error("negative exponent in normal form query");
    MonomialOrder order(g);
    Int q = checked_add(checked_mul(param_exp, t.base), order.qsum(rest.exps));
    Int r = q % t.base;
    NormalFormResult nf;
    nf.param_exp = (q - t.value(r)) / t.base;
    nf.witness = t.witness_vec(r);
    return nf;
}

}  // namespace nsg
