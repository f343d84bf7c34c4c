#include "nsg/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

#include "nsg/enumerate.hpp"

namespace nsg::oracle {

std::vector<Int> apery_shortest_path(const GeneratorSet& g) {
    const Int base = g.reduced_param();
    const std::vector<Int> weights = g.nonparam_reduced();
    constexpr Int kInf = std::numeric_limits<Int>::max();
    std::vector<Int> dist(static_cast<std::size_t>(base), kInf);
    dist[0] = 0;
    using Item = std::pair<Int, Int>;  // (distance, residue)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0, 0);
    while (!heap.empty()) {
        auto [d, r] = heap.top();
        heap.pop();
        if (d != dist[static_cast<std::size_t>(r)]) continue;
        for (Int w : weights) {
            Int to = (r + w % base) % base;
            Int nd = checked_add(d, w);
            if (nd < dist[static_cast<std::size_t>(to)]) {
                dist[static_cast<std::size_t>(to)] = nd;
                heap.emplace(nd, to);
            }
        }
    }
    return dist;
}

std::vector<bool> member_table(const GeneratorSet& g, Int bound) {
    std::vector<bool> reach(static_cast<std::size_t>(bound) + 1, false);
    reach[0] = true;
    for (Int a : g.sorted) {
        for (Int i = a; i <= bound; ++i)
            if (reach[static_cast<std::size_t>(i - a)])
                reach[static_cast<std::size_t>(i)] = true;
    }
    return reach;
}

bool member_dp(const GeneratorSet& g, Int b) {
    if (b < 0) return false;
    return member_table(g, b)[static_cast<std::size_t>(b)];
}

namespace {

struct Mono {
    Int e = 0;
    std::vector<Int> k;
};

bool lead_divides(const ExponentVector& lead, std::span<const Int> k) {
    for (std::size_t i = 0; i < lead.exps.size(); ++i)
        if (lead.exps[i] > k[i]) return false;
    return true;
}

// One rewrite by the first applicable basis element; false if none applies.
bool reduce_once(Mono& m, const std::vector<Binomial>& gb) {
    for (const Binomial& b : gb) {
        if (!lead_divides(b.lead, m.k)) continue;
        for (std::size_t i = 0; i < m.k.size(); ++i)
            m.k[i] = m.k[i] - b.lead.exps[i] + b.tail_witness.exps[i];
        m.e = checked_add(m.e, b.tail_param_exp);
        return true;
    }
    return false;
}

}  // namespace

bool spair_reduce(const GeneratorSet& g, const Binomial& b1, const Binomial& b2,
                  const std::vector<Binomial>& gb) {
    const std::size_t nv = b1.lead.exps.size();
    Mono m1, m2;
    m1.e = b1.tail_param_exp;
    m2.e = b2.tail_param_exp;
    m1.k.resize(nv);
    m2.k.resize(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        Int lcm = std::max(b1.lead.exps[i], b2.lead.exps[i]);
        m1.k[i] = lcm - b1.lead.exps[i] + b1.tail_witness.exps[i];
        m2.k[i] = lcm - b2.lead.exps[i] + b2.tail_witness.exps[i];
    }
    MonomialOrder order(g);
    Int budget = checked_mul(10, checked_mul(g.reduced_param(),
                                             g.reduced_param()));
    while (true) {
        Cmp c = order.compare(m1.e, m1.k, m2.e, m2.k);
        if (c == Cmp::Equal) return true;
        Mono& larger = c == Cmp::Greater ? m1 : m2;
        Mono& smaller = c == Cmp::Greater ? m2 : m1;
        if (!reduce_once(larger, gb) && !reduce_once(smaller, gb)) return false;
        if (--budget <= 0)
            throw NonTerminationError(
                "s-pair reduction exceeded its step budget");
    }
}

VerificationReport verify_groebner(const GeneratorSet& g,
                                   const std::vector<Binomial>& gb,
                                   const AperyTable& t, bool run_spairs) {
    VerificationReport rep;
    MonomialOrder order(g);
    const Int base = t.base;
    auto add = [&](std::string name, bool pass, std::string detail) {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    {
        bool ok = true;
        std::string detail;
        for (const Binomial& b : gb) {
            Int lhs = order.qsum(b.lead.exps);
            Int rhs = checked_add(checked_mul(b.tail_param_exp, base),
                                  order.qsum(b.tail_witness.exps));
            if (lhs != rhs || b.tail_param_exp < 0) {
                ok = false;
                detail = "binomial with lead degree " + std::to_string(lhs) +
                         " vs tail degree " + std::to_string(rhs);
                break;
            }
        }
        add("homogeneous", ok, std::move(detail));
    }

    {
        bool ok = true;
        std::string detail;
        for (const Binomial& b : gb) {
            if (order.compare(0, b.lead.exps, b.tail_param_exp,
                              b.tail_witness.exps) != Cmp::Greater) {
                ok = false;
                detail = "a tail is not smaller than its lead";
                break;
            }
        }
        add("lead_order", ok, std::move(detail));
    }

    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < gb.size() && ok; ++i)
            for (std::size_t j = 0; j < gb.size(); ++j)
                if (i != j && lead_divides(gb[j].lead, gb[i].lead.exps)) {
                    ok = false;
                    detail = "lead " + std::to_string(j) + " divides lead " +
                             std::to_string(i);
                    break;
                }
        add("leads_minimal", ok, std::move(detail));
    }

    {
        // Every monomial up to one past the top standard degree must be a
        // witness or lie under a lead, never both; lead quotients must all
        // be standard.
        bool ok = t.complete();
        std::string detail = ok ? "" : "table incomplete";
        std::set<std::vector<Int>> witnesses;
        Int maxstd = 0;
        if (ok) {
            for (Int r = 0; r < base; ++r) {
                auto w = t.witness(r);
                witnesses.emplace(w.begin(), w.end());
                Int d = 0;
                for (Int k : w) d += k;
                maxstd = std::max(maxstd, d);
            }
            if (static_cast<Int>(witnesses.size()) != base) {
                ok = false;
                detail = "witnesses are not pairwise distinct";
            }
        }
        for (Int s = 0; ok && s <= maxstd + 1; ++s) {
            visit_level(t.witness_len, s, base + 1,
                        [&](std::span<const Int> k) {
                            if (!ok) return;
                            bool wit = witnesses.count(
                                std::vector<Int>(k.begin(), k.end()));
                            bool covered = false;
                            for (const Binomial& b : gb)
                                if (lead_divides(b.lead, k)) {
                                    covered = true;
                                    break;
                                }
                            if (wit == covered) {
                                ok = false;
                                detail =
                                    wit ? "a witness lies under a lead"
                                        : "a non-standard monomial escapes "
                                          "every lead";
                            }
                        });
        }
        if (ok) {
            std::vector<Int> scratch;
            for (const Binomial& b : gb) {
                scratch = b.lead.exps;
                for (std::size_t i = 0; i < scratch.size() && ok; ++i) {
                    if (scratch[i] == 0) continue;
                    --scratch[i];
                    if (!witnesses.count(scratch)) {
                        ok = false;
                        detail = "a lead has a non-standard quotient";
                    }
                    ++scratch[i];
                }
            }
        }
        add("staircase_partition", ok, std::move(detail));
    }

    {
        bool ok = true;
        std::string detail;
        for (const Binomial& b : gb) {
            Int q = order.qsum(b.tail_witness.exps);
            Int r = q % base;
            auto w = t.witness(r);
            if (t.value(r) != q ||
                !std::equal(b.tail_witness.exps.begin(),
                            b.tail_witness.exps.end(), w.begin(), w.end())) {
                ok = false;
                detail = "a tail is not the stored witness of its class";
                break;
            }
        }
        add("tails_standard", ok, std::move(detail));
    }

    if (run_spairs) {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < gb.size() && ok; ++i)
            for (std::size_t j = i; j < gb.size(); ++j)
                if (!spair_reduce(g, gb[i], gb[j], gb)) {
                    ok = false;
                    detail = "s-pair (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") does not reduce to zero";
                    break;
                }
        add("spairs", ok, std::move(detail));
    }

    rep.overall = std::all_of(rep.checks.begin(), rep.checks.end(),
                              [](const CheckResult& c) { return c.pass; });
    return rep;
}

}  // namespace nsg::oracle
