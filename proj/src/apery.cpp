#include "nsg/apery.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "nsg/enumerate.hpp"

namespace nsg {

namespace {

constexpr Int kUnset = -1;

// Uncapped composition count C(s+m-1, m-1), clamped; used only to decide
// whether a level is worth splitting across threads.
Int composition_count_clamped(Int s, std::size_t m, Int clamp) {
    Int c = 1;
    for (std::size_t i = 1; i < m; ++i) {
        if (__builtin_mul_overflow(c, s + static_cast<Int>(i), &c))
            return clamp;
        c /= static_cast<Int>(i);
        if (c >= clamp) return clamp;
    }
    return c;
}

struct ScanState {
    AperyTable* table;
    std::span<const Int> weights;
    Int filled = 0;
    Int max_seen = 0;  // upper bound of the current max slot value
    bool changed = false;
};

// The per-slot update is a meet in the total order (value, then monomial
// order on the witness), so applying candidates in any order yields the same
// table; this is what makes the parallel merge bit-identical to serial.
void apply_candidate(ScanState& st, Int q, Int r, std::span<const Int> k) {
    AperyTable& t = *st.table;
    Int& slot = t.values[static_cast<std::size_t>(r)];
    bool take = false;
    if (slot == kUnset) {
        ++st.filled;
        if (q > st.max_seen) st.max_seen = q;
        take = true;
    } else if (q < slot) {
        take = true;
    } else if (q == slot) {
        auto w = t.witness(r);
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] != w[i]) {
                take = k[i] > w[i];  // revlex: larger first exponent is smaller
                break;
            }
        }
    }
    if (take) {
        slot = q;
        std::copy(k.begin(), k.end(),
                  t.witness_data.begin() +
                      static_cast<std::size_t>(r) * t.witness_len);
        st.changed = true;
    }
}

void scan_level_serial(ScanState& st, Int s, Int cap) {
    const auto& w = st.weights;
    const Int base = st.table->base;
    visit_level(w.size(), s, cap, [&](std::span<const Int> k) {
        Int q = 0;
        for (std::size_t i = 0; i < k.size(); ++i)
            q = checked_add(q, checked_mul(k[i], w[i]));
        apply_candidate(st, q, q % base, k);
    });
}

// One worker's improvement candidates for a level, in its own visit order.
struct CandidateBuffer {
    std::vector<Int> qs;
    std::vector<Int> rs;
    std::vector<Int> ks;  // flat, witness_len per entry
};

void scan_level_parallel(ScanState& st, Int s, Int cap, unsigned threads) {
    const AperyTable& t = *st.table;
    const std::size_t nv = st.weights.size();
    const Int base = t.base;
    std::vector<CandidateBuffer> bufs(threads);

    auto worker = [&](unsigned id) {
        CandidateBuffer& buf = bufs[id];
        std::vector<Int> k(nv, 0);
        // Round-robin over the leading exponent; every worker walks its own
        // subtrees in descending order, but merge order does not matter.
        Int top = cap - 1;  // acc == 1, so k[0] <= cap - 1
        if (top > s) top = s;
        for (Int v = top - static_cast<Int>(id); v >= 0;
             v -= static_cast<Int>(threads)) {
            k[0] = v;
            auto emit = [&](std::span<const Int> kk) {
                Int q = 0;
                for (std::size_t i = 0; i < nv; ++i)
                    q = checked_add(q, checked_mul(kk[i], st.weights[i]));
                Int r = q % base;
                Int slot = t.values[static_cast<std::size_t>(r)];
                bool candidate = slot == kUnset || q < slot;
                if (!candidate && q == slot) {
                    auto wit = t.witness(r);
                    for (std::size_t i = 0; i < nv; ++i) {
                        if (kk[i] != wit[i]) {
                            candidate = kk[i] > wit[i];
                            break;
                        }
                    }
                }
                if (candidate) {
                    buf.qs.push_back(q);
                    buf.rs.push_back(r);
                    buf.ks.insert(buf.ks.end(), kk.begin(), kk.end());
                }
            };
            detail::visit_tail(k, 1, s - v, v + 1, cap, emit);
        }
    };

    std::vector<std::exception_ptr> errors(threads);
    auto guarded = [&](unsigned id) {
        try {
            worker(id);
        } catch (...) {
            errors[id] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(guarded, id);
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);

    for (const CandidateBuffer& buf : bufs) {
        for (std::size_t i = 0; i < buf.qs.size(); ++i)
            apply_candidate(st, buf.qs[i], buf.rs[i],
                            {buf.ks.data() + i * nv, nv});
    }
}

}  // namespace

Int AperyTable::max_value() const {
    Int m = 0;
    for (Int v : values)
        if (v > m) m = v;
    return m;
}

AperyTable compute_apery(const GeneratorSet& g, const AperyParams& params) {
    const Int base = g.reduced_param();
    const std::vector<Int> weights = g.nonparam_reduced();
    const std::size_t nv = weights.size();

    AperyTable t;
    t.base = base;
    t.lambda = g.lambda;
    t.witness_len = nv;
    const Int cells = checked_mul(base, static_cast<Int>(nv));
    try {
        t.values.assign(static_cast<std::size_t>(base), kUnset);
        t.witness_data.assign(static_cast<std::size_t>(cells), 0);
    } catch (const std::bad_alloc&) {
        throw Error("apery table with " + std::to_string(base) +
                    " residue classes does not fit in memory");
    } catch (const std::length_error&) {
        throw Error("apery table with " + std::to_string(base) +
                    " residue classes does not fit in memory");
    }
    t.values[0] = 0;
    if (base == 1 || nv == 0) {
        t.scan_complete = base == 1;
        return t;
    }

    const Int cap = params.product_cap > 0 ? params.product_cap : base + 1;
    const Int hard_cap = params.max_level >= 0 ? params.max_level : base;
    const Int min_weight = *std::min_element(weights.begin(), weights.end());
    const unsigned threads = params.threads == 0 ? 1 : params.threads;

    ScanState st;
    st.table = &t;
    st.weights = weights;
    st.filled = 1;

    for (Int s = 1; s <= hard_cap; ++s) {
        st.changed = false;
        bool parallel = threads > 1 && nv >= 2 &&
                        composition_count_clamped(s, nv, 4096) >= 4096;
        if (parallel)
            scan_level_parallel(st, s, cap, threads);
        else
            scan_level_serial(st, s, cap);
        t.levels_scanned = s;
        if (!st.changed) break;  // (a) level exhausted
        if (st.filled == base &&
            checked_mul(min_weight, checked_add(s, 1)) > st.max_seen)
            break;  // (b) every later vector overshoots every slot
    }
    t.scan_complete = st.filled == base;
    return t;
}

namespace {

void require_complete(const AperyTable& t) {
    if (!t.complete())
        throw Error("apery table is incomplete (level cap too low?)");
}

}  // namespace

Int frobenius(const AperyTable& t) {
    require_complete(t);
    return checked_mul(t.lambda, checked_sub(t.max_value(), t.base));
}

MembershipCertificate is_member(const AperyTable& t, const GeneratorSet& g,
                                Int b) {
    if (b < 0) throw NegativeQueryError("membership query must be nonnegative");
    require_complete(t);
    MembershipCertificate cert;
    if (b % t.lambda != 0) return cert;  // no element of S in this class
    const Int v = b / t.lambda;
    const Int r = v % t.base;
    const Int slot = t.value(r);
    if (v < slot) {
        cert.blocking = checked_mul(t.lambda, slot);
        return cert;
    }
    cert.member = true;
    cert.representation.assign(g.var_count(), 0);
    cert.representation[g.param_index] = (v - slot) / t.base;
    auto w = t.witness(r);
    std::size_t wi = 0;
    for (std::size_t i = 0; i < g.var_count(); ++i)
        if (i != g.param_index) cert.representation[i] = w[wi++];
    return cert;
}

HilbertSeries hilbert_series(const AperyTable& t, const GeneratorSet& g) {
    require_complete(t);
    HilbertSeries h;
    h.numerator_exponents.reserve(t.values.size());
    for (Int v : t.values)
        h.numerator_exponents.push_back(checked_mul(t.lambda, v));
    std::sort(h.numerator_exponents.begin(), h.numerator_exponents.end());
    h.denominator_exponent = g.param();
    h.degree = checked_sub(h.numerator_exponents.back(), h.denominator_exponent);
    return h;
}

std::vector<Int> module_decomposition(const AperyTable& t) {
    require_complete(t);
    std::vector<Int> degs;
    degs.reserve(t.values.size());
    for (Int v : t.values) degs.push_back(checked_mul(t.lambda, v));
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace nsg
