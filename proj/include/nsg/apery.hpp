#pragma once

#include <optional>

#include "nsg/core.hpp"

namespace nsg {

/// Residue-indexed table of the minimal semigroup elements mod the reduced
/// parameter, with the order-minimal witness monomial for each slot.
struct AperyTable {
    Int base = 0;    // reduced parameter
    Int lambda = 1;  // scale factor back to the original generators
    std::size_t witness_len = 0;
    std::vector<Int> values;        // reduced scale; slot r holds min of class r
    std::vector<Int> witness_data;  // base rows of witness_len exponents
    Int levels_scanned = 0;
    bool scan_complete = false;  // set by compute_apery once every slot filled

    Int value(Int r) const { return values[static_cast<std::size_t>(r)]; }
    Int scaled_value(Int r) const { return checked_mul(lambda, value(r)); }

    std::span<const Int> witness(Int r) const {
        return {witness_data.data() +
                    static_cast<std::size_t>(r) * witness_len,
                witness_len};
    }

    ExponentVector witness_vec(Int r) const {
        auto w = witness(r);
        return ExponentVector(std::vector<Int>(w.begin(), w.end()));
    }

    bool complete() const {
        if (scan_complete) return true;
        for (Int v : values)
            if (v < 0) return false;
        return true;
    }

    Int max_value() const;
};

struct AperyParams {
    unsigned threads = 1;
    Int max_level = -1;    // override of the hard level cap (default: base)
    Int product_cap = -1;  // override of the cube cap (default: base + 1)
};

/// Graded scan of the exponent vectors (k2..kn) by total degree, keeping per
/// residue class the minimal weighted degree and its order-minimal witness.
///
/// The scan stops at the first of:
///  (a) a level that changes no slot (cap-pruned vectors count as dominated),
///  (b) all slots filled and min_weight*(s+1) exceeds every slot value, so no
///      later vector can reach any slot, or
///  (c) the hard level cap (witnesses have total degree below the base).
///
/// Covering all residues is NOT a sound stop on its own: slots can still
/// improve afterwards (e.g. generators 5,6,29 at level 2).
AperyTable compute_apery(const GeneratorSet& g, const AperyParams& params = {});

/// Largest gap of the semigroup, from a complete table: lambda*(max - base).
/// By the degree convention this is -lambda when the reduced semigroup is all
/// of N.
Int frobenius(const AperyTable& t);

struct MembershipCertificate {
    bool member = false;
    /// Multiplicities aligned with GeneratorSet::sorted; present iff member.
    std::vector<Int> representation;
    /// Minimal semigroup element of the blocking residue class (original
    /// scale); present iff not member and lambda divides the query.
    std::optional<Int> blocking;
};

/// Knapsack membership with certificate: b is in the semigroup iff lambda
/// divides b and b/lambda reaches its slot value.
MembershipCertificate is_member(const AperyTable& t, const GeneratorSet& g,
                                Int b);

struct HilbertSeries {
    std::vector<Int> numerator_exponents;  // sorted, original scale
    Int denominator_exponent = 0;          // the parameter generator
    Int degree = 0;                        // max numerator - denominator
};

HilbertSeries hilbert_series(const AperyTable& t, const GeneratorSet& g);

/// Degrees of the free-module generators over the parameter subring; the
/// sorted multiset equals the Hilbert numerator exponents.
std::vector<Int> module_decomposition(const AperyTable& t);

}  // namespace nsg
