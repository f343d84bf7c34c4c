#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "nsg/core.hpp"

namespace nsg {

namespace detail {

// True if a*b overflows or exceeds cap. Partial products are monotone under
// divisibility, so an overflowing product is always past the cap.
inline bool product_exceeds(Int a, Int b, Int cap) {
    Int p;
    return __builtin_mul_overflow(a, b, &p) || p > cap;
}

template <class Visitor>
void visit_tail(std::vector<Int>& k, std::size_t idx, Int remaining, Int acc,
                Int cap, Visitor& visit) {
    if (idx + 1 == k.size()) {
        if (product_exceeds(acc, remaining + 1, cap)) return;
        k[idx] = remaining;
        visit(std::span<const Int>(k));
        return;
    }
    // acc*(v+1) <= cap  <=>  v <= cap/acc - 1; larger values head subtrees
    // whose partial product already exceeds the cap.
    Int top = cap / acc - 1;
    if (top > remaining) top = remaining;
    for (Int v = top; v >= 0; --v) {
        k[idx] = v;
        visit_tail(k, idx + 1, remaining - v, acc * (v + 1), cap, visit);
    }
}

}  // namespace detail

/// Visits every (k2..kn) with sum(k_i) = s and prod(k_i+1) <= cap exactly
/// once, in descending lexicographic order, pruning a subtree as soon as its
/// partial product exceeds the cap. The span passed to the visitor aliases a
/// scratch buffer and is only valid during the call.
template <class Visitor>
void visit_level(std::size_t nvars, Int s, Int cap, Visitor&& visit) {
    if (s < 0 || cap < 1) return;
    if (nvars == 0) {
        if (s == 0) {
            std::vector<Int> empty;
            visit(std::span<const Int>(empty));
        }
        return;
    }
    std::vector<Int> k(nvars, 0);
    detail::visit_tail(k, 0, s, Int{1}, cap, visit);
}

/// Materialized level of the graded enumeration, in the order of visit_level.
std::vector<ExponentVector> level_vectors(const GeneratorSet& g, Int s, Int cap);

/// Number of vectors level_vectors would produce.
Int count_level(const GeneratorSet& g, Int s, Int cap);

/// Single-consumer cursor over one level of the graded enumeration.
class LevelStream {
public:
    LevelStream(const GeneratorSet& g, Int level, Int cap);

    Int level() const { return level_; }
    Int cap() const { return cap_; }

    /// Next vector in the documented order, or nullopt when exhausted.
    std::optional<ExponentVector> next();

private:
    Int level_;
    Int cap_;
    std::vector<ExponentVector> buffer_;
    std::size_t pos_ = 0;
};

}  // namespace nsg
