#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsg {

/// All semigroup arithmetic is exact 64-bit; any operation that would wrap
/// throws OverflowError instead.
using Int = std::int64_t;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

class NonPositiveGeneratorError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class NegativeQueryError : public Error {
public:
    using Error::Error;
};

class NotCoprimeError : public Error {
public:
    using Error::Error;
};

class InvalidPairError : public Error {
public:
    using Error::Error;
};

class DegenerateInputError : public Error {
public:
    using Error::Error;
};

class NonTerminationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Checked arithmetic
// ---------------------------------------------------------------------------

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Exponents of the non-parameter variables x2..xn of a monomial.
struct ExponentVector {
    std::vector<Int> exps;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<Int> e) : exps(std::move(e)) {}

    std::size_t size() const { return exps.size(); }

    Int totaldeg() const {
        Int s = 0;
        for (Int k : exps) s = checked_add(s, k);
        return s;
    }

    /// prod(k_i + 1); bounds the number of divisor monomials.
    Int cube() const {
        Int p = 1;
        for (Int k : exps) p = checked_mul(p, checked_add(k, 1));
        return p;
    }

    bool operator==(const ExponentVector&) const = default;
};

/// Validated, sorted, gcd-reduced semigroup generators.
///
/// One generator is distinguished as the Noether parameter (variable x1,
/// the revlex-last variable of the monomial order); the remaining generators
/// in sorted order are the variables x2..xn.
struct GeneratorSet {
    std::vector<Int> raw;       // as given
    std::vector<Int> sorted;    // strictly increasing, deduplicated
    Int lambda = 1;             // gcd of all generators
    std::vector<Int> reduced;   // sorted / lambda, gcd 1
    std::size_t param_index = 0;

    std::size_t var_count() const { return sorted.size(); }
    Int param() const { return sorted[param_index]; }
    Int reduced_param() const { return reduced[param_index]; }

    /// Reduced non-parameter generators in sorted order: the weights of x2..xn.
    std::vector<Int> nonparam_reduced() const {
        std::vector<Int> w;
        w.reserve(reduced.size() - 1);
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (i != param_index) w.push_back(reduced[i]);
        return w;
    }

    /// Original-scale non-parameter generators in sorted order.
    std::vector<Int> nonparam_sorted() const {
        std::vector<Int> w;
        w.reserve(sorted.size() - 1);
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (i != param_index) w.push_back(sorted[i]);
        return w;
    }
};

/// Validates and normalizes raw generators: sorts, removes duplicates,
/// divides out the common gcd. The parameter defaults to the smallest
/// generator; param_index indexes the sorted list.
GeneratorSet normalize(std::span<const Int> raw, std::size_t param_index = 0);

inline GeneratorSet normalize(std::initializer_list<Int> raw,
                              std::size_t param_index = 0) {
    return normalize(std::span<const Int>(raw.begin(), raw.size()), param_index);
}

/// Weighted degree sum(k_i * w_i) of a non-parameter exponent vector, over the
/// reduced weights of G.
Int weighted_degree(const ExponentVector& k, const GeneratorSet& g);

enum class Cmp { Less, Equal, Greater };

/// Weighted degree-reverse-lexicographic order with the parameter variable x1
/// revlex-last.
///
/// Monomials are compared by weighted degree first (weights are the reduced
/// generators); on ties, the exponents are scanned x1, x2, ..., xn and the
/// monomial with the larger exponent at the first difference is the smaller
/// one. 1 is the unique minimum, and x1 never divides the lead term of a
/// binomial of the toric ideal.
class MonomialOrder {
public:
    explicit MonomialOrder(const GeneratorSet& g)
        : param_weight_(g.reduced_param()), weights_(g.nonparam_reduced()) {}

    MonomialOrder(Int param_weight, std::vector<Int> weights)
        : param_weight_(param_weight), weights_(std::move(weights)) {}

    Int qsum(std::span<const Int> k) const {
        Int s = 0;
        for (std::size_t i = 0; i < k.size(); ++i)
            s = checked_add(s, checked_mul(k[i], weights_[i]));
        return s;
    }

    /// Full compare of x1^e1 * x^k1 vs x1^e2 * x^k2.
    Cmp compare(Int e1, std::span<const Int> k1, Int e2,
                std::span<const Int> k2) const {
        Int d1 = checked_add(checked_mul(e1, param_weight_), qsum(k1));
        Int d2 = checked_add(checked_mul(e2, param_weight_), qsum(k2));
        if (d1 != d2) return d1 < d2 ? Cmp::Less : Cmp::Greater;
        if (e1 != e2) return e1 > e2 ? Cmp::Less : Cmp::Greater;
        for (std::size_t i = 0; i < k1.size(); ++i)
            if (k1[i] != k2[i]) return k1[i] > k2[i] ? Cmp::Less : Cmp::Greater;
        return Cmp::Equal;
    }

    /// Compare of x1-free monomials.
    Cmp compare(std::span<const Int> k1, std::span<const Int> k2) const {
        return compare(0, k1, 0, k2);
    }

    bool less(std::span<const Int> k1, std::span<const Int> k2) const {
        return compare(k1, k2) == Cmp::Less;
    }

    bool less(Int e1, std::span<const Int> k1, Int e2,
              std::span<const Int> k2) const {
        return compare(e1, k1, e2, k2) == Cmp::Less;
    }

    Int param_weight() const { return param_weight_; }
    std::span<const Int> weights() const { return weights_; }

private:
    Int param_weight_;
    std::vector<Int> weights_;
};

/// Convenience overload bound to a generator set.
Cmp compare(const GeneratorSet& g, Int e1, const ExponentVector& m1, Int e2,
            const ExponentVector& m2);

}  // namespace nsg
