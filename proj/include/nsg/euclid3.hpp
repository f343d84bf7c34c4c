#pragma once

#include "nsg/grobner.hpp"

namespace nsg {

/// Quotients and the s, p, r sequences of the negative-remainder Euclidean
/// construction for three generators (a listed first is the parameter).
struct Euclid3Table {
    Int a = 0, b = 0, c = 0;
    std::vector<Int> q;        // quotients q_2..q_{m+1}; empty when s_1 = 0
    std::vector<Int> s, p, r;  // indexed 0..m+1
    std::size_t mu = 0;        // unique index with r_mu > 0 >= r_{mu+1}
};

struct EuclidPair {
    std::vector<Int> q;
    std::vector<Int> s;
};

/// Euclidean algorithm with negative remainder: s_{i-1} = q_{i+1}*s_i -
/// s_{i+1} with 0 <= s_{i+1} < s_i, so every quotient is >= 2. Requires
/// s0 > s1 > 0; the s list ends with 0.
EuclidPair neg_remainder_euclid(Int s0, Int s1);

/// Builds the full table for (a, b, c): s0 = a/gcd(a,b), p1 =
/// gcd(a,b)/gcd(a,b,c), s1 the least nonnegative solution of s*b = p1*c
/// (mod a), and the rest by the shared second-order recurrence. The
/// determinant identity s_i*p_{i+1} - s_{i+1}*p_i = a/gcd(a,b,c) and the
/// uniqueness of mu are asserted.
Euclid3Table sequences3(Int a, Int b, Int c);

struct Gb3Result {
    Euclid3Table table;
    std::vector<Binomial> binomials;  // reduced basis, variables x2<->b, x3<->c
    StaircaseReport staircase;
    Int staircase_size = 0;
    Int frobenius = 0;
    /// Set when the closed-form construction failed its self-checks and the
    /// result was recomputed with the general engine.
    bool used_fallback = false;
};

/// Closed-form Groebner basis, staircase and Frobenius number for three
/// generators in O(log a) arithmetic steps. The first generator is the
/// parameter regardless of magnitude.
Gb3Result gb3(Int a, Int b, Int c);

/// Frobenius number of two coprime generators: (a1-1)*(a2-1) - 1.
Int frobenius2(Int a1, Int a2);

}  // namespace nsg
