#pragma once

#include "nsg/grobner.hpp"

namespace nsg::oracle {

/// Apery values of the reduced semigroup by single-source shortest paths on
/// the residue graph mod the reduced parameter (edges r -> r + w mod base of
/// weight w, one per non-parameter generator). Deliberately shares no code
/// with the graded-scan engine.
std::vector<Int> apery_shortest_path(const GeneratorSet& g);

/// Reachability table over the original generators: entry b is true iff b is
/// a sum of generators.
std::vector<bool> member_table(const GeneratorSet& g, Int bound);

/// True iff b is in the semigroup, by dynamic programming up to b.
bool member_dp(const GeneratorSet& g, Int b);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool overall = false;
};

/// S-polynomial of b1, b2 reduced by the basis: rewrites the larger of the
/// two monomials (then the other when stuck) until neither is divisible by a
/// lead; true iff they cancel. Throws NonTerminationError past the step
/// budget of 10*base^2, which would indicate a broken order.
bool spair_reduce(const GeneratorSet& g, const Binomial& b1, const Binomial& b2,
                  const std::vector<Binomial>& gb);

/// Structural checks of a claimed reduced Groebner basis against the table:
/// weighted homogeneity, lead position, pairwise minimality of the leads,
/// the staircase partition with cardinality base, tails in normal form, and
/// optionally full S-pair closure.
VerificationReport verify_groebner(const GeneratorSet& g,
                                   const std::vector<Binomial>& gb,
                                   const AperyTable& t, bool run_spairs = true);

}  // namespace nsg::oracle
