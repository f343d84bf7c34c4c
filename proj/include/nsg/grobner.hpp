#pragma once

#include "nsg/apery.hpp"
#include "nsg/core.hpp"

namespace nsg {

/// lead - x1^tail_param_exp * tail_witness, weighted-homogeneous, with the
/// lead strictly larger in the monomial order and the tail in normal form.
struct Binomial {
    ExponentVector lead;
    Int tail_param_exp = 0;
    ExponentVector tail_witness;

    bool operator==(const Binomial&) const = default;
};

struct StaircaseReport {
    std::vector<ExponentVector> standard;    // sorted by the monomial order
    std::vector<ExponentVector> generators;  // minimal monomial generators
    Int max_standard_totaldeg = 0;
};

/// True iff k is outside the initial ideal, i.e. k is the stored witness of
/// its residue class.
bool is_standard(const GeneratorSet& g, const AperyTable& t,
                 std::span<const Int> k);

/// The witnesses of the table, sorted by the monomial order. These are
/// exactly the monomials in x2..xn outside the initial ideal.
std::vector<ExponentVector> standard_monomials(const GeneratorSet& g,
                                               const AperyTable& t);

/// Minimal monomial generators of the initial ideal: the non-standard
/// monomials all of whose quotients by a variable are standard. Emitted in
/// enumeration order (by total degree, then descending lexicographic).
std::vector<ExponentVector> initial_ideal(const GeneratorSet& g,
                                          const AperyTable& t);

/// The reduced Groebner basis of the toric ideal: one binomial per minimal
/// generator of the initial ideal, with the tail read off the table.
std::vector<Binomial> groebner_basis(const GeneratorSet& g,
                                     const AperyTable& t);

StaircaseReport staircase_report(const GeneratorSet& g, const AperyTable& t);

struct NormalFormResult {
    Int param_exp = 0;
    ExponentVector witness;

    bool operator==(const NormalFormResult&) const = default;
};

/// Normal form of x1^param_exp * rest modulo the toric ideal: the unique
/// x1^e * witness with the same weighted degree. Idempotent.
NormalFormResult normal_form(const GeneratorSet& g, const AperyTable& t,
                             Int param_exp, const ExponentVector& rest);

}  // namespace nsg
