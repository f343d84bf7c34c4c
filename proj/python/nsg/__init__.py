"""Exact computations in numerical semigroups.

The heavy lifting lives in the compiled extension ``nsg._core``; this module
adds list-friendly wrappers for the common one-shot queries.
"""

from ._core import (
    AperyTable,
    Binomial,
    CheckResult,
    Euclid3Table,
    Gb3Result,
    GeneratorSet,
    HilbertSeries,
    MembershipCertificate,
    StaircaseReport,
    VerificationReport,
    apery_shortest_path,
    compare,
    compute_apery,
    count_level,
    frobenius2,
    gb3,
    groebner_basis,
    hilbert_series,
    initial_ideal,
    is_member,
    level_vectors,
    member_dp,
    module_decomposition,
    monomial_string,
    normal_form,
    normalize,
    sequences3,
    standard_monomials,
    verify_groebner,
    weighted_degree,
)
from ._core import frobenius as _frobenius_table

__all__ = [
    "AperyTable",
    "Binomial",
    "CheckResult",
    "Euclid3Table",
    "Gb3Result",
    "GeneratorSet",
    "HilbertSeries",
    "MembershipCertificate",
    "StaircaseReport",
    "VerificationReport",
    "apery",
    "apery_shortest_path",
    "compare",
    "compute_apery",
    "count_level",
    "frobenius",
    "frobenius2",
    "gb3",
    "groebner",
    "groebner_basis",
    "hilbert_series",
    "initial_ideal",
    "is_member",
    "level_vectors",
    "member",
    "member_dp",
    "module_decomposition",
    "monomial_string",
    "normal_form",
    "normalize",
    "sequences3",
    "standard_monomials",
    "verify_groebner",
    "weighted_degree",
]


def _setup(generators, param_index=0, threads=1):
    g = normalize(list(generators), param_index)
    return g, compute_apery(g, threads)


def frobenius(generators, param_index=0, threads=1):
    """Frobenius number of the semigroup generated by ``generators``."""
    _, table = _setup(generators, param_index, threads)
    return _frobenius_table(table)


def apery(generators, param_index=0, threads=1):
    """Apery values (original scale) indexed by residue class."""
    _, table = _setup(generators, param_index, threads)
    return table.scaled_values


def member(generators, b, param_index=0, threads=1):
    """Membership certificate for ``b``."""
    g, table = _setup(generators, param_index, threads)
    return is_member(table, g, b)


def groebner(generators, param_index=0, threads=1):
    """Reduced Groebner basis of the toric ideal."""
    g, table = _setup(generators, param_index, threads)
    return groebner_basis(g, table)
