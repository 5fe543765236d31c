"""Exact computations for low-degree functions on the slice.

Value sets are given as "{0,1,3}" strings or as iterables of numbers.
Polynomials use the text grammar, e.g. "3 - 2*x{1} + 1/2*x{1,2}".
Rational results come back as fractions.Fraction.
"""

from ._slicekit import (
    DomainError,
    GuardError,
    InputError,
    SlicekitError,
    analyze,
    build_table,
    compute_k,
    compute_kappa,
    compute_W,
    construct,
    decompose,
    extract_coefficients,
    find_witness,
    homogenize,
    longest_ap,
    slice_degree,
    transfer_matrix,
    truth_table,
    verify,
)

__all__ = [
    "DomainError",
    "GuardError",
    "InputError",
    "SlicekitError",
    "analyze",
    "build_table",
    "compute_k",
    "compute_kappa",
    "compute_W",
    "construct",
    "decompose",
    "extract_coefficients",
    "find_witness",
    "homogenize",
    "longest_ap",
    "slice_degree",
    "transfer_matrix",
    "truth_table",
    "verify",
]
