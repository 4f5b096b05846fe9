"""Exact tools for Fibonacci partitions and tridiagonal Delta polynomials.

The submodules build on each other:

* :mod:`.intpoly` - dense integer polynomials in t with checked int64 coefficients
* :mod:`.cyclo` - the rings Z[T]/(T^d - 1), residue-class reduction, special elements
* :mod:`.delta` - Delta(A;t), its determinant oracle, S(A) and the 3-special test
* :mod:`.fibparts` - Fibonacci partitions, Phi(n;t) and the counts r_{d,i}(n)
* :mod:`.series` - expansions of prod (1 - x^{f_i})
* :mod:`.harness` - verification sweeps and conjecture exploration
"""
from .cyclo import CycloElement, SpecialVerdict, cadd, cmul, in_M_after_shift, is_special, reduce
from .delta import (
    delta,
    delta_det,
    epsilon,
    is_3special_poly,
    k_multiplier,
    s_element,
    s_via_recurrence,
)
from .errors import (
    CoefficientOverflow,
    DomainError,
    FibSpecialError,
    InvalidModulus,
    InvalidWindow,
    LemmaViolation,
    ModulusMismatch,
    OutOfRange,
)
from .fibparts import PartitionStats, fibs_upto, phi, phi_brute, phi_window, r_counts, shallit_check
from .intpoly import IntPoly, add, mul, norm, shift
from .series import SeriesCoeffs, chi_series, chi_window

__version__ = "0.1.0"
