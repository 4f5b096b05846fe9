"""Expansions of products of (1 - x^{f_i}) over Fibonacci numbers.

Coefficients that leave {-1, 0, 1} are reported as data (see
:meth:`SeriesCoeffs.violations`), never asserted away.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CoefficientOverflow
from .fibparts import fibs_upto, window_parts
from .intpoly import INT64_MAX


@dataclass(frozen=True)
class SeriesCoeffs:
    upto: int
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs.setflags(write=False)

    def __getitem__(self, n: int) -> int:
        return int(self.coeffs[n])

    def __len__(self) -> int:
        return self.coeffs.size

    def tolist(self) -> list[int]:
        return [int(c) for c in self.coeffs]

    def max_abs(self) -> int:
        return int(np.abs(self.coeffs).max()) if self.coeffs.size else 0

    def violations(self, bound: int = 1) -> list[tuple[int, int]]:
        """``(n, coefficient)`` for every coefficient with absolute value above ``bound``."""
        idx = np.flatnonzero(np.abs(self.coeffs) > bound)
        return [(int(i), int(self.coeffs[i])) for i in idx]


def _expand(parts: list[int], upto: int) -> np.ndarray:
    c = np.zeros(upto + 1, dtype=np.int64)
    c[0] = 1
    for f in sorted(parts):
        if f > upto:
            break
        if int(np.abs(c).max()) > INT64_MAX // 2:
            raise CoefficientOverflow(f"coefficients approach 64 bits before factor 1 - x^{f}")
        # two-term factor: c(x) * (1 - x^f)
        c[f:] -= c[:-f]
    return c


def chi_series(N: int) -> SeriesCoeffs:
    """Coefficients of prod_i (1 - x^{f_i}) through degree N.

    Factors with f_i > N do not touch degrees <= N, so this equals the
    truncation of the infinite product.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return SeriesCoeffs(N, _expand(fibs_upto(N), N))


def chi_window(a: int, b: int) -> SeriesCoeffs:
    """The finite product over f_a, ..., f_b, untruncated."""
    parts = window_parts(a, b)
    top = sum(parts)
    return SeriesCoeffs(top, _expand(parts, top))
