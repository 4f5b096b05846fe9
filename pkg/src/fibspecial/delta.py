"""Tridiagonal determinant polynomials Delta(A; t) and their mod-3 images.

``Delta(A)`` for ``A = (a_1, ..., a_m)`` is the determinant of the m x m
matrix with diagonal ``t + ... + t^{a_i}``, superdiagonal ``t^{a_{i+1}+1}``
and subdiagonal 1. It satisfies the three-term recurrence

    Delta(a_1..a_m) = Delta(a_1..a_{m-1}) * Delta(a_m)
                      - Delta(a_1..a_{m-2}) * t^{a_m + 1}

with ``Delta(()) = 1``. The helpers here evaluate it, cross-check it with a
Laplace expansion, and expose the mod-3 image ``S(A) = R(Delta(A)) * (T - 1)``.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from . import cyclo
from .cyclo import CycloElement, T_MINUS_ONE, PHI3
from .errors import DomainError, LemmaViolation, OutOfRange
from .intpoly import IntPoly, mul, ones_run, shift

DeltaVector = tuple[int, ...]

ONE = IntPoly([1])
_T = cyclo.power_of_T(1, 3)
_T_PLUS_ONE = CycloElement(3, (1, 1, 0))

DET_MAX_M = 8


def as_vector(A: Iterable[int]) -> DeltaVector:
    vec = tuple(int(a) for a in A)
    if any(a < 0 for a in vec):
        raise DomainError(f"Delta-vector entries must be nonnegative: {vec}")
    return vec


def parse_vector(text: str) -> DeltaVector:
    """``"2,1,0,2"`` -> ``(2, 1, 0, 2)``; the empty string is the empty vector."""
    text = text.strip()
    if not text:
        return ()
    try:
        vec = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise DomainError(f"malformed Delta-vector {text!r}; expected comma-separated integers") from None
    return as_vector(vec)


def delta(A: Sequence[int]) -> IntPoly:
    A = as_vector(A)
    prev, cur = None, ONE  # Delta of prefixes of length k-2 and k-1
    for k, a in enumerate(A):
        nxt = mul(cur, ones_run(a))
        if k >= 1:
            nxt = nxt - shift(prev, a + 1)
        prev, cur = cur, nxt
    return cur


def _det(matrix: list[list[IntPoly | None]]) -> IntPoly:
    # Laplace expansion along the first row; None marks a structural zero
    n = len(matrix)
    if n == 1:
        return matrix[0][0] if matrix[0][0] is not None else IntPoly()
    total = IntPoly()
    for j, entry in enumerate(matrix[0]):
        if entry is None or entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = mul(entry, _det(minor))
        total = total - term if j % 2 else total + term
    return total


def delta_det(A: Sequence[int]) -> IntPoly:
    """Delta(A) as an explicit determinant; an independent check on :func:`delta`."""
    A = as_vector(A)
    m = len(A)
    if not 1 <= m <= DET_MAX_M:
        raise OutOfRange(f"delta_det needs 1 <= m <= {DET_MAX_M}, got m={m}")
    matrix: list[list[IntPoly | None]] = [[None] * m for _ in range(m)]
    for i, a in enumerate(A):
        matrix[i][i] = ones_run(a)
        if i + 1 < m:
            matrix[i][i + 1] = shift(ONE, A[i + 1] + 1)
            matrix[i + 1][i] = ONE
    return _det(matrix)


def epsilon(A: Sequence[int]) -> DeltaVector:
    return tuple(a % 3 for a in as_vector(A))


def k_multiplier(A: Sequence[int]) -> int:
    """The integer k with R(Delta(A)) = R(Delta(eps(A))) + k * (1 + T + T^2).

    Raises :class:`LemmaViolation` if the difference is not such a multiple.
    """
    A = as_vector(A)
    diff = cyclo.reduce(delta(A), 3) - cyclo.reduce(delta(epsilon(A)), 3)
    a, b, c = diff.coeffs
    if not a == b == c:
        raise LemmaViolation(A, diff.coeffs)
    return a


def s_element(A: Sequence[int]) -> CycloElement:
    """S(A) = R(Delta(A)) * (T - 1) in K_3. S(()) is T - 1."""
    return cyclo.cmul(cyclo.reduce(delta(A), 3), T_MINUS_ONE)


def s_via_recurrence(A: Sequence[int]) -> CycloElement:
    """S(A) from S(()) and S((a_1,)) by the three-case recurrence on the last entry.

    Only defined for entries in {0, 1, 2}.
    """
    A = as_vector(A)
    if not A:
        raise DomainError("s_via_recurrence needs m >= 1")
    if any(a > 2 for a in A):
        raise DomainError(f"s_via_recurrence needs entries in {{0,1,2}}, got {A}")
    prev, cur = s_element(()), s_element(A[:1])
    for a in A[1:]:
        if a == 0:
            nxt = -(prev * _T)
        elif a == 1:
            nxt = cur * _T + prev * _T_PLUS_ONE
        else:
            nxt = -cur - prev
        prev, cur = cur, nxt
    return cur


def is_3special_poly(g: IntPoly) -> bool:
    return cyclo.is_special(cyclo.reduce(g, 3)).is_special


__all__ = [
    "DeltaVector",
    "PHI3",
    "as_vector",
    "parse_vector",
    "delta",
    "delta_det",
    "epsilon",
    "k_multiplier",
    "s_element",
    "s_via_recurrence",
    "is_3special_poly",
]
