"""Arithmetic in Z[T]/(T^d - 1) and the mod-3 "special element" test.

An element is a fixed-length tuple of ``d`` integers. Products are cyclic
convolutions. :func:`reduce` collects the coefficients of a polynomial in
``t`` by exponent residue class, which is a ring homomorphism onto K_d.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .errors import CoefficientOverflow, InvalidModulus, ModulusMismatch
from .intpoly import INT64_MAX, INT64_MIN, IntPoly

ALL_EQUAL = "all-equal"
PAIRWISE_TWO = "pairwise-diff-sum-two"
NOT_SPECIAL = "not-special"


def _check(values: Sequence[int]) -> tuple[int, ...]:
    out = tuple(int(v) for v in values)
    for v in out:
        if v < INT64_MIN or v > INT64_MAX:
            raise CoefficientOverflow(f"coefficient {v} does not fit in a signed 64-bit integer")
    return out


@dataclass(frozen=True)
class CycloElement:
    d: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.d < 2:
            raise InvalidModulus(f"modulus must be >= 2, got {self.d}")
        coeffs = _check(self.coeffs)
        if len(coeffs) != self.d:
            raise ValueError(f"expected {self.d} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    def __add__(self, other: CycloElement) -> CycloElement:
        return cadd(self, other)

    def __sub__(self, other: CycloElement) -> CycloElement:
        return cadd(self, -other)

    def __neg__(self) -> CycloElement:
        return CycloElement(self.d, tuple(-c for c in self.coeffs))

    def __mul__(self, other) -> CycloElement:
        if isinstance(other, int):
            return CycloElement(self.d, tuple(other * c for c in self.coeffs))
        return cmul(self, other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_dict(self) -> dict:
        return {"d": self.d, "coeffs": list(self.coeffs)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str | dict) -> CycloElement:
        data = json.loads(text) if isinstance(text, str) else text
        return cls(int(data["d"]), tuple(data["coeffs"]))


def element(*coeffs: int) -> CycloElement:
    """Shorthand: ``element(1, 0, 1)`` is ``1 + T^2`` in K_3."""
    return CycloElement(len(coeffs), coeffs)


def zero(d: int) -> CycloElement:
    return CycloElement(d, (0,) * d)


def one(d: int) -> CycloElement:
    return CycloElement(d, (1,) + (0,) * (d - 1))


def power_of_T(k: int, d: int) -> CycloElement:
    c = [0] * d
    c[k % d] = 1
    return CycloElement(d, tuple(c))


def reduce(g: IntPoly, d: int) -> CycloElement:
    """Residue-class coefficient sums of ``g``: entry i sums a_h over h = i mod d."""
    if d < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {d}")
    sums = [0] * d
    for h, a in enumerate(g.coeffs):
        sums[h % d] += a
    return CycloElement(d, tuple(sums))


def cadd(x: CycloElement, y: CycloElement) -> CycloElement:
    if x.d != y.d:
        raise ModulusMismatch(f"cannot add elements of K_{x.d} and K_{y.d}")
    return CycloElement(x.d, tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))


def cmul(x: CycloElement, y: CycloElement) -> CycloElement:
    if x.d != y.d:
        raise ModulusMismatch(f"cannot multiply elements of K_{x.d} and K_{y.d}")
    d = x.d
    out = [0] * d
    for i, a in enumerate(x.coeffs):
        if a:
            for j, b in enumerate(y.coeffs):
                out[(i + j) % d] += a * b
    return CycloElement(d, tuple(out))


PHI3 = CycloElement(3, (1, 1, 1))
T_MINUS_ONE = CycloElement(3, (-1, 1, 0))

# 0 and +-T^k (T - 1) for k = 0, 1, 2, already reduced mod T^3 - 1
M_SET = frozenset(
    {
        (0, 0, 0),
        (-1, 1, 0),
        (1, -1, 0),
        (0, -1, 1),
        (0, 1, -1),
        (1, 0, -1),
        (-1, 0, 1),
    }
)


@dataclass(frozen=True)
class SpecialVerdict:
    is_special: bool
    reason: str

    def __bool__(self) -> bool:
        return self.is_special


def is_special(x: CycloElement) -> SpecialVerdict:
    if x.d != 3:
        raise InvalidModulus(f"special elements are defined only in K_3, got K_{x.d}")
    a, b, c = x.coeffs
    if a == b == c:
        return SpecialVerdict(True, ALL_EQUAL)
    if abs(a - b) + abs(a - c) + abs(b - c) == 2:
        return SpecialVerdict(True, PAIRWISE_TWO)
    return SpecialVerdict(False, NOT_SPECIAL)


def in_M(x: CycloElement) -> bool:
    if x.d != 3:
        raise InvalidModulus(f"M[T] lives in K_3, got K_{x.d}")
    return x.coeffs in M_SET


def in_M_after_shift(x: CycloElement) -> bool:
    """Whether ``x * (T - 1)`` is one of the seven elements of M[T]."""
    if x.d != 3:
        raise InvalidModulus(f"M[T] lives in K_3, got K_{x.d}")
    return cmul(x, T_MINUS_ONE).coeffs in M_SET
