"""Dense integer polynomials in ``t`` with checked 64-bit coefficients.

Coefficients live in a read-only ``numpy.int64`` array, index = exponent,
with trailing zeros stripped (the zero polynomial is the empty array).
Every operation either proves up front that no coefficient can leave the
int64 range and runs in native arithmetic, or recomputes with Python ints
and raises :class:`CoefficientOverflow` if the exact result does not fit.
Nothing ever wraps silently.
"""
from __future__ import annotations

import json
import re
from typing import Iterable, Sequence

import numpy as np

from .errors import CoefficientOverflow

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

__all__ = [
    "IntPoly",
    "add",
    "mul",
    "shift",
    "norm",
    "monomial",
    "ones_run",
    "from_text",
    "from_json",
]


def _bound(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return max(int(arr.max()), -int(arr.min()))


def _fit(values) -> np.ndarray:
    """Convert exact Python ints to a trimmed int64 array, or raise."""
    values = [int(v) for v in values]
    for v in values:
        if v < INT64_MIN or v > INT64_MAX:
            raise CoefficientOverflow(f"coefficient {v} does not fit in a signed 64-bit integer")
    return _trim(np.array(values, dtype=np.int64))


def _trim(arr: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(arr)
    if nz.size == 0:
        return np.zeros(0, dtype=np.int64)
    return arr[: nz[-1] + 1]


class IntPoly:
    """Immutable polynomial with integer coefficients.

    ``IntPoly([0, 1, 1])`` is ``t + t^2``. Supports ``+``, ``-``, ``*`` and
    equality; instances are hashable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] | np.ndarray = ()):
        if isinstance(coeffs, np.ndarray) and coeffs.dtype == np.int64:
            arr = _trim(coeffs.copy())
        else:
            arr = _fit(coeffs)
        arr.setflags(write=False)
        self._c = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> IntPoly:
        # arr must already be a trimmed int64 array owned by the caller
        obj = cls.__new__(cls)
        arr.setflags(write=False)
        obj._c = arr
        return obj

    @property
    def array(self) -> np.ndarray:
        """Read-only int64 view of the coefficients."""
        return self._c

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(v) for v in self._c)

    def is_zero(self) -> bool:
        return self._c.size == 0

    @property
    def degree(self) -> int:
        if self.is_zero():
            raise ValueError("the zero polynomial has no degree")
        return self._c.size - 1

    def __getitem__(self, h: int) -> int:
        if h < 0:
            raise IndexError("negative exponent")
        return int(self._c[h]) if h < self._c.size else 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPoly):
            return NotImplemented
        return np.array_equal(self._c, other._c)

    def __hash__(self) -> int:
        return hash(self._c.tobytes())

    def __add__(self, other: IntPoly) -> IntPoly:
        return add(self, other)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return add(self, -other)

    def __neg__(self) -> IntPoly:
        if self._c.size and int(self._c.min()) == INT64_MIN:
            raise CoefficientOverflow("negating -2**63")
        return IntPoly._wrap(-self._c)

    def __mul__(self, other: IntPoly) -> IntPoly:
        return mul(self, other)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Render as ``c0 + c1*t + c2*t^2 ...`` with zero terms omitted."""
        if self.is_zero():
            return "0"
        out = []
        for h, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if h == 0:
                body = str(mag)
            else:
                var = "t" if h == 1 else f"t^{h}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not out:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f"{sign} {body}")
        return " ".join(out)

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs))


def add(g: IntPoly, h: IntPoly) -> IntPoly:
    a, b = g.array, h.array
    if a.size < b.size:
        a, b = b, a
    if _bound(a) + _bound(b) <= INT64_MAX:
        out = a.copy()
        out[: b.size] += b
        return IntPoly._wrap(_trim(out))
    vals = [int(x) for x in a]
    for i, x in enumerate(b):
        vals[i] += int(x)
    return IntPoly._wrap(_fit(vals))


def mul(g: IntPoly, h: IntPoly) -> IntPoly:
    a, b = g.array, h.array
    if a.size == 0 or b.size == 0:
        return IntPoly()
    if _bound(a) * _bound(b) * min(a.size, b.size) <= INT64_MAX:
        return IntPoly._wrap(_trim(np.convolve(a, b)))
    exact = np.convolve(a.astype(object), b.astype(object))
    return IntPoly._wrap(_fit(exact))


def shift(g: IntPoly, k: int) -> IntPoly:
    """Multiply by ``t**k``."""
    if k < 0:
        raise ValueError("shift amount must be nonnegative")
    if g.is_zero() or k == 0:
        return g
    return IntPoly._wrap(np.concatenate([np.zeros(k, dtype=np.int64), g.array]))


def norm(g: IntPoly) -> int:
    """Sum of coefficients, i.e. the value at ``t = 1``."""
    total = sum(g.coeffs)
    if total < INT64_MIN or total > INT64_MAX:
        raise CoefficientOverflow(f"coefficient sum {total} does not fit in 64 bits")
    return total


def monomial(k: int, c: int = 1) -> IntPoly:
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    return IntPoly([0] * k + [c])


def ones_run(a: int) -> IntPoly:
    """``t + t^2 + ... + t^a`` (zero for ``a == 0``)."""
    if a < 0:
        raise ValueError("a must be nonnegative")
    arr = np.ones(a + 1, dtype=np.int64)
    arr[0] = 0
    return IntPoly._wrap(_trim(arr))


_TERM = re.compile(r"^(?:(\d+)\*)?t(?:\^(\d+))?$|^(\d+)$")


def from_text(text: str) -> IntPoly:
    """Parse the output of :meth:`IntPoly.to_text` (also tolerates ``1*t^1``)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return IntPoly()
    # split into signed terms
    s = re.sub(r"\s+", "", s)
    if s[0] not in "+-":
        s = "+" + s
    pieces = re.findall(r"([+-])([^+-]+)", s)
    if "".join(sign + body for sign, body in pieces) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    acc: dict[int, int] = {}
    for sign, body in pieces:
        m = _TERM.match(body)
        if not m:
            raise ValueError(f"cannot parse term {body!r} in {text!r}")
        if m.group(3) is not None:
            exp, coef = 0, int(m.group(3))
        else:
            coef = int(m.group(1)) if m.group(1) else 1
            exp = int(m.group(2)) if m.group(2) else 1
        acc[exp] = acc.get(exp, 0) + (-coef if sign == "-" else coef)
    top = max(acc)
    return IntPoly([acc.get(h, 0) for h in range(top + 1)])


def from_json(text: str | Sequence[int]) -> IntPoly:
    """Accept a JSON array string (or an already-decoded list)."""
    data = json.loads(text) if isinstance(text, str) else text
    if not isinstance(data, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in data):
        raise ValueError("polynomial JSON must be an array of integers")
    return IntPoly(data)
