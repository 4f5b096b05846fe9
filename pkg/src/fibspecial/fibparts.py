"""Partitions of n into distinct Fibonacci numbers, counted by number of parts.

Fibonacci numbers here are f_1 = 1, f_2 = 2, f_i = f_{i-1} + f_{i-2}, so the
value 1 occurs once. ``phi(n)`` is the polynomial whose coefficient of t^h
is the number of partitions of n into h distinct parts from that sequence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import cyclo
from .errors import CoefficientOverflow, InvalidModulus, InvalidWindow, OutOfRange
from .intpoly import INT64_MAX, IntPoly

BRUTE_FORCE_CAP = 2000

Window = Optional[tuple[int, int]]


def fib(i: int) -> int:
    """f_i with f_1 = 1, f_2 = 2. Index 0 is rejected (no duplicate 1)."""
    if i < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {i}")
    a, b = 1, 2
    for _ in range(i - 1):
        a, b = b, a + b
    return a


def fibs_upto(limit: int) -> list[int]:
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    out = []
    a, b = 1, 2
    while a <= limit:
        out.append(a)
        a, b = b, a + b
    return out


def window_parts(a: int, b: int) -> list[int]:
    if not 1 <= a <= b:
        raise InvalidWindow(f"window needs 1 <= a <= b, got ({a}, {b})")
    return [fib(i) for i in range(a, b + 1)]


def _phi_from_parts(n: int, parts: list[int]) -> IntPoly:
    # Largest part first; state maps remaining sum -> counts by number of parts.
    parts = sorted((p for p in parts if p <= n), reverse=True)
    suffix = [0] * (len(parts) + 1)
    for i in range(len(parts) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + parts[i]
    states: dict[int, list[int]] = {n: [1]}
    for i, p in enumerate(parts):
        rest = suffix[i + 1]
        nxt: dict[int, list[int]] = {}
        for rem, counts in states.items():
            if rem <= rest:
                _merge(nxt, rem, counts, 0)
            if p <= rem and rem - p <= rest:
                _merge(nxt, rem - p, counts, 1)
        states = nxt
    return IntPoly(states.get(0, []))


def _merge(table: dict[int, list[int]], key: int, counts: list[int], offset: int) -> None:
    cur = table.setdefault(key, [])
    need = len(counts) + offset
    if len(cur) < need:
        cur.extend([0] * (need - len(cur)))
    for h, c in enumerate(counts):
        cur[h + offset] += c


def phi(n: int) -> IntPoly:
    """Generating polynomial of Fibonacci partitions of n by number of parts."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _phi_from_parts(n, fibs_upto(n))


def phi_window(n: int, a: int, b: int) -> IntPoly:
    """As :func:`phi`, restricted to parts f_a, ..., f_b."""
    parts = window_parts(a, b)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return _phi_from_parts(n, parts)


def phi_brute(n: int, cap: int = BRUTE_FORCE_CAP) -> IntPoly:
    """Reference :func:`phi` by explicit backtracking over subsets."""
    if not 1 <= n <= cap:
        raise OutOfRange(f"phi_brute needs 1 <= n <= {cap}, got {n}")
    parts = fibs_upto(n)
    counts = [0] * (len(parts) + 1)
    prefix = [0]
    for p in parts:
        prefix.append(prefix[-1] + p)

    def walk(i: int, remaining: int, used: int) -> None:
        if remaining == 0:
            counts[used] += 1
            return
        if i < 0 or prefix[i + 1] < remaining:
            return
        if parts[i] <= remaining:
            walk(i - 1, remaining - parts[i], used + 1)
        walk(i - 1, remaining, used)

    walk(len(parts) - 1, n, 0)
    return IntPoly(counts)


def _check_headroom(table: np.ndarray) -> None:
    if table.size and int(table.max()) > INT64_MAX // 2:
        raise CoefficientOverflow("partition counts approach the 64-bit limit")


def phi_table(N: int, parts: list[int] | None = None) -> np.ndarray:
    """Coefficients of phi(n) for every n <= N in one pass.

    Row n, column h of the returned ``(N + 1, H)`` int64 array is the number
    of partitions of n into h distinct parts. Row 0 is the empty partition.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    if parts is None:
        parts = fibs_upto(N) if N >= 1 else []
    parts = [p for p in parts if p <= N]
    table = np.zeros((N + 1, len(parts) + 1), dtype=np.int64)
    table[0, 0] = 1
    for p in parts:
        _check_headroom(table)
        table[p:, 1:] += table[:-p, :-1]
    return table


def residue_table(N: int, d: int, parts: list[int] | None = None) -> np.ndarray:
    """r_{d,i}(n) for all n <= N without materializing full polynomials.

    Works directly with length-d residue tuples; row n is (r_{d,0}(n), ..., r_{d,d-1}(n)).
    """
    if d < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {d}")
    if parts is None:
        parts = fibs_upto(N) if N >= 1 else []
    parts = [p for p in parts if p <= N]
    table = np.zeros((N + 1, d), dtype=np.int64)
    table[0, 0] = 1
    for p in parts:
        _check_headroom(table)
        table[p:] += np.roll(table[:-p], 1, axis=1)
    return table


def row_poly(table: np.ndarray, n: int) -> IntPoly:
    return IntPoly(table[n])


@dataclass(frozen=True)
class PartitionStats:
    n: int
    d: int
    window: Window
    counts: tuple[int, ...]
    total: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        object.__setattr__(self, "total", sum(self.counts))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "window": list(self.window) if self.window else None,
            "counts": list(self.counts),
            "total": self.total,
        }

    def csv_row(self) -> list:
        a, b = self.window if self.window else ("", "")
        return [self.n, self.d, a, b, *self.counts, self.total]

    @staticmethod
    def csv_header(d: int) -> list[str]:
        return ["n", "d", "a", "b", *[f"r{i}" for i in range(d)], "total"]


def r_counts(n: int, d: int, window: Window = None) -> PartitionStats:
    if d < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {d}")
    g = phi(n) if window is None else phi_window(n, *window)
    return PartitionStats(n, d, tuple(window) if window else None, cyclo.reduce(g, d).coeffs)


@dataclass(frozen=True)
class ShallitRecord:
    spread_ok: bool
    product_zero: bool
    counts: tuple[int, int, int]


def spread_and_product(counts: tuple[int, int, int]) -> tuple[bool, bool]:
    r0, r1, r2 = counts
    spread_ok = max(abs(r0 - r1), abs(r0 - r2), abs(r1 - r2)) <= 1
    product_zero = (r0 - r1) * (r0 - r2) * (r1 - r2) == 0
    return spread_ok, product_zero


def shallit_check(n: int) -> ShallitRecord:
    counts = r_counts(n, 3).counts
    return ShallitRecord(*spread_and_product(counts), counts)
