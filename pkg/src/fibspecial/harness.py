"""Sweeps that check the theorems and probe the conjectures over finite ranges.

Every suite returns a :class:`VerificationReport`. A violation is data: it
is counted and (up to ``witness_cap``) recorded with enough inputs to replay
it. Suites split their input into ordered chunks; with ``workers > 1`` the
chunks run in a process pool and are merged in chunk order, so the report
does not depend on the worker count.
"""
from __future__ import annotations

import itertools
import json
import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from . import cyclo
from .cyclo import T_MINUS_ONE
from .delta import delta, delta_det, is_3special_poly, k_multiplier, s_element, s_via_recurrence
from .errors import LemmaViolation
from .fibparts import (
    phi,
    phi_brute,
    phi_table,
    residue_table,
    spread_and_product,
    window_parts,
)
from .intpoly import IntPoly
from .series import chi_series, chi_window

DEFAULT_WITNESS_CAP = 100
DEFAULT_SEED = 0
VANDERMONDE_DET_MAX_D = 6


@dataclass
class VerificationReport:
    suite: str
    params: dict
    seed: int | None
    cases_checked: int
    violations: int
    witnesses: list[dict]
    duration_ms: float | None
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "seed": self.seed,
            "cases_checked": self.cases_checked,
            "violations": self.violations,
            "witnesses": self.witnesses,
            "duration_ms": round(self.duration_ms, 3) if timing and self.duration_ms is not None else None,
            "extra": self.extra,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2)


@dataclass
class _Partial:
    cases: int = 0
    violations: int = 0
    witnesses: list[dict] = field(default_factory=list)
    tally: Counter = field(default_factory=Counter)

    def flag(self, record: dict, cap: int) -> None:
        self.violations += 1
        if len(self.witnesses) < cap:
            self.witnesses.append(record)


def _run(fn: Callable[[Any], _Partial], chunks: Sequence, workers: int | None) -> _Partial:
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(chunks) <= 1:
        parts = [fn(c) for c in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(fn, chunks))
    merged = _Partial()
    for p in parts:
        merged.cases += p.cases
        merged.violations += p.violations
        merged.witnesses.extend(p.witnesses)
        merged.tally.update(p.tally)
    return merged


def _report(suite, params, seed, merged: _Partial, cap: int, started: float, extra: dict) -> VerificationReport:
    return VerificationReport(
        suite=suite,
        params=params,
        seed=seed,
        cases_checked=merged.cases,
        violations=merged.violations,
        witnesses=merged.witnesses[:cap],
        duration_ms=(time.perf_counter() - started) * 1000.0,
        extra=extra,
    )


def _tally(counter: Counter) -> dict:
    return {str(k): counter[k] for k in sorted(counter, key=lambda k: (str(type(k)), k))}


def random_vectors(trials: int, max_m: int, entry_bound: int, seed: int) -> list[tuple[int, ...]]:
    """Lengths uniform in [1, max_m], entries uniform in [0, entry_bound]."""
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        m = rng.randint(1, max_m)
        out.append(tuple(rng.randint(0, entry_bound) for _ in range(m)))
    return out


def _chunked(seq: Sequence, size: int) -> list:
    return [seq[i : i + size] for i in range(0, len(seq), size)]


# -- Theorem 1 ---------------------------------------------------------------


def _theorem1_case(A, part: _Partial, cap: int) -> None:
    image = cyclo.reduce(delta(A), 3)
    verdict = cyclo.is_special(image)
    s = cyclo.cmul(image, T_MINUS_ONE)
    member = cyclo.in_M(s)
    part.cases += 1
    part.tally[verdict.reason] += 1
    if not (verdict.is_special and member):
        part.flag(
            {"A": list(A), "image": list(image.coeffs), "s": list(s.coeffs),
             "special": verdict.is_special, "in_M": member},
            cap,
        )


def _theorem1_exhaustive_chunk(args) -> _Partial:
    m, first, cap = args
    part = _Partial()
    for rest in itertools.product(range(3), repeat=m - 1):
        _theorem1_case((first, *rest), part, cap)
    return part


def _theorem1_list_chunk(args) -> _Partial:
    vectors, cap = args
    part = _Partial()
    for A in vectors:
        _theorem1_case(A, part, cap)
    return part


def verify_theorem1(
    max_m: int,
    mode: str = "exhaustive",
    *,
    entry_bound: int = 30,
    trials: int = 10_000,
    seed: int = DEFAULT_SEED,
    workers: int | None = 1,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> VerificationReport:
    """Delta(A) is 3-special and S(A) lies in M[T] for every generated A."""
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    started = time.perf_counter()
    if mode == "exhaustive":
        chunks = [(m, first, witness_cap) for m in range(1, max_m + 1) for first in range(3)]
        merged = _run(_theorem1_exhaustive_chunk, chunks, workers)
        params, used_seed = {"max_m": max_m, "mode": mode}, None
    elif mode == "random":
        vectors = random_vectors(trials, max_m, entry_bound, seed)
        chunks = [(c, witness_cap) for c in _chunked(vectors, 1000)]
        merged = _run(_theorem1_list_chunk, chunks, workers)
        params = {"max_m": max_m, "mode": mode, "entry_bound": entry_bound, "trials": trials}
        used_seed = seed
    else:
        raise ValueError(f"unknown mode {mode!r}; expected 'exhaustive' or 'random'")
    return _report("theorem1", params, used_seed, merged, witness_cap, started,
                   {"verdict_reasons": _tally(merged.tally)})


# -- Lemma on mod-3 reduction of entries ------------------------------------


def _lemma4_chunk(args) -> _Partial:
    vectors, cap = args
    part = _Partial()
    for A in vectors:
        part.cases += 1
        try:
            part.tally[k_multiplier(A)] += 1
        except LemmaViolation as exc:
            part.flag({"A": list(A), "difference": list(exc.difference)}, cap)
    return part


def verify_lemma4(
    trials: int = 10_000,
    max_m: int = 8,
    entry_bound: int = 30,
    *,
    seed: int = DEFAULT_SEED,
    workers: int | None = 1,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> VerificationReport:
    """k_multiplier succeeds on random vectors; single entries compared to both closed forms."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    started = time.perf_counter()
    vectors = random_vectors(trials, max_m, entry_bound, seed)
    merged = _run(_lemma4_chunk, [(c, witness_cap) for c in _chunked(vectors, 1000)], workers)

    single = []
    floor_hits = one_plus_hits = 0
    for a in range(1, entry_bound + 1):
        k = k_multiplier((a,))
        floor_hits += k == a // 3
        one_plus_hits += k == 1 + a // 3
        single.append({"a": a, "k": k, "floor_a_div_3": a // 3, "one_plus_floor_a_div_3": 1 + a // 3})
    extra = {
        "k_summary": {
            "min": min(merged.tally) if merged.tally else None,
            "max": max(merged.tally) if merged.tally else None,
            "distinct": len(merged.tally),
            "zero": merged.tally[0],
        },
        "single_entry": single,
        "single_entry_matches": {"floor_a_div_3": floor_hits, "one_plus_floor_a_div_3": one_plus_hits},
    }
    params = {"trials": trials, "max_m": max_m, "entry_bound": entry_bound}
    return _report("lemma4", params, seed, merged, witness_cap, started, extra)


# -- Theorem 2 ---------------------------------------------------------------


def _theorem2_chunk(args) -> _Partial:
    lo, hi, cap = args
    table = phi_table(hi)
    part = _Partial()
    for n in range(lo, hi + 1):
        g = IntPoly(table[n])
        counts = cyclo.reduce(g, 3).coeffs
        special = is_3special_poly(g)
        spread_ok, product_zero = spread_and_product(counts)
        part.cases += 1
        part.tally[cyclo.is_special(cyclo.reduce(g, 3)).reason] += 1
        if not (special and spread_ok and product_zero):
            part.flag({"n": n, "counts": list(counts), "special": special,
                       "spread_ok": spread_ok, "product_zero": product_zero}, cap)
    return part


def verify_theorem2(
    n_lo: int,
    n_hi: int,
    *,
    workers: int | None = 1,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    chunk_size: int = 25_000,
) -> VerificationReport:
    """Phi(n;t) is 3-special, spread <= 1 and triple product 0, for n in [n_lo, n_hi]."""
    if not 1 <= n_lo <= n_hi:
        raise ValueError("need 1 <= n_lo <= n_hi")
    started = time.perf_counter()
    chunks = [(lo, min(lo + chunk_size - 1, n_hi), witness_cap) for lo in range(n_lo, n_hi + 1, chunk_size)]
    merged = _run(_theorem2_chunk, chunks, workers)
    return _report("theorem2", {"n_lo": n_lo, "n_hi": n_hi}, None, merged, witness_cap, started,
                   {"verdict_reasons": _tally(merged.tally)})


# -- Hypothesis 1: windowed parts, d = 3 -------------------------------------


def _hypothesis1_chunk(args) -> _Partial:
    windows, cap = args
    part = _Partial()
    for a, b in windows:
        parts = window_parts(a, b)
        top = sum(parts)
        table = residue_table(top, 3, parts)[1:]
        r0, r1, r2 = table[:, 0], table[:, 1], table[:, 2]
        spread = np.maximum(np.maximum(abs(r0 - r1), abs(r0 - r2)), abs(r1 - r2))
        product = (r0 - r1) * (r0 - r2) * (r1 - r2)
        part.cases += top
        bad = np.flatnonzero((spread > 1) | (product != 0))
        if bad.size:
            part.tally[(a, b)] += int(bad.size)
        for idx in bad:
            part.flag({"a": a, "b": b, "n": int(idx) + 1, "counts": [int(v) for v in table[idx]]}, cap)
    return part


def verify_hypothesis1(
    a_max: int,
    b_max: int,
    *,
    workers: int | None = 1,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> VerificationReport:
    """Windowed spread <= 1 and triple product 0 over all windows a <= a_max, a <= b <= b_max."""
    if not 1 <= a_max <= b_max:
        raise ValueError("need 1 <= a_max <= b_max")
    started = time.perf_counter()
    windows = [(a, b) for a in range(1, a_max + 1) for b in range(a, b_max + 1)]
    merged = _run(_hypothesis1_chunk, [(c, witness_cap) for c in _chunked(windows, 8)], workers)
    extra = {
        "windows": len(windows),
        "violations_by_window": {f"{a}:{b}": merged.tally[(a, b)] for a, b in sorted(merged.tally)},
    }
    return _report("hypothesis1", {"a_max": a_max, "b_max": b_max}, None, merged, witness_cap, started, extra)


# -- Hypothesis 2: spread growth for d >= 4 ---------------------------------


@dataclass(frozen=True)
class SpreadRecord:
    d: int
    n_max: int
    spread: int
    n_star: int
    i: int
    j: int

    def to_dict(self) -> dict:
        return asdict(self)

    CSV_HEADER = ("d", "n_max", "spread", "n_star", "i", "j")

    def csv_row(self) -> tuple:
        return (self.d, self.n_max, self.spread, self.n_star, self.i, self.j)


def _spread_from_table(table: np.ndarray, d: int, n_max: int) -> SpreadRecord:
    rows = table[1 : n_max + 1]
    spreads = rows.max(axis=1) - rows.min(axis=1)
    k = int(np.argmax(spreads))  # first occurrence -> smallest witness n
    row = rows[k]
    return SpreadRecord(d, n_max, int(spreads[k]), k + 1, int(np.argmax(row)), int(np.argmin(row)))


def explore_hypothesis2(d: int, n_max: int) -> SpreadRecord:
    """Largest |r_{d,i}(n) - r_{d,j}(n)| over 1 <= n <= n_max, with its smallest witness."""
    if d < 4:
        raise ValueError(f"the unbounded-spread question concerns d >= 4, got d={d}")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return _spread_from_table(residue_table(n_max, d), d, n_max)


def spread_curve(d: int, n_max: int) -> list[SpreadRecord]:
    """Max spread at n_max = 10, 100, ... up to ``n_max`` (and ``n_max`` itself)."""
    if d < 4:
        raise ValueError(f"the unbounded-spread question concerns d >= 4, got d={d}")
    points = []
    p = 10
    while p <= n_max:
        points.append(p)
        p *= 10
    if not points or points[-1] != n_max:
        points.append(n_max)
    table = residue_table(n_max, d)
    return [_spread_from_table(table, d, p) for p in points]


# -- Hypothesis 3: Vandermonde of the residue counts -------------------------


def vandermonde(values: Sequence[int]) -> int:
    """prod_{i<j} (x_j - x_i), exact."""
    out = 1
    for i, j in itertools.combinations(range(len(values)), 2):
        out *= values[j] - values[i]
    return out


def det_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant by fraction-free elimination."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _hypothesis3_chunk(args) -> _Partial:
    d, lo, hi, cap = args
    table = residue_table(hi, d)
    part = _Partial()
    for n in range(lo, hi + 1):
        counts = [int(v) for v in table[n]]
        coincide = len(set(counts)) < d
        v = vandermonde(counts)
        consistent = (v == 0) == coincide
        if d <= VANDERMONDE_DET_MAX_D:
            det = det_bareiss([[c**k for c in counts] for k in range(d)])
            consistent = consistent and det == v
        part.cases += 1
        if not consistent:
            part.tally["inconsistent"] += 1
        if not coincide or not consistent:
            part.flag({"n": n, "counts": counts, "vandermonde": v, "consistent": consistent}, cap)
    return part


def verify_hypothesis3(
    d: int,
    n_max: int,
    *,
    workers: int | None = 1,
    witness_cap: int = DEFAULT_WITNESS_CAP,
    chunk_size: int = 5_000,
) -> VerificationReport:
    """Some two of r_{d,0}(n), ..., r_{d,d-1}(n) coincide, for every 1 <= n <= n_max."""
    if d < 3:
        raise ValueError(f"d must be >= 3, got {d}")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    started = time.perf_counter()
    chunks = [(d, lo, min(lo + chunk_size - 1, n_max), witness_cap) for lo in range(1, n_max + 1, chunk_size)]
    merged = _run(_hypothesis3_chunk, chunks, workers)
    extra = {
        "determinant_crosschecked": d <= VANDERMONDE_DET_MAX_D,
        "inconsistencies": merged.tally["inconsistent"],
        "first_violation": merged.witnesses[0]["n"] if merged.witnesses else None,
    }
    return _report("hypothesis3", {"d": d, "n_max": n_max}, None, merged, witness_cap, started, extra)


# -- Identity for the full product and windowed products ---------------------


def verify_identity(
    n_max: int = 100_000,
    cross_max: int = 10_000,
    *,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> VerificationReport:
    """|chi(n)| <= 1 up to n_max and chi(n) = r_{2,0}(n) - r_{2,1}(n) up to cross_max."""
    started = time.perf_counter()
    series = chi_series(n_max)
    part = _Partial()
    for n, c in series.violations():
        part.flag({"check": "bound", "n": n, "chi": c}, witness_cap)
    part.cases += n_max
    cross_max = min(cross_max, n_max)
    r2 = residue_table(cross_max, 2)
    signed = r2[:, 0] - r2[:, 1]
    for n in np.flatnonzero(signed[1:] != series.coeffs[1 : cross_max + 1]) + 1:
        part.flag({"check": "signed_count", "n": int(n), "chi": series[int(n)], "r2_diff": int(signed[n])}, witness_cap)
    part.cases += cross_max
    return _report("identity", {"n_max": n_max, "cross_max": cross_max}, None, part, witness_cap, started,
                   {"max_abs_chi": series.max_abs()})


def verify_zhao(b_max: int = 20, *, witness_cap: int = DEFAULT_WITNESS_CAP) -> VerificationReport:
    """Every coefficient of prod_{a<=i<=b} (1 - x^{f_i}) is in {-1, 0, 1} for a <= b <= b_max."""
    started = time.perf_counter()
    part = _Partial()
    windows = []
    for a in range(1, b_max + 1):
        for b in range(a, b_max + 1):
            s = chi_window(a, b)
            part.cases += len(s)
            bad = s.violations()
            for n, c in bad:
                part.flag({"a": a, "b": b, "n": n, "coeff": c}, witness_cap)
            windows.append({"a": a, "b": b, "max_abs_coeff": s.max_abs(),
                            "witness": {"n": bad[0][0], "coeff": bad[0][1]} if bad else None})
    extra = {"windows": len(windows), "max_abs_coeff": max(w["max_abs_coeff"] for w in windows)}
    return _report("zhao", {"b_max": b_max}, None, part, witness_cap, started, extra)


def zhao_window_reports(b_max: int) -> list[dict]:
    """Per-window JSON records {"a", "b", "max_abs_coeff", "witness"}."""
    out = []
    for a in range(1, b_max + 1):
        for b in range(a, b_max + 1):
            s = chi_window(a, b)
            bad = s.violations()
            out.append({"a": a, "b": b, "max_abs_coeff": s.max_abs(),
                        "witness": {"n": bad[0][0], "coeff": bad[0][1]} if bad else None})
    return out


# -- Oracle cross-checks -----------------------------------------------------


def verify_oracles(
    n_cap: int = 500,
    m_cap: int = 6,
    *,
    entry_cap: int = 4,
    s_m_cap: int = 9,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> VerificationReport:
    """phi vs phi_brute, delta vs delta_det, S by recurrence vs direct, chi vs signed counts."""
    if n_cap < 1 or m_cap < 1:
        raise ValueError("caps must be >= 1")
    started = time.perf_counter()
    part = _Partial()
    per_check: dict[str, dict] = {}

    def run(name: str, cases: Iterable, same: Callable[[Any], bool], describe: Callable[[Any], dict]):
        checked = bad = 0
        for case in cases:
            checked += 1
            if not same(case):
                bad += 1
                part.flag({"check": name, **describe(case)}, witness_cap)
        part.cases += checked
        per_check[name] = {"cases": checked, "mismatches": bad}

    run("phi_vs_brute", range(1, n_cap + 1),
        lambda n: phi(n) == phi_brute(n),
        lambda n: {"n": n, "phi": list(phi(n).coeffs), "brute": list(phi_brute(n).coeffs)})

    def vectors(max_m, hi):
        for m in range(1, max_m + 1):
            yield from itertools.product(range(hi + 1), repeat=m)

    run("delta_vs_det", vectors(m_cap, entry_cap),
        lambda A: delta(A) == delta_det(A),
        lambda A: {"A": list(A), "delta": list(delta(A).coeffs), "det": list(delta_det(A).coeffs)})
    run("s_recurrence_vs_direct", vectors(s_m_cap, 2),
        lambda A: s_via_recurrence(A) == s_element(A),
        lambda A: {"A": list(A), "recurrence": list(s_via_recurrence(A).coeffs), "direct": list(s_element(A).coeffs)})

    series = chi_series(n_cap)
    r2 = residue_table(n_cap, 2)
    run("chi_vs_signed_r2", range(1, n_cap + 1),
        lambda n: series[n] == int(r2[n, 0] - r2[n, 1]),
        lambda n: {"n": n, "chi": series[n], "r2_diff": int(r2[n, 0] - r2[n, 1])})

    params = {"n_cap": n_cap, "m_cap": m_cap, "entry_cap": entry_cap, "s_m_cap": s_m_cap}
    return _report("oracles", params, None, part, witness_cap, started, {"checks": per_check})


SUITES = ("theorem1", "lemma4", "theorem2", "hypothesis1", "hypothesis3", "oracles", "identity", "zhao")
