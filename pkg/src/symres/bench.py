"""Timing harness comparing the fast and the quadratic quotient chain."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

import numpy as np

from .fssr import fast_sequence
from .poly import SymPoly
from .ring import prime_field
from .ssr_seq import ssr_sequence

BENCH_PRIME = 998244353


@dataclass
class BenchRow:
    d: int
    fssr_seconds: float
    quadratic_seconds: float | None


def loglog_slope(sizes, seconds) -> float:
    """Least-squares slope of log(time) against log(d)."""
    x = np.log(np.asarray(sizes, dtype=float))
    y = np.log(np.asarray(seconds, dtype=float))
    return float(np.polyfit(x, y, 1)[0])


def bench_pair(rng: random.Random, d: int, ring: str = "zp", bits: int = 16):
    """Random dense pair of degree d over a word-size prime field or the integers."""
    if ring == "zp":
        F = prime_field(BENCH_PRIME)
        draw = lambda: F(rng.randrange(1, BENCH_PRIME))  # noqa: E731
    elif ring == "int":
        draw = lambda: rng.choice((-1, 1)) * rng.randrange(1, 1 << bits)  # noqa: E731
    else:
        raise ValueError(f"benchmark ring must be zp or int, not {ring!r}")
    A = SymPoly([draw() for _ in range(d + 1)])
    B = SymPoly([draw() for _ in range(d + 1)])
    return A, B


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_bench(sizes, ring: str = "zp", seed: int = 0, quadratic: bool = True,
              repeat: int = 1, check: bool = True) -> list[BenchRow]:
    """Time both algorithms on one random pair per size.

    With ``check`` the two chains are compared quotient by quotient, so the
    benchmark doubles as an equivalence test at sizes the oracle cannot reach.
    """
    rng = random.Random(seed)
    rows = []
    for d in sizes:
        A, B = bench_pair(rng, d, ring)
        t_fast = _best_of(lambda: fast_sequence(A, B), repeat)
        t_quad = None
        if quadratic:
            t_quad = _best_of(lambda: ssr_sequence(A, B, full=False), repeat)
            if check:
                fast = fast_sequence(A, B)
                slow = ssr_sequence(A, B, full=False)
                if [q.Q for q in fast.quotients] != [q.Q for q in slow.quotients]:
                    raise AssertionError(f"fast and quadratic chains differ at d={d}")
        rows.append(BenchRow(d, t_fast, t_quad))
    return rows


def rows_to_csv(rows: list[BenchRow]) -> str:
    """CSV with one row per size and a final row holding the fitted slopes."""
    lines = ["d,fssr_seconds,quadratic_seconds"]
    for r in rows:
        q = "" if r.quadratic_seconds is None else f"{r.quadratic_seconds:.6f}"
        lines.append(f"{r.d},{r.fssr_seconds:.6f},{q}")
    if len(rows) >= 2:
        sizes = [r.d for r in rows]
        sf = loglog_slope(sizes, [r.fssr_seconds for r in rows])
        quad = [r.quadratic_seconds for r in rows]
        sq = f"{loglog_slope(sizes, quad):.3f}" if None not in quad else ""
        lines.append(f"slope,{sf:.3f},{sq}")
    return "\n".join(lines) + "\n"
