"""Exhaustive search for perfect and super-perfect identities.

For positive integers the identity is equivalent to the product equation

    t = (1 + 1/(A^2-1)) (1 + 2/(x-1)) (1 + 2/(y-1)) (1 + 2/(z-1)),

so z has the closed form z = (N+D)/(N-D) with N = t(A^2-1)(x-1)(y-1) and
D = A^2(x+1)(y+1), and never needs to be looped.  All interval endpoints are
decided by exact integer comparisons.

Super-perfect search (t < A < x < y < z): t runs over 2..6, and for each
admissible (t, A) the x interval satisfies

    (1 + 1/(A^2-1)) (1 + 2/(x-1))^3 >= t      (upper end; y, z factors are
                                               each smaller than the x one)
    (1 + 1/(A^2-1)) (1 + 2/(x-1))    < t      (lower end; y, z factors are
                                               each > 1)

and analogously for y given m = t / ((1 + 1/(A^2-1))(1 + 2/(x-1))):
(1 + 2/(y-1)) < m and (1 + 2/(y-1))^2 > m.

Perfect search (x <= y <= z, A unordered, t <= 36): for fixed (t, x, y) put
P = t(x-1)(y-1) and Q = (x+1)(y+1).  Solutions need P > Q, and z(A) strictly
decreases toward z_c = (P+Q)/(P-Q) as A grows, so z >= v with
v = max(y, floor(z_c)+1) caps A^2 at P(v-1) / (v(P-Q) - (P+Q)).  That bound
is what makes the scan provably finite for every t, including the small-x
cells where comparing A with x alone bounds nothing.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import isqrt
from typing import Callable, Iterable, TextIO

from .exact import is_prime
from .identity import IdentityTuple, classify, verify_tuple

SUPER_PERFECT_T_VALUES = range(2, 7)
PERFECT_T_MAX = 36  # (1 + 1/3)(1 + 2)^3, every variable at its minimum 2

_GOLDEN_RESOURCE = "appendix_super_perfect.jsonl"


@dataclass(frozen=True)
class EnumerationReport:
    identities: tuple[IdentityTuple, ...]
    candidates_examined: int
    wall_time: float

    def to_summary_dict(self) -> dict:
        return {
            "count": len(self.identities),
            "candidates_examined": self.candidates_examined,
            "wall_time_seconds": self.wall_time,
        }

    def write_jsonl(self, stream: TextIO) -> None:
        for identity in self.identities:
            stream.write(identity.to_json(classify(identity)) + "\n")


def solve_z(t: Fraction | int, A: int, x: int, y: int) -> int | None:
    """Closed-form z completing (t, A, x, y), or None when no integer works."""
    t = Fraction(t)
    n = t.numerator * (A * A - 1) * (x - 1) * (y - 1)
    d = t.denominator * A * A * (x + 1) * (y + 1)
    if n <= d:
        return None
    num, den = n + d, n - d
    if num % den:
        return None
    z = num // den
    return z if z >= 2 else None


def _fa(A: int) -> Fraction:
    return Fraction(A * A, A * A - 1)


def _fx(x: int) -> Fraction:
    return Fraction(x + 1, x - 1)


def _cubic_holds(t: int, A: int, x: int) -> bool:
    # (1 + 1/(A^2-1)) (1 + 2/(x-1))^3 >= t
    return A * A * (x + 1) ** 3 >= t * (A * A - 1) * (x - 1) ** 3


def super_x_interval(t: int, A: int) -> tuple[int, int] | None:
    """Admissible x for the super-perfect cell (t, A), or None if empty."""
    c = t * (A * A - 1) - A * A
    lower = (t * (A * A - 1) + A * A) // c + 1
    lo = max(A + 1, lower)
    if not _cubic_holds(t, A, lo):
        return None
    hi = lo
    while _cubic_holds(t, A, hi + 1):
        hi += 1
    return lo, hi


def _largest_y(mn: int, md: int, strict: bool) -> int:
    # Largest y with (y+1)^2 * md > (y-1)^2 * mn (or >= when strict=False);
    # requires mn > md.  y < 2(mn+md)/(mn-md) is a safe cap.
    def holds(y: int) -> bool:
        lhs, rhs = (y + 1) ** 2 * md, (y - 1) ** 2 * mn
        return lhs > rhs if strict else lhs >= rhs

    lo, hi = 2, 2 * (mn + md) // (mn - md) + 2
    if not holds(lo):
        return lo - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if holds(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def super_y_interval(t: int, A: int, x: int) -> tuple[int, int] | None:
    """Admissible y for the super-perfect cell (t, A, x), or None if empty."""
    m = Fraction(t) / (_fa(A) * _fx(x))
    if m <= 1:
        return None
    mn, md = m.numerator, m.denominator
    lo = max(x + 1, (mn + md) // (mn - md) + 1)
    hi = _largest_y(mn, md, strict=True)
    if lo > hi:
        return None
    return lo, hi


def _super_perfect_cells() -> list[tuple[int, int]]:
    cells = []
    for t in SUPER_PERFECT_T_VALUES:
        A = t + 1
        # Once even x = A+1 fails the cubic bound, larger A only gets worse.
        while _cubic_holds(t, A, A + 1):
            cells.append((t, A))
            A += 1
    return cells


def _scan_super_cell(cell: tuple[int, int]) -> tuple[list[IdentityTuple], int]:
    t, A = cell
    found: list[IdentityTuple] = []
    examined = 0
    xs = super_x_interval(t, A)
    if xs is None:
        return found, examined
    for x in range(xs[0], xs[1] + 1):
        ys = super_y_interval(t, A, x)
        if ys is None:
            continue
        for y in range(ys[0], ys[1] + 1):
            examined += 1
            z = solve_z(t, A, x, y)
            if z is not None and z > y:
                identity = IdentityTuple(
                    Fraction(t), Fraction(A), Fraction(x), Fraction(y), Fraction(z)
                )
                if not verify_tuple(identity):
                    raise AssertionError(f"enumerated tuple fails to verify: {identity}")
                found.append(identity)
    return found, examined


def _perfect_x_max(t: int) -> int:
    # Largest x with (4/3)(1 + 2/(x-1))^3 >= t; F_A <= 4/3 for every A >= 2.
    x = 2
    while 4 * (x + 2) ** 3 >= 3 * t * x ** 3:  # shifted: test x+1
        x += 1
    return x


def _smallest_a_below(r: Fraction) -> int | None:
    # Smallest A >= 2 with A^2/(A^2-1) < r; None when r <= 1.
    if r <= 1:
        return None
    rn, rd = r.numerator, r.denominator
    if 4 * rd < 3 * rn:  # A = 2 already qualifies
        return 2
    # A^2 (rn - rd) > rn
    a = isqrt(rn // (rn - rd)) + 1
    while a * a * (rn - rd) <= rn:
        a += 1
    return max(a, 2)


def _scan_perfect_cell(cell: tuple[int, int]) -> tuple[list[IdentityTuple], int]:
    t, x = cell
    found: list[IdentityTuple] = []
    examined = 0
    fx = _fx(x)
    if fx >= t:
        return found, examined
    r = Fraction(t) / fx
    a0 = _smallest_a_below(r)
    if a0 is None:
        return found, examined
    m4 = r / _fa(a0)
    y_hi = _largest_y(m4.numerator, m4.denominator, strict=False)
    for y in range(x, y_hi + 1):
        p = t * (x - 1) * (y - 1)
        q = (x + 1) * (y + 1)
        if p <= q:
            continue
        v = max(y, (p + q) // (p - q) + 1)
        den = v * (p - q) - (p + q)
        a_cap_sq = p * (v - 1) // den
        for A in range(2, isqrt(a_cap_sq) + 1):
            examined += 1
            z = solve_z(t, A, x, y)
            if z is not None and z >= y:
                identity = IdentityTuple(
                    Fraction(t), Fraction(A), Fraction(x), Fraction(y), Fraction(z)
                )
                if not verify_tuple(identity):
                    raise AssertionError(f"enumerated tuple fails to verify: {identity}")
                found.append(identity)
    return found, examined


def _run_cells(
    cells: Iterable[tuple[int, int]],
    scan: Callable[[tuple[int, int]], tuple[list[IdentityTuple], int]],
    max_workers: int | None,
) -> EnumerationReport:
    start = time.perf_counter()
    results: list[tuple[list[IdentityTuple], int]]
    cells = list(cells)
    if max_workers is not None and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(scan, cells))
    else:
        results = [scan(cell) for cell in cells]
    found: set[IdentityTuple] = set()
    examined = 0
    for cell_found, cell_examined in results:
        found.update(cell_found)
        examined += cell_examined
    elapsed = time.perf_counter() - start
    return EnumerationReport(tuple(sorted(found)), examined, elapsed)


def enumerate_super_perfect(
    max_workers: int | None = None,
    t_values: Iterable[int] = SUPER_PERFECT_T_VALUES,
) -> EnumerationReport:
    """All identities with integer entries and t < A < x < y < z, t in 2..6."""
    t_values = list(t_values)
    cells = [cell for cell in _super_perfect_cells() if cell[0] in t_values]
    return _run_cells(cells, _scan_super_cell, max_workers)


def enumerate_perfect(max_workers: int | None = None) -> EnumerationReport:
    """All identities with positive integer entries > 1, normalized to
    x <= y <= z (A unordered relative to x)."""
    cells = [
        (t, x)
        for t in range(2, PERFECT_T_MAX + 1)
        for x in range(2, _perfect_x_max(t) + 1)
    ]
    return _run_cells(cells, _scan_perfect_cell, max_workers)


def prime_filter(report: EnumerationReport) -> EnumerationReport:
    """Keep tuples whose A, x, y, z are all prime."""
    kept = tuple(
        identity
        for identity in report.identities
        if all(
            v.denominator == 1 and is_prime(int(v))
            for v in (identity.A, identity.x, identity.y, identity.z)
        )
    )
    return EnumerationReport(kept, report.candidates_examined, report.wall_time)


def load_appendix() -> list[IdentityTuple]:
    """The transcribed published list, in print order (one entry repeats)."""
    text = (
        resources.files("ramid").joinpath("data").joinpath(_GOLDEN_RESOURCE)
    ).read_text()
    return [IdentityTuple.from_json(line) for line in text.splitlines() if line]


def appendix_distinct() -> set[IdentityTuple]:
    return set(load_appendix())
