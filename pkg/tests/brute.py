"""Desk-scale brute-force oracle, independent of the pruned search bounds.

Loops every 2 <= A < x < y <= limit for t in 2..6 (no inequality pruning),
solves z in closed form with vectorized int64 arithmetic, then confirms each
integer hit exactly with Fractions before reporting it.  With limit = 2000
the products stay below ~1e14, far inside int64.
"""

from fractions import Fraction

import numpy as np

from ramid import IdentityTuple, verify_tuple


def _pair_arrays(limit: int):
    # All (x, y) with 3 <= x < y <= limit, ordered by x; offsets[x] is the
    # start of the block with that x so "x > A" is a suffix slice.
    xs, ys = [], []
    offsets = np.zeros(limit + 2, dtype=np.int64)
    pos = 0
    for x in range(3, limit):
        count = limit - x
        offsets[x] = pos
        xs.append(np.full(count, x, dtype=np.int64))
        ys.append(np.arange(x + 1, limit + 1, dtype=np.int64))
        pos += count
    offsets[limit:] = pos
    return np.concatenate(xs), np.concatenate(ys), offsets


def brute_force_super_perfect(limit: int = 2000) -> set[IdentityTuple]:
    xs, ys, offsets = _pair_arrays(limit)
    xm1, xp1 = xs - 1, xs + 1
    ym1, yp1 = ys - 1, ys + 1
    m = xm1 * ym1
    p = xp1 * yp1
    hits: set[tuple[int, ...]] = set()
    for t in range(2, 7):
        for A in range(2, limit - 1):
            start = offsets[A + 1]
            if start >= len(xs):
                break
            n = (t * (A * A - 1)) * m[start:]
            d = (A * A) * p[start:]
            u = n - d
            v = n + d
            ok = u > 0
            safe_u = np.where(ok, u, 1)
            ok &= v % safe_u == 0
            if not ok.any():
                continue
            z = v[ok] // safe_u[ok]
            bx, by = xs[start:][ok], ys[start:][ok]
            keep = (z > by) & (A > t) & (bx > A)
            for x, y, zz in zip(bx[keep], by[keep], z[keep]):
                hits.add((t, A, int(x), int(y), int(zz)))
    confirmed = set()
    for t, A, x, y, z in hits:
        identity = IdentityTuple(*(Fraction(v) for v in (t, A, x, y, z)))
        assert verify_tuple(identity), identity
        confirmed.add(identity)
    return confirmed
