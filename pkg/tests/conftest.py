"""Shared helpers: extended-precision float oracles and family test grids."""

from fractions import Fraction

import mpmath
import pytest

from ramid import (
    IdentityTuple,
    Surd,
    VariationIdentity,
    general_infinite_family,
    long_identity,
    rebak_family,
    rebak_variant_family,
    surd_family_high,
    surd_family_low,
)

mpmath.mp.prec = 120  # comfortably past 80-bit

F = Fraction


def mp_rational(value: Fraction) -> mpmath.mpf:
    return mpmath.mpf(value.numerator) / value.denominator


def mp_surd(value: Surd) -> mpmath.mpf:
    return mp_rational(value.p) + mp_rational(value.q) * mpmath.sqrt(value.d)


def mp_tuple_sides(identity: IdentityTuple) -> tuple[mpmath.mpf, mpmath.mpf]:
    """(sqrt of radicand, right-side product) at 120-bit precision."""
    r = mp_rational(identity.t)
    for v in (identity.A, identity.x, identity.y, identity.z):
        r *= 1 - 1 / mp_rational(v) ** 2
    s = mpmath.mpf(1)
    for v in (identity.x, identity.y, identity.z):
        s *= 1 + 1 / mp_rational(v)
    return mpmath.sqrt(r), s


def mp_variation_sides(identity: VariationIdentity) -> tuple[mpmath.mpf, mpmath.mpf]:
    r = mp_rational(identity.scale)
    for v in identity.radicand_entries:
        r *= 1 - 1 / mp_surd(v) ** 2
    s = mpmath.mpf(1)
    for v, sign in identity.rhs_entries:
        s *= 1 + sign / mp_surd(v)
    return mpmath.sqrt(r), s


def float_agrees(identity, rel_tol: float = 1e-10) -> bool:
    if isinstance(identity, IdentityTuple):
        lhs, rhs = mp_tuple_sides(identity)
    else:
        lhs, rhs = mp_variation_sides(identity)
    return abs(lhs - rhs) <= rel_tol * max(abs(rhs), mpmath.mpf(1e-30))


# Parameter grids on which each family provably yields identities (the
# sign-degenerate windows of rebak / rebak-variant / surd-low are excluded
# here and pinned separately).

REBAK_GRID = (
    [F(a) for a in range(2, 32)]
    + [F(a) for a in range(-2, -18, -1)]
    + [F(1, 2), F(3, 2), F(5, 2), F(7, 2), F(-5, 4), F(-7, 4), F(-9, 4), F(22, 7)]
)

REBAK_VARIANT_GRID = (
    [F(a) for a in range(2, 32)]
    + [F(a) for a in range(-2, -18, -1)]
    + [F(1, 4), F(3, 2), F(5, 2), F(9, 2), F(-5, 4), F(-9, 4), F(-13, 4), F(17, 5)]
)

GENERAL_GRID = [k for k in range(-27, 28) if abs(k) >= 2]

LONG_GRID = [(2, 1)] + [(b, n) for b in range(3, 13) for n in range(1, 7)]

SURD_HIGH_GRID = [F(a) for a in range(3, 41)] + [
    F(7, 2), F(10, 3), F(13, 2), F(17, 4), F(26, 5),
    F(50, 7), F(65, 8), F(82, 9), F(101, 10), F(11, 3), F(23, 7), F(37, 2),
]

SURD_LOW_GRID = [F(a) for a in range(-2, -46, -1)] + [
    F(1, 2), F(1, 3), F(-1, 4), F(-9, 4), F(-17, 2), F(-7, 3),
]


def family_tuples() -> list[IdentityTuple]:
    out = [rebak_family(a) for a in REBAK_GRID]
    out += [rebak_variant_family(a) for a in REBAK_VARIANT_GRID]
    out += [general_infinite_family(k) for k in GENERAL_GRID]
    return out


def family_variations() -> list[VariationIdentity]:
    out = [long_identity(b, n) for b, n in LONG_GRID]
    out += [surd_family_high(a) for a in SURD_HIGH_GRID]
    out += [surd_family_low(a) for a in SURD_LOW_GRID]
    return out


@pytest.fixture(scope="session")
def super_perfect_report():
    from ramid import enumerate_super_perfect

    return enumerate_super_perfect()


@pytest.fixture(scope="session")
def perfect_report():
    from ramid import enumerate_perfect

    return enumerate_perfect()
