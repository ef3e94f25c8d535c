"""Quadratic construction of identity tuples and recovery of the parameter k.

Given (t, A, z, k) with t, k nonzero and A, z outside {0, 1, -1}, set

    u     = (A^2 - 1) t
    gamma = (u - A^2) k z - (u + A^2) k
    beta  = (u + A^2) k z - (u - A^2) k - 1

Then x and y are the roots of X^2 - gamma X + beta = 0.  When the
discriminant is a rational square, beta is nonzero and neither 1 nor -1 is a
root, the assembled (t, A, x, y, z) satisfies the squared relation
radicand = rhs^2 identically; it is a genuine identity exactly when the
right-side product is also nonnegative (``verify_tuple`` checks that).

The inverse direction recovers k = (xy - (x+y) + 1) / (2 A^2 (z+1)) and
accepts it only if the companion equation
xy + (x+y) + 1 = 2 k t (A^2-1)(z-1) holds exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateDenominatorError, TrivialInputError
from .exact import Surd, format_rational, rational_sqrt, squarefree_decompose
from .identity import IdentityTuple

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ConditionReport:
    discriminant_nonnegative: bool
    beta_nonzero: bool
    one_minus_gamma_plus_beta_nonzero: bool
    minus_one_not_root: bool
    inputs_nontrivial: bool

    def all_satisfied(self) -> bool:
        return (
            self.discriminant_nonnegative
            and self.beta_nonzero
            and self.one_minus_gamma_plus_beta_nonzero
            and self.minus_one_not_root
            and self.inputs_nontrivial
        )

    def to_json_dict(self) -> dict:
        return {
            "discriminant_nonnegative": self.discriminant_nonnegative,
            "beta_nonzero": self.beta_nonzero,
            "one_minus_gamma_plus_beta_nonzero": self.one_minus_gamma_plus_beta_nonzero,
            "minus_one_not_root": self.minus_one_not_root,
            "inputs_nontrivial": self.inputs_nontrivial,
        }


@dataclass(frozen=True)
class RootPair:
    kind: str  # "rational" | "surd" | "none"
    rational: tuple[Fraction, Fraction] | None = None
    surd: tuple[Surd, Surd] | None = None

    def to_json_dict(self) -> dict:
        d: dict = {"kind": self.kind}
        if self.rational is not None:
            d["values"] = [format_rational(v) for v in self.rational]
        elif self.surd is not None:
            d["values"] = [str(v) for v in self.surd]
        return d


@dataclass(frozen=True)
class ConstructionResult:
    t: Fraction
    A: Fraction
    z: Fraction
    k: Fraction
    gamma: Fraction
    beta: Fraction
    discriminant: Fraction
    roots: RootPair
    conditions: ConditionReport

    def identity(self) -> IdentityTuple | None:
        """The assembled tuple, when the roots are rational and all
        condition flags hold; x and y carry the roots in ascending order."""
        if self.roots.kind != "rational" or not self.conditions.all_satisfied():
            return None
        hi, lo = self.roots.rational
        return IdentityTuple(self.t, self.A, lo, hi, self.z)

    def to_json_dict(self) -> dict:
        return {
            "t": format_rational(self.t),
            "A": format_rational(self.A),
            "z": format_rational(self.z),
            "k": format_rational(self.k),
            "gamma": format_rational(self.gamma),
            "beta": format_rational(self.beta),
            "discriminant": format_rational(self.discriminant),
            "roots": self.roots.to_json_dict(),
            "conditions": self.conditions.to_json_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _check_construction_inputs(
    t: Fraction, A: Fraction, z: Fraction, k: Fraction
) -> None:
    if t == 0:
        raise TrivialInputError("t must be nonzero")
    if k == 0:
        raise TrivialInputError("k must be nonzero")
    for name, value in (("A", A), ("z", z)):
        if value in (0, 1, -1):
            raise TrivialInputError(f"{name} must not be 0, 1 or -1 (got {value})")


def gamma_beta(
    t: Fraction, A: Fraction, z: Fraction, k: Fraction
) -> tuple[Fraction, Fraction]:
    _check_construction_inputs(t, A, z, k)
    u = (A * A - 1) * t
    a2 = A * A
    gamma = (u - a2) * k * z - (u + a2) * k
    beta = (u + a2) * k * z - (u - a2) * k - 1
    return gamma, beta


def solve_roots(gamma: Fraction, beta: Fraction) -> RootPair:
    """Roots of X^2 - gamma X + beta: rational pair (larger first), a
    conjugate surd pair over the squarefree part of the discriminant, or
    none when the discriminant is negative."""
    disc = gamma * gamma - 4 * beta
    if disc < 0:
        return RootPair("none")
    root = rational_sqrt(disc)
    if root is not None:
        return RootPair(
            "rational", rational=((gamma + root) * _HALF, (gamma - root) * _HALF)
        )
    # sqrt(disc) = (e/den) * sqrt(d) with d squarefree
    d, s = squarefree_decompose(disc.numerator * disc.denominator)
    e = Fraction(s, disc.denominator)
    half_gamma = gamma * _HALF
    half_e = e * _HALF
    return RootPair(
        "surd",
        surd=(Surd(half_gamma, half_e, d), Surd(half_gamma, -half_e, d)),
    )


def build_tuple(
    t: Fraction, A: Fraction, z: Fraction, k: Fraction
) -> ConstructionResult:
    gamma, beta = gamma_beta(t, A, z, k)
    disc = gamma * gamma - 4 * beta
    roots = solve_roots(gamma, beta)
    conditions = ConditionReport(
        discriminant_nonnegative=disc >= 0,
        beta_nonzero=beta != 0,
        one_minus_gamma_plus_beta_nonzero=1 - gamma + beta != 0,
        minus_one_not_root=1 + gamma + beta != 0,
        inputs_nontrivial=True,  # gamma_beta already rejected trivial inputs
    )
    return ConstructionResult(t, A, z, k, gamma, beta, disc, roots, conditions)


def recover_k(identity: IdentityTuple) -> Fraction | None:
    """The unique k mapping (t, A, z) to this tuple's (x, y), or None if the
    companion equation fails (the tuple then satisfies no such construction)."""
    if identity.z == -1:
        raise DegenerateDenominatorError("z = -1 makes the k denominator vanish")
    t, A, x, y, z = identity.t, identity.A, identity.x, identity.y, identity.z
    k = (x * y - (x + y) + 1) / (2 * A * A * (z + 1))
    if x * y + (x + y) + 1 == 2 * k * t * (A * A - 1) * (z - 1):
        return k
    return None
