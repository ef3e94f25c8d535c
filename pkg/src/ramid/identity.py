"""Data model and exact verifier for square-root product identities.

An ``IdentityTuple`` (t, A, x, y, z) asserts

    sqrt(t (1 - 1/A^2)(1 - 1/x^2)(1 - 1/y^2)(1 - 1/z^2))
        = (1 + 1/x)(1 + 1/y)(1 + 1/z)

with all five entries rational.  A ``VariationIdentity`` generalizes the
shape: a rational scale, any number of radicand factors ``(1 - 1/v^2)`` and
any number of signed right-side factors ``(1 +/- 1/w)``, with the values
drawn from a single real quadratic field.  Verification never takes a square
root: it checks that both sides are nonnegative and that the radicand equals
the square of the right side, exactly.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import IncompatibleFieldError, PreconditionError, TrivialInputError
from .exact import Surd, format_rational, is_prime, parse_rational, parse_surd

_ONE = Fraction(1)


class Classification(enum.Enum):
    NONTRIVIAL_RATIONAL = "nontrivial-rational"
    GENERAL = "general"
    PERFECT = "perfect"
    SUPER_PERFECT = "super-perfect"
    PRIME = "prime"

    @property
    def tag(self) -> str:
        return self.value

    def at_least(self, other: "Classification") -> bool:
        """True if this tag implies ``other`` in the nesting order."""
        order = [
            Classification.NONTRIVIAL_RATIONAL,
            Classification.GENERAL,
            Classification.PERFECT,
            Classification.SUPER_PERFECT,
            Classification.PRIME,
        ]
        return order.index(self) >= order.index(other)


def _check_nontrivial(name: str, value: Fraction) -> None:
    if value in (0, 1, -1):
        raise TrivialInputError(f"{name} must not be 0, 1 or -1 (got {value})")


@dataclass(frozen=True, order=True)
class IdentityTuple:
    t: Fraction
    A: Fraction
    x: Fraction
    y: Fraction
    z: Fraction

    def __post_init__(self) -> None:
        if self.t == 0:
            raise TrivialInputError("t must be nonzero")
        for name in ("A", "x", "y", "z"):
            _check_nontrivial(name, getattr(self, name))

    def radicand(self) -> Fraction:
        r = self.t
        for v in (self.A, self.x, self.y, self.z):
            r *= 1 - 1 / (v * v)
        return r

    def rhs_product(self) -> Fraction:
        s = _ONE
        for v in (self.x, self.y, self.z):
            s *= 1 + 1 / v
        return s

    def to_json_dict(self, classification: Classification | None = None) -> dict:
        d = {
            "t": format_rational(self.t),
            "A": format_rational(self.A),
            "x": format_rational(self.x),
            "y": format_rational(self.y),
            "z": format_rational(self.z),
        }
        if classification is not None:
            d["class"] = classification.tag
        return d

    def to_json(self, classification: Classification | None = None) -> str:
        return json.dumps(self.to_json_dict(classification))

    @classmethod
    def from_json_dict(cls, data: dict) -> "IdentityTuple":
        return cls(*(parse_rational(data[k]) for k in ("t", "A", "x", "y", "z")))

    @classmethod
    def from_json(cls, text: str) -> "IdentityTuple":
        return cls.from_json_dict(json.loads(text))


def verify_tuple(identity: IdentityTuple) -> bool:
    """Exact truth of the identity: radicand and right side nonnegative,
    radicand equal to the square of the right side."""
    r = identity.radicand()
    s = identity.rhs_product()
    return r >= 0 and s >= 0 and r == s * s


def classify(identity: IdentityTuple) -> Classification:
    """Most specific tag for a tuple that verifies (precondition)."""
    if not verify_tuple(identity):
        raise PreconditionError("classify requires a tuple that verifies")
    values = (identity.t, identity.A, identity.x, identity.y, identity.z)
    if not all(v.denominator == 1 for v in values):
        return Classification.NONTRIVIAL_RATIONAL
    if not all(v >= 2 for v in values):
        return Classification.GENERAL
    ordered = sorted((identity.x, identity.y, identity.z))
    chain = [identity.t, identity.A, *ordered]
    if not all(a < b for a, b in zip(chain, chain[1:])):
        return Classification.PERFECT
    if all(is_prime(int(v)) for v in (identity.A, *ordered)):
        return Classification.PRIME
    return Classification.SUPER_PERFECT


def _canonical_radicand(values: Iterable[Surd]) -> tuple[Surd, ...]:
    # Only v^2 matters, so negative entries fold to their absolute value.
    out = []
    for v in values:
        v = v if v.sign() >= 0 else -v
        if v in (0, 1):
            raise TrivialInputError(f"radicand entry must not be 0, 1 or -1: {v}")
        out.append(v)
    return tuple(sorted(out))


def _canonical_rhs(entries: Iterable[tuple[Surd, int]]) -> tuple[tuple[Surd, int], ...]:
    # (value, sign) with negative values rewritten as (-value, -sign):
    # 1 + s/w == 1 + (-s)/(-w).
    out = []
    for value, sign in entries:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if value.sign() < 0:
            value, sign = -value, -sign
        if value in (0, 1):
            raise TrivialInputError(f"rhs value must not be 0, 1 or -1: {value}")
        out.append((value, sign))
    return tuple(sorted(out, key=lambda e: (e[0], -e[1])))


@dataclass(frozen=True)
class VariationIdentity:
    scale: Fraction = field(default=_ONE)
    radicand_entries: tuple[Surd, ...] = ()
    rhs_entries: tuple[tuple[Surd, int], ...] = ()

    def __post_init__(self) -> None:
        if self.scale == 0:
            raise TrivialInputError("scale must be nonzero")
        object.__setattr__(
            self, "radicand_entries", _canonical_radicand(self.radicand_entries)
        )
        object.__setattr__(self, "rhs_entries", _canonical_rhs(self.rhs_entries))
        self.field_radicand()  # rejects mixed fields eagerly

    def field_radicand(self) -> int:
        """The common squarefree d of all entries (0 if everything is rational)."""
        d = 0
        for v in self._all_values():
            if v.d:
                if d and v.d != d:
                    raise IncompatibleFieldError(
                        f"entries mix sqrt({d}) and sqrt({v.d})"
                    )
                d = v.d
        return d

    def _all_values(self) -> Iterable[Surd]:
        yield from self.radicand_entries
        for value, _ in self.rhs_entries:
            yield value

    def radicand(self) -> Surd:
        r = Surd(self.scale)
        for v in self.radicand_entries:
            r = r * (Surd(1) - (v * v).inverse())
        return r

    def rhs_product(self) -> Surd:
        s = Surd(1)
        for value, sign in self.rhs_entries:
            s = s * (Surd(1) + sign * value.inverse())
        return s

    def to_json_dict(self) -> dict:
        return {
            "scale": format_rational(self.scale),
            "radicand": [str(v) for v in self.radicand_entries],
            "rhs": [[str(v), "+" if s > 0 else "-"] for v, s in self.rhs_entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "VariationIdentity":
        return cls(
            scale=parse_rational(data.get("scale", "1")),
            radicand_entries=tuple(parse_surd(v) for v in data["radicand"]),
            rhs_entries=tuple(
                (parse_surd(v), 1 if s == "+" else -1) for v, s in data["rhs"]
            ),
        )

    @classmethod
    def from_json(cls, text: str) -> "VariationIdentity":
        return cls.from_json_dict(json.loads(text))

    @classmethod
    def from_tuple(cls, identity: IdentityTuple) -> "VariationIdentity":
        return cls(
            scale=identity.t,
            radicand_entries=tuple(
                Surd(v) for v in (identity.A, identity.x, identity.y, identity.z)
            ),
            rhs_entries=tuple(
                (Surd(v), 1) for v in (identity.x, identity.y, identity.z)
            ),
        )


def verify_variation(identity: VariationIdentity) -> bool:
    r = identity.radicand()
    s = identity.rhs_product()
    return r.sign() >= 0 and s.sign() >= 0 and r == s * s
