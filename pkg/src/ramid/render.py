"""LaTeX and plain-text display forms for identities.

One display equation per identity: the radicand factors in stored order under
a single square root, the signed product on the right.  Values render as
integers, \\frac for non-integer rationals, and p + q\\sqrt{d} for surds;
negative right-side values always display as subtraction, e.g. (1 - 1/45).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PreconditionError
from .exact import Surd
from .identity import IdentityTuple, VariationIdentity, verify_tuple, verify_variation

_ONE = Fraction(1)


def _latex_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return rf"{sign}\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def _latex_surd(value: Surd) -> str:
    if value.is_rational:
        return _latex_rational(value.p)
    root = rf"\sqrt{{{value.d}}}"
    q = abs(value.q)
    coeff = "" if q == 1 else _latex_rational(q)
    tail = f"{coeff}{root}"
    if value.p == 0:
        return tail if value.q > 0 else f"-{tail}"
    op = "+" if value.q > 0 else "-"
    return f"{_latex_rational(value.p)}{op}{tail}"


def _latex_squared_denominator(value: Surd) -> str:
    # (1 - 1/v^2) denominators: integers square bare, everything else in parens.
    if value.is_rational and value.p.denominator == 1:
        return f"{value.p.numerator}^2"
    return rf"\left({_latex_surd(value)}\right)^2"


def _latex_radicand_factor(value: Surd) -> str:
    return rf"\left(1-\frac{{1}}{{{_latex_squared_denominator(value)}}}\right)"


def _latex_rhs_factor(value: Surd, sign: int) -> str:
    op = "+" if sign > 0 else "-"
    if value.is_rational and value.p.denominator == 1:
        denom = str(value.p.numerator)
    else:
        denom = _latex_surd(value)
    return rf"\left(1{op}\frac{{1}}{{{denom}}}\right)"


def _text_value(value: Surd) -> str:
    if value.is_rational:
        return str(value.p)
    return f"({value})"


def _as_variation(identity: IdentityTuple | VariationIdentity) -> VariationIdentity:
    if isinstance(identity, IdentityTuple):
        return VariationIdentity.from_tuple(identity)
    return identity


def _verified(identity: IdentityTuple | VariationIdentity) -> bool:
    if isinstance(identity, IdentityTuple):
        return verify_tuple(identity)
    return verify_variation(identity)


def _require_verified(
    identity: IdentityTuple | VariationIdentity, unchecked: bool
) -> None:
    if not unchecked and not _verified(identity):
        raise PreconditionError(
            "identity does not verify; pass unchecked to render anyway"
        )


def render_latex(
    identity: IdentityTuple | VariationIdentity, unchecked: bool = False
) -> str:
    _require_verified(identity, unchecked)
    variation = _as_variation(identity)
    scale = "" if variation.scale == _ONE else _latex_rational(variation.scale)
    radicand = scale + "".join(
        _latex_radicand_factor(v) for v in variation.radicand_entries
    )
    rhs = "".join(_latex_rhs_factor(v, s) for v, s in variation.rhs_entries)
    return rf"\sqrt{{{radicand}}} = {rhs}"


def render_text(
    identity: IdentityTuple | VariationIdentity, unchecked: bool = False
) -> str:
    _require_verified(identity, unchecked)
    variation = _as_variation(identity)
    factors = [f"(1 - 1/{_text_value(v)}^2)" for v in variation.radicand_entries]
    if variation.scale != 1:
        factors.insert(0, str(variation.scale))
    rhs = " * ".join(
        f"(1 {'+' if s > 0 else '-'} 1/{_text_value(v)})"
        for v, s in variation.rhs_entries
    )
    return f"sqrt({' * '.join(factors)}) = {rhs}"
