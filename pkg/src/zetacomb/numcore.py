"""Exact scalars and dense one-variable polynomials.

Every quantity in this package is a ``fractions.Fraction``: arithmetic is
exact and canonical (reduced form, positive denominator, unique zero), so
matrix entries can be compared structurally against reference tables.

A :class:`Poly` carries a basis tag because the same function is expanded
here both in powers of x and in powers of (x+1); ``rebase`` converts
between the two without changing the function.
"""
from __future__ import annotations

import dataclasses
import enum
from fractions import Fraction

__all__ = [
    "Basis",
    "Poly",
    "ZeroDenominatorError",
    "rational",
    "parse_rational",
    "format_rational",
]


class ZeroDenominatorError(ValueError):
    """Raised when a rational is constructed with denominator zero."""


def rational(num: int, den: int = 1) -> Fraction:
    """Reduced fraction num/den; the sign ends up on the numerator.

    >>> rational(6, 4)
    Fraction(3, 2)
    >>> rational(0, -7)
    Fraction(0, 1)
    """
    if den == 0:
        raise ZeroDenominatorError(f"denominator must be nonzero (got {num}/0)")
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p", with an optional leading minus.

    Denominator zero is rejected with :class:`ZeroDenominatorError` rather
    than ZeroDivisionError so the CLI can map it to a usage error.
    """
    s = text.strip()
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return rational(int(num), int(den))
        return Fraction(int(s))
    except ValueError as exc:
        if isinstance(exc, ZeroDenominatorError):
            raise
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render as "p/q", or just "p" when the denominator is 1."""
    return str(value)


class Basis(enum.Enum):
    """Which power basis a coefficient vector refers to."""

    MONOMIAL = "monomial"        # powers of x
    SHIFTED = "shifted"          # powers of (x + 1)


def _as_fraction(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def _taylor_shift(coeffs: tuple[Fraction, ...], a: Fraction) -> tuple[Fraction, ...]:
    # coefficients of p(t + a) from those of p(t), by repeated Horner steps
    out = list(coeffs)
    n = len(out)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += a * out[j + 1]
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class Poly:
    """Dense rational polynomial; ``coeffs[j]`` multiplies the j-th basis power.

    Trailing zero coefficients are trimmed on construction, so the zero
    polynomial has an empty coefficient tuple and equality is structural.
    """

    coeffs: tuple[Fraction, ...]
    basis: Basis = Basis.MONOMIAL

    def __post_init__(self) -> None:
        cs = tuple(_as_fraction(c) for c in self.coeffs)
        end = len(cs)
        while end > 0 and cs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", cs[:end])

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def eval(self, x) -> Fraction:
        """Exact value at x, honouring the basis tag.

        >>> Poly((1, 2)).eval(3)
        Fraction(7, 1)
        >>> Poly((1, 2), Basis.SHIFTED).eval(0)
        Fraction(3, 1)
        """
        t = _as_fraction(x)
        if self.basis is Basis.SHIFTED:
            t = t + 1
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def rebase(self, target: Basis) -> Poly:
        """Same function, expressed in the other basis.

        Writing p(x) = sum c_j x^j as sum d_j (x+1)^j amounts to a Taylor
        shift of the coefficient vector by -1 (and by +1 the other way).
        """
        if target is self.basis:
            return self
        shift = Fraction(-1) if target is Basis.SHIFTED else Fraction(1)
        return Poly(_taylor_shift(self.coeffs, shift), target)
