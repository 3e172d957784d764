"""Dirichlet eta at nonpositive integers, by three independent routes.

eta(-m) is reached (1) through eta(z) = (1 - 2^{1-z}) zeta(z) with the
Bernoulli closed form of zeta at negative integers, (2) as the weighted
row sum sum_j a_{m,j} j! of the combination matrix (F(m, 0) = eta(-m) and
G(j, 0) = j!), and (3) as an alternating Stirling-second-kind sum. The
three must agree exactly; any mismatch is an implementation bug and is
raised, never returned.
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from math import factorial

from .combinat import bernoulli_poly, stirling2
from .zetadiff import combination_matrix

__all__ = [
    "EtaTriple",
    "RouteDisagreementError",
    "eta_via_zeta",
    "eta_via_coeff_row",
    "eta_via_stirling2",
    "eta_one_minus_n",
    "eta_cross_check",
    "to_json_rows",
]


class RouteDisagreementError(ArithmeticError):
    """Two eta routes returned different values for the same m."""

    def __init__(self, m: int, values: dict[str, Fraction]):
        self.m = m
        self.values = values
        detail = ", ".join(f"{name}={value}" for name, value in sorted(values.items()))
        super().__init__(f"eta routes disagree at m={m}: {detail}")


@dataclasses.dataclass(frozen=True)
class EtaTriple:
    """eta(-m) computed three ways; agreement is the whole point."""

    m: int
    via_zeta: Fraction
    via_coeff_rows: Fraction
    via_stirling2: Fraction

    @property
    def routes_agree(self) -> bool:
        return self.via_zeta == self.via_coeff_rows == self.via_stirling2


def eta_via_zeta(m: int) -> Fraction:
    """eta(-m) = (1 - 2^{m+1}) zeta(-m), zeta(-m) = -B_{m+1}(1)/(m+1).

    Using the Bernoulli polynomial at 1 covers m = 0 with the same
    formula (eta(0) = 1/2 falls out, no special case).
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    zeta_neg_m = -bernoulli_poly(m + 1, 1) / (m + 1)
    return (1 - 2 ** (m + 1)) * zeta_neg_m


def eta_via_coeff_row(m: int) -> Fraction:
    """Weighted row sum: eta(-m) = sum_j a_{m,j} j!."""
    if m < 0:
        raise ValueError("m must be >= 0")
    row = combination_matrix(m).matrix.row(m)
    return sum((a * factorial(j) for j, a in enumerate(row)), Fraction(0))


def eta_via_stirling2(m: int) -> Fraction:
    """eta(-m) = sum_{j=0}^{m} (-1)^j / 2^{j+1} * S(m+1, j+1) * j!."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return sum(
        (
            Fraction((-1) ** j, 2 ** (j + 1)) * stirling2(m + 1, j + 1) * factorial(j)
            for j in range(m + 1)
        ),
        Fraction(0),
    )


def eta_one_minus_n(n: int) -> Fraction:
    """eta(1-n) = sum_{k=1}^{n} (-1)^{k-1} (k-1)!/2^k * S(n, k), n >= 1.

    The same sum as :func:`eta_via_stirling2` indexed by n = m + 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(
        (
            Fraction((-1) ** (k - 1) * factorial(k - 1), 2**k) * stirling2(n, k)
            for k in range(1, n + 1)
        ),
        Fraction(0),
    )


def eta_cross_check(max_m: int) -> list[EtaTriple]:
    """Triples for 0 <= m <= max_m; raises on any route disagreement."""
    if max_m < 0:
        raise ValueError("max_m must be >= 0")
    triples = []
    for m in range(max_m + 1):
        triple = EtaTriple(
            m=m,
            via_zeta=eta_via_zeta(m),
            via_coeff_rows=eta_via_coeff_row(m),
            via_stirling2=eta_via_stirling2(m),
        )
        if not triple.routes_agree:
            raise RouteDisagreementError(
                m,
                {
                    "via_zeta": triple.via_zeta,
                    "via_coeff_rows": triple.via_coeff_rows,
                    "via_stirling2": triple.via_stirling2,
                },
            )
        triples.append(triple)
    return triples


def to_json_rows(triples: list[EtaTriple]) -> list[dict]:
    """[{"m": m, "eta": "p/q", "routes_agree": true}, ...] for export."""
    return [
        {"m": t.m, "eta": str(t.via_zeta), "routes_agree": t.routes_agree}
        for t in triples
    ]
