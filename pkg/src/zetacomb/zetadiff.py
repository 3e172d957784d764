"""Hurwitz zeta differences as combinations of hypergeometric polynomials.

The two families of functions:

    F(m, x) = 2^m [zeta(-m, (1+x)/2) - zeta(-m, (2+x)/2)]
    G(m, x) = m! * 2F1(-m, -x; 1; 2)        (terminating, degree m in x)

Both are degree-m polynomials in x, so there is a unique lower-triangular
coefficient matrix (a_{i,j}) with F(i, .) = sum_j a_{i,j} G(j, .) and
diagonal a_{i,i} = 1/2^{i+1}. This module builds the row-coefficient
matrices of F and G in two bases (powers of x, powers of x+1), forms
(a_{i,j}) by four routes that must agree exactly, and cross-checks the
whole construction against direct evaluation of F and G.

Everything is exact; there is no floating point anywhere.
"""
from __future__ import annotations

import dataclasses
import enum
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinat import bernoulli_number, bernoulli_poly, binomial, rising_factorial, stirling1, stirling2
from .numcore import Basis, Poly
from .trimat import LowerTriMatrix, invert_series, invert_substitution, mat_mul

__all__ = [
    "Route",
    "CoeffReport",
    "SignPatternFinding",
    "SignViolation",
    "ExpectedSign",
    "CombinationViolation",
    "VerificationReport",
    "DEFAULT_SAMPLES",
    "hurwitz_zeta_neg",
    "zeta_diff",
    "hyper_poly",
    "zeta_diff_coeffs",
    "hyper_poly_coeffs",
    "combination_matrix",
    "verify_combination",
    "verify_polynomial_forms",
    "scan_sign_pattern",
    "compare_stirling2_matrix",
]

#: Default sample points: integers, a dyadic, and a non-dyadic rational.
DEFAULT_SAMPLES: tuple[Fraction, ...] = (
    Fraction(0),
    Fraction(1, 2),
    Fraction(1),
    Fraction(2),
    Fraction(7, 3),
)


def hurwitz_zeta_neg(m: int, a) -> Fraction:
    """zeta(-m, a) for integer m >= 0, via zeta(-m, a) = -B_{m+1}(a)/(m+1)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return -bernoulli_poly(m + 1, a) / (m + 1)


def zeta_diff(m: int, x) -> Fraction:
    """F(m, x), exactly.

    The closed Bernoulli form is polynomial in x, so any rational x is
    accepted; agreement with the Hurwitz-zeta definition is claimed only
    for x > -1, where both half-arguments stay positive.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    xq = Fraction(x)
    return 2**m * (
        hurwitz_zeta_neg(m, (1 + xq) / 2) - hurwitz_zeta_neg(m, (2 + xq) / 2)
    )


def hyper_poly(m: int, x) -> Fraction:
    """G(m, x) = m! * sum_{k<=m} (-m)_k (-x)_k 2^k / (k!)^2, exactly."""
    if m < 0:
        raise ValueError("m must be >= 0")
    xq = Fraction(x)
    acc = Fraction(0)
    for k in range(m + 1):
        acc += (
            rising_factorial(-m, k)
            * rising_factorial(-xq, k)
            * Fraction(2**k, factorial(k) ** 2)
        )
    return factorial(m) * acc


@lru_cache(maxsize=None)
def zeta_diff_coeffs(m: int, basis: Basis = Basis.MONOMIAL) -> LowerTriMatrix:
    """Row i = coefficients of F(i, x) in the requested basis; dim m+1.

    Monomial basis:
        entry(i, j) = (2^i/(i+1)) sum_{k=j}^{i} C(i+1,k+1) C(k+1,j)
                      (2^{k-j+1}-1)/2^{k+1} B_{i-k}
    Shifted basis (powers of x+1):
        entry(i, j) = sum_{k=0}^{i-j} C(i,k) 2^{k-1} B_k/(i-k+1) C(i-k+1,j)

    The diagonal is 1/2 in both bases.
    """
    if m < 0:
        raise ValueError("m must be >= 0")

    if basis is Basis.MONOMIAL:

        def entry(i: int, j: int) -> Fraction:
            acc = Fraction(0)
            for k in range(j, i + 1):
                acc += (
                    binomial(i + 1, k + 1)
                    * binomial(k + 1, j)
                    * Fraction(2 ** (k - j + 1) - 1, 2 ** (k + 1))
                    * bernoulli_number(i - k)
                )
            return Fraction(2**i, i + 1) * acc

    else:

        def entry(i: int, j: int) -> Fraction:
            acc = Fraction(0)
            for k in range(i - j + 1):
                acc += (
                    binomial(i, k)
                    * Fraction(2) ** (k - 1)
                    * bernoulli_number(k)
                    / (i - k + 1)
                    * binomial(i - k + 1, j)
                )
            return acc

    return LowerTriMatrix.from_func(m + 1, entry)


@lru_cache(maxsize=None)
def hyper_poly_coeffs(m: int, basis: Basis = Basis.MONOMIAL) -> LowerTriMatrix:
    """Row i = coefficients of G(i, x) in the requested basis; dim m+1.

    Monomial basis:
        entry(i, j) = sum_{k=j}^{i} 2^k (i-k)! C(i,k)^2 s(k, j)
    Shifted basis:
        entry(i, j) = sum_{k=j}^{i} 2^k (i-k)! C(i,k)^2 s(k+1, j+1)

    The diagonal is 2^i in both bases, so these matrices are always
    invertible.
    """
    if m < 0:
        raise ValueError("m must be >= 0")

    def entry(i: int, j: int) -> Fraction:
        acc = 0
        for k in range(j, i + 1):
            s = stirling1(k, j) if basis is Basis.MONOMIAL else stirling1(k + 1, j + 1)
            acc += 2**k * factorial(i - k) * binomial(i, k) ** 2 * s
        return Fraction(acc)

    return LowerTriMatrix.from_func(m + 1, entry)


class Route(enum.Enum):
    """How the combination matrix is assembled.

    The first word names the basis pair; a "-series" suffix means the
    G-coefficient matrix is inverted by the finite Neumann series instead
    of forward substitution. All four routes must agree exactly.
    """

    MONOMIAL = "monomial"
    SHIFTED = "shifted"
    MONOMIAL_SERIES = "monomial-series"
    SHIFTED_SERIES = "shifted-series"


@dataclasses.dataclass(frozen=True)
class CoeffReport:
    """The combination matrix plus which route produced it."""

    m: int
    route: Route
    matrix: LowerTriMatrix

    def __post_init__(self) -> None:
        for i in range(self.matrix.dim):
            if self.matrix.get(i, i) != Fraction(1, 2 ** (i + 1)):
                raise ValueError(f"diagonal entry {i} must be 1/2^{i + 1}")

    def to_json_dict(self) -> dict:
        return {"m": self.m, "route": self.route.value, "matrix": self.matrix.to_json_dict()}

    @classmethod
    def from_json_dict(cls, data: dict) -> CoeffReport:
        return cls(
            m=data["m"],
            route=Route(data["route"]),
            matrix=LowerTriMatrix.from_json_dict(data["matrix"]),
        )


@lru_cache(maxsize=None)
def combination_matrix(m: int, route: Route = Route.MONOMIAL) -> CoeffReport:
    """The unique (a_{i,j}) with F(i, .) = sum_j a_{i,j} G(j, .), dim m+1."""
    basis = (
        Basis.MONOMIAL
        if route in (Route.MONOMIAL, Route.MONOMIAL_SERIES)
        else Basis.SHIFTED
    )
    invert = (
        invert_series
        if route in (Route.MONOMIAL_SERIES, Route.SHIFTED_SERIES)
        else invert_substitution
    )
    f_rows = zeta_diff_coeffs(m, basis)
    g_rows = hyper_poly_coeffs(m, basis)
    return CoeffReport(m=m, route=route, matrix=mat_mul(f_rows, invert(g_rows)))


@dataclasses.dataclass(frozen=True)
class CombinationViolation:
    row: int
    sample: Fraction
    residual: Fraction


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    """Residuals of F(i, x) - sum_j a_{i,j} G(j, x) over rows and samples."""

    m: int
    samples: tuple[Fraction, ...]
    passed: bool
    violations: tuple[CombinationViolation, ...]

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "samples": [str(s) for s in self.samples],
            "pass": self.passed,
            "violations": [
                {"row": v.row, "sample": str(v.sample), "residual": str(v.residual)}
                for v in self.violations
            ],
        }


def verify_combination(
    m: int,
    samples: tuple[Fraction, ...] = DEFAULT_SAMPLES,
    matrix: LowerTriMatrix | None = None,
) -> VerificationReport:
    """Check the combination identity row by row at the given sample points.

    F and G are evaluated directly (Bernoulli closed form, terminating
    hypergeometric sum), independently of how the matrix was built. Pass
    means every residual is exactly zero. A matrix may be injected to
    check external tables; by default the monomial route is used.
    """
    if not samples:
        raise ValueError("samples must be nonempty")
    samples = tuple(Fraction(s) for s in samples)
    mat = matrix if matrix is not None else combination_matrix(m).matrix
    g_at = {
        (j, x): hyper_poly(j, x) for j in range(mat.dim) for x in samples
    }
    violations = []
    for i in range(mat.dim):
        for x in samples:
            combo = sum((mat.get(i, j) * g_at[j, x] for j in range(i + 1)), Fraction(0))
            residual = zeta_diff(i, x) - combo
            if residual != 0:
                violations.append(CombinationViolation(i, x, residual))
    return VerificationReport(
        m=m, samples=samples, passed=not violations, violations=tuple(violations)
    )


def verify_polynomial_forms(
    m: int,
    matrices: tuple[LowerTriMatrix, LowerTriMatrix, LowerTriMatrix, LowerTriMatrix] | None = None,
) -> bool:
    """Tie the closed-form coefficient rows to the direct evaluators.

    Checks, at 2m+3 distinct rational points: rows of the monomial-basis
    matrices evaluate to F resp. G; same for the shifted-basis matrices;
    and rebasing a shifted row reproduces the monomial row exactly.
    ``matrices`` may inject (F_mono, G_mono, F_shift, G_shift) tables.
    """
    if matrices is None:
        matrices = (
            zeta_diff_coeffs(m, Basis.MONOMIAL),
            hyper_poly_coeffs(m, Basis.MONOMIAL),
            zeta_diff_coeffs(m, Basis.SHIFTED),
            hyper_poly_coeffs(m, Basis.SHIFTED),
        )
    f_mono, g_mono, f_shift, g_shift = matrices
    points = [Fraction(t - m - 1, 3) for t in range(2 * m + 3)]
    for i in range(m + 1):
        fm = Poly(f_mono.row(i), Basis.MONOMIAL)
        gm = Poly(g_mono.row(i), Basis.MONOMIAL)
        fs = Poly(f_shift.row(i), Basis.SHIFTED)
        gs = Poly(g_shift.row(i), Basis.SHIFTED)
        for x in points:
            fx, gx = zeta_diff(i, x), hyper_poly(i, x)
            if fm.eval(x) != fx or fs.eval(x) != fx:
                return False
            if gm.eval(x) != gx or gs.eval(x) != gx:
                return False
        if fs.rebase(Basis.MONOMIAL) != fm or gs.rebase(Basis.MONOMIAL) != gm:
            return False
    return True


class ExpectedSign(enum.Enum):
    ZERO = "zero"
    NEGATIVE = "negative"
    POSITIVE = "positive"


@dataclasses.dataclass(frozen=True)
class SignViolation:
    i: int
    j: int
    value: Fraction
    expected: ExpectedSign


@dataclasses.dataclass(frozen=True)
class SignPatternFinding:
    """Below-diagonal sign classification of the combination matrix.

    Empirical pattern, by i-j: zero when odd, negative when = 2 mod 4,
    positive when = 0 mod 4. Verified for max_m <= 9; beyond that the
    scan is exploratory and its outcome is reported, not assumed.
    """

    max_m: int
    checked: int
    violations: tuple[SignViolation, ...]

    def to_json_dict(self) -> dict:
        return {
            "max_m": self.max_m,
            "checked": self.checked,
            "violations": [
                {"i": v.i, "j": v.j, "value": str(v.value), "expected": v.expected.value}
                for v in self.violations
            ],
        }


def _expected_sign(i: int, j: int) -> ExpectedSign:
    d = i - j
    if d % 2 == 1:
        return ExpectedSign.ZERO
    return ExpectedSign.NEGATIVE if d % 4 == 2 else ExpectedSign.POSITIVE


def scan_sign_pattern(
    max_m: int, matrix: LowerTriMatrix | None = None
) -> SignPatternFinding:
    """Classify every strictly below-diagonal entry against the sign pattern."""
    if max_m < 0:
        raise ValueError("max_m must be >= 0")
    mat = matrix if matrix is not None else combination_matrix(max_m).matrix
    checked = 0
    violations = []
    for i in range(mat.dim):
        for j in range(i):
            checked += 1
            value = mat.get(i, j)
            expected = _expected_sign(i, j)
            ok = (
                value == 0
                if expected is ExpectedSign.ZERO
                else value < 0
                if expected is ExpectedSign.NEGATIVE
                else value > 0
            )
            if not ok:
                violations.append(SignViolation(i, j, value, expected))
    return SignPatternFinding(max_m=max_m, checked=checked, violations=tuple(violations))


def compare_stirling2_matrix(m: int) -> tuple[int, int] | None:
    """First (row-major) index where the combination matrix differs from
    the candidate (-1)^j S(i+1, j+1) / 2^{j+1}, or None if they coincide.

    The two matrices share every diagonal entry and every weighted row
    sum with factorial weights, yet differ somewhere for every m >= 1;
    at m = 0 both are [[1/2]].
    """
    mat = combination_matrix(m).matrix
    for i in range(mat.dim):
        for j in range(i + 1):
            candidate = Fraction((-1) ** j * stirling2(i + 1, j + 1), 2 ** (j + 1))
            if mat.get(i, j) != candidate:
                return (i, j)
    return None
