"""Exact lower-triangular matrix algebra.

Matrices are stored packed row-major (row i holds columns 0..i), so the
zero upper triangle is unrepresentable rather than merely asserted.
Two independent inverses are provided: forward substitution, and the
finite Neumann-style series built on the split M = D + L with L strictly
lower (L is nilpotent, so the alternating series of powers of D^{-1}L
terminates after at most dim-1 terms).
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Callable, Iterable, Sequence

__all__ = [
    "LowerTriMatrix",
    "DiagPlusStrictSplit",
    "DimensionMismatchError",
    "SingularDiagonalError",
    "mat_mul",
    "invert_substitution",
    "invert_series",
    "split_diag_strict",
]


class DimensionMismatchError(ValueError):
    """Operands have different dimensions."""


class SingularDiagonalError(ValueError):
    """A zero diagonal entry makes the matrix non-invertible."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"zero diagonal entry at index {index}")


def _as_fraction(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclasses.dataclass(frozen=True)
class LowerTriMatrix:
    """Immutable lower-triangular rational matrix, packed row-major.

    ``entries`` has length dim*(dim+1)//2; ``entries[i*(i+1)//2 + j]`` is
    the (i, j) entry for j <= i. Entries above the diagonal are zero by
    construction and not stored.
    """

    dim: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        packed = tuple(_as_fraction(e) for e in self.entries)
        if len(packed) != self.dim * (self.dim + 1) // 2:
            raise ValueError(
                f"need {self.dim * (self.dim + 1) // 2} packed entries, got {len(packed)}"
            )
        object.__setattr__(self, "entries", packed)

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable]) -> LowerTriMatrix:
        """Build from triangular rows; row i must hold exactly i+1 entries."""
        packed: list[Fraction] = []
        for i, row in enumerate(rows):
            row = tuple(row)
            if len(row) != i + 1:
                raise ValueError(f"row {i} must have {i + 1} entries, got {len(row)}")
            packed.extend(row)
        return cls(len(rows), tuple(packed))

    @classmethod
    def from_func(cls, dim: int, fn: Callable[[int, int], Fraction]) -> LowerTriMatrix:
        return cls(dim, tuple(fn(i, j) for i in range(dim) for j in range(i + 1)))

    @classmethod
    def identity(cls, dim: int) -> LowerTriMatrix:
        return cls.from_func(dim, lambda i, j: Fraction(1 if i == j else 0))

    @classmethod
    def diagonal(cls, values: Sequence) -> LowerTriMatrix:
        vals = [_as_fraction(v) for v in values]
        return cls.from_func(len(vals), lambda i, j: vals[i] if i == j else Fraction(0))

    def get(self, i: int, j: int) -> Fraction:
        """Entry (i, j) of the full square matrix (zero above the diagonal)."""
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexError(f"index ({i}, {j}) out of range for dim {self.dim}")
        if j > i:
            return Fraction(0)
        return self.entries[i * (i + 1) // 2 + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        """Packed row i (the first i+1 columns)."""
        start = i * (i + 1) // 2
        return self.entries[start : start + i + 1]

    def rows(self) -> list[tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.dim)]

    def diagonal_entries(self) -> tuple[Fraction, ...]:
        return tuple(self.get(i, i) for i in range(self.dim))

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def __add__(self, other: LowerTriMatrix) -> LowerTriMatrix:
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dims {self.dim} and {other.dim}")
        return LowerTriMatrix(
            self.dim, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: LowerTriMatrix) -> LowerTriMatrix:
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dims {self.dim} and {other.dim}")
        return LowerTriMatrix(
            self.dim, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __matmul__(self, other: LowerTriMatrix) -> LowerTriMatrix:
        return mat_mul(self, other)

    def to_json_dict(self) -> dict:
        """{"dim": n, "rows": [...]} with entries as "p/q" strings."""
        return {
            "dim": self.dim,
            "rows": [[str(e) for e in self.row(i)] for i in range(self.dim)],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> LowerTriMatrix:
        rows = [tuple(Fraction(e) for e in row) for row in data["rows"]]
        m = cls.from_rows(rows)
        if m.dim != data["dim"]:
            raise ValueError(f"dim field {data['dim']} does not match {m.dim} rows")
        return m

    def to_csv(self) -> str:
        """Full square grid, explicit "0" above the diagonal, one row per line."""
        lines = []
        for i in range(self.dim):
            lines.append(",".join(str(self.get(i, j)) for j in range(self.dim)))
        return "\n".join(lines) + "\n"


@dataclasses.dataclass(frozen=True)
class DiagPlusStrictSplit:
    """A matrix decomposed as diagonal part + strictly lower part."""

    diag: tuple[Fraction, ...]
    strict: LowerTriMatrix

    def recombine(self) -> LowerTriMatrix:
        d = LowerTriMatrix.diagonal(self.diag)
        return d + self.strict


def mat_mul(a: LowerTriMatrix, b: LowerTriMatrix) -> LowerTriMatrix:
    """Exact product; lower-triangular times lower-triangular stays lower."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dims {a.dim} and {b.dim}")
    n = a.dim

    def entry(i: int, j: int) -> Fraction:
        return sum((a.get(i, k) * b.get(k, j) for k in range(j, i + 1)), Fraction(0))

    return LowerTriMatrix.from_func(n, entry)


def _require_invertible(m: LowerTriMatrix) -> None:
    for i in range(m.dim):
        if m.get(i, i) == 0:
            raise SingularDiagonalError(i)


def invert_substitution(m: LowerTriMatrix) -> LowerTriMatrix:
    """Inverse by forward substitution, solving M X = I column by column."""
    _require_invertible(m)
    n = m.dim
    out = [[Fraction(0)] * (i + 1) for i in range(n)]
    for j in range(n):
        out[j][j] = 1 / m.get(j, j)
        for i in range(j + 1, n):
            acc = Fraction(0)
            for k in range(j, i):
                acc += m.get(i, k) * out[k][j]
            out[i][j] = -acc / m.get(i, i)
    return LowerTriMatrix.from_rows([tuple(r) for r in out])


def invert_series(m: LowerTriMatrix) -> LowerTriMatrix:
    """Inverse via the finite alternating series on the D + L split.

    With N = D^{-1} L strictly lower (hence N^dim = 0),
    M^{-1} = [I + sum_{k>=1} (-1)^k N^k] D^{-1}.
    """
    _require_invertible(m)
    n = m.dim
    split = split_diag_strict(m)
    d_inv = LowerTriMatrix.diagonal([1 / d for d in split.diag])
    nmat = mat_mul(d_inv, split.strict)
    total = LowerTriMatrix.identity(n)
    power = LowerTriMatrix.identity(n)
    for k in range(1, n):
        power = mat_mul(power, nmat)
        if power.is_zero():
            break
        total = total - power if k % 2 else total + power
    return mat_mul(total, d_inv)


def split_diag_strict(m: LowerTriMatrix) -> DiagPlusStrictSplit:
    """Split into diagonal and strictly-lower parts; recombining round-trips."""
    diag = m.diagonal_entries()
    strict = LowerTriMatrix.from_func(
        m.dim, lambda i, j: m.get(i, j) if i != j else Fraction(0)
    )
    return DiagPlusStrictSplit(diag, strict)
