"""Exact Gaussian-rational scalars and square matrices, plus a compact text form.

Scalars are complex numbers whose real and imaginary parts are rational.
Matrices are immutable, dense and square, and hashable through a canonical
string key, so they can serve directly as dictionary keys during group
enumeration.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalarish = Union["GaussianRational", Fraction, int]


class ParseError(ValueError):
    """Raised when scalar or matrix text does not match the expected grammar."""

    def __init__(self, message: str, *, row: int | None = None, col: int | None = None):
        if row is not None and col is not None:
            message = f"{message} (entry row {row}, column {col})"
        super().__init__(message)
        self.row = row
        self.col = col


class GaussianRational:
    """Complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Fraction | int = 0, im: Fraction | int = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __add__(self, other: Scalarish) -> "GaussianRational":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return GaussianRational(self.re + rhs.re, self.im + rhs.im)

    __radd__ = __add__

    def __sub__(self, other: Scalarish) -> "GaussianRational":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return GaussianRational(self.re - rhs.re, self.im - rhs.im)

    def __rsub__(self, other: Scalarish) -> "GaussianRational":
        lhs = _coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Scalarish) -> "GaussianRational":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return GaussianRational(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalarish) -> "GaussianRational":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        norm = rhs.norm2()
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        return GaussianRational(
            (self.re * rhs.re + self.im * rhs.im) / norm,
            (self.im * rhs.re - self.re * rhs.im) / norm,
        )

    def __rtruediv__(self, other: Scalarish) -> "GaussianRational":
        lhs = _coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """Squared modulus, an exact rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def is_imaginary(self) -> bool:
        """True when the real part vanishes (zero counts as imaginary)."""
        return self.re == 0

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"GaussianRational({format_scalar(self)!r})"


def _coerce(value: object) -> GaussianRational | None:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
MINUS_ONE = GaussianRational(-1)
IMAG_UNIT = GaussianRational(0, 1)


class ExactMatrix:
    """Immutable square matrix over Gaussian rationals.

    Multiplication walks only the nonzero entries of each row, which keeps
    products of monomial matrices (one nonzero per row) linear in the
    dimension instead of cubic.
    """

    __slots__ = ("dim", "_rows", "_nz", "_key", "_hash")

    def __init__(self, rows: Iterable[Sequence[Scalarish]]):
        normalized: list[tuple[GaussianRational, ...]] = []
        for row in rows:
            entries = []
            for value in row:
                scalar = _coerce(value)
                if scalar is None:
                    raise TypeError(f"matrix entry {value!r} is not a scalar")
                entries.append(scalar)
            normalized.append(tuple(entries))
        n = len(normalized)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for row in normalized:
            if len(row) != n:
                raise ValueError(f"matrix must be square, got row of length {len(row)} in a {n}-row matrix")
        self.dim = n
        self._rows = tuple(normalized)
        self._nz: tuple[tuple[tuple[int, GaussianRational], ...], ...] | None = None
        self._key: str | None = None
        self._hash: int | None = None

    @classmethod
    def identity(cls, dim: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)])

    def __getitem__(self, index: tuple[int, int]) -> GaussianRational:
        i, j = index
        return self._rows[i][j]

    def rows(self) -> tuple[tuple[GaussianRational, ...], ...]:
        return self._rows

    @property
    def _rows_nonzero(self) -> tuple[tuple[tuple[int, GaussianRational], ...], ...]:
        if self._nz is None:
            self._nz = tuple(
                tuple((j, value) for j, value in enumerate(row) if not value.is_zero())
                for row in self._rows
            )
        return self._nz

    def __mul__(self, other: object) -> "ExactMatrix":
        if isinstance(other, ExactMatrix):
            if other.dim != self.dim:
                raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
            rows_b = other._rows_nonzero
            out: list[list[GaussianRational]] = [[ZERO] * self.dim for _ in range(self.dim)]
            for i, row in enumerate(self._rows_nonzero):
                acc = out[i]
                for k, a in row:
                    for j, b in rows_b[k]:
                        acc[j] = acc[j] + a * b
            return ExactMatrix(out)
        scalar = _coerce(other)
        if scalar is None:
            return NotImplemented
        return self.scale(scalar)

    def __rmul__(self, other: object) -> "ExactMatrix":
        scalar = _coerce(other)
        if scalar is None:
            return NotImplemented
        return self.scale(scalar)

    def scale(self, scalar: Scalarish) -> "ExactMatrix":
        value = _coerce(scalar)
        if value is None:
            raise TypeError(f"{scalar!r} is not a scalar")
        return ExactMatrix([[value * entry for entry in row] for row in self._rows])

    def __neg__(self) -> "ExactMatrix":
        return self.scale(MINUS_ONE)

    def __add__(self, other: object) -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return ExactMatrix(
            [
                [a + b for a, b in zip(row_a, row_b)]
                for row_a, row_b in zip(self._rows, other._rows)
            ]
        )

    def __sub__(self, other: object) -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self + (-other)

    def __pow__(self, exponent: int) -> "ExactMatrix":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ExactMatrix.identity(self.dim)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [[self._rows[j][i] for j in range(self.dim)] for i in range(self.dim)]
        )

    def conjugate(self) -> "ExactMatrix":
        return ExactMatrix([[entry.conjugate() for entry in row] for row in self._rows])

    def adjoint(self) -> "ExactMatrix":
        """Conjugate transpose."""
        return self.transpose().conjugate()

    def trace(self) -> GaussianRational:
        total = ZERO
        for i in range(self.dim):
            total = total + self._rows[i][i]
        return total

    def inverse(self) -> "ExactMatrix":
        """Exact inverse by Gauss-Jordan elimination.

        Raises ValueError for singular matrices.
        """
        n = self.dim
        work = [list(row) for row in self._rows]
        aug = [
            [ONE if i == j else ZERO for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            pivot_row = next(
                (r for r in range(col, n) if not work[r][col].is_zero()), None
            )
            if pivot_row is None:
                raise ValueError("singular matrix")
            work[col], work[pivot_row] = work[pivot_row], work[col]
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
            inv_pivot = ONE / work[col][col]
            work[col] = [inv_pivot * v for v in work[col]]
            aug[col] = [inv_pivot * v for v in aug[col]]
            for r in range(n):
                if r == col or work[r][col].is_zero():
                    continue
                factor = work[r][col]
                work[r] = [v - factor * w for v, w in zip(work[r], work[col])]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
        return ExactMatrix(aug)

    def scalar_value(self) -> GaussianRational | None:
        """The scalar c when the matrix equals c times the identity, else None."""
        diagonal = self._rows[0][0]
        for i in range(self.dim):
            for j in range(self.dim):
                entry = self._rows[i][j]
                if i == j:
                    if entry != diagonal:
                        return None
                elif not entry.is_zero():
                    return None
        return diagonal

    def is_identity(self) -> bool:
        value = self.scalar_value()
        return value is not None and value == ONE

    def key(self) -> str:
        """Canonical bare-form string, usable as a dictionary key."""
        if self._key is None:
            self._key = format_matrix(self, bare=True)
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.dim == other.dim and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __str__(self) -> str:
        return self.key()

    def __repr__(self) -> str:
        return f"ExactMatrix({self.key()!r})"


def block_diag(*blocks: ExactMatrix) -> ExactMatrix:
    """Block-diagonal matrix assembled from square blocks."""
    if not blocks:
        raise ValueError("need at least one block")
    total = sum(block.dim for block in blocks)
    rows = [[ZERO] * total for _ in range(total)]
    offset = 0
    for block in blocks:
        for i in range(block.dim):
            for j in range(block.dim):
                rows[offset + i][offset + j] = block[i, j]
        offset += block.dim
    return ExactMatrix(rows)


_REAL = re.compile(r"-?\d+(?:/\d+)?")
_IMAG = re.compile(r"(-?)(\d+(?:/\d+)?)?i")
_COMBINED = re.compile(r"(-?\d+(?:/\d+)?)([+-])((?:\d+(?:/\d+)?)?)i")


def _fraction(token: str, original: str) -> Fraction:
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {original!r}") from None


def parse_scalar(text: str) -> GaussianRational:
    """Parse one scalar token.

    Accepted forms: a rational ("-3/4"), a rational multiple of i ("i",
    "-i", "3/4i"), or a sum of both with the sign between the parts
    ("1-i", "-1/2+3/4i"). No interior whitespace.
    """
    token = text.strip()
    if not token:
        raise ParseError("empty scalar")
    if _REAL.fullmatch(token):
        return GaussianRational(_fraction(token, text))
    match = _IMAG.fullmatch(token)
    if match:
        magnitude = _fraction(match.group(2), text) if match.group(2) else Fraction(1)
        return GaussianRational(0, -magnitude if match.group(1) else magnitude)
    match = _COMBINED.fullmatch(token)
    if match:
        real = _fraction(match.group(1), text)
        magnitude = _fraction(match.group(3), text) if match.group(3) else Fraction(1)
        imag = -magnitude if match.group(2) == "-" else magnitude
        return GaussianRational(real, imag)
    raise ParseError(f"invalid scalar {text!r}")


def format_scalar(value: GaussianRational) -> str:
    """Canonical text for a scalar: lowest terms, no spaces, zero parts omitted."""
    if value.im == 0:
        return str(value.re)
    magnitude = abs(value.im)
    imag = "i" if magnitude == 1 else f"{magnitude}i"
    if value.re == 0:
        return ("-" + imag) if value.im < 0 else imag
    sign = "-" if value.im < 0 else "+"
    return f"{value.re}{sign}{imag}"


def parse_matrix(text: str, *, expect_dim: int | None = None) -> ExactMatrix:
    """Parse a square matrix from nested-list text.

    Both JSON documents with quoted entries ([["0","-i"],["-i","0"]]) and
    the bare form without quotes ([[0,-i],[-i,0]]) are accepted.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty matrix text")
    rows = _rows_from_json(stripped)
    if rows is None:
        rows = _rows_from_bare(stripped)
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ParseError(
                f"matrix is not square: {n} rows but row {i} has {len(row)} entries"
            )
    if expect_dim is not None and n != expect_dim:
        raise ParseError(f"expected a {expect_dim}x{expect_dim} matrix, got {n}x{n}")
    entries: list[list[GaussianRational]] = []
    for i, row in enumerate(rows):
        out_row: list[GaussianRational] = []
        for j, token in enumerate(row):
            if isinstance(token, bool):
                raise ParseError("matrix entries must be strings or integers", row=i, col=j)
            if isinstance(token, int):
                out_row.append(GaussianRational(token))
                continue
            if not isinstance(token, str):
                raise ParseError("matrix entries must be strings or integers", row=i, col=j)
            try:
                out_row.append(parse_scalar(token))
            except ParseError as exc:
                raise ParseError(str(exc), row=i, col=j) from None
        entries.append(out_row)
    return ExactMatrix(entries)


def _rows_from_json(text: str) -> list | None:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        return None
    if not isinstance(doc, list) or not all(isinstance(row, list) for row in doc):
        raise ParseError("matrix text must be a list of rows")
    return doc


def _rows_from_bare(text: str) -> list[list[str]]:
    if not text.startswith("[") or not text.endswith("]"):
        raise ParseError("matrix text must be wrapped in brackets")
    inner = text[1:-1].strip()
    rows: list[list[str]] = []
    pos = 0
    while pos < len(inner):
        char = inner[pos]
        if char == "[":
            end = inner.find("]", pos)
            if end < 0:
                raise ParseError("unterminated row in matrix text")
            rows.append([token.strip() for token in inner[pos + 1 : end].split(",")])
            pos = end + 1
            while pos < len(inner) and inner[pos] in ", \t\r\n":
                pos += 1
        else:
            raise ParseError(f"unexpected character {char!r} in matrix text")
    if not rows:
        raise ParseError("matrix text has no rows")
    return rows


def format_matrix(matrix: ExactMatrix, *, bare: bool = False) -> str:
    """Canonical text for a matrix, JSON style by default."""
    rows = [
        [format_scalar(matrix[i, j]) for j in range(matrix.dim)]
        for i in range(matrix.dim)
    ]
    if bare:
        return "[" + ",".join("[" + ",".join(row) + "]" for row in rows) + "]"
    return json.dumps(rows, separators=(",", ":"))
