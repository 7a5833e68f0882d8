"""Exact and floating-point vector arithmetic for cross-product experiments.

Vectors carry a scalar mode: ``exact`` coordinates are ``fractions.Fraction``
values (arbitrary precision, always in lowest terms with positive
denominator), ``double`` coordinates are Python floats.  The two modes never
mix: any binary operation on vectors of different modes raises, so a chain of
exact computations can never be silently contaminated by rounding.

All products that act on concrete coordinates live here: the dot product, the
right-hand-rule product on R^3, the explicit 42-term product on R^7, the
zero-padded extension of the 3D product to R^n, the (n-1)-ary formal
determinant product, and the bilinear extension of a basis multiplication
table.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[Fraction, float]

EXACT = "exact"
DOUBLE = "double"

# Absolute tolerance for user-facing double-mode comparisons. Exact-mode
# comparisons never use a tolerance.
FLOAT_EQ_TOL = 1e-9

# Cofactor expansion of the determinant product is O(2^n) even with shared
# minors; this is a desk-scale tool.
MAX_DET_DIM = 12

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def _coerce_exact(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        token = value.strip()
        if not _RATIONAL_RE.match(token):
            raise ValueError(
                f"exact mode expects an integer or p/q literal, got {value!r}"
            )
        return Fraction(token)
    raise ValueError(f"cannot use {value!r} as an exact rational coordinate")


def _coerce_double(value) -> float:
    if isinstance(value, float):
        return value
    if isinstance(value, int):
        return float(value)
    if isinstance(value, str):
        token = value.strip()
        if "/" in token:
            raise ValueError(
                f"double mode expects a decimal literal, got {value!r}"
            )
        return float(token)
    raise ValueError(f"cannot use {value!r} as a double coordinate")


def zero_scalar(mode: str) -> Scalar:
    return Fraction(0) if mode == EXACT else 0.0


class Vector:
    """A dense coordinate vector with a fixed scalar mode.

    Instances are immutable; every operation returns a new vector.  Internal
    storage is 0-indexed, while documentation and CLI output number
    coordinates from 1 (so ``unit(n, 1)`` is e1).
    """

    __slots__ = ("coords", "mode")

    def __init__(self, values: Iterable, mode: str = EXACT):
        if mode not in (EXACT, DOUBLE):
            raise ValueError(f"unknown scalar mode {mode!r}")
        coerce = _coerce_exact if mode == EXACT else _coerce_double
        coords = tuple(coerce(v) for v in values)
        if not coords:
            raise ValueError("a vector needs at least one coordinate")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @classmethod
    def exact(cls, values: Iterable) -> "Vector":
        return cls(values, EXACT)

    @classmethod
    def double(cls, values: Iterable) -> "Vector":
        return cls(values, DOUBLE)

    @classmethod
    def unit(cls, dim: int, i: int, mode: str = EXACT) -> "Vector":
        """The standard basis vector e_i of R^dim (i is 1-indexed)."""
        if not 1 <= i <= dim:
            raise ValueError(f"unit index {i} out of range 1..{dim}")
        one = Fraction(1) if mode == EXACT else 1.0
        zero = zero_scalar(mode)
        return cls((one if j == i else zero for j in range(1, dim + 1)), mode)

    @classmethod
    def zeros(cls, dim: int, mode: str = EXACT) -> "Vector":
        if dim < 1:
            raise ValueError(f"dimension must be positive, got {dim}")
        return cls((zero_scalar(mode) for _ in range(dim)), mode)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.mode == other.mode and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.mode, self.coords))

    def __repr__(self) -> str:
        return f"Vector([{', '.join(str(c) for c in self.coords)}], mode={self.mode!r})"

    def __str__(self) -> str:
        return format_vector(self)

    def __add__(self, other: "Vector") -> "Vector":
        _check_pair(self, other, "+")
        return Vector((a + b for a, b in zip(self.coords, other.coords)), self.mode)

    def __sub__(self, other: "Vector") -> "Vector":
        _check_pair(self, other, "-")
        return Vector((a - b for a, b in zip(self.coords, other.coords)), self.mode)

    def __neg__(self) -> "Vector":
        return Vector((-a for a in self.coords), self.mode)

    def scaled(self, c: Scalar) -> "Vector":
        """Scalar multiple c*self; c must belong to the vector's mode."""
        if self.mode == EXACT:
            if isinstance(c, float):
                raise ValueError("cannot scale an exact vector by a float")
            c = _coerce_exact(c)
        else:
            if isinstance(c, Fraction):
                raise ValueError("cannot scale a double vector by a Fraction")
            c = float(c)
        return Vector((c * a for a in self.coords), self.mode)

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def approx_eq(self, other: "Vector", tol: float = FLOAT_EQ_TOL) -> bool:
        """Absolute-tolerance comparison for double mode; exact otherwise."""
        _check_pair(self, other, "approx_eq")
        if self.mode == EXACT:
            return self.coords == other.coords
        return all(abs(a - b) <= tol for a, b in zip(self.coords, other.coords))


def _check_pair(u: Vector, v: Vector, op: str) -> None:
    if u.mode != v.mode:
        raise ValueError(
            f"{op}: mixed scalar modes ({u.mode} vs {v.mode}); convert explicitly"
        )
    if u.dim != v.dim:
        raise ValueError(f"{op}: dimension mismatch ({u.dim} vs {v.dim})")


def parse_vector(text: str, mode: str = EXACT) -> Vector:
    """Parse a comma-separated literal such as ``1,-2/3,0``.

    Exact mode accepts integer and p/q tokens; double mode accepts decimal
    literals (including scientific notation).
    """
    tokens = [t.strip() for t in text.split(",")]
    if any(not t for t in tokens):
        raise ValueError(f"malformed vector literal {text!r}")
    return Vector(tokens, mode)


def format_vector(v: Vector) -> str:
    if v.mode == EXACT:
        return ",".join(str(c) for c in v.coords)
    return ",".join(repr(c) for c in v.coords)


def dot(u: Vector, v: Vector) -> Scalar:
    """Standard inner product sum(u_i * v_i)."""
    _check_pair(u, v, "dot")
    total = zero_scalar(u.mode)
    for a, b in zip(u.coords, v.coords):
        total += a * b
    return total


def cross3(u: Vector, v: Vector) -> Vector:
    """Right-hand-rule product on R^3."""
    _check_pair(u, v, "cross3")
    if u.dim != 3:
        raise ValueError(f"cross3 needs 3-dimensional vectors, got dim {u.dim}")
    x1, x2, x3 = u.coords
    y1, y2, y3 = v.coords
    return Vector(
        (x2 * y3 - x3 * y2, x3 * y1 - x1 * y3, x1 * y2 - x2 * y1), u.mode
    )


def cross7(u: Vector, v: Vector) -> Vector:
    """The distinguished bilinear product on R^7, fully unrolled.

    Agrees coordinate-for-coordinate with the bilinear extension of the
    7x7 basis table at level k=2 (tested exhaustively and on random pairs).
    """
    _check_pair(u, v, "cross7")
    if u.dim != 7:
        raise ValueError(f"cross7 needs 7-dimensional vectors, got dim {u.dim}")
    x1, x2, x3, x4, x5, x6, x7 = u.coords
    y1, y2, y3, y4, y5, y6, y7 = v.coords
    return Vector(
        (
            -x3 * y2 + x2 * y3 - x5 * y4 + x4 * y5 - x6 * y7 + x7 * y6,
            -x1 * y3 + x3 * y1 - x6 * y4 + x4 * y6 - x7 * y5 + x5 * y7,
            -x2 * y1 + x1 * y2 - x7 * y4 + x4 * y7 - x5 * y6 + x6 * y5,
            -x1 * y5 + x5 * y1 - x2 * y6 + x6 * y2 - x3 * y7 + x7 * y3,
            -x4 * y1 + x1 * y4 - x2 * y7 + x7 * y2 - x6 * y3 + x3 * y6,
            -x7 * y1 + x1 * y7 - x4 * y2 + x2 * y4 - x3 * y5 + x5 * y3,
            -x5 * y2 + x2 * y5 - x4 * y3 + x3 * y4 - x1 * y6 + x6 * y1,
        ),
        u.mode,
    )


def padded_cross(u: Vector, v: Vector) -> Vector:
    """3D product of the first three coordinates, zero-padded to dim n.

    Satisfies the perpendicular and bilinear axioms in every dimension but
    loses the Pythagorean identity as soon as n >= 4.
    """
    _check_pair(u, v, "padded_cross")
    if u.dim < 3:
        raise ValueError(f"padded_cross needs dim >= 3, got {u.dim}")
    head = cross3(Vector(u.coords[:3], u.mode), Vector(v.coords[:3], v.mode))
    zero = zero_scalar(u.mode)
    return Vector(head.coords + tuple(zero for _ in range(u.dim - 3)), u.mode)


def det_product(rows: Sequence[Vector]) -> Vector:
    """Formal determinant product of n-1 vectors in R^n.

    Expansion along a symbolic first row e_1..e_n: the m-th coordinate is
    (-1)**(1+m) times the minor with column m deleted.  The result is
    perpendicular to every input row (a determinant with a repeated row
    vanishes).  Minors are evaluated by recursive cofactor expansion with
    shared sub-minors, exact in rational mode.
    """
    rows = list(rows)
    if not rows:
        raise ValueError("det_product needs at least one row vector")
    n = rows[0].dim
    mode = rows[0].mode
    for r in rows[1:]:
        _check_pair(rows[0], r, "det_product")
    if len(rows) != n - 1:
        raise ValueError(
            f"det_product in dim {n} needs exactly {n - 1} rows, got {len(rows)}"
        )
    if n < 2:
        raise ValueError("det_product needs dimension >= 2")
    if n > MAX_DET_DIM:
        raise ValueError(f"det_product supports dim <= {MAX_DET_DIM}, got {n}")

    grid = [r.coords for r in rows]
    minors: dict = {}

    def minor_det(r: int, cols: tuple) -> Scalar:
        # Determinant of grid rows r.. restricted to the given columns.
        if not cols:
            return Fraction(1) if mode == EXACT else 1.0
        key = (r, cols)
        cached = minors.get(key)
        if cached is not None:
            return cached
        total = zero_scalar(mode)
        row = grid[r]
        for t, c in enumerate(cols):
            a = row[c]
            if not a:
                continue
            sub = minor_det(r + 1, cols[:t] + cols[t + 1 :])
            total = total + a * sub if t % 2 == 0 else total - a * sub
        minors[key] = total
        return total

    out = []
    all_cols = tuple(range(n))
    for m in range(n):
        cols = all_cols[:m] + all_cols[m + 1 :]
        value = minor_det(0, cols)
        out.append(value if m % 2 == 0 else -value)
    return Vector(out, mode)


def table_product(table, u: Vector, v: Vector) -> Vector:
    """Bilinear extension of a basis multiplication table to all of R^n.

    ``table`` is any object exposing ``n`` and 1-indexed ``entry(i, j)``
    returning a signed basis cell (``sign``/``index``/``is_zero``).  Zero
    coordinates are skipped, so products of sparse vectors cost only the
    nonzero support.
    """
    _check_pair(u, v, "table_product")
    if u.dim != table.n:
        raise ValueError(
            f"table for dim {table.n} cannot multiply dim-{u.dim} vectors"
        )
    acc = [zero_scalar(u.mode)] * table.n
    for i, a in enumerate(u.coords, start=1):
        if not a:
            continue
        for j, b in enumerate(v.coords, start=1):
            if not b:
                continue
            cell = table.entry(i, j)
            if cell.is_zero:
                continue
            acc[cell.index - 1] += cell.sign * a * b
    return Vector(acc, u.mode)
