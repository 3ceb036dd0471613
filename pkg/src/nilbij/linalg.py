"""Exact dense linear algebra over a finite field.

Vectors and matrices store element codes (see :mod:`nilbij.field`) in
immutable tuples, so they hash and compare structurally; all operations
are pure.  An operator on F_q^n is an n x n matrix acting on column
vectors, ``(Tx)_i = sum_j T[i][j] * x_j``.  The 0 x 0 matrix is a valid
operator (on the zero space) and is treated as both nilpotent and
invertible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    NonSquare,
    NotInvertible,
    SchemaError,
)
from .field import FieldSpec


@dataclass(frozen=True)
class Vector:
    """Column vector in F_q^n; entries are element codes."""

    spec: FieldSpec
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        q = self.spec.q
        if any(not 0 <= e < q for e in self.entries):
            raise SchemaError(f"vector entries must be codes in [0, {q})")

    @property
    def n(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    @classmethod
    def zero(cls, spec: FieldSpec, n: int) -> "Vector":
        return cls(spec, (0,) * n)

    @classmethod
    def standard_basis(cls, spec: FieldSpec, n: int, i: int) -> "Vector":
        """e_i, zero-indexed."""
        return cls(spec, tuple(1 if j == i else 0 for j in range(n)))

    def to_json(self) -> dict:
        return {"field": self.spec.to_json(), "entries": list(self.entries)}

    @classmethod
    def from_json(cls, obj: object) -> "Vector":
        if not isinstance(obj, dict) or "entries" not in obj or "field" not in obj:
            raise SchemaError(f"vector payload needs 'field' and 'entries': {obj!r}")
        spec = FieldSpec.from_json(obj["field"])
        return cls(spec, tuple(obj["entries"]))


@dataclass(frozen=True)
class Matrix:
    """r x c matrix of element codes, row-major."""

    spec: FieldSpec
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        data = tuple(tuple(int(x) for x in row) for row in self.data)
        object.__setattr__(self, "data", data)
        if len(data) != self.rows or any(len(row) != self.cols for row in data):
            raise SchemaError(
                f"matrix data shape does not match {self.rows}x{self.cols}"
            )
        q = self.spec.q
        if any(not 0 <= x < q for row in data for x in row):
            raise SchemaError(f"matrix entries must be codes in [0, {q})")

    @classmethod
    def from_rows(cls, spec: FieldSpec, rows) -> "Matrix":
        data = tuple(tuple(row) for row in rows)
        ncols = len(data[0]) if data else 0
        return cls(spec, len(data), ncols, data)

    @classmethod
    def zero(cls, spec: FieldSpec, rows: int, cols: int) -> "Matrix":
        return cls(spec, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "Matrix":
        return cls(
            spec, n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        )

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.data)

    def to_json(self) -> dict:
        return {
            "field": self.spec.to_json(),
            "rows": self.rows,
            "cols": self.cols,
            "data": [list(row) for row in self.data],
        }

    @classmethod
    def from_json(cls, obj: object) -> "Matrix":
        if not isinstance(obj, dict):
            raise SchemaError(f"matrix payload must be an object: {obj!r}")
        try:
            spec = FieldSpec.from_json(obj["field"])
            rows, cols = int(obj["rows"]), int(obj["cols"])
            data = tuple(tuple(row) for row in obj["data"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad matrix payload: {exc}") from exc
        return cls(spec, rows, cols, data)


def _require_same_spec(a: FieldSpec, b: FieldSpec) -> None:
    if a != b:
        raise FieldMismatch(f"operands live in different fields: {a} vs {b}")


def _mul_data(
    a: tuple[tuple[int, ...], ...],
    b: tuple[tuple[int, ...], ...],
    spec: FieldSpec,
) -> tuple[tuple[int, ...], ...]:
    """Raw row-major product; the census hot path, so table lookups win."""
    bt = tuple(zip(*b)) if b else ()
    addt, mult = spec._add_table, spec._mul_table
    if addt is not None and mult is not None:
        return tuple(
            tuple(
                _dot_table(arow, bcol, addt, mult) for bcol in bt
            )
            for arow in a
        )
    add, mul = spec.add, spec.mul
    out = []
    for arow in a:
        orow = []
        for bcol in bt:
            s = 0
            for x, y in zip(arow, bcol):
                s = add(s, mul(x, y))
            orow.append(s)
        out.append(tuple(orow))
    return tuple(out)


def _dot_table(arow, bcol, addt, mult) -> int:
    s = 0
    for x, y in zip(arow, bcol):
        if x and y:
            s = addt[s][mult[x][y]]
    return s


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product."""
    _require_same_spec(a.spec, b.spec)
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    return Matrix(a.spec, a.rows, b.cols, _mul_data(a.data, b.data, a.spec))


def apply(t: Matrix, x: Vector) -> Vector:
    """The column vector T x."""
    _require_same_spec(t.spec, x.spec)
    if t.cols != x.n:
        raise DimensionMismatch(f"{t.rows}x{t.cols} matrix applied to length-{x.n} vector")
    spec = t.spec
    add, mul = spec.add, spec.mul
    out = []
    for row in t.data:
        s = 0
        for c, e in zip(row, x.entries):
            if c and e:
                s = add(s, mul(c, e))
        out.append(s)
    return Vector(spec, tuple(out))


def mat_pow(t: Matrix, e: int) -> Matrix:
    """T**e by repeated squaring; T**0 is the identity."""
    if not t.is_square():
        raise NonSquare(f"mat_pow needs a square matrix, got {t.rows}x{t.cols}")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    spec = t.spec
    result = Matrix.identity(spec, t.rows).data
    base = t.data
    while e:
        if e & 1:
            result = _mul_data(result, base, spec)
        e >>= 1
        if e:
            base = _mul_data(base, base, spec)
    return Matrix(spec, t.rows, t.cols, result)


def rref(a: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form.

    Returns:
        (R, pivots): R is the unique RREF of ``a`` (leading entries 1,
        pivot columns elsewhere 0, zero rows last) and ``pivots`` lists
        the pivot column indices in ascending order.
    """
    spec = a.spec
    rows = [list(row) for row in a.data]
    m = a.rows
    pivots: list[int] = []
    r = 0
    for c in range(a.cols):
        pr = next((i for i in range(r, m) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != 1:
            ipv = spec.inv(pv)
            rows[r] = [spec.mul(ipv, x) for x in rows[r]]
        for i in range(m):
            f = rows[i][c]
            if i != r and f:
                rows[i] = [
                    spec.sub(x, spec.mul(f, y)) for x, y in zip(rows[i], rows[r])
                ]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return Matrix(spec, m, a.cols, tuple(tuple(row) for row in rows)), tuple(pivots)


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def kernel_basis(a: Matrix) -> list[Vector]:
    """Canonical basis of the right kernel {x : Ax = 0}.

    One basis vector per free column of the RREF, in ascending
    free-column order: the free coordinate is set to 1, the other free
    coordinates to 0, and each pivot coordinate to minus the RREF entry
    in the free column.
    """
    spec = a.spec
    r, pivots = rref(a)
    pivot_set = set(pivots)
    free = [c for c in range(a.cols) if c not in pivot_set]
    basis = []
    for f in free:
        x = [0] * a.cols
        x[f] = 1
        for i, p in enumerate(pivots):
            x[p] = spec.neg(r.data[i][f])
        basis.append(Vector(spec, tuple(x)))
    return basis


def image_basis(a: Matrix) -> list[Vector]:
    """Columns of ``a`` at the pivot positions of its RREF, ascending."""
    _, pivots = rref(a)
    return [Vector(a.spec, a.column(c)) for c in pivots]


def is_invertible(t: Matrix) -> bool:
    if not t.is_square():
        raise NonSquare(f"invertibility needs a square matrix, got {t.rows}x{t.cols}")
    return rank(t) == t.rows


def is_nilpotent(t: Matrix) -> bool:
    """Whether T**n = 0; a nilpotent on dimension n has index <= n."""
    if not t.is_square():
        raise NonSquare(f"nilpotency needs a square matrix, got {t.rows}x{t.cols}")
    n = t.rows
    if n == 0:
        return True
    data = t.data
    e = 1
    while any(any(row) for row in data):
        if e >= n:
            return False
        data = _mul_data(data, data, t.spec)
        e *= 2
    return True


def mat_inv(t: Matrix) -> Matrix:
    """Inverse via Gauss-Jordan on the augmented matrix."""
    if not t.is_square():
        raise NonSquare(f"inverse needs a square matrix, got {t.rows}x{t.cols}")
    n = t.rows
    ident = Matrix.identity(t.spec, n)
    aug = Matrix(
        t.spec, n, 2 * n, tuple(row + irow for row, irow in zip(t.data, ident.data))
    )
    r, pivots = rref(aug)
    if pivots != tuple(range(n)):
        raise NotInvertible(f"matrix of rank {len(pivots)} < {n} has no inverse")
    return Matrix(t.spec, n, n, tuple(row[n:] for row in r.data))


# -- small vector helpers used by the subspace constructions ------------


def vec_add(x: Vector, y: Vector) -> Vector:
    _require_same_spec(x.spec, y.spec)
    if x.n != y.n:
        raise DimensionMismatch(f"vector lengths differ: {x.n} vs {y.n}")
    add = x.spec.add
    return Vector(x.spec, tuple(add(a, b) for a, b in zip(x.entries, y.entries)))


def vec_sub(x: Vector, y: Vector) -> Vector:
    _require_same_spec(x.spec, y.spec)
    if x.n != y.n:
        raise DimensionMismatch(f"vector lengths differ: {x.n} vs {y.n}")
    sub = x.spec.sub
    return Vector(x.spec, tuple(sub(a, b) for a, b in zip(x.entries, y.entries)))


def vec_scale(c: int, x: Vector) -> Vector:
    mul = x.spec.mul
    return Vector(x.spec, tuple(mul(c, e) for e in x.entries))
