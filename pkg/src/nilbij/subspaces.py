"""Subspaces of F_q^n in canonical form, and the constructions on them.

Every subspace is stored as the rows of the unique reduced row echelon
form of any spanning set, so equal subspaces have identical
representations and structural equality decides subspace equality.
The RREF rows double as the subspace's *reference basis*: maps between
subspaces are matrices over the reference bases of domain and codomain,
which makes equality of maps decidable by matrix equality and every
construction below fully deterministic.

Constructions:

* ``steinitz_complement`` - the complement spanned by the standard
  basis vectors at the non-pivot coordinates.
* ``canonical_iso`` - between any two complements U, W of the same V:
  u maps to the unique w in W with w - u in V.
* ``map_to_complement`` / ``complement_to_map`` - the bijection between
  linear maps U -> V and complements of V, via graphs {u + f(u)}.
* ``block_decompose`` - the three blocks of an operator that preserves
  V, relative to a complementary pair (V, U).
* ``basis_to_automorphism`` / ``automorphism_to_basis`` - the ordered
  bases of V form a torsor under its automorphism group; anchoring at
  the reference basis turns that into a bijection.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    FieldMismatch,
    NotAutomorphism,
    NotBasis,
    NotCanonical,
    NotComplement,
    NotInSubspace,
    NotInvariant,
    SchemaError,
)
from .field import FieldSpec
from .linalg import (
    Matrix,
    Vector,
    is_invertible,
    mat_inv,
    mat_mul,
    rank,
    rref,
    vec_sub,
)


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_q^n, held as its RREF basis rows."""

    spec: FieldSpec
    ambient_dim: int
    rows: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        object.__setattr__(self, "pivots", tuple(self.pivots))
        mat = Matrix(self.spec, len(self.rows), self.ambient_dim, self.rows)
        reduced, pivots = rref(mat)
        if reduced.data != self.rows or pivots != self.pivots:
            raise NotCanonical(
                f"rows {self.rows} are not an RREF basis with pivots {self.pivots}"
            )
        if len(self.pivots) != len(self.rows):
            raise NotCanonical("zero rows are not allowed in a subspace basis")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_vectors(self) -> tuple[Vector, ...]:
        """The reference basis, as ambient vectors."""
        return tuple(Vector(self.spec, row) for row in self.rows)

    @classmethod
    def zero(cls, spec: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(spec, ambient_dim, (), ())

    @classmethod
    def full(cls, spec: FieldSpec, ambient_dim: int) -> "Subspace":
        ident = Matrix.identity(spec, ambient_dim)
        return cls(spec, ambient_dim, ident.data, tuple(range(ambient_dim)))

    def basis_matrix(self) -> Matrix:
        """n x m matrix whose columns are the reference basis vectors."""
        data = tuple(
            tuple(row[i] for row in self.rows) for i in range(self.ambient_dim)
        )
        return Matrix(self.spec, self.ambient_dim, self.dim, data)

    def to_json(self) -> dict:
        return {
            "field": self.spec.to_json(),
            "ambient": self.ambient_dim,
            "basis": [list(row) for row in self.rows],
        }

    @classmethod
    def from_json(cls, obj: object, strict: bool = True) -> "Subspace":
        """Load a subspace; basis rows are expected to be RREF already.

        The rows are re-canonicalized; a mismatch raises
        :class:`NotCanonical` when ``strict``, otherwise warns and keeps
        the canonical form.
        """
        if not isinstance(obj, dict):
            raise SchemaError(f"subspace payload must be an object: {obj!r}")
        try:
            spec = FieldSpec.from_json(obj["field"])
            ambient = int(obj["ambient"])
            given = tuple(tuple(int(x) for x in row) for row in obj["basis"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad subspace payload: {exc}") from exc
        sub = span(
            [Vector(spec, row) for row in given], spec=spec, ambient_dim=ambient
        )
        if sub.rows != given:
            if strict:
                raise NotCanonical(
                    f"basis {list(given)} is not RREF; canonical form is {list(sub.rows)}"
                )
            warnings.warn(
                f"subspace basis re-canonicalized from {list(given)} to {list(sub.rows)}",
                stacklevel=2,
            )
        return sub


def span(
    vectors: Iterable[Vector],
    spec: FieldSpec | None = None,
    ambient_dim: int | None = None,
) -> Subspace:
    """Canonical subspace spanned by the given vectors.

    ``spec`` and ``ambient_dim`` are required when ``vectors`` is empty
    (the zero subspace carries no hint of its ambient space).
    """
    vecs = list(vectors)
    if vecs:
        spec = vecs[0].spec
        ambient_dim = vecs[0].n
        for v in vecs:
            if v.spec != spec:
                raise FieldMismatch("span of vectors over different fields")
            if v.n != ambient_dim:
                raise DimensionMismatch("span of vectors of different lengths")
    elif spec is None or ambient_dim is None:
        raise DimensionMismatch("empty span needs explicit spec and ambient_dim")
    stacked = Matrix.from_rows(spec, [v.entries for v in vecs]) if vecs else None
    if stacked is None:
        return Subspace.zero(spec, ambient_dim)
    reduced, pivots = rref(stacked)
    basis = reduced.data[: len(pivots)]
    return Subspace(spec, ambient_dim, basis, pivots)


def _reduce_against(v: Subspace, x: Vector) -> tuple[tuple[int, ...], Vector]:
    """Coefficients of x over v's reference basis plus the residue."""
    coeffs = tuple(x.entries[p] for p in v.pivots)
    residue = list(x.entries)
    spec = v.spec
    for c, row in zip(coeffs, v.rows):
        if c:
            for i, r in enumerate(row):
                if r:
                    residue[i] = spec.sub(residue[i], spec.mul(c, r))
    return coeffs, Vector(spec, tuple(residue))


def contains(v: Subspace, x: Vector) -> bool:
    if x.spec != v.spec:
        raise FieldMismatch("vector and subspace live in different fields")
    if x.n != v.ambient_dim:
        raise DimensionMismatch(f"length-{x.n} vector vs ambient dim {v.ambient_dim}")
    _, residue = _reduce_against(v, x)
    return residue.is_zero()


def coords(v: Subspace, x: Vector) -> Vector:
    """The unique coefficients of x over v's reference basis (length dim v)."""
    if x.spec != v.spec:
        raise FieldMismatch("vector and subspace live in different fields")
    if x.n != v.ambient_dim:
        raise DimensionMismatch(f"length-{x.n} vector vs ambient dim {v.ambient_dim}")
    coeffs, residue = _reduce_against(v, x)
    if not residue.is_zero():
        raise NotInSubspace(f"{x.entries} is not in the subspace")
    return Vector(v.spec, coeffs)


def from_coords(v: Subspace, c: Vector) -> Vector:
    """Ambient vector with the given reference-basis coefficients."""
    if c.n != v.dim:
        raise DimensionMismatch(f"expected {v.dim} coordinates, got {c.n}")
    spec = v.spec
    out = [0] * v.ambient_dim
    for coeff, row in zip(c.entries, v.rows):
        if coeff:
            for i, r in enumerate(row):
                if r:
                    out[i] = spec.add(out[i], spec.mul(coeff, r))
    return Vector(spec, tuple(out))


def steinitz_complement(v: Subspace) -> Subspace:
    """The complement spanned by standard vectors at non-pivot columns."""
    pivot_set = set(v.pivots)
    free = tuple(j for j in range(v.ambient_dim) if j not in pivot_set)
    rows = tuple(
        tuple(1 if i == j else 0 for i in range(v.ambient_dim)) for j in free
    )
    return Subspace(v.spec, v.ambient_dim, rows, free)


def is_complementary(u: Subspace, v: Subspace) -> bool:
    """Whether U + V = ambient and U intersect V = {0}."""
    if u.spec != v.spec or u.ambient_dim != v.ambient_dim:
        return False
    n = u.ambient_dim
    if u.dim + v.dim != n:
        return False
    stacked = Matrix.from_rows(u.spec, list(u.rows) + list(v.rows))
    if n == 0:
        return True
    return rank(stacked) == n


@dataclass(frozen=True)
class SubspaceMap:
    """Linear map between subspaces, in reference-basis coordinates."""

    domain: Subspace
    codomain: Subspace
    matrix: Matrix

    def __post_init__(self) -> None:
        if self.matrix.rows != self.codomain.dim or self.matrix.cols != self.domain.dim:
            raise DimensionMismatch(
                f"map matrix is {self.matrix.rows}x{self.matrix.cols}, expected "
                f"{self.codomain.dim}x{self.domain.dim}"
            )
        if self.domain.spec != self.codomain.spec:
            raise FieldMismatch("domain and codomain live in different fields")
        if self.matrix.spec != self.domain.spec:
            raise FieldMismatch("map matrix and subspaces live in different fields")

    @classmethod
    def identity(cls, v: Subspace) -> "SubspaceMap":
        return cls(v, v, Matrix.identity(v.spec, v.dim))

    @classmethod
    def zero(cls, domain: Subspace, codomain: Subspace) -> "SubspaceMap":
        return cls(domain, codomain, Matrix.zero(domain.spec, codomain.dim, domain.dim))


def map_apply(f: SubspaceMap, x: Vector) -> Vector:
    """Apply f to an ambient vector of its domain; result is ambient."""
    c = coords(f.domain, x)
    y = [0] * f.codomain.dim
    spec = f.domain.spec
    for i in range(f.codomain.dim):
        s = 0
        for j, cj in enumerate(c.entries):
            if cj:
                s = spec.add(s, spec.mul(f.matrix.data[i][j], cj))
        y[i] = s
    return from_coords(f.codomain, Vector(spec, tuple(y)))


def compose(g: SubspaceMap, f: SubspaceMap) -> SubspaceMap:
    """g after f."""
    if f.codomain != g.domain:
        raise DimensionMismatch("compose: codomain of f is not the domain of g")
    return SubspaceMap(f.domain, g.codomain, mat_mul(g.matrix, f.matrix))


def map_inverse(f: SubspaceMap) -> SubspaceMap:
    """Inverse of an isomorphism (equal dimensions, invertible matrix)."""
    if f.domain.dim != f.codomain.dim:
        raise DimensionMismatch("only maps between equal dimensions can invert")
    return SubspaceMap(f.codomain, f.domain, mat_inv(f.matrix))


def _hstack(a: Matrix, b: Matrix) -> Matrix:
    return Matrix(
        a.spec, a.rows, a.cols + b.cols,
        tuple(ra + rb for ra, rb in zip(a.data, b.data)),
    )


def _block(m: Matrix, r0: int, r1: int, c0: int, c1: int) -> Matrix:
    return Matrix(
        m.spec, r1 - r0, c1 - c0, tuple(row[c0:c1] for row in m.data[r0:r1])
    )


def _split_coords(v: Subspace, w: Subspace) -> Matrix:
    """Inverse of the combined basis matrix [v | w]; its top dim(v) rows
    read off v-coordinates, the rest w-coordinates."""
    return mat_inv(_hstack(v.basis_matrix(), w.basis_matrix()))


def canonical_iso(v: Subspace, u: Subspace, w: Subspace) -> SubspaceMap:
    """The canonical isomorphism U -> W between two complements of V.

    Sends u to the unique element of W whose difference from u lies in
    V; concretely, the W-component of u in the splitting X = V + W.
    """
    if not is_complementary(v, u):
        raise NotComplement("U is not a complement of V")
    if not is_complementary(v, w):
        raise NotComplement("W is not a complement of V")
    split = _split_coords(v, w)
    m = mat_mul(split, u.basis_matrix())
    return SubspaceMap(u, w, _block(m, v.dim, v.dim + w.dim, 0, u.dim))


def map_to_complement(f: SubspaceMap) -> Subspace:
    """The graph {u + f(u)} of f : U -> V, a complement of V."""
    u, v = f.domain, f.codomain
    if not is_complementary(u, v):
        raise NotComplement("domain and codomain are not complementary")
    graph_cols = []
    for j, uvec in enumerate(u.basis_vectors()):
        img = from_coords(v, Vector(v.spec, f.matrix.column(j)))
        graph_cols.append(
            Vector(u.spec, tuple(u.spec.add(a, b) for a, b in zip(uvec.entries, img.entries)))
        )
    return span(graph_cols, spec=u.spec, ambient_dim=u.ambient_dim)


def complement_to_map(w: Subspace, v: Subspace, u: Subspace) -> SubspaceMap:
    """The unique f : U -> V whose graph over U is W; f(u) = i(u) - u."""
    if not is_complementary(u, v):
        raise NotComplement("U is not a complement of V")
    iso = canonical_iso(v, u, w)
    cols = []
    for uvec in u.basis_vectors():
        cols.append(coords(v, vec_sub(map_apply(iso, uvec), uvec)).entries)
    data = tuple(tuple(col[i] for col in cols) for i in range(v.dim))
    return SubspaceMap(u, v, Matrix(u.spec, v.dim, u.dim, data))


def block_decompose(
    t: Matrix, v: Subspace, u: Subspace
) -> tuple[SubspaceMap, SubspaceMap, SubspaceMap]:
    """Blocks (T_VV, T_UV, T_UU) of T relative to X = V + U with TV in V.

    For x in V, T(x) = T_VV(x); for x in U, T(x) = T_UV(x) + T_UU(x)
    with the two components in V and U respectively.
    """
    if t.spec != v.spec:
        raise FieldMismatch("operator and subspaces live in different fields")
    if not t.is_square() or t.rows != v.ambient_dim:
        raise DimensionMismatch(
            f"operator must be {v.ambient_dim}x{v.ambient_dim}, got {t.rows}x{t.cols}"
        )
    if not is_complementary(v, u):
        raise NotComplement("V and U are not complementary")
    b = _hstack(v.basis_matrix(), u.basis_matrix())
    conj = mat_mul(mat_inv(b), mat_mul(t, b))
    m, n = v.dim, v.ambient_dim
    if not _block(conj, m, n, 0, m).is_zero():
        raise NotInvariant("T does not map V into V")
    t_vv = SubspaceMap(v, v, _block(conj, 0, m, 0, m))
    t_uv = SubspaceMap(u, v, _block(conj, 0, m, m, n))
    t_uu = SubspaceMap(u, u, _block(conj, m, n, m, n))
    return t_vv, t_uv, t_uu


def block_assemble(
    v: Subspace, u: Subspace, t_vv: SubspaceMap, t_uv: SubspaceMap, t_uu: SubspaceMap
) -> Matrix:
    """Inverse of :func:`block_decompose`: the ambient operator with the
    given blocks (and no U -> V leakage from V)."""
    if not is_complementary(v, u):
        raise NotComplement("V and U are not complementary")
    m, n = v.dim, v.ambient_dim
    rows = []
    for i in range(n):
        if i < m:
            rows.append(t_vv.matrix.data[i] + t_uv.matrix.data[i])
        else:
            rows.append((0,) * m + t_uu.matrix.data[i - m])
    conj = Matrix(v.spec, n, n, tuple(rows))
    b = _hstack(v.basis_matrix(), u.basis_matrix())
    return mat_mul(b, mat_mul(conj, mat_inv(b)))


@dataclass(frozen=True)
class OrderedBasis:
    """Ordered basis of a subspace; not necessarily the reference one."""

    subspace: Subspace
    vectors: tuple[Vector, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vectors", tuple(self.vectors))
        if len(self.vectors) != self.subspace.dim:
            raise NotBasis(
                f"{len(self.vectors)} vectors cannot be a basis of a "
                f"{self.subspace.dim}-dimensional space"
            )
        for vec in self.vectors:
            if not contains(self.subspace, vec):
                raise NotBasis(f"{vec.entries} lies outside the subspace")
        if self.vectors:
            stacked = Matrix.from_rows(
                self.subspace.spec, [v.entries for v in self.vectors]
            )
            if rank(stacked) != len(self.vectors):
                raise NotBasis("vectors are linearly dependent")

    @classmethod
    def reference(cls, v: Subspace) -> "OrderedBasis":
        return cls(v, v.basis_vectors())


def basis_to_automorphism(b: OrderedBasis) -> SubspaceMap:
    """The unique automorphism sending the reference basis to b."""
    v = b.subspace
    cols = [coords(v, vec).entries for vec in b.vectors]
    data = tuple(tuple(col[i] for col in cols) for i in range(v.dim))
    return SubspaceMap(v, v, Matrix(v.spec, v.dim, v.dim, data))


def automorphism_to_basis(r: SubspaceMap) -> OrderedBasis:
    """Images of the reference basis under an automorphism of V."""
    if r.domain != r.codomain:
        raise DimensionMismatch("automorphisms must have equal domain and codomain")
    if not is_invertible(r.matrix):
        raise NotAutomorphism("map matrix is singular")
    v = r.domain
    vecs = tuple(
        from_coords(v, Vector(v.spec, r.matrix.column(j))) for j in range(v.dim)
    )
    return OrderedBasis(v, vecs)
