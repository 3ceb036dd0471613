"""Exact arithmetic in finite fields GF(p^k).

Elements are plain integers ("codes") in ``[0, q)`` with ``q = p**k``.
The base-p digits ``d_0 .. d_{k-1}`` of a code, little endian, are the
coefficients of the element in the polynomial basis, so code 0 is the
additive identity and code 1 the multiplicative identity.  For prime
fields (``k == 1``) arithmetic is plain mod-p; extension fields reduce
polynomial products modulo a monic irreducible of degree ``k``.

A :class:`FieldSpec` owns the arithmetic.  Codes do not carry their
field, so mixing fields is detected where specs travel with the data
(vectors, matrices, JSON payloads), not at the element level.

Built-in irreducibles (the standard Conway choices) cover
``q in {4, 8, 9, 16, 25, 27}``; any other extension field needs a
user-supplied polynomial, given as the coefficient list ``c_0 .. c_k``
with ``c_k == 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .errors import DivisionByZero, SchemaError

# Lookup tables are only built for fields at most this large; bigger
# fields fall back to per-operation digit/polynomial arithmetic.
_TABLE_MAX = 4096

# Conway polynomials, little-endian coefficients c_0 .. c_k.
BUILTIN_POLYS: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),        # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),     # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),  # x^4 + x + 1
    (3, 2): (2, 2, 1),        # x^2 + 2x + 2
    (3, 3): (1, 2, 0, 1),     # x^3 + 2x + 1
    (5, 2): (2, 4, 1),        # x^2 + 4x + 2
}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    """Drop leading (high-degree) zero coefficients."""
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return c[:i]


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return tuple(out)


def _poly_mod(a: tuple[int, ...], m: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a modulo the monic polynomial m, over GF(p)."""
    r = list(a)
    dm = len(m) - 1
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i] % p
        if c:
            for j in range(dm + 1):
                r[i - dm + j] = (r[i - dm + j] - c * m[j]) % p
    return _poly_trim(tuple(x % p for x in r[:dm]))


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= k/2."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = low + (1,)
            if not _poly_mod(poly, divisor, p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p^k).

    Parameters
    ----------
    p : prime characteristic.
    k : extension degree, >= 1.
    poly : monic irreducible of degree k over GF(p) as coefficients
        ``c_0 .. c_k``; must be None for k == 1, and may be None for
        k > 1 when ``(p, k)`` is in the built-in table.
    """

    p: int
    k: int = 1
    poly: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise SchemaError(f"p = {self.p} is not prime")
        if self.k < 1:
            raise SchemaError(f"extension degree k = {self.k} must be >= 1")
        if self.k == 1:
            if self.poly is not None:
                raise SchemaError("prime fields take no reduction polynomial")
            return
        poly = self.poly
        if poly is None:
            poly = BUILTIN_POLYS.get((self.p, self.k))
            if poly is None:
                raise SchemaError(
                    f"no built-in irreducible for GF({self.p}^{self.k}); supply poly"
                )
        poly = tuple(int(c) for c in poly)
        if len(poly) != self.k + 1 or poly[-1] != 1:
            raise SchemaError(f"poly must be monic of degree {self.k}: {poly}")
        if any(not 0 <= c < self.p for c in poly):
            raise SchemaError(f"poly coefficients must lie in [0, {self.p})")
        if not _is_irreducible(poly, self.p):
            raise SchemaError(f"poly {poly} is reducible over GF({self.p})")
        object.__setattr__(self, "poly", poly)

    @property
    def q(self) -> int:
        """Number of field elements, p**k."""
        return self.p**self.k

    # -- code <-> digit conversion ------------------------------------

    def digits(self, code: int) -> tuple[int, ...]:
        """Little-endian base-p digits of a code (length k)."""
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(code % p)
            code //= p
        return tuple(out)

    def code(self, digits: tuple[int, ...]) -> int:
        out = 0
        for d in reversed(digits):
            out = out * self.p + d % self.p
        return out

    # -- arithmetic ----------------------------------------------------

    def _add_direct(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        da, db = self.digits(a), self.digits(b)
        return self.code(tuple((x + y) % self.p for x, y in zip(da, db)))

    def _mul_direct(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        prod = _poly_mul(self.digits(a), self.digits(b), self.p)
        rem = _poly_mod(prod, self.poly, self.p)  # type: ignore[arg-type]
        return self.code(rem + (0,) * (self.k - len(rem)))

    @cached_property
    def _add_table(self) -> tuple[tuple[int, ...], ...] | None:
        if self.q > _TABLE_MAX:
            return None
        return tuple(
            tuple(self._add_direct(a, b) for b in range(self.q)) for a in range(self.q)
        )

    @cached_property
    def _mul_table(self) -> tuple[tuple[int, ...], ...] | None:
        if self.q > _TABLE_MAX:
            return None
        return tuple(
            tuple(self._mul_direct(a, b) for b in range(self.q)) for a in range(self.q)
        )

    @cached_property
    def _neg_table(self) -> tuple[int, ...]:
        # Negation table is O(q); kept even for large fields.
        if self.k == 1:
            return tuple((-a) % self.p for a in range(self.q))
        return tuple(
            self.code(tuple((-d) % self.p for d in self.digits(a)))
            for a in range(self.q)
        )

    def add(self, a: int, b: int) -> int:
        t = self._add_table
        if t is not None:
            return t[a][b]
        return self._add_direct(a, b)

    def mul(self, a: int, b: int) -> int:
        t = self._mul_table
        if t is not None:
            return t[a][b]
        return self._mul_direct(a, b)

    def neg(self, a: int) -> int:
        return self._neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        """Multiplicative inverse; a must be nonzero."""
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        """a**e by square-and-multiply; pow(a, 0) == 1 for every a."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        out = 1
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def elements(self) -> range:
        """All element codes, ascending: 0 .. q-1."""
        return range(self.q)

    # -- JSON ------------------------------------------------------------

    def to_json(self) -> dict:
        if self.k == 1:
            return {"p": self.p, "k": self.k}
        return {"p": self.p, "k": self.k, "poly": list(self.poly)}  # type: ignore[arg-type]

    @classmethod
    def from_json(cls, obj: object) -> "FieldSpec":
        if not isinstance(obj, dict):
            raise SchemaError(f"field spec must be an object, got {type(obj).__name__}")
        try:
            p = int(obj["p"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad field spec {obj!r}: {exc}") from exc
        k = int(obj.get("k", 1))
        poly = obj.get("poly")
        if poly is not None:
            poly = tuple(int(c) for c in poly)
        return cls(p, k, poly)


def enumerate_elements(spec: FieldSpec) -> Iterator[int]:
    """Yield each element code exactly once, ascending."""
    return iter(spec.elements())
