"""Canonical subspaces of K^n.

Every :class:`Subspace` stores the reduced row-echelon basis of its span, so
two subspaces are equal exactly when their dataclass fields are equal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, FieldMismatch, NotContained
from .field import FieldSpec, Raw

Vector = tuple  # tuple of raw field values


def rref(field: FieldSpec, rows: Iterable[Sequence[Raw]], ncols: int) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Gauss-Jordan elimination; returns the nonzero RREF rows and their pivot columns.

    Rows must already hold canonical raw values of ``field``.
    """
    m = [list(r) for r in rows]
    p = field.p
    pivots: list[int] = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = r
        while piv < nrows and not m[piv][c]:
            piv += 1
        if piv == nrows:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        row = m[r]
        lead = row[c]
        if lead != 1:
            inv = field.inv(lead)
            if p is None:
                row = [a * inv for a in row]
            else:
                row = [a * inv % p for a in row]
            m[r] = row
        tail = row[c:]
        for i in range(nrows):
            if i == r:
                continue
            other = m[i]
            f = other[c]
            if not f:
                continue
            if p is None:
                m[i] = other[:c] + [a - f * b for a, b in zip(other[c:], tail)]
            else:
                m[i] = other[:c] + [(a - f * b) % p for a, b in zip(other[c:], tail)]
        pivots.append(c)
        r += 1
    return tuple(tuple(x) for x in m[:r]), tuple(pivots)


def rank(field: FieldSpec, vectors: Sequence[Sequence[Raw]], ncols: int) -> int:
    return len(rref(field, vectors, ncols)[1])


def is_independent(field: FieldSpec, vectors: Sequence[Sequence[Raw]], ncols: int) -> bool:
    return rank(field, vectors, ncols) == len(vectors)


def vadd(field: FieldSpec, u: Sequence[Raw], v: Sequence[Raw]) -> Vector:
    if field.p is None:
        return tuple(a + b for a, b in zip(u, v))
    p = field.p
    return tuple((a + b) % p for a, b in zip(u, v))


def vsub(field: FieldSpec, u: Sequence[Raw], v: Sequence[Raw]) -> Vector:
    if field.p is None:
        return tuple(a - b for a, b in zip(u, v))
    p = field.p
    return tuple((a - b) % p for a, b in zip(u, v))


def vscale(field: FieldSpec, c: Raw, v: Sequence[Raw]) -> Vector:
    if field.p is None:
        return tuple(c * a for a in v)
    p = field.p
    return tuple(c * a % p for a in v)


def lincomb(field: FieldSpec, coeffs: Sequence[Raw], vectors: Sequence[Sequence[Raw]], n: int) -> Vector:
    out = zero_vector(field, n)
    for c, v in zip(coeffs, vectors):
        if c:
            out = vadd(field, out, vscale(field, c, v))
    return out


def zero_vector(field: FieldSpec, n: int) -> Vector:
    return (field.zero,) * n


def unit_vector(field: FieldSpec, n: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of K^ambient_dim given by its RREF basis."""

    field: FieldSpec
    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, generators: Iterable[Sequence[object]] = ()) -> "Subspace":
        if ambient_dim < 0:
            raise DimensionMismatch("ambient dimension must be non-negative")
        rows = []
        for g in generators:
            g = tuple(g)
            if len(g) != ambient_dim:
                raise DimensionMismatch(f"generator of length {len(g)} in K^{ambient_dim}")
            rows.append(tuple(field.coerce(x) for x in g))
        return cls._from_raw(field, ambient_dim, rows)

    @classmethod
    def _from_raw(cls, field: FieldSpec, ambient_dim: int, rows: Iterable[Sequence[Raw]]) -> "Subspace":
        basis, _ = rref(field, rows, ambient_dim)
        return cls(field, ambient_dim, basis)

    @classmethod
    def zero(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, ())

    @classmethod
    def full(cls, field: FieldSpec, n: int) -> "Subspace":
        return cls(field, n, tuple(unit_vector(field, n, i) for i in range(n)))

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, a in enumerate(row) if a) for row in self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def _check(self, other: "Subspace") -> None:
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch(f"K^{self.ambient_dim} vs K^{other.ambient_dim}")

    def reduce(self, v: Sequence[Raw]) -> Vector:
        """Residue of ``v`` modulo this subspace (zero exactly when ``v`` is a member)."""
        field = self.field
        v = tuple(v)
        for row, piv in zip(self.basis, self.pivots):
            c = v[piv]
            if c:
                v = vsub(field, v, vscale(field, c, row))
        return v

    def coordinates(self, v: Sequence[Raw]) -> tuple[Raw, ...]:
        """Coefficients of ``v`` in the RREF basis; raises NotContained if ``v`` is outside."""
        if any(self.reduce(v)):
            raise NotContained("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def __contains__(self, v: object) -> bool:
        v = tuple(self.field.coerce(x) for x in v)  # type: ignore[union-attr]
        if len(v) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in K^{self.ambient_dim}")
        return not any(self.reduce(v))

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        if other.dim > self.dim:
            return False
        return all(not any(self.reduce(w)) for w in other.basis)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __ge__(self, other: "Subspace") -> bool:
        return self.contains(other)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not other.basis or self.is_full():
            return self
        if not self.basis or other.is_full():
            return other
        return Subspace._from_raw(self.field, self.ambient_dim, self.basis + other.basis)

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: echelonize [[U, U], [W, 0]]; rows with empty left half span U ∩ W."""
        self._check(other)
        if not self.basis or other.is_full():
            return self
        if not other.basis or self.is_full():
            return other
        n = self.ambient_dim
        zeros = zero_vector(self.field, n)
        rows = [u + u for u in self.basis] + [w + zeros for w in other.basis]
        red, piv = rref(self.field, rows, 2 * n)
        return Subspace(self.field, n, tuple(r[n:] for r, c in zip(red, piv) if c >= n))

    __and__ = intersect

    def codim_in(self, other: "Subspace") -> int:
        if not other.contains(self):
            raise NotContained("codimension needs U ⊆ W")
        return other.dim - self.dim

    def project(self, columns: Sequence[int]) -> "Subspace":
        """Image under the coordinate projection onto ``columns``."""
        rows = [tuple(r[c] for c in columns) for r in self.basis]
        return Subspace._from_raw(self.field, len(columns), rows)

    def embed(self, total: int, offset: int) -> "Subspace":
        """The same subspace placed in coordinates offset..offset+n-1 of K^total."""
        if offset < 0 or offset + self.ambient_dim > total:
            raise DimensionMismatch("embedding does not fit")
        z = self.field.zero
        pre, post = (z,) * offset, (z,) * (total - offset - self.ambient_dim)
        # shifting every row by the same offset keeps the rows in RREF
        return Subspace(self.field, total, tuple(pre + r + post for r in self.basis))

    def times(self, other: "Subspace") -> "Subspace":
        """Cartesian product U × W inside K^(n+m)."""
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        n, m = self.ambient_dim, other.ambient_dim
        # pivots of the U rows precede those of the W rows, so the union is already RREF
        return Subspace(self.field, n + m, self.embed(n + m, 0).basis + other.embed(n + m, n).basis)

    def elements(self) -> Iterator[Vector]:
        """Every vector of the subspace (prime fields only)."""
        field = self.field
        if field.p is None:
            raise ValueError("cannot enumerate a subspace over Q")
        for coeffs in itertools.product(range(field.p), repeat=self.dim):
            yield lincomb(field, coeffs, self.basis, self.ambient_dim)

    def __str__(self) -> str:
        if not self.basis:
            return f"{{0}} ⊆ K^{self.ambient_dim}"
        rows = ", ".join("[" + " ".join(map(str, r)) + "]" for r in self.basis)
        return f"span{{{rows}}}"


def canonicalize(field: FieldSpec, ambient_dim: int, generators: Iterable[Sequence[object]]) -> Subspace:
    return Subspace.span(field, ambient_dim, generators)


def span_sum(u: Subspace, w: Subspace) -> Subspace:
    return u.sum(w)


def intersect(u: Subspace, w: Subspace) -> Subspace:
    return u.intersect(w)


def contains(u: Subspace, w: Subspace) -> bool:
    """True iff W ⊆ U."""
    return u.contains(w)


def complement_basis(u: Subspace, w: Subspace) -> list[Vector]:
    """Basis of the deterministic complement of ``u`` in ``w``.

    Walks W's RREF basis in order and keeps every vector not already in the
    span of U plus the vectors kept so far.  For W = K^n this is the list of
    the first standard vectors outside the running span.
    """
    u._check(w)
    if not w.contains(u):
        raise NotContained("complement needs U ⊆ W")
    picked: list[Vector] = []
    current = u
    for v in w.basis:
        if current.dim == w.dim:
            break
        if any(current.reduce(v)):
            picked.append(v)
            current = Subspace._from_raw(u.field, u.ambient_dim, current.basis + (v,))
    return picked


def complement(u: Subspace, w: Subspace) -> Subspace:
    """X₀ with U ⊕ X₀ = W."""
    return Subspace._from_raw(u.field, u.ambient_dim, complement_basis(u, w))


def extend_basis(u: Subspace, w: Subspace) -> tuple[list[Vector], list[Vector]]:
    """U's RREF basis followed by the complement basis: together a basis of W."""
    return list(u.basis), complement_basis(u, w)
