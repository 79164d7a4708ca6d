"""Linear relations (multivalued linear operators) between K^n and K^m.

A relation is stored as its graph, a canonical subspace of K^(n+m) whose rows
are concatenated pairs ``[x | y]``.  The calculus here covers inverse,
product, the four parts, images, restriction and the containment/equality
tests that the factorization criteria are built from.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, NotContained, ShapeMismatch
from .field import FieldSpec, Raw
from .report import DecisionReport, Evidence, inclusion
from .subspace import Subspace, Vector, vadd, vscale, vsub, zero_vector


@dataclass(frozen=True)
class RelationParts:
    dom: Subspace
    ran: Subspace
    ker: Subspace
    mul: Subspace

    def dims(self) -> tuple[int, int, int, int]:
        return self.dom.dim, self.ran.dim, self.ker.dim, self.mul.dim


@dataclass(frozen=True)
class LinearRelation:
    """A subspace of K^dom_dim × K^cod_dim."""

    dom_dim: int
    cod_dim: int
    graph: Subspace = dc_field(repr=False)

    def __post_init__(self) -> None:
        if self.dom_dim < 0 or self.cod_dim < 0:
            raise DimensionMismatch("space dimensions must be non-negative")
        if self.graph.ambient_dim != self.dom_dim + self.cod_dim:
            raise DimensionMismatch(
                f"graph lives in K^{self.graph.ambient_dim}, expected K^{self.dom_dim + self.cod_dim}"
            )

    # -- construction -----------------------------------------------------

    @classmethod
    def from_generators(cls, field: FieldSpec, dom_dim: int, cod_dim: int,
                        generators: Iterable[Sequence[object]] = ()) -> "LinearRelation":
        """Span of rows ``[x | y]`` of length dom_dim + cod_dim."""
        return cls(dom_dim, cod_dim, Subspace.span(field, dom_dim + cod_dim, generators))

    @classmethod
    def from_pairs(cls, field: FieldSpec, dom_dim: int, cod_dim: int,
                   pairs: Iterable[tuple[Sequence[object], Sequence[object]]]) -> "LinearRelation":
        rows = []
        for x, y in pairs:
            x, y = tuple(x), tuple(y)
            if len(x) != dom_dim or len(y) != cod_dim:
                raise DimensionMismatch(f"pair of shape ({len(x)}, {len(y)}) in K^{dom_dim} × K^{cod_dim}")
            rows.append(x + y)
        return cls.from_generators(field, dom_dim, cod_dim, rows)

    @classmethod
    def from_matrix(cls, field: FieldSpec, matrix: Sequence[Sequence[object]], dom_dim: int | None = None,
                    domain: Subspace | None = None) -> "LinearRelation":
        """Graph of x ↦ Mx (M given row-wise, cod_dim × dom_dim), optionally restricted to ``domain``."""
        cod_dim = len(matrix)
        if dom_dim is None:
            if not cod_dim:
                raise DimensionMismatch("dom_dim is required for an empty matrix")
            dom_dim = len(matrix[0])
        mat = [tuple(field.coerce(a) for a in row) for row in matrix]
        if any(len(row) != dom_dim for row in mat):
            raise DimensionMismatch("ragged matrix")
        if domain is None:
            domain = Subspace.full(field, dom_dim)
        rows = []
        for x in domain.basis:
            y = tuple(_dot(field, row, x) for row in mat)
            rows.append(x + y)
        return cls.from_generators(field, dom_dim, cod_dim, rows)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "LinearRelation":
        return diagonal(Subspace.full(field, n))

    @classmethod
    def zero(cls, field: FieldSpec, dom_dim: int, cod_dim: int) -> "LinearRelation":
        """The relation {(0, 0)}."""
        return cls(dom_dim, cod_dim, Subspace.zero(field, dom_dim + cod_dim))

    @classmethod
    def product(cls, u: Subspace, w: Subspace) -> "LinearRelation":
        """The relation U × W."""
        return cls(u.ambient_dim, w.ambient_dim, u.times(w))

    # -- basic accessors --------------------------------------------------

    @property
    def field(self) -> FieldSpec:
        return self.graph.field

    @property
    def shape(self) -> tuple[int, int]:
        return self.dom_dim, self.cod_dim

    @property
    def dim(self) -> int:
        return self.graph.dim

    def pairs(self) -> list[tuple[Vector, Vector]]:
        n = self.dom_dim
        return [(r[:n], r[n:]) for r in self.graph.basis]

    @cached_property
    def inverse(self) -> "LinearRelation":
        n, m = self.dom_dim, self.cod_dim
        rows = [r[n:] + r[:n] for r in self.graph.basis]
        inv = LinearRelation(m, n, Subspace._from_raw(self.field, n + m, rows))
        # an inverse's inverse is this very object; share it so parts are computed once
        inv.__dict__["inverse"] = self
        return inv

    @cached_property
    def parts(self) -> RelationParts:
        return RelationParts(dom=self.dom, ran=self.ran, ker=self.ker, mul=self.mul)

    @cached_property
    def dom(self) -> Subspace:
        # rows pivoting in the x block project to the RREF basis of dom
        n = self.dom_dim
        basis = tuple(r[:n] for r, c in zip(self.graph.basis, self.graph.pivots) if c < n)
        return Subspace(self.field, n, basis)

    @cached_property
    def mul(self) -> Subspace:
        n = self.dom_dim
        basis = tuple(r[n:] for r, c in zip(self.graph.basis, self.graph.pivots) if c >= n)
        return Subspace(self.field, self.cod_dim, basis)

    @property
    def ran(self) -> Subspace:
        return self.inverse.dom

    @property
    def ker(self) -> Subspace:
        return self.inverse.mul

    def is_operator(self) -> bool:
        return self.mul.is_zero()

    def is_injective(self) -> bool:
        return self.ker.is_zero()

    # -- elements -----------------------------------------------------------

    def pick(self, x: Sequence[Raw]) -> Vector:
        """The canonical element of R(x): the unique one with zeros in mul R's pivot columns.

        Raises NotContained when x is outside dom R.
        """
        field = self.field
        n = self.dom_dim
        x = tuple(x)
        if len(x) != n:
            raise DimensionMismatch(f"vector of length {len(x)} in K^{n}")
        y = zero_vector(field, self.cod_dim)
        for row, c in zip(self.graph.basis, self.graph.pivots):
            if c >= n:
                break
            a = x[c]
            if a:
                x = vsub(field, x, vscale(field, a, row[:n]))
                y = vadd(field, y, vscale(field, a, row[n:]))
        if any(x):
            raise NotContained("vector is not in the domain")
        return y

    def has_pair(self, x: Sequence[Raw], y: Sequence[Raw]) -> bool:
        return not any(self.graph.reduce(tuple(x) + tuple(y)))

    def contains(self, other: "LinearRelation") -> bool:
        """True iff other ⊆ self (as graphs)."""
        _same_shape(self, other)
        return self.graph.contains(other.graph)

    def __le__(self, other: "LinearRelation") -> bool:
        return other.contains(self)

    def __ge__(self, other: "LinearRelation") -> bool:
        return self.contains(other)

    def intersect(self, other: "LinearRelation") -> "LinearRelation":
        _same_shape(self, other)
        return LinearRelation(self.dom_dim, self.cod_dim, self.graph & other.graph)

    __and__ = intersect

    def sum(self, other: "LinearRelation") -> "LinearRelation":
        _same_shape(self, other)
        return LinearRelation(self.dom_dim, self.cod_dim, self.graph + other.graph)

    __add__ = sum

    def __str__(self) -> str:
        rows = "; ".join(
            " ".join(map(str, x)) + " | " + " ".join(map(str, y)) for x, y in self.pairs()
        )
        return f"LinearRelation[{self.field}, {self.dom_dim}→{self.cod_dim}]{{{rows}}}"


def _dot(field: FieldSpec, u: Sequence[Raw], v: Sequence[Raw]) -> Raw:
    s = field.zero
    for a, b in zip(u, v):
        s = s + a * b
    return field.coerce(s) if field.p is not None else s


def _same_shape(r: LinearRelation, s: LinearRelation) -> None:
    if r.field != s.field:
        raise FieldMismatch(f"{r.field} vs {s.field}")
    if r.shape != s.shape:
        raise ShapeMismatch(f"relations of shape {r.shape} and {s.shape}")


def inverse(r: LinearRelation) -> LinearRelation:
    return r.inverse


def parts(r: LinearRelation) -> RelationParts:
    return r.parts


def is_operator(r: LinearRelation) -> bool:
    return r.is_operator()


def compose(s: LinearRelation, r: LinearRelation) -> LinearRelation:
    """The product SR = {(x, z) : (x, y) ∈ R, (y, z) ∈ S for some y}.

    Lifts R to R × K^p and S to K^n × S inside K^(n+m+p), intersects, and
    projects away the middle block.
    """
    if s.field != r.field:
        raise FieldMismatch(f"{s.field} vs {r.field}")
    if r.cod_dim != s.dom_dim:
        raise DimensionMismatch(f"cannot compose: R ends in K^{r.cod_dim}, S starts in K^{s.dom_dim}")
    f = r.field
    n, m, p = r.dom_dim, r.cod_dim, s.cod_dim
    total = n + m + p
    lifted_r = Subspace(f, total, r.graph.embed(total, 0).basis + Subspace.full(f, p).embed(total, n + m).basis)
    lifted_s = Subspace(f, total, Subspace.full(f, n).embed(total, 0).basis + s.graph.embed(total, n).basis)
    triples = lifted_r & lifted_s
    return LinearRelation(n, p, triples.project(list(range(n)) + list(range(n + m, total))))


def image(r: LinearRelation, u: Subspace) -> Subspace:
    """R(U) = {y : (x, y) ∈ R for some x ∈ U}."""
    if u.ambient_dim != r.dom_dim:
        raise DimensionMismatch(f"subspace of K^{u.ambient_dim} for a relation on K^{r.dom_dim}")
    return restrict(r, u).ran


def preimage(r: LinearRelation, w: Subspace) -> Subspace:
    """R⁻¹(W)."""
    return image(r.inverse, w)


def restrict(r: LinearRelation, u: Subspace) -> LinearRelation:
    """R|_U = R ∩ (U × K^m)."""
    if u.ambient_dim != r.dom_dim:
        raise DimensionMismatch(f"subspace of K^{u.ambient_dim} for a relation on K^{r.dom_dim}")
    if u.contains(r.dom):
        return r
    box = u.times(Subspace.full(r.field, r.cod_dim))
    return LinearRelation(r.dom_dim, r.cod_dim, r.graph & box)


def diagonal(u: Subspace) -> LinearRelation:
    """Δ_U = {(u, u) : u ∈ U}."""
    # [u | u] rows keep U's pivots, so the doubled basis is already RREF
    return LinearRelation(u.ambient_dim, u.ambient_dim, Subspace(u.field, 2 * u.ambient_dim, tuple(b + b for b in u.basis)))


def arens_equal(r: LinearRelation, s: LinearRelation) -> DecisionReport:
    """Decide R = S through R ⊆ S plus equal kernels and ranges."""
    _same_shape(r, s)
    evidence = [
        inclusion("R ⊆ S", r.graph, s.graph),
        Evidence.compare("ker R = ker S", r.ker.dim, "=", s.ker.dim, holds=r.ker == s.ker),
        Evidence.compare("ran R = ran S", r.ran.dim, "=", s.ran.dim, holds=r.ran == s.ran),
    ]
    direct = Evidence.compare("graph R = graph S", r.dim, "=", s.dim, holds=r.graph == s.graph)
    return DecisionReport.conjunction("equality via parts", evidence, cross_checks=[direct])


def contained_via_parts(a: LinearRelation, b: LinearRelation) -> DecisionReport:
    """Decide A ⊆ B through ker A ⊆ ker B and ran(A ∩ B) = ran A."""
    _same_shape(a, b)
    both = a & b
    evidence = [
        inclusion("ker A ⊆ ker B", a.ker, b.ker),
        Evidence.compare("ran (A ∩ B) = ran A", both.ran.dim, "=", a.ran.dim, holds=both.ran == a.ran),
    ]
    alt = [
        inclusion("mul A ⊆ mul B", a.mul, b.mul),
        Evidence.compare("dom (A ∩ B) = dom A", both.dom.dim, "=", a.dom.dim, holds=both.dom == a.dom),
    ]
    alt_verdict = all(e.holds for e in alt)
    cross = [
        Evidence("mul/dom form: " + " and ".join(e.label for e in alt), alt_verdict, {}),
        Evidence("A ⊆ B (direct)", b.graph.contains(a.graph), {"dim A": a.dim, "dim B": b.dim}),
    ]
    return DecisionReport.conjunction("containment via parts", evidence, cross_checks=cross)


def canonical_preimage(r: LinearRelation, y: Sequence[Raw]) -> Vector:
    """Canonical x with (x, y) ∈ R."""
    return r.inverse.pick(y)
