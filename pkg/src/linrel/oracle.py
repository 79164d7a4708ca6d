"""Exhaustive ground truth over tiny prime fields.

Everything here works on explicit sets of vectors: spans are enumerated as
all linear combinations of the generators, candidate relations are generated
directly in reduced echelon shape, and every containment is decided point by
point.  Nothing in this module calls the elimination-based routines it is
meant to check, and the solvers never call into it.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded
from .field import FieldSpec
from .relation import LinearRelation

Point = tuple


@dataclass(frozen=True)
class EnumerationBudget:
    field: FieldSpec
    max_total_points: int = 4096
    max_candidates: int = 10**6

    def __post_init__(self) -> None:
        if not self.field.is_prime_field:
            raise ValueError("enumeration needs a prime field")


class Problem(str, enum.Enum):
    RIGHT_RELATION = "RightRelation"
    RIGHT_OPERATOR = "RightOperator"
    LEFT_OPERATOR = "LeftOperator"
    LEFT_INJECTIVE_OPERATOR = "LeftInjectiveOperator"
    OPERATOR_PART = "OperatorPart"


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(n: int, q: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def _check_points(budget: EnumerationBudget, n: int) -> None:
    if budget.field.p ** n > budget.max_total_points:
        raise BudgetExceeded(f"|K|^{n} = {budget.field.p ** n} exceeds {budget.max_total_points} points")


def _check_candidates(budget: EnumerationBudget, count: int) -> None:
    if count > budget.max_candidates:
        raise BudgetExceeded(f"{count} candidates exceed the cap of {budget.max_candidates}")


# -- point sets ----------------------------------------------------------------


def span_points(p: int, generators: Sequence[Sequence[int]], n: int) -> frozenset[Point]:
    """Every linear combination of the generators, by brute force."""
    pts = {(0,) * n}
    for g in generators:
        g = [int(a) % p for a in g]
        pts = {tuple((a + c * b) % p for a, b in zip(v, g)) for v in pts for c in range(p)}
    return frozenset(pts)


def all_points(p: int, n: int) -> Iterator[Point]:
    return itertools.product(range(p), repeat=n)


def is_independent_family(p: int, family: Sequence[Point], n: int) -> bool:
    return len(span_points(p, family, n)) == p ** len(family)


class PointRelation:
    """A relation held as its full set of pairs."""

    def __init__(self, n: int, m: int, points: Iterable[Point]) -> None:
        self.n, self.m = n, m
        self.points = frozenset(points)
        self.fibre: dict[Point, set[Point]] = {}
        for pt in self.points:
            self.fibre.setdefault(pt[:n], set()).add(pt[n:])

    @classmethod
    def of(cls, r: LinearRelation) -> "PointRelation":
        p = r.field.p
        return cls(r.dom_dim, r.cod_dim, span_points(p, r.graph.basis, r.dom_dim + r.cod_dim))

    def image(self, x: Point) -> set[Point]:
        return self.fibre.get(x, set())

    def has(self, x: Point, y: Point) -> bool:
        return (x + y) in self.points

    @property
    def dom(self) -> frozenset[Point]:
        return frozenset(self.fibre)

    @property
    def ran(self) -> frozenset[Point]:
        return frozenset(pt[self.n:] for pt in self.points)

    @property
    def ker(self) -> frozenset[Point]:
        z = (0,) * self.m
        return frozenset(x for x, ys in self.fibre.items() if z in ys)

    @property
    def mul(self) -> frozenset[Point]:
        return frozenset(self.image((0,) * self.n))

    def single_valued(self) -> bool:
        return len(self.mul) == 1

    def injective(self) -> bool:
        return len(self.ker) == 1


# -- enumeration -----------------------------------------------------------------


def enumerate_subspace_rows(p: int, n: int, dim: int | None = None) -> Iterator[list[Point]]:
    """Each subspace of GF(p)^n exactly once, as the rows of its reduced echelon basis.

    Walks pivot-column subsets; the free entries (right of a pivot, outside
    pivot columns) range over every field element.
    """
    dims = range(n + 1) if dim is None else [dim]
    for k in dims:
        for pivots in itertools.combinations(range(n), k):
            pivot_set = set(pivots)
            slots = [(i, j) for i, c in enumerate(pivots) for j in range(c + 1, n) if j not in pivot_set]
            for fill in itertools.product(range(p), repeat=len(slots)):
                rows = [[0] * n for _ in range(k)]
                for i, c in enumerate(pivots):
                    rows[i][c] = 1
                for (i, j), v in zip(slots, fill):
                    rows[i][j] = v
                yield [tuple(r) for r in rows]


def enumerate_operators(dom_dim: int, cod_dim: int, field: FieldSpec,
                        budget: EnumerationBudget | None = None) -> Iterator[LinearRelation]:
    """Every total linear map K^dom_dim → K^cod_dim, once each, as a graph."""
    budget = budget or EnumerationBudget(field)
    p = field.p
    _check_candidates(budget, p ** (dom_dim * cod_dim))
    for entries in itertools.product(range(p), repeat=dom_dim * cod_dim):
        matrix = [entries[i * dom_dim:(i + 1) * dom_dim] for i in range(cod_dim)]
        yield LinearRelation.from_matrix(field, matrix, dom_dim=dom_dim)


def candidate_relations(p: int, n: int, m: int, budget: EnumerationBudget, *, operator: bool = False,
                        injective: bool = False) -> Iterator[PointRelation]:
    """Every relation in K^n × K^m (optionally only operators / injective operators) as point sets."""
    _check_points(budget, n + m)
    _check_candidates(budget, count_subspaces(n + m, p))
    for rows in enumerate_subspace_rows(p, n + m):
        rel = PointRelation(n, m, span_points(p, rows, n + m))
        if operator and not rel.single_valued():
            continue
        if injective and not rel.injective():
            continue
        yield rel


# -- existence questions ---------------------------------------------------------


def _right_holds(a: PointRelation, b: PointRelation, c: PointRelation) -> bool:
    """A ⊆ BC, point by point."""
    for pt in a.points:
        x, z = pt[:a.n], pt[a.n:]
        if not any(b.has(y, z) for y in c.image(x)):
            return False
    return True


def _left_holds(a: PointRelation, b: PointRelation, c: PointRelation) -> bool:
    """A ⊆ CB, point by point."""
    for pt in a.points:
        x, z = pt[:a.n], pt[a.n:]
        if not any(c.has(y, z) for y in b.image(x)):
            return False
    return True


def oracle_exists(problem: Problem | str, a: LinearRelation, b: LinearRelation | None = None,
                  budget: EnumerationBudget | None = None) -> bool:
    """Decide an existence question by trying every candidate C."""
    problem = Problem(problem)
    field = a.field
    budget = budget or EnumerationBudget(field)
    p = field.p
    pa = PointRelation.of(a)
    _check_points(budget, a.dom_dim + a.cod_dim)
    if problem is Problem.OPERATOR_PART:
        target_ran = pa.ran
        for c in candidate_relations(p, a.dom_dim, a.cod_dim, budget, operator=True):
            if c.points <= pa.points and c.ran == target_ran:
                return True
        return False
    if b is None:
        raise ValueError(f"{problem.value} needs two relations")
    pb = PointRelation.of(b)
    _check_points(budget, b.dom_dim + b.cod_dim)
    if problem in (Problem.RIGHT_RELATION, Problem.RIGHT_OPERATOR):
        op = problem is Problem.RIGHT_OPERATOR
        return any(_right_holds(pa, pb, c) for c in candidate_relations(p, a.dom_dim, b.dom_dim, budget, operator=op))
    inj = problem is Problem.LEFT_INJECTIVE_OPERATOR
    return any(_left_holds(pa, pb, c)
               for c in candidate_relations(p, b.cod_dim, a.cod_dim, budget, operator=True, injective=inj))


def oracle_compose(s: LinearRelation, r: LinearRelation) -> frozenset[Point]:
    """All pairs (x, z) chained through some y, found element by element."""
    ps, pr = PointRelation.of(s), PointRelation.of(r)
    out = set()
    for pt in pr.points:
        x, y = pt[:pr.n], pt[pr.n:]
        for z in ps.image(y):
            out.add(x + z)
    return frozenset(out)


def relation_points(r: LinearRelation) -> frozenset[Point]:
    return PointRelation.of(r).points


# -- basis-family statements ----------------------------------------------------


def bases(p: int, space: frozenset[Point], n: int) -> Iterator[tuple[Point, ...]]:
    """Every unordered basis of the subspace given by its point set."""
    k = 0
    while p ** k < len(space):
        k += 1
    nonzero = sorted(v for v in space if any(v))
    for fam in itertools.combinations(nonzero, k):
        if is_independent_family(p, fam, n):
            yield fam


def left_families(a: LinearRelation, b: LinearRelation, *, every_basis: bool) -> bool:
    """Basis families for A ⊆ XB, tried exhaustively.

    With ``every_basis`` False: some basis z of ran A and some basis x' of
    ker A admit an independent y_α ∈ BA⁻¹(z_α) and y'_β ∈ B(x'_β) with
    Sp{y} ∩ Sp{y'} = {0}.  With True: every pair of such bases admits them.
    """
    p = a.field.p
    pa, pb = PointRelation.of(a), PointRelation.of(b)
    m = b.cod_dim

    def ba_inv(z: Point) -> set[Point]:
        return {y for x, zs in pa.fibre.items() if z in zs for y in pb.image(x)}

    def admits(zs: Sequence[Point], xps: Sequence[Point]) -> bool:
        for ys in itertools.product(*[sorted(ba_inv(z)) for z in zs]):
            if not is_independent_family(p, ys, m):
                continue
            sp_y = span_points(p, ys, m)
            for yps in itertools.product(*[sorted(pb.image(x)) for x in xps]):
                if sp_y & span_points(p, yps, m) == {(0,) * m}:
                    return True
        return False

    combos = ((zs, xps) for zs in bases(p, pa.ran, a.cod_dim) for xps in bases(p, pa.ker, a.dom_dim))
    if every_basis:
        return all(admits(zs, xps) for zs, xps in combos)
    return any(admits(zs, xps) for zs, xps in combos)


def selection_exhaustive(r: LinearRelation) -> tuple[bool, bool]:
    """(some basis of dom R, every basis of dom R) admits independent y_α ∈ R(x_α)."""
    p = r.field.p
    pr = PointRelation.of(r)
    results = []
    for fam in bases(p, pr.dom, r.dom_dim):
        ok = any(is_independent_family(p, ys, r.cod_dim)
                 for ys in itertools.product(*[sorted(pr.image(x)) for x in fam]))
        results.append(ok)
    return any(results), all(results)


def complement_split_exhaustive(a: LinearRelation, b: LinearRelation) -> tuple[bool, bool, bool]:
    """For operators A, B: (family F nonempty, some X₀ ∈ F works, every X₀ ∈ F works).

    F collects the X₀ ⊆ dom A ∩ dom B with dom A = ker A ⊕ X₀ and X₀ ∩ ker B = {0};
    X₀ works when B(ker A) ∩ B(X₀) = {0}.
    """
    p = a.field.p
    n = a.dom_dim
    pa, pb = PointRelation.of(a), PointRelation.of(b)
    dom_a, ker_a, dom_b, ker_b = pa.dom, pa.ker, pb.dom, pb.ker
    zero = (0,) * n
    b_ker_a = {y for x in ker_a for y in pb.image(x)}
    fam, works = [], []
    for rows in enumerate_subspace_rows(p, n):
        x0 = span_points(p, rows, n)
        if not (x0 <= dom_a and x0 <= dom_b):
            continue
        if x0 & ker_a != {zero} or x0 & ker_b != {zero} or len(x0) * len(ker_a) != len(dom_a):
            continue
        fam.append(x0)
        b_x0 = {y for x in x0 for y in pb.image(x)}
        works.append(b_ker_a & b_x0 == {(0,) * b.cod_dim})
    return bool(fam), any(works), bool(fam) and all(works)
