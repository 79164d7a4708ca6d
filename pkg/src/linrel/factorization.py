"""Criteria and constructive solvers for A ⊆ BC and A ⊆ CB.

Right problems take A ⊆ X×Z and B ⊆ Y×Z and look for C ⊆ X×Y with A ⊆ BC.
Left problems take A ⊆ X×Z and B ⊆ X×Y and look for C ⊆ Y×Z with A ⊆ CB.

Every constructive solver re-verifies what it built before returning and
raises :class:`VerificationError` if a check fails.  All choices (bases,
complements, fibre elements) are the canonical ones from :mod:`subspace` and
:meth:`LinearRelation.pick`, so results are reproducible.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import FieldMismatch, NotAnOperator, ShapeMismatch, VerificationError
from .relation import LinearRelation, compose, diagonal, image, restrict
from .report import DecisionReport, Evidence, inclusion
from .subspace import Subspace, Vector, complement_basis, is_independent, vadd, vsub, zero_vector

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolutionBasis:
    """The basis families a left solution is assembled from.

    ``z`` is a basis of ran A whose first entries (``split_I0``) span
    A(dom A ∩ ker B); ``y[α]`` lies in BA⁻¹(z[α]) and ``x[α]`` is the point of
    dom A linking the two.  ``x_prime`` is a basis of ker A whose first
    entries (``split_J0``) span ker A ∩ ker B; ``y_prime[β]`` lies in
    B(x_prime[β]) and vanishes on ``split_J0``.
    """

    z: tuple[Vector, ...]
    y: tuple[Vector, ...]
    x: tuple[Vector, ...]
    x_prime: tuple[Vector, ...]
    y_prime: tuple[Vector, ...]
    split_I0: tuple[int, ...]
    split_J0: tuple[int, ...]


@dataclass(frozen=True)
class OperatorSolution:
    C: LinearRelation
    problem: str
    basis: SolutionBasis | None = None
    validation: tuple[Evidence, ...] = dc_field(default=())

    @property
    def valid(self) -> bool:
        return all(e.holds for e in self.validation)


# -- shape helpers ------------------------------------------------------------


def _right_shape(a: LinearRelation, b: LinearRelation) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if a.cod_dim != b.cod_dim:
        raise ShapeMismatch(f"A ⊆ K^{a.dom_dim}×K^{a.cod_dim} and B ⊆ K^{b.dom_dim}×K^{b.cod_dim} need a common codomain")


def _left_shape(a: LinearRelation, b: LinearRelation) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if a.dom_dim != b.dom_dim:
        raise ShapeMismatch(f"A ⊆ K^{a.dom_dim}×K^{a.cod_dim} and B ⊆ K^{b.dom_dim}×K^{b.cod_dim} need a common domain")


def _require(problem: str, checks: Sequence[Evidence]) -> tuple[Evidence, ...]:
    bad = [e.label for e in checks if not e.holds]
    if bad:
        raise VerificationError(f"{problem}: constructed solution failed {', '.join(bad)}")
    return tuple(checks)


def _span(field, n: int, vectors) -> Subspace:
    return Subspace._from_raw(field, n, vectors)


# -- relation solutions --------------------------------------------------------


def right_relation_criterion(a: LinearRelation, b: LinearRelation) -> DecisionReport:
    """Some relation C has A ⊆ BC exactly when ran A ⊆ ran B."""
    _right_shape(a, b)
    bba = compose(b, compose(b.inverse, a))
    cross = [Evidence("A ⊆ BB⁻¹A", bba.contains(a), {"dim A": a.dim, "dim BB⁻¹A": bba.dim})]
    return DecisionReport.conjunction("right-relation", [inclusion("ran A ⊆ ran B", a.ran, b.ran)], cross)


def solve_right_relation(a: LinearRelation, b: LinearRelation) -> LinearRelation | None:
    """C = B⁻¹A when ran A ⊆ ran B, else None."""
    _right_shape(a, b)
    if not b.ran.contains(a.ran):
        return None
    c = compose(b.inverse, a)
    _require("right-relation", [Evidence("A ⊆ BC", compose(b, c).contains(a))])
    return c


def left_relation_criterion(a: LinearRelation, b: LinearRelation) -> DecisionReport:
    """Some relation C has A ⊆ CB exactly when dom A ⊆ dom B."""
    _left_shape(a, b)
    abb = compose(compose(a, b.inverse), b)
    cross = [Evidence("A ⊆ AB⁻¹B", abb.contains(a), {"dim A": a.dim, "dim AB⁻¹B": abb.dim})]
    return DecisionReport.conjunction("left-relation", [inclusion("dom A ⊆ dom B", a.dom, b.dom)], cross)


def solve_left_relation(a: LinearRelation, b: LinearRelation) -> LinearRelation | None:
    """C = AB⁻¹ when dom A ⊆ dom B, else None."""
    _left_shape(a, b)
    if not b.dom.contains(a.dom):
        return None
    c = compose(a, b.inverse)
    _require("left-relation", [Evidence("A ⊆ CB", compose(c, b).contains(a))])
    return c


def exact_right_check(a: LinearRelation, b: LinearRelation) -> DecisionReport:
    """Does A = BB⁻¹A hold?"""
    _right_shape(a, b)
    evidence = [
        inclusion("mul B ⊆ ran A", b.mul, a.ran),
        inclusion("ran A ⊆ ran B", a.ran, b.ran),
        inclusion("A⁻¹(mul B) ⊆ ker A", image(a.inverse, b.mul), a.ker),
    ]
    bba = compose(b, compose(b.inverse, a))
    cross = [Evidence("A = BB⁻¹A (direct)", bba == a, {"dim A": a.dim, "dim BB⁻¹A": bba.dim})]
    return DecisionReport.conjunction("exact-right", evidence, cross)


def exact_left_check(a: LinearRelation, b: LinearRelation) -> DecisionReport:
    """Does A = AB⁻¹B hold?"""
    _left_shape(a, b)
    evidence = [
        inclusion("ker B ⊆ dom A", b.ker, a.dom),
        inclusion("dom A ⊆ dom B", a.dom, b.dom),
        inclusion("A(ker B) ⊆ mul A", image(a, b.ker), a.mul),
    ]
    abb = compose(compose(a, b.inverse), b)
    cross = [Evidence("A = AB⁻¹B (direct)", abb == a, {"dim A": a.dim, "dim AB⁻¹B": abb.dim})]
    return DecisionReport.conjunction("exact-left", evidence, cross)


# -- A ⊆ BX with operator solutions ---------------------------------------------


def pointwise_right_check(a: LinearRelation, b: LinearRelation) -> DecisionReport:
    """For x = 0 and each basis vector x of dom A: is A(x) ⊆ B(y) for some y?

    A(x) is the coset pick + mul A; it sits inside some B(y) iff the canonical
    y over the picked point also carries every pick + m, m in a basis of mul A.
    """
    _right_shape(a, b)
    f = a.field
    points = [("0", zero_vector(f, a.dom_dim))] + [(f"x{i + 1}", x) for i, x in enumerate(a.dom.basis)]
    evidence = []
    for name, x in points:
        z = a.pick(x)
        ok = b.ran.contains(_span(f, a.cod_dim, [z]))
        if ok:
            y = b.inverse.pick(z)
            ok = all(b.has_pair(y, vadd(f, z, m)) for m in a.mul.basis)
        evidence.append(Evidence(f"∃y: A({name}) ⊆ B(y)", ok))
    return DecisionReport.conjunction("right-operator pointwise", evidence)


def right_operator_criterion(a: LinearRelation, b: LinearRelation) -> DecisionReport:
    _right_shape(a, b)
    evidence = [
        inclusion("ran A ⊆ ran B", a.ran, b.ran),
        inclusion("mul A ⊆ mul B", a.mul, b.mul),
    ]
    pw = pointwise_right_check(a, b)
    cross = [Evidence("pointwise: ∃y with A(x) ⊆ B(y)", pw.verdict, {"points": len(pw.evidence)})]
    return DecisionReport.conjunction("right-operator", evidence, cross)


def solve_right_operator(a: LinearRelation, b: LinearRelation) -> OperatorSolution | None:
    """An operator C with A ⊆ BC and dom C = dom A, or None.

    One pass over the basis of dom A: x ↦ y where y is the canonical point
    of B⁻¹(z) over the canonical z ∈ A(x).
    """
    _right_shape(a, b)
    if not (b.ran.contains(a.ran) and b.mul.contains(a.mul)):
        return None
    xs = a.dom.basis
    ys = [b.inverse.pick(a.pick(x)) for x in xs]
    c = LinearRelation.from_pairs(a.field, a.dom_dim, b.dom_dim, zip(xs, ys))
    checks = _require("right-operator", [
        Evidence("A ⊆ BC", compose(b, c).contains(a)),
        Evidence("mul C = {0}", c.is_operator()),
        Evidence("dom C = dom A", c.dom == a.dom),
    ])
    return OperatorSolution(c, "right-operator", None, checks)


def is_right_solution_general_form(a: LinearRelation, b: LinearRelation, c0: OperatorSolution | LinearRelation,
                                   c: LinearRelation) -> DecisionReport:
    """Is the operator C a solution of A ⊆ BX, judged against the known solution C0?

    C solves it iff dom C ⊇ dom A and C₁ = (C − C0)|dom A maps into ker B.
    """
    _right_shape(a, b)
    c0 = c0.C if isinstance(c0, OperatorSolution) else c0
    for name, rel in (("C0", c0), ("C", c)):
        if not rel.is_operator():
            raise NotAnOperator(f"{name} is not an operator")
        if rel.shape != (a.dom_dim, b.dom_dim) or rel.field != a.field:
            raise ShapeMismatch(f"{name} must map K^{a.dom_dim} to K^{b.dom_dim}")
    if not compose(b, c0).contains(a):
        raise ValueError("C0 is not a solution of A ⊆ BX")
    f = a.field
    covers = c.dom.contains(a.dom)
    evidence = [inclusion("dom A ⊆ dom C", a.dom, c.dom)]
    if covers:
        diffs = [vsub(f, c.pick(x), c0.pick(x)) for x in a.dom.basis]
        ran_c1 = _span(f, b.dom_dim, diffs)
        evidence.append(inclusion("ran C₁ ⊆ ker B", ran_c1, b.ker))
    else:
        evidence.append(Evidence("ran C₁ ⊆ ker B (C₁ undefined)", False))
    cross = [Evidence("A ⊆ BC (direct)", compose(b, c).contains(a))]
    return DecisionReport.conjunction("right-operator general form", evidence, cross)


# -- A ⊆ XB with operator solutions ---------------------------------------------


def _left_data(a: LinearRelation, b: LinearRelation):
    d = a.dom & b.ker
    return d, image(a, d)


def left_criterion(a: LinearRelation, b: LinearRelation) -> DecisionReport:
    """Some operator C has A ⊆ CB iff dom A ⊆ dom B and dim mul B ≥ dim A(dom A ∩ ker B)."""
    _left_shape(a, b)
    _, n = _left_data(a, b)
    evidence = [
        inclusion("dom A ⊆ dom B", a.dom, b.dom),
        Evidence.compare("dim mul B ≥ dim A(dom A ∩ ker B)", b.mul.dim, "≥", n.dim),
    ]
    return DecisionReport.conjunction("left-operator", evidence)


def _build_left(a: LinearRelation, b: LinearRelation, problem: str) -> OperatorSolution:
    """Assemble the basis families and the operator they define.

    Caller guarantees dom A ⊆ dom B and dim mul B ≥ dim A(dom A ∩ ker B).
    """
    f = a.field
    d, n = _left_data(a, b)
    z0 = list(n.basis)
    z_rest = complement_basis(n, a.ran)
    a_d = restrict(a, d)
    x0 = [a_d.inverse.pick(z) for z in z0]
    y0 = list(b.mul.basis[: len(z0)])
    x_rest = [a.inverse.pick(z) for z in z_rest]
    y_rest = [b.pick(x) for x in x_rest]

    kk = a.ker & b.ker
    xp0 = list(kk.basis)
    xp_rest = complement_basis(kk, a.ker)
    yp = [zero_vector(f, b.cod_dim)] * len(xp0) + [b.pick(x) for x in xp_rest]

    basis = SolutionBasis(
        z=tuple(z0 + z_rest),
        y=tuple(y0 + y_rest),
        x=tuple(x0 + x_rest),
        x_prime=tuple(xp0 + xp_rest),
        y_prime=tuple(yp),
        split_I0=tuple(range(len(z0))),
        split_J0=tuple(range(len(xp0))),
    )
    zero_z = zero_vector(f, a.cod_dim)
    pairs = list(zip(basis.y, basis.z)) + [(y, zero_z) for y in basis.y_prime]
    c = LinearRelation.from_pairs(f, b.cod_dim, a.cod_dim, pairs)
    return OperatorSolution(c, problem, basis, _left_validation(a, b, c, basis))


def _left_validation(a: LinearRelation, b: LinearRelation, c: LinearRelation, basis: SolutionBasis) -> tuple[Evidence, ...]:
    f = a.field
    m = b.cod_dim
    sp_y = _span(f, m, basis.y)
    sp_yp = _span(f, m, basis.y_prime)
    return (
        Evidence("A ⊆ CB", compose(c, b).contains(a)),
        Evidence("mul C = {0}", c.is_operator()),
        Evidence("z basis of ran A", len(basis.z) == a.ran.dim and _span(f, a.cod_dim, basis.z) == a.ran),
        Evidence("x' basis of ker A", len(basis.x_prime) == a.ker.dim and _span(f, a.dom_dim, basis.x_prime) == a.ker),
        Evidence("y independent", is_independent(f, basis.y, m)),
        Evidence("y_α ∈ BA⁻¹(z_α)", all(a.has_pair(x, z) and b.has_pair(x, y)
                                         for x, y, z in zip(basis.x, basis.y, basis.z))),
        Evidence("y'_β ∈ B(x'_β)", all(b.has_pair(x, y) for x, y in zip(basis.x_prime, basis.y_prime))),
        Evidence("y'_β = 0 on J0", all(not any(basis.y_prime[j]) for j in basis.split_J0)),
        Evidence("Sp{y} ∩ Sp{y'} = {0}", (sp_y & sp_yp).is_zero()),
        Evidence("dom C = Sp{y} ⊕ Sp{y'}", c.dom == sp_y + sp_yp and c.dom.dim == sp_y.dim + sp_yp.dim),
        Evidence("ran C = ran A", c.ran == a.ran),
        Evidence("ker C = Sp{y'}", c.ker == sp_yp),
    )


def solve_left_operator(a: LinearRelation, b: LinearRelation) -> OperatorSolution | None:
    """An operator C with A ⊆ CB built from basis families, or None when the criterion fails."""
    _left_shape(a, b)
    if not left_criterion(a, b).verdict:
        return None
    sol = _build_left(a, b, "left-operator")
    _require("left-operator", sol.validation)
    return sol


def left_injective_criterion(a: LinearRelation, b: LinearRelation) -> DecisionReport:
    _left_shape(a, b)
    _, n = _left_data(a, b)
    bka = image(b, a.ker)
    evidence = [
        inclusion("dom A ⊆ dom B", a.dom, b.dom),
        inclusion("ker A ⊆ ker B", a.ker, b.ker),
        Evidence.compare("dim A(dom A ∩ ker B) ≤ dim B(ker A)", n.dim, "≤", bka.dim),
    ]
    return DecisionReport.conjunction("left-injective", evidence)


def solve_left_operator_injective(a: LinearRelation, b: LinearRelation) -> OperatorSolution | None:
    """An injective operator C with A ⊆ CB, or None.

    With ker A ⊆ ker B every x'_β already lies in ker B, so the left
    construction runs with all y'_β = 0 and produces ker C = {0}.
    """
    _left_shape(a, b)
    if not left_injective_criterion(a, b).verdict:
        return None
    sol = _build_left(a, b, "left-injective")
    checks = sol.validation + (
        Evidence("all y'_β = 0", all(not any(y) for y in sol.basis.y_prime)),
        Evidence("ker C = {0}", sol.C.is_injective()),
    )
    _require("left-injective", checks)
    return OperatorSolution(sol.C, sol.problem, sol.basis, checks)


# -- dimension criteria and operator parts -------------------------------------


def operator_part_criterion(r: LinearRelation) -> DecisionReport:
    """An operator C ⊆ R with ran C = ran R exists iff dim ker R ≥ dim mul R."""
    evidence = [Evidence.compare("dim ker R ≥ dim mul R", r.ker.dim, "≥", r.mul.dim)]
    via_left = left_criterion(diagonal(r.ran), r.inverse)
    cross = [Evidence("∃ operator C: Δ_ran R ⊆ CR⁻¹", via_left.verdict)]
    return DecisionReport.conjunction("operator-part", evidence, cross)


def operator_part(r: LinearRelation) -> OperatorSolution | None:
    """An operator C ⊆ R with ran C = ran R, or None when dim ker R < dim mul R.

    C pairs a complement basis of ker R in dom R with canonical images,
    matches the first dim(mul R) kernel vectors with a basis of mul R and
    sends the remaining kernel vectors to 0, so dom C = dom R.
    """
    k, m = r.ker, r.mul
    if k.dim < m.dim:
        return None
    f = r.field
    xs = complement_basis(k, r.dom)
    zero = zero_vector(f, r.cod_dim)
    pairs = [(x, r.pick(x)) for x in xs] + list(zip(k.basis, list(m.basis) + [zero] * (k.dim - m.dim)))
    c = LinearRelation.from_pairs(f, r.dom_dim, r.cod_dim, pairs)
    checks = _require("operator-part", [
        Evidence("C ⊆ R", r.contains(c)),
        Evidence("mul C = {0}", c.is_operator()),
        Evidence("ran C = ran R", c.ran == r.ran),
        Evidence("dom C = dom R", c.dom == r.dom),
    ])
    return OperatorSolution(c, "operator-part", None, checks)


@dataclass(frozen=True)
class SelectionWitness:
    """A basis of dom R with an independent family of images, x[i] ↦ y[i] ∈ R(x[i])."""

    x: tuple[Vector, ...]
    y: tuple[Vector, ...]


def independent_selection_check(r: LinearRelation, specialization: str = "R") -> tuple[DecisionReport, SelectionWitness | None]:
    """Is there a basis of dom R with linearly independent images? Iff dim ker R ≤ dim mul R.

    When it holds the witness puts a basis of mul R on a basis of ker R and
    canonical images on the complement of ker R in dom R.
    """
    k, m = r.ker, r.mul
    label = "dim ker R ≤ dim mul R" if specialization == "R" else f"dim ker R ≤ dim mul R  [R = {specialization}]"
    evidence = [Evidence.compare(label, k.dim, "≤", m.dim)]
    cross = [Evidence("operator part of R⁻¹ exists", operator_part(r.inverse) is not None)]
    witness = None
    if k.dim <= m.dim:
        f = r.field
        xc = complement_basis(k, r.dom)
        xs = tuple(k.basis) + tuple(xc)
        ys = tuple(m.basis[: k.dim]) + tuple(r.pick(x) for x in xc)
        witness = SelectionWitness(xs, ys)
        cross.append(Evidence("witness x basis of dom R", _span(f, r.dom_dim, xs) == r.dom and len(xs) == r.dom.dim))
        cross.append(Evidence("witness pairs in R", all(r.has_pair(x, y) for x, y in zip(xs, ys))))
        cross.append(Evidence("witness y independent", is_independent(f, ys, r.cod_dim)))
    report = DecisionReport.conjunction("independent-selection", evidence, cross, note=f"specialization R = {specialization}")
    return report, witness


def selection_check_composite(a: LinearRelation, b: LinearRelation) -> tuple[DecisionReport, SelectionWitness | None]:
    """The selection check for R = BA⁻¹, where ker R = A(dom A ∩ ker B) and mul R = B(ker A)."""
    _left_shape(a, b)
    r = compose(b, a.inverse)
    report, witness = independent_selection_check(r, "BA⁻¹")
    _, n = _left_data(a, b)
    bka = image(b, a.ker)
    identities = DecisionReport.conjunction("parts of BA⁻¹", [
        Evidence("ker BA⁻¹ = A(dom A ∩ ker B)", r.ker == n, {"lhs": r.ker.dim, "rhs": n.dim}),
        Evidence("mul BA⁻¹ = B(ker A)", r.mul == bka, {"lhs": r.mul.dim, "rhs": bka.dim}),
    ])
    return DecisionReport(report.verdict, "independent-selection for BA⁻¹", report.evidence, report.failed,
                          report.cross_checks, (identities,), report.note), witness


def _vector_outside(w: Subspace, p: Subspace, q: Subspace) -> Vector:
    """A vector of W in neither of the proper subspaces P, Q of W."""
    w1 = next(v for v in w.basis if any(p.reduce(v)))
    w2 = next(v for v in w.basis if any(q.reduce(v)))
    if any(q.reduce(w1)):
        return w1
    if any(p.reduce(w2)):
        return w2
    return vadd(w.field, w1, w2)


def avoiding_complement(w: Subspace, u: Subspace, avoid: Subspace) -> Subspace | None:
    """X₀ with u ⊕ X₀ = w and X₀ ∩ avoid = {0}, or None if no such X₀ exists."""
    x = Subspace.zero(w.field, w.ambient_dim)
    while u.dim + x.dim < w.dim:
        p, q = u + x, (avoid & w) + x
        if q == w:
            return None
        v = _vector_outside(w, p, q)
        x = x + _span(w.field, w.ambient_dim, [v])
    return x


def operators_left_sufficient(a: LinearRelation, b: LinearRelation) -> DecisionReport:
    """Sufficient test for A ⊆ XB when A is an operator, plus the exact test when B is one too."""
    _left_shape(a, b)
    if not a.is_operator():
        raise NotAnOperator("A must be an operator")
    evidence = [
        inclusion("dom A ⊆ dom B", a.dom, b.dom),
        inclusion("ker B ∩ dom A ⊆ ker A", b.ker & a.dom, a.ker),
    ]
    solvable = solve_left_operator(a, b) is not None
    pre = all(e.holds for e in evidence)
    cross = [Evidence("solver finds a solution", solvable)] if pre else []
    subs = (complement_split_check(a, b, solvable),) if b.is_operator() else ()
    return DecisionReport.conjunction("left-operator sufficient", evidence, cross, subs, note="sufficient condition")


def complement_split_check(a: LinearRelation, b: LinearRelation, solvable: bool | None = None) -> DecisionReport:
    """Both operators: pick X₀ complementing ker A in dom A away from ker B, then test B(ker A) ∩ B(X₀) = {0}."""
    _left_shape(a, b)
    if not (a.is_operator() and b.is_operator()):
        raise NotAnOperator("the complement split test needs A and B to be operators")
    evidence = [inclusion("dom A ⊆ dom B", a.dom, b.dom)]
    x0 = avoiding_complement(a.dom, a.ker, b.ker) if evidence[0].holds else None
    evidence.append(Evidence("some complement of ker A in dom A avoids ker B", x0 is not None))
    if x0 is not None:
        meet = image(b, a.ker) & image(b, x0)
        evidence.append(Evidence("B(ker A) ∩ B(X₀) = {0}", meet.is_zero(), {"dim": meet.dim, "dim X₀": x0.dim}))
    if solvable is None:
        solvable = solve_left_operator(a, b) is not None
    return DecisionReport.conjunction("left-operator complement split", evidence, [Evidence("solver finds a solution", solvable)])


# -- verification of user-supplied solutions (CLI `check` with a C file) -------


def verify_right_solution(a: LinearRelation, b: LinearRelation, c: LinearRelation, *, operator: bool,
                          exact: bool = False) -> DecisionReport:
    _right_shape(a, b)
    if c.shape != (a.dom_dim, b.dom_dim):
        raise ShapeMismatch(f"C must map K^{a.dom_dim} to K^{b.dom_dim}")
    bc = compose(b, c)
    evidence = [Evidence("A = BC" if exact else "A ⊆ BC", bc == a if exact else bc.contains(a))]
    if operator:
        evidence.append(inclusion("mul C = {0}", c.mul, Subspace.zero(c.field, c.cod_dim)))
    return DecisionReport.conjunction("solution", evidence)


def verify_left_solution(a: LinearRelation, b: LinearRelation, c: LinearRelation, *, operator: bool,
                         injective: bool = False, exact: bool = False) -> DecisionReport:
    _left_shape(a, b)
    if c.shape != (b.cod_dim, a.cod_dim):
        raise ShapeMismatch(f"C must map K^{b.cod_dim} to K^{a.cod_dim}")
    cb = compose(c, b)
    evidence = [Evidence("A = CB" if exact else "A ⊆ CB", cb == a if exact else cb.contains(a))]
    if operator:
        evidence.append(inclusion("mul C = {0}", c.mul, Subspace.zero(c.field, c.cod_dim)))
    if injective:
        evidence.append(inclusion("ker C = {0}", c.ker, Subspace.zero(c.field, c.dom_dim)))
    return DecisionReport.conjunction("solution", evidence)


def verify_operator_part(r: LinearRelation, c: LinearRelation) -> DecisionReport:
    if c.shape != r.shape:
        raise ShapeMismatch("C must have the shape of R")
    evidence = [
        Evidence("C ⊆ R", r.contains(c)),
        inclusion("mul C = {0}", c.mul, Subspace.zero(c.field, c.cod_dim)),
        Evidence("ran C = ran R", c.ran == r.ran),
    ]
    return DecisionReport.conjunction("solution", evidence)
