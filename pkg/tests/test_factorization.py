import itertools

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import GF2, GF3, fields, left_pairs, operators, rel, relation_or_operator, right_pairs, single_relations, sub
from linrel import factorization as fz
from linrel.errors import NotAnOperator, ShapeMismatch
from linrel.field import QQ
from linrel.oracle import (PointRelation, Problem, complement_split_exhaustive, enumerate_operators, left_families,
                           oracle_exists, selection_exhaustive)
from linrel.relation import LinearRelation, compose, diagonal, image
from linrel.subspace import Subspace, is_independent


def operator_solutions(problem, a, b):
    """Every total map that solves A ⊆ CB (left) or A ⊆ BC (right), restricted to where it matters."""
    if problem == "left":
        maps = enumerate_operators(b.cod_dim, a.cod_dim, a.field)
        return [c for c in maps if compose(c, b).contains(a)]
    maps = enumerate_operators(a.dom_dim, b.dom_dim, a.field)
    return [c for c in maps if compose(b, c).contains(a)]


class TestRightRelation:
    def test_a_equals_b(self):
        b = rel(GF3, 2, 2, [1, 1, 0, 2], [0, 0, 1, 1])
        c = fz.solve_right_relation(b, b)
        assert c == compose(b.inverse, b) and compose(b, c).contains(b)

    def test_full_range_instance(self):
        a = LinearRelation.from_matrix(GF2, [[1, 0], [0, 0]])
        b = rel(GF2, 2, 2, [1, 0, 1, 0], [0, 0, 0, 1])
        c = fz.solve_right_relation(a, b)
        assert c == compose(b.inverse, a)
        assert all(compose(b, c).has_pair(x, y) for x, y in a.pairs())
        assert oracle_exists(Problem.RIGHT_RELATION, a, b)

    def test_range_obstruction(self):
        a, b = LinearRelation.identity(GF2, 1), LinearRelation.zero(GF2, 1, 1)
        assert fz.solve_right_relation(a, b) is None
        assert fz.right_relation_criterion(a, b).failed == "ran A ⊆ ran B"

    def test_shape(self):
        with pytest.raises(ShapeMismatch):
            fz.solve_right_relation(LinearRelation.identity(GF2, 2), LinearRelation.identity(GF2, 1))

    @given(right_pairs())
    def test_success_iff_range_inclusion(self, pair):
        a, b = pair
        c = fz.solve_right_relation(a, b)
        assert (c is not None) == b.ran.contains(a.ran)
        if c is not None:
            assert compose(b, c).contains(a)


class TestLeftRelation:
    def test_identity_b(self):
        a = rel(GF3, 2, 1, [1, 2, 1], [0, 1, 2])
        assert fz.solve_left_relation(a, LinearRelation.identity(GF3, 2)) == a

    def test_domain_obstruction(self):
        a = LinearRelation.identity(GF2, 2)
        b = rel(GF2, 2, 2, [1, 0, 1, 0])
        assert fz.solve_left_relation(a, b) is None

    @given(left_pairs())
    def test_success_iff_domain_inclusion_and_duality(self, pair):
        a, b = pair
        c = fz.solve_left_relation(a, b)
        assert (c is not None) == b.dom.contains(a.dom)
        assert (c is not None) == (fz.solve_right_relation(a.inverse, b.inverse) is not None)
        if c is not None:
            assert compose(c, b).contains(a)


class TestExactness:
    @given(st.data())
    def test_operator_b_with_range_inclusion(self, data):
        f = data.draw(fields)
        n, m, q = (data.draw(st.integers(0, 3)) for _ in range(3))
        b = data.draw(operators(f, m, q))
        a = data.draw(relation_or_operator(f, n, q))
        a = LinearRelation(n, q, a.graph & LinearRelation.product(Subspace.full(f, n), b.ran).graph)
        report = fz.exact_right_check(a, b)
        assert report.verdict
        assert compose(b, compose(b.inverse, a)) == a

    def test_mul_b_outside_ran_a(self):
        a = LinearRelation.from_matrix(GF2, [[1, 0], [0, 0]])
        b = rel(GF2, 2, 2, [1, 0, 1, 0], [0, 0, 0, 1])
        report = fz.exact_right_check(a, b)
        assert not report.verdict and report.failed == "mul B ⊆ ran A"
        assert compose(b, compose(b.inverse, a)) != a

    def test_identities(self):
        i2 = LinearRelation.identity(QQ, 2)
        assert fz.exact_right_check(i2, i2).verdict and fz.exact_left_check(i2, i2).verdict

    @given(st.data())
    def test_injective_operator_b_with_domain_inclusion(self, data):
        f = data.draw(fields)
        n, m, q = (data.draw(st.integers(0, 3)) for _ in range(3))
        b = data.draw(operators(f, m, n)).inverse  # b⁻¹ is an operator
        a = data.draw(relation_or_operator(f, n, q))
        a = LinearRelation(n, q, a.graph & LinearRelation.product(b.dom, Subspace.full(f, q)).graph)
        assert fz.exact_left_check(a, b).verdict
        assert compose(compose(a, b.inverse), b) == a

    def test_projection_kernel(self):
        a = LinearRelation.identity(GF2, 2)
        b = LinearRelation.from_matrix(GF2, [[1, 0], [0, 0]])
        report = fz.exact_left_check(a, b)
        assert not report.verdict and report.failed == "A(ker B) ⊆ mul A"
        assert compose(compose(a, b.inverse), b) != a

    @given(right_pairs())
    def test_right_matches_direct_equality(self, pair):
        a, b = pair
        assert fz.exact_right_check(a, b).verdict == (compose(b, compose(b.inverse, a)) == a)

    @given(left_pairs())
    def test_left_matches_direct_equality(self, pair):
        a, b = pair
        assert fz.exact_left_check(a, b).verdict == (compose(compose(a, b.inverse), b) == a)


class TestRightOperator:
    def test_same_operator(self):
        b = LinearRelation.from_matrix(GF3, [[1, 2], [0, 1], [1, 1]])
        sol = fz.solve_right_operator(b, b)
        assert sol is not None and compose(b, sol.C).contains(b) and sol.C.is_operator()

    def test_mul_obstruction(self):
        a, b = rel(GF2, 1, 1, [0, 1]), LinearRelation.identity(GF2, 1)
        report = fz.right_operator_criterion(a, b)
        assert not report.verdict and report.failed == "mul A ⊆ mul B"
        assert fz.right_relation_criterion(a, b).verdict
        assert fz.solve_right_operator(a, b) is None
        assert not fz.pointwise_right_check(a, b).verdict
        # oracle: both maps K → K fail
        assert operator_solutions("right", a, b) == []
        assert len(list(enumerate_operators(1, 1, GF2))) == 2

    def test_pointwise_check_sees_the_origin(self):
        # dom A = {0}: without the origin the basis loop would be empty and vacuously true
        a, b = rel(GF2, 1, 1, [0, 1]), LinearRelation.zero(GF2, 1, 1)
        assert a.dom.is_zero()
        assert not fz.pointwise_right_check(a, b).verdict

    @given(st.data())
    def test_operator_a_needs_only_range(self, data):
        f = data.draw(fields)
        n, m, q = (data.draw(st.integers(0, 3)) for _ in range(3))
        b = data.draw(relation_or_operator(f, m, q))
        a = data.draw(operators(f, n, q))
        assume(b.ran.contains(a.ran))
        assert fz.solve_right_operator(a, b) is not None

    @given(right_pairs())
    def test_criterion_pointwise_and_solver_agree(self, pair):
        a, b = pair
        report = fz.right_operator_criterion(a, b)
        sol = fz.solve_right_operator(a, b)
        assert report.verdict == (sol is not None) == fz.pointwise_right_check(a, b).verdict
        if sol is not None:
            assert sol.valid and sol.C.is_operator() and compose(b, sol.C).contains(a)


class TestGeneralForm:
    def setup_method(self):
        # B: K² → K, x ↦ x₁ (ker B = span{e₂}); A = identity on K
        self.b = LinearRelation.from_matrix(GF2, [[1, 0]])
        self.a = LinearRelation.identity(GF2, 1)
        self.c0 = fz.solve_right_operator(self.a, self.b)

    def test_c0_itself(self):
        assert fz.is_right_solution_general_form(self.a, self.b, self.c0, self.c0.C).verdict

    def test_shift_into_kernel(self):
        c = LinearRelation.from_matrix(GF2, [[1], [1]])  # x ↦ (x, x) = C0 x + x e₂
        report = fz.is_right_solution_general_form(self.a, self.b, self.c0, c)
        assert report.verdict and report.cross_checks_agree()
        assert compose(self.b, c).contains(self.a)

    def test_shift_outside_kernel(self):
        b = LinearRelation.identity(GF2, 1)
        a = LinearRelation.identity(GF2, 1)
        c0 = fz.solve_right_operator(a, b)
        c = LinearRelation.from_matrix(GF2, [[0]])  # C0 + identity; identity hits outside ker B = {0}
        report = fz.is_right_solution_general_form(a, b, c0, c)
        assert not report.verdict and report.failed == "ran C₁ ⊆ ker B"
        assert not compose(b, c).contains(a)

    def test_rejects_non_operators(self):
        bad = LinearRelation.product(Subspace.full(GF2, 1), Subspace.full(GF2, 2))
        with pytest.raises(NotAnOperator):
            fz.is_right_solution_general_form(self.a, self.b, self.c0, bad)

    @given(right_pairs(max_dim=2), st.data())
    def test_matches_direct_check(self, pair, data):
        a, b = pair
        c0 = fz.solve_right_operator(a, b)
        assume(c0 is not None)
        c = data.draw(operators(a.field, a.dom_dim, b.dom_dim))
        report = fz.is_right_solution_general_form(a, b, c0, c)
        assert report.verdict == compose(b, c).contains(a)


class TestLeftOperator:
    def test_projection_fails(self, projection_instance):
        a, b = projection_instance
        report = fz.left_criterion(a, b)
        assert not report.verdict and report.failed == "dim mul B ≥ dim A(dom A ∩ ker B)"
        assert report.evidence[1].dims == {"lhs": 0, "rhs": 1}
        assert fz.solve_left_operator(a, b) is None
        # oracle: all 4 maps K → K² fail
        assert len(list(enumerate_operators(1, 2, GF2))) == 4
        assert operator_solutions("left", a, b) == []

    def test_augmented_projection(self, augmented_projection):
        a, b = augmented_projection
        assert fz.left_criterion(a, b).verdict
        sol = fz.solve_left_operator(a, b)
        assert sol.valid and sol.C == LinearRelation.identity(GF2, 2)
        valid = operator_solutions("left", a, b)
        assert len(valid) >= 1 and LinearRelation.identity(GF2, 2) in valid
        # the returned C agrees with some valid total map on its domain
        assert any(m.contains(sol.C) for m in valid)

    def test_identity_b(self):
        a = LinearRelation.from_matrix(GF3, [[1, 2], [2, 2]], domain=sub(GF3, 2, [1, 1]))
        sol = fz.solve_left_operator(a, LinearRelation.identity(GF3, 2))
        assert sol.C.contains(a) and sol.C.dom == a.dom
        non_op = rel(GF3, 1, 1, [0, 1])
        assert fz.solve_left_operator(non_op, LinearRelation.identity(GF3, 1)) is None

    def test_zero_range_gives_a_null_operator(self):
        a = LinearRelation.product(sub(GF2, 2, [1, 1]), Subspace.zero(GF2, 2))
        b = rel(GF2, 2, 2, [1, 1, 1, 0], [0, 1, 0, 1])
        report = fz.left_criterion(a, b)
        assert report.verdict and a.ran.is_zero()
        sol = fz.solve_left_operator(a, b)
        assert sol.C.ran.is_zero() and b.ran.contains(sol.C.dom)
        null_on_ran_b = LinearRelation.product(b.ran, Subspace.zero(GF2, 2))
        assert compose(null_on_ran_b, b).contains(a)

    @given(left_pairs())
    def test_zero_range_criterion_is_domain_inclusion(self, pair):
        a, b = pair
        a = LinearRelation.product(a.dom, Subspace.zero(a.field, a.cod_dim))
        assert fz.left_criterion(a, b).verdict == b.dom.contains(a.dom)

    @given(left_pairs())
    def test_solver_matches_criterion_and_basis_identities(self, pair):
        a, b = pair
        report = fz.left_criterion(a, b)
        sol = fz.solve_left_operator(a, b)
        assert report.verdict == (sol is not None)
        if sol is None:
            return
        f, basis, c = a.field, sol.basis, sol.C
        sp_y = Subspace.span(f, b.cod_dim, basis.y)
        sp_yp = Subspace.span(f, b.cod_dim, basis.y_prime)
        assert compose(c, b).contains(a) and c.is_operator()
        assert c.ran == a.ran and c.ker == sp_yp
        assert c.dom == sp_y + sp_yp and (sp_y & sp_yp).is_zero()
        assert is_independent(f, basis.z, a.cod_dim) and Subspace.span(f, a.cod_dim, basis.z) == a.ran
        assert Subspace.span(f, a.dom_dim, basis.x_prime) == a.ker
        n = image(a, a.dom & b.ker)
        assert Subspace.span(f, a.cod_dim, [basis.z[i] for i in basis.split_I0]) == n
        assert Subspace.span(f, a.dom_dim, [basis.x_prime[j] for j in basis.split_J0]) == a.ker & b.ker
        assert all(not any(basis.y_prime[j]) for j in basis.split_J0)


class TestLeftInjective:
    def test_augmented_projection(self, augmented_projection):
        a, b = augmented_projection
        sol = fz.solve_left_operator_injective(a, b)
        assert sol.C == LinearRelation.identity(GF2, 2) and sol.C.is_injective()

    def test_kernel_obstruction(self):
        a = LinearRelation.from_matrix(GF2, [[1, 0]])
        b = LinearRelation.identity(GF2, 2)
        report = fz.left_injective_criterion(a, b)
        assert report.failed == "ker A ⊆ ker B"
        assert fz.solve_left_operator_injective(a, b) is None

    def test_zero_range(self):
        a = LinearRelation.product(sub(GF3, 2, [1, 2]), Subspace.zero(GF3, 1))
        b = LinearRelation.product(Subspace.full(GF3, 2), Subspace.zero(GF3, 2))
        sol = fz.solve_left_operator_injective(a, b)
        assert sol is not None and sol.C.is_injective() and sol.C.ran.is_zero()
        assert len(sol.basis.z) == 0 and sol.basis.split_J0 == tuple(range(len(sol.basis.x_prime)))

    @given(left_pairs())
    def test_matches_criterion(self, pair):
        a, b = pair
        sol = fz.solve_left_operator_injective(a, b)
        assert fz.left_injective_criterion(a, b).verdict == (sol is not None)
        if sol is not None:
            assert sol.C.is_injective() and sol.C.is_operator() and compose(sol.C, b).contains(a)


class TestOperatorPart:
    def test_operator_is_its_own_part(self):
        r = LinearRelation.from_matrix(GF3, [[1, 2], [0, 1]], domain=sub(GF3, 2, [1, 1]))
        assert fz.operator_part(r).C == r

    def test_product_with_a_line(self):
        r = LinearRelation.product(Subspace.full(GF2, 2), sub(GF2, 2, [1, 0]))
        sol = fz.operator_part(r)
        assert sol.C == rel(GF2, 2, 2, [1, 0, 1, 0], [0, 1, 0, 0])
        assert sol.C.is_operator() and r.contains(sol.C) and sol.C.ran == sub(GF2, 2, [1, 0])
        assert oracle_exists(Problem.OPERATOR_PART, r)

    def test_vertical_line_has_no_part(self):
        r = rel(GF2, 1, 1, [0, 1])
        assert fz.operator_part(r) is None
        assert fz.operator_part_criterion(r).failed == "dim ker R ≥ dim mul R"

    @given(single_relations())
    def test_matches_criterion_and_diagonal_form(self, r):
        report = fz.operator_part_criterion(r)
        sol = fz.operator_part(r)
        assert report.verdict == (sol is not None) == (r.ker.dim >= r.mul.dim)
        assert report.cross_checks_agree()
        if sol is not None:
            assert r.contains(sol.C) and sol.C.is_operator() and sol.C.ran == r.ran and sol.C.dom == r.dom
            assert compose(sol.C, r.inverse).contains(diagonal(r.ran))


class TestIndependentSelection:
    def test_injective_operator(self):
        r = LinearRelation.from_matrix(GF3, [[1, 1], [0, 1]])
        report, witness = fz.independent_selection_check(r)
        assert report.verdict and is_independent(GF3, witness.y, 2)

    def test_horizontal_line(self):
        report, witness = fz.independent_selection_check(rel(GF2, 1, 1, [1, 0]))
        assert not report.verdict and witness is None

    def test_codimension_instance(self):
        r = rel(GF2, 2, 2, [1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1])
        report, witness = fz.independent_selection_check(r)
        assert report.verdict and report.cross_checks_agree()
        assert len(witness.x) == len(witness.y) == 2
        assert is_independent(GF2, witness.y, 2) and is_independent(GF2, witness.x, 2)
        assert all(r.has_pair(x, y) for x, y in zip(witness.x, witness.y))

    def test_composite_names_its_specialization(self, augmented_projection):
        a, b = augmented_projection
        report, _ = fz.selection_check_composite(a, b)
        assert "BA⁻¹" in report.note and report.subreports[0].verdict

    @given(single_relations())
    def test_witness_whenever_true(self, r):
        report, witness = fz.independent_selection_check(r)
        assert report.verdict == (r.ker.dim <= r.mul.dim) == (witness is not None)
        assert report.cross_checks_agree()

    @given(left_pairs())
    def test_composite_parts(self, pair):
        a, b = pair
        report, _ = fz.selection_check_composite(a, b)
        assert report.subreports[0].verdict
        assert report.verdict == (image(a, a.dom & b.ker).dim <= image(b, a.ker).dim)


class TestOperatorsLeft:
    def test_projection_fails_both_ways(self, projection_instance):
        a, b = projection_instance
        report = fz.operators_left_sufficient(a, b)
        assert not report.verdict and report.failed == "ker B ∩ dom A ⊆ ker A"
        assert fz.solve_left_operator(a, b) is None

    def test_vacuous_when_domain_misses_kernel(self):
        a = LinearRelation.from_matrix(GF3, [[1, 1]], domain=sub(GF3, 2, [1, 0]))
        b = LinearRelation.from_matrix(GF3, [[1, 0], [0, 0]])
        assert (a.dom & b.ker).is_zero()
        report = fz.operators_left_sufficient(a, b)
        assert report.verdict and report.cross_checks_agree()
        assert fz.solve_left_operator(a, b) is not None

    def test_requires_operator(self):
        with pytest.raises(NotAnOperator):
            fz.operators_left_sufficient(rel(GF2, 1, 1, [0, 1]), LinearRelation.identity(GF2, 1))
        with pytest.raises(NotAnOperator):
            fz.complement_split_check(LinearRelation.identity(GF2, 1), rel(GF2, 1, 1, [0, 1]))

    @given(st.data())
    def test_sufficient_condition_yields_solutions(self, data):
        f = data.draw(fields)
        n, m, q = (data.draw(st.integers(0, 3)) for _ in range(3))
        a = data.draw(operators(f, n, q))
        b = data.draw(relation_or_operator(f, n, m))
        report = fz.operators_left_sufficient(a, b)
        if report.verdict:
            assert fz.solve_left_operator(a, b) is not None
        for sub_report in report.subreports:
            if sub_report.evidence[0].holds:
                assert sub_report.cross_checks_agree()

    def test_complement_split_needs_domain_inclusion(self):
        # with dom B = {0} the family of complements is {{0}} and the meet is trivial,
        # yet no C exists because dom A ⊄ dom B
        a = LinearRelation.from_matrix(GF2, [[0]])
        b = LinearRelation.from_matrix(GF2, [[1]], domain=Subspace.zero(GF2, 1))
        _, some, every = complement_split_exhaustive(a, b)
        assert some and every
        assert fz.solve_left_operator(a, b) is None
        assert not fz.complement_split_check(a, b).verdict


def _gf2_operator_pairs():
    for n, m, q in itertools.product(range(3), repeat=3):
        for a in _all_operators(n, q):
            for b in _all_operators(n, m):
                yield a, b


def _all_operators(n, m):
    from linrel.oracle import enumerate_subspace_rows
    for rows in enumerate_subspace_rows(2, n + m):
        r = LinearRelation(n, m, Subspace(GF2, n + m, tuple(rows)))
        if r.is_operator():
            yield r


def test_complement_split_matches_exhaustive_search():
    checked = 0
    for a, b in itertools.islice(_gf2_operator_pairs(), 0, None, 7):
        if not b.dom.contains(a.dom):
            continue
        nonempty, some, every = complement_split_exhaustive(a, b)
        solvable = fz.solve_left_operator(a, b) is not None
        assert some == every == solvable
        assert fz.complement_split_check(a, b).verdict == solvable
        checked += 1
    assert checked > 150


def test_basis_family_forms_on_gf2():
    """Some-basis and every-basis forms of the family criterion agree with the dimension criterion."""
    checked = 0
    for n, q, m in itertools.product(range(3), repeat=3):
        if n + q + m > 5:
            continue
        for a in _all_relations(n, q):
            for b in _all_relations(n, m):
                if not b.dom.contains(a.dom):
                    continue
                expected = fz.left_criterion(a, b).verdict
                assert left_families(a, b, every_basis=False) == expected
                assert left_families(a, b, every_basis=True) == expected
                checked += 1
    assert checked > 50


def _all_relations(n, m):
    from linrel.oracle import enumerate_subspace_rows
    for rows in enumerate_subspace_rows(2, n + m):
        yield LinearRelation(n, m, Subspace(GF2, n + m, tuple(rows)))


def test_selection_forms_on_gf2():
    for n, m in itertools.product(range(3), repeat=2):
        for r in _all_relations(n, m):
            some, every = selection_exhaustive(r)
            expected = r.ker.dim <= r.mul.dim
            assert some == every == expected == fz.independent_selection_check(r)[0].verdict
