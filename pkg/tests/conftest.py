from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from linrel.field import GF, QQ, FieldSpec
from linrel.relation import LinearRelation
from linrel.subspace import Subspace

settings.register_profile("linrel", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("linrel")

GF2, GF3, GF5 = GF(2), GF(3), GF(5)
ALL_FIELDS = (GF2, GF3, GF5, QQ)


def rel(field: FieldSpec, n: int, m: int, *rows) -> LinearRelation:
    """Relation in K^n × K^m spanned by the given [x | y] rows."""
    return LinearRelation.from_generators(field, n, m, rows)


def sub(field: FieldSpec, n: int, *rows) -> Subspace:
    return Subspace.span(field, n, rows)


fields = st.sampled_from(ALL_FIELDS)
small_fields = st.sampled_from((GF2, GF3))


def _entries(field: FieldSpec):
    if field.is_prime_field:
        return st.integers(0, field.p - 1)
    return st.integers(-2, 2)


@st.composite
def vectors(draw, field: FieldSpec, n: int):
    return tuple(draw(st.lists(_entries(field), min_size=n, max_size=n)))


@st.composite
def subspaces(draw, field: FieldSpec, n: int, max_gens: int | None = None):
    k = draw(st.integers(0, n if max_gens is None else max_gens))
    gens = [draw(vectors(field, n)) for _ in range(k)]
    return Subspace.span(field, n, gens)


@st.composite
def relations(draw, field: FieldSpec, n: int, m: int):
    return LinearRelation(n, m, draw(subspaces(field, n + m)))


@st.composite
def operators(draw, field: FieldSpec, n: int, m: int):
    """Graph of a matrix restricted to a drawn domain."""
    domain = draw(subspaces(field, n))
    matrix = [draw(vectors(field, n)) for _ in range(m)]
    return LinearRelation.from_matrix(field, matrix, dom_dim=n, domain=domain)


@st.composite
def relation_or_operator(draw, field: FieldSpec, n: int, m: int):
    return draw(st.one_of(relations(field, n, m), operators(field, n, m)))


@st.composite
def right_pairs(draw, max_dim: int = 3):
    """(A, B) with a common codomain."""
    f = draw(fields)
    n, m, q = (draw(st.integers(0, max_dim)) for _ in range(3))
    return draw(relation_or_operator(f, n, q)), draw(relation_or_operator(f, m, q))


@st.composite
def left_pairs(draw, max_dim: int = 3):
    """(A, B) with a common domain."""
    f = draw(fields)
    n, m, q = (draw(st.integers(0, max_dim)) for _ in range(3))
    return draw(relation_or_operator(f, n, q)), draw(relation_or_operator(f, n, m))


@st.composite
def single_relations(draw, max_dim: int = 3):
    f = draw(fields)
    n, m = draw(st.integers(0, max_dim)), draw(st.integers(0, max_dim))
    return draw(relation_or_operator(f, n, m))


@pytest.fixture
def projection_instance():
    """A = identity on GF(2)^2 and B the projection x ↦ x₁ onto GF(2)."""
    return LinearRelation.identity(GF2, 2), rel(GF2, 2, 1, [1, 0, 1], [0, 1, 0])


@pytest.fixture
def augmented_projection():
    """A = identity on GF(2)^2 and B: x ↦ x₁e₁ with mul B = span{e₂}."""
    return LinearRelation.identity(GF2, 2), rel(GF2, 2, 2, [1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1])


@pytest.fixture
def swap_pair():
    """The identity and the coordinate swap on span{e₁, e₂} = GF(2)^2."""
    return LinearRelation.identity(GF2, 2), rel(GF2, 2, 2, [1, 0, 0, 1], [0, 1, 1, 0])


_acceptance_key = pytest.StashKey[list]()


@pytest.fixture
def record(request):
    """Log one pass/fail line per acceptance criterion for the terminal summary."""
    lines = request.config.stash.setdefault(_acceptance_key, [])

    def log(criterion: str, passed: bool, detail: str = "") -> None:
        lines.append(f"{'PASS' if passed else 'FAIL'}  {criterion}" + (f"  ({detail})" if detail else ""))
    return log


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_acceptance_key, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
