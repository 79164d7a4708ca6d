"""Seeded random subspaces, relations and operators.

Over GF(p) a random subspace of K^n has a dimension drawn uniformly from
0..n and is then uniform among subspaces of that dimension (pivot pattern
weighted by its number of free entries, free entries uniform).  Over Q the
dimension is drawn the same way and that many generators with entries in
{-2, ..., 2} are canonicalized, so the result may come out smaller.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .field import FieldSpec
from .relation import LinearRelation
from .subspace import Subspace

Q_ENTRIES = (-2, -1, 0, 1, 2)


@lru_cache(maxsize=None)
def _pivot_patterns(p: int, n: int, k: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    patterns = tuple(itertools.combinations(range(n), k))
    weights = tuple(p ** sum(n - c - k + i for i, c in enumerate(pat)) for pat in patterns)
    return patterns, weights


def random_rref(field: FieldSpec, n: int, k: int, rng: random.Random) -> Subspace:
    """A uniformly random k-dimensional subspace of GF(p)^n."""
    p = field.p
    patterns, weights = _pivot_patterns(p, n, k)
    pivots = rng.choices(patterns, weights=weights)[0]
    pivot_set = set(pivots)
    rows = []
    for c in pivots:
        row = [0] * n
        row[c] = 1
        for j in range(c + 1, n):
            if j not in pivot_set:
                row[j] = rng.randrange(p)
        rows.append(tuple(row))
    return Subspace(field, n, tuple(rows))


def random_subspace(field: FieldSpec, n: int, rng: random.Random) -> Subspace:
    k = rng.randint(0, n)
    if field.is_prime_field:
        return random_rref(field, n, k, rng)
    gens = [[rng.choice(Q_ENTRIES) for _ in range(n)] for _ in range(k)]
    return Subspace.span(field, n, gens)


def random_relation(field: FieldSpec, n: int, m: int, rng: random.Random) -> LinearRelation:
    return LinearRelation(n, m, random_subspace(field, n + m, rng))


def random_scalar(field: FieldSpec, rng: random.Random):
    if field.is_prime_field:
        return rng.randrange(field.p)
    return field.coerce(rng.choice(Q_ENTRIES))


def random_operator(field: FieldSpec, n: int, m: int, rng: random.Random) -> LinearRelation:
    """Graph of a random matrix restricted to a random domain subspace."""
    domain = random_subspace(field, n, rng)
    matrix = [[random_scalar(field, rng) for _ in range(n)] for _ in range(m)]
    return LinearRelation.from_matrix(field, matrix, dom_dim=n, domain=domain)


def random_instance_relation(field: FieldSpec, n: int, m: int, rng: random.Random) -> LinearRelation:
    """Half the time a general relation, half the time an operator graph."""
    if rng.random() < 0.5:
        return random_relation(field, n, m, rng)
    return random_operator(field, n, m, rng)


def trial_rng(seed: int, *labels: object) -> random.Random:
    """An RNG determined by the seed and the labels alone (not by call order)."""
    return random.Random(":".join([str(seed), *map(str, labels)]))
