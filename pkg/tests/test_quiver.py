from __future__ import annotations

import random

import pytest

from conftest import D4, linear, random_acyclic_quiver
from quiverar.linalg import InputError, RationalMatrix, inverse
from quiverar.quiver import (
    CycleError,
    Quiver,
    hh0,
    injective_dim_vectors,
    multiply_paths,
    parse_quiver,
    path_basis,
    projective_dim_vectors,
    simple_dim_vectors,
)


def test_parse_a2():
    Q = parse_quiver("vertices 2\narrow a 1 2")
    assert Q.r == 2 and [(a.name, a.source, a.target) for a in Q.arrows] == [("a", 1, 2)]


def test_parse_d4_subspace_orientation():
    Q = parse_quiver("vertices 4\narrow a 1 2\narrow b 3 2\narrow c 4 2")
    assert [(a.source, a.target) for a in Q.arrows] == [(1, 2), (3, 2), (4, 2)]
    assert Q.topological_order()[-1] == 2


def test_loop_is_a_cycle():
    with pytest.raises(CycleError) as info:
        parse_quiver("vertices 1\narrow a 1 1")
    assert info.value.cycle == [1, 1]


def test_longer_cycle_is_named():
    with pytest.raises(CycleError) as info:
        parse_quiver("vertices 3\narrow a 1 2\narrow b 2 3\narrow c 3 1")
    assert "1 -> 2 -> 3 -> 1" in str(info.value)


@pytest.mark.parametrize("text, fragment", [
    ("arrow a 1 2", "before"),
    ("vertices 2\narrow a 1 5", "out of range"),
    ("vertices 2\narrow a 1", "line 2"),
    ("vertices x", "line 1"),
    ("vertices 2\narrow a 1 2\narrow a 1 2", "duplicate"),
    ("", "missing"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(InputError) as info:
        parse_quiver(text)
    assert fragment in str(info.value)


def test_path_bases():
    assert [p.label for p in path_basis(linear(2))] == ["e1", "e2", "a1"]
    assert len(path_basis(linear(3))) == 6
    assert len(path_basis(Quiver(3))) == 3


def test_multiplication_convention():
    Q = linear(3)
    a1, a2 = (p for p in path_basis(Q) if p.length == 1)
    # a2 a1: first a1 (1 -> 2), then a2 (2 -> 3)
    prod = multiply_paths(a2, a1)
    assert prod is not None and prod.label == "a2.a1" and (prod.source, prod.target) == (1, 3)
    assert multiply_paths(a1, a2) is None


def test_dimension_vectors():
    assert projective_dim_vectors(linear(2)) == [(1, 1), (0, 1)]
    assert projective_dim_vectors(linear(3))[0] == (1, 1, 1)
    assert injective_dim_vectors(linear(3))[2] == (1, 1, 1)
    assert simple_dim_vectors(Quiver(3))[1] == (0, 1, 0)


def test_hh0_examples():
    assert hh0(linear(2)) == (2, ["e1", "e2"])
    assert hh0(Quiver(3))[0] == 3
    assert hh0(D4) == (4, ["e1", "e2", "e3", "e4"])


def path_count_oracle(Q: Quiver) -> RationalMatrix:
    """``(I - Adj)^{-1}`` counts paths for an acyclic quiver."""
    n = Q.r
    adj = RationalMatrix(n, n, [Q.arrows_between(i, j) for i in Q.vertices for j in Q.vertices])
    return inverse(RationalMatrix.identity(n) - adj)


@pytest.mark.parametrize("seed", range(25))
def test_path_counts_against_adjacency_oracle(seed):
    Q = random_acyclic_quiver(random.Random(seed))
    N = path_count_oracle(Q)
    for i in Q.vertices:
        for j in Q.vertices:
            assert Q.count_paths(i, j) == N[i - 1, j - 1]
    assert sum(Q.count_paths(i, j) for i in Q.vertices for j in Q.vertices) == len(path_basis(Q))


@pytest.mark.parametrize("seed", range(10))
def test_opposite_reverses_paths(seed):
    Q = random_acyclic_quiver(random.Random(100 + seed))
    assert projective_dim_vectors(Q.opposite()) == injective_dim_vectors(Q)


def test_to_text_round_trip():
    assert parse_quiver(D4.to_text()) == Quiver(4, D4.arrows)
