from __future__ import annotations

import random
from pathlib import Path

import pytest

from quiverar.quiver import Arrow, Quiver

DATA = Path(__file__).resolve().parent.parent / "data"


def linear(n: int) -> Quiver:
    """A_n oriented 1 -> 2 -> ... -> n."""
    return Quiver.from_edges(n, [(i, i + 1) for i in range(1, n)], name=f"A{n}")


def alternating(n: int) -> Quiver:
    """A_n with alternating orientation."""
    edges = [(i, i + 1) if i % 2 else (i + 1, i) for i in range(1, n)]
    return Quiver.from_edges(n, edges, name=f"A{n}alt")


D4 = Quiver.from_edges(4, [(1, 2), (3, 2), (4, 2)], name="D4")
D4_SOURCE = Quiver.from_edges(4, [(2, 1), (2, 3), (2, 4)], name="D4src")
D5 = Quiver.from_edges(5, [(1, 2), (2, 3), (3, 4), (3, 5)], name="D5")
E6 = Quiver.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)], name="E6")
E7 = Quiver.from_edges(7, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)], name="E7")
E8 = Quiver.from_edges(8, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 8)], name="E8")


def random_acyclic_quiver(rng: random.Random, max_vertices: int = 6, max_arrows: int = 8) -> Quiver:
    """Random acyclic quiver: arrows only go from smaller to larger labels after a shuffle."""
    r = rng.randint(1, max_vertices)
    perm = list(range(1, r + 1))
    rng.shuffle(perm)
    arrows = []
    for k in range(rng.randint(0, max_arrows if r > 1 else 0)):
        i, j = sorted(rng.sample(range(r), 2))
        arrows.append(Arrow(f"a{k}", perm[i], perm[j]))
    return Quiver(r, tuple(arrows))


def random_dynkin_orientation(rng: random.Random, Q: Quiver) -> Quiver:
    """Same underlying graph as ``Q`` with every arrow flipped at random."""
    arrows = []
    for a in Q.arrows:
        s, t = (a.source, a.target) if rng.random() < 0.5 else (a.target, a.source)
        arrows.append(Arrow(a.name, s, t))
    return Quiver(Q.r, tuple(arrows), name=Q.name)


@pytest.fixture
def rng():
    return random.Random(1234)
