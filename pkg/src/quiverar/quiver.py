"""Finite acyclic quivers and their path algebras.

Composition convention: paths compose right to left, like functions.  The
product ``p q`` means "first ``q``, then ``p``" and is nonzero only when ``q``
ends where ``p`` starts.  Consequently ``e_i A e_j`` is spanned by the paths
from ``j`` to ``i``, and the indecomposable projective ``P_i = A e_i`` is
spanned by the paths starting at ``i``.  Vertices are numbered ``1..r``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

from .linalg import InputError, RationalMatrix, rref

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")


class CycleError(InputError):
    def __init__(self, cycle: list[int]):
        self.cycle = cycle
        super().__init__("cycle detected: " + " -> ".join(map(str, cycle)))


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Path:
    """A path, stored as the arrows in the order they are traversed."""

    source: int
    target: int
    arrows: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def label(self) -> str:
        if not self.arrows:
            return f"e{self.source}"
        # function-style: the last arrow traversed is written first
        return ".".join(reversed(self.arrows))

    def then(self, other: "Path") -> Optional["Path"]:
        """``other * self``: traverse self, then other."""
        if self.target != other.source:
            return None
        return Path(self.source, other.target, self.arrows + other.arrows)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InputError("a quiver needs at least one vertex")
        object.__setattr__(self, "arrows", tuple(self.arrows))
        seen = set()
        for a in self.arrows:
            if not _NAME.match(a.name):
                raise InputError(f"bad arrow name {a.name!r}")
            if a.name in seen:
                raise InputError(f"duplicate arrow name {a.name!r}")
            seen.add(a.name)
            for v in (a.source, a.target):
                if not 1 <= v <= self.vertex_count:
                    raise InputError(f"arrow {a.name}: vertex {v} out of range 1..{self.vertex_count}")
        cycle = _find_cycle(self.vertex_count, self.arrows)
        if cycle is not None:
            raise CycleError(cycle)

    @classmethod
    def from_edges(cls, r: int, edges: Iterable[tuple[int, int]], name: str = "") -> "Quiver":
        """Build a quiver naming arrows ``a1, a2, ...`` in the given order."""
        return cls(r, tuple(Arrow(f"a{k}", s, t) for k, (s, t) in enumerate(edges, 1)), name=name)

    @property
    def r(self) -> int:
        return self.vertex_count

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def arrows_between(self, s: int, t: int) -> int:
        return sum(1 for a in self.arrows if a.source == s and a.target == t)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertex_count, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows),
                      name=(self.name + "^op") if self.name else "")

    def topological_order(self) -> list[int]:
        """Vertices with every arrow going from earlier to later (Kahn, smallest first)."""
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        ready = sorted(v for v, d in indeg.items() if d == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self.arrows:
                if a.source == v:
                    indeg[a.target] -= 1
                    if indeg[a.target] == 0:
                        ready.append(a.target)
                        ready.sort()
        return order

    def underlying_edges(self) -> list[tuple[int, int]]:
        return [(min(a.source, a.target), max(a.source, a.target)) for a in self.arrows]

    def components(self) -> list[list[int]]:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a in self.arrows:
            parent[find(a.source)] = find(a.target)
        groups: dict[int, list[int]] = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    @cached_property
    def paths(self) -> tuple[Path, ...]:
        return tuple(_enumerate_paths(self))

    def paths_between(self, i: int, j: int) -> list[Path]:
        """Paths from ``i`` to ``j``."""
        return [p for p in self.paths if p.source == i and p.target == j]

    def count_paths(self, i: int, j: int) -> int:
        return sum(1 for p in self.paths if p.source == i and p.target == j)

    def to_text(self) -> str:
        lines = [f"vertices {self.vertex_count}"]
        lines += [f"arrow {a.name} {a.source} {a.target}" for a in self.arrows]
        return "\n".join(lines) + "\n"


def _find_cycle(r: int, arrows: tuple[Arrow, ...]) -> Optional[list[int]]:
    succ: dict[int, list[int]] = {v: [] for v in range(1, r + 1)}
    for a in arrows:
        succ[a.source].append(a.target)
    color = {v: 0 for v in succ}
    stack: list[int] = []

    def dfs(v: int) -> Optional[list[int]]:
        color[v] = 1
        stack.append(v)
        for w in succ[v]:
            if color[w] == 1:
                return stack[stack.index(w):] + [w]
            if color[w] == 0:
                found = dfs(w)
                if found:
                    return found
        stack.pop()
        color[v] = 2
        return None

    for v in succ:
        if color[v] == 0:
            found = dfs(v)
            if found:
                return found
    return None


def _enumerate_paths(Q: Quiver) -> list[Path]:
    by_source: dict[int, list[Arrow]] = {v: [] for v in Q.vertices}
    for a in Q.arrows:
        by_source[a.source].append(a)
    layer = [Path(v, v) for v in Q.vertices]
    out = list(layer)
    while layer:
        nxt = []
        for p in layer:
            for a in by_source[p.target]:
                nxt.append(Path(p.source, a.target, p.arrows + (a.name,)))
        nxt.sort(key=lambda p: p.arrows)
        out.extend(nxt)
        layer = nxt
    return out


def parse_quiver(text: str) -> Quiver:
    """Parse the line format ``vertices <r>`` / ``arrow <name> <source> <target>``."""
    r = None
    arrows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "vertices" and len(parts) == 2:
                if r is not None:
                    raise InputError("duplicate 'vertices' line")
                r = int(parts[1])
            elif parts[0] == "arrow" and len(parts) == 4:
                if r is None:
                    raise InputError("'arrow' before 'vertices'")
                arrows.append(Arrow(parts[1], int(parts[2]), int(parts[3])))
            else:
                raise InputError(f"unrecognised line {line!r}")
        except ValueError as exc:
            if isinstance(exc, CycleError):
                raise
            raise InputError(f"line {lineno}: {exc}") from exc
    if r is None:
        raise InputError("missing 'vertices' line")
    return Quiver(r, tuple(arrows))


def path_basis(Q: Quiver) -> tuple[Path, ...]:
    """All paths of ``kQ``, ordered by length then by arrow sequence."""
    return Q.paths


def projective_dim_vectors(Q: Quiver) -> list[tuple[int, ...]]:
    """``dim P_i``: its ``j``-th entry counts the paths from ``i`` to ``j``."""
    return [tuple(Q.count_paths(i, j) for j in Q.vertices) for i in Q.vertices]


def injective_dim_vectors(Q: Quiver) -> list[tuple[int, ...]]:
    """``dim I_i``: its ``j``-th entry counts the paths from ``j`` to ``i``."""
    return [tuple(Q.count_paths(j, i) for j in Q.vertices) for i in Q.vertices]


def simple_dim_vectors(Q: Quiver) -> list[tuple[int, ...]]:
    return [tuple(int(i == j) for j in Q.vertices) for i in Q.vertices]


def multiply_paths(p: Path, q: Path) -> Optional[Path]:
    """The product ``p q`` (first ``q``, then ``p``), or ``None`` when it vanishes."""
    return q.then(p)


def hh0(Q: Quiver) -> tuple[int, list[str]]:
    """Dimension and a basis of ``kQ / [kQ, kQ]``.

    The commutator subspace is spanned by ``pq - qp`` over pairs of basis
    paths; the quotient basis is picked greedily in path-basis order.
    """
    basis = path_basis(Q)
    index = {p: k for k, p in enumerate(basis)}
    n = len(basis)
    rows = []
    for a, p in enumerate(basis):
        for q in basis[a + 1:]:
            v = [Fraction(0)] * n
            pq, qp = multiply_paths(p, q), multiply_paths(q, p)
            if pq is not None:
                v[index[pq]] += 1
            if qp is not None:
                v[index[qp]] -= 1
            if any(v):
                rows.append(v)
    span_rows = rref(RationalMatrix.from_rows(rows, cols=n))[0] if rows else []
    chosen: list[str] = []
    current = list(span_rows)
    rank = len(current)
    for k, p in enumerate(basis):
        unit = [Fraction(int(i == k)) for i in range(n)]
        trial = current + [unit]
        new_rank = len(rref(RationalMatrix.from_rows(trial, cols=n))[0])
        if new_rank > rank:
            chosen.append(p.label)
            current = trial
            rank = new_rank
        if rank == n:
            break
    return n - len(span_rows), chosen
