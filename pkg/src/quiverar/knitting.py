"""Knitting the Auslander-Reiten quiver of a Dynkin path algebra.

Everything happens on dimension vectors.  The projectives and the arrows
``P_j -> P_i`` (one for each arrow ``i -> j`` of the quiver, since
``rad P_i`` is the sum of those ``P_j``) seed the construction; every further
vertex comes from the mesh rule

    dims(tau^-1 X) = sum of the successors of X - dims(X).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .ktheory import ConsistencyError, coxeter, positive_roots
from .linalg import InputError, format_vector
from .quiver import Quiver, injective_dim_vectors, projective_dim_vectors


class NoSuccessorError(InputError):
    """The node is injective, so no AR sequence starts there."""


@dataclass(frozen=True)
class ARNode:
    id: int
    dims: tuple[int, ...]
    is_projective: bool
    is_injective: bool
    tau_orbit_id: int
    slice_index: int

    @property
    def flag(self) -> str:
        if self.is_projective and self.is_injective:
            return "PI"
        return "P" if self.is_projective else "I" if self.is_injective else "-"


@dataclass(frozen=True)
class ARQuiver:
    quiver: Quiver
    nodes: tuple[ARNode, ...]
    mesh_arrows: tuple[tuple[int, int, int], ...]
    tau_links: tuple[tuple[int, int], ...]

    def node(self, node_id: int) -> ARNode:
        return self.nodes[node_id]

    def predecessors(self, node_id: int) -> list[tuple[int, int]]:
        return [(s, m) for s, t, m in self.mesh_arrows if t == node_id]

    def successors(self, node_id: int) -> list[tuple[int, int]]:
        return [(t, m) for s, t, m in self.mesh_arrows if s == node_id]

    def tau_of(self, node_id: int) -> Optional[int]:
        return next((p for x, p in self.tau_links if x == node_id), None)

    def tau_inverse_of(self, node_id: int) -> Optional[int]:
        return next((x for x, p in self.tau_links if p == node_id), None)

    def find(self, dims) -> Optional[ARNode]:
        dims = tuple(dims)
        return next((n for n in self.nodes if n.dims == dims), None)

    def to_text(self) -> str:
        lines = [f"node {n.id} {format_vector(n.dims)} {n.flag}" for n in self.nodes]
        lines += [f"mesh {s} {t} {m}" for s, t, m in self.mesh_arrows]
        lines += [f"tau {x} {p}" for x, p in self.tau_links]
        return "\n".join(lines) + "\n"

    def to_dot(self) -> str:
        lines = ["digraph AR {", "  rankdir=LR;"]
        for n in self.nodes:
            shape = "box" if n.is_projective else "ellipse"
            lines.append(f'  n{n.id} [label="{format_vector(n.dims)}", shape={shape}];')
        for s, t, m in self.mesh_arrows:
            label = f' [label="{m}"]' if m > 1 else ""
            lines.append(f"  n{s} -> n{t}{label};")
        for x, p in self.tau_links:
            lines.append(f"  n{x} -> n{p} [style=dashed, constraint=false];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def knit(Q: Quiver) -> ARQuiver:
    """The AR quiver of ``kQ`` for ``Q`` of Dynkin type.

    Node ids are deterministic: projectives come first in reverse topological
    order (sinks first), then new nodes are numbered as they are created,
    always processing the smallest ready node.
    """
    roots = set(positive_roots(Q))  # raises for non-Dynkin quivers
    proj = projective_dim_vectors(Q)
    order = list(reversed(Q.topological_order()))
    vertex_to_node = {v: k for k, v in enumerate(order)}

    dims: list[tuple[int, ...]] = [proj[v - 1] for v in order]
    orbit = list(range(len(order)))
    slice_index = [0] * len(order)
    preds: dict[int, dict[int, int]] = {k: {} for k in range(len(order))}
    for a in Q.arrows:
        # arrow i -> j gives an irreducible map P_j -> P_i
        src, dst = vertex_to_node[a.target], vertex_to_node[a.source]
        preds[dst][src] = preds[dst].get(src, 0) + 1
    tau_inv: dict[int, int] = {}
    injective: set[int] = set()
    processed: set[int] = set()

    def successors(x: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for y, ps in preds.items():
            if x in ps and y < len(order):
                out[y] = out.get(y, 0) + ps[x]
        for e, m in preds[x].items():
            if e in tau_inv:
                out[tau_inv[e]] = out.get(tau_inv[e], 0) + m
        return out

    while len(processed) < len(dims):
        ready = [x for x in range(len(dims)) if x not in processed and all(p in processed for p in preds[x])]
        if not ready:
            raise ConsistencyError("KNIT", "no node is ready; the mesh structure is inconsistent")
        x = ready[0]
        processed.add(x)
        succ = successors(x)
        candidate = [-d for d in dims[x]]
        for y, m in succ.items():
            candidate = [c + m * d for c, d in zip(candidate, dims[y])]
        if any(c < 0 for c in candidate) or not any(candidate):
            injective.add(x)
            continue
        candidate = tuple(candidate)
        if candidate not in roots:
            raise ConsistencyError("KNIT", f"mesh produced {candidate}, which is not a positive root")
        if candidate in dims:
            raise ConsistencyError("KNIT", f"dimension vector {candidate} produced twice")
        new = len(dims)
        dims.append(candidate)
        orbit.append(orbit[x])
        slice_index.append(slice_index[x] + 1)
        preds[new] = dict(succ)
        tau_inv[x] = new

    injective_dims = set(injective_dim_vectors(Q))
    if {dims[x] for x in injective} != injective_dims:
        raise ConsistencyError("KNIT", "the nodes where knitting stopped are not the injectives")
    nodes = tuple(
        ARNode(k, dims[k], k < len(order), k in injective, orbit[k], slice_index[k]) for k in range(len(dims))
    )
    mesh = tuple(sorted((s, t, m) for t, ps in preds.items() for s, m in ps.items()))
    links = tuple(sorted((y, x) for x, y in tau_inv.items()))
    return ARQuiver(Q, nodes, mesh, links)


def ar_sequence_classes(ar: ARQuiver, node_id: int) -> tuple[tuple[int, ...], list[tuple[int, ...]], tuple[int, ...]]:
    """Class-level AR sequence ``X -> (+) E -> tau^-1 X`` starting at a node.

    The middle is listed with multiplicity, ordered by node id.
    """
    if not 0 <= node_id < len(ar.nodes):
        raise InputError(f"no node {node_id}")
    end = ar.tau_inverse_of(node_id)
    if end is None:
        raise NoSuccessorError(f"node {node_id} is injective: no AR sequence starts there")
    middle = []
    for y, m in sorted(ar.predecessors(end)):
        middle += [ar.node(y).dims] * m
    return ar.node(node_id).dims, middle, ar.node(end).dims


def mesh_violations(ar: ARQuiver) -> list[int]:
    """Nodes ``X`` with ``dims(X) + dims(tau X)`` different from the sum of its mesh middle."""
    bad = []
    for x, p in ar.tau_links:
        total = [a + b for a, b in zip(ar.node(x).dims, ar.node(p).dims)]
        middle = [0] * len(total)
        for y, m in ar.predecessors(x):
            middle = [c + m * d for c, d in zip(middle, ar.node(y).dims)]
        if middle != total:
            bad.append(x)
    return bad


def tau_transport_violations(ar: ARQuiver) -> list[int]:
    """Nodes ``X`` with ``dims(tau X) != Phi dims(X)``."""
    phi = coxeter(ar.quiver).phi
    return [x for x, p in ar.tau_links if tuple(phi.apply(ar.node(x).dims)) != ar.node(p).dims]


@dataclass(frozen=True)
class VerifyReport:
    checks: int
    mismatches: tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def verify_against_rep_engine(Q: Quiver, ar: ARQuiver, seed: int = 0) -> VerifyReport:
    """Compare every tau link with ``D Tr`` of a generic representation of that dimension."""
    from .reps import generic_indecomposable, tau

    rng = random.Random(seed)
    mismatches = []
    for x, p in ar.tau_links:
        M = generic_indecomposable(Q, ar.node(x).dims, rng)
        got = tau(Q, M).dims
        if got != ar.node(p).dims:
            mismatches.append((x, ar.node(p).dims, got))
    return VerifyReport(len(ar.tau_links), tuple(mismatches))
