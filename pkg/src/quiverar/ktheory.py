"""Grothendieck-group numerics for path algebras of acyclic quivers.

Classes of modules are dimension vectors in the basis of simple modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .linalg import InputError, RationalMatrix, dot, inverse, vec
from .quiver import Quiver, projective_dim_vectors

DimensionVector = tuple  # tuple[int, ...]
Weight = tuple  # tuple[Fraction, ...]


class UnsupportedTypeError(InputError):
    """The quiver is not of Dynkin type."""


class ConsistencyError(AssertionError):
    """An identity that must hold by construction failed."""

    def __init__(self, tag: str, message: str):
        self.tag = tag
        super().__init__(f"[{tag}] {message}")


def _check_len(Q: Quiver, *vectors: Sequence) -> None:
    for v in vectors:
        if len(v) != Q.r:
            raise InputError(f"vector of length {len(v)} for a quiver with {Q.r} vertices")


def _integral(v: Sequence[Fraction], what: str) -> DimensionVector:
    if any(x.denominator != 1 for x in v):
        raise ConsistencyError("INTEGRAL", f"{what} produced a non-integral class {v}")
    return tuple(int(x) for x in v)


# -- Cartan and Coxeter ------------------------------------------------------

def cartan_matrix(Q: Quiver) -> RationalMatrix:
    """``C[i][j] = dim e_i A e_j`` = number of paths from ``j`` to ``i``.

    Column ``j`` is the dimension vector of ``P_j``.
    """
    return RationalMatrix.from_columns(projective_dim_vectors(Q), Q.r)


@dataclass(frozen=True)
class CoxeterData:
    cartan: RationalMatrix
    phi: RationalMatrix
    psi: RationalMatrix
    phi_right: RationalMatrix

    @property
    def phi_inverse(self) -> RationalMatrix:
        return inverse(self.phi)


@lru_cache(maxsize=256)
def coxeter(Q: Quiver) -> CoxeterData:
    C = cartan_matrix(Q)
    Cinv = inverse(C)
    phi = -(C.T @ Cinv)
    psi = inverse(phi).T
    phi_right = -(Cinv @ C.T)
    if phi_right != psi:
        raise ConsistencyError("PS-DUAL", "Phi_right differs from Psi = Phi^{-t}")
    return CoxeterData(C, phi, psi, phi_right)


def euler_matrix(Q: Quiver) -> RationalMatrix:
    """``E`` with ``<d, e> = d^t E e``: identity minus the arrow-count matrix."""
    n = Q.r
    return RationalMatrix(n, n, [int(i == j) - Q.arrows_between(i, j) for i in Q.vertices for j in Q.vertices])


def euler_form(Q: Quiver, d: Sequence, e: Sequence) -> Fraction:
    """Euler-Ringel form ``sum_i d_i e_i - sum_{a: s->t} d_s e_t``."""
    _check_len(Q, d, e)
    d, e = vec(d), vec(e)
    total = dot(d, e)
    for a in Q.arrows:
        total -= d[a.source - 1] * e[a.target - 1]
    return total


def symmetric_form(Q: Quiver, d: Sequence, e: Sequence) -> Fraction:
    return euler_form(Q, d, e) + euler_form(Q, e, d)


def weighted_euler(v: Sequence, d: Sequence) -> Fraction:
    """``v^t d``."""
    return dot(vec(v), vec(d))


def nu_class(Q: Quiver, d: Sequence) -> DimensionVector:
    """Class of the Serre functor image: ``-Phi d``."""
    _check_len(Q, d)
    return _integral((-coxeter(Q).phi).apply(vec(d)), "nu")


def nu1_class(Q: Quiver, d: Sequence) -> DimensionVector:
    """Class of the translate ``nu_1 = nu[-1]``: ``Phi d``."""
    _check_len(Q, d)
    return _integral(coxeter(Q).phi.apply(vec(d)), "nu1")


def nu1_inv_class(Q: Quiver, d: Sequence) -> DimensionVector:
    _check_len(Q, d)
    return _integral(coxeter(Q).phi_inverse.apply(vec(d)), "nu1^-1")


def left_dual_class(Q: Quiver, d: Sequence) -> DimensionVector:
    """Row class of ``RHom_A(M, A)`` from the column class of ``M``: ``-Phi d``.

    Example: for ``P_i`` this is row ``i`` of the Cartan matrix, the class
    of the right projective ``e_i A``.
    """
    _check_len(Q, d)
    return _integral((-coxeter(Q).phi).apply(vec(d)), "left dual")


def right_dual_class(Q: Quiver, e: Sequence) -> DimensionVector:
    """Column class of ``RHom_{A^op}(N, A)`` from the row class ``e`` of ``N``: ``-(e Psi)^t``."""
    _check_len(Q, e)
    return _integral((-coxeter(Q).psi.T).apply(vec(e)), "right dual")


def chern(d: Sequence) -> Weight:
    """Chern character in the simple basis of ``HH_0 = k^r`` (the class itself)."""
    return vec(d)


def mukai_pairing(Q: Quiver, x: Sequence, y: Sequence) -> Fraction:
    """``<x, y>_Muk = <y, x>``, so that ``<ch M, ch N> = <[N], [M]>``."""
    return euler_form(Q, y, x)


def psi_eigencheck(Q: Quiver, v: Sequence) -> Optional[Fraction]:
    """The eigenvalue ``lambda`` when ``Psi v = lambda v`` exactly, else ``None``."""
    _check_len(Q, v)
    v = vec(v)
    if not any(v):
        return None
    w = coxeter(Q).psi.apply(v)
    k = next(i for i, x in enumerate(v) if x)
    lam = w[k] / v[k]
    if all(wi == lam * vi for wi, vi in zip(w, v)):
        return lam
    return None


# -- Dynkin classification and roots -----------------------------------------

def dynkin_type(Q: Quiver) -> list[tuple[str, int]]:
    """Type of each connected component, e.g. ``[("A", 3)]``.

    Raises :class:`UnsupportedTypeError` unless every component of the
    underlying graph is a simply-laced Dynkin diagram.
    """
    edges = Q.underlying_edges()
    if len(set(edges)) != len(edges):
        raise UnsupportedTypeError("multiple arrows between two vertices: not Dynkin")
    adj: dict[int, set[int]] = {v: set() for v in Q.vertices}
    for s, t in edges:
        adj[s].add(t)
        adj[t].add(s)
    types = []
    for comp in Q.components():
        n = len(comp)
        m = sum(len(adj[v]) for v in comp) // 2
        if m != n - 1:
            raise UnsupportedTypeError("underlying graph has a cycle: not Dynkin")
        branch = [v for v in comp if len(adj[v]) >= 3]
        if not branch:
            types.append(("A", n))
            continue
        if len(branch) > 1 or len(adj[branch[0]]) > 3:
            raise UnsupportedTypeError("underlying graph is not a Dynkin diagram")
        c = branch[0]
        arms = []
        for start in sorted(adj[c]):
            length, prev, cur = 1, c, start
            while len(adj[cur]) == 2:
                prev, cur = cur, next(w for w in adj[cur] if w != prev)
                length += 1
            arms.append(length)
        p, q, s = sorted(arms)
        if (p, q) == (1, 1):
            types.append(("D", n))
        elif (p, q) == (1, 2) and s in (2, 3, 4):
            types.append(("E", n))
        else:
            raise UnsupportedTypeError(f"arms {p},{q},{s}: not a Dynkin diagram")
    return types


def coxeter_number(kind: str, n: int) -> int:
    """Tabulated Coxeter numbers."""
    if kind == "A":
        return n + 1
    if kind == "D":
        return 2 * n - 2
    return {6: 12, 7: 18, 8: 30}[n]


def positive_roots(Q: Quiver) -> list[DimensionVector]:
    """Positive roots by closing the simple roots under simple reflections.

    Uses ``s_i(d) = d - (d, alpha_i) alpha_i`` for the symmetrised Euler form;
    from a positive root other than ``alpha_i``, ``s_i`` yields another
    positive root, and every positive root is reached this way.
    """
    dynkin_type(Q)
    r = Q.r
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for d in frontier:
            for i in range(r):
                c = symmetric_form(Q, d, simple[i])
                if c == 0:
                    continue
                e = tuple(x - int(c) * (j == i) for j, x in enumerate(d))
                if all(x >= 0 for x in e) and any(e) and e not in found:
                    found.add(e)
                    nxt.append(e)
        frontier = nxt
    return sorted(found, key=lambda d: (sum(d), d))


def is_regular(Q: Quiver, v: Sequence) -> tuple[bool, Optional[DimensionVector]]:
    """Whether ``v^t d != 0`` for every indecomposable; on failure a vanishing root."""
    _check_len(Q, v)
    for d in positive_roots(Q):
        if weighted_euler(v, d) == 0:
            return False, d
    return True, None


def is_regular_right(Q: Quiver, v: Sequence) -> tuple[bool, Optional[DimensionVector]]:
    """Regularity tested on right modules, i.e. on left modules over ``Q^op``.

    A right module ``N`` has the row class ``(dim N e_i)_i`` and weighted
    Euler characteristic ``Euvect(N) v``.
    """
    _check_len(Q, v)
    for row in positive_roots(Q.opposite()):
        if dot(vec(row), vec(v)) == 0:
            return False, row
    return True, None
