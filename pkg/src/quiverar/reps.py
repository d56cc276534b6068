"""Explicit quiver representations over the rationals.

A representation assigns a space ``Q^{d_i}`` to vertex ``i`` and a matrix of
shape ``d_t x d_s`` to each arrow ``s -> t``.  Homomorphisms, ``Ext^1``,
endomorphism algebras and the translate ``tau = D Tr`` are all computed by
exact linear algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

import sympy

from .ktheory import ConsistencyError, weighted_euler
from .linalg import (
    InputError,
    RationalMatrix,
    kernel_basis,
    parse_rational,
    rref,
    solve_linear,
    vec,
)
from .quiver import Path, Quiver


@dataclass(frozen=True)
class Representation:
    quiver: Quiver
    dims: tuple[int, ...]
    maps: Mapping[str, RationalMatrix] = field(default_factory=dict)

    def __post_init__(self):
        Q = self.quiver
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) != Q.r:
            raise InputError(f"{len(dims)} dimensions for a quiver with {Q.r} vertices")
        if any(d < 0 for d in dims):
            raise InputError("negative dimension")
        unknown = set(self.maps) - {a.name for a in Q.arrows}
        if unknown:
            raise InputError(f"maps for unknown arrows: {sorted(unknown)}")
        full = {}
        for a in Q.arrows:
            shape = (dims[a.target - 1], dims[a.source - 1])
            m = self.maps.get(a.name)
            if m is None:
                m = RationalMatrix.zeros(*shape)
            if m.shape != shape:
                raise InputError(f"map {a.name} has shape {m.shape}, expected {shape}")
            full[a.name] = m
        object.__setattr__(self, "maps", full)

    def dim(self, i: int) -> int:
        return self.dims[i - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_map(self, p: Path) -> RationalMatrix:
        m = RationalMatrix.identity(self.dim(p.source))
        for name in p.arrows:
            m = self.maps[name] @ m
        return m

    def __hash__(self) -> int:
        return hash((self.dims, tuple(sorted(self.maps.items()))))

    def to_text(self) -> str:
        lines = ["dims " + " ".join(map(str, self.dims))]
        for a in self.quiver.arrows:
            m = self.maps[a.name]
            lines.append(f"map {a.name}")
            if m.rows and m.cols:
                lines += [" ".join(str(x) for x in r) for r in m]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Intertwiner:
    """A homomorphism ``source -> target``, one block per vertex."""

    source: Representation
    target: Representation
    blocks: tuple[RationalMatrix, ...]

    def compose(self, other: "Intertwiner") -> "Intertwiner":
        """``self o other``."""
        if other.target.dims != self.source.dims:
            raise InputError("intertwiners are not composable")
        return Intertwiner(other.source, self.target, tuple(a @ b for a, b in zip(self.blocks, other.blocks)))

    def __add__(self, other: "Intertwiner") -> "Intertwiner":
        return Intertwiner(self.source, self.target, tuple(a + b for a, b in zip(self.blocks, other.blocks)))

    def scale(self, c) -> "Intertwiner":
        return Intertwiner(self.source, self.target, tuple(b.scale(c) for b in self.blocks))

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(x for b in self.blocks for r in b for x in r)

    def is_homomorphism(self) -> bool:
        M, N = self.source, self.target
        return all(
            N.maps[a.name] @ self.blocks[a.source - 1] == self.blocks[a.target - 1] @ M.maps[a.name]
            for a in M.quiver.arrows
        )


# -- constructors --------------------------------------------------------

def zero_rep(Q: Quiver) -> Representation:
    return Representation(Q, (0,) * Q.r)


def simple_rep(Q: Quiver, i: int) -> Representation:
    return Representation(Q, tuple(int(j == i) for j in Q.vertices))


def projective_rep(Q: Quiver, i: int) -> Representation:
    """``P_i = A e_i``: at ``j`` the span of paths from ``i`` to ``j``."""
    bases = {j: Q.paths_between(i, j) for j in Q.vertices}
    maps = {}
    for a in Q.arrows:
        src, tgt = bases[a.source], bases[a.target]
        index = {p: k for k, p in enumerate(tgt)}
        cols = []
        for p in src:
            col = [0] * len(tgt)
            col[index[p.then(Path(a.source, a.target, (a.name,)))]] = 1
            cols.append(col)
        maps[a.name] = RationalMatrix.from_columns(cols, len(tgt))
    return Representation(Q, tuple(len(bases[j]) for j in Q.vertices), maps)


def injective_rep(Q: Quiver, i: int) -> Representation:
    """``I_i = D(e_i A)``: at ``j`` the dual of the span of paths from ``j`` to ``i``."""
    bases = {j: Q.paths_between(j, i) for j in Q.vertices}
    maps = {}
    for a in Q.arrows:
        # right action e_i A e_t -> e_i A e_s, x -> x a; the dual map is its transpose
        src, tgt = bases[a.target], bases[a.source]
        index = {p: k for k, p in enumerate(tgt)}
        cols = []
        for x in src:
            col = [0] * len(tgt)
            col[index[Path(a.source, a.target, (a.name,)).then(x)]] = 1
            cols.append(col)
        maps[a.name] = RationalMatrix.from_columns(cols, len(tgt)).T
    return Representation(Q, tuple(len(bases[j]) for j in Q.vertices), maps)


def direct_sum(*reps: Representation) -> Representation:
    Q = reps[0].quiver
    dims = tuple(sum(M.dims[k] for M in reps) for k in range(Q.r))
    maps = {a.name: RationalMatrix.block_diagonal([M.maps[a.name] for M in reps]) for a in Q.arrows}
    return Representation(Q, dims, maps)


def random_rep(Q: Quiver, dims: Sequence[int], rng: random.Random, spread: int = 2) -> Representation:
    maps = {}
    for a in Q.arrows:
        rows, cols = dims[a.target - 1], dims[a.source - 1]
        maps[a.name] = RationalMatrix(rows, cols, [rng.randint(-spread, spread) for _ in range(rows * cols)])
    return Representation(Q, tuple(dims), maps)


def generic_indecomposable(Q: Quiver, dims: Sequence[int], rng: random.Random, attempts: int = 200) -> Representation:
    """A random representation of the given dimension, re-drawn until indecomposable."""
    for _ in range(attempts):
        M = random_rep(Q, dims, rng, spread=3)
        if is_indecomposable(Q, M):
            return M
    raise ConsistencyError("GENERIC", f"no indecomposable found with dimension vector {tuple(dims)}")


def parse_representation(text: str, Q: Quiver) -> Representation:
    """Parse ``dims d1 .. dr`` then blocks ``map <name>`` followed by matrix rows.

    Blocks for arrows touching a zero-dimensional vertex carry no rows;
    omitted arrows get zero maps.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines or not lines[0][1].startswith("dims"):
        raise InputError("representation file must start with 'dims'")
    try:
        dims = tuple(int(x) for x in lines[0][1].split()[1:])
    except ValueError as exc:
        raise InputError(f"line {lines[0][0]}: bad dimension") from exc
    if len(dims) != Q.r:
        raise InputError(f"line {lines[0][0]}: expected {Q.r} dimensions")
    maps = {}
    k = 1
    while k < len(lines):
        lineno, line = lines[k]
        parts = line.split()
        if parts[0] != "map" or len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'map <name>'")
        try:
            a = Q.arrow(parts[1])
        except KeyError:
            raise InputError(f"line {lineno}: unknown arrow {parts[1]!r}") from None
        rows, cols = dims[a.target - 1], dims[a.source - 1]
        k += 1
        entries = []
        if rows and cols:
            for _ in range(rows):
                if k >= len(lines):
                    raise InputError(f"map {a.name}: expected {rows} rows")
                rl, row = lines[k]
                vals = [parse_rational(t) for t in row.split()]
                if len(vals) != cols:
                    raise InputError(f"line {rl}: expected {cols} entries")
                entries.extend(vals)
                k += 1
        maps[a.name] = RationalMatrix(rows, cols, entries)
    return Representation(Q, dims, maps)


# -- Hom and Ext ---------------------------------------------------------

def _offsets(M: Representation, N: Representation) -> list[int]:
    offs, total = [], 0
    for i in range(M.quiver.r):
        offs.append(total)
        total += N.dims[i] * M.dims[i]
    return offs + [total]


def _differential(M: Representation, N: Representation) -> RationalMatrix:
    """``(f_i) -> (N_a f_s - f_t M_a)_a`` on flattened row-major blocks."""
    Q = M.quiver
    offs = _offsets(M, N)
    nvars = offs[-1]
    rows = []
    for a in Q.arrows:
        s, t = a.source - 1, a.target - 1
        Na, Ma = N.maps[a.name], M.maps[a.name]
        for p in range(N.dims[t]):
            for q in range(M.dims[s]):
                row = [Fraction(0)] * nvars
                # (N_a f_s)[p, q] = sum_k Na[p, k] f_s[k, q]
                for k in range(N.dims[s]):
                    if Na[p, k]:
                        row[offs[s] + k * M.dims[s] + q] += Na[p, k]
                # (f_t M_a)[p, q] = sum_k f_t[p, k] Ma[k, q]
                for k in range(M.dims[t]):
                    if Ma[k, q]:
                        row[offs[t] + p * M.dims[t] + k] -= Ma[k, q]
                rows.append(row)
    return RationalMatrix.from_rows(rows, cols=nvars) if rows else RationalMatrix.zeros(0, nvars)


def _unflatten(M: Representation, N: Representation, v: Sequence[Fraction]) -> Intertwiner:
    offs = _offsets(M, N)
    blocks = tuple(
        RationalMatrix(N.dims[i], M.dims[i], v[offs[i]:offs[i + 1]]) for i in range(M.quiver.r)
    )
    return Intertwiner(M, N, blocks)


def hom_basis(Q: Quiver, M: Representation, N: Representation) -> list[Intertwiner]:
    """Basis of ``Hom(M, N)`` as the kernel of the intertwining equations."""
    return [_unflatten(M, N, v) for v in kernel_basis(_differential(M, N))]


def ext1_dim(Q: Quiver, M: Representation, N: Representation) -> int:
    """``dim Ext^1(M, N)`` as the cokernel of the intertwining differential."""
    D = _differential(M, N)
    return D.rows - D.rank()


def identity_map(M: Representation) -> Intertwiner:
    return Intertwiner(M, M, tuple(RationalMatrix.identity(d) for d in M.dims))


# -- endomorphism algebras ----------------------------------------------------

@dataclass(frozen=True)
class EndAlgebraData:
    module: Representation
    basis: tuple[Intertwiner, ...]
    multiplication_table: tuple[tuple[tuple[Fraction, ...], ...], ...]
    radical_coords: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def radical_dim(self) -> int:
        return len(self.radical_coords)

    @property
    def top_dim(self) -> int:
        """``dim End / rad End``."""
        return self.dim - self.radical_dim

    def element(self, coords: Sequence) -> Intertwiner:
        out = identity_map(self.module).scale(0)
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b.scale(c)
        return out

    @property
    def radical_basis(self) -> list[Intertwiner]:
        return [self.element(c) for c in self.radical_coords]

    def coordinates(self, f: Intertwiner) -> tuple[Fraction, ...]:
        A = RationalMatrix.from_columns([b.flat() for b in self.basis], len(f.flat()))
        x = solve_linear(A, f.flat())
        if x is None:
            raise InputError("not an endomorphism of the module")
        return x


def end_algebra(Q: Quiver, M: Representation) -> EndAlgebraData:
    """``End(M)`` with structure constants and its Jacobson radical.

    The radical is the kernel of the trace form ``T(a, b) = tr(L_a L_b)``
    of the left regular representation, which is valid in characteristic 0.
    """
    if M.is_zero():
        raise InputError("endomorphism algebra of the zero module")
    basis = hom_basis(Q, M, M)
    n = len(basis)
    A = RationalMatrix.from_columns([b.flat() for b in basis], len(basis[0].flat()))
    table = []
    for bi in basis:
        row = []
        for bj in basis:
            x = solve_linear(A, bi.compose(bj).flat())
            if x is None:
                raise ConsistencyError("END", "End(M) is not closed under composition")
            row.append(x)
        table.append(tuple(row))
    # L_i[k][j] = coefficient of b_k in b_i b_j
    L = [RationalMatrix(n, n, [table[i][j][k] for k in range(n) for j in range(n)]) for i in range(n)]
    T = RationalMatrix(n, n, [(L[i] @ L[j]).trace() for i in range(n) for j in range(n)])
    data = EndAlgebraData(M, tuple(basis), tuple(table), tuple(kernel_basis(T)))
    for f in data.radical_basis:
        if not is_nilpotent(f):
            raise ConsistencyError("RAD", "radical element is not nilpotent")
    return data


def is_nilpotent(f: Intertwiner) -> bool:
    return all((b ** max(b.rows, 1)).is_zero() for b in f.blocks)


def is_indecomposable(Q: Quiver, M: Representation) -> bool:
    """``dim End(M)/rad End(M) == 1``."""
    if M.is_zero():
        raise InputError("the zero module is not indecomposable")
    return end_algebra(Q, M).top_dim == 1


def weighted_trace(v: Sequence, f: Intertwiner) -> Fraction:
    """``sum_i v_i tr(f_i)`` for an endomorphism ``f``."""
    if f.source.dims != f.target.dims:
        raise InputError("weighted trace of a non-endomorphism")
    v = vec(v)
    if len(v) != len(f.blocks):
        raise InputError("weight length does not match the quiver")
    return sum((vi * b.trace() for vi, b in zip(v, f.blocks)), Fraction(0))


# -- subrepresentations ------------------------------------------------------

def _in_span(basis_cols: list[tuple], v: tuple) -> bool:
    if not basis_cols:
        return not any(v)
    A = RationalMatrix.from_columns(basis_cols, len(v))
    return solve_linear(A, v) is not None


def subrepresentation(M: Representation, bases: Sequence[Sequence[tuple]]) -> Representation:
    """The subrepresentation with vertex ``i`` spanned by ``bases[i-1]`` (independent columns)."""
    Q = M.quiver
    dims = tuple(len(b) for b in bases)
    maps = {}
    for a in Q.arrows:
        src, tgt = bases[a.source - 1], bases[a.target - 1]
        cols = []
        if tgt:
            U = RationalMatrix.from_columns(tgt, M.dims[a.target - 1])
        for u in src:
            w = M.maps[a.name].apply(u)
            if not tgt:
                if any(w):
                    raise ConsistencyError("SUBREP", "subspace is not invariant")
                cols.append(())
                continue
            x = solve_linear(U, w)
            if x is None:
                raise ConsistencyError("SUBREP", "subspace is not invariant")
            cols.append(x)
        maps[a.name] = RationalMatrix.from_columns(cols, len(tgt)) if src else RationalMatrix.zeros(len(tgt), 0)
    return Representation(Q, dims, maps)


def kernel_rep(f: Intertwiner) -> Representation:
    return subrepresentation(f.source, [kernel_basis(b) for b in f.blocks])


def image_rep(f: Intertwiner) -> Representation:
    bases = []
    for b in f.blocks:
        rows, _ = rref(b.T)
        bases.append([tuple(r) for r in rows])
    return subrepresentation(f.target, bases)


def radical_subspaces(M: Representation) -> list[list[tuple]]:
    """Vertexwise ``rad M``: the span of the images of all arrows."""
    Q = M.quiver
    out = []
    for j in Q.vertices:
        gens = []
        for a in Q.arrows:
            if a.target == j:
                m = M.maps[a.name]
                gens += [m.column(c) for c in range(m.cols)]
        if gens and M.dim(j):
            rows, _ = rref(RationalMatrix.from_rows(gens, cols=M.dim(j)))
            out.append([tuple(r) for r in rows])
        else:
            out.append([])
    return out


def _complement(sub: list[tuple], ambient: list[tuple]) -> list[tuple]:
    """Greedily pick vectors of ``ambient`` extending ``sub`` to a spanning set."""
    picked: list[tuple] = []
    current = list(sub)
    for v in ambient:
        if not _in_span(current, v):
            picked.append(v)
            current.append(v)
    return picked


def top_generators(M: Representation) -> list[tuple[int, tuple]]:
    """Vectors (vertex, element) whose classes form a basis of ``M / rad M``."""
    rad = radical_subspaces(M)
    gens = []
    for j in M.quiver.vertices:
        d = M.dim(j)
        std = [tuple(Fraction(int(k == c)) for k in range(d)) for c in range(d)]
        gens += [(j, v) for v in _complement(rad[j - 1], std)]
    return gens


# -- the Auslander-Reiten translate ---------------------------------------

def tau(Q: Quiver, M: Representation) -> Representation:
    """``D Tr M`` from a minimal projective presentation ``P1 -> P0 -> M``.

    Projective summands of ``M`` are annihilated, as ``Tr`` does.
    """
    # projective cover P0 -> M, P0 = sum of A e_{v(g)} over top generators g
    gens = top_generators(M)
    p0_basis = {j: [(g, p) for g, (v, _) in enumerate(gens) for p in Q.paths_between(v, j)] for j in Q.vertices}
    cover_cols = {
        j: [M.path_map(p).apply(gens[g][1]) for g, p in p0_basis[j]] for j in Q.vertices
    }
    # syzygy: kernel of the cover, vertexwise, in P0 coordinates
    omega = {}
    for j in Q.vertices:
        n = len(p0_basis[j])
        if M.dim(j):
            omega[j] = kernel_basis(RationalMatrix.from_columns(cover_cols[j], M.dim(j))) if n else []
        else:
            omega[j] = [tuple(Fraction(int(k == c)) for k in range(n)) for c in range(n)]

    def act(b, j: int, coeffs: tuple) -> tuple:
        # left action of arrow b (from j) on an element of (P0)_j
        tgt = p0_basis[b.target]
        index = {gp: k for k, gp in enumerate(tgt)}
        out = [Fraction(0)] * len(tgt)
        for c, (g, p) in zip(coeffs, p0_basis[j]):
            if c:
                out[index[(g, p.then(Path(b.source, b.target, (b.name,))))]] += c
        return tuple(out)

    # generators of the projective syzygy P1 = top of omega
    p1_gens = []
    for j in Q.vertices:
        rad_j = []
        for b in Q.arrows:
            if b.target == j:
                rad_j += [act(b, b.source, w) for w in omega[b.source]]
        if rad_j:
            rows, _ = rref(RationalMatrix.from_rows(rad_j, cols=len(p0_basis[j])))
            rad_j = [tuple(r) for r in rows]
        p1_gens += [(j, w) for w in _complement(rad_j, omega[j])]

    # Tr M = coker(Hom(P0, A) -> Hom(P1, A)); Hom(A e_v, A) = e_v A, at j: paths j -> v
    U = {j: [(g, x) for g, (v, _) in enumerate(gens) for x in Q.paths_between(j, v)] for j in Q.vertices}
    W = {j: [(h, y) for h, (v, _) in enumerate(p1_gens) for y in Q.paths_between(j, v)] for j in Q.vertices}
    K = {}
    for j in Q.vertices:
        w_index = {hy: k for k, hy in enumerate(W[j])}
        cols = []
        for g, x in U[j]:
            col = [Fraction(0)] * len(W[j])
            for h, (v, coeffs) in enumerate(p1_gens):
                for c, (g2, p) in zip(coeffs, p0_basis[v]):
                    if c and g2 == g:
                        # p1(h) has component c*p on g, so g-side x maps to c * (p x) on h
                        col[w_index[(h, x.then(p))]] += c
            cols.append(col)
        P = RationalMatrix.from_columns(cols, len(W[j])) if cols else RationalMatrix.zeros(len(W[j]), 0)
        # D(coker P) = ker(P^t) inside D(W_j)
        K[j] = kernel_basis(P.T)

    maps = {}
    for b in Q.arrows:
        j, k = b.source, b.target
        # right action W_k -> W_j: y -> y b ; dual action is its transpose
        wj_index = {hy: n for n, hy in enumerate(W[j])}
        R_cols = []
        for h, y in W[k]:
            col = [Fraction(0)] * len(W[j])
            col[wj_index[(h, Path(j, k, (b.name,)).then(y))]] = Fraction(1)
            R_cols.append(col)
        Rt = RationalMatrix.from_columns(R_cols, len(W[j])).T if R_cols else RationalMatrix.zeros(0, len(W[j]))
        cols = []
        if K[k]:
            Kk = RationalMatrix.from_columns(K[k], len(W[k]))
        for kappa in K[j]:
            image = Rt.apply(kappa)
            if not K[k]:
                if any(image):
                    raise ConsistencyError("DTR", "dual transpose is not a submodule")
                cols.append(())
                continue
            x = solve_linear(Kk, image)
            if x is None:
                raise ConsistencyError("DTR", "dual transpose is not a submodule")
            cols.append(x)
        maps[b.name] = RationalMatrix.from_columns(cols, len(K[k])) if K[j] else RationalMatrix.zeros(len(K[k]), 0)
    return Representation(Q, tuple(len(K[j]) for j in Q.vertices), maps)


# -- trace formula consequences ------------------------------------------------

@dataclass(frozen=True)
class TraceReport:
    weighted_euler: Fraction
    identity_trace: Fraction
    radical_traces: tuple[Fraction, ...]
    radical_dim: int

    @property
    def radical_ok(self) -> bool:
        return all(t == 0 for t in self.radical_traces)

    @property
    def identity_ok(self) -> bool:
        return self.identity_trace == self.weighted_euler

    @property
    def degenerate(self) -> bool:
        """The weight kills ``M``: the would-be AR triangle splits."""
        return self.weighted_euler == 0

    @property
    def passed(self) -> bool:
        return self.radical_ok and self.identity_ok


def trace_formula_check(Q: Quiver, v: Sequence, M: Representation, samples: int = 10,
                        rng: Optional[random.Random] = None) -> TraceReport:
    """Check the weighted-trace facts behind Happel's criterion for ``M``.

    (a) radical endomorphisms have zero weighted trace, (b) the identity has
    weighted trace equal to the weighted Euler characteristic.
    """
    rng = rng or random.Random(0)
    E = end_algebra(Q, M)
    if E.top_dim != 1:
        raise InputError("trace-formula check needs an indecomposable module")
    traces = []
    if E.radical_dim:
        for _ in range(samples):
            coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(E.radical_dim)]
            f = E.element([sum((c * rc[k] for c, rc in zip(coeffs, E.radical_coords)), Fraction(0))
                           for k in range(E.dim)])
            traces.append(weighted_trace(v, f))
    return TraceReport(
        weighted_euler=weighted_euler(v, M.dims),
        identity_trace=weighted_trace(v, identity_map(M)),
        radical_traces=tuple(traces),
        radical_dim=E.radical_dim,
    )


# -- Krull-Schmidt decomposition ----------------------------------------------

def _poly_at(coeffs: Sequence[Fraction], X: RationalMatrix) -> RationalMatrix:
    out = RationalMatrix.zeros(X.rows, X.cols)
    eye = RationalMatrix.identity(X.rows)
    for c in coeffs:
        out = out @ X + eye.scale(c)
    return out


def _primary_split(M: Representation, f: Intertwiner) -> list[Representation]:
    """Split ``M`` along the primary components of the endomorphism ``f``."""
    big = RationalMatrix.block_diagonal(list(f.blocks))
    x = sympy.Symbol("x")
    charpoly = sympy.Matrix(big.rows, big.cols, [sympy.Rational(q.numerator, q.denominator)
                                                  for r in big for q in r]).charpoly(x)
    _, factors = sympy.factor_list(charpoly.as_expr(), x)
    pieces = []
    for poly, mult in factors:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in sympy.Poly(poly, x).all_coeffs()]
        bases = []
        for b in f.blocks:
            if b.rows == 0:
                bases.append([])
                continue
            bases.append(kernel_basis(_poly_at(coeffs, b) ** b.rows))
        piece = subrepresentation(M, bases)
        if not piece.is_zero():
            pieces.append(piece)
    return pieces


def decompose(Q: Quiver, M: Representation, seed: int = 0, attempts: int = 60) -> list[Representation]:
    """Indecomposable summands of ``M`` via Fitting splittings of random endomorphisms.

    A module that no sampled endomorphism splits is returned whole; its
    endomorphism ring is then treated as local.
    """
    rng = random.Random(seed)
    out: list[Representation] = []
    stack = [M]
    while stack:
        X = stack.pop()
        if X.is_zero():
            continue
        E = end_algebra(Q, X)
        if E.top_dim == 1:
            out.append(X)
            continue
        for _ in range(attempts):
            f = E.element([rng.randint(-4, 4) for _ in range(E.dim)])
            pieces = _primary_split(X, f)
            if len(pieces) > 1:
                stack.extend(pieces)
                break
        else:
            out.append(X)
    return sorted(out, key=lambda R: (sum(R.dims), R.dims))
