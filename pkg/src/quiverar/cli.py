"""Command-line interface.

Exit codes: 0 on success, 1 when a checked identity fails (the message names
it by a short tag such as ``HRR``), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import knitting, ktheory, reps
from .duality import expr as dexpr
from .duality import rewrite, zigzag
from .ktheory import ConsistencyError
from .linalg import InputError, format_matrix, format_rational, format_vector, parse_rational
from .quiver import Quiver, hh0, parse_quiver

FORMAT_ENV = "QUIVERAR_FORMAT"
DEFAULT_SEED = 20250820

Record = tuple[str, str]


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _quiver(path: str) -> Quiver:
    return parse_quiver(_read(path))


def _rep(Q: Quiver, path: str) -> reps.Representation:
    return reps.parse_representation(_read(path), Q)


def _vector(text: str, r: Optional[int] = None, what: str = "vector") -> tuple[Fraction, ...]:
    parts = [t for t in text.replace(" ", "").split(",") if t]
    v = tuple(parse_rational(t) for t in parts)
    if r is not None and len(v) != r:
        raise InputError(f"{what} has {len(v)} entries, the quiver has {r} vertices")
    return v


def _intertwiner_text(f: reps.Intertwiner) -> str:
    return ";".join(format_matrix(b) for b in f.blocks)


def _failure(tag: str, message: str, records: list[Record]) -> ConsistencyError:
    exc = ConsistencyError(tag, message)
    exc.records = records
    return exc


# -- commands ----------------------------------------------------------------

def cmd_cartan(args) -> list[Record]:
    Q = _quiver(args.quiver)
    return [("cartan", format_matrix(ktheory.cartan_matrix(Q)))]


def cmd_coxeter(args) -> list[Record]:
    Q = _quiver(args.quiver)
    data = ktheory.coxeter(Q)  # raises PS-DUAL on mismatch
    return [
        ("cartan", format_matrix(data.cartan)),
        ("phi", format_matrix(data.phi)),
        ("psi", format_matrix(data.psi)),
        ("phi_right", format_matrix(data.phi_right)),
        ("ps_dual", "pass"),
    ]


def cmd_roots(args) -> list[Record]:
    Q = _quiver(args.quiver)
    roots = ktheory.positive_roots(Q)
    types = ",".join(f"{k}{n}" for k, n in ktheory.dynkin_type(Q))
    return [("type", types), ("count", str(len(roots)))] + [("root", format_vector(d)) for d in roots]


def cmd_regular(args) -> list[Record]:
    Q = _quiver(args.quiver)
    v = _vector(args.weight, Q.r, "weight")
    ok, witness = ktheory.is_regular(Q, v)
    ok_r, witness_r = ktheory.is_regular_right(Q, v)
    out = [("weight", format_vector(v)), ("result", "regular" if ok else "not regular")]
    if witness is not None:
        out.append(("witness", format_vector(witness)))
    out.append(("right_result", "regular" if ok_r else "not regular"))
    if witness_r is not None:
        out.append(("right_witness", format_vector(witness_r)))
    return out


def cmd_knit(args) -> list[Record]:
    Q = _quiver(args.quiver)
    ar = knitting.knit(Q)
    bad = knitting.mesh_violations(ar)
    if bad:
        raise ConsistencyError("MESH-ADD", f"mesh additivity fails at nodes {bad}")
    bad = knitting.tau_transport_violations(ar)
    if bad:
        raise ConsistencyError("TAU-PHI", f"dims(tau X) != Phi dims(X) at nodes {bad}")
    roots = ktheory.positive_roots(Q)
    if len(ar.nodes) != len(roots):
        raise ConsistencyError("GABRIEL", f"{len(ar.nodes)} nodes but {len(roots)} positive roots")
    report = knitting.verify_against_rep_engine(Q, ar, seed=args.seed) if args.verify else None
    if report and not report.passed:
        raise ConsistencyError("DTR", f"rep-engine tau disagrees at {report.mismatches}")
    text = ar.to_dot() if args.dot else ar.to_text()
    out = [("", line) for line in text.splitlines()]
    if report and not args.dot:
        out.append(("verify", f"{report.checks} tau links match D Tr"))
    return out


def cmd_hom(args) -> list[Record]:
    Q = _quiver(args.quiver)
    M, N = _rep(Q, args.M), _rep(Q, args.N)
    basis = reps.hom_basis(Q, M, N)
    return [("dim", str(len(basis)))] + [(f"basis{k}", _intertwiner_text(f)) for k, f in enumerate(basis)]


def cmd_ext(args) -> list[Record]:
    Q = _quiver(args.quiver)
    M, N = _rep(Q, args.M), _rep(Q, args.N)
    return [("dim", str(reps.ext1_dim(Q, M, N)))]


def cmd_tau(args) -> list[Record]:
    Q = _quiver(args.quiver)
    M = _rep(Q, args.M)
    T = reps.tau(Q, M)
    out = [("dims", format_vector(T.dims))]
    for a in Q.arrows:
        out.append((f"map_{a.name}", format_matrix(T.maps[a.name])))
    return out


def cmd_euler(args) -> list[Record]:
    Q = _quiver(args.quiver)
    d, e = _vector(args.d, Q.r, "d"), _vector(args.e, Q.r, "e")
    return [("euler", format_rational(ktheory.euler_form(Q, d, e)))]


def cmd_hrr(args) -> list[Record]:
    Q = _quiver(args.quiver)
    M, N = _rep(Q, args.M), _rep(Q, args.N)
    lhs = ktheory.mukai_pairing(Q, ktheory.chern(M.dims), ktheory.chern(N.dims))
    rhs = len(reps.hom_basis(Q, N, M)) - reps.ext1_dim(Q, N, M)
    diff = lhs - rhs
    out = [("mukai", format_rational(lhs)), ("hom_minus_ext", str(rhs)), ("difference", format_rational(diff))]
    if diff:
        raise _failure("HRR", f"Mukai pairing {lhs} differs from hom - ext {rhs}", out)
    return out


def cmd_chern(args) -> list[Record]:
    Q = _quiver(args.quiver)
    M = _rep(Q, args.M)
    return [("chern", format_vector(ktheory.chern(M.dims)))]


def cmd_trace_check(args) -> list[Record]:
    Q = _quiver(args.quiver)
    v = _vector(args.weight, Q.r, "weight")
    M = _rep(Q, args.M)
    report = reps.trace_formula_check(Q, v, M, samples=args.samples, rng=random.Random(args.seed))
    out = [
        ("weighted_euler", format_rational(report.weighted_euler)),
        ("identity_trace", format_rational(report.identity_trace)),
        ("radical_dim", str(report.radical_dim)),
        ("radical_samples", str(len(report.radical_traces))),
        ("radical_traces_zero", "pass" if report.radical_ok else "fail"),
        ("identity_trace_equals_euler", "pass" if report.identity_ok else "fail"),
        ("weight_status", "degenerate weight for M" if report.degenerate else "nondegenerate"),
    ]
    if not report.passed:
        raise _failure("TRACE", "weighted trace identities fail", out)
    return out


def cmd_hh0(args) -> list[Record]:
    Q = _quiver(args.quiver)
    dim, basis = hh0(Q)
    if dim != Q.r:
        raise ConsistencyError("HH0", f"dim HH_0 = {dim} but the quiver has {Q.r} vertices")
    return [("dim", str(dim)), ("basis", ",".join(basis))]


def cmd_diagram(args) -> list[Record]:
    if args.action == "normalize":
        if len(args.exprs) != 1:
            raise InputError("diagram normalize takes one expression")
        e = dexpr.parse(args.exprs[0])
        p, q = dexpr.boundary(e)
        return [("normal_form", dexpr.to_text(rewrite.normalize(e))), ("boundary", f"{p},{q}")]
    if args.action == "equiv":
        if len(args.exprs) != 2:
            raise InputError("diagram equiv takes two expressions")
        e1, e2 = (dexpr.parse(t) for t in args.exprs)
        same = rewrite.equivalent(e1, e2)
        return [
            ("left", dexpr.to_text(rewrite.normalize(e1))),
            ("right", dexpr.to_text(rewrite.normalize(e2))),
            ("result", "equivalent" if same else "not equivalent"),
        ]
    if len(args.exprs) != 1:
        raise InputError("diagram zigzag takes one morphism expression")
    m = zigzag.parse_morphism(args.exprs[0])
    r = zigzag.reduce_zigzag(m)
    return [("reduced", zigzag.morphism_text(r)), ("cells", f"{m.cells}->{r.cells}")]


# -- driver --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["human", "records"], default=None,
                        help=f"output style (default from ${FORMAT_ENV}, else human)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized steps")

    parser = argparse.ArgumentParser(prog="quiverar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name: str, func: Callable, help: str, *, quiver: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        if quiver:
            p.add_argument("quiver", help="quiver file")
        p.set_defaults(func=func)
        return p

    add("cartan", cmd_cartan, "Cartan matrix")
    add("coxeter", cmd_coxeter, "Coxeter matrices, checking Phi_right = Psi")
    add("roots", cmd_roots, "positive roots of a Dynkin quiver")
    p = add("regular", cmd_regular, "regularity of a weight")
    p.add_argument("--weight", required=True, help="comma-separated rationals")
    p = add("knit", cmd_knit, "Auslander-Reiten quiver by knitting")
    p.add_argument("--dot", action="store_true", help="emit a graph description instead")
    p.add_argument("--verify", action="store_true", help="cross-check tau links against D Tr")
    for name, func, text in (("hom", cmd_hom, "basis of Hom(M, N)"), ("ext", cmd_ext, "dim Ext^1(M, N)"),
                             ("hrr", cmd_hrr, "both sides of the HRR identity")):
        p = add(name, func, text)
        p.add_argument("M")
        p.add_argument("N")
    p = add("tau", cmd_tau, "AR translate D Tr M")
    p.add_argument("M")
    p = add("euler", cmd_euler, "Euler form <d, e>")
    p.add_argument("d")
    p.add_argument("e")
    p = add("chern", cmd_chern, "Chern character of M")
    p.add_argument("M")
    p = add("trace-check", cmd_trace_check, "weighted trace identities for an indecomposable")
    p.add_argument("M")
    p.add_argument("--weight", required=True)
    p.add_argument("--samples", type=int, default=10)
    add("hh0", cmd_hh0, "zeroth Hochschild homology")
    p = add("diagram", cmd_diagram, "duality calculus", quiver=False)
    p.add_argument("action", choices=["normalize", "equiv", "zigzag"])
    p.add_argument("exprs", nargs="+")
    return parser


def _emit(records: Sequence[Record], fmt: str, out) -> None:
    for key, value in records:
        if not key:
            print(value, file=out)
        elif fmt == "records":
            print(f"{key}={value}", file=out)
        else:
            print(f"{key}: {value}", file=out)


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = args.format or os.environ.get(FORMAT_ENV, "human")
    if fmt not in ("human", "records"):
        print(f"error: ${FORMAT_ENV} must be 'human' or 'records'", file=err)
        return 2
    try:
        records = args.func(args)
    except ConsistencyError as exc:
        _emit(getattr(exc, "records", []), fmt, out)
        print(f"assertion failed: {exc}", file=err)
        return 1
    except (InputError, KeyError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    _emit(records, fmt, out)
    return 0


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
