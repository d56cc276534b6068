"""Oriented rewriting of duality expressions to normal form.

Every rule is a canonical isomorphism.  They all follow from one model: write
``S_A = D(1{A})`` and ``S_A^-1 = bd(1{A})``; then for ``Z`` with boundary
``(P, Q)``

    ld(Z) = D(Z) * S_P^-1,   rd(Z) = S_Q^-1 * D(Z),   bd(Z) = S_Q^-1 * D(Z) * S_P^-1,
    D(X * Y) = D(Y) * S_B^-1 * D(X),

and ``S`` commutes with invertible bimodules.  Rewriting to a fixpoint
brings an expression to a shifted word in the letters

    atoms, op(atom), D(atom), D(op(atom)), D(1{A}), bd(1{A}), ld(a) for invertible a,

which is then folded back into ``ld``/``rd``/``bd`` from the right, so that
``bd(X * Y)`` normalizes to ``rd(Y) * bd(X)``.
"""

from __future__ import annotations

from typing import Callable, Iterator, Optional

from ..linalg import InputError
from .expr import (
    Atom,
    BDual,
    Expr,
    KDual,
    LDual,
    Op,
    RDual,
    Shift,
    Tensor,
    Unit,
    boundary,
    factors,
    tensor,
)

_DUAL_OF_SHIFT = (LDual, RDual, BDual, KDual)
MAX_STEPS = 100_000


def is_base(e: Expr) -> bool:
    return isinstance(e, Atom) or (isinstance(e, Op) and isinstance(e.arg, Atom))


def is_invertible_base(e: Expr) -> bool:
    if isinstance(e, Atom):
        return e.invertible
    return isinstance(e, Op) and isinstance(e.arg, Atom) and e.arg.invertible


def _serre(e: Expr) -> bool:
    return isinstance(e, KDual) and isinstance(e.arg, Unit) and not e.arg.label.is_ground


def _serre_inv(e: Expr) -> bool:
    return isinstance(e, BDual) and isinstance(e.arg, Unit) and not e.arg.label.is_ground


def _invertible_letter(e: Expr) -> bool:
    return is_invertible_base(e) or (isinstance(e, LDual) and is_invertible_base(e.arg))


def _inverse_pair(x: Expr, y: Expr) -> bool:
    """``x * y`` cancels to a unit."""
    if _serre(x) and _serre_inv(y) or _serre_inv(x) and _serre(y):
        return True
    if is_invertible_base(x) and isinstance(y, LDual) and y.arg == x:
        return True
    return is_invertible_base(y) and isinstance(x, LDual) and x.arg == y


def _expandable(e: Expr) -> bool:
    return not isinstance(e, (Unit, Tensor, Shift))


# -- root rules ------------------------------------------------------------

def _rules_at_root(e: Expr) -> Iterator[tuple[str, Expr]]:
    """All ``(rule name, result)`` pairs for redexes at the root of ``e``."""
    if isinstance(e, (Atom, Unit)):
        return
    if isinstance(e, Shift):
        if e.n == 0:
            yield "shift-zero", e.arg
        if isinstance(e.arg, Shift):
            yield "shift-merge", Shift(e.arg.arg, e.arg.n + e.n)
        return

    if isinstance(e, Tensor):
        x, y = e.left, e.right
        if isinstance(x, Shift):
            yield "shift-hoist", Shift(Tensor(x.arg, y), x.n)
        if isinstance(y, Shift):
            yield "shift-hoist", Shift(Tensor(x, y.arg), y.n)
        if isinstance(x, Tensor):
            yield "assoc", Tensor(x.left, Tensor(x.right, y))
        if isinstance(x, Unit):
            yield "unit-left", y
        if isinstance(y, Unit):
            yield "unit-right", x
        if _inverse_pair(x, y):
            yield "cancel", Unit(boundary(x)[0])
        if isinstance(y, Tensor) and _inverse_pair(x, y.left):
            yield "cancel", y.right
        # Serre letters commute past invertible bimodules
        if (_serre(x) or _serre_inv(x)) and _invertible_letter(y):
            moved = type(x)(Unit(boundary(y)[1]))
            yield "serre-commute", Tensor(y, moved)
        if (_serre(x) or _serre_inv(x)) and isinstance(y, Tensor) and _invertible_letter(y.left):
            moved = type(x)(Unit(boundary(y.left)[1]))
            yield "serre-commute", Tensor(y.left, Tensor(moved, y.right))
        return

    if isinstance(e, _DUAL_OF_SHIFT) and isinstance(e.arg, Shift):
        yield "shift-dual", Shift(type(e)(e.arg.arg), -e.arg.n)
    if isinstance(e, Op) and isinstance(e.arg, Shift):
        yield "shift-op", Shift(Op(e.arg.arg), e.arg.n)

    a = e.arg
    if isinstance(e, Op):
        if isinstance(a, Op):
            yield "op-op", a.arg
        elif isinstance(a, Tensor):
            yield "op-tensor", Tensor(Op(a.right), Op(a.left))
        elif isinstance(a, LDual):
            yield "op-ld", RDual(Op(a.arg))
        elif isinstance(a, RDual):
            yield "op-rd", LDual(Op(a.arg))
        elif isinstance(a, BDual):
            yield "op-bd", BDual(Op(a.arg))
        elif isinstance(a, KDual):
            yield "op-D", KDual(Op(a.arg))
        elif isinstance(a, Unit):
            yield "op-unit", Unit(a.label.op())
        return

    p, q = boundary(a)
    if isinstance(e, LDual):
        if isinstance(a, Unit):
            yield "dual-unit", a
        if isinstance(a, RDual):
            yield "ld-rd", a.arg
        if isinstance(a, Tensor):
            yield "ld-tensor", Tensor(LDual(a.right), LDual(a.left))
        if _expandable(a) and not is_invertible_base(a):
            yield "ld-expand", Tensor(KDual(a), BDual(Unit(p)))
    elif isinstance(e, RDual):
        if isinstance(a, Unit):
            yield "dual-unit", a
        if isinstance(a, LDual):
            yield "rd-ld", a.arg
        if isinstance(a, Tensor):
            yield "rd-tensor", Tensor(RDual(a.right), RDual(a.left))
        if is_invertible_base(a):
            yield "rd-invertible", LDual(a)
        elif _expandable(a):
            yield "rd-expand", Tensor(BDual(Unit(q)), KDual(a))
    elif isinstance(e, BDual):
        if isinstance(a, Unit) and a.label.is_ground:
            yield "dual-unit", a
        if isinstance(a, Tensor):
            yield "bd-tensor", Tensor(RDual(a.right), BDual(a.left))
        if _expandable(a):
            yield "bd-expand", Tensor(BDual(Unit(q)), Tensor(KDual(a), BDual(Unit(p))))
    elif isinstance(e, KDual):
        if isinstance(a, Unit) and a.label.is_ground:
            yield "dual-unit", a
        if isinstance(a, KDual):
            yield "D-D", a.arg
        if isinstance(a, Tensor):
            yield "D-tensor", Tensor(KDual(a.right), RDual(a.left))
        if is_invertible_base(a):
            yield "D-invertible", Tensor(LDual(a), KDual(Unit(p)))
        if isinstance(a, LDual) and is_invertible_base(a.arg):
            yield "D-inverse", Tensor(a.arg, KDual(Unit(p)))
        if _serre_inv(a):
            yield "D-serre", Tensor(KDual(a.arg), KDual(a.arg))


def _children(e: Expr) -> list[Expr]:
    if isinstance(e, Tensor):
        return [e.left, e.right]
    if isinstance(e, (Atom, Unit)):
        return []
    return [e.arg]


def _rebuild(e: Expr, kids: list[Expr]) -> Expr:
    if isinstance(e, Tensor):
        return Tensor(kids[0], kids[1])
    if isinstance(e, Shift):
        return Shift(kids[0], e.n)
    return type(e)(kids[0])


def one_step(e: Expr) -> list[tuple[str, Expr]]:
    """Every result of rewriting a single redex anywhere in ``e``."""
    out = list(_rules_at_root(e))
    kids = _children(e)
    for k, kid in enumerate(kids):
        for name, new in one_step(kid):
            out.append((name, _rebuild(e, kids[:k] + [new] + kids[k + 1:])))
    return out


def rewrite(e: Expr) -> Expr:
    """Innermost rewriting to a fixpoint of the rule set."""
    budget = [MAX_STEPS]

    def go(x: Expr) -> Expr:
        while True:
            kids = _children(x)
            if kids:
                x = _rebuild(x, [go(k) for k in kids])
            step = next(_rules_at_root(x), None)
            if step is None:
                return x
            budget[0] -= 1
            if budget[0] < 0:
                raise RuntimeError("rewriting did not terminate")
            x = step[1]

    return go(e)


# -- folding ---------------------------------------------------------------

def _fold_letters(letters: list[Expr]) -> list[Expr]:
    out: list[Expr] = []
    k = len(letters)

    def d_of_base(x: Expr) -> bool:
        return isinstance(x, KDual) and is_base(x.arg)

    while k > 0:
        last = letters[k - 1]
        if _serre_inv(last) and k >= 2 and d_of_base(letters[k - 2]):
            base = letters[k - 2].arg
            if k >= 3 and _serre_inv(letters[k - 3]):
                out.append(BDual(base))
                k -= 3
            else:
                out.append(LDual(base))
                k -= 2
        elif d_of_base(last) and k >= 2 and _serre_inv(letters[k - 2]):
            out.append(RDual(last.arg))
            k -= 2
        else:
            out.append(last)
            k -= 1
    out.reverse()
    return out


def fold(e: Expr) -> Expr:
    n = 0
    if isinstance(e, Shift):
        e, n = e.arg, e.n
    body = tensor(*_fold_letters(factors(e)))
    return Shift(body, n) if n else body


def normalize(e: Expr) -> Expr:
    """Canonical form: rewrite to the letter normal form, then fold."""
    boundary(e)
    return fold(rewrite(e))


def equivalent(e1: Expr, e2: Expr) -> bool:
    b1, b2 = boundary(e1), boundary(e2)
    if b1 != b2:
        raise InputError(
            f"boundary mismatch: ({b1[0]},{b1[1]}) vs ({b2[0]},{b2[1]})"
        )
    return normalize(e1) == normalize(e2)


def local_confluence_failures(e: Expr, norm: Optional[Callable[[Expr], Expr]] = None) -> list[tuple[str, Expr]]:
    """One-step rewrites of ``e`` whose normal form differs from that of ``e``."""
    norm = norm or normalize
    target = norm(e)
    return [(name, x) for name, x in one_step(e) if norm(x) != target]
