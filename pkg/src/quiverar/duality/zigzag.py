"""Snake removal for string diagrams built from units and counits of duality adjunctions.

A morphism is stored as a stack of layers, bottom first.  Each layer is a row
of cells: identity wires, units ``eta`` (no inputs, two outputs) and counits
``eps`` (two inputs, no outputs).  For the four flavors the shapes are

    l:  eta: 1 -> ld(X) * X     eps: X * ld(X) -> 1
    b:  eta: 1 -> bd(X) * X     eps: X * bd(X) -> 1
    r:  eta: 1 -> X * rd(X)     eps: rd(X) * X -> 1
    k:  eta: 1 -> X * D(X)      eps: D(X) * X -> 1

Syntax: ``eta_l(X{A,B})``, ``eps_r(...)``, ``id(expr)``, ``f * g`` side by
side, ``f . g`` for ``f`` after ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from ..linalg import InputError
from .expr import (
    BDual,
    Expr,
    KDual,
    LDual,
    ParseError,
    RDual,
    Unit,
    _Parser,
    boundary,
    factors,
    tensor,
    to_text,
)

FLAVORS = {"l": LDual, "b": BDual, "r": RDual, "k": KDual}


@dataclass(frozen=True)
class Wire:
    obj: Expr

    @property
    def dom(self) -> tuple[Expr, ...]:
        return (self.obj,)

    cod = dom


@dataclass(frozen=True)
class Cup:
    """A unit ``eta``: creates a pair of wires."""

    flavor: str
    x: Expr
    dom = ()

    @property
    def cod(self) -> tuple[Expr, ...]:
        d = FLAVORS[self.flavor](self.x)
        return (d, self.x) if self.flavor in "lb" else (self.x, d)


@dataclass(frozen=True)
class Cap:
    """A counit ``eps``: annihilates a pair of wires."""

    flavor: str
    x: Expr
    cod = ()

    @property
    def dom(self) -> tuple[Expr, ...]:
        d = FLAVORS[self.flavor](self.x)
        return (self.x, d) if self.flavor in "lb" else (d, self.x)


Cell = Union[Wire, Cup, Cap]
Layer = tuple  # tuple[Cell, ...]


def _layer_dom(layer: Layer) -> tuple[Expr, ...]:
    return tuple(o for c in layer for o in c.dom)


def _layer_cod(layer: Layer) -> tuple[Expr, ...]:
    return tuple(o for c in layer for o in c.cod)


def _wires(objs) -> Layer:
    return tuple(Wire(o) for o in objs)


@dataclass(frozen=True)
class Morphism:
    dom: tuple[Expr, ...]
    layers: tuple[Layer, ...]

    @property
    def cod(self) -> tuple[Expr, ...]:
        return _layer_cod(self.layers[-1]) if self.layers else self.dom

    @property
    def cells(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def is_identity(self) -> bool:
        return all(isinstance(c, Wire) for layer in self.layers for c in layer)

    def after(self, other: "Morphism") -> "Morphism":
        """Vertical composition ``self . other``."""
        if other.cod != self.dom:
            raise InputError(
                f"cannot compose: {_objects_text(other.cod)} does not match {_objects_text(self.dom)}"
            )
        return Morphism(other.dom, other.layers + self.layers)

    def beside(self, other: "Morphism") -> "Morphism":
        """Horizontal composition ``self * other``; the shorter side is padded with identities."""
        a, b = list(self.layers), list(other.layers)
        while len(a) < len(b):
            a.append(_wires(self.cod))
        while len(b) < len(a):
            b.append(_wires(other.cod))
        return Morphism(self.dom + other.dom, tuple(x + y for x, y in zip(a, b)))


def identity(e: Expr) -> Morphism:
    objs = tuple(f for f in factors(e) if not isinstance(f, Unit))
    return Morphism(objs, (_wires(objs),))


def unit(flavor: str, x: Expr) -> Morphism:
    boundary(x)
    return Morphism((), ((Cup(flavor, x),),))


def counit(flavor: str, x: Expr) -> Morphism:
    boundary(x)
    cell = Cap(flavor, x)
    return Morphism(cell.dom, ((cell,),))


# -- reduction -------------------------------------------------------------

def _positions(layer: Layer, side: str) -> list[tuple[int, int, int]]:
    """``(cell index, start, stop)`` of each cell on the given side."""
    out, k = [], 0
    for i, c in enumerate(layer):
        n = len(c.cod if side == "cod" else c.dom)
        out.append((i, k, k + n))
        k += n
    return out


def _snake(lower: Layer, upper: Layer) -> Optional[tuple[Layer, Layer]]:
    """Remove one snake spread over two adjacent layers, if there is one."""
    low = _positions(lower, "cod")
    up = _positions(upper, "dom")
    for i, start, _ in low:
        cup = lower[i]
        if not isinstance(cup, Cup):
            continue
        for j, ustart, _ in up:
            cap = upper[j]
            if not (isinstance(cap, Cap) and cap.flavor == cup.flavor and cap.x == cup.x):
                continue
            if ustart == start - 1:
                # wire enters left of the cup and leaves right of the cap
                wi = next((a for a, s, _ in low if s == start - 1), None)
                wj = next((b for b, s, _ in up if s == start + 1), None)
                if wi == i - 1 and wj == j + 1 and isinstance(lower[wi], Wire) and isinstance(upper[wj], Wire):
                    new_low = lower[:wi] + (lower[wi],) + lower[i + 1:]
                    new_up = upper[:j] + (upper[wj],) + upper[wj + 1:]
                    return new_low, new_up
            if ustart == start + 1:
                wi = next((a for a, s, _ in low if s == start + 2), None)
                wj = next((b for b, s, _ in up if s == start), None)
                if wi == i + 1 and wj == j - 1 and isinstance(lower[wi], Wire) and isinstance(upper[wj], Wire):
                    new_low = lower[:i] + (lower[wi],) + lower[wi + 1:]
                    new_up = upper[:wj] + (upper[wj],) + upper[j + 1:]
                    return new_low, new_up
    return None


def _drop_identity_layers(m: Morphism) -> Morphism:
    layers = tuple(layer for layer in m.layers if not all(isinstance(c, Wire) for c in layer))
    if not layers:
        layers = (_wires(m.dom),)
    return Morphism(m.dom, layers)


def zigzag_step(m: Morphism) -> Optional[Morphism]:
    """One snake removal, or ``None`` at a fixpoint."""
    m = _drop_identity_layers(m)
    layers = list(m.layers)
    for k in range(len(layers) - 1):
        hit = _snake(layers[k], layers[k + 1])
        if hit:
            layers[k], layers[k + 1] = hit
            return _drop_identity_layers(Morphism(m.dom, tuple(layers)))
    return None


def reduce_zigzag(m: Morphism) -> Morphism:
    """Remove snakes and identity layers until nothing changes."""
    m = _drop_identity_layers(m)
    while True:
        nxt = zigzag_step(m)
        if nxt is None:
            return m
        if nxt.cells >= m.cells:
            raise RuntimeError("snake removal failed to shrink the diagram")
        m = nxt


# -- text ------------------------------------------------------------------

def _objects_text(objs) -> str:
    return to_text(tensor(*objs)) if objs else "1"


def _cell_text(c: Cell) -> str:
    if isinstance(c, Wire):
        return f"id({to_text(c.obj)})"
    kind = "eta" if isinstance(c, Cup) else "eps"
    return f"{kind}_{c.flavor}({to_text(c.x)})"


def _layer_text(layer: Layer) -> str:
    parts, run = [], []
    for c in layer:
        if isinstance(c, Wire):
            run.append(c.obj)
            continue
        if run:
            parts.append(f"id({_objects_text(run)})")
            run = []
        parts.append(_cell_text(c))
    if run:
        parts.append(f"id({_objects_text(run)})")
    return " * ".join(parts)


def morphism_text(m: Morphism) -> str:
    if m.is_identity():
        return f"id({_objects_text(m.dom)})"
    texts = [_layer_text(layer) for layer in reversed(m.layers)]
    return " . ".join(f"({t})" if " * " in t and len(texts) > 1 else t for t in texts)


class _MorphismParser(_Parser):
    def morphism(self) -> Morphism:
        top = self.row()
        if self.at("."):
            self.next()
            return top.after(self.morphism())
        return top

    def row(self) -> Morphism:
        left = self.cell()
        if self.at("*"):
            self.next()
            return left.beside(self.row())
        return left

    def cell(self) -> Morphism:
        kind, val, pos = self.next()
        if kind == "sym" and val == "(":
            m = self.morphism()
            self.expect(")")
            return m
        if kind != "id":
            raise ParseError("expected a morphism", pos)
        self.expect("(")
        e = self.expr()
        self.expect(")")
        boundary(e)
        if val == "id":
            return identity(e)
        head, _, flavor = val.partition("_")
        if head in ("eta", "eps") and flavor in FLAVORS:
            return unit(flavor, e) if head == "eta" else counit(flavor, e)
        raise ParseError(f"unknown morphism {val!r}", pos)


def parse_morphism(text: str) -> Morphism:
    p = _MorphismParser(text)
    m = p.morphism()
    p.done()
    return m
