"""Typed expressions for bimodules built from tensor products, the four dualities and ``op``.

An expression ``e`` of boundary ``(P, Q)`` stands for a ``P``-``Q``-bimodule.
Tensor products are taken over the shared middle algebra.  The label ``k``
denotes the ground field, which is its own opposite.

Concrete syntax::

    X{A,B}          atom with boundary (A, B); a trailing ``!`` declares it invertible
    1{A}            the diagonal bimodule A
    ld(e) rd(e)     left and right duals
    bd(e) D(e)      bimodule dual and the k-linear dual
    op(e)           the opposite bimodule
    sh(e, n)        the n-fold shift
    e * f           tensor product (right associative)

Labels are identifiers optionally followed by ``^op``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..linalg import InputError

GROUND = "k"


class ParseError(InputError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class BoundaryError(InputError):
    """Ill-typed expression: a tensor over mismatched algebras."""


@dataclass(frozen=True, order=True)
class Label:
    name: str
    opposed: bool = False

    def __post_init__(self):
        if self.name == GROUND and self.opposed:
            object.__setattr__(self, "opposed", False)

    def op(self) -> "Label":
        return Label(self.name, not self.opposed)

    @property
    def is_ground(self) -> bool:
        return self.name == GROUND

    def __str__(self) -> str:
        return self.name + ("^op" if self.opposed else "")


@dataclass(frozen=True)
class Atom:
    name: str
    left: Label
    right: Label
    invertible: bool = False


@dataclass(frozen=True)
class Unit:
    label: Label


@dataclass(frozen=True)
class Tensor:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class LDual:
    arg: "Expr"


@dataclass(frozen=True)
class RDual:
    arg: "Expr"


@dataclass(frozen=True)
class BDual:
    arg: "Expr"


@dataclass(frozen=True)
class KDual:
    arg: "Expr"


@dataclass(frozen=True)
class Op:
    arg: "Expr"


@dataclass(frozen=True)
class Shift:
    arg: "Expr"
    n: int


Expr = Union[Atom, Unit, Tensor, LDual, RDual, BDual, KDual, Op, Shift]
DUALS = (LDual, RDual, BDual, KDual)
UNARY = DUALS + (Op,)


def boundary(e: Expr) -> tuple[Label, Label]:
    """The ``(left, right)`` algebra pair; raises :class:`BoundaryError` when ill-typed."""
    if isinstance(e, Atom):
        return e.left, e.right
    if isinstance(e, Unit):
        return e.label, e.label
    if isinstance(e, Tensor):
        p, q = boundary(e.left)
        q2, r = boundary(e.right)
        if q != q2:
            raise BoundaryError(f"cannot tensor over {q} with a factor starting at {q2}")
        return p, r
    if isinstance(e, DUALS):
        p, q = boundary(e.arg)
        return q, p
    if isinstance(e, Op):
        p, q = boundary(e.arg)
        return q.op(), p.op()
    if isinstance(e, Shift):
        return boundary(e.arg)
    raise TypeError(f"not an expression: {e!r}")


def size(e: Expr) -> int:
    """Number of AST nodes."""
    if isinstance(e, (Atom, Unit)):
        return 1
    if isinstance(e, Tensor):
        return 1 + size(e.left) + size(e.right)
    return 1 + size(e.arg)


def tensor(*factors: Expr) -> Expr:
    """Right-nested tensor product of one or more factors."""
    out = factors[-1]
    for f in reversed(factors[:-1]):
        out = Tensor(f, out)
    return out


def factors(e: Expr) -> list[Expr]:
    """Flatten nested tensors into their factors, left to right."""
    if isinstance(e, Tensor):
        return factors(e.left) + factors(e.right)
    return [e]


# -- printing ------------------------------------------------------------

_NAMES = {LDual: "ld", RDual: "rd", BDual: "bd", KDual: "D", Op: "op"}


def to_text(e: Expr) -> str:
    if isinstance(e, Atom):
        return f"{e.name}{{{e.left},{e.right}}}" + ("!" if e.invertible else "")
    if isinstance(e, Unit):
        return f"1{{{e.label}}}"
    if isinstance(e, Tensor):
        left = to_text(e.left)
        if isinstance(e.left, Tensor):
            left = f"({left})"
        return f"{left} * {to_text(e.right)}"
    if isinstance(e, Shift):
        return f"sh({to_text(e.arg)}, {e.n})"
    return f"{_NAMES[type(e)]}({to_text(e.arg)})"


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<op>\^op)|(?P<id>[A-Za-z_][A-Za-z0-9_']*)|(?P<sym>[{}(),*.!]))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.k = 0

    @property
    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.k]

    def next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, value: str) -> None:
        kind, val, pos = self.next()
        if val != value or kind == "end":
            found = repr(val) if kind != "end" else "end of input"
            raise ParseError(f"expected {value!r}, found {found}", pos)

    def at(self, value: str) -> bool:
        kind, val, _ = self.peek
        return kind != "end" and val == value

    def done(self) -> None:
        kind, val, pos = self.peek
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)

    def label(self) -> Label:
        kind, val, pos = self.next()
        if kind not in ("id", "int"):
            raise ParseError("expected an algebra label", pos)
        lab = Label(val)
        while self.peek[0] == "op":
            self.next()
            lab = lab.op()
        return lab

    def integer(self) -> int:
        kind, val, pos = self.next()
        if kind != "int":
            raise ParseError("expected an integer", pos)
        return int(val)

    def expr(self) -> Expr:
        left = self.term()
        if self.at("*"):
            self.next()
            return Tensor(left, self.expr())
        return left

    def term(self) -> Expr:
        kind, val, pos = self.next()
        if val == "(" and kind == "sym":
            e = self.expr()
            self.expect(")")
            return e
        if kind == "int" and val == "1":
            self.expect("{")
            lab = self.label()
            self.expect("}")
            return Unit(lab)
        if kind != "id":
            raise ParseError("expected an expression", pos)
        if self.at("("):
            self.next()
            e = self.expr()
            if val == "sh":
                self.expect(",")
                n = self.integer()
                self.expect(")")
                return Shift(e, n)
            self.expect(")")
            ctor = {"ld": LDual, "rd": RDual, "bd": BDual, "D": KDual, "op": Op}.get(val)
            if ctor is None:
                raise ParseError(f"unknown operator {val!r}", pos)
            return ctor(e)
        if self.at("{"):
            self.next()
            left = self.label()
            self.expect(",")
            right = self.label()
            self.expect("}")
            inv = False
            if self.at("!"):
                self.next()
                inv = True
            return Atom(val, left, right, inv)
        raise ParseError(f"atom {val!r} needs a boundary like {val}{{A,B}}", pos)


def parse(text: str) -> Expr:
    """Parse and type-check an expression."""
    p = _Parser(text)
    e = p.expr()
    p.done()
    boundary(e)
    return e
