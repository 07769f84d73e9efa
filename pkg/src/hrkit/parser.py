"""Representation expressions.

    expr   := term { "+" term }
    term   := "trivial(" INT ")" | ctor
    ctor   := "std(" group ")" | "dual(" ctor ")" | "wedge(" INT "," ctor ")"
            | "sym2(" ctor ")" | "tensor(" ctor "," ctor ")" | "spinrep(" INT ")"
            | "adj(" group ")"
    group  := [ "z*" ] FAMILY "(" INT ")"

A ``#k`` suffix on a group atom (or on the ``std``/``adj``/``spinrep`` call
around it) makes every atom tagged ``k`` the same factor; untagged atoms are
always distinct.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .reprkit import (LinearRep, adj, dsum, dual, lambda_k, new_uid, quaternionify,
                      spin_rep, std_rep, sym2, tprod, trivial)

FAMILIES = ("so", "su", "sp", "u")


class ParseError(ValueError):
    def __init__(self, msg: str, src: str, pos: int):
        super().__init__(f"{msg} at position {pos}\n  {src}\n  {' ' * pos}^")
        self.pos = pos


class ElaborationError(ValueError):
    pass


@dataclass(frozen=True)
class Group:
    family: str
    size: int
    center: bool = False
    tag: int | None = None


@dataclass(frozen=True)
class Std:
    group: Group


@dataclass(frozen=True)
class Adj:
    group: Group


@dataclass(frozen=True)
class Spin:
    n: int
    tag: int | None = None


@dataclass(frozen=True)
class Dual:
    arg: "Ctor"


@dataclass(frozen=True)
class Wedge:
    k: int
    arg: "Ctor"


@dataclass(frozen=True)
class Sym2:
    arg: "Ctor"


@dataclass(frozen=True)
class Tensor:
    left: "Ctor"
    right: "Ctor"


@dataclass(frozen=True)
class Trivial:
    d: int


@dataclass(frozen=True)
class Sum:
    terms: tuple


Ctor = Union[Std, Adj, Spin, Dual, Wedge, Sym2, Tensor]

_TOKEN = re.compile(r"\s*(?:(\d+)|(z\*)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(src):
            if src[pos:].strip() == "":
                break
            m = _TOKEN.match(src, pos)
            start = m.start(0) + len(m.group(0)) - len(m.group(0).lstrip())
            if m.group(1):
                self.toks.append(("int", m.group(1), start))
            elif m.group(2):
                self.toks.append(("z", "z*", start))
            elif m.group(3):
                self.toks.append(("name", m.group(3), start))
            else:
                self.toks.append(("sym", m.group(4), start))
            pos = m.end(0)
        self.toks.append(("end", "", len(src)))
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def fail(self, msg: str):
        raise ParseError(msg, self.src, self.peek()[2])

    def take(self, kind: str, value: str | None = None) -> str:
        k, v, _ = self.peek()
        if k != kind or (value is not None and v != value):
            want = repr(value) if value is not None else kind
            got = "end of input" if k == "end" else repr(v)
            self.fail(f"expected {want}, found {got}")
        self.i += 1
        return v

    def integer(self) -> int:
        return int(self.take("int"))

    def tag(self) -> int | None:
        if self.peek()[:2] == ("sym", "#"):
            self.i += 1
            return self.integer()
        return None

    def expr(self) -> Sum:
        terms = [self.term()]
        while self.peek()[:2] == ("sym", "+"):
            self.i += 1
            terms.append(self.term())
        if self.peek()[0] != "end":
            self.fail("expected '+' or end of input")
        return Sum(tuple(terms))

    def term(self):
        if self.peek()[:2] == ("name", "trivial"):
            self.i += 1
            self.take("sym", "(")
            d = self.integer()
            self.take("sym", ")")
            return Trivial(d)
        return self.ctor()

    def group(self) -> Group:
        center = False
        if self.peek()[0] == "z":
            self.i += 1
            center = True
        fam = self.take("name")
        if fam not in FAMILIES:
            self.i -= 1
            self.fail(f"unknown group family {fam!r}; expected one of {', '.join(FAMILIES)}")
        self.take("sym", "(")
        n = self.integer()
        self.take("sym", ")")
        return Group(fam, n, center, self.tag())

    def _retag(self, g: Group) -> Group:
        t = self.tag()
        if t is None:
            return g
        if g.tag is not None and g.tag != t:
            self.fail("conflicting factor tags")
        return Group(g.family, g.size, g.center, t)

    def ctor(self):
        k, name, _ = self.peek()
        if k != "name":
            self.fail("expected a constructor")
        self.i += 1
        self.take("sym", "(")
        if name == "std" or name == "adj":
            g = self.group()
            self.take("sym", ")")
            g = self._retag(g)
            return Std(g) if name == "std" else Adj(g)
        if name == "spinrep":
            n = self.integer()
            self.take("sym", ")")
            return Spin(n, self.tag())
        if name == "dual" or name == "sym2":
            a = self.ctor()
            self.take("sym", ")")
            return Dual(a) if name == "dual" else Sym2(a)
        if name == "wedge":
            kk = self.integer()
            self.take("sym", ",")
            a = self.ctor()
            self.take("sym", ")")
            return Wedge(kk, a)
        if name == "tensor":
            a = self.ctor()
            self.take("sym", ",")
            b = self.ctor()
            self.take("sym", ")")
            return Tensor(a, b)
        self.i -= 2
        self.fail(f"unknown constructor {name!r}")


def parse(src: str) -> Sum:
    return _Parser(src).expr()


def pretty(node) -> str:
    if isinstance(node, Sum):
        return " + ".join(pretty(t) for t in node.terms)
    if isinstance(node, Trivial):
        return f"trivial({node.d})"
    if isinstance(node, (Std, Adj)):
        g = node.group
        word = "std" if isinstance(node, Std) else "adj"
        text = f"{word}({'z*' if g.center else ''}{g.family}({g.size}))"
        return text + (f"#{g.tag}" if g.tag is not None else "")
    if isinstance(node, Spin):
        return f"spinrep({node.n})" + (f"#{node.tag}" if node.tag is not None else "")
    if isinstance(node, Dual):
        return f"dual({pretty(node.arg)})"
    if isinstance(node, Sym2):
        return f"sym2({pretty(node.arg)})"
    if isinstance(node, Wedge):
        return f"wedge({node.k}, {pretty(node.arg)})"
    if isinstance(node, Tensor):
        return f"tensor({pretty(node.left)}, {pretty(node.right)})"
    raise TypeError(node)


class _Elaborator:
    def __init__(self):
        self.tags: dict[int, tuple[tuple, int, int | None]] = {}

    def uids(self, key: tuple, tag: int | None) -> tuple[int, int | None]:
        fresh = (new_uid(), new_uid())
        if tag is None:
            return fresh
        if tag in self.tags:
            known, uid, cuid = self.tags[tag]
            if known != key:
                raise ElaborationError(f"factor #{tag} used for both {known} and {key}")
            return uid, cuid
        self.tags[tag] = (key, *fresh)
        return fresh

    def ctor(self, node) -> LinearRep:
        try:
            return self._ctor(node)
        except ElaborationError:
            raise
        except (ValueError, NotImplementedError) as exc:
            raise ElaborationError(f"{pretty(node)}: {exc}") from None

    def _ctor(self, node) -> LinearRep:
        if isinstance(node, Trivial):
            return trivial(node.d)
        if isinstance(node, (Std, Adj)):
            g = node.group
            uid, cuid = self.uids((g.family, g.size, g.center), g.tag)
            if isinstance(node, Adj):
                if g.center:
                    raise ElaborationError("adj does not take a center marker")
                return adj(g.family, g.size, uid)
            return std_rep(g.family, g.size, g.center, uid, cuid)
        if isinstance(node, Spin):
            uid, _ = self.uids(("spin", node.n), node.tag)
            return spin_rep(node.n, uid)
        if isinstance(node, Dual):
            return dual(self.ctor(node.arg))
        if isinstance(node, Sym2):
            return sym2(self.ctor(node.arg))
        if isinstance(node, Wedge):
            return lambda_k(self.ctor(node.arg), node.k)
        if isinstance(node, Tensor):
            return tprod(self.ctor(node.left), self.ctor(node.right))
        raise TypeError(node)


def elaborate(tree: Sum, quaternionic: bool = False) -> LinearRep:
    """Build the representation; with ``quaternionic`` each summand is first
    made quaternionic (see ``reprkit.quaternionify``)."""
    el = _Elaborator()
    out = None
    for t in tree.terms:
        r = el.ctor(t)
        if quaternionic:
            r = quaternionify(r)
        out = r if out is None else dsum(out, r)
    out.validate()
    return out


def build(src: str, quaternionic: bool = False) -> LinearRep:
    return elaborate(parse(src), quaternionic)
