"""A small expression language over the character ring.

    query  := head "(" args ")" | expr
    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := "V" labels | "U" labels | "S+" | "S-" | "dual" "(" expr ")"
            | "(" expr ")" | query-head
    labels := "[" int ("," int)* "]"

Query heads are ``dim(e)``, ``mult(e, labels)``, ``pair(e, f)`` and
``ind(labels)``.  They may appear wherever a factor can, so integer-valued
queries combine with ``+``/``-`` (``pair(..) - pair(..)``); mixing integers and
characters is rejected at evaluation time.

Positions in error messages are 1-based character offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .charring import (FormalCharacter, dual, freudenthal_multiplicities,
                       pairing_T, single, tensor)
from .errors import DomainError
from .index import IndexResult, bwb_index
from .rootsys import RootSystem, Weight
from .spinor import spinor_character, torus

KEYWORDS = ("dim", "mult", "pair", "ind", "dual", "V", "U")


class DSLError(DomainError):
    def __init__(self, pos: int, message: str):
        super().__init__(f"parse error at offset {pos}: {message}")
        self.pos = pos
        self.detail = message


@dataclass(frozen=True)
class Token:
    kind: str       # IDENT, INT, PUNCT, EOF
    text: str
    pos: int

    def __str__(self) -> str:
        return "EOF" if self.kind == "EOF" else self.text


def tokenize(src: str) -> list[Token]:
    out: list[Token] = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        pos = i + 1
        if ch.isspace():
            i += 1
            continue
        if ch == "S":
            if i + 1 < n and src[i + 1] in "+-":
                out.append(Token("IDENT", src[i:i + 2], pos))
                i += 2
                continue
            raise DSLError(pos, "'S' must be followed by '+' or '-'")
        if ch.isalpha():
            j = i
            while j < n and src[j].isalpha():
                j += 1
            word = src[i:j]
            if word not in KEYWORDS:
                raise DSLError(pos, f"unknown identifier {word!r}")
            out.append(Token("IDENT", word, pos))
            i = j
            continue
        signed = ch == "-" and out and out[-1].text in ("[", ",")
        if ch.isdigit() or (signed and i + 1 < n and src[i + 1].isdigit()):
            j = i + 1
            while j < n and src[j].isdigit():
                j += 1
            out.append(Token("INT", src[i:j], pos))
            i = j
            continue
        if ch in "()[],*+-":
            out.append(Token("PUNCT", ch, pos))
            i += 1
            continue
        raise DSLError(pos, f"illegal character {ch!r}")
    out.append(Token("EOF", "", n + 1))
    return out


# --------------------------------------------------------------------------
# Expression tree

@dataclass(frozen=True)
class IrrepChar:
    labels: tuple[int, ...]


@dataclass(frozen=True)
class TorusChar:
    labels: tuple[int, ...]


@dataclass(frozen=True)
class SpinorPlus:
    pass


@dataclass(frozen=True)
class SpinorMinus:
    pass


@dataclass(frozen=True)
class Tensor:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Dual:
    inner: "Expression"


@dataclass(frozen=True)
class Sum:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Diff:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Dim:
    inner: "Expression"


@dataclass(frozen=True)
class Mult:
    inner: "Expression"
    labels: tuple[int, ...]


@dataclass(frozen=True)
class PairT:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Ind:
    labels: tuple[int, ...]


Expression = Union[IrrepChar, TorusChar, SpinorPlus, SpinorMinus, Tensor, Dual,
                   Sum, Diff, Dim, Mult, PairT, Ind]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.k = 0

    @property
    def cur(self) -> Token:
        return self.toks[self.k]

    def _fail(self, what: str):
        t = self.cur
        found = "end of input" if t.kind == "EOF" else repr(t.text)
        raise DSLError(t.pos, f"expected {what}, found {found}")

    def eat(self, text: str) -> Token:
        if self.cur.text != text or self.cur.kind == "EOF":
            self._fail(repr(text))
        t = self.cur
        self.k += 1
        return t

    def labels(self) -> tuple[int, ...]:
        self.eat("[")
        vals = [self.integer()]
        while self.cur.text == ",":
            self.k += 1
            vals.append(self.integer())
        self.eat("]")
        return tuple(vals)

    def integer(self) -> int:
        if self.cur.kind != "INT":
            self._fail("integer")
        v = int(self.cur.text)
        self.k += 1
        return v

    def expr(self) -> Expression:
        node = self.term()
        while self.cur.text in ("+", "-") and self.cur.kind == "PUNCT":
            op = self.cur.text
            self.k += 1
            rhs = self.term()
            node = Sum(node, rhs) if op == "+" else Diff(node, rhs)
        return node

    def term(self) -> Expression:
        node = self.factor()
        while self.cur.text == "*":
            self.k += 1
            node = Tensor(node, self.factor())
        return node

    def factor(self) -> Expression:
        t = self.cur
        if t.kind == "IDENT":
            self.k += 1
            if t.text == "V":
                return IrrepChar(self.labels())
            if t.text == "U":
                return TorusChar(self.labels())
            if t.text == "S+":
                return SpinorPlus()
            if t.text == "S-":
                return SpinorMinus()
            self.eat("(")
            if t.text == "dual":
                node = Dual(self.expr())
            elif t.text == "dim":
                node = Dim(self.expr())
            elif t.text == "mult":
                e = self.expr()
                self.eat(",")
                node = Mult(e, self.labels())
            elif t.text == "pair":
                e = self.expr()
                self.eat(",")
                node = PairT(e, self.expr())
            else:
                node = Ind(self.labels())
            self.eat(")")
            return node
        if t.text == "(" and t.kind == "PUNCT":
            self.k += 1
            node = self.expr()
            self.eat(")")
            return node
        self._fail("factor")


def parse(tokens: list[Token] | str) -> Expression:
    if isinstance(tokens, str):
        tokens = tokenize(tokens)
    p = _Parser(tokens)
    node = p.expr()
    if p.cur.kind != "EOF":
        p._fail("end of input")
    return node


# --------------------------------------------------------------------------
# Printing

def _labels(ls) -> str:
    return "[" + ",".join(str(x) for x in ls) + "]"


def to_source(e: Expression) -> str:
    """Canonical source text; reparses to the same tree."""
    if isinstance(e, IrrepChar):
        return "V" + _labels(e.labels)
    if isinstance(e, TorusChar):
        return "U" + _labels(e.labels)
    if isinstance(e, SpinorPlus):
        return "S+"
    if isinstance(e, SpinorMinus):
        return "S-"
    if isinstance(e, Dual):
        return f"dual({to_source(e.inner)})"
    if isinstance(e, Dim):
        return f"dim({to_source(e.inner)})"
    if isinstance(e, Mult):
        return f"mult({to_source(e.inner)},{_labels(e.labels)})"
    if isinstance(e, PairT):
        return f"pair({to_source(e.left)},{to_source(e.right)})"
    if isinstance(e, Ind):
        return f"ind({_labels(e.labels)})"
    if isinstance(e, Tensor):
        lhs = to_source(e.left)
        if isinstance(e.left, (Sum, Diff)):
            lhs = f"({lhs})"
        rhs = to_source(e.right)
        if isinstance(e.right, (Sum, Diff, Tensor)):
            rhs = f"({rhs})"
        return f"{lhs}*{rhs}"
    if isinstance(e, (Sum, Diff)):
        op = "+" if isinstance(e, Sum) else "-"
        rhs = to_source(e.right)
        if isinstance(e.right, (Sum, Diff)):
            rhs = f"({rhs})"
        return f"{to_source(e.left)}{op}{rhs}"
    raise TypeError(f"not an expression: {e!r}")


# --------------------------------------------------------------------------
# Evaluation

Value = Union[FormalCharacter, int, IndexResult]


def _weight(rs: RootSystem, labels) -> Weight:
    if len(labels) != rs.rank:
        raise DomainError(f"label {_labels(labels)} has arity {len(labels)}, rank is {rs.rank}")
    return Weight(labels)


def _char(v: Value, where: str) -> FormalCharacter:
    if not isinstance(v, FormalCharacter):
        raise DomainError(f"{where} needs a character, got {kind_of(v)}")
    return v


def kind_of(v: Value) -> str:
    if isinstance(v, FormalCharacter):
        return "character"
    if isinstance(v, IndexResult):
        return "index"
    return "integer"


def evaluate(rs: RootSystem, e: Expression | str) -> Value:
    if isinstance(e, str):
        e = parse(e)
    ev = lambda x: evaluate(rs, x)
    if isinstance(e, IrrepChar):
        return freudenthal_multiplicities(rs, _weight(rs, e.labels))
    if isinstance(e, TorusChar):
        return single(rs, _weight(rs, e.labels))
    if isinstance(e, (SpinorPlus, SpinorMinus)):
        S = spinor_character(rs, torus(rs))
        return S.even if isinstance(e, SpinorPlus) else S.odd
    if isinstance(e, Tensor):
        return tensor(_char(ev(e.left), "'*'"), _char(ev(e.right), "'*'"))
    if isinstance(e, Dual):
        return dual(_char(ev(e.inner), "dual"))
    if isinstance(e, (Sum, Diff)):
        a, b = ev(e.left), ev(e.right)
        if isinstance(a, IndexResult) or isinstance(b, IndexResult) or kind_of(a) != kind_of(b):
            raise DomainError(f"cannot combine {kind_of(a)} with {kind_of(b)}")
        if isinstance(e, Sum):
            return a + b
        return a - b
    if isinstance(e, Dim):
        return _char(ev(e.inner), "dim").mass
    if isinstance(e, Mult):
        return _char(ev(e.inner), "mult").mult(_weight(rs, e.labels))
    if isinstance(e, PairT):
        return pairing_T(_char(ev(e.left), "pair"), _char(ev(e.right), "pair"))
    if isinstance(e, Ind):
        return bwb_index(rs, _weight(rs, e.labels))
    raise TypeError(f"not an expression: {e!r}")


def value_to_json(v: Value):
    if isinstance(v, FormalCharacter):
        return v.to_json()
    if isinstance(v, IndexResult):
        return v.to_json()
    return int(v)
