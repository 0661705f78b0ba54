"""Boolean statements over Kandinsky Figures.

A statement is a tree of ``and`` / ``or`` / ``not`` over atoms drawn from a
fixed registry of concept predicates (counting, spatial relations, pair
partitions, Gestalt grouping). Statements have a textual form stored in
``.kst`` files::

    count({color=red, shape=triangle}) = 4
    count({color=yellow}) > count({shape=circle}) and not exists({shape=square})

Evaluation is pure: it depends only on the statement and the figure.
"""

from __future__ import annotations

import math
import operator
import re
from collections import deque
from dataclasses import dataclass
from decimal import Decimal
from types import MappingProxyType
from typing import Callable, Optional, Protocol, Union

from .core import Color, KFigure, KObject, Shape, clearance, fit_circle
from .errors import ArityError, DslSyntaxError, UnknownPredicate

CIRCLE_FIT_TOLERANCE = 0.08
CIRCLE_MIN_RADIUS = 0.05
PROXIMITY_EPS = 0.12
TOUCH_TOLERANCE = 0.01

GRAMMAR = """\
stmt     := expr ;
expr     := term { "or" term } ;
term     := factor { "and" factor } ;
factor   := "not" factor | "(" expr ")" | atom ;
atom     := countcmp | "exists" "(" sel ")" | "forall" "(" sel "," sel ")"
          | "rel" "(" sel "," sel "," REL ")"
          | "two_disjoint_pairs" "(" "shape_equal" ";" CR ";" CR ")"
          | "circular_arrangement" "(" NUM ")"
          | "proximity_groups" CMP INT ;
countcmp := "count" "(" sel ")" CMP ( INT | "count" "(" sel ")" ) ;
sel      := "{" [ cond { "," cond } ] "}" ;
cond     := "shape" "=" SHAPE | "color" "=" COLOR
          | "size" CMP NUM | "region" "=" REGION ;
CMP      := "<" | "<=" | "=" | "!=" | ">=" | ">" ;
CR       := "same" | "different" ;
REL      := "left_of" | "right_of" | "above" | "below" | "touching" ;
REGION   := "left_half" | "right_half" | "upper_half" | "lower_half" ;
"""

COMPARATORS = MappingProxyType({
    "<": operator.lt,
    "<=": operator.le,
    "=": operator.eq,
    "!=": operator.ne,
    ">=": operator.ge,
    ">": operator.gt,
})

REGIONS = ("left_half", "right_half", "upper_half", "lower_half")
RELATIONS = ("left_of", "right_of", "above", "below", "touching")
COLOR_RELATIONS = ("same", "different")

# Gestalt laws with a reserved name but no operational definition yet
GESTALT_EXTENSION_POINTS = ("closure", "continuity", "symmetry")


class GestaltDetector(Protocol):
    def __call__(self, figure: KFigure, tolerance: float) -> bool: ...


def _num(v: float) -> str:
    text = format(Decimal(repr(float(v))), "f")
    return text if "." in text else text + ".0"


# --------------------------------------------------------------------------
# selectors


@dataclass(frozen=True)
class ShapeIs:
    shape: Shape

    def matches(self, o: KObject) -> bool:
        return o.shape is self.shape

    def __str__(self):
        return f"shape={self.shape.value}"


@dataclass(frozen=True)
class ColorIs:
    color: Color

    def matches(self, o: KObject) -> bool:
        return o.color is self.color

    def __str__(self):
        return f"color={self.color.value}"


@dataclass(frozen=True)
class SizeCmp:
    op: str
    value: float

    def matches(self, o: KObject) -> bool:
        return COMPARATORS[self.op](o.size, self.value)

    def __str__(self):
        return f"size{self.op}{_num(self.value)}"


@dataclass(frozen=True)
class InRegion:
    region: str

    def matches(self, o: KObject) -> bool:
        if self.region == "left_half":
            return o.x < 0.5
        if self.region == "right_half":
            return o.x >= 0.5
        if self.region == "lower_half":
            return o.y < 0.5
        return o.y >= 0.5

    def __str__(self):
        return f"region={self.region}"


Condition = Union[ShapeIs, ColorIs, SizeCmp, InRegion]


@dataclass(frozen=True)
class Selector:
    """Conjunction of attribute filters; an empty selector matches everything."""

    conditions: tuple = ()

    def matches(self, o: KObject) -> bool:
        return all(c.matches(o) for c in self.conditions)

    def select(self, f: KFigure) -> list:
        return [o for o in f.objects if self.matches(o)]

    def count(self, f: KFigure) -> int:
        return sum(1 for o in f.objects if self.matches(o))

    def __str__(self):
        return "{" + ", ".join(str(c) for c in self.conditions) + "}"


# --------------------------------------------------------------------------
# concept predicates


def touching(a: KObject, b: KObject, tol: float = TOUCH_TOLERANCE) -> bool:
    """Boundaries of ``a`` and ``b`` are within ``tol`` of each other."""
    return abs(clearance(a, b)) <= tol


def _relation(name: str) -> Callable[[KObject, KObject], bool]:
    return {
        "left_of": lambda a, b: a.x < b.x,
        "right_of": lambda a, b: a.x > b.x,
        "above": lambda a, b: a.y > b.y,
        "below": lambda a, b: a.y < b.y,
        "touching": touching,
    }[name]


def _same_color(a: KObject, b: KObject) -> bool:
    return a.color is b.color


def two_disjoint_pairs(f: KFigure, pair1: str = "same", pair2: str = "different") -> bool:
    """Two disjoint same-shape pairs whose color relations are ``pair1`` and ``pair2``.

    The two pairs are unordered; they need not cover the whole figure.
    """
    objs = f.objects
    if len(objs) < 4:
        return False
    by_rel = {"same": [], "different": []}
    for i in range(len(objs)):
        for j in range(i + 1, len(objs)):
            if objs[i].shape is objs[j].shape:
                rel = "same" if _same_color(objs[i], objs[j]) else "different"
                by_rel[rel].append((i, j))
    for p in by_rel[pair1]:
        for q in by_rel[pair2]:
            if p[0] not in q and p[1] not in q:
                return True
    return False


def circular_arrangement(f: KFigure, tolerance: float = CIRCLE_FIT_TOLERANCE) -> bool:
    """Object centers lie on a circle, judged by an algebraic circle fit.

    Needs at least four objects; the RMS radial residual must not exceed
    ``tolerance`` times the fitted radius, and the radius must be at least
    ``CIRCLE_MIN_RADIUS``.
    """
    if len(f.objects) < 4:
        return False
    fit = fit_circle([o.x for o in f.objects], [o.y for o in f.objects])
    if fit is None:
        return False
    _, _, r, rms = fit
    return r >= CIRCLE_MIN_RADIUS and rms <= tolerance * r


def proximity_groups(f: KFigure, eps: float = PROXIMITY_EPS) -> int:
    """Connected components of the graph linking centers at most ``eps`` apart."""
    objs = f.objects
    seen = [False] * len(objs)
    groups = 0
    for start in range(len(objs)):
        if seen[start]:
            continue
        groups += 1
        seen[start] = True
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(len(objs)):
                if not seen[j] and math.hypot(objs[i].x - objs[j].x,
                                              objs[i].y - objs[j].y) <= eps:
                    seen[j] = True
                    queue.append(j)
    return groups


# --------------------------------------------------------------------------
# statement tree


class Statement:
    def evaluate(self, f: KFigure) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class And(Statement):
    left: Statement
    right: Statement

    def evaluate(self, f):
        return self.left.evaluate(f) and self.right.evaluate(f)

    def __str__(self):
        return f"({self.left} and {self.right})"


@dataclass(frozen=True)
class Or(Statement):
    left: Statement
    right: Statement

    def evaluate(self, f):
        return self.left.evaluate(f) or self.right.evaluate(f)

    def __str__(self):
        return f"({self.left} or {self.right})"


@dataclass(frozen=True)
class Not(Statement):
    operand: Statement

    def evaluate(self, f):
        return not self.operand.evaluate(f)

    def __str__(self):
        return f"not {self.operand}"


@dataclass(frozen=True)
class Count(Statement):
    selector: Selector
    op: str
    rhs: Union[int, Selector]

    def evaluate(self, f):
        rhs = self.rhs.count(f) if isinstance(self.rhs, Selector) else self.rhs
        return COMPARATORS[self.op](self.selector.count(f), rhs)

    def __str__(self):
        rhs = f"count({self.rhs})" if isinstance(self.rhs, Selector) else str(self.rhs)
        return f"count({self.selector}) {self.op} {rhs}"


@dataclass(frozen=True)
class Exists(Statement):
    selector: Selector

    def evaluate(self, f):
        return any(self.selector.matches(o) for o in f.objects)

    def __str__(self):
        return f"exists({self.selector})"


@dataclass(frozen=True)
class Forall(Statement):
    selector: Selector
    inner: Selector

    def evaluate(self, f):
        return all(self.inner.matches(o) for o in f.objects if self.selector.matches(o))

    def __str__(self):
        return f"forall({self.selector}, {self.inner})"


@dataclass(frozen=True)
class Rel(Statement):
    """Every pair of distinct objects (a from ``first``, b from ``second``) is related."""

    first: Selector
    second: Selector
    relation: str

    def evaluate(self, f):
        rel = _relation(self.relation)
        objs = f.objects
        firsts = [i for i, o in enumerate(objs) if self.first.matches(o)]
        seconds = [j for j, o in enumerate(objs) if self.second.matches(o)]
        return all(rel(objs[i], objs[j]) for i in firsts for j in seconds if i != j)

    def __str__(self):
        return f"rel({self.first}, {self.second}, {self.relation})"


@dataclass(frozen=True)
class TwoDisjointPairs(Statement):
    pair1: str
    pair2: str

    def evaluate(self, f):
        return two_disjoint_pairs(f, self.pair1, self.pair2)

    def __str__(self):
        return f"two_disjoint_pairs(shape_equal; {self.pair1}; {self.pair2})"


@dataclass(frozen=True)
class CircularArrangement(Statement):
    tolerance: float = CIRCLE_FIT_TOLERANCE

    def evaluate(self, f):
        return circular_arrangement(f, self.tolerance)

    def __str__(self):
        return f"circular_arrangement({_num(self.tolerance)})"


@dataclass(frozen=True)
class ProximityGroups(Statement):
    op: str
    k: int
    eps: float = PROXIMITY_EPS

    def evaluate(self, f):
        return COMPARATORS[self.op](proximity_groups(f, self.eps), self.k)

    def __str__(self):
        return f"proximity_groups {self.op} {self.k}"


def evaluate(s: Statement, f: KFigure) -> bool:
    return bool(s.evaluate(f))


def pretty_print(s: Statement) -> str:
    """Canonical, fully parenthesized text that parses back to ``s``."""
    return str(s)


# --------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<num>\d+(?:\.\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op><=|>=|!=|<|>|=)
  | (?P<punct>[(){},;])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> list:
    tokens = []
    pos, line, col = 0, 1, 1
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DslSyntaxError(line, col, "a token", text[pos])
        kind = m.lastgroup
        chunk = m.group()
        if kind != "ws":
            tokens.append(Token(kind, chunk, line, col))
        for ch in chunk:
            if ch == "\n":
                line, col = line + 1, 1
            else:
                col += 1
        pos = m.end()
    tokens.append(Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def fail(self, expected):
        t = self.tok
        raise DslSyntaxError(t.line, t.column, expected,
                             t.text if t.kind != "eof" else "end of input")

    def take(self, text=None, kind=None, expected=None):
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            self.fail(expected or repr(text) if text is not None else expected or kind)
        self.i += 1
        return t

    def at(self, text):
        return self.tok.text == text and self.tok.kind != "eof"

    def statement(self):
        s = self.expr()
        if self.tok.kind != "eof":
            self.fail("'and', 'or' or end of input")
        return s

    def expr(self):
        node = self.term()
        while self.at("or"):
            self.i += 1
            node = Or(node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.at("and"):
            self.i += 1
            node = And(node, self.factor())
        return node

    def factor(self):
        if self.at("not"):
            self.i += 1
            return Not(self.factor())
        if self.at("("):
            self.i += 1
            node = self.expr()
            self.take(")", expected="')'")
            return node
        return self.atom()

    def atom(self):
        t = self.tok
        if t.kind != "ident":
            self.fail("a predicate, 'not' or '('")
        if t.text not in PREDICATES:
            note = ""
            if t.text in GESTALT_EXTENSION_POINTS:
                note = " (reserved Gestalt extension point, no implementation registered)"
            raise UnknownPredicate(t.text, t.line, t.column, note)
        self.i += 1
        return PREDICATES[t.text](self, t)

    def arguments(self, name_tok, parsers, sep=","):
        """Parse ``( a sep b ... )`` with arity checking."""
        self.take("(", expected="'('")
        values = []
        for k, parse_one in enumerate(parsers):
            if k:
                if self.at(")"):
                    raise ArityError(name_tok.text, len(parsers),
                                     self.tok.line, self.tok.column)
                self.take(sep, expected=repr(sep))
            values.append(parse_one())
        if self.at(sep):
            raise ArityError(name_tok.text, len(parsers), self.tok.line, self.tok.column)
        self.take(")", expected="')'")
        return values

    def comparator(self):
        t = self.tok
        if t.kind != "op":
            self.fail("a comparator (<, <=, =, !=, >=, >)")
        self.i += 1
        return t.text

    def integer(self):
        t = self.tok
        if t.kind != "num" or "." in t.text:
            self.fail("an integer")
        self.i += 1
        return int(t.text)

    def number(self):
        t = self.take(kind="num", expected="a number")
        return float(t.text)

    def word(self, choices, what):
        t = self.tok
        if t.kind != "ident" or t.text not in choices:
            self.fail(f"{what} ({' | '.join(choices)})")
        self.i += 1
        return t.text

    def selector(self):
        self.take("{", expected="'{'")
        conds = []
        if not self.at("}"):
            conds.append(self.condition())
            while self.at(","):
                self.i += 1
                conds.append(self.condition())
        self.take("}", expected="',' or '}'")
        return Selector(tuple(conds))

    def condition(self):
        key = self.word(("shape", "color", "size", "region"), "a selector key")
        if key == "size":
            return SizeCmp(self.comparator(), self.number())
        self.take("=", expected="'='")
        if key == "shape":
            return ShapeIs(Shape(self.word(tuple(s.value for s in Shape), "a shape")))
        if key == "color":
            return ColorIs(Color(self.word(tuple(c.value for c in Color), "a color")))
        return InRegion(self.word(REGIONS, "a region"))


def _p_count(p, t):
    (sel,) = p.arguments(t, [p.selector])
    op = p.comparator()
    if p.at("count"):
        count_tok = p.take("count")
        (rhs,) = p.arguments(count_tok, [p.selector])
    elif p.tok.kind == "num":
        rhs = p.integer()
    else:
        p.fail("an integer or count(...)")
    return Count(sel, op, rhs)


def _p_exists(p, t):
    (sel,) = p.arguments(t, [p.selector])
    return Exists(sel)


def _p_forall(p, t):
    sel, inner = p.arguments(t, [p.selector, p.selector])
    return Forall(sel, inner)


def _p_rel(p, t):
    a, b, rel = p.arguments(t, [p.selector, p.selector,
                                lambda: p.word(RELATIONS, "a relation")])
    return Rel(a, b, rel)


def _p_pairs(p, t):
    _, c1, c2 = p.arguments(t, [
        lambda: p.word(("shape_equal",), "'shape_equal'"),
        lambda: p.word(COLOR_RELATIONS, "a color relation"),
        lambda: p.word(COLOR_RELATIONS, "a color relation"),
    ], sep=";")
    return TwoDisjointPairs(c1, c2)


def _p_circular(p, t):
    tol_tok = None

    def tolerance():
        nonlocal tol_tok
        tol_tok = p.tok
        return p.number()

    (tol,) = p.arguments(t, [tolerance])
    if tol <= 0.0:
        raise DslSyntaxError(tol_tok.line, tol_tok.column, "a positive tolerance", tol_tok.text)
    return CircularArrangement(tol)


def _p_proximity(p, t):
    op = p.comparator()
    return ProximityGroups(op, p.integer())


PREDICATES = MappingProxyType({
    "count": _p_count,
    "exists": _p_exists,
    "forall": _p_forall,
    "rel": _p_rel,
    "two_disjoint_pairs": _p_pairs,
    "circular_arrangement": _p_circular,
    "proximity_groups": _p_proximity,
})


def parse(text: str) -> Statement:
    """Parse statement source text into a :class:`Statement` tree.

    Raises :class:`DslSyntaxError`, :class:`UnknownPredicate` or
    :class:`ArityError` with line and column of the offending token.
    """
    return _Parser(text).statement()
