"""Expression trees for the ASCII surface syntax, with a parser and a
generic evaluator.

Grammar (whitespace is ignored)::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor (('*'|'/') factor)*
    factor  := ['-'] power
    power   := atom ['^' exponent]
    exponent:= int | '-' int | '{' ['-'] int '}' | '(' ['-'] int ')'
    atom    := int | identifier | '(' expr ')'

``3/2`` is read as the rational 3/2.  The characters U+2212 (minus),
U+2297 (tensor sign) and U+00B7 (middle dot) are accepted as ``-``, ``*``
and ``*``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContextError, ParseError

__all__ = [
    "Num",
    "Sym",
    "Add",
    "Mul",
    "Div",
    "Pow",
    "Neg",
    "parse",
    "evaluate",
    "evaluate_with",
    "letters",
    "CONTEXT_LETTERS",
]


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Add:
    terms: tuple  # of (sign, node) with sign in {+1, -1}


@dataclass(frozen=True)
class Mul:
    factors: tuple


@dataclass(frozen=True)
class Div:
    num: object
    den: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class Neg:
    arg: object


U_LETTERS = frozenset("e f k K x y Y z nx ny nz Phi Lam".split())
ABC_LETTERS = frozenset("a b c".split())
DELTA_LETTERS = frozenset("A B C al be ga Om".split())
ALL_LETTERS = U_LETTERS | ABC_LETTERS | DELTA_LETTERS | {"q"}

CONTEXT_LETTERS = {
    "u": U_LETTERS | {"q"},
    "tensor": U_LETTERS | ABC_LETTERS | {"q"},
    "delta": DELTA_LETTERS | {"q"},
    "scalar": frozenset({"q"}),
    "laurent": ABC_LETTERS | {"q"},
}

_TRANSLATE = str.maketrans({"−": "-", "⊗": "*", "·": "*"})
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text):
    text = text.translate(_TRANSLATE)
    toks = []
    pos = 0
    n = len(text.rstrip())
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            toks.append(("id", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^(){}":
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            toks.append(("op", ch, m.start(3)))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def is_op(self, *ops):
        kind, val, _ = self.peek()
        return kind == "op" and val in ops

    def parse(self):
        kind, _, pos = self.peek()
        if kind == "end":
            raise ParseError("empty expression", pos)
        node = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return node

    def expr(self):
        terms = []
        sign = 1
        if self.is_op("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        terms.append((sign, self.term()))
        while self.is_op("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Add(tuple(terms))

    def term(self):
        node = self.factor()
        factors = [node]
        while self.is_op("*", "/"):
            op = self.take()[1]
            rhs = self.factor()
            if op == "*":
                factors.append(rhs)
            else:
                left = factors[0] if len(factors) == 1 else Mul(tuple(factors))
                if isinstance(left, Num) and isinstance(rhs, Num):
                    if rhs.value == 0:
                        raise ParseError("division by zero literal", self.toks[self.i - 1][2])
                    factors = [Num(left.value / rhs.value)]
                else:
                    factors = [Div(left, rhs)]
        return factors[0] if len(factors) == 1 else Mul(tuple(factors))

    def factor(self):
        if self.is_op("-"):
            self.take()
            return Neg(self.factor())
        return self.power()

    def power(self):
        base = self.atom()
        if self.is_op("^"):
            self.take()
            exp = self.exponent()
            if isinstance(base, Num) and exp >= 0:
                return Num(base.value ** exp)
            return Pow(base, exp)
        return base

    def exponent(self):
        close = None
        if self.is_op("{", "("):
            close = "}" if self.take()[1] == "{" else ")"
        sign = 1
        if self.is_op("-"):
            self.take()
            sign = -1
        elif self.is_op("+"):
            self.take()
        kind, val, pos = self.take()
        if kind != "int":
            raise ParseError("expected integer exponent", pos)
        if close:
            self.expect(close)
        return sign * val

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return Num(Fraction(val))
        if kind == "id":
            if val not in ALL_LETTERS:
                raise ParseError(f"unknown identifier {val!r}", pos)
            return Sym(val, pos)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {val!r}", pos)


def parse(text):
    """Parse surface syntax into an expression tree."""
    return _Parser(text).parse()


def letters(node):
    """Set of identifiers used in an expression tree."""
    out = set()
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, Sym):
            out.add(n.name)
        elif isinstance(n, Add):
            stack.extend(t for _, t in n.terms)
        elif isinstance(n, Mul):
            stack.extend(n.factors)
        elif isinstance(n, Div):
            stack.extend((n.num, n.den))
        elif isinstance(n, (Pow, Neg)):
            stack.append(n.base if isinstance(n, Pow) else n.arg)
    return out


def check_context(node, context):
    allowed = CONTEXT_LETTERS[context]
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, Sym):
            if n.name not in allowed:
                raise ContextError(
                    f"letter {n.name!r} is not available in algebra {context!r} (at position {n.pos})"
                )
        elif isinstance(n, Add):
            stack.extend(t for _, t in n.terms)
        elif isinstance(n, Mul):
            stack.extend(n.factors)
        elif isinstance(n, Div):
            stack.extend((n.num, n.den))
        elif isinstance(n, Pow):
            stack.append(n.base)
        elif isinstance(n, Neg):
            stack.append(n.arg)


def evaluate_with(node, leaf, divide, assoc="left"):
    """Evaluate an expression tree.

    ``leaf(node)`` maps :class:`Num` and :class:`Sym` nodes to values that
    support ``+ - *`` and integer ``**``; ``divide(a, b)`` implements ``/``.
    ``assoc`` selects left- or right-nested evaluation of products.
    """

    def ev(n):
        if isinstance(n, (Num, Sym)):
            return leaf(n)
        if isinstance(n, Add):
            acc = None
            for sign, t in n.terms:
                v = ev(t)
                if acc is None:
                    acc = v if sign > 0 else -v
                else:
                    acc = acc + v if sign > 0 else acc - v
            return acc
        if isinstance(n, Mul):
            vals = [ev(f) for f in n.factors]
            if assoc == "right":
                acc = vals[-1]
                for v in reversed(vals[:-1]):
                    acc = v * acc
                return acc
            acc = vals[0]
            for v in vals[1:]:
                acc = acc * v
            return acc
        if isinstance(n, Div):
            return divide(ev(n.num), ev(n.den))
        if isinstance(n, Pow):
            return ev(n.base) ** n.exp
        if isinstance(n, Neg):
            return -ev(n.arg)
        raise TypeError(f"not an expression node: {n!r}")

    return ev(node)


_U_NAMES = {
    "e": "e", "f": "f", "k": "k", "K": "k_inv", "x": "x", "y": "y", "Y": "y_inv",
    "z": "z", "nx": "nu_x", "ny": "nu_y", "nz": "nu_z", "Phi": "Phi", "Lam": "Lambda",
}


def _symbolic_leaf(context):
    from .coeff import Q, RatQ

    def leaf(n):
        if isinstance(n, Num):
            return RatQ(n.value)
        name = n.name
        if name == "q":
            return Q
        if name in _U_NAMES:
            from .uqsl2 import u_named

            u = u_named(_U_NAMES[name])
            if context == "tensor":
                from .tensor import TensorElement

                return TensorElement.from_u(u)
            return u
        if name in ABC_LETTERS:
            from .coeff import LaurentABC
            from .tensor import TensorElement

            e = [0, 0, 0]
            e["abc".index(name)] = 1
            return TensorElement.from_laurent(LaurentABC.monomial(*e))
        from .uaw import delta_named

        return delta_named(name)

    return leaf


def _symbolic_divide(a, b):
    from .coeff import RatQ

    if isinstance(b, RatQ):
        return a * b.inv()
    inv = getattr(b, "inverse", None)
    if inv is None:
        raise ValueError("division by a non-invertible element")
    return a * inv()


def evaluate(node, context, assoc="left"):
    """Evaluate ``node`` to an element of the algebra named by ``context``
    (``u``, ``tensor`` or ``delta``)."""
    if isinstance(node, str):
        node = parse(node)
    check_context(node, context)
    val = evaluate_with(node, _symbolic_leaf(context), _symbolic_divide, assoc=assoc)
    return promote(val, context)


def promote(val, context):
    """Turn a scalar result into an element of the algebra ``context``."""
    from .coeff import RatQ

    if not isinstance(val, RatQ):
        return val
    if context == "u":
        from .uqsl2 import UElement

        return UElement.one().scale(val)
    if context == "tensor":
        from .tensor import TensorElement

        return TensorElement.one().scale(val)
    if context == "delta":
        from .uaw import DeltaElement

        return DeltaElement.one().scale(val)
    return val
