"""Exact scalars: the field Q(q) and Laurent polynomials in a, b, c over it."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from . import kernels as K
from .errors import (
    DivisionByZero,
    ForbiddenSpecialization,
    PoleAtSpecialization,
    ZeroBinding,
)

__all__ = [
    "RatQ",
    "LaurentABC",
    "Q",
    "specialize",
    "check_q_value",
    "ratq_arith",
    "laurent_arith",
]


class RatQ:
    """A rational function in q with integer coefficients.

    Stored as ``num/den`` with both polynomials in Z[q] as coefficient
    tuples (lowest degree first), reduced by their gcd, with the leading
    coefficient of ``den`` positive.  Laurent polynomials in q therefore
    have ``den == q**m``.  Two values are equal iff their tuples are equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, value=0):
        if isinstance(value, RatQ):
            n, d = value.num, value.den
        elif isinstance(value, int):
            n, d = ((value,) if value else ()), (1,)
        elif isinstance(value, Rational):
            f = Fraction(value)
            n, d = K.rq_canon((f.numerator,), (f.denominator,))
        else:
            raise TypeError(f"cannot build RatQ from {type(value).__name__}")
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    def __setattr__(self, name, value):
        raise AttributeError("RatQ is immutable")

    @classmethod
    def _raw(cls, pair):
        self = object.__new__(cls)
        object.__setattr__(self, "num", pair[0])
        object.__setattr__(self, "den", pair[1])
        return self

    @classmethod
    def from_polys(cls, num, den=(1,)):
        """Build from arbitrary integer coefficient sequences (low degree first)."""
        return cls._raw(K.rq_canon(tuple(int(v) for v in num), tuple(int(v) for v in den)))

    @classmethod
    def from_laurent(cls, terms):
        """Build from a mapping ``exponent -> integer coefficient``."""
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return ZERO
        lo = min(terms)
        hi = max(terms)
        coeffs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = c
        if lo >= 0:
            return cls._raw((K.p_shift(tuple(coeffs), lo), K.ONE))
        return cls._raw((tuple(coeffs), K.qpow(-lo)))

    @classmethod
    def qpow(cls, k):
        """``q**k`` for any integer ``k``."""
        return _qpow_cached(k)

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self):
        d = self.den
        return d[-1] == 1 and not any(d[:-1])

    def is_constant(self):
        return len(self.num) <= 1 and len(self.den) == 1

    def laurent_terms(self):
        """Return ``{exponent: coefficient}``; raises if not a Laurent polynomial."""
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial in q")
        m = len(self.den) - 1
        return {i - m: c for i, c in enumerate(self.num) if c}

    def to_fraction(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        n = self.num[0] if self.num else 0
        return Fraction(n, self.den[0])

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RatQ):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return RatQ._raw(K.rq_add(self.num, self.den, other.num, other.den))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RatQ):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return RatQ._raw(K.rq_sub(self.num, self.den, other.num, other.den))

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return RatQ._raw((K.p_neg(self.num), self.den))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, RatQ):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        return RatQ._raw(K.rq_mul(self.num, self.den, other.num, other.den))

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise DivisionByZero("inverse of zero in Q(q)")
        return RatQ._raw(K.rq_inv(self.num, self.den))

    def __truediv__(self, other):
        if not isinstance(other, RatQ):
            other = _coerce(other)
            if other is None:
                return NotImplemented
        if not other.num:
            raise DivisionByZero("division by zero in Q(q)")
        return RatQ._raw(K.rq_div(self.num, self.den, other.num, other.den))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k):
        """Multiply by ``q**k``."""
        if not k or not self.num:
            return self
        return RatQ._raw(K.rq_shift(self.num, self.den, k))

    qshift = shift

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RatQ):
            return self.num == other.num and self.den == other.den
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation -------------------------------------------------------

    def evaluate(self, q_val):
        """Exact value at a rational ``q`` as a :class:`Fraction`."""
        qv = check_q_value(q_val)
        den = _horner(self.den, qv)
        if den == 0:
            raise PoleAtSpecialization(f"denominator of {self} vanishes at q={qv}")
        return _horner(self.num, qv) / den

    # -- printing ---------------------------------------------------------

    def __repr__(self):
        return f"RatQ({self})"

    def __str__(self):
        if self.is_laurent():
            return _fmt_laurent_q(self.laurent_terms())
        n = _fmt_poly_q(self.num)
        d = _fmt_poly_q(self.den)
        if n == "1":
            return f"({d})^-1"
        if sum(1 for c in self.num if c) > 1:
            n = f"({n})"
        return f"{n}*({d})^-1"

    def needs_parens(self):
        """True when the printed form is a sum and must be bracketed in a product."""
        if not self.is_laurent():
            return False
        return len(self.laurent_terms()) > 1

    def __reduce__(self):
        return (RatQ._raw, ((self.num, self.den),))


def _horner(coeffs, x):
    acc = Fraction(0)
    for v in reversed(coeffs):
        acc = acc * x + v
    return acc


def _coerce(x):
    if isinstance(x, RatQ):
        return x
    if isinstance(x, int):
        if x == 0:
            return ZERO
        if x == 1:
            return ONE
        return RatQ._raw(((x,), (1,)))
    if isinstance(x, Rational):
        return RatQ(x)
    return None


def _fmt_monomial_q(c, e, first):
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if e == 0:
        body = str(a)
    else:
        qs = "q" if e == 1 else f"q^{e}"
        body = qs if a == 1 else f"{a}*{qs}"
    if first:
        return body if sign == "+" else "-" + body
    return f" {sign} {body}"


def _fmt_laurent_q(terms):
    if not terms:
        return "0"
    out = []
    for i, e in enumerate(sorted(terms, reverse=True)):
        out.append(_fmt_monomial_q(terms[e], e, i == 0))
    return "".join(out)


def _fmt_poly_q(coeffs):
    return _fmt_laurent_q({i: c for i, c in enumerate(coeffs) if c})


ZERO = RatQ._raw(((), (1,)))
ONE = RatQ._raw(((1,), (1,)))
Q = RatQ._raw(((0, 1), (1,)))

_QPOW_CACHE = {}


def _qpow_cached(k):
    r = _QPOW_CACHE.get(k)
    if r is None:
        if k >= 0:
            r = RatQ._raw((K.p_shift((1,), k), (1,)))
        else:
            r = RatQ._raw(((1,), K.qpow(-k)))
        _QPOW_CACHE[k] = r
    return r


def check_q_value(q_val):
    """Validate and convert a value of q; raises ForbiddenSpecialization."""
    qv = Fraction(q_val)
    if qv == 0 or qv ** 4 == 1:
        raise ForbiddenSpecialization(f"q={qv} is forbidden (need q != 0 and q^4 != 1)")
    return qv


class LaurentABC:
    """Laurent polynomial in commuting a, b, c with :class:`RatQ` coefficients.

    ``terms`` maps exponent triples ``(i, j, k)`` of ``a^i b^j c^k`` to
    nonzero coefficients.  Instances are immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = c if isinstance(c, RatQ) else RatQ(c)
                if c.num:
                    clean[tuple(key)] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentABC is immutable")

    @classmethod
    def _raw(cls, terms):
        self = object.__new__(cls)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    @classmethod
    def monomial(cls, i=0, j=0, k=0, coeff=None):
        c = ONE if coeff is None else _coerce(coeff)
        if not c.num:
            return cls._raw({})
        return cls._raw({(i, j, k): c})

    @classmethod
    def constant(cls, c):
        return cls.monomial(0, 0, 0, c)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0, 0, 0) in self.terms)

    def constant_term(self):
        return self.terms.get((0, 0, 0), ZERO)

    def __add__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            prev = out.get(key)
            if prev is None:
                out[key] = c
            else:
                s = prev + c
                if s.num:
                    out[key] = s
                else:
                    del out[key]
        return LaurentABC._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentABC._raw({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c):
        """Multiply by a scalar of Q(q)."""
        c = _coerce(c)
        if not c.num:
            return LaurentABC._raw({})
        if c == ONE:
            return self
        return LaurentABC._raw({key: v * c for key, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, LaurentABC):
            return LaurentABC._raw(laurent_mul_terms(self.terms, other.terms))
        c = _coerce(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def __rmul__(self, other):
        c = _coerce(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentABC.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        """Inverse of a single-term element; other elements are not units."""
        if len(self.terms) != 1:
            raise DivisionByZero("only monomials are invertible in the Laurent ring")
        (key, c), = self.terms.items()
        return LaurentABC._raw({(-key[0], -key[1], -key[2]): c.inv()})

    def permute(self, perm):
        """Substitute variables: ``perm`` gives, for each of a, b, c, the index
        (0, 1, 2) of the variable it is sent to."""
        out = {}
        for (i, j, k), c in self.terms.items():
            e = [0, 0, 0]
            e[perm[0]] += i
            e[perm[1]] += j
            e[perm[2]] += k
            out[tuple(e)] = c
        return LaurentABC._raw(out)

    def qshift(self, k):
        """Multiply by ``q**k``."""
        if not k:
            return self
        return LaurentABC._raw({key: v.shift(k) for key, v in self.terms.items()})

    def shift(self, i, j, k):
        """Multiply by the monomial ``a^i b^j c^k``."""
        return LaurentABC._raw({(a + i, b + j, c + k): v for (a, b, c), v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, LaurentABC):
            return self.terms == other.terms
        o = _as_laurent(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"LaurentABC({self})"

    def __str__(self):
        return format_laurent(self)


def laurent_mul_terms(t1, t2):
    """Product of two term dictionaries ``(i, j, k) -> RatQ``."""
    if len(t1) < len(t2):
        t1, t2 = t2, t1
    out = {}
    get = out.get
    for (a1, b1, c1), v1 in t2.items():
        for (a2, b2, c2), v2 in t1.items():
            key = (a1 + a2, b1 + b2, c1 + c2)
            p = v1 * v2
            prev = get(key)
            out[key] = p if prev is None else prev + p
    return {k: v for k, v in out.items() if v.num}


def _as_laurent(x):
    if isinstance(x, LaurentABC):
        return x
    c = _coerce(x)
    if c is None:
        return None
    return LaurentABC.constant(c)


def _fmt_abc(key):
    parts = []
    for name, e in zip("abc", key):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_scaled_term(c, mono, first):
    """Format ``c * mono`` as a summand of a sum; ``mono`` may be empty."""
    neg = c.num[-1] < 0
    s = str(-c if neg else c)
    if s == "1" and mono:
        body = mono
    else:
        if c.needs_parens():
            s = f"({s})"
        body = f"{s}*{mono}" if mono else s
    if first:
        return "-" + body if neg else body
    return (" - " if neg else " + ") + body


def format_laurent(x):
    if not x.terms:
        return "0"
    out = []
    for i, key in enumerate(sorted(x.terms)):
        out.append(format_scaled_term(x.terms[key], _fmt_abc(key), i == 0))
    return "".join(out)


# -- specialization ---------------------------------------------------------

def _check_bindings(bindings):
    out = {}
    for name, v in bindings.items():
        if name not in ("q", "a", "b", "c"):
            raise KeyError(f"unknown variable {name!r}")
        if name == "q":
            out[name] = check_q_value(v)
        else:
            fv = Fraction(v)
            if fv == 0:
                raise ZeroBinding(f"{name} bound to zero")
            out[name] = fv
    return out


def specialize(u, bindings):
    """Evaluate a :class:`RatQ` or :class:`LaurentABC` at exact rational values.

    ``bindings`` maps any of ``q``, ``a``, ``b``, ``c`` to rationals.
    Fully bound inputs give a :class:`Fraction`; otherwise the partially
    evaluated element is returned (a RatQ or LaurentABC).
    """
    b = _check_bindings(bindings)
    if isinstance(u, RatQ):
        if "q" in b:
            return u.evaluate(b["q"])
        return u
    if not isinstance(u, LaurentABC):
        u = _as_laurent(u)
        if u is None:
            raise TypeError("specialize expects RatQ or LaurentABC")
    out = {}
    for (i, j, k), c in u.terms.items():
        factor = Fraction(1)
        key = [i, j, k]
        for idx, name in enumerate("abc"):
            if name in b:
                factor *= b[name] ** key[idx]
                key[idx] = 0
        coeff = c * RatQ(factor) if factor != 1 else c
        key = tuple(key)
        prev = out.get(key)
        out[key] = coeff if prev is None else prev + coeff
    result = LaurentABC({k: v for k, v in out.items() if v.num})
    if "q" in b:
        result = LaurentABC({k: RatQ(v.evaluate(b["q"])) for k, v in result.terms.items()})
    if all(name in b for name in "abc"):
        c0 = result.constant_term()
        return c0.to_fraction() if "q" in b else c0
    return result


# -- operation-style entry points --------------------------------------------

def ratq_arith(op, u, v=None):
    """Dispatch ``add | mul | neg | inv | div | sub`` on Q(q) values."""
    u = _coerce(u)
    if op == "neg":
        return -u
    if op == "inv":
        return u.inv()
    v = _coerce(v)
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    if op == "div":
        return u / v
    raise ValueError(f"unknown operation {op!r}")


def laurent_arith(op, u, v=None):
    """Dispatch ``add | mul | neg | sub`` on Laurent polynomials in a, b, c."""
    u = _as_laurent(u)
    if op == "neg":
        return -u
    v = _as_laurent(v)
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    raise ValueError(f"unknown operation {op!r}")


# convenience generators
A_VAR = LaurentABC.monomial(1, 0, 0)
B_VAR = LaurentABC.monomial(0, 1, 0)
C_VAR = LaurentABC.monomial(0, 0, 1)
