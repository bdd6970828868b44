"""The quantum algebra U = U_q(sl2).

Elements are stored on the PBW basis ``e^r k^s f^t``.  Internally the
basis is rescaled to ``E^r k^s F^t`` with ``E = (q - q^-1) e`` and
``F = (q - q^-1) f``; in that basis every structure constant is a Laurent
polynomial in q and the equitable generators have Laurent coefficients,
which keeps coefficient arithmetic on the fast path.  The public
``terms`` mapping always refers to the unscaled monomials ``e^r k^s f^t``.
"""

from __future__ import annotations

from functools import lru_cache

from .coeff import ONE, ZERO, RatQ, _coerce
from .errors import DivisionByZero

__all__ = [
    "UElement",
    "EquitableExpansion",
    "u_normalize",
    "u_mul",
    "u_named",
    "grade_project",
    "homogeneous_components",
    "to_equitable",
    "from_equitable",
    "in_u_prime",
    "equitable_monomial",
    "mul_scaled",
    "DQ",
]

# q - q^-1
DQ = RatQ.from_laurent({1: 1, -1: -1})


@lru_cache(maxsize=None)
def dq_pow(n):
    """``(q - q^-1)**n`` for ``n >= 0``."""
    if n == 0:
        return ONE
    return dq_pow(n - 1) * DQ


@lru_cache(maxsize=None)
def _geom(r, sign):
    # sum_{m=0}^{r-1} q^(2*sign*m)
    return RatQ.from_laurent({2 * sign * m: 1 for m in range(r)})


@lru_cache(maxsize=None)
def fe_table(t, r):
    """``F^t E^r`` on the scaled PBW basis, as a tuple of ``(a, b, c, w)``
    meaning ``w * E^a k^b F^c``."""
    if t == 0 or r == 0:
        return ((r, 0, t, ONE),)
    out = {}

    def put(key, w):
        prev = out.get(key)
        out[key] = w if prev is None else prev + w

    # F E^r = E^r F - (q - q^-1) E^(r-1) (g+ k - g- k^-1)
    gp = _geom(r, 1) * DQ
    gm = _geom(r, -1) * DQ
    for a, b, c, w in fe_table(t - 1, r):
        put((a, b, c + 1), w)
    for a, b, c, w in fe_table(t - 1, r - 1):
        # E^a k^b F^c * k^(+-1) = q^(+-2c) E^a k^(b+-1) F^c
        put((a, b + 1, c), -(w * gp).shift(2 * c))
        put((a, b - 1, c), (w * gm).shift(-2 * c))
    return tuple(
        (a, b, c, w) for (a, b, c), w in sorted(out.items()) if w
    )


def mul_scaled(x, y):
    """Product of two scaled term dictionaries ``(r, s, t) -> coefficient``.

    Coefficients may be any commutative ring elements supporting ``*`` with
    each other and with :class:`RatQ`, and ``qshift``.
    """
    out = {}
    get = out.get
    for (r1, s1, t1), c1 in x.items():
        for (r2, s2, t2), c2 in y.items():
            c = c1 * c2
            if not t1 or not r2:
                key = (r1 + r2, s1 + s2, t1 + t2)
                v = c.qshift(2 * (s1 * r2 + t1 * s2))
                prev = get(key)
                out[key] = v if prev is None else prev + v
                continue
            for a, b, cc, w in fe_table(t1, r2):
                key = (r1 + a, s1 + b + s2, cc + t2)
                v = c * w.shift(2 * (s1 * a + cc * s2))
                prev = get(key)
                out[key] = v if prev is None else prev + v
    return {k: v for k, v in out.items() if v}


def _fmt_pbw(key):
    r, s, t = key
    parts = []
    if r:
        parts.append("e" if r == 1 else f"e^{r}")
    if s > 0:
        parts.append("k" if s == 1 else f"k^{s}")
    elif s < 0:
        parts.append("K" if s == -1 else f"K^{-s}")
    if t:
        parts.append("f" if t == 1 else f"f^{t}")
    return "*".join(parts)


def _fmt_sum(items, fmt_mono):
    from .coeff import format_scaled_term

    if not items:
        return "0"
    return "".join(
        format_scaled_term(c, fmt_mono(key), i == 0) for i, (key, c) in enumerate(items)
    )


class PBWElement:
    """Shared machinery for elements stored on the scaled PBW basis."""

    __slots__ = ("_s", "_hash")

    def __init__(self, terms=None):
        s = {}
        if terms:
            for key, c in terms.items():
                c = self._coerce_coeff(c)
                if c is None:
                    raise TypeError(f"bad coefficient {c!r}")
                r, sk, t = key
                if r < 0 or t < 0:
                    raise ValueError(f"invalid PBW exponent {key}")
                if c:
                    s[(r, sk, t)] = c * dq_pow(r + t).inv() if r + t else c
        object.__setattr__(self, "_s", s)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def _coerce_coeff(cls, c):
        raise NotImplementedError

    @classmethod
    def _lift(cls, other):
        raise NotImplementedError

    @classmethod
    def from_scaled(cls, s):
        """Wrap a dictionary on the scaled basis (zero coefficients dropped)."""
        self = object.__new__(cls)
        object.__setattr__(self, "_s", {k: v for k, v in s.items() if v})
        object.__setattr__(self, "_hash", None)
        return self

    @classmethod
    def from_terms(cls, terms):
        """Build from a mapping ``(r, s, t) -> coefficient`` of ``e^r k^s f^t``."""
        return cls(terms)

    @classmethod
    def zero(cls):
        return cls.from_scaled({})

    @classmethod
    def one(cls):
        return cls.from_scaled({(0, 0, 0): cls._coerce_coeff(1)})

    @classmethod
    def k_power(cls, s):
        return cls.from_scaled({(0, s, 0): cls._coerce_coeff(1)})

    @property
    def scaled(self):
        """Read-only view of the coefficients on the scaled basis."""
        return dict(self._s)

    @property
    def terms(self):
        """Coefficients of the monomials ``e^r k^s f^t``."""
        return {
            k: (c * dq_pow(k[0] + k[2]) if k[0] + k[2] else c)
            for k, c in self._s.items()
        }

    def coefficient(self, r, s, t):
        c = self._s.get((r, s, t))
        if c is None:
            return self._coerce_coeff(0)
        return c * dq_pow(r + t) if r + t else c

    def support(self):
        return sorted(self._s)

    def is_zero(self):
        return not self._s

    def __bool__(self):
        return bool(self._s)

    def __len__(self):
        return len(self._s)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._s)
        for key, c in other._s.items():
            prev = out.get(key)
            if prev is None:
                out[key] = c
            else:
                v = prev + c
                if v:
                    out[key] = v
                else:
                    del out[key]
        return type(self).from_scaled(out)

    def __radd__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + self

    def __neg__(self):
        return type(self).from_scaled({k: -c for k, c in self._s.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c):
        c = self._coerce_coeff(c)
        if not c:
            return type(self).zero()
        return type(self).from_scaled({k: v * c for k, v in self._s.items()})

    def __mul__(self, other):
        c = self._coerce_coeff(other) if not isinstance(other, PBWElement) else None
        if c is not None:
            return self.scale(c)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return type(self).from_scaled(mul_scaled(self._s, other._s))

    def __rmul__(self, other):
        c = self._coerce_coeff(other) if not isinstance(other, PBWElement) else None
        if c is not None:
            return self.scale(c)
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self

    def __truediv__(self, other):
        c = self._coerce_coeff(other) if not isinstance(other, PBWElement) else None
        if c is None:
            return NotImplemented
        if isinstance(c, RatQ):
            return self.scale(c.inv())
        return self.scale(c.inverse())

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = type(self).one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self):
        """Inverse of a unit ``c * k^s``; other elements raise."""
        if len(self._s) == 1:
            (key, c), = self._s.items()
            if key[0] == 0 and key[2] == 0:
                inv = c.inv() if isinstance(c, RatQ) else c.inverse()
                return type(self).from_scaled({(0, -key[1], 0): inv})
        raise DivisionByZero("element is not invertible (only scalar multiples of k^s are)")

    def map_coefficients(self, fn):
        return type(self).from_scaled({k: fn(v) for k, v in self._s.items()})

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, PBWElement) and type(other) is type(self):
            return self._s == other._s
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._s == o._s

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self._s.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class UElement(PBWElement):
    """An element of U on the PBW basis ``e^r k^s f^t``."""

    __slots__ = ()

    @classmethod
    def _coerce_coeff(cls, c):
        return _coerce(c)

    @classmethod
    def _lift(cls, other):
        if isinstance(other, UElement):
            return other
        if isinstance(other, PBWElement):
            return None
        c = _coerce(other)
        if c is None:
            return None
        return cls.from_scaled({(0, 0, 0): c})

    def __str__(self):
        items = sorted(self.terms.items())
        return _fmt_sum(items, _fmt_pbw)


# -- generators ---------------------------------------------------------------

def _U(d):
    return UElement.from_scaled({k: _coerce(v) for k, v in d.items()})


def _Lq(terms):
    return RatQ.from_laurent(terms)


_QM1 = RatQ.qpow(-1)
_Q1 = RatQ.qpow(1)


@lru_cache(maxsize=None)
def u_named(name):
    """PBW normal form of a named element of U.

    Names: ``e f k k_inv x y y_inv z nu_x nu_y nu_z Phi Lambda``.
    """
    if name == "e":
        return UElement.from_scaled({(1, 0, 0): DQ.inv()})
    if name == "f":
        return UElement.from_scaled({(0, 0, 1): DQ.inv()})
    if name in ("k", "y"):
        return UElement.k_power(1)
    if name in ("k_inv", "y_inv"):
        return UElement.k_power(-1)
    if name == "x":
        # k^-1 - q^-1 E k^-1
        return _U({(0, -1, 0): ONE, (1, -1, 0): -_QM1})
    if name == "z":
        return _U({(0, -1, 0): ONE, (0, 0, 1): ONE})
    if name == "nu_z":
        return _U({(1, 0, 0): ONE})
    if name == "nu_x":
        # -q k F
        return _U({(0, 1, 1): -_Q1})
    if name == "nu_y":
        one = UElement.one()
        return (one - u_named("z") * u_named("x")).scale(_Q1)
    if name == "Lambda":
        # E F + q^-1 k + q k^-1
        return _U({(1, 0, 1): ONE, (0, 1, 0): _QM1, (0, -1, 0): _Q1})
    if name == "Phi":
        return u_named("Lambda").scale(dq_pow(2).inv())
    raise KeyError(f"unknown element name {name!r}")


def u_mul(u, v):
    return u * v


# -- grading ------------------------------------------------------------------

def grade_project(u, n):
    """Homogeneous component of degree ``n`` (degree of ``e^r k^s f^t`` is r - t)."""
    return type(u).from_scaled({k: c for k, c in u._s.items() if k[0] - k[2] == n})


def homogeneous_components(u):
    """Map ``degree -> component`` over the nonzero components of ``u``."""
    parts = {}
    for k, c in u._s.items():
        parts.setdefault(k[0] - k[2], {})[k] = c
    return {n: type(u).from_scaled(d) for n, d in sorted(parts.items())}


# -- equitable basis ----------------------------------------------------------

class EquitableExpansion:
    """Coefficients on the equitable basis ``x^h y^i z^j`` (h, j >= 0)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            if c:
                clean[tuple(key)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("EquitableExpansion is immutable")

    def __eq__(self, other):
        if isinstance(other, EquitableExpansion):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def min_y_exponent(self):
        return min((k[1] for k in self.terms), default=0)

    def __str__(self):
        return _fmt_sum(sorted(self.terms.items()), _fmt_xyz)

    def __repr__(self):
        return f"EquitableExpansion({self})"


def _fmt_xyz(key):
    h, i, j = key
    parts = []
    if h:
        parts.append("x" if h == 1 else f"x^{h}")
    if i > 0:
        parts.append("y" if i == 1 else f"y^{i}")
    elif i < 0:
        parts.append("Y" if i == -1 else f"Y^{-i}")
    if j:
        parts.append("z" if j == 1 else f"z^{j}")
    return "*".join(parts)


@lru_cache(maxsize=None)
def _x_pow(h):
    if h == 0:
        return {(0, 0, 0): ONE}
    return mul_scaled(_x_pow(h - 1), u_named("x")._s)


@lru_cache(maxsize=None)
def _z_pow(j):
    if j == 0:
        return {(0, 0, 0): ONE}
    return mul_scaled(_z_pow(j - 1), u_named("z")._s)


@lru_cache(maxsize=4096)
def _xyz_scaled(h, i, j):
    # x^h has no F and z^j has no E, so the product needs no reordering
    out = {}
    for (a, b, _), c1 in _x_pow(h).items():
        for (_, b2, cc), c2 in _z_pow(j).items():
            key = (a, b + i + b2, cc)
            v = c1 * c2
            prev = out.get(key)
            out[key] = v if prev is None else prev + v
    return {k: v for k, v in out.items() if v}


def equitable_monomial(h, i, j):
    """PBW normal form of ``x^h y^i z^j``."""
    return UElement.from_scaled(_xyz_scaled(h, i, j))


def equitable_scaled(h, i, j):
    """Scaled PBW dictionary of ``x^h y^i z^j`` (shared, do not mutate)."""
    return _xyz_scaled(h, i, j)


def _lead_factor(r):
    # inverse of the leading coefficient (-1)^r q^(-r^2) of x^r y^i z^j
    w = RatQ.qpow(r * r)
    return -w if r & 1 else w


def equitable_eliminate(scaled, scale_fn=None):
    """Triangular elimination of a scaled PBW dictionary onto ``x^h y^i z^j``.

    Works for any coefficient ring with multiplication by :class:`RatQ`.
    Returns a dictionary ``(h, i, j) -> coefficient``.
    """
    rem = dict(scaled)
    out = {}
    while rem:
        top = max(k[0] + k[2] for k in rem)
        level = [(k, rem.pop(k)) for k in list(rem) if k[0] + k[2] == top]
        for (r, s, t), c in level:
            coeff = c * _lead_factor(r)
            key = (r, s + r, t)
            out[key] = coeff
            for mk, w in _xyz_scaled(r, s + r, t).items():
                if mk[0] + mk[2] == top:
                    continue
                v = coeff * w
                prev = rem.get(mk)
                if prev is None:
                    rem[mk] = -v
                else:
                    nv = prev - v
                    if nv:
                        rem[mk] = nv
                    else:
                        del rem[mk]
    return out


def to_equitable(u):
    """Expand ``u`` on the equitable basis ``x^h y^i z^j``."""
    return EquitableExpansion(equitable_eliminate(u._s))


def from_equitable(exp):
    """Multiply out an :class:`EquitableExpansion` (or a plain mapping)."""
    terms = exp.terms if isinstance(exp, EquitableExpansion) else exp
    out = {}
    for (h, i, j), c in terms.items():
        c = _coerce(c)
        for k, w in _xyz_scaled(h, i, j).items():
            v = c * w
            prev = out.get(k)
            out[k] = v if prev is None else prev + v
    return UElement.from_scaled(out)


def in_u_prime(u):
    """True iff ``u`` lies in the subalgebra generated by x, y, z."""
    return all(k[1] >= 0 for k in equitable_eliminate(u._s))


def u_normalize(word, assoc="left"):
    """Normalize a word (expression tree or surface-syntax string) in U."""
    from .words import evaluate, parse

    if isinstance(word, str):
        word = parse(word)
    return evaluate(word, "u", assoc=assoc)
