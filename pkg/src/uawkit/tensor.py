"""The algebra U ⊗ F[a^±1, b^±1, c^±1].

A :class:`TensorElement` is stored like a :class:`UElement` but with
:class:`LaurentABC` coefficients; the Laurent factors are central, so the
PBW product engine applies unchanged.
"""

from __future__ import annotations

from functools import lru_cache

from .coeff import ONE, LaurentABC, RatQ, _coerce, format_scaled_term, _fmt_abc
from .errors import NotInUPrime
from .uqsl2 import (
    PBWElement,
    UElement,
    _fmt_pbw,
    dq_pow,
    equitable_eliminate,
    fe_table,
    grade_project,
    mul_scaled,
    u_named,
)

__all__ = [
    "TensorElement",
    "t_mul",
    "t_named",
    "t_grade_project",
    "sigma_tilde",
    "rho_tilde",
    "in_u_prime_tensor",
    "TENSOR_NAMES",
]

_L1 = LaurentABC.constant(1)


def _lc(x):
    if isinstance(x, LaurentABC):
        return x
    c = _coerce(x)
    if c is None:
        return None
    return LaurentABC.constant(c)


class TensorElement(PBWElement):
    """An element of U ⊗ F[a^±1, b^±1, c^±1] on the basis e^r k^s f^t ⊗ a^i b^j c^k."""

    __slots__ = ()

    @classmethod
    def _coerce_coeff(cls, c):
        return _lc(c)

    @classmethod
    def _lift(cls, other):
        if isinstance(other, TensorElement):
            return other
        if isinstance(other, UElement):
            return cls.from_u(other)
        if isinstance(other, PBWElement):
            return None
        c = _lc(other)
        if c is None:
            return None
        return cls.from_scaled({(0, 0, 0): c})

    @classmethod
    def from_u(cls, u, laurent=None):
        """``u ⊗ laurent`` (``laurent`` defaults to 1)."""
        lau = _L1 if laurent is None else _lc(laurent)
        return cls.from_scaled({k: lau.scale(c) for k, c in u._s.items()})

    @classmethod
    def from_laurent(cls, laurent):
        """``1 ⊗ laurent``."""
        return cls.from_scaled({(0, 0, 0): _lc(laurent)})

    def flat_terms(self):
        """Map ``(r, s, t, i, j, k) -> RatQ`` for ``e^r k^s f^t ⊗ a^i b^j c^k``."""
        out = {}
        for key, lau in self._s.items():
            w = dq_pow(key[0] + key[2])
            for abc, c in lau.terms.items():
                out[key + abc] = c * w
        return out

    def flat_scaled(self):
        """Like :meth:`flat_terms` but on the scaled PBW basis."""
        out = {}
        for key, lau in self._s.items():
            for abc, c in lau.terms.items():
                out[key + abc] = c
        return out

    def laurent_parts(self):
        """Split by Laurent monomial: ``(i, j, k) -> UElement``."""
        parts = {}
        for key, lau in self._s.items():
            for abc, c in lau.terms.items():
                parts.setdefault(abc, {})[key] = c
        return {abc: UElement.from_scaled(d) for abc, d in sorted(parts.items())}

    def specialize_abc(self, a, b, c):
        """Evaluate the Laurent factors at nonzero rationals, giving a UElement."""
        from .coeff import specialize

        out = {}
        for key, lau in self._s.items():
            v = specialize(lau, {"a": a, "b": b, "c": c})
            out[key] = v
        return UElement.from_scaled(out)

    def __str__(self):
        items = []
        for key in sorted(self._s):
            w = dq_pow(key[0] + key[2])
            lau = self._s[key]
            for abc in sorted(lau.terms):
                items.append((key, abc, lau.terms[abc] * w))
        if not items:
            return "0"
        out = []
        for i, (key, abc, c) in enumerate(items):
            mono = "*".join(p for p in (_fmt_pbw(key), _fmt_abc(abc)) if p)
            out.append(format_scaled_term(c, mono, i == 0))
        return "".join(out)


def t_mul(u, v):
    return u * v


def _mono(i, j, k, coeff=1):
    return LaurentABC.monomial(i, j, k, coeff)


def _T(u, laurent):
    return TensorElement.from_u(u, laurent)


@lru_cache(maxsize=None)
def t_named(name):
    """Named elements of U ⊗ F[a^±1, b^±1, c^±1].

    ``Anat Bnat Cnat alphanat betanat gammanat Omeganat R L theta vartheta
    Lambda1``.
    """
    x, y, z = u_named("x"), u_named("y"), u_named("z")
    nx, ny, nz = u_named("nu_x"), u_named("nu_y"), u_named("nu_z")
    lam = u_named("Lambda")
    yi = u_named("y_inv")
    qm1 = RatQ.qpow(-1)
    if name == "Anat":
        return _T(x, _mono(1, 0, 0)) + _T(y, _mono(-1, 0, 0)) + _T(nz, _mono(0, 1, -1))
    if name == "Bnat":
        return _T(y, _mono(0, 1, 0)) + _T(z, _mono(0, -1, 0)) + _T(nx, _mono(-1, 0, 1))
    if name == "Cnat":
        return _T(z, _mono(0, 0, 1)) + _T(x, _mono(0, 0, -1)) + _T(ny, _mono(1, -1, 0))
    sym = (
        _mono(1, 0, 0) + _mono(-1, 0, 0),
        _mono(0, 1, 0) + _mono(0, -1, 0),
        _mono(0, 0, 1) + _mono(0, 0, -1),
    )
    if name in ("alphanat", "betanat", "gammanat"):
        i = ("alphanat", "betanat", "gammanat").index(name)
        return _T(lam, sym[i]) + TensorElement.from_laurent(sym[(i + 1) % 3] * sym[(i + 2) % 3])
    if name == "Omeganat":
        qq = RatQ.from_laurent({1: 1, -1: 1})
        sa, sb, sc = sym
        return (
            TensorElement.from_laurent(LaurentABC.constant(qq * qq) - sa * sa - sb * sb - sc * sc)
            - _T(lam, sa * sb * sc)
            - TensorElement.from_u(lam * lam)
        )
    if name == "R":
        return _T(nz, _mono(0, 1, -1)) - _T(nz * yi, _mono(1, 0, 0, qm1))
    if name == "L":
        return _T(nx, _mono(-1, 0, 1)) - _T(yi * nx, _mono(0, -1, 0, qm1))
    if name == "theta":
        return _T(yi, _mono(1, 0, 0))
    if name == "vartheta":
        return _T(yi, _mono(0, -1, 0))
    if name == "Lambda1":
        return TensorElement.from_u(lam)
    raise KeyError(f"unknown tensor element name {name!r}")


TENSOR_NAMES = (
    "Anat", "Bnat", "Cnat", "alphanat", "betanat", "gammanat", "Omeganat",
    "R", "L", "theta", "vartheta", "Lambda1",
)


def t_grade_project(u, n):
    """Degree-``n`` component of the grading induced from U."""
    return grade_project(u, n)


# -- sigma tilde ----------------------------------------------------------------

_SIGMA_PERM = (1, 0, 2)  # a -> b, b -> a, c -> c
_RHO_PERM = (1, 2, 0)  # a -> b, b -> c, c -> a


@lru_cache(maxsize=4096)
def _sigma_pbw(r, s, t):
    # F^r k^-s E^t = q^(-2st) (F^r E^t) k^-s on the scaled basis
    out = {}
    for a, b, c, w in fe_table(r, t):
        key = (a, b - s, c)
        out[key] = w.shift(-2 * s * t - 2 * c * s)
    return out


def sigma_tilde(u):
    """The involution of U ⊗ F[a^±1, b^±1, c^±1] with e ↦ f⊗a^-1 b^-1 c,
    f ↦ e⊗abc^-1, k ↦ k^-1, and a ↔ b."""
    if isinstance(u, UElement):
        u = TensorElement.from_u(u)
    out = {}
    for (r, s, t), lau in u._s.items():
        d = t - r
        img = lau.permute(_SIGMA_PERM).shift(d, d, -d)
        for key, w in _sigma_pbw(r, s, t).items():
            v = img.scale(w)
            prev = out.get(key)
            out[key] = v if prev is None else prev + v
    return TensorElement.from_scaled(out)


# -- rho tilde ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _y_pow_scaled(h):
    return {(0, h, 0): ONE}


@lru_cache(maxsize=4096)
def _yzx_scaled(h, i, j):
    from .uqsl2 import _x_pow, _z_pow

    zx = mul_scaled(_z_pow(i), _x_pow(j))
    return mul_scaled(_y_pow_scaled(h), zx)


def in_u_prime_tensor(u):
    """True iff every equitable coefficient of ``u`` has nonnegative y-exponent."""
    if isinstance(u, UElement):
        u = TensorElement.from_u(u)
    return all(k[1] >= 0 for k in equitable_eliminate(u._s))


def rho_tilde(u):
    """The order-3 automorphism of U' ⊗ F[a^±1, b^±1, c^±1] sending
    x → y → z → x and a → b → c → a.

    Raises :class:`NotInUPrime` when ``u`` has an equitable monomial with a
    negative power of y.
    """
    if isinstance(u, UElement):
        u = TensorElement.from_u(u)
    exp = equitable_eliminate(u._s)
    bad = [k for k in exp if k[1] < 0]
    if bad:
        h, i, j = min(bad)
        raise NotInUPrime(
            f"element has equitable monomial x^{h} y^{i} z^{j} with a negative power of y"
        )
    out = {}
    for (h, i, j), lau in exp.items():
        img = lau.permute(_RHO_PERM)
        for key, w in _yzx_scaled(h, i, j).items():
            v = img.scale(w)
            prev = out.get(key)
            out[key] = v if prev is None else prev + v
    return TensorElement.from_scaled(out)
