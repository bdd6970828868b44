"""The universal Askey-Wilson algebra Δ on the basis A^i B^j C^k α^r β^s γ^t."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .coeff import ONE, RatQ, _coerce, format_scaled_term
from .errors import BoundTooSmall

__all__ = [
    "DeltaElement",
    "OmegaExpansion",
    "delta_normalize",
    "delta_mul",
    "delta_named",
    "psl2_act",
    "to_omega_basis",
    "from_omega_basis",
    "omega_weight",
]

_q = RatQ.qpow
# q - q^-1 and q^2 - q^-2
_D1 = RatQ.from_laurent({1: 1, -1: -1})
_D2 = RatQ.from_laurent({2: 1, -2: -1})
_QQ = RatQ.from_laurent({1: 1, -1: 1})

# reordering constants
_BA_LOW = -(_q(1) * _D1)  # coefficient of gamma in B*A
_BA_C = _q(1) * _D2  # coefficient of C in B*A
_CB_LOW = -(_q(1) * _D1)  # coefficient of alpha in C*B
_CB_A = _q(1) * _D2  # coefficient of A in C*B
_CA_LOW = _q(-1) * _D1  # coefficient of beta in C*A
_CA_B = -(_q(-1) * _D2)  # coefficient of B in C*A


def _acc(out, key, v):
    prev = out.get(key)
    if prev is None:
        out[key] = v
    else:
        s = prev + v
        if s:
            out[key] = s
        else:
            del out[key]


def _times_c(terms):
    return {(i, j, k + 1, r, s, t): v for (i, j, k, r, s, t), v in terms.items()}


def _times_letter_terms(terms, letter):
    out = {}
    for (i, j, k, r, s, t), v in terms.items():
        for (i2, j2, k2, r2, s2, t2), w in _mono_letter(i, j, k, letter).items():
            _acc(out, (i2, j2, k2, r + r2, s + s2, t + t2), v * w)
    return out


@lru_cache(maxsize=None)
def _mono_letter_cached(i, j, k, letter):
    return _mono_letter_raw(i, j, k, letter)


def _mono_letter(i, j, k, letter):
    """``A^i B^j C^k * letter`` on the basis, as a dict (shared, read-only)."""
    return _mono_letter_cached(i, j, k, letter)


def _mono_letter_raw(i, j, k, letter):
    if letter == 2:
        return {(i, j, k + 1, 0, 0, 0): ONE}
    if letter == 1:
        if k == 0:
            return {(i, j + 1, 0, 0, 0, 0): ONE}
        # C B = q^2 B C - q(q - q^-1) alpha + q(q^2 - q^-2) A
        out = {}
        for key, v in _times_c(_mono_letter(i, j, k - 1, 1)).items():
            _acc(out, key, v.shift(2))
        _acc(out, (i, j, k - 1, 1, 0, 0), _CB_LOW)
        for key, v in _mono_letter(i, j, k - 1, 0).items():
            _acc(out, key, v * _CB_A)
        return out
    # letter A
    if k:
        # C A = q^-2 A C + q^-1(q - q^-1) beta - q^-1(q^2 - q^-2) B
        out = {}
        for key, v in _times_c(_mono_letter(i, j, k - 1, 0)).items():
            _acc(out, key, v.shift(-2))
        _acc(out, (i, j, k - 1, 0, 1, 0), _CA_LOW)
        for key, v in _mono_letter(i, j, k - 1, 1).items():
            _acc(out, key, v * _CA_B)
        return out
    if j:
        # B A = q^2 A B - q(q - q^-1) gamma + q(q^2 - q^-2) C
        out = {}
        for key, v in _times_letter_terms(_mono_letter(i, j - 1, 0, 0), 1).items():
            _acc(out, key, v.shift(2))
        _acc(out, (i, j - 1, 0, 0, 0, 1), _BA_LOW)
        _acc(out, (i, j - 1, 1, 0, 0, 0), _BA_C)
        return out
    return {(i + 1, 0, 0, 0, 0, 0): ONE}


@lru_cache(maxsize=None)
def _abc_mul(m, n):
    """``A^i B^j C^k * A^i' B^j' C^k'`` as a dict on the basis."""
    terms = {m + (0, 0, 0): ONE}
    for letter, e in enumerate(n):
        for _ in range(e):
            terms = _times_letter_terms(terms, letter)
    return terms


def _fmt_delta(key):
    parts = []
    for name, e in zip(("A", "B", "C", "al", "be", "ga"), key):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class DeltaElement:
    """An element of Δ: a map from ``(i, j, k, r, s, t)`` to :class:`RatQ`."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != 6 or min(key) < 0:
                raise ValueError(f"invalid basis exponent {key}")
            c = _coerce(c)
            if c is None:
                raise TypeError(f"bad coefficient {c!r}")
            if c:
                clean[key] = c
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("DeltaElement is immutable")

    @classmethod
    def _raw(cls, terms):
        self = object.__new__(cls)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    @classmethod
    def monomial(cls, i=0, j=0, k=0, r=0, s=0, t=0, coeff=1):
        return cls({(i, j, k, r, s, t): coeff})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({(0,) * 6: ONE})

    @classmethod
    def _lift(cls, other):
        if isinstance(other, DeltaElement):
            return other
        c = _coerce(other)
        if c is None:
            return None
        return cls._raw({(0,) * 6: c} if c else {})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def support(self):
        return sorted(self.terms)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            _acc(out, key, c)
        return DeltaElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return DeltaElement._raw({k: -c for k, c in self.terms.items()})

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
        c = _coerce(c)
        if not c:
            return DeltaElement.zero()
        return DeltaElement._raw({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, DeltaElement):
            c = _coerce(other)
            if c is None:
                return NotImplemented
            return self.scale(c)
        out = {}
        for (i, j, k, r, s, t), c1 in self.terms.items():
            for (i2, j2, k2, r2, s2, t2), c2 in other.terms.items():
                c = c1 * c2
                cr, cs, ct = r + r2, s + s2, t + t2
                for (a, b, cc, x, y, z), w in _abc_mul((i, j, k), (i2, j2, k2)).items():
                    _acc(out, (a, b, cc, x + cr, y + cs, z + ct), c * w)
        return DeltaElement._raw(out)

    def __rmul__(self, other):
        c = _coerce(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def __truediv__(self, other):
        c = _coerce(other)
        if c is None:
            return NotImplemented
        return self.scale(c.inv())

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("negative powers are not defined in Δ")
        result = DeltaElement.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        if not self.terms:
            return "0"
        return "".join(
            format_scaled_term(self.terms[k], _fmt_delta(k), i == 0)
            for i, k in enumerate(sorted(self.terms))
        )

    def __repr__(self):
        return f"DeltaElement({self})"


def delta_mul(u, v):
    return u * v


_LETTER_KEYS = {
    "A": (1, 0, 0, 0, 0, 0),
    "B": (0, 1, 0, 0, 0, 0),
    "C": (0, 0, 1, 0, 0, 0),
    "al": (0, 0, 0, 1, 0, 0),
    "be": (0, 0, 0, 0, 1, 0),
    "ga": (0, 0, 0, 0, 0, 1),
}
_ALIASES = {"alpha": "al", "beta": "be", "gamma": "ga", "Omega": "Om"}


@lru_cache(maxsize=None)
def delta_named(name):
    """Generators ``A B C al be ga`` and the Casimir element ``Om``."""
    name = _ALIASES.get(name, name)
    if name in _LETTER_KEYS:
        return DeltaElement._raw({_LETTER_KEYS[name]: ONE})
    if name == "Om":
        A, B, C = delta_named("A"), delta_named("B"), delta_named("C")
        al, be, ga = delta_named("al"), delta_named("be"), delta_named("ga")
        return (
            (A * B * C).scale(_q(1))
            + (A * A).scale(_q(2))
            + (B * B).scale(_q(-2))
            + (C * C).scale(_q(2))
            - (A * al).scale(_q(1))
            - (B * be).scale(_q(-1))
            - (C * ga).scale(_q(1))
        )
    raise KeyError(f"unknown element name {name!r}")


def delta_normalize(word, assoc="left"):
    """Normalize a word (expression tree or surface-syntax string) in Δ."""
    from .words import evaluate, parse

    if isinstance(word, str):
        word = parse(word)
    return evaluate(word, "delta", assoc=assoc)


# -- PSL2(Z) action ------------------------------------------------------------

def _central_from(x, y, z):
    """(q + q^-1) (x + (q y z - q^-1 z y) / (q^2 - q^-2)), the central element
    attached to the triple (x, y, z) by the defining relations."""
    return (x + ((y * z).scale(_q(1)) - (z * y).scale(_q(-1))).scale(_D2.inv())).scale(_QQ)


@lru_cache(maxsize=None)
def generator_images(g):
    """Images of A, B, C, α, β, γ under ``rho`` or ``sigma``.

    The images of C under sigma and of α, β, γ under both maps are derived
    from the defining relations rather than assumed.
    """
    A, B, C = delta_named("A"), delta_named("B"), delta_named("C")
    ga = delta_named("ga")
    if g == "rho":
        iA, iB, iC = B, C, A
    elif g == "sigma":
        iA, iB = B, A
        # solve the third relation for the image of C: gamma is fixed
        iC = ga.scale(_QQ.inv()) - ((B * A).scale(_q(1)) - (A * B).scale(_q(-1))).scale(_D2.inv())
    else:
        raise KeyError(f"unknown group generator {g!r}")
    ial = _central_from(iA, iB, iC)
    ibe = _central_from(iB, iC, iA)
    iga = _central_from(iC, iA, iB)
    return (iA, iB, iC, ial, ibe, iga)


@lru_cache(maxsize=None)
def _image_power(g, idx, n):
    if n == 0:
        return DeltaElement.one()
    return _image_power(g, idx, n - 1) * generator_images(g)[idx]


def _apply_generator(g, d):
    out = DeltaElement.zero()
    for key, c in sorted(d.terms.items()):
        img = DeltaElement.one()
        for idx, e in enumerate(key):
            if e:
                img = img * _image_power(g, idx, e)
        out = out + img.scale(c)
    return out


def _word_letters(g):
    if isinstance(g, str):
        g = g.replace("*", " ").replace(".", " ").split()
    letters = list(g)
    for x in letters:
        if x not in ("rho", "sigma"):
            raise KeyError(f"unknown group generator {x!r}")
    return letters


def psl2_act(g, d):
    """Apply a word in ``rho``, ``sigma`` to ``d``.

    ``g`` is a list of letters or a string such as ``"rho sigma"``; the word
    acts as a composition, so the rightmost letter is applied first.
    """
    for x in reversed(_word_letters(g)):
        d = _apply_generator(x, d)
    return d


# -- Omega basis -----------------------------------------------------------------

class OmegaExpansion:
    """Coefficients on the basis ``A^i B^j C^k Ω^l α^r β^s γ^t`` with ijk = 0."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            key = tuple(key)
            if len(key) != 7:
                raise ValueError(f"invalid key {key}")
            if key[0] and key[1] and key[2]:
                raise ValueError(f"{key} is not an Ω-basis monomial (need ijk = 0)")
            c = _coerce(c)
            if c:
                clean[key] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("OmegaExpansion is immutable")

    def __eq__(self, other):
        if isinstance(other, OmegaExpansion):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"

        def mono(key):
            parts = []
            for name, e in zip(("A", "B", "C", "Om", "al", "be", "ga"), key):
                if e == 1:
                    parts.append(name)
                elif e:
                    parts.append(f"{name}^{e}")
            return "*".join(parts)

        return "".join(
            format_scaled_term(self.terms[k], mono(k), i == 0)
            for i, k in enumerate(sorted(self.terms))
        )

    def __repr__(self):
        return f"OmegaExpansion({self})"


# filtration weights: A, B, C -> 1; Omega -> 3; alpha, beta, gamma -> 2
def omega_weight(key):
    """Filtration weight of a primary or Ω-basis exponent tuple."""
    if len(key) == 6:
        i, j, k, r, s, t = key
        return i + j + k + 2 * (r + s + t)
    i, j, k, l, r, s, t = key
    return i + j + k + 3 * l + 2 * (r + s + t)


@lru_cache(maxsize=None)
def _omega_power(l):
    if l == 0:
        return DeltaElement.one()
    return _omega_power(l - 1) * delta_named("Om")


@lru_cache(maxsize=None)
def omega_basis_element(key):
    """Primary-basis expansion of ``A^i B^j C^k Ω^l α^r β^s γ^t``."""
    i, j, k, l, r, s, t = key
    m = DeltaElement.monomial(i, j, k, r, s, t)
    return m * _omega_power(l) if l else m


def _omega_candidates(bound):
    out = []
    for i, j, k in product(range(bound + 1), repeat=3):
        if i and j and k or i + j + k > bound:
            continue
        rest = bound - i - j - k
        for l in range(rest // 3 + 1):
            rest2 = rest - 3 * l
            for r, s, t in product(range(rest2 // 2 + 1), repeat=3):
                if 2 * (r + s + t) <= rest2:
                    out.append((i, j, k, l, r, s, t))
    return out


def to_omega_basis(d, bound=None):
    """Expand ``d`` on the basis ``A^i B^j C^k Ω^l α^r β^s γ^t`` (ijk = 0).

    Candidates are the basis monomials of filtration weight at most
    ``bound`` (weights A, B, C = 1, Ω = 3, α, β, γ = 2).  The default bound is
    the largest weight occurring in ``d``, which always suffices.  Raises
    :class:`BoundTooSmall` when no combination of candidates equals ``d``.
    """
    from .linalg import solve_sparse

    if not d.terms:
        return OmegaExpansion({})
    need = max(omega_weight(k) for k in d.terms)
    if bound is None:
        bound = need
    cands = _omega_candidates(bound)
    # only candidates whose expansion stays inside the weight range can help
    cols = [omega_basis_element(c).terms for c in cands]
    sol = solve_sparse(cols, d.terms)
    if sol is None:
        raise BoundTooSmall(f"no expansion with filtration weight <= {bound}; retry with a larger bound")
    return OmegaExpansion({cands[i]: v for i, v in sol.items()})


def from_omega_basis(exp):
    """Primary-basis form of an :class:`OmegaExpansion` (or a plain mapping)."""
    terms = exp.terms if isinstance(exp, OmegaExpansion) else exp
    out = DeltaElement.zero()
    for key, c in terms.items():
        out = out + omega_basis_element(tuple(key)).scale(c)
    return out
