"""Seeded random elements for property checks."""

from __future__ import annotations

import random

from .coeff import LaurentABC, RatQ
from .tensor import TensorElement
from .uaw import DeltaElement
from .uqsl2 import UElement, equitable_monomial

__all__ = [
    "rng",
    "random_ratq",
    "random_laurent",
    "random_u",
    "random_u_prime",
    "random_tensor",
    "random_tensor_prime",
    "random_delta",
    "random_word",
]


def rng(seed):
    return random.Random(seed)


def random_ratq(r, max_deg=2, allow_den=True):
    """A random element of Q(q) with small integer coefficients."""
    num = {e: r.randint(-3, 3) for e in range(-max_deg, max_deg + 1) if r.random() < 0.5}
    c = RatQ.from_laurent(num) if any(num.values()) else RatQ(r.choice((1, -1, 2)))
    if allow_den and r.random() < 0.25:
        den = RatQ.from_laurent({r.randint(0, 2): 1, -r.randint(0, 2): r.choice((1, -1, 2))})
        if den:
            c = c / den
    return c


def random_laurent(r, terms=2, spread=1):
    out = LaurentABC()
    for _ in range(r.randint(1, terms)):
        key = tuple(r.randint(-spread, spread) for _ in range(3))
        out = out + LaurentABC.monomial(*key, coeff=random_ratq(r, 1, False))
    return out if out else LaurentABC.constant(1)


def random_u(r, terms=3, max_exp=2, allow_den=True):
    """A random UElement on the PBW basis."""
    d = {}
    for _ in range(r.randint(1, terms)):
        key = (r.randint(0, max_exp), r.randint(-max_exp, max_exp), r.randint(0, max_exp))
        d[key] = random_ratq(r, 1, allow_den)
    return UElement.from_terms(d)


def random_u_prime(r, terms=3, max_exp=2):
    """A random element of the subalgebra generated by x, y, z."""
    out = UElement.zero()
    for _ in range(r.randint(1, terms)):
        h, i, j = (r.randint(0, max_exp) for _ in range(3))
        out = out + equitable_monomial(h, i, j).scale(random_ratq(r, 1, False))
    return out


def _tensorize(r, u_parts):
    out = TensorElement.zero()
    for u in u_parts:
        out = out + TensorElement.from_u(u, random_laurent(r))
    return out


def random_tensor(r, parts=2, max_exp=1):
    return _tensorize(r, [random_u(r, 2, max_exp, False) for _ in range(r.randint(1, parts))])


def random_tensor_prime(r, parts=2, max_exp=1):
    return _tensorize(r, [random_u_prime(r, 2, max_exp) for _ in range(r.randint(1, parts))])


def random_delta(r, terms=3, max_deg=2):
    """A random DeltaElement whose monomials have total degree <= max_deg."""
    d = {}
    for _ in range(r.randint(1, terms)):
        key = [0] * 6
        for _ in range(r.randint(0, max_deg)):
            key[r.randrange(6)] += 1
        d[tuple(key)] = random_ratq(r, 1, False)
    return DeltaElement(d)


def random_word(r, letters, length):
    """A random product of ``length`` letters as a surface-syntax string."""
    return "*".join(r.choice(letters) for _ in range(length))
