"""Exact sparse linear algebra over Q(q), Q and Z.

Vectors are dictionaries from hashable coordinates to nonzero entries.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .coeff import RatQ

__all__ = ["rank_field", "rank_integer", "solve_sparse", "to_integer_vector"]


def _inv(x):
    if isinstance(x, RatQ):
        return x.inv()
    return 1 / Fraction(x)


def _size(x):
    if isinstance(x, RatQ):
        return len(x.num) + len(x.den)
    return abs(x.numerator) + abs(x.denominator) if isinstance(x, Fraction) else abs(x)


def _axpy(v, c, b):
    """``v - c * b`` in place (entries of ``b`` are multiplied by ``c``)."""
    for key, w in b.items():
        prev = v.get(key)
        t = c * w
        if prev is None:
            v[key] = -t
        else:
            nv = prev - t
            if nv:
                v[key] = nv
            else:
                del v[key]


class _Echelon:
    """Incremental reduced echelon basis over a field."""

    def __init__(self, track=False):
        self.pivots = {}  # pivot coordinate -> (normalized vector, combination)
        self.track = track

    def reduce(self, v, combo=None):
        v = dict(v)
        changed = True
        while changed:
            changed = False
            for key in [k for k in v if k in self.pivots]:
                c = v.get(key)
                if c is None:
                    continue
                b, bc = self.pivots[key]
                _axpy(v, c, b)
                if combo is not None:
                    _axpy(combo, c, bc)
                changed = True
        return v, combo

    def add(self, v, label=None):
        """Insert ``v``; returns True if it was independent of the basis."""
        combo = None
        if self.track:
            combo = {label: RatQ(1) if _is_ratq_vec(v) else Fraction(1)}
        v, combo = self.reduce(v, combo)
        if not v:
            return False
        key = min(v, key=lambda k: (_size(v[k]), repr(k)))
        inv = _inv(v[key])
        v = {k: w * inv for k, w in v.items()}
        if combo is not None:
            combo = {k: w * inv for k, w in combo.items()}
        # keep the basis fully reduced on its pivot coordinate
        for pk, (b, bc) in self.pivots.items():
            c = b.get(key)
            if c is not None:
                _axpy(b, c, v)
                if bc is not None:
                    _axpy(bc, c, combo)
        self.pivots[key] = (v, combo)
        return True


def _is_ratq_vec(v):
    for w in v.values():
        return isinstance(w, RatQ)
    return False


def rank_field(vectors):
    """Exact rank of a list of sparse vectors over a field (RatQ or Fraction)."""
    ech = _Echelon()
    r = 0
    for v in vectors:
        if ech.add(v):
            r += 1
    return r


def solve_sparse(columns, target):
    """Find ``x`` with ``sum(x[i] * columns[i]) == target``.

    Returns a dictionary ``index -> coefficient`` (nonzero entries only) or
    ``None`` when the system has no solution.  When the columns are
    dependent one particular solution is returned.
    """
    ech = _Echelon(track=True)
    for i, col in enumerate(columns):
        ech.add(col, label=i)
    rem, combo = ech.reduce(target, {})
    if rem:
        return None
    # the reduction subtracted sum(c_j * b_j) from the target, with each b_j
    # tracked as a combination of the original columns
    return {key: -w for key, w in combo.items() if w}


def to_integer_vector(v):
    """Scale a vector of Fractions to a primitive integer vector."""
    den = 1
    for w in v.values():
        den = lcm(den, Fraction(w).denominator)
    out = {k: int(Fraction(w) * den) for k, w in v.items()}
    g = 0
    for w in out.values():
        g = gcd(g, w)
    if g > 1:
        out = {k: w // g for k, w in out.items()}
    return out


def rank_integer(vectors):
    """Rank of integer (or rational) sparse vectors by fraction-free elimination.

    Each reduction step replaces ``v`` by ``p*v - c*b`` (``p`` the pivot of
    ``b``) and divides out the content, so entries stay integral and small.
    """
    pivots = {}  # coordinate -> primitive integer vector with that pivot
    r = 0
    for v in vectors:
        v = to_integer_vector(v)
        # each stored vector is free of all earlier pivots, so one ordered
        # pass over the pivots reduces v completely
        for hit, b in pivots.items():
            if hit not in v:
                continue
            p, c = b[hit], v[hit]
            g = gcd(p, c)
            p, c = p // g, c // g
            nv = {k: w * p for k, w in v.items()}
            for k, w in b.items():
                t = nv.get(k, 0) - c * w
                if t:
                    nv[k] = t
                else:
                    nv.pop(k, None)
            g = 0
            for w in nv.values():
                g = gcd(g, w)
                if g == 1:
                    break
            v = {k: w // g for k, w in nv.items()} if g > 1 else nv
        if v:
            key = min(v, key=lambda k: (abs(v[k]), repr(k)))
            pivots[key] = v
            r += 1
    return r
