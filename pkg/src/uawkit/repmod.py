"""The modules L(n, ε) of U_q(sl2) as exact rational matrices at a rational q.

These give a numeric oracle that shares nothing with the PBW engine: the
equitable generators and the ν elements are built here from the matrices
of e, f, k by their defining formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeff import RatQ, check_q_value
from .errors import PoleAtSpecialization
from .report import Report, timed_check

__all__ = [
    "Matrix",
    "ModuleRep",
    "build_module",
    "represent",
    "q_integer",
    "module_letters",
    "evaluate_on_module",
    "numeric_identity_check",
]


class Matrix:
    """Square matrix over Q, immutable."""

    __slots__ = ("rows", "n")

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
        self.n = len(self.rows)

    @classmethod
    def identity(cls, n, c=1):
        c = Fraction(c)
        return cls([[c if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n):
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diagonal(cls, entries):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def _lift(self, other):
        if isinstance(other, Matrix):
            if other.n != self.n:
                raise ValueError("matrix size mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return Matrix.identity(self.n, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, o.rows)])

    __radd__ = __add__

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Matrix([[a * c for a in r] for r in self.rows])
        if not isinstance(other, Matrix):
            return NotImplemented
        cols = list(zip(*other.rows))
        return Matrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self.rows])

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise PoleAtSpecialization("division by a scalar that vanishes at this q")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = Matrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        n = self.n
        a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            p = a[col][col]
            a[col] = [v / p for v in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    c = a[r][col]
                    a[r] = [v - c * w for v, w in zip(a[r], a[col])]
        return Matrix([r[n:] for r in a])

    def is_scalar(self, c):
        return self == Matrix.identity(self.n, c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_scalar(other)
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[[str(v) for v in r] for r in self.rows]})"


def q_integer(m, q):
    """[m]_q = (q^m - q^-m) / (q - q^-1) at a rational q."""
    q = Fraction(q)
    return (q ** m - q ** -m) / (q - 1 / q)


@dataclass(frozen=True)
class ModuleRep:
    n: int
    eps: int
    q_val: Fraction
    mat_e: Matrix
    mat_f: Matrix
    mat_k: Matrix
    mat_k_inv: Matrix

    @property
    def dim(self):
        return self.n + 1

    def identity(self, c=1):
        return Matrix.identity(self.dim, c)


def build_module(n, eps, q_val):
    """L(n, eps) on the basis v_0..v_n with k v_i = eps q^(n-2i) v_i,
    f v_i = [i+1]_q v_(i+1) and e v_i = eps [n-i+1]_q v_(i-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    q = check_q_value(q_val)
    d = n + 1
    e = [[Fraction(0)] * d for _ in range(d)]
    f = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        if i + 1 < d:
            f[i + 1][i] = q_integer(i + 1, q)
        if i >= 1:
            e[i - 1][i] = eps * q_integer(n - i + 1, q)
    k = [eps * q ** (n - 2 * i) for i in range(d)]
    return ModuleRep(
        n=n,
        eps=eps,
        q_val=q,
        mat_e=Matrix(e),
        mat_f=Matrix(f),
        mat_k=Matrix.diagonal(k),
        mat_k_inv=Matrix.diagonal([1 / v for v in k]),
    )


def _coeff_value(c, q):
    if isinstance(c, RatQ):
        return c.evaluate(q)
    return Fraction(c)


def represent(u, m):
    """Matrix of a UElement (or scalar) acting on the module ``m``."""
    from .uqsl2 import UElement

    q = m.q_val
    if not isinstance(u, UElement):
        return m.identity(_coeff_value(u, q))
    out = Matrix.zero(m.dim)
    e_pow, f_pow = {}, {}
    for (r, s, t), c in sorted(u.terms.items()):
        if r not in e_pow:
            e_pow[r] = m.mat_e ** r
        if t not in f_pow:
            f_pow[t] = m.mat_f ** t
        ks = m.mat_k ** s if s >= 0 else m.mat_k_inv ** (-s)
        out = out + e_pow[r] * ks * f_pow[t] * _coeff_value(c, q)
    return out


def module_letters(m):
    """Matrices of the surface-syntax letters of U on ``m``, built from the
    Chevalley matrices by the defining formulas."""
    q = m.q_val
    dq = q - 1 / q
    e, f, k, K = m.mat_e, m.mat_f, m.mat_k, m.mat_k_inv
    one = m.identity()
    x = K - e * K * (dq / q)
    y, Y = k, K
    z = K + f * dq
    return {
        "e": e, "f": f, "k": k, "K": K,
        "x": x, "y": y, "Y": Y, "z": z,
        "nx": (one - y * z) * q,
        "ny": (one - z * x) * q,
        "nz": (one - x * y) * q,
        "Phi": e * f + (k * (1 / q) + K * q) / dq ** 2,
        "Lam": e * f * dq ** 2 + k * (1 / q) + K * q,
    }


def evaluate_on_module(expr, m, letters=None):
    """Evaluate a U-context expression (string or tree) as a matrix on ``m``."""
    from .words import Num, check_context, evaluate_with, parse

    node = parse(expr) if isinstance(expr, str) else expr
    check_context(node, "u")
    mats = module_letters(m) if letters is None else letters
    q = m.q_val

    def leaf(n):
        if isinstance(n, Num):
            return Fraction(n.value)
        if n.name == "q":
            return q
        return mats[n.name]

    def divide(a, b):
        if isinstance(b, Matrix):
            return a * b.inverse()
        if b == 0:
            raise PoleAtSpecialization(f"a denominator vanishes at q={q}")
        return a / b if isinstance(a, Matrix) else Fraction(a) / b

    val = evaluate_with(node, leaf, divide)
    if not isinstance(val, Matrix):
        val = m.identity(val)
    return val


def numeric_identity_check(identity_id, m):
    """Evaluate both sides of a registry identity on ``m`` and compare."""
    from .identities import Identity, identity

    ident = identity_id if isinstance(identity_id, Identity) else identity(identity_id)
    letters = module_letters(m)

    def run():
        lhs = evaluate_on_module(ident.lhs, m, letters)
        rhs = evaluate_on_module(ident.rhs, m, letters)
        ok = lhs == rhs
        return ok, None if ok else (lhs - rhs), None

    rep = Report("modules")
    tag = f"L({m.n},{'+' if m.eps > 0 else '-'}),q={m.q_val}"
    rep.add(timed_check(f"module.{tag}.{ident.id}", run))
    return rep
