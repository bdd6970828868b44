"""Registry of exact identities in U_q(sl2), written in the surface syntax.

Each :class:`Identity` states ``lhs = rhs``; both sides are parsed in the
``u`` context.  The same strings drive the symbolic check (PBW normal
form) and the numeric check on the modules of :mod:`uawkit.repmod`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .report import Report, timed_check

__all__ = [
    "Identity",
    "REGISTRY",
    "GROUPS",
    "CORE_GROUPS",
    "identity",
    "group",
    "check_identity",
    "check_identities",
]


@dataclass(frozen=True)
class Identity:
    id: str
    lhs: str
    rhs: str

    @property
    def group(self):
        return self.id.split(".", 1)[0]

    def with_rhs(self, rhs):
        return replace(self, rhs=rhs)

    def residual(self):
        from .uqsl2 import u_normalize

        return u_normalize(self.lhs) - u_normalize(self.rhs)


_DQ = "(q-q^-1)"
_SQ = "(q+q^-1)"


def _build():
    ids = []

    def add(i, lhs, rhs):
        ids.append(Identity(i, lhs, rhs))

    # defining data of the Chevalley and equitable presentations
    add("chevalley.ke", "k*e", "q^2*e*k")
    add("chevalley.kf", "k*f", "q^-2*f*k")
    add("chevalley.ef", "e*f - f*e", f"(k - K)/{_DQ}")
    add("chevalley.kK", "k*K", "1")
    add("chevalley.Kk", "K*k", "1")
    add("elements.y_inverse", "y*Y", "1")
    add("elements.x", "x", f"K - q^-1*{_DQ}*e*K")
    add("elements.z", "z", f"K + {_DQ}*f")
    add("elements.nx", "nx", "q*(1 - y*z)")
    add("elements.ny", "ny", "q*(1 - z*x)")
    add("elements.nz", "nz", "q*(1 - x*y)")
    add("elements.nz_chevalley", "nz", f"{_DQ}*e")
    add("elements.nx_chevalley", "nx", f"-q*{_DQ}*k*f")
    add("elements.casimir", "Phi", f"e*f + (q^-1*k + q*K)/{_DQ}^2")
    add("elements.lambda", "Lam", f"{_DQ}^2*Phi")
    add("elements.lambda_chevalley", "Lam", f"{_DQ}^2*e*f + q^-1*k + q*K")

    for a, b in (("x", "y"), ("y", "z"), ("z", "x")):
        add(f"equitable.{a}{b}", f"(q*{a}*{b} - q^-1*{b}*{a})/{_DQ}", "1")

    # (a, b, nu) with a*b = 1 - q^-1 nu and b*a = 1 - q nu
    pairs = (("x", "y", "nz"), ("y", "z", "nx"), ("z", "x", "ny"))
    for a, b, nu in pairs:
        add(f"product.{a}{b}", f"{a}*{b}", f"1 - q^-1*{nu}")
        add(f"product.{b}{a}", f"{b}*{a}", f"1 - q*{nu}")
    for a, b, nu in pairs:
        add(f"double.{a}{b}_commutator", f"({a}*{b} - {b}*{a})/{_DQ}", nu)
        add(f"double.{a}{b}_qcommutator", f"(q*{b}*{a} - q^-1*{a}*{b})/{_DQ}", f"1 - {_SQ}*{nu}")

    # u*nu = q^(+-2) nu*u
    for u, up, down in (("x", "ny", "nz"), ("y", "nz", "nx"), ("z", "nx", "ny")):
        add(f"qcommute.{u}_{up}", f"{u}*{up}", f"q^2*{up}*{u}")
        add(f"qcommute.{u}_{down}", f"{u}*{down}", f"q^-2*{down}*{u}")

    # (u, nu_u, next, after): nu_u u = Lam - q next - q^-1 after
    cyc = (("x", "nx", "y", "z"), ("y", "ny", "z", "x"), ("z", "nz", "x", "y"))
    for u, nu, v, w in cyc:
        add(f"nu_linear.{nu}_{u}", f"{nu}*{u}", f"Lam - q*{v} - q^-1*{w}")
        add(f"nu_linear.{u}_{nu}", f"{u}*{nu}", f"Lam - q^-1*{v} - q*{w}")
    for u, nu, v, w in cyc:
        add(f"nu_commutator.{u}", f"({u}*{nu} - {nu}*{u})/{_DQ}", f"{v} - {w}")
    for u, nu, v, w in cyc:
        add(f"casimir_nu.{u}_left", "Lam", f"(q*{u}*{nu} - q^-1*{nu}*{u})/{_DQ} + {_SQ}*{w}")
        add(f"casimir_nu.{u}_right", "Lam", f"(q*{nu}*{u} - q^-1*{u}*{nu})/{_DQ} + {_SQ}*{v}")

    # nu_a nu_b in terms of Lam and the remaining equitable generator
    for na, nb, w in (("nx", "ny", "z"), ("ny", "nz", "x"), ("nz", "nx", "y")):
        add(f"nu_product.{na}_{nb}", f"{na}*{nb}", f"1 - q^-1*Lam*{w} + q^-2*{w}^2")
        add(f"nu_product.{nb}_{na}", f"{nb}*{na}", f"1 - q*Lam*{w} + q^2*{w}^2")
    for na, nb, w in (("nx", "ny", "z"), ("ny", "nz", "x"), ("nz", "nx", "y")):
        add(f"nu_qcommutator.{na}_{nb}", f"(q*{na}*{nb} - q^-1*{nb}*{na})/{_DQ}", f"1 - {w}^2")

    # the six ways of writing Lam through x, y, z
    add("casimir_forms.xyz", "Lam", "q*x + q^-1*y + q*z - q*x*y*z")
    add("casimir_forms.zyx", "Lam", "q^-1*x + q*y + q^-1*z - q^-1*z*y*x")
    add("casimir_forms.yzx", "Lam", "q*y + q^-1*z + q*x - q*y*z*x")
    add("casimir_forms.xzy", "Lam", "q^-1*y + q*z + q^-1*x - q^-1*x*z*y")
    add("casimir_forms.zxy", "Lam", "q*z + q^-1*x + q*y - q*z*x*y")
    add("casimir_forms.yxz", "Lam", "q^-1*z + q*x + q^-1*y - q^-1*y*x*z")

    for t in range(1, 5):
        factors = "*".join(
            f"(Lam - q^{1 - 2 * i}*k - q^{2 * i - 1}*K)" for i in range(1, t + 1)
        )
        add(f"ef_power.t{t}", f"e^{t}*f^{t}", f"{factors}/{_DQ}^{2 * t}")

    add("cubic.nz_zz", "nz*z^2", "q^-2*nx + q^2*ny + Lam*z - q - q^-1")
    add("cubic.x_nx_x", "x*nx*x", "ny + nz + Lam*x - q - q^-1")
    add("cubic.yy_ny", "y^2*ny", "q^-2*nx + q^2*nz + Lam*y - q - q^-1")
    add(
        "cubic.nz_nx_ny",
        "nz*nx*ny",
        "q^-4*nx + ny + nz + Lam*x + q^-2*Lam*y + q^-2*Lam*z - q^-1*Lam^2 - q^-1 - q^-3",
    )
    for a, b, nu in pairs:
        add(f"cubic.sym_{a}{b}", f"{a}*{b} + {b}*{a}", f"2 - {_SQ}*{nu}")
    return tuple(ids)


REGISTRY = _build()
_BY_ID = {i.id: i for i in REGISTRY}

GROUPS = {}
for _i in REGISTRY:
    GROUPS.setdefault(_i.group, []).append(_i)
GROUPS = {g: tuple(v) for g, v in GROUPS.items()}

# the calculus of x, y, z and the nu elements
CORE_GROUPS = (
    "equitable", "product", "double", "qcommute", "nu_linear",
    "nu_commutator", "casimir_nu", "nu_product", "nu_qcommutator",
)


def identity(identity_id):
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


def group(name):
    return GROUPS[name]


def check_identity(ident):
    """Check one identity symbolically; returns a Check."""
    if isinstance(ident, str):
        ident = identity(ident)

    def run():
        res = ident.residual()
        return res.is_zero(), res, None

    return timed_check(f"identity.{ident.id}", run)


def check_identities(idents=None, suite="u-identities"):
    rep = Report(suite)
    for ident in REGISTRY if idents is None else idents:
        rep.add(check_identity(ident))
    return rep
