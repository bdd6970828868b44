"""Verification suites: each returns a :class:`~uawkit.report.Report`.

Fault-injection hooks (``project``, ``images``, ``omega_image``,
``idents``) let the mutation tests run the same code paths with a
deliberately wrong ingredient.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .coeff import RatQ
from .errors import NotInUPrime
from .report import Report, timed_check
from .words import evaluate

__all__ = [
    "SUITES",
    "run_suite",
    "u_identities_suite",
    "grading_suite",
    "tensor_suite",
    "delta_suite",
    "hom_suite",
    "diagrams_suite",
    "modules_suite",
    "FIRST_TABLE",
    "ABC_TABLE",
]

DEFAULT_SEED = 0


def _u(s):
    return evaluate(s, "u")


def _t(s):
    return evaluate(s, "tensor")


def _d(s):
    return evaluate(s, "delta")


def _equal(check_id, lhs, rhs, detail=None):
    """Check ``lhs() == rhs()`` with the difference as residual."""

    def run():
        res = lhs() - rhs()
        return res.is_zero(), res, detail

    return timed_check(check_id, run)


def _holds(check_id, fn):
    """Check a predicate ``fn() -> (ok, residual)``."""

    def run():
        ok, res = fn()
        return ok, res, None

    return timed_check(check_id, run)


# -- U identities -------------------------------------------------------------

def u_identities_suite(seed=None, idents=None):
    from .identities import check_identities
    from .uqsl2 import u_named

    rep = check_identities(idents)
    lam = u_named("Lambda")
    for g in ("e", "f", "k", "x", "z", "nu_y"):
        u = u_named(g)
        rep.add(_equal(f"central.Lambda_{g}", lambda u=u: lam * u, lambda u=u: u * lam))
    rep.seed = seed
    return rep


# -- gradings -------------------------------------------------------------------

# element -> {degree: expected component}; unlisted degrees are zero
FIRST_TABLE = {
    "x": {0: "Y", 1: "-q^-1*nz*Y"},
    "y": {0: "y"},
    "z": {-1: "-q^-1*Y*nx", 0: "Y"},
    "nx": {-1: "nx"},
    "ny": {-1: "q^-2*Y^2*nx", 0: "Y*Lam - (q+q^-1)*Y^2", 1: "q^-2*nz*Y^2"},
    "nz": {1: "nz"},
    "Lam": {0: "Lam"},
}

ABC_TABLE = {
    "A": {0: "y*a^-1 + Y*a", 1: "nz*b*c^-1 - q^-1*nz*Y*a"},
    "B": {-1: "nx*a^-1*c - q^-1*Y*nx*b^-1", 0: "y*b + Y*b^-1"},
    "C": {
        -1: "q^-2*Y^2*nx*a*b^-1 - q^-1*Y*nx*c",
        0: "Y*(c + c^-1) + Y*Lam*a*b^-1 - (q+q^-1)*Y^2*a*b^-1",
        1: "q^-2*nz*Y^2*a*b^-1 - q^-1*nz*Y*c^-1",
    },
}

_NAT_NAMES = {"A": "Anat", "B": "Bnat", "C": "Cnat"}


def _components_check(check_id, value, table, parse, project, span):
    """Compare ``project(value, n)`` with ``table`` for every n in ``span``."""

    def run():
        v = value()
        for n in span:
            want = parse(table[n]) if n in table else parse("0")
            res = project(v, n) - want
            if res:
                return False, f"degree {n}: {res}", None
        return True, None, f"degrees {span[0]}..{span[-1]}"

    return timed_check(check_id, run)


def _rank_and_degree(check_id, elems, n, project):
    from .linalg import rank_field

    def run():
        rank = rank_field([u.terms for u in elems])
        if rank != len(elems):
            return False, f"rank {rank} of {len(elems)}", None
        for u in elems:
            if project(u, n) != u:
                return False, f"{u} is not homogeneous of degree {n}", None
        return True, None, f"rank {rank} of {len(elems)}"

    return timed_check(check_id, run)


def grading_suite(seed=None, project=None):
    from .tensor import t_named
    from .uqsl2 import grade_project, u_named

    project = grade_project if project is None else project
    rep = Report("grading", seed=seed)
    span = list(range(-2, 3))

    for name, row in FIRST_TABLE.items():
        rep.add(
            _components_check(
                f"grading.u.{name}", lambda name=name: _u(name), row, _u, project, span
            )
        )
    for name, row in ABC_TABLE.items():
        nat = _NAT_NAMES[name]
        rep.add(
            _components_check(
                f"grading.tensor.{nat}", lambda nat=nat: t_named(nat), row, _t, project, span
            )
        )
    for nat in ("alphanat", "betanat", "gammanat", "Omeganat"):
        rep.add(
            _holds(
                f"grading.tensor.{nat}_degree0",
                lambda nat=nat: (lambda v: (project(v, 0) == v, v - project(v, 0)))(t_named(nat)),
            )
        )

    R, L, th, vth = (t_named(n) for n in ("R", "L", "theta", "vartheta"))
    A, B, C = (t_named(n) for n in ("Anat", "Bnat", "Cnat"))
    qq = RatQ.qpow
    rep.add(_holds("comm.nonzero", lambda: (all((R, L, th, vth)), None)))
    rep.add(_equal("comm.R_vartheta", lambda: R * vth, lambda: (vth * R).scale(qq(2))))
    rep.add(_equal("comm.L_theta", lambda: L * th, lambda: (th * L).scale(qq(-2))))
    rep.add(_equal("comm.A_degree0", lambda: project(A, 0), lambda: th + th.inverse()))
    rep.add(_equal("comm.B_degree0", lambda: project(B, 0), lambda: vth + vth.inverse()))
    rep.add(_equal("comm.C_degree1", lambda: project(C, 1), lambda: -(R * vth).scale(qq(-1))))
    rep.add(_equal("comm.C_degree-1", lambda: project(C, -1), lambda: -(th * L).scale(qq(-1))))

    # powers of a single generator image
    def power_check(X, i, row):
        def run():
            v = X ** i
            lo, hi = row["range"]
            for n in range(min(lo, 0) - 1, max(hi, 0) + 2):
                comp = project(v, n)
                if n in row:
                    res = comp - row[n]
                    if res:
                        return False, f"degree {n}: {res}", None
                elif (n < lo or n > hi) and comp:
                    return False, f"degree {n} should vanish: {comp}", None
            return True, None, None

        return run

    for i in range(4):
        sign = (-1) ** i
        rows = {
            "A": (A, {"range": (0, i), 0: (th + th.inverse()) ** i, i: R ** i}),
            "B": (B, {"range": (-i, 0), -i: L ** i, 0: (vth + vth.inverse()) ** i}),
            "C": (
                C,
                {
                    "range": (-i, i),
                    -i: (L ** i * th ** i).scale(qq(i * i) * sign),
                    i: (R ** i * vth ** i).scale(qq(-i * i) * sign),
                },
            ),
        }
        for key, (X, row) in rows.items():
            rep.add(timed_check(f"power.{key}{i}", power_check(X, i, row)))

    # mixed products A^i B^j C^k, total degree <= 4
    def mixed_check(i, j, k):
        def run():
            v = A ** i * B ** j * C ** k
            lo, hi = -j - k, i + k
            sk = (-1) ** k
            m = j + k
            th_sum = th.scale(qq(2 * m)) + th.inverse().scale(qq(-2 * m))
            vth_sum = vth.scale(qq(-2 * k)) + vth.inverse().scale(qq(2 * k))
            low = (L ** m * th_sum ** i * th ** k).scale(qq(k * k) * sk)
            high = (R ** (i + k) * vth_sum ** j * vth ** k).scale(qq(-k * k) * sk)
            for n in list(range(lo - 3, lo)) + list(range(hi + 1, hi + 4)):
                if project(v, n):
                    return False, f"degree {n} should vanish", None
            # when lo == hi both formulas describe the same component
            for n, want in ((lo, low), (hi, high)):
                res = project(v, n) - want
                if res:
                    return False, f"degree {n}: {res}", None
            return True, None, None

        return run

    for i, j, k in product(range(5), repeat=3):
        if i + j + k <= 4:
            rep.add(timed_check(f"mixed.A{i}B{j}C{k}", mixed_check(i, j, k)))

    # alternative bases of the homogeneous components
    e, f, k, lam = (u_named(n) for n in ("e", "f", "k", "Lambda"))
    nx, nz, y = u_named("nu_x"), u_named("nu_z"), u_named("y")
    b = 2
    for n in range(3):
        rep.add(
            _rank_and_degree(
                f"basis.e{n}_k_Lambda",
                [e ** n * k ** s * lam ** t for s in range(-b, b + 1) for t in range(b + 1)],
                n,
                project,
            )
        )
        rep.add(
            _rank_and_degree(
                f"basis.k_Lambda_f{n}",
                [k ** s * lam ** t * f ** n for s in range(-b, b + 1) for t in range(b + 1)],
                -n,
                project,
            )
        )
        rep.add(
            _rank_and_degree(
                f"basis.nz{n}_y_Lambda",
                [nz ** n * y ** i * lam ** j for i in range(-b, b + 1) for j in range(b + 1)],
                n,
                project,
            )
        )
        rep.add(
            _rank_and_degree(
                f"basis.y_Lambda_nx{n}",
                [y ** i * lam ** j * nx ** n for i in range(-b, b + 1) for j in range(b + 1)],
                -n,
                project,
            )
        )
    return rep


# -- automorphisms of the tensor algebra ----------------------------------------

SIGMA_TABLE = {
    "x": "y + nx*a^-1*b^-1*c",
    "y": "Y",
    "z": "y + nz*a*b*c^-1",
    "nx": "-q^-1*nz*Y*a*b*c^-1",
    "ny": "-q*nz*y*a*b*c^-1 + y*Lam - (q+q^-1)*y^2 - q*y*nx*a^-1*b^-1*c",
    "nz": "-q^-1*Y*nx*a^-1*b^-1*c",
    "Lam": "Lam",
}


def tensor_suite(seed=None, n_random=100):
    from . import randgen
    from .tensor import rho_tilde, sigma_tilde, t_named

    seed = DEFAULT_SEED if seed is None else seed
    rep = Report("tensor", seed=seed)
    for name, img in SIGMA_TABLE.items():
        rep.add(
            _equal(f"sigma.{name}", lambda name=name: sigma_tilde(_t(name)), lambda img=img: _t(img))
        )
    nat = {n: t_named(n) for n in ("Anat", "Bnat", "Cnat", "alphanat", "betanat", "gammanat")}
    for src, dst in (
        ("alphanat", "betanat"), ("betanat", "alphanat"), ("gammanat", "gammanat"),
        ("Anat", "Bnat"), ("Bnat", "Anat"),
    ):
        rep.add(_equal(f"sigma.{src}", lambda s=src: sigma_tilde(nat[s]), lambda d=dst: nat[d]))
    for src, dst in (
        ("Anat", "Bnat"), ("Bnat", "Cnat"), ("Cnat", "Anat"),
        ("alphanat", "betanat"), ("betanat", "gammanat"), ("gammanat", "alphanat"),
    ):
        rep.add(_equal(f"rho.{src}", lambda s=src: rho_tilde(nat[s]), lambda d=dst: nat[d]))
    rep.add(_equal("rho.Lam", lambda: rho_tilde(_t("Lam")), lambda: _t("Lam")))
    for src, dst in (("x", "y"), ("y", "z"), ("z", "x"), ("a", "b"), ("b", "c"), ("c", "a")):
        rep.add(_equal(f"rho.{src}", lambda s=src: rho_tilde(_t(s)), lambda d=dst: _t(d)))
    for src, dst in (("e", "f*a^-1*b^-1*c"), ("f", "e*a*b*c^-1"), ("k", "K"), ("K", "k"), ("a", "b"), ("b", "a"), ("c", "c")):
        rep.add(_equal(f"sigma.{src}", lambda s=src: sigma_tilde(_t(s)), lambda d=dst: _t(d)))

    def not_in_u_prime():
        try:
            rho_tilde(_t("Y"))
        except NotInUPrime:
            return True, None
        return False, "no NotInUPrime raised"

    rep.add(_holds("rho.Y_not_in_u_prime", not_in_u_prime))

    gens_sigma = [_t(s) for s in ("e", "f", "k", "K", "a", "b", "c", "a^-1", "b^-1", "c^-1")]
    gens_rho = [_t(s) for s in ("x", "y", "z", "a", "b", "c", "a^-1", "b^-1", "c^-1")]

    def order_check(fn, n, elems):
        def run():
            for u in elems:
                v = u
                for _ in range(n):
                    v = fn(v)
                if v != u:
                    return False, f"fails on {u}: {v - u}", None
            return True, None, f"{len(elems)} elements"

        return run

    rep.add(timed_check("sigma.order2_generators", order_check(sigma_tilde, 2, gens_sigma)))
    rep.add(timed_check("rho.order3_generators", order_check(rho_tilde, 3, gens_rho)))
    r = randgen.rng(seed)
    rs = [randgen.random_tensor(r) for _ in range(n_random)]
    rr = [randgen.random_tensor_prime(r) for _ in range(n_random)]
    rep.add(timed_check("sigma.order2_random", order_check(sigma_tilde, 2, rs)))
    rep.add(timed_check("rho.order3_random", order_check(rho_tilde, 3, rr)))
    return rep


# -- Delta -------------------------------------------------------------------------

def delta_suite(seed=None, n_random=50):
    from . import randgen
    from .uaw import DeltaElement, delta_named, from_omega_basis, psl2_act, to_omega_basis

    seed = DEFAULT_SEED if seed is None else seed
    rep = Report("delta", seed=seed)
    A, B, C = (delta_named(n) for n in "ABC")
    al, be, ga, Om = (delta_named(n) for n in ("al", "be", "ga", "Om"))
    rels = {
        "relation1": ("A + (q*B*C - q^-1*C*B)/(q^2-q^-2)", "al/(q+q^-1)"),
        "relation2": ("B + (q*C*A - q^-1*A*C)/(q^2-q^-2)", "be/(q+q^-1)"),
        "relation3": ("C + (q*A*B - q^-1*B*A)/(q^2-q^-2)", "ga/(q+q^-1)"),
        "reorder.BA": ("B*A", "q^2*A*B - q*(q-q^-1)*ga + q*(q^2-q^-2)*C"),
        "reorder.CB": ("C*B", "q^2*B*C - q*(q-q^-1)*al + q*(q^2-q^-2)*A"),
        "reorder.CA": ("C*A", "q^-2*A*C + q^-1*(q-q^-1)*be - q^-1*(q^2-q^-2)*B"),
        "casimir": ("Om", "q*A*B*C + q^2*A^2 + q^-2*B^2 + q^2*C^2 - q*A*al - q^-1*B*be - q*C*ga"),
    }
    for name, (lhs, rhs) in rels.items():
        rep.add(_equal(f"delta.{name}", lambda s=lhs: _d(s), lambda s=rhs: _d(s)))
    for X, name in ((A, "A"), (B, "B"), (C, "C")):
        for Z, zn in ((al, "al"), (be, "be"), (ga, "ga"), (Om, "Om")):
            rep.add(_equal(f"delta.central.{zn}_{name}", lambda X=X, Z=Z: Z * X, lambda X=X, Z=Z: X * Z))

    images = {
        "rho": {"A": "B", "B": "C", "C": "A", "al": "be", "be": "ga", "ga": "al"},
        "sigma": {"A": "B", "B": "A", "al": "be", "be": "al", "ga": "ga"},
    }
    for g, table in images.items():
        for src, dst in table.items():
            rep.add(_equal(f"psl2.{g}.{src}", lambda g=g, s=src: psl2_act(g, _d(s)), lambda d=dst: _d(d)))
    rep.add(
        _equal(
            "psl2.sigma.C",
            lambda: psl2_act("sigma", C),
            lambda: _d("ga/(q+q^-1) - (q*B*A - q^-1*A*B)/(q^2-q^-2)"),
        )
    )
    for g in ("rho", "sigma"):
        rep.add(_equal(f"psl2.{g}.Om_fixed", lambda g=g: psl2_act(g, Om), lambda: Om))

    def group_orders():
        for key in product(range(3), repeat=6):
            d = DeltaElement.monomial(*key)
            if psl2_act("rho rho rho", d) != d:
                return False, f"rho^3 moves {d}", None
            if psl2_act("sigma sigma", d) != d:
                return False, f"sigma^2 moves {d}", None
        return True, None, "729 monomials"

    rep.add(timed_check("psl2.orders", group_orders))

    rep.add(
        _holds(
            "omega_basis.casimir",
            lambda: (lambda e: (e.terms == {(0, 0, 0, 1, 0, 0, 0): RatQ(1)}, e))(to_omega_basis(_d(rels["casimir"][1]))),
        )
    )
    rep.add(
        _equal(
            "omega_basis.ABC",
            lambda: from_omega_basis(to_omega_basis(A * B * C)),
            lambda: A * B * C,
        )
    )
    rep.add(
        _holds(
            "omega_basis.ABC_expansion",
            lambda: _omega_abc_ok(to_omega_basis(A * B * C)),
        )
    )

    def assoc():
        r = randgen.rng(seed)
        for _ in range(n_random):
            w = randgen.random_word(r, ["A", "B", "C", "al", "be", "ga"], r.randint(2, 5))
            left, right = _d_assoc(w, "left"), _d_assoc(w, "right")
            if left != right:
                return False, f"{w}: {left - right}", None
        return True, None, f"{n_random} words"

    rep.add(timed_check("delta.associativity_random", assoc))
    return rep


def _d_assoc(word, assoc):
    return evaluate(word, "delta", assoc=assoc)


def _omega_abc_ok(exp):
    from .coeff import Q

    qi = Q.inv()
    want = {
        (0, 0, 0, 1, 0, 0, 0): qi,
        (2, 0, 0, 0, 0, 0, 0): -Q,
        (0, 2, 0, 0, 0, 0, 0): -(qi ** 3),
        (0, 0, 2, 0, 0, 0, 0): -Q,
        (1, 0, 0, 0, 1, 0, 0): RatQ(1),
        (0, 1, 0, 0, 0, 1, 0): qi ** 2,
        (0, 0, 1, 0, 0, 0, 1): RatQ(1),
    }
    return exp.terms == want, exp


# -- homomorphism ---------------------------------------------------------------

MOTIV_TRIPLES = ((1, 1, 1), (2, 3, 5), (Fraction(-1, 2), Fraction(3, 7), 4))


def hom_suite(seed=None, bound=2, images=None, omega_image=None, n_random=10):
    from . import randgen
    from .hom import (
        Natural,
        check_prop_motiv,
        check_theorem_main,
        check_theorem_main2,
        injectivity_rank_check,
    )

    seed = DEFAULT_SEED if seed is None else seed
    rep = Report("hom", seed=seed)
    rep.extend(check_theorem_main(images))
    rep.extend(check_theorem_main2(images, omega_image))
    nat = Natural(images)
    closed = {
        "al": "Lam*(a + a^-1) + (b + b^-1)*(c + c^-1)",
        "be": "Lam*(b + b^-1) + (c + c^-1)*(a + a^-1)",
        "ga": "Lam*(c + c^-1) + (a + a^-1)*(b + b^-1)",
        "Om": "(q+q^-1)^2 - (a+a^-1)^2 - (b+b^-1)^2 - (c+c^-1)^2"
        " - Lam*(a+a^-1)*(b+b^-1)*(c+c^-1) - Lam^2",
        "A": "x*a + y*a^-1 + nz*b*c^-1",
        "B": "y*b + z*b^-1 + nx*c*a^-1",
        "C": "z*c + x*c^-1 + ny*a*b^-1",
        "1": "1",
    }
    for name, s in closed.items():
        rep.add(_equal(f"image.{name}", lambda n=name: nat(_d(n)), lambda s=s: _t(s)))
    rep.add(_holds("image.central", lambda: _central_images(nat)))

    def multiplicative():
        r = randgen.rng(seed)
        for _ in range(n_random):
            u, v = randgen.random_delta(r), randgen.random_delta(r)
            res = nat(u * v) - nat(u) * nat(v)
            if res:
                return False, f"{u} , {v}: {res}", None
        return True, None, f"{n_random} pairs"

    rep.add(timed_check("image.multiplicative_random", multiplicative))
    sym = min(bound, 2)
    rep.extend(injectivity_rank_check(sym, "symbolic", seed=seed, images=images))
    for qv in (2, Fraction(3, 2)):
        sub = injectivity_rank_check(bound, "specialized", seed=seed, q_val=qv, images=images)
        for c in sub.checks:
            c.id = f"{c.id}.q={qv}"
        rep.extend(sub)
    for a, b, c in MOTIV_TRIPLES:
        rep.extend(check_prop_motiv(a, b, c))
    return rep


def _central_images(nat):
    gens = [_t(s) for s in ("e", "f", "k")]
    for name in ("al", "be", "ga", "Om"):
        v = nat(_d(name))
        for g in gens:
            res = v * g - g * v
            if res:
                return False, f"{name} does not commute with {g}: {res}"
    return True, None


# -- diagrams ------------------------------------------------------------------------

def diagrams_suite(seed=None, max_exp=2, images=None):
    from .hom import check_diagrams

    rep = check_diagrams(max_exp=max_exp, images=images)
    rep.seed = seed
    return rep


# -- modules ---------------------------------------------------------------------

MODULE_QS = (Fraction(2), Fraction(3, 2), Fraction(-2))


def modules_suite(seed=None, max_n=5, qs=MODULE_QS, idents=None):
    from .hom import _relations, default_images
    from .identities import REGISTRY
    from .repmod import build_module, evaluate_on_module, module_letters, represent
    from .tensor import t_named
    from .uqsl2 import u_named

    rep = Report("modules", seed=seed)
    idents = REGISTRY if idents is None else idents
    lam = u_named("Lambda")
    for n in range(max_n + 1):
        for eps in (1, -1):
            for qv in qs:
                m = build_module(n, eps, qv)
                tag = f"L({n},{'+' if eps > 0 else '-'}),q={qv}"
                letters = module_letters(m)

                def chevalley(m=m):
                    e, f, k, K = m.mat_e, m.mat_f, m.mat_k, m.mat_k_inv
                    q = m.q_val
                    ok = (
                        k * K == 1
                        and k * e == e * k * q ** 2
                        and k * f == f * k * q ** -2
                        and e * f - f * e == (k - K) / (q - 1 / q)
                    )
                    return ok, None if ok else "Chevalley relations fail"

                rep.add(_holds(f"module.{tag}.chevalley", chevalley))

                def lam_scalar(m=m, n=n, eps=eps, qv=qv):
                    val = eps * (qv ** (n + 1) + qv ** (-n - 1))
                    got = represent(lam, m)
                    return got.is_scalar(val), None if got.is_scalar(val) else got

                rep.add(_holds(f"module.{tag}.Lambda_scalar", lam_scalar))
                for ident in idents:

                    def run(ident=ident, m=m, letters=letters):
                        lhs = evaluate_on_module(ident.lhs, m, letters)
                        rhs = evaluate_on_module(ident.rhs, m, letters)
                        ok = lhs == rhs
                        return ok, None if ok else lhs - rhs, None

                    rep.add(timed_check(f"module.{tag}.{ident.id}", run))

    # the three relations and the Casimir image, specialized and acting on L(2, +)
    abc = (3, 5, 7)
    m = build_module(2, 1, 2)

    def at_point(v):
        return represent(v.specialize_abc(*abc), m)

    imgs = default_images()

    def main_numeric():
        for i, res in enumerate(_relations(*imgs), 1):
            mat = at_point(res)
            if mat != 0:
                return False, f"relation {i}: {mat}", None
        return True, None, "q=2, a=3, b=5, c=7 on L(2,+)"

    def main2_numeric():
        mats = [at_point(v) for v in imgs]
        A, B, C, al, be, ga = mats
        q = m.q_val
        lhs = (
            A * B * C * q + A * A * q ** 2 + B * B * q ** -2 + C * C * q ** 2
            - A * al * q - B * be / q - C * ga * q
        )
        rhs = at_point(t_named("Omeganat"))
        return lhs == rhs, None if lhs == rhs else lhs - rhs, "q=2, a=3, b=5, c=7 on L(2,+)"

    rep.add(timed_check("module.specialized.main", main_numeric))
    rep.add(timed_check("module.specialized.main2", main2_numeric))
    return rep


SUITES = {
    "u-identities": u_identities_suite,
    "grading": grading_suite,
    "tensor": tensor_suite,
    "delta": delta_suite,
    "hom": hom_suite,
    "diagrams": diagrams_suite,
    "modules": modules_suite,
}


def run_suite(name, seed=None, bound=None):
    """Run a named suite (or ``all``) and return one combined report."""
    if name == "all":
        rep = Report("all", seed=seed)
        for key in SUITES:
            rep.extend(run_suite(key, seed=seed, bound=bound))
        return rep
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}") from None
    if name == "hom" and bound is not None:
        rep = fn(seed=seed, bound=bound)
    else:
        rep = fn(seed=seed)
    rep.seed = seed
    return rep
