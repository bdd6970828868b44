from fractions import Fraction

import pytest

from uawkit import randgen
from uawkit.coeff import Q
from uawkit.errors import ZeroBinding
from uawkit.hom import (
    Natural,
    check_diagrams,
    check_prop_motiv,
    check_theorem_main,
    check_theorem_main2,
    default_images,
    injectivity_rank_check,
    natural,
    omega_via,
)
from uawkit.tensor import TensorElement, rho_tilde, sigma_tilde, t_named
from uawkit.uaw import DeltaElement, delta_named, psl2_act
from uawkit.uqsl2 import homogeneous_components
from uawkit.words import evaluate


def T(s):
    return evaluate(s, "tensor")


def D(s):
    return evaluate(s, "delta")


def test_natural_examples():
    assert natural(D("A")) == t_named("Anat")
    assert natural(D("al")) == T("Lam*(a + a^-1) + (b + b^-1)*(c + c^-1)")
    assert natural(D("Om")) == t_named("Omeganat")
    assert natural(DeltaElement.one()) == TensorElement.one()


def test_natural_accepts_words():
    assert natural("B*A") == natural(D("B")) * natural(D("A"))


def test_theorem_main():
    rep = check_theorem_main()
    assert rep.passed
    assert {c.id for c in rep.checks} >= {"main.relation1", "main.relation2", "main.relation3"}


def test_theorem_main_detects_perturbed_a():
    imgs = list(default_images())
    imgs[0] = imgs[0] + T("a")
    rep = check_theorem_main(imgs)
    for n in (2, 3):
        c = rep.get(f"main.relation{n}")
        assert c.status == "fail" and c.residual


def test_theorem_main2():
    assert check_theorem_main2().passed


def test_theorem_main2_detects_dropped_term():
    lam2 = T("Lam^2")
    wrong = t_named("Omeganat") + lam2
    rep = check_theorem_main2(omega_image=wrong)
    assert not rep.passed
    assert omega_via(default_images()) - wrong == -lam2
    assert rep.get("main2.omega").residual == str(-lam2)


def test_diagram_examples():
    A, C, ga = (delta_named(n) for n in ("A", "C", "ga"))
    assert natural(psl2_act("sigma", A)) == t_named("Bnat") == sigma_tilde(t_named("Anat"))
    assert natural(psl2_act("sigma", ga)) == t_named("gammanat") == sigma_tilde(t_named("gammanat"))
    assert natural(psl2_act("rho", C)) == t_named("Anat") == rho_tilde(t_named("Cnat"))


def test_diagrams_small():
    rep = check_diagrams(max_exp=1, full_degree=6)
    assert rep.passed, rep.format_table()


def test_injectivity_degree1():
    rep = injectivity_rank_check(1, "symbolic")
    c = rep.checks[0]
    assert c.status == "pass"
    assert c.detail.startswith("rank 7 of 7")
    assert "certified over Q(q)" in c.detail


def test_injectivity_degree2_specialized():
    rep = injectivity_rank_check(2, "specialized", q_val=2)
    c = rep.checks[0]
    assert c.status == "pass"
    assert "rank 28 of 28" in c.detail
    assert "certified at specialization q=2" in c.detail


def test_injectivity_random_specialization_is_seeded():
    a = injectivity_rank_check(1, "specialized", seed=7).checks[0].detail
    b = injectivity_rank_check(1, "specialized", seed=7).checks[0].detail
    assert a == b


def test_injectivity_detects_duplicated_image():
    imgs = list(default_images())
    imgs[2] = imgs[0]
    rep = injectivity_rank_check(2, "specialized", q_val=2, images=imgs)
    assert not rep.passed
    assert "rank deficiency" in rep.checks[0].residual


def test_injectivity_bound_validation():
    with pytest.raises(ValueError):
        injectivity_rank_check(0)


@pytest.mark.parametrize("abc", [(1, 1, 1), (2, 3, 5), (Fraction(1, 2), -3, Fraction(7, 4))])
def test_prop_motiv(abc):
    assert check_prop_motiv(*abc).passed


def test_prop_motiv_zero():
    with pytest.raises(ZeroBinding):
        check_prop_motiv(0, 1, 1)


# -- properties -----------------------------------------------------------------

def test_natural_is_multiplicative():
    r = randgen.rng(51)
    nat = Natural()
    for _ in range(100):
        u, v = randgen.random_delta(r), randgen.random_delta(r)
        assert nat(u * v) == nat(u) * nat(v)


def test_central_images():
    gens = [T(s) for s in ("e", "f", "k")]
    for n in ("alphanat", "betanat", "gammanat", "Omeganat"):
        v = t_named(n)
        for g in gens:
            assert v * g == g * v


def test_graded_structure_of_images():
    degrees = {"Anat": {0, 1}, "Bnat": {-1, 0}, "Cnat": {-1, 0, 1}}
    for name, want in degrees.items():
        assert set(homogeneous_components(t_named(name))) == want


def test_natural_is_linear():
    u = D("2*A + q*B*C")
    want = t_named("Anat").scale(2) + (t_named("Bnat") * t_named("Cnat")).scale(Q)
    assert natural(u) == want
