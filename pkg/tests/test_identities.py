import pytest

from uawkit.identities import (
    CORE_GROUPS,
    GROUPS,
    REGISTRY,
    check_identities,
    check_identity,
    group,
    identity,
)

import oracles as o

IDS = [i.id for i in REGISTRY]
# the naive rewriting oracle needs about ten seconds for e^4 f^4
ORACLE_IDS = [i for i in IDS if i != "ef_power.t4"]


@pytest.mark.parametrize("ident_id", IDS)
def test_identity_holds(ident_id):
    c = check_identity(ident_id)
    assert c.status == "pass", c.residual


@pytest.mark.parametrize("ident_id", ORACLE_IDS)
def test_identity_holds_in_oracle(ident_id):
    ident = identity(ident_id)
    diff = o.add(o.u_expr(ident.lhs), o.scale(o.u_expr(ident.rhs), -1))
    assert diff == {}


def test_core_count():
    assert sum(len(group(g)) for g in CORE_GROUPS) == 45
    assert set(CORE_GROUPS) <= set(GROUPS)


def test_ids_unique():
    assert len(set(IDS)) == len(IDS)


def test_sign_flip_is_detected():
    bad = identity("product.xy").with_rhs("-(" + identity("product.xy").rhs + ")")
    c = check_identity(bad)
    assert c.status == "fail" and c.residual
    diff = o.add(o.u_expr(bad.lhs), o.scale(o.u_expr(bad.rhs), -1))
    assert diff != {}


def test_report_ids():
    rep = check_identities(group("equitable"))
    assert [c.id for c in rep.checks] == [
        "identity.equitable.xy", "identity.equitable.yz", "identity.equitable.zx",
    ]
    assert rep.passed


def test_unknown_identity():
    with pytest.raises(KeyError):
        identity("no.such")
