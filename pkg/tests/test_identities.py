from fractions import Fraction

import pytest
from mpmath import mp, mpf

from eulersums.core import make_context
from eulersums.identities import (REGISTRY, ParamPoint, get_identity, pt,
                                  verify_identity)

CTX = make_context(30)


def test_registry_shape():
    ids = [e.id for e in REGISTRY]
    assert len(ids) == len(set(ids))
    assert len(REGISTRY) == 31
    for e in REGISTRY:
        assert e.id.startswith("E")
        assert e.equation
        assert e.description
        assert callable(e.lhs) and callable(e.rhs) and callable(e.grid)
        grid = e.grid()
        assert grid, e.id
        assert all(isinstance(p, ParamPoint) for p in grid)


def test_get_identity():
    e = get_identity("E2.13")
    assert e.equation == "(2.13)"
    with pytest.raises(KeyError):
        get_identity("E9.99")


def test_param_point_roundtrip():
    p = pt(a=Fraction(1, 3), s=2)
    d = p.as_dict()
    assert d == {"a": "1/3", "s": "2"}
    assert "a=1/3" in p.label()


@pytest.mark.parametrize("ident", ["E2.13", "E2.17", "E2.21", "E2.24",
                                   "E3.12", "E4.13"])
def test_spot_checks_pass(ident):
    entry = get_identity(ident)
    res = verify_identity(entry, entry.grid()[0], CTX)
    assert res.passed, (ident, str(res.residual))
    assert res.residual <= res.budget


def test_documented_failure_reports_correction():
    entry = get_identity("E2.14")
    assert entry.rhs_corrected is not None
    res = verify_identity(entry, pt(a=Fraction(1, 4), s=2, m=1), CTX)
    assert not res.passed
    assert res.note
    assert res.corrected_residual is not None
    assert res.corrected_residual <= res.budget


def test_corrected_form_only_differs_where_documented():
    # for m = 0 the printed closed form is fine and the entry passes
    entry = get_identity("E2.14")
    res = verify_identity(entry, pt(a=Fraction(1, 4), s=2, m=0), CTX)
    assert res.passed
