import pytest

import conjlab as cj
from conjlab.errors import CapExceeded
from conjlab.predicates import evaluate, is_ca, is_ch, is_f, is_sp, rank

from oracles import naive_centralizer


def test_rank_examples():
    assert rank(cj.heisenberg(3)) == 1
    assert rank(cj.cyclic_group(12)) == 0
    assert rank(cj.sl2(5)) == 3


def test_is_sp_examples():
    ok, witness = is_sp(cj.sl2(7))
    assert ok and witness is None

    ok, witness = is_sp(cj.remark_group(3))
    assert not ok and witness == (3, 9)

    ok, witness = is_sp(cj.symmetric_group(4))
    assert not ok and witness == (3, 6)


def test_is_ch_examples():
    ok, witness = is_ch(cj.gl2(3))
    assert ok and witness is None

    g = cj.symmetric_group(4)
    ok, witness = is_ch(g)
    assert not ok
    x, y = witness
    # the witness really is a commuting noncentral pair with different
    # centralizer orders
    assert g.mul(x, y) == g.mul(y, x)
    assert g.class_size(x) > 1 and g.class_size(y) > 1
    cx, cy = len(naive_centralizer(g, x)), len(naive_centralizer(g, y))
    assert cx != cy
    assert {cx, cy} == {4, 8}

    ok, witness = is_ch(cj.cyclic_group(6))
    assert ok and witness is None


def test_is_ca_examples():
    ok, _ = is_ca(cj.remark_group(3))
    assert ok

    g = cj.symmetric_group(4)
    ok, witness = is_ca(g)
    assert not ok
    (x,) = witness
    cent = naive_centralizer(g, x)
    assert len(cent) == 8  # the (0 1)(2 3)-style centralizer, dihedral
    assert any(g.mul(a, b) != g.mul(b, a) for a in cent for b in cent)

    ok, _ = is_ca(cj.heisenberg(3))
    assert ok
    # all noncentral centralizers have order 9 = p^2
    h = cj.heisenberg(3)
    for c in h.conjugacy_classes():
        if c.size > 1:
            assert len(naive_centralizer(h, c.representative)) == 9


def test_is_f_examples():
    g = cj.symmetric_group(4)
    ok, witness = is_f(g)
    assert not ok
    x, y = witness
    cx = set(naive_centralizer(g, x))
    cy = set(naive_centralizer(g, y))
    assert cx < cy  # proper containment
    assert (len(cx), len(cy)) == (4, 8)

    ok, witness = is_f(cj.agl1(5))
    assert ok and witness is None


def test_is_f_cap():
    with pytest.raises(CapExceeded):
        is_f(cj.symmetric_group(4), cap=10)


def test_sp_iff_centralizer_order_scan():
    # the internal cross-check ran without raising on a varied sample
    for g in (cj.symmetric_group(5), cj.sl2(4), cj.gl2(3), cj.dihedral_group(8),
              cj.remark_group(3), cj.agl1(7)):
        is_sp(g)


def test_inclusion_chain_on_sample():
    for g in (cj.symmetric_group(3), cj.symmetric_group(4), cj.quaternion_group(),
              cj.gl2(3), cj.agl1(5), cj.dihedral_group(8), cj.remark_group(3)):
        r = evaluate(g)
        if r.ca:
            assert r.ch
        if r.ch:
            assert r.f
        if r.sp:
            assert r.ch


def test_witness_present_iff_flag_false():
    for g in (cj.symmetric_group(4), cj.sl2(5), cj.remark_group(3)):
        r = evaluate(g)
        assert (r.sp_witness is not None) == (not r.sp)
        assert (r.ch_witness is not None) == (not r.ch)
        assert (r.ca_witness is not None) == (not r.ca)
        assert (r.f_witness is not None) == (not r.f)


def test_witnesses_deterministic():
    a = evaluate(cj.symmetric_group(4))
    b = evaluate(cj.symmetric_group(4))
    assert a == b


def test_skip_f_over_cap_reports_none():
    r = evaluate(cj.symmetric_group(4), f_cap=10, skip_f_over_cap=True)
    assert r.f is None and r.f_witness is None
