import pytest

import conjlab as cj
from conjlab.classifier import Verdict, classify, check_corollary1, find_frobenius_structure


def test_find_frobenius_agl15():
    fs = find_frobenius_structure(cj.agl1(5))
    assert fs is not None
    assert len(fs.kernel) == 5
    assert fs.complement_order == 4
    assert fs.complement is not None and len(fs.complement) == 4
    assert fs.kernel.members & fs.complement.members == {cj.agl1(5).identity}


def test_find_frobenius_type3_quotient():
    g = cj.type3_frobenius(7, 3)
    q = g.quotient(g.center())
    fs = find_frobenius_structure(q)
    assert fs is not None
    assert len(fs.kernel) == 49
    assert fs.complement_order == 3


def test_find_frobenius_s4_none():
    assert find_frobenius_structure(cj.symmetric_group(4)) is None


def test_find_frobenius_rejects_abelian():
    with pytest.raises(ValueError):
        find_frobenius_structure(cj.cyclic_group(6))


def test_classify_type_i():
    g = cj.direct_product(cj.cyclic_group(5), cj.to_permutation(cj.heisenberg(3)))
    c = classify(g)
    assert c.verdict is Verdict.TYPE_I
    assert c.evidence["p"] == 3
    assert c.evidence["abelian_factor_order"] == 5
    assert c.evidence["sylow_order"] == 27


def test_classify_type_ii():
    g = cj.direct_product(cj.agl1(8), cj.cyclic_group(3))
    c = classify(g)
    assert c.verdict is Verdict.TYPE_II
    assert c.evidence["kernel_preimage_order"] == 24


def test_classify_type_iii():
    c = classify(cj.type3_frobenius(7, 3))
    assert c.verdict is Verdict.TYPE_III
    assert c.evidence["p"] == 7
    assert c.evidence["center_order"] == 7  # Z(P) = Z cap P has order 7


def test_classify_type_iv():
    c = classify(cj.sl2(7))
    assert c.verdict is Verdict.TYPE_IV
    assert c.evidence["q"] == 7
    assert c.evidence["derived_order"] == 336
    assert "fingerprint" in c.evidence["method"]


def test_classify_not_sp_witness():
    c = classify(cj.gl2(3))
    assert c.verdict is Verdict.NOT_SP
    assert c.witness == (6, 12)


def test_classify_abelian():
    assert classify(cj.cyclic_group(12)).verdict is Verdict.ABELIAN
    assert classify(cj.elementary_abelian_group(3, 2)).verdict is Verdict.ABELIAN


def test_classify_sl23_is_type_iii():
    # q = 3 is excluded from clause IV (needs q > 3); the group lands in III
    c = classify(cj.sl2(3))
    assert c.verdict is Verdict.TYPE_III
    assert c.evidence["sylow_order"] == 8  # the quaternion Sylow 2-subgroup


def test_classify_sl25_times_c3_type_iv():
    g = cj.direct_product(cj.to_permutation(cj.sl2(5)), cj.cyclic_group(3))
    c = classify(g)
    assert c.verdict is Verdict.TYPE_IV
    assert c.evidence["q"] == 5
    assert c.evidence["derived_order"] == 120


def test_classify_verdict_iff_sp():
    for g in (cj.symmetric_group(4), cj.remark_group(3), cj.gl2(3)):
        c = classify(g)
        assert c.verdict is Verdict.NOT_SP
        a, b = c.witness
        assert b % a == 0 and a != b
        nset = set(cj.n_set(g))
        assert {a, b} <= nset


def test_all_matching_lists_every_passing_type():
    c = classify(cj.heisenberg(3))
    assert c.verdict is Verdict.TYPE_I
    assert "TypeI" in c.all_matching


def test_classify_type_v_on_bundled_cover():
    from conjlab import verify
    from conjlab.specio import load_group_spec

    path = verify.default_schur_cover_path()
    if path is None:
        pytest.skip("bundled cover file not present")
    g = load_group_spec(path)
    c = classify(g)
    assert c.verdict is Verdict.TYPE_V
    assert c.evidence["derived_order"] == 2160
    assert c.evidence["derived_N"] == [72, 90, 120]


def test_check_corollary1():
    assert check_corollary1(cj.agl1(8))
    assert check_corollary1(cj.type3_frobenius(5, 2))
    assert check_corollary1(cj.direct_product(cj.agl1(5), cj.cyclic_group(7)))


def test_check_corollary1_precondition():
    with pytest.raises(ValueError):
        check_corollary1(cj.sl2(5))  # rank 3
    with pytest.raises(ValueError):
        check_corollary1(cj.symmetric_group(4))  # not SP
