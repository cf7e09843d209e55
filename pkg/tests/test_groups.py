import pytest

import conjlab as cj
from conjlab.errors import CapExceeded
from conjlab.groups import FiniteGroup, PermutationRep

from oracles import (naive_centralizer, naive_class_sizes, naive_element_order)


def s3():
    return FiniteGroup(PermutationRep(3), ((1, 0, 2), (1, 2, 0)), name="s3")


def test_enumerate_s3():
    assert s3().order() == 6


def test_enumerate_sl23_matches_order_formula():
    g = cj.sl2(3)
    assert g.order() == 3 * (9 - 1)  # q(q^2 - 1)


def test_enumerate_q8():
    assert cj.quaternion_group().order() == 8


def test_enumeration_is_deterministic_and_closed():
    g = cj.symmetric_group(4)
    elems = g.elements()
    assert elems == cj.symmetric_group(4).elements()
    eset = set(elems)
    for a in elems[:8]:
        for b in elems[:8]:
            assert g.mul(a, b) in eset
        assert g.inv(a) in eset


def test_enumerate_cap_error_names_cap():
    g = FiniteGroup(PermutationRep(5), (tuple([1, 2, 3, 4, 0]),), max_order=3)
    with pytest.raises(CapExceeded) as exc:
        g.elements()
    assert "3" in str(exc.value)
    assert exc.value.cap == 3


def test_element_order():
    g = cj.symmetric_group(4)
    assert g.element_order(g.identity) == 1
    assert g.element_order((1, 0, 2, 3)) == 2
    sl = cj.sl2(5)
    u = (1, 1, 0, 1)
    assert naive_element_order(sl, u) == 5
    assert sl.element_order(u) == 5


def test_primary_decomposition_cyclic6():
    g = cj.cyclic_group(6)
    gen = g.generators[0]
    parts = g.primary_decomposition(gen)
    assert sorted(g.element_order(p) for p in parts) == [2, 3]
    prod = parts[0]
    for p in parts[1:]:
        prod = g.mul(prod, p)
    assert prod == gen


def test_primary_decomposition_order12():
    g = cj.cyclic_group(12)
    gen = g.generators[0]
    parts = g.primary_decomposition(gen)
    assert sorted(g.element_order(p) for p in parts) == [3, 4]


def test_primary_decomposition_p_element_and_identity():
    g = cj.heisenberg(3)
    x = g.generators[0]
    assert g.primary_decomposition(x) == [x]
    assert g.primary_decomposition(g.identity) == []


def test_primary_decomposition_properties():
    from conjlab.intmath import factor, gcd

    g = cj.symmetric_group(6)
    for x in g.elements()[::71]:
        parts = g.primary_decomposition(x)
        orders = [g.element_order(p) for p in parts]
        # pairwise coprime prime powers
        for o in orders:
            assert len(factor(o)) == 1
        for i, a in enumerate(orders):
            for b in orders[i + 1:]:
                assert gcd(a, b) == 1
        # commuting, and the product in any order is x
        for p in parts:
            for q in parts:
                assert g.mul(p, q) == g.mul(q, p)
        for perm in ([*parts], [*reversed(parts)]):
            acc = g.identity
            for p in perm:
                acc = g.mul(acc, p)
            assert acc == x


def test_centralizer_examples():
    g = cj.symmetric_group(4)
    t = (1, 0, 2, 3)  # the transposition (0 1)
    cent = g.centralizer(t)
    oracle = naive_centralizer(g, t)
    assert len(cent) == 4
    assert set(oracle) == set(cent.members)
    assert len(g.centralizer(g.identity)) == 24

    q8 = cj.quaternion_group()
    i = q8.generators[0]
    assert len(q8.centralizer(i)) == 4
    assert set(naive_centralizer(q8, i)) == set(q8.centralizer(i).members)


def test_centralizer_matches_oracle_everywhere():
    for g in (cj.symmetric_group(4), cj.dihedral_group(6), cj.quaternion_group()):
        for cls in g.conjugacy_classes():
            for x in sorted(cls.members):
                assert set(g.centralizer(x).members) == set(naive_centralizer(g, x))


def test_index_examples():
    g = cj.symmetric_group(4)
    assert g.index((1, 0, 2, 3)) == 6  # transposition class
    v = next(x for x in g.elements() if g.class_size(x) == 1)
    assert g.index(v) == 1
    a4 = g.subgroup(tuple(cj.alternating_group(4).generators))
    assert len(a4) == 12
    three_cycle = (1, 2, 0, 3)
    ind = g.index(three_cycle, within=a4)
    assert ind == 4
    assert g.index(three_cycle) % ind == 0  # |x^K| divides |x^G|


def test_conjugacy_classes_s4():
    g = cj.symmetric_group(4)
    assert g.class_sizes() == [1, 3, 6, 6, 8]
    assert naive_class_sizes(g) == [1, 3, 6, 6, 8]


def test_conjugacy_classes_abelian():
    g = cj.cyclic_group(12)
    assert g.class_sizes() == [1] * 12


def test_conjugacy_classes_sl25():
    g = cj.sl2(5)
    # 9 classes; sizes sum to 120 (class equation)
    assert g.class_sizes() == [1, 1, 12, 12, 12, 12, 20, 20, 30]
    assert naive_class_sizes(g) == g.class_sizes()


def test_classes_sorted_and_consistent():
    g = cj.dihedral_group(8)
    classes = g.conjugacy_classes()
    keys = [(c.size, c.representative) for c in classes]
    assert keys == sorted(keys)
    n = g.order()
    assert sum(c.size for c in classes) == n
    for c in classes:
        assert n % c.size == 0
        assert c.size == len(c.members)
        assert c.size * len(g.centralizer(c.representative)) == n


def test_center_examples():
    assert len(cj.quaternion_group().center()) == 2
    assert len(s3().center()) == 1
    assert len(cj.sl2(5).center()) == 2


def test_center_equals_size_one_classes():
    for g in (cj.symmetric_group(4), cj.quaternion_group(), cj.dihedral_group(6)):
        singles = set()
        for c in g.conjugacy_classes():
            if c.size == 1:
                singles |= c.members
        assert singles == set(g.center().members)
        assert len(singles) == len(g.center())


def test_derived_subgroup_examples():
    g = cj.symmetric_group(4)
    derived = g.derived_subgroup()
    assert len(derived) == 12
    assert g.is_normal(derived)
    # quotient by it is abelian
    assert g.quotient(derived).is_abelian()

    assert len(cj.cyclic_group(12).derived_subgroup()) == 1
    sl = cj.sl2(5)
    assert len(sl.derived_subgroup()) == 120  # perfect


def test_subgroup_generated():
    g = cj.symmetric_group(4)
    assert len(g.subgroup_generated([g.identity])) == 1
    assert len(g.subgroup_generated([(1, 0, 2, 3), (0, 1, 3, 2)])) == 4
    assert len(g.subgroup_generated(list(g.generators))) == 24


def test_normal_subgroups_examples():
    assert [len(s) for s in cj.symmetric_group(4).normal_subgroups()] == [1, 4, 12, 24]
    assert [len(s) for s in cj.alternating_group(5).normal_subgroups()] == [1, 60]
    assert [len(s) for s in cj.cyclic_group(6).normal_subgroups()] == [1, 2, 3, 6]


def test_normal_subgroups_are_normal_class_unions():
    g = cj.symmetric_group(4)
    for sub in g.normal_subgroups():
        assert g.is_normal(sub)
        for x in sub.members:
            assert g.class_of(x).members <= sub.members


def test_quotient_sl25_center():
    g = cj.sl2(5)
    q = g.quotient(g.center())
    assert q.order() == 60
    assert q.class_sizes() == [1, 12, 12, 15, 20]  # PSL2(5), i.e. A5


def test_quotient_trivial_and_s4():
    g = cj.symmetric_group(4)
    whole = g.subgroup_generated(list(g.generators))
    assert g.quotient(whole).order() == 1
    v4 = next(s for s in g.normal_subgroups() if len(s) == 4)
    q = g.quotient(v4)
    assert q.order() == 6
    assert not q.is_abelian()  # S4/V4 is S3


def test_quotient_rejects_non_normal():
    g = cj.symmetric_group(4)
    sub = g.subgroup(((1, 0, 2, 3),))
    with pytest.raises(ValueError):
        g.quotient(sub)


def test_quotient_class_sizes_divide_parent(corpus_by_name):
    # Lemma: each quotient class size divides some class size over it
    g = cj.symmetric_group(4)
    v4 = next(s for s in g.normal_subgroups() if len(s) == 4)
    q = g.quotient(v4)
    project = q.rep.coset_rep
    for x in g.elements():
        assert g.class_size(x) % q.class_size(project[x]) == 0


def test_normal_sylow_examples():
    g = cj.sl2(3)
    sub = g.normal_sylow(2)
    assert sub is not None and len(sub) == 8
    assert cj.symmetric_group(4).normal_sylow(2) is None
    c6 = cj.cyclic_group(6)
    assert len(c6.normal_sylow(3)) == 3
    with pytest.raises(ValueError):
        c6.normal_sylow(5)


def test_s4_two_elements_not_closed():
    # (0 1) * (0 2) is a 3-cycle, so the 2-elements of S4 are not closed
    g = cj.symmetric_group(4)
    a = (1, 0, 2, 3)
    b = (2, 1, 0, 3)
    assert g.element_order(g.mul(a, b)) == 3


def test_is_solvable():
    assert cj.symmetric_group(4).is_solvable()
    assert not cj.alternating_group(5).is_solvable()
    assert cj.heisenberg(3).is_solvable()


def test_is_abelian():
    assert cj.cyclic_group(6).is_abelian()
    assert not cj.quaternion_group().is_abelian()


def test_lemma2_iii_commuting_coprime():
    # C6 inside S5: x = product of a 2-cycle and 3-cycle parts
    g = cj.symmetric_group(5)
    x = (1, 0, 2, 3, 4)          # order 2
    y = (0, 1, 3, 4, 2)          # order 3, disjoint support: commutes
    assert g.mul(x, y) == g.mul(y, x)
    cxy = set(g.centralizer(g.mul(x, y)).members)
    assert cxy == set(g.centralizer(x).members) & set(g.centralizer(y).members)


def test_conjugation_equivariance():
    g = cj.symmetric_group(5)
    elems = g.elements()
    for x in elems[::37]:
        for h in elems[::41]:
            assert g.class_size(g.conj(x, h)) == g.class_size(x)
            assert len(g.centralizer(g.conj(x, h))) == len(g.centralizer(x))


def test_quotient_order_product_invariant():
    g = cj.dihedral_group(6)
    for sub in g.normal_subgroups():
        q = g.quotient(sub)
        assert q.order() * len(sub) == g.order()
