import math

import numpy as np
import pytest

import fusionring as fr
from fusionring import catalog as cat
from fusionring import groups as gr
from fusionring import structure as st
from fusionring.catalog import GTYSpec
from fusionring.numerics import fp_dimensions, type_signature

SMALL_GROUPS = ["Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3",
                "Z7", "Z8", "Z2xZ4", "D4", "Q8"]


def test_pointed_is_the_group_ring():
    g = gr.named_group("S3")
    r = cat.pointed(g)
    assert r.rank == 6
    assert all(r.invertible)
    assert r.dual == g.inverse
    assert not r.is_commutative()
    for a in range(6):
        for b in range(6):
            assert r.constituents(a, b) == (g.table[a][b],)


def test_pointed_accepts_group_names():
    assert cat.pointed("Z4").rank == 4
    with pytest.raises(gr.GroupError):
        cat.pointed("F20")


def test_yang_lee_rules():
    r = cat.yang_lee()
    assert r.rank == 2 and r.dual == (0, 1)
    assert fr.multiply(r, 1, 1).coeffs == (1, 1)
    assert r.labels == ("1", "Y")


def test_ising_rules():
    r = cat.ising()
    assert r.rank == 3 and r.dual == (0, 1, 2)
    assert fr.multiply(r, 2, 2).coeffs == (1, 1, 0)   # X.X = 1 + d
    assert fr.multiply(r, 1, 2).coeffs == (0, 0, 1)   # d.X = X
    assert fr.multiply(r, 1, 1).coeffs == (1, 0, 0)
    assert abs(fp_dimensions(r).total - 4) <= 1e-9


@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_catalog_rings_verify(name):
    assert fr.verify_axioms(cat.pointed(name)) == []
    assert fr.verify_axioms(cat.yl_extension(name)) == []


def test_deligne_product_shape_and_total():
    d = cat.deligne_product(cat.ising(), cat.yang_lee())
    assert d.rank == 6
    assert fr.verify_axioms(d) == []
    expected = 4 * (5 + math.sqrt(5)) / 2
    assert abs(fp_dimensions(d).total - expected) <= 1e-9
    assert d.labels[0] == "1*1"


def test_deligne_product_unit_factor_is_identity():
    d = cat.deligne_product(cat.ising(), cat.pointed("Z1"))
    assert fr.find_isomorphism(d, cat.ising()) is not None


def test_deligne_product_associative_up_to_iso():
    a, b, c = cat.yang_lee(), cat.pointed("Z2"), cat.yang_lee()
    left = cat.deligne_product(cat.deligne_product(a, b), c)
    right = cat.deligne_product(a, cat.deligne_product(b, c))
    assert left.rank == 8
    assert fr.find_isomorphism(left, right) is not None


def test_yl_extension_trivial_group_is_yang_lee():
    assert fr.find_isomorphism(cat.yl_extension("Z1"), cat.yang_lee()) is not None


def test_yl_extension_rules_nonabelian():
    g = gr.symmetric3()
    r = cat.yl_extension(g)
    m = 6
    for a in range(m):
        for b in range(m):
            ab = g.table[a][b]
            assert fr.multiply(r, a, b).coeffs[ab] == 1            # d d
            assert fr.multiply(r, a, m + b).coeffs[m + ab] == 1    # d Y
            ba = g.table[b][a]
            assert fr.multiply(r, m + b, a).coeffs[m + ba] == 1    # Y d
            out = fr.multiply(r, m + a, m + b).coeffs               # Y Y
            assert out[ab] == 1 and out[m + ab] == 1 and sum(out) == 2
    assert not r.is_commutative()
    assert cat.yl_extension("Z6").is_commutative()


def test_yl_extension_labels_and_duality():
    r = cat.yl_extension("Z3")
    assert r.labels == ("d[e]", "d[g1]", "d[g2]", "Y[e]", "Y[g1]", "Y[g2]")
    assert r.dual == (0, 2, 1, 3, 5, 4)


def ising_spec():
    z2 = gr.cyclic(2)
    return GTYSpec(grading_group=z2, index2_subgroup=(0,),
                   invertibles=z2, delta=1, quotient_map=(0, 0))


def test_generalized_ty_rebuilds_ising():
    ring = cat.generalized_ty(ising_spec())
    assert ring is not None
    assert fr.find_isomorphism(ring, cat.ising()) is not None


def test_generalized_ty_rank6():
    u = gr.named_group("Z2xZ2")
    g = gr.named_group("Z4")
    spec = GTYSpec(grading_group=u, index2_subgroup=(0, 1),
                   invertibles=g, delta=2, quotient_map=(0, 1, 0, 1))
    ring = cat.generalized_ty(spec)
    assert ring is not None
    assert fr.verify_axioms(ring) == []
    assert type_signature(ring).text() == "(1,4; 1.41421356237,2)"
    group, _ = st.invertibles(ring)
    assert gr.identify_group(group) == "Z4"


def test_generalized_ty_spec_validation():
    z2 = gr.cyclic(2)
    z4 = gr.cyclic(4)
    d4 = gr.dihedral(4)
    with pytest.raises(gr.GroupError):  # delta not of order 2
        cat.generalized_ty(GTYSpec(z2, (0,), z2, 0, (0, 0)))
    with pytest.raises(gr.GroupError):  # sizes disagree
        cat.generalized_ty(GTYSpec(z4, (0, 2), z2, 1, (0, 0)))
    reflection = 4  # d4 reflections are non-central order-2 elements
    assert d4.element_orders[reflection] == 2 and reflection not in d4.center
    with pytest.raises(gr.GroupError):  # delta not central
        cat.generalized_ty(GTYSpec(d4, tuple(gr.index2_subgroups(d4)[0]),
                                   d4, reflection, tuple(0 for _ in range(8))))
    with pytest.raises(gr.GroupError):  # map is not a homomorphism
        cat.generalized_ty(GTYSpec(z4, (0, 2), z4, 2, (0, 0, 2, 2)))
    with pytest.raises(gr.GroupError):  # kernel too large
        cat.generalized_ty(GTYSpec(z4, (0, 2), z4, 2, (0, 0, 0, 0)))


def test_enumerate_yang_lee_base():
    for name in ("Z1", "Z4", "S3"):
        rings = cat.enumerate_extensions("yang-lee", name)
        assert len(rings) == 1
        assert fr.find_isomorphism(rings[0], cat.yl_extension(name)) is not None


@pytest.mark.parametrize("name,count", [
    ("Z1", 1), ("Z2", 3), ("Z3", 1), ("Z4", 4), ("Z2xZ2", 6), ("Z5", 1),
    ("Z6", 3), ("S3", 3), ("Z7", 1), ("Z8", 4), ("Z2xZ4", 14), ("D4", 14),
    ("Q8", 4),
])
def test_enumerate_pointed_z2_counts(name, count):
    rings = cat.enumerate_extensions("pointed-z2", name)
    assert len(rings) == count
    for ring in rings:
        assert fr.verify_axioms(ring) == []


def test_enumerate_pointed_z2_z2_contains_ising():
    rings = cat.enumerate_extensions("pointed-z2", "Z2")
    assert any(fr.find_isomorphism(r, cat.ising()) is not None for r in rings)
    pointed_counts = sorted(sum(r.invertible) for r in rings)
    assert pointed_counts == [2, 4, 4]


def test_enumerate_outputs_pairwise_nonisomorphic():
    rings = cat.enumerate_extensions("pointed-z2", "Z2xZ2")
    for i in range(len(rings)):
        for j in range(i + 1, len(rings)):
            assert fr.find_isomorphism(rings[i], rings[j]) is None


def test_enumerate_contains_ising_times_z2():
    target = cat.deligne_product(cat.ising(), cat.pointed("Z2"))
    rings = cat.enumerate_extensions("pointed-z2", "Z2xZ2")
    assert any(fr.find_isomorphism(target, r) is not None for r in rings)


def test_enumerate_rejects_large_or_unknown():
    with pytest.raises(ValueError):
        cat.enumerate_extensions("pointed-z2", "Z16")
    with pytest.raises(ValueError):
        cat.enumerate_extensions("frobenius", "Z2")


def test_gty_outputs_have_normal_adjoint_z2():
    for name in ("Z4", "Z2xZ2", "Z6", "Z8"):
        for ring in cat.enumerate_extensions("pointed-z2", name):
            if all(ring.invertible):
                continue
            group, emb = st.invertibles(ring)
            delta = st.adjoint_subring(ring).members[1]
            pos = emb.index(delta)
            for a in range(group.order):
                conj = group.table[group.table[a][pos]][group.inverse[a]]
                assert conj in (0, pos)
