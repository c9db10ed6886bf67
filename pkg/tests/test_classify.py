import numpy as np
import pytest

import fusionring as fr
from fusionring import catalog as cat
from fusionring.classify import find_ising_subring_unchecked
from fusionring.ring import FusionRing


def ty_z3():
    """Rank 4 near-group ring over Z3: X.X = 1 + a + a^2, dimension sqrt(3)."""
    n = np.zeros((4, 4, 4), dtype=np.int64)
    for i in range(3):
        for j in range(3):
            n[i, j, (i + j) % 3] = 1
    for i in range(3):
        n[i, 3, 3] = 1
        n[3, i, 3] = 1
    n[3, 3, 0] = n[3, 3, 1] = n[3, 3, 2] = 1
    return FusionRing(4, (0, 2, 1, 3), n, labels=("1", "a", "aa", "X"))


def flags_of(ring):
    return fr.classify(ring).flags()


def test_ty_z3_is_a_valid_ring():
    assert fr.verify_axioms(ty_z3()) == []


def test_flag_table():
    assert flags_of(cat.pointed("Z1")) == ("pointed",)
    assert flags_of(cat.pointed("Z4")) == ("pointed",)
    # Yang-Lee is the trivial (n = 1) member of its own extension family,
    # just as Ising is the n = 1 near-group ring
    assert flags_of(cat.yang_lee()) == ("yang-lee", "yl-extension")
    assert flags_of(cat.ising()) == ("ising", "generalized-ty",
                                     "rank2-pointed-extension")
    assert flags_of(cat.yl_extension("Z3")) == ("yl-extension",)
    assert flags_of(cat.deligne_product(cat.ising(), cat.pointed("Z2"))) == \
        ("generalized-ty", "rank2-pointed-extension")
    # sqrt(3) dimensions: near-group but outside the sqrt(2) family
    assert flags_of(ty_z3()) == ("generalized-ty",)


def test_yl_extension_flag_requires_canonical_rules():
    # same type signature, wrong fusion rules: Yang-Lee x Yang-Lee has type
    # (1,1; phi,2; phi^2,1), so it is filtered by the type test already
    d = cat.deligne_product(cat.yang_lee(), cat.yang_lee())
    cls = fr.classify(d)
    assert not cls.yl_extension


def test_classification_evidence():
    cls = fr.classify(cat.ising())
    assert cls.evidence["ising_subring"] == [0, 1, 2]
    assert cls.evidence["invertibles_name"] == "Z2"

    cls = fr.classify(cat.yl_extension("Z2xZ2"))
    assert cls.evidence["grading_name"] == "Z2xZ2"
    assert "canonical_map" in cls.evidence


def test_find_ising_subring_on_ising():
    det = fr.find_ising_subring(cat.ising())
    assert det.subring is not None and det.subring.members == (0, 1, 2)
    assert det.closure_is_ising and det.rank1_component_at_involution \
        and det.self_dual_noninvertible


def test_find_ising_subring_in_product():
    r = cat.deligne_product(cat.ising(), cat.pointed("Z3"))
    det = fr.find_ising_subring(r)
    assert det.subring is not None
    assert len(det.subring.members) == 3


def test_find_ising_subring_absent_when_no_self_dual():
    # grading Z4: the two sqrt(2) objects are dual to each other, not self-dual
    rings = [r for r in cat.enumerate_extensions("pointed-z2", "Z4")
             if not all(r.invertible)]
    assert rings
    for r in rings:
        det = fr.find_ising_subring(r)
        assert det.subring is None
        assert not det.closure_is_ising
        assert not det.rank1_component_at_involution
        assert not det.self_dual_noninvertible


def test_find_ising_subring_precondition():
    with pytest.raises(ValueError):
        fr.find_ising_subring(cat.pointed("Z4"))
    with pytest.raises(ValueError):
        fr.find_ising_subring(cat.yl_extension("Z2"))
    with pytest.raises(ValueError):
        fr.find_ising_subring(ty_z3())


def claim_status(ring):
    return {rep.claim: rep.status for rep in fr.verify_claims(ring)}


def test_claims_on_ising():
    status = claim_status(cat.ising())
    assert status["near-group-type"] == "verified"
    assert status["ising-subring-when-half-odd"] == "verified"   # n = 1
    assert status["ising-subring-when-elementary-2"] == "verified"
    assert status["invertibles-transitive-on-rest"] == "verified"
    assert status["faithful-simple-iff-cyclic-grading"] == "verified"
    assert status["golden-extension-type"] == "inapplicable"
    assert status["twisted-unit-component-forces-pointed"] == "inapplicable"


def test_claims_on_yl_extension_z4():
    status = claim_status(cat.yl_extension("Z4"))
    for claim in ("golden-extension-type", "golden-extension-components-rank2",
                  "golden-extension-adjoint", "golden-extension-grading-group",
                  "golden-extension-canonical-rules",
                  "nonpointed-subrings-match-subgroups",
                  "commutative-iff-abelian-group",
                  "golden-extension-splits-as-product"):
        assert status[claim] == "verified", claim
    assert status["near-group-type"] == "inapplicable"


def test_claims_on_nonabelian_yl_extension():
    reports = {r.claim: r for r in fr.verify_claims(cat.yl_extension("S3"))}
    rep = reports["commutative-iff-abelian-group"]
    assert rep.status == "verified"
    assert rep.detail == {"commutative": False, "abelian": False}
    assert reports["golden-extension-splits-as-product"].status == "verified"


def test_claims_on_pointed_ring_all_inapplicable():
    assert set(claim_status(cat.pointed("Z2")).values()) == {"inapplicable"}


def test_claims_on_ty_z3_all_inapplicable():
    # near-group ring outside the sqrt(2) family: the theorems do not apply
    assert set(claim_status(ty_z3()).values()) == {"inapplicable"}


def test_categorical_claim_scope():
    reports = fr.verify_claims(cat.ising())
    cat_scoped = [r for r in reports if r.scope == "categorical"]
    assert len(cat_scoped) == 1
    assert cat_scoped[0].status == "inapplicable"


def test_no_refutations_across_catalog_and_enumerations():
    rings = [cat.ising(), cat.yang_lee(), cat.pointed("Z6"), cat.pointed("S3"),
             cat.yl_extension("Z6"), cat.yl_extension("Q8"), ty_z3(),
             cat.deligne_product(cat.ising(), cat.pointed("Z2"))]
    for name in ("Z2", "Z4", "Z2xZ2", "Z6"):
        rings.extend(cat.enumerate_extensions("pointed-z2", name))
    for ring in rings:
        for rep in fr.verify_claims(ring):
            assert rep.status != "refuted", (rep.claim, ring.rank)


def test_unchecked_detection_has_no_precondition():
    det = find_ising_subring_unchecked(cat.yang_lee())
    assert det.subring is None
    assert det.self_dual_noninvertible  # Y is self-dual; no sqrt(2) meaning here
