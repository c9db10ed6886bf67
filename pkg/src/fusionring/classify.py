"""Recognition of the extension families and the structural claims they satisfy.

classify() computes family membership flags from the ring alone. The two
families:

* near-group rings over a rank 2 pointed base: dimensions {1, sqrt(2)},
  half the basis invertible, products of non-invertibles landing in the
  pointed part;
* extensions of the Yang-Lee ring: dimensions {1, golden}, every grading
  component of rank 2.

verify_claims() re-checks, on the concrete ring, each structural statement
the families are supposed to satisfy, reporting verified / refuted /
inapplicable per claim. Everything here is decided at the level of the
based ring (structure constants only); the one claim that would need
associator data is always reported inapplicable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import catalog, groups as gr, structure as st
from .numerics import DIM_TOL, GOLDEN, TypeSignature, fp_dimensions, type_signature
from .ring import FusionRing, Subring, closure, find_isomorphism

_SQRT2 = math.sqrt(2.0)

FLAG_ORDER = ("pointed", "yang-lee", "ising", "generalized-ty",
              "yl-extension", "rank2-pointed-extension")


@dataclass(frozen=True)
class Classification:
    pointed: bool
    yang_lee: bool
    ising: bool
    generalized_ty: bool
    yl_extension: bool
    rank2_pointed_extension: bool
    signature: TypeSignature
    evidence: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.yang_lee and self.pointed:
            raise AssertionError("a Yang-Lee ring cannot be pointed")
        if self.ising and not self.generalized_ty:
            raise AssertionError("an Ising ring is a near-group ring")

    def flags(self) -> tuple[str, ...]:
        values = (self.pointed, self.yang_lee, self.ising, self.generalized_ty,
                  self.yl_extension, self.rank2_pointed_extension)
        return tuple(name for name, v in zip(FLAG_ORDER, values) if v)


@dataclass(frozen=True)
class IsingDetection:
    """The three equivalent detectors for an Ising subring."""

    subring: Subring | None
    closure_is_ising: bool
    rank1_component_at_involution: bool
    self_dual_noninvertible: bool


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    status: str  # verified | refuted | inapplicable
    scope: str   # ring-level | categorical
    detail: dict = field(default_factory=dict)


def _noninvertible_products_pointed(ring: FusionRing) -> tuple[bool, tuple[int, ...] | None]:
    noninv = [i for i in range(ring.rank) if not ring.invertible[i]]
    for i in noninv:
        for j in noninv:
            for k in ring.constituents(i, j):
                if not ring.invertible[k]:
                    return False, (i, j, k)
    return True, None


def _is_yang_lee_pair(ring: FusionRing, unit: int, y: int) -> bool:
    row = ring.n[y, y]
    expected = np.zeros(ring.rank, dtype=np.int64)
    expected[unit] = 1
    expected[y] = 1
    return bool(np.array_equal(row, expected)) and ring.dual[y] == y


def classify(ring: FusionRing) -> Classification:
    """Family membership flags plus supporting evidence."""
    sig = type_signature(ring)
    group, emb = st.invertibles(ring)
    grading = st.universal_grading(ring)
    adjoint = st.adjoint_subring(ring)

    pointed = all(ring.invertible)
    yang_lee = (ring.rank == 2 and not pointed
                and _is_yang_lee_pair(ring, 0, 1))
    products_pointed, counterexample = _noninvertible_products_pointed(ring)
    generalized_ty = not pointed and products_pointed
    dims_set = [v for v, _ in sig.entries]
    rank2_ext = (len(dims_set) == 2
                 and abs(dims_set[0] - 1.0) <= DIM_TOL
                 and abs(dims_set[1] - _SQRT2) <= DIM_TOL)
    ising = ring.rank == 3 and find_isomorphism(ring, catalog.ising()) is not None

    yl_ext = False
    canonical_map = None
    if (len(dims_set) == 2
            and abs(dims_set[0] - 1.0) <= DIM_TOL
            and abs(dims_set[1] - GOLDEN) <= DIM_TOL
            and sig.entries[0][1] == sig.entries[1][1]
            and adjoint.rank == 2
            and _is_yang_lee_pair(ring, adjoint.members[0], adjoint.members[1])):
        canonical_map = find_isomorphism(ring, catalog.yl_extension(grading.group))
        yl_ext = canonical_map is not None

    evidence: dict = {
        "type": sig.text(),
        "invertibles_order": group.order,
        "invertibles_name": gr.identify_group(group),
        "grading_order": grading.group.order,
        "grading_name": gr.identify_group(grading.group),
        "adjoint_members": list(adjoint.members),
    }
    if yl_ext:
        evidence["canonical_map"] = list(canonical_map)
    if rank2_ext:
        det = find_ising_subring_unchecked(ring)
        evidence["ising_subring"] = list(det.subring.members) if det.subring else None
    return Classification(pointed, yang_lee, ising, generalized_ty, yl_ext,
                          rank2_ext, sig, evidence)


def find_ising_subring_unchecked(ring: FusionRing) -> IsingDetection:
    """The three Ising detectors, with no precondition check and no cross-assert."""
    noninv = [i for i in range(ring.rank) if not ring.invertible[i]]
    self_dual = any(ring.dual[i] == i for i in noninv)

    grading = st.universal_grading(ring)
    rank1_at_involution = any(
        len(comp) == 1 and grading.group.element_orders[cid] == 2
        for cid, comp in enumerate(grading.components))

    found: Subring | None = None
    target = catalog.ising()
    for i in noninv:
        sub = closure(ring, (i,))
        if sub.rank != 3:
            continue
        mem = list(sub.members)
        small = FusionRing(
            3,
            tuple(mem.index(ring.dual[m]) for m in mem),
            ring.n[np.ix_(mem, mem, mem)].copy(),
        )
        if find_isomorphism(small, target) is not None:
            found = sub
            break
    return IsingDetection(found, found is not None, rank1_at_involution, self_dual)


def find_ising_subring(ring: FusionRing) -> IsingDetection:
    """Ising subring detection for rings with dimensions {1, sqrt(2)}.

    The cheap self-duality test, the grading test and the closure test must
    agree; a disagreement would mean the ring is not actually valid.
    """
    cls = classify(ring)
    if not cls.rank2_pointed_extension:
        raise ValueError("ring does not have dimension set {1, sqrt(2)}")
    det = find_ising_subring_unchecked(ring)
    if not (det.closure_is_ising == det.rank1_component_at_involution
            == det.self_dual_noninvertible):
        raise AssertionError("Ising detectors disagree on a supposedly valid ring")
    return det


# ------------------------------------------------------------------ claims

def _ctx(ring: FusionRing) -> dict:
    cls = classify(ring)
    group, emb = st.invertibles(ring)
    return {
        "cls": cls,
        "rank": ring.rank,
        "grading": st.universal_grading(ring),
        "group": group,
        "emb": emb,
        "adjoint": st.adjoint_subring(ring),
        "sig": cls.signature,
    }


def _claim_gty_products(ring, ctx):
    ok, bad = _noninvertible_products_pointed(ring)
    detail = {} if ok else {"counterexample": list(bad)}
    return ok, detail


def _claim_gty_type(ring, ctx):
    sig = ctx["sig"].entries
    two_n = ctx["group"].order
    ok = (len(sig) == 2
          and abs(sig[0][0] - 1.0) <= DIM_TOL and sig[0][1] == two_n
          and abs(sig[1][0] - _SQRT2) <= DIM_TOL and 2 * sig[1][1] == two_n)
    return ok, {"invertibles": two_n, "type": ctx["sig"].text()}


def _claim_gty_adjoint(ring, ctx):
    ad = ctx["adjoint"]
    ok = ad.rank == 2 and ad.pointed and ad.members == ctx["grading"].components[0]
    return ok, {"adjoint": list(ad.members)}


def _claim_gty_grading_order(ring, ctx):
    ok = ctx["grading"].group.order == ctx["group"].order
    return ok, {"grading_order": ctx["grading"].group.order}


def _claim_gty_transitive(ring, ctx):
    transitive, orbits = st.is_transitive_on_noninvertibles(ring)
    return transitive, {"orbits": [list(o) for o in orbits]}


def _claim_gty_normal(ring, ctx):
    ad = ctx["adjoint"]
    group, emb = ctx["group"], ctx["emb"]
    pos = {b: a for a, b in enumerate(emb)}
    dpos = pos[ad.members[1]]
    core = {0, dpos}
    ok = all(group.table[group.table[a][d]][group.inverse[a]] in core
             for a in range(group.order) for d in core)
    return ok, {"delta": ad.members[1]}


def _claim_gty_ising_odd(ring, ctx):
    det = find_ising_subring_unchecked(ring)
    ok = det.subring is not None
    return ok, {"subring": list(det.subring.members) if det.subring else None}


_claim_gty_ising_elem2 = _claim_gty_ising_odd


def _claim_gty_detectors(ring, ctx):
    det = find_ising_subring_unchecked(ring)
    flags = (det.closure_is_ising, det.rank1_component_at_involution,
             det.self_dual_noninvertible)
    return len(set(flags)) == 1, {"detectors": list(flags)}


def _claim_faithful_iff_cyclic(ring, ctx):
    faithful, cyclic = st.faithful_simples(ring)
    return (len(faithful) > 0) == cyclic, {"faithful": list(faithful), "cyclic": cyclic}


def _claim_ylext_type(ring, ctx):
    sig = ctx["sig"].entries
    n = ctx["group"].order
    ok = (len(sig) == 2
          and abs(sig[0][0] - 1.0) <= DIM_TOL and sig[0][1] == n
          and abs(sig[1][0] - GOLDEN) <= DIM_TOL and sig[1][1] == n)
    return ok, {"invertibles": n, "type": ctx["sig"].text()}


def _claim_ylext_components(ring, ctx):
    data = fp_dimensions(ring)
    for comp in ctx["grading"].components:
        if len(comp) != 2:
            return False, {"component": list(comp)}
        ds = sorted(data.dims[i] for i in comp)
        if abs(ds[0] - 1.0) > DIM_TOL or abs(ds[1] - GOLDEN) > DIM_TOL:
            return False, {"component": list(comp)}
    return True, {"components": len(ctx["grading"].components)}


def _claim_ylext_adjoint(ring, ctx):
    ad = ctx["adjoint"]
    ok = (ad.rank == 2 and not ad.pointed
          and _is_yang_lee_pair(ring, ad.members[0], ad.members[1]))
    return ok, {"adjoint": list(ad.members)}


def _claim_ylext_grading_group(ring, ctx):
    ok = gr.are_isomorphic(ctx["grading"].group, ctx["group"])
    return ok, {"grading_name": gr.identify_group(ctx["grading"].group)}


def _claim_ylext_canonical(ring, ctx):
    perm = find_isomorphism(ring, catalog.yl_extension(ctx["grading"].group))
    return perm is not None, {"map": list(perm) if perm else None}


def _claim_ylext_subrings(ring, ctx):
    grading = ctx["grading"]
    subs = [s for s in st.all_subrings(ring) if not s.pointed]
    supports = set()
    for s in subs:
        sup = frozenset(grading.component_of[i] for i in s.members)
        if gr.generated_subgroup(grading.group, sup) != sup:
            return False, {"subring": list(s.members)}
        supports.add(sup)
    n_groups = len(gr.subgroups(grading.group))
    ok = len(supports) == len(subs) == n_groups
    return ok, {"nonpointed_subrings": len(subs), "subgroups": n_groups}


def _claim_ylext_commutative(ring, ctx):
    ok = ring.is_commutative() == ctx["group"].is_abelian()
    return ok, {"commutative": ring.is_commutative(),
                "abelian": ctx["group"].is_abelian()}


def _claim_ylext_splits(ring, ctx):
    target = catalog.deligne_product(catalog.yang_lee(), catalog.pointed(ctx["group"]))
    perm = find_isomorphism(ring, target)
    return perm is not None, {"map": list(perm) if perm else None}


def _gty(ctx) -> bool:
    return ctx["cls"].rank2_pointed_extension


def _gty_odd(ctx) -> bool:
    return _gty(ctx) and ctx["group"].order % 4 == 2


def _gty_elem2(ctx) -> bool:
    return _gty(ctx) and ctx["grading"].group.is_elementary_abelian_2()


def _ylext(ctx) -> bool:
    return ctx["cls"].yl_extension


def _ylext_small(ctx) -> bool:
    return _ylext(ctx) and ctx["rank"] <= 24


_CLAIMS: tuple[tuple[str, str, object, object], ...] = (
    ("sqrt2-dims-force-pointed-products", "ring-level", _gty, _claim_gty_products),
    ("near-group-type", "ring-level", _gty, _claim_gty_type),
    ("near-group-adjoint-rank2", "ring-level", _gty, _claim_gty_adjoint),
    ("near-group-grading-order", "ring-level", _gty, _claim_gty_grading_order),
    ("invertibles-transitive-on-rest", "ring-level", _gty, _claim_gty_transitive),
    ("adjoint-z2-normal-in-invertibles", "ring-level", _gty, _claim_gty_normal),
    ("ising-subring-when-half-odd", "ring-level", _gty_odd, _claim_gty_ising_odd),
    ("ising-subring-when-elementary-2", "ring-level", _gty_elem2, _claim_gty_ising_elem2),
    ("ising-detectors-agree", "ring-level", _gty, _claim_gty_detectors),
    ("faithful-simple-iff-cyclic-grading", "ring-level", _gty, _claim_faithful_iff_cyclic),
    ("golden-extension-type", "ring-level", _ylext, _claim_ylext_type),
    ("golden-extension-components-rank2", "ring-level", _ylext, _claim_ylext_components),
    ("golden-extension-adjoint", "ring-level", _ylext, _claim_ylext_adjoint),
    ("golden-extension-grading-group", "ring-level", _ylext, _claim_ylext_grading_group),
    ("golden-extension-canonical-rules", "ring-level", _ylext, _claim_ylext_canonical),
    ("nonpointed-subrings-match-subgroups", "ring-level", _ylext_small, _claim_ylext_subrings),
    ("commutative-iff-abelian-group", "ring-level", _ylext, _claim_ylext_commutative),
    ("golden-extension-splits-as-product", "ring-level", _ylext, _claim_ylext_splits),
    ("twisted-unit-component-forces-pointed", "categorical", None, None),
)


def verify_claims(ring: FusionRing) -> list[ClaimReport]:
    """Check every registered structural claim against the ring."""
    ctx = _ctx(ring)
    out: list[ClaimReport] = []
    for claim, scope, applicable, check in _CLAIMS:
        if check is None:
            out.append(ClaimReport(claim, "inapplicable", scope,
                                   {"note": "needs associator data absent from a fusion ring"}))
            continue
        if not applicable(ctx):
            out.append(ClaimReport(claim, "inapplicable", scope))
            continue
        ok, detail = check(ring, ctx)
        out.append(ClaimReport(claim, "verified" if ok else "refuted", scope, detail))
    return out
