"""Builders for the stock rings and the two extension families.

Group arguments accept either a FiniteGroup or one of the registered group
names (Z1..Z16, Z2xZ2, Z2xZ4, D4, Q8, S3).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import groups as gr
from .groups import FiniteGroup, GroupError
from .ring import FusionRing, find_isomorphism, verify_axioms


def _as_group(g) -> FiniteGroup:
    if isinstance(g, FiniteGroup):
        return g
    if isinstance(g, str):
        return gr.named_group(g)
    raise GroupError(f"expected a group or group name, got {type(g).__name__}")


def pointed(g) -> FusionRing:
    """Group ring of g: every basis element is invertible."""
    group = _as_group(g)
    m = group.order
    n = np.zeros((m, m, m), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            n[a, b, group.table[a][b]] = 1
    labels = tuple(group.element_name(a) for a in range(m))
    return FusionRing(m, group.inverse, n, labels)


def yang_lee() -> FusionRing:
    """Rank 2 with Y * Y = 1 + Y."""
    n = np.zeros((2, 2, 2), dtype=np.int64)
    n[0, 0, 0] = n[0, 1, 1] = n[1, 0, 1] = 1
    n[1, 1, 0] = n[1, 1, 1] = 1
    return FusionRing(2, (0, 1), n, ("1", "Y"))


def ising() -> FusionRing:
    """Rank 3 with d * d = 1, d * X = X * d = X, X * X = 1 + d."""
    n = np.zeros((3, 3, 3), dtype=np.int64)
    for a in (0, 1):
        for b in (0, 1):
            n[a, b, a ^ b] = 1
    n[0, 2, 2] = n[2, 0, 2] = n[1, 2, 2] = n[2, 1, 2] = 1
    n[2, 2, 0] = n[2, 2, 1] = 1
    return FusionRing(3, (0, 1, 2), n, ("1", "d", "X"))


def deligne_product(r1: FusionRing, r2: FusionRing) -> FusionRing:
    """Product ring on pairs of basis elements, multiplied slotwise."""
    n = np.einsum("ijk,abc->iajbkc", r1.n, r2.n).reshape(
        r1.rank * r2.rank, r1.rank * r2.rank, r1.rank * r2.rank)
    dual = tuple(r1.dual[i] * r2.rank + r2.dual[a]
                 for i in range(r1.rank) for a in range(r2.rank))
    labels = tuple(f"{r1.label(i)}*{r2.label(a)}"
                   for i in range(r1.rank) for a in range(r2.rank))
    return FusionRing(r1.rank * r2.rank, dual, n, labels)


def yl_extension(g) -> FusionRing:
    """Extension of the Yang-Lee ring by a finite group.

    Basis d_g (invertible) and Y_g for g in the group, with
    d_g d_h = d_gh, d_g Y_h = Y_gh, Y_h d_g = Y_hg, Y_g Y_h = d_gh + Y_gh.
    """
    group = _as_group(g)
    m = group.order
    rank = 2 * m
    t = group.table
    n = np.zeros((rank, rank, rank), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            ab = t[a][b]
            n[a, b, ab] = 1
            n[a, m + b, m + ab] = 1
            n[m + a, b, m + ab] = 1
            n[m + a, m + b, ab] = 1
            n[m + a, m + b, m + ab] = 1
    dual = tuple(group.inverse[a] for a in range(m)) + \
        tuple(m + group.inverse[a] for a in range(m))
    labels = tuple(f"d[{group.element_name(a)}]" for a in range(m)) + \
        tuple(f"Y[{group.element_name(a)}]" for a in range(m))
    return FusionRing(rank, dual, n, labels)


@dataclass(frozen=True)
class GTYSpec:
    """Data for a near-group style extension of the rank 2 pointed ring.

    grading_group U of order 2n, an index 2 subgroup of it, an invertibles
    group G of order 2n with a chosen central order-2 element delta, and a
    surjective map G -> U with image the subgroup and kernel {e, delta}.
    """

    grading_group: FiniteGroup
    index2_subgroup: tuple[int, ...]
    invertibles: FiniteGroup
    delta: int
    quotient_map: tuple[int, ...]


def generalized_ty(spec: GTYSpec) -> FusionRing | None:
    """Build the ring described by the spec; None when the axioms fail.

    Inconsistent spec data (delta not central of order 2, quotient map not a
    homomorphism with kernel {e, delta} onto the subgroup) raises GroupError.
    """
    u, g = spec.grading_group, spec.invertibles
    u0 = tuple(sorted(spec.index2_subgroup))
    q = spec.quotient_map
    m = g.order
    if u.order != m or 2 * len(u0) != u.order:
        raise GroupError("grading group must have twice the subgroup's order, equal to |G|")
    if gr.generated_subgroup(u, u0) != frozenset(u0):
        raise GroupError("index2_subgroup is not a subgroup")
    if not (0 < spec.delta < m) or g.element_orders[spec.delta] != 2:
        raise GroupError("delta must have order 2")
    if spec.delta not in g.center:
        raise GroupError("delta must be central")
    if len(q) != m or any(not 0 <= x < u.order for x in q):
        raise GroupError("quotient map must assign a grading element to every invertible")
    if set(q) != set(u0):
        raise GroupError("quotient map must cover exactly the index 2 subgroup")
    for a in range(m):
        for b in range(m):
            if q[g.table[a][b]] != u.table[q[a]][q[b]]:
                raise GroupError("quotient map is not a homomorphism")
    if {a for a in range(m) if q[a] == 0} != {0, spec.delta}:
        raise GroupError("quotient map kernel must be exactly {e, delta}")

    coset = [x for x in range(u.order) if x not in set(u0)]
    half = len(coset)
    rank = m + half
    xpos = {x: m + a for a, x in enumerate(coset)}
    fibers = {w: [a for a in range(m) if q[a] == w] for w in u0}
    n = np.zeros((rank, rank, rank), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            n[a, b, g.table[a][b]] = 1
    for a in range(m):
        for x in coset:
            n[a, xpos[x], xpos[u.table[q[a]][x]]] = 1
            n[xpos[x], a, xpos[u.table[x][q[a]]]] = 1
    for x in coset:
        for y in coset:
            w = u.table[x][y]
            for a in fibers[w]:
                n[xpos[x], xpos[y], a] = 1
    dual = tuple(g.inverse[a] for a in range(m)) + \
        tuple(xpos[u.inverse[x]] for x in coset)
    labels = tuple(g.element_name(a) for a in range(m)) + \
        tuple(f"X[{x}]" for x in coset)
    ring = FusionRing(rank, dual, n, labels)
    return ring if not verify_axioms(ring) else None


def _ring_sort_key(ring: FusionRing):
    from .numerics import fp_dimensions
    dims = tuple(round(d, 9) for d in sorted(fp_dimensions(ring).dims))
    return (ring.rank, dims, sum(ring.invertible), ring.n.tobytes())


def _ring_fingerprint(ring: FusionRing):
    from .numerics import fp_dimensions
    dims = tuple(round(d, 6) for d in sorted(fp_dimensions(ring).dims))
    return (ring.rank, sum(ring.invertible), dims)


def _dedup_rings(rings: list[FusionRing]) -> list[FusionRing]:
    kept: list[FusionRing] = []
    for ring in sorted(rings, key=_ring_sort_key):
        fp = _ring_fingerprint(ring)
        if not any(fp == _ring_fingerprint(r) and find_isomorphism(ring, r) is not None
                   for r in kept):
            kept.append(ring)
    return kept


def enumerate_extensions(base: str, u) -> list[FusionRing]:
    """All rings extending the base with the given grading group, up to isomorphism.

    base "yang-lee" yields exactly one ring per group. base "pointed-z2"
    yields the near-group family (identity component of the universal
    grading equal to the base) plus the pointed extensions, which arise from
    central extensions of the grading group by Z2.
    """
    group = _as_group(u)
    if group.order > 8:
        raise ValueError("extension enumeration supports grading groups of order at most 8")
    if base == "yang-lee":
        return [yl_extension(group)]
    if base != "pointed-z2":
        raise ValueError(f"unknown base {base!r}; expected 'pointed-z2' or 'yang-lee'")
    out: list[FusionRing] = []
    if group.order % 2 == 0:
        for u0 in gr.index2_subgroups(group):
            u0_group, embed = gr.subgroup_group(group, u0)
            for g in gr.groups_of_order(group.order):
                for delta in gr.central_elements_of_order2(g):
                    quot, proj = gr.quotient_group(g, gr.generated_subgroup(g, (delta,)))
                    for phi in gr.iter_isomorphisms(quot, u0_group):
                        qmap = tuple(embed[phi[proj[a]]] for a in range(g.order))
                        ring = generalized_ty(GTYSpec(group, u0, g, delta, qmap))
                        if ring is not None:
                            out.append(ring)
    for ext in gr.central_extensions_by_z2(group):
        out.append(pointed(ext))
    return _dedup_rings(out)
