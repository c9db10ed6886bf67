"""Fusion rings as integer structure-constant tensors over a fixed basis.

A ring of rank r stores its multiplicities in an r x r x r tensor n, where
n[i][j][k] counts how often basis element k appears in the product i * j.
Index 0 is always the unit and duality is a permutation of the basis.

Validation happens in two layers. Shape and typing problems (wrong tensor
dimensions, non-permutation duality, negative entries) raise StructuralError
at construction time. The ring axioms themselves (dual involution, unit
rows, duality pairing, reciprocity, associativity) are checked by
verify_axioms, which reports every violation instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

AXIOM_DUAL = "dual-involution"
AXIOM_UNIT = "unit"
AXIOM_DUALITY = "duality"
AXIOM_FROBENIUS = "frobenius-reciprocity"
AXIOM_ASSOCIATIVITY = "associativity"


class StructuralError(ValueError):
    """Malformed ring data: wrong shapes, bad dual permutation, negative entries."""


@dataclass(frozen=True, eq=False)
class FusionRing:
    """Immutable carrier for (rank, duality permutation, structure constants)."""

    rank: int
    dual: tuple[int, ...]
    n: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        r = self.rank
        if r < 1:
            raise StructuralError("rank must be at least 1")
        arr = np.asarray(self.n)
        if arr.shape != (r, r, r):
            raise StructuralError(f"N tensor has shape {arr.shape}, expected {(r, r, r)}")
        if not np.issubdtype(arr.dtype, np.integer):
            raise StructuralError("structure constants must be integers")
        if arr.size and arr.min() < 0:
            i, j, k = (int(x) for x in np.argwhere(arr < 0)[0])
            raise StructuralError(f"negative structure constant at ({i},{j},{k})")
        dual = tuple(int(x) for x in self.dual)
        if len(dual) != r or sorted(dual) != list(range(r)):
            raise StructuralError("duality must be a permutation of the basis")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != r:
                raise StructuralError("labels must name every basis element")
            object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "dual", dual)
        arr = np.ascontiguousarray(arr, dtype=np.int64)
        arr.setflags(write=False)
        object.__setattr__(self, "n", arr)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def left_matrix(self, i: int) -> np.ndarray:
        """Matrix of left multiplication by basis element i: M[k][j] = n[i][j][k]."""
        return self.n[i].T

    def constituents(self, i: int, j: int) -> tuple[int, ...]:
        return tuple(int(k) for k in np.nonzero(self.n[i, j])[0])

    @cached_property
    def invertible(self) -> tuple[bool, ...]:
        """invertible[i] is true when i * dual(i) is exactly the unit."""
        flags = []
        for i in range(self.rank):
            row = self.n[i, self.dual[i]]
            flags.append(row[0] == 1 and int(row.sum()) == 1)
        return tuple(flags)

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.n, self.n.transpose(1, 0, 2)))

    def __repr__(self) -> str:
        return f"FusionRing(rank={self.rank})"


@dataclass(frozen=True)
class RingElement:
    """Nonnegative integer combination of basis elements."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        cleaned = tuple(int(c) for c in self.coeffs)
        if any(c < 0 for c in cleaned):
            raise StructuralError("coefficients must be nonnegative")
        object.__setattr__(self, "coeffs", cleaned)

    def vector(self) -> np.ndarray:
        return np.asarray(self.coeffs, dtype=np.int64)


@dataclass(frozen=True)
class Subring:
    """A closed subset of the basis, tagged pointed when every member is invertible."""

    members: tuple[int, ...]
    pointed: bool

    @property
    def rank(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class AxiomViolation:
    axiom: str
    at: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.axiom} at {self.at}"


def basis_element(ring: FusionRing, i: int) -> RingElement:
    if not 0 <= i < ring.rank:
        raise StructuralError(f"basis index {i} out of range")
    coeffs = [0] * ring.rank
    coeffs[i] = 1
    return RingElement(tuple(coeffs))


def as_element(ring: FusionRing, x) -> RingElement:
    if isinstance(x, RingElement):
        if len(x.coeffs) != ring.rank:
            raise StructuralError("element length does not match ring rank")
        return x
    if isinstance(x, int):
        return basis_element(ring, x)
    coeffs = tuple(int(c) for c in x)
    if len(coeffs) != ring.rank:
        raise StructuralError("element length does not match ring rank")
    return RingElement(coeffs)


def multiply(ring: FusionRing, a, b) -> RingElement:
    """Product of two nonnegative elements, with an overflow guard."""
    va = as_element(ring, a).vector()
    vb = as_element(ring, b).vector()
    est = np.einsum("i,j,ijk->k", va.astype(float), vb.astype(float),
                    ring.n.astype(float))
    if est.size and est.max() >= 2.0 ** 62:
        raise OverflowError("product coefficients exceed the machine integer range")
    out = np.einsum("i,j,ijk->k", va, vb, ring.n)
    return RingElement(tuple(int(c) for c in out))


def verify_axioms(ring: FusionRing) -> list[AxiomViolation]:
    """Every axiom violation, in a fixed order.

    Families are checked in the order dual involution, unit, duality,
    reciprocity, associativity; within a family the offending index tuples
    come out lexicographically. An empty list means the ring is valid.
    """
    r, d, n = ring.rank, ring.dual, ring.n
    out: list[AxiomViolation] = []

    bad_dual: set[int] = set()
    if d[0] != 0:
        bad_dual.add(0)
    for i in range(r):
        if d[d[i]] != i:
            bad_dual.add(i)
    for i in sorted(bad_dual):
        out.append(AxiomViolation(AXIOM_DUAL, (i,)))

    eye = np.eye(r, dtype=np.int64)
    seen: set[tuple[int, int, int]] = set()
    for j, k in np.argwhere(n[0] != eye):
        seen.add((0, int(j), int(k)))
        out.append(AxiomViolation(AXIOM_UNIT, (0, int(j), int(k))))
    for i, k in np.argwhere(n[:, 0, :] != eye):
        if (int(i), 0, int(k)) not in seen:
            out.append(AxiomViolation(AXIOM_UNIT, (int(i), 0, int(k))))

    pairing = eye[list(d)]
    for i, j in np.argwhere(n[:, :, 0] != pairing):
        out.append(AxiomViolation(AXIOM_DUALITY, (int(i), int(j), 0)))

    swapped = n[list(d)].transpose(0, 2, 1)
    mism = np.argwhere(n != swapped)
    cols = n[:, list(d), :].transpose(2, 1, 0)
    mism2 = np.argwhere(n != cols)
    frob = sorted({tuple(int(x) for x in idx) for idx in mism}
                  | {tuple(int(x) for x in idx) for idx in mism2})
    for idx in frob:
        out.append(AxiomViolation(AXIOM_FROBENIUS, idx))

    left = np.einsum("ijm,mkl->ijkl", n, n)
    right = np.einsum("jkm,iml->ijkl", n, n)
    for idx in np.argwhere(left != right):
        out.append(AxiomViolation(AXIOM_ASSOCIATIVITY, tuple(int(x) for x in idx)))
    return out


def closure(ring: FusionRing, seed: Iterable[int]) -> Subring:
    """Smallest closed subset containing the unit and the seed."""
    members = {0}
    for i in seed:
        if not 0 <= int(i) < ring.rank:
            raise StructuralError(f"seed index {i} out of range")
        members.add(int(i))
    while True:
        new: set[int] = set()
        for i in members:
            di = ring.dual[i]
            if di not in members:
                new.add(di)
        for i in members:
            for j in members:
                for k in np.nonzero(ring.n[i, j])[0]:
                    if int(k) not in members:
                        new.add(int(k))
        if not new:
            break
        members |= new
    mem = tuple(sorted(members))
    pointed = all(ring.invertible[i] for i in mem)
    return Subring(mem, pointed)


def is_closed_subset(ring: FusionRing, members: Iterable[int]) -> bool:
    mem = set(int(i) for i in members)
    if 0 not in mem:
        return False
    for i in mem:
        if ring.dual[i] not in mem:
            return False
        for j in mem:
            if any(int(k) not in mem for k in np.nonzero(ring.n[i, j])[0]):
                return False
    return True


def make_subring(ring: FusionRing, members: Iterable[int]) -> Subring:
    mem = tuple(sorted(set(int(i) for i in members)))
    if not is_closed_subset(ring, mem):
        raise StructuralError(f"members {mem} do not form a closed subset")
    return Subring(mem, all(ring.invertible[i] for i in mem))


# -------------------------------------------------------------- isomorphism

_ISO_DIM_TOL = 1e-9


def _index_profiles(ring: FusionRing) -> list[tuple]:
    n = ring.n
    profs = []
    for i in range(ring.rank):
        profs.append((
            bool(ring.invertible[i]),
            ring.dual[i] == i,
            int(n[i, i, i]),
            tuple(sorted(int(x) for x in n[i].ravel())),
            tuple(sorted(int(x) for x in n[:, i, :].ravel())),
            tuple(sorted(int(x) for x in n[:, :, i].ravel())),
        ))
    return profs


def find_isomorphism(r1: FusionRing, r2: FusionRing) -> tuple[int, ...] | None:
    """A basis permutation s with n1[i,j,k] = n2[s(i),s(j),s(k)], or None.

    The unit is pinned to the unit; candidates are pruned by dimension,
    self-duality and invertibility before the backtracking search runs.
    """
    if r1.rank != r2.rank:
        return None
    rank = r1.rank
    from .numerics import fp_dimensions

    d1 = fp_dimensions(r1).dims
    d2 = fp_dimensions(r2).dims
    if any(abs(a - b) > _ISO_DIM_TOL for a, b in zip(sorted(d1), sorted(d2))):
        return None
    p1 = _index_profiles(r1)
    p2 = _index_profiles(r2)
    cands: list[list[int]] = []
    for i in range(rank):
        cs = [p for p in range(rank)
              if p1[i] == p2[p] and abs(d1[i] - d2[p]) <= _ISO_DIM_TOL]
        if not cs:
            return None
        cands.append(cs)
    if cands[0] != [0] and 0 not in cands[0]:
        return None

    n1, n2 = r1.n, r2.n
    sigma = [-1] * rank
    used = [False] * rank

    def consistent(i: int, p: int, assigned: list[int]) -> bool:
        if sigma[r1.dual[i]] not in (-1, r2.dual[p]):
            return False
        a1 = assigned + [i]
        a2 = [sigma[j] for j in assigned] + [p]
        ix1 = np.ix_(a1, a1)
        ix2 = np.ix_(a2, a2)
        if not np.array_equal(n1[i][ix1], n2[p][ix2]):
            return False
        if not np.array_equal(n1[:, i, :][np.ix_(a1, a1)], n2[:, p, :][np.ix_(a2, a2)]):
            return False
        if not np.array_equal(n1[:, :, i][np.ix_(a1, a1)], n2[:, :, p][np.ix_(a2, a2)]):
            return False
        return True

    def pick_next(assigned: list[int]) -> int | None:
        best, best_count = None, rank + 1
        for i in range(rank):
            if sigma[i] >= 0:
                continue
            count = sum(1 for p in cands[i] if not used[p])
            if count < best_count:
                best, best_count = i, count
        return best

    def dfs(assigned: list[int]) -> bool:
        i = pick_next(assigned)
        if i is None:
            return True
        for p in cands[i]:
            if used[p]:
                continue
            if not consistent(i, p, assigned):
                continue
            sigma[i] = p
            used[p] = True
            if dfs(assigned + [i]):
                return True
            sigma[i] = -1
            used[p] = False
        return False

    sigma[0] = 0
    used[0] = True
    if not dfs([0]):
        return None
    perm = np.array(sigma)
    if not np.array_equal(n1, n2[np.ix_(perm, perm, perm)]):
        return None
    if any(sigma[r1.dual[i]] != r2.dual[sigma[i]] for i in range(rank)):
        return None
    return tuple(sigma)
