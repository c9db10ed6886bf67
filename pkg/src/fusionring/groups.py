"""Finite groups given by explicit multiplication tables.

Everything here is desk scale (orders up to 16 or so): groups are dense
tables, subgroups are enumerated by closure, and isomorphism is a
backtracking search on generator images.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product as iter_product

import numpy as np


class GroupError(ValueError):
    """Malformed table or invalid group argument."""


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Group on indices 0..order-1; table[a][b] is the product a*b, 0 the identity."""

    order: int
    table: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self) -> None:
        m = self.order
        if m < 1:
            raise GroupError("order must be positive")
        if len(self.table) != m or any(len(row) != m for row in self.table):
            raise GroupError(f"table must be {m}x{m}")
        arr = np.asarray(self.table, dtype=np.int64)
        if arr.min() < 0 or arr.max() >= m:
            raise GroupError("table entries out of range")
        full = frozenset(range(m))
        for a in range(m):
            if frozenset(self.table[a]) != full:
                raise GroupError(f"row {a} is not a permutation")
            if frozenset(row[a] for row in self.table) != full:
                raise GroupError(f"column {a} is not a permutation")
        if any(self.table[0][a] != a or self.table[a][0] != a for a in range(m)):
            raise GroupError("index 0 must act as the identity")
        left = arr[arr, :]      # left[a,b,c] = (a*b)*c
        right = arr[:, arr]     # right[a,b,c] = a*(b*c)
        if not np.array_equal(left, right):
            a, b, c = (int(x) for x in np.argwhere(left != right)[0])
            raise GroupError(f"not associative at ({a},{b},{c})")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self.table[x][a]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def center(self) -> tuple[int, ...]:
        t = self.table
        return tuple(a for a in range(self.order)
                     if all(t[a][b] == t[b][a] for b in range(self.order)))

    def is_abelian(self) -> bool:
        return len(self.center) == self.order

    def is_cyclic(self) -> bool:
        return max(self.element_orders) == self.order

    def is_elementary_abelian_2(self) -> bool:
        return all(o in (1, 2) for o in self.element_orders)

    def element_name(self, a: int) -> str:
        return "e" if a == 0 else f"g{a}"

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, name={self.name!r})"


# ---------------------------------------------------------------- constructors

def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic order must be positive")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(n, table, name=f"Z{n}")


def product_group(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    m, k = g.order, h.order
    table = [[0] * (m * k) for _ in range(m * k)]
    for a, b, c, d in iter_product(range(m), range(k), range(m), range(k)):
        table[a * k + b][c * k + d] = g.table[a][c] * k + h.table[b][d]
    return FiniteGroup(m * k, tuple(tuple(row) for row in table), name=name)


def product_of_cyclics(orders) -> FiniteGroup:
    orders = list(orders)
    if not orders:
        return cyclic(1)
    out = cyclic(orders[0])
    for n in orders[1:]:
        out = product_group(out, cyclic(n))
    name = "x".join(f"Z{n}" for n in orders)
    return FiniteGroup(out.order, out.table, name=name)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon, order 2n; rotations sit at 0..n-1."""
    if n < 1:
        raise GroupError("dihedral parameter must be positive")
    m = 2 * n
    table = [[0] * m for _ in range(m)]
    for a in range(n):
        for b in range(n):
            table[a][b] = (a + b) % n
            table[a][n + b] = n + (b - a) % n
            table[n + a][b] = n + (a + b) % n
            table[n + a][n + b] = (b - a) % n
    return FiniteGroup(m, tuple(tuple(row) for row in table), name=f"D{n}")


def quaternion8() -> FiniteGroup:
    """The quaternion group {1,-1,i,-i,j,-j,k,-k}."""
    units = "1ijk"
    cyc = {"ij": "k", "jk": "i", "ki": "j"}

    def umul(u: str, v: str) -> tuple[int, str]:
        if u == "1":
            return 1, v
        if v == "1":
            return 1, u
        if u == v:
            return -1, "1"
        if u + v in cyc:
            return 1, cyc[u + v]
        return -1, cyc[v + u]

    def enc(sign: int, u: str) -> int:
        return units.index(u) * 2 + (0 if sign > 0 else 1)

    table = [[0] * 8 for _ in range(8)]
    for iu, u in enumerate(units):
        for su in (1, -1):
            for iv, v in enumerate(units):
                for sv in (1, -1):
                    sw, w = umul(u, v)
                    table[enc(su, u)][enc(sv, v)] = enc(su * sv * sw, w)
    return FiniteGroup(8, tuple(tuple(row) for row in table), name="Q8")


def symmetric3() -> FiniteGroup:
    return FiniteGroup(6, dihedral(3).table, name="S3")


_NAMED_BUILDERS = {f"Z{n}": (lambda n=n: cyclic(n)) for n in range(1, 17)}
_NAMED_BUILDERS.update({
    "Z2xZ2": lambda: product_of_cyclics([2, 2]),
    "Z2xZ4": lambda: product_of_cyclics([2, 4]),
    "Z2xZ2xZ2": lambda: product_of_cyclics([2, 2, 2]),
    "D4": lambda: dihedral(4),
    "Q8": quaternion8,
    "S3": symmetric3,
})

#: Names accepted on the command line.
NAMED_GROUPS: tuple[str, ...] = tuple([f"Z{n}" for n in range(1, 17)]
                                      + ["Z2xZ2", "Z2xZ4", "D4", "Q8", "S3"])


def named_group(name: str) -> FiniteGroup:
    builder = _NAMED_BUILDERS.get(name)
    if builder is None:
        raise GroupError(f"unknown group name {name!r}")
    return builder()


@lru_cache(maxsize=None)
def groups_of_order(m: int) -> tuple[FiniteGroup, ...]:
    """All isomorphism classes of groups of order m, for m <= 8."""
    if not 1 <= m <= 8:
        raise GroupError("group tables are catalogued only up to order 8")
    names = {
        1: ["Z1"], 2: ["Z2"], 3: ["Z3"], 4: ["Z4", "Z2xZ2"], 5: ["Z5"],
        6: ["Z6", "S3"], 7: ["Z7"], 8: ["Z8", "Z2xZ4", "Z2xZ2xZ2", "D4", "Q8"],
    }[m]
    return tuple(named_group(n) for n in names)


# ------------------------------------------------------------------- subgroups

def generated_subgroup(group: FiniteGroup, seed) -> frozenset[int]:
    members = {0} | set(seed)
    frontier = sorted(members)
    while frontier:
        new = []
        for a in sorted(members):
            for b in frontier:
                for c in (group.table[a][b], group.table[b][a]):
                    if c not in members:
                        members.add(c)
                        new.append(c)
        frontier = new
    return frozenset(members)


@lru_cache(maxsize=None)
def subgroups(group: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Every subgroup, as a sorted member tuple, smallest first."""
    found = {frozenset({0})}
    for g in range(group.order):
        found.add(generated_subgroup(group, (g,)))
    while True:
        new = set()
        for s in found:
            for t in found:
                if not (s <= t or t <= s):
                    u = generated_subgroup(group, s | t)
                    if u not in found:
                        new.add(u)
        if not new:
            break
        found |= new
    return tuple(sorted((tuple(sorted(s)) for s in found), key=lambda s: (len(s), s)))


def index2_subgroups(group: FiniteGroup) -> list[tuple[int, ...]]:
    return [s for s in subgroups(group) if 2 * len(s) == group.order]


def central_elements_of_order2(group: FiniteGroup) -> list[int]:
    return [g for g in group.center if group.element_orders[g] == 2]


def subgroup_group(group: FiniteGroup, members, name: str | None = None) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Reindex a subgroup as its own FiniteGroup; returns (group, embedding)."""
    mem = sorted(set(members))
    pos = {g: i for i, g in enumerate(mem)}
    if 0 not in pos:
        raise GroupError("subgroup must contain the identity")
    try:
        table = tuple(tuple(pos[group.table[a][b]] for b in mem) for a in mem)
    except KeyError:
        raise GroupError("member set is not closed under multiplication") from None
    return FiniteGroup(len(mem), table, name=name), tuple(mem)


def quotient_group(group: FiniteGroup, kernel) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Quotient by a normal subgroup; returns (quotient, projection)."""
    k = frozenset(kernel)
    if generated_subgroup(group, k) != k:
        raise GroupError("kernel is not a subgroup")
    t = group.table
    inv = group.inverse
    for g in range(group.order):
        for x in k:
            if t[t[g][x]][inv[g]] not in k:
                raise GroupError("kernel is not normal")
    coset_of = [-1] * group.order
    reps: list[int] = []
    for a in range(group.order):
        if coset_of[a] < 0:
            cid = len(reps)
            reps.append(a)
            for x in k:
                coset_of[t[a][x]] = cid
    table = tuple(tuple(coset_of[t[reps[a]][reps[b]]] for b in range(len(reps)))
                  for a in range(len(reps)))
    return FiniteGroup(len(reps), table), tuple(coset_of)


# ---------------------------------------------------------------- isomorphisms

def _generating_sequence(group: FiniteGroup) -> list[int]:
    gens: list[int] = []
    closed = frozenset({0})
    for g in range(group.order):
        if g not in closed:
            gens.append(g)
            closed = generated_subgroup(group, gens)
    return gens


def iter_isomorphisms(g1: FiniteGroup, g2: FiniteGroup):
    """Yield every isomorphism g1 -> g2 as a tuple indexed by g1 elements."""
    if g1.order != g2.order:
        return
    if sorted(g1.element_orders) != sorted(g2.element_orders):
        return
    gens = _generating_sequence(g1)
    if not gens:
        yield (0,)
        return
    pools = [[h for h in range(g2.order) if g2.element_orders[h] == g1.element_orders[g]]
             for g in gens]

    def extend(images):
        f = {0: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for gen, img in zip(gens, images):
                    y = g1.table[x][gen]
                    fy = g2.table[f[x]][img]
                    if y in f:
                        if f[y] != fy:
                            return None
                    else:
                        f[y] = fy
                        nxt.append(y)
            frontier = nxt
        if len(f) != g1.order or len(set(f.values())) != g1.order:
            return None
        for a in range(g1.order):
            fa = f[a]
            row = g1.table[a]
            for b in range(g1.order):
                if f[row[b]] != g2.table[fa][f[b]]:
                    return None
        return tuple(f[a] for a in range(g1.order))

    for images in iter_product(*pools):
        m = extend(images)
        if m is not None:
            yield m


def are_isomorphic(g1: FiniteGroup, g2: FiniteGroup) -> bool:
    return next(iter_isomorphisms(g1, g2), None) is not None


def _class_fingerprint(g: FiniteGroup):
    return (g.order, tuple(sorted(g.element_orders)), len(g.center), g.is_abelian())


def same_isomorphism_class(g1: FiniteGroup, g2: FiniteGroup) -> bool:
    if _class_fingerprint(g1) != _class_fingerprint(g2):
        return False
    # abelian groups are determined by their element order statistics
    if g1.is_abelian():
        return True
    return are_isomorphic(g1, g2)


@lru_cache(maxsize=None)
def identify_group(group: FiniteGroup) -> str:
    """A display name for the isomorphism class, best effort for order > 16."""
    m = group.order
    if group.is_cyclic():
        return f"Z{m}"
    if group.is_abelian():
        for factors in _abelian_factorizations(m):
            if len(factors) > 1 and same_isomorphism_class(group, product_of_cyclics(factors)):
                return "x".join(f"Z{n}" for n in factors)
    else:
        if m == 8 and are_isomorphic(group, quaternion8()):
            return "Q8"
        if m == 6 and are_isomorphic(group, symmetric3()):
            return "S3"
        if m % 2 == 0 and are_isomorphic(group, dihedral(m // 2)):
            return f"D{m // 2}"
    return f"grp{m}c{len(group.center)}"


def _abelian_factorizations(m: int) -> list[list[int]]:
    """Multisets of prime power cyclic factors with product m, sorted ascending."""
    def prime_powers(p: int, a: int) -> list[list[int]]:
        # partitions of the exponent a
        parts: list[list[int]] = []

        def rec(rest, mx, cur):
            if rest == 0:
                parts.append(list(cur))
                return
            for nxt in range(min(rest, mx), 0, -1):
                rec(rest - nxt, nxt, cur + [nxt])

        rec(a, a, [])
        return [[p ** e for e in part] for part in parts]

    factors: dict[int, int] = {}
    x = m
    p = 2
    while p * p <= x:
        while x % p == 0:
            factors[p] = factors.get(p, 0) + 1
            x //= p
        p += 1
    if x > 1:
        factors[x] = factors.get(x, 0) + 1
    choices = [prime_powers(p, a) for p, a in sorted(factors.items())]
    out: list[list[int]] = []
    for combo in iter_product(*choices):
        merged: list[int] = []
        for ch in combo:
            merged.extend(ch)
        out.append(sorted(merged))
    out.sort()
    return out


# ---------------------------------------------------- central extensions by Z2

def _gf2_nullspace(rows: list[int], nvars: int) -> list[int]:
    # Reduced row echelon form over GF(2), rows as bitmasks. The invariant
    # kept here is that every echelon row contains its own pivot bit and
    # free-column bits only; the nullspace read-off below depends on it.
    echelon: dict[int, int] = {}
    for r in rows:
        cur = r
        while cur:
            lead = cur.bit_length() - 1
            if lead not in echelon:
                break
            cur ^= echelon[lead]
        if not cur:
            continue
        lead = cur.bit_length() - 1
        for l2 in echelon:
            if (cur >> l2) & 1:
                cur ^= echelon[l2]
        for l2 in list(echelon):
            if (echelon[l2] >> lead) & 1:
                echelon[l2] ^= cur
        echelon[lead] = cur
    basis = []
    for c in range(nvars):
        if c in echelon:
            continue
        vec = 1 << c
        for lead, row in echelon.items():
            if (row >> c) & 1:
                vec |= 1 << lead
        basis.append(vec)
    return basis


def central_extensions_by_z2(group: FiniteGroup) -> list[FiniteGroup]:
    """All groups H of order 2m with a central order-2 subgroup K and H/K = group.

    Enumerated through normalized 2-cocycles with values in Z2, then
    deduplicated up to isomorphism. Any order-2 normal subgroup is central,
    so this is the complete list of such extensions.
    """
    m = group.order
    t = group.table
    pairs = [(g, h) for g in range(1, m) for h in range(1, m)]
    vidx = {p: i for i, p in enumerate(pairs)}
    rows = []
    for g in range(1, m):
        for h in range(1, m):
            gh = t[g][h]
            for k in range(1, m):
                hk = t[h][k]
                mask = 1 << vidx[(g, h)]
                if gh:
                    mask ^= 1 << vidx[(gh, k)]
                mask ^= 1 << vidx[(h, k)]
                if hk:
                    mask ^= 1 << vidx[(g, hk)]
                if mask:
                    rows.append(mask)
    basis = _gf2_nullspace(rows, len(pairs))
    if len(basis) > 14:
        raise GroupError("cocycle space too large to enumerate")
    reps: list[FiniteGroup] = []
    for sel in range(1 << len(basis)):
        vec = 0
        for i, b in enumerate(basis):
            if (sel >> i) & 1:
                vec ^= b
        table = [[0] * (2 * m) for _ in range(2 * m)]
        for g in range(m):
            for s in (0, 1):
                for h in range(m):
                    for u in (0, 1):
                        c = 0 if (g == 0 or h == 0) else (vec >> vidx[(g, h)]) & 1
                        table[2 * g + s][2 * h + u] = 2 * t[g][h] + (s ^ u ^ c)
        cand = FiniteGroup(2 * m, tuple(tuple(row) for row in table))
        if not any(same_isomorphism_class(cand, r) for r in reps):
            reps.append(cand)
    return reps
