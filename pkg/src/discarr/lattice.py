"""Concurrency lattices.

P(n,k) is the poset of antichain families of subsets of 1..n (each of size at
least k+1) whose every subfamily of two or more members has a union strictly
larger than k plus the sum of member excesses over k. Concurrency-closed
collections of (k+1)-subsets form an isomorphic poset via the maps psi
(unroll members into their (k+1)-subsets) and sigma (read off maximal
concurrency sets). The lattice of flats of the discriminantal rows realizes
the same poset for very generic coefficient matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional, Sequence, Union

from .discriminantal import build_disc, subsets_lex
from .exactmath import IntPivotBasis, Matrix, int_row
from .matroid import _mask_basis, _masks_independent

Family = tuple  # sorted tuple of sorted member tuples


def _to_mask(s: Sequence[int]) -> int:
    m = 0
    for e in s:
        m |= 1 << (e - 1)
    return m


def _from_mask(m: int) -> tuple:
    out = []
    i = 1
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def canonical_family(members) -> Family:
    return tuple(sorted(tuple(sorted(set(s))) for s in members))


def nu(s, k: int) -> int:
    return max(0, len(set(s)) - k)


def delta(members, k: int) -> int:
    """Excess of the union over the summed member excesses."""
    union = set()
    total = 0
    for s in members:
        s = set(s)
        union |= s
        total += max(0, len(s) - k)
    return max(0, len(union) - k) - total


def in_P(members, n: int, k: int) -> bool:
    """Membership test for P(n,k), straight from the defining inequality."""
    fam = canonical_family(members)
    if len(set(fam)) != len(fam):
        return False
    for s in fam:
        if len(s) < k + 1 or any(e < 1 or e > n for e in s):
            return False
    masks = [_to_mask(s) for s in fam]
    nus = [len(s) - k for s in fam]
    for size in range(2, len(fam) + 1):
        for idxs in combinations(range(len(fam)), size):
            u = 0
            t = 0
            for i in idxs:
                u |= masks[i]
                t += nus[i]
            if u.bit_count() <= k + t:
                return False
    return True


def p_order(fam: Family, other: Family) -> bool:
    """fam <= other: every member of fam is contained in a member of other."""
    oth = [set(t) for t in other]
    return all(any(set(s) <= t for t in oth) for s in fam)


@dataclass
class Poset:
    """Finite poset with relation matrix and on-demand Moebius data."""

    elements: list
    below: list                      # below[i] = frozenset of j with e_j <= e_i
    grades: Optional[list] = None    # optional rank per element
    _mobius: Optional[dict] = field(default=None, repr=False)

    @classmethod
    def from_le(cls, elements: list, le: Callable, grades: Optional[list] = None) -> "Poset":
        n = len(elements)
        below = [
            frozenset(j for j in range(n) if le(elements[j], elements[i]))
            for i in range(n)
        ]
        return cls(elements=elements, below=below, grades=grades)

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return i in self.below[j]

    def order_matrix(self) -> list:
        n = len(self.elements)
        return [[self.leq(i, j) for j in range(n)] for i in range(n)]

    def bottom(self) -> int:
        mins = [i for i in range(len(self.elements)) if len(self.below[i]) == 1]
        if len(mins) != 1:
            raise ValueError("poset has no unique bottom element")
        return mins[0]

    def linear_extension(self) -> list:
        return sorted(range(len(self.elements)), key=lambda i: len(self.below[i]))

    def mobius_from(self, i0: int) -> dict:
        """mu(e_i0, e_j) for all j above i0."""
        mu = {i0: 1}
        for j in self.linear_extension():
            if j == i0 or i0 not in self.below[j]:
                continue
            mu[j] = -sum(mu[z] for z in self.below[j] if z != j and z in mu)
        return mu

    def mobius_matrix(self) -> dict:
        """mu on all ordered pairs i <= j, computed once and cached."""
        if self._mobius is None:
            full = {}
            for i in range(len(self.elements)):
                for j, v in self.mobius_from(i).items():
                    full[(i, j)] = v
            self._mobius = full
        return self._mobius


_P_CACHE: dict = {}


def _guard_scale(n: int, k: int) -> None:
    if not ((k == 2 and n <= 7) or (n - k <= 4)):
        raise ValueError(
            f"P({n},{k}) enumeration refused: supported scales are k=2 with n<=7, or n-k<=4"
        )


def enumerate_P(n: int, k: int) -> Poset:
    """All of P(n,k) with the empty family as bottom, ordered by p_order.

    Families are grown one member at a time in canonical order; the strict
    union inequality is maintained incrementally over all subfamilies of the
    partial family, which prunes the search far below the power set.
    """
    _guard_scale(n, k)
    key = (n, k)
    if key in _P_CACHE:
        return _P_CACHE[key]
    candidates = sorted(
        tuple(c)
        for size in range(k + 1, n + 1)
        for c in combinations(range(1, n + 1), size)
    )
    cand_masks = [_to_mask(c) for c in candidates]
    cand_nu = [len(c) - k for c in candidates]
    found: list = []

    def extend(start: int, members: list, subs: list) -> None:
        found.append(tuple(candidates[i] for i in members))
        for j in range(start, len(candidates)):
            mj, nj = cand_masks[j], cand_nu[j]
            ok = True
            for (u, s, c) in subs:
                if c >= 1 and (u | mj).bit_count() <= k + s + nj:
                    ok = False
                    break
            if not ok:
                continue
            new_subs = subs + [(u | mj, s + nj, c + 1) for (u, s, c) in subs] + [(mj, nj, 1)]
            members.append(j)
            extend(j + 1, members, new_subs)
            members.pop()

    extend(0, [], [(0, 0, 0)])
    elements = sorted(set(found), key=lambda f: (sum(len(s) - k for s in f), f))
    grades = [sum(len(s) - k for s in f) for f in elements]
    poset = Poset.from_le(elements, p_order, grades=grades)
    _P_CACHE[key] = poset
    return poset


def p_char_poly(n: int, k: int):
    """Moebius sum over P(n,k): sum of mu(bottom, F) t^(n - sum nu)."""
    from .charpoly import CharPoly

    poset = enumerate_P(n, k)
    mu = poset.mobius_from(poset.bottom())
    coeffs = [0] * (n + 1)
    for j, v in mu.items():
        coeffs[n - poset.grades[j]] += v
    return CharPoly(coeffs=tuple(coeffs))


def _collection_masks(members, k: int) -> frozenset:
    masks = []
    for s in members:
        s = tuple(sorted(set(s)))
        if len(s) != k + 1:
            raise ValueError(f"member {s} does not have {k + 1} elements")
        masks.append(_to_mask(s))
    return frozenset(masks)


_CLOSURE_CACHE: dict = {}


def closure(members, n: int, k: int) -> frozenset:
    """Dependence closure: all (k+1)-subsets whose addition keeps the
    Dilworth rank unchanged. Computed to a fixed point (one pass suffices;
    the tests assert that)."""
    cur = _collection_masks(members, k)
    key = (n, k, cur)
    if key in _CLOSURE_CACHE:
        return _CLOSURE_CACHE[key]
    all_masks = [_to_mask(c) for c in combinations(range(1, n + 1), k + 1)]
    while True:
        basis = tuple(_mask_basis(sorted(cur), k))
        nxt = set(cur)
        for em in all_masks:
            if em in nxt:
                continue
            if em in basis or not _masks_independent(basis + (em,), k):
                nxt.add(em)
        nxt = frozenset(nxt)
        if nxt == cur:
            break
        cur = nxt
    result = frozenset(_from_mask(m) for m in cur)
    _CLOSURE_CACHE[key] = result
    return result


def is_closed(members, n: int, k: int) -> bool:
    cur = frozenset(tuple(sorted(set(s))) for s in members)
    return closure(cur, n, k) == cur


def concurrency_sets(members, n: int, k: int) -> Family:
    """The maximal concurrency sets of a closed collection (the sigma map).

    Members sharing exactly k elements are merged transitively; each
    component's union is then verified to have all its (k+1)-subsets inside
    the collection.
    """
    coll = frozenset(tuple(sorted(set(s))) for s in members)
    if closure(coll, n, k) != coll:
        raise ValueError("collection is not concurrency closed")
    masks = sorted(_to_mask(s) for s in coll)
    parent = list(range(len(masks)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if (masks[i] & masks[j]).bit_count() == k:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    unions: dict = {}
    for i, m in enumerate(masks):
        r = find(i)
        unions[r] = unions.get(r, 0) | m
    sets = []
    for u in unions.values():
        for sub in combinations(_from_mask(u), k + 1):
            if _to_mask(sub) not in masks:
                raise ValueError("merged component is not fully concurrent")
        sets.append(_from_mask(u))
    return tuple(sorted(sets))


sigma = concurrency_sets


def base_collection(members, n: int, k: int) -> Family:
    """A minimal collection with the same closure: from each concurrency set
    take its k smallest elements paired with every further element."""
    out = []
    for d in concurrency_sets(members, n, k):
        head = d[:k]
        for l in range(k, len(d)):
            out.append(head + (d[l],))
    return tuple(sorted(out))


def psi(members, n: int, k: int) -> frozenset:
    """All (k+1)-subsets lying inside some member of a P(n,k) family."""
    fam = canonical_family(members)
    if not in_P(fam, n, k):
        raise ValueError("family is not an element of P(n,k)")
    out = set()
    for s in fam:
        for sub in combinations(s, k + 1):
            out.add(tuple(sub))
    return frozenset(out)


def antichain_merge_to_p(members, n: int, k: int) -> Family:
    """Merge subfamilies of zero excess until the family lands in P(n,k).

    Requires every subfamily to have nonnegative excess; each merge replaces
    a zero-excess subfamily by its union, strictly shrinking the family.
    """
    fam = list(canonical_family(members))
    while not in_P(fam, n, k):
        merged = False
        for size in range(2, len(fam) + 1):
            for idxs in combinations(range(len(fam)), size):
                sub = [fam[i] for i in idxs]
                d = delta(sub, k)
                if d < 0:
                    raise ValueError("subfamily with negative excess; merge undefined")
                if d == 0:
                    union = tuple(sorted(set().union(*map(set, sub))))
                    fam = sorted(
                        [fam[i] for i in range(len(fam)) if i not in idxs] + [union]
                    )
                    merged = True
                    break
            if merged:
                break
        if not merged:
            raise ValueError("family outside P(n,k) with no zero-excess subfamily")
    return tuple(fam)


_C_CACHE: dict = {}


def enumerate_C(n: int, k: int) -> Poset:
    """All concurrency-closed collections, ordered by inclusion.

    Generated level by level from the empty collection: each closed set is
    extended by one outside (k+1)-subset and re-closed, which reaches every
    closed collection (they are the closure images, i.e. the flats of the
    Dilworth matroid on the circuits).
    """
    _guard_scale(n, k)
    key = (n, k)
    if key in _C_CACHE:
        return _C_CACHE[key]
    everything = [tuple(c) for c in combinations(range(1, n + 1), k + 1)]
    bottom = frozenset()
    seen = {bottom: 0}
    level = [bottom]
    rk = 0
    while level:
        rk += 1
        nxt = set()
        for coll in level:
            for e in everything:
                if e in coll:
                    continue
                closed = closure(coll | {e}, n, k)
                if closed not in seen:
                    nxt.add(closed)
        for c in nxt:
            seen[c] = rk
        level = sorted(nxt, key=lambda c: sorted(c))
    elements = sorted(seen, key=lambda c: (seen[c], sorted(c)))
    grades = [seen[c] for c in elements]
    poset = Poset.from_le(elements, lambda a, b: a <= b, grades=grades)
    _C_CACHE[key] = poset
    return poset


def flats_lattice(coeffs: Union[Matrix, "object"]) -> Poset:
    """Lattice of row spans of the discriminantal matrix.

    Elements are the closed sets of (m+1)-subset labels (all rows lying in a
    given span), ordered by inclusion and graded by span dimension.
    """
    mat = coeffs if isinstance(coeffs, Matrix) else coeffs.coeffs
    disc = build_disc(mat)
    rows = [int_row(r) for r in disc.normals]
    width = disc.n
    nrows = len(rows)
    bottom = frozenset()
    seen = {bottom: 0}
    level = [bottom]
    rk = 0
    while level:
        rk += 1
        nxt = set()
        for flat in level:
            for e in range(nrows):
                if e in flat:
                    continue
                basis = IntPivotBasis(width)
                for i in flat:
                    basis.push(rows[i])
                basis.push(rows[e])
                closed = frozenset(i for i in range(nrows) if basis.contains(rows[i]))
                if closed not in seen:
                    nxt.add(closed)
        for f in nxt:
            seen[f] = rk
        level = sorted(nxt, key=sorted)
    elements = [
        frozenset(disc.subsets[i] for i in flat)
        for flat in sorted(seen, key=lambda f: (seen[f], sorted(f)))
    ]
    grades = [seen[f] for f in sorted(seen, key=lambda f: (seen[f], sorted(f)))]
    return Poset.from_le(elements, lambda a, b: a <= b, grades=grades)


@dataclass(frozen=True)
class IsoReport:
    holds: bool
    detail: str


def p_flats_isomorphism(coeffs: Matrix) -> IsoReport:
    """Check that F -> (rows under members of F) is a grade-preserving order
    isomorphism from P(n,k) onto the flats of the discriminantal rows."""
    n, k = coeffs.rows, coeffs.cols
    pos = enumerate_P(n, k)
    flats = flats_lattice(coeffs)
    flat_index = {f: i for i, f in enumerate(flats.elements)}
    image = []
    for f in pos.elements:
        phi = frozenset(
            sub for s in f for sub in (tuple(c) for c in combinations(s, k + 1))
        )
        idx = flat_index.get(phi)
        if idx is None:
            return IsoReport(False, f"image of {f} is not a flat")
        image.append(idx)
    if len(set(image)) != len(flats.elements):
        return IsoReport(
            False,
            f"not bijective: {len(set(image))} distinct images, {len(flats.elements)} flats",
        )
    for i in range(len(pos.elements)):
        if pos.grades[i] != flats.grades[image[i]]:
            return IsoReport(False, f"grade mismatch at {pos.elements[i]}")
    for i in range(len(pos.elements)):
        for j in range(len(pos.elements)):
            if pos.leq(i, j) != flats.leq(image[i], image[j]):
                return IsoReport(
                    False,
                    f"order mismatch between {pos.elements[i]} and {pos.elements[j]}",
                )
    return IsoReport(True, f"order isomorphism on {len(pos.elements)} elements")
