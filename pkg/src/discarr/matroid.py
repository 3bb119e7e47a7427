"""Uniform matroid circuits, the Dilworth matroid on them, and the exact
very-genericity decision for coefficient matrices.

A collection of (k+1)-subsets is Dilworth-independent when every nonempty
subcollection J satisfies |union J| >= k + |J|. A coefficient matrix is very
generic when the discriminantal rows of every Dilworth-independent collection
are linearly independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

from .arrangement import NotGenericError, normals_generic
from .discriminantal import DiscArrangement, build_disc, subsets_lex
from .exactmath import IntPivotBasis, Matrix, int_row

_indep_cache: dict = {}


def uniform_circuits(n: int, k: int) -> list:
    """All (k+1)-subsets of 1..n in dictionary order."""
    if n <= k or k < 1:
        raise ValueError(f"need n > k >= 1, got n={n}, k={k}")
    return subsets_lex(n, k + 1)


def _masks(members: Sequence, k: int) -> tuple:
    out = []
    for s in members:
        elems = set(s)
        if len(elems) != k + 1:
            raise ValueError(f"member {tuple(sorted(elems))} does not have {k + 1} elements")
        m = 0
        for e in elems:
            if not isinstance(e, int) or e < 1:
                raise ValueError("members must contain positive integers")
            m |= 1 << (e - 1)
        out.append(m)
    return tuple(out)


def _masks_independent(masks: tuple, k: int) -> bool:
    key = (k, frozenset(masks))
    hit = _indep_cache.get(key)
    if hit is not None:
        return hit
    if len(masks) != len(set(masks)):
        _indep_cache[key] = False
        return False
    ok = True
    r = len(masks)
    for size in range(2, r + 1):
        for sub in combinations(masks, size):
            u = 0
            for m in sub:
                u |= m
            if u.bit_count() < k + size:
                ok = False
                break
        if not ok:
            break
    _indep_cache[key] = ok
    return ok


def dilworth_independent(members: Sequence, k: int) -> bool:
    """Dilworth independence of a collection of (k+1)-subsets."""
    masks = _masks(members, k)
    return _masks_independent(masks, k)


def _mask_rank(masks: Sequence[int], k: int) -> int:
    basis: list = []
    for m in masks:
        if m not in basis and _masks_independent(tuple(basis) + (m,), k):
            basis.append(m)
    return len(basis)


def _mask_basis(masks: Sequence[int], k: int) -> list:
    basis: list = []
    for m in masks:
        if m not in basis and _masks_independent(tuple(basis) + (m,), k):
            basis.append(m)
    return basis


def dilworth_rank(members: Sequence, k: int) -> int:
    """Size of a maximum Dilworth-independent subcollection (matroid greedy)."""
    return _mask_rank(_masks(members, k), k)


def find_sdr(sets: Sequence, ground) -> Optional[list]:
    """System of distinct representatives by augmenting-path matching.

    Returns one representative per set (injective), or None when Hall's
    condition fails.
    """
    ground = set(ground)
    choices = [sorted(set(s) & ground) for s in sets]
    owner: dict = {}

    def augment(i: int, seen: set) -> bool:
        for x in choices[i]:
            if x in seen:
                continue
            seen.add(x)
            if x not in owner or augment(owner[x], seen):
                owner[x] = i
                return True
        return False

    for i in range(len(choices)):
        if not augment(i, set()):
            return None
    rep = [None] * len(choices)
    for x, i in owner.items():
        rep[i] = x
    return rep


@dataclass(frozen=True)
class VeryGenericCertificate:
    verdict: bool
    witness: Optional[tuple]    # Dilworth-independent subsets with deficient rows

    def __bool__(self) -> bool:
        return self.verdict


class DiscRankOracle:
    """Memoized exact rank of discriminantal row subsets."""

    def __init__(self, disc: DiscArrangement):
        self.disc = disc
        self._rows = [int_row(r) for r in disc.normals]
        self._index = {s: i for i, s in enumerate(disc.subsets)}
        self._cache: dict = {}

    def rank_of(self, subsets: Sequence) -> int:
        ids = frozenset(self._index[tuple(s)] for s in subsets)
        hit = self._cache.get(ids)
        if hit is not None:
            return hit
        basis = IntPivotBasis(self.disc.n)
        for i in sorted(ids):
            basis.push(self._rows[i])
        r = basis.rank
        self._cache[ids] = r
        return r


def independent_collections(n: int, k: int, max_size: Optional[int] = None):
    """Yield all Dilworth-independent collections of (k+1)-subsets of 1..n,
    in dictionary order of their index sequences (prefixes first)."""
    circuits = uniform_circuits(n, k)
    masks = _masks(circuits, k)
    cap = n - k if max_size is None else max_size

    def extend(idxs: list, cur_masks: tuple):
        yield tuple(idxs)
        if len(idxs) >= cap:
            return
        start = idxs[-1] + 1 if idxs else 0
        for j in range(start, len(circuits)):
            nxt = cur_masks + (masks[j],)
            if _masks_independent(nxt, k):
                idxs.append(j)
                yield from extend(idxs, nxt)
                idxs.pop()

    for idxs in extend([], ()):
        if idxs:
            yield tuple(circuits[j] for j in idxs)


def is_very_generic(coeffs: Union[Matrix, "object"]) -> VeryGenericCertificate:
    """Exhaustive rank test over all Dilworth-independent collections.

    Verdict is true iff every independent collection of size at most n-m has
    discriminantal rows of full rank. The witness, on failure, is the first
    failing collection in dictionary order.
    """
    mat = coeffs if isinstance(coeffs, Matrix) else coeffs.coeffs
    if not normals_generic(mat):
        raise NotGenericError("very generic is only defined for generic coefficient rows")
    n, m = mat.rows, mat.cols
    disc = build_disc(mat)
    oracle = DiscRankOracle(disc)
    for coll in independent_collections(n, m, max_size=n - m):
        if oracle.rank_of(coll) < len(coll):
            return VeryGenericCertificate(verdict=False, witness=coll)
    return VeryGenericCertificate(verdict=True, witness=None)
