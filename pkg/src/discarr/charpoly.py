"""Characteristic polynomials and cone counts of central arrangements.

Three independent routes are provided: the subset sum over all 2^N row
subsets, a Moebius sum over the lattice of flats of the normals, and a
deletion/restriction recursion on the region count. They must agree, and the
tests enforce that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import _whitney_py
from .discriminantal import DiscArrangement
from .exactmath import IntPivotBasis, Matrix, int_row, nullspace, rat

try:
    from . import _whitney as _whitney_ext
except ImportError:          # extension not built; pure fallback only
    _whitney_ext = None

# Largest admissible Hadamard bound for the compiled kernel: intermediate
# products must fit in 128 bits and stored minors in 64.
_SAFE_BOUND_SQ = 1 << 124


@dataclass(frozen=True)
class CharPoly:
    """Integer polynomial; coeffs[d] is the coefficient of t^d."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "x" if d == 1 else f"x^{d}"
                body = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+{body}" if c > 0 else f"-{body}")
        return "".join(parts) if parts else "0"


def _as_rows(normals: Union[DiscArrangement, Sequence], ambient: Optional[int]) -> tuple:
    """Normalize input to (list of integer rows, ambient dimension)."""
    if isinstance(normals, DiscArrangement):
        rows = [list(r) for r in normals.normals]
        width = normals.n
    else:
        rows = [[rat(x) for x in r] for r in normals]
        if not rows:
            raise ValueError("need at least one normal")
        width = ambient if ambient is not None else len(rows[0])
    int_rows = []
    for i, r in enumerate(rows, start=1):
        if len(r) != width:
            raise ValueError(f"normal {i} has length {len(r)}, expected {width}")
        if not any(r):
            raise ValueError(f"normal {i} is zero")
        int_rows.append(int_row([rat(x) for x in r]))
    return int_rows, width


def _compiled_safe(rows: Sequence[Sequence[int]], width: int) -> bool:
    norms_sq = sorted((sum(x * x for x in r) for r in rows), reverse=True)
    r = min(width, len(rows))
    prod = 1
    for v in norms_sq[:r]:
        prod *= max(v, 1)
        if prod >= _SAFE_BOUND_SQ:
            return False
    return True


def kernel_backend() -> str:
    return "compiled" if _whitney_ext is not None else "pure"


def _signed_counts(rows, width, impl: str):
    if impl not in ("auto", "compiled", "pure"):
        raise ValueError(f"unknown impl {impl!r}")
    if impl == "compiled" and _whitney_ext is None:
        raise RuntimeError("compiled kernel is not available")
    use_ext = (
        _whitney_ext is not None
        and impl in ("auto", "compiled")
        and len(rows) <= 30
        and _compiled_safe(rows, width)
    )
    if use_ext:
        return _whitney_ext.rank_signed_counts(rows, width)
    return _whitney_py.rank_signed_counts(rows, width)


def whitney_char_poly(
    normals: Union[DiscArrangement, Sequence],
    ambient: Optional[int] = None,
    impl: str = "auto",
) -> CharPoly:
    """Characteristic polynomial as the signed subset sum over all 2^N row
    subsets, with subset ranks obtained incrementally along the recursion."""
    rows, width = _as_rows(normals, ambient)
    counts = _signed_counts(rows, width, impl)
    coeffs = [0] * (width + 1)
    for r, c in enumerate(counts):
        coeffs[width - r] += c
    return CharPoly(coeffs=tuple(coeffs))


def count_cones(chi: CharPoly, n: int) -> int:
    """(-1)^n chi(-1), the number of open cones of a central arrangement."""
    if chi.degree != n:
        raise ValueError(f"polynomial degree {chi.degree} differs from n={n}")
    return (-1) ** n * chi(-1)


def _flats_by_rank(rows: Sequence[Sequence[int]], width: int) -> list:
    """All flats of the vector matroid on the rows.

    Returns a list of (frozenset of row ids, rank), bottom first, generated
    level by level through span closures.
    """
    nrows = len(rows)
    bottom = frozenset()
    flats = {bottom: 0}
    level = [bottom]
    rk = 0
    while level:
        rk += 1
        nxt = set()
        for flat in level:
            outside = [e for e in range(nrows) if e not in flat]
            for e in outside:
                basis = IntPivotBasis(width)
                for i in flat:
                    basis.push(rows[i])
                basis.push(rows[e])
                closed = frozenset(
                    i for i in range(nrows) if basis.contains(rows[i])
                )
                if closed not in flats:
                    nxt.add(closed)
        for f in nxt:
            flats[f] = rk
        level = sorted(nxt, key=sorted)
    return sorted(flats.items(), key=lambda kv: (kv[1], sorted(kv[0])))


def _mobius_from_bottom(flats: list) -> dict:
    """mu(bottom, F) over the containment order of closed row sets."""
    mu: dict = {}
    for flat, _rk in flats:
        if not flat:
            mu[flat] = 1
            continue
        acc = 0
        for other, _r in flats:
            if other != flat and other <= flat:
                acc += mu[other]
        mu[flat] = -acc
    return mu


def char_poly_via_flats(
    normals: Union[DiscArrangement, Sequence], ambient: Optional[int] = None
) -> CharPoly:
    """Independent oracle: Moebius sum over the lattice of flats."""
    rows, width = _as_rows(normals, ambient)
    flats = _flats_by_rank(rows, width)
    mu = _mobius_from_bottom(flats)
    coeffs = [0] * (width + 1)
    for flat, rk in flats:
        coeffs[width - rk] += mu[flat]
    return CharPoly(coeffs=tuple(coeffs))


def _primitive(vec: Sequence[Fraction]) -> Optional[tuple]:
    ints = int_row(list(vec))
    g = 0
    for x in ints:
        g = math.gcd(g, abs(x))
    if g == 0:
        return None
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def count_cones_deletion_restriction(
    normals: Union[DiscArrangement, Sequence], ambient: Optional[int] = None
) -> int:
    """Second oracle: regions(A) = regions(A minus H) + regions(A restricted
    to H), recursing with exact restriction to the hyperplane."""
    rows, width = _as_rows(normals, ambient)
    start = frozenset(p for p in (_primitive([Fraction(x) for x in r]) for r in rows) if p)
    memo: dict = {}

    def count(normset: frozenset, dim: int) -> int:
        if not normset:
            return 1
        key = (normset, dim)
        hit = memo.get(key)
        if hit is not None:
            return hit
        ordered = sorted(normset)
        h = ordered[-1]
        rest = frozenset(ordered[:-1])
        basis = nullspace(Matrix.from_rows([list(h)]))   # dim x (dim-1)
        projected = set()
        for u in rest:
            w = [
                sum(Fraction(u[t]) * basis[t, j] for t in range(dim))
                for j in range(basis.cols)
            ]
            p = _primitive(w)
            if p is not None:
                projected.add(p)
        result = count(rest, dim) + count(frozenset(projected), dim - 1)
        memo[key] = result
        return result

    return count(start, width)
