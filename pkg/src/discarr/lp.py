"""Exact rational linear programming, just enough for strict-feasibility.

The one question asked here: does a system of strict inequalities
sign * (normal . y) > 0 plus equalities normal . y = 0 admit a solution?
It is decided by maximizing a slack epsilon subject to
sign * (normal . y) >= epsilon and epsilon <= 1; the optimum is 1 exactly
when the strict system is solvable (scaling y), else 0. The simplex runs
over Fractions with Bland's rule, so it cannot cycle despite the heavy
degeneracy of the all-zero right-hand sides.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .exactmath import DimensionError, rat


class UnboundedError(RuntimeError):
    pass


def _simplex_max(a: list, b: list, c: list) -> Tuple[Fraction, list]:
    """max c.x subject to a x <= b, x >= 0, with b >= 0 (slack start).

    Returns (optimal value, primal solution). Bland's rule: entering column
    is the lowest-index negative reduced cost, leaving row breaks ratio ties
    by lowest basic variable index.
    """
    m = len(a)
    n = len(c)
    tab = [list(row) + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i, row in enumerate(a)]
    z = [-x for x in c] + [Fraction(0)] * (m + 1)
    basis = list(range(n, n + m))
    total = n + m
    while True:
        enter = next((j for j in range(total) if z[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coef = tab[i][enter]
            if coef > 0:
                ratio = tab[i][total] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise UnboundedError("objective unbounded above")
        piv = tab[leave][enter]
        tab[leave] = [x / piv for x in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[leave])]
        if z[enter]:
            f = z[enter]
            z = [x - f * y for x, y in zip(z, tab[leave])]
        basis[leave] = enter
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tab[i][total]
    return z[total], x


def _as_vec(v: Sequence, width: int) -> list:
    vec = [rat(x) for x in v]
    if len(vec) != width:
        raise DimensionError(f"constraint vector has length {len(vec)}, expected {width}")
    return vec


def lp_strict_point(
    strict: Sequence[Tuple[Sequence, int]],
    tight: Sequence[Sequence],
    width: Optional[int] = None,
) -> Optional[list]:
    """A rational witness y with sign*(g.y) > 0 for all strict pairs and
    h.y = 0 for all tight normals, or None when none exists."""
    if width is None:
        if strict:
            width = len(strict[0][0])
        elif tight:
            width = len(tight[0])
        else:
            return []
    rows = []
    rhs = []
    for g, sign in strict:
        g = _as_vec(g, width)
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        # epsilon - sign*(g.(u - w)) <= 0 in variables (u, w, epsilon)
        rows.append([-sign * x for x in g] + [sign * x for x in g] + [Fraction(1)])
        rhs.append(Fraction(0))
    for h in tight:
        h = _as_vec(h, width)
        rows.append(list(h) + [-x for x in h] + [Fraction(0)])
        rhs.append(Fraction(0))
        rows.append([-x for x in h] + list(h) + [Fraction(0)])
        rhs.append(Fraction(0))
    rows.append([Fraction(0)] * (2 * width) + [Fraction(1)])
    rhs.append(Fraction(1))
    objective = [Fraction(0)] * (2 * width) + [Fraction(1)]
    value, x = _simplex_max(rows, rhs, objective)
    if value <= 0:
        return None
    y = [x[j] - x[width + j] for j in range(width)]
    for g, sign in strict:
        assert sign * sum(rat(a) * b for a, b in zip(g, y)) > 0
    for h in tight:
        assert sum(rat(a) * b for a, b in zip(h, y)) == 0
    return y


def lp_strict_feasible(
    strict: Sequence[Tuple[Sequence, int]],
    tight: Sequence[Sequence],
    width: Optional[int] = None,
) -> bool:
    return lp_strict_point(strict, tight, width) is not None
