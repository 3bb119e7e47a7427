"""Discriminantal arrangement of a generic arrangement.

For each (m+1)-subset S of the n hyperplanes, one normal in R^n: the
coefficient vector of the y-variables in the bordered determinant whose rows
are the coefficient rows of S with y appended as the last column. Expanding
along that column, the coefficient of y at position t in S is
(-1)^(m+1+t) times the m x m coefficient minor on the other rows of S.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .arrangement import Arrangement
from .exactmath import Matrix, det


def subsets_lex(n: int, size: int) -> list:
    """All sorted size-subsets of 1..n in dictionary order."""
    return [tuple(c) for c in combinations(range(1, n + 1), size)]


@dataclass(frozen=True)
class DiscArrangement:
    n: int
    m: int
    subsets: tuple          # binom(n, m+1) index tuples, dictionary order
    normals: tuple          # matching rows in R^n

    def index_of(self, subset: Sequence[int]) -> int:
        key = tuple(subset)
        try:
            return self.subsets.index(key)
        except ValueError:
            raise ValueError(f"{key} is not an (m+1)-subset row of this arrangement") from None

    def normals_matrix(self) -> Matrix:
        return Matrix.from_rows([list(r) for r in self.normals])


def _coeffs_of(a: Union[Arrangement, Matrix]) -> Matrix:
    return a.coeffs if isinstance(a, Arrangement) else a


def disc_row(a: Union[Arrangement, Matrix], subset: Sequence[int]) -> list:
    """Normal vector in R^n attached to one (m+1)-subset of hyperplanes."""
    coeffs = _coeffs_of(a)
    n, m = coeffs.rows, coeffs.cols
    subset = tuple(subset)
    if len(subset) != m + 1:
        raise ValueError(f"subset must have {m + 1} elements")
    v = [Fraction(0)] * n
    for t, i in enumerate(subset, start=1):
        others = [j for j in subset if j != i]
        sub = Matrix(m, m, [coeffs[j - 1, c] for j in others for c in range(m)])
        sign = -1 if (m + 1 + t) % 2 else 1
        v[i - 1] = sign * det(sub)
    return v


def build_disc(a: Union[Arrangement, Matrix]) -> DiscArrangement:
    """All binom(n, m+1) normals, in dictionary order of their subsets."""
    coeffs = _coeffs_of(a)
    n, m = coeffs.rows, coeffs.cols
    if n <= m:
        raise ValueError(f"need n > m, got n={n}, m={m}")
    subs = subsets_lex(n, m + 1)
    normals = tuple(tuple(disc_row(coeffs, s)) for s in subs)
    return DiscArrangement(n=n, m=m, subsets=tuple(subs), normals=normals)


def canonical_normals(disc: DiscArrangement) -> tuple:
    """Rows scaled primitive (gcd 1, leading entry positive), for hashing."""
    out = []
    for row in disc.normals:
        ints = [int(x) if x.denominator == 1 else None for x in row]
        if any(x is None for x in ints):
            lcm = 1
            for x in row:
                lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
            ints = [int(x * lcm) for x in row]
        g = 0
        for x in ints:
            g = math.gcd(g, abs(x))
        if g:
            ints = [x // g for x in ints]
            lead = next(x for x in ints if x)
            if lead < 0:
                ints = [-x for x in ints]
        out.append(tuple(ints))
    return tuple(out)
