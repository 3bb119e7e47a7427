"""Affine hyperplane arrangements over exact rationals.

An arrangement is n hyperplanes a_i . x = b_i in R^m. Genericity is decided
exactly: every r <= m normals independent, and no m+1 hyperplanes meeting in
a point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .exactmath import Matrix, det, rat, rat_str, solve_square


class ParseError(ValueError):
    pass


class NotGenericError(ValueError):
    pass


@dataclass(frozen=True)
class Arrangement:
    m: int
    coeffs: Matrix                       # n x m normal rows
    constants: tuple                     # n right-hand sides

    def __post_init__(self):
        if self.m < 1 or self.coeffs.rows < 1:
            raise ValueError("need n >= 1 hyperplanes in dimension m >= 1")
        if self.coeffs.cols != self.m:
            raise ValueError("coefficient matrix width differs from m")
        if len(self.constants) != self.coeffs.rows:
            raise ValueError("constants length differs from hyperplane count")
        for i in range(self.coeffs.rows):
            if not any(self.coeffs.row(i)):
                raise ValueError(f"hyperplane {i + 1} has a zero coefficient row")

    @property
    def n(self) -> int:
        return self.coeffs.rows

    def value(self, i: int, point: Sequence[Fraction]) -> Fraction:
        """a_i . point - b_i for the 1-based hyperplane i."""
        row = self.coeffs.row(i - 1)
        return sum((a * x for a, x in zip(row, point)), Fraction(0)) - self.constants[i - 1]


@dataclass(frozen=True)
class ConcurrencyReport:
    sets: tuple      # sorted tuples of 1-based hyperplane indices, card >= m+1
    points: tuple    # rational point per set


def parse_dict(doc: dict) -> Arrangement:
    if not isinstance(doc, dict) or "m" not in doc or "hyperplanes" not in doc:
        raise ParseError('document must contain "m" and "hyperplanes"')
    m = doc["m"]
    if not isinstance(m, int) or m < 1:
        raise ParseError('"m" must be a positive integer')
    planes = doc["hyperplanes"]
    if not isinstance(planes, list) or not planes:
        raise ParseError("empty hyperplane list")
    rows = []
    consts = []
    for i, h in enumerate(planes, start=1):
        try:
            coeffs = [rat(x) for x in h["coeffs"]]
            const = rat(h["constant"])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"hyperplane {i}: {exc}") from None
        if len(coeffs) != m:
            raise ParseError(f"hyperplane {i}: expected {m} coefficients, got {len(coeffs)}")
        if not any(coeffs):
            raise ParseError(f"hyperplane {i}: zero coefficient row")
        rows.append(coeffs)
        consts.append(const)
    return Arrangement(m=m, coeffs=Matrix.from_rows(rows), constants=tuple(consts))


def parse(text: str) -> Arrangement:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return parse_dict(doc)


def to_dict(arr: Arrangement) -> dict:
    return {
        "m": arr.m,
        "hyperplanes": [
            {
                "coeffs": [rat_str(x) for x in arr.coeffs.row(i)],
                "constant": rat_str(arr.constants[i]),
            }
            for i in range(arr.n)
        ],
    }


def serialize(arr: Arrangement) -> str:
    return json.dumps(to_dict(arr), indent=2)


def _coeffs_of(h: Union[Arrangement, Matrix]) -> Matrix:
    return h.coeffs if isinstance(h, Arrangement) else h


def normals_generic(h: Union[Arrangement, Matrix]) -> bool:
    """True iff every subset of at most m coefficient rows is independent."""
    coeffs = _coeffs_of(h)
    n, m = coeffs.rows, coeffs.cols
    r = min(n, m)
    for rows in combinations(range(n), r):
        sub = Matrix(r, m, [coeffs[i, j] for i in rows for j in range(m)])
        if r == m:
            if det(Matrix(r, r, sub.entries)) == 0:
                return False
        else:
            from .exactmath import rank

            if rank(sub) < r:
                return False
    return True


def is_generic(arr: Arrangement) -> bool:
    """Exact general-position test.

    Any r <= m hyperplanes must meet in dimension m - r (their normals are
    independent), and any m+1 must have empty intersection (the bordered
    (m+1)x(m+1) determinant with the constants column is nonzero).
    """
    if not normals_generic(arr):
        return False
    n, m = arr.n, arr.m
    for rows in combinations(range(n), m + 1):
        if n < m + 1:
            break
        bordered = Matrix(
            m + 1,
            m + 1,
            [
                arr.coeffs[i, j] if j < m else arr.constants[i]
                for i in rows
                for j in range(m + 1)
            ],
        )
        if det(bordered) == 0:
            return False
    return True


def concurrency_report(arr: Arrangement) -> ConcurrencyReport:
    """Maximal sets of m+1 or more hyperplanes through a common point.

    Every such point is the intersection of some m of its hyperplanes, so
    scanning the exact solutions of all m-subsets finds them all; points are
    grouped by exact coordinate equality.
    """
    if not normals_generic(arr):
        raise NotGenericError("concurrency report requires generic normals")
    n, m = arr.n, arr.m
    if n < m + 1:
        return ConcurrencyReport(sets=(), points=())
    seen = {}
    for rows in combinations(range(n), m):
        sub = Matrix(m, m, [arr.coeffs[i, j] for i in rows for j in range(m)])
        rhs = [arr.constants[i] for i in rows]
        point = tuple(solve_square(sub, rhs))
        if point in seen:
            continue
        members = tuple(
            i + 1 for i in range(n) if arr.value(i + 1, point) == 0
        )
        seen[point] = members
    sets = []
    points = []
    for point, members in seen.items():
        if len(members) >= m + 1:
            sets.append(members)
            points.append(point)
    order = sorted(range(len(sets)), key=lambda t: sets[t])
    return ConcurrencyReport(
        sets=tuple(sets[t] for t in order),
        points=tuple(points[t] for t in order),
    )
