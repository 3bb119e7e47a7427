"""Cone location, facet detection, and simplex cells.

A translation vector b picks an open cone of the discriminantal arrangement
through its sign vector. A discriminantal hyperplane is a facet of that cone
when the cone's closure meets it in codimension one, decided by an exact
strict-feasibility LP. Simplex cells of the affine arrangement are the
bounded regions with exactly m+1 walls.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .arrangement import Arrangement, NotGenericError, is_generic
from .discriminantal import DiscArrangement, build_disc
from .exactmath import Matrix, dot, rat, solve_square
from .lp import lp_strict_feasible, lp_strict_point


class OnHyperplaneError(ValueError):
    def __init__(self, subset):
        self.subset = tuple(subset)
        super().__init__(f"point lies on the hyperplane of subset {self.subset}")


def sign_vector(disc: DiscArrangement, b: Sequence) -> tuple:
    """Sign of b against every discriminantal normal, dictionary order."""
    vec = [rat(x) for x in b]
    if len(vec) != disc.n:
        raise ValueError(f"expected a vector of length {disc.n}")
    signs = []
    for subset, normal in zip(disc.subsets, disc.normals):
        v = dot(normal, vec)
        if v == 0:
            raise OnHyperplaneError(subset)
        signs.append(1 if v > 0 else -1)
    return tuple(signs)


def is_facet(disc: DiscArrangement, sigma: Sequence[int], subset) -> bool:
    """Does the hyperplane of `subset` bound the cone of sign vector sigma
    in codimension one? True iff the cone's strict system stays solvable
    after turning this one inequality into an equality."""
    idx = disc.index_of(subset)
    strict = [
        (disc.normals[i], sigma[i]) for i in range(len(disc.normals)) if i != idx
    ]
    return lp_strict_feasible(strict, [disc.normals[idx]], width=disc.n)


def facet_witness(disc: DiscArrangement, sigma: Sequence[int], subset) -> Optional[list]:
    """Exact point on the hyperplane, strictly inside all other walls."""
    idx = disc.index_of(subset)
    strict = [
        (disc.normals[i], sigma[i]) for i in range(len(disc.normals)) if i != idx
    ]
    return lp_strict_point(strict, [disc.normals[idx]], width=disc.n)


def cone_facets(disc: DiscArrangement, sigma: Sequence[int]) -> list:
    """(subset, is_facet) for every row, dictionary order."""
    return [(s, is_facet(disc, sigma, s)) for s in disc.subsets]


@dataclass(frozen=True)
class SimplexCell:
    hyperplanes: tuple   # m+1 indices, 1-based
    vertices: tuple      # m+1 rational points; vertex t omits hyperplane t


def _vertex(arr: Arrangement, rows: Sequence[int]):
    sub = Matrix(arr.m, arr.m, [arr.coeffs[i - 1, j] for i in rows for j in range(arr.m)])
    rhs = [arr.constants[i - 1] for i in rows]
    return tuple(solve_square(sub, rhs))


def simplex_cells(arr: Arrangement) -> list:
    """All bounded cells with exactly m+1 walls.

    A candidate (m+1)-subset spans a simplex on its pairwise intersection
    vertices; it is a cell iff every other hyperplane has all m+1 vertices
    strictly on one side.
    """
    if not is_generic(arr):
        raise NotGenericError("simplex cells are defined for generic arrangements")
    n, m = arr.n, arr.m
    cells = []
    for subset in combinations(range(1, n + 1), m + 1):
        vertices = [_vertex(arr, [i for i in subset if i != t]) for t in subset]
        ok = True
        for j in range(1, n + 1):
            if j in subset:
                continue
            vals = [arr.value(j, v) for v in vertices]
            if all(x > 0 for x in vals) or all(x < 0 for x in vals):
                continue
            ok = False
            break
        if ok:
            cells.append(SimplexCell(hyperplanes=subset, vertices=tuple(vertices)))
    return cells


def _cells_by_barycenter(arr: Arrangement) -> list:
    """Independent re-derivation used by the tests: compare every vertex's
    side against the barycenter's side instead of demanding a uniform sign."""
    if not is_generic(arr):
        raise NotGenericError("simplex cells are defined for generic arrangements")
    n, m = arr.n, arr.m
    out = []
    for subset in combinations(range(1, n + 1), m + 1):
        vertices = [_vertex(arr, [i for i in subset if i != t]) for t in subset]
        bary = tuple(
            sum((v[j] for v in vertices), Fraction(0)) / (m + 1) for j in range(m)
        )
        if any(arr.value(j, bary) == 0 for j in range(1, n + 1)):
            continue
        ok = True
        for j in range(1, n + 1):
            if j in subset:
                continue
            side = arr.value(j, bary) > 0
            if any((arr.value(j, v) > 0) != side or arr.value(j, v) == 0 for v in vertices):
                ok = False
                break
        if ok:
            out.append(subset)
    return out


@dataclass(frozen=True)
class CorrespondenceRecord:
    subset: tuple
    cell_present: bool
    facet: bool


def correspondence_report(arr: Arrangement) -> list:
    """Pair each (m+1)-subset's simplex-cell status with the facet status of
    its hyperplane for the cone picked out by the arrangement's constants."""
    disc = build_disc(arr.coeffs)
    sigma = sign_vector(disc, arr.constants)
    cells = {c.hyperplanes for c in simplex_cells(arr)}
    report = []
    for subset in disc.subsets:
        report.append(
            CorrespondenceRecord(
                subset=subset,
                cell_present=subset in cells,
                facet=is_facet(disc, sigma, subset),
            )
        )
    return report


def render_svg(arr: Arrangement, size: int = 640) -> str:
    """Plain SVG 1.1 picture of a line arrangement with simplex cells shaded.

    Lines are clipped to the bounding box of all pairwise intersection
    points, padded by 20 percent on each side.
    """
    if arr.m != 2:
        raise ValueError("SVG rendering is only defined for m = 2")
    pts = []
    for i, j in combinations(range(1, arr.n + 1), 2):
        pts.append(_vertex(arr, [i, j]))
    xs = [float(p[0]) for p in pts]
    ys = [float(p[1]) for p in pts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    spanx = max(x1 - x0, 1e-9)
    spany = max(y1 - y0, 1e-9)
    x0 -= 0.2 * spanx
    x1 += 0.2 * spanx
    y0 -= 0.2 * spany
    y1 += 0.2 * spany
    scale = size / max(x1 - x0, y1 - y0)

    def to_px(p):
        return ((float(p[0]) - x0) * scale, (y1 - float(p[1])) * scale)

    width = (x1 - x0) * scale
    height = (y1 - y0) * scale
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}">',
        f'<rect width="{width:.1f}" height="{height:.1f}" fill="white"/>',
    ]
    for cell in simplex_cells(arr):
        coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(to_px, cell.vertices))
        parts.append(f'<polygon points="{coords}" fill="#9ecae1" fill-opacity="0.7"/>')
    for i in range(1, arr.n + 1):
        a, bcoef = (float(arr.coeffs[i - 1, 0]), float(arr.coeffs[i - 1, 1]))
        c = float(arr.constants[i - 1])
        # clip a x + b y = c to the padded box
        hits = []
        if abs(bcoef) > 1e-12:
            for x in (x0, x1):
                y = (c - a * x) / bcoef
                if y0 - 1e-9 <= y <= y1 + 1e-9:
                    hits.append((x, y))
        if abs(a) > 1e-12:
            for y in (y0, y1):
                x = (c - bcoef * y) / a
                if x0 - 1e-9 <= x <= x1 + 1e-9:
                    hits.append((x, y))
        uniq = []
        for h in hits:
            if all(abs(h[0] - u[0]) + abs(h[1] - u[1]) > 1e-9 for u in uniq):
                uniq.append(h)
        if len(uniq) >= 2:
            (px1, py1), (px2, py2) = to_px(uniq[0]), to_px(uniq[1])
            parts.append(
                f'<line x1="{px1:.2f}" y1="{py1:.2f}" x2="{px2:.2f}" y2="{py2:.2f}" '
                f'stroke="black" stroke-width="1.5"/>'
            )
            lx, ly = to_px(uniq[0])
            lx = min(max(lx, 12.0), width - 12.0)
            ly = min(max(ly, 12.0), height - 12.0)
            parts.append(f'<text x="{lx:.1f}" y="{ly:.1f}" font-size="12">L{i}</text>')
    parts.append("</svg>")
    return "\n".join(parts)
