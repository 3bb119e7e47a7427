"""Pure-Python subset-rank enumeration kernel.

Walks the full binary tree of row subsets, carrying an incremental
fraction-free elimination basis; each take-edge reduces one row, so the whole
2^N-subset sum costs about 2^N row reductions. Arbitrary-precision ints, so
no overflow concerns.
"""

from __future__ import annotations

from typing import Sequence


def rank_signed_counts(rows: Sequence[Sequence[int]], width: int) -> list:
    """counts[r] = sum over all subsets B of rows of (-1)^|B| with rank(B) = r."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    maxr = min(width, nrows)
    counts = [0] * (maxr + 1)
    pivots: list = []
    pivcols: list = []
    denoms: list = [1]
    rng = range(width)

    def dfs(i: int, sign: int) -> None:
        if i == nrows:
            counts[len(pivots)] += sign
            return
        dfs(i + 1, sign)
        v = list(rows[i])
        for j, (p, c) in enumerate(zip(pivots, pivcols)):
            d = denoms[j + 1]
            prev = denoms[j]
            vc = v[c]
            for t in rng:
                v[t] = (d * v[t] - vc * p[t]) // prev
            if not any(v):
                break
        lead = next((t for t in rng if v[t]), -1)
        if lead < 0:
            dfs(i + 1, -sign)
        else:
            pivots.append(v)
            pivcols.append(lead)
            denoms.append(v[lead])
            dfs(i + 1, -sign)
            pivots.pop()
            pivcols.pop()
            denoms.pop()

    dfs(0, 1)
    return counts
