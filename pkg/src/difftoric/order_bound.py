"""Jacobi numbers and the order bound for toric difference varieties.

The Jacobi number of a square matrix over N plus -infinity is its maximal
permutation (diagonal) sum, computed by an exact integer assignment solver;
forbidden entries are handled with a large penalty and detected afterwards.
The order bound sums, over the rows of the exponent matrix, the spread
between the largest degree and the smallest trailing degree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .poly_core import NEG_INF
from .syzygy_transform import MonomialMap

MINUS_INF = NEG_INF


def _is_forbidden(entry) -> bool:
    return entry is None or entry == NEG_INF


def _min_cost_assignment(cost: list[list[int]]) -> list[int]:
    """Column index assigned to each row, minimizing total cost (O(n^3))."""
    n = len(cost)
    INF = sum(sum(abs(c) for c in row) for row in cost) + 1
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)  # p[j]: row matched to column j (1-based)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = INF
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    assign = [0] * n
    for j in range(1, n + 1):
        if p[j]:
            assign[p[j] - 1] = j - 1
    return assign


def jacobi_number(matrix: list[list]):
    """Maximal diagonal sum; -infinity when every permutation hits one."""
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise PreconditionError("jacobi_number needs a square matrix")
    if n == 0:
        return 0
    finite_sum = sum(
        int(e) for row in matrix for e in row if not _is_forbidden(e)
    )
    penalty = finite_sum + 1
    weights = [
        [-penalty if _is_forbidden(e) else int(e) for e in row] for row in matrix
    ]
    assign = _min_cost_assignment([[-w for w in row] for row in weights])
    if any(_is_forbidden(matrix[i][assign[i]]) for i in range(n)):
        return MINUS_INF
    return sum(weights[i][assign[i]] for i in range(n))


@dataclass(frozen=True)
class OrderBoundReport:
    rows: tuple[tuple[int, int], ...]  # (o_i, underline o_i) per row
    bound: int


def order_bound(U: MonomialMap) -> OrderBoundReport:
    """Sum over rows of (max degree - min trailing degree) of the exponent matrix.

    Rejects exponent matrices with a zero row; a zero entry contributes its
    trailing-degree convention 0 to the minimum and is skipped in the maximum.
    """
    rows = []
    for r in range(U.dim):
        entries = [c.entries[r] for c in U.columns]
        if all(e.is_zero() for e in entries):
            raise PreconditionError(f"exponent matrix has zero row {r + 1}")
        o = max(int(e.deg()) for e in entries if not e.is_zero())
        o_low = min(e.lowdeg() for e in entries)
        rows.append((o, o_low))
    bound = sum(o - ol for o, ol in rows)
    return OrderBoundReport(tuple(rows), bound)
