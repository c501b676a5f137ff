"""Exact extreme-ray enumeration for pointed rational polyhedral cones.

Small systems only: the search walks all (d-1)-subsets of the inequality
rows, which is fine at desk scale and keeps every step auditable.  All
arithmetic is over the rationals; output rays are primitive integer
vectors.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import ConsistencyError

Row = tuple[Fraction, ...]


def row_reduce(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns, in place on a copy."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    cols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [inv * x for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def matrix_rank(rows: list[Row] | list[list[Fraction]]) -> int:
    _, pivots = row_reduce([list(r) for r in rows])
    return len(pivots)


def _null_vector(rows: list[Row]) -> tuple[Fraction, ...] | None:
    """A spanning vector of the kernel when its dimension is exactly one."""
    if not rows:
        return None
    cols = len(rows[0])
    rref, pivots = row_reduce([list(r) for r in rows])
    free = [c for c in range(cols) if c not in pivots]
    if len(free) != 1:
        return None
    c0 = free[0]
    v = [Fraction(0)] * cols
    v[c0] = Fraction(1)
    for r, c in enumerate(pivots):
        v[c] = -rref[r][c0]
    return tuple(v)


def _primitive(v: tuple[Fraction, ...]) -> tuple[int, ...]:
    denom = 1
    for x in v:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ConsistencyError("zero vector cannot be a ray")
    return tuple(x // g for x in ints)


def extreme_rays(rows: list[Row]) -> list[tuple[int, ...]]:
    """Extreme rays of {x : rows . x >= 0}, which must be a pointed cone.

    Every candidate comes from a (d-1)-subset of rows with one-dimensional
    kernel; it is kept when it satisfies all inequalities after orientation
    and its tight rows have rank d-1.
    """
    if not rows:
        return []
    d = len(rows[0])
    if matrix_rank(rows) != d:
        raise ConsistencyError("inequality system does not cut a pointed cone")
    distinct = sorted(set(rows))
    found: set[tuple[int, ...]] = set()
    for subset in combinations(range(len(distinct)), d - 1):
        v = _null_vector([distinct[i] for i in subset])
        if v is None:
            continue
        signs = [sum(a * b for a, b in zip(row, v)) for row in distinct]
        if all(x >= 0 for x in signs):
            ray = v
        elif all(x <= 0 for x in signs):
            ray = tuple(-x for x in v)
        else:
            continue
        tight = [distinct[i] for i, x in enumerate(signs) if x == 0]
        if matrix_rank(tight) != d - 1:
            continue
        found.add(_primitive(ray))
    return sorted(found)
