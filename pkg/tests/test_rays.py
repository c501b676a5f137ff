"""Exact extreme-ray enumeration on hand-checkable cones."""

from fractions import Fraction

import pytest

from tensorcone.errors import ConsistencyError
from tensorcone.rays import extreme_rays, matrix_rank, row_reduce


def rows(*data):
    return [tuple(Fraction(x) for x in r) for r in data]


def test_row_reduce_rank():
    assert matrix_rank(rows((1, 2), (2, 4))) == 1
    assert matrix_rank(rows((1, 0), (0, 1))) == 2
    rref, pivots = row_reduce([[Fraction(2), Fraction(4)]])
    assert rref[0] == [Fraction(1), Fraction(2)] and pivots == [0]


def test_positive_orthant():
    assert extreme_rays(rows((1, 0, 0), (0, 1, 0), (0, 0, 1))) == [
        (0, 0, 1),
        (0, 1, 0),
        (1, 0, 0),
    ]


def test_halved_orthant():
    # x >= 0, y >= 0, y <= x: rays (1,0) and (1,1)
    got = extreme_rays(rows((1, 0), (0, 1), (1, -1)))
    assert got == [(1, 0), (1, 1)]


def test_redundant_rows_do_not_add_rays():
    base = rows((1, 0), (0, 1))
    redundant = base + rows((1, 1), (2, 1))
    assert extreme_rays(base) == extreme_rays(redundant)


def test_unpointed_cone_rejected():
    with pytest.raises(ConsistencyError):
        extreme_rays(rows((1, 0, 0), (0, 1, 0)))


def test_triangle_cone_scaled_rows():
    # same cone with rescaled inequality rows keeps the same primitive rays
    plain = extreme_rays(rows((1, 1, -1), (1, -1, 1), (-1, 1, 1)))
    scaled = extreme_rays(
        rows(("1/2", "1/2", "-1/2"), (3, -3, 3), ("-1/5", "1/5", "1/5"))
    )
    assert plain == scaled == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
