import random

import pytest

from difftoric import (
    LatticeVector,
    MonomialMap,
    NEG_INF,
    jacobi_number,
    order_bound,
    parse_poly,
)
from difftoric.errors import PreconditionError

from oracles import brute_jacobi

P = parse_poly


def V(*texts):
    return LatticeVector([P(t) for t in texts])


def test_jacobi_examples():
    assert jacobi_number([[1, 2], [3, 4]]) == 5
    assert jacobi_number([[NEG_INF, 2], [3, NEG_INF]]) == 5
    assert jacobi_number([[0, 0], [0, 0]]) == 0
    assert jacobi_number([[None]]) == NEG_INF
    assert jacobi_number([[NEG_INF, 1], [NEG_INF, 2]]) == NEG_INF


def test_jacobi_non_square():
    with pytest.raises(PreconditionError):
        jacobi_number([[1, 2], [3]])


def test_jacobi_against_brute_force():
    rng = random.Random(97)
    for _ in range(120):
        n = rng.randint(1, 6)
        matrix = [
            [None if rng.random() < 0.2 else rng.randint(0, 12) for _ in range(n)]
            for _ in range(n)
        ]
        expected = brute_jacobi(matrix)
        got = jacobi_number(matrix)
        if expected is None:
            assert got == NEG_INF
        else:
            assert got == expected


def test_jacobi_permutation_invariance():
    rng = random.Random(101)
    for _ in range(40):
        n = rng.randint(2, 5)
        matrix = [[rng.randint(0, 9) for _ in range(n)] for _ in range(n)]
        base = jacobi_number(matrix)
        perm = list(range(n))
        rng.shuffle(perm)
        rows = [matrix[i] for i in perm]
        cols = [[row[j] for j in perm] for row in matrix]
        assert jacobi_number(rows) == base
        assert jacobi_number(cols) == base


SPREAD_MAP = MonomialMap((V("2", "0"), V("x-1", "0"), V("0", "2"), V("0", "x-1")))


def test_order_bound_two_row_spread():
    report = order_bound(SPREAD_MAP)
    assert report.rows == ((1, 0), (1, 0))
    assert report.bound == 2


def test_order_bound_identity():
    report = order_bound(MonomialMap((V("1", "0"), V("0", "1"))))
    assert report.bound == 0


def test_order_bound_single_row():
    report = order_bound(MonomialMap((V("x^2"), V("x"))))
    assert report.rows == ((2, 1),)
    assert report.bound == 1


def test_order_bound_zero_row_rejected():
    with pytest.raises(PreconditionError):
        order_bound(MonomialMap((V("1", "0"), V("x", "0"))))


def test_order_bound_column_permutation_invariant():
    rng = random.Random(103)
    cols = list(SPREAD_MAP.columns)
    base = order_bound(SPREAD_MAP).bound
    for _ in range(6):
        rng.shuffle(cols)
        assert order_bound(MonomialMap(tuple(cols))).bound == base


def test_order_bound_nonnegative_random():
    rng = random.Random(107)
    for _ in range(60):
        n, m = rng.randint(1, 3), rng.randint(1, 4)
        cols = []
        for _ in range(m):
            entries = [
                [rng.randint(-2, 2) if rng.random() < 0.7 else 0 for _ in range(3)]
                for _ in range(n)
            ]
            cols.append(LatticeVector([P("0") if all(c == 0 for c in e) else _poly(e) for e in entries]))
        mm = MonomialMap(tuple(cols))
        try:
            report = order_bound(mm)
        except PreconditionError:
            continue
        assert report.bound >= 0
        for o, ol in report.rows:
            assert o >= ol


def _poly(coeffs):
    from difftoric import IntPoly

    return IntPoly(coeffs)
