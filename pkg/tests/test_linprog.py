from fractions import Fraction as F

from probarg.linprog import EQ, GE, LE, solve_lp


def test_simple_max():
    # max x + y s.t. x + 2y <= 4, 3x + y <= 6
    res = solve_lp([1, 1], [([1, 2], LE, 4), ([3, 1], LE, 6)])
    assert res.status == "optimal"
    assert res.value == F(14, 5)
    assert res.solution == [F(8, 5), F(6, 5)]


def test_min_with_equality():
    # min x + y s.t. x + y + z == 1, x >= 1/3
    res = solve_lp(
        [1, 1, 0],
        [([1, 1, 1], EQ, 1), ([1, 0, 0], GE, F(1, 3))],
        maximize=False,
    )
    assert res.status == "optimal"
    assert res.value == F(1, 3)


def test_infeasible():
    res = solve_lp([1], [([1], GE, 2), ([1], LE, 1)])
    assert res.status == "infeasible"


def test_unbounded():
    res = solve_lp([1], [([1], GE, 0)])
    assert res.status == "unbounded"


def test_negative_rhs_normalization():
    # -x <= -2 is x >= 2
    res = solve_lp([1], [([-1], LE, -2), ([1], LE, 5)])
    assert res.status == "optimal"
    assert res.value == 5


def test_degenerate_redundant_equalities():
    res = solve_lp([1, 1], [([1, 1], EQ, 1), ([2, 2], EQ, 2)])
    assert res.status == "optimal"
    assert res.value == 1


def test_exact_rationals_survive():
    res = solve_lp(
        [F(1, 3), F(1, 7)],
        [([1, 1], EQ, 1), ([1, 0], LE, F(2, 5))],
    )
    assert res.status == "optimal"
    # put 2/5 on the better coefficient, the rest on the other
    assert res.value == F(1, 3) * F(2, 5) + F(1, 7) * F(3, 5)


def test_determinism():
    rows = [([1, 2, 1], LE, 4), ([1, 1, 3], GE, 1), ([1, 1, 1], EQ, 2)]
    a = solve_lp([3, 1, 2], rows)
    b = solve_lp([3, 1, 2], rows)
    assert a == b
