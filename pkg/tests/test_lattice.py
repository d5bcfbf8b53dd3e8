from fractions import Fraction

import pytest

from toricres import (
    InvalidFan,
    cone_group_order,
    is_complete,
    is_simplicial,
    make_fan,
    pairing_det,
    smith_normal_form,
)
from toricres.lattice import (
    hnf_rows,
    mat_det,
    mat_mul,
    mat_rank,
    reduce_mod_lattice,
    solve_integer,
    solve_rational,
)


def test_smith_diag_2_3():
    s = smith_normal_form([[2, 0], [0, 3]])
    assert s.diagonal == (1, 6)
    assert s.verify([[2, 0], [0, 3]])


def test_smith_identity():
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    s = smith_normal_form(eye)
    assert s.diagonal == (1, 1, 1)
    assert s.verify(eye)


def test_smith_2_4_6_8():
    a = [[2, 4], [6, 8]]
    s = smith_normal_form(a)
    assert s.diagonal == (2, 4)
    assert s.verify(a)


def test_smith_rectangular_and_unimodular_factors():
    a = [[1, 0], [0, 1], [-1, -1]]
    s = smith_normal_form(a)
    assert s.verify(a)
    assert abs(mat_det(s.U)) == 1
    assert abs(mat_det(s.V)) == 1


def test_simplicial_fans(p2, p1p1, pentagon):
    assert is_simplicial(p2[0])
    assert is_simplicial(p1p1[0])
    assert is_simplicial(pentagon[0])


def test_complete_fans(p1, p2, p1p1, p112, pentagon, torsion_fan):
    for fan, _ in (p1, p2, p1p1, p112, pentagon, torsion_fan):
        assert is_complete(fan).ok


def test_incomplete_single_cone():
    fan = make_fan(2, [[1, 0], [0, 1]], [[0, 1]])
    report = is_complete(fan)
    assert not report.ok
    assert report.witness


def test_overlapping_cones_flagged():
    # three 2-cones pairwise overlapping around the first quadrant
    fan = make_fan(2,
                   [[1, 0], [0, 1], [-1, -1], [1, 1]],
                   [[0, 1], [0, 3], [1, 2], [0, 2]])
    assert not is_complete(fan).ok


def test_group_orders(p2, p112, pentagon):
    assert [cone_group_order(p2[0], k) for k in range(3)] == [1, 1, 1]
    orders = [cone_group_order(p112[0], k) for k in range(3)]
    assert sorted(orders) == [1, 1, 2]
    # the cone on rays (-1,1) and (-1,-1) has index two
    pent = pentagon[0]
    idx = pent.max_cones.index((2, 3))
    assert cone_group_order(pent, idx) == 2


def test_group_order_from_raw_cone():
    fan = make_fan(2, [[1, 0], [1, 2], [-1, -1]], [[0, 1], [1, 2], [0, 2]])
    assert cone_group_order(fan, 0) == 2


def test_pairing_det_p1(p1):
    fan, _ = p1
    # ray 0 is +1, ray 1 is -1
    assert pairing_det(fan, [[1]], (0,)) == 1
    assert pairing_det(fan, [[1]], (1,)) == -1


def test_pairing_det_p2(p2):
    fan, _ = p2
    basis = [[1, 0], [0, 1]]
    cone = fan.max_cones[2]  # rays (1,0),(0,1)
    assert pairing_det(fan, basis, cone) == 1


def test_make_fan_rejects_bad_data():
    with pytest.raises(InvalidFan):
        make_fan(2, [[2, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2], [0, 2]])
    with pytest.raises(InvalidFan):
        make_fan(2, [[1, 0], [1, 0], [-1, -1]], [[0, 1], [1, 2], [0, 2]])
    with pytest.raises(InvalidFan):
        make_fan(2, [[1, 0], [0, 1]], [[0, 5]])


def test_solvers():
    assert solve_rational([[2, 0], [0, 4]], [1, 2]) == (Fraction(1, 2), Fraction(1, 2))
    assert solve_rational([[1, 1], [1, 1]], [1, 2]) is None
    assert solve_integer([[2, 0], [0, 4]], [4, 8]) == (2, 2)
    assert solve_integer([[2]], [3]) is None
    assert mat_rank([[1, 2], [2, 4]]) == 1


def test_hnf_reduction_is_canonical():
    basis = hnf_rows([[2, 1], [0, 3]], 2)
    r1 = reduce_mod_lattice([5, 5], basis)
    r2 = reduce_mod_lattice([5 + 2, 5 + 1], basis)
    assert r1 == r2
