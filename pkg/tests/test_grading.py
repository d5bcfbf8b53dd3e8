import pytest

from toricres import (
    DegreeClass,
    NotAGrading,
    NotSurjective,
    anticanonical_class,
    compute_grading,
    critical_degree,
    representative_divisor,
    validate_user_grading,
)

PENTAGON_TABLE = [[1, 1, -1, 0, 0]]  # placeholder row, replaced in tests


def test_p2_grading(p2):
    g = p2[1]
    assert g.rank == 1
    assert not g.moduli
    for i in range(3):
        assert g.variable_degree(i).free == (1,)
    assert anticanonical_class(g).free == (3,)


def test_p1p1_grading(p1p1):
    g = p1p1[1]
    assert g.rank == 2
    degs = [g.variable_degree(i).free for i in range(4)]
    # x,y span one ruling, z,t the other (up to the computed basis)
    assert degs[0] == degs[1]
    assert degs[2] == degs[3]
    assert degs[0] != degs[2]
    assert anticanonical_class(g).free == tuple(
        2 * a + 2 * b for a, b in zip(degs[0], degs[2]))


def test_pentagon_accepts_published_table(pentagon):
    fan, g = pentagon
    # the fixture already routes through user validation
    assert g.provenance == "user"
    table = {
        "x": (1, 1, -1), "y": (-1, 1, 1),
        "z": (1, 0, 0), "t": (0, 1, 0), "u": (0, 0, 1),
    }
    for i, name in enumerate(fan.variables):
        assert g.variable_degree(i).free == table[name]
    assert anticanonical_class(g).free == (1, 3, 1)
    # shuffled but equivalent free rows are accepted too
    alt = validate_user_grading(fan, [[1, 1, 0, 1, 0],
                                      [1, -1, 1, 0, 0],
                                      [-1, 1, 0, 0, 1]])
    assert alt.rank == 3


def test_user_rows_must_kill_ray_image(p1p1):
    fan, _ = p1p1
    with pytest.raises(NotAGrading):
        validate_user_grading(fan, [[1, 0, 0, 0], [0, 0, 1, 1]])


def test_user_rows_must_span(p1p1):
    fan, _ = p1p1
    # one valid row cannot span a rank-2 quotient
    with pytest.raises(NotSurjective):
        validate_user_grading(fan, [[1, 1, 0, 0]])
    # scaled rows hit a sublattice only
    with pytest.raises(NotSurjective):
        validate_user_grading(fan, [[2, 2, 0, 0], [0, 0, 1, 1]])


def test_computed_rows_validate(p2, p1p1, pentagon, p112):
    for fan, g in (p2, p1p1, pentagon, p112):
        again = validate_user_grading(fan, [list(r) for r in g.free_rows])
        assert again.rank == g.rank
        for i in range(fan.nvars):
            assert again.variable_degree(i) == g.variable_degree(i)


def test_torsion_grading(torsion_fan):
    fan, g = torsion_fan
    assert g.moduli == (3,)
    assert g.rank == 1
    total = g.degree((1, 1, 1))
    assert total.torsion == (0,)
    x = g.variable_degree(0)
    assert x.torsion != (0,) or g.variable_degree(1).torsion != (0,)


def test_degree_class_arithmetic(p1p1):
    g = p1p1[1]
    a = g.degree((1, 0, 1, 0))
    b = g.degree((0, 1, 0, 1))
    assert (a + b).free == tuple(x + y for x, y in zip(a.free, b.free))
    assert (a - a).is_zero()
    assert (2 * a).free == tuple(2 * x for x in a.free)


def test_critical_degrees(pentagon, p1p1):
    g = pentagon[1]
    degs = [DegreeClass((2, 3, 1), (), ()),
            DegreeClass((1, 3, 2), (), ()),
            DegreeClass((1, 3, 2), (), ())]
    assert critical_degree(g, degs).free == (3, 6, 4)
    degs = [DegreeClass((1, 1, 1), (), ()),
            DegreeClass((0, 2, 1), (), ()),
            DegreeClass((1, 2, 0), (), ())]
    assert critical_degree(g, degs).free == (1, 2, 1)
    g2 = p1p1[1]
    degs2 = [g2.degree((2, 0, 0, 0)), g2.degree((1, 0, 1, 0)),
             g2.degree((0, 1, 0, 1))]
    rho = critical_degree(g2, degs2)
    assert rho == g2.degree((2, 0, 0, 0))


def test_representative_divisor_round_trip(pentagon, p2, torsion_fan):
    for fan, g in (pentagon, p2, torsion_fan):
        for e in ((1,) * fan.nvars, (2, 0) + (1,) * (fan.nvars - 2)):
            target = g.degree(e)
            a = representative_divisor(g, target)
            assert g.degree(a) == target


def test_representative_divisor_is_canonical(p1p1):
    g = p1p1[1]
    d1 = representative_divisor(g, g.degree((2, 0, 1, 0)))
    d2 = representative_divisor(g, g.degree((1, 1, 0, 1)))
    assert d1 == d2
