from fractions import Fraction

import pytest

from toricres import (
    HPolytope,
    Unbounded,
    degree_of,
    divisor_polytope,
    intersection_number,
    lattice_points,
    monomial_basis,
    normalized_volume,
    polytope_volume,
)
from toricres.poly import MultiPoly


def test_p2_simplex(p2):
    fan, _ = p2
    for d in (1, 2, 3):
        poly = divisor_polytope(fan, (0, 0, d))
        pts = lattice_points(poly)
        assert len(pts) == (d + 1) * (d + 2) // 2
        assert polytope_volume(poly) == Fraction(d * d, 2)


def test_p1p1_square(p1p1):
    fan, _ = p1p1
    poly = divisor_polytope(fan, (1, 0, 1, 0))
    assert len(lattice_points(poly)) == 4
    assert polytope_volume(poly) == 1


def test_point_polytope(p2):
    fan, _ = p2
    poly = divisor_polytope(fan, (0, 0, 0))
    assert lattice_points(poly) == [(0, 0)]


def test_segment_volume():
    poly = HPolytope(1, ((1,), (-1,)), (Fraction(0), Fraction(3)))
    assert polytope_volume(poly) == 3
    assert normalized_volume(poly) == 3


def test_unbounded_detected():
    half = HPolytope(2, ((1, 0), (0, 1)), (Fraction(0), Fraction(0)))
    with pytest.raises(Unbounded):
        lattice_points(half)


def test_intersection_numbers(p1, p2, p1p1, p112):
    fan1, _ = p1
    assert intersection_number(fan1, (3, 0)) == 3
    fan2, _ = p2
    for d in (1, 2, 3):
        assert intersection_number(fan2, (d, 0, 0)) == d * d
    fan3, _ = p1p1
    assert intersection_number(fan3, (1, 0, 1, 0)) == 2
    assert intersection_number(fan3, (2, 0, 3, 0)) == 12
    fan4, _ = p112
    assert intersection_number(fan4, (0, 0, 1)) == 2
    # an odd class on this fan has half-integral self-intersection
    from toricres import DegenerateVolume
    with pytest.raises(DegenerateVolume):
        intersection_number(fan4, (1, 0, 0))


def test_intersection_scaling(p2):
    fan, _ = p2
    base = intersection_number(fan, (1, 0, 0))
    for k in (2, 3):
        assert intersection_number(fan, (k, 0, 0)) == k * k * base


def test_monomial_basis_counts(pentagon, p1p1):
    fan, g = pentagon
    rho = g.degree((3, 0, 0, 3, 7))  # x^3 t^3 u^7 has degree (3,6,4)
    assert rho.free == (3, 6, 4)
    mons = monomial_basis(fan, g, rho)
    assert len(mons) == 22
    small = monomial_basis(fan, g, g.degree((1, 0, 0, 1, 2)))
    assert len(small) == 4
    fan2, g2 = p1p1
    quad = monomial_basis(fan2, g2, g2.degree((2, 0, 0, 0)))
    assert sorted(quad) == [(0, 2, 0, 0), (1, 1, 0, 0), (2, 0, 0, 0)]


def test_monomial_basis_degrees_match(pentagon):
    fan, g = pentagon
    rho = g.degree((1, 0, 0, 1, 2))
    for m in monomial_basis(fan, g, rho):
        assert degree_of(MultiPoly.monomial(m), g) == rho


def test_monomial_basis_representative_free(p1p1):
    fan, g = p1p1
    # two different divisors in the class (2,2)
    a = monomial_basis(fan, g, g.degree((2, 0, 2, 0)))
    b = monomial_basis(fan, g, g.degree((1, 1, 0, 2)))
    assert sorted(a) == sorted(b)
    assert len(a) == 9


def test_empty_degree_slice(p1p1):
    fan, g = p1p1
    minus = g.degree((1, 0, 0, 0)) - g.degree((0, 0, 2, 0))
    assert monomial_basis(fan, g, minus) == []
