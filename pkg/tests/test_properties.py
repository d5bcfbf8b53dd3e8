"""Randomized invariants: lattice transforms, reduction, grading, orders."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from toricres import (
    DegreeClass,
    GroebnerBasis,
    MonomialOrder,
    MultiPoly,
    ResidueProblem,
    dehomogenize,
    grevlex,
    homogenize_to_degree,
    parse_poly,
    poly_det,
    toric_residue,
)
from toricres.divisors import is_ample, is_cartier, is_q_ample
from toricres.lattice import dot, smith_normal_form
from toricres.polytopes import monomial_basis

from conftest import load

DEFAULTS = settings(max_examples=40, deadline=None, derandomize=True)

coeffs = st.fractions(
    min_value=-5, max_value=5, max_denominator=4).filter(lambda c: c != 0)


def polys_st(nvars, max_deg=3, max_terms=4):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in range(nvars)])
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(
        lambda d: MultiPoly(nvars, d))


# ---------------------------------------------------------------------------
# lattice


@DEFAULTS
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_smith_form_reconstructs(rows, cols, data):
    A = data.draw(st.lists(
        st.lists(st.integers(-9, 9), min_size=cols, max_size=cols),
        min_size=rows, max_size=rows))
    dec = smith_normal_form(A)
    assert dec.verify(A)


# ---------------------------------------------------------------------------
# reduction


NAMES3 = ("x", "y", "z")
GB3 = GroebnerBasis.of(
    [parse_poly("x^2 - y*z", NAMES3), parse_poly("y^2 - x*z", NAMES3)],
    grevlex(3))


@DEFAULTS
@given(polys_st(3), coeffs, coeffs)
def test_normal_form_constant_on_ideal_cosets(h, a0, a1):
    f0, f1 = GB3.generators[0], GB3.generators[1]
    shifted = h + a0 * f0 + a1 * f1
    assert GB3.reduce(shifted) == GB3.reduce(h)


@DEFAULTS
@given(polys_st(3), polys_st(3), coeffs, coeffs)
def test_normal_form_is_linear(h1, h2, c1, c2):
    left = GB3.reduce(c1 * h1 + c2 * h2)
    right = c1 * GB3.reduce(h1) + c2 * GB3.reduce(h2)
    assert left == right


# ---------------------------------------------------------------------------
# grading


@DEFAULTS
@given(st.tuples(st.integers(-8, 8), st.integers(-8, 8)))
def test_ray_pairings_have_degree_zero(m):
    for fixture in ("pentagon", "p1p1"):
        lp = load({"pentagon": "pentagon_small.json",
                   "p1p1": "p1p1_numeric.json"}[fixture])
        e = tuple(dot(m, ray) for ray in lp.fan.rays)
        deg = lp.grading.degree(e)
        assert all(x == 0 for x in deg.free)
        assert all(x == 0 for x in deg.torsion)


@DEFAULTS
@given(st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
       st.tuples(*[st.integers(-3, 3) for _ in range(4)]))
def test_positivity_ignores_principal_shifts(m, base):
    lp = load("p1p1_numeric.json")
    fan = lp.fan
    shifted = tuple(b + dot(m, ray) for b, ray in zip(base, fan.rays))
    for test in (is_cartier, is_q_ample, is_ample):
        assert test(fan, base).ok == test(fan, shifted).ok


# ---------------------------------------------------------------------------
# polynomial ring


@DEFAULTS
@given(polys_st(2), polys_st(2), polys_st(2))
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a * (b * c) == (a * b) * c
    assert a + MultiPoly.zero(2) == a


@DEFAULTS
@given(st.integers(0, 4), st.data())
def test_chart_round_trip(d, data):
    lp = load("p2_fermat.json")
    fan, grading = lp.fan, lp.grading
    target = DegreeClass((d,), (), ())
    basis = monomial_basis(fan, grading, target)
    cs = data.draw(st.lists(coeffs | st.just(Fraction(0)),
                            min_size=len(basis), max_size=len(basis)))
    p = MultiPoly(fan.nvars, {e: c for e, c in zip(basis, cs) if c})
    if not p.terms:
        return
    q = dehomogenize(p, fan, 0)
    back = homogenize_to_degree(q, fan, 0, target, grading)
    assert back == p


@DEFAULTS
@given(st.lists(st.lists(polys_st(2, max_deg=2, max_terms=2),
                         min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_matches_permutation_expansion(M):
    got = poly_det(M)
    want = MultiPoly.zero(2)
    for perm in itertools.permutations(range(3)):
        sign = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if perm[i] > perm[j]:
                    sign = -sign
        term = MultiPoly(2, {(0, 0): Fraction(sign)})
        for i in range(3):
            term = term * M[i][perm[i]]
        want = want + term
    assert got == want


# ---------------------------------------------------------------------------
# monomial orders


ORDERS = (grevlex(3), MonomialOrder("lex", (0, 1, 2)),
          MonomialOrder("grevlex", (2, 0, 1)), MonomialOrder("lex", (1, 2, 0)))


@DEFAULTS
@given(st.tuples(*[st.integers(0, 6) for _ in range(3)]),
       st.tuples(*[st.integers(0, 6) for _ in range(3)]),
       st.tuples(*[st.integers(0, 6) for _ in range(3)]))
def test_order_keys_are_multiplicative(a, b, c):
    for order in ORDERS:
        ka, kb = order.key(a), order.key(b)
        shift = lambda e: tuple(x + y for x, y in zip(e, c))
        if ka < kb:
            assert order.key(shift(a)) < order.key(shift(b))
        elif ka == kb:
            assert a == b
        one = (0, 0, 0)
        assert order.key(one) <= ka


# ---------------------------------------------------------------------------
# residue functional


@pytest.mark.parametrize("i,j", [(0, 1), (0, 2), (1, 2)])
def test_residue_alternates_under_swaps(i, j):
    lp = load("p2_fermat.json")
    pb = lp.problem
    base = toric_residue(pb, lp.inputs[0])
    polys = list(pb.polys)
    polys[i], polys[j] = polys[j], polys[i]
    swapped = ResidueProblem(pb.fan, polys, order=pb.order, sigma=pb.sigma,
                             grading=pb.grading)
    assert toric_residue(swapped, lp.inputs[0]) == -base
