"""Bundled encoding of n+1 divisors as one: lifted rays, polytope, grading.

The n+1 line bundle choices on an n-dimensional base are packed into a
projectivized bundle whose coordinate ring adds one variable per bundle
summand.  Everything here works with the lifted ray data directly; no
maximal cones of the bundle space are built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .divisors import is_ample
from .errors import DegreeMismatch, NotAmple
from .grading import Grading, grading_from_rays, anticanonical_class, representative_divisor
from .lattice import FanData, dot
from .poly import MultiPoly, degree_of
from .polytopes import HPolytope, divisor_polytope, lattice_points, monomial_basis
from .lattice import solve_rational


@dataclass(frozen=True)
class CayleyData:
    fan: FanData
    divisors: tuple[tuple[int, ...], ...]
    lifted_rays: tuple[tuple[int, ...], ...]
    grading: Grading
    base_grading: Grading
    variables: tuple[str, ...]

    @property
    def n(self) -> int:
        return self.fan.dim

    @property
    def base_count(self) -> int:
        return self.fan.nvars


def build_cayley(fan: FanData, base_grading: Grading, divisors,
                 require_ample: bool = True) -> CayleyData:
    """Lifted ray data for the bundle over the fan's variety.

    divisors is a sequence of n+1 coefficient vectors.  Base rays acquire an
    e-part recording coefficient differences against the first divisor; one
    fresh ray per summand spans the fiber directions.
    """
    n = fan.dim
    divisors = tuple(tuple(int(c) for c in d) for d in divisors)
    if len(divisors) != n + 1:
        raise DegreeMismatch(f"need {n + 1} divisors, got {len(divisors)}")
    for d in divisors:
        if len(d) != fan.nvars:
            raise DegreeMismatch("divisor length does not match the ray count")
        if require_ample and not is_ample(fan, d).ok:
            raise NotAmple(f"divisor {d} is not ample")
    lifted = []
    for i in range(fan.nvars):
        epart = tuple(divisors[j][i] - divisors[0][i] for j in range(1, n + 1))
        lifted.append(epart + fan.rays[i])
    lifted.append(tuple([-1] * n + [0] * n))
    for j in range(n):
        e = [0] * (2 * n)
        e[j] = 1
        lifted.append(tuple(e))
    variables = fan.variables + tuple(f"y{j}" for j in range(n + 1))
    grading = grading_from_rays(lifted)
    return CayleyData(fan, divisors, tuple(lifted), grading, base_grading,
                      variables)


def _lift_poly(cd: CayleyData, p: MultiPoly, y_index: int | None = None) -> MultiPoly:
    """Embed a base polynomial into the bundle ring, optionally times y_j."""
    total = cd.base_count + cd.n + 1
    out = {}
    for e, c in p.terms.items():
        ne = list(e) + [0] * (cd.n + 1)
        if y_index is not None:
            ne[cd.base_count + y_index] += 1
        out[tuple(ne)] = c
    return MultiPoly(total, out)


def bundle_class(cd: CayleyData):
    """Degree shared by all y_j F_j when inputs match the divisor classes."""
    e = [0] * (cd.base_count + cd.n + 1)
    e[cd.base_count] = 1
    for i, a in enumerate(cd.divisors[0]):
        e[i] += a
    return cd.grading.degree(e)


def critical_degree_lifted(cd: CayleyData):
    gamma = bundle_class(cd)
    beta = anticanonical_class(cd.grading)
    return (cd.n + 1) * gamma - beta


def _lifted_monomials(cd: CayleyData):
    rho = critical_degree_lifted(cd)
    coeffs = representative_divisor(cd.grading, rho)
    poly = HPolytope(2 * cd.n, cd.lifted_rays, tuple(Fraction(c) for c in coeffs))
    pts = lattice_points(poly)
    out = []
    for m in pts:
        e = tuple(dot(m, cd.lifted_rays[i]) + coeffs[i]
                  for i in range(len(cd.lifted_rays)))
        out.append(e)
    out.sort()
    return out


def equal_degree_check(cd: CayleyData, polys) -> bool:
    """All y_j-weighted inputs share one degree; the lifted critical degree
    matches the base one monomial for monomial (its slice is y-free)."""
    n = cd.n
    if len(polys) != n + 1:
        raise DegreeMismatch(f"need {n + 1} polynomials")
    for j, p in enumerate(polys):
        want = cd.base_grading.degree(cd.divisors[j])
        if degree_of(p, cd.base_grading) != want:
            raise DegreeMismatch(
                f"input {j} does not have the degree of divisor {j}")
    degs = [degree_of(_lift_poly(cd, p, j), cd.grading)
            for j, p in enumerate(polys)]
    gamma = bundle_class(cd)
    if any(d != gamma for d in degs):
        return False
    lifted = _lifted_monomials(cd)
    for e in lifted:
        if any(e[cd.base_count:]):
            return False
    base_rho_monomials = _base_critical_monomials(cd)
    return sorted(e[:cd.base_count] for e in lifted) == base_rho_monomials


def _base_critical_monomials(cd: CayleyData):
    total = cd.base_grading.degree(cd.divisors[0])
    for d in cd.divisors[1:]:
        total = total + cd.base_grading.degree(d)
    rho = total - anticanonical_class(cd.base_grading)
    return sorted(monomial_basis(cd.fan, cd.base_grading, rho))


def cayley_polytope_check(cd: CayleyData) -> bool:
    """Lattice points of the bundle polytope equal the union of the divisor
    polytopes placed on the vertices of a standard simplex."""
    n = cd.n
    normals = list(cd.lifted_rays)
    offsets = []
    for i in range(cd.base_count):
        offsets.append(Fraction(cd.divisors[0][i]))
    offsets.append(Fraction(1))
    offsets.extend([Fraction(0)] * n)
    poly = HPolytope(2 * n, tuple(normals), tuple(offsets))
    got = set(lattice_points(poly))
    expected = set()
    for j in range(n + 1):
        base_pts = lattice_points(divisor_polytope(cd.fan, cd.divisors[j]))
        mu = tuple(1 if j == t + 1 else 0 for t in range(n))
        for m in base_pts:
            expected.add(mu + m)
    return got == expected


def jacobian_ideal_degree_check(cd: CayleyData, polys) -> bool:
    """Degree bookkeeping behind the codimension argument: a rational weight
    functional gives every y variable weight one and every base variable
    weight zero, kills the lifted critical degree, and every base partial of
    the bundled form carries a y in each term."""
    rows = []
    rhs = []
    for i in range(cd.base_count):
        rows.append(list(cd.grading.variable_degree(i).free))
        rhs.append(Fraction(0))
    for j in range(cd.n + 1):
        rows.append(list(cd.grading.variable_degree(cd.base_count + j).free))
        rhs.append(Fraction(1))
    lam = solve_rational(rows, rhs)
    if lam is None:
        return False
    rho = critical_degree_lifted(cd)
    if sum(l * r for l, r in zip(lam, rho.free)) != 0:
        return False
    bundled = MultiPoly.zero(cd.base_count + cd.n + 1)
    for j, p in enumerate(polys):
        bundled = bundled + _lift_poly(cd, p, j)
    for i in range(cd.base_count):
        partial = bundled.partial(i)
        for e in partial.terms:
            if not any(e[cd.base_count:]):
                return False
    return True
