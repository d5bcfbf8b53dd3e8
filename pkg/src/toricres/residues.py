"""Residue pipeline on a complete simplicial fan.

Given n+1 homogeneous polynomials with no common zeros on the variety, the
residue of a critical-degree input H is computed as c / c_sigma: both H and
the distinguished cone determinant reduce, modulo a Groebner basis of the
input ideal, to rational multiples of a single monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AllReduceToZero,
    CodimNotOne,
    DecompositionFailed,
    DegreeMismatch,
    HypothesesFailed,
    NotHomogeneous,
    WrongDegree,
    ZeroPolynomial,
)
from .grading import DegreeClass, Grading, compute_grading, critical_degree, representative_divisor
from .groebner import GroebnerBasis, MonomialOrder, grevlex, radical_member
from .lattice import FanData, pairing_det
from .poly import MultiPoly, degree_of, dehomogenize, homogenize_to_degree, poly_det
from .polytopes import intersection_number, monomial_basis

Exponent = tuple[int, ...]


def irrelevant_ideal(fan: FanData) -> tuple[Exponent, ...]:
    """Monomial generators, one per maximal cone: product of off-cone variables."""
    gens = []
    for cone in fan.max_cones:
        e = tuple(0 if i in cone else 1 for i in range(fan.nvars))
        if e not in gens:
            gens.append(e)
    return tuple(gens)


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def irrelevant_witness(p: MultiPoly, fan: FanData) -> Exponent | None:
    """A term of p outside the irrelevant ideal, or None when p lies inside."""
    gens = irrelevant_ideal(fan)
    for e in sorted(p.terms):
        if not any(_divides(g, e) for g in gens):
            return e
    return None


def in_irrelevant_ideal(p: MultiPoly, fan: FanData) -> bool:
    return irrelevant_witness(p, fan) is None


@dataclass(frozen=True)
class ZeroLocusReport:
    ok: bool
    witness_cone: int | None = None
    witness_monomial: Exponent | None = None

    def __bool__(self):
        return self.ok


def no_common_zeros_on_x(fan: FanData, polys, method: str = "radical",
                         order: MonomialOrder | None = None) -> ZeroLocusReport:
    """Whether the polynomials have no common zero away from the excluded locus.

    method="radical" asks, per maximal cone, whether the off-cone variable
    product lies in the radical of the ideal.  method="chart" asks whether 1
    lies in the dehomogenized ideal of the cone's chart; the two agree, the
    chart route just runs in dim-many variables.
    """
    if method not in ("radical", "chart"):
        raise ValueError(f"unknown method {method!r}")
    for k, cone in enumerate(fan.max_cones):
        e = tuple(0 if i in cone else 1 for i in range(fan.nvars))
        if method == "radical":
            ok = radical_member(MultiPoly.monomial(e), list(polys), order)
        else:
            charts = [dehomogenize(p, fan, k) for p in polys]
            gb = GroebnerBasis.of(charts, grevlex(fan.dim))
            ok = gb.is_unit_ideal()
        if not ok:
            return ZeroLocusReport(False, k, e)
    return ZeroLocusReport(True)


def decompose(F: MultiPoly, fan: FanData, cone_index: int):
    """Coefficients (A_0, A_1, .., A_n) with F = A_0*zhat + sum A_k*x_{i_k}.

    zhat is the product of off-cone variables; i_1 < .. < i_n are the cone's
    rays.  Terms divisible by a cone variable go to the lowest such variable;
    the rest must be divisible by zhat.
    """
    cone = fan.max_cones[cone_index]
    nv = fan.nvars
    zhat = tuple(0 if i in cone else 1 for i in range(nv))
    parts = [dict() for _ in range(len(cone) + 1)]
    for e, c in F.terms.items():
        slot = None
        for pos, i in enumerate(cone):
            if e[i] > 0:
                slot = pos + 1
                ne = list(e)
                ne[i] -= 1
                break
        if slot is None:
            if not _divides(zhat, e):
                raise DecompositionFailed(
                    "term outside the irrelevant ideal for this cone",
                    witness=e)
            ne = [a - b for a, b in zip(e, zhat)]
            slot = 0
        key = tuple(ne)
        parts[slot][key] = parts[slot].get(key, Fraction(0)) + c
    return tuple(MultiPoly(nv, d) for d in parts)


def oriented_basis(fan: FanData, cone_index: int):
    """Standard basis rows, first row negated if needed, so the pairing
    determinant against the cone's rays (in ascending ray order) is positive."""
    n = fan.dim
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    d = pairing_det(fan, rows, fan.max_cones[cone_index])
    if d == 0:
        raise ValueError("cone rays are dependent")
    if d < 0:
        rows[0] = [-x for x in rows[0]]
    return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class CodimReport:
    ok: bool
    pivot: Exponent | None
    witness: tuple[Exponent, Exponent] | None
    quotient_dim: int

    def __bool__(self):
        return self.ok


def codim_one_check(fan: FanData, grading: Grading, polys,
                    order: MonomialOrder) -> CodimReport:
    """Whether the ideal has codimension one in the critical-degree slice.

    Reduces every critical-degree monomial and demands all normal forms be
    multiples of one distinguished monomial.
    """
    degrees = [degree_of(p, grading) for p in polys]
    rho = critical_degree(grading, degrees)
    mons = monomial_basis(fan, grading, rho)
    if not mons:
        raise AllReduceToZero("no monomials exist in the critical degree")
    gb = GroebnerBasis.of(list(polys), order)
    leads = gb.leading_exponents
    standard = [m for m in mons if not any(_divides(le, m) for le in leads)]
    if not standard:
        raise AllReduceToZero(
            "every critical-degree monomial reduces to zero")
    pivot = min(standard, key=order.key)
    if len(standard) > 1:
        others = sorted(standard, key=order.key)
        return CodimReport(False, pivot, (others[0], others[1]), len(standard))
    for m in mons:
        nf = gb.reduce(MultiPoly.monomial(m))
        if any(e != pivot for e in nf.terms):
            bad = next(e for e in nf.terms if e != pivot)
            return CodimReport(False, pivot, (m, bad), len(standard))
    return CodimReport(True, pivot, None, 1)


class ResidueProblem:
    """Immutable bundle: fan, grading, the n+1 forms, order, cone, basis.

    Heavy artifacts (Groebner basis, codimension report, cone determinant)
    are computed once on first use.  Construction only validates shapes and
    homogeneity, so non-conforming inputs can still be probed.
    """

    def __init__(self, fan: FanData, polys, order: MonomialOrder | None = None,
                 sigma: int = 0, grading: Grading | None = None, basis=None):
        self.fan = fan
        self.polys = tuple(polys)
        if len(self.polys) != fan.dim + 1:
            raise DegreeMismatch(
                f"need {fan.dim + 1} polynomials, got {len(self.polys)}")
        for p in self.polys:
            if p.nvars != fan.nvars:
                raise DegreeMismatch("polynomial ring does not match the fan")
            if p.is_zero():
                raise ZeroPolynomial("input polynomials must be nonzero")
        if not 0 <= sigma < len(fan.max_cones):
            raise ValueError(f"no maximal cone with index {sigma}")
        self.sigma = sigma
        self.order = order if order is not None else grevlex(fan.nvars)
        self.grading = grading if grading is not None else compute_grading(fan)
        self.degrees = tuple(degree_of(p, self.grading) for p in self.polys)
        if basis is None:
            basis = oriented_basis(fan, sigma)
        else:
            basis = tuple(tuple(int(x) for x in row) for row in basis)
            if pairing_det(fan, basis, fan.max_cones[sigma]) <= 0:
                raise ValueError("basis is not positively oriented for the cone")
        self.basis = basis
        self._cache = {}

    def _get(self, key, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    @property
    def critical(self) -> DegreeClass:
        return self._get("critical",
                         lambda: critical_degree(self.grading, self.degrees))

    @property
    def groebner(self) -> GroebnerBasis:
        return self._get("groebner",
                         lambda: GroebnerBasis.of(list(self.polys), self.order))

    @property
    def monomials(self):
        return self._get("monomials",
                         lambda: monomial_basis(self.fan, self.grading, self.critical))

    @property
    def codim(self) -> CodimReport:
        return self._get("codim",
                         lambda: codim_one_check(self.fan, self.grading,
                                                 self.polys, self.order))

    @property
    def pivot(self) -> Exponent:
        return self.codim.pivot

    @property
    def membership_failures(self):
        def build():
            out = []
            for j, p in enumerate(self.polys):
                w = irrelevant_witness(p, self.fan)
                if w is not None:
                    out.append((j, w))
            return tuple(out)
        return self._get("membership", build)

    def zero_locus(self, method: str = "chart") -> ZeroLocusReport:
        key = ("zeros", method)
        return self._get(key, lambda: no_common_zeros_on_x(
            self.fan, self.polys, method=method))

    @property
    def delta(self) -> MultiPoly:
        return self._get("delta", lambda: cone_determinant(self))

    @property
    def c_sigma(self) -> Fraction:
        def build():
            nf = self.groebner.reduce(self.delta)
            return nf.terms.get(self.pivot, Fraction(0))
        return self._get("c_sigma", build)

    def cone_sign(self, cone_index: int) -> int:
        d = pairing_det(self.fan, self.basis, self.fan.max_cones[cone_index])
        return (d > 0) - (d < 0)

    def normal_coefficient(self, H: MultiPoly) -> Fraction:
        nf = self.groebner.reduce(H)
        return nf.terms.get(self.pivot, Fraction(0))


def cone_determinant(problem: ResidueProblem, cone_index: int | None = None) -> MultiPoly:
    """Determinant of the decomposition matrix at a cone (default: the
    problem's distinguished cone); the zhat coefficients form the first row."""
    k = problem.sigma if cone_index is None else cone_index
    cols = [decompose(F, problem.fan, k) for F in problem.polys]
    n1 = len(problem.polys)
    M = [[cols[j][i] for j in range(n1)] for i in range(n1)]
    return poly_det(M)


def _require_hypotheses(problem: ResidueProblem):
    bad = problem.membership_failures
    if bad:
        j, w = bad[0]
        raise HypothesesFailed(
            f"input {j} has a term outside the irrelevant ideal: {w}")
    zr = problem.zero_locus()
    if not zr.ok:
        raise HypothesesFailed(
            f"common zero on the variety; cone {zr.witness_cone} chart fails")


def toric_residue(problem: ResidueProblem, H: MultiPoly) -> Fraction:
    """Exact residue of H, normalized so the cone determinant has residue 1."""
    if H.is_zero():
        return Fraction(0)
    try:
        dH = degree_of(H, problem.grading)
    except NotHomogeneous as exc:
        raise WrongDegree(f"input is not homogeneous: {exc}") from exc
    if dH != problem.critical:
        raise WrongDegree(
            f"degree {dH.free}+t{dH.torsion} differs from the critical degree "
            f"{problem.critical.free}+t{problem.critical.torsion}")
    _require_hypotheses(problem)
    report = problem.codim
    if not report.ok:
        raise CodimNotOne(
            f"critical-degree quotient has dimension {report.quotient_dim}")
    c_sigma = problem.c_sigma
    if c_sigma == 0:
        raise HypothesesFailed(
            "cone determinant lies in the ideal; residue undefined")
    return problem.normal_coefficient(H) / c_sigma


@dataclass(frozen=True)
class ResidueReport:
    critical: DegreeClass
    monomials: tuple
    pivot: Exponent
    delta: MultiPoly
    c_sigma: Fraction
    c_h: Fraction
    residue: Fraction
    codim_ok: bool


def residue_report(problem: ResidueProblem, H: MultiPoly) -> ResidueReport:
    value = toric_residue(problem, H)
    return ResidueReport(
        critical=problem.critical,
        monomials=tuple(problem.monomials),
        pivot=problem.pivot,
        delta=problem.delta,
        c_sigma=problem.c_sigma,
        c_h=problem.normal_coefficient(H),
        residue=value,
        codim_ok=problem.codim.ok,
    )


def sigma_independence_check(problem: ResidueProblem) -> bool:
    """Across all maximal cones, the normalizing coefficients agree up to the
    orientation sign of the problem's fixed basis."""
    c_sigma = problem.c_sigma
    for k in range(len(problem.fan.max_cones)):
        delta_k = cone_determinant(problem, k)
        c_k = problem.normal_coefficient(delta_k)
        if c_k != problem.cone_sign(k) * c_sigma:
            return False
    return True


def verify_gtl(problem: ResidueProblem, A, H: MultiPoly) -> bool:
    """Transformed inputs G_j = sum_i A_ij F_i leave the residue invariant
    once H is multiplied by det(A)."""
    n1 = len(problem.polys)
    if len(A) != n1 or any(len(row) != n1 for row in A):
        raise DegreeMismatch("transformation matrix has the wrong shape")
    M = []
    for row in A:
        out = []
        for entry in row:
            if not isinstance(entry, MultiPoly):
                entry = MultiPoly.constant(problem.fan.nvars, entry)
            out.append(entry)
        M.append(out)
    beta = [None] * n1
    for j in range(n1):
        for i in range(n1):
            if M[i][j].is_zero():
                continue
            d = degree_of(M[i][j], problem.grading) + problem.degrees[i]
            if beta[j] is None:
                beta[j] = d
            elif beta[j] != d:
                raise DegreeMismatch(
                    f"entry ({i},{j}) breaks the column degree pattern")
        if beta[j] is None:
            raise DegreeMismatch(f"column {j} of the transformation is zero")
    G = []
    for j in range(n1):
        g = MultiPoly.zero(problem.fan.nvars)
        for i in range(n1):
            g = g + M[i][j] * problem.polys[i]
        G.append(g)
    det_a = poly_det(M)
    if det_a.is_zero():
        raise DegreeMismatch("transformation matrix is singular")
    transformed = ResidueProblem(problem.fan, G, order=problem.order,
                                 sigma=problem.sigma, grading=problem.grading,
                                 basis=problem.basis)
    rho_f = problem.critical
    rho_g = transformed.critical
    if rho_g != rho_f + degree_of(det_a, problem.grading):
        raise DegreeMismatch("critical degrees do not differ by det degree")
    lhs = toric_residue(problem, H)
    rhs = toric_residue(transformed, H * det_a)
    return lhs == rhs


@dataclass(frozen=True)
class AnnihilationReport:
    ok: bool
    witness: tuple[int, Exponent] | None = None

    def __bool__(self):
        return self.ok


def variable_annihilation_check(problem: ResidueProblem) -> AnnihilationReport:
    """Every variable times every critical-degree monomial must lie in the
    ideal; the witness names the first product that does not."""
    gb = problem.groebner
    nv = problem.fan.nvars
    for i in range(nv):
        for m in problem.monomials:
            e = list(m)
            e[i] += 1
            if not gb.reduce(MultiPoly.monomial(e)).is_zero():
                return AnnihilationReport(False, (i, m))
    return AnnihilationReport(True)


def toric_jacobian(problem: ResidueProblem) -> MultiPoly:
    """Chart determinant of values stacked over partials, lifted back to the
    critical degree.  Requires all inputs to share one degree class."""
    for d in problem.degrees[1:]:
        if d != problem.degrees[0]:
            raise DegreeMismatch("inputs must share a single degree class")
    fan = problem.fan
    k = problem.sigma
    charts = [dehomogenize(p, fan, k) for p in problem.polys]
    n = fan.dim
    rows = [charts]
    for j in range(n):
        rows.append([f.partial(j) for f in charts])
    # the chart trivialization of the Euler form carries the oriented cone
    # determinant, so the determinant overcounts by it on orbifold charts
    det = poly_det(rows) * Fraction(1, pairing_det(fan, problem.basis,
                                                   fan.max_cones[k]))
    if det.is_zero():
        return MultiPoly.zero(fan.nvars)
    return homogenize_to_degree(det, fan, k, problem.critical, problem.grading)


def jacobian_residue_check(problem: ResidueProblem) -> bool:
    """|residue of the chart Jacobian| equals the top self-intersection
    number of the shared degree class."""
    J = toric_jacobian(problem)
    value = toric_residue(problem, J)
    coeffs = representative_divisor(problem.grading, problem.degrees[0])
    target = intersection_number(problem.fan, coeffs)
    return abs(value) == target
