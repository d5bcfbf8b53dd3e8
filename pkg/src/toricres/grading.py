"""Divisor class grading of the homogeneous coordinate ring.

The grading group is the cokernel of the ray pairing map.  Its free part is
read off the Smith transform; finite cyclic factors are carried alongside as
torsion rows with their moduli.  Degrees are values of that quotient map on
exponent vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoIntegralLift, NotAGrading, NotSurjective
from .lattice import (
    Mat,
    Vec,
    dot,
    freeze,
    hnf_reduced_rows,
    hnf_rows,
    mat_rank,
    reduce_mod_lattice,
    smith_normal_form,
    solve_integer,
)


@dataclass(frozen=True)
class DegreeClass:
    """An element of the grading group: free part plus cyclic residues."""

    free: Vec
    torsion: Vec = ()
    moduli: Vec = ()

    def __post_init__(self):
        if len(self.torsion) != len(self.moduli):
            raise ValueError("torsion and moduli lengths differ")
        object.__setattr__(self, "free", tuple(int(x) for x in self.free))
        object.__setattr__(
            self, "torsion",
            tuple(int(t) % int(m) for t, m in zip(self.torsion, self.moduli)))
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))

    def __add__(self, other):
        if self.moduli != other.moduli or len(self.free) != len(other.free):
            raise ValueError("degrees live in different groups")
        return DegreeClass(
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.torsion, other.torsion)),
            self.moduli)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, k: int):
        return DegreeClass(tuple(k * a for a in self.free),
                           tuple(k * a for a in self.torsion), self.moduli)

    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)


@dataclass(frozen=True)
class Grading:
    """Exponent-vector grading: free rows, torsion rows, and cyclic moduli."""

    rays: Mat
    free_rows: Mat
    torsion_rows: Mat = ()
    moduli: Vec = ()
    provenance: str = "computed"

    @property
    def nvars(self) -> int:
        return len(self.free_rows[0]) if self.free_rows else (
            len(self.torsion_rows[0]) if self.torsion_rows else 0)

    @property
    def rank(self) -> int:
        return len(self.free_rows)

    def degree(self, exponent) -> DegreeClass:
        e = tuple(int(x) for x in exponent)
        return DegreeClass(
            tuple(dot(row, e) for row in self.free_rows),
            tuple(dot(row, e) for row in self.torsion_rows),
            self.moduli)

    def variable_degree(self, i: int) -> DegreeClass:
        e = [0] * self.nvars
        e[i] = 1
        return self.degree(e)


def _ray_matrix(rays) -> list[list[int]]:
    """Rows are the rays: the pairing map sends m to (<m, ray_i>)_i."""
    return [list(r) for r in rays]


def grading_from_rays(rays, provenance="computed") -> Grading:
    """Cokernel presentation of the ray pairing map via Smith normal form."""
    rays = freeze(rays)
    n = len(rays[0])
    cols = len(rays)
    A = _ray_matrix(rays)  # cols x n, acting on lattice vectors of length n
    snf = smith_normal_form(A)
    d = snf.diagonal
    if any(x == 0 for x in d) or len(d) < n:
        raise NotSurjective("rays do not span the ambient lattice")
    torsion_rows = []
    moduli = []
    for i, s in enumerate(d):
        if s > 1:
            torsion_rows.append(snf.U[i])
            moduli.append(s)
    free_raw = [list(snf.U[i]) for i in range(n, cols)]
    free_rows = hnf_reduced_rows(free_raw, cols)
    return Grading(rays, freeze(free_rows), freeze(torsion_rows), tuple(moduli),
                   provenance)


def compute_grading(fan) -> Grading:
    return grading_from_rays(fan.rays)


def validate_user_grading(fan, free_rows) -> Grading:
    """Accept user free rows iff they present the same free quotient.

    Rows must kill every ray pairing column and, together with the image of
    the pairing map and the torsion part, generate the full exponent lattice.
    """
    rays = freeze(fan.rays)
    free_rows = freeze(free_rows)
    n = fan.dim
    cols = len(rays)
    for r, row in enumerate(free_rows):
        if len(row) != cols:
            raise NotAGrading(f"row {r} has wrong length")
        for j in range(n):
            col = [rays[i][j] for i in range(cols)]
            if dot(row, col) != 0:
                raise NotAGrading(
                    f"row {r} does not vanish on the ray pairing image")
    computed = grading_from_rays(rays, provenance="computed")
    if len(free_rows) != computed.rank:
        raise NotSurjective(
            f"expected {computed.rank} free rows, got {len(free_rows)}")
    # user rows must span the same free quotient: the change of basis between
    # user rows and computed rows (mod image + torsion) must be unimodular.
    # Equivalent check: stacking user rows with the pairing image and torsion
    # lift lattice must give the same lattice as with computed rows.
    image_rows = [tuple(rays[i][j] for i in range(cols)) for j in range(n)]

    def span_rows(rows):
        return tuple(hnf_reduced_rows([list(r) for r in rows], cols))
    base = list(image_rows) + [list(t) for t in computed.torsion_rows]
    lat_user = span_rows(list(free_rows) + base)
    lat_comp = span_rows(list(computed.free_rows) + base)
    if lat_user != lat_comp:
        raise NotSurjective("rows do not generate the free quotient")
    if mat_rank(list(free_rows)) != len(free_rows):
        raise NotSurjective("rows are linearly dependent")
    return Grading(rays, free_rows, computed.torsion_rows, computed.moduli,
                   provenance="user")


def anticanonical_class(grading: Grading) -> DegreeClass:
    return grading.degree([1] * grading.nvars)


def critical_degree(grading: Grading, degrees) -> DegreeClass:
    total = degrees[0]
    for d in degrees[1:]:
        total = total + d
    return total - anticanonical_class(grading)


def representative_divisor(grading: Grading, degree: DegreeClass) -> Vec:
    """A canonical exponent vector with the given degree.

    Solves the stacked integer system (free rows exactly, torsion rows up to
    their moduli), then reduces modulo the pairing image by right-aligned
    Hermite division so equal degrees give equal representatives.
    """
    nv = grading.nvars
    t = len(grading.torsion_rows)
    rows = [list(r) + [0] * t for r in grading.free_rows]
    for k, trow in enumerate(grading.torsion_rows):
        aux = [0] * t
        aux[k] = grading.moduli[k]
        rows.append(list(trow) + aux)
    rhs = list(degree.free) + list(degree.torsion)
    sol = solve_integer(rows, rhs)
    if sol is None:
        raise NoIntegralLift("degree is not in the grading group image")
    v = sol[:nv]
    n = len(grading.rays[0]) if grading.rays else 0
    image_rows = [tuple(r[j] for r in grading.rays) for j in range(n)]
    basis = hnf_rows(image_rows, nv, align="right")
    return reduce_mod_lattice(v, basis)
