"""Exact integer linear algebra and simplicial fan data.

Matrices are nested tuples/lists of Python ints, so nothing overflows and
every normal form (Smith, Hermite) carries unimodular transforms that can
be replayed and verified in tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvalidFan

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def vec_content(v) -> int:
    g = 0
    for a in v:
        g = gcd(g, abs(a))
    return g


def primitive(v):
    g = vec_content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(a // g for a in v)


def freeze(rows) -> Mat:
    return tuple(tuple(int(x) for x in row) for row in rows)


def mat_identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    if not A:
        return []
    p = len(B[0]) if B else 0
    cols = list(zip(*B)) if B else []
    return [[dot(row, col) for col in cols] for row in A] if cols else [[] for _ in A]


def mat_vec(A, v):
    return tuple(dot(row, v) for row in A)


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def mat_det(A) -> int:
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    if any(len(row) != n for row in A):
        raise ValueError("determinant of a non-square matrix")
    M = [[int(x) for x in row] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def mat_rank(A) -> int:
    """Rank over the rationals."""
    rows = [[Fraction(x) for x in row] for row in A]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = 1 / pr[c]
        rows[rank] = [x * inv for x in pr]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def solve_rational(A, b):
    """One rational solution of A x = b, or None when inconsistent.

    Deterministic Gauss-Jordan; free variables are pinned to 0.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    rows = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    piv_cols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = rows[i][n]
    return tuple(x)


def rational_kernel(rows, ncols):
    """Basis of the rational null space of the given rows."""
    work = [[Fraction(x) for x in row] for row in rows]
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        piv_cols.append(c)
        r += 1
        if r == len(work):
            break
    free_cols = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(piv_cols):
            v[pc] = -work[i][fc]
        basis.append(tuple(v))
    return basis


def integer_kernel_vector(rows, ncols):
    """Primitive integer kernel vector when the null space is a line, else None."""
    basis = rational_kernel(rows, ncols)
    if len(basis) != 1:
        return None
    v = basis[0]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    iv = tuple(int(x * den) for x in v)
    return primitive(iv)


@dataclass(frozen=True)
class SmithDecomposition:
    """U A V = S with U, V unimodular and S diagonal with a divisibility chain."""

    U: Mat
    S: Mat
    V: Mat

    @property
    def diagonal(self) -> tuple[int, ...]:
        m = len(self.S)
        n = len(self.S[0]) if m else 0
        return tuple(self.S[i][i] for i in range(min(m, n)))

    def verify(self, A) -> bool:
        prod = mat_mul(mat_mul([list(r) for r in self.U], [list(r) for r in A]),
                       [list(r) for r in self.V])
        if freeze(prod) != self.S:
            return False
        d = self.diagonal
        for i in range(len(d) - 1):
            if d[i] == 0 and d[i + 1] != 0:
                return False
            if d[i] and d[i + 1] % d[i] != 0:
                return False
        if any(x < 0 for x in d):
            return False
        m = len(self.S)
        n = len(self.S[0]) if m else 0
        off = all(self.S[i][j] == 0 for i in range(m) for j in range(n) if i != j)
        return off and abs(mat_det(self.U)) == 1 and abs(mat_det(self.V)) == 1


def smith_normal_form(A) -> SmithDecomposition:
    """Smith normal form with transforms, by pivoting on least-magnitude entries."""
    m = len(A)
    n = len(A[0]) if m else 0
    S = [[int(x) for x in row] for row in A]
    U = mat_identity(m)
    V = mat_identity(n)

    def row_sub(i, j, q):
        if q:
            S[i] = [a - q * b for a, b in zip(S[i], S[j])]
            U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_sub(j, k, q):
        if q:
            for row in S:
                row[j] -= q * row[k]
            for row in V:
                row[j] -= q * row[k]

    def row_swap(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def row_neg(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            row_swap(t, best[0])
            col_swap(t, best[1])
            if S[t][t] < 0:
                row_neg(t)
            p = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = S[i][t] // p
                row_sub(i, t, q)
                dirty |= S[i][t] != 0
            for j in range(t + 1, n):
                q = S[t][j] // p
                col_sub(j, t, q)
                dirty |= S[t][j] != 0
            if dirty:
                continue
            off = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if S[i][j] % p), None)
            if off is None:
                break
            row_sub(t, off[0], -1)
        if all(S[i][j] == 0 for i in range(t, m) for j in range(t, n)):
            break
    return SmithDecomposition(freeze(U), freeze(S), freeze(V))


def hnf_rows(vectors, ncols, align="right"):
    """Echelon basis of the integer row span of ``vectors``.

    Returns a list of (row, pivot_column) pairs in processing order; each
    pivot is positive and later rows vanish at all earlier pivot columns.
    ``align="right"`` scans columns right to left, which is the form used
    for canonical coset representatives; ``"left"`` scans left to right.
    """
    work = [[int(x) for x in v] for v in vectors if any(v)]
    cols = range(ncols - 1, -1, -1) if align == "right" else range(ncols)
    out = []
    for c in cols:
        while True:
            live = [r for r in work if r[c] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda r: abs(r[c]))
            r0 = live[0]
            if r0[c] < 0:
                r0[:] = [-a for a in r0]
            for r in live[1:]:
                q = r[c] // r0[c]
                r[:] = [a - q * b for a, b in zip(r, r0)]
        live = [r for r in work if r[c] != 0]
        if not live:
            continue
        piv = live[0]
        if piv[c] < 0:
            piv[:] = [-a for a in piv]
        work = [r for r in work if r is not piv]
        out.append((tuple(piv), c))
    return out


def reduce_mod_lattice(v, hnf_basis):
    """Canonical representative of v modulo the row span described by hnf_rows."""
    a = [int(x) for x in v]
    for row, c in hnf_basis:
        q = a[c] // row[c]
        if q:
            a = [x - q * y for x, y in zip(a, row)]
    return tuple(a)


def hnf_reduced_rows(vectors, ncols):
    """Left-aligned fully reduced Hermite form rows (canonical lattice basis)."""
    ech = hnf_rows(vectors, ncols, align="left")
    rows = [list(r) for r, _ in ech]
    pivs = [c for _, c in ech]
    for i in range(len(rows)):
        for j in range(len(rows)):
            if j == i:
                continue
            c = pivs[j]
            q = rows[i][c] // rows[j][c]
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[j])]
    paired = sorted(zip(pivs, rows))
    return [tuple(r) for _, r in paired]


def solve_integer(A, b):
    """One integer solution of A x = b, or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    snf = smith_normal_form(A)
    ub = mat_vec(snf.U, tuple(b))
    d = snf.diagonal
    y = [0] * n
    for i in range(m):
        s = d[i] if i < len(d) else 0
        if s:
            if ub[i] % s:
                return None
            y[i] = ub[i] // s
        elif ub[i] != 0:
            return None
    return tuple(sum(snf.V[i][j] * y[j] for j in range(n)) for i in range(n))


# ---------------------------------------------------------------------------
# fans


@dataclass(frozen=True)
class FanData:
    """A fan given by its rays and maximal cones (0-based ray index sets)."""

    dim: int
    rays: Mat
    max_cones: tuple[tuple[int, ...], ...]
    variables: tuple[str, ...]

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise InvalidFan("ambient dimension must be positive")
        if len(self.rays) < n:
            raise InvalidFan("fewer rays than the ambient dimension")
        seen = set()
        for k, ray in enumerate(self.rays):
            if len(ray) != n:
                raise InvalidFan(f"ray {k} has wrong length")
            if not any(ray):
                raise InvalidFan(f"ray {k} is zero")
            if vec_content(ray) != 1:
                raise InvalidFan(f"ray {k} is not primitive")
            if ray in seen:
                raise InvalidFan(f"ray {k} repeats an earlier ray")
            seen.add(ray)
        for k, cone in enumerate(self.max_cones):
            if tuple(sorted(set(cone))) != cone:
                raise InvalidFan(f"cone {k} is not a sorted duplicate-free index set")
            if any(i < 0 or i >= len(self.rays) for i in cone):
                raise InvalidFan(f"cone {k} references a missing ray")
        if len(self.variables) != len(self.rays):
            raise InvalidFan("one variable per ray is required")
        if len(set(self.variables)) != len(self.variables):
            raise InvalidFan("variable names must be distinct")

    @property
    def nvars(self) -> int:
        return len(self.rays)

    def cone_rays(self, k):
        return tuple(self.rays[i] for i in self.max_cones[k])


def make_fan(dim, rays, max_cones, variables=None, one_based=False):
    rays = freeze(rays)
    cones = []
    for cone in max_cones:
        idx = [int(i) - 1 for i in cone] if one_based else [int(i) for i in cone]
        cones.append(tuple(sorted(set(idx))))
    if variables is None:
        variables = tuple(f"x{i + 1}" for i in range(len(rays)))
    return FanData(int(dim), rays, tuple(cones), tuple(variables))


def is_simplicial(fan: FanData) -> bool:
    """Every maximal cone is generated by dim-many independent rays."""
    n = fan.dim
    for k, cone in enumerate(fan.max_cones):
        if len(cone) != n:
            return False
        cols = [[fan.rays[i][j] for i in cone] for j in range(n)]
        if mat_det(cols) == 0:
            return False
    return True


def cone_group_order(fan: FanData, k: int) -> int:
    """Index of the sublattice spanned by the cone's rays."""
    cone = fan.max_cones[k]
    if len(cone) != fan.dim:
        raise InvalidFan(f"cone {k} is not full-dimensional")
    cols = [[fan.rays[i][j] for i in cone] for j in range(fan.dim)]
    d = mat_det(cols)
    if d == 0:
        raise InvalidFan(f"cone {k} has dependent rays")
    return abs(d)


def pairing_det(fan: FanData, basis, ray_indices) -> int:
    """det of the pairing matrix between basis covectors and the chosen rays."""
    M = [[dot(m, fan.rays[i]) for i in ray_indices] for m in basis]
    return mat_det(M)


@dataclass(frozen=True)
class CompletenessReport:
    ok: bool
    witness: str | None = None

    def __bool__(self):
        return self.ok


def _dual_rows(fan, cone):
    """Integer inequality description of a full simplicial cone."""
    n = fan.dim
    A = [[fan.rays[c][j] for j in range(n)] for c in cone]
    rows = []
    for i in range(n):
        rhs = [Fraction(int(i == k)) for k in range(n)]
        # the covector dual to the i-th generator: <m, ray_k> = delta_ik
        sol = solve_rational(A, rhs)
        den = 1
        for x in sol:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append(primitive(tuple(int(x * den) for x in sol)))
    return rows


def _cones_overlap_witness(fan, ka, kb):
    """A direction in both cones outside their common face, or None."""
    n = fan.dim
    ca, cb = fan.max_cones[ka], fan.max_cones[kb]
    D = []
    for row in _dual_rows(fan, ca) + _dual_rows(fan, cb):
        if row not in D:
            D.append(row)
    common = set(ca) & set(cb)
    cands = set()
    for subset in itertools.combinations(D, n - 1):
        v = integer_kernel_vector(list(subset), n)
        if v is None:
            continue
        for s in (v, tuple(-x for x in v)):
            if all(dot(d, s) >= 0 for d in D):
                cands.add(s)
    A = [[fan.rays[c][j] for j in range(n)] for c in ca]
    for v in sorted(cands):
        lam = solve_rational(transpose(A), v)
        if lam is None:
            continue
        for pos, c in enumerate(ca):
            if c not in common and lam[pos] != 0:
                return v
    return None


def is_complete(fan: FanData) -> CompletenessReport:
    """Exact completeness test.

    Checks simpliciality, that every ray is used, that every facet of a
    maximal cone is shared by exactly two of them, and that any two cones
    meet exactly along their common face.
    """
    n = fan.dim
    if not fan.max_cones:
        return CompletenessReport(False, "no maximal cones")
    if not is_simplicial(fan):
        return CompletenessReport(False, "a maximal cone is not simplicial of full dimension")
    used = set()
    for cone in fan.max_cones:
        used.update(cone)
    if used != set(range(fan.nvars)):
        missing = sorted(set(range(fan.nvars)) - used)
        return CompletenessReport(False, f"rays {missing} lie in no maximal cone")
    if len(set(fan.max_cones)) != len(fan.max_cones):
        return CompletenessReport(False, "duplicate maximal cone")
    if n == 1:
        dirs = {fan.rays[cone[0]][0] for cone in fan.max_cones}
        if dirs == {1, -1} and len(fan.max_cones) == 2:
            return CompletenessReport(True)
        return CompletenessReport(False, "the two half-lines are not both covered exactly once")
    facet_count = {}
    for cone in fan.max_cones:
        for facet in itertools.combinations(cone, n - 1):
            facet_count[facet] = facet_count.get(facet, 0) + 1
    for facet, cnt in sorted(facet_count.items()):
        if cnt != 2:
            return CompletenessReport(False, f"facet {facet} lies in {cnt} maximal cones")
    for ka, kb in itertools.combinations(range(len(fan.max_cones)), 2):
        w = _cones_overlap_witness(fan, ka, kb)
        if w is not None:
            return CompletenessReport(
                False, f"cones {ka} and {kb} overlap beyond their common face at {w}")
    return CompletenessReport(True)
