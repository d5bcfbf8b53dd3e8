"""Groebner bases over the rationals.

Buchberger with the Gebauer-Moeller pair update, normal selection strategy,
and full inter-reduction to the unique reduced monic basis.  Orders are
graded reverse lexicographic and lexicographic with an explicit variable
precedence, so bases are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .poly import Exponent, MultiPoly


@dataclass(frozen=True)
class MonomialOrder:
    """kind is "grevlex" or "lex"; precedence lists variables from greatest."""

    kind: str
    precedence: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if tuple(sorted(self.precedence)) != tuple(range(len(self.precedence))):
            raise ValueError("precedence must be a permutation of the variables")

    @property
    def nvars(self) -> int:
        return len(self.precedence)

    def key(self, e: Exponent):
        if self.kind == "lex":
            return tuple(e[i] for i in self.precedence)
        return (sum(e), tuple(-e[i] for i in reversed(self.precedence)))

    def greater(self, a: Exponent, b: Exponent) -> bool:
        return self.key(a) > self.key(b)


def grevlex(nvars: int) -> MonomialOrder:
    return MonomialOrder("grevlex", tuple(range(nvars)))


def lex(nvars: int) -> MonomialOrder:
    return MonomialOrder("lex", tuple(range(nvars)))


def parse_order(text: str, names) -> MonomialOrder:
    """Parse strings like ``grevlex:x>y>z`` or ``lex:z>y>x``."""
    if ":" not in text:
        raise ParseError(f"order {text!r} lacks a precedence list")
    kind, _, chain = text.partition(":")
    kind = kind.strip()
    if kind not in ("grevlex", "lex"):
        raise ParseError(f"unknown order kind {kind!r}")
    listed = [t.strip() for t in chain.split(">")]
    index = {nm: i for i, nm in enumerate(names)}
    if sorted(listed) != sorted(index):
        raise ParseError(f"precedence {chain!r} must list every variable once")
    return MonomialOrder(kind, tuple(index[nm] for nm in listed))


def leading_term(p: MultiPoly, order: MonomialOrder):
    if p.is_zero():
        raise ValueError("leading term of zero")
    e = max(p.terms, key=order.key)
    return e, p.terms[e]


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def normal_form(p: MultiPoly, basis, order: MonomialOrder) -> MultiPoly:
    """Remainder of full division by the (ordered) list of basis elements."""
    nv = p.nvars
    leads = [(leading_term(g, order), g) for g in basis if not g.is_zero()]
    rem = {}
    work = dict(p.terms)
    while work:
        e = max(work, key=order.key)
        c = work.pop(e)
        hit = None
        for (le, lc), g in leads:
            if _divides(le, e):
                hit = (le, lc, g)
                break
        if hit is None:
            rem[e] = rem.get(e, Fraction(0)) + c
            if not rem[e]:
                del rem[e]
            continue
        le, lc, g = hit
        shift = _sub_exp(e, le)
        factor = c / lc
        for ge, gc in g.terms.items():
            if ge == le:
                continue
            ne = tuple(a + b for a, b in zip(ge, shift))
            s = work.get(ne, Fraction(0)) - factor * gc
            if s:
                work[ne] = s
            else:
                work.pop(ne, None)
    return MultiPoly(nv, rem)


def s_polynomial(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> MultiPoly:
    (ef, cf) = leading_term(f, order)
    (eg, cg) = leading_term(g, order)
    L = _lcm(ef, eg)
    mf = MultiPoly.monomial(_sub_exp(L, ef), Fraction(1, 1) / cf)
    mg = MultiPoly.monomial(_sub_exp(L, eg), Fraction(1, 1) / cg)
    return mf * f - mg * g


def _gm_update(G_leads, pairs, new_index, new_lead):
    """Gebauer-Moeller pair list update for one new basis element.

    Coprime pairs survive the divisibility sieve so they can knock out other
    candidates, then are dropped at the end; old pairs whose lcm the new lead
    properly refines are discarded.
    """
    t = new_index
    lt = new_lead

    def pair_lcm(i):
        return _lcm(G_leads[i], lt)

    def coprime(i):
        return pair_lcm(i) == tuple(a + b for a, b in zip(G_leads[i], lt))

    C = list(range(t))
    D = []
    while C:
        i = C.pop(0)
        li = pair_lcm(i)
        if coprime(i) or (all(not _divides(pair_lcm(j), li) for j in C)
                          and all(not _divides(pair_lcm(j), li) for j in D)):
            D.append(i)
    E = [i for i in D if not coprime(i)]
    kept_old = []
    for (i, j) in pairs:
        lij = _lcm(G_leads[i], G_leads[j])
        if _divides(lt, lij) and pair_lcm(i) != lij and pair_lcm(j) != lij:
            continue
        kept_old.append((i, j))
    return kept_old + [(i, t) for i in E]


def buchberger(gens, order: MonomialOrder) -> list[MultiPoly]:
    """Reduced monic Groebner basis of the ideal generated by gens."""
    G = []
    for g in gens:
        if not g.is_zero():
            G.append(g)
    if not G:
        return []
    basis: list[MultiPoly] = []
    leads: list[Exponent] = []
    pairs: list[tuple[int, int]] = []

    def push(p):
        e, c = leading_term(p, order)
        p = p * (Fraction(1) / c)
        nonlocal pairs
        pairs = _gm_update(leads, pairs, len(basis), e)
        basis.append(p)
        leads.append(e)

    for g in sorted(G, key=lambda q: order.key(leading_term(q, order)[0])):
        r = normal_form(g, basis, order)
        if not r.is_zero():
            push(r)
    while pairs:
        best = min(pairs, key=lambda ij: order.key(_lcm(leads[ij[0]], leads[ij[1]])))
        pairs.remove(best)
        i, j = best
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if not r.is_zero():
            push(r)
    # minimalize: drop elements whose lead is divisible by another lead
    minimal = []
    for i, p in enumerate(basis):
        e = leads[i]
        if any(k != i and _divides(leads[k], e)
               and (leads[k] != e or k < i) for k in range(len(basis))):
            continue
        minimal.append(p)
    # reduce tails
    reduced = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = normal_form(p, others, order)
        if r.is_zero():
            continue
        e, c = leading_term(r, order)
        reduced.append(r * (Fraction(1) / c))
    reduced.sort(key=lambda q: order.key(leading_term(q, order)[0]))
    return reduced


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[MultiPoly, ...]
    order: MonomialOrder

    @classmethod
    def of(cls, gens, order):
        return cls(tuple(buchberger(gens, order)), order)

    def reduce(self, p: MultiPoly) -> MultiPoly:
        return normal_form(p, self.generators, self.order)

    def contains(self, p: MultiPoly) -> bool:
        return self.reduce(p).is_zero()

    @property
    def leading_exponents(self) -> tuple[Exponent, ...]:
        return tuple(leading_term(g, self.order)[0] for g in self.generators)

    def is_unit_ideal(self) -> bool:
        return any(not any(e) for e in self.leading_exponents)


def ideal_member(p: MultiPoly, gens, order=None) -> bool:
    order = order or grevlex(p.nvars)
    return GroebnerBasis.of(gens, order).contains(p)


def radical_member(p: MultiPoly, gens, order=None) -> bool:
    """Membership in the radical via a fresh slack variable.

    Appends a variable w with least precedence and asks whether
    1 - w*p lands in the unit ideal together with the generators.
    """
    nv = p.nvars
    big = nv + 1

    def lift(q):
        return MultiPoly(big, {e + (0,): c for e, c in q.terms.items()})

    w = MultiPoly.variable(big, nv)
    sat = MultiPoly.constant(big, 1) - w * lift(p)
    gens_big = [lift(g) for g in gens] + [sat]
    if order is None:
        prec = tuple(range(big))
    else:
        prec = tuple(order.precedence) + (nv,)
    gb = GroebnerBasis.of(gens_big, MonomialOrder("grevlex", prec))
    return gb.is_unit_ideal()


def quotient_is_finite(gb: GroebnerBasis) -> bool:
    """Finite-dimensional quotient iff every variable has a pure-power lead."""
    nv = gb.order.nvars
    leads = gb.leading_exponents
    if any(not any(e) for e in leads):
        return True
    for i in range(nv):
        ok = False
        for e in leads:
            if e[i] and all(e[j] == 0 for j in range(nv) if j != i):
                ok = True
                break
        if not ok:
            return False
    return True


def standard_monomials(gb: GroebnerBasis) -> list[Exponent]:
    """All monomials outside the leading ideal; requires a finite quotient."""
    nv = gb.order.nvars
    leads = gb.leading_exponents
    if not quotient_is_finite(gb):
        raise ValueError("quotient is not finite-dimensional")
    if gb.is_unit_ideal():
        return []
    caps = []
    for i in range(nv):
        c = min(e[i] for e in leads
                if e[i] and all(e[j] == 0 for j in range(nv) if j != i))
        caps.append(c)
    out = []
    stack = [(0, tuple())]
    while stack:
        i, pref = stack.pop()
        if i == nv:
            if not any(_divides(le, pref) for le in leads):
                out.append(pref)
            continue
        for k in range(caps[i] - 1, -1, -1):
            stack.append((i + 1, pref + (k,)))
    out.sort()
    return out
