"""Cartier and positivity tests for torus-invariant divisors.

A divisor is a coefficient vector over the rays.  Each full simplicial cone
determines a unique rational linear functional matching the coefficients on
its rays; integrality of those functionals is the Cartier condition and
strict convexity across cones is ampleness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidFan
from .lattice import FanData, dot, solve_rational


@dataclass(frozen=True)
class PositivityReport:
    ok: bool
    cartier: bool
    witnesses: tuple = ()

    def __bool__(self):
        return self.ok


def cone_functionals(fan: FanData, coeffs) -> list[tuple[Fraction, ...]]:
    """Per-cone m with <m, ray_i> = -a_i on the cone's rays."""
    if len(coeffs) != fan.nvars:
        raise InvalidFan("one coefficient per ray is required")
    out = []
    for cone in fan.max_cones:
        A = [list(fan.rays[i]) for i in cone]
        b = [-Fraction(coeffs[i]) for i in cone]
        m = solve_rational(A, b)
        if m is None:
            raise InvalidFan("cone rays are dependent")
        out.append(m)
    return out


def is_cartier(fan: FanData, coeffs) -> PositivityReport:
    """Integral per-cone functionals exist."""
    witnesses = []
    for k, m in enumerate(cone_functionals(fan, coeffs)):
        if any(x.denominator != 1 for x in m):
            witnesses.append(k)
    ok = not witnesses
    return PositivityReport(ok, ok, tuple(witnesses))


def _strictness_failures(fan: FanData, ms, coeffs):
    out = []
    for k, cone in enumerate(fan.max_cones):
        for j in range(fan.nvars):
            if j in cone:
                continue
            if dot(ms[k], fan.rays[j]) <= -Fraction(coeffs[j]):
                out.append((k, j))
    return out


def is_q_ample(fan: FanData, coeffs) -> PositivityReport:
    """Strictly convex rational support function exists."""
    ms = cone_functionals(fan, coeffs)
    bad = _strictness_failures(fan, ms, coeffs)
    cart = not is_cartier(fan, coeffs).witnesses
    return PositivityReport(not bad, cart, tuple(bad))


def is_ample(fan: FanData, coeffs) -> PositivityReport:
    """Cartier with a strictly convex support function."""
    cart = is_cartier(fan, coeffs)
    if not cart.ok:
        return PositivityReport(False, False, cart.witnesses)
    ms = cone_functionals(fan, coeffs)
    bad = _strictness_failures(fan, ms, coeffs)
    return PositivityReport(not bad, True, tuple(bad))
