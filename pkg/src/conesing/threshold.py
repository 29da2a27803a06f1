"""Exact one-parameter feasibility: ``inf { s : s*D + B effective }``.

For a strictly interior direction ``D`` every cone constraint is either
linear in ``s`` with positive slope (a ray) or a quadratic with positive
leading coefficient (complement of an open interval).  The feasible set is
intersected exactly and its infimum returned together with the constraint
that pins it.  Roots of the quadratic live in Q(sqrt(d)) for the square-free
part ``d`` of the reduced discriminant, which is how irrational thresholds
arise.

A brute-force grid oracle (:func:`bracket_oracle`) brackets the same
infimum by scanning feasibility over ``{j/N}`` with pure integer
arithmetic.  It shares no root-finding with :func:`solve` and is the
independent check used by the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactnum import QuadNum, squarefree_decompose
from .surface import (
    DivClass,
    QuadraticCone,
    SurfaceDatum,
    is_effective,
    pairing,
)


class InfeasibleError(ValueError):
    """The pencil never meets the effective cone."""


class NotBoundedBelowError(RuntimeError):
    """Internal guard: the feasible set has no lower bound.

    Cannot trigger for a strictly interior direction; if it does, the
    problem data violates the module contract.
    """


@dataclass(frozen=True)
class LinearConstraint:
    """``slope*s + const >= 0``."""

    slope: Fraction
    const: Fraction
    index: int

    def bound(self) -> Fraction:
        return -self.const / self.slope


@dataclass(frozen=True)
class QuadraticConstraint:
    """``lead*s**2 + mid*s + const >= 0`` with ``lead > 0``."""

    lead: Fraction
    mid: Fraction
    const: Fraction

    def reduced_discriminant(self) -> Fraction:
        return (self.mid / 2) ** 2 - self.lead * self.const


@dataclass(frozen=True)
class ConstraintSystem:
    linear: tuple[LinearConstraint, ...]
    quadratic: QuadraticConstraint | None


@dataclass(frozen=True)
class ThresholdProblem:
    surf: SurfaceDatum
    direction: DivClass
    offset: DivClass

    def __post_init__(self) -> None:
        if not self.surf.is_strictly_interior(self.direction):
            raise ValueError("direction must be strictly interior to the effective cone")
        if len(self.offset) != self.surf.lattice.rank:
            raise ValueError("offset has wrong rank")


@dataclass(frozen=True)
class ThresholdResult:
    t: QuadNum
    attained: bool
    active_constraint: str
    discriminant: int


def constraint_system(problem: ThresholdProblem) -> ConstraintSystem:
    """Compile the effectivity of ``s*D + B`` into constraints on ``s``."""
    surf, d, b = problem.surf, problem.direction, problem.offset
    lat = surf.lattice
    if isinstance(surf.cone, QuadraticCone):
        h = surf.cone.ample_selector
        linear = (LinearConstraint(pairing(lat, d, h), pairing(lat, b, h), 0),)
        quad = QuadraticConstraint(
            pairing(lat, d, d), 2 * pairing(lat, d, b), pairing(lat, b, b)
        )
        return ConstraintSystem(linear, quad)
    cone = surf.cone
    linear = tuple(
        LinearConstraint(cone.functional(i, d), cone.functional(i, b), i)
        for i in range(len(cone.inequalities))
    )
    return ConstraintSystem(linear, None)


def _quadratic_roots(quad: QuadraticConstraint) -> tuple[QuadNum, QuadNum] | None:
    """Roots of the quadratic, or None when it is non-negative everywhere."""
    disc = quad.reduced_discriminant()
    if disc <= 0:
        return None
    p, q = disc.numerator, disc.denominator
    square, free = squarefree_decompose(p * q)
    half = Fraction(math.isqrt(square), q)  # sqrt(disc) = half * sqrt(free)
    center = Fraction(-quad.mid, 2) / quad.lead
    spread = half / quad.lead
    if free == 1:
        return QuadNum(center - spread), QuadNum(center + spread)
    return QuadNum(center, -spread, free), QuadNum(center, spread, free)


def solve(problem: ThresholdProblem) -> ThresholdResult:
    """Exact infimum of the feasible set, with the active constraint.

    The feasible set is an intersection of rays (one per linear constraint)
    with the quadratic's complement-of-an-interval; the result is attained
    because the cone is closed.
    """
    system = constraint_system(problem)
    lower: Fraction | None = None
    lower_idx = -1
    upper: Fraction | None = None
    for lc in system.linear:
        if lc.slope > 0:
            c = lc.bound()
            if lower is None or c > lower:
                lower, lower_idx = c, lc.index
        elif lc.slope < 0:
            c = lc.bound()
            if upper is None or c < upper:
                upper = c
        elif lc.const < 0:
            raise InfeasibleError(
                f"linear constraint {lc.index} is violated for every s"
            )
    if lower is None:
        raise NotBoundedBelowError("no linear constraint bounds s from below")
    if upper is not None and lower > upper:
        raise InfeasibleError("linear constraints give an empty window")

    if system.quadratic is None:
        return ThresholdResult(QuadNum(lower), True, f"linear[{lower_idx}]", 0)

    assert system.quadratic.lead > 0, "strictly interior direction has q(D,D) > 0"
    roots = _quadratic_roots(system.quadratic)
    if roots is None:
        return ThresholdResult(QuadNum(lower), True, f"linear[{lower_idx}]", 0)
    r1, r2 = roots
    if r1 >= lower:
        # the window [lower, r1] is feasible, infimum at the linear bound
        return ThresholdResult(QuadNum(lower), True, f"linear[{lower_idx}]", 0)
    if r2 > lower:
        if upper is not None and r2 > upper:
            raise InfeasibleError("quadratic constraint excludes the linear window")
        return ThresholdResult(r2, True, "quadratic", r2.d)
    return ThresholdResult(QuadNum(lower), True, f"linear[{lower_idx}]", 0)


def feasible_at(problem: ThresholdProblem, s) -> bool:
    """Point query: is ``s*D + B`` effective?"""
    if not isinstance(s, QuadNum):
        s = QuadNum(Fraction(s))
    return is_effective(problem.surf, s * problem.direction + problem.offset)


# -- brute-force oracle ----------------------------------------------------


def _integerized(system: ConstraintSystem):
    """Clear denominators: constraints with integer coefficients only."""
    lin = []
    for lc in system.linear:
        m = math.lcm(lc.slope.denominator, lc.const.denominator)
        lin.append((int(lc.slope * m), int(lc.const * m)))
    quad = None
    if system.quadratic is not None:
        qd = system.quadratic
        m = math.lcm(qd.lead.denominator, qd.mid.denominator, qd.const.denominator)
        quad = (int(qd.lead * m), int(qd.mid * m), int(qd.const * m))
    return lin, quad


def oracle_bound(problem: ThresholdProblem) -> Fraction:
    """Scan radius M: 1 + max of linear |const/slope| and the quadratic
    Cauchy root bound 1 + max(|mid|, |const|)/lead.  Every feasibility flip
    happens inside [-M, M]."""
    system = constraint_system(problem)
    worst = Fraction(0)
    for lc in system.linear:
        if lc.slope != 0:
            worst = max(worst, abs(lc.const / lc.slope))
    if system.quadratic is not None:
        qd = system.quadratic
        cauchy = 1 + max(abs(qd.mid), abs(qd.const)) / qd.lead
        worst = max(worst, cauchy)
    return 1 + worst


def bracket_oracle(
    problem: ThresholdProblem, resolution: int
) -> tuple[Fraction, Fraction]:
    """First cell ``[j/N, (j+1)/N]`` where feasibility flips false -> true.

    Scans the grid ``{j/N}`` over ``[-M, M]`` (see :func:`oracle_bound`)
    using exact integer sign tests; the solver's threshold must land in the
    returned cell.  Vectorized in int64 when the coefficient magnitudes
    permit, with a pure-Python exact fallback otherwise.
    """
    if resolution < 1:
        raise ValueError("resolution must be a positive integer")
    n = int(resolution)
    lin, quad = _integerized(constraint_system(problem))
    jmax = math.ceil(oracle_bound(problem) * n)
    jmin = -jmax

    peak = max(abs(a) * jmax + abs(b) * n for a, b in lin)
    if quad is not None:
        qa, qb, qc = quad
        peak = max(peak, qa * jmax * jmax + abs(qb) * jmax * n + abs(qc) * n * n)
    flip = (
        _scan_int64(lin, quad, n, jmin, jmax)
        if peak < 2**62
        else _scan_exact(lin, quad, n, jmin, jmax)
    )
    if flip is None:
        raise InfeasibleError(
            f"no feasibility flip on the bounding interval [{-jmax}/{n}, {jmax}/{n}]"
        )
    return Fraction(flip, n), Fraction(flip + 1, n)


def _scan_int64(lin, quad, n: int, jmin: int, jmax: int) -> int | None:
    chunk = 1 << 20
    prev: bool | None = None
    cn = n
    for start in range(jmin, jmax + 1, chunk):
        stop = min(start + chunk, jmax + 1)
        j = np.arange(start, stop, dtype=np.int64)
        feas = np.ones(j.shape, dtype=bool)
        for a, b in lin:
            feas &= (a * j + b * cn) >= 0
        if quad is not None:
            qa, qb, qc = quad
            feas &= (qa * (j * j) + (qb * cn) * j + qc * cn * cn) >= 0
        if prev is not None and feas.size and not prev and bool(feas[0]):
            return start - 1
        hits = np.flatnonzero(~feas[:-1] & feas[1:])
        if hits.size:
            return start + int(hits[0])
        if feas.size:
            prev = bool(feas[-1])
    return None


def _scan_exact(lin, quad, n: int, jmin: int, jmax: int) -> int | None:
    prev: bool | None = None
    for j in range(jmin, jmax + 1):
        ok = all(a * j + b * n >= 0 for a, b in lin)
        if ok and quad is not None:
            qa, qb, qc = quad
            ok = qa * j * j + qb * j * n + qc * n * n >= 0
        if prev is False and ok:
            return j - 1
        prev = ok
    return None
