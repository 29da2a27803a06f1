"""Invariants of the cone singularity over a polarized surface.

Blowing up the vertex of the cone over ``(S, L)`` gives a single
exceptional divisor (the negative section), and every invariant of the
vertex singularity reduces to the two pseudoeffective thresholds

    t_minus = inf { s : s*L - K effective }
    t_plus  = inf { s : s*L + K effective }

along the polarization pencil.  From these this module derives the
valuations of both relative canonical divisors along the negative section,
the limiting m-valuations, the klt/canonical/terminal classification,
multiplier-ideal vanishing orders at the vertex and the jumping numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import QuadNum
from .surface import SurfaceDatum
from .threshold import InfeasibleError, ThresholdProblem, ThresholdResult, solve


class NoBoundaryExistsError(ValueError):
    """No member of the pencil is effective, so the valuation is undefined."""


class RationalityGuardError(RuntimeError):
    """A klt singularity produced an irrational valuation; this contradicts
    finite generation of the divisorial ring and indicates a bug."""


@dataclass(frozen=True)
class ConeSingularity:
    """The cone over a polarized surface, analyzed at its vertex."""

    surf: SurfaceDatum
    label: str = ""

    @property
    def name(self) -> str:
        return self.label or self.surf.name


@dataclass(frozen=True)
class Classification:
    is_klt: bool
    is_canonical: bool
    is_terminal: bool


@dataclass(frozen=True)
class JumpingNumbers:
    values: tuple[QuadNum, ...]
    irrational: bool


@dataclass(frozen=True)
class SingularityReport:
    name: str
    t_minus: ThresholdResult
    t_plus: ThresholdResult
    val_minus: QuadNum
    val_plus: QuadNum
    val_minus_rational: bool
    is_klt: bool
    is_canonical: bool
    is_terminal: bool
    jumping_numbers: JumpingNumbers
    limiting_table: tuple[tuple[int, Fraction, Fraction], ...]


def _pencil_threshold(cone: ConeSingularity, towards_canonical: bool) -> ThresholdResult:
    surf = cone.surf
    offset = surf.canonical_class if towards_canonical else -surf.canonical_class
    problem = ThresholdProblem(surf, surf.polarization, offset)
    try:
        return solve(problem)
    except InfeasibleError as exc:
        raise NoBoundaryExistsError(
            f"no effective member in the pencil s*L {'+' if towards_canonical else '-'} K: {exc}"
        ) from exc


def minus_threshold(cone: ConeSingularity) -> ThresholdResult:
    """Threshold of the pencil ``s*L - K`` (boundaries of the vertex)."""
    return _pencil_threshold(cone, towards_canonical=False)


def plus_threshold(cone: ConeSingularity) -> ThresholdResult:
    """Threshold of the pencil ``s*L + K``."""
    return _pencil_threshold(cone, towards_canonical=True)


def val_relative_canonical_minus(cone: ConeSingularity) -> QuadNum:
    """Valuation of the limsup relative canonical divisor along the
    negative section: ``-(1 + t_minus)``."""
    return -(1 + minus_threshold(cone).t)


def val_relative_canonical_plus(cone: ConeSingularity) -> QuadNum:
    """Valuation of the pullback-form relative canonical divisor along the
    negative section: ``t_plus - 1``."""
    return plus_threshold(cone).t - 1


def limiting_valuation(cone: ConeSingularity, m: int) -> tuple[Fraction, Fraction]:
    """m-th rational approximation: ``t_m = ceil(m*t_minus)/m`` and the
    valuation ``-(1 + t_m)``.  Both are rational for every ``m``."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    t = minus_threshold(cone).t
    t_m = Fraction((m * t).ceil(), m)
    return t_m, -(1 + t_m)


def classify(cone: ConeSingularity) -> Classification:
    """klt iff t_minus < 0; canonical iff t_plus >= 1; terminal iff > 1.

    The negative section is the only exceptional divisor of the vertex
    blow-up, so its discrepancy decides the classification.
    """
    t_minus = minus_threshold(cone).t
    t_plus = plus_threshold(cone).t
    return Classification(
        is_klt=t_minus.sign() < 0,
        is_canonical=(t_plus - 1).sign() >= 0,
        is_terminal=(t_plus - 1).sign() > 0,
    )


def multiplier_ideal_order(cone: ConeSingularity, coeff) -> int:
    """Vanishing order along the negative section that cuts out the
    multiplier ideal of the vertex with coefficient ``coeff > 0``.

    Equals ``max(0, -ceil(val_minus - coeff))``; 0 means the trivial ideal.
    """
    if not isinstance(coeff, QuadNum):
        coeff = QuadNum(Fraction(coeff))
    if coeff.sign() <= 0:
        raise ValueError("coefficient must be positive")
    val = val_relative_canonical_minus(cone)
    return max(0, -(val - coeff).ceil())


def jumping_numbers(cone: ConeSingularity, count: int) -> JumpingNumbers:
    """First ``count`` positive members of ``val_minus + Z`` in increasing
    order; exactly the discontinuities of :func:`multiplier_ideal_order`."""
    if count < 1:
        raise ValueError("count must be a positive integer")
    val = val_relative_canonical_minus(cone)
    first = (-val).floor() + 1  # least integer j with j + val > 0
    values = tuple(val + j for j in range(first, first + count))
    return JumpingNumbers(values, irrational=val.d != 0)


def no_accumulation_check(jumps) -> bool:
    """True iff the list is strictly increasing, positive, with gaps exactly
    1 -- so any bounded interval [0, T] holds at most ceil(T)+1 of them."""
    values = list(jumps.values if isinstance(jumps, JumpingNumbers) else jumps)
    if not values:
        return True
    if values[0].sign() <= 0:
        return False
    one = QuadNum(Fraction(1))
    for prev, cur in zip(values, values[1:]):
        if cur - prev != one:
            return False
    for i, v in enumerate(values):
        # i+1 entries lie in [0, v]
        if i + 1 > v.ceil() + 1:
            return False
    return True


DEFAULT_LIMIT_MS = (1, 2, 4, 8, 16, 32)


def analyze(
    cone: ConeSingularity,
    jump_count: int = 10,
    limit_ms: tuple[int, ...] = DEFAULT_LIMIT_MS,
) -> SingularityReport:
    """Full report; raises :class:`RationalityGuardError` if a klt verdict
    ever coincides with an irrational valuation."""
    t_minus = minus_threshold(cone)
    t_plus = plus_threshold(cone)
    val_minus = -(1 + t_minus.t)
    val_plus = t_plus.t - 1
    if (val_minus - val_plus).sign() > 0:
        raise RationalityGuardError(
            "val_minus exceeds val_plus; thresholds violate t_plus + t_minus >= 0"
        )
    verdict = Classification(
        is_klt=t_minus.t.sign() < 0,
        is_canonical=val_plus.sign() >= 0,
        is_terminal=val_plus.sign() > 0,
    )
    if verdict.is_klt and val_minus.d != 0:
        raise RationalityGuardError(
            f"klt singularity {cone.name!r} has irrational valuation {val_minus}"
        )
    table = []
    for m in limit_ms:
        t_m = Fraction((m * t_minus.t).ceil(), m)
        table.append((m, t_m, -(1 + t_m)))
    return SingularityReport(
        name=cone.name,
        t_minus=t_minus,
        t_plus=t_plus,
        val_minus=val_minus,
        val_plus=val_plus,
        val_minus_rational=val_minus.is_rational,
        is_klt=verdict.is_klt,
        is_canonical=verdict.is_canonical,
        is_terminal=verdict.is_terminal,
        jumping_numbers=jumping_numbers(cone, jump_count),
        limiting_table=tuple(table),
    )


# -- report serialization ----------------------------------------------------


def _threshold_dict(res: ThresholdResult) -> dict:
    return {
        "t": res.t.to_json(),
        "t_render": res.t.render(),
        "attained": res.attained,
        "active_constraint": res.active_constraint,
        "discriminant": res.discriminant,
    }


def report_to_dict(report: SingularityReport) -> dict:
    """JSON-ready dict; exact values plus display-only decimals."""
    return {
        "name": report.name,
        "t_minus": _threshold_dict(report.t_minus),
        "t_plus": _threshold_dict(report.t_plus),
        "val_minus": report.val_minus.to_json(),
        "val_minus_render": report.val_minus.render(),
        "val_plus": report.val_plus.to_json(),
        "val_plus_render": report.val_plus.render(),
        "val_minus_rational": report.val_minus_rational,
        "is_klt": report.is_klt,
        "is_canonical": report.is_canonical,
        "is_terminal": report.is_terminal,
        "jumping_numbers": {
            "irrational": report.jumping_numbers.irrational,
            "values": [
                {"exact": v.to_json(), "render": v.render()}
                for v in report.jumping_numbers.values
            ],
        },
        "limiting_table": [
            {"m": m, "t_m": str(t_m), "val_m": str(val_m)}
            for m, t_m, val_m in report.limiting_table
        ],
    }


def report_to_text(report: SingularityReport) -> str:
    """Aligned plain-text rendering of the full report."""
    yn = {True: "yes", False: "no"}
    lines = [
        f"cone singularity: {report.name}",
        f"  {'t_minus':<22}{report.t_minus.t.render()}",
        f"  {'':<22}[attained: {yn[report.t_minus.attained]};"
        f" active: {report.t_minus.active_constraint};"
        f" discriminant: {report.t_minus.discriminant}]",
        f"  {'t_plus':<22}{report.t_plus.t.render()}",
        f"  {'':<22}[attained: {yn[report.t_plus.attained]};"
        f" active: {report.t_plus.active_constraint};"
        f" discriminant: {report.t_plus.discriminant}]",
        f"  {'val_minus':<22}{report.val_minus.render()}",
        f"  {'val_plus':<22}{report.val_plus.render()}",
        f"  {'val_minus rational':<22}{yn[report.val_minus_rational]}",
        f"  {'klt':<22}{yn[report.is_klt]}",
        f"  {'canonical':<22}{yn[report.is_canonical]}",
        f"  {'terminal':<22}{yn[report.is_terminal]}",
        f"  jumping numbers ({'irrational' if report.jumping_numbers.irrational else 'rational'}):",
    ]
    for i, v in enumerate(report.jumping_numbers.values, start=1):
        lines.append(f"    {i:>3}: {v.render()}")
    lines.append("  limiting valuations:")
    w_t = max(len(str(t_m)) for _, t_m, _ in report.limiting_table)
    w_v = max(len(str(v_m)) for _, _, v_m in report.limiting_table)
    for m, t_m, val_m in report.limiting_table:
        lines.append(f"    m={m:<3} t_m={str(t_m):<{w_t}}  val_m={str(val_m):<{w_v}}")
    return "\n".join(lines)
