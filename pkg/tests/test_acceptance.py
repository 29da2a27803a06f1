"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import dataclasses
import json
import random
import subprocess
import sys
import time
from fractions import Fraction

from conesing import (
    ConeSingularity,
    PolyhedralCone,
    QuadNum,
    ThresholdProblem,
    analyze,
    bracket_oracle,
    build,
    classify,
    constraint_system,
    jumping_numbers,
    limiting_valuation,
    minus_threshold,
    multiplier_ideal_order,
    no_accumulation_check,
    solve,
    val_relative_canonical_minus,
    val_relative_canonical_plus,
)

from randsurf import minus_problem, plus_problem, sample_problems, sample_surfaces

F = Fraction


def _criterion(number: int, description: str, ok: bool) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {description}")
    assert ok, f"criterion {number} failed: {description}"


def test_criterion_1_preset_a_exact_value():
    start = time.monotonic()
    cone = build("abelian-cover")
    value = val_relative_canonical_minus(cone)
    elapsed = time.monotonic() - start
    exact = value == QuadNum(F(-23, 16), F(-1, 16), 17)
    fields = (value.a, value.b, value.d) == (F(-23, 16), F(-1, 16), 17)
    _criterion(
        1,
        f"val_minus(abelian-cover) = -(23+√17)/16 exactly in {elapsed:.3f}s",
        exact and fields and elapsed < 1.0,
    )


def test_criterion_2_preset_a_solver_internals():
    system = constraint_system(minus_problem(build("abelian-cover").surf))
    quad = system.quadratic
    scale = quad.lead / 8
    quad_ok = scale > 0 and (quad.lead, quad.mid, quad.const) == (
        8 * scale,
        -7 * scale,
        scale,
    )
    (selector,) = system.linear
    linear_ok = selector.bound() == F(2, 5)
    active_ok = solve(minus_problem(build("abelian-cover").surf)).active_constraint == "quadratic"
    _criterion(
        2,
        "active quadratic is a positive multiple of 8s²-7s+1 and the selector bound is s >= 2/5",
        quad_ok and linear_ok and active_ok,
    )


def test_criterion_3_preset_b_verdict():
    cone = build("p1xE")
    verdict = classify(cone)
    flags_ok = dataclasses.astuple(verdict) == (False, True, False)
    vals_ok = (
        val_relative_canonical_minus(cone) == QuadNum(F(-1))
        and val_relative_canonical_plus(cone) == QuadNum(F(0))
    )
    _criterion(
        3,
        "p1xE vertex: {klt: false, canonical: true, terminal: false}, val- = -1, val+ = 0",
        flags_ok and vals_ok,
    )


def test_criterion_4_jumping_numbers():
    cone = build("abelian-cover")
    val = val_relative_canonical_minus(cone)
    jumps = jumping_numbers(cone, 100)
    expected = [val + j for j in range(2, 102)]  # positive members of val + Z
    set_ok = list(jumps.values) == expected and all(v.sign() > 0 for v in jumps.values)
    eps = F(1, 10**6)
    disc_ok = all(
        multiplier_ideal_order(cone, k) == multiplier_ideal_order(cone, k - eps) + 1
        and multiplier_ideal_order(cone, k + eps) == multiplier_ideal_order(cone, k)
        for k in jumps.values
    )
    _criterion(
        4,
        "first 100 jumping numbers are {j - (23+√17)/16} ∩ (0,∞), all discontinuities, "
        "irrational, no accumulation",
        set_ok and disc_ok and jumps.irrational and no_accumulation_check(jumps),
    )


def test_criterion_5_oracle_equivalence():
    start = time.monotonic()
    problems: list[ThresholdProblem] = []
    for preset_id in ("abelian-cover", "p1xE"):
        surf = build(preset_id).surf
        problems.append(minus_problem(surf))
        problems.append(plus_problem(surf))
    surfaces = sample_surfaces(25, 25)
    problems.extend(minus_problem(s) for s in surfaces)
    for problem in problems:
        result = solve(problem)
        for resolution in (10**3, 10**6):
            lo, hi = bracket_oracle(problem, resolution)
            assert lo <= result.t <= hi, (
                f"{problem.surf.name} at N={resolution}: {result.t} not in [{lo}, {hi}]"
            )
    elapsed = time.monotonic() - start
    _criterion(
        5,
        f"solve.t in the oracle cell at N=10³ and N=10⁶ on presets + 50 random "
        f"surfaces ({len(problems)} problems, {elapsed:.1f}s)",
        elapsed < 60.0,
    )


def test_criterion_6_property_suite():
    rng = random.Random(1233)
    identities_ok = True
    for problem in sample_problems(100, seed=997):
        base = solve(problem).t
        c = F(rng.randint(-12, 12), rng.randint(1, 9))
        shifted = ThresholdProblem(
            problem.surf, problem.direction, problem.offset + c * problem.direction
        )
        identities_ok &= solve(shifted).t == base - c
        lam = rng.choice((2, 3, 5))
        scaled = ThresholdProblem(problem.surf, lam * problem.direction, problem.offset)
        identities_ok &= solve(scaled).t == base / lam

    presets = [build("abelian-cover"), build("p1xE"), build("quadrant-synthetic")]
    superadd_ok = True
    for surf in [c.surf for c in presets] + sample_surfaces(10, 10, seed=998):
        total = solve(minus_problem(surf)).t + solve(plus_problem(surf)).t
        superadd_ok &= total.sign() >= 0

    limiting_ok = True
    for cone in presets:
        t = minus_threshold(cone).t
        t_at = {}
        for m in range(1, 65):
            t_m, _ = limiting_valuation(cone, m)
            t_at[m] = t_m
            gap = QuadNum(t_m) - t
            limiting_ok &= gap.sign() >= 0 and (gap - F(1, m)).sign() < 0
        for m in range(1, 65):
            for q in range(2, 65):
                if m * q > 64:
                    break
                limiting_ok &= t_at[m * q] <= t_at[m]

    _criterion(
        6,
        "offset-shift and direction-scaling exact on 100 random problems; "
        "t+ + t- >= 0 on all analyzed surfaces; limiting table tight and monotone to m=64",
        identities_ok and superadd_ok and limiting_ok,
    )


def test_criterion_7_rationality_guard():
    cones = [build("abelian-cover"), build("p1xE"), build("quadrant-synthetic")]
    cones.extend(ConeSingularity(surf) for surf in sample_surfaces(25, 25))
    polyhedral_ok = True
    klt_ok = True
    for cone in cones:
        report = analyze(cone)  # hard-fails internally on a klt/irrational clash
        if isinstance(cone.surf.cone, PolyhedralCone):
            polyhedral_ok &= report.t_minus.discriminant == 0
            polyhedral_ok &= report.t_plus.discriminant == 0
        if report.is_klt:
            klt_ok &= report.val_minus.d == 0
    _criterion(
        7,
        "every polyhedral analysis has discriminant 0; every klt analysis has rational val-",
        polyhedral_ok and klt_ok,
    )


def _run_cli(*args, expect: int = 0) -> subprocess.CompletedProcess:
    proc = subprocess.run(
        [sys.executable, "-m", "conesing", *args], capture_output=True, text=True
    )
    assert proc.returncode == expect, proc.stderr
    return proc


def test_criterion_8_cli_round_trip(tmp_path):
    emitted = _run_cli("preset", "abelian-cover", "--emit-config").stdout
    path = tmp_path / "abelian-cover.json"
    path.write_text(emitted, encoding="utf-8")
    via_config = _run_cli("analyze", "--config", str(path), "--json").stdout
    direct = _run_cli("preset", "abelian-cover", "--run", "--json").stdout
    bytes_ok = via_config == direct and len(direct) > 0

    cfg = json.loads(emitted)
    cfg["polarization"] = [0, 0, 0]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(cfg), encoding="utf-8")
    proc = subprocess.run(
        [sys.executable, "-m", "conesing", "analyze", "--config", str(bad)],
        capture_output=True,
        text=True,
    )
    invalid_ok = proc.returncode == 2 and "polarization" in proc.stderr
    _criterion(
        8,
        "preset emit-config -> analyze is byte-identical to preset --run; "
        "invalid configs exit 2 with field-path diagnostics",
        bytes_ok and invalid_ok,
    )
