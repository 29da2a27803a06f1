from fractions import Fraction

import pytest

from conesing import (
    DivClass,
    PolyhedralCone,
    QuadNum,
    ThresholdProblem,
    bracket_oracle,
    constraint_system,
    feasible_at,
    solve,
)

from randsurf import minus_problem, plus_problem, sample_problems

F = Fraction


@pytest.fixture(scope="module")
def problem_a(abelian_cover) -> ThresholdProblem:
    return minus_problem(abelian_cover.surf)


@pytest.fixture(scope="module")
def problem_b_plus(p1xe) -> ThresholdProblem:
    return plus_problem(p1xe.surf)


def test_preset_a_threshold(problem_a, t_minus_exact):
    res = solve(problem_a)
    assert res.t == t_minus_exact
    assert res.attained
    assert res.active_constraint == "quadratic"
    assert res.discriminant == 17


def test_preset_a_constraints(problem_a):
    system = constraint_system(problem_a)
    quad = system.quadratic
    # positive rational multiple of 8 s^2 - 7 s + 1 >= 0
    scale = quad.lead / 8
    assert scale > 0
    assert quad.mid == -7 * scale
    assert quad.const == scale
    (selector,) = system.linear
    assert selector.bound() == F(2, 5)


def test_zero_offset_is_apex(abelian_cover):
    surf = abelian_cover.surf
    problem = ThresholdProblem(surf, surf.polarization, DivClass((0, 0, 0)))
    res = solve(problem)
    assert res.t == QuadNum(0)
    assert res.attained
    assert res.active_constraint.startswith("linear")


def test_preset_b_plus_threshold(problem_b_plus):
    res = solve(problem_b_plus)
    assert res.t == QuadNum(1)
    assert res.discriminant == 0
    assert res.active_constraint == "linear[0]"


def test_feasible_at_examples(problem_a, t_minus_exact):
    assert feasible_at(problem_a, 1)
    assert not feasible_at(problem_a, F(1, 2))
    assert feasible_at(problem_a, t_minus_exact)  # closed-cone attainment


def test_feasible_flip_around_threshold(problem_a, problem_b_plus):
    eps = F(1, 10**6)
    for problem in (problem_a, problem_b_plus):
        t = solve(problem).t
        assert not feasible_at(problem, t - eps)
        assert feasible_at(problem, t + eps)


def test_oracle_preset_a(problem_a, t_minus_exact):
    lo, hi = bracket_oracle(problem_a, 10**6)
    assert (lo, hi) == (F(695194, 10**6), F(695195, 10**6))
    assert lo <= t_minus_exact <= hi


def test_oracle_preset_b_minus(p1xe):
    lo, hi = bracket_oracle(minus_problem(p1xe.surf), 10**6)
    assert lo <= 0 <= hi


def test_oracle_zero_offset(abelian_cover):
    surf = abelian_cover.surf
    problem = ThresholdProblem(surf, surf.polarization, DivClass((0, 0, 0)))
    lo, hi = bracket_oracle(problem, 10**6)
    assert lo <= 0 <= hi


@pytest.mark.parametrize("resolution", [10**3, 10**6])
def test_oracle_consistency_presets(abelian_cover, p1xe, quadrant, resolution):
    for cone in (abelian_cover, p1xe, quadrant):
        for problem in (minus_problem(cone.surf), plus_problem(cone.surf)):
            res = solve(problem)
            lo, hi = bracket_oracle(problem, resolution)
            assert lo <= res.t <= hi


def test_oracle_consistency_random_sample():
    for problem in sample_problems(10, seed=411):
        res = solve(problem)
        lo, hi = bracket_oracle(problem, 10**3)
        assert lo <= res.t <= hi


def test_offset_shift_identity(problem_a):
    base = solve(problem_a).t
    for c in (F(1), F(-3, 2), F(7, 5)):
        shifted = ThresholdProblem(
            problem_a.surf,
            problem_a.direction,
            problem_a.offset + c * problem_a.direction,
        )
        assert solve(shifted).t == base - c


def test_direction_scaling_identity(problem_a):
    base = solve(problem_a).t
    for lam in (2, 3, 5):
        scaled = ThresholdProblem(problem_a.surf, lam * problem_a.direction, problem_a.offset)
        assert solve(scaled).t == base / lam


def test_polyhedral_results_are_rational(p1xe, quadrant):
    for cone in (p1xe, quadrant):
        for problem in (minus_problem(cone.surf), plus_problem(cone.surf)):
            assert solve(problem).discriminant == 0
    for problem in sample_problems(12, seed=412):
        if isinstance(problem.surf.cone, PolyhedralCone):
            assert solve(problem).discriminant == 0


def test_superadditivity_anchor(abelian_cover, p1xe):
    surf = abelian_cover.surf
    total = solve(minus_problem(surf)).t + solve(plus_problem(surf)).t
    assert total == QuadNum(0, F(1, 8), 17)  # 2 sqrt(17) / 16
    surf = p1xe.surf
    total = solve(minus_problem(surf)).t + solve(plus_problem(surf)).t
    assert total == QuadNum(1)


def test_superadditivity_random():
    for problem in sample_problems(10, seed=413):
        surf = problem.surf
        total = solve(minus_problem(surf)).t + solve(plus_problem(surf)).t
        assert total.sign() >= 0


def test_direction_must_be_interior(abelian_cover):
    surf = abelian_cover.surf
    with pytest.raises(ValueError):
        ThresholdProblem(surf, DivClass((1, 0, 0)), DivClass((0, 0, 0)))


def test_oracle_rejects_bad_resolution(problem_a):
    with pytest.raises(ValueError):
        bracket_oracle(problem_a, 0)
