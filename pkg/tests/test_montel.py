"""Generator-set checks: polynomial sufficiency, order bounds, constancy."""

from fractions import Fraction

import pytest

from grouppoly import (
    CyclicFinite,
    FreeProdZZ2,
    GroupError,
    GroupFunction,
    HeisenbergRational,
    IntVector,
    bounded_montel_check,
    constant_function,
    degree_from_generator_orders,
    finite_order_fixed_check,
    freeproduct_counterexample,
    heisenberg_function,
    montel_polynomial_check,
    polynomial_function,
    table_function,
)

Z1 = IntVector(1)
Z2 = IntVector(2)


def test_montel_x2y_m4_passes():
    f = polynomial_function(Z2, {(2, 1): 1}, label="x^2y")
    result = montel_polynomial_check(f, [(1, 0), (0, 1)], 4, 2, Z2.ball(2, 1), seed=1)
    assert result.hypothesis.passed
    assert result.conclusion.passed
    assert result.implication_holds


def test_montel_x2y_m3_hypothesis_fails_with_residual_two():
    f = polynomial_function(Z2, {(2, 1): 1}, label="x^2y")
    result = montel_polynomial_check(f, [(1, 0), (0, 1)], 3, 2, Z2.ball(2, 1), seed=1)
    assert not result.hypothesis.passed
    assert any(abs(w.residual) == 2 for w in result.hypothesis.witnesses)
    assert result.implication_holds  # vacuously


def test_montel_constant_m1():
    f = constant_function(Z2, Fraction(3, 7))
    result = montel_polynomial_check(f, [(1, 0)], 1, 2, Z2.ball(1, 1), seed=2)
    assert result.hypothesis.passed and result.conclusion.passed


def test_montel_heisenberg_generators_suffice():
    f = heisenberg_function()
    H = f.group
    generators = [H.element(1, 0, 0), H.element(0, 1, 0)]
    for seed in (1, 2, 3):
        result = montel_polynomial_check(f, generators, 3, 1, H.ball(1, 1), seed=seed)
        assert result.hypothesis.passed
        assert result.conclusion.passed


def test_montel_freeproduct_hypothesis_fails():
    f = freeproduct_counterexample()
    F = f.group
    result = montel_polynomial_check(
        f, [F.parse("a"), F.parse("b")], 2, 2, F.ball(3, 1), seed=1, coeff_bound=1
    )
    assert not result.hypothesis.passed
    assert result.implication_holds


def test_montel_rejects_bad_input():
    f = constant_function(Z1, 1)
    with pytest.raises(GroupError):
        montel_polynomial_check(f, [], 2, 1, Z1.ball(1, 1), seed=1)
    with pytest.raises(GroupError):
        montel_polynomial_check(f, [(1,)], 0, 1, Z1.ball(1, 1), seed=1)


def test_order_bound_xy():
    f = polynomial_function(Z2, {(1, 1): 1}, label="xy")
    report = degree_from_generator_orders(f, [(1, 0), (0, 1)], [2, 2], Z2.ball(2, 1))
    assert report.passed
    assert report.params["claimed_degree"] == 3


def test_order_bound_cubic_tight():
    f = polynomial_function(Z1, {(3,): 1}, label="x^3")
    report = degree_from_generator_orders(f, [(1,)], [4], Z1.ball(2, 2))
    assert report.passed and report.params["claimed_degree"] == 3
    from grouppoly import check_polynomial

    assert not check_polynomial(f, 2, [(1,)], Z1.ball(2, 2), max_witnesses=1).passed


def test_order_bound_reports_hypothesis_failure():
    f = polynomial_function(Z1, {(3,): 1}, label="x^3")
    report = degree_from_generator_orders(f, [(1,)], [2], Z1.ball(2, 2))
    assert not report.passed
    assert report.params["status"] == "per-generator hypothesis fails"


def test_order_bound_rejects_noncommutative():
    f = heisenberg_function()
    H = HeisenbergRational()
    with pytest.raises(GroupError):
        degree_from_generator_orders(f, [H.element(1, 0, 0)], [2], H.ball(1, 1))


def test_finite_order_constant_passes():
    C5 = CyclicFinite(5)
    report = finite_order_fixed_check(constant_function(C5, Fraction(2, 3)), 5)
    assert report.passed
    assert report.params["status"].startswith("semipolynomial")


def test_finite_order_identity_function():
    C5 = CyclicFinite(5)
    f = GroupFunction(C5, lambda j: j, label="j")
    report = finite_order_fixed_check(f, 5)
    assert report.passed
    assert report.params["status"] == "not a semipolynomial"


def test_finite_order_parity_function():
    C4 = CyclicFinite(4)
    f = GroupFunction(C4, lambda j: j % 2, label="j mod 2")
    report = finite_order_fixed_check(f, 5)
    assert report.passed
    assert report.params["status"] == "not a semipolynomial"


def test_bounded_check_constant_passes():
    F = FreeProdZZ2()
    f = constant_function(F, 7)
    report = bounded_montel_check(f, [F.parse("a"), F.parse("b")], [2, 2], 6)
    assert report.passed
    assert report.params["status"] == "constant on all probes"


def test_bounded_check_linear_function_flagged():
    f = polynomial_function(Z1, {(1,): 1}, label="n")
    report = bounded_montel_check(f, [(1,)], [2], 6)
    assert not report.passed
    assert report.params["status"] == "unbounded or nonconstant"
    key = "(0) | (1)"
    assert report.params["sequences"][key] == [str(k) for k in range(7)]


def test_bounded_check_freeproduct_flagged_along_ab():
    f = freeproduct_counterexample()
    F = f.group
    report = bounded_montel_check(f, [F.parse("a"), F.parse("b")], [2, 2], 6)
    assert not report.passed
    flagged = {F.format_element(w.steps[0]) for w in report.witnesses}
    assert "a b" in {key.split(" | ")[1] for key in report.params["sequences"]}
    assert flagged  # at least one direction witnesses growth
