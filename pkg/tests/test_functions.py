"""Difference operators, membership checks, and calculus identities."""

from fractions import Fraction

import pytest

from grouppoly import (
    GroupError,
    GroupFunction,
    HeisenbergRational,
    IntVector,
    RationalAdditive,
    check_polynomial,
    check_semipolynomial,
    constant_function,
    delta,
    estimate_degree,
    heisenberg_function,
    iterated_delta,
    polynomial_function,
    star,
    table_function,
    verify_delta_identities,
)
from grouppoly.functions import format_scalar, parse_scalar

Z1 = IntVector(1)
Z2 = IntVector(2)
H = HeisenbergRational()


def square():
    return polynomial_function(Z1, {(2,): 1}, label="n^2")


def cube():
    return polynomial_function(Z1, {(3,): 1}, label="n^3")


def test_delta_on_square():
    df = delta(square(), (1,))
    assert [df((n,)) for n in range(-2, 3)] == [-3, -1, 1, 3, 5]  # 2n + 1


def test_delta_identity_step_is_zero():
    f = square()
    df = delta(f, (0,))
    assert all(df((n,)) == 0 for n in range(-5, 6))


def test_delta_heisenberg_unit_step():
    # step (1, 0, 0): difference of a*b - 2c equals b at every point
    f = heisenberg_function()
    df = delta(f, H.element(1, 0, 0))
    for g in H.ball(2, 2)[:40]:
        assert df(g) == g[1]


def test_iterated_delta_order_and_mixed_constant():
    f = polynomial_function(Z2, {(1, 1): 1}, label="nm")
    g = iterated_delta(f, [(1, 0), (0, 1)])
    assert all(g((n, m)) == 1 for n in range(-3, 4) for m in range(-3, 4))
    with pytest.raises(GroupError):
        iterated_delta(f, [])


def test_iterated_delta_third_difference_of_square_vanishes():
    f = square()
    g = iterated_delta(f, [(1,), (1,), (1,)])
    assert all(g((n,)) == 0 for n in range(-5, 6))


def test_heisenberg_mixed_difference_constant():
    # the second mixed difference is the constant a1*b2 - a2*b1,
    # with the first step applied first
    f = heisenberg_function()
    s1 = H.element(1, 2, Fraction(1, 2))
    s2 = H.element(3, -1, 1)
    g = iterated_delta(f, [s1, s2])
    expected = s1[0] * s2[1] - s2[0] * s1[1]
    for base in H.ball(1, 2):
        assert g(base) == expected


def test_check_polynomial_cubic():
    f = cube()
    steps = Z1.ball(1, 2)
    bases = Z1.ball(3, 3)
    assert check_polynomial(f, 3, steps, bases).passed
    report = check_polynomial(f, 2, steps, bases, exhaustive=True)
    assert not report.passed
    assert all(abs(w.residual) == 6 for w in report.witnesses)
    unit = iterated_delta(f, [(1,), (1,), (1,)])
    assert unit((0,)) == 6


def test_check_semipolynomial_square():
    f = square()
    steps = Z1.ball(1, 1)
    bases = Z1.ball(3, 3)
    report = check_semipolynomial(f, 1, steps, bases, max_witnesses=1)
    assert not report.passed
    assert abs(report.witnesses[0].residual) == 2
    assert check_semipolynomial(constant_function(Z1, 5), 0, steps, bases).passed


def test_polynomial_check_implies_semipolynomial_check():
    # equal-step tuples are a subset of the mixed tuples
    functions = [square(), cube(), polynomial_function(Z1, {(0,): 3, (1,): -2})]
    steps = Z1.ball(1, 2)
    bases = Z1.ball(2, 2)
    for f in functions:
        for n in range(4):
            if check_polynomial(f, n, steps, bases).passed:
                assert check_semipolynomial(f, n, steps, bases).passed


def test_estimate_degree():
    f = polynomial_function(Z1, {(2,): 1, (1,): 1}, label="n^2+n")
    steps = Z1.ball(1, 1)
    bases = Z1.ball(3, 3)
    assert estimate_degree(f, 5, "poly", steps, bases) == 2
    assert estimate_degree(f, 5, "semipoly", steps, bases) == 2
    doubling = GroupFunction(Z1, lambda x: 2 ** x[0] if x[0] >= 0 else Fraction(1, 2 ** -x[0]),
                             label="2^n")
    assert estimate_degree(doubling, 4, "poly", steps, bases) is None
    with pytest.raises(GroupError):
        estimate_degree(f, 3, "weird", steps, bases)


def test_estimate_degree_heisenberg():
    f = heisenberg_function()
    steps = H.ball(1, 1)
    bases = H.ball(2, 1)
    assert estimate_degree(f, 5, "semipoly", steps, bases) == 1
    assert estimate_degree(f, 5, "poly", steps, bases) == 2


def test_star():
    f = polynomial_function(Z1, {(1,): 1}, label="n")
    sf = star(f)
    assert all(sf((n,)) == -n for n in range(-4, 5))
    ss = star(sf)
    for x in Z1.ball(2, 2):
        assert ss(x) == f(x)
    # reflected Heisenberg function is its own negative
    fh = heisenberg_function()
    sfh = star(fh)
    for g in H.ball(2, 2)[:60]:
        assert sfh(g) == -fh(g)


def test_star_symmetry_of_checks():
    # polynomial verdicts transfer to the reflected function on
    # inverse-closed surfaces for genuinely polynomial functions
    f = polynomial_function(Z2, {(2, 0): 1, (1, 1): -3}, label="x^2-3xy")
    steps = Z2.ball(2, 1)
    bases = Z2.ball(2, 1)
    assert check_polynomial(f, 2, steps, bases).passed
    assert check_polynomial(star(f), 2, steps, bases).passed
    fh = heisenberg_function()
    hsteps = H.ball(1, 1)
    hbases = H.ball(2, 1)
    assert check_polynomial(fh, 2, hsteps, hbases).passed
    assert check_polynomial(star(fh), 2, hsteps, hbases).passed


def test_delta_linearity():
    f, g = square(), cube()
    h = (1,)
    combo = GroupFunction(Z1, lambda x: 3 * f(x) - 2 * g(x), label="3f-2g")
    lhs = delta(combo, h)
    df, dg = delta(f, h), delta(g, h)
    for x in Z1.ball(3, 3):
        assert lhs(x) == 3 * df(x) - 2 * dg(x)


def test_verify_delta_identities():
    f = square()
    pairs = [((2,), (3,)), ((0,), (0,)), ((-1,), (4,))]
    assert verify_delta_identities(f, pairs, Z1.ball(3, 3)).passed

    fh = heisenberg_function()
    hpairs = list(zip(H.sample(10, seed=42), H.sample(10, seed=43)))
    assert verify_delta_identities(fh, hpairs, H.ball(1, 2)).passed


def test_commutative_and_noncommutative_tuple_enumeration_agree():
    # the unordered-tuple reduction on commutative groups must agree
    # with full ordered enumeration
    f = polynomial_function(Z2, {(2, 1): 1}, label="x^2y")
    steps = Z2.ball(2, 1)
    bases = Z2.ball(1, 1)
    fast = check_polynomial(f, 2, steps, bases, exhaustive=True)

    residuals = set()
    import itertools

    for tup in itertools.product(steps, repeat=3):
        g = iterated_delta(f, tup)
        for x in bases:
            residuals.add(g(x))
    assert (not fast.passed) == any(r != 0 for r in residuals)


def test_cache_transparency():
    calls = []

    def fn(x):
        calls.append(x)
        return x[0] ** 2

    f = GroupFunction(Z1, fn, label="traced")
    values = [f((n,)) for n in (1, 2, 1, 2, 1)]
    assert values == [1, 4, 1, 4, 1]
    assert len(calls) == 2
    f.clear_cache()
    assert f((1,)) == 1
    assert len(calls) == 3


def test_witnesses_reevaluate():
    f = cube()
    report = check_polynomial(f, 2, Z1.ball(1, 1), Z1.ball(2, 2))
    assert not report.passed and report.witnesses
    for w in report.witnesses:
        assert iterated_delta(f, w.steps)(w.base) == w.residual != 0


def test_table_function_and_report_dict():
    table = {(0,): Fraction(1, 2), (1,): 3}
    f = table_function(Z1, table, default=0, label="table")
    assert f((0,)) == Fraction(1, 2)
    assert f((5,)) == 0
    report = check_semipolynomial(f, 0, [(1,)], [(0,)], max_witnesses=1)
    doc = report.to_dict(Z1)
    assert doc["verdict"] == "fail"
    assert doc["witnesses"][0]["base"] == "(0)"
    assert doc["witnesses"][0]["residual"] == "5/2"


def test_scalar_formatting():
    assert format_scalar(Fraction(3, 4)) == "3/4"
    assert format_scalar(5) == "5"
    assert format_scalar(Fraction(8, 2)) == "4"
    assert parse_scalar("3/4") == Fraction(3, 4)
    assert parse_scalar("-7") == Fraction(-7)
    assert parse_scalar("2.5") == 2.5


def test_checks_reject_bad_surfaces():
    f = square()
    with pytest.raises(GroupError):
        check_polynomial(f, 1, [], [(0,)])
    with pytest.raises(GroupError):
        check_polynomial(f, -1, [(1,)], [(0,)])
    with pytest.raises(GroupError):
        check_polynomial(f, 1, [(1, 2)], [(0,)])  # wrong arity element
