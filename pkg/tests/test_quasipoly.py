"""Orbit rank, growth probes, and matrix-element functions."""

from fractions import Fraction

import pytest

from grouppoly import (
    FreeProdZZ2,
    FreeWordGroup,
    GroupError,
    GroupFunction,
    IntVector,
    MatrixRep,
    certify_degree_via_rep,
    check_polynomial,
    constant_function,
    freeproduct_counterexample,
    gl_polynomial_demo,
    growth_probe,
    heisenberg_function,
    matrix_element,
    orbit_rank,
    polynomial_function,
    power,
)

Z1 = IntVector(1)


def unipotent3():
    return MatrixRep(
        3,
        (("A", ((1, 1, 0), (0, 1, 0), (0, 0, 1))), ("B", ((1, 0, 0), (0, 1, 1), (0, 0, 1)))),
    )


def test_orbit_rank_square():
    f = polynomial_function(Z1, {(2,): 1}, label="n^2")
    window = [(k,) for k in range(6)]
    assert orbit_rank(f, window, window) == 3  # span{1, n, n^2}


def test_orbit_rank_constants():
    window = [(k,) for k in range(4)]
    assert orbit_rank(constant_function(Z1, 5), window, window) == 1
    assert orbit_rank(constant_function(Z1, 0), window, window) == 0


def test_orbit_rank_monotone():
    f = polynomial_function(Z1, {(3,): 1}, label="n^3")
    shifts = [(k,) for k in range(5)]
    bases = [(k,) for k in range(5)]
    previous = 0
    for w in range(1, 6):
        r = orbit_rank(f, shifts[:w], bases)
        assert r >= previous
        previous = r
    assert orbit_rank(f, shifts, bases[:2]) <= orbit_rank(f, shifts, bases)


def test_orbit_rank_rejects_float():
    f = gl_polynomial_demo(2, [0.0, 1.0])
    mats = f.group.sample(4, seed=2)
    with pytest.raises(GroupError):
        orbit_rank(f, mats[:2], mats[2:])


def test_orbit_rank_freeproduct_window_growth():
    f = freeproduct_counterexample()
    F = f.group
    ab = F.parse("a b")
    shifts = [power(F, ab, j) for j in range(1, 7)]
    bases = F.ball(6, 1)
    ranks = [orbit_rank(f, shifts[:w], bases) for w in range(1, 7)]
    assert ranks == [1, 2, 3, 4, 5, 6]


def test_growth_probe_cubic():
    f = polynomial_function(Z1, {(3,): 1}, label="n^3")
    probe = growth_probe(f, (1,), 8)
    assert probe["values"][:4] == [0, 1, 8, 27]
    assert probe["min_poly_degree"] == 3


def test_growth_probe_constant():
    probe = growth_probe(constant_function(Z1, 9), (1,), 4)
    assert probe["min_poly_degree"] == 0


def test_growth_probe_factorial_defeats_all_orders():
    f = freeproduct_counterexample()
    F = f.group
    probe = growth_probe(f, F.parse("a b"), 8)
    assert probe["values"] == [0, 1, 1, 2, 6, 24, 120, 720, 5040]
    assert probe["min_poly_degree"] is None


def test_matrix_element_unipotent_line():
    rep = MatrixRep(2, (("t", ((1, 1), (0, 1))),))
    f = matrix_element(rep, (0, 1), (1, 0))
    W = FreeWordGroup(("t",))
    for k in (-3, -1, 0, 1, 2, 5):
        word = ((("t", k),) if k else ())
        assert f(word) == k
    assert certify_degree_via_rep(rep, 1)
    assert not certify_degree_via_rep(rep, 0)


def test_matrix_element_trivial_rep_constant():
    eye = ((1, 0), (0, 1))
    rep = MatrixRep(2, (("g", eye),))
    f = matrix_element(rep, (2, 3), (1, 1))
    W = FreeWordGroup(("g",))
    assert all(f(w) == 5 for w in W.ball(3))


def test_matrix_element_degree_two_statistic():
    rep = unipotent3()
    f = matrix_element(rep, (0, 0, 1), (1, 0, 0))
    W = f.group
    steps = W.ball(1)
    bases = W.ball(3)
    assert check_polynomial(f, 2, steps, bases).passed
    report = check_polynomial(f, 1, steps, bases, max_witnesses=1)
    assert not report.passed
    assert certify_degree_via_rep(rep, 2)
    assert not certify_degree_via_rep(rep, 1)


def test_matrix_element_dimension_mismatch():
    rep = unipotent3()
    with pytest.raises(GroupError):
        matrix_element(rep, (1, 0), (1, 0, 0))


def test_matrix_element_orbit_rank_bounded_by_dim():
    rep = unipotent3()
    W = FreeWordGroup(rep.labels)
    shifts = W.ball(2)
    bases = W.ball(3)
    for i in range(3):
        for j in range(3):
            x = tuple(int(k == i) for k in range(3))
            zeta = tuple(int(k == j) for k in range(3))
            f = matrix_element(rep, x, zeta)
            assert orbit_rank(f, shifts, bases) <= 3


def test_semipolynomial_quasipolynomial_functions_are_polynomial():
    # bounded orbit rank + single-step vanishing forces mixed vanishing
    # at a degree within the rank, checked on the exact builtins
    from grouppoly import check_semipolynomial

    f = heisenberg_function()
    H = f.group
    shifts = H.ball(1, 1)
    bases = H.ball(2, 1)
    rank = orbit_rank(f, shifts + H.sample(6, seed=4), bases)
    assert rank <= 4
    assert check_semipolynomial(f, 1, shifts, bases).passed
    assert any(check_polynomial(f, n, shifts, bases).passed for n in range(rank + 1))
