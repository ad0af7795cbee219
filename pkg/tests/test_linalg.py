"""Exact elimination, kernels, canonical subspaces, span closure."""

import random
from fractions import Fraction

import pytest

from grouppoly.linalg import (
    SpanBuilder,
    Subspace,
    det,
    identity_matrix,
    mat_inv,
    mat_mul,
    mat_pow,
    mat_vec,
    nullspace,
    rank,
    rref,
    to_matrix,
)


def random_matrix(rng, rows, cols, lo=-4, hi=4):
    return to_matrix([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def test_rref_hand_case():
    reduced, pivots = rref([[2, 4, 6], [1, 2, 4]])
    assert pivots == [0, 2]
    assert reduced == [[Fraction(1), Fraction(2), Fraction(0)], [Fraction(0), Fraction(0), Fraction(1)]]


def test_rref_idempotent_and_rank():
    rng = random.Random(5)
    for _ in range(25):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        reduced, pivots = rref(m)
        again, again_pivots = rref(reduced)
        assert [list(r) for r in again] == [list(r) for r in reduced]
        assert again_pivots == pivots
        assert rank(m) == len(pivots)


def test_nullspace_annihilates():
    rng = random.Random(6)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = random_matrix(rng, rows, cols)
        kernel = nullspace(m)
        assert rank(m) + len(kernel) == cols  # rank-nullity
        for v in kernel:
            assert all(value == 0 for value in mat_vec(m, v))


def test_nullspace_empty_constraints():
    basis = nullspace([], n_cols=3)
    assert len(basis) == 3
    with pytest.raises(ValueError):
        nullspace([])


def test_det_and_inverse():
    rng = random.Random(7)
    count = 0
    while count < 15:
        m = random_matrix(rng, 3, 3)
        d = det(m)
        if d == 0:
            assert rank(m) < 3
            continue
        count += 1
        inv = mat_inv(m)
        assert mat_mul(m, inv) == identity_matrix(3)
    with pytest.raises(ValueError):
        mat_inv(to_matrix([[1, 2], [2, 4]]))


def test_mat_pow():
    e12 = to_matrix([[0, 1], [0, 0]])
    assert mat_pow(e12, 2) == to_matrix([[0, 0], [0, 0]])
    assert mat_pow(e12, 0) == identity_matrix(2)


def test_subspace_canonical_equality():
    # same plane through two different spanning sets
    s1 = Subspace.from_vectors(3, [[1, 0, 1], [0, 1, 1]])
    s2 = Subspace.from_vectors(3, [[1, 1, 2], [2, 1, 3]])
    assert s1 == s2
    assert s1.dimension == 2
    assert s1.contains_vector([3, -2, 1])
    assert not s1.contains_vector([0, 0, 1])
    assert Subspace.full(3).contains(s1)
    assert s1.contains(Subspace.zero(3))
    assert not s1.contains(Subspace.full(3))


def test_kernel_of_stack():
    e13 = [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
    space = Subspace.kernel_of(list(e13), 3)
    assert space == Subspace.from_vectors(3, [[1, 0, 0], [0, 1, 0]])
    assert Subspace.kernel_of([], 3) == Subspace.full(3)


def test_span_builder():
    span = SpanBuilder(4)
    assert span.add([1, 0, 1, 0])
    assert span.add([0, 1, 0, 0])
    assert not span.add([2, 3, 2, 0])  # dependent
    assert span.dimension == 2
    assert span.contains([5, -1, 5, 0])
    assert not span.contains([0, 0, 0, 1])
    # vectors stay mutually reduced
    vecs = span.vectors()
    assert Subspace.from_vectors(4, vecs) == Subspace.from_vectors(4, [[1, 0, 1, 0], [0, 1, 0, 0]])


def test_span_builder_matches_subspace_rank():
    rng = random.Random(8)
    for _ in range(20):
        vectors = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(6)]
        span = SpanBuilder(5)
        for v in vectors:
            span.add(v)
        assert span.dimension == rank(vectors)
