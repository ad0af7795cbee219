"""Representation subspaces, shift algebras, and nilpotency classes."""

from fractions import Fraction

import pytest

from grouppoly import (
    MatrixRep,
    RepresentationError,
    Subspace,
    classify_nilpotency,
    delta_algebra,
    fixed_subspace,
    invariance_check,
    p_subspace,
    sp_subspace,
    verify_anticommutation,
    verify_sp_equals_p,
)
from grouppoly.linalg import identity_matrix, mat_mul, to_matrix


def trivial_rep(dim=3):
    eye = identity_matrix(dim)
    return MatrixRep(dim, (("g", eye), ("h", eye)))


def z_unipotent():
    return MatrixRep(2, (("t", ((1, 1), (0, 1))),))


def s3_irrep():
    return MatrixRep(
        2,
        (("r", ((0, -1), (1, -1))), ("s", ((0, 1), (1, 0)))),
        ("r r r", "s s", "r s r s"),
    )


def unipotent3():
    return MatrixRep(
        3,
        (("A", ((1, 1, 0), (0, 1, 0), (0, 0, 1))), ("B", ((1, 0, 0), (0, 1, 1), (0, 0, 1)))),
    )


def anticommuting_rep():
    # generators I + E13 and I + E23: all shift squares vanish
    return MatrixRep(
        3,
        (("A", ((1, 0, 1), (0, 1, 0), (0, 0, 1))), ("B", ((1, 0, 0), (0, 1, 1), (0, 0, 1)))),
    )


def test_rep_construction_validation():
    with pytest.raises(RepresentationError):
        MatrixRep(2, (("g", ((1, 2), (2, 4))),))  # singular
    with pytest.raises(RepresentationError):
        MatrixRep(2, (("g", ((1, 0), (0, 1))), ("g", ((1, 1), (0, 1)))))  # dup label
    with pytest.raises(RepresentationError):
        MatrixRep(2, (("g", ((1, 1), (0, 1))),), ("g g",))  # relation fails
    rep = MatrixRep(2, (("g", ((0, -1), (1, 0))),), ("g g g g",))
    assert rep.evaluate_word(rep.parse_word("g^-1 g")) == identity_matrix(2)


def test_word_evaluation():
    rep = z_unipotent()
    assert rep.evaluate_word((("t", 5),)) == to_matrix([[1, 5], [0, 1]])
    assert rep.evaluate_word((("t", -3),)) == to_matrix([[1, -3], [0, 1]])
    ball = rep.word_ball(3)
    assert len(ball) == 7  # powers -3..3 of a single unipotent generator
    assert ball[0][0] == "e"


def test_fixed_subspace():
    assert fixed_subspace(trivial_rep()).is_full()
    assert fixed_subspace(z_unipotent()) == Subspace.from_vectors(2, [[1, 0]])
    assert fixed_subspace(s3_irrep()).is_zero()


def test_delta_algebra():
    assert delta_algebra(trivial_rep()).is_zero()

    alg = delta_algebra(z_unipotent())
    assert alg.dimension == 1
    assert alg.basis[0] == to_matrix([[0, 1], [0, 0]])

    alg3 = delta_algebra(unipotent3())
    assert alg3.dimension == 3
    # spans {E12, E23, E13}
    e13 = to_matrix([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    from grouppoly.linalg import SpanBuilder

    span = SpanBuilder(9)
    for mat in alg3.basis:
        span.add([v for row in mat for v in row])
    assert span.contains([v for row in e13 for v in row])


def test_algebra_powers():
    alg = delta_algebra(unipotent3())
    assert not alg.power_is_zero(1)
    assert not alg.power_is_zero(2)
    assert alg.power_is_zero(3)
    assert alg.nilpotency_index() == 3
    assert delta_algebra(trivial_rep()).nilpotency_index() == 0


def test_sp_subspace():
    full, _ = sp_subspace(trivial_rep(), 0)
    assert full.is_full()
    for n in range(4):
        space, used = sp_subspace(s3_irrep(), n, 4)
        assert space.is_zero()
        assert used <= 4
    space, _ = sp_subspace(unipotent3(), 2)
    assert space.is_full()


def test_p_subspace():
    assert p_subspace(trivial_rep(), 0).is_full()
    assert p_subspace(z_unipotent(), 1).is_full()
    assert p_subspace(z_unipotent(), 0) == Subspace.from_vectors(2, [[1, 0]])
    # vectors killed by all products of two shifts: kernel of E13
    assert p_subspace(unipotent3(), 1) == Subspace.from_vectors(3, [[1, 0, 0], [0, 1, 0]])
    # brute-force oracle: intersect kernels of all pairwise products
    alg = delta_algebra(unipotent3())
    constraints = []
    for a in alg.basis:
        for b in alg.basis:
            constraints.extend(mat_mul(a, b))
    assert p_subspace(unipotent3(), 1) == Subspace.kernel_of(constraints, 3)


def test_subspace_chain_invariants():
    for rep in (trivial_rep(), z_unipotent(), s3_irrep(), unipotent3(), anticommuting_rep()):
        previous = None
        for n in range(rep.dim + 1):
            p_space = p_subspace(rep, n)
            s_space, _ = sp_subspace(rep, n, 4)
            assert s_space.contains(p_space)
            if previous is not None:
                assert s_space.contains(previous)
            previous = s_space
            assert invariance_check(rep, p_space)
            assert invariance_check(rep, s_space)
        assert p_subspace(rep, 0) == fixed_subspace(rep)
        assert sp_subspace(rep, 0, 4)[0] == fixed_subspace(rep)


def test_verify_sp_equals_p():
    report = verify_sp_equals_p(trivial_rep())
    assert report.passed and report.params["nilpotency_index"] == 0

    report = verify_sp_equals_p(s3_irrep())
    assert report.passed
    assert report.params["sp_dimension"] == 0 == report.params["p_dimension"]

    report = verify_sp_equals_p(unipotent3())
    assert report.passed
    assert report.params["sp_dimension"] == 3
    assert report.params["nilpotency_index"] <= 3


def test_classify_nilpotency():
    cls = classify_nilpotency(unipotent3(), 2)
    assert cls.product_nilpotent and cls.power_nilpotent and cls.unipotent
    cls1 = classify_nilpotency(unipotent3(), 1)
    assert not cls1.product_nilpotent  # E12 * E23 = E13 is nonzero
    assert not cls1.power_nilpotent  # the shift of the word AB squares to E13
    assert classify_nilpotency(trivial_rep(), 0).product_nilpotent
    s3 = classify_nilpotency(s3_irrep(), 2)
    assert not s3.unipotent


def test_verify_anticommutation():
    assert verify_anticommutation(trivial_rep()).passed
    report = verify_anticommutation(anticommuting_rep())
    assert report.passed
    assert report.params["status"] == "hypothesis holds"

    bad = MatrixRep(3, (("C", ((1, 1, 0), (0, 1, 1), (0, 0, 1))),))
    report = verify_anticommutation(bad)
    assert not report.passed
    assert report.params["status"] == "hypothesis fails"
    assert report.witnesses


def test_square_zero_reps_are_degree_two():
    # when the degree-1 uniform subspace is everything, the mixed
    # degree-2 subspace is everything as well
    rep = anticommuting_rep()
    space, _ = sp_subspace(rep, 1, 4)
    assert space.is_full()
    assert verify_anticommutation(rep).passed
    assert p_subspace(rep, 2).is_full()


def test_traces_vanish_on_nilpotent_test_reps():
    for rep in (z_unipotent(), unipotent3(), anticommuting_rep()):
        space, _ = sp_subspace(rep, rep.dim, 4)
        assert space.is_full()
        for mat in delta_algebra(rep).basis:
            assert sum(mat[i][i] for i in range(rep.dim)) == 0


def test_invariance_check_rejects_random_line():
    rep = s3_irrep()
    assert invariance_check(rep, Subspace.full(2))
    assert not invariance_check(rep, Subspace.from_vectors(2, [[1, 2]]))


def test_rep_round_trip_and_file(tmp_path):
    rep = s3_irrep()
    data = rep.to_dict()
    again = MatrixRep.from_dict(data)
    assert again == rep
    path = tmp_path / "rep.json"
    import json

    path.write_text(json.dumps(data))
    assert MatrixRep.from_json_file(str(path)) == rep
