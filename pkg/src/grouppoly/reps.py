"""Invariant subspaces of finite-dimensional rational matrix representations.

A representation is given by labeled invertible generator matrices over
exact rationals.  For the shift operators d(w) = pi(w) - I this module
computes, exactly:

* the fixed subspace (common kernel of all d(g)),
* the algebra A spanned by every d(w) (closed under products via the
  identity d(g)d(h) = d(gh) - d(g) - d(h)),
* the degree-n "polynomial" subspace: vectors killed by every
  (n+1)-fold product of shift operators -- computed through A, so no
  word enumeration is needed,
* the degree-n "semipolynomial" subspace: vectors killed by every
  (n+1)-th power of a single d(w) -- the intersection over the full
  group has no finite exact procedure in general, so it is computed
  over word balls of growing length until two consecutive lengths
  agree; the length used is reported and the stabilization is a
  heuristic certificate, not a proof.

Everything runs over Fraction arithmetic; no floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .functions import CheckReport, format_scalar
from .linalg import (
    Matrix,
    SpanBuilder,
    Subspace,
    identity_matrix,
    is_zero_matrix,
    mat_inv,
    mat_mul,
    mat_pow,
    mat_sub,
    mat_vec,
    to_matrix,
)

__all__ = [
    "RepresentationError",
    "MatrixRep",
    "OperatorAlgebra",
    "fixed_subspace",
    "delta_algebra",
    "sp_subspace",
    "p_subspace",
    "verify_sp_equals_p",
    "classify_nilpotency",
    "NilpotencyClassification",
    "verify_anticommutation",
    "invariance_check",
]


class RepresentationError(ValueError):
    """Bad generator matrices or a relation that fails to hold."""


def _flatten(mat: Matrix) -> tuple:
    return tuple(v for row in mat for v in row)


def _unflatten(vec: Sequence, dim: int) -> Matrix:
    return tuple(tuple(vec[i * dim + j] for j in range(dim)) for i in range(dim))


@dataclass(frozen=True)
class MatrixRep:
    """Generator-labeled invertible rational matrices, with optional relations.

    Relations are whitespace-separated words in the labels, e.g.
    ``"r r r"`` or ``"r^-1 s r s"``; each supplied relation is checked to
    evaluate to the identity at construction time and a failure is a
    hard error.
    """

    dim: int
    generators: tuple  # tuple of (label, Matrix)
    relations: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise RepresentationError(f"dimension must be >= 1, got {self.dim}")
        gens = tuple((str(label), to_matrix(mat)) for label, mat in self.generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", tuple(str(r) for r in self.relations))
        labels = [label for label, _ in gens]
        if len(set(labels)) != len(labels):
            raise RepresentationError(f"duplicate generator labels in {labels}")
        for label, mat in gens:
            if len(mat) != self.dim or any(len(row) != self.dim for row in mat):
                raise RepresentationError(f"generator {label!r} is not {self.dim}x{self.dim}")
            try:
                mat_inv(mat)
            except ValueError as exc:
                raise RepresentationError(f"generator {label!r} is singular") from exc
        # pure performance layers: memos for word -> matrix and for
        # generator inverses, shared by all consumers of this rep
        object.__setattr__(self, "_word_cache", {})
        object.__setattr__(
            self, "_inverse_cache", {label: mat_inv(mat) for label, mat in gens}
        )
        for relation in self.relations:
            if self.evaluate_word(self.parse_word(relation)) != identity_matrix(self.dim):
                raise RepresentationError(f"relation {relation!r} does not hold")

    @property
    def labels(self) -> tuple:
        return tuple(label for label, _ in self.generators)

    def generator(self, label: str) -> Matrix:
        for lab, mat in self.generators:
            if lab == label:
                return mat
        raise RepresentationError(f"unknown generator {label!r}")

    def parse_word(self, text: str) -> tuple:
        word = []
        for token in text.split():
            if "^" in token:
                label, exp_text = token.split("^", 1)
                exp = int(exp_text)
            else:
                label, exp = token, 1
            word.append((label, exp))
        return tuple(word)

    def evaluate_word(self, word: Sequence[tuple]) -> Matrix:
        """pi(w) for a word given as (label, exponent) pairs.

        Prefix products are memoized, so long runs of related words
        (e.g. a word ball) cost one matrix product per new word.
        """
        word = tuple(word)
        cache = self._word_cache
        known = cache.get(word)
        if known is not None:
            return known
        if not word:
            result = identity_matrix(self.dim)
        else:
            label, exp = word[-1]
            step = 1 if exp > 0 else -1
            prefix = word[:-1] if exp == step else word[:-1] + ((label, exp - step),)
            mat = self.generator(label) if step > 0 else self._inverse_cache[label]
            result = mat_mul(self.evaluate_word(prefix), mat)
        cache[word] = result
        return result

    def symmetric_generators(self) -> list[tuple[str, Matrix]]:
        """Generators and their inverses, labeled."""
        out = []
        for label, mat in self.generators:
            out.append((label, mat))
            out.append((f"{label}^-1", self._inverse_cache[label]))
        return out

    def word_ball(self, max_length: int) -> list[tuple[str, Matrix]]:
        """Distinct pi(w) over words of length <= max_length.

        Returns (word text, matrix) pairs; each matrix appears once,
        named by the first word reaching it in breadth-first order.
        """
        seen: dict[Matrix, str] = {identity_matrix(self.dim): "e"}
        frontier = [("", identity_matrix(self.dim))]
        alphabet = self.symmetric_generators()
        for _ in range(max_length):
            new_frontier = []
            for word, mat in frontier:
                for label, gen in alphabet:
                    candidate = mat_mul(mat, gen)
                    if candidate not in seen:
                        text = f"{word} {label}".strip()
                        seen[candidate] = text
                        new_frontier.append((text, candidate))
            frontier = new_frontier
            if not frontier:
                break
        return sorted(((w, m) for m, w in seen.items()), key=lambda p: (len(p[0]), p[0]))

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "generators": {
                label: [[format_scalar(v) for v in row] for row in mat]
                for label, mat in self.generators
            },
            "relations": list(self.relations),
        }

    @staticmethod
    def from_dict(data: dict) -> "MatrixRep":
        try:
            dim = int(data["dim"])
            raw = data["generators"]
        except (KeyError, TypeError, ValueError) as exc:
            raise RepresentationError(f"bad representation spec: {exc}") from exc
        generators = tuple(
            (label, tuple(tuple(Fraction(str(v)) for v in row) for row in mat))
            for label, mat in raw.items()
        )
        return MatrixRep(dim, generators, tuple(data.get("relations", ())))

    @staticmethod
    def from_json_file(path: str) -> "MatrixRep":
        with open(path, "r", encoding="utf-8") as handle:
            return MatrixRep.from_dict(json.load(handle))


@dataclass(frozen=True)
class OperatorAlgebra:
    """Linear span of all shift operators pi(w) - I, closed under products."""

    dim: int
    basis: tuple  # tuple of Matrix

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def power_basis(self, k: int) -> list[Matrix]:
        """Basis of the span of all k-fold products of algebra elements."""
        if k < 1:
            raise ValueError(f"power must be >= 1, got {k}")
        current = list(self.basis)
        for _ in range(k - 1):
            if not current:
                return []
            span = SpanBuilder(self.dim * self.dim)
            next_basis = []
            for left in current:
                for right in self.basis:
                    product = mat_mul(left, right)
                    if span.add(_flatten(product)):
                        next_basis.append(product)
            current = next_basis
        return current

    def power_is_zero(self, k: int) -> bool:
        return not self.power_basis(k)

    def nilpotency_index(self) -> Optional[int]:
        """Least N with every N-fold product zero; None if none <= dim^2 + 1."""
        if self.is_zero():
            return 0
        for k in range(1, self.dim * self.dim + 2):
            if self.power_is_zero(k):
                return k
        return None


def _shift_operators(rep: MatrixRep) -> list[tuple[str, Matrix]]:
    eye = identity_matrix(rep.dim)
    return [(label, mat_sub(mat, eye)) for label, mat in rep.symmetric_generators()]


def fixed_subspace(rep: MatrixRep) -> Subspace:
    """Common kernel of pi(g) - I over generators and inverses.

    Vectors fixed by every generator are fixed by all products, so this
    is the fixed space of the whole group.
    """
    constraints = []
    for _, shift in _shift_operators(rep):
        constraints.extend(shift)
    return Subspace.kernel_of(constraints, rep.dim)


def delta_algebra(rep: MatrixRep) -> OperatorAlgebra:
    """Span of {pi(w) - I : all words w}, computed by product closure.

    Seeded with the generator and inverse shifts; the product rule
    d(g)d(h) = d(gh) - d(g) - d(h) makes the closed span contain every
    d(w), so closure under pairwise products suffices.  Terminates
    because the span dimension is bounded by dim^2.
    """
    span = SpanBuilder(rep.dim * rep.dim)
    basis: list[Matrix] = []
    worklist: list[Matrix] = []
    for _, shift in _shift_operators(rep):
        if span.add(_flatten(shift)):
            basis.append(shift)
            worklist.append(shift)
    while worklist:
        new = worklist.pop()
        products = [mat_mul(new, other) for other in basis] + [
            mat_mul(other, new) for other in basis
        ]
        for product in products:
            if span.add(_flatten(product)):
                basis.append(product)
                worklist.append(product)
    return OperatorAlgebra(rep.dim, tuple(basis))


def sp_subspace(
    rep: MatrixRep, n: int, max_word_length: int = 4
) -> tuple[Subspace, int]:
    """Vectors killed by (pi(w) - I)^(n+1) for every word w in a ball.

    The ball length grows from 1 until two consecutive lengths give the
    same subspace or ``max_word_length`` is reached; returns the
    subspace and the length actually used.  Stabilization is reported,
    not proven.
    """
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if max_word_length < 1:
        raise ValueError(f"max_word_length must be >= 1, got {max_word_length}")
    eye = identity_matrix(rep.dim)

    def ball_space(length: int) -> Subspace:
        constraints = []
        for _, mat in rep.word_ball(length):
            constraints.extend(mat_pow(mat_sub(mat, eye), n + 1))
        return Subspace.kernel_of(constraints, rep.dim)

    previous = ball_space(1)
    used = 1
    for length in range(2, max_word_length + 1):
        current = ball_space(length)
        used = length
        if current == previous:
            return current, used
        previous = current
    return previous, used


def p_subspace(rep: MatrixRep, n: int) -> Subspace:
    """Vectors killed by every (n+1)-fold product of shift operators.

    Exact: the product span of the shift algebra contains every mixed
    product d(h_1)...d(h_{n+1}), so intersecting the kernels of a basis
    of that span needs no word enumeration.
    """
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    algebra = delta_algebra(rep)
    constraints = []
    for mat in algebra.power_basis(n + 1):
        constraints.extend(mat)
    return Subspace.kernel_of(constraints, rep.dim)


def invariance_check(rep: MatrixRep, space: Subspace) -> bool:
    """True iff pi(g) * space is inside space for every generator and inverse."""
    for _, mat in rep.symmetric_generators():
        for vector in space.basis:
            if not space.contains_vector(mat_vec(mat, vector)):
                return False
    return True


def _restrict(mat: Matrix, space: Subspace) -> Matrix:
    """Matrix of the operator restricted to an invariant subspace.

    Uses the RREF structure of the basis: a vector w in the space has
    coordinates (w[p] for pivot columns p).
    """
    pivots = []
    for row in space.basis:
        pivots.append(next(c for c, v in enumerate(row) if v != 0))
    cols = []
    for vector in space.basis:
        image = mat_vec(mat, vector)
        if not space.contains_vector(image):
            raise ValueError("operator does not preserve the subspace")
        cols.append([image[p] for p in pivots])
    k = len(space.basis)
    return tuple(tuple(cols[j][i] for j in range(k)) for i in range(k))


def verify_sp_equals_p(rep: MatrixRep, max_word_length: int = 4) -> CheckReport:
    """Check that the union semipolynomial and polynomial subspaces agree.

    Both unions stabilize by degree = dim.  Also computes the nilpotency
    index of the shift algebra restricted to the semipolynomial space
    and asserts index <= its dimension.
    """
    dim = rep.dim
    sp_space, used = sp_subspace(rep, dim, max_word_length)
    p_space = p_subspace(rep, dim)
    algebra = delta_algebra(rep)

    if sp_space.is_zero() or algebra.is_zero():
        index = 0
    else:
        restricted = OperatorAlgebra(
            sp_space.dimension,
            tuple(_restrict(mat, sp_space) for mat in algebra.basis),
        )
        index = restricted.nilpotency_index()

    equal = sp_space == p_space
    index_ok = index is not None and (index <= sp_space.dimension or index == 0)
    witnesses = []
    if not equal:
        larger, smaller, tag = (
            (sp_space, p_space, "in semipolynomial space only")
            if sp_space.dimension >= p_space.dimension
            else (p_space, sp_space, "in polynomial space only")
        )
        for vector in larger.basis:
            if not smaller.contains_vector(vector):
                witnesses.append(
                    {"vector": [format_scalar(v) for v in vector], "status": tag}
                )
    if not index_ok:
        witnesses.append(
            {"status": "nilpotency index exceeds subspace dimension", "index": index}
        )
    return CheckReport(
        passed=equal and index_ok,
        witnesses=witnesses,
        params={
            "kind": "sp-equals-p",
            "sp_dimension": sp_space.dimension,
            "p_dimension": p_space.dimension,
            "nilpotency_index": index,
            "word_length_used": used,
            "sp_basis": sp_space.to_lists(),
            "p_basis": p_space.to_lists(),
        },
    )


@dataclass(frozen=True)
class NilpotencyClassification:
    """Shift-nilpotency classes of a representation at a given degree.

    ``product_nilpotent`` (every (n+1)-fold mixed product of shifts is
    zero) is decided exactly through the algebra closure; the
    ``power_nilpotent`` ((pi(w)-I)^(n+1) = 0 for each w) and
    ``unipotent`` (each pi(w)-I nilpotent) flags are verified on a word
    ball and are heuristic, with the ball length recorded.
    """

    product_nilpotent: bool
    power_nilpotent: bool
    unipotent: bool
    degree: int
    word_length: int


def classify_nilpotency(
    rep: MatrixRep, n: int, max_word_length: int = 3
) -> NilpotencyClassification:
    algebra = delta_algebra(rep)
    product_nilpotent = algebra.power_is_zero(n + 1)
    eye = identity_matrix(rep.dim)
    power_nilpotent = True
    unipotent = True
    for _, mat in rep.word_ball(max_word_length):
        shift = mat_sub(mat, eye)
        if not is_zero_matrix(mat_pow(shift, n + 1)):
            power_nilpotent = False
        if not is_zero_matrix(mat_pow(shift, rep.dim)):
            unipotent = False
    return NilpotencyClassification(
        product_nilpotent=product_nilpotent,
        power_nilpotent=power_nilpotent,
        unipotent=unipotent,
        degree=n,
        word_length=max_word_length,
    )


def verify_anticommutation(rep: MatrixRep, max_word_length: int = 3) -> CheckReport:
    """For reps with every (pi(w)-I)^2 = 0: shifts must anticommute.

    First checks the square-zero hypothesis on the word ball; when it
    fails the report carries status "hypothesis fails".  Otherwise the
    check passes iff d(g)d(h) + d(h)d(g) = 0 for all ball pairs and
    every triple product of algebra basis elements is zero.
    """
    eye = identity_matrix(rep.dim)
    ball = rep.word_ball(max_word_length)
    shifts = [(word, mat_sub(mat, eye)) for word, mat in ball]

    for word, shift in shifts:
        square = mat_mul(shift, shift)
        if not is_zero_matrix(square):
            entry = _first_nonzero_entry(square)
            return CheckReport(
                passed=False,
                witnesses=[
                    {
                        "word": word,
                        "entry": list(entry[0]),
                        "value": format_scalar(entry[1]),
                        "status": "hypothesis fails",
                    }
                ],
                params={
                    "kind": "anticommutation",
                    "status": "hypothesis fails",
                    "word_length": max_word_length,
                },
            )

    witnesses = []
    for i, (word_g, shift_g) in enumerate(shifts):
        for word_h, shift_h in shifts[i:]:
            total = mat_mul(shift_g, shift_h)
            total = tuple(
                tuple(a + b for a, b in zip(row1, row2))
                for row1, row2 in zip(total, mat_mul(shift_h, shift_g))
            )
            if not is_zero_matrix(total):
                entry = _first_nonzero_entry(total)
                witnesses.append(
                    {
                        "words": [word_g, word_h],
                        "entry": list(entry[0]),
                        "value": format_scalar(entry[1]),
                        "status": "shifts do not anticommute",
                    }
                )

    algebra = delta_algebra(rep)
    for a in algebra.basis:
        for b in algebra.basis:
            ab = mat_mul(a, b)
            for c in algebra.basis:
                if not is_zero_matrix(mat_mul(ab, c)):
                    witnesses.append({"status": "nonzero triple product"})
                    break

    return CheckReport(
        passed=not witnesses,
        witnesses=witnesses[:DEFAULT_REP_WITNESS_CAP],
        params={
            "kind": "anticommutation",
            "status": "hypothesis holds",
            "word_length": max_word_length,
            "pair_count": len(shifts) * (len(shifts) + 1) // 2,
        },
    )


DEFAULT_REP_WITNESS_CAP = 5


def _first_nonzero_entry(mat: Matrix) -> tuple[tuple[int, int], Fraction]:
    for i, row in enumerate(mat):
        for j, value in enumerate(row):
            if value != 0:
                return (i, j), value
    raise ValueError("matrix is zero")
