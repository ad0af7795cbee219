"""Quasipolynomial probes: orbit rank, growth, and matrix elements.

A function whose right shifts span a finite-dimensional space is a
quasipolynomial; equivalently it is a matrix element
w |-> zeta . pi(w) . x of a finite-dimensional representation.  On
finite evaluation windows only a lower bound for the shift-span
dimension is observable, so ``orbit_rank`` reports the exact rank of a
finite evaluation matrix and nothing more.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .functions import GroupFunction
from .groups import FreeWordGroup, Group, GroupError, power
from .linalg import exact_scalar, rank
from .reps import MatrixRep, delta_algebra

__all__ = [
    "orbit_rank",
    "growth_probe",
    "matrix_element",
    "certify_degree_via_rep",
]


def orbit_rank(f: GroupFunction, shifts: Sequence, bases: Sequence) -> int:
    """Exact rank of the matrix M[h][x] = f(x * h).

    A lower bound for the dimension of the span of the right shifts of
    f over the given window; monotone in both windows.  Float functions
    are rejected since float rank is not stable.
    """
    if not f.exact:
        raise GroupError("orbit rank needs exact values")
    if not shifts or not bases:
        raise GroupError("shifts and bases must be nonempty")
    group = f.group
    for h in shifts:
        group.validate(h)
    for x in bases:
        group.validate(x)
    rows = [[Fraction(f(group.multiply(x, h))) for x in bases] for h in shifts]
    return rank(rows)


def growth_probe(f: GroupFunction, h, K: int) -> dict:
    """Values f(h^k), k = 0..K, and the least vanishing difference order.

    ``min_poly_degree`` is the least d <= K-1 whose (d+1)-th forward
    differences vanish identically on the sampled window; None when the
    sequence defeats every order (e.g. factorial growth).
    """
    if not f.exact:
        raise GroupError("growth probe needs exact values")
    if K < 1:
        raise GroupError(f"window K must be >= 1, got {K}")
    group = f.group
    group.validate(h)
    values = [f(power(group, h, k)) for k in range(K + 1)]

    min_degree: Optional[int] = None
    diffs = list(values)
    for d in range(K):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        if all(v == 0 for v in diffs):
            min_degree = d
            break
    return {"values": values, "min_poly_degree": min_degree}


def matrix_element(rep: MatrixRep, x: Sequence, zeta: Sequence) -> GroupFunction:
    """The function w |-> zeta . pi(w) . x on words in the generator labels.

    The domain is the free word group on the labels (relations, when
    supplied to the representation, are only validated there); values
    are exact rationals.
    """
    if len(x) != rep.dim or len(zeta) != rep.dim:
        raise GroupError(
            f"vector/covector length must be {rep.dim}, got {len(x)} and {len(zeta)}"
        )
    vec = tuple(exact_scalar(v) for v in x)
    cov = tuple(exact_scalar(v) for v in zeta)
    group = FreeWordGroup(rep.labels)

    def evaluate(word):
        mat = rep.evaluate_word(word)
        image = [sum(row[j] * vec[j] for j in range(rep.dim)) for row in mat]
        value = sum(c * v for c, v in zip(cov, image))
        # integral values downgrade to int so difference chains stay fast
        return int(value) if value.denominator == 1 else value

    return GroupFunction(group, evaluate, label="matrix-element")


def certify_degree_via_rep(rep: MatrixRep, n: int) -> bool:
    """True iff every (n+1)-fold product of shift operators vanishes.

    Decided exactly through the shift-algebra closure; when true, every
    matrix element of the representation satisfies the degree-n mixed
    difference condition.
    """
    if n < 0:
        raise GroupError(f"degree must be >= 0, got {n}")
    return delta_algebra(rep).power_is_zero(n + 1)
