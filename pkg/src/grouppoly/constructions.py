"""Executable versions of the named example functions.

Each construction returns a :class:`~grouppoly.functions.GroupFunction`
on its natural group:

* ``heisenberg_function`` -- f(a, b, c) = a*b - 2c on the rational
  Heisenberg group; its square differences vanish while mixed second
  differences are the nonzero constants a1*b2 - a2*b1.
* ``freeproduct_counterexample`` -- on <a, b | a^2 = e>: f(e) = 0,
  stripping a leading or trailing ``a`` keeps the value, and for a
  stripped word with k blocks ending in b^m,
  f = m * alpha_{k-1} - (m - 1) * f(prefix with k-1 blocks).  Both
  square differences vanish everywhere, yet along powers of a*b the
  values grow like alpha, so no single-step difference of any order
  kills f and the shifted copies of f span spaces of unbounded rank.
* ``infgen_counterexample`` -- on finitely supported integer sequences:
  coordinates are cut into consecutive blocks of sizes 1, 2, 3, ... and
  f is the sum of the per-block coordinate products.  Every basis
  direction has vanishing square difference, but the mixed difference
  across a whole block is the constant 1.
* ``gl_polynomial_demo`` / ``triangular_polynomial_demo`` -- float
  demos p(log|det A|) and p(log|a_11|, ..., log|a_nn|).
* ``rational_fit_check`` -- exact Newton interpolation on the integer
  nodes 0..m plus verification over a bounded rational grid.

``builtin_function`` resolves the registry names used by the CLI and
config files: ``heisenberg``, ``freeproduct[:factorial|geometric:<base>]``,
``infgen``, ``gl-demo:<n>:<coeffs>``, ``tri-demo:<n>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .functions import (
    CheckReport,
    GroupFunction,
    Witness,
    format_scalar,
)
from .groups import (
    FreeProdZZ2,
    GLFloat,
    GroupError,
    HeisenbergRational,
    IntDirectSum,
    RationalAdditive,
    det_float,
)

__all__ = [
    "AlphaSequence",
    "block_start",
    "block_indices",
    "heisenberg_function",
    "freeproduct_counterexample",
    "infgen_counterexample",
    "gl_polynomial_demo",
    "triangular_polynomial_demo",
    "triangular_sample",
    "rational_fit_check",
    "newton_fit",
    "builtin_function",
    "BUILTIN_NAMES",
]


@dataclass(frozen=True)
class AlphaSequence:
    """Weight sequence alpha_k for the free-product construction.

    ``factorial`` (alpha_k = k!) is the default and grows fast enough to
    defeat every polynomial-growth test; ``geometric(base)`` and
    explicit lists are available for experiments.
    """

    rule: str
    base: Optional[Fraction] = None
    values: Optional[tuple] = None

    @staticmethod
    def factorial() -> "AlphaSequence":
        return AlphaSequence("factorial")

    @staticmethod
    def geometric(base) -> "AlphaSequence":
        return AlphaSequence("geometric", base=Fraction(base))

    @staticmethod
    def explicit(values: Sequence) -> "AlphaSequence":
        return AlphaSequence("explicit", values=tuple(Fraction(v) for v in values))

    def __call__(self, k: int):
        if k < 0:
            raise GroupError(f"alpha index must be >= 0, got {k}")
        if self.rule == "factorial":
            return math.factorial(k)
        if self.rule == "geometric":
            return self.base**k
        if self.rule == "explicit":
            if k >= len(self.values):
                raise GroupError(f"explicit alpha sequence has no index {k}")
            return self.values[k]
        raise GroupError(f"unknown alpha rule {self.rule!r}")

    def describe(self) -> str:
        if self.rule == "factorial":
            return "factorial"
        if self.rule == "geometric":
            return f"geometric:{format_scalar(self.base)}"
        return "explicit"


def heisenberg_function() -> GroupFunction:
    """f(a, b, c) = a*b - 2c on the rational Heisenberg group."""

    def evaluate(g):
        a, b, c = g
        return a * b - 2 * c

    return GroupFunction(HeisenbergRational(), evaluate, label="heisenberg")


def freeproduct_counterexample(alpha: Optional[AlphaSequence] = None) -> GroupFunction:
    """Square differences vanish on both generators, yet not a semipolynomial."""
    alpha = alpha or AlphaSequence.factorial()
    cache: dict = {(): 0}

    def value(word):
        known = cache.get(word)
        if known is not None:
            return known
        if word[0] == "a":
            result = value(word[1:])
        elif word[-1] == "a":
            result = value(word[:-1])
        elif len(word) == 1:
            result = word[0] * alpha(0)  # single block b^m
        else:
            # word = prefix . "a" . b^m with k >= 2 blocks
            m = word[-1]
            blocks = (len(word) + 1) // 2
            result = m * alpha(blocks - 1) - (m - 1) * value(word[:-2])
        cache[word] = result
        return result

    label = f"freeproduct:{alpha.describe()}"
    return GroupFunction(FreeProdZZ2(), value, label=label)


def block_start(k: int) -> int:
    """First 0-based coordinate offset of block k is k(k+1)/2."""
    return k * (k + 1) // 2


def block_indices(k: int) -> list[int]:
    """1-based coordinate indices of block k: sizes 1, 2, 3, ..."""
    return list(range(block_start(k) + 1, block_start(k + 1) + 1))


def _block_of_index(index: int) -> int:
    k = 0
    while block_start(k + 1) < index:
        k += 1
    return k


def infgen_counterexample() -> GroupFunction:
    """Sum over blocks of the products of the block coordinates."""

    def evaluate(v):
        coords = dict(v)
        total = 0
        for k in sorted({_block_of_index(i) for i in coords}):
            term = 1
            for i in block_indices(k):
                term *= coords.get(i, 0)
                if term == 0:
                    break
            total += term
        return total

    return GroupFunction(IntDirectSum(), evaluate, label="infgen")


def _poly_eval(coeffs: Sequence[float], x: float) -> float:
    result = 0.0
    for c in reversed(coeffs):
        result = result * x + float(c)
    return result


def gl_polynomial_demo(n: int, coeffs: Sequence[float]) -> GroupFunction:
    """f(A) = p(log|det A|) with p given by coefficients, low degree first."""
    if not coeffs:
        raise GroupError("coefficient list must be nonempty")
    if float(coeffs[-1]) == 0.0 and len(coeffs) > 1:
        raise GroupError("leading coefficient must be nonzero")
    group = GLFloat(n)
    coeffs = [float(c) for c in coeffs]

    def evaluate(mat):
        return _poly_eval(coeffs, math.log(abs(det_float(mat))))

    label = f"gl-demo:{n}:" + ",".join(repr(c) for c in coeffs)
    return GroupFunction(group, evaluate, label=label, exact=False)


def _is_upper_triangular(mat) -> bool:
    n = len(mat)
    return all(mat[i][j] == 0.0 for i in range(n) for j in range(i))


def triangular_polynomial_demo(n: int, coeffs: dict) -> GroupFunction:
    """f(A) = p(log|a_11|, ..., log|a_nn|) on upper-triangular matrices.

    ``coeffs`` maps exponent tuples of length n to float coefficients.
    Non-triangular input is rejected.
    """
    if not coeffs:
        raise GroupError("coefficient table must be nonempty")
    table = {tuple(int(e) for e in key): float(c) for key, c in coeffs.items()}
    for key in table:
        if len(key) != n or any(e < 0 for e in key):
            raise GroupError(f"bad exponent tuple {key!r} for size {n}")
    group = GLFloat(n)

    def evaluate(mat):
        if not _is_upper_triangular(mat):
            raise GroupError("triangular demo requires upper-triangular matrices")
        logs = [math.log(abs(mat[i][i])) for i in range(n)]
        total = 0.0
        for exps, coeff in table.items():
            term = coeff
            for base, e in zip(logs, exps):
                term *= base**e
            total += term
        return total

    return GroupFunction(group, evaluate, label=f"tri-demo:{n}", exact=False)


def triangular_sample(n: int, count: int, seed: int) -> list:
    """Seeded invertible upper-triangular float matrices.

    Diagonal magnitudes are kept in [0.2, 2] so log-diagonals stay well
    away from the singular region.
    """
    import random

    rng = random.Random(f"{seed}|triangular|{n}")
    out = []
    for _ in range(count):
        rows = []
        for i in range(n):
            row = [0.0] * i
            diag = rng.uniform(0.2, 2.0) * rng.choice([-1.0, 1.0])
            row.append(diag)
            row.extend(rng.uniform(-2.0, 2.0) for _ in range(n - i - 1))
            rows.append(tuple(row))
        out.append(tuple(rows))
    return out


def newton_fit(values: Sequence) -> list:
    """Monomial coefficients of the unique polynomial through (j, values[j]).

    Exact forward-difference Newton interpolation on the integer nodes
    0..m; returns coefficients lowest degree first.
    """
    diffs = [Fraction(v) for v in values]
    newton_coeffs = [diffs[0]]
    for _ in range(len(values) - 1):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        newton_coeffs.append(diffs[0])

    # Expand sum_j c_j * binom(x, j) into monomials.
    result = [Fraction(0)] * len(values)
    falling = [Fraction(1)]  # x(x-1)...(x-j+1) as coefficients
    factorial = 1
    for j, c in enumerate(newton_coeffs):
        if j > 0:
            # multiply the falling factorial by (x - (j-1))
            shifted = [Fraction(0)] + falling
            falling = [s - (j - 1) * f for s, f in zip(shifted, falling + [Fraction(0)])]
            factorial *= j
        scale = Fraction(c, factorial)
        for power, coeff in enumerate(falling):
            result[power] += scale * coeff
    while len(result) > 1 and result[-1] == 0:
        result.pop()
    return result


def rational_fit_check(
    f: GroupFunction, m: int, denom_bound: int, *, max_witnesses: int = 5
) -> CheckReport:
    """Fit a degree-<=m polynomial on nodes 0..m, verify on a rational grid.

    Verifies f(x) = p(x) for every reduced x = p/q with |numerator| and
    denominator <= denom_bound.  Exact arithmetic throughout.
    """
    group = f.group
    if not isinstance(group, RationalAdditive):
        raise GroupError("rational fit requires a function on the additive rationals")
    if not f.exact:
        raise GroupError("rational fit requires exact values")
    if m < 0 or denom_bound < 1:
        raise GroupError(f"bad parameters m={m}, denom_bound={denom_bound}")

    nodes = [Fraction(j) for j in range(m + 1)]
    coeffs = newton_fit([f(x) for x in nodes])

    def poly(x):
        result = Fraction(0)
        for c in reversed(coeffs):
            result = result * x + c
        return result

    grid = sorted(
        {Fraction(p, q) for q in range(1, denom_bound + 1) for p in range(-denom_bound, denom_bound + 1)}
    )
    witnesses = []
    for x in grid:
        gap = f(x) - poly(x)
        if gap != 0:
            witnesses.append(Witness((), x, gap))
            if len(witnesses) >= max_witnesses:
                break
    return CheckReport(
        passed=not witnesses,
        witnesses=witnesses,
        params={
            "kind": "rational-fit",
            "degree": m,
            "denom_bound": denom_bound,
            "coefficients": [format_scalar(c) for c in coeffs],
            "function": f.label,
        },
    )


BUILTIN_NAMES = (
    "heisenberg",
    "freeproduct",
    "freeproduct:factorial",
    "freeproduct:geometric:<base>",
    "infgen",
    "gl-demo:<n>:<coeffs>",
    "tri-demo:<n>",
)


def builtin_function(name: str) -> GroupFunction:
    """Resolve a registry name to its GroupFunction."""
    parts = name.strip().split(":")
    head = parts[0]
    if head == "heisenberg" and len(parts) == 1:
        return heisenberg_function()
    if head == "freeproduct":
        if len(parts) == 1 or parts[1] == "factorial":
            return freeproduct_counterexample(AlphaSequence.factorial())
        if parts[1] == "geometric" and len(parts) == 3:
            return freeproduct_counterexample(AlphaSequence.geometric(Fraction(parts[2])))
        raise GroupError(f"bad freeproduct spec {name!r}")
    if head == "infgen" and len(parts) == 1:
        return infgen_counterexample()
    if head == "gl-demo" and len(parts) == 3:
        n = int(parts[1])
        coeffs = [float(c) for c in parts[2].split(",")]
        return gl_polynomial_demo(n, coeffs)
    if head == "tri-demo" and len(parts) == 2:
        n = int(parts[1])
        # Default demo polynomial: the product of all log-diagonals.
        return triangular_polynomial_demo(n, {tuple([1] * n): 1.0})
    raise GroupError(f"unknown builtin function {name!r}")
