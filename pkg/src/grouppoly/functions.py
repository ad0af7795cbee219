"""Scalar functions on groups and the difference-operator calculus.

The central object is :class:`GroupFunction`, a memoized evaluation map
from group elements (normal forms) to scalars.  Exact functions return
``int`` / ``Fraction`` values and are compared against zero exactly;
float functions carry an absolute tolerance that is scaled by the
largest function magnitude met during a check.

The difference operator ``delta(f, h)`` sends f to g |-> f(g*h) - f(g).
``iterated_delta(f, [h1, ..., hk])`` applies h1 first and hk last, so
the step tuple lists the operators inside-out.  For a step pair
(s1, s2) this means the s2-difference of the s1-difference.  The order
matters on non-commutative groups and is part of every reported
witness.

Membership checks run over finite, caller-supplied step and base
surfaces.  A ``pass`` verdict therefore means "no violation found on
this surface"; the surface parameters are recorded in every report.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .groups import Group, GroupError

__all__ = [
    "GroupFunction",
    "Witness",
    "CheckReport",
    "constant_function",
    "table_function",
    "polynomial_function",
    "delta",
    "iterated_delta",
    "star",
    "check_polynomial",
    "check_semipolynomial",
    "estimate_degree",
    "verify_delta_identities",
    "format_scalar",
    "parse_scalar",
]

DEFAULT_FLOAT_TOL = 1e-9
DEFAULT_WITNESS_CAP = 5


def format_scalar(value) -> str:
    if isinstance(value, float):
        return repr(value)
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_scalar(text: str):
    text = text.strip()
    if "/" in text or re_fullmatch_int(text):
        return Fraction(text)
    return float(text)


def re_fullmatch_int(text: str) -> bool:
    body = text[1:] if text[:1] in "+-" else text
    return body.isdigit()


class GroupFunction:
    """Memoized map from group elements to scalars.

    The cache is a pure performance layer: evaluation with and without
    it agrees.  ``exact`` functions must return int/Fraction values;
    float functions additionally track the largest magnitude seen, used
    to scale tolerances in checks.
    """

    __slots__ = ("group", "label", "exact", "tol", "_fn", "_cache", "_root")

    def __init__(
        self,
        group: Group,
        fn: Callable,
        label: str = "f",
        exact: bool = True,
        tol: float = DEFAULT_FLOAT_TOL,
        _root: Optional["GroupFunction"] = None,
    ):
        self.group = group
        self.label = label
        self.exact = exact
        self.tol = tol
        self._fn = fn
        self._cache: dict = {}
        # Derived functions (deltas) share the root so that float checks
        # can scale tolerances by the base function's magnitude.
        self._root = _root if _root is not None else self

    def __call__(self, x):
        cache = self._cache
        value = cache.get(x, _MISSING)
        if value is _MISSING:
            value = self._fn(x)
            cache[x] = value
        return value

    def clear_cache(self) -> None:
        self._cache.clear()

    def max_abs_seen(self) -> float:
        root_cache = self._root._cache
        if not root_cache:
            return 0.0
        return max(abs(v) for v in root_cache.values())

    def __repr__(self):
        return f"GroupFunction({self.label!r} on {self.group.name})"


_MISSING = object()


def constant_function(group: Group, value, label: Optional[str] = None) -> GroupFunction:
    exact = not isinstance(value, float)
    return GroupFunction(group, lambda x: value, label or f"const {value}", exact=exact)


def table_function(group: Group, table: dict, default=0, label: str = "table") -> GroupFunction:
    """Finite value table plus default value outside the table."""
    exact = not (
        isinstance(default, float) or any(isinstance(v, float) for v in table.values())
    )
    frozen = dict(table)
    return GroupFunction(group, lambda x: frozen.get(x, default), label, exact=exact)


def polynomial_function(group: Group, coeffs: dict, label: str = "poly") -> GroupFunction:
    """Classical polynomial from a coefficient table.

    For IntVector(d) the keys are exponent tuples of length d; for the
    rational additive group the keys are single integer exponents.
    Coefficients are exact scalars.
    """
    items = []
    for key, coeff in coeffs.items():
        exps = (key,) if isinstance(key, int) else tuple(key)
        if any(e < 0 for e in exps):
            raise GroupError(f"negative exponent in monomial {key!r}")
        items.append((exps, coeff))

    def evaluate(x):
        point = x if isinstance(x, tuple) else (x,)
        total = 0
        for exps, coeff in items:
            if len(exps) != len(point):
                raise GroupError(f"monomial arity {len(exps)} does not match point {point!r}")
            term = coeff
            for base, e in zip(point, exps):
                term *= base**e
            total += term
        return total

    return GroupFunction(group, evaluate, label)


def delta(f: GroupFunction, h) -> GroupFunction:
    """The difference operator: delta(f, h)(g) = f(g*h) - f(g)."""
    group = f.group
    group.validate(h)
    multiply = group.multiply

    def diff(g):
        return f(multiply(g, h)) - f(g)

    label = f"D[{group.format_element(h)}]{f.label}"
    return GroupFunction(group, diff, label, exact=f.exact, tol=f.tol, _root=f._root)


def iterated_delta(f: GroupFunction, steps: Sequence) -> GroupFunction:
    """Compose difference operators; steps[0] is applied first."""
    if not steps:
        raise GroupError("iterated_delta needs at least one step")
    g = f
    for h in steps:
        g = delta(g, h)
    return g


def star(f: GroupFunction) -> GroupFunction:
    """The reflected function g |-> f(g^-1)."""
    group = f.group
    return GroupFunction(
        group, lambda g: f(group.inverse(g)), f"star({f.label})", exact=f.exact, tol=f.tol
    )


@dataclass(frozen=True)
class Witness:
    """A step tuple and base point where a residual failed to vanish."""

    steps: tuple
    base: object
    residual: object

    def to_dict(self, group: Group) -> dict:
        return {
            "steps": [group.format_element(s) for s in self.steps],
            "base": group.format_element(self.base),
            "residual": format_scalar(self.residual),
        }


@dataclass
class CheckReport:
    """Uniform tester output: verdict, witnesses, surface parameters."""

    passed: bool
    witnesses: list = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self, group: Optional[Group] = None) -> dict:
        witnesses = [
            w.to_dict(group) if group is not None and isinstance(w, Witness) else w
            for w in self.witnesses
        ]
        return {"verdict": self.verdict, "witnesses": witnesses, "params": dict(self.params)}


def _zero_threshold(f: GroupFunction, tol: Optional[float]) -> float:
    # Exact functions tolerate nothing; float functions tolerate
    # tol * max(1, largest |f| seen on the touched points).
    if f.exact:
        return 0.0
    base = f.tol if tol is None else tol
    return base * max(1.0, f.max_abs_seen())


def _run_check(
    f: GroupFunction,
    degree: int,
    steps: Sequence,
    bases: Sequence,
    *,
    equal_steps: bool,
    kind: str,
    max_witnesses: int = DEFAULT_WITNESS_CAP,
    exhaustive: bool = False,
    tol: Optional[float] = None,
) -> CheckReport:
    if degree < 0:
        raise GroupError(f"degree must be >= 0, got {degree}")
    if not steps or not bases:
        raise GroupError("steps and bases must be nonempty")
    group = f.group
    for h in steps:
        group.validate(h)
    for x in bases:
        group.validate(x)

    size = degree + 1
    witnesses: list[Witness] = []
    cap = max_witnesses if not exhaustive else float("inf")

    if f.exact:
        # Streaming scan with shared delta-chain prefixes.
        def scan(prefix_fn, chosen, start):
            depth = len(chosen)
            if depth == size:
                for x in bases:
                    residual = prefix_fn(x)
                    if residual != 0:
                        witnesses.append(Witness(tuple(chosen), x, residual))
                        if len(witnesses) >= cap:
                            return True
                return False
            if equal_steps:
                candidates = [(start, chosen[0])] if chosen else list(enumerate(steps))
            elif group.is_commutative:
                candidates = [(i, steps[i]) for i in range(start, len(steps))]
            else:
                candidates = list(enumerate(steps))
            for i, h in candidates:
                if scan(delta(prefix_fn, h), chosen + [h], i):
                    return True
            return False

        scan(f, [], 0)
        threshold = 0.0
    else:
        # Float path: subset-expansion residuals with shared product and
        # value caches; all residuals are collected first so the
        # tolerance can be scaled by the final magnitude estimate.
        multiply = group.multiply
        step_list = list(steps)
        word_products = {(): group.identity()}

        def product_for(word: tuple):
            mat = word_products.get(word)
            if mat is None:
                mat = multiply(product_for(word[:-1]), step_list[word[-1]])
                word_products[word] = mat
            return mat

        point_values: dict = {}

        def value_at(base_idx: int, word: tuple) -> float:
            key = (base_idx, word)
            value = point_values.get(key)
            if value is None:
                value = f(multiply(bases[base_idx], product_for(word)))
                point_values[key] = value
            return value

        # Subset masks: word lists the chosen step indices with the
        # later positions multiplied first (the outermost operator acts
        # by the last step).
        masks = []
        for mask in range(1 << size):
            positions = [p for p in range(size - 1, -1, -1) if (mask >> p) & 1]
            sign = 1 if (size - len(positions)) % 2 == 0 else -1
            masks.append((positions, sign))

        index_range = range(len(step_list))
        if equal_steps:
            index_tuples = (((i,) * size) for i in index_range)
        elif group.is_commutative:
            index_tuples = itertools.combinations_with_replacement(index_range, size)
        else:
            index_tuples = itertools.product(index_range, repeat=size)

        residuals = []
        for idx_tuple in index_tuples:
            words = [(tuple(idx_tuple[p] for p in positions), sign) for positions, sign in masks]
            for base_idx in range(len(bases)):
                residual = 0.0
                for word, sign in words:
                    residual += sign * value_at(base_idx, word)
                residuals.append((idx_tuple, base_idx, residual))
        threshold = _zero_threshold(f, tol)
        for idx_tuple, base_idx, value in residuals:
            if abs(value) > threshold:
                step_tuple = tuple(step_list[i] for i in idx_tuple)
                witnesses.append(Witness(step_tuple, bases[base_idx], value))
                if len(witnesses) >= cap:
                    break

    report = CheckReport(
        passed=not witnesses,
        witnesses=witnesses,
        params={
            "kind": kind,
            "degree": degree,
            "step_count": len(steps),
            "base_count": len(bases),
            "tolerance": threshold if not f.exact else 0,
            "witness_cap": None if exhaustive else max_witnesses,
            "function": f.label,
            "group": group.name,
        },
    )
    return report


def check_polynomial(
    f: GroupFunction,
    degree: int,
    steps: Sequence,
    bases: Sequence,
    *,
    max_witnesses: int = DEFAULT_WITNESS_CAP,
    exhaustive: bool = False,
    tol: Optional[float] = None,
) -> CheckReport:
    """Do all mixed (degree+1)-fold differences from ``steps`` vanish on ``bases``?"""
    return _run_check(
        f,
        degree,
        steps,
        bases,
        equal_steps=False,
        kind="poly",
        max_witnesses=max_witnesses,
        exhaustive=exhaustive,
        tol=tol,
    )


def check_semipolynomial(
    f: GroupFunction,
    degree: int,
    steps: Sequence,
    bases: Sequence,
    *,
    max_witnesses: int = DEFAULT_WITNESS_CAP,
    exhaustive: bool = False,
    tol: Optional[float] = None,
) -> CheckReport:
    """Like check_polynomial but only equal-step tuples (h, ..., h)."""
    return _run_check(
        f,
        degree,
        steps,
        bases,
        equal_steps=True,
        kind="semipoly",
        max_witnesses=max_witnesses,
        exhaustive=exhaustive,
        tol=tol,
    )


def estimate_degree(
    f: GroupFunction,
    max_degree: int,
    kind: str,
    steps: Sequence,
    bases: Sequence,
    *,
    tol: Optional[float] = None,
) -> Optional[int]:
    """Least degree <= max_degree passing the chosen check, else None."""
    if kind not in ("poly", "semipoly"):
        raise GroupError(f"kind must be 'poly' or 'semipoly', got {kind!r}")
    check = check_polynomial if kind == "poly" else check_semipolynomial
    for n in range(max_degree + 1):
        if check(f, n, steps, bases, max_witnesses=1, tol=tol).passed:
            return n
    return None


def verify_delta_identities(
    f: GroupFunction,
    pairs: Sequence[tuple],
    bases: Sequence,
    *,
    max_witnesses: int = DEFAULT_WITNESS_CAP,
    tol: Optional[float] = None,
) -> CheckReport:
    """Check the product and inverse expansion rules of the difference operator.

    For each pair (u, v) and base x this verifies pointwise

        f(x*(u*v)) - f(x)  ==  D_u f(x) + D_v f(x) + D_u D_v f(x)
        f(x*u^-1) - f(x)   ==  -D_u f(x) - D_{u^-1} D_u f(x)

    where D_u D_v means the u-difference applied to the v-difference.
    """
    group = f.group
    mul, inv = group.multiply, group.inverse
    witnesses = []
    threshold = _zero_threshold(f, tol)
    for u, v in pairs:
        group.validate(u)
        group.validate(v)
        uv = mul(u, v)
        u_inv = inv(u)
        for x in bases:
            fx = f(x)
            product_lhs = f(mul(x, uv)) - fx
            du = f(mul(x, u)) - fx
            dv = f(mul(x, v)) - fx
            dudv = f(mul(mul(x, u), v)) - f(mul(x, u)) - f(mul(x, v)) + fx
            product_gap = product_lhs - (du + dv + dudv)

            inverse_lhs = f(mul(x, u_inv)) - fx
            x_ui = mul(x, u_inv)
            dinv_du = f(mul(x_ui, u)) - f(x_ui) - (f(mul(x, u)) - fx)
            inverse_gap = inverse_lhs - (-du - dinv_du)

            for gap in (product_gap, inverse_gap):
                nonzero = gap != 0 if f.exact else abs(gap) > threshold
                if nonzero:
                    witnesses.append(Witness((u, v), x, gap))
            if len(witnesses) >= max_witnesses:
                break
        if len(witnesses) >= max_witnesses:
            break
    return CheckReport(
        passed=not witnesses,
        witnesses=witnesses[:max_witnesses],
        params={
            "kind": "delta-identities",
            "pair_count": len(pairs),
            "base_count": len(bases),
            "function": f.label,
            "group": group.name,
        },
    )
