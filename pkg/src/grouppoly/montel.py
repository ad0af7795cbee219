"""Generator-set sufficiency checks for the difference conditions.

The theme: verify a difference condition only on a generating set E and
compare with the condition on arbitrary steps.  For the mixed
(polynomial) condition this is sound whenever E generates the group, so
``montel_polynomial_check`` returns the two reports side by side and the
test suite asserts hypothesis-pass implies conclusion-pass.  For the
single-step (semipolynomial) condition the implication can fail; the
checks here cover the commutative bounded-order route, the finite-order
route, and the boundedness route.

All groups handled here are discrete, so "topologically generates"
simply means "generates"; conclusion surfaces are finite and recorded
in each report.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .functions import (
    CheckReport,
    GroupFunction,
    Witness,
    check_polynomial,
    check_semipolynomial,
    delta,
    format_scalar,
    iterated_delta,
)
from .groups import Group, GroupError, power

__all__ = [
    "MontelResult",
    "montel_polynomial_check",
    "degree_from_generator_orders",
    "finite_order_fixed_check",
    "bounded_montel_check",
]


@dataclass
class MontelResult:
    """Hypothesis (generator steps) and conclusion (general steps) reports."""

    hypothesis: CheckReport
    conclusion: CheckReport

    @property
    def implication_holds(self) -> bool:
        return (not self.hypothesis.passed) or self.conclusion.passed

    def to_dict(self, group: Optional[Group] = None) -> dict:
        return {
            "hypothesis": self.hypothesis.to_dict(group),
            "conclusion": self.conclusion.to_dict(group),
            "implication_holds": self.implication_holds,
        }


def _dedup(elements) -> list:
    seen = []
    known = set()
    for x in elements:
        if x not in known:
            known.add(x)
            seen.append(x)
    return seen


def montel_polynomial_check(
    f: GroupFunction,
    generators: Sequence,
    m: int,
    radius: int,
    bases: Sequence,
    seed: int,
    *,
    coeff_bound: int = 1,
    sample_count: int = 3,
) -> MontelResult:
    """Compare m-fold vanishing on generator steps vs. general steps.

    Hypothesis: every m-fold mixed difference with steps from
    ``generators`` vanishes on ``bases``.  Conclusion: ditto with steps
    from ball(radius, coeff_bound) together with ``sample_count`` seeded
    samples.  When the generators generate the group, a true hypothesis
    forces a true conclusion; the caller asserts that implication.
    """
    if m < 1:
        raise GroupError(f"order m must be >= 1, got {m}")
    if not generators:
        raise GroupError("generator set must be nonempty")
    hypothesis = check_polynomial(f, m - 1, list(generators), bases)
    conclusion_steps = _dedup(
        list(f.group.ball(radius, coeff_bound)) + f.group.sample(sample_count, seed)
    )
    conclusion = check_polynomial(f, m - 1, conclusion_steps, bases)
    hypothesis.params["surface"] = "generators"
    conclusion.params["surface"] = f"ball({radius},{coeff_bound}) + sample({sample_count},{seed})"
    return MontelResult(hypothesis, conclusion)


def degree_from_generator_orders(
    f: GroupFunction,
    generators: Sequence,
    orders: Sequence[int],
    bases: Sequence,
    *,
    step_word_length: int = 2,
) -> CheckReport:
    """Commutative bound: per-generator orders n(h) give degree sum(n) - 1.

    First verifies the per-generator hypothesis D_h^{n(h)} f = 0 on
    ``bases``; then checks the mixed polynomial condition at degree
    m - 1, m = sum of the orders, with steps drawn from products of at
    most ``step_word_length`` generators.  Non-commutative groups are
    rejected: the reduction reorders difference operators.
    """
    group = f.group
    if not group.is_commutative:
        raise GroupError("the summed-order degree bound needs a commutative group")
    if len(generators) != len(orders) or not generators:
        raise GroupError("generators and orders must be nonempty and aligned")
    if any(n < 1 for n in orders):
        raise GroupError("every order must be >= 1")

    for h, order in zip(generators, orders):
        hypothesis = check_semipolynomial(f, order - 1, [h], bases, max_witnesses=1)
        if not hypothesis.passed:
            witness = hypothesis.witnesses[0]
            return CheckReport(
                passed=False,
                witnesses=[witness],
                params={
                    "kind": "generator-order-bound",
                    "status": "per-generator hypothesis fails",
                    "generator": group.format_element(h),
                    "order": order,
                },
            )

    total = sum(orders)
    steps = list(generators)
    for _ in range(step_word_length - 1):
        steps = _dedup(steps + [group.multiply(x, h) for x in steps for h in generators])
    report = check_polynomial(f, total - 1, steps, bases)
    report.params.update(
        {
            "kind": "generator-order-bound",
            "orders": list(orders),
            "claimed_degree": total - 1,
            "step_word_length": step_word_length,
        }
    )
    return report


def finite_order_fixed_check(f: GroupFunction, max_degree: int) -> CheckReport:
    """On a finite cyclic group, a semipolynomial must be constant.

    If some k <= max_degree + 1 has D_h^k f = 0 for every h in the
    group, the function is asserted constant (witnesses otherwise);
    when no such k exists the report passes with status
    "not a semipolynomial".
    """
    group = f.group
    if not hasattr(group, "elements"):
        raise GroupError("finite-order check needs a finite group")
    elements = group.elements()
    steps = [h for h in elements if h != group.identity()]

    semipoly_order = None
    for k in range(1, max_degree + 2):
        if check_semipolynomial(f, k - 1, steps, elements, max_witnesses=1).passed:
            semipoly_order = k
            break

    if semipoly_order is None:
        return CheckReport(
            passed=True,
            witnesses=[],
            params={
                "kind": "finite-order-constancy",
                "status": "not a semipolynomial",
                "max_degree": max_degree,
            },
        )

    base_value = f(group.identity())
    witnesses = [
        Witness((), x, f(x) - base_value) for x in elements if f(x) != base_value
    ]
    return CheckReport(
        passed=not witnesses,
        witnesses=witnesses[:5],
        params={
            "kind": "finite-order-constancy",
            "status": f"semipolynomial of order {semipoly_order}",
            "max_degree": max_degree,
        },
    )


def bounded_montel_check(
    f: GroupFunction,
    generators: Sequence,
    orders: Sequence[int],
    bound_window: int,
    *,
    bases: Optional[Sequence] = None,
) -> CheckReport:
    """Boundedness evidence: generator-order hypotheses force constancy.

    After verifying D_h^{n(h)} f = 0 on the surface for each generator,
    walks the cyclic directions g, g*h, g*h^2, ..., g*h^K for h ranging
    over the generators and their pairwise products (K = bound_window).
    Any nonconstant value sequence is reported as "unbounded or
    nonconstant" evidence with its witness sequence; constancy of every
    sequence is consistent with (not a proof of) a constant bounded f.
    """
    group = f.group
    if len(generators) != len(orders) or not generators:
        raise GroupError("generators and orders must be nonempty and aligned")
    if bound_window < 1:
        raise GroupError(f"bound_window must be >= 1, got {bound_window}")
    bases = list(bases) if bases is not None else [group.identity()]

    for h, order in zip(generators, orders):
        hypothesis = check_semipolynomial(f, order - 1, [h], bases, max_witnesses=1)
        if not hypothesis.passed:
            return CheckReport(
                passed=False,
                witnesses=hypothesis.witnesses,
                params={
                    "kind": "bounded-constancy",
                    "status": "per-generator hypothesis fails",
                    "generator": group.format_element(h),
                },
            )

    directions = _dedup(
        list(generators)
        + [group.multiply(u, v) for u in generators for v in generators]
    )
    directions = [h for h in directions if h != group.identity()]
    witnesses = []
    sequences = {}
    for h in directions:
        for g in bases:
            values = [f(group.multiply(g, power(group, h, k))) for k in range(bound_window + 1)]
            key = f"{group.format_element(g)} | {group.format_element(h)}"
            sequences[key] = [format_scalar(v) for v in values]
            jumps = [b - a for a, b in zip(values, values[1:])]
            nonzero = next((j for j in jumps if j != 0), None)
            if nonzero is not None:
                witnesses.append(Witness((h,), g, nonzero))
    return CheckReport(
        passed=not witnesses,
        witnesses=witnesses[:5],
        params={
            "kind": "bounded-constancy",
            "status": "unbounded or nonconstant" if witnesses else "constant on all probes",
            "window": bound_window,
            "sequences": sequences,
        },
    )
