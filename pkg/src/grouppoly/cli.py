"""Command-line front end and machine-readable reporting.

Subcommands: check, degree, montel, rep, orbit-rank, growth, matelem,
demo, selftest.  Every run writes a single JSON report (``--out -`` for
stdout, the default); identical arguments produce byte-identical
reports.  Exit codes: 0 = pass/success, 1 = a check failed and the
report carries witnesses, 2 = usage or configuration error.

Experiments can also be described by a JSON config file (``--config``)
with the shape::

    {
      "group": "heisenberg",
      "function": "heisenberg",
      "check": {"kind": "semipoly", "degree": 1, "radius": 2,
                "coeff_bound": 2, "seed": 1, "sample_bases": 0},
      "output": "-"
    }

``function`` is a builtin registry name, a classical coefficient table
{"coeffs": {"2,1": "1"}}, or a finite value table
{"table": {"(1,0)": "3"}, "default": "0"}.  Unknown keys anywhere in
the config are hard errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import constructions, montel, quasipoly, reps
from .functions import (
    CheckReport,
    GroupFunction,
    check_polynomial,
    check_semipolynomial,
    estimate_degree,
    format_scalar,
    parse_scalar,
    polynomial_function,
    table_function,
)
from .groups import Group, GroupError, group_from_name
from .reps import MatrixRep, RepresentationError

__all__ = ["main", "run", "ExperimentConfig"]

CHECK_KEYS = {"kind", "degree", "radius", "coeff_bound", "seed", "sample_bases"}
CONFIG_KEYS = {"group", "function", "check", "output"}


class ConfigError(ValueError):
    """Unusable experiment configuration."""


@dataclass(frozen=True)
class ExperimentConfig:
    group: str
    function: object
    kind: str = "semipoly"
    degree: int = 1
    radius: int = 2
    coeff_bound: int = 1
    seed: int = 1
    sample_bases: int = 0
    output: str = "-"

    @staticmethod
    def from_dict(data: dict) -> "ExperimentConfig":
        unknown = set(data) - CONFIG_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if "group" not in data or "function" not in data:
            raise ConfigError("config needs 'group' and 'function'")
        check = data.get("check", {})
        bad = set(check) - CHECK_KEYS
        if bad:
            raise ConfigError(f"unknown check keys: {sorted(bad)}")
        if isinstance(data["function"], dict):
            extra = set(data["function"]) - {"coeffs", "table", "default"}
            if extra:
                raise ConfigError(f"unknown function keys: {sorted(extra)}")
        try:
            return ExperimentConfig(
                group=str(data["group"]),
                function=data["function"],
                kind=str(check.get("kind", "semipoly")),
                degree=int(check.get("degree", 1)),
                radius=int(check.get("radius", 2)),
                coeff_bound=int(check.get("coeff_bound", 1)),
                seed=int(check.get("seed", 1)),
                sample_bases=int(check.get("sample_bases", 0)),
                output=str(data.get("output", "-")),
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad config value: {exc}") from exc

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "function": self.function,
            "check": {
                "kind": self.kind,
                "degree": self.degree,
                "radius": self.radius,
                "coeff_bound": self.coeff_bound,
                "seed": self.seed,
                "sample_bases": self.sample_bases,
            },
            "output": self.output,
        }


def _parse_monomial_key(text: str) -> tuple:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    return tuple(int(p) for p in body.split(",") if p.strip() != "")


def resolve_function(group: Optional[Group], spec) -> tuple[Group, GroupFunction]:
    """Resolve a function spec; returns (group, function).

    Builtin names fix their own group; coefficient and value tables
    need the group from the config.
    """
    if isinstance(spec, str):
        f = constructions.builtin_function(spec)
        if group is not None and group != f.group:
            raise ConfigError(
                f"builtin {spec!r} lives on group {f.group.name!r}, not {group.name!r}"
            )
        return f.group, f
    if not isinstance(spec, dict):
        raise ConfigError(f"bad function spec {spec!r}")
    if group is None:
        raise ConfigError("table and coefficient functions need an explicit group")
    if "coeffs" in spec:
        coeffs = {
            _parse_monomial_key(key): parse_scalar(str(value))
            for key, value in spec["coeffs"].items()
        }
        return group, polynomial_function(group, coeffs, label="coeff-table")
    if "table" in spec:
        table = {
            group.parse(key): parse_scalar(str(value)) for key, value in spec["table"].items()
        }
        default = parse_scalar(str(spec.get("default", "0")))
        return group, table_function(group, table, default, label="value-table")
    raise ConfigError(f"function spec needs 'coeffs' or 'table': {spec!r}")


def _parse_elements(group: Group, text: str) -> list:
    items = [part.strip() for part in text.split(";") if part.strip()]
    if not items:
        raise ConfigError(f"empty element list {text!r}")
    return [group.parse(item) for item in items]


def _surfaces(group: Group, radius: int, coeff_bound: int, seed: int, sample_extra: int):
    steps = group.ball(radius, coeff_bound)
    bases = list(steps)
    if sample_extra:
        seen = set(bases)
        for x in group.sample(sample_extra, seed):
            if x not in seen:
                seen.add(x)
                bases.append(x)
    return steps, bases


def _write_report(document: dict, out: str) -> None:
    text = json.dumps(document, sort_keys=True, indent=2) + "\n"
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _report(module: str, command: str, payload: dict) -> dict:
    document = {"module": module, "command": command}
    document.update(payload)
    return document


def _cmd_check(args) -> int:
    if args.config:
        with open(args.config, "r", encoding="utf-8") as handle:
            config = ExperimentConfig.from_dict(json.load(handle))
    else:
        if not args.function:
            raise ConfigError("check needs --function or --config")
        config = ExperimentConfig(
            group=args.group or "",
            function=args.function,
            kind=args.kind,
            degree=args.degree,
            radius=args.radius,
            coeff_bound=args.coeff_bound,
            seed=args.seed,
            sample_bases=args.sample_bases,
            output=args.out,
        )
    group = group_from_name(config.group) if config.group else None
    group, f = resolve_function(group, config.function)
    if not group.is_exact:
        raise ConfigError("ball-based checks need an exact group; use the demo command")
    steps, bases = _surfaces(group, config.radius, config.coeff_bound, config.seed, config.sample_bases)
    check = check_polynomial if config.kind == "poly" else check_semipolynomial
    if config.kind not in ("poly", "semipoly"):
        raise ConfigError(f"check kind must be poly or semipoly, got {config.kind!r}")
    report = check(f, config.degree, steps, bases)
    document = _report(
        "func-calc",
        "check",
        {
            "config": config.to_dict(),
            **report.to_dict(group),
        },
    )
    _write_report(document, config.output if args.config else args.out)
    return 0 if report.passed else 1


def _cmd_degree(args) -> int:
    group = group_from_name(args.group) if args.group else None
    group, f = resolve_function(group, args.function)
    steps, bases = _surfaces(group, args.radius, args.coeff_bound, args.seed, args.sample_bases)
    kinds = ("poly", "semipoly") if args.kind == "both" else (args.kind,)
    estimates = {
        kind: estimate_degree(f, args.max_degree, kind, steps, bases) for kind in kinds
    }
    document = _report(
        "func-calc",
        "degree",
        {
            "group": group.name,
            "function": f.label,
            "max_degree": args.max_degree,
            "estimates": estimates,
            "params": {"radius": args.radius, "coeff_bound": args.coeff_bound, "seed": args.seed},
        },
    )
    _write_report(document, args.out)
    return 0


def _cmd_montel(args) -> int:
    group = group_from_name(args.group) if args.group else None
    group, f = resolve_function(group, args.function)
    generators = _parse_elements(group, args.generators)
    bases = group.ball(args.bases_radius, args.coeff_bound)
    if args.orders:
        orders = [int(part) for part in args.orders.split(",")]
        report = montel.degree_from_generator_orders(f, generators, orders, bases)
        document = _report(
            "montel",
            "montel",
            {"group": group.name, "function": f.label, **report.to_dict(group)},
        )
        _write_report(document, args.out)
        return 0 if report.passed else 1
    if args.m is None:
        raise ConfigError("montel needs --m (difference order) or --orders")
    result = montel.montel_polynomial_check(
        f,
        generators,
        args.m,
        args.radius,
        bases,
        args.seed,
        coeff_bound=args.coeff_bound,
        sample_count=args.sample_steps,
    )
    document = _report(
        "montel",
        "montel",
        {
            "group": group.name,
            "function": f.label,
            "order": args.m,
            **result.to_dict(group),
        },
    )
    _write_report(document, args.out)
    return 0 if result.implication_holds else 1


def _cmd_rep(args) -> int:
    rep = MatrixRep.from_json_file(args.rep_file)
    fixed = reps.fixed_subspace(rep)
    verdict = reps.verify_sp_equals_p(rep, args.max_word_length)
    degree = args.degree if args.degree is not None else rep.dim
    sp_space, used = reps.sp_subspace(rep, degree, args.max_word_length)
    p_space = reps.p_subspace(rep, degree)
    classification = reps.classify_nilpotency(rep, degree, args.max_word_length)
    document = _report(
        "rep-analysis",
        "rep",
        {
            "dim": rep.dim,
            "generators": list(rep.labels),
            "degree": degree,
            "fixed_basis": fixed.to_lists(),
            "sp_basis": sp_space.to_lists(),
            "sp_word_length": used,
            "p_basis": p_space.to_lists(),
            "classification": {
                "product_nilpotent": classification.product_nilpotent,
                "power_nilpotent": classification.power_nilpotent,
                "unipotent": classification.unipotent,
            },
            **verdict.to_dict(None),
        },
    )
    _write_report(document, args.out)
    return 0 if verdict.passed else 1


def _cmd_orbit_rank(args) -> int:
    group = group_from_name(args.group) if args.group else None
    group, f = resolve_function(group, args.function)
    shifts = _parse_elements(group, args.shifts)
    if args.bases:
        bases = _parse_elements(group, args.bases)
    else:
        bases = group.ball(args.bases_radius, args.coeff_bound)
    value = quasipoly.orbit_rank(f, shifts, bases)
    document = _report(
        "quasipoly",
        "orbit-rank",
        {
            "group": group.name,
            "function": f.label,
            "rank": value,
            "note": f"rank >= {value} on this window; finite windows only bound the shift span",
            "params": {"shift_count": len(shifts), "base_count": len(bases)},
        },
    )
    _write_report(document, args.out)
    return 0


def _cmd_growth(args) -> int:
    group = group_from_name(args.group) if args.group else None
    group, f = resolve_function(group, args.function)
    step = group.parse(args.step)
    probe = quasipoly.growth_probe(f, step, args.window)
    document = _report(
        "quasipoly",
        "growth",
        {
            "group": group.name,
            "function": f.label,
            "step": group.format_element(step),
            "values": [format_scalar(v) for v in probe["values"]],
            "min_poly_degree": probe["min_poly_degree"],
        },
    )
    _write_report(document, args.out)
    return 0


def _cmd_matelem(args) -> int:
    rep = MatrixRep.from_json_file(args.rep_file)
    x = [Fraction(part) for part in args.x.split(",")]
    zeta = [Fraction(part) for part in args.zeta.split(",")]
    f = quasipoly.matrix_element(rep, x, zeta)
    words = f.group.ball(args.word_length)
    steps = f.group.ball(1)
    report = check_polynomial(f, args.degree, steps, words)
    document = _report(
        "quasipoly",
        "matelem",
        {
            "dim": rep.dim,
            "degree": args.degree,
            "word_length": args.word_length,
            **report.to_dict(f.group),
        },
    )
    _write_report(document, args.out)
    return 0 if report.passed else 1


def _cmd_demo(args) -> int:
    payload = _run_demo(args.name, args.seed)
    document = _report("constructions", "demo", payload)
    _write_report(document, args.out)
    return 0


def _run_demo(name: str, seed: int) -> dict:
    if name == "heisenberg":
        f = constructions.heisenberg_function()
        group = f.group
        steps = group.ball(1, 1)
        bases = group.ball(2, 1)
        return {
            "name": name,
            "semipoly_degree_1": check_semipolynomial(f, 1, bases, bases).verdict,
            "poly_degree_2": check_polynomial(f, 2, steps, bases).verdict,
            "poly_degree_1": check_polynomial(f, 1, bases, bases, max_witnesses=1).verdict,
        }
    if name == "freeproduct":
        f = constructions.freeproduct_counterexample()
        group = f.group
        ball = group.ball(6, 2)
        a, b = group.parse("a"), group.parse("b")
        ab = group.multiply(a, b)
        probe = quasipoly.growth_probe(f, ab, 8)
        return {
            "name": name,
            "square_diff_a": check_semipolynomial(f, 1, [a], ball).verdict,
            "square_diff_b": check_semipolynomial(f, 1, [b], ball).verdict,
            "growth_values": [format_scalar(v) for v in probe["values"]],
            "min_poly_degree": probe["min_poly_degree"],
        }
    if name == "infgen":
        f = constructions.infgen_counterexample()
        group = f.group
        bases = group.sample(10, seed)
        checks = {}
        for i in range(1, 6):
            h = group.basis_vector(i)
            checks[f"e{i}"] = check_semipolynomial(f, 1, [h], bases).verdict
        return {"name": name, "square_diffs": checks}
    if name == "gl":
        f = constructions.gl_polynomial_demo(2, [0.0, 0.0, 0.0, 1.0])
        group = f.group
        mats = group.sample(16, seed)
        steps, bases = mats[:8], mats[8:]
        return {
            "name": name,
            "poly_degree_3": check_polynomial(f, 3, steps, bases, tol=1e-6).verdict,
            "poly_degree_2": check_polynomial(f, 2, steps, bases, tol=1e-6, max_witnesses=1).verdict,
        }
    if name == "triangular":
        f = constructions.triangular_polynomial_demo(2, {(1, 1): 1.0})
        mats = constructions.triangular_sample(2, 16, seed)
        steps, bases = mats[:8], mats[8:]
        return {
            "name": name,
            "poly_degree_2": check_polynomial(f, 2, steps, bases, tol=1e-6).verdict,
            "poly_degree_1": check_polynomial(f, 1, steps, bases, tol=1e-6, max_witnesses=1).verdict,
        }
    raise ConfigError(f"unknown demo {name!r}")


def _cmd_selftest(args) -> int:
    from .groups import FreeProdZZ2, HeisenbergRational, IntVector

    failures = []

    def expect(condition: bool, label: str) -> None:
        (failures.append(label) if not condition else None)

    # group axioms on small balls
    for group in (IntVector(2), HeisenbergRational(), FreeProdZZ2()):
        ball = group.ball(2, 1)
        e = group.identity()
        expect(e in ball, f"{group.name}: ball contains identity")
        expect(
            all(group.inverse(x) in ball for x in ball), f"{group.name}: ball inverse-closed"
        )
        triples = ball[:6]
        expect(
            all(
                group.multiply(group.multiply(x, y), z) == group.multiply(x, group.multiply(y, z))
                for x in triples for y in triples for z in triples
            ),
            f"{group.name}: associativity",
        )

    # Heisenberg degrees
    f = constructions.heisenberg_function()
    ball = f.group.ball(2, 1)
    expect(check_semipolynomial(f, 1, ball, ball).passed, "heisenberg semipoly degree 1")
    expect(not check_polynomial(f, 1, ball, ball, max_witnesses=1).passed, "heisenberg poly degree 1 fails")

    # free product square differences
    g = constructions.freeproduct_counterexample()
    fp_ball = g.group.ball(5, 2)
    a, b = g.group.parse("a"), g.group.parse("b")
    expect(check_semipolynomial(g, 1, [a, b], fp_ball).passed, "freeproduct square diffs")

    # representation suite
    s3 = MatrixRep(2, (("r", ((0, -1), (1, -1))), ("s", ((0, 1), (1, 0)))))
    expect(reps.verify_sp_equals_p(s3).passed, "S3 sp == p")

    document = _report(
        "cli",
        "selftest",
        {
            "verdict": "pass" if not failures else "fail",
            "failures": failures,
            "checks_run": 9,
        },
    )
    _write_report(document, args.out)
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grouppoly",
        description="Difference-operator calculus on non-commutative groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", default="-", help="report path, '-' for stdout")

    def add_surface(p):
        p.add_argument("--radius", type=int, default=2)
        p.add_argument("--coeff-bound", type=int, default=1, dest="coeff_bound")
        p.add_argument("--seed", type=int, default=1)
        p.add_argument("--sample-bases", type=int, default=0, dest="sample_bases")

    def add_function(p):
        p.add_argument("--group", help="group descriptor, e.g. int:2, heisenberg, cyclic:5")
        p.add_argument("--function", help="builtin function name")

    p_check = sub.add_parser("check", help="run a polynomial/semipolynomial check")
    add_function(p_check)
    p_check.add_argument("--kind", choices=("poly", "semipoly"), default="semipoly")
    p_check.add_argument("--degree", type=int, default=1)
    add_surface(p_check)
    p_check.add_argument("--config", help="JSON experiment config file")
    add_common(p_check)

    p_degree = sub.add_parser("degree", help="estimate the least passing degree")
    add_function(p_degree)
    p_degree.add_argument("--kind", choices=("poly", "semipoly", "both"), default="both")
    p_degree.add_argument("--max-degree", type=int, default=5, dest="max_degree")
    add_surface(p_degree)
    add_common(p_degree)

    p_montel = sub.add_parser("montel", help="generator-set polynomial check")
    add_function(p_montel)
    p_montel.add_argument("--generators", required=True, help="semicolon-separated elements")
    p_montel.add_argument("--m", type=int, default=None, help="difference order")
    p_montel.add_argument(
        "--orders",
        default=None,
        help="comma-separated per-generator orders; runs the commutative bound check",
    )
    p_montel.add_argument("--bases-radius", type=int, default=2, dest="bases_radius")
    p_montel.add_argument("--sample-steps", type=int, default=3, dest="sample_steps")
    add_surface(p_montel)
    add_common(p_montel)

    p_rep = sub.add_parser("rep", help="invariant subspaces of a matrix representation")
    p_rep.add_argument("--rep-file", required=True, dest="rep_file")
    p_rep.add_argument("--degree", type=int, default=None)
    p_rep.add_argument("--max-word-length", type=int, default=4, dest="max_word_length")
    add_common(p_rep)

    p_rank = sub.add_parser("orbit-rank", help="rank of the shift evaluation matrix")
    add_function(p_rank)
    p_rank.add_argument("--shifts", required=True, help="semicolon-separated elements")
    p_rank.add_argument("--bases", help="semicolon-separated elements")
    p_rank.add_argument("--bases-radius", type=int, default=3, dest="bases_radius")
    p_rank.add_argument("--coeff-bound", type=int, default=1, dest="coeff_bound")
    add_common(p_rank)

    p_growth = sub.add_parser("growth", help="values along powers of one step")
    add_function(p_growth)
    p_growth.add_argument("--step", required=True)
    p_growth.add_argument("--window", type=int, default=8)
    add_common(p_growth)

    p_mat = sub.add_parser("matelem", help="polynomial check for a matrix element")
    p_mat.add_argument("--rep-file", required=True, dest="rep_file")
    p_mat.add_argument("--x", required=True, help="comma-separated rational vector")
    p_mat.add_argument("--zeta", required=True, help="comma-separated rational covector")
    p_mat.add_argument("--degree", type=int, default=2)
    p_mat.add_argument("--word-length", type=int, default=4, dest="word_length")
    add_common(p_mat)

    p_demo = sub.add_parser("demo", help="run a named construction showcase")
    p_demo.add_argument(
        "--name",
        required=True,
        choices=("heisenberg", "freeproduct", "infgen", "gl", "triangular"),
    )
    p_demo.add_argument("--seed", type=int, default=7)
    add_common(p_demo)

    p_self = sub.add_parser("selftest", help="fast invariant suite")
    add_common(p_self)

    return parser


_HANDLERS = {
    "check": _cmd_check,
    "degree": _cmd_degree,
    "montel": _cmd_montel,
    "rep": _cmd_rep,
    "orbit-rank": _cmd_orbit_rank,
    "growth": _cmd_growth,
    "matelem": _cmd_matelem,
    "demo": _cmd_demo,
    "selftest": _cmd_selftest,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _HANDLERS[args.command](args)
    except (ConfigError, GroupError, RepresentationError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
