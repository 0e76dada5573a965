"""Command-line front end.

Verbs:
    compute   degrees for one expressed group, or a JSON batch
    verify    closed-form formulas against brute-force enumeration
    scan      threshold / counterexample hunts over a list of groups
    lattice   dump the full subgroup lattice of one group
    sections  list every section H/N of one group with its degree

Exit codes: 0 success (verify: all rows match), 1 verification mismatch,
2 usage or expression error, 3 guardrail exceeded. Output is
byte-identical across repeated runs; wall-clock timing is only included
when asked for (--timing), so default reports stay deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import NamedTuple, Sequence

from .degrees import cdeg, csd, csd_star, d, is_iwasawa, ndeg, sd
from .errors import GuardrailExceeded
from .expr import ExprError, ParseError, evaluate, parse
from .formulas import (
    csd_E_p3,
    csd_dihedral,
    csd_lower_bound_Zn_Q8,
    csd_P_group,
    csd_quaternion,
    csd_semidihedral,
)
from .groups import (
    FiniteGroup,
    cyclic,
    dihedral,
    direct_product,
    generalized_quaternion,
    heisenberg_E,
    p_group_P,
    quasidihedral,
    quotient,
    subgroup_as_group,
)
from .intmath import is_prime, primes_in
from .lattice import cyclic_subgroups, normal_subgroups, subgroup_lattice
from .reports import FORMATS, RunReport, degree_str, emit, emit_rows

DEGREE_OPS = ("csd", "d", "sd", "ndeg", "cdeg", "lattice", "csd_star", "is_iwasawa")
BASE_OPS = frozenset(("csd", "d"))
ALL_OPS = frozenset(DEGREE_OPS)

VERIFY_FAMILIES = ("dihedral", "quaternion", "semidihedral", "pgroup", "ep3", "zq8bound")
SCAN_MODES = ("csd-eq-sd", "monotonicity", "csd-star")

IWASAWA_THRESHOLD = Fraction(41, 49)
NILPOTENT_THRESHOLD = Fraction(19, 25)


class Caps(NamedTuple):
    """Guardrail ceilings; None means the library default applies."""

    order: int | None
    lattice: int | None
    sections: int | None


def _resolve_caps(args: argparse.Namespace) -> Caps:
    order = args.max_order
    if order is None:
        env = os.environ.get("CSDLAB_MAX_ORDER")
        if env is not None:
            order = int(env)
    return Caps(order, args.max_lattice_order, args.max_sections_order)


def _evaluate(text: str, caps: Caps) -> FiniteGroup:
    return evaluate(parse(text), max_order=caps.order)


# ---------------------------------------------------------------------------
# compute


def _compute_report(task: tuple[str, frozenset, Caps, bool, int]) -> RunReport:
    text, ops, caps, timing, jobs = task
    start = time.perf_counter()
    group = _evaluate(text, caps)
    poset = cyclic_subgroups(group, max_order=group.order)
    report = RunReport(
        group=text,
        order=group.order,
        l1=len(poset),
        csd=csd(group, jobs=jobs if jobs > 1 else None, max_order=group.order),
        d=d(group),
    )
    if "lattice" in ops:
        report.lattice = len(subgroup_lattice(group, max_order=caps.lattice))
    if "sd" in ops:
        report.sd = sd(group, max_order=caps.lattice)
    if "ndeg" in ops:
        report.ndeg = ndeg(group, max_order=caps.lattice)
    if "cdeg" in ops:
        report.cdeg = cdeg(group, max_order=caps.lattice)
    if "csd_star" in ops:
        report.csd_star = csd_star(group, max_order=caps.sections)
    if "is_iwasawa" in ops:
        report.is_iwasawa = is_iwasawa(group, max_order=caps.lattice)
    if timing:
        report.wall_ms = (time.perf_counter() - start) * 1000.0
    return report


def _batch_tasks(args: argparse.Namespace, caps: Caps) -> list[tuple]:
    if args.batch == "-":
        raw = sys.stdin.read()
    else:
        with open(args.batch, "r", encoding="utf-8") as handle:
            raw = handle.read()
    try:
        entries = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"batch input is not valid JSON: {exc}") from exc
    if not isinstance(entries, list):
        raise ValueError("batch input must be a JSON array")
    tasks = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or not isinstance(entry.get("group"), str):
            raise ValueError(f'batch entry {i} must be an object with a "group" string')
        ops = set(BASE_OPS)
        listed = entry.get("ops", [])
        if not isinstance(listed, list):
            raise ValueError(f"batch entry {i}: ops must be a list")
        for op in listed:
            if op == "all":
                ops |= ALL_OPS
            elif op in DEGREE_OPS:
                ops.add(op)
            else:
                raise ValueError(f"batch entry {i}: unknown op {op!r}")
        tasks.append((entry["group"], frozenset(ops), caps, args.timing, 1))
    return tasks


def cmd_compute(args: argparse.Namespace) -> int:
    caps = _resolve_caps(args)
    if args.batch is not None:
        tasks = _batch_tasks(args, caps)
        if args.jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_compute_report, tasks))
        else:
            reports = [_compute_report(t) for t in tasks]
    else:
        ops = set(BASE_OPS)
        if args.all:
            ops |= ALL_OPS
        if args.sections:
            ops.add("csd_star")
        task = (args.group, frozenset(ops), caps, args.timing, args.jobs)
        reports = [_compute_report(task)]
    sys.stdout.buffer.write(emit(reports, args.format, args.decimal))
    return 0


# ---------------------------------------------------------------------------
# verify


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise ValueError(f"range must look like 2..40, got {text!r}")
    a, b = int(lo), int(hi)
    if a > b:
        raise ValueError(f"empty range {text!r}")
    return range(a, b + 1)


def _verify_rows(family: str, span: range, caps: Caps) -> list[dict[str, object]]:
    rows = []
    for value in span:
        for params, formula, build in _verify_cases(family, value, caps):
            row: dict[str, object] = {"params": params, "formula": formula, "brute": None}
            try:
                group = build()
                brute = csd(group, max_order=group.order)
            except GuardrailExceeded:
                row["match"] = "skipped"
                rows.append(row)
                continue
            row["brute"] = brute
            if family == "zq8bound":
                row["match"] = "yes" if brute >= formula else "no"
            else:
                row["match"] = "yes" if brute == formula else "no"
            rows.append(row)
    return rows


def _verify_cases(family: str, value: int, caps: Caps):
    """Yield (params label, formula value, group builder) for one sweep point."""
    cap = caps.order
    if family == "dihedral":
        if value >= 1:
            yield (f"m={value}", csd_dihedral(value), lambda: dihedral(value, max_order=cap))
    elif family == "quaternion":
        if value >= 3:
            yield (
                f"n={value}",
                csd_quaternion(value),
                lambda: generalized_quaternion(value, max_order=cap),
            )
    elif family == "semidihedral":
        if value >= 4:
            yield (
                f"n={value}",
                csd_semidihedral(value),
                lambda: quasidihedral(value, max_order=cap),
            )
    elif family == "pgroup":
        if value >= 2:
            limit = cap if cap is not None else 512
            for p in primes_in(3, limit):
                if p ** (value - 1) > limit:
                    continue
                for q in primes_in(2, p - 1):
                    if (p - 1) % q or p ** (value - 1) * q > limit:
                        continue
                    yield (
                        f"n={value},p={p},q={q}",
                        csd_P_group(value, p),
                        lambda n=value, pp=p, qq=q: p_group_P(n, pp, qq, max_order=cap),
                    )
    elif family == "ep3":
        if value > 2 and is_prime(value):
            yield (f"p={value}", csd_E_p3(value), lambda: heisenberg_E(value, max_order=cap))
    elif family == "zq8bound":
        if value >= 2:
            yield (
                f"n={value}",
                csd_lower_bound_Zn_Q8(value),
                lambda: direct_product(
                    cyclic(2**value, max_order=cap),
                    generalized_quaternion(3),
                    max_order=cap,
                ),
            )
    else:
        raise ValueError(f"unknown verify family {family!r}")


def cmd_verify(args: argparse.Namespace) -> int:
    caps = _resolve_caps(args)
    span = _parse_range(args.range)
    rows = _verify_rows(args.family, span, caps)
    shaped = [
        {
            "params": row["params"],
            "formula": degree_str(row["formula"], args.decimal),
            "brute": degree_str(row["brute"], args.decimal),
            "match": row["match"],
        }
        for row in rows
    ]
    fields = ("params", "formula", "brute", "match")
    sys.stdout.buffer.write(emit_rows(fields, shaped, args.format))
    failed = any(row["match"] == "no" for row in rows)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# scan


def _scan_eq_task(task: tuple[str, Caps]) -> list[dict[str, object]]:
    text, caps = task
    try:
        group = _evaluate(text, caps)
        csd_v = csd(group, max_order=group.order)
        sd_v = sd(group, max_order=caps.lattice)
    except GuardrailExceeded:
        return [{"group": text, "csd": None, "sd": None, "status": "skipped"}]
    if csd_v == sd_v != 1:
        return [{"group": text, "csd": csd_v, "sd": sd_v, "status": "match"}]
    return []


def _scan_monotonicity_task(task: tuple[str, Caps]) -> list[dict[str, object]]:
    text, caps = task
    out: list[dict[str, object]] = []
    try:
        group = _evaluate(text, caps)
        lat = subgroup_lattice(group, max_order=caps.lattice)
        values = []
        for sub in lat.subgroups:
            sub_group = subgroup_as_group(sub)
            values.append(csd(sub_group, max_order=sub_group.order))
        for j, outer in enumerate(lat.subgroups):
            for i, inner in enumerate(lat.subgroups[:j]):
                if inner.members & outer.members != inner.members:
                    continue
                if values[i] < values[j]:
                    out.append(
                        {
                            "group": text,
                            "h_index": i,
                            "h_order": inner.size,
                            "k_index": j,
                            "k_order": outer.size,
                            "csd_h": values[i],
                            "csd_k": values[j],
                            "status": "pair",
                        }
                    )
    except GuardrailExceeded:
        return [
            {
                "group": text,
                "h_index": None,
                "h_order": None,
                "k_index": None,
                "k_order": None,
                "csd_h": None,
                "csd_k": None,
                "status": "skipped",
            }
        ]
    return out


def _scan_star_task(task: tuple[str, Caps]) -> list[dict[str, object]]:
    text, caps = task
    try:
        group = _evaluate(text, caps)
        value = csd_star(group, max_order=caps.sections)
    except GuardrailExceeded:
        return [
            {"group": text, "csd_star": None, "classification": "skipped", "eq_41_49": None}
        ]
    if value > IWASAWA_THRESHOLD:
        label = "iwasawa-certified"
    elif value > NILPOTENT_THRESHOLD:
        label = "nilpotent-certified"
    else:
        label = "uncertified"
    return [
        {
            "group": text,
            "csd_star": value,
            "classification": label,
            "eq_41_49": "yes" if value == IWASAWA_THRESHOLD else "no",
        }
    ]


_SCAN_TASKS = {
    "csd-eq-sd": (_scan_eq_task, ("group", "csd", "sd", "status")),
    "monotonicity": (
        _scan_monotonicity_task,
        ("group", "h_index", "h_order", "k_index", "k_order", "csd_h", "csd_k", "status"),
    ),
    "csd-star": (_scan_star_task, ("group", "csd_star", "classification", "eq_41_49")),
}

_SCAN_DEGREE_FIELDS = ("csd", "sd", "csd_h", "csd_k", "csd_star")


def cmd_scan(args: argparse.Namespace) -> int:
    caps = _resolve_caps(args)
    worker, fields = _SCAN_TASKS[args.mode]
    tasks = [(text, caps) for text in args.groups]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(worker, tasks))
    else:
        chunks = [worker(t) for t in tasks]
    rows = [row for chunk in chunks for row in chunk]
    for row in rows:
        for name in _SCAN_DEGREE_FIELDS:
            if name in row:
                row[name] = degree_str(row[name], args.decimal)
    sys.stdout.buffer.write(emit_rows(fields, rows, args.format))
    return 0


# ---------------------------------------------------------------------------
# lattice and sections


def cmd_lattice(args: argparse.Namespace) -> int:
    caps = _resolve_caps(args)
    group = _evaluate(args.group, caps)
    lat = subgroup_lattice(group, max_order=caps.lattice)
    lines = [
        f"size={sub.size} members={','.join(map(str, sub.elems))}"
        for sub in lat.subgroups
    ]
    sys.stdout.buffer.write(("\n".join(lines) + "\n").encode())
    return 0


def cmd_sections(args: argparse.Namespace) -> int:
    caps = _resolve_caps(args)
    group = _evaluate(args.group, caps)
    cap = caps.sections if caps.sections is not None else 128
    if group.order > cap:
        raise GuardrailExceeded(f"order {group.order} exceeds sections max order {cap}")
    rows = []
    lat = subgroup_lattice(group, max_order=group.order)
    for sub in lat.subgroups:
        sub_group = subgroup_as_group(sub)
        for normal in normal_subgroups(sub_group, max_order=sub_group.order):
            section = quotient(sub_group, normal)
            rows.append(
                {
                    "h_order": sub.size,
                    "n_order": normal.size,
                    "order": section.order,
                    "csd": degree_str(
                        csd(section, max_order=section.order), args.decimal
                    ),
                }
            )
    fields = ("h_order", "n_order", "order", "csd")
    sys.stdout.buffer.write(emit_rows(fields, rows, args.format))
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--decimal", action="store_true", help="render degrees as 6-significant-digit decimals")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for per-group computations")
    common.add_argument("--max-order", type=int, default=None, help="group order guardrail (default 512; env CSDLAB_MAX_ORDER)")
    common.add_argument("--max-lattice-order", type=int, default=None, help="full-lattice guardrail (default 256)")
    common.add_argument("--max-sections-order", type=int, default=None, help="sections guardrail (default 128)")

    parser = argparse.ArgumentParser(prog="csdlab", description="Cyclic subgroup commutativity degree laboratory")
    verbs = parser.add_subparsers(dest="verb", required=True)

    p_compute = verbs.add_parser("compute", parents=[common], help="compute degrees for a group expression")
    p_compute.add_argument("--group", help="group expression, e.g. 'D(8)' or 'Z(4)xQ(8)'")
    p_compute.add_argument("--batch", help="JSON file of {group, ops} entries, or - for stdin")
    mode = p_compute.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true", help="compute every degree, including lattice-based ones")
    mode.add_argument("--csd-only", action="store_true", help="only the cyclic-lattice degrees (the default)")
    p_compute.add_argument("--sections", action="store_true", help="add csd* over all sections")
    p_compute.add_argument("--timing", action="store_true", help="include wall-clock milliseconds (non-deterministic)")
    p_compute.set_defaults(func=cmd_compute)

    p_verify = verbs.add_parser("verify", parents=[common], help="check closed forms against enumeration")
    p_verify.add_argument("family", choices=VERIFY_FAMILIES)
    p_verify.add_argument("range", help="inclusive parameter range, e.g. 2..40")
    p_verify.set_defaults(func=cmd_verify)

    p_scan = verbs.add_parser("scan", parents=[common], help="hunt thresholds and counterexamples over groups")
    p_scan.add_argument("mode", choices=SCAN_MODES)
    p_scan.add_argument("groups", nargs="+", help="group expressions")
    p_scan.set_defaults(func=cmd_scan)

    p_lattice = verbs.add_parser("lattice", parents=[common], help="dump the subgroup lattice")
    p_lattice.add_argument("--group", required=True)
    p_lattice.set_defaults(func=cmd_lattice)

    p_sections = verbs.add_parser("sections", parents=[common], help="list every section H/N with its degree")
    p_sections.add_argument("--group", required=True)
    p_sections.set_defaults(func=cmd_sections)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.verb == "compute" and (args.group is None) == (args.batch is None):
            raise ValueError("compute needs exactly one of --group or --batch")
        return args.func(args)
    except GuardrailExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ExprError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
