"""Command line front end.

Exit codes: 0 success or good, 10 checked and false, 2 input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import AlgebraElement, render
from .goodness import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    SAMPLED_ORACLE_LIMIT,
    classify,
    is_good,
    symmetric_unit_census,
)
from .groups import GroupError, OrderCapExceeded, group_from_json, group_to_json, make_family
from .presentation import (
    DEFAULT_MAX_COSETS,
    CosetLimitExceeded,
    PresentationError,
    group_from_presentation,
    load_presentation,
)
from .rings import GF, ring_from_flag
from .verify import run_verification, summary

EXIT_OK = 0
EXIT_FALSE = 10
EXIT_INPUT = 2
EXIT_CAP = 3


class InputError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text, 0)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _load_group(path: str):
    try:
        return group_from_json(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(str(exc)) from None


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def cmd_build(args) -> int:
    if args.presentation:
        P = load_presentation(args.presentation)
        G = group_from_presentation(P, args.max_cosets, label=Path(args.presentation).stem)
    else:
        G = make_family(args.family)
    data = group_to_json(G)
    if args.output:
        Path(args.output).write_text(data + "\n", encoding="utf-8")
        print(f"wrote {G.label or 'group'} of order {G.order} to {args.output}", file=sys.stderr)
    else:
        print(data)
    return EXIT_OK


def cmd_check(args) -> int:
    G = _load_group(args.group)
    ring = ring_from_flag(args.ring) if args.ring else GF(2)
    report = is_good(G, ring, jobs=args.jobs)
    payload = report.to_dict()
    if report.good:
        text = f"{G.label or args.group}: good over {ring.name}"
    else:
        a, b = report.witness
        text = (
            f"{G.label or args.group}: not good over {ring.name}\n"
            f"  witness: ({render(a.value)}) and ({render(b.value)}) do not commute"
        )
    _emit(args, payload, text)
    return EXIT_OK if report.good else EXIT_FALSE


def cmd_classify(args) -> int:
    G = _load_group(args.group)
    ring = ring_from_flag(args.ring) if args.ring else None
    report = classify(G, ring)
    _emit(args, report.to_dict(), json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.good else EXIT_FALSE


def cmd_verify(args) -> int:
    results = run_verification(
        max_order=args.max_order,
        families_only=args.families_only,
        samples=args.sample,
        seed=args.seed,
        jobs=args.jobs,
    )
    lines = [
        f"[{'PASS' if r.passed else 'FAIL'}] {r.name}" + (f" ({r.mode})" if r.mode != "exact" else "")
        + (f": {r.detail}" if r.detail and not r.passed else "")
        for r in results
    ]
    _emit(args, summary(results), "\n".join(lines))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FALSE


def cmd_units(args) -> int:
    G = _load_group(args.group)
    if G.order > SAMPLED_ORACLE_LIMIT:
        raise OrderCapExceeded(f"unit census is limited to order {SAMPLED_ORACLE_LIMIT}")
    census = symmetric_unit_census(G, args.sample, args.seed)
    c = census.closure
    payload = {
        "label": G.label,
        "order": G.order,
        "ring": "GF(2)",
        "symmetric_elements": census.symmetric_count,
        "symmetric_units": census.unit_count,
        "dimension": census.dimension,
        "S_size": census.s_size,
        "closed": c.closed,
        "mode": c.mode,
        "pairs_checked": c.pairs_checked,
    }
    if c.witness is not None:
        payload["witness"] = [
            render(AlgebraElement(G, GF(2), w)) for w in c.witness
        ]
    text = (
        f"{G.label}: {census.symmetric_count} symmetric elements (dimension {census.dimension} = |S|), "
        f"{census.unit_count} symmetric units, closure {'holds' if c.closed else 'fails'} ({c.mode})"
    )
    _emit(args, payload, text)
    return EXIT_OK if c.closed else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symunits", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ring=False, sample=False):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--jobs", type=_positive, default=1)
        if ring:
            p.add_argument("--ring", help="coefficient field: p (prime) or p^2, e.g. 2, 3, 4, 2^2")
        if sample:
            p.add_argument("--sample", type=_positive, default=DEFAULT_SAMPLES)
            p.add_argument("--seed", type=lambda s: int(s, 16), default=DEFAULT_SEED, help="hex seed")

    p = sub.add_parser("build", help="build a group and write it as JSON")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="family descriptor, e.g. q8, dihedral:6, c2m_c4:3")
    src.add_argument("--presentation", help="presentation file")
    p.add_argument("-o", "--output")
    p.add_argument("--max-cosets", type=_positive, default=DEFAULT_MAX_COSETS)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="decide goodness of a group file")
    p.add_argument("group")
    common(p, ring=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="full classification report")
    p.add_argument("group")
    common(p, ring=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the corpus assertions")
    p.add_argument("--max-order", type=_positive, default=64)
    p.add_argument("--families-only", action="store_true")
    common(p, sample=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("units", help="symmetric unit census over GF(2)")
    p.add_argument("group")
    common(p, sample=True)
    p.set_defaults(func=cmd_units)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OrderCapExceeded, CosetLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, GroupError, PresentationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
