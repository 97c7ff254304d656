"""Command line entry point.

Exit codes: 0 success, 2 parse error, 3 unsupported singularity,
4 consistency failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from .autlie import complete_square, forced_involution, involution_check, stabilizer_dim
from .core import random_member
from .report import (
    COEFF_BOUND,
    DEFAULT_SEEDS,
    PRESETS,
    analyze,
    intersection_block,
    preset_family,
    render_text,
    timed_suite,
)
from .scroll import model_for

EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_INCONSISTENT = 0, 2, 3, 4


def parse_weights(text: str) -> tuple[int, ...]:
    try:
        ws = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers: {text!r}")
    if len(ws) < 2 or any(w < 1 for w in ws):
        raise argparse.ArgumentTypeError("need at least two positive weights")
    return ws


def parse_seeds(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            seeds = list(range(lo, hi + 1))
        else:
            seeds = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"seeds must look like 0..19 or 1,2,3: {text!r}")
    if not seeds:
        raise argparse.ArgumentTypeError("empty seed range")
    return seeds


def dump(payload, fmt: str, out: str | None, text: str | None = None):
    body = text if fmt == "text" and text is not None else json.dumps(payload, sort_keys=True, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wpscheck", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("analyze", help="full report for one hypersurface family")
    p.add_argument("--weights", type=parse_weights)
    p.add_argument("--degree", type=int)
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--seeds", type=parse_seeds, default=list(DEFAULT_SEEDS))
    p.add_argument("--bound", type=int, default=COEFF_BOUND)
    common(p)

    p = sub.add_parser("check", help="run the consistency suite")
    p.add_argument("--seeds", type=parse_seeds, default=list(DEFAULT_SEEDS))
    common(p)

    p = sub.add_parser("nef", help="nef-cone invariance criterion on a scroll model")
    p.add_argument("--preset", choices=("x8", "x12"), required=True)
    common(p)

    p = sub.add_parser("aut", help="stabilizer and involution data for one seeded member")
    p.add_argument("--preset", choices=sorted(PRESETS), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=COEFF_BOUND)
    common(p)
    return parser


def cmd_analyze(args, parser) -> int:
    if args.preset:
        weights, degree = PRESETS[args.preset]
    else:
        if args.weights is None or args.degree is None:
            parser.error("analyze needs --preset or both --weights and --degree")
        weights, degree = args.weights, args.degree
    if degree < 1:
        parser.error("--degree must be positive")
    if args.bound < 1:
        parser.error("--bound must be positive")
    rep = analyze(weights, degree, seeds=args.seeds, bound=args.bound)
    dump(rep.to_dict(), args.format, args.out, render_text(rep))
    if rep.error:
        return EXIT_UNSUPPORTED
    return EXIT_OK if rep.consistent else EXIT_INCONSISTENT


def cmd_check(args) -> int:
    rows, elapsed = timed_suite(args.seeds)
    payload = {
        "rows": [vars(r) for r in rows],
        "passed": all(r.passed for r in rows),
        "seconds": round(elapsed, 1),
    }
    text = "\n".join(f"[{'PASS' if r.passed else 'FAIL'}] {r.id:>3} {r.name}: {r.detail}" for r in rows)
    dump(payload, args.format, args.out, text + f"\n{elapsed:.1f}s")
    return EXIT_OK if payload["passed"] else EXIT_INCONSISTENT


def cmd_nef(args) -> int:
    model = model_for(*PRESETS[args.preset])
    block = intersection_block(model)
    nef = block["nef_criterion"]
    text = (
        f"{args.preset}: cubic {block['cubic_form']}, c2 {block['c2_form']}, "
        f"kernel {nef['kernel']}, cubic there {nef['cubic_value']}, criterion holds: {nef['holds']}"
    )
    dump(block, args.format, args.out, text)
    return EXIT_OK


def cmd_aut(args) -> int:
    fam = preset_family(args.preset)
    member = random_member(fam, args.seed, args.bound)
    z = forced_involution(fam)
    payload = {
        "preset": args.preset,
        "seed": args.seed,
        "stabilizer_dim": stabilizer_dim(member),
        "forced_involution": z,
        "involution_check": involution_check(member, fam),
        "member": member.to_json(),
    }
    if z is not None:
        payload["square_completed"] = complete_square(member, z)[0].to_json()
    text = (
        f"{args.preset} seed {args.seed}: stabilizer dim {payload['stabilizer_dim']}, "
        f"forced involution {z}, involution check {payload['involution_check']}"
    )
    dump(payload, args.format, args.out, text)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "analyze":
        return cmd_analyze(args, parser)
    if args.command == "check":
        return cmd_check(args)
    if args.command == "nef":
        return cmd_nef(args)
    return cmd_aut(args)


if __name__ == "__main__":
    sys.exit(main())
