"""Command line front end: compute invariants, verify identities, generate files.

Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
3 inapplicable invariant, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import (
    InapplicableInvariant,
    LimitExceeded,
    MatchforceError,
    ParseError,
)
from .generators import (
    GLUE_PRESETS,
    gen_named,
    gen_truncated_parallelogram,
    glue_preset,
    enumerate_hex_systems,
)
from .graphs import DEFAULT_CYCLE_CAP, DEFAULT_MATCHING_CAP
from .io import serialize_hex, serialize_instance
from .hexsys import HexSystem
from .report import REGISTRY, compute_report, dumps_report
from .verify import SUITE_IDS, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_INAPPLICABLE = 3
EXIT_CAP = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchforce",
        description="forcing / anti-forcing invariants of perfect matchings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute invariants of an instance file")
    p_compute.add_argument("--in", dest="infile", required=True, help=".graph or .hex file")
    p_compute.add_argument(
        "--inv",
        required=True,
        help="comma-separated invariants: " + ",".join(sorted(REGISTRY)),
    )
    p_compute.add_argument("--out", help="write the report here instead of stdout")
    p_compute.add_argument("--max-matchings", type=int, default=DEFAULT_MATCHING_CAP)
    p_compute.add_argument("--max-cycles", type=int, default=DEFAULT_CYCLE_CAP)
    p_compute.add_argument("--seed", type=int, default=None, help="reserved")

    p_verify = sub.add_parser("verify", help="run one verification suite")
    p_verify.add_argument("--suite", required=True, choices=SUITE_IDS)
    p_verify.add_argument("--max-cells", type=int, default=None)
    p_verify.add_argument("--max-matchings", type=int, default=DEFAULT_MATCHING_CAP)
    p_verify.add_argument("--max-cycles", type=int, default=DEFAULT_CYCLE_CAP)
    p_verify.add_argument("--out", help="also write the check results as JSON")
    p_verify.add_argument("--seed", type=int, default=None, help="reserved")

    p_gen = sub.add_parser("generate", help="write instance files")
    p_gen.add_argument(
        "family", choices=("trunc-para", "named", "polyhex-corpus", "glue-preset")
    )
    p_gen.add_argument("params", help="e.g. 5,5,3,2 / dodecahedron / 4 / 1")
    p_gen.add_argument("--out", help="output file (or directory for polyhex-corpus)")
    p_gen.add_argument("--seed", type=int, default=None, help="reserved")
    return parser


def _cmd_compute(args) -> int:
    invariants = [s for s in args.inv.split(",") if s]
    try:
        report = compute_report(
            args.infile,
            invariants,
            max_matchings=args.max_matchings,
            max_cycles=args.max_cycles,
        )
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InapplicableInvariant as exc:
        print(f"inapplicable invariant: {exc}", file=sys.stderr)
        return EXIT_INAPPLICABLE
    except LimitExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    text = dumps_report(report)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        result = run_suite(
            args.suite,
            max_cells=args.max_cells,
            max_matchings=args.max_matchings,
            max_cycles=args.max_cycles,
        )
    except LimitExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    for check in result.checks:
        if check.ok:
            print(f"ok   {check.instance}")
        else:
            print(f"FAIL {check.instance}: {check.detail}")
    print(result.summary())
    if args.out:
        import json

        entries = [
            {
                "theorem": result.suite,
                "instance": c.instance,
                "status": "pass" if c.ok else "fail",
                **({"counterexample": c.detail} if not c.ok else {}),
            }
            for c in result.checks
        ]
        Path(args.out).write_text(json.dumps({"theorems": entries}, indent=2) + "\n")
    return EXIT_OK if result.ok else EXIT_FAIL


def _cmd_generate(args) -> int:
    try:
        if args.family == "trunc-para":
            params = tuple(int(x) for x in args.params.split(","))
            text = serialize_hex(gen_truncated_parallelogram(params))
        elif args.family == "named":
            text = serialize_instance(gen_named(args.params))
        elif args.family == "glue-preset":
            number = int(args.params)
            if number not in GLUE_PRESETS:
                print(f"unknown preset {number}", file=sys.stderr)
                return EXIT_PARSE
            text = serialize_hex(glue_preset(number))
        else:  # polyhex-corpus
            n = int(args.params)
            out_dir = Path(args.out or f"polyhex-{n}")
            out_dir.mkdir(parents=True, exist_ok=True)
            for i, h in enumerate(enumerate_hex_systems(n)):
                (out_dir / f"polyhex-{n}-{i:04d}.hex").write_text(serialize_hex(h))
            print(f"wrote {len(enumerate_hex_systems(n))} files to {out_dir}")
            return EXIT_OK
    except (MatchforceError, ValueError) as exc:
        print(f"generate error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    if args.family == "named" and not args.out:
        obj = gen_named(args.params)
        suffix = ".hex" if isinstance(obj, HexSystem) else ".graph"
        out = Path(args.params.lower() + suffix)
    elif args.family == "trunc-para" and not args.out:
        out = Path("tp-" + args.params.replace(",", "_") + ".hex")
    elif args.family == "glue-preset" and not args.out:
        out = Path(f"glue-preset-{args.params}.hex")
    else:
        out = Path(args.out)
    out.write_text(text)
    print(f"wrote {out}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, matching the parse-error contract
        return int(exc.code) if exc.code else EXIT_OK
    if args.command == "compute":
        return _cmd_compute(args)
    if args.command == "verify":
        return _cmd_verify(args)
    return _cmd_generate(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
