"""Command line entry point: ``lvmb {classify,fan,realize,check,example}``."""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import emit_example
from .errors import InvariantViolation, LVMBError, PrecisionExhausted
from .gitlift import check_condition_K
from .io import config_to_dict, fan_to_dict, read_config, read_fan
from .report import classify
from .toric import build_fan, realize_fan

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PRECISION = 3


def _emit(doc, out):
    text = json.dumps(doc, indent=2) + "\n"
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_classify(args):
    rep = classify(read_config(args.file))
    print(rep.to_machine() if args.format == "machine" else rep.to_text())
    return EXIT_OK


def cmd_fan(args):
    config = read_config(args.file)
    norm = check_condition_K(config)
    if norm is None:
        print("error: datum does not satisfy condition (K); X is undefined", file=sys.stderr)
        return EXIT_INVALID
    _emit(fan_to_dict(build_fan(config, norm)), args.output)
    return EXIT_OK


def cmd_realize(args):
    config, _ = realize_fan(read_fan(args.file))
    _emit(config_to_dict(config), args.output)
    return EXIT_OK


def cmd_check(args):
    try:
        read_config(args.file)
    except InvariantViolation as exc:
        for v in exc.violations:
            print(v)
        return EXIT_INVALID
    print("ok")
    return EXIT_OK


def cmd_example(args):
    _emit(config_to_dict(emit_example()), args.output)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="lvmb", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="report every verdict about a datum")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fan", help="write the fan of the quotient X")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("realize", help="realize a complete simplicial fan as a datum")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("check", help="structural validation only")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("example", help="print the built-in hexagon datum")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PrecisionExhausted as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (LVMBError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
