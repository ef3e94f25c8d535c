"""Command-line front end.

Exit codes: 0 success, 1 verification-false, 2 usage or domain error.
Rationals on the command line use the exact ``p/q`` or integer grammar.
``RAMID_THREADS`` caps the worker count used by ``enumerate``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import enumeration, families, render
from .construct import build_tuple
from .errors import PreconditionError, RamidError
from .exact import parse_rational
from .identity import (
    IdentityTuple,
    VariationIdentity,
    classify,
    verify_tuple,
    verify_variation,
)

EXIT_OK = 0
EXIT_UNVERIFIED = 1
EXIT_USAGE = 2


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramid",
        description="Verify, construct, generate and enumerate "
        "Ramanujan-type square-root product identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a (t, A, x, y, z) tuple exactly")
    for name in ("t", "A", "x", "y", "z"):
        p.add_argument(f"--{name}", type=_rational, required=True)

    p = sub.add_parser("solve", help="construct x, y from (t, A, z, k)")
    for name in ("t", "A", "z", "k"):
        p.add_argument(f"--{name}", type=_rational, required=True)

    p = sub.add_parser("enumerate", help="exhaustively enumerate identities")
    p.add_argument(
        "--class",
        dest="klass",
        choices=("super-perfect", "perfect"),
        default="super-perfect",
    )
    p.add_argument("--primes-only", action="store_true")
    p.add_argument("--out", help="write identities (JSON lines) to this file")

    p = sub.add_parser("family", help="instantiate a closed-form family")
    p.add_argument("name", choices=families.FAMILY_NAMES)
    p.add_argument("--a", type=_rational)
    p.add_argument("--k", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--n", type=int)

    p = sub.add_parser("discover", help="seeded random search at fixed t")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--t", type=_rational, required=True)
    p.add_argument("--a-min", type=int, default=2)
    p.add_argument("--a-max", type=int, default=6)
    p.add_argument("--z-min", type=int, default=-50)
    p.add_argument("--z-max", type=int, default=50)
    p.add_argument("--k-den", type=int, default=12)

    p = sub.add_parser("render", help="render identity JSON from stdin")
    p.add_argument("--format", choices=("latex", "text", "json"), default="latex")
    p.add_argument("--unchecked", action="store_true")

    return parser


def _workers() -> int | None:
    raw = os.environ.get("RAMID_THREADS")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise RamidError(f"RAMID_THREADS must be an integer (got {raw!r})")
    if value < 1:
        raise RamidError(f"RAMID_THREADS must be >= 1 (got {value})")
    return value


def _cmd_verify(args: argparse.Namespace) -> int:
    identity = IdentityTuple(args.t, args.A, args.x, args.y, args.z)
    ok = verify_tuple(identity)
    out = identity.to_json_dict(classify(identity) if ok else None)
    out["verified"] = ok
    print(json.dumps(out))
    return EXIT_OK if ok else EXIT_UNVERIFIED


def _cmd_solve(args: argparse.Namespace) -> int:
    print(build_tuple(args.t, args.A, args.z, args.k).to_json())
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.klass == "super-perfect":
        report = enumeration.enumerate_super_perfect(max_workers=_workers())
    else:
        report = enumeration.enumerate_perfect(max_workers=_workers())
    if args.primes_only:
        report = enumeration.prime_filter(report)
    if args.out:
        with open(args.out, "w") as fh:
            report.write_jsonl(fh)
        print(json.dumps(report.to_summary_dict()))
    else:
        report.write_jsonl(sys.stdout)
        print(json.dumps(report.to_summary_dict()), file=sys.stderr)
    return EXIT_OK


def _cmd_family(args: argparse.Namespace) -> int:
    params = {
        key: value
        for key, value in (("a", args.a), ("k", args.k), ("b", args.b), ("n", args.n))
        if value is not None
    }
    needed = {
        "rebak": {"a"},
        "rebak-variant": {"a"},
        "general-infinite": {"k"},
        "long-identity": {"b", "n"},
        "surd-high": {"a"},
        "surd-low": {"a"},
    }[args.name]
    if set(params) != needed:
        raise RamidError(
            f"family {args.name} takes exactly {sorted(needed)} "
            f"(got {sorted(params)})"
        )
    identity = families.generate(args.name, params)
    if isinstance(identity, IdentityTuple):
        ok = verify_tuple(identity)
        print(identity.to_json(classify(identity) if ok else None))
    else:
        ok = verify_variation(identity)
        print(identity.to_json())
    return EXIT_OK if ok else EXIT_UNVERIFIED


def _cmd_discover(args: argparse.Namespace) -> int:
    results = families.discover(
        seed=args.seed,
        trials=args.trials,
        t=args.t,
        a_range=(args.a_min, args.a_max),
        z_range=(args.z_min, args.z_max),
        k_den_max=args.k_den,
    )
    for identity in results:
        print(identity.to_json(classify(identity)))
    return EXIT_OK


def _parse_identity_json(line: str) -> IdentityTuple | VariationIdentity:
    data = json.loads(line)
    if "radicand" in data:
        return VariationIdentity.from_json_dict(data)
    return IdentityTuple.from_json_dict(data)


def _cmd_render(args: argparse.Namespace) -> int:
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        identity = _parse_identity_json(line)
        if args.format == "latex":
            print(render.render_latex(identity, unchecked=args.unchecked))
        elif args.format == "text":
            print(render.render_text(identity, unchecked=args.unchecked))
        else:
            if isinstance(identity, IdentityTuple):
                ok = verify_tuple(identity)
                if not ok and not args.unchecked:
                    raise PreconditionError(f"tuple does not verify: {line}")
                print(identity.to_json(classify(identity) if ok else None))
            else:
                if not verify_variation(identity) and not args.unchecked:
                    raise PreconditionError(f"variation does not verify: {line}")
                print(identity.to_json())
    return EXIT_OK


_COMMANDS = {
    "verify": _cmd_verify,
    "solve": _cmd_solve,
    "enumerate": _cmd_enumerate,
    "family": _cmd_family,
    "discover": _cmd_discover,
    "render": _cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except PreconditionError as exc:
        print(f"ramid: {exc}", file=sys.stderr)
        return EXIT_UNVERIFIED
    except (RamidError, ValueError, OSError) as exc:
        print(f"ramid: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
