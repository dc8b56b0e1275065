"""Command-line front end: coding tables, exploded tableaux, enumeration,
and the identity verification suite."""

from __future__ import annotations

import argparse
import json
import sys

from . import identities
from .coding import (
    NotACoreError,
    bead_set,
    coding_size,
    core_coding,
    cores_from_codings,
)
from .exploded import build_window, render
from .partitions import InvalidPartitionError, Partition, enumerate_t_cores


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except InvalidPartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _complex_arg(text: str) -> complex:
    try:
        if "," in text:
            re_s, im_s = text.split(",", 1)
            return complex(float(re_s), float(im_s))
        return complex(float(text), 0.0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse complex number {text!r}")


def _join(values) -> str:
    return ",".join(str(v) for v in values)


def _core_map_data(partition: Partition, t: int) -> dict:
    coding = core_coding(partition, t)
    beads = bead_set(partition, t)
    return {
        "partition": str(partition),
        "t": t,
        "V": str(coding),
        "C": _join(beads.gaps()),
        "M": str(beads.top),
        "m": str(beads.ray_top),
        "size_check": coding_size(coding),
    }


def _core_map_text(partition: Partition, t: int) -> str:
    lines = [f"{'t':<10}{t}"]
    for label, lam in (("lambda", partition), ("conjugate", partition.conjugate())):
        coding = core_coding(lam, t)
        beads = bead_set(lam, t)
        # non-coding beads above the ray are the negated gaps of the other side
        dagger = sorted((-g for g in bead_set(lam.conjugate(), t).gaps()), reverse=True)
        rows = [
            (label, str(lam)),
            ("W head", _join(beads.head)),
            ("V", str(coding)),
            ("W+ head", _join(dagger)),
            ("M", str(beads.top)),
            ("m", str(beads.ray_top)),
            ("C", _join(beads.gaps())),
            ("size", str(coding_size(coding))),
        ]
        for key, value in rows:
            lines.append(f"{key:<10}{value}")
        lines.append("")
    return "\n".join(lines).rstrip() + "\n"


def cmd_core_map(args) -> int:
    try:
        data = _core_map_data(args.partition, args.t)
    except NotACoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(data))
    else:
        print(_core_map_text(args.partition, args.t), end="")
    return 0


def cmd_explode(args) -> int:
    window = build_window(args.partition, args.t)
    fmt = "svg" if args.format == "svg" else "ascii"
    print(render(window, fmt), end="")
    return 0


def cmd_enumerate(args) -> int:
    if args.via == "codings":
        cores = cores_from_codings(args.t, args.max_size)
    else:
        cores = enumerate_t_cores(args.t, args.max_size)
    if args.format == "json":
        print(json.dumps([str(p) for p in cores]))
    else:
        for p in cores:
            print(p)
    return 0


VERIFIERS = {
    "multiset-formula": lambda a: identities.verify_multiset_formula(
        a.t or 5, a.max_size or 15
    ),
    "exploded-relations": lambda a: identities.verify_exploded_relations(
        a.t or 5, a.max_size or 15
    ),
    "nekrasov-okounkov": lambda a: identities.verify_nekrasov_okounkov(a.trunc or 12),
    "sin-family": lambda a: identities.verify_sin_family(
        a.r, t_value=a.tvalue, z=a.z, N=a.trunc or 8, seed=a.seed
    ),
    "poly-s-family": lambda a: identities.verify_poly_s_family(
        s=a.s, z=a.z, N=a.trunc or 8, seed=a.seed
    ),
    "jacobi": lambda a: identities.verify_jacobi(a.trunc or 10),
    "macdonald": lambda a: identities.verify_macdonald(a.t or 2, a.trunc or 4),
    "tcore-lemmas": lambda a: identities.verify_tcore_lemmas(
        a.t or 3, z=a.z, N=a.trunc or 10, seed=a.seed
    ),
    "multiplication": lambda a: identities.verify_multiplication(a.r, a.trunc or 10),
    "hook-content": lambda a: identities.verify_hook_content(
        a.max_size or 8, a.max_n
    ),
    "sin-lemma": lambda a: identities.verify_sin_lemma(a.samples, a.seed),
    "classical-cross-checks": lambda a: identities.verify_classical_crosschecks(
        a.max_size or 25, 8, min(a.max_size or 20, 20)
    ),
    "golden-tables": lambda a: identities.verify_golden_tables(),
}


def cmd_verify(args) -> int:
    try:
        report = VERIFIERS[args.identity](args)
    except identities.SingularSampleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(report.to_json())
    else:
        print(
            f"{report.status.upper():4}  {report.identity}  "
            f"params={report.params}  N={report.N}  deviation={report.deviation}  "
            f"({report.ms:.0f} ms)"
        )
    return 0 if report.passed else 1


def cmd_suite(args) -> int:
    reports = identities.run_suite(args.profile, seed=args.seed)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "profile": args.profile,
                    "status": "pass" if ok else "fail",
                    "results": [r.to_dict() for r in reports],
                }
            )
        )
    else:
        for r in reports:
            print(
                f"{r.status.upper():4}  {r.identity:<24} params={r.params}  "
                f"deviation={r.deviation}  ({r.ms:.0f} ms)"
            )
        print(f"suite: {'PASS' if ok else 'FAIL'} ({len(reports)} checks)")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tcores",
        description="t-core codings, exploded tableaux and identity verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("core-map", help="coding table for a t-core")
    p.add_argument("--partition", type=_partition_arg, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_core_map)

    p = sub.add_parser("explode", help="render the exploded tableau window")
    p.add_argument("--partition", type=_partition_arg, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--format", choices=("text", "svg"), default="text")
    p.set_defaults(fn=cmd_explode)

    p = sub.add_parser("enumerate", help="list t-cores up to a size")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--max-size", type=int, default=15)
    p.add_argument("--via", choices=("filter", "codings"), default="filter")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("verify", help="run one identity verifier")
    p.add_argument("identity", choices=sorted(VERIFIERS))
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--tvalue", type=_complex_arg, default=None,
                   help="complex t parameter for the sine family, e.g. 1.41,0.2")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--trunc", type=int, default=None)
    p.add_argument("--z", type=_complex_arg, default=None)
    p.add_argument("--s", type=_complex_arg, default=None)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("suite", help="run the verification battery")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
