"""Command line entry point.

Subcommands: orbits, pi1, simples, semisimple, hyperplanes, translate.
Output is deterministic for a fixed invocation.  Exit codes: 0 = success
(for `semisimple`: the category is semi-simple), 1 = not semi-simple,
2 = input error, 3 = internal criteria disagreement.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .orbits import OrbitLabel, enumerate_Q_chi, fundamental_group
from .params import (
    KappaParams,
    RationalCharacter,
    chi_to_kappa,
    hecke_params,
    hecke_q,
    kappa_to_chi,
)
from .partitions import MultiPartition, Partition
from .report import (
    CriteriaDisagreement,
    hyperplane_listing,
    orbit_report,
    semisimplicity_report,
)

EXIT_OK = 0
EXIT_NOT_SEMISIMPLE = 1
EXIT_INPUT = 2
EXIT_DISAGREEMENT = 3


class InputError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclocone",
        description=(
            "Exact calculator for orbits of the enhanced cyclic nilpotent "
            "cone, their fundamental groups, and semi-simplicity of the "
            "admissible module category."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, need_n=True):
        if need_n:
            p.add_argument("-n", type=int, required=True, help="rank parameter n")
        p.add_argument(
            "-l", "--ell", type=int, required=True, help="cycle length ell"
        )
        p.add_argument(
            "--format",
            choices=("pretty", "json", "tsv"),
            default="pretty",
            help="output format (default: pretty)",
        )

    p = sub.add_parser("orbits", help="enumerate orbit labels")
    add_common(p)
    p.add_argument("--chi", help="rational character, e.g. 1/5,1/7")
    p.add_argument("--kappa", help="kappa coordinates, e.g. k00=1/3,k=1/4,-1/4")

    p = sub.add_parser("pi1", help="fundamental group of one orbit")
    p.add_argument("-n", type=int, help="rank parameter n (derived if omitted)")
    p.add_argument("-l", "--ell", type=int, required=True)
    p.add_argument(
        "--format", choices=("pretty", "json", "tsv"), default="pretty"
    )
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. [2,1]")
    p.add_argument("--nu", required=True, help="multipartition, e.g. [2];[]")

    p = sub.add_parser("simples", help="labels of the simple objects at chi")
    add_common(p)
    p.add_argument("--chi", help="rational character")
    p.add_argument("--kappa", help="kappa coordinates")

    p = sub.add_parser("semisimple", help="decide semi-simplicity at chi")
    add_common(p)
    p.add_argument("--chi", help="rational character")
    p.add_argument("--kappa", help="kappa coordinates")
    p.add_argument(
        "--selftest",
        type=int,
        metavar="COUNT",
        help="instead of one chi, run COUNT random characters through all "
        "three criteria and report agreement",
    )
    p.add_argument("--seed", type=int, help="seed for --selftest sampling")

    p = sub.add_parser("hyperplanes", help="list the hyperplanes of the bound n")
    add_common(p)

    p = sub.add_parser("translate", help="translate between chi and kappa")
    add_common(p, need_n=False)
    p.add_argument("--chi", help="rational character")
    p.add_argument("--kappa", help="kappa coordinates")

    return parser


def _resolve_chi(args, ell: int, required: bool = True) -> RationalCharacter | None:
    chi_text = getattr(args, "chi", None)
    kappa_text = getattr(args, "kappa", None)
    if chi_text and kappa_text:
        raise InputError("--chi and --kappa are mutually exclusive")
    if chi_text:
        chi = RationalCharacter.parse(chi_text)
        if chi.ell != ell:
            raise InputError(
                f"character has {chi.ell} entries, expected {ell}"
            )
        return chi
    if kappa_text:
        kp = KappaParams.parse(kappa_text, ell)
        return kappa_to_chi(kp, ell)
    if required:
        raise InputError("one of --chi or --kappa is required")
    return None


def _emit(out, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _emit_json(out, obj) -> None:
    _emit(out, json.dumps(obj, ensure_ascii=False, indent=2))


def _emit_tsv(out, header: list[str], rows: list[list[str]]) -> None:
    lines = ["\t".join(header)]
    lines.extend("\t".join(row) for row in rows)
    _emit(out, "\n".join(lines))


def _summand_text(record: dict) -> str:
    if not record["summands"]:
        return "-"
    return " ".join(
        f"{s['start']}:{s['row']}:{s['dim_vector']}" for s in record["summands"]
    )


def _pi1_text(pi1: dict) -> str:
    parts = []
    if pi1["free_rank"] == 1:
        parts.append("Z")
    elif pi1["free_rank"] > 1:
        parts.append(f"Z^{pi1['free_rank']}")
    parts.extend(f"Z/{d}" for d in pi1["invariant_factors"])
    return " x ".join(parts) if parts else "1"


def _cmd_orbits(args, out) -> int:
    if args.n < 0:
        raise InputError("n must be nonnegative")
    chi = _resolve_chi(args, args.ell, required=False)
    data = orbit_report(args.n, args.ell, chi)
    if args.format == "json":
        _emit_json(out, data)
        return EXIT_OK
    header = ["lambda", "nu", "pi1", "summands"]
    if chi is not None:
        header.append("monodromic")
    rows = []
    for record in data["orbits"]:
        row = [
            record["lambda"],
            record["nu"],
            _pi1_text(record["pi1"]),
            _summand_text(record),
        ]
        if chi is not None:
            row.append(str(record["monodromic_for_chi"]).lower())
        rows.append(row)
    if args.format == "tsv":
        _emit_tsv(out, header, rows)
        return EXIT_OK
    totals = data["totals"]
    _emit(out, f"orbit labels for n={args.n}, ell={args.ell}")
    for row in rows:
        _emit(out, "  " + "  ".join(row))
    line = (
        f"totals: orbits={totals['orbits']} "
        f"multipartitions={totals['multipartitions']}"
    )
    if totals["monodromic"] is not None:
        line += f" monodromic={totals['monodromic']}"
    _emit(out, line)
    return EXIT_OK


def _cmd_pi1(args, out) -> int:
    lam = Partition.parse(args.lam)
    nu = MultiPartition.parse(args.nu, args.ell)
    total = lam.size + nu.size
    if total % args.ell != 0:
        raise InputError(
            f"|lambda| + |nu| = {total} is not a multiple of ell = {args.ell}"
        )
    n = args.n if args.n is not None else total // args.ell
    try:
        label = OrbitLabel(lam, nu, n, args.ell)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    group = fundamental_group(label)
    if args.format == "json":
        _emit_json(
            out,
            {
                "lambda": str(lam),
                "nu": str(nu),
                "n": n,
                "ell": args.ell,
                "pi1": group.to_json(),
                "pi1_text": str(group),
            },
        )
    elif args.format == "tsv":
        _emit_tsv(
            out,
            ["lambda", "nu", "pi1"],
            [[str(lam), str(nu), str(group)]],
        )
    else:
        _emit(out, str(group))
    return EXIT_OK


def _cmd_simples(args, out) -> int:
    if args.n < 0:
        raise InputError("n must be nonnegative")
    chi = _resolve_chi(args, args.ell)
    labels = enumerate_Q_chi(args.n, args.ell, chi)
    if args.format == "json":
        _emit_json(
            out,
            {
                "n": args.n,
                "ell": args.ell,
                "chi": [str(v) for v in chi.values],
                "count": len(labels),
                "labels": [
                    {"lambda": str(lab.lam), "nu": str(lab.nu)} for lab in labels
                ],
            },
        )
    elif args.format == "tsv":
        _emit_tsv(
            out,
            ["lambda", "nu"],
            [[str(lab.lam), str(lab.nu)] for lab in labels],
        )
    else:
        _emit(out, f"{len(labels)} simple objects at chi={chi}")
        for lab in labels:
            _emit(out, f"  ({lab.lam};{lab.nu})")
    return EXIT_OK


def _random_character(rng: random.Random, ell: int) -> RationalCharacter:
    values = []
    for _ in range(ell):
        den = rng.randint(1, 12)
        num = rng.randint(-24, 24)
        values.append(Fraction(num, den))
    return RationalCharacter(values)


def _cmd_semisimple(args, out) -> int:
    if args.n < 1:
        raise InputError("n must be positive")
    if args.selftest is not None:
        rng = random.Random(args.seed)
        checked = 0
        for _ in range(args.selftest):
            chi = _random_character(rng, args.ell)
            semisimplicity_report(args.n, args.ell, chi)  # raises on disagreement
            checked += 1
        _emit(
            out,
            f"selftest: {checked} random characters, all criteria agree",
        )
        return EXIT_OK
    chi = _resolve_chi(args, args.ell)
    report = semisimplicity_report(args.n, args.ell, chi)
    if args.format == "json":
        _emit_json(out, report.to_json())
    elif args.format == "tsv":
        header = [
            "n",
            "ell",
            "chi",
            "semisimple",
            "verdict_roots",
            "verdict_hecke",
            "verdict_counting",
            "simple_count",
            "pell_count",
            "chi_integral",
            "violated_roots",
        ]
        violated = ";".join(
            f"{alpha}={value}" for alpha, value in report.violated_roots
        )
        row = [
            str(report.n),
            str(report.ell),
            str(report.chi),
            str(report.semisimple).lower(),
            str(report.verdict_roots).lower(),
            str(report.verdict_hecke).lower(),
            str(report.verdict_counting).lower(),
            str(report.simple_count),
            str(report.pell_count),
            str(report.chi_integral).lower(),
            violated or "-",
        ]
        _emit_tsv(out, header, [row])
    else:
        verdict = "yes" if report.semisimple else "no"
        _emit(out, f"semi-simple: {verdict}")
        _emit(
            out,
            f"criteria: roots={report.verdict_roots} "
            f"hecke={report.verdict_hecke} counting={report.verdict_counting}",
        )
        _emit(
            out,
            f"simple objects: {report.simple_count} "
            f"(multipartition count {report.pell_count})",
        )
        _emit(out, f"chi integral: {report.chi_integral}")
        if report.violated_roots:
            _emit(out, "violated hyperplanes:")
            for alpha, value in report.violated_roots:
                _emit(out, f"  {alpha}: pairing {value}")
    return EXIT_OK if report.semisimple else EXIT_NOT_SEMISIMPLE


def _cmd_hyperplanes(args, out) -> int:
    if args.n < 1:
        raise InputError("n must be positive")
    listing = hyperplane_listing(args.n, args.ell)
    if args.format == "json":
        _emit_json(
            out,
            {
                "n": args.n,
                "ell": args.ell,
                "count": len(listing),
                "roots": [
                    {"dim_vector": str(alpha), "equation": eq}
                    for alpha, eq in listing
                ],
            },
        )
    elif args.format == "tsv":
        _emit_tsv(
            out,
            ["root", "equation"],
            [[str(alpha), eq] for alpha, eq in listing],
        )
    else:
        _emit(out, f"{len(listing)} hyperplanes for n={args.n}, ell={args.ell}")
        for alpha, eq in listing:
            _emit(out, f"  {alpha}: {eq}")
    return EXIT_OK


def _cmd_translate(args, out) -> int:
    chi_text = args.chi
    kappa_text = args.kappa
    if bool(chi_text) == bool(kappa_text):
        raise InputError("translate needs exactly one of --chi or --kappa")
    if chi_text:
        chi = RationalCharacter.parse(chi_text)
        if chi.ell != args.ell:
            raise InputError(f"character has {chi.ell} entries, expected {args.ell}")
        kp = chi_to_kappa(chi)
    else:
        kp = KappaParams.parse(kappa_text, args.ell)
        chi = kappa_to_chi(kp, args.ell)
    q0, q1, u = hecke_params(kp, args.ell)
    q = hecke_q(q0, q1)
    if args.format == "json":
        _emit_json(
            out,
            {
                "ell": args.ell,
                "chi": [str(v) for v in chi.values],
                "kappa": {
                    "k00": str(kp.k00),
                    "k01": str(kp.k01),
                    "kappa": [str(v) for v in kp.kappa],
                },
                "hecke": {
                    "q0": str(q0),
                    "q1": str(q1),
                    "q": str(q),
                    "u": [str(x) for x in u],
                },
            },
        )
    elif args.format == "tsv":
        _emit_tsv(
            out,
            ["chi", "k00", "k01", "kappa", "q0", "q1", "q", "u"],
            [
                [
                    str(chi),
                    str(kp.k00),
                    str(kp.k01),
                    ",".join(str(v) for v in kp.kappa),
                    str(q0),
                    str(q1),
                    str(q),
                    ",".join(str(x) for x in u),
                ]
            ],
        )
    else:
        _emit(out, f"chi = {chi}")
        _emit(
            out,
            f"kappa: k00={kp.k00} k01={kp.k01} "
            f"kappa={','.join(str(v) for v in kp.kappa)}",
        )
        _emit(
            out,
            f"hecke: q0={q0} q1={q1} q={q} u={','.join(str(x) for x in u)}",
        )
    return EXIT_OK


_COMMANDS = {
    "orbits": _cmd_orbits,
    "pi1": _cmd_pi1,
    "simples": _cmd_simples,
    "semisimple": _cmd_semisimple,
    "hyperplanes": _cmd_hyperplanes,
    "translate": _cmd_translate,
}


def _merge_negative_chi(argv: list[str]) -> list[str]:
    # argparse rejects option values that start with "-", which negative
    # rationals do; fold `--chi -1/2` into `--chi=-1/2`.
    merged = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--chi" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            merged.append(tok + "=" + argv[i + 1])
            i += 2
        else:
            merged.append(tok)
            i += 1
    return merged


def run(argv: list[str], out=None, err=None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(_merge_negative_chi(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    if getattr(args, "ell", 1) < 1:
        print("error: ell must be positive", file=err)
        return EXIT_INPUT
    try:
        return _COMMANDS[args.subcommand](args, out)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except CriteriaDisagreement as exc:
        print(f"internal error: {exc}", file=err)
        return EXIT_DISAGREEMENT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
