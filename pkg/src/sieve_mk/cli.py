"""Command-line entry point: ``sieve-mk <command> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .asymptotic import AsymptoticRegimeError, mk_asymptotic
from .certify import (
    SCHEMA,
    CertificationError,
    MkCertificate,
    StaleCertificateError,
    certify_mk,
    parse_rational,
    verify_certificate,
)
from .gaps import GapError, gap_bound, reproduce_headline
from .sieve_lab import SieveBudgetError, setup, simulate
from .tuples import (
    KTuple,
    TupleFileError,
    diameter,
    format_tuple,
    is_admissible,
    load_tuple,
    prime_offset_tuple,
    refine_admissible,
)

CACHE_ENV = "SIEVE_MK_CACHE"
HEADLINE_CERTS = {105: (11, Fraction(4)), 5: (3, Fraction(2))}


@dataclass
class CommandResult:
    exit_code: int = 0
    output: str = ""
    artifacts: list[str] = field(default_factory=list)


def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "sieve-mk")


def cache_path(k: int, degree: int) -> Path:
    return cache_dir() / f"mk_k{k}_d{degree}.json"


def _dumps(payload: dict) -> str:
    return json.dumps({"schema": SCHEMA, **payload}, sort_keys=True, indent=2) + "\n"


def load_certificate(path) -> MkCertificate:
    return MkCertificate.from_json(Path(path).read_text())


def save_certificate(cert: MkCertificate, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(cert.to_json() + "\n")
    return path


# --- commands -------------------------------------------------------------------


def cmd_certify(args) -> CommandResult:
    target = parse_rational(args.target)
    try:
        cert = certify_mk(args.k, args.degree, target, max_denominator=args.max_denominator)
    except CertificationError as exc:
        return CommandResult(1, f"error: {exc}\n")
    out = Path(args.output) if args.output else cache_path(args.k, args.degree)
    save_certificate(cert, out)
    text = (
        f"M_{cert.k} > {cert.target}  (degree {cert.degree}, {len(cert.basis)} basis terms)\n"
        f"exact ratio  {cert.ratio.numerator}/{cert.ratio.denominator}\n"
        f"             ~ {float(cert.ratio):.10f}\n"
        f"float hint   {cert.float_eigenvalue_hint}\n"
        f"sha256       {cert.digest()}\n"
        f"written to   {out}\n"
    )
    return CommandResult(0, text, [str(out)])


def cmd_verify(args) -> CommandResult:
    lines, code = [], 0
    for path in args.certificates:
        try:
            cert = load_certificate(path)
            ok = verify_certificate(cert)
        except (OSError, ValueError, KeyError, StaleCertificateError) as exc:
            ok, cert = False, None
            lines.append(f"FAIL {path}: {exc}")
            code = 1
            continue
        if ok:
            lines.append(f"OK   {path}: M_{cert.k} > {cert.target} ({cert.digest()[:16]})")
        else:
            lines.append(f"FAIL {path}: recomputed ratio does not match or does not exceed target")
            code = 1
    return CommandResult(code, "\n".join(lines) + "\n")


def _headline_certificates(paths, build: bool) -> tuple[dict[int, MkCertificate], list[str]]:
    certs: dict[int, MkCertificate] = {}
    written: list[str] = []
    for p in paths or []:
        cert = load_certificate(p)
        certs[cert.k] = cert
    for k, (degree, target) in HEADLINE_CERTS.items():
        if k in certs:
            continue
        path = cache_path(k, degree)
        if path.exists():
            certs[k] = load_certificate(path)
        elif build:
            certs[k] = certify_mk(k, degree, target)
            written.append(str(save_certificate(certs[k], path)))
    return certs, written


def cmd_gaps(args) -> CommandResult:
    if args.headline:
        try:
            certs, written = _headline_certificates(args.cert, args.build)
        except (OSError, ValueError, KeyError) as exc:
            return CommandResult(1, f"error: {exc}\n")
        report = reproduce_headline(certs)
        text = report.render_json() if args.json else report.render_text()
        return CommandResult(1 if report.errors else 0, text, written)
    if not (args.theta and args.cert and args.tuple):
        return CommandResult(2, "error: need --headline, or --theta, --cert and --tuple\n")
    theta = parse_rational(args.theta)
    try:
        H = load_tuple(args.tuple)
    except (OSError, TupleFileError) as exc:
        return CommandResult(1, f"error: {exc}\n")
    rows, code = [], 0
    for path in args.cert:
        try:
            cert = load_certificate(path)
            gb = gap_bound(theta, cert, H)
        except (OSError, ValueError, KeyError, GapError, StaleCertificateError) as exc:
            rows.append({"error": f"{path}: {exc}"})
            code = 1
            continue
        rows.append({**gb.to_dict(), "statement": gb.statement.render()})
    if args.json:
        return CommandResult(code, _dumps({"rows": rows}))
    lines = []
    for r in rows:
        if "error" in r:
            lines.append(f"error: {r['error']}")
        else:
            lines.append(
                f"theta -> {r['theta_sup']}-, k={r['k']}: {r['statement']}  "
                f"[{r['primes_guaranteed']} primes, cert {r['certificate_ref'][:16]}]"
            )
    return CommandResult(code, "\n".join(lines) + "\n")


def cmd_tuple(args) -> CommandResult:
    try:
        if args.tuple_cmd == "check":
            H = load_tuple(args.file)
            adm = is_admissible(H)
            payload = {
                "k": len(H),
                "diameter": diameter(H),
                "admissible": adm.admissible,
                "witness_prime": adm.prime,
                "witness_residues": list(adm.residues),
            }
            if args.json:
                return CommandResult(0 if adm else 1, _dumps(payload))
            verdict = "admissible" if adm else f"NOT admissible: mod {adm.prime} residues {list(adm.residues)} cover every class"
            return CommandResult(0 if adm else 1, f"k={len(H)} diameter={diameter(H)} {verdict}\n")
        if args.tuple_cmd == "gen":
            H = prime_offset_tuple(args.k)
            return CommandResult(0, format_tuple(H))
        if args.tuple_cmd == "refine":
            H = load_tuple(args.file)
            return CommandResult(0, format_tuple(refine_admissible(list(H), args.k)))
    except (OSError, TupleFileError, ValueError) as exc:
        return CommandResult(1, f"error: {exc}\n")
    return CommandResult(2, "error: unknown tuple command\n")


def cmd_asymptote(args) -> CommandResult:
    try:
        value = mk_asymptotic(args.k)
    except AsymptoticRegimeError as exc:
        return CommandResult(1, f"error: {exc}\n")
    if args.json:
        return CommandResult(0, _dumps({"k": args.k, "mk_lower": f"{value:.10f}", "advisory_flag": True}))
    return CommandResult(0, f"M_{args.k} >= {value:.10f}  [advisory (float), not certified]\n")


def cmd_simulate(args) -> CommandResult:
    H = KTuple.from_iterable(int(x) for x in args.H.split(","))
    try:
        cfg = setup(len(H), H, args.N, args.D0, args.R_exponent, R=args.R)
        record = simulate(cfg)
    except (ValueError, SieveBudgetError) as exc:
        return CommandResult(1, f"error: {exc}\n")
    return CommandResult(0, _dumps(record))


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sieve-mk", description="Certified lower bounds for M_k and bounded gaps between primes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="certify M_k > target with exact arithmetic")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--target", required=True, help='rational literal "p/q"')
    p.add_argument("--output", help="certificate path (default: cache directory)")
    p.add_argument("--max-denominator", type=int, default=10**12)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify", help="re-verify certificate files")
    p.add_argument("certificates", nargs="+")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gaps", help="bounded-gap statements from certificates")
    p.add_argument("--headline", action="store_true", help="reproduce the 600 / 12 / 600 table")
    p.add_argument("--build", action="store_true", help="build missing headline certificates into the cache")
    p.add_argument("--theta", help='exclusive supremum of the level of distribution, "p/q"')
    p.add_argument("--cert", action="append", help="certificate file (repeatable)")
    p.add_argument("--tuple", help="tuple file or builtin:h105 / builtin:h5")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gaps)

    p = sub.add_parser("tuple", help="admissible tuple tools")
    tsub = p.add_subparsers(dest="tuple_cmd", required=True)
    q = tsub.add_parser("check")
    q.add_argument("file", help="tuple file or builtin:h105")
    q.add_argument("--json", action="store_true")
    q = tsub.add_parser("gen")
    q.add_argument("--k", type=int, required=True)
    q = tsub.add_parser("refine")
    q.add_argument("file")
    q.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_tuple)

    p = sub.add_parser("asymptote", help="advisory large-k lower bound for M_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_asymptote)

    p = sub.add_parser("simulate", help="run the desk-scale sieve and compare with the main terms")
    p.add_argument("--H", default="0,2", help="comma-separated tuple")
    p.add_argument("--N", type=int, default=10**4)
    p.add_argument("--D0", type=int, default=5)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--R", type=int)
    group.add_argument("--R-exponent", dest="R_exponent", type=float, default=None)
    p.set_defaults(func=cmd_simulate)
    return parser


def run(argv=None) -> CommandResult:
    args = build_parser().parse_args(argv)
    if args.command == "simulate" and args.R is None and args.R_exponent is None:
        args.R_exponent = 0.2
    return args.func(args)


def main(argv=None) -> int:
    result = run(argv)
    stream = sys.stdout if result.exit_code == 0 else sys.stderr
    stream.write(result.output)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
