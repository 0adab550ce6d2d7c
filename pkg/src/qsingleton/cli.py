"""Command-line front end.

Exit codes: 0 success, 1 a check failed (or the operator could not be
cleaned), 2 usage or input errors, 3 distance search budget exhausted.

Code arguments are a path, ``-`` for stdin, or ``catalog:NAME``.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from qsingleton.code_generation import GeneratorConfig, catalog, random_code
from qsingleton.code_io import (
    format_vector,
    parse_code,
    parse_qubit_set,
    parse_vector,
    serialize_code,
)
from qsingleton.errors import (
    CapExceeded,
    CodeFormatError,
    InvalidK,
    NotCleanable,
    NotIsotropic,
    NotLogical,
    NotPrime,
    QSingletonError,
    ResourceLimit,
    UnknownCode,
)
from qsingleton.field_linalg import BACKENDS, use_backend
from qsingleton.stabilizer_core import (
    StabilizerCode,
    Verdict,
    check_singleton,
    clean,
    distance,
    g,
    is_correctable,
    iter_lemma_checks,
    iter_subsets,
)
from qsingleton.symplectic_space import PauliVector, wt

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
GPROFILE_CAP = 16


def _load(source: str) -> StabilizerCode:
    if source.startswith("catalog:"):
        return catalog(source[len("catalog:"):])
    if source == "-":
        return parse_code(sys.stdin.read())
    return parse_code(Path(source).read_text(encoding="ascii"))


def _vec(v: PauliVector | None) -> dict[str, Any] | None:
    if v is None:
        return None
    out: dict[str, Any] = {"row": list(v.flat())}
    if v.p == 2:
        out["pauli"] = v.pauli()
    return out


def _verdict_json(v: Verdict) -> dict[str, Any]:
    return {"status": v.status, **v.detail}


def _emit(args: argparse.Namespace, payload: dict[str, Any], lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


# --- subcommands ------------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    code = _load(args.file)
    n, k = code.n, code.k
    try:
        report = check_singleton(code, max_weight=args.max_weight, budget=args.budget)
    except ResourceLimit as exc:
        payload = {"n": n, "k": k, "d": None, "d_lower_bound": exc.lower_bound, "slack": None,
                   "verdicts": {}, "witness": None}
        _emit(args, payload, [f"n={n} k={k} d>{exc.lower_bound} slack=unknown"])
        return EXIT_LIMIT
    dist = report.distance
    d_text = "NoLogicals" if dist.no_logicals else str(dist.value)
    slack_text = "vacuous" if report.slack is None else str(report.slack)
    lines = [f"n={n} k={k} d={d_text} slack={slack_text}"]
    if dist.witness is not None:
        lines.append(f"witness: {format_vector(dist.witness)}")
    lines += [str(v) for v in report.verdicts.values()]
    payload = {
        "n": n,
        "k": k,
        "d": dist.value,
        "slack": report.slack,
        "verdicts": {name: _verdict_json(v) for name, v in report.verdicts.items()},
        "witness": _vec(dist.witness),
    }
    _emit(args, payload, lines)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_erasure(args: argparse.Namespace) -> int:
    code = _load(args.file)
    e = parse_qubit_set(args.set, code.n)
    result = is_correctable(code, e)
    g_e = g(code, e)
    lines = [f"E={e} correctable: {'yes' if result else 'no'} g={g_e}"]
    if result.witness is not None:
        lines.append(f"witness: {format_vector(result.witness)} weight={wt(result.witness)}")
    payload = {"n": code.n, "k": code.k, "set": list(e.members), "correctable": result.correctable,
               "g": g_e, "witness": _vec(result.witness)}
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_gprofile(args: argparse.Namespace) -> int:
    code = _load(args.file)
    n, two_k = code.n, 2 * code.k
    if args.all:
        if n > args.cap:
            raise CapExceeded(f"--all over n={n} qubits exceeds the cap of {args.cap}")
        regions = list(iter_subsets(n))
    else:
        regions = [parse_qubit_set(args.set, n)]
    rows, lines, ok_all = [], [], True
    for m in regions:
        g_m, g_c = g(code, m), g(code, m.complement())
        ok = g_m + g_c == two_k
        ok_all &= ok
        rows.append({"M": list(m.members), "g": g_m, "g_c": g_c, "sum": g_m + g_c, "ok": ok})
        lines.append(f"M={m} g={g_m} g_c={g_c} sum={g_m + g_c} 2k={two_k} {'OK' if ok else 'FAIL'}")
    _emit(args, {"n": n, "k": code.k, "profile": rows, "verdicts": {"cleaning_identity": ok_all}}, lines)
    return EXIT_OK if ok_all else EXIT_FAIL


def cmd_clean(args: argparse.Namespace) -> int:
    code = _load(args.file)
    logical = parse_vector(args.logical, code.p, code.n)
    m = parse_qubit_set(args.erase, code.n)
    try:
        cleaned = clean(code, logical, m)
    except (NotLogical, NotCleanable) as exc:
        kind = type(exc).__name__
        _emit(args, {"n": code.n, "k": code.k, "error": kind, "message": str(exc)}, [f"{kind}: {exc}"])
        return EXIT_FAIL
    s = logical - cleaned
    lines = [f"cleaned: {format_vector(cleaned)}", f"stabilizer: {format_vector(s)}"]
    payload = {"n": code.n, "k": code.k, "erase": list(m.members), "witness": _vec(cleaned),
               "stabilizer": _vec(s)}
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_random(args: argparse.Namespace) -> int:
    cfg = GeneratorConfig(args.p, args.n, args.k, args.seed, args.rounds)
    code = random_code(cfg)
    text = serialize_code(
        code, [f"random code p={cfg.p} n={cfg.n} k={cfg.k} seed={cfg.seed} rounds={cfg.rounds}"]
    )
    payload: dict[str, Any] = {"n": code.n, "k": code.k}
    summary = f"n={code.n} k={code.k}"
    if args.analyze:
        dist = distance(code, max_weight=args.max_weight, budget=args.budget)
        payload["d"] = dist.value
        summary += f" d={dist}"
    if args.out:
        Path(args.out).write_text(text, encoding="ascii", newline="\n")
        payload["path"] = args.out
        _emit(args, payload, [f"wrote {args.out} {summary}"])
    elif args.json:
        payload["code"] = text
        _emit(args, payload, [])
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return EXIT_OK


def _suite(code: StabilizerCode, args: argparse.Namespace, out: list[Verdict]) -> None:
    for v in iter_lemma_checks(code, max_weight=args.max_weight, budget=args.budget, seed=args.seed):
        out.append(v)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.random is None:
        if args.file is None:
            raise CodeFormatError("verify needs a code file or --random COUNT")
        code = _load(args.file)
        verdicts: list[Verdict] = []
        limited = None
        try:
            _suite(code, args, verdicts)
        except ResourceLimit as exc:
            limited = exc
        lines = [str(v) for v in verdicts]
        payload: dict[str, Any] = {
            "n": code.n,
            "k": code.k,
            "verdicts": {v.name: _verdict_json(v) for v in verdicts},
            "passed": limited is None and all(v.passed for v in verdicts),
        }
        if limited is not None:
            lines.append(f"LIMIT distance d>{limited.lower_bound}")
            payload["d_lower_bound"] = limited.lower_bound
        _emit(args, payload, lines)
        if limited is not None:
            return EXIT_LIMIT
        return EXIT_OK if payload["passed"] else EXIT_FAIL

    if args.p is None or args.n is None:
        raise CodeFormatError("--random needs --p and --n")
    failures, checks, limited = [], 0, 0
    for i in range(args.random):
        k = args.k if args.k is not None else i % (args.n + 1)
        cfg = GeneratorConfig(args.p, args.n, k, args.seed + i, args.rounds)
        verdicts = []
        try:
            _suite(random_code(cfg), args, verdicts)
        except ResourceLimit:
            limited += 1
        checks += len(verdicts)
        for v in verdicts:
            if not v.passed:
                failures.append({"seed": cfg.seed, "k": k, **_verdict_json(v), "name": v.name})
    lines = [f"FAIL seed={f['seed']} k={f['k']} {f['name']}" for f in failures]
    status = "all PASS" if not failures else f"{len(failures)} FAIL"
    lines.append(f"{args.random} codes, {checks} checks: {status}")
    if limited:
        lines.append(f"{limited} codes hit the distance budget")
    payload = {"count": args.random, "checks": checks, "failures": failures, "limited": limited,
               "passed": not failures and not limited}
    _emit(args, payload, lines)
    if failures:
        return EXIT_FAIL
    return EXIT_LIMIT if limited else EXIT_OK


# --- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--max-weight", type=int, default=None, metavar="W",
                        help="largest weight tried by the distance search (default n)")
    common.add_argument("--budget", type=int, default=None,
                        help="largest number of supports examined by the distance search")
    common.add_argument("--backend", choices=BACKENDS, default="auto",
                        help="field backend; 'generic' disables the bit-packed p=2 path")

    parser = argparse.ArgumentParser(prog="qsingleton", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="n, k, d and Singleton slack")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("erasure", parents=[common], help="is an erasure correctable")
    p.add_argument("file")
    p.add_argument("--set", required=True, metavar="SPEC")
    p.set_defaults(func=cmd_erasure)

    p = sub.add_parser("gprofile", parents=[common], help="g(M) and g(M^c) per region")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true", help="every subset of the qubits")
    group.add_argument("--set", metavar="SPEC")
    p.add_argument("--cap", type=int, default=GPROFILE_CAP, help="largest n allowed with --all")
    p.set_defaults(func=cmd_gprofile)

    p = sub.add_parser("clean", parents=[common], help="move a logical operator off a region")
    p.add_argument("file")
    p.add_argument("--logical", required=True, metavar="VEC")
    p.add_argument("--erase", required=True, metavar="SPEC")
    p.set_defaults(func=cmd_clean)

    p = sub.add_parser("random", parents=[common], help="write a seeded random code")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rounds", type=int, default=None, help="transvection rounds (default 5n)")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--analyze", action="store_true", help="also compute the distance")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("verify", parents=[common], help="run every lemma check")
    p.add_argument("file", nargs="?")
    p.add_argument("--random", type=int, metavar="COUNT")
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rounds", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with use_backend(args.backend):
            return args.func(args)
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (CodeFormatError, NotIsotropic, NotPrime, InvalidK, CapExceeded, UnknownCode, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QSingletonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
