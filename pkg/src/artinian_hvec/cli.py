"""Command-line front end: ``artinian-hvec <command> ...``.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success, 1 a sweep
or certification found a mismatch, 2 invalid input, 3 infeasible pair,
4 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable

from artinian_hvec import __version__
from artinian_hvec.core.binom import expand, macaulay_growth, macaulay_lower
from artinian_hvec.core.bounds import (
    bound_profile,
    fl_bound,
    generalized_compressed_exists,
    recursive_bound,
    symmetric_upper_bound,
)
from artinian_hvec.core.engine import CheckEngine
from artinian_hvec.core.errors import (
    BudgetExceededError,
    HVecError,
    InfeasiblePairError,
    InvalidInputError,
)
from artinian_hvec.core.exporters import certification_sweep, existence_sweep, export_table
from artinian_hvec.core.gorenstein import enumerate_gorenstein3
from artinian_hvec.core.inverse import (
    add_generators,
    hvector_of,
    load_system,
    random_forms,
    socle_of,
)
from artinian_hvec.core.maxima import (
    existence_branch,
    existence_maximum,
    many_maxima_family,
    non_existence_witnesses,
    relative_maxima,
    verify_many_maxima,
)
from artinian_hvec.core.models import (
    HVector,
    PairRS,
    SocleVector,
    TwoEntrySocle,
)
from artinian_hvec.core.settings import Settings, load_settings

_log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_BUDGET = 4

_UNBOUNDED = {"inf", "∞", "*", "none"}


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------


def _emit_report(
    command: str,
    inputs: dict[str, Any],
    outputs: dict[str, Any],
    provenance: dict[str, str],
) -> None:
    report = {
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "provenance": provenance,
        "version": __version__,
    }
    print(json.dumps(report, sort_keys=True, ensure_ascii=False))


def _parse_caps(text: str) -> list[int | None]:
    stripped = text.strip()
    if len(stripped) < 2 or stripped[0] != "(" or stripped[-1] != ")":
        raise InvalidInputError(f"caps must be written as (a,b,...): {text!r}")
    caps: list[int | None] = []
    for part in stripped[1:-1].split(","):
        token = part.strip()
        if token.lower() in _UNBOUNDED:
            caps.append(None)
            continue
        try:
            caps.append(int(token))
        except ValueError:
            raise InvalidInputError(f"cap entries must be integers or 'inf': {text!r}") from None
    return caps


def _pair(args: argparse.Namespace) -> PairRS:
    return PairRS(r=args.r, socle=SocleVector.parse(args.socle))


def _two_entry(args: argparse.Namespace) -> TwoEntrySocle:
    return TwoEntrySocle(p=args.p, s_p=args.sp, e=args.e)


def _budget(args: argparse.Namespace, settings: Settings) -> int:
    budget = getattr(args, "budget", None)
    return budget if budget is not None else settings.max_socle_degree


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_expand(args: argparse.Namespace, settings: Settings) -> int:
    exp = expand(args.n, args.i)
    if args.json:
        _emit_report(
            "expand",
            {"n": args.n, "i": args.i},
            {"terms": [list(t) for t in exp.terms], "text": str(exp)},
            {"terms": "greedy i-binomial expansion"},
        )
    else:
        print(exp)
    return EXIT_OK


def cmd_growth(args: argparse.Namespace, settings: Settings) -> int:
    value = macaulay_growth(args.h, args.d)
    if args.json:
        _emit_report(
            "growth", {"h": args.h, "d": args.d}, {"growth": value}, {"growth": "macaulay growth"}
        )
    else:
        print(value)
    return EXIT_OK


def cmd_lower(args: argparse.Namespace, settings: Settings) -> int:
    value = macaulay_lower(args.a, args.b)
    if args.json:
        _emit_report(
            "lower",
            {"a": args.a, "b": args.b},
            {"lower": value},
            {"lower": "bigatti-geramita lower bound"},
        )
    else:
        print(value)
    return EXIT_OK


def cmd_bound(args: argparse.Namespace, settings: Settings) -> int:
    pair = _pair(args)
    inputs = {**pair.to_dict(), "kind": args.kind}
    if args.kind == "symmetric":
        two = pair.socle.two_entry()
        if two is None:
            raise InvalidInputError("the symmetric bound needs a socle (s_p at p, s_e = 1)")
        result = symmetric_upper_bound(pair.r, two.p, two.s_p, two.e)
        if args.json:
            _emit_report(
                "bound",
                inputs,
                {"bound": result.hvector.to_list(), "known_admissible": result.known_admissible},
                {"bound": "generalized compressed: symmetric tail"},
            )
        else:
            print(result.hvector)
            print(f"known_admissible={str(result.known_admissible).lower()}")
        return EXIT_OK

    vector = fl_bound(pair) if args.kind == "fl" else recursive_bound(pair)
    profile = bound_profile(pair)
    if args.json:
        outputs = {"bound": vector.to_list(), "profile": profile.to_dict()}
        source = "froberg-laksov bound" if args.kind == "fl" else "recursive socle bound"
        _emit_report("bound", inputs, outputs, {"bound": source})
    else:
        print(vector)
        print(
            f"b={profile.b} c={profile.c} t={profile.t} "
            f"coincide={str(profile.coincide).lower()}"
        )
    return EXIT_OK


def cmd_check(args: argparse.Namespace, settings: Settings) -> int:
    h = HVector.parse(args.vector)
    result = CheckEngine().run(h, settings)
    if args.json:
        _emit_report(
            "check",
            {"hvector": h.to_list()},
            {
                "findings": [f.to_dict() for f in result.findings],
                "failures": [
                    {"check_id": f.check_id, "message": f.exception_message}
                    for f in result.failures
                ],
            },
            {"gorenstein.stanley": "stanley characterization"},
        )
        return EXIT_OK
    for finding in result.findings:
        print(f"{finding.check_id:<24} {finding.status.value:<13} {finding.message}")
    for failure in result.failures:
        print(f"{failure.check_id}: check raised: {failure.exception_message}", file=sys.stderr)
    return EXIT_OK


def cmd_gorenstein(args: argparse.Namespace, settings: Settings) -> int:
    caps = _parse_caps(args.caps) if args.caps else None
    for h in enumerate_gorenstein3(args.e, caps):
        print(json.dumps(h.to_list()) if args.json else h)
    return EXIT_OK


def cmd_maxima(args: argparse.Namespace, settings: Settings) -> int:
    ts = _two_entry(args)
    report = relative_maxima(ts, budget=_budget(args, settings))
    if args.json:
        _emit_report(
            "maxima",
            ts.to_dict(),
            report.to_dict(),
            {"maxima": "tail-candidate family (heuristic prefix)"},
        )
        return EXIT_OK
    print(f"unique={str(report.unique).lower()}")
    for h in report.maxima:
        print(h)
    print(f"candidates examined: {report.candidates_examined}", file=sys.stderr)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace, settings: Settings) -> int:
    ts = _two_entry(args)
    branch = existence_branch(ts)
    verdict = "exists" if branch.exists else "does-not-exist"
    maximum = existence_maximum(ts) if branch.exists else None
    if args.json:
        _emit_report(
            "classify",
            ts.to_dict(),
            {
                "exists": branch.exists,
                "branch": branch.value,
                "maximum": maximum.to_list() if maximum is not None else None,
            },
            {"exists": "closed-form existence classifier", "maximum": "closed-form maximum"},
        )
    else:
        print(f"{verdict} ({branch.value})")
        if maximum is not None:
            print(maximum)
    return EXIT_OK


def cmd_family(args: argparse.Namespace, settings: Settings) -> int:
    family = many_maxima_family(args.n)
    verified = verify_many_maxima(args.n, budget=_budget(args, settings)) if args.verify else None
    if args.json:
        outputs = family.to_dict()
        if verified is not None:
            outputs["verified"] = verified
        _emit_report(
            "family", {"n": args.n}, outputs, {"predicted": "many-maxima family construction"}
        )
        return EXIT_OK
    ts = family.socle
    print(f"socle (p={ts.p},s_p={ts.s_p},e={ts.e}) {ts.socle_vector()}")
    for h in family.predicted:
        print(h)
    if verified is not None:
        print(f"verified={str(verified).lower()}")
        return EXIT_OK if verified else EXIT_MISMATCH
    return EXIT_OK


def cmd_witnesses(args: argparse.Namespace, settings: Settings) -> int:
    pair = non_existence_witnesses(_two_entry(args))
    if args.json:
        _emit_report(
            "witnesses",
            _two_entry(args).to_dict(),
            pair.to_dict(),
            {"h": "non-existence witness", "h_prime": "non-existence witness"},
        )
        return EXIT_OK
    print(pair.h)
    print(pair.h_prime)
    q = "-" if pair.q is None else pair.q
    print(f"slope={pair.slope} q={q}")
    return EXIT_OK


def cmd_exists(args: argparse.Namespace, settings: Settings) -> int:
    pair = _pair(args)
    answer = generalized_compressed_exists(pair)
    verdict = {True: "exists", False: "does-not-exist", None: "undetermined"}[answer]
    if args.json:
        _emit_report(
            "exists",
            pair.to_dict(),
            {"exists": answer},
            {"exists": "sufficient existence criteria"},
        )
    else:
        print(verdict)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, settings: Settings) -> int:
    system = load_system(Path(args.file), r=args.r)
    if args.add_count:
        if args.add_degree is None:
            raise InvalidInputError("--add-count needs --add-degree")
        extra = random_forms(
            system.r, args.add_degree, args.add_count, args.seed, settings.coefficient_bound
        )
        system = add_generators(system, extra)
    h = hvector_of(system)
    socle = socle_of(system) if args.socle else None
    if args.json:
        outputs: dict[str, Any] = {"hvector": h.to_list(), "r": system.r}
        if socle is not None:
            outputs["socle"] = socle.to_list()
        inputs = {
            "file": str(args.file),
            "add_degree": args.add_degree,
            "add_count": args.add_count,
            "seed": args.seed,
        }
        _emit_report("oracle", inputs, outputs, {"hvector": "oracle rank"})
        return EXIT_OK
    print(h)
    if socle is not None:
        print(socle)
    return EXIT_OK


def _finish_table(df, args: argparse.Namespace, ok_column: str) -> int:
    if args.output:
        export_table(df, Path(args.output), bom=args.bom)
        print(f"{len(df)} rows written to {args.output}", file=sys.stderr)
    else:
        print(df.to_string(index=False))
    ok = bool(df[ok_column].all()) if len(df) else True
    if not ok:
        print(f"{int((~df[ok_column]).sum())} rows failed", file=sys.stderr)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    budget = args.budget if args.budget is not None else max(settings.max_socle_degree, args.max_e)
    df = existence_sweep(args.max_e, budget=budget)
    return _finish_table(df, args, "agrees")


def cmd_certify(args: argparse.Namespace, settings: Settings) -> int:
    df = certification_sweep(
        args.r,
        args.max_e,
        seed=args.seed,
        bound=settings.coefficient_bound,
        attempts=settings.reseed_attempts,
    )
    return _finish_table(df, args, "passed")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    common.add_argument("--config", type=Path, default=None, help="YAML overlay for the defaults")

    parser = argparse.ArgumentParser(
        prog="artinian-hvec",
        description="h-vectors and socle-vectors of standard graded artinian algebras",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable[..., int], help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("expand", cmd_expand, "i-binomial expansion of n")
    p.add_argument("n", type=int)
    p.add_argument("i", type=int)

    p = add("growth", cmd_growth, "Macaulay growth of h in degree d")
    p.add_argument("h", type=int)
    p.add_argument("d", type=int)

    p = add("lower", cmd_lower, "smallest s whose growth reaches a in degree b")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)

    p = add("bound", cmd_bound, "upper bound for the pair (r, s)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--socle", required=True, help='socle-vector, e.g. "(0,0,0,3,0,0,0,0,1)"')
    p.add_argument(
        "--kind", choices=["fl", "recursive", "zanello", "symmetric"], default="recursive"
    )

    p = add("check", cmd_check, "run every enabled check on an h-vector")
    p.add_argument("vector", help='h-vector, e.g. "(1,3,6,7,8,7,6,3,1)"')

    p = add("gorenstein", cmd_gorenstein, "enumerate Gorenstein h-vectors with h_1 <= 3")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--caps", default=None, help='per-degree caps, "inf" for none')

    for name, func, help_text in (
        ("maxima", cmd_maxima, "relative maxima for a two-entry socle"),
        ("classify", cmd_classify, "closed-form existence of the unique maximum"),
        ("witnesses", cmd_witnesses, "two incomparable admissible vectors"),
    ):
        p = add(name, func, help_text)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--sp", type=int, required=True)
        p.add_argument("--e", type=int, required=True)
        if name == "maxima":
            p.add_argument("--budget", type=int, default=None)

    p = add("family", cmd_family, "socle with at least n relative maxima")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="enumerate and check the prediction")
    p.add_argument("--budget", type=int, default=None)

    p = add("exists", cmd_exists, "known sufficient conditions for a unique maximum")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--socle", required=True)

    p = add("oracle", cmd_oracle, "h-vector of an inverse system read from a file")
    p.add_argument("--file", required=True)
    p.add_argument("--r", type=int, default=None, help="declared number of variables")
    p.add_argument("--socle", action="store_true", help="also print the socle-vector")
    p.add_argument("--add-degree", type=int, default=None)
    p.add_argument("--add-count", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)

    p = add("sweep", cmd_sweep, "classifier against relative maxima for all e <= E")
    p.add_argument("--max-e", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--output", default=None, help="write .csv or .xlsx instead of printing")
    p.add_argument("--bom", action="store_true", help="start a CSV output with a UTF-8 BOM")

    p = add("certify", cmd_certify, "oracle certification of generalized compressed vectors")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-e", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default=None, help="write .csv or .xlsx instead of printing")
    p.add_argument("--bom", action="store_true", help="start a CSV output with a UTF-8 BOM")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad arguments and 0 on --help / --version
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        settings = load_settings(args.config)
        return args.func(args, settings)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InfeasiblePairError as exc:
        print(f"infeasible pair: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except HVecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
