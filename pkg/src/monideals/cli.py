"""Command-line interface.

Every invocation terminates with one of five exit codes:

    0  success / property holds
    1  property refuted (the report carries the witness)
    2  hypothesis not met (a non-result, distinct from refutation)
    3  input error (parse failure, domain error, bad options)
    4  budget exceeded

Reports print to stdout as tab-delimited text by default or JSON with
``--json``; wall-clock timing goes to stderr so identical inputs always
produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
import time

from .arith import power
from .core import (
    BudgetExceededError,
    ContextMismatchError,
    DomainError,
    HypothesisNotMetError,
    MonomialPrime,
    TheoremViolationError,
)
from .decomp import (
    DEFAULT_BOX_BUDGET,
    associated_primes,
    embedded_primes,
    height,
    irreducible_decomposition,
    is_unmixed,
    minimal_primes,
    witness_for,
)
from .docparse import DocumentError, parse_ideal_document
from .instances import random_ideal
from .properties import (
    DEFAULT_MAX_POWER,
    PowerCache,
    STATUS_FAILS,
    corner_elements,
    has_persistence_up_to,
    has_strong_persistence_up_to,
    has_symbolic_strong_persistence_up_to,
    is_ntf_up_to,
)
from .structure import beta1, is_konig, is_t_spread, max_disjoint_generators, symbolic_power
from . import report as rp
from .report import RunReport
from .verify import SUITES, reproduce_fixed_suite, run_suite, sweep_oracle_agreement

IDEAL_COMMANDS = (
    "ass", "min", "embedded", "decompose", "height", "unmixed", "beta1",
    "konig", "symbolic", "ntf", "persistence", "strong-persistence",
    "symbolic-sp", "corners", "witness", "tspread",
)
PROPERTY_COMMANDS = ("ntf", "persistence", "strong-persistence", "symbolic-sp")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monideals",
        description="Exact computations with monomial ideals: decompositions, "
        "associated primes, and bounded power-property checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--text", action="store_true", help="emit delimited text (default)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized work")
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help="cell budget for box searches (default %(default)s; env MONIDEALS_BUDGET)",
    )
    common.add_argument("--figure", default=None, metavar="PATH",
                        help="also render a matplotlib figure to PATH")

    def ideal_cmd(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("file", help="ideal document (use - for stdin)")
        p.add_argument("name", nargs="?", default=None,
                       help="binding to operate on (default: last ideal bound)")
        return p

    ideal_cmd("ass", "associated primes")
    ideal_cmd("min", "minimal primes")
    ideal_cmd("embedded", "embedded primes")
    ideal_cmd("decompose", "irreducible decomposition")
    ideal_cmd("height", "height of the ideal")
    ideal_cmd("unmixed", "equal-height test on the associated primes")
    ideal_cmd("beta1", "maximum pairwise-coprime generator set")
    ideal_cmd("konig", "disjoint-generator count against the height")

    p = ideal_cmd("symbolic", "symbolic power")
    p.add_argument("--power", type=int, default=2, help="symbolic power k (default 2)")

    for name, help_text in (
        ("ntf", "normally-torsion-free sweep up to a power bound"),
        ("persistence", "Ass inclusion into the next power"),
        ("strong-persistence", "colon identity (I^(k+1) : I) = I^k"),
        ("symbolic-sp", "symbolic strong persistence identity"),
    ):
        p = ideal_cmd(name, help_text)
        p.add_argument("--max-power", type=int, default=DEFAULT_MAX_POWER,
                       help="largest power checked (default %(default)s)")

    p = ideal_cmd("corners", "corner elements of a power")
    p.add_argument("--power", type=int, default=1, help="power t (default 1)")

    p = ideal_cmd("witness", "search a witness monomial for a prime")
    p.add_argument("--power", type=int, default=1, help="power t (default 1)")
    p.add_argument("--prime", required=True,
                   help="comma-separated variables, e.g. x1,x2")

    p = ideal_cmd("tspread", "spread-gap recognition")
    p.add_argument("--power", type=int, default=2,
                   help="minimum index gap t (default 2)")

    p = sub.add_parser("verify", parents=[common], help="run one theorem suite")
    p.add_argument("suite", choices=sorted(SUITES), metavar="SUITE",
                   help="one of: " + ", ".join(sorted(SUITES)))
    p.add_argument("--count", type=int, default=100, help="instances (default 100)")
    p.add_argument("--max-power", type=int, default=None, help="power bound override")

    sub.add_parser("reproduce-paper", parents=[common],
                   help="run the fixed showcase suite against embedded goldens")

    p = sub.add_parser("random-sweep", parents=[common],
                       help="cross-check decomposition against witness enumeration")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--nvars", type=int, default=5)
    p.add_argument("--ngens", type=int, default=5)
    p.add_argument("--maxdeg", type=int, default=2)
    p.add_argument("--max-power", type=int, default=2)
    p.add_argument("--squarefree", action="store_true",
                   help="draw square-free instances")
    p.add_argument("--show", action="store_true",
                   help="print one sample instance and exit")

    return parser


def _load_ideal(args):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    doc = parse_ideal_document(text)
    name = args.name or doc.last_ideal_name()
    return doc, name, doc.ideal(name)


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("MONIDEALS_BUDGET")
    return int(env) if env else DEFAULT_BOX_BUDGET


def _options_json(args) -> dict:
    out = {}
    for key in ("seed", "count", "nvars", "ngens", "maxdeg", "max_power", "power",
                "prime", "suite", "squarefree"):
        if hasattr(args, key) and getattr(args, key) is not None:
            out[key] = getattr(args, key)
    return out


def dispatch(args) -> tuple[RunReport, list[str], list | None]:
    """Run one command; returns (report, text lines, figure outcomes or None)."""
    command = args.command
    figure_data = None

    if command in IDEAL_COMMANDS:
        doc, name, I = _load_ideal(args)
        digest = f"sha256:{doc.digest}"
        lines: list[str] = []
        results: dict = {}
        status, exit_code = rp.STATUS_OK, 0

        if command in ("ass", "min", "embedded"):
            fn = {"ass": associated_primes, "min": minimal_primes,
                  "embedded": embedded_primes}[command]
            primes = fn(I)
            results = {"primes": rp.primes_json(primes)}
            from .core import sorted_primes

            lines = [f"prime\t{p}" for p in sorted_primes(primes)]
            if not primes:
                lines = ["prime\t(none)"]
        elif command == "decompose":
            d = irreducible_decomposition(I)
            results = {"components": rp.decomposition_json(d)}
            lines = [f"component\t{c}" for c in d.components]
        elif command == "height":
            h = height(I)
            results = {"height": h}
            lines = [f"height\t{h}"]
        elif command == "unmixed":
            u = is_unmixed(I)
            results = {"unmixed": u}
            lines = [f"unmixed\t{str(u).lower()}"]
        elif command == "beta1":
            size, witness = beta1(I)
            results = {"beta1": size, "witness": [str(g) for g in witness]}
            lines = [f"beta1\t{size}"] + [f"witness\t{g}" for g in witness]
        elif command == "konig":
            disjoint = max_disjoint_generators(I)
            h = height(I)
            konig = disjoint == h
            results = {"konig": konig, "max_disjoint": disjoint, "height": h}
            lines = [f"konig\t{str(konig).lower()}",
                     f"max_disjoint\t{disjoint}", f"height\t{h}"]
        elif command == "symbolic":
            S = symbolic_power(I, args.power)
            results = {"power": args.power, "generators": rp.ideal_json(S)}
            lines = [f"generator\t{g}" for g in S.gens]
        elif command in PROPERTY_COMMANDS:
            T = args.max_power
            cache = PowerCache(I)
            if command == "ntf":
                verdict = is_ntf_up_to(I, T, cache)
            elif command == "persistence":
                verdict = has_persistence_up_to(I, T, cache)
            elif command == "strong-persistence":
                verdict = has_strong_persistence_up_to(I, T, cache)
            else:
                verdict = has_symbolic_strong_persistence_up_to(I, T)
            snapshots = cache.snapshots(T)
            results = {
                "verdict": rp.verdict_json(verdict),
                "snapshots": rp.snapshots_json(snapshots),
            }
            lines = [f"property\t{verdict.property}", f"status\t{verdict.status}",
                     f"bound\t{verdict.bound}"]
            if verdict.status == STATUS_FAILS:
                status, exit_code = rp.STATUS_REFUTED, 1
                if verdict.fail_prime is not None:
                    lines.append(f"fail_power\t{verdict.fail_power}")
                    lines.append(f"fail_prime\t{verdict.fail_prime}")
                if verdict.fail_monomial is not None:
                    lines.append(f"fail_power\t{verdict.fail_power}")
                    lines.append(f"fail_monomial\t{verdict.fail_monomial}")
            if verdict.certificate:
                lines.append(f"certificate\t{verdict.certificate}")
            figure_data = ("profile", snapshots, f"{name}: Ass per power")
        elif command == "corners":
            cs = corner_elements(I, args.power, budget=_budget(args))
            results = rp.corners_json(cs)
            lines = [f"corner\t{z}" for z in cs.corners] or ["corner\t(none)"]
        elif command == "witness":
            vars_ = [v.strip() for v in args.prime.split(",") if v.strip()]
            prime = MonomialPrime(
                I.ring, frozenset(I.ring.index(v) for v in vars_)
            )
            w = witness_for(I, args.power, prime, budget=_budget(args))
            results = {
                "power": args.power,
                "prime": rp.prime_json(prime),
                "witness": None if w is None else str(w.witness),
            }
            lines = [f"witness\t{'(absent)' if w is None else w.witness}"]
        elif command == "tspread":
            holds = is_t_spread(I, args.power)
            results = {"gap": args.power, "holds": holds}
            lines = [f"tspread\t{str(holds).lower()}"]

        report = RunReport(command, name, _options_json(args), digest,
                           results, status, exit_code)
        return report, lines, figure_data

    if command == "verify":
        result = run_suite(args.suite, seed=args.seed, count=args.count,
                           max_power=args.max_power)
        ok = result.clean
        report = RunReport(
            "verify", args.suite, _options_json(args),
            _digest_of(f"verify:{args.suite}:{args.seed}:{args.count}"),
            rp.sweep_json(result),
            rp.STATUS_OK if ok else rp.STATUS_REFUTED,
            0 if ok else 1,
        )
        lines = [f"suite\t{result.suite}", f"instances\t{result.instances}",
                 f"checked\t{result.checked}", f"skipped\t{result.skipped}",
                 f"violations\t{len(result.violations)}"]
        lines += [f"violation\t{v}" for v in result.violations]
        figure_data = ("summary",
                       [(result.suite, ok)],
                       f"verify {args.suite}")
        return report, lines, figure_data

    if command == "reproduce-paper":
        checks = reproduce_fixed_suite()
        ok = all(c.passed for c in checks)
        report = RunReport(
            "reproduce-paper", None, _options_json(args),
            _digest_of("reproduce-paper"),
            {"checks": rp.check_records_json(checks)},
            rp.STATUS_OK if ok else rp.STATUS_REFUTED,
            0 if ok else 1,
        )
        lines = []
        for c in checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"check\t{c.name}\t{mark}")
            if not c.passed:
                lines.append(f"expected\t{c.name}\t{c.expected}")
                lines.append(f"actual\t{c.name}\t{c.actual}")
        figure_data = ("summary", [(c.name, c.passed) for c in checks],
                       "fixed showcase suite")
        return report, lines, figure_data

    if command == "random-sweep":
        if args.show:
            I = random_ideal(args.seed, args.nvars, args.ngens, args.maxdeg,
                             args.squarefree)
            report = RunReport(
                "random-sweep", None, _options_json(args),
                _digest_of(f"random:{args.seed}"),
                {"sample": rp.ideal_json(I)}, rp.STATUS_OK, 0,
            )
            return report, [f"sample\t{I}"], None
        result = sweep_oracle_agreement(
            seed=args.seed, count=args.count, nvars=args.nvars,
            ngens=args.ngens, maxdeg=args.maxdeg,
            powers=tuple(range(1, args.max_power + 1)), budget=_budget(args),
        )
        ok = result.clean
        report = RunReport(
            "random-sweep", None, _options_json(args),
            _digest_of(f"sweep:{args.seed}:{args.count}"),
            rp.sweep_json(result),
            rp.STATUS_OK if ok else rp.STATUS_REFUTED,
            0 if ok else 1,
        )
        lines = [f"instances\t{result.instances}", f"checked\t{result.checked}",
                 f"violations\t{len(result.violations)}"]
        lines += [f"violation\t{v}" for v in result.violations]
        return report, lines, None

    raise DomainError(f"unknown command {command!r}")


def _digest_of(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        report, lines, figure_data = dispatch(args)
    except DocumentError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, ContextMismatchError, FileNotFoundError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 4
    except HypothesisNotMetError as exc:
        print(f"hypothesis not met: {exc}", file=sys.stderr)
        return 2
    except TheoremViolationError as exc:
        print(f"refuted: {exc}", file=sys.stderr)
        return 1

    if args.figure and figure_data is not None:
        from . import figures

        kind, payload, title = figure_data
        if kind == "profile":
            figures.render_power_profile(payload, args.figure, title)
        else:
            figures.render_outcome_summary(payload, args.figure, title)

    if args.json:
        sys.stdout.write(report.to_json())
    else:
        for line in lines:
            print(line)
        print(f"status\t{report.status}")
    print(f"# elapsed {time.monotonic() - started:.3f}s", file=sys.stderr)
    return report.exit_code


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
