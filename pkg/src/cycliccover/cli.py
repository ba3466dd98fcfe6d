"""Command-line front end.

Commands: sigma-table, verify-lemma, criteria, examples, local-model.
Exit codes: 0 success, 1 claim/lemma failure, 2 usage or parse error,
3 search budget exhausted.  All output is byte-deterministic for fixed
arguments; the structured-records format emits one JSON object per line.
The environment variable CYCLICCOVER_BUDGET overrides the default search
budget for the lemma commands.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import catalog as _catalog
from . import lemmas
from .combinatorics import sigma_table
from .engine import (
    CoveringScenario,
    PositivityProfile,
    explain_requirement,
    max_guaranteed_jet_order,
    max_guaranteed_very_order,
)
from .errors import ResourceBudgetError
from .localmodel import (
    case3_construct,
    run_case2_trial,
    vandermonde_residual,
    vandermonde_solve,
)
from .series import TruncatedSeries

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CONFIG_SCHEMA_VERSION = 1


class ConfigError(ValueError):
    pass


# -- sigma-table -------------------------------------------------------------


def render_sigma_table(table, fmt: str) -> str:
    ks = list(range(table.k_max + 1))
    rows = []
    for q in table.rows():
        cells = ["" if (q, k) not in table.entries else str(table.entries[(q, k)])
                 for k in ks]
        rows.append((f"L-{q}M", cells))

    if fmt == "csv":
        lines = ["q\\k," + ",".join(str(k) for k in ks)]
        for label, cells in rows:
            lines.append(label + "," + ",".join(cells))
        return "\n".join(lines)

    if fmt == "markdown":
        header = "| k | " + " | ".join(str(k) for k in ks) + " |"
        sep = "|---" * (len(ks) + 1) + "|"
        lines = [header, sep]
        for label, cells in rows:
            lines.append("| " + label + " | " + " | ".join(cells) + " |")
        return "\n".join(lines)

    if fmt == "plain":
        width = max(4, len(str(table.k_max)) + 1)
        header = "q\\k".ljust(8) + "".join(str(k).rjust(width) for k in ks)
        lines = [header]
        for label, cells in rows:
            lines.append(label.ljust(8) + "".join(c.rjust(width) for c in cells))
        return "\n".join(lines)

    if fmt == "structured-records":
        lines = []
        for q in table.rows():
            for k in ks:
                if (q, k) in table.entries:
                    lines.append(json.dumps(
                        {"d": table.d, "q": q, "k": k,
                         "sigma": table.entries[(q, k)]}, sort_keys=True))
        return "\n".join(lines)

    raise ConfigError(f"unknown format {fmt!r}")


def _cmd_sigma_table(args) -> int:
    try:
        table = sigma_table(args.d, args.kmax)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render_sigma_table(table, args.format))
    return EXIT_OK


# -- verify-lemma --------------------------------------------------------------


def _budget(args) -> int:
    env = os.environ.get("CYCLICCOVER_BUDGET")
    if args.budget is not None:
        return args.budget
    if env is not None:
        return int(env)
    return lemmas.DEFAULT_TUPLE_BUDGET


def _cmd_verify_lemma(args) -> int:
    try:
        if args.lemma == "alg":
            report = lemmas.check_lemma_alg(args.k, args.ell, budget=_budget(args))
        else:
            report = lemmas.check_lemma_num(
                args.max_m, args.max_K, args.max_ell, args.max_q,
                budget=_budget(args))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceBudgetError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        if exc.partial_report is not None:
            _emit_report(exc.partial_report, args.format)
        return EXIT_BUDGET
    _emit_report(report, args.format)
    return EXIT_OK if report.passed else EXIT_FAILURE


def _emit_report(report, fmt: str) -> None:
    if fmt == "structured-records":
        print(json.dumps(report.to_record(), sort_keys=True))
    else:
        print(report.to_text())


# -- criteria ------------------------------------------------------------------


def load_scenario_config(path: str) -> CoveringScenario:
    """Strict JSON scenario config: unknown keys and non-integers rejected."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config root must be an object")
    allowed = {"schema", "label", "d", "branched", "profile"}
    unknown = set(raw) - allowed
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if raw.get("schema") != CONFIG_SCHEMA_VERSION:
        raise ConfigError(
            f"config field 'schema' must be {CONFIG_SCHEMA_VERSION}")
    d = _require_int(raw, "d")
    branched = raw.get("branched", True)
    if not isinstance(branched, bool):
        raise ConfigError("config field 'branched' must be true or false")
    label = raw.get("label", "")
    if not isinstance(label, str):
        raise ConfigError("config field 'label' must be a string")
    profile_raw = raw.get("profile")
    if not isinstance(profile_raw, dict):
        raise ConfigError("config field 'profile' must be an object")
    entries = {}
    for key, val in profile_raw.items():
        try:
            q = int(key)
        except ValueError:
            raise ConfigError(f"profile key {key!r} is not an integer") from None
        if not isinstance(val, dict) or set(val) - {"jet", "very"}:
            raise ConfigError(
                f"profile entry {key!r} must be an object with keys jet/very")
        entries[q] = (_require_int(val, "jet", default=-1),
                      _require_int(val, "very", default=-1))
    try:
        return CoveringScenario(
            d=d, branched=branched,
            profile=PositivityProfile(entries, label=label), label=label)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _require_int(obj: dict, key: str, default=None) -> int:
    if key not in obj:
        if default is not None:
            return default
        raise ConfigError(f"missing config field {key!r}")
    val = obj[key]
    if isinstance(val, bool) or not isinstance(val, int):
        raise ConfigError(f"config field {key!r} must be an integer")
    return val


def _cmd_criteria(args) -> int:
    try:
        scenario = load_scenario_config(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    verdicts = {
        "jet": max_guaranteed_jet_order(scenario),
        "very": max_guaranteed_very_order(scenario),
    }
    if args.format == "structured-records":
        for kind, verdict in verdicts.items():
            print(json.dumps({"label": scenario.label, "d": scenario.d,
                              "branched": scenario.branched}
                             | verdict.to_record(), sort_keys=True))
        return EXIT_OK
    print(f"scenario: {scenario.label or args.config} "
          f"(d={scenario.d}, {'branched' if scenario.branched else 'unbranched'})")
    for kind, verdict in verdicts.items():
        print(f"{kind}: k_star = {verdict.k_star}")
        for w in verdict.warnings:
            print(f"  warning: {w}")
        for k in (verdict.k_star, verdict.k_star + 1):
            if k < 0:
                continue
            checks = explain_requirement(kind, k, scenario)
            status = "ok" if all(c.satisfied for c in checks) else "fails"
            print(f"  k={k} ({status}): " + "  ".join(
                f"q={c.q} need {c.required} have {c.available}"
                f"{'' if c.satisfied else ' <-'}" for c in checks))
    return EXIT_OK


# -- examples ---------------------------------------------------------------


def _cmd_examples(args) -> int:
    entries = _catalog.default_catalog()
    if args.only is not None:
        entries = [e for e in entries if e.id == args.only]
        if not entries:
            known = ", ".join(e.id for e in _catalog.default_catalog())
            print(f"error: unknown entry {args.only!r}; known: {known}",
                  file=sys.stderr)
            return EXIT_USAGE
    any_failure = False
    for entry in entries:
        results = _catalog.evaluate_entry(entry)
        if args.format == "structured-records":
            for res in results:
                print(json.dumps({"entry": entry.id} | res.to_record(),
                                 sort_keys=True))
        else:
            print(f"[{entry.id}] {entry.description}")
            for res in results:
                informational = res.claim.provenance == "informational"
                status = "PASS" if res.holds else (
                    "INFO(not met)" if informational else "FAIL")
                print(f"  {res.claim.kind} k_star={res.k_star} "
                      f"{res.claim.comparison} {res.claim.value}: {status}"
                      + (f"  ({res.claim.note})" if res.claim.note else ""))
            for note in entry.notes:
                print(f"  note: {note}")
        for res in results:
            if not res.holds and res.claim.provenance != "informational":
                any_failure = True
    return EXIT_FAILURE if any_failure else EXIT_OK


# -- local-model ----------------------------------------------------------------


def _cmd_local_model(args) -> int:
    rng = random.Random(args.seed)
    any_failure = False

    # Vandermonde residual sweep for the requested degree.
    for l in range(1, args.d + 1):
        betas = list(range(1, l))
        alphas = vandermonde_solve(args.d, betas)
        residuals = vandermonde_residual(args.d, betas, alphas)
        ok = all(r.is_zero() for r in residuals)
        any_failure |= not ok
        print(json.dumps({
            "check": "vandermonde", "d": args.d, "betas": betas,
            "alphas": [str(a) for a in alphas],
            "residual_zero": ok}, sort_keys=True))

    # Randomized fiber-separation trials.
    for _ in range(args.trials):
        transcript = run_case2_trial(rng, max_d=args.d)
        any_failure |= not transcript["prescriptions_met"]
        print(json.dumps({"check": "case2"} | transcript, sort_keys=True))

    # Ramified splitting round trip on a sample jet.
    variables = ("u1", "u2")
    jet = TruncatedSeries(variables, args.d + 2, {
        (args.d - 1, 1): Fraction(1), (1, 0): Fraction(2)})
    construction = case3_construct(args.d, jet, args.d + 2)
    ok = construction.reassembled() == construction.jet
    any_failure |= not ok
    obstructions = construction.obstructions(
        [args.d - 1 - q for q in range(args.d)])
    print(json.dumps({
        "check": "case3", "d": args.d, "round_trip": ok,
        "component_orders": list(construction.component_orders),
        "obstructions": [[o.q, o.needed_order, o.available_order]
                         for o in obstructions]}, sort_keys=True))
    return EXIT_FAILURE if any_failure else EXIT_OK


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycliccover",
        description="positivity criteria for pullbacks along cyclic coverings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma-table", help="tabulate sigma(k, d, q)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--format", default="plain",
                   choices=["plain", "markdown", "csv", "structured-records"])
    p.set_defaults(func=_cmd_sigma_table)

    p = sub.add_parser("verify-lemma", help="brute-force a lemma over a box")
    p.add_argument("lemma", choices=["alg", "num"])
    p.add_argument("--k", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--max-m", type=int, dest="max_m", default=4)
    p.add_argument("--max-K", type=int, dest="max_K", default=10)
    p.add_argument("--max-ell", type=int, dest="max_ell", default=6)
    p.add_argument("--max-q", type=int, dest="max_q", default=5)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--format", default="plain",
                   choices=["plain", "structured-records"])
    p.set_defaults(func=_cmd_verify_lemma)

    p = sub.add_parser("criteria", help="evaluate a scenario config file")
    p.add_argument("--config", required=True)
    p.add_argument("--format", default="plain",
                   choices=["plain", "structured-records"])
    p.set_defaults(func=_cmd_criteria)

    p = sub.add_parser("examples", help="run the catalog regression suite")
    p.add_argument("--only", default=None)
    p.add_argument("--format", default="plain",
                   choices=["plain", "structured-records"])
    p.set_defaults(func=_cmd_examples)

    p = sub.add_parser("local-model", help="exact construction transcripts")
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_local_model)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify-lemma" and args.lemma == "alg":
        if args.k is None or args.ell is None:
            parser.error("verify-lemma alg requires --k and --ell")
    try:
        return args.func(args)
    except ResourceBudgetError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
