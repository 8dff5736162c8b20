"""Command-line front end.

Reads JSON inputs, dispatches to the library, and prints deterministic
reports: JSON by default (exact rational strings only), or a
human-readable table in which decimal columns are explicitly
approximate.  Every domain error maps to a documented exit code.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import analyses, dispositions, scoring
from .errors import (
    AlgebraMismatch,
    AxiomViolation,
    CapExceeded,
    CatalogMismatch,
    CatalogTooSmall,
    DegeneratePrior,
    DegenerateUtilities,
    EmptyMatchWithMatchingDefendant,
    ForeignTestimony,
    JuryBayesError,
    NonpositiveRatio,
    NotExpressible,
    NotIndependent,
    OutOfRange,
    ParseError,
    ThetaOutOfRange,
    UndefinedRatio,
    ZeroConditioningEvent,
    ZeroTranscriptMass,
)
from .rationals import approx_decimal, as_rational, format_rational
from .serialize import (
    certificate_to_jsonable,
    charge_document_from_jsonable,
    charge_to_jsonable,
    disposition_from_jsonable,
    event_from_spec,
    require_same_catalog,
    transcript_labels_list,
)
from .worlds import Guilt, TestimonyCatalog, event_of_transcript, is_expressible

WORLD_CAP_ENV = "JURYBAYES_WORLD_CAP"

#: Documented exit codes; 0 is success, 1 an unclassified domain error.
EXIT_CODES: dict[type, int] = {
    AxiomViolation: 2,
    ParseError: 3,
    CatalogMismatch: 4,
    NotIndependent: 5,
    CapExceeded: 10,
    ForeignTestimony: 11,
    NotExpressible: 12,
    ZeroConditioningEvent: 13,
    AlgebraMismatch: 14,
    OutOfRange: 15,
    DegeneratePrior: 16,
    ThetaOutOfRange: 17,
    ZeroTranscriptMass: 18,
    DegenerateUtilities: 19,
    NonpositiveRatio: 20,
    UndefinedRatio: 21,
    CatalogTooSmall: 22,
    EmptyMatchWithMatchingDefendant: 23,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = args.handler(args)
        print(render(doc, args.format))
        if getattr(args, "out", None):
            try:
                with open(args.out, "w", encoding="utf-8") as handle:
                    handle.write(render(doc.get("charge", doc), "json") + "\n")
            except OSError as exc:
                raise ParseError(f"cannot write {args.out}: {exc}") from exc
    except JuryBayesError as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return EXIT_CODES.get(type(exc), 1)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jurybayes",
        description=(
            "Exact-rational juror models: rationalize verdict dispositions, "
            "verify threshold behaviour, extend charges to prescribed "
            "conditionals, and reproduce the classic odds and threshold numbers."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("json", "table"), default="json",
            help="output format (default json)",
        )
        p.add_argument(
            "--world-cap", type=int, default=None,
            help=f"override the world-space cap (also {WORLD_CAP_ENV})",
        )

    p = sub.add_parser("rationalize", help="build a certificate prior for a disposition file")
    p.add_argument("disposition_file")
    p.add_argument("--theta", required=True, help="threshold in (1/2, 1), e.g. 3/4")
    p.add_argument("--out", help="also write the certificate JSON to this file")
    add_common(p)
    p.set_defaults(handler=cmd_rationalize)

    p = sub.add_parser("verify", help="check a charge against a disposition's threshold behaviour")
    p.add_argument("disposition_file")
    p.add_argument("charge_file", help="a charge document or a certificate (its prior is used)")
    p.add_argument("--theta", required=True)
    add_common(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("extend", help="adjoin an event with a prescribed conditional value")
    p.add_argument("charge_file")
    p.add_argument("--event", required=True, help="existing event, e.g. 'guilt'")
    p.add_argument("--given", required=True, help="event to adjoin, e.g. 'heard:t1' or a JSON world-key array")
    p.add_argument("--target", required=True, help="conditional value in [0, 1]")
    p.add_argument("--out", help="also write the extended charge JSON to this file")
    add_common(p)
    p.set_defaults(handler=cmd_extend)

    p = sub.add_parser("threshold", help="belief or verdict-utility threshold")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--weights", nargs=2, metavar=("R", "W"),
                       help="reward and penalty, threshold W/(R+W)")
    group.add_argument("--quadruple", nargs=4,
                       metavar=("CONVICT_GUILTY", "CONVICT_INNOCENT", "ACQUIT_GUILTY", "ACQUIT_INNOCENT"),
                       help="four-outcome utilities")
    add_common(p)
    p.set_defaults(handler=cmd_threshold)

    p = sub.add_parser("odds", help="posterior odds from prior odds and a likelihood ratio")
    p.add_argument("--prior", required=True, help="odds a:b, e.g. 1:2")
    p.add_argument("--lr", required=True, help="likelihood ratio, e.g. 8")
    add_common(p)
    p.set_defaults(handler=cmd_odds)

    p = sub.add_parser("rate", help="testimony count needed under a posterior-ratio bound")
    p.add_argument("--gamma", required=True, help="ratio slack, bound is 1+gamma")
    p.add_argument("--theta", required=True, help="verdict threshold in (0, 1)")
    p.add_argument(
        "--build", action="store_true",
        help="construct the convicting prior and emit its exact posterior trail",
    )
    add_common(p)
    p.set_defaults(handler=cmd_rate)

    p = sub.add_parser("scenario", help="regenerate a worked example")
    p.add_argument("name", choices=("spann", "two-witness", "posner"))
    add_common(p)
    p.set_defaults(handler=cmd_scenario)

    return parser


# ---------------------------------------------------------------------------
# Handlers.  Each returns a JSON-able dict with exact rational strings.


def cmd_rationalize(args: argparse.Namespace) -> dict[str, Any]:
    disposition = disposition_from_jsonable(
        load_json(args.disposition_file), world_cap=world_cap(args)
    )
    certificate = dispositions.rationalize(disposition, parse_cli_rational(args.theta, "--theta"))
    return certificate_to_jsonable(certificate)


def cmd_verify(args: argparse.Namespace) -> dict[str, Any]:
    disposition = disposition_from_jsonable(
        load_json(args.disposition_file), world_cap=world_cap(args)
    )
    charge_catalog, charge = charge_document_from_jsonable(
        load_json(args.charge_file), world_cap=world_cap(args)
    )
    require_same_catalog(disposition.catalog, charge_catalog)
    result = dispositions.verify_rationalization(
        disposition, parse_cli_rational(args.theta, "--theta"), charge
    )
    doc: dict[str, Any] = {
        "theta": args.theta,
        "holds": result.ok,
        "witness": None,
    }
    if result.witness is not None:
        doc["witness"] = transcript_labels_list(disposition.catalog, result.witness)
        doc["witness_posterior"] = format_rational(result.posteriors[result.witness])
    return doc


def cmd_extend(args: argparse.Namespace) -> dict[str, Any]:
    catalog, charge = charge_document_from_jsonable(
        load_json(args.charge_file), world_cap=world_cap(args)
    )
    event = event_from_spec(catalog, args.event)
    given = event_from_spec(catalog, args.given)
    target = parse_cli_rational(args.target, "--target")
    extended = charge.extend_conditional(event, given, target)
    achieved = extended.conditional(event, given)
    return {
        "event": args.event,
        "given": args.given,
        "target": format_rational(target),
        "achieved": format_rational(achieved.value),
        "given_mass": format_rational(achieved.conditioning_mass),
        "charge": charge_to_jsonable(catalog, extended),
    }


def cmd_threshold(args: argparse.Namespace) -> dict[str, Any]:
    if args.weights is not None:
        reward, penalty = (parse_cli_rational(v, "--weights") for v in args.weights)
        try:
            weights = scoring.ScoreWeights(reward, penalty)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        return {
            "kind": "belief-weights",
            "reward": format_rational(weights.reward),
            "penalty": format_rational(weights.penalty),
            "threshold": format_rational(weights.belief_threshold),
        }
    values = [parse_cli_rational(v, "--quadruple") for v in args.quadruple]
    quadruple = scoring.UtilityQuadruple(*values)
    threshold = scoring.verdict_threshold(quadruple)
    comparison = ">=" if quadruple.threshold_denominator > 0 else "<="
    return {
        "kind": "verdict-utilities",
        "utilities": {
            "convict_guilty": format_rational(quadruple.convict_guilty),
            "convict_innocent": format_rational(quadruple.convict_innocent),
            "acquit_guilty": format_rational(quadruple.acquit_guilty),
            "acquit_innocent": format_rational(quadruple.acquit_innocent),
        },
        "threshold": format_rational(threshold),
        "convict_when": f"P(guilt) {comparison} {format_rational(threshold)}",
    }


def cmd_odds(args: argparse.Namespace) -> dict[str, Any]:
    try:
        prior = analyses.Odds.parse(args.prior)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    ratio = parse_cli_rational(args.lr, "--lr")
    posterior = analyses.posterior_odds(prior, ratio)
    return {
        "prior": prior.display(),
        "likelihood_ratio": format_rational(ratio),
        "posterior": posterior.display(),
        "posterior_probability": format_rational(posterior.probability),
    }


def cmd_rate(args: argparse.Namespace) -> dict[str, Any]:
    try:
        config = analyses.RateBoundConfig(
            parse_cli_rational(args.gamma, "--gamma"),
            parse_cli_rational(args.theta, "--theta"),
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    bound = analyses.min_convicting_testimony_count(config)
    doc: dict[str, Any] = {
        "gamma": format_rational(config.gamma),
        "theta": format_rational(config.theta),
        "steps": bound.steps,
        "log_bound_approx": bound.log_bound,
        "poi_violated": bound.poi_violated,
    }
    if args.build:
        cat = TestimonyCatalog(
            tuple(f"t{i}" for i in range(bound.steps)), world_cap=world_cap(args)
        )
        built = analyses.build_ratio_bounded_convicting_prior(cat, config)
        doc["posterior_trail"] = [format_rational(p) for p in built.posteriors]
        doc["ratio_window"] = [
            format_rational(1 / (1 + config.gamma)),
            format_rational(1 + config.gamma),
        ]
        doc["within_bound"] = built.within_bound()
        doc["convicts"] = built.convicts()
    return doc


def cmd_scenario(args: argparse.Namespace) -> dict[str, Any]:
    if args.name == "spann":
        return scenario_spann()
    if args.name == "two-witness":
        return scenario_two_witness(world_cap(args))
    return scenario_posner(world_cap(args))


def scenario_spann() -> dict[str, Any]:
    space = analyses.build_spann_space()
    return {
        "scenario": "spann",
        "size": len(space.ground),
        "paternity_size": len(space.paternity),
        "paternity_prior": format_rational(space.charge.measure(space.paternity)),
        "alibi_size": len(space.alibi_example),
        "alibi_expressible": is_expressible(space.alibi_example, space.algebra),
    }


def scenario_two_witness(cap: int | None) -> dict[str, Any]:
    catalog = TestimonyCatalog(("w1", "w2", "w3", "w4"), world_cap=cap)
    disposition = dispositions.Disposition(
        catalog, (t for t in catalog.all_transcripts() if len(t) >= 2)
    )
    theta = Fraction(3, 4)
    certificate = dispositions.rationalize(disposition, theta)
    verified = dispositions.verify_rationalization(disposition, theta, certificate.prior)
    return {
        "scenario": "two-witness",
        "catalog": list(catalog.labels),
        "rule": "convict iff at least two witnesses testify",
        "theta": format_rational(theta),
        "rationalizable": bool(verified),
        "guilt_prior": format_rational(
            dispositions.guilt_prior(certificate.prior, catalog)
        ),
        "open_door": dispositions.is_open_door(certificate.prior),
        "convicting_posterior": format_rational(theta),
        "acquitting_posterior": format_rational(1 - theta),
    }


def scenario_posner(cap: int | None) -> dict[str, Any]:
    catalog = TestimonyCatalog(("t1", "t2"), world_cap=cap)
    theta = Fraction(3, 4)
    prior = dispositions.posner_even_odds_prior(catalog, theta)
    rows = []
    worst: Fraction | None = None
    for transcript in catalog.all_transcripts():
        if len(transcript) == 0:
            continue
        transcript_event = event_of_transcript(catalog, transcript)
        posterior = prior.conditional(
            frozenset(w for w in transcript_event if w.guilt is Guilt.GUILTY),
            transcript_event,
        ).value
        worst = posterior if worst is None else min(worst, posterior)
        rows.append(
            {
                "transcript": transcript_labels_list(catalog, transcript),
                "posterior": format_rational(posterior),
            }
        )
    return {
        "scenario": "posner",
        "catalog": list(catalog.labels),
        "theta": format_rational(theta),
        "guilt_prior": format_rational(dispositions.guilt_prior(prior, catalog)),
        "min_nonempty_posterior": format_rational(worst if worst is not None else Fraction(0)),
        "nonempty_posteriors": rows,
    }


# ---------------------------------------------------------------------------
# Plumbing.


def world_cap(args: argparse.Namespace) -> int | None:
    if args.world_cap is not None:
        return args.world_cap
    env = os.environ.get(WORLD_CAP_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ParseError(f"{WORLD_CAP_ENV} must be an integer, got {env!r}") from exc
    return None


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def parse_cli_rational(text: str, flag: str) -> Fraction:
    try:
        return as_rational(text, name=flag)
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc)) from exc


def render(doc: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2)
    return render_table(doc)


_RATIONAL_STRING = re.compile(r"-?\d+/\d+")


def render_table(doc: dict[str, Any], indent: str = "") -> str:
    lines: list[str] = []
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(render_table(value, indent + "  "))
        elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{indent}{key}:")
            columns = list(value[0].keys())
            rows = [[_table_cell(v.get(c)) for c in columns] for v in value]
            widths = [
                max(len(col), *(len(r[i]) for r in rows)) for i, col in enumerate(columns)
            ]
            header = "  ".join(col.ljust(w) for col, w in zip(columns, widths))
            lines.append(f"{indent}  {header}")
            for row in rows:
                lines.append(
                    f"{indent}  " + "  ".join(c.ljust(w) for c, w in zip(row, widths))
                )
        else:
            lines.append(f"{indent}{key}: {_table_cell(value)}")
    return "\n".join(lines)


def _table_cell(value: Any) -> str:
    if isinstance(value, str) and _RATIONAL_STRING.fullmatch(value):
        return f"{value} (~{approx_decimal(Fraction(value))})"
    if isinstance(value, list):
        return "{" + ",".join(str(v) for v in value) + "}"
    if value is None:
        return "-"
    return str(value)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
