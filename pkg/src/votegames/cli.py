"""Command-line front end: solve, reduce, fuzz, and enumerate.

``solve`` decides one instance document and exits 0 for yes, 1 for no, and
2 on any error, unsupported case, or direct/oracle disagreement.
``reduce`` builds an instance document from a source problem (a quantified
formula, a weight list, or another document) and reports the source truth
when the independent evaluator fits in the budget.  ``fuzz`` runs a
differential campaign and exits 1 if any solver disagrees with the oracle.
``enumerate`` streams the exhaustive instance space for given bounds as one
JSON document per line.
"""

import argparse
import json
import sys
import time

from votegames.control import CONTROL_TYPES, manipulator_slots
from votegames.errors import BudgetExceededError, VoteGamesError
from votegames.formulas import (
    pad_three_block,
    pad_two_block,
    parse_formula,
    parse_sexpr,
    qbf_eval,
    variable_span,
)
from votegames.fuzz import report_text, run_campaign
from votegames.generate import CampaignConfig, iter_instances
from votegames.instancedoc import (
    instance_to_mapping,
    parse_instance,
    serialize_instance,
    witness_to_mapping,
)
from votegames.oracle import DEFAULT_BUDGET, count_profiles, solve_oracle
from votegames.reductions import (
    ManipulationProblem,
    embed_manipulation,
    has_partition,
    pad_zero_manipulators,
    partition_to_borda_ccav_mf,
    qbf2_to_ccpv,
    qbf2_to_nonpartition,
    qbf3_to_ccpv_tp_mf_revoting,
    solve_manipulation,
)
from votegames.scenarios import MODES
from votegames.solvers import solve_direct

# Truth printing for reductions brute-forces the source problem; this caps
# the assignment or subset count it is willing to enumerate.
SOURCE_EVAL_CAP = 1 << 20


def _read_formula(text):
    stripped = text.strip()
    return parse_sexpr(stripped) if stripped.startswith("(") else parse_formula(stripped)


def _parse_blocks(text, arity):
    parts = text.split(",")
    if len(parts) != arity:
        raise VoteGamesError(f"--blocks needs {arity} comma-separated sizes")
    try:
        return tuple(int(part) for part in parts)
    except ValueError as err:
        raise VoteGamesError(f"--blocks must be integers: {text!r}") from err


def _load_instance(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return parse_instance(handle.read())
    except OSError as err:
        raise VoteGamesError(f"cannot read {path}: {err.strerror or err}") from err


def _emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_solve(args):
    instance = _load_instance(args.path)
    payload = {"path": args.path, "method": args.method}
    lines = []
    timings = {}
    direct = oracle = None
    if args.method in ("direct", "both"):
        started = time.monotonic()
        direct = solve_direct(instance)
        timings["direct_seconds"] = round(time.monotonic() - started, 3)
        payload["direct"] = {
            "answer": direct.answer,
            "witness": witness_to_mapping(direct.witness),
        }
        lines.append(f"direct: {'yes' if direct.answer else 'no'}")
    if args.method in ("oracle", "both"):
        started = time.monotonic()
        oracle = solve_oracle(instance, max_states=args.budget)
        timings["oracle_seconds"] = round(time.monotonic() - started, 3)
        payload["oracle"] = {
            "answer": oracle.answer,
            "witness": witness_to_mapping(oracle.witness),
            "states": oracle.states,
        }
        lines.append(f"oracle: {'yes' if oracle.answer else 'no'} ({oracle.states} states)")
    payload["timings"] = timings
    if args.method == "both":
        agreement = direct.answer is oracle.answer
        payload["agreement"] = agreement
        lines.append(f"agreement: {agreement}")
        if not agreement:
            _emit(args, payload, "\n".join(lines))
            print("error: direct solver and oracle disagree", file=sys.stderr)
            return 2
    answer = (direct or oracle).answer
    payload["answer"] = answer
    lines.append(f"answer: {'yes' if answer else 'no'}")
    _emit(args, payload, "\n".join(lines))
    return 0 if answer else 1


def _reduce_qbf2_nonpartition(args):
    formula = _read_formula(args.formula)
    if args.blocks:
        formula, _ = pad_two_block(formula, *_parse_blocks(args.blocks, 2))
    instance = qbf2_to_nonpartition(formula, args.control_type, args.mode)
    source = None
    if 2 ** variable_span(formula) <= SOURCE_EVAL_CAP:
        source = qbf_eval(formula, "EA" if args.mode == "CF" else "AE")
    return instance, source, source, False


def _reduce_qbf2_ccpv(args):
    formula = _read_formula(args.formula)
    if args.blocks:
        formula, _ = pad_two_block(formula, *_parse_blocks(args.blocks, 2))
    instance = qbf2_to_ccpv(formula, args.tie, args.mode)
    source = None
    if 2 ** variable_span(formula) <= SOURCE_EVAL_CAP:
        source = qbf_eval(formula, "EA" if args.mode == "CF" else "AE")
    return instance, source, source, False


def _reduce_qbf3(args):
    formula = _read_formula(args.formula)
    if args.blocks:
        formula, _ = pad_three_block(formula, *_parse_blocks(args.blocks, 3))
    instance = qbf3_to_ccpv_tp_mf_revoting(formula)
    source = None
    if 2 ** variable_span(formula) <= SOURCE_EVAL_CAP:
        source = qbf_eval(formula, "AEA")
    return instance, source, source, False


def _reduce_partition(args):
    weights = tuple(args.weights)
    instance = partition_to_borda_ccav_mf(weights)
    source = None
    image = None
    if 2 ** len(weights) <= SOURCE_EVAL_CAP:
        source = has_partition(weights)
        image = not source
    return instance, source, image, True


def _reduce_inherit_control(args):
    base = _load_instance(args.path)
    instance = pad_zero_manipulators(base, args.mode)
    try:
        source = solve_oracle(base, max_states=args.budget).answer
    except BudgetExceededError:
        source = None
    return instance, source, source, False


def _reduce_inherit_manip(args):
    base = _load_instance(args.path)
    problem = ManipulationProblem(
        base.election, base.spec.distinguished, base.scenario.goal
    )
    instance, complemented = embed_manipulation(problem, args.control_type, args.mode)
    source = image = None
    cost = count_profiles(
        base.election.rule,
        len(base.election.candidates),
        len(manipulator_slots(instance.spec, instance.election)),
    )
    if cost <= SOURCE_EVAL_CAP:
        source = solve_manipulation(problem)
        image = source is not complemented
    return instance, source, image, complemented


def _cmd_reduce(args):
    instance, source, image, complemented = args.builder(args)
    document = serialize_instance(instance)
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(document)
    payload = {
        "kind": args.kind,
        "out": args.out,
        "source_answer": source,
        "image_answer": image,
        "complemented": complemented,
    }
    lines = [f"wrote {args.out}"]
    if source is None:
        lines.append("source answer: not evaluated (over the evaluation cap)")
    else:
        lines.append(f"source answer: {'yes' if source else 'no'}")
        lines.append(f"image answer: {'yes' if image else 'no'}")
    if complemented:
        lines.append("the image answers the complement of the source problem")
    _emit(args, payload, "\n".join(lines))
    return 0


def _campaign_config(args):
    bounds = _parse_blocks(args.bounds, 4)
    return CampaignConfig(
        rules=tuple(args.rules.split(",")),
        control_types=tuple(args.types.split(",")) if args.types else CONTROL_TYPES,
        modes=tuple(args.modes.split(",")) if args.modes else MODES,
        max_candidates=bounds[0],
        max_voters=bounds[1],
        max_manipulators=bounds[2],
        max_weight=bounds[3],
        seed=args.seed,
        budget=args.budget,
        cap=args.cap,
    )


def _cmd_fuzz(args):
    report = run_campaign(_campaign_config(args))
    rendered = (
        json.dumps(report, indent=2) if args.format == "json" else report_text(report)
    )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(json.dumps(report, indent=2) + "\n")
    print(rendered)
    return 1 if report["mismatch_count"] else 0


def _cmd_enumerate(args):
    config = _campaign_config(args)
    emitted = 0
    for instance in iter_instances(config):
        if args.limit is not None and emitted >= args.limit:
            break
        print(json.dumps(instance_to_mapping(instance)))
        emitted += 1
    return 0


def _add_campaign_flags(parser):
    parser.add_argument(
        "--rules", default="plurality", help="comma-separated voting systems"
    )
    parser.add_argument(
        "--types", default="", help="comma-separated control types (default: all)"
    )
    parser.add_argument(
        "--modes", default="", help="comma-separated scenario modes (default: all)"
    )
    parser.add_argument(
        "--bounds",
        default="3,3,2,1",
        help="max candidates,voters,manipulators,weight (comma-separated)",
    )
    parser.add_argument("--seed", type=int, default=0, help="random seed")
    parser.add_argument(
        "--budget", type=int, default=DEFAULT_BUDGET, help="oracle state budget"
    )
    parser.add_argument(
        "--cap",
        type=int,
        default=20000,
        help="instance cap: exhaustive below it, seeded sample of this size above",
    )


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="votegames",
        description="decide, construct, and differential-test election control instances",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="decide one instance document")
    solve.add_argument("path", help="instance document to decide")
    solve.add_argument(
        "--method", choices=("direct", "oracle", "both"), default="both"
    )
    solve.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    solve.add_argument("--format", choices=("text", "json"), default="text")
    solve.set_defaults(handler=_cmd_solve)

    reduce_cmd = sub.add_parser("reduce", help="build an instance from a source problem")
    kinds = reduce_cmd.add_subparsers(dest="kind", required=True)

    qbf2 = kinds.add_parser("qbf2-nonpartition", help="two-block formula to add/delete control")
    qbf2.add_argument("control_type", choices=(
        "CCAC", "DCAC", "CCDC", "DCDC", "CCAV", "DCAV", "CCDV", "DCDV"
    ))
    qbf2.add_argument("mode", choices=("CF", "MF"))
    qbf2.add_argument("formula", help="formula text, s-expression or wire form")
    qbf2.set_defaults(builder=_reduce_qbf2_nonpartition)

    ccpv = kinds.add_parser("qbf2-ccpv", help="two-block formula to voter-partition control")
    ccpv.add_argument("tie", choices=("TE", "TP"))
    ccpv.add_argument("mode", choices=("CF", "MF"))
    ccpv.add_argument("formula", help="formula text, s-expression or wire form")
    ccpv.set_defaults(builder=_reduce_qbf2_ccpv)

    qbf3 = kinds.add_parser("qbf3-revoting", help="three-block formula to revoting partition control")
    qbf3.add_argument("formula", help="formula text, s-expression or wire form")
    qbf3.set_defaults(builder=_reduce_qbf3)

    part = kinds.add_parser("partition-borda", help="weight list to Borda voter-adding control")
    part.add_argument("weights", type=int, nargs="+", help="positive integer weights")
    part.set_defaults(builder=_reduce_partition)

    inh_c = kinds.add_parser("inherit-control", help="re-pose a manipulator-free document in a mode")
    inh_c.add_argument("path", help="source instance document")
    inh_c.add_argument("mode", choices=("M+", "CF", "MF"))
    inh_c.set_defaults(builder=_reduce_inherit_control)

    inh_m = kinds.add_parser("inherit-manip", help="embed a manipulation question into control")
    inh_m.add_argument("path", help="document providing election, candidate, and goal")
    inh_m.add_argument("control_type", choices=(
        "CCAC", "DCAC", "CCDC", "DCDC", "CCAV", "DCAV", "CCDV", "DCDV"
    ))
    inh_m.add_argument("mode", choices=("M+", "CF", "MF"))
    inh_m.set_defaults(builder=_reduce_inherit_manip)

    for kind_parser in (qbf2, ccpv, qbf3):
        kind_parser.add_argument(
            "--blocks", default="", help="unpadded block sizes, comma-separated"
        )
    for kind_parser in (qbf2, ccpv, qbf3, part, inh_c, inh_m):
        kind_parser.add_argument("--out", required=True, help="output document path")
        kind_parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        kind_parser.add_argument("--format", choices=("text", "json"), default="text")
        kind_parser.set_defaults(handler=_cmd_reduce)

    fuzz = sub.add_parser("fuzz", help="run a differential campaign")
    _add_campaign_flags(fuzz)
    fuzz.add_argument("--format", choices=("text", "json"), default="text")
    fuzz.add_argument("--out", default="", help="also write the JSON report here")
    fuzz.set_defaults(handler=_cmd_fuzz)

    enum = sub.add_parser("enumerate", help="stream the exhaustive instance space")
    _add_campaign_flags(enum)
    enum.add_argument("--limit", type=int, default=None, help="stop after this many")
    enum.set_defaults(handler=_cmd_enumerate)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except VoteGamesError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
