"""Differential campaigns: every direct solver answer checked against the oracle.

A campaign materializes the configured instance space (exhaustively when it
fits under the configured cap, otherwise as a seeded impartial-culture
sample of cap instances), runs every registry-supported case through both
the direct solver and the exhaustive oracle, and reports each disagreement
with the full instance document so it can be replayed.  Reports are plain
data in a fixed key order: two runs with the same config produce identical
reports except for the wall-clock entry under "timings".
"""

import itertools
import random
import time

from votegames.errors import BudgetExceededError, UnsupportedCaseError
from votegames.generate import iter_instances, random_instance
from votegames.instancedoc import instance_to_mapping
from votegames.oracle import required_states, solve_oracle
from votegames.solvers import lookup, solve_direct

REPORT_VERSION = 1


def config_to_mapping(config):
    """Echo a campaign config into report data."""
    return {
        "rules": list(config.rules),
        "control_types": list(config.control_types),
        "modes": list(config.modes),
        "max_candidates": config.max_candidates,
        "max_voters": config.max_voters,
        "max_manipulators": config.max_manipulators,
        "max_weight": config.max_weight,
        "max_fixed": config.max_fixed,
        "seed": config.seed,
        "budget": config.budget,
        "cap": config.cap,
    }


def collect_instances(config):
    """The campaign's instance list and whether it is the whole space."""
    head = list(itertools.islice(iter_instances(config), config.cap + 1))
    if len(head) <= config.cap:
        return head, True
    rng = random.Random(config.seed)
    return [random_instance(config, rng) for _ in range(config.cap)], False


def run_campaign(config):
    """Run one differential campaign and return its report data."""
    started = time.monotonic()
    instances, exhaustive = collect_instances(config)
    checked = skipped_unsupported = skipped_budget = 0
    mismatches = []
    for index, instance in enumerate(instances):
        rule = instance.election.rule
        ctype = instance.spec.ctype
        mode = instance.scenario.mode
        tag, _ = lookup(rule, ctype, mode)
        if tag == "unsupported" or instance.scenario.revoting:
            skipped_unsupported += 1
            continue
        try:
            direct = solve_direct(instance)
        except UnsupportedCaseError:
            skipped_unsupported += 1
            continue
        if required_states(instance) > config.budget:
            skipped_budget += 1
            continue
        try:
            oracle = solve_oracle(instance, max_states=config.budget)
        except BudgetExceededError:
            skipped_budget += 1
            continue
        checked += 1
        if direct.answer is not oracle.answer:
            mismatches.append(
                {
                    "index": index,
                    "system": rule,
                    "control_type": ctype,
                    "mode": mode,
                    "direct": direct.answer,
                    "oracle": oracle.answer,
                    "document": instance_to_mapping(instance),
                }
            )
    return {
        "format_version": REPORT_VERSION,
        "config": config_to_mapping(config),
        "exhaustive": exhaustive,
        "instances": len(instances),
        "checked": checked,
        "skipped_unsupported": skipped_unsupported,
        "skipped_budget": skipped_budget,
        "incomplete": skipped_budget > 0,
        "mismatch_count": len(mismatches),
        "mismatches": mismatches,
        "timings": {"seconds": round(time.monotonic() - started, 3)},
    }


def strip_timings(report):
    """The report without its wall-clock entries, for byte comparisons."""
    return {key: value for key, value in report.items() if key != "timings"}


def report_text(report):
    """A short human-readable campaign summary."""
    lines = [
        "campaign: {} instances ({}), {} checked, {} unsupported, {} over budget".format(
            report["instances"],
            "exhaustive" if report["exhaustive"] else "sampled",
            report["checked"],
            report["skipped_unsupported"],
            report["skipped_budget"],
        ),
        f"mismatches: {report['mismatch_count']}",
    ]
    if report["incomplete"]:
        lines.append("warning: report incomplete, some instances exceeded the budget")
    for miss in report["mismatches"]:
        lines.append(
            "  #{index} {system} {control_type} {mode}: direct={direct} oracle={oracle}".format(
                **miss
            )
        )
    return "\n".join(lines)
