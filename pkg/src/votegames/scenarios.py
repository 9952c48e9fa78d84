"""Manipulation scenarios layered over a control problem.

A scenario fixes how blank manipulator ballots are quantified around the
chair's move.  In cooperative mode ("M+") some joint manipulator profile may
help the chair, so both the move and the profile are existential.  In the
chair-first competitive mode ("CF") the chair commits to a move knowing which
voters are manipulators but not what they will cast, so the profile is
universal.  In the manipulators-first mode ("MF") every manipulator ballot is
fixed before the chair moves, so the chair may answer each profile with a
different move.  When a partition game grants revoting, manipulators recast
over the finalist set: existentially in cooperative mode, universally in
both competitive modes.

With no manipulators at all every mode collapses to the plain control
question about the chair's move.
"""

from dataclasses import dataclass

from votegames.control import (
    ControlSpec,
    evaluate,
    goal_of,
    is_partition,
    validate_problem,
)
from votegames.core import Election
from votegames.errors import InvalidScenarioError, MalformedInputError

MODES = ("M+", "CF", "MF")
GOALS = ("constructive", "destructive")


@dataclass(frozen=True)
class Scenario:
    """Goal, quantifier mode, and whether partition finalists are revoted."""

    goal: str
    mode: str
    revoting: bool = False

    def __post_init__(self):
        if self.goal not in GOALS:
            raise MalformedInputError(f"unknown goal {self.goal!r}")
        if self.mode not in MODES:
            raise MalformedInputError(f"unknown mode {self.mode!r}")
        if not isinstance(self.revoting, bool):
            raise MalformedInputError("revoting must be a boolean")


@dataclass(frozen=True)
class ProblemInstance:
    """A complete question: election, control resources, and scenario."""

    election: Election
    spec: ControlSpec
    scenario: Scenario

    def __post_init__(self):
        if not isinstance(self.election, Election):
            raise MalformedInputError("election must be an Election")
        if not isinstance(self.spec, ControlSpec):
            raise MalformedInputError("spec must be a ControlSpec")
        if not isinstance(self.scenario, Scenario):
            raise MalformedInputError("scenario must be a Scenario")
        validate_problem(self.spec, self.election)
        if self.scenario.goal != goal_of(self.spec.ctype):
            raise InvalidScenarioError(
                f"goal {self.scenario.goal!r} contradicts control type {self.spec.ctype}"
            )
        if self.scenario.revoting and not is_partition(self.spec.ctype):
            raise InvalidScenarioError("revoting applies to partition control only")


def goal_holds(instance, action, profile, revote=None):
    """Whether one concrete play meets the instance's goal."""
    final = evaluate(
        instance.election.rule, instance.spec, instance.election, action, profile, revote
    )
    if instance.scenario.goal == "constructive":
        return instance.spec.distinguished in final
    return instance.spec.distinguished not in final


def quantifier_prefix(scenario, spec):
    """The quantifier order a scenario imposes, outermost first.

    Each entry pairs "exists" or "forall" with the quantified object:
    the chair's "action", the manipulators' joint "profile", and, when the
    scenario grants it, the final-round "revote".
    """
    if scenario.goal != goal_of(spec.ctype):
        raise InvalidScenarioError(
            f"goal {scenario.goal!r} contradicts control type {spec.ctype}"
        )
    if scenario.revoting and not is_partition(spec.ctype):
        raise InvalidScenarioError("revoting applies to partition control only")
    if scenario.mode == "M+":
        prefix = [("exists", "action"), ("exists", "profile")]
        if scenario.revoting:
            prefix.append(("exists", "revote"))
    elif scenario.mode == "CF":
        prefix = [("exists", "action"), ("forall", "profile")]
        if scenario.revoting:
            prefix.append(("forall", "revote"))
    else:
        prefix = [("forall", "profile"), ("exists", "action")]
        if scenario.revoting:
            prefix.append(("forall", "revote"))
    return tuple(prefix)
