"""Dispatch table from (rule, control type, scenario mode) to direct solvers.

Every entry carries a complexity tag.  "polynomial" entries run closed-form
or greedy procedures; "np-search" entries enumerate chair actions but verify
each in polynomial time.  Queries for anything else report "unsupported" so
callers can fall back to the exhaustive oracle.  Revoting variants have no
direct procedures at all.
"""

from votegames.control import ControlSpec, goal_of
from votegames.core import STANDARD_RULES
from votegames.errors import MalformedInputError, UnsupportedCaseError
from votegames.scenarios import MODES, ProblemInstance, Scenario
from votegames.solvers import approval as _approval
from votegames.solvers import condorcet as _condorcet
from votegames.solvers import plurality as _plurality
from votegames.solvers import weighted as _weighted

REGISTRY = {}
for (_ctype, _mode), _fn in _plurality.CASES.items():
    REGISTRY[("plurality", _ctype, _mode)] = ("polynomial", _fn)
for (_ctype, _mode), _fn in _approval.CASES.items():
    REGISTRY[("approval", _ctype, _mode)] = ("polynomial", _fn)
for (_ctype, _mode), _fn in _condorcet.CASES.items():
    REGISTRY[("condorcet", _ctype, _mode)] = ("polynomial", _fn)
for (_ctype, _mode), _fn in _weighted.VETO_CASES.items():
    REGISTRY[("veto", _ctype, _mode)] = ("polynomial", _fn)
for (_ctype, _mode), _fn in _weighted.BORDA_CASES.items():
    REGISTRY[("borda", _ctype, _mode)] = ("np-search", _fn)


def lookup(rule, ctype, mode):
    """The (tag, solver) entry for this case; ("unsupported", None) if absent."""
    return REGISTRY.get((rule, ctype, mode), ("unsupported", None))


def solve_direct(instance):
    """Answer via the registered direct solver, with witness when one exists.

    Raises UnsupportedCaseError when no direct procedure covers the case
    (including every revoting variant); callers then fall back to the oracle.
    """
    scenario = instance.scenario
    if scenario.revoting:
        raise UnsupportedCaseError("revoting variants have no direct solver")
    rule = instance.election.rule
    ctype = instance.spec.ctype
    tag, fn = lookup(rule, ctype, scenario.mode)
    if fn is None:
        raise UnsupportedCaseError(f"no direct solver for {rule} {ctype} {scenario.mode}")
    return fn(instance)


def _rule_entry(instance, rule):
    if instance.election.rule != rule:
        raise MalformedInputError(f"this entry point expects a {rule} election")
    return solve_direct(instance).answer


def solve_plurality(instance):
    return _rule_entry(instance, "plurality")


def solve_approval(instance):
    return _rule_entry(instance, "approval")


def solve_condorcet(instance):
    return _rule_entry(instance, "condorcet")


def solve_veto3w(instance):
    return _rule_entry(instance, "veto")


def solve_borda3w_cf(instance):
    return _rule_entry(instance, "borda")


def base_control(rule, ctype, election, p, limit=None, pool=(), spoilers=()):
    """Manipulator-free control decision through the registered solvers.

    With nobody left to out-guess, the three scenario modes coincide, so this
    runs whichever mode the registry covers for the case.  Partition types
    take no resource argument: the chair's choice of partition is what the
    decision quantifies over.
    """
    if rule not in STANDARD_RULES:
        raise MalformedInputError(f"base control is defined for {STANDARD_RULES}")
    if any(v.manipulator for v in election.voters) or any(
        v.manipulator for v in pool
    ):
        raise MalformedInputError("base control is the zero-manipulator question")
    spec = ControlSpec(
        ctype, p, limit=limit, unregistered=tuple(pool), spoilers=tuple(spoilers)
    )
    mode = next(
        (mode for mode in MODES if (rule, ctype, mode) in REGISTRY), None
    )
    if mode is None:
        raise UnsupportedCaseError(f"no registered solver covers {rule} {ctype}")
    scenario = Scenario(goal_of(ctype), mode)
    instance = ProblemInstance(election, spec, scenario)
    return solve_direct(instance).answer
