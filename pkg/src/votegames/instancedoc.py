"""Versioned JSON documents for problem instances and witnesses.

A document carries one complete control-with-manipulators question: the
voting system, the candidate roster, the distinguished candidate, the
chair's control type and resources, the scenario, and the voter list.
Parsing is strict: unknown keys are rejected, and every error message names
the JSON path it complains about.  Serialization is canonical (fixed key
order, two-space indent, sorted approval ballots), so equal instances
produce byte-identical documents and every document survives a
parse/serialize round trip.
"""

import json

from votegames.control import ControlAction, ControlSpec, action_kind
from votegames.core import ALL_RULES, Election, Voter, ballot_kind
from votegames.errors import MalformedInputError
from votegames.scenarios import ProblemInstance, Scenario

FORMAT_VERSION = 1

_TOP_KEYS = (
    "format_version",
    "system",
    "candidates",
    "distinguished",
    "control",
    "scenario",
    "voters",
)
_CONTROL_KEYS = ("type", "limit", "unregistered_voters", "spoiler_candidates")
_SCENARIO_KEYS = ("goal", "mode", "revoting")
_VOTER_KEYS = ("ballot", "weight", "registered", "manipulator")


def _fail(path, message):
    raise MalformedInputError(f"{path}: {message}")


def _mapping(value, path, allowed):
    if not isinstance(value, dict):
        _fail(path, "expected an object")
    unknown = sorted(set(value) - set(allowed))
    if unknown:
        _fail(path, f"unknown fields {unknown}")
    return value


def _field(mapping, key, path, default=_fail):
    if key in mapping:
        return mapping[key]
    if default is _fail:
        _fail(path, f"missing required field {key!r}")
    return default


def _parse_ballot(raw, kind, path):
    if raw is None:
        return None
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        _fail(path, "a ballot is null or a list of candidate names")
    if len(set(raw)) != len(raw):
        _fail(path, "a ballot may not repeat a candidate")
    return frozenset(raw) if kind == "approval" else tuple(raw)


def _parse_voter(raw, kind, path, pool):
    data = _mapping(raw, path, _VOTER_KEYS)
    ballot = _parse_ballot(_field(data, "ballot", path), kind, f"{path}.ballot")
    weight = _field(data, "weight", path, 1)
    registered = _field(data, "registered", path, not pool)
    manipulator = _field(data, "manipulator", path, False)
    if not isinstance(registered, bool):
        _fail(f"{path}.registered", "expected a boolean")
    if not isinstance(manipulator, bool):
        _fail(f"{path}.manipulator", "expected a boolean")
    try:
        return Voter(
            ballot=ballot, weight=weight, registered=registered, manipulator=manipulator
        )
    except MalformedInputError as err:
        _fail(path, str(err))


def _parse_names(raw, path):
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        _fail(path, "expected a list of candidate names")
    return tuple(raw)


def instance_from_mapping(data):
    """Build a validated problem instance from decoded document data."""
    top = _mapping(data, "$", _TOP_KEYS)
    version = _field(top, "format_version", "$")
    if version != FORMAT_VERSION:
        _fail("$.format_version", f"this reader handles version {FORMAT_VERSION}, got {version!r}")
    system = _field(top, "system", "$")
    if system not in ALL_RULES:
        _fail("$.system", f"unknown voting system {system!r}")
    kind = ballot_kind(system)
    candidates = _parse_names(_field(top, "candidates", "$"), "$.candidates")
    distinguished = _field(top, "distinguished", "$")

    control = _mapping(_field(top, "control", "$"), "$.control", _CONTROL_KEYS)
    ctype = _field(control, "type", "$.control")
    limit = _field(control, "limit", "$.control", None)
    raw_pool = _field(control, "unregistered_voters", "$.control", [])
    if not isinstance(raw_pool, list):
        _fail("$.control.unregistered_voters", "expected a list of voters")
    pool = tuple(
        _parse_voter(raw, kind, f"$.control.unregistered_voters[{i}]", pool=True)
        for i, raw in enumerate(raw_pool)
    )
    spoilers = _parse_names(
        _field(control, "spoiler_candidates", "$.control", []),
        "$.control.spoiler_candidates",
    )

    scenario = _mapping(_field(top, "scenario", "$"), "$.scenario", _SCENARIO_KEYS)
    goal = _field(scenario, "goal", "$.scenario")
    mode = _field(scenario, "mode", "$.scenario")
    revoting = _field(scenario, "revoting", "$.scenario")

    raw_voters = _field(top, "voters", "$")
    if not isinstance(raw_voters, list):
        _fail("$.voters", "expected a list of voters")
    voters = tuple(
        _parse_voter(raw, kind, f"$.voters[{i}]", pool=False)
        for i, raw in enumerate(raw_voters)
    )

    try:
        election = Election(candidates, voters, system)
        spec = ControlSpec(
            ctype, distinguished, limit=limit, unregistered=pool, spoilers=spoilers
        )
        scen = Scenario(goal, mode, revoting)
        return ProblemInstance(election, spec, scen)
    except MalformedInputError as err:
        _fail("$", str(err))


def parse_instance(text):
    """Parse one JSON instance document into a validated problem instance."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise MalformedInputError(
            f"line {err.lineno} column {err.colno}: {err.msg}"
        ) from err
    return instance_from_mapping(data)


def ballot_to_jsonable(ballot):
    """Render one ballot for a document: null, a ranking, or a sorted set."""
    if ballot is None:
        return None
    if isinstance(ballot, frozenset):
        return sorted(ballot)
    return list(ballot)


def _voter_to_mapping(voter):
    return {
        "ballot": ballot_to_jsonable(voter.ballot),
        "weight": voter.weight,
        "registered": voter.registered,
        "manipulator": voter.manipulator,
    }


def instance_to_mapping(instance):
    """Decompose a problem instance into plain document data."""
    spec = instance.spec
    control = {"type": spec.ctype}
    if spec.limit is not None:
        control["limit"] = spec.limit
    if spec.unregistered:
        control["unregistered_voters"] = [_voter_to_mapping(v) for v in spec.unregistered]
    if spec.spoilers:
        control["spoiler_candidates"] = list(spec.spoilers)
    return {
        "format_version": FORMAT_VERSION,
        "system": instance.election.rule,
        "candidates": list(instance.election.candidates),
        "distinguished": spec.distinguished,
        "control": control,
        "scenario": {
            "goal": instance.scenario.goal,
            "mode": instance.scenario.mode,
            "revoting": instance.scenario.revoting,
        },
        "voters": [_voter_to_mapping(v) for v in instance.election.voters],
    }


def serialize_instance(instance):
    """Canonical document text for an instance; ends with a newline."""
    return json.dumps(instance_to_mapping(instance), indent=2) + "\n"


def action_to_mapping(action):
    """Render a chair move for a report."""
    if action is None:
        return None
    return {"kind": action.kind, "selection": list(action.selection)}


def action_from_mapping(data, path="$.action"):
    """Rebuild a chair move from report data."""
    if data is None:
        return None
    payload = _mapping(data, path, ("kind", "selection"))
    selection = _field(payload, "selection", path)
    if not isinstance(selection, list):
        _fail(f"{path}.selection", "expected a list")
    try:
        return ControlAction(_field(payload, "kind", path), tuple(selection))
    except MalformedInputError as err:
        _fail(path, str(err))


def witness_to_mapping(witness):
    """Render an oracle or solver witness for a report."""
    if witness is None:
        return None
    data = {}
    if witness.action is not None:
        data["action"] = action_to_mapping(witness.action)
    if witness.profile is not None:
        data["profile"] = [ballot_to_jsonable(b) for b in witness.profile]
    if witness.revote is not None:
        data["revote"] = [ballot_to_jsonable(b) for b in witness.revote]
    return data
