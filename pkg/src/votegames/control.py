"""Chair control moves and one- or two-round election evaluation.

A control problem fixes a registered election, a distinguished candidate, and
one of twenty control types: add/delete voters or candidates under a move
limit, or partition voters or candidates (plain or runoff) under a
ties-eliminate or ties-promote promotion rule.  This module knows which chair
moves are legal, enumerates and counts them, and plays out a chosen move
against concrete manipulator ballots, including the optional final-round
revote that partition games allow.

Two-round mechanics: partition-of-voters runs (C, V1) and (C, V2); partition
of candidates runs (C1, V) with C2 seeded straight into the final; runoff
partition runs (C1, V) and (C2, V).  Promoted candidates contest a final with
the full voter list, ballots projected onto the finalists (rankings by
erasure, approval sets by intersection).  Under ties-eliminate a subelection
promotes only a unique winner; under ties-promote every winner moves on.
"""

import itertools
import math
from dataclasses import dataclass, replace

from votegames.core import Voter, ballot_kind, validate_name, winners
from votegames.errors import (
    InvalidScenarioError,
    MalformedInputError,
    UnresolvedManipulatorError,
)

CONTROL_TYPES = (
    "CCAV", "DCAV", "CCDV", "DCDV", "CCAC", "DCAC", "CCDC", "DCDC",
    "CCPV-TE", "CCPV-TP", "DCPV-TE", "DCPV-TP",
    "CCPC-TE", "CCPC-TP", "DCPC-TE", "DCPC-TP",
    "CCRPC-TE", "CCRPC-TP", "DCRPC-TE", "DCRPC-TP",
)

LIMITED_KINDS = ("AV", "DV", "AC", "DC")
PARTITION_KINDS = ("PV", "PC", "RPC")


def goal_of(ctype):
    """"constructive" for CC types, "destructive" for DC types."""
    if ctype not in CONTROL_TYPES:
        raise MalformedInputError(f"unknown control type {ctype!r}")
    return "constructive" if ctype.startswith("CC") else "destructive"


def action_kind(ctype):
    """The move family: AV, DV, AC, DC, PV, PC, or RPC."""
    if ctype not in CONTROL_TYPES:
        raise MalformedInputError(f"unknown control type {ctype!r}")
    return ctype[2:].split("-")[0]


def tie_rule(ctype):
    """"TE" or "TP" for partition types, None otherwise."""
    if ctype not in CONTROL_TYPES:
        raise MalformedInputError(f"unknown control type {ctype!r}")
    return ctype.split("-")[1] if "-" in ctype else None


def is_partition(ctype):
    return action_kind(ctype) in PARTITION_KINDS


@dataclass(frozen=True)
class ControlSpec:
    """One control question: type, distinguished candidate, and chair resources."""

    ctype: str
    distinguished: str
    limit: int | None = None
    unregistered: tuple[Voter, ...] = ()
    spoilers: tuple[str, ...] = ()

    def __post_init__(self):
        kind = action_kind(self.ctype)
        validate_name(self.distinguished)
        if kind in LIMITED_KINDS:
            if isinstance(self.limit, bool) or not isinstance(self.limit, int):
                raise MalformedInputError(f"{self.ctype} needs an integer move limit")
            if self.limit < 0:
                raise MalformedInputError("the move limit cannot be negative")
        elif self.limit is not None:
            raise MalformedInputError(f"{self.ctype} takes no move limit")
        if self.unregistered and kind != "AV":
            raise MalformedInputError("only adding-voters control has an unregistered pool")
        if not isinstance(self.unregistered, tuple):
            raise MalformedInputError("the unregistered pool must be a tuple of voters")
        for voter in self.unregistered:
            if not isinstance(voter, Voter) or voter.registered:
                raise MalformedInputError("pool voters must be Voter values with registered=False")
        if self.spoilers and kind != "AC":
            raise MalformedInputError("only adding-candidates control has spoiler candidates")
        if not isinstance(self.spoilers, tuple):
            raise MalformedInputError("spoiler candidates must be a tuple of names")
        for name in self.spoilers:
            validate_name(name)
        if len(set(self.spoilers)) != len(self.spoilers):
            raise MalformedInputError("spoiler candidates must be unique")


@dataclass(frozen=True)
class ControlAction:
    """A concrete chair move; ``selection`` is a tuple of indices or names.

    AV/DV select voter indices (into the pool and the roll respectively),
    AC/DC select candidate names, PV selects the roll indices of the first
    side, PC/RPC select the names in the first candidate group.
    """

    kind: str
    selection: tuple

    def __post_init__(self):
        if self.kind not in LIMITED_KINDS + PARTITION_KINDS:
            raise MalformedInputError(f"unknown action kind {self.kind!r}")
        if not isinstance(self.selection, tuple):
            raise MalformedInputError("an action selection must be a tuple")


def validate_problem(spec, election):
    """Cross-checks between a control spec and its base election."""
    if spec.distinguished not in election.candidates:
        raise MalformedInputError(
            f"distinguished candidate {spec.distinguished!r} is not registered"
        )
    for voter in election.voters:
        if not voter.registered:
            raise MalformedInputError("roll voters must be registered; pools live in the spec")
    overlap = set(spec.spoilers) & set(election.candidates)
    if overlap:
        raise MalformedInputError(f"spoiler candidates already registered: {sorted(overlap)}")
    kind = ballot_kind(election.rule)
    potential = frozenset(election.candidates) | set(spec.spoilers)
    for voter in election.voters + spec.unregistered:
        if voter.manipulator != (voter.ballot is None):
            raise MalformedInputError(
                "manipulators start blank and fixed voters carry concrete ballots"
            )
        if voter.ballot is None:
            continue
        _check_potential_ballot(kind, potential, voter.ballot)


def _check_potential_ballot(kind, potential, ballot):
    if kind == "approval":
        if not isinstance(ballot, frozenset) or not ballot <= potential:
            raise MalformedInputError("approval ballots must stay inside the candidate pool")
    else:
        if not isinstance(ballot, tuple) or len(ballot) != len(potential) or frozenset(ballot) != potential:
            raise MalformedInputError(
                "ranking ballots must order the full potential candidate set"
            )


def potential_candidates(spec, election):
    """Registered candidates plus spoilers: the set all ballots range over."""
    return election.candidates + spec.spoilers


def manipulator_slots(spec, election):
    """Manipulator positions in profile order: roll first, then the pool."""
    slots = [("roll", i) for i, v in enumerate(election.voters) if v.manipulator]
    slots += [("pool", i) for i, v in enumerate(spec.unregistered) if v.manipulator]
    return tuple(slots)


def check_action(spec, election, action):
    """Raise unless the action is a legal move for this spec."""
    kind = action_kind(spec.ctype)
    if action.kind != kind:
        raise MalformedInputError(f"{spec.ctype} cannot play a {action.kind} action")
    sel = action.selection
    if len(set(sel)) != len(sel):
        raise MalformedInputError("an action may not select the same item twice")
    if kind in LIMITED_KINDS and len(sel) > spec.limit:
        raise MalformedInputError(
            f"action selects {len(sel)} items but the limit is {spec.limit}"
        )
    if kind == "AV":
        if not all(isinstance(i, int) and 0 <= i < len(spec.unregistered) for i in sel):
            raise MalformedInputError("add-voters selections index the unregistered pool")
    elif kind in ("DV", "PV"):
        if not all(isinstance(i, int) and 0 <= i < len(election.voters) for i in sel):
            raise MalformedInputError("voter selections index the registered roll")
    elif kind == "AC":
        if not set(sel) <= set(spec.spoilers):
            raise MalformedInputError("add-candidates selections name spoiler candidates")
    else:
        if not set(sel) <= set(election.candidates):
            raise MalformedInputError("candidate selections name registered candidates")
        if kind == "DC" and spec.ctype == "DCDC" and spec.distinguished in sel:
            raise MalformedInputError(
                "destructive deleting-candidates control may not delete the distinguished candidate"
            )


def legal_actions(spec, election):
    """Every legal chair move exactly once, in a fixed deterministic order.

    Partition-of-voters and runoff partitions are unordered, so each split is
    yielded once: the first side holds voter 0 (respectively the
    lexicographically least candidate).  Plain candidate partition is ordered
    because only the first group plays round one, so every subset occurs as
    the first group.
    """
    kind = action_kind(spec.ctype)
    if kind in LIMITED_KINDS:
        if kind == "AV":
            items = tuple(range(len(spec.unregistered)))
        elif kind == "DV":
            items = tuple(range(len(election.voters)))
        elif kind == "AC":
            items = spec.spoilers
        else:
            items = tuple(
                c
                for c in election.candidates
                if not (spec.ctype == "DCDC" and c == spec.distinguished)
            )
        top = min(spec.limit, len(items))
        for size in range(top + 1):
            for sel in itertools.combinations(items, size):
                yield ControlAction(kind, sel)
    elif kind == "PV":
        count = len(election.voters)
        if count == 0:
            yield ControlAction("PV", ())
            return
        rest = tuple(range(1, count))
        for size in range(len(rest) + 1):
            for extra in itertools.combinations(rest, size):
                yield ControlAction("PV", (0,) + extra)
    elif kind == "PC":
        for size in range(len(election.candidates) + 1):
            for group in itertools.combinations(election.candidates, size):
                yield ControlAction("PC", group)
    else:
        anchor = min(election.candidates)
        rest = tuple(c for c in election.candidates if c != anchor)
        for size in range(len(rest) + 1):
            for extra in itertools.combinations(rest, size):
                yield ControlAction("RPC", tuple(sorted((anchor,) + extra)))


def count_action_space(spec, election):
    """Exact number of actions legal_actions yields, without enumerating."""
    kind = action_kind(spec.ctype)
    if kind in LIMITED_KINDS:
        if kind == "AV":
            pool = len(spec.unregistered)
        elif kind == "DV":
            pool = len(election.voters)
        elif kind == "AC":
            pool = len(spec.spoilers)
        else:
            pool = len(election.candidates) - (1 if spec.ctype == "DCDC" else 0)
        return sum(math.comb(pool, size) for size in range(min(spec.limit, pool) + 1))
    if kind == "PV":
        count = len(election.voters)
        return 1 if count == 0 else 2 ** (count - 1)
    if kind == "PC":
        return 2 ** len(election.candidates)
    return 2 ** (len(election.candidates) - 1)


@dataclass(frozen=True)
class TwoRoundOutcome:
    """What a play produced: per-subelection promotions, finalists, winners."""

    round_survivors: tuple[frozenset, ...]
    final_candidates: tuple[str, ...]
    final_winners: frozenset[str]


@dataclass(frozen=True)
class FinalStage:
    """Everything decided before a possible revote.

    ``ballots`` are (ballot, weight) pairs projected onto the finalists, in
    voter order, with manipulators already holding their projected round-one
    ballots; ``manip_positions`` locates them for revote substitution.
    """

    round_survivors: tuple[frozenset, ...]
    final_candidates: tuple[str, ...]
    ballots: tuple
    manip_positions: tuple[int, ...]


def project(ballot, cands):
    """Restrict a ballot to a candidate subset: erasure or intersection."""
    members = frozenset(cands)
    if isinstance(ballot, frozenset):
        return ballot & members
    return tuple(name for name in ballot if name in members)


def _round(rule, cands, voters, tally):
    if not cands:
        return frozenset()
    return tally(rule, cands, tuple((project(v.ballot, cands), v.weight) for v in voters))


def _promote(winner_set, tie):
    if tie == "TE":
        return winner_set if len(winner_set) == 1 else frozenset()
    return winner_set


def prelude(rule, spec, election, action, profile, tally=winners):
    """Play everything up to (but not including) the final tally.

    ``tally`` must behave like :func:`votegames.core.winners`; callers that
    evaluate many plays may pass a memoizing wrapper.
    """
    check_action(spec, election, action)
    slots = manipulator_slots(spec, election)
    if len(profile) != len(slots):
        raise UnresolvedManipulatorError(
            f"profile has {len(profile)} ballots for {len(slots)} manipulators"
        )
    kind = ballot_kind(rule)
    potential = frozenset(potential_candidates(spec, election))
    for ballot in profile:
        if ballot is None:
            raise UnresolvedManipulatorError("profile ballots must be concrete")
        _check_potential_ballot(kind, potential, ballot)

    roll = list(election.voters)
    pool = list(spec.unregistered)
    for (where, index), ballot in zip(slots, profile):
        side = roll if where == "roll" else pool
        side[index] = replace(side[index], ballot=ballot)

    move = action_kind(spec.ctype)
    tie = tie_rule(spec.ctype)
    sel = action.selection
    if move in LIMITED_KINDS:
        if move == "AV":
            voters = roll + [pool[i] for i in sorted(sel)]
            cands = election.candidates
        elif move == "DV":
            voters = [v for i, v in enumerate(roll) if i not in set(sel)]
            cands = election.candidates
        elif move == "AC":
            added = [name for name in spec.spoilers if name in set(sel)]
            voters = roll
            cands = election.candidates + tuple(added)
        else:
            voters = roll
            cands = tuple(c for c in election.candidates if c not in set(sel))
        survivors = ()
        final_candidates = cands
    elif move == "PV":
        first = [roll[i] for i in sorted(sel)]
        second = [v for i, v in enumerate(roll) if i not in set(sel)]
        voters = roll
        promoted = (
            _promote(_round(rule, election.candidates, first, tally), tie),
            _promote(_round(rule, election.candidates, second, tally), tie),
        )
        survivors = promoted
        final_candidates = tuple(sorted(promoted[0] | promoted[1]))
    elif move == "PC":
        group_one = tuple(c for c in election.candidates if c in set(sel))
        group_two = tuple(c for c in election.candidates if c not in set(sel))
        voters = roll
        promoted = (_promote(_round(rule, group_one, roll, tally), tie),)
        survivors = promoted
        final_candidates = tuple(sorted(promoted[0] | set(group_two)))
    else:
        group_one = tuple(c for c in election.candidates if c in set(sel))
        group_two = tuple(c for c in election.candidates if c not in set(sel))
        voters = roll
        promoted = (
            _promote(_round(rule, group_one, roll, tally), tie),
            _promote(_round(rule, group_two, roll, tally), tie),
        )
        survivors = promoted
        final_candidates = tuple(sorted(promoted[0] | promoted[1]))

    ballots = tuple((project(v.ballot, final_candidates), v.weight) for v in voters)
    positions = tuple(i for i, v in enumerate(voters) if v.manipulator)
    return FinalStage(survivors, final_candidates, ballots, positions)


def finish(rule, stage, revote=None, tally=winners):
    """Tally the final stage, optionally substituting revote ballots."""
    ballots = stage.ballots
    if revote is not None:
        if len(revote) != len(stage.manip_positions):
            raise UnresolvedManipulatorError(
                f"revote has {len(revote)} ballots for {len(stage.manip_positions)} manipulators"
            )
        kind = "approval" if ballot_kind(rule) == "approval" else "order"
        pot = frozenset(stage.final_candidates)
        swapped = list(ballots)
        for position, ballot in zip(stage.manip_positions, revote):
            if ballot is None:
                raise UnresolvedManipulatorError("revote ballots must be concrete")
            _check_potential_ballot(kind, pot, ballot)
            swapped[position] = (ballot, swapped[position][1])
        ballots = tuple(swapped)
    if not stage.final_candidates:
        final = frozenset()
    else:
        final = tally(rule, stage.final_candidates, tuple(ballots))
    return TwoRoundOutcome(stage.round_survivors, stage.final_candidates, final)


def play(rule, spec, election, action, profile, revote=None):
    """Full play of one chair move against one manipulator profile."""
    if revote is not None and not is_partition(spec.ctype):
        raise InvalidScenarioError("revoting applies to partition control only")
    return finish(rule, prelude(rule, spec, election, action, profile), revote)


def evaluate(rule, spec, election, action, profile, revote=None):
    """Final winner set of one play; the goal predicate is applied upstream."""
    return play(rule, spec, election, action, profile, revote).final_winners
