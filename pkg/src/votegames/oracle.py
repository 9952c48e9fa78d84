"""Exhaustive reference solver for manipulative control questions.

The oracle decides an instance by brute force: it walks every legal chair
move and every joint manipulator profile over the full potential candidate
set (registered candidates plus spoilers), honoring the scenario's quantifier
order, and plays each combination out.  Revoting scenarios additionally
enumerate every recast ballot over the finalists of each branch.

A static state budget guards against runaway searches: the product of the
action count, the profile count, and the worst-case revote count must fit
under ``max_states`` before anything is enumerated.  Short-circuiting means
far fewer states are usually visited; the result reports how many were.
"""

import itertools
import math
from dataclasses import dataclass

from votegames.control import (
    count_action_space,
    finish,
    legal_actions,
    manipulator_slots,
    potential_candidates,
    prelude,
)
from votegames.core import ballot_kind, winners
from votegames.errors import BudgetExceededError

DEFAULT_BUDGET = 10**7
_CACHE_CAP = 1 << 20


@dataclass(frozen=True)
class Witness:
    """Evidence for an answer: a move, a profile, a revote, or some of each."""

    action: object = None
    profile: object = None
    revote: object = None


@dataclass(frozen=True)
class OracleResult:
    """Decision plus witness and the number of plays actually tallied.

    A true cooperative answer carries the helping move and profile (and
    revote when applicable); a true chair-first answer carries the winning
    move; a false manipulators-first answer carries the profile the chair
    cannot answer.  Other outcomes carry no witness.
    """

    answer: bool
    witness: Witness | None
    states: int


def ballot_space(rule, cands):
    """All ballots over a candidate set, in a fixed deterministic order.

    Approval ballots come by size then lexicographic content; rankings are
    the permutations of the sorted candidate list in lexicographic order.
    """
    names = sorted(cands)
    if ballot_kind(rule) == "approval":
        return tuple(
            frozenset(combo)
            for size in range(len(names) + 1)
            for combo in itertools.combinations(names, size)
        )
    return tuple(itertools.permutations(names))


def count_ballots(rule, count):
    """How many ballots exist over ``count`` candidates."""
    if ballot_kind(rule) == "approval":
        return 2**count
    return math.factorial(count)


def enumerate_profiles(rule, cands, slots):
    """Joint manipulator profiles, one ballot per slot, lazily in order."""
    return itertools.product(ballot_space(rule, cands), repeat=slots)


def count_profiles(rule, count, slots):
    return count_ballots(rule, count) ** slots


def required_states(instance):
    """The static play-count bound checked against the budget."""
    spec, election = instance.spec, instance.election
    slots = len(manipulator_slots(spec, election))
    per = count_ballots(election.rule, len(potential_candidates(spec, election)))
    total = count_action_space(spec, election) * per**slots
    if instance.scenario.revoting:
        total *= per**slots
    return total


def solve_oracle(instance, max_states=DEFAULT_BUDGET):
    """Decide an instance exhaustively; raise if the budget cannot cover it."""
    election, spec, scen = instance.election, instance.spec, instance.scenario
    rule = election.rule
    required = required_states(instance)
    if required > max_states:
        raise BudgetExceededError(required, max_states)

    cache = {}

    def tally(rule_, cands, ballots):
        key = (cands, ballots)
        got = cache.get(key)
        if got is None:
            got = winners(rule_, cands, ballots)
            if len(cache) < _CACHE_CAP:
                cache[key] = got
        return got

    slots = len(manipulator_slots(spec, election))
    space = ballot_space(rule, potential_candidates(spec, election))
    target = spec.distinguished
    constructive = scen.goal == "constructive"
    states = 0

    def satisfied(winner_set):
        return (target in winner_set) if constructive else (target not in winner_set)

    def check_play(action, profile):
        # Resolves the innermost (revote) quantifier; returns (ok, revote).
        nonlocal states
        stage = prelude(rule, spec, election, action, profile, tally)
        if not scen.revoting:
            states += 1
            return satisfied(finish(rule, stage, None, tally).final_winners), None
        recasts = itertools.product(
            ballot_space(rule, stage.final_candidates), repeat=slots
        )
        if scen.mode == "M+":
            for revote in recasts:
                states += 1
                if satisfied(finish(rule, stage, revote, tally).final_winners):
                    return True, revote
            return False, None
        for revote in recasts:
            states += 1
            if not satisfied(finish(rule, stage, revote, tally).final_winners):
                return False, None
        return True, None

    if scen.mode == "M+":
        for action in legal_actions(spec, election):
            for profile in itertools.product(space, repeat=slots):
                ok, revote = check_play(action, profile)
                if ok:
                    witness = Witness(action=action, profile=profile, revote=revote)
                    return OracleResult(True, witness, states)
        return OracleResult(False, None, states)

    if scen.mode == "CF":
        for action in legal_actions(spec, election):
            if all(
                check_play(action, profile)[0]
                for profile in itertools.product(space, repeat=slots)
            ):
                return OracleResult(True, Witness(action=action), states)
        return OracleResult(False, None, states)

    actions = tuple(legal_actions(spec, election))
    last_good = None
    for profile in itertools.product(space, repeat=slots):
        found = None
        if last_good is not None and check_play(last_good, profile)[0]:
            found = last_good
        if found is None:
            for action in actions:
                if action != last_good and check_play(action, profile)[0]:
                    found = action
                    break
        if found is None:
            return OracleResult(False, Witness(profile=profile), states)
        last_good = found
    return OracleResult(True, None, states)
