"""Shared helpers for the direct control solvers.

The closed-form solvers reason about weighted score gaps: how much weight a
greedy chair must add or delete to close a deficit.  The enumerative solvers
share a quantified-search skeleton (chair move and manipulator profile in
either order) plus reduced manipulator ballot families that provably preserve
the answer, and they deduplicate voter partitions by grouping interchangeable
voters.
"""

import itertools
from dataclasses import dataclass, replace

from votegames.control import (
    ControlAction,
    action_kind,
    finish,
    legal_actions,
    manipulator_slots,
    prelude,
)
from votegames.core import winners
from votegames.oracle import Witness

_CACHE_CAP = 1 << 20


@dataclass(frozen=True)
class DirectResult:
    """A direct solver's decision, with a witness when one falls out.

    ``witness`` reuses the oracle's shape: an action and/or profile backing a
    true cooperative or chair-first answer.  Solvers that argue purely over
    score arithmetic return no witness.
    """

    answer: bool
    witness: object = None


def split_roll(election):
    """Registered voters split into (nonmanipulators, manipulators)."""
    fixed = [v for v in election.voters if not v.manipulator]
    blank = [v for v in election.voters if v.manipulator]
    return fixed, blank


def total_weight(voters):
    return sum(v.weight for v in voters)


def min_cover(need, weights):
    """Fewest of ``weights`` summing to at least ``need``; None if they can't.

    Greedy largest-first is optimal for minimizing the count.
    """
    if need <= 0:
        return 0
    reached = 0
    for used, weight in enumerate(sorted(weights, reverse=True), start=1):
        reached += weight
        if reached >= need:
            return used
    return None


def top_weight_sum(count, weights):
    """Total of the ``count`` largest weights (all of them if fewer)."""
    if count <= 0:
        return 0
    return sum(sorted(weights, reverse=True)[:count])


def heaviest_indices(pairs, count):
    """Indices of the ``count`` heaviest (weight, index) pairs, heaviest first."""
    ranked = sorted(pairs, key=lambda wi: (-wi[0], wi[1]))
    return [index for _, index in ranked[:count]]


def plurality_family(cands, target):
    """Manipulator rankings that suffice for plurality partition-of-voters.

    In a ties-eliminate voter partition at most two candidates reach the
    final, so only a ballot's top choice (round scores) and its target-versus-
    rival order (final pair) matter.  Ballots with the same top rank the top
    above the target either way, so one target-second and one target-last
    ranking per top, plus the target-top ranking, cover every outcome.  The
    target-top ranking comes first so cooperative searches report it.
    """
    rest = sorted(c for c in cands if c != target)
    family = [(target, *rest)]
    for top in rest:
        others = [c for c in rest if c != top]
        family.append((top, target, *others))
    for top in rest:
        others = [c for c in rest if c != top]
        family.append((top, *others, target))
    return tuple(family)


def condorcet_family(cands, target):
    """Manipulator rankings that suffice for Condorcet partition control.

    Condorcet outcomes depend only on pairwise margins.  Moving the target to
    the very front or very back is extremal for every target margin and
    leaves rival-versus-rival margins to the ordering of the rest, so all
    rest-orderings with the target first or last cover every outcome.
    """
    rest = sorted(c for c in cands if c != target)
    family = [(target, *perm) for perm in itertools.permutations(rest)]
    family += [(*perm, target) for perm in itertools.permutations(rest)]
    return tuple(family)


def joint_profiles(family, slots):
    return itertools.product(family, repeat=slots)


def filled_roll(election, spec, profile):
    """The registered roll with manipulator slots holding profile ballots."""
    roll = list(election.voters)
    for (where, index), ballot in zip(manipulator_slots(spec, election), profile):
        if where == "roll":
            roll[index] = replace(roll[index], ballot=ballot)
    return roll


def grouped_partitions(voters):
    """Voter partitions deduplicated by interchangeability and side swap.

    Voters with equal (ballot, weight) are indistinguishable to every
    anonymous rule, so only the count sent to the first side matters per
    group; the complementary split is also skipped since partition-of-voters
    is side-symmetric.  Yields first-side index tuples.
    """
    groups = {}
    for index, voter in enumerate(voters):
        groups.setdefault((voter.ballot, voter.weight), []).append(index)
    members = list(groups.values())
    sizes = [len(ix) for ix in members]
    for counts in itertools.product(*[range(size + 1) for size in sizes]):
        mirrored = tuple(size - c for size, c in zip(sizes, counts))
        if counts > mirrored:
            continue
        side = []
        for indices, count in zip(members, counts):
            side.extend(indices[:count])
        yield ControlAction("PV", tuple(sorted(side)))


def goal_checker(instance):
    """A fast (action, profile) -> goal-met predicate with a tally memo."""
    election = instance.election
    spec = instance.spec
    rule = election.rule
    target = spec.distinguished
    constructive = instance.scenario.goal == "constructive"
    cache = {}

    def tally(rule_, cands, ballots):
        key = (cands, ballots)
        got = cache.get(key)
        if got is None:
            got = winners(rule_, cands, ballots)
            if len(cache) < _CACHE_CAP:
                cache[key] = got
        return got

    def holds(action, profile):
        stage = prelude(rule, spec, election, action, profile, tally)
        final = finish(rule, stage, None, tally).final_winners
        return (target in final) if constructive else (target not in final)

    return holds


def search_cooperative(profiles, actions_for, holds):
    """∃ profile ∃ action, profiles outermost so preferred ones win ties."""
    for profile in profiles:
        for action in actions_for(profile):
            if holds(action, profile):
                return True, action, profile
    return False, None, None


def search_chair_first(actions, profiles_for, holds):
    """∃ action ∀ profile."""
    for action in actions:
        if all(holds(action, profile) for profile in profiles_for(action)):
            return True, action
    return False, None


def search_manip_first(profiles, actions_for, holds):
    """∀ profile ∃ action, retrying the last good action first."""
    last = None
    for profile in profiles:
        if last is not None and holds(last, profile):
            continue
        answered = None
        for action in actions_for(profile):
            if action != last and holds(action, profile):
                answered = action
                break
        if answered is None:
            return False, profile
        last = answered
    return True, None


def partition_engine(instance, family):
    """Decide a partition-control scenario by quantified search over plays.

    ``family`` must be a ballot family that provably preserves the answer for
    the rule at hand (or the full ballot space).  Voter partitions are walked
    in grouped canonical form; candidate partitions come from legal_actions.
    The witness follows the oracle's policy: action and profile for a true
    cooperative answer, the action for a true chair-first answer, and the
    counterexample profile for a false manipulators-first answer.
    """
    election = instance.election
    spec = instance.spec
    mode = instance.scenario.mode
    holds = goal_checker(instance)
    slots = len(manipulator_slots(spec, election))

    if action_kind(spec.ctype) == "PV":
        def actions_for(profile):
            return grouped_partitions(filled_roll(election, spec, profile))

        chair_actions = lambda: grouped_partitions(election.voters)
    else:
        fixed = tuple(legal_actions(spec, election))

        def actions_for(profile):
            return fixed

        chair_actions = lambda: fixed

    if mode == "M+":
        profiles = joint_profiles(family, slots)
        ok, action, profile = search_cooperative(profiles, actions_for, holds)
        return DirectResult(ok, Witness(action=action, profile=profile) if ok else None)
    if mode == "CF":
        ok, action = search_chair_first(
            chair_actions(), lambda _action: joint_profiles(family, slots), holds
        )
        return DirectResult(ok, Witness(action=action) if ok else None)
    ok, counterexample = search_manip_first(
        joint_profiles(family, slots), actions_for, holds
    )
    return DirectResult(ok, None if ok else Witness(profile=counterexample))
