"""Direct plurality control solvers.

Covered: adding, deleting, and ties-eliminate partitioning of voters, in all
three scenario modes, for both goals.  The add/delete cases close over
weighted score gaps; only deleting-voters under manipulators-first play is
restricted to unit weights (answering it per profile needs voter counts, not
weight sums, and weighted exchange arguments break down there).

Partition-of-voters cases search grouped splits against the reduced ballot
family: with ties-eliminate promotion at most two candidates reach the final,
so a manipulator ranking is characterized by its top choice plus which side
of the final pair it backs.  Cooperative searches try the everyone-backs-the-
distinguished-candidate profile first, so when that classic preprocessing
succeeds it is the reported witness.
"""

from votegames.control import ControlAction, manipulator_slots
from votegames.core import scores
from votegames.errors import UnsupportedCaseError
from votegames.oracle import Witness
from votegames.solvers.common import (
    DirectResult,
    heaviest_indices,
    min_cover,
    partition_engine,
    plurality_family,
    split_roll,
    total_weight,
)


def _context(instance):
    election = instance.election
    spec = instance.spec
    fixed, blank = split_roll(election)
    table = scores(
        "plurality", election.candidates, [(v.ballot, v.weight) for v in fixed]
    )
    rivals = tuple(c for c in election.candidates if c != spec.distinguished)
    return election, spec, spec.distinguished, rivals, fixed, blank, table


def _top_ballot(cands, top):
    return (top, *sorted(c for c in cands if c != top))


def _uniform_profile(instance, top):
    slots = len(manipulator_slots(instance.spec, instance.election))
    ballot = _top_ballot(instance.election.candidates, top)
    return tuple(ballot for _ in range(slots))


def solve_mplus_ccav(instance):
    election, spec, p, rivals, _, blank, s = _context(instance)
    helpers = [
        (v.weight, i)
        for i, v in enumerate(spec.unregistered)
        if v.manipulator or v.ballot[0] == p
    ]
    chosen = heaviest_indices(helpers, spec.limit)
    gain = sum(spec.unregistered[i].weight for i in chosen)
    if any(s[p] + total_weight(blank) + gain < s[c] for c in rivals):
        return DirectResult(False)
    action = ControlAction("AV", tuple(sorted(chosen)))
    return DirectResult(True, Witness(action=action, profile=_uniform_profile(instance, p)))


def solve_mplus_ccdv(instance):
    election, spec, p, rivals, _, blank, s = _context(instance)
    reach = s[p] + total_weight(blank)
    chosen = []
    for c in rivals:
        tops = [
            (v.weight, i)
            for i, v in enumerate(election.voters)
            if not v.manipulator and v.ballot[0] == c
        ]
        count = min_cover(s[c] - reach, [w for w, _ in tops])
        chosen.extend(heaviest_indices(tops, count))
    if len(chosen) > spec.limit:
        return DirectResult(False)
    action = ControlAction("DV", tuple(sorted(chosen)))
    return DirectResult(True, Witness(action=action, profile=_uniform_profile(instance, p)))


def solve_mplus_dcav(instance):
    election, spec, p, rivals, _, blank, s = _context(instance)
    for c in rivals:
        helpers = [
            (v.weight, i)
            for i, v in enumerate(spec.unregistered)
            if v.manipulator or v.ballot[0] == c
        ]
        chosen = heaviest_indices(helpers, spec.limit)
        gain = sum(spec.unregistered[i].weight for i in chosen)
        if s[c] + total_weight(blank) + gain > s[p]:
            action = ControlAction("AV", tuple(sorted(chosen)))
            return DirectResult(
                True, Witness(action=action, profile=_uniform_profile(instance, c))
            )
    return DirectResult(False)


def solve_mplus_dcdv(instance):
    election, spec, p, rivals, _, blank, s = _context(instance)
    tops = [
        (v.weight, i)
        for i, v in enumerate(election.voters)
        if not v.manipulator and v.ballot[0] == p
    ]
    chosen = heaviest_indices(tops, spec.limit)
    cut = sum(election.voters[i].weight for i in chosen)
    for c in rivals:
        if s[c] + total_weight(blank) > s[p] - cut:
            action = ControlAction("DV", tuple(sorted(chosen)))
            return DirectResult(
                True, Witness(action=action, profile=_uniform_profile(instance, c))
            )
    return DirectResult(False)


def _ccav_competitive(instance):
    election, spec, p, rivals, _, blank, s = _context(instance)
    helpers = [
        (v.weight, i)
        for i, v in enumerate(spec.unregistered)
        if not v.manipulator and v.ballot[0] == p
    ]
    chosen = heaviest_indices(helpers, spec.limit)
    gain = sum(spec.unregistered[i].weight for i in chosen)
    threat = total_weight(blank)
    bad = next((c for c in rivals if s[c] + threat > s[p] + gain), None)
    return bad, ControlAction("AV", tuple(sorted(chosen)))


def solve_ccav_cf(instance):
    bad, action = _ccav_competitive(instance)
    if bad is not None:
        return DirectResult(False)
    return DirectResult(True, Witness(action=action))


def solve_ccav_mf(instance):
    bad, _ = _ccav_competitive(instance)
    if bad is not None:
        return DirectResult(False, Witness(profile=_uniform_profile(instance, bad)))
    return DirectResult(True)


def solve_ccdv_cf(instance):
    election, spec, p, rivals, _, blank, s = _context(instance)
    ranked_manips = [
        (v.weight, i) for i, v in enumerate(election.voters) if v.manipulator
    ]
    for removed in range(min(spec.limit, len(ranked_manips)) + 1):
        head = heaviest_indices(ranked_manips, removed)
        threat = total_weight(blank) - sum(election.voters[i].weight for i in head)
        chosen = list(head)
        feasible = True
        for c in rivals:
            tops = [
                (v.weight, i)
                for i, v in enumerate(election.voters)
                if not v.manipulator and v.ballot[0] == c
            ]
            count = min_cover(s[c] + threat - s[p], [w for w, _ in tops])
            if count is None:
                feasible = False
                break
            chosen.extend(heaviest_indices(tops, count))
        if feasible and len(chosen) <= spec.limit:
            action = ControlAction("DV", tuple(sorted(chosen)))
            return DirectResult(True, Witness(action=action))
    return DirectResult(False)


def solve_ccdv_mf(instance):
    election, spec, p, rivals, _, blank, s = _context(instance)
    if any(v.weight != 1 for v in election.voters):
        raise UnsupportedCaseError(
            "plurality deleting-voters with manipulators moving first needs unit weights"
        )
    # Needed deletions are convex in each rival's manipulator count, so the
    # worst profile piles every manipulator onto a single rival.
    threat = len(blank)
    for c in rivals:
        needed = sum(
            max(0, s[other] + (threat if other == c else 0) - s[p]) for other in rivals
        )
        if needed > spec.limit:
            return DirectResult(False, Witness(profile=_uniform_profile(instance, c)))
    return DirectResult(True)


def _dcav_competitive(instance):
    election, spec, p, rivals, _, blank, s = _context(instance)
    guard = s[p] + total_weight(blank)
    for c in rivals:
        helpers = [
            (v.weight, i)
            for i, v in enumerate(spec.unregistered)
            if not v.manipulator and v.ballot[0] == c
        ]
        chosen = heaviest_indices(helpers, spec.limit)
        gain = sum(spec.unregistered[i].weight for i in chosen)
        if s[c] + gain > guard:
            return True, ControlAction("AV", tuple(sorted(chosen)))
    return False, None


def solve_dcav_cf(instance):
    ok, action = _dcav_competitive(instance)
    return DirectResult(ok, Witness(action=action) if ok else None)


def solve_dcav_mf(instance):
    ok, _ = _dcav_competitive(instance)
    if ok:
        return DirectResult(True)
    target = instance.spec.distinguished
    return DirectResult(False, Witness(profile=_uniform_profile(instance, target)))


def _dcdv_competitive(instance):
    election, spec, p, rivals, _, blank, s = _context(instance)
    removable = [
        (v.weight, i)
        for i, v in enumerate(election.voters)
        if v.manipulator or v.ballot[0] == p
    ]
    chosen = heaviest_indices(removable, spec.limit)
    cut = sum(election.voters[i].weight for i in chosen)
    guard = s[p] + total_weight(blank) - cut
    if any(s[c] > guard for c in rivals):
        return True, ControlAction("DV", tuple(sorted(chosen)))
    return False, None


def solve_dcdv_cf(instance):
    ok, action = _dcdv_competitive(instance)
    return DirectResult(ok, Witness(action=action) if ok else None)


def solve_dcdv_mf(instance):
    ok, _ = _dcdv_competitive(instance)
    if ok:
        return DirectResult(True)
    target = instance.spec.distinguished
    return DirectResult(False, Witness(profile=_uniform_profile(instance, target)))


def solve_pv(instance):
    family = plurality_family(
        instance.election.candidates, instance.spec.distinguished
    )
    return partition_engine(instance, family)


CASES = {
    ("CCAV", "M+"): solve_mplus_ccav,
    ("CCAV", "CF"): solve_ccav_cf,
    ("CCAV", "MF"): solve_ccav_mf,
    ("CCDV", "M+"): solve_mplus_ccdv,
    ("CCDV", "CF"): solve_ccdv_cf,
    ("CCDV", "MF"): solve_ccdv_mf,
    ("DCAV", "M+"): solve_mplus_dcav,
    ("DCAV", "CF"): solve_dcav_cf,
    ("DCAV", "MF"): solve_dcav_mf,
    ("DCDV", "M+"): solve_mplus_dcdv,
    ("DCDV", "CF"): solve_dcdv_cf,
    ("DCDV", "MF"): solve_dcdv_mf,
    ("CCPV-TE", "M+"): solve_pv,
    ("CCPV-TE", "CF"): solve_pv,
    ("CCPV-TE", "MF"): solve_pv,
    ("DCPV-TE", "M+"): solve_pv,
    ("DCPV-TE", "CF"): solve_pv,
    ("DCPV-TE", "MF"): solve_pv,
}
