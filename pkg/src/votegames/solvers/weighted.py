"""Weighted three-candidate solvers for veto and Borda control.

Both families fight hostile manipulators (chair-first or manipulators-first,
constructive goal), so the manipulators' play is forced to the worst case.

Under veto, every hostile ballot vetoes the distinguished candidate; the two
orders doing so score identically, and the lexicographically least one stands
in for them.  That freezes the profile, leaving a plain weighted counting
problem over chair moves.

Under Borda the hostile ballots are not interchangeable, but ranking the
distinguished candidate last with either rival order dominates every other
ballot in both score gaps at once, and a mix of the two extremes never beats
the worse of the two uniform ones.  A chair move therefore succeeds exactly
when it survives both uniform extreme profiles, which keeps the certificate
check polynomial even though the move search itself is exhaustive.
"""

from votegames.control import ControlAction, evaluate, legal_actions, manipulator_slots
from votegames.core import scores
from votegames.errors import UnsupportedCaseError
from votegames.oracle import Witness
from votegames.solvers.common import (
    DirectResult,
    heaviest_indices,
    min_cover,
    split_roll,
)


def _three_rivals(instance, rule):
    election = instance.election
    if election.rule != rule or len(election.candidates) != 3:
        raise UnsupportedCaseError(
            f"this solver handles exactly three candidates under {rule}"
        )
    p = instance.spec.distinguished
    return tuple(sorted(c for c in election.candidates if c != p))


def _veto_ballot(instance):
    a, b = _three_rivals(instance, "veto")
    return (a, b, instance.spec.distinguished)


def _veto_table(instance):
    """Veto scores with every manipulator pinned to the hostile ballot."""
    hostile = _veto_ballot(instance)
    pairs = [
        (hostile if v.manipulator else v.ballot, v.weight)
        for v in instance.election.voters
    ]
    return scores("veto", instance.election.candidates, pairs)


def _uniform_profile(instance, ballot):
    slots = len(manipulator_slots(instance.spec, instance.election))
    return tuple(ballot for _ in range(slots))


def _veto_ccdv(instance):
    election = instance.election
    p = instance.spec.distinguished
    hostile = _veto_ballot(instance)
    table = _veto_table(instance)
    need = max(table[c] for c in election.candidates) - table[p]
    haters = [
        (v.weight, i)
        for i, v in enumerate(election.voters)
        if v.manipulator or v.ballot[2] == p
    ]
    count = min_cover(need, [w for w, _ in haters])
    if count is None or count > instance.spec.limit:
        cex = Witness(profile=_uniform_profile(instance, hostile))
        return DirectResult(False), cex
    action = ControlAction("DV", tuple(sorted(heaviest_indices(haters, count))))
    return DirectResult(True, Witness(action=action)), None


def _veto_ccav(instance):
    spec = instance.spec
    hostile = _veto_ballot(instance)
    a, b = hostile[0], hostile[1]
    table = _veto_table(instance)
    p = spec.distinguished
    chosen = []
    for rival in (a, b):
        boosters = [
            (v.weight, i)
            for i, v in enumerate(spec.unregistered)
            if not v.manipulator and v.ballot[2] == rival
        ]
        count = min_cover(table[rival] - table[p], [w for w, _ in boosters])
        if count is None:
            cex = Witness(profile=_uniform_profile(instance, hostile))
            return DirectResult(False), cex
        chosen.extend(heaviest_indices(boosters, count))
    if len(chosen) > spec.limit:
        cex = Witness(profile=_uniform_profile(instance, hostile))
        return DirectResult(False), cex
    action = ControlAction("AV", tuple(sorted(chosen)))
    return DirectResult(True, Witness(action=action)), None


def solve_veto_cf(instance):
    kind = instance.spec.ctype
    result, _ = _veto_ccdv(instance) if kind == "CCDV" else _veto_ccav(instance)
    return result


def solve_veto_mf(instance):
    kind = instance.spec.ctype
    result, cex = _veto_ccdv(instance) if kind == "CCDV" else _veto_ccav(instance)
    if result.answer:
        return DirectResult(True)
    return DirectResult(False, cex)


def solve_borda_cf(instance):
    a, b = _three_rivals(instance, "borda")
    p = instance.spec.distinguished
    extremes = [
        _uniform_profile(instance, (a, b, p)),
        _uniform_profile(instance, (b, a, p)),
    ]
    election = instance.election
    spec = instance.spec
    for action in legal_actions(spec, election):
        if all(
            p in evaluate("borda", spec, election, action, profile)
            for profile in extremes
        ):
            return DirectResult(True, Witness(action=action))
    return DirectResult(False)


VETO_CASES = {
    ("CCAV", "CF"): solve_veto_cf,
    ("CCAV", "MF"): solve_veto_mf,
    ("CCDV", "CF"): solve_veto_cf,
    ("CCDV", "MF"): solve_veto_mf,
}

BORDA_CASES = {
    ("CCAV", "CF"): solve_borda_cf,
    ("CCDV", "CF"): solve_borda_cf,
}
