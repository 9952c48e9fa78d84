"""Direct solvers for control under the strict pairwise-majority rule.

Everything here reduces to weighted head-to-head margins against the
distinguished candidate.  A manipulator ballot placing that candidate first
adds its weight to every such margin at once, and placing it last subtracts
it, so the extreme ballots realize the best and worst uniform shifts and the
closed forms only track one number per rival.

With no ballots at all this rule elects nobody, so a constructive goal fails
outright on an empty roll and a destructive one succeeds; the closed forms
check that before touching any margin.  Constructive partition-of-candidates
cases have no such shortcut and run the grouped partition search instead.
"""

from votegames.control import ControlAction, manipulator_slots, potential_candidates
from votegames.oracle import Witness
from votegames.solvers.common import (
    DirectResult,
    condorcet_family,
    heaviest_indices,
    partition_engine,
    split_roll,
    total_weight,
)


def _margins(target, others, voters):
    """Weighted margin of ``target`` over each of ``others`` on full ballots."""
    table = {b: 0 for b in others}
    for v in voters:
        rank = {name: i for i, name in enumerate(v.ballot)}
        for b in others:
            table[b] += v.weight if rank[target] < rank[b] else -v.weight
    return table


def _context(instance):
    election = instance.election
    spec = instance.spec
    fixed, blank = split_roll(election)
    rivals = tuple(c for c in election.candidates if c != spec.distinguished)
    others = rivals + spec.spoilers
    table = _margins(spec.distinguished, others, fixed)
    return election, spec, spec.distinguished, rivals, fixed, blank, table


def _uniform_profile(instance, ballot):
    slots = len(manipulator_slots(instance.spec, instance.election))
    return tuple(ballot for _ in range(slots))


def _front_ballot(instance):
    p = instance.spec.distinguished
    names = potential_candidates(instance.spec, instance.election)
    return (p, *sorted(c for c in names if c != p))


def _back_ballot(instance):
    p = instance.spec.distinguished
    names = potential_candidates(instance.spec, instance.election)
    return (*sorted(c for c in names if c != p), p)


def solve_mplus_ccac(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    if not election.voters:
        return DirectResult(False)
    m = total_weight(blank)
    if all(table[b] + m > 0 for b in rivals):
        action = ControlAction("AC", ())
        profile = _uniform_profile(instance, _front_ballot(instance))
        return DirectResult(True, Witness(action=action, profile=profile))
    return DirectResult(False)


def solve_mplus_ccdc(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    if not election.voters:
        return DirectResult(False)
    m = total_weight(blank)
    bad = tuple(b for b in rivals if table[b] + m <= 0)
    if len(bad) > spec.limit:
        return DirectResult(False)
    action = ControlAction("DC", bad)
    profile = _uniform_profile(instance, _front_ballot(instance))
    return DirectResult(True, Witness(action=action, profile=profile))


def _ccac_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    if not election.voters:
        return False
    m = total_weight(blank)
    return all(table[b] - m > 0 for b in rivals)


def solve_ccac_cf(instance):
    if _ccac_competitive(instance):
        return DirectResult(True, Witness(action=ControlAction("AC", ())))
    return DirectResult(False)


def solve_ccac_mf(instance):
    if _ccac_competitive(instance):
        return DirectResult(True)
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, _back_ballot(instance)))
    )


def _ccdc_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    if not election.voters:
        return None
    m = total_weight(blank)
    bad = tuple(b for b in rivals if table[b] - m <= 0)
    return bad if len(bad) <= spec.limit else None


def solve_ccdc_cf(instance):
    bad = _ccdc_competitive(instance)
    if bad is None:
        return DirectResult(False)
    return DirectResult(True, Witness(action=ControlAction("DC", bad)))


def solve_ccdc_mf(instance):
    if _ccdc_competitive(instance) is not None:
        return DirectResult(True)
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, _back_ballot(instance)))
    )


def solve_mplus_dcac(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    profile = _uniform_profile(instance, _back_ballot(instance))
    if not election.voters:
        return DirectResult(True, Witness(action=ControlAction("AC", ()), profile=profile))
    m = total_weight(blank)
    if any(table[b] - m <= 0 for b in rivals):
        return DirectResult(True, Witness(action=ControlAction("AC", ()), profile=profile))
    if spec.limit >= 1:
        for sp in sorted(spec.spoilers):
            if table[sp] - m <= 0:
                action = ControlAction("AC", (sp,))
                return DirectResult(True, Witness(action=action, profile=profile))
    return DirectResult(False)


def _dcac_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    if not election.voters:
        return ControlAction("AC", ())
    m = total_weight(blank)
    if any(table[b] + m <= 0 for b in rivals):
        return ControlAction("AC", ())
    if spec.limit >= 1:
        for sp in sorted(spec.spoilers):
            if table[sp] + m <= 0:
                return ControlAction("AC", (sp,))
    return None


def solve_dcac_cf(instance):
    action = _dcac_competitive(instance)
    if action is None:
        return DirectResult(False)
    return DirectResult(True, Witness(action=action))


def solve_dcac_mf(instance):
    if _dcac_competitive(instance) is not None:
        return DirectResult(True)
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, _front_ballot(instance)))
    )


def solve_mplus_dcdc(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    profile = _uniform_profile(instance, _back_ballot(instance))
    if not election.voters:
        return DirectResult(True, Witness(action=ControlAction("DC", ()), profile=profile))
    m = total_weight(blank)
    if any(table[b] - m <= 0 for b in rivals):
        return DirectResult(True, Witness(action=ControlAction("DC", ()), profile=profile))
    return DirectResult(False)


def _dcdc_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    if not election.voters:
        return True
    m = total_weight(blank)
    return any(table[b] + m <= 0 for b in rivals)


def solve_dcdc_cf(instance):
    if _dcdc_competitive(instance):
        return DirectResult(True, Witness(action=ControlAction("DC", ())))
    return DirectResult(False)


def solve_dcdc_mf(instance):
    if _dcdc_competitive(instance):
        return DirectResult(True)
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, _front_ballot(instance)))
    )


def _pair_partition(instance, rival):
    """Partition action grouping the distinguished candidate with ``rival``."""
    spec = instance.spec
    cands = instance.election.candidates
    kind = "PC" if spec.ctype.startswith(("CCPC", "DCPC")) else "RPC"
    side = {spec.distinguished, rival}
    if kind == "RPC" and min(cands) not in side:
        side = set(cands) - side
    return ControlAction(kind, tuple(sorted(side)))


def _trivial_partition(instance):
    spec = instance.spec
    cands = instance.election.candidates
    if spec.ctype.startswith(("CCPC", "DCPC")):
        return ControlAction("PC", ())
    return ControlAction("RPC", (min(cands),))


def solve_mplus_dc_split(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    profile = _uniform_profile(instance, _back_ballot(instance))
    if not election.voters:
        action = _trivial_partition(instance)
        return DirectResult(True, Witness(action=action, profile=profile))
    m = total_weight(blank)
    for b in rivals:
        if table[b] - m <= 0:
            action = _pair_partition(instance, b)
            return DirectResult(True, Witness(action=action, profile=profile))
    return DirectResult(False)


def _dc_split_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    if not election.voters:
        return _trivial_partition(instance)
    m = total_weight(blank)
    for b in rivals:
        if table[b] + m <= 0:
            return _pair_partition(instance, b)
    return None


def solve_dc_split_cf(instance):
    action = _dc_split_competitive(instance)
    if action is None:
        return DirectResult(False)
    return DirectResult(True, Witness(action=action))


def solve_dc_split_mf(instance):
    if _dc_split_competitive(instance) is not None:
        return DirectResult(True)
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, _front_ballot(instance)))
    )


def _ranks_over(ballot, above, below):
    return ballot.index(above) < ballot.index(below)


def solve_mplus_dcav(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    profile = _uniform_profile(instance, _back_ballot(instance))
    if not election.voters:
        action = ControlAction("AV", ())
        return DirectResult(True, Witness(action=action, profile=profile))
    m = total_weight(blank)
    for b in rivals:
        helpers = [
            (v.weight, i)
            for i, v in enumerate(spec.unregistered)
            if v.manipulator or _ranks_over(v.ballot, b, p)
        ]
        chosen = heaviest_indices(helpers, spec.limit)
        pull = sum(spec.unregistered[i].weight for i in chosen)
        if table[b] - m - pull <= 0:
            action = ControlAction("AV", tuple(sorted(chosen)))
            return DirectResult(True, Witness(action=action, profile=profile))
    return DirectResult(False)


def _dcav_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    if not election.voters:
        return ControlAction("AV", ())
    m = total_weight(blank)
    for b in rivals:
        helpers = [
            (v.weight, i)
            for i, v in enumerate(spec.unregistered)
            if not v.manipulator and _ranks_over(v.ballot, b, p)
        ]
        chosen = heaviest_indices(helpers, spec.limit)
        pull = sum(spec.unregistered[i].weight for i in chosen)
        if table[b] + m - pull <= 0:
            return ControlAction("AV", tuple(sorted(chosen)))
    return None


def solve_dcav_cf(instance):
    action = _dcav_competitive(instance)
    if action is None:
        return DirectResult(False)
    return DirectResult(True, Witness(action=action))


def solve_dcav_mf(instance):
    if _dcav_competitive(instance) is not None:
        return DirectResult(True)
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, _front_ballot(instance)))
    )


def solve_mplus_dcdv(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    profile = _uniform_profile(instance, _back_ballot(instance))
    if not rivals:
        if len(election.voters) <= spec.limit:
            action = ControlAction("DV", tuple(range(len(election.voters))))
            return DirectResult(True, Witness(action=action, profile=profile))
        return DirectResult(False)
    m = total_weight(blank)
    for b in rivals:
        friends = [
            (v.weight, i)
            for i, v in enumerate(election.voters)
            if not v.manipulator and _ranks_over(v.ballot, p, b)
        ]
        chosen = heaviest_indices(friends, spec.limit)
        cut = sum(election.voters[i].weight for i in chosen)
        if table[b] - m - cut <= 0:
            action = ControlAction("DV", tuple(sorted(chosen)))
            return DirectResult(True, Witness(action=action, profile=profile))
    return DirectResult(False)


def _dcdv_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    if not rivals:
        if len(election.voters) <= spec.limit:
            return ControlAction("DV", tuple(range(len(election.voters))))
        return None
    m = total_weight(blank)
    for b in rivals:
        removable = [
            (v.weight, i)
            for i, v in enumerate(election.voters)
            if v.manipulator or _ranks_over(v.ballot, p, b)
        ]
        chosen = heaviest_indices(removable, spec.limit)
        cut = sum(election.voters[i].weight for i in chosen)
        if table[b] + m - cut <= 0:
            return ControlAction("DV", tuple(sorted(chosen)))
    return None


def solve_dcdv_cf(instance):
    action = _dcdv_competitive(instance)
    if action is None:
        return DirectResult(False)
    return DirectResult(True, Witness(action=action))


def solve_dcdv_mf(instance):
    if _dcdv_competitive(instance) is not None:
        return DirectResult(True)
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, _front_ballot(instance)))
    )


def solve_partition_search(instance):
    family = condorcet_family(
        instance.election.candidates, instance.spec.distinguished
    )
    return partition_engine(instance, family)


CASES = {
    ("CCAC", "M+"): solve_mplus_ccac,
    ("CCAC", "CF"): solve_ccac_cf,
    ("CCAC", "MF"): solve_ccac_mf,
    ("CCDC", "M+"): solve_mplus_ccdc,
    ("CCDC", "CF"): solve_ccdc_cf,
    ("CCDC", "MF"): solve_ccdc_mf,
    ("DCAC", "M+"): solve_mplus_dcac,
    ("DCAC", "CF"): solve_dcac_cf,
    ("DCAC", "MF"): solve_dcac_mf,
    ("DCDC", "M+"): solve_mplus_dcdc,
    ("DCDC", "CF"): solve_dcdc_cf,
    ("DCDC", "MF"): solve_dcdc_mf,
    ("DCAV", "M+"): solve_mplus_dcav,
    ("DCAV", "CF"): solve_dcav_cf,
    ("DCAV", "MF"): solve_dcav_mf,
    ("DCDV", "M+"): solve_mplus_dcdv,
    ("DCDV", "CF"): solve_dcdv_cf,
    ("DCDV", "MF"): solve_dcdv_mf,
}

for _tie in ("TE", "TP"):
    for _mode in ("M+", "CF", "MF"):
        for _kind in ("PC", "RPC"):
            CASES[(f"CC{_kind}-{_tie}", _mode)] = solve_partition_search
        CASES[(f"DCPV-{_tie}", _mode)] = solve_partition_search
    CASES[(f"DCPC-{_tie}", "M+")] = solve_mplus_dc_split
    CASES[(f"DCPC-{_tie}", "CF")] = solve_dc_split_cf
    CASES[(f"DCPC-{_tie}", "MF")] = solve_dc_split_mf
    CASES[(f"DCRPC-{_tie}", "M+")] = solve_mplus_dc_split
    CASES[(f"DCRPC-{_tie}", "CF")] = solve_dc_split_cf
    CASES[(f"DCRPC-{_tie}", "MF")] = solve_dc_split_mf
