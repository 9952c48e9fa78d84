"""Direct solvers for control under approval ballots.

Approval totals are additive per candidate, so most cases compare the
distinguished candidate's reachable total against the strongest rival's.
Cooperating manipulators approve exactly their favored candidate; hostile
ones approve exactly the rival under test, and since a single hostile ballot
may approve many rivals at once, a constructive chair must clear every rival
against the full hostile weight simultaneously.

Ties-eliminate candidate partitions add one wrinkle: a first-round tie at the
top eliminates everyone in the group, so cooperating manipulators may angle
for an exact tie between the two strongest rivals.  Hitting an exact total
with weighted helpers is a subset-sum question, so that one family insists on
unit-weight manipulators and defers anything else to the oracle.
"""

from votegames.control import ControlAction, manipulator_slots, potential_candidates
from votegames.core import scores
from votegames.errors import UnsupportedCaseError
from votegames.oracle import Witness, ballot_space
from votegames.solvers.common import (
    DirectResult,
    heaviest_indices,
    partition_engine,
    split_roll,
    top_weight_sum,
    total_weight,
)


def _context(instance):
    election = instance.election
    spec = instance.spec
    fixed, blank = split_roll(election)
    names = potential_candidates(spec, election)
    table = scores("approval", names, [(v.ballot, v.weight) for v in fixed])
    rivals = tuple(c for c in election.candidates if c != spec.distinguished)
    return election, spec, spec.distinguished, rivals, fixed, blank, table


def _uniform_profile(instance, ballot):
    slots = len(manipulator_slots(instance.spec, instance.election))
    return tuple(ballot for _ in range(slots))


def _strongest(rivals, table):
    return max(sorted(rivals), key=lambda c: table[c])


def _split_kind(ctype):
    return "PC" if "PC" in ctype and "RPC" not in ctype else "RPC"


def _group_with(instance, members):
    """Partition action whose first group is exactly ``members``."""
    kind = _split_kind(instance.spec.ctype)
    cands = instance.election.candidates
    side = set(members)
    if kind == "RPC" and side and min(cands) not in side:
        side = set(cands) - side
    if kind == "RPC" and not side:
        side = {min(cands)}
    return ControlAction(kind, tuple(sorted(side)))


def solve_mplus_ccac(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    if rivals and table[p] + m < max(table[c] for c in rivals):
        return DirectResult(False)
    action = ControlAction("AC", ())
    return DirectResult(
        True, Witness(action=action, profile=_uniform_profile(instance, frozenset({p})))
    )


def solve_mplus_ccdc(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    bad = tuple(c for c in rivals if table[c] > table[p] + m)
    if len(bad) > spec.limit:
        return DirectResult(False)
    action = ControlAction("DC", bad)
    return DirectResult(
        True, Witness(action=action, profile=_uniform_profile(instance, frozenset({p})))
    )


def solve_mplus_cc_split_te(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    action = _group_with(instance, rivals)
    plain = _uniform_profile(instance, frozenset({p}))
    if not rivals or table[p] + m >= max(table[c] for c in rivals):
        return DirectResult(True, Witness(action=action, profile=plain))
    if len(rivals) < 2:
        return DirectResult(False)
    if any(v.weight != 1 for v in blank):
        raise UnsupportedCaseError(
            "approval constructive ties-eliminate partition needs unit-weight "
            "manipulators to aim for an exact first-round tie"
        )
    leader = _strongest(rivals, table)
    runner = _strongest(tuple(c for c in rivals if c != leader), table)
    gap = table[leader] - table[runner]
    if gap > m:
        return DirectResult(False)
    tie = frozenset({p, runner})
    profile = tuple(tie if i < gap else frozenset({p}) for i in range(len(blank)))
    return DirectResult(True, Witness(action=action, profile=profile))


def solve_mplus_cc_split_tp(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    if rivals and table[p] + m < max(table[c] for c in rivals):
        return DirectResult(False)
    action = _group_with(instance, rivals)
    return DirectResult(
        True, Witness(action=action, profile=_uniform_profile(instance, frozenset({p})))
    )


def solve_mplus_dcac(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    for c in rivals:
        if table[c] + m > table[p]:
            action = ControlAction("AC", ())
            profile = _uniform_profile(instance, frozenset({c}))
            return DirectResult(True, Witness(action=action, profile=profile))
    if spec.limit >= 1:
        for sp in sorted(spec.spoilers):
            if table[sp] + m > table[p]:
                action = ControlAction("AC", (sp,))
                profile = _uniform_profile(instance, frozenset({sp}))
                return DirectResult(True, Witness(action=action, profile=profile))
    return DirectResult(False)


def solve_mplus_dcdc(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    if not rivals:
        return DirectResult(False)
    d = _strongest(rivals, table)
    if table[d] + m <= table[p]:
        return DirectResult(False)
    action = ControlAction("DC", ())
    profile = _uniform_profile(instance, frozenset({d}))
    return DirectResult(True, Witness(action=action, profile=profile))


def _mplus_dc_split(instance, strict):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    if not rivals:
        return DirectResult(False)
    d = _strongest(rivals, table)
    edge = table[d] + m - table[p]
    if (edge <= 0) if strict else (edge < 0):
        return DirectResult(False)
    action = _group_with(instance, (p, d))
    profile = _uniform_profile(instance, frozenset({d}))
    return DirectResult(True, Witness(action=action, profile=profile))


def solve_mplus_dc_split_te(instance):
    return _mplus_dc_split(instance, strict=False)


def solve_mplus_dc_split_tp(instance):
    return _mplus_dc_split(instance, strict=True)


def solve_mplus_dcav(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    for c in sorted(rivals):
        helpers = [
            (v.weight, i)
            for i, v in enumerate(spec.unregistered)
            if v.manipulator or (c in v.ballot and p not in v.ballot)
        ]
        chosen = heaviest_indices(helpers, spec.limit)
        gain = sum(spec.unregistered[i].weight for i in chosen)
        if table[c] + m + gain > table[p]:
            action = ControlAction("AV", tuple(sorted(chosen)))
            profile = _uniform_profile(instance, frozenset({c}))
            return DirectResult(True, Witness(action=action, profile=profile))
    return DirectResult(False)


def solve_mplus_dcdv(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    for c in sorted(rivals):
        drop = [
            (v.weight, i)
            for i, v in enumerate(election.voters)
            if not v.manipulator and p in v.ballot and c not in v.ballot
        ]
        chosen = heaviest_indices(drop, spec.limit)
        cut = sum(election.voters[i].weight for i in chosen)
        if table[c] + m > table[p] - cut:
            action = ControlAction("DV", tuple(sorted(chosen)))
            profile = _uniform_profile(instance, frozenset({c}))
            return DirectResult(True, Witness(action=action, profile=profile))
    return DirectResult(False)


def _ccac_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    bad = next((c for c in sorted(rivals) if table[c] + m > table[p]), None)
    return bad


def solve_ccac_cf(instance):
    if _ccac_competitive(instance) is None:
        return DirectResult(True, Witness(action=ControlAction("AC", ())))
    return DirectResult(False)


def solve_ccac_mf(instance):
    bad = _ccac_competitive(instance)
    if bad is None:
        return DirectResult(True)
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, frozenset({bad})))
    )


def _ccdc_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    bad = tuple(c for c in rivals if table[c] + m > table[p])
    return bad if len(bad) <= spec.limit else None


def solve_ccdc_cf(instance):
    bad = _ccdc_competitive(instance)
    if bad is None:
        return DirectResult(False)
    return DirectResult(True, Witness(action=ControlAction("DC", bad)))


def solve_ccdc_mf(instance):
    if _ccdc_competitive(instance) is not None:
        return DirectResult(True)
    rivals = tuple(
        c for c in instance.election.candidates if c != instance.spec.distinguished
    )
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, frozenset(rivals)))
    )


def _cc_split_competitive(instance, tie):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    if not rivals:
        return True
    top = max(table[c] for c in rivals)
    if table[p] >= top + m:
        return True
    if tie == "TE" and m == 0:
        # With nobody left to break it, a natural first-round tie at the top
        # eliminates every strongest rival.
        return sum(1 for c in rivals if table[c] == top) >= 2
    return False


def _cc_split_cf(instance, tie):
    if not _cc_split_competitive(instance, tie):
        return DirectResult(False)
    rivals = tuple(
        c for c in instance.election.candidates if c != instance.spec.distinguished
    )
    return DirectResult(True, Witness(action=_group_with(instance, rivals)))


def _cc_split_mf(instance, tie):
    if _cc_split_competitive(instance, tie):
        return DirectResult(True)
    election, spec, p, rivals, _, blank, table = _context(instance)
    d = _strongest(rivals, table)
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, frozenset({d})))
    )


def solve_ccpc_te_cf(instance):
    return _cc_split_cf(instance, "TE")


def solve_ccpc_te_mf(instance):
    return _cc_split_mf(instance, "TE")


def solve_ccpc_tp_cf(instance):
    return _cc_split_cf(instance, "TP")


def solve_ccpc_tp_mf(instance):
    return _cc_split_mf(instance, "TP")


def solve_ccrpc_te_cf(instance):
    return _cc_split_cf(instance, "TE")


def solve_ccrpc_te_mf(instance):
    return _cc_split_mf(instance, "TE")


def _dcac_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    if any(table[c] > table[p] + m for c in rivals):
        return ControlAction("AC", ())
    if spec.limit >= 1:
        for sp in sorted(spec.spoilers):
            if table[sp] > table[p] + m:
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
    p = instance.spec.distinguished
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, frozenset({p})))
    )


def _dcdc_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    return bool(rivals) and max(table[c] for c in rivals) > table[p] + m


def solve_dcdc_cf(instance):
    if _dcdc_competitive(instance):
        return DirectResult(True, Witness(action=ControlAction("DC", ())))
    return DirectResult(False)


def solve_dcdc_mf(instance):
    if _dcdc_competitive(instance):
        return DirectResult(True)
    p = instance.spec.distinguished
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, frozenset({p})))
    )


def _dc_split_competitive(instance, strict):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    if not rivals:
        return None
    d = _strongest(rivals, table)
    edge = table[d] - (table[p] + m)
    if (edge <= 0) if strict else (edge < 0):
        return None
    return _group_with(instance, (p, d))


def _dc_split_cf(instance, strict):
    action = _dc_split_competitive(instance, strict)
    if action is None:
        return DirectResult(False)
    return DirectResult(True, Witness(action=action))


def _dc_split_mf(instance, strict):
    if _dc_split_competitive(instance, strict) is not None:
        return DirectResult(True)
    p = instance.spec.distinguished
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, frozenset({p})))
    )


def solve_dcpc_te_cf(instance):
    return _dc_split_cf(instance, strict=False)


def solve_dcpc_te_mf(instance):
    return _dc_split_mf(instance, strict=False)


def solve_dcpc_tp_cf(instance):
    return _dc_split_cf(instance, strict=True)


def solve_dcpc_tp_mf(instance):
    return _dc_split_mf(instance, strict=True)


def _dcav_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    for c in sorted(rivals):
        gain = top_weight_sum(
            spec.limit,
            [
                v.weight
                for v in spec.unregistered
                if not v.manipulator and c in v.ballot and p not in v.ballot
            ],
        )
        if table[c] + gain > table[p] + m:
            helpers = [
                (v.weight, i)
                for i, v in enumerate(spec.unregistered)
                if not v.manipulator and c in v.ballot and p not in v.ballot
            ]
            chosen = heaviest_indices(helpers, spec.limit)
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
    p = instance.spec.distinguished
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, frozenset({p})))
    )


def _dcdv_competitive(instance):
    election, spec, p, rivals, _, blank, table = _context(instance)
    m = total_weight(blank)
    for c in sorted(rivals):
        drop = [
            (v.weight, i)
            for i, v in enumerate(election.voters)
            if v.manipulator or (p in v.ballot and c not in v.ballot)
        ]
        chosen = heaviest_indices(drop, spec.limit)
        cut = sum(election.voters[i].weight for i in chosen)
        if table[c] > table[p] + m - cut:
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
    p = instance.spec.distinguished
    return DirectResult(
        False, Witness(profile=_uniform_profile(instance, frozenset({p})))
    )


def solve_pv_search(instance):
    family = ballot_space("approval", instance.election.candidates)
    return partition_engine(instance, family)


CASES = {
    ("CCAC", "M+"): solve_mplus_ccac,
    ("CCAC", "CF"): solve_ccac_cf,
    ("CCAC", "MF"): solve_ccac_mf,
    ("CCDC", "M+"): solve_mplus_ccdc,
    ("CCDC", "CF"): solve_ccdc_cf,
    ("CCDC", "MF"): solve_ccdc_mf,
    ("CCPC-TE", "M+"): solve_mplus_cc_split_te,
    ("CCPC-TE", "CF"): solve_ccpc_te_cf,
    ("CCPC-TE", "MF"): solve_ccpc_te_mf,
    ("CCPC-TP", "M+"): solve_mplus_cc_split_tp,
    ("CCPC-TP", "CF"): solve_ccpc_tp_cf,
    ("CCPC-TP", "MF"): solve_ccpc_tp_mf,
    ("CCRPC-TE", "M+"): solve_mplus_cc_split_te,
    ("CCRPC-TE", "CF"): solve_ccrpc_te_cf,
    ("CCRPC-TE", "MF"): solve_ccrpc_te_mf,
    ("CCRPC-TP", "M+"): solve_mplus_cc_split_tp,
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
    ("DCPC-TE", "M+"): solve_mplus_dc_split_te,
    ("DCPC-TE", "CF"): solve_dcpc_te_cf,
    ("DCPC-TE", "MF"): solve_dcpc_te_mf,
    ("DCPC-TP", "M+"): solve_mplus_dc_split_tp,
    ("DCPC-TP", "CF"): solve_dcpc_tp_cf,
    ("DCPC-TP", "MF"): solve_dcpc_tp_mf,
    ("DCRPC-TE", "M+"): solve_mplus_dc_split_te,
    ("DCRPC-TE", "CF"): solve_dcpc_te_cf,
    ("DCRPC-TE", "MF"): solve_dcpc_te_mf,
    ("DCRPC-TP", "M+"): solve_mplus_dc_split_tp,
    ("DCRPC-TP", "CF"): solve_dcpc_tp_cf,
    ("DCRPC-TP", "MF"): solve_dcpc_tp_mf,
    ("DCPV-TE", "M+"): solve_pv_search,
    ("DCPV-TE", "CF"): solve_pv_search,
    ("DCPV-TE", "MF"): solve_pv_search,
    ("DCPV-TP", "M+"): solve_pv_search,
    ("DCPV-TP", "CF"): solve_pv_search,
    ("DCPV-TP", "MF"): solve_pv_search,
}
