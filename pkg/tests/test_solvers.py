"""Direct solvers: registry shape, frozen fixtures, and oracle agreement."""

import pytest

from votegames.control import ControlSpec
from votegames.core import Election, Voter
from votegames.errors import MalformedInputError, UnsupportedCaseError
from votegames.generate import CampaignConfig, iter_instances
from votegames.oracle import solve_oracle
from votegames.scenarios import ProblemInstance, Scenario, goal_holds
from votegames.solvers import (
    REGISTRY,
    base_control,
    lookup,
    solve_direct,
    solve_veto3w,
)

APPROVAL_TYPES = (
    "CCAC", "CCDC", "CCPC-TE", "CCPC-TP", "CCRPC-TE", "CCRPC-TP",
    "DCAC", "DCAV", "DCDC", "DCDV", "DCPC-TE", "DCPC-TP",
    "DCPV-TE", "DCPV-TP", "DCRPC-TE", "DCRPC-TP",
)


def test_registry_inventory_is_frozen():
    assert len(REGISTRY) == 118
    by_rule = {}
    for (rule, ctype, mode), (tag, _) in REGISTRY.items():
        by_rule.setdefault(rule, []).append((ctype, mode, tag))
    assert len(by_rule["plurality"]) == 18
    assert len(by_rule["approval"]) == 46
    assert len(by_rule["condorcet"]) == 48
    assert len(by_rule["veto"]) == 4
    assert len(by_rule["borda"]) == 2
    tags = {tag for entries in by_rule.values() for (_, _, tag) in entries}
    assert tags == {"polynomial", "np-search"}
    assert all(tag == "np-search" for _, _, tag in by_rule["borda"])
    assert sum(
        tag == "polynomial" for entries in by_rule.values() for (_, _, tag) in entries
    ) == 116


def test_registry_covers_the_documented_cases():
    plurality_types = ("CCAV", "CCDV", "DCAV", "DCDV", "CCPV-TE", "DCPV-TE")
    for ctype in plurality_types:
        for mode in ("M+", "CF", "MF"):
            assert lookup("plurality", ctype, mode)[1] is not None
    assert lookup("plurality", "CCPV-TP", "M+") == ("unsupported", None)
    for ctype in APPROVAL_TYPES:
        for mode in ("M+", "CF", "MF"):
            assert lookup("condorcet", ctype, mode)[1] is not None
            if ctype == "CCRPC-TP" and mode != "M+":
                assert lookup("approval", ctype, mode) == ("unsupported", None)
            else:
                assert lookup("approval", ctype, mode)[1] is not None
    assert lookup("condorcet", "CCRPC-TP", "CF")[1] is not None
    for ctype in ("CCAV", "CCDV"):
        for mode in ("CF", "MF"):
            assert lookup("veto", ctype, mode)[1] is not None
        assert lookup("borda", ctype, "CF")[1] is not None
        assert lookup("borda", ctype, "MF") == ("unsupported", None)
        assert lookup("veto", ctype, "M+") == ("unsupported", None)


def test_revoting_always_falls_back_to_the_oracle():
    election = Election(("a", "p"), (), "plurality")
    inst = ProblemInstance(
        election,
        ControlSpec("CCPV-TE", "p"),
        Scenario("constructive", "CF", revoting=True),
    )
    with pytest.raises(UnsupportedCaseError):
        solve_direct(inst)


def test_unsupported_cases_raise_instead_of_guessing():
    election = Election(("a", "b", "p"), (), "veto")
    inst = ProblemInstance(
        election, ControlSpec("CCDC", "p", limit=1), Scenario("constructive", "M+")
    )
    with pytest.raises(UnsupportedCaseError):
        solve_direct(inst)


def test_weighted_solvers_demand_exactly_three_candidates():
    election = Election(("a", "p"), (Voter(("a", "p")),), "veto")
    inst = ProblemInstance(
        election, ControlSpec("CCDV", "p", limit=1), Scenario("constructive", "CF")
    )
    with pytest.raises(UnsupportedCaseError):
        solve_direct(inst)


def test_rule_entry_points_check_the_rule():
    election = Election(("a", "p"), (), "plurality")
    inst = ProblemInstance(
        election, ControlSpec("CCDV", "p", limit=1), Scenario("constructive", "CF")
    )
    with pytest.raises(MalformedInputError):
        solve_veto3w(inst)


def test_base_control_answers_the_zero_manipulator_question():
    roll = (Voter(("a", "p")), Voter(("a", "p")), Voter(("p", "a")))
    election = Election(("a", "p"), roll, "plurality")
    assert base_control("plurality", "CCDV", election, "p", limit=1) is True
    assert base_control("plurality", "CCDV", election, "p", limit=0) is False
    with pytest.raises(MalformedInputError):
        base_control(
            "plurality",
            "CCDV",
            Election(("a", "p"), (Voter(None, manipulator=True),), "plurality"),
            "p",
            limit=1,
        )
    with pytest.raises(UnsupportedCaseError):
        base_control("veto", "CCPC-TE", Election(("a", "b", "p"), (), "veto"), "p")


def test_weighted_veto_deletion_fixture():
    roll = (Voter(("b", "p", "a"), weight=3), Voter(("a", "b", "p"), weight=1))
    election = Election(("a", "b", "p"), roll, "veto")
    for limit, expected in ((0, False), (1, True)):
        inst = ProblemInstance(
            election,
            ControlSpec("CCDV", "p", limit=limit),
            Scenario("constructive", "CF"),
        )
        assert solve_direct(inst).answer is expected
        assert solve_oracle(inst).answer is expected


def test_weighted_borda_addition_fixture():
    roll = (
        Voter(("p", "a", "b"), weight=3),
        Voter(("a", "p", "b"), weight=1),
        Voter(None, weight=2, manipulator=True),
    )
    pool = (
        Voter(("p", "b", "a"), weight=3, registered=False),
        Voter(("a", "p", "b"), weight=1, registered=False),
    )
    election = Election(("a", "b", "p"), roll, "borda")
    for limit, expected in ((0, False), (2, True)):
        inst = ProblemInstance(
            election,
            ControlSpec("CCAV", "p", limit=limit, unregistered=pool),
            Scenario("constructive", "CF"),
        )
        assert solve_direct(inst).answer is expected
        assert solve_oracle(inst).answer is expected


def _cross_check(config):
    checked = 0
    for inst in iter_instances(config):
        rule = inst.election.rule
        tag, fn = lookup(rule, inst.spec.ctype, inst.scenario.mode)
        if fn is None:
            continue
        try:
            direct = solve_direct(inst)
        except UnsupportedCaseError:
            continue
        assert direct.answer == solve_oracle(inst).answer, inst
        witness = direct.witness
        if (
            direct.answer
            and inst.scenario.mode == "M+"
            and witness is not None
            and witness.action is not None
            and witness.profile is not None
        ):
            assert goal_holds(inst, witness.action, witness.profile)
        checked += 1
    return checked


def test_plurality_solvers_match_the_oracle_on_small_instances():
    assert _cross_check(
        CampaignConfig(
            rules=("plurality",),
            max_candidates=3,
            max_voters=2,
            max_manipulators=1,
            cap=10**6,
        )
    ) > 0


def test_approval_solvers_match_the_oracle_on_small_instances():
    assert _cross_check(
        CampaignConfig(
            rules=("approval",),
            control_types=APPROVAL_TYPES,
            max_candidates=3,
            max_voters=2,
            max_manipulators=1,
            cap=10**6,
        )
    ) > 0


def test_condorcet_solvers_match_the_oracle_on_small_instances():
    assert _cross_check(
        CampaignConfig(
            rules=("condorcet",),
            control_types=APPROVAL_TYPES,
            max_candidates=3,
            max_voters=2,
            max_manipulators=1,
            cap=10**6,
        )
    ) > 0


def test_weighted_solvers_match_the_oracle_on_small_instances():
    assert _cross_check(
        CampaignConfig(
            rules=("veto", "borda"),
            control_types=("CCAV", "CCDV"),
            modes=("CF", "MF"),
            max_candidates=3,
            max_voters=3,
            max_manipulators=1,
            max_weight=2,
            cap=10**6,
        )
    ) > 0
