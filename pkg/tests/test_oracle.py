"""Brute-force reference solver: spaces, budgets, answers, and witnesses."""

import itertools

import pytest

from votegames.control import ControlAction, ControlSpec, legal_actions
from votegames.core import Election, Voter
from votegames.errors import BudgetExceededError
from votegames.oracle import (
    DEFAULT_BUDGET,
    ballot_space,
    count_ballots,
    count_profiles,
    enumerate_profiles,
    required_states,
    solve_oracle,
)
from votegames.scenarios import ProblemInstance, Scenario, goal_holds


def instance(rule, cands, roll, ctype, goal, mode, limit=None, revoting=False, pool=()):
    return ProblemInstance(
        Election(cands, roll, rule),
        ControlSpec(ctype, "p", limit=limit, unregistered=pool),
        Scenario(goal, mode, revoting=revoting),
    )


def test_ballot_space_orders_are_deterministic():
    assert ballot_space("approval", ("b", "a")) == (
        frozenset(),
        frozenset({"a"}),
        frozenset({"b"}),
        frozenset({"a", "b"}),
    )
    ranks = ballot_space("plurality", ("b", "a", "c"))
    assert len(ranks) == 6
    assert ranks[0] == ("a", "b", "c")
    assert ranks[-1] == ("c", "b", "a")


def test_space_counts_match_enumeration():
    assert count_ballots("approval", 3) == 8
    assert count_ballots("borda", 3) == 6
    assert count_profiles("plurality", 3, 2) == 36
    profiles = list(enumerate_profiles("plurality", ("a", "p"), 2))
    assert len(profiles) == count_profiles("plurality", 2, 2)
    assert profiles[0] == (("a", "p"), ("a", "p"))


def test_required_states_multiplies_actions_profiles_and_revotes():
    roll = (Voter(("a", "p")), Voter(None, weight=2, manipulator=True))
    plain = instance("plurality", ("a", "p"), roll, "CCPV-TE", "constructive", "M+")
    assert required_states(plain) == 2 * 2
    revoting = instance(
        "plurality", ("a", "p"), roll, "CCPV-TE", "constructive", "M+", revoting=True
    )
    assert required_states(revoting) == 2 * 2 * 2


def test_budget_refusal_reports_both_numbers():
    roll = (Voter(("a", "p")), Voter(None, weight=2, manipulator=True))
    inst = instance(
        "plurality", ("a", "p"), roll, "CCPV-TE", "constructive", "M+", revoting=True
    )
    with pytest.raises(BudgetExceededError) as err:
        solve_oracle(inst, max_states=3)
    assert err.value.required == 8
    assert err.value.max_states == 3
    assert solve_oracle(inst, max_states=8).answer is True


def test_cooperative_yes_carries_a_replayable_witness():
    roll = (Voter(("a", "p")), Voter(("a", "p")), Voter(("p", "a")))
    inst = instance("plurality", ("a", "p"), roll, "CCDV", "constructive", "M+", limit=1)
    result = solve_oracle(inst)
    assert result.answer is True
    assert result.witness.action == ControlAction("DV", (0,))
    assert result.witness.profile == ()
    assert goal_holds(inst, result.witness.action, result.witness.profile)
    assert 0 < result.states <= required_states(inst)


def test_chair_first_yes_names_a_move_good_against_every_profile():
    roll = (Voter(("p", "a"), weight=3), Voter(None, manipulator=True))
    inst = instance("plurality", ("a", "p"), roll, "CCDV", "constructive", "CF", limit=0)
    result = solve_oracle(inst)
    assert result.answer is True
    assert result.witness.action == ControlAction("DV", ())
    for profile in enumerate_profiles("plurality", ("a", "p"), 1):
        assert goal_holds(inst, result.witness.action, profile)


def test_manipulators_first_no_names_an_unanswerable_profile():
    roll = (Voter(("a", "p"), weight=2), Voter(None, manipulator=True))
    inst = instance("plurality", ("a", "p"), roll, "CCDV", "constructive", "MF", limit=0)
    result = solve_oracle(inst)
    assert result.answer is False
    assert result.witness.profile == (("a", "p"),)
    for action in legal_actions(inst.spec, inst.election):
        assert not goal_holds(inst, action, result.witness.profile)


def test_cooperative_revoting_witness_includes_the_recast():
    roll = (Voter(("a", "p")), Voter(None, weight=2, manipulator=True))
    inst = instance(
        "plurality", ("a", "p"), roll, "CCPV-TE", "constructive", "M+", revoting=True
    )
    result = solve_oracle(inst)
    assert result.answer is True
    assert result.witness.revote is not None
    assert goal_holds(
        inst, result.witness.action, result.witness.profile, result.witness.revote
    )


def test_modes_can_disagree_when_manipulators_exist():
    roll = (Voter(("a", "p", "b")), Voter(("b", "p", "a")), Voter(None, manipulator=True))
    answers = {
        mode: solve_oracle(
            instance("veto", ("a", "b", "p"), roll, "DCPV-TE", "destructive", mode)
        ).answer
        for mode in ("M+", "CF", "MF")
    }
    assert answers == {"M+": True, "CF": False, "MF": True}


def test_modes_collapse_without_manipulators():
    roll = (Voter(("a", "b", "p")), Voter(("p", "b", "a")), Voter(("b", "p", "a")))
    for ctype, goal, limit in (
        ("CCDV", "constructive", 1),
        ("DCDC", "destructive", 1),
        ("CCPC-TP", "constructive", None),
        ("DCRPC-TE", "destructive", None),
    ):
        answers = {
            solve_oracle(
                instance("plurality", ("a", "b", "p"), roll, ctype, goal, mode, limit=limit)
            ).answer
            for mode in ("M+", "CF", "MF")
        }
        assert len(answers) == 1


def test_default_budget_is_generous_enough_for_tiny_instances():
    roll = tuple(Voter(("a", "p")) for _ in range(3))
    inst = instance("plurality", ("a", "p"), roll, "CCPV-TE", "constructive", "M+")
    assert required_states(inst) < DEFAULT_BUDGET
    assert solve_oracle(inst).answer is False
