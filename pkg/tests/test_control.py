"""Chair moves: legality, enumeration, and two-round play mechanics."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from votegames.control import (
    CONTROL_TYPES,
    ControlAction,
    ControlSpec,
    action_kind,
    check_action,
    count_action_space,
    evaluate,
    goal_of,
    is_partition,
    legal_actions,
    manipulator_slots,
    play,
    potential_candidates,
    project,
    tie_rule,
)
from votegames.core import Election, Voter
from votegames.errors import (
    InvalidScenarioError,
    MalformedInputError,
    UnresolvedManipulatorError,
)


def fixed(*orders, weight=1):
    return tuple(Voter(ballot=tuple(order), weight=weight) for order in orders)


def test_type_taxonomy():
    assert len(CONTROL_TYPES) == 20
    assert goal_of("CCAV") == "constructive"
    assert goal_of("DCRPC-TE") == "destructive"
    assert action_kind("CCPV-TP") == "PV"
    assert tie_rule("CCPC-TE") == "TE"
    assert tie_rule("CCAC") is None
    assert is_partition("DCRPC-TP") and not is_partition("DCDC")
    with pytest.raises(MalformedInputError):
        goal_of("CCXX")


def test_spec_validation_guards_resources():
    with pytest.raises(MalformedInputError):
        ControlSpec("CCAV", "p")
    with pytest.raises(MalformedInputError):
        ControlSpec("CCAV", "p", limit=-1)
    with pytest.raises(MalformedInputError):
        ControlSpec("CCPV-TE", "p", limit=1)
    with pytest.raises(MalformedInputError):
        ControlSpec("CCDV", "p", limit=1, unregistered=(Voter(("p",), registered=False),))
    with pytest.raises(MalformedInputError):
        ControlSpec("CCAV", "p", limit=1, unregistered=(Voter(("p",)),))
    with pytest.raises(MalformedInputError):
        ControlSpec("CCDC", "p", limit=1, spoilers=("s",))


def test_action_space_counts_are_frozen():
    roll = fixed("pab", "apb", "bap")
    election = Election(("a", "b", "p"), roll, "plurality")
    assert count_action_space(ControlSpec("CCDV", "p", limit=1), election) == 4
    assert count_action_space(ControlSpec("DCDC", "p", limit=2), election) == 4
    assert count_action_space(ControlSpec("CCPV-TE", "p"), election) == 4
    assert count_action_space(ControlSpec("CCPC-TP", "p"), election) == 8
    assert count_action_space(ControlSpec("DCRPC-TE", "p"), election) == 4
    pool = (Voter(("a", "b", "p"), registered=False), Voter(("p", "a", "b"), registered=False))
    assert count_action_space(ControlSpec("CCAV", "p", limit=2, unregistered=pool), election) == 4
    empty = Election(("p",), (), "plurality")
    assert count_action_space(ControlSpec("DCPV-TP", "p"), empty) == 1


@given(
    st.sampled_from(CONTROL_TYPES),
    st.integers(min_value=0, max_value=3),
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=0, max_value=2),
)
def test_enumeration_matches_the_count(ctype, voters, cands, extras):
    names = ("p", "a", "b")[:cands]
    roll = tuple(Voter(tuple(names)) for _ in range(voters))
    kind = action_kind(ctype)
    pool = tuple(Voter(tuple(names), registered=False) for _ in range(extras)) if kind == "AV" else ()
    spoilers = tuple("st"[:extras]) if kind == "AC" else ()
    limit = 2 if kind in ("AV", "DV", "AC", "DC") else None
    spec = ControlSpec(ctype, "p", limit=limit, unregistered=pool, spoilers=spoilers)
    election = Election(names, roll, "plurality")
    listed = list(legal_actions(spec, election))
    assert len(listed) == count_action_space(spec, election)
    assert len(set(listed)) == len(listed)
    for action in listed:
        check_action(spec, election, action)


def test_runoff_partitions_anchor_the_least_candidate():
    election = Election(("b", "a", "p"), (), "plurality")
    spec = ControlSpec("CCRPC-TE", "p")
    groups = [action.selection for action in legal_actions(spec, election)]
    assert all("a" in group for group in groups)
    assert ("a",) in groups and ("a", "b", "p") in groups


def test_check_action_rejects_illegal_moves():
    election = Election(("a", "p"), fixed("ap", "pa"), "plurality")
    spec = ControlSpec("CCDV", "p", limit=1)
    with pytest.raises(MalformedInputError):
        check_action(spec, election, ControlAction("DC", ("a",)))
    with pytest.raises(MalformedInputError):
        check_action(spec, election, ControlAction("DV", (0, 1)))
    with pytest.raises(MalformedInputError):
        check_action(spec, election, ControlAction("DV", (5,)))
    dcdc = ControlSpec("DCDC", "p", limit=1)
    with pytest.raises(MalformedInputError):
        check_action(dcdc, election, ControlAction("DC", ("p",)))
    check_action(dcdc, election, ControlAction("DC", ("a",)))
    ccac = ControlSpec("CCAC", "p", limit=1, spoilers=("s",))
    with pytest.raises(MalformedInputError):
        check_action(ccac, election, ControlAction("AC", ("a",)))


def test_project_erases_rankings_and_intersects_sets():
    assert project(("a", "b", "p"), ("p", "a")) == ("a", "p")
    assert project(frozenset({"a", "p"}), ("p", "b")) == frozenset({"p"})
    assert project(("a",), ()) == ()


def test_deleting_every_candidate_leaves_an_empty_final():
    election = Election(("a", "b", "p"), fixed("abp"), "plurality")
    spec = ControlSpec("CCDC", "p", limit=3)
    out = play("plurality", spec, election, ControlAction("DC", ("a", "b", "p")), ())
    assert out.final_candidates == ()
    assert out.final_winners == frozenset()


def test_added_candidates_widen_the_final_round():
    election = Election(("a", "p"), fixed("sap", "sap", "pas"), "plurality")
    spec = ControlSpec("CCAC", "p", limit=1, spoilers=("s",))
    hold = evaluate("plurality", spec, election, ControlAction("AC", ()), ())
    assert hold == {"a"}
    add = evaluate("plurality", spec, election, ControlAction("AC", ("s",)), ())
    assert add == {"s"}


def test_added_voters_join_the_roll():
    pool = (
        Voter(("p", "a"), registered=False),
        Voter(("p", "a"), registered=False),
    )
    election = Election(("a", "p"), fixed("ap"), "plurality")
    spec = ControlSpec("CCAV", "p", limit=2, unregistered=pool)
    assert evaluate("plurality", spec, election, ControlAction("AV", ()), ()) == {"a"}
    assert evaluate("plurality", spec, election, ControlAction("AV", (0, 1)), ()) == {"p"}


def test_voter_partition_promotes_per_round_winners():
    roll = fixed("pab", "apb", "abp")
    election = Election(("a", "b", "p"), roll, "plurality")
    spec = ControlSpec("CCPV-TE", "p")
    out = play("plurality", spec, election, ControlAction("PV", (0,)), ())
    assert out.round_survivors == (frozenset({"p"}), frozenset({"a"}))
    assert out.final_candidates == ("a", "p")
    assert out.final_winners == {"a"}


def test_ties_eliminate_kills_tied_subelections():
    roll = fixed("abp", "bap")
    election = Election(("a", "b", "p"), roll, "plurality")
    action = ControlAction("PC", ("a", "b"))
    te = play("plurality", ControlSpec("CCPC-TE", "p"), election, action, ())
    assert te.round_survivors == (frozenset(),)
    assert te.final_candidates == ("p",)
    assert te.final_winners == {"p"}
    tp = play("plurality", ControlSpec("CCPC-TP", "p"), election, action, ())
    assert tp.final_candidates == ("a", "b", "p")
    assert tp.final_winners == {"a", "b"}


def test_runoff_partition_runs_both_groups_past_the_full_roll():
    roll = fixed("abp", "bap")
    election = Election(("a", "b", "p"), roll, "plurality")
    spec = ControlSpec("CCRPC-TE", "p")
    out = play("plurality", spec, election, ControlAction("RPC", ("a",)), ())
    assert out.round_survivors == (frozenset({"a"}), frozenset({"b"}))
    assert out.final_candidates == ("a", "b")
    assert out.final_winners == {"a", "b"}


def test_manipulators_fill_their_slots_and_may_revote():
    roll = (Voter(("a", "p")), Voter(None, weight=2, manipulator=True))
    election = Election(("a", "p"), roll, "plurality")
    spec = ControlSpec("CCPV-TE", "p")
    assert manipulator_slots(spec, election) == (("roll", 1),)
    action = ControlAction("PV", (0,))
    steady = play("plurality", spec, election, action, (("p", "a"),))
    assert steady.final_winners == {"p"}
    flipped = play("plurality", spec, election, action, (("p", "a"),), revote=(("a", "p"),))
    assert flipped.final_winners == {"a"}


def test_revoting_outside_partitions_is_rejected():
    election = Election(("a", "p"), fixed("ap"), "plurality")
    spec = ControlSpec("CCDV", "p", limit=0)
    with pytest.raises(InvalidScenarioError):
        play("plurality", spec, election, ControlAction("DV", ()), (), revote=())


def test_profile_length_and_contents_are_checked():
    roll = (Voter(None, manipulator=True),)
    election = Election(("a", "p"), roll, "plurality")
    spec = ControlSpec("CCDV", "p", limit=0)
    action = ControlAction("DV", ())
    with pytest.raises(UnresolvedManipulatorError):
        play("plurality", spec, election, action, ())
    with pytest.raises(MalformedInputError):
        play("plurality", spec, election, action, (("a",),))
    with pytest.raises(UnresolvedManipulatorError):
        play("plurality", spec, election, action, (None,))


def test_potential_candidates_include_spoilers():
    election = Election(("a", "p"), (), "plurality")
    spec = ControlSpec("CCAC", "p", limit=1, spoilers=("s",))
    assert potential_candidates(spec, election) == ("a", "p", "s")
