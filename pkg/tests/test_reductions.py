"""Instance transformers: formula games, number partition, and embeddings."""

import pytest

from votegames.core import Election, Voter
from votegames.errors import MalformedInputError, UnsupportedCaseError
from votegames.formulas import parse_sexpr, qbf_eval
from votegames.oracle import solve_oracle
from votegames.reductions import (
    NONPARTITION_TARGETS,
    ManipulationProblem,
    embed_manipulation,
    has_partition,
    pad_zero_manipulators,
    partition_to_borda_ccav_mf,
    qbf2_to_ccpv,
    qbf2_to_nonpartition,
    qbf3_to_ccpv_tp_mf_revoting,
    solve_manipulation,
)
from votegames.scenarios import ProblemInstance, Scenario
from votegames.control import ControlSpec

TWO_BLOCK = tuple(
    parse_sexpr(text)
    for text in (
        "(or x1 (not x2))",
        "(and x1 (not x2))",
        "(or (and x1 (not x2)) (and (not x1) x2))",
    )
)
THREE_BLOCK = tuple(
    parse_sexpr(text)
    for text in (
        "(or (and x1 x2) (or x3 (not x3)))",
        "(and x1 (and x2 x3))",
        "(or (not x1) (or x2 x3))",
    )
)


def test_two_block_images_answer_the_quantified_formula():
    for formula in TWO_BLOCK:
        for ctype in NONPARTITION_TARGETS:
            for mode in ("CF", "MF"):
                image = qbf2_to_nonpartition(formula, ctype, mode)
                truth = qbf_eval(formula, "EA" if mode == "CF" else "AE")
                assert solve_oracle(image).answer is truth, (ctype, mode)


def test_two_block_partition_images_answer_the_quantified_formula():
    for formula in TWO_BLOCK:
        for tie in ("TE", "TP"):
            for mode in ("CF", "MF"):
                image = qbf2_to_ccpv(formula, tie, mode)
                truth = qbf_eval(formula, "EA" if mode == "CF" else "AE")
                assert solve_oracle(image).answer is truth, (tie, mode)


def test_three_block_images_answer_the_alternating_formula():
    for formula in THREE_BLOCK:
        image = qbf3_to_ccpv_tp_mf_revoting(formula)
        assert image.scenario.revoting is True
        assert image.scenario.mode == "MF"
        assert image.spec.ctype == "CCPV-TP"
        truth = qbf_eval(formula, "AEA")
        assert solve_oracle(image, max_states=10**9).answer is truth


def test_image_shapes_follow_the_control_kind():
    xor = TWO_BLOCK[2]
    av = qbf2_to_nonpartition(xor, "CCAV", "CF")
    assert len(av.spec.unregistered) == 2
    assert sum(v.manipulator for v in av.election.voters) == 1
    assert av.spec.limit == 1
    dv = qbf2_to_nonpartition(xor, "DCDV", "MF")
    assert len(dv.election.voters) == 2 + 3
    assert dv.election.voters[-2].manipulator
    ac = qbf2_to_nonpartition(xor, "CCAC", "CF")
    assert len(ac.spec.spoilers) == 2
    assert ac.spec.distinguished == min(ac.election.candidates)
    pv = qbf2_to_ccpv(xor, "TE", "MF")
    assert len(pv.election.voters) == 5
    assert pv.election.voters[-1].manipulator
    assert pv.scenario.revoting is False


def test_formula_images_reject_bad_arguments():
    odd = parse_sexpr("(or x1 (or x2 x3))")
    with pytest.raises(MalformedInputError):
        qbf2_to_nonpartition(odd, "CCAV", "CF")
    with pytest.raises(MalformedInputError):
        qbf2_to_nonpartition(TWO_BLOCK[0], "CCPV-TE", "CF")
    with pytest.raises(MalformedInputError):
        qbf2_to_nonpartition(TWO_BLOCK[0], "CCAV", "M+")
    with pytest.raises(MalformedInputError):
        qbf2_to_ccpv(TWO_BLOCK[0], "TX", "CF")
    with pytest.raises(MalformedInputError):
        qbf2_to_ccpv(odd, "TE", "CF")
    with pytest.raises(MalformedInputError):
        qbf3_to_ccpv_tp_mf_revoting(TWO_BLOCK[0])


def test_has_partition_frozen_values():
    assert has_partition((1, 1)) is True
    assert has_partition((1, 3)) is False
    assert has_partition((2,)) is False
    assert has_partition((3,)) is False
    assert has_partition((1, 2, 3)) is True
    assert has_partition((1, 1, 1, 4)) is False
    with pytest.raises(MalformedInputError):
        has_partition(())
    with pytest.raises(MalformedInputError):
        has_partition((0, 2))
    with pytest.raises(MalformedInputError):
        has_partition((True, 1))


def test_partition_image_answers_the_complement():
    for weights in ((1, 1), (1, 3), (2, 2), (1, 1, 1, 1), (1, 1, 2)):
        image = partition_to_borda_ccav_mf(weights)
        assert solve_oracle(image).answer is (not has_partition(weights))


def test_partition_image_shape():
    image = partition_to_borda_ccav_mf((1, 3))
    assert image.election.rule == "borda"
    assert tuple(v.weight for v in image.election.voters) == (1, 3)
    assert all(v.manipulator for v in image.election.voters)
    assert tuple(v.weight for v in image.spec.unregistered) == (5, 5)
    assert image.spec.limit == 1
    assert image.scenario.mode == "MF"
    with pytest.raises(MalformedInputError):
        partition_to_borda_ccav_mf((1, 2))


def test_mode_padding_preserves_the_zero_manipulator_answer():
    roll = (Voter(("a", "p")), Voter(("a", "p")), Voter(("p", "a")))
    base = ProblemInstance(
        Election(("a", "p"), roll, "plurality"),
        ControlSpec("CCDV", "p", limit=1),
        Scenario("constructive", "M+"),
    )
    answers = {
        solve_oracle(pad_zero_manipulators(base, mode)).answer
        for mode in ("M+", "CF", "MF")
    }
    assert answers == {True}
    hustled = ProblemInstance(
        Election(("a", "p"), (Voter(None, manipulator=True),), "plurality"),
        ControlSpec("CCDV", "p", limit=1),
        Scenario("constructive", "M+"),
    )
    with pytest.raises(MalformedInputError):
        pad_zero_manipulators(hustled, "CF")


def test_manipulation_brute_force_frozen_answers():
    strong = Election(
        ("a", "p"), (Voter(("a", "p")), Voter(None, weight=2, manipulator=True)), "plurality"
    )
    assert solve_manipulation(ManipulationProblem(strong, "p", "constructive")) is True
    assert solve_manipulation(ManipulationProblem(strong, "a", "destructive")) is True
    weak = Election(
        ("a", "p"), (Voter(("a", "p"), weight=2), Voter(None, manipulator=True)), "plurality"
    )
    assert solve_manipulation(ManipulationProblem(weak, "p", "constructive")) is False
    assert solve_manipulation(ManipulationProblem(weak, "a", "destructive")) is False
    with pytest.raises(MalformedInputError):
        ManipulationProblem(weak, "zz", "constructive")
    with pytest.raises(MalformedInputError):
        ManipulationProblem(weak, "p", "upward")


def test_embeddings_preserve_or_complement_the_answer():
    election = Election(
        ("a", "p"), (Voter(("a", "p")), Voter(None, weight=2, manipulator=True)), "plurality"
    )
    for goal, same, opposing in (
        ("constructive", "CCDV", "DCDV"),
        ("destructive", "DCAV", "CCAV"),
    ):
        problem = ManipulationProblem(election, "p", goal)
        source = solve_manipulation(problem)
        image, flipped = embed_manipulation(problem, same, "M+")
        assert flipped is False
        assert solve_oracle(image).answer is source
        for mode in ("CF", "MF"):
            image, flipped = embed_manipulation(problem, opposing, mode)
            assert flipped is True
            assert solve_oracle(image).answer is (not source)


def test_embeddings_zero_out_the_chair():
    problem = ManipulationProblem(
        Election(("a", "p"), (Voter(None, manipulator=True),), "plurality"),
        "p",
        "constructive",
    )
    image, _ = embed_manipulation(problem, "CCDV", "M+")
    assert image.spec.limit == 0
    assert image.spec.unregistered == ()


def test_embedding_argument_errors():
    problem = ManipulationProblem(
        Election(("a", "p"), (Voter(None, manipulator=True),), "plurality"),
        "p",
        "constructive",
    )
    with pytest.raises(UnsupportedCaseError):
        embed_manipulation(problem, "CCPV-TE", "M+")
    with pytest.raises(MalformedInputError):
        embed_manipulation(problem, "DCDV", "M+")
    with pytest.raises(MalformedInputError):
        embed_manipulation(problem, "CCDV", "CF")
    with pytest.raises(MalformedInputError):
        embed_manipulation(problem, "CCDV", "XX")
