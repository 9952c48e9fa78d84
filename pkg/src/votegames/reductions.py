"""Instance transformers between decision problems and control games.

Three families of quantified-formula reductions target the name-inspecting
election systems: two-block formulas become either single-round add/delete
control or ties-eliminate voter-partition control, and three-block formulas
become the revoting voter-partition game.  In each image the chair's legal
moves realize one quantifier block, the manipulator's ballot (or revote)
realizes the other(s), and any off-script move falls into the rule's
fallback outcome, which always punishes the chair.

A weighted number-partition question maps onto three-candidate Borda control
by adding a voter, and manipulation questions embed into add/delete control
by shrinking the chair's resource to nothing; a flag records when the image
answers the complement.  Small brute-force evaluators for the source
problems ride along so every image can be checked independently.
"""

import itertools
from dataclasses import dataclass

from votegames.artificial import (
    FIRST_ROUND_MARKER,
    _indexed,
    ac_header,
    decoder_candidate,
    pair_candidate,
    pv_header,
    pv_vote,
    rev_candidates,
    rev_header,
    rev_vote,
    slot_ballot,
)
from votegames.control import ControlSpec, action_kind, goal_of
from votegames.core import Election, Voter, election_winners
from votegames.errors import MalformedInputError, UnsupportedCaseError
from votegames.formulas import variable_span
from votegames.oracle import ballot_space
from votegames.scenarios import GOALS, ProblemInstance, Scenario

NONPARTITION_TARGETS = ("CCAC", "DCAC", "CCDC", "DCDC", "CCAV", "DCAV", "CCDV", "DCDV")


def _blank(weight=1):
    return Voter(ballot=None, weight=weight, registered=True, manipulator=True)


def _two_block_width(formula):
    span = variable_span(formula)
    if span % 2:
        raise MalformedInputError(
            "two-block reductions need an even variable count; pad the formula first"
        )
    return span // 2


def qbf2_to_nonpartition(formula, ctype, mode):
    """Image of an equal-two-block formula under add/delete control.

    Chair-first play asks the exists-forall question and manipulator-first
    play the forall-exists one; the image's answer equals that truth value.
    The chair's structural choice (which pair member to add, delete, or
    keep) spells one block; the lone manipulator's ballot spells the other.
    """
    if ctype not in NONPARTITION_TARGETS:
        raise MalformedInputError(f"no two-block image for control type {ctype!r}")
    if mode not in ("CF", "MF"):
        raise MalformedInputError("two-block images exist for the CF and MF modes")
    width = _two_block_width(formula)
    goal = goal_of(ctype)
    polarity = "l" if goal == "constructive" else "w"
    block_one = "h" if mode == "CF" else "v"
    kind = action_kind(ctype)
    if kind in ("AC", "DC"):
        layout = "c" if mode == "CF" else "m"
    else:
        layout = "a" if kind == "AV" else "d"
    header = ac_header(layout, polarity, block_one, formula)
    pairs = tuple(
        pair_candidate(i, b, width) for i in range(1, width + 1) for b in (0, 1)
    )
    anchors = tuple(decoder_candidate(j, width) for j in range(1, width + 1))

    if kind == "AC":
        cands = (header,) + (anchors if layout == "m" else ())
        election = Election(cands, (_blank(),), "formula-ac")
        spec = ControlSpec(ctype, header, limit=width, spoilers=pairs)
    elif kind == "DC":
        cands = (header,) + (anchors if layout == "m" else ()) + pairs
        election = Election(cands, (_blank(),), "formula-ac")
        spec = ControlSpec(ctype, header, limit=width)
    else:
        cands = (header,) + tuple(
            decoder_candidate(j, width + 1) for j in range(1, width + 2)
        )

        def pattern(index, bit):
            ballot = slot_ballot(index, bit, width, header)
            return Voter(ballot=ballot, weight=1, registered=kind == "DV")

        if kind == "AV":
            election = Election(cands, (_blank(),), "formula-ac")
            pool = tuple(
                pattern(i, b) for i in range(1, width + 1) for b in (0, 1)
            )
            spec = ControlSpec(ctype, header, limit=width, unregistered=pool)
        else:
            roll = [pattern(i, b) for i in range(1, width + 1) for b in (0, 1)]
            roll.append(pattern(width + 1, 0))
            roll.append(_blank())
            roll.append(pattern(width + 1, 1))
            election = Election(cands, tuple(roll), "formula-ac")
            spec = ControlSpec(ctype, header, limit=width)
    return ProblemInstance(election, spec, Scenario(goal, mode))


def qbf2_to_ccpv(formula, tie, mode):
    """Image of an equal-two-block formula under voter-partition control.

    The chair's split sends exactly one doubled pattern vote per pair into
    the manipulator's round, reading one block off the split and the other
    off the manipulator's ballot; every other split promotes the round
    marker or nobody, and the distinguished header then cannot win.
    """
    if tie not in ("TE", "TP"):
        raise MalformedInputError("the tie handling must be TE or TP")
    if mode not in ("CF", "MF"):
        raise MalformedInputError("voter-partition images exist for CF and MF")
    width = _two_block_width(formula)
    header = pv_header("h" if mode == "CF" else "v", formula)
    cands = tuple(
        sorted(
            {FIRST_ROUND_MARKER, header}
            | {_indexed("d", j, width + 1) for j in range(1, width + 2)}
        )
    )
    votes = sorted(
        pv_vote(i, b, width, header) for i in range(1, width + 1) for b in (0, 1)
    )
    roll = [Voter(ballot=vote, weight=1, registered=True) for vote in votes for _ in (0, 1)]
    roll.append(_blank())
    election = Election(cands, tuple(roll), "formula-pv")
    spec = ControlSpec(f"CCPV-{tie}", header)
    return ProblemInstance(election, spec, Scenario("constructive", mode))


def qbf3_to_ccpv_tp_mf_revoting(formula):
    """Image of an equal-three-block formula under revoting partition control.

    Round one reads the manipulator's opening ballot and the chair's split;
    the survivors encode both blocks as kept pair members, and the
    manipulator's fresh final-round ballot supplies the innermost block.
    """
    span = variable_span(formula)
    if span % 3:
        raise MalformedInputError(
            "three-block reductions need a variable count divisible by three"
        )
    width = span // 3
    header = rev_header(formula)
    cands = tuple(sorted(rev_candidates(width, header)))
    votes = sorted(
        rev_vote(i, b, width, header) for i in range(1, width + 1) for b in (0, 1)
    )
    roll = [Voter(ballot=vote, weight=1, registered=True) for vote in votes for _ in (0, 1)]
    roll.append(_blank())
    election = Election(cands, tuple(roll), "formula-rev")
    spec = ControlSpec("CCPV-TP", header)
    return ProblemInstance(election, spec, Scenario("constructive", "MF", revoting=True))


def has_partition(weights):
    """Whether some subsequence of the weights sums to half their total."""
    _check_weights(weights)
    total = sum(weights)
    if total % 2:
        return False
    half = total // 2
    return any(
        sum(combo) == half
        for size in range(1, len(weights) + 1)
        for combo in itertools.combinations(weights, size)
    )


def _check_weights(weights):
    if not weights:
        raise MalformedInputError("the weight list must be nonempty")
    for w in weights:
        if isinstance(w, bool) or not isinstance(w, int) or w < 1:
            raise MalformedInputError("weights are positive integers")


def partition_to_borda_ccav_mf(weights):
    """Three-candidate Borda voter-adding image of a number-partition list.

    The manipulators carry the input weights; the chair may add one of two
    heavy opposed sweeteners.  A balanced manipulator split defeats both
    additions, and any unbalanced play loses to one of them, so the image
    answers the negation of the partition question.
    """
    _check_weights(weights)
    total = sum(weights)
    if total % 2:
        raise MalformedInputError("the weights must sum to an even number")
    half = total // 2
    roll = tuple(_blank(w) for w in weights)
    sweet = 3 * half - 1
    pool = (
        Voter(ballot=("p", "a", "b"), weight=sweet, registered=False),
        Voter(ballot=("p", "b", "a"), weight=sweet, registered=False),
    )
    election = Election(("a", "b", "p"), roll, "borda")
    spec = ControlSpec("CCAV", "p", limit=1, unregistered=pool)
    return ProblemInstance(election, spec, Scenario("constructive", "MF"))


def pad_zero_manipulators(instance, mode):
    """The same manipulator-free control question posed in another mode.

    With no blank ballots every profile quantifier ranges over one empty
    profile, so all three modes agree and the answer is preserved.
    """
    spec = instance.spec
    if any(v.manipulator for v in instance.election.voters) or any(
        v.manipulator for v in spec.unregistered
    ):
        raise MalformedInputError("mode padding applies to manipulator-free instances")
    return ProblemInstance(
        instance.election, spec, Scenario(goal_of(spec.ctype), mode)
    )


@dataclass(frozen=True)
class ManipulationProblem:
    """Can the blank-ballot voters make the distinguished candidate win (lose)?"""

    election: Election
    distinguished: str
    goal: str

    def __post_init__(self):
        if self.goal not in GOALS:
            raise MalformedInputError(f"goal must be one of {GOALS}")
        if self.distinguished not in self.election.candidates:
            raise MalformedInputError("the distinguished candidate must be running")


def solve_manipulation(problem):
    """Brute-force answer to a manipulation problem; independent of the solvers."""
    election = problem.election
    slots = [i for i, v in enumerate(election.voters) if v.manipulator]
    space = ballot_space(election.rule, election.candidates)
    for assignment in itertools.product(space, repeat=len(slots)):
        ballots = list(election.voters)
        for where, ballot in zip(slots, assignment):
            old = ballots[where]
            ballots[where] = Voter(
                ballot=ballot,
                weight=old.weight,
                registered=old.registered,
                manipulator=False,
            )
        filled = Election(election.candidates, tuple(ballots), election.rule)
        winning = problem.distinguished in election_winners(filled)
        if winning == (problem.goal == "constructive"):
            return True
    return False


def embed_manipulation(problem, target_type, target_mode):
    """A control instance answering a manipulation problem, plus a flip flag.

    The chair's resource is zeroed out, so only the profile quantifier acts.
    Manipulators-cooperate play preserves the answer; in the competitive
    modes the profile quantifier is universal, so the image must chase the
    opposing goal and its answer is the complement (flag True).
    """
    if action_kind(target_type) not in ("AC", "DC", "AV", "DV"):
        raise UnsupportedCaseError(
            "partition control has no resource to zero out, so nothing embeds into it"
        )
    if target_mode not in ("M+", "CF", "MF"):
        raise MalformedInputError(f"unknown scenario mode {target_mode!r}")
    target_goal = goal_of(target_type)
    if target_mode == "M+":
        if target_goal != problem.goal:
            raise MalformedInputError(
                "cooperative embeddings need a control type with the same goal"
            )
        complemented = False
    else:
        if target_goal == problem.goal:
            raise MalformedInputError(
                "competitive embeddings need a control type with the opposing goal"
            )
        complemented = True
    spec = ControlSpec(target_type, problem.distinguished, limit=0)
    instance = ProblemInstance(
        problem.election, spec, Scenario(target_goal, target_mode)
    )
    return instance, complemented
