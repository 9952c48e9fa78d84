"""Candidates, ballots, elections, and winner determination.

Candidate names are nonempty strings over ``A-Z a-z 0-9 _ < > ,`` and every
name comparison in this package is plain byte order, so ``","`` sorts before
digits, digits before ``"<"``, and ``"_"`` before lowercase letters.  A ballot
is either a strict ranking (a tuple listing every candidate exactly once), an
approval set (a frozenset of candidates), or ``None`` for a manipulative voter
whose vote has not been chosen yet.

Five standard rules are provided (plurality, veto, borda, approval, and a
strict pairwise-majority rule) plus three name-inspecting rules implemented in
:mod:`votegames.artificial`.  Winner sets follow the nonunique-winner
convention: every candidate tied for the best outcome wins.
"""

import string
from dataclasses import dataclass

from votegames.errors import (
    MalformedInputError,
    UnresolvedManipulatorError,
    UnsupportedRuleError,
)

NAME_CHARS = frozenset(string.ascii_letters + string.digits + "_<>,")

SCORE_RULES = ("plurality", "veto", "borda", "approval")
STANDARD_RULES = SCORE_RULES + ("condorcet",)
ARTIFICIAL_RULES = ("formula-ac", "formula-pv", "formula-rev")
ALL_RULES = STANDARD_RULES + ARTIFICIAL_RULES

OrderBallot = tuple[str, ...]
ApprovalBallot = frozenset[str]
Ballot = OrderBallot | ApprovalBallot | None


def validate_name(name):
    """Check one candidate name against the restricted alphabet."""
    if not isinstance(name, str) or not name:
        raise MalformedInputError("candidate names must be nonempty strings")
    stray = set(name) - NAME_CHARS
    if stray:
        raise MalformedInputError(
            f"candidate name {name!r} uses characters outside the allowed alphabet: "
            + "".join(sorted(stray))
        )
    return name


def ballot_kind(rule):
    """Return "approval" or "order" according to what ballots the rule reads."""
    if rule not in ALL_RULES:
        raise UnsupportedRuleError(f"unknown voting rule {rule!r}")
    return "approval" if rule == "approval" else "order"


@dataclass(frozen=True)
class Voter:
    """One voter: ballot, positive integer weight, and two role flags.

    ``ballot is None`` marks a manipulative voter whose vote is still open;
    fixed voters always carry a concrete ballot.  ``registered`` is False only
    for voters sitting in an add-voters pool.
    """

    ballot: Ballot
    weight: int = 1
    registered: bool = True
    manipulator: bool = False

    def __post_init__(self):
        if isinstance(self.weight, bool) or not isinstance(self.weight, int):
            raise MalformedInputError("voter weight must be an integer")
        if self.weight < 1:
            raise MalformedInputError(f"voter weight must be at least 1, got {self.weight}")
        if self.ballot is None:
            if not self.manipulator:
                raise MalformedInputError("only manipulative voters may have an unset ballot")
            return
        if isinstance(self.ballot, tuple):
            if len(set(self.ballot)) != len(self.ballot):
                raise MalformedInputError("a ranking may not repeat a candidate")
        elif not isinstance(self.ballot, frozenset):
            raise MalformedInputError(
                "a ballot is a ranking tuple, an approval frozenset, or None"
            )
        for name in self.ballot:
            validate_name(name)


@dataclass(frozen=True)
class Election:
    """A concrete election: who runs, who votes, under which rule.

    Every voter in ``voters`` takes part.  Ballot contents are checked against
    the candidate roster only at evaluation time, because control by adding
    candidates keeps ballots over a larger potential candidate set.
    """

    candidates: tuple[str, ...]
    voters: tuple[Voter, ...]
    rule: str

    def __post_init__(self):
        kind = ballot_kind(self.rule)
        if not isinstance(self.candidates, tuple):
            raise MalformedInputError("candidates must be given as a tuple of names")
        for name in self.candidates:
            validate_name(name)
        if len(set(self.candidates)) != len(self.candidates):
            raise MalformedInputError("candidate names must be unique")
        if not isinstance(self.voters, tuple):
            raise MalformedInputError("voters must be given as a tuple")
        for voter in self.voters:
            if not isinstance(voter, Voter):
                raise MalformedInputError("voters must be Voter values")
            if voter.ballot is None:
                continue
            if kind == "approval" and not isinstance(voter.ballot, frozenset):
                raise MalformedInputError("approval elections take approval ballots")
            if kind == "order" and not isinstance(voter.ballot, tuple):
                raise MalformedInputError(f"{self.rule} elections take ranking ballots")


def _checked_ballots(rule, candidates, ballots):
    """Validate (ballot, weight) pairs against the candidate set."""
    kind = ballot_kind(rule)
    cset = frozenset(candidates)
    out = []
    for slot, (ballot, weight) in enumerate(ballots):
        if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
            raise MalformedInputError(f"ballot {slot}: weight must be an integer >= 1")
        if ballot is None:
            raise UnresolvedManipulatorError(
                f"ballot {slot} is still unset; assign every manipulator before evaluating"
            )
        if kind == "approval":
            if not isinstance(ballot, frozenset):
                raise MalformedInputError(f"ballot {slot}: approval ballots are frozensets")
            if not ballot <= cset:
                raise MalformedInputError(
                    f"ballot {slot} approves candidates that are not running"
                )
        else:
            if not isinstance(ballot, tuple):
                raise MalformedInputError(f"ballot {slot}: {rule} ballots are rankings")
            if len(ballot) != len(cset) or frozenset(ballot) != cset:
                raise MalformedInputError(
                    f"ballot {slot} is not a strict ranking of the candidate set"
                )
        out.append((ballot, weight))
    return out


def _tally(rule, candidates, checked):
    totals = dict.fromkeys(candidates, 0)
    top = len(candidates) - 1
    for ballot, weight in checked:
        if rule == "plurality":
            totals[ballot[0]] += weight
        elif rule == "veto":
            for name in ballot[:-1]:
                totals[name] += weight
        elif rule == "borda":
            for place, name in enumerate(ballot):
                totals[name] += (top - place) * weight
        else:
            for name in ballot:
                totals[name] += weight
    return totals


def _margin(checked, first, second):
    edge = 0
    for ballot, weight in checked:
        if ballot.index(first) < ballot.index(second):
            edge += weight
        else:
            edge -= weight
    return edge


def winners(rule, candidates, ballots):
    """Winner set for the rule; ballots are ordered (ballot, weight) pairs.

    Score rules return the argmax-score set, so an empty ballot list makes
    every candidate a winner.  The pairwise-majority rule returns the single
    candidate with strictly positive margin against every rival, or the empty
    set; with one candidate and no rivals that candidate wins vacuously,
    except that an empty ballot list never produces a majority.
    """
    checked = _checked_ballots(rule, candidates, ballots)
    if not candidates:
        raise MalformedInputError("an election needs at least one candidate")
    if rule in ARTIFICIAL_RULES:
        from votegames import artificial

        spread = []
        for ballot, weight in checked:
            spread.extend([ballot] * weight)
        return artificial.artificial_winners(rule, frozenset(candidates), spread)
    if rule == "condorcet":
        if not checked:
            return frozenset()
        return frozenset(
            c
            for c in candidates
            if all(_margin(checked, c, d) > 0 for d in candidates if d != c)
        )
    totals = _tally(rule, candidates, checked)
    best = max(totals.values())
    return frozenset(c for c in candidates if totals[c] == best)


def scores(rule, candidates, ballots):
    """Per-candidate weighted point totals for one of the four score rules."""
    if rule in ALL_RULES and rule not in SCORE_RULES:
        raise UnsupportedRuleError(f"{rule} has no per-candidate score")
    checked = _checked_ballots(rule, candidates, ballots)
    return _tally(rule, candidates, checked)


def score(rule, candidates, ballots, candidate):
    """Point total of one candidate; see :func:`scores`."""
    if candidate not in candidates:
        raise MalformedInputError(f"{candidate!r} is not a listed candidate")
    return scores(rule, candidates, ballots)[candidate]


def pairwise_margin(candidates, ballots, first, second):
    """Weight preferring ``first`` over ``second`` minus the reverse weight."""
    for ballot, _ in ballots:
        if isinstance(ballot, frozenset):
            raise UnsupportedRuleError("pairwise margins need ranking ballots")
    if first not in candidates or second not in candidates:
        raise MalformedInputError("margins are defined between listed candidates only")
    checked = _checked_ballots("condorcet", candidates, ballots)
    if first == second:
        return 0
    return _margin(checked, first, second)


def election_winners(election):
    """Winner set of a fully concrete election."""
    return winners(
        election.rule,
        election.candidates,
        [(v.ballot, v.weight) for v in election.voters],
    )
