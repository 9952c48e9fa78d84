"""Name-inspecting rules: header decoding, pattern votes, and fallbacks."""

import pytest

from votegames.artificial import (
    FINAL_ROUND_MARKER,
    FIRST_ROUND_MARKER,
    ac_header,
    artificial_winners,
    decoder_candidate,
    pair_candidate,
    pv_header,
    pv_vote,
    rev_candidates,
    rev_header,
    rev_pair,
    rev_vote,
    slot_ballot,
)
from votegames.core import winners
from votegames.errors import MalformedInputError
from votegames.formulas import parse_sexpr

OR2 = parse_sexpr("(or x1 x2)")
OR3 = parse_sexpr("(or x1 (or x2 x3))")


def ranked(*ballots):
    return [(ballot, 1) for ballot in ballots]


def test_generated_names_sort_by_index():
    assert pair_candidate(1, 1, 1) == "u11"
    assert pair_candidate(2, 0, 12) == "u020"
    assert decoder_candidate(3, 10) == "e03"
    assert rev_pair(2, 1, 0, 1) == "q210"
    assert decoder_candidate(2, 10) < decoder_candidate(10, 10)


def test_headers_sort_below_every_generated_name():
    header = ac_header("c", "l", "h", OR2)
    assert header == ",clh<or,x1,x2>"
    assert header < FIRST_ROUND_MARKER < pair_candidate(1, 0, 1)
    assert pv_header("v", OR2) == ",pv<or,x1,x2>"
    assert rev_header(OR3) == ",r<or,x1,<or,x2,x3>>"


def test_header_builders_reject_bad_fields():
    with pytest.raises(MalformedInputError):
        ac_header("z", "l", "h", OR2)
    with pytest.raises(MalformedInputError):
        ac_header("c", "x", "h", OR2)
    with pytest.raises(MalformedInputError):
        pv_header("q", OR2)


def test_single_round_pair_layout_reads_both_blocks():
    header = ac_header("c", "l", "h", OR2)
    high = pair_candidate(1, 1, 1)
    low = pair_candidate(1, 0, 1)
    assert winners("formula-ac", (header, high), ranked((high, header))) == {header}
    assert winners("formula-ac", (header, high), ranked((header, high))) == {header}
    assert (
        winners("formula-ac", (header, low), ranked((header, low))) == frozenset()
    )


def test_single_round_winner_polarity_targets_the_header():
    header = ac_header("c", "w", "h", OR2)
    high = pair_candidate(1, 1, 1)
    low = pair_candidate(1, 0, 1)
    assert winners("formula-ac", (header, high), ranked((high, header))) == {high}
    assert winners("formula-ac", (header, low), ranked((header, low))) == {header, low}


def test_single_round_anchored_layout_reads_bits_off_fixed_decoders():
    header = ac_header("m", "l", "h", OR2)
    anchor = decoder_candidate(1, 1)
    high = pair_candidate(1, 1, 1)
    cands = (header, anchor, high)
    assert winners("formula-ac", cands, ranked((anchor, header, high))) == {header}
    low = pair_candidate(1, 0, 1)
    cands = (header, anchor, low)
    assert (
        winners("formula-ac", cands, ranked((header, anchor, low))) == frozenset()
    )


def test_single_round_voter_layout_reads_slot_votes():
    header = ac_header("a", "l", "h", OR2)
    cands = (header, decoder_candidate(1, 2), decoder_candidate(2, 2))
    free = ("e1", "e2", header)
    assert winners(
        "formula-ac", cands, ranked(free, slot_ballot(1, 1, 1, header))
    ) == {header}
    timid = (header, "e1", "e2")
    assert (
        winners("formula-ac", cands, ranked(timid, slot_ballot(1, 0, 1, header)))
        == frozenset()
    )


def test_single_round_roll_layout_pins_the_free_slot_between_sentinels():
    header = ac_header("d", "l", "h", OR2)
    cands = (header, decoder_candidate(1, 2), decoder_candidate(2, 2))
    votes = (
        slot_ballot(1, 1, 1, header),
        slot_ballot(2, 0, 1, header),
        ("e1", header, "e2"),
        slot_ballot(2, 1, 1, header),
    )
    assert winners("formula-ac", cands, ranked(*votes)) == {header}
    shuffled = (votes[1], votes[0], votes[2], votes[3])
    assert winners("formula-ac", cands, ranked(*shuffled)) == frozenset()


def test_single_round_off_script_rosters_hit_the_loss_fallback():
    header = ac_header("c", "l", "h", OR2)
    both = (header, pair_candidate(1, 0, 1), pair_candidate(1, 1, 1))
    ballot = tuple(sorted(both))
    assert winners("formula-ac", both, ranked(ballot)) == frozenset()
    high = pair_candidate(1, 1, 1)
    two = ranked((high, header), (header, high))
    assert winners("formula-ac", (header, high), two) == frozenset()
    assert winners("formula-ac", ("a", "b"), ranked(("a", "b"))) == frozenset()


def test_single_round_odd_variable_count_header_fails_to_parse():
    header = ",clhx1"
    assert winners("formula-ac", (header,), ranked((header,))) == frozenset()


def test_partition_rule_scores_a_conforming_first_round():
    header = pv_header("h", OR2)
    cands = (FIRST_ROUND_MARKER, header, "d1", "d2")
    pattern = pv_vote(1, 1, 1, header)
    assert pattern == (FIRST_ROUND_MARKER, "d1", header, "d2")
    spare = ("d1", FIRST_ROUND_MARKER, header, "d2")
    assert winners("formula-pv", cands, [(pattern, 2), (spare, 1)]) == {header}
    low = pv_vote(1, 0, 1, header)
    dull = (FIRST_ROUND_MARKER, "d2", "d1", header)
    assert winners("formula-pv", cands, [(low, 2), (dull, 1)]) == frozenset()


def test_partition_rule_final_round_elects_everyone():
    header = pv_header("h", OR2)
    cands = (header, "d1", "d2")
    ballot = ("d1", "d2", header)
    assert winners("formula-pv", cands, ranked(ballot)) == set(cands)


def test_partition_rule_punishes_off_script_rounds():
    header = pv_header("h", OR2)
    cands = (FIRST_ROUND_MARKER, header, "d1", "d2")
    high = pv_vote(1, 1, 1, header)
    low = pv_vote(1, 0, 1, header)
    spare = ("d1", FIRST_ROUND_MARKER, header, "d2")
    mixed = ranked(high, low, spare)
    assert winners("formula-pv", cands, mixed) == {FIRST_ROUND_MARKER}
    doubled = [(high, 2), (low, 2)]
    assert winners("formula-pv", cands, doubled) == frozenset()


def test_revoting_rule_round_one_promotes_chosen_pairs():
    header = rev_header(OR3)
    cands = rev_candidates(1, header)
    assert cands == frozenset(
        {FIRST_ROUND_MARKER, FINAL_ROUND_MARKER, header, "q110", "q111", "q210", "q211"}
    )
    pattern = rev_vote(1, 1, 1, header)
    assert pattern[0] == FIRST_ROUND_MARKER
    assert pattern[1:3] == ("q211", "q210")
    spare = ("q111", "q110") + tuple(sorted(cands - {"q111", "q110"}))
    survivors = winners("formula-rev", tuple(sorted(cands)), [(pattern, 2), (spare, 1)])
    assert survivors == {FINAL_ROUND_MARKER, header, "q111", "q211"}


def test_revoting_rule_final_round_reads_the_spare_again():
    header = rev_header(OR3)
    finalists = (header, FINAL_ROUND_MARKER, "q111", "q211")
    steady = ("q111", header, FINAL_ROUND_MARKER, "q211")
    other = ("q211", header, FINAL_ROUND_MARKER, "q111")
    spare = ("q111", FINAL_ROUND_MARKER, header, "q211")
    votes = [(steady, 2), (other, 2), (spare, 1)]
    assert winners("formula-rev", finalists, votes) == {header}


def test_revoting_rule_false_assignment_elects_nobody():
    never = parse_sexpr("(and x1 (and x2 x3))")
    header = rev_header(never)
    finalists = (header, FINAL_ROUND_MARKER, "q110", "q210")
    steady = ("q110", header, FINAL_ROUND_MARKER, "q210")
    other = ("q210", header, FINAL_ROUND_MARKER, "q110")
    spare = (FINAL_ROUND_MARKER, "q110", header, "q210")
    votes = [(steady, 2), (other, 2), (spare, 1)]
    assert winners("formula-rev", finalists, votes) == frozenset()


def test_revoting_rule_rejects_rosters_with_an_unsplit_pair():
    header = rev_header(OR3)
    finalists = (header, FINAL_ROUND_MARKER, "q110", "q111")
    ballot = tuple(sorted(finalists))
    assert winners("formula-rev", finalists, [(ballot, 5)]) == frozenset()


def test_artificial_winners_is_order_sensitive():
    header = ac_header("a", "l", "h", parse_sexpr("(and x1 x2)"))
    cands = frozenset((header, "e1", "e2"))
    free = ("e1", "e2", header)
    slot = slot_ballot(1, 1, 1, header)
    assert artificial_winners("formula-ac", cands, [free, slot]) == {header}
    assert artificial_winners("formula-ac", cands, [slot, free]) == frozenset()
