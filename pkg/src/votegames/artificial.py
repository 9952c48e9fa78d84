"""Name-inspecting winner rules that turn elections into formula evaluators.

Each rule reads the lexicographically smallest candidate name as a header
(a reserved leading ``","`` keeps it smallest) carrying a serialized formula
plus decode hints, then inspects the remaining candidate names and the ballot
list for an expected pattern.  A conforming election decodes into a variable
assignment and the winner set reports the formula's truth; anything outside
the pattern hits an explicit all-lose / all-win / marker-wins fallback, so the
rules are total and polynomial-time on every input.

Three rules cover three game shapes:

- ``formula-ac``: single-round elections whose structure (which paired
  candidates or voters are present) supplies one variable block and whose one
  free ballot supplies the other.
- ``formula-pv``: two-round voter-partition elections; a first-round marker
  candidate ``_e`` distinguishes rounds, doubled pattern votes supply one
  block, the one odd-multiplicity ballot supplies the other.
- ``formula-rev``: like ``formula-pv`` but with a second marker ``_e0`` and a
  three-block decode whose last block is read again in the final round, which
  is what a revoting manipulator controls.

The same name and ballot builders are used by the reduction constructors, so
rule and image cannot drift apart.
"""

from collections import Counter

from votegames.errors import MalformedInputError
from votegames.formulas import eval_formula, parse_formula, to_text, variable_span

FIRST_ROUND_MARKER = "_e"
FINAL_ROUND_MARKER = "_e0"

AC_LAYOUTS = "cmad"
AC_POLARITIES = "lw"
BLOCK_ONE_SOURCES = "hv"


def _indexed(prefix, index, total, bit=None):
    """Zero-padded generated name, so lexicographic order follows the index."""
    name = prefix + str(index).zfill(len(str(total)))
    if bit is not None:
        name += str(bit)
    return name


def pair_candidate(index, bit, width):
    """Paired structure candidate for the single-round rule."""
    return _indexed("u", index, width, 1 if bit else 0)


def decoder_candidate(index, total):
    """Fixed reference candidate whose position against the header reads a bit."""
    return _indexed("e", index, total)


def ac_header(layout, polarity, block_one, formula):
    """Header candidate name for the single-round rule."""
    if layout not in AC_LAYOUTS or polarity not in AC_POLARITIES or block_one not in BLOCK_ONE_SOURCES:
        raise MalformedInputError(
            f"bad rule header fields {layout!r}/{polarity!r}/{block_one!r}"
        )
    return "," + layout + polarity + block_one + to_text(formula)


def pv_header(block_one, formula):
    """Header candidate name for the partition-voters rule."""
    if block_one not in BLOCK_ONE_SOURCES:
        raise MalformedInputError(f"bad block-one source {block_one!r}")
    return ",p" + block_one + to_text(formula)


def rev_header(formula):
    """Header candidate name for the revoting rule."""
    return ",r" + to_text(formula)


def _parse_ac_header(name):
    if len(name) < 5 or name[0] != "," or name[1] not in AC_LAYOUTS:
        raise MalformedInputError("not a single-round rule header")
    if name[2] not in AC_POLARITIES or name[3] not in BLOCK_ONE_SOURCES:
        raise MalformedInputError("not a single-round rule header")
    formula = parse_formula(name[4:])
    z = variable_span(formula)
    if z % 2:
        raise MalformedInputError("header formula needs an even variable count")
    return name[1], name[2], name[3], formula, z // 2


def _parse_pv_header(name):
    if len(name) < 4 or not name.startswith(",p") or name[2] not in BLOCK_ONE_SOURCES:
        raise MalformedInputError("not a partition-voters rule header")
    formula = parse_formula(name[3:])
    z = variable_span(formula)
    if z % 2:
        raise MalformedInputError("header formula needs an even variable count")
    return name[2], formula, z // 2


def _parse_rev_header(name):
    if len(name) < 3 or not name.startswith(",r"):
        raise MalformedInputError("not a revoting rule header")
    formula = parse_formula(name[2:])
    z = variable_span(formula)
    if z % 3:
        raise MalformedInputError("header formula needs 3k variables")
    return formula, z // 3


def slot_ballot(index, bit, width, header):
    """Pattern vote for the voter-control layouts.

    The vote leads with its own reference candidate; the bit is whether the
    header candidate comes second or dead last.
    """
    mine = decoder_candidate(index, width + 1)
    rest = [decoder_candidate(j, width + 1) for j in range(1, width + 2) if j != index]
    if bit:
        return (mine, header) + tuple(rest)
    return (mine,) + tuple(rest) + (header,)


def pv_vote(index, bit, width, header):
    """Doubled pattern vote for the partition-voters rule."""
    mine = _indexed("d", index, width + 1)
    rest = [_indexed("d", j, width + 1) for j in range(1, width + 2) if j != index]
    if bit:
        return (FIRST_ROUND_MARKER, mine, header) + tuple(rest)
    return (FIRST_ROUND_MARKER, mine) + tuple(rest) + (header,)


def rev_pair(tier, index, bit, width):
    """Paired candidate ``tier`` 1 or 2 for the revoting rule."""
    return _indexed("q" + str(tier), index, width, 1 if bit else 0)


def rev_candidates(width, header):
    """Full first-round candidate set for the revoting rule."""
    names = {FIRST_ROUND_MARKER, FINAL_ROUND_MARKER, header}
    for index in range(1, width + 1):
        for bit in (0, 1):
            names.add(rev_pair(1, index, bit, width))
            names.add(rev_pair(2, index, bit, width))
    return frozenset(names)


def rev_vote(index, bit, width, header):
    """Doubled pattern vote for the revoting rule."""
    own = (rev_pair(2, index, bit, width), rev_pair(2, index, 1 - bit, width))
    rest = sorted(rev_candidates(width, header) - {FIRST_ROUND_MARKER} - set(own))
    return (FIRST_ROUND_MARKER,) + own + tuple(rest)


def _prefers(ballot, first, second):
    return ballot.index(first) < ballot.index(second)


def _one_spare_doubles(ballots, expected_count):
    """Split a ballot list into (doubled pattern counts, the one spare ballot).

    Returns (halved-count Counter, spare) when the list has the expected
    length and exactly one ballot type of odd multiplicity, else None.  The
    spare is that odd ballot; pattern matching on the halves happens upstream.
    """
    if len(ballots) != expected_count:
        return None
    counts = Counter(ballots)
    odd = [vote for vote, times in counts.items() if times % 2]
    if len(odd) != 1:
        return None
    spare = odd[0]
    counts[spare] -= 1
    halves = Counter({vote: times // 2 for vote, times in counts.items() if times})
    return halves, spare


def _match_pattern_doubles(halves, width, builder):
    """Read structure bits from halved doubles, one per pair index, else None."""
    lookup = {
        builder(index, bit): (index, bool(bit))
        for index in range(1, width + 1)
        for bit in (0, 1)
    }
    bits = {}
    for vote, times in halves.items():
        if times != 1 or vote not in lookup:
            return None
        index, bit = lookup[vote]
        bits[index] = bit
    if len(bits) != width:
        return None
    return [bits[index] for index in range(1, width + 1)]


def _formula_ac(candidates, ballots):
    """Single-round rule: structure picks one block, the free ballot the other."""
    header = min(candidates)
    try:
        layout, polarity, block_one, formula, width = _parse_ac_header(header)
    except MalformedInputError:
        return frozenset()
    fallback = frozenset() if polarity == "l" else frozenset(candidates)

    if layout in "cm":
        decoders = (
            [decoder_candidate(j, width) for j in range(1, width + 1)]
            if layout == "m"
            else []
        )
        expected = {header, *decoders}
        structure = []
        survivors = []
        for index in range(1, width + 1):
            low = pair_candidate(index, 0, width)
            high = pair_candidate(index, 1, width)
            if (low in candidates) == (high in candidates):
                return fallback
            structure.append(high in candidates)
            survivors.append(high if high in candidates else low)
        if candidates != expected | set(survivors):
            return fallback
        if len(ballots) != 1:
            return fallback
        free = ballots[0]
        anchors = decoders if layout == "m" else survivors
        chosen = [_prefers(free, anchor, header) for anchor in anchors]
    else:
        expected = {header} | {decoder_candidate(j, width + 1) for j in range(1, width + 2)}
        if candidates != expected:
            return fallback
        stride = width + 1 if layout == "a" else width + 3
        if len(ballots) != stride:
            return fallback
        if layout == "a":
            free = ballots[0]
            slots = list(enumerate(ballots[1:], start=1))
        else:
            if ballots[width] != slot_ballot(width + 1, 0, width, header):
                return fallback
            if ballots[width + 2] != slot_ballot(width + 1, 1, width, header):
                return fallback
            free = ballots[width + 1]
            slots = list(enumerate(ballots[:width], start=1))
        structure = []
        for index, vote in slots:
            if vote == slot_ballot(index, 1, width, header):
                structure.append(True)
            elif vote == slot_ballot(index, 0, width, header):
                structure.append(False)
            else:
                return fallback
        chosen = [
            _prefers(free, decoder_candidate(j, width + 1), header)
            for j in range(1, width + 1)
        ]

    assignment = (
        tuple(structure) + tuple(chosen)
        if block_one == "h"
        else tuple(chosen) + tuple(structure)
    )
    value = eval_formula(formula, assignment)
    if polarity == "l":
        return frozenset((header,)) if value else frozenset()
    return frozenset(candidates) - {header} if value else frozenset(candidates)


def _formula_pv(candidates, ballots):
    """Partition-voters rule: marker present means a first-round subelection."""
    header = min(candidates)
    try:
        block_one, formula, width = _parse_pv_header(header)
    except MalformedInputError:
        return frozenset()
    if FIRST_ROUND_MARKER not in candidates:
        return frozenset(candidates)
    expected = {FIRST_ROUND_MARKER, header} | {
        _indexed("d", j, width + 1) for j in range(1, width + 2)
    }
    if candidates != expected:
        return frozenset()

    split = _one_spare_doubles(ballots, 2 * width + 1)
    if split is not None:
        halves, spare = split
        structure = _match_pattern_doubles(
            halves, width, lambda i, b: pv_vote(i, b, width, header)
        )
        if structure is not None:
            chosen = [
                _prefers(spare, _indexed("d", j, width + 1), FIRST_ROUND_MARKER)
                for j in range(1, width + 1)
            ]
            assignment = (
                tuple(structure) + tuple(chosen)
                if block_one == "h"
                else tuple(chosen) + tuple(structure)
            )
            return frozenset((header,)) if eval_formula(formula, assignment) else frozenset()

    counts = Counter(ballots)
    if all(times % 2 == 0 for times in counts.values()) and all(
        vote[0] == FIRST_ROUND_MARKER for vote in counts
    ):
        return frozenset()
    return frozenset((FIRST_ROUND_MARKER,))


def _formula_rev(candidates, ballots):
    """Revoting rule: three blocks, the last read again in the final round."""
    header = min(candidates)
    try:
        formula, width = _parse_rev_header(header)
    except MalformedInputError:
        return frozenset()

    if FIRST_ROUND_MARKER in candidates:
        if candidates != rev_candidates(width, header):
            return frozenset()
        split = _one_spare_doubles(ballots, 2 * width + 1)
        if split is not None:
            halves, spare = split
            structure = _match_pattern_doubles(
                halves, width, lambda i, b: rev_vote(i, b, width, header)
            )
            if structure is not None:
                opening = [
                    _prefers(spare, rev_pair(1, j, 1, width), rev_pair(1, j, 0, width))
                    for j in range(1, width + 1)
                ]
                survivors = {FINAL_ROUND_MARKER, header}
                for j, bit in enumerate(opening, start=1):
                    survivors.add(rev_pair(1, j, 1 if bit else 0, width))
                for i, bit in enumerate(structure, start=1):
                    survivors.add(rev_pair(2, i, 1 if bit else 0, width))
                return frozenset(survivors)
        counts = Counter(ballots)
        if all(times % 2 == 0 for times in counts.values()) and all(
            vote[0] == FIRST_ROUND_MARKER for vote in counts
        ):
            return frozenset()
        return frozenset((FIRST_ROUND_MARKER,))

    if FINAL_ROUND_MARKER not in candidates:
        return frozenset()
    opening = []
    structure = []
    for tier, bits in ((1, opening), (2, structure)):
        for index in range(1, width + 1):
            low = rev_pair(tier, index, 0, width)
            high = rev_pair(tier, index, 1, width)
            if (low in candidates) == (high in candidates):
                return frozenset()
            bits.append(high in candidates)
    kept = {FINAL_ROUND_MARKER, header}
    for tier, bits in ((1, opening), (2, structure)):
        for index, bit in enumerate(bits, start=1):
            kept.add(rev_pair(tier, index, 1 if bit else 0, width))
    if candidates != kept:
        return frozenset()
    if len(ballots) != 4 * width + 1:
        return frozenset()
    counts = Counter(ballots)
    odd = [vote for vote, times in counts.items() if times % 2]
    if len(odd) != 1:
        return frozenset()
    spare = odd[0]
    closing = [
        _prefers(
            spare,
            rev_pair(1, j, 1 if opening[j - 1] else 0, width),
            FINAL_ROUND_MARKER,
        )
        for j in range(1, width + 1)
    ]
    assignment = tuple(opening) + tuple(structure) + tuple(closing)
    return frozenset((header,)) if eval_formula(formula, assignment) else frozenset()


_RULES = {
    "formula-ac": _formula_ac,
    "formula-pv": _formula_pv,
    "formula-rev": _formula_rev,
}


def artificial_winners(rule, candidates, ballots):
    """Winner set for a name-inspecting rule; total on every input."""
    return _RULES[rule](frozenset(candidates), list(ballots))
