"""Propositional formulas, their candidate-name serialization, and QBF truth.

Formulas are ASTs over variables ``x1 .. xz`` with negation and binary
conjunction/disjunction.  The wire form uses only characters legal in
candidate names: ``x3`` for a variable, ``<not,F>``, ``<and,F,G>`` and
``<or,F,G>`` for the connectives, e.g. ``<or,x1,<not,x2>>``.  A friendlier
s-expression reader accepts ``(or x1 (not x2))`` with n-ary and/or folded
from the left.

Quantified truth is decided by brute force over the variable blocks, which is
all the reduction machinery needs: block sizes stay tiny.
"""

import itertools
import re
from dataclasses import dataclass

from votegames.errors import MalformedInputError


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Not:
    child: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


Formula = Var | Not | And | Or

_VAR_TEXT = re.compile(r"x([1-9][0-9]*)")


def to_text(formula):
    """Serialize an AST into the candidate-name wire form."""
    if isinstance(formula, Var):
        return f"x{formula.index}"
    if isinstance(formula, Not):
        return f"<not,{to_text(formula.child)}>"
    if isinstance(formula, And):
        return f"<and,{to_text(formula.left)},{to_text(formula.right)}>"
    if isinstance(formula, Or):
        return f"<or,{to_text(formula.left)},{to_text(formula.right)}>"
    raise MalformedInputError(f"not a formula node: {formula!r}")


def _parse_at(text, pos):
    if pos < len(text) and text[pos] == "<":
        for head, build, arity in (
            ("<not,", Not, 1),
            ("<and,", And, 2),
            ("<or,", Or, 2),
        ):
            if text.startswith(head, pos):
                pos += len(head)
                args = []
                for place in range(arity):
                    if place:
                        if not text.startswith(",", pos):
                            raise MalformedInputError(
                                f"expected ',' at position {pos} of formula text"
                            )
                        pos += 1
                    node, pos = _parse_at(text, pos)
                    args.append(node)
                if not text.startswith(">", pos):
                    raise MalformedInputError(f"expected '>' at position {pos} of formula text")
                return build(*args), pos + 1
        raise MalformedInputError(f"unknown connective at position {pos} of formula text")
    tail = _VAR_TEXT.match(text, pos)
    if not tail:
        raise MalformedInputError(f"expected a variable or connective at position {pos}")
    return Var(int(tail.group(1))), tail.end()


def parse_formula(text):
    """Parse the wire form back into an AST; inverse of :func:`to_text`."""
    if not isinstance(text, str) or not text:
        raise MalformedInputError("formula text must be a nonempty string")
    node, pos = _parse_at(text, 0)
    if pos != len(text):
        raise MalformedInputError(f"trailing characters after formula at position {pos}")
    return node


_SEXPR_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def parse_sexpr(text):
    """Read ``(and x1 (or x2 (not x3)))``; n-ary and/or fold from the left."""
    tokens = _SEXPR_TOKEN.findall(text or "")
    if not tokens:
        raise MalformedInputError("empty formula")

    def read(at):
        token = tokens[at]
        if token == ")":
            raise MalformedInputError("unexpected ')'")
        if token != "(":
            if not re.fullmatch(r"x[1-9][0-9]*", token):
                raise MalformedInputError(f"bad variable name {token!r}; use x1, x2, ...")
            return Var(int(token[1:])), at + 1
        if at + 1 >= len(tokens):
            raise MalformedInputError("unterminated '('")
        head = tokens[at + 1]
        args = []
        at += 2
        while at < len(tokens) and tokens[at] != ")":
            node, at = read(at)
            args.append(node)
        if at >= len(tokens):
            raise MalformedInputError("unterminated '('")
        at += 1
        if head == "not":
            if len(args) != 1:
                raise MalformedInputError("not takes exactly one argument")
            return Not(args[0]), at
        if head in ("and", "or"):
            if len(args) < 2:
                raise MalformedInputError(f"{head} takes at least two arguments")
            build = And if head == "and" else Or
            node = args[0]
            for arg in args[1:]:
                node = build(node, arg)
            return node, at
        raise MalformedInputError(f"unknown operator {head!r}")

    node, at = read(0)
    if at != len(tokens):
        raise MalformedInputError("trailing tokens after formula")
    return node


def variables(formula):
    """Set of variable indices occurring in the formula."""
    if isinstance(formula, Var):
        return frozenset((formula.index,))
    if isinstance(formula, Not):
        return variables(formula.child)
    return variables(formula.left) | variables(formula.right)


def variable_span(formula):
    """Largest index z, requiring every index 1..z to occur."""
    seen = variables(formula)
    z = max(seen)
    if seen != frozenset(range(1, z + 1)):
        missing = sorted(set(range(1, z + 1)) - set(seen))
        raise MalformedInputError(
            f"variables must be x1..x{z} with no gaps; missing {missing}"
        )
    return z


def substitute(formula, mapping):
    """Renumber variables; indices absent from the mapping are left alone."""
    if isinstance(formula, Var):
        return Var(mapping.get(formula.index, formula.index))
    if isinstance(formula, Not):
        return Not(substitute(formula.child, mapping))
    build = And if isinstance(formula, And) else Or
    return build(substitute(formula.left, mapping), substitute(formula.right, mapping))


def eval_formula(formula, assignment):
    """Truth value under a 1-indexed boolean assignment."""
    if isinstance(formula, Var):
        if formula.index > len(assignment):
            raise MalformedInputError(f"assignment too short for x{formula.index}")
        return bool(assignment[formula.index - 1])
    if isinstance(formula, Not):
        return not eval_formula(formula.child, assignment)
    if isinstance(formula, And):
        return eval_formula(formula.left, assignment) and eval_formula(formula.right, assignment)
    return eval_formula(formula.left, assignment) or eval_formula(formula.right, assignment)


def _tautology(index):
    return Or(Var(index), Not(Var(index)))


def _pad_blocks(formula, sizes):
    """Equalize quantifier blocks to width max(sizes, 1) via no-effect variables.

    Old variables are renumbered into their stretched blocks and each padding
    variable i is conjoined as (xi or not xi), so the padded formula has
    contiguous variables and the same quantified truth for any block pattern.
    """
    z = variable_span(formula)
    if sum(sizes) != z:
        raise MalformedInputError(
            f"block sizes {sizes} do not cover x1..x{z}"
        )
    width = max(max(sizes), 1)
    mapping = {}
    offset_old = 0
    for block, size in enumerate(sizes):
        for inside in range(1, size + 1):
            mapping[offset_old + inside] = block * width + inside
        offset_old += size
    padded = substitute(formula, mapping)
    used = set(mapping.values())
    for index in range(1, width * len(sizes) + 1):
        if index not in used:
            padded = And(padded, _tautology(index))
    return padded, width


def pad_two_block(formula, first, second):
    """Pad an (first, second) split to equal blocks; returns (formula, width)."""
    if first < 0 or second < 0:
        raise MalformedInputError("block sizes must be nonnegative")
    return _pad_blocks(formula, (first, second))


def pad_three_block(formula, first, second, third):
    """Pad a three-way split to equal blocks; returns (formula, width)."""
    if min(first, second, third) < 0:
        raise MalformedInputError("block sizes must be nonnegative")
    return _pad_blocks(formula, (first, second, third))


def qbf_true(formula, pattern, blocks):
    """Brute-force a quantifier pattern such as "EA" over given block sizes."""
    if len(pattern) != len(blocks) or not all(q in "EA" for q in pattern):
        raise MalformedInputError(f"bad quantifier pattern {pattern!r} for blocks {blocks}")
    if sum(blocks) != variable_span(formula):
        raise MalformedInputError("block sizes must cover every variable exactly once")

    def down(level, prefix):
        if level == len(blocks):
            return eval_formula(formula, prefix)
        rows = (
            down(level + 1, prefix + bits)
            for bits in itertools.product((False, True), repeat=blocks[level])
        )
        return any(rows) if pattern[level] == "E" else all(rows)

    return down(0, ())


def qbf_eval(formula, shape):
    """Truth of the formula under "EA", "AE", or "AEA" with equal blocks."""
    z = variable_span(formula)
    if shape in ("EA", "AE"):
        if z % 2:
            raise MalformedInputError(f"{shape} needs an even variable count, got {z}")
        return qbf_true(formula, shape, (z // 2, z // 2))
    if shape == "AEA":
        if z % 3:
            raise MalformedInputError(f"AEA needs a variable count divisible by 3, got {z}")
        return qbf_true(formula, shape, (z // 3, z // 3, z // 3))
    raise MalformedInputError(f"unknown prefix shape {shape!r}")
