"""Instance generation for differential campaigns.

Exhaustive generation walks every instance shape inside the configured
bounds: candidate counts, spoiler splits, registered/pool voter splits,
fixed-ballot multisets, manipulator weights, and move limits.  Voter order
and rival candidate names carry no meaning in the covered systems, so
fixed-ballot collections are enumerated as multisets and each instance is
emitted only in its lexicographically least relabeling (the distinguished
candidate keeps its name, running rivals permute among themselves, and
spoilers permute among themselves).

Random generation draws ballots from the impartial culture: rankings
uniform over permutations, approval sets uniform over subsets, and all
control parameters uniform within bounds.
"""

import itertools
from dataclasses import dataclass, field

from votegames.control import CONTROL_TYPES, ControlSpec, action_kind, goal_of
from votegames.core import ALL_RULES, Election, Voter, ballot_kind
from votegames.errors import MalformedInputError
from votegames.oracle import DEFAULT_BUDGET, ballot_space
from votegames.scenarios import MODES, ProblemInstance, Scenario

RIVAL_NAMES = "abcdefghijklmno"


@dataclass(frozen=True)
class CampaignConfig:
    """What a campaign covers: case sets, size bounds, seed, and budget."""

    rules: tuple[str, ...] = ("plurality",)
    control_types: tuple[str, ...] = CONTROL_TYPES
    modes: tuple[str, ...] = MODES
    max_candidates: int = 3
    max_voters: int = 3
    max_manipulators: int = 2
    max_weight: int = 1
    max_fixed: int | None = None
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    cap: int = field(default=20000)

    def __post_init__(self):
        for rule in self.rules:
            if rule not in ALL_RULES:
                raise MalformedInputError(f"unknown voting system {rule!r}")
        for ctype in self.control_types:
            if ctype not in CONTROL_TYPES:
                raise MalformedInputError(f"unknown control type {ctype!r}")
        for mode in self.modes:
            if mode not in MODES:
                raise MalformedInputError(f"unknown scenario mode {mode!r}")
        for name in ("max_candidates", "max_voters", "max_manipulators", "max_weight"):
            bound = getattr(self, name)
            if not isinstance(bound, int) or isinstance(bound, bool) or bound < 0:
                raise MalformedInputError(f"{name} must be a nonnegative integer")
        if self.max_fixed is not None and (
            not isinstance(self.max_fixed, int)
            or isinstance(self.max_fixed, bool)
            or self.max_fixed < 0
        ):
            raise MalformedInputError("max_fixed must be None or a nonnegative integer")
        if self.max_candidates < 1:
            raise MalformedInputError("campaigns need at least one candidate")
        if self.max_weight < 1:
            raise MalformedInputError("voter weights start at 1")
        if self.cap < 0 or self.budget < 0:
            raise MalformedInputError("cap and budget must be nonnegative")


def _relabelings(running_rivals, spoilers):
    """Permutations that respect the running/spoiler split, as name maps."""
    maps = []
    for run_perm in itertools.permutations(running_rivals):
        for spoil_perm in itertools.permutations(spoilers):
            sigma = dict(zip(running_rivals, run_perm))
            sigma.update(zip(spoilers, spoil_perm))
            maps.append(sigma)
    return maps


def _ballot_key(ballot, sigma):
    if ballot is None:
        return (0,)
    if isinstance(ballot, frozenset):
        return (1, tuple(sorted(sigma.get(x, x) for x in ballot)))
    return (2, tuple(sigma.get(x, x) for x in ballot))


def _group_key(group, sigma):
    return tuple(sorted((_ballot_key(b, sigma), w) for b, w in group))


def _is_canonical(groups, relabelings):
    identity = relabelings[0]
    base = tuple(_group_key(group, identity) for group in groups)
    return all(
        base <= tuple(_group_key(group, sigma) for group in groups)
        for sigma in relabelings[1:]
    )


def _weight_multisets(count, max_weight):
    return itertools.combinations_with_replacement(range(1, max_weight + 1), count)


def _fixed_multisets(items, count):
    return itertools.combinations_with_replacement(items, count)


def _limits_for(kind, running, spoilers, roll_size, pool_size):
    if kind == "AV":
        return range(pool_size + 1)
    if kind == "DV":
        return range(roll_size + 1)
    if kind == "AC":
        return range(len(spoilers) + 1)
    if kind == "DC":
        return range(len(running) + 1)
    return (None,)


def _build(rule, ctype, mode, running, spoilers, roll, pool, limit):
    voters = tuple(
        Voter(ballot=b, weight=w, registered=True, manipulator=b is None)
        for b, w in roll
    )
    pool_voters = tuple(
        Voter(ballot=b, weight=w, registered=False, manipulator=b is None)
        for b, w in pool
    )
    election = Election(running, voters, rule)
    spec = ControlSpec(
        ctype, "p", limit=limit, unregistered=pool_voters, spoilers=spoilers
    )
    return ProblemInstance(election, spec, Scenario(goal_of(ctype), mode))


def _case_instances(config, rule, ctype, mode):
    kind = action_kind(ctype)
    weights = range(1, config.max_weight + 1)
    for total_cands in range(1, config.max_candidates + 1):
        rivals = tuple(RIVAL_NAMES[: total_cands - 1])
        spoiler_counts = range(total_cands) if kind == "AC" else (0,)
        for spoil_count in spoiler_counts:
            spoilers = rivals[len(rivals) - spoil_count :]
            running_rivals = rivals[: len(rivals) - spoil_count]
            running = tuple(sorted(running_rivals + ("p",)))
            potential = running + spoilers
            items = tuple(
                (ballot, w) for ballot in ballot_space(rule, potential) for w in weights
            )
            relabelings = _relabelings(running_rivals, spoilers)
            for total in range(config.max_voters + 1):
                for manips in range(min(total, config.max_manipulators) + 1):
                    fixed = total - manips
                    if config.max_fixed is not None and fixed > config.max_fixed:
                        continue
                    splits = (
                        [
                            (rf, fixed - rf, rm, manips - rm)
                            for rf in range(fixed + 1)
                            for rm in range(manips + 1)
                        ]
                        if kind == "AV"
                        else [(fixed, 0, manips, 0)]
                    )
                    for roll_fixed, pool_fixed, roll_manips, pool_manips in splits:
                        for combo in itertools.product(
                            _fixed_multisets(items, roll_fixed),
                            _fixed_multisets(items, pool_fixed),
                            _weight_multisets(roll_manips, config.max_weight),
                            _weight_multisets(pool_manips, config.max_weight),
                        ):
                            roll_items, pool_items, roll_mw, pool_mw = combo
                            roll = list(roll_items) + [(None, w) for w in roll_mw]
                            pool = list(pool_items) + [(None, w) for w in pool_mw]
                            if not _is_canonical((roll, pool), relabelings):
                                continue
                            for limit in _limits_for(
                                kind, running, spoilers, len(roll), len(pool)
                            ):
                                yield _build(
                                    rule, ctype, mode, running, spoilers,
                                    tuple(roll), tuple(pool), limit,
                                )


def iter_instances(config):
    """Every in-bounds instance, canonically deduplicated, in a fixed order."""
    for rule in config.rules:
        for ctype in config.control_types:
            for mode in config.modes:
                yield from _case_instances(config, rule, ctype, mode)


def _random_ballot(rng, rule, potential):
    if ballot_kind(rule) == "approval":
        return frozenset(name for name in potential if rng.random() < 0.5)
    order = list(potential)
    rng.shuffle(order)
    return tuple(order)


def random_instance(config, rng):
    """One instance drawn from the impartial culture within the bounds."""
    rule = rng.choice(config.rules)
    ctype = rng.choice(config.control_types)
    mode = rng.choice(config.modes)
    kind = action_kind(ctype)
    total_cands = rng.randint(1, config.max_candidates)
    rivals = tuple(RIVAL_NAMES[: total_cands - 1])
    spoil_count = rng.randint(0, len(rivals)) if kind == "AC" else 0
    spoilers = rivals[len(rivals) - spoil_count :]
    running = tuple(sorted(rivals[: len(rivals) - spoil_count] + ("p",)))
    potential = running + spoilers
    total = rng.randint(0, config.max_voters)
    manips = rng.randint(0, min(total, config.max_manipulators))
    if config.max_fixed is not None:
        total = min(total, config.max_fixed + manips)
    roll, pool = [], []
    for i in range(total):
        entry = (
            (None, rng.randint(1, config.max_weight))
            if i < manips
            else (_random_ballot(rng, rule, potential), rng.randint(1, config.max_weight))
        )
        if kind == "AV" and rng.random() < 0.5:
            pool.append(entry)
        else:
            roll.append(entry)
    limits = _limits_for(kind, running, spoilers, len(roll), len(pool))
    limit = rng.choice(list(limits))
    return _build(rule, ctype, mode, running, spoilers, tuple(roll), tuple(pool), limit)
