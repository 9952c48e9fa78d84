"""Exception types shared across the package.

Every error raised on purpose by this package derives from VoteGamesError,
so callers can catch one base class at API boundaries.
"""


class VoteGamesError(Exception):
    """Base class for all errors raised deliberately by this package."""


class MalformedInputError(VoteGamesError):
    """Structurally invalid input: bad ballot shape, unknown candidate,
    duplicate names, inconsistent document fields, unparsable text."""


class UnsupportedRuleError(VoteGamesError):
    """A rule identifier that no component of the package recognizes."""


class UnresolvedManipulatorError(VoteGamesError):
    """A manipulator's blank ballot reached a point where a concrete
    ballot is required (winner determination or action evaluation)."""


class InvalidScenarioError(VoteGamesError):
    """A scenario combination that is defined away, e.g. revoting
    requested for a control type that has no second round."""


class BudgetExceededError(VoteGamesError):
    """The oracle's state budget is smaller than the enumeration it was
    asked to perform.  Carries the exact required count."""

    def __init__(self, required: int, max_states: int):
        self.required = required
        self.max_states = max_states
        super().__init__(
            f"exhaustive search needs {required} states "
            f"but the budget allows {max_states}"
        )


class UnsupportedCaseError(VoteGamesError):
    """A (rule, control type, scenario) combination for which no direct
    solver is registered."""
