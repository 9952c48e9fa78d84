"""Election control games with blank-slate manipulative voters.

The package models chair control actions (adding, deleting, partitioning
voters or candidates) over weighted elections in which some registered or
addable voters have no ballot yet, decides the resulting two- and
three-quantifier questions by direct procedures or exhaustive search, and
ships the formula-rule reductions plus a differential-testing harness.
"""

from votegames.control import (
    CONTROL_TYPES,
    ControlAction,
    ControlSpec,
    count_action_space,
    evaluate,
    legal_actions,
    play,
    validate_problem,
)
from votegames.core import (
    ALL_RULES,
    STANDARD_RULES,
    Election,
    Voter,
    election_winners,
    pairwise_margin,
    score,
    scores,
    winners,
)
from votegames.errors import (
    BudgetExceededError,
    InvalidScenarioError,
    MalformedInputError,
    UnresolvedManipulatorError,
    UnsupportedCaseError,
    UnsupportedRuleError,
    VoteGamesError,
)
from votegames.fuzz import run_campaign
from votegames.generate import CampaignConfig, iter_instances, random_instance
from votegames.instancedoc import (
    instance_from_mapping,
    instance_to_mapping,
    parse_instance,
    serialize_instance,
)
from votegames.oracle import (
    DEFAULT_BUDGET,
    OracleResult,
    Witness,
    required_states,
    solve_oracle,
)
from votegames.reductions import (
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
from votegames.scenarios import GOALS, MODES, ProblemInstance, Scenario
from votegames.solvers import (
    REGISTRY,
    DirectResult,
    base_control,
    lookup,
    solve_approval,
    solve_borda3w_cf,
    solve_condorcet,
    solve_direct,
    solve_plurality,
    solve_veto3w,
)

__version__ = "0.1.0"
