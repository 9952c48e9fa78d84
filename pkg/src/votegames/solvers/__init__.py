"""Direct (non-oracle) solving procedures and their dispatch registry."""

from votegames.solvers.common import DirectResult
from votegames.solvers.registry import (
    REGISTRY,
    base_control,
    lookup,
    solve_approval,
    solve_borda3w_cf,
    solve_condorcet,
    solve_direct,
    solve_plurality,
    solve_veto3w,
)

__all__ = [
    "DirectResult",
    "REGISTRY",
    "base_control",
    "lookup",
    "solve_approval",
    "solve_borda3w_cf",
    "solve_condorcet",
    "solve_direct",
    "solve_plurality",
    "solve_veto3w",
]
