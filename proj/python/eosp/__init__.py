"""Scheduling under unknown constraints.

Thin wrapper over the C++ core. Results come back as plain dicts with the
same keys the ``eosp`` command-line tool writes.
"""

from ._eosp import (
    AcquisitionStuck,
    Cap,
    EnumerationLimitError,
    Instance,
    Language,
    Oracle,
    Sep,
    Task,
    ValidationError,
    Window,
    brute_force,
    default_cap_k,
    dominates,
    fao,
    generate,
    is_feasible,
    learn_optimize,
    objective,
    priority_greedy,
    solve,
)

__all__ = [
    "AcquisitionStuck",
    "Cap",
    "EnumerationLimitError",
    "Instance",
    "Language",
    "Oracle",
    "Sep",
    "Task",
    "ValidationError",
    "Window",
    "brute_force",
    "default_cap_k",
    "dominates",
    "fao",
    "generate",
    "is_feasible",
    "learn_optimize",
    "objective",
    "priority_greedy",
    "solve",
]
