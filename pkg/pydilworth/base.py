"""
Base class for the budgeted exact solvers of the library.

This module defines the run limits shared by all modules and a common base
class for exact search procedures. It provides shared functionality such as
time budgets, node counting, a digest of the search log and context-manager
support.
"""

import dataclasses
import hashlib
import logging
import os
import time
from abc import ABC, abstractmethod
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Iterator, Optional

from .utils.utilities import parse_limits

# Setup module logger
logger = logging.getLogger(__name__)

# Environment variable holding the default per-call budget in seconds
BUDGET_ENV = "PYDILWORTH_BUDGET"


@dataclass(frozen=True)
class Limits:
    """Size caps and time budget applied by every module.

    Attributes:
        max_vertices: Largest power graph that may be materialized.
        max_sets: Largest maximal-set enumeration.
        budget_seconds: Default time budget of one solver call.
        transitivity_max_n: Largest graph tested for vertex-transitivity.
        realizable_max_n: Largest graph handed to the exhaustive closure search.
        exhaustive_max: Largest number of sent sequences in protocol checks.
        exact_bollobas_max: Largest power of F solved exactly for B(t).
        solver_max_n: Largest graph accepted by the exact parameter solvers.
    """

    max_vertices: int = 1 << 20
    max_sets: int = 10**6
    budget_seconds: float = 60.0
    transitivity_max_n: int = 12
    realizable_max_n: int = 5
    exhaustive_max: int = 1 << 16
    exact_bollobas_max: int = 1 << 13
    solver_max_n: int = 1024

    def __post_init__(self):
        for field in dataclasses.fields(self):
            if getattr(self, field.name) <= 0:
                raise ValueError(f"Limit '{field.name}' must be positive, got {getattr(self, field.name)}")

    @classmethod
    def from_env(cls) -> "Limits":
        """Defaults, with the budget taken from ``PYDILWORTH_BUDGET`` when set."""
        raw = os.environ.get(BUDGET_ENV)
        if raw is None:
            return cls()
        try:
            budget = float(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV} is not a number: '{raw}'")
        return cls(budget_seconds=budget)

    def with_overrides(self, text: str) -> "Limits":
        """Apply a ``key=value,...`` override string.

        Raises:
            ValueError: On unknown keys or malformed values.
        """
        overrides = parse_limits(text)
        known = {field.name: field.type for field in dataclasses.fields(self)}
        for key in overrides:
            if key not in known:
                raise ValueError(f"Unknown limit '{key}'; known limits: {', '.join(sorted(known))}")
        coerced = {k: (float(v) if k == "budget_seconds" else int(v)) for k, v in overrides.items()}
        return dataclasses.replace(self, **coerced)


def resolve_limits(limits: Optional[Limits] = None) -> Limits:
    """Return ``limits`` or the environment defaults."""
    return limits if limits is not None else Limits.from_env()


class BudgetExhausted(Exception):
    """Raised inside a search when its time budget runs out."""


class SolverTemplate(ABC):
    """Base class for exact search procedures.

    Subclasses implement ``solve``; the search loop calls ``tick`` once per
    node and ``record`` on every improvement. ``tick`` raises
    ``BudgetExhausted`` when the deadline passes, which ``solve``
    implementations convert into a bracketed, non-optimal result.

    Attributes:
        name (str): Solver name used in logs and in the search digest.
        budget (float): Time budget in seconds.
        limits (Limits): Size caps in force.
        nodes (int): Search nodes visited during the current run.
    """

    name = "solver"
    # Nodes between two clock reads
    check_interval = 256

    def __init__(self, budget: Optional[float] = None, limits: Optional[Limits] = None):
        """Initialize a solver.

        Args:
            budget: Time budget in seconds; defaults to ``limits.budget_seconds``.
            limits: Size caps; defaults to ``Limits.from_env()``.
        """
        self.limits = resolve_limits(limits)
        self.budget = float(budget) if budget is not None else self.limits.budget_seconds
        if self.budget <= 0:
            raise ValueError(f"Budget must be positive, got {self.budget}")
        self.nodes = 0
        self._deadline: Optional[float] = None
        self._started: Optional[float] = None
        self._digest = hashlib.sha256(self.name.encode())

    def start(self) -> "SolverTemplate":
        """Reset counters and arm the deadline."""
        self.nodes = 0
        self._started = time.monotonic()
        self._deadline = self._started + self.budget
        self._digest = hashlib.sha256(self.name.encode())
        logger.debug(f"{self.name}: started with budget {self.budget:.1f}s")
        return self

    def tick(self) -> None:
        """Count one search node; raise ``BudgetExhausted`` past the deadline."""
        self.nodes += 1
        if self.nodes % self.check_interval == 0 and self._deadline is not None:
            if time.monotonic() > self._deadline:
                raise BudgetExhausted(f"{self.name} exhausted its {self.budget:.1f}s budget after {self.nodes} nodes")

    def out_of_time(self) -> bool:
        return self._deadline is not None and time.monotonic() > self._deadline

    def remaining(self) -> float:
        """Seconds left before the deadline (the full budget when not started)."""
        if self._deadline is None:
            return self.budget
        return max(0.0, self._deadline - time.monotonic())

    def record(self, event: Any) -> None:
        """Fold an event (bound change, incumbent) into the search digest."""
        self._digest.update(f"{self.nodes}:{event};".encode())

    @property
    def digest(self) -> str:
        """Hex digest of the search log, including the final node count."""
        final = self._digest.copy()
        final.update(f"nodes={self.nodes}".encode())
        return final.hexdigest()

    @property
    def elapsed(self) -> float:
        return 0.0 if self._started is None else time.monotonic() - self._started

    @contextmanager
    def temporary_budget(self, seconds: float) -> Iterator["SolverTemplate"]:
        """Temporarily run with a different budget.

        Args:
            seconds: Budget in force inside the ``with`` block.

        Yields:
            The solver itself.
        """
        previous = self.budget
        self.budget = float(seconds)
        try:
            yield self
        finally:
            self.budget = previous

    @abstractmethod
    def solve(self) -> Any:
        """Run the search and return its result object."""

    def __enter__(self) -> "SolverTemplate":
        return self.start()

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        logger.debug(f"{self.name}: {self.nodes} nodes in {self.elapsed:.3f}s")
