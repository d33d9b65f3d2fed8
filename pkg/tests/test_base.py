"""
Tests for the run limits and the SolverTemplate base class.

This module covers limit parsing and overrides, the environment budget,
and the budget, digest and context-manager behaviour shared by all solvers.
"""

import time

import pytest

from pydilworth.base import BUDGET_ENV, BudgetExhausted, Limits, SolverTemplate, resolve_limits


class CountingSolver(SolverTemplate):
    """Minimal solver ticking a fixed number of times."""

    name = "counting"
    check_interval = 1

    def __init__(self, steps, delay=0.0, **kwargs):
        super().__init__(**kwargs)
        self.steps = steps
        self.delay = delay

    def solve(self):
        self.start()
        try:
            for i in range(self.steps):
                time.sleep(self.delay)
                self.tick()
                self.record(f"step={i}")
        except BudgetExhausted:
            return False
        return True


def test_limits_defaults_and_validation():
    limits = Limits()
    assert limits.max_vertices == 1 << 20
    assert limits.max_sets == 10**6
    assert limits.exhaustive_max == 1 << 16
    assert limits.realizable_max_n == 5

    with pytest.raises(ValueError, match="max_sets"):
        Limits(max_sets=0)


def test_limits_overrides():
    limits = Limits().with_overrides("max_vertices=4096,budget_seconds=2")
    assert limits.max_vertices == 4096
    assert limits.budget_seconds == 2.0
    assert isinstance(limits.max_vertices, int)

    with pytest.raises(ValueError, match="Unknown limit"):
        Limits().with_overrides("max_colors=3")


def test_limits_from_env(monkeypatch):
    monkeypatch.setenv(BUDGET_ENV, "7.5")
    assert Limits.from_env().budget_seconds == 7.5
    assert resolve_limits(None).budget_seconds == 7.5

    monkeypatch.setenv(BUDGET_ENV, "soon")
    with pytest.raises(ValueError, match=BUDGET_ENV):
        Limits.from_env()


def test_solver_template_is_abstract():
    with pytest.raises(TypeError):
        SolverTemplate()


def test_solver_counts_nodes_and_digests():
    first = CountingSolver(5, budget=10)
    second = CountingSolver(5, budget=10)
    assert first.solve() is True
    assert second.solve() is True
    assert first.nodes == 5
    assert first.digest == second.digest

    third = CountingSolver(6, budget=10)
    third.solve()
    assert third.digest != first.digest


def test_solver_budget_exhaustion():
    solver = CountingSolver(1000, delay=0.002, budget=0.01)
    assert solver.solve() is False
    assert solver.nodes < 1000
    assert solver.out_of_time()
    assert solver.remaining() == 0.0


def test_solver_rejects_non_positive_budget():
    with pytest.raises(ValueError):
        CountingSolver(1, budget=0)


def test_budget_defaults_to_limits():
    solver = CountingSolver(1, limits=Limits(budget_seconds=3))
    assert solver.budget == 3.0
    assert solver.remaining() == 3.0


def test_temporary_budget_restores():
    solver = CountingSolver(1, budget=10)
    with solver.temporary_budget(0.5) as inner:
        assert inner.budget == 0.5
    assert solver.budget == 10.0


def test_context_manager_starts_solver():
    solver = CountingSolver(1, budget=10)
    with solver as running:
        running.tick()
        assert running.nodes == 1
        assert running.elapsed >= 0.0
