"""
Fractional covering numbers with exact rational arithmetic.

The fractional dichromatic and fractional chromatic numbers are optima of
covering LPs over the maximal acyclic (resp. independent) vertex sets.
Restricting to maximal sets loses nothing: weight on a set can always be
moved to a maximal superset without breaking feasibility.

The LP is solved through its dual packing problem

    max  sum_v y_v   s.t.  sum_{v in S} y_v <= 1  for every set S,  y >= 0

whose slack basis is feasible from the start, with a dense tableau over
``fractions.Fraction`` and Bland's smallest-label rule. The covering
weights are read off the reduced costs of the slacks, and strong duality
is re-checked exactly before a solution is returned.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .base import Limits, resolve_limits
from .digraph import Digraph, closes_cycle
from .utils.utilities import format_rational, iter_bits, log2_rational, popcount

# Setup module logger
logger = logging.getLogger(__name__)

Rational = Fraction


class EnumerationLimitError(ValueError):
    """Maximal-set enumeration produced more sets than allowed.

    Attributes:
        partial_count (int): Sets found before giving up.
    """

    def __init__(self, message: str, partial_count: int):
        super().__init__(message)
        self.partial_count = partial_count


@dataclass(frozen=True)
class SetSystem:
    """Subsets of a ground set ``0..ground-1`` stored as bit rows.

    Attributes:
        ground (int): Number of ground elements.
        sets (tuple): The subsets as bit masks.
    """

    ground: int
    sets: Tuple[int, ...]

    def __post_init__(self):
        if self.ground < 1:
            raise ValueError(f"Ground set must be non-empty, got {self.ground}")
        full = (1 << self.ground) - 1
        covered = 0
        for i, s in enumerate(self.sets):
            if s <= 0 or s & ~full:
                raise ValueError(f"Set {i} is empty or has elements outside the ground set")
            covered |= s
        if covered != full:
            missing = next(iter_bits(full & ~covered))
            raise ValueError(f"Element {missing} belongs to no set; the covering LP is infeasible")

    @property
    def max_set_size(self) -> int:
        """Cardinality of a largest set."""
        return max(popcount(s) for s in self.sets)

    def members(self, i: int) -> List[int]:
        return list(iter_bits(self.sets[i]))

    def __len__(self) -> int:
        return len(self.sets)

    def to_dict(self) -> Dict[str, object]:
        return {"ground": self.ground, "sets": [self.members(i) for i in range(len(self.sets))]}


@dataclass(frozen=True)
class LPSolution:
    """Optimal covering weights with a matching packing certificate.

    Attributes:
        value (Fraction): Optimal value.
        weights (tuple): Covering weight of each set of ``system``.
        dual (tuple): Packing weight of each ground element.
        system (SetSystem): The set system solved.
        pivots (int): Simplex pivots performed.
    """

    value: Fraction
    weights: Tuple[Fraction, ...]
    dual: Tuple[Fraction, ...]
    system: SetSystem
    pivots: int = 0

    def verify(self) -> bool:
        """Re-check feasibility of both sides and strong duality, exactly."""
        sys_ = self.system
        if len(self.weights) != len(sys_.sets) or len(self.dual) != sys_.ground:
            return False
        if any(w < 0 for w in self.weights) or any(y < 0 for y in self.dual):
            return False
        cover = [Fraction(0)] * sys_.ground
        for s, w in zip(sys_.sets, self.weights):
            if w:
                for v in iter_bits(s):
                    cover[v] += w
        if any(c < 1 for c in cover):
            return False
        for s in sys_.sets:
            if sum((self.dual[v] for v in iter_bits(s)), Fraction(0)) > 1:
                return False
        return sum(self.weights, Fraction(0)) == self.value == sum(self.dual, Fraction(0))

    def support(self) -> List[Tuple[List[int], Fraction]]:
        """Sets with non-zero weight, as (members, weight)."""
        return [(self.system.members(i), w) for i, w in enumerate(self.weights) if w]

    @property
    def log2_value(self) -> float:
        return log2_rational(self.value)

    def to_dict(self) -> Dict[str, object]:
        return {
            "value": format_rational(self.value),
            "log2": self.log2_value,
            "approx": True,
            "weights": [{"set": members, "weight": format_rational(w)} for members, w in self.support()],
            "dual": [format_rational(y) for y in self.dual],
            "set_count": len(self.system),
        }


# ----------------------------------------------------------------------
# Maximal set enumeration
# ----------------------------------------------------------------------


def maximal_acyclic_sets(
    G: Digraph, limits: Optional[Limits] = None, tick: Optional[Callable[[], None]] = None
) -> SetSystem:
    """All inclusion-maximal vertex sets inducing an acyclic subgraph.

    Include/exclude recursion in vertex order. A vertex is only excluded
    while it could still be blocked by the vertices yet to come, and every
    excluded-but-addable vertex is re-checked at each node, so only maximal
    sets reach the leaves.

    Args:
        G: The digraph.
        limits: ``max_sets`` caps the number of sets.
        tick: Optional callback run once per node (used for time budgets).

    Returns:
        The sets, ordered lexicographically by their sorted members.

    Raises:
        EnumerationLimitError: When more than ``limits.max_sets`` sets exist.
    """
    limits = resolve_limits(limits)
    n = G.n
    found: List[int] = []
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << i)

    def blockable(S: int, pending: int, rest: int) -> Optional[int]:
        """Pending vertices still unblocked; None if one can never be blocked."""
        still = 0
        for x in iter_bits(pending):
            if closes_cycle(G, S | (1 << x), x):
                continue
            if not closes_cycle(G, S | rest | (1 << x), x):
                return None
            still |= 1 << x
        return still

    def extend(i: int, S: int, pending: int) -> None:
        if tick is not None:
            tick()
        if i == n:
            if pending == 0:
                found.append(S)
                if len(found) > limits.max_sets:
                    raise EnumerationLimitError(
                        f"Maximal-set enumeration exceeded {limits.max_sets} sets", len(found)
                    )
            return
        v = i
        rest = suffix[i + 1]
        if closes_cycle(G, S | (1 << v), v):
            extend(i + 1, S, pending)
            return
        included = blockable(S | (1 << v), pending, rest)
        if included is not None:
            extend(i + 1, S | (1 << v), included)
        excluded = blockable(S, pending | (1 << v), rest)
        if excluded is not None:
            extend(i + 1, S, excluded)

    extend(0, 0, 0)
    found.sort(key=lambda s: tuple(iter_bits(s)))
    logger.debug(f"{len(found)} maximal acyclic sets in {G}")
    return SetSystem(n, tuple(found))


def maximal_independent_sets(
    G: Digraph, limits: Optional[Limits] = None, tick: Optional[Callable[[], None]] = None
) -> SetSystem:
    """All maximal independent sets of the underlying undirected graph.

    Bron-Kerbosch with pivoting on the complement of the symmetrization.

    Raises:
        EnumerationLimitError: When more than ``limits.max_sets`` sets exist.
    """
    limits = resolve_limits(limits)
    n = G.n
    full = G.full_mask
    adj = [full & ~row & ~(1 << v) for v, row in enumerate(G.sym_rows)]
    found: List[int] = []

    def expand(R: int, P: int, X: int) -> None:
        if tick is not None:
            tick()
        if not P and not X:
            found.append(R)
            if len(found) > limits.max_sets:
                raise EnumerationLimitError(f"Maximal-set enumeration exceeded {limits.max_sets} sets", len(found))
            return
        pivot = max(iter_bits(P | X), key=lambda u: (popcount(P & adj[u]), -u))
        for v in iter_bits(P & ~adj[pivot]):
            expand(R | (1 << v), P & adj[v], X & adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    expand(0, full, 0)
    found.sort(key=lambda s: tuple(iter_bits(s)))
    logger.debug(f"{len(found)} maximal independent sets in {G} (n={n})")
    return SetSystem(n, tuple(found))


# ----------------------------------------------------------------------
# Exact simplex
# ----------------------------------------------------------------------


class PackingTableau:
    """Dense simplex tableau of the packing LP dual to a covering LP.

    Row ``i`` expresses the basic variable ``b_vars[i]`` as
    ``b[i] - sum_l A[i][l] * x_l`` over the nonbasic variables ``nb_vars``;
    the objective is ``z + sum_l c[l] * x_l``. Labels ``0..n-1`` are the
    element variables, ``n..n+m-1`` the slacks of the set constraints.
    """

    def __init__(self, system: SetSystem):
        self.system = system
        self.m = len(system.sets)
        self.n = system.ground
        one, zero = Fraction(1), Fraction(0)
        self.A = [[one if s >> j & 1 else zero for j in range(self.n)] for s in system.sets]
        self.b = [one] * self.m
        self.c = [one] * self.n
        self.z = zero
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        row = self.A[i]
        piv = row[j]
        for l in range(self.n):
            row[l] = 1 / piv if l == j else row[l] / piv
        self.b[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            other = self.A[k]
            f = other[j]
            if not f:
                continue
            for l in range(self.n):
                other[l] = -f / piv if l == j else other[l] - f * row[l]
            self.b[k] -= f * self.b[i]
        cj = self.c[j]
        for l in range(self.n):
            self.c[l] = -cj / piv if l == j else self.c[l] - cj * row[l]
        self.z += cj * self.b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_step(self) -> bool:
        """One pivot by Bland's rule; False once optimal."""
        entering = [l for l in range(self.n) if self.c[l] > 0]
        if not entering:
            return False
        j = min(entering, key=lambda l: self.nb_vars[l])
        best_i = None
        best_ratio = None
        for i in range(self.m):
            a = self.A[i][j]
            if a > 0:
                ratio = self.b[i] / a
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and self.b_vars[i] < self.b_vars[best_i])
                ):
                    best_i, best_ratio = i, ratio
        if best_i is None:
            raise RuntimeError("Packing LP is unbounded; the set system does not cover its ground set")
        self.pivot(best_i, j)
        return True

    def solve(self) -> LPSolution:
        while self.bland_step():
            pass
        dual = [Fraction(0)] * self.n
        for i, label in enumerate(self.b_vars):
            if label < self.n:
                dual[label] = self.b[i]
        weights = [Fraction(0)] * self.m
        for l, label in enumerate(self.nb_vars):
            if label >= self.n:
                weights[label - self.n] = -self.c[l]
        return LPSolution(self.z, tuple(weights), tuple(dual), self.system, self.pivots)


def fractional_cover_number(system: SetSystem) -> LPSolution:
    """Exact optimum of ``min sum w_S`` s.t. every element is covered with weight >= 1.

    Raises:
        RuntimeError: If the returned certificate fails the exact duality check.
    """
    solution = PackingTableau(system).solve()
    if not solution.verify():
        raise RuntimeError("Covering LP certificate failed the exact duality check")
    logger.debug(
        f"Covering LP over {len(system)} sets: value {format_rational(solution.value)} "
        f"after {solution.pivots} pivots"
    )
    return solution


def fractional_dichromatic(
    G: Digraph, limits: Optional[Limits] = None, tick: Optional[Callable[[], None]] = None
) -> LPSolution:
    """Fractional dichromatic number: covering LP over the maximal acyclic sets."""
    return fractional_cover_number(maximal_acyclic_sets(G, limits, tick))


def fractional_chromatic(
    G: Digraph, limits: Optional[Limits] = None, tick: Optional[Callable[[], None]] = None
) -> LPSolution:
    """Fractional chromatic number: covering LP over the maximal independent sets."""
    return fractional_cover_number(maximal_independent_sets(G, limits, tick))


def lovasz_rounding_holds(integral: int, fractional: Fraction, max_set_size: int) -> bool:
    """Check ``k <= k_f * (1 + log2 mu)`` for a solved covering instance, mu the largest set size."""
    return integral <= float(fractional) * (1 + math.log2(max_set_size)) + 1e-9
