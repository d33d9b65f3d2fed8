"""
Colorings of powers read as extremal set families.

A length-t sequence over {0, 1} is a subset of [t] = {1, ..., t}; the
levels of the Boolean lattice are antichains and color the powers of L.

A length-t sequence over {0, 1, 2} is a pair (A, B) of disjoint subsets
of [t] (1s at A, 2s at B). Two such pairs are non-adjacent in the powers
of F exactly when they cross-intersect, so a color class of a proper
coloring is a cross-intersecting family.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence

from .base import Limits, resolve_limits
from .exact import (
    Coloring,
    chromatic_number,
    constructive_bound,
    constructive_power_coloring,
    dichromatic_number,
    verify_certificate,
)
from .families import generate_family
from .products import and_power, decode_index

# Setup module logger
logger = logging.getLogger(__name__)

MAX_ANTICHAIN_T = 20


@dataclass(frozen=True)
class SetPair:
    """Two disjoint subsets of {1, ..., t}.

    Attributes:
        A (frozenset): Positions of the letter 1.
        B (frozenset): Positions of the letter 2.
        t (int): Size of the ground set.
    """

    A: FrozenSet[int]
    B: FrozenSet[int]
    t: int

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        if self.A & self.B:
            raise ValueError(f"Set pair is not disjoint: A ∩ B = {sorted(self.A & self.B)}")
        outside = [i for i in self.A | self.B if not 1 <= i <= self.t]
        if outside:
            raise ValueError(f"Elements {sorted(outside)} lie outside [1, {self.t}]")

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "SetPair":
        """Decode a ternary sequence (1-based positions)."""
        if any(a not in (0, 1, 2) for a in seq):
            raise ValueError(f"Not a ternary sequence: {list(seq)}")
        return cls(
            frozenset(i + 1 for i, a in enumerate(seq) if a == 1),
            frozenset(i + 1 for i, a in enumerate(seq) if a == 2),
            len(seq),
        )

    def to_sequence(self) -> tuple:
        return tuple(1 if i in self.A else 2 if i in self.B else 0 for i in range(1, self.t + 1))

    def to_dict(self) -> Dict[str, List[int]]:
        return {"A": sorted(self.A), "B": sorted(self.B)}


# ----------------------------------------------------------------------
# Antichains
# ----------------------------------------------------------------------


def antichain_cover(t: int) -> List[List[FrozenSet[int]]]:
    """The t+1 levels of the subset lattice of {1, ..., t}, each sorted lexicographically.

    Raises:
        ValueError: Unless ``0 <= t <= 20``.
    """
    if not 0 <= t <= MAX_ANTICHAIN_T:
        raise ValueError(f"antichain_cover supports 0 <= t <= {MAX_ANTICHAIN_T}, got {t}")
    return [[frozenset(c) for c in combinations(range(1, t + 1), k)] for k in range(t + 1)]


def is_antichain(family: Sequence[FrozenSet[int]]) -> bool:
    """No member is a proper subset of another."""
    return not any(a < b for a in family for b in family)


def level_coloring(t: int) -> Coloring:
    """Coloring of the t-th power of L by subset size (number of 1s)."""
    return Coloring(tuple(sum(decode_index(x, 2, t)) for x in range(2**t)))


# ----------------------------------------------------------------------
# Cross-intersecting families
# ----------------------------------------------------------------------


def is_cross_intersecting(pairs: Sequence[SetPair]) -> bool:
    """True iff ``A_i ∩ B_j`` and ``A_j ∩ B_i`` are non-empty for all ``i != j``.

    Raises:
        ValueError: If the pairs do not share a ground set.
    """
    grounds = {p.t for p in pairs}
    if len(grounds) > 1:
        raise ValueError(f"Set pairs over different ground sets: {sorted(grounds)}")
    for i, p in enumerate(pairs):
        for q in pairs[i + 1:]:
            if not (p.A & q.B) or not (q.A & p.B):
                return False
    return True


def bollobas_inequality(pairs: Sequence[SetPair]) -> Fraction:
    """Exact left-hand side ``sum 1 / C(|A_i| + |B_i|, |A_i|)``; at most 1 on cross-intersecting families."""
    return sum((Fraction(1, math.comb(len(p.A) + len(p.B), len(p.A))) for p in pairs), Fraction(0))


def decode_families(coloring: Coloring, t: int) -> List[List[SetPair]]:
    """Color classes of a coloring of the t-th power of F as set-pair families."""
    return [[SetPair.from_sequence(decode_index(x, 3, t)) for x in members] for members in coloring.classes()]


@dataclass
class BollobasBounds:
    """Bounds on the least number of cross-intersecting families covering all pairs.

    Attributes:
        t (int): Ground set size.
        lower (int): ``2^t`` from the symmetric clique of the power.
        constructive (int): Colors used by the constructive coloring.
        constructive_bound (int): ``(t+1)^3 * 2^t``.
        exact (int): The chromatic number of the power, when computed.
        exact_optimal (bool): Whether ``exact`` was proved optimal.
        families (list): Verified families from the best coloring found.
    """

    t: int
    lower: int
    constructive: int
    constructive_bound: int
    exact: Optional[int] = None
    exact_optimal: bool = False
    families: List[List[SetPair]] = field(default_factory=list)

    @property
    def upper(self) -> int:
        return self.exact if self.exact is not None else self.constructive

    @property
    def rate_bracket(self) -> tuple:
        """``(1/t) log2`` of the lower and upper counts."""
        return (math.log2(self.lower) / self.t, math.log2(self.upper) / self.t)

    def to_dict(self) -> Dict[str, object]:
        return {
            "t": self.t,
            "lower": self.lower,
            "constructive": self.constructive,
            "constructive_bound": self.constructive_bound,
            "exact": self.exact,
            "exact_optimal": self.exact_optimal,
            "rate_bracket": list(self.rate_bracket),
            "families": [[p.to_dict() for p in family] for family in self.families],
        }


def bollobas_cover_bounds(t: int, budget: Optional[float] = None, limits: Optional[Limits] = None) -> BollobasBounds:
    """Bracket the covering number by cross-intersecting families of disjoint pairs over [t].

    The count equals the chromatic number of the t-th AND power of F. The
    exact value is attempted while ``3^t`` is within both
    ``limits.exact_bollobas_max`` and ``limits.solver_max_n``.

    Raises:
        ValueError: For ``t < 1``.
        RuntimeError: If an emitted family fails cross-intersection or the
            Bollobás inequality.
    """
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    limits = resolve_limits(limits)
    F = generate_family("F")
    cover = dichromatic_number(F, budget, limits).certificate
    constructive = constructive_power_coloring(F, cover, t, limits)
    power = and_power(F, t, limits)
    check = verify_certificate(power, constructive)
    if not check.ok:
        raise RuntimeError(f"Constructive coloring of F^{t} is improper: {check.violation}")

    bounds = BollobasBounds(t, 2**t, constructive.k, constructive_bound(F.n, cover.k, t))
    best = constructive
    if 3**t <= min(limits.exact_bollobas_max, limits.solver_max_n):
        result = chromatic_number(power, budget, limits)
        bounds.exact = result.value
        bounds.exact_optimal = result.optimal
        if result.value <= best.k:
            best = result.certificate
    else:
        logger.info(f"Exact covering number skipped for t={t}: 3^{t} above the exact limit")

    bounds.families = decode_families(best, t)
    for family in bounds.families:
        if not is_cross_intersecting(family):
            raise RuntimeError(f"Color class {[p.to_dict() for p in family]} is not cross-intersecting")
        if bollobas_inequality(family) > 1:
            raise RuntimeError(f"Bollobás inequality fails on {[p.to_dict() for p in family]}")
    logger.info(f"Cross-intersecting cover of t={t}: {bounds.lower} <= B <= {bounds.upper}")
    return bounds
