"""
Bound sandwiches for the Dilworth rate and related capacities.

A bound on the non-logarithmic rate is kept exactly as a pair
``(base, root)`` meaning ``base ** (1 / root)``; the logarithmic rate is
``log2(base) / root``. Two bounds are compared exactly by raising both
sides to a common power, so pinning never depends on floating point.

Bound sources:
--------------
lower  log2 n - Gamma(G), with Gamma bounded by Alon's degree bound on the complement
lower  symmetric clique number (a clique of size s forces s^t colors on the t-th power)
lower  log2 n - Gamma(G) with a cited Sperner capacity when the complement is an oriented 5-cycle
upper  fractional dichromatic number
upper  t-th roots of chi, chi_dir and the fractional dichromatic number of the t-th power
upper  explicit six-class acyclic cover of the square, for graphs isomorphic to A5c
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations, permutations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from .base import BudgetExhausted, Limits, SolverTemplate, resolve_limits
from .digraph import Digraph, find_isomorphism, is_vertex_transitive
from .exact import (
    AcyclicCover,
    ParamResult,
    a5c_square_cover,
    acyclicity_number,
    chromatic_number,
    dichromatic_number,
    independence_number,
    symmetric_clique_number,
    transitive_clique_number,
    verify_certificate,
)
from .families import generate_family
from .fractional import EnumerationLimitError, LPSolution, fractional_chromatic, fractional_dichromatic
from .products import TypeVector, and_power, compound_union_power, decode_index, encode_sequence, type_class_subgraph
from .utils.utilities import format_rational, iter_bits, log2_rational, popcount

# Setup module logger
logger = logging.getLogger(__name__)

DEFAULT_TMAX = 3

# Outdegree profile of A5 among the orientations of the 5-cycle
_A5_PROFILE = (0, 0, 1, 2, 2)

PER_T_COLUMNS = (
    "t", "chi", "chi_status", "chidir", "chidir_status", "chidirf_exact", "root_chi", "root_chidir", "root_chidirf",
)


# ----------------------------------------------------------------------
# Distributions
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Distribution:
    """Probability distribution on the vertices, with exact rational masses.

    Attributes:
        probs (tuple): Non-negative rationals summing to exactly 1.
    """

    probs: Tuple[Fraction, ...]

    def __post_init__(self):
        probs = tuple(Fraction(p) for p in self.probs)
        if not probs:
            raise ValueError("A distribution needs at least one outcome")
        if any(p < 0 for p in probs):
            raise ValueError(f"Probabilities must be non-negative, got {[format_rational(p) for p in probs]}")
        if sum(probs) != 1:
            raise ValueError(f"Probabilities sum to {format_rational(sum(probs))}, expected 1")
        object.__setattr__(self, "probs", probs)

    @classmethod
    def uniform(cls, n: int) -> "Distribution":
        return cls(tuple(Fraction(1, n) for _ in range(n)))

    @classmethod
    def of_type(cls, tv: TypeVector) -> "Distribution":
        """Empirical distribution ``counts / t`` of a type."""
        return cls(tuple(Fraction(c, tv.total) for c in tv.counts))


def entropy(P: Distribution) -> float:
    """Base-2 Shannon entropy; zero masses contribute nothing."""
    p = np.array([float(x) for x in P.probs])
    p = p[p > 0]
    return max(0.0, float(np.sum(-p * np.log2(p))))


# ----------------------------------------------------------------------
# Bound entries
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class BoundEntry:
    """One bound ``base ** (1 / root)`` on the non-logarithmic rate.

    Attributes:
        side (str): ``"lower"`` or ``"upper"``.
        provenance (str): The argument the bound comes from.
        base (Fraction): Exact base.
        root (int): Root taken.
        cited (bool): Rests on a cited constant rather than a computation.
        status (str): ``"optimal"`` when every input was proved exact,
            ``"bracket"`` when an input is a certified but unproved value.
    """

    side: str
    provenance: str
    base: Fraction
    root: int = 1
    cited: bool = False
    status: str = "optimal"

    @property
    def log2(self) -> float:
        return log2_rational(self.base) / self.root

    @property
    def value(self) -> float:
        return float(self.base) ** (1.0 / self.root)

    def to_dict(self) -> Dict[str, object]:
        return {
            "provenance": self.provenance,
            "base": format_rational(self.base),
            "root": self.root,
            "log2": self.log2,
            "value": self.value,
            "cited": self.cited,
            "status": self.status,
        }


def compare_roots(a: BoundEntry, b: BoundEntry) -> int:
    """Exact three-way comparison of ``a.base^(1/a.root)`` and ``b.base^(1/b.root)``."""
    left = a.base**b.root
    right = b.base**a.root
    return (left > right) - (left < right)


def _best(entries: Sequence[BoundEntry], highest: bool) -> Optional[BoundEntry]:
    if not entries:
        return None
    ordered = sorted(entries, key=cmp_to_key(compare_roots))
    return ordered[-1] if highest else ordered[0]


# ----------------------------------------------------------------------
# Capacity brackets
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class CapacityBracket:
    """``log2(lower_argument) <= quantity <= log2(upper_argument)``.

    Attributes:
        quantity (str): ``"sperner"`` or ``"gamma"``.
        lower_argument (int): Certified clique or acyclic-set size.
        upper_argument (int): ``min(max outdegree, max indegree) + 1``.
        lower_optimal (bool): Whether the lower argument was proved maximum.
        cited (tuple): Optional exact value ``(base, root)`` from a cited result.
    """

    quantity: str
    lower_argument: int
    upper_argument: int
    lower_optimal: bool = True
    cited: Optional[Tuple[Fraction, int]] = None

    @property
    def lower(self) -> float:
        if self.cited is not None:
            return log2_rational(self.cited[0]) / self.cited[1]
        return math.log2(self.lower_argument)

    @property
    def upper(self) -> float:
        if self.cited is not None:
            return log2_rational(self.cited[0]) / self.cited[1]
        return math.log2(self.upper_argument)

    @property
    def tight(self) -> bool:
        return self.cited is not None or self.lower_argument == self.upper_argument

    def to_dict(self) -> Dict[str, object]:
        payload = {
            "quantity": self.quantity,
            "lower_argument": self.lower_argument,
            "upper_argument": self.upper_argument,
            "lower": self.lower,
            "upper": self.upper,
            "tight": self.tight,
            "lower_optimal": self.lower_optimal,
        }
        if self.cited is not None:
            payload["cited"] = {"base": format_rational(self.cited[0]), "root": self.cited[1]}
        return payload


def alon_sperner_upper(G: Digraph) -> Tuple[float, int]:
    """Alon's degree bound on the Sperner capacity.

    Returns:
        ``(log2(m), m)`` with ``m = min(max outdegree, max indegree) + 1``.
    """
    m = min(G.max_out_degree, G.max_in_degree) + 1
    return math.log2(m), m


def sperner_capacity_bounds(
    G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None
) -> CapacityBracket:
    """Bracket ``[log2 omega_tr(G), alon_sperner_upper(G)]`` on the Sperner capacity."""
    clique = transitive_clique_number(G, budget, limits)
    _, m = alon_sperner_upper(G)
    bracket = CapacityBracket("sperner", clique.value, m, clique.optimal)
    logger.info(f"Sperner capacity of {G}: [{bracket.lower:.6g}, {bracket.upper:.6g}]"
                f"{' (tight)' if bracket.tight else ''}")
    return bracket


def oriented_five_cycle_kind(H: Digraph) -> Optional[str]:
    """``"A5"`` or ``"other"`` when ``H`` orients the 5-cycle, else None."""
    if H.n != 5 or H.edge_count != 5 or any(H.bidirected().rows):
        return None
    sym = H.symmetrize()
    if any(popcount(row) != 2 for row in sym.rows):
        return None
    # a 2-regular graph on 5 vertices is a 5-cycle iff it is connected
    seen, frontier = {0}, [0]
    while frontier:
        v = frontier.pop()
        for w in iter_bits(sym.rows[v]):
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    if len(seen) != 5:
        return None
    profile = tuple(sorted(int(d) for d in H.out_degrees()))
    return "A5" if profile == _A5_PROFILE else "other"


def cited_sperner_capacity(H: Digraph) -> Optional[Tuple[Fraction, int]]:
    """Cited Sperner capacity ``(base, root)`` of an oriented 5-cycle.

    A5 has capacity log sqrt(5); every other orientation of the 5-cycle has
    capacity log 2. Any other graph returns None.
    """
    kind = oriented_five_cycle_kind(H)
    if kind is None:
        return None
    return (Fraction(5), 2) if kind == "A5" else (Fraction(2), 1)


def gamma_bounds(G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None) -> CapacityBracket:
    """Bracket ``[log2 a(G), alon_sperner_upper(complement(G))]`` on Gamma(G).

    When the complement is an oriented 5-cycle the cited Sperner capacity
    is attached and the bracket collapses to it.
    """
    a = acyclicity_number(G, budget, limits)
    complement = G.complement()
    _, m = alon_sperner_upper(complement)
    cited = cited_sperner_capacity(complement)
    if cited is not None:
        logger.warning(f"Gamma of {G} uses the cited Sperner capacity {format_rational(cited[0])}^(1/{cited[1]})")
    bracket = CapacityBracket("gamma", a.value, m, a.optimal, cited)
    logger.info(f"Gamma of {G}: [{bracket.lower:.6g}, {bracket.upper:.6g}]{' (tight)' if bracket.tight else ''}")
    return bracket


# ----------------------------------------------------------------------
# Dilworth rate report
# ----------------------------------------------------------------------


@dataclass
class BoundReport:
    """Lower and upper bounds on the Dilworth rate of one digraph.

    Attributes:
        graph_hash (str): Digest of the canonical text of the graph.
        n (int): Vertex count.
        lower (list): Lower ``BoundEntry`` rows.
        upper (list): Upper ``BoundEntry`` rows.
        per_t (pandas.DataFrame): One row per power, columns ``PER_T_COLUMNS``.
        pinned (BoundEntry): Exact value when the best bounds meet, else None.
        rate_kind (str): ``"witsenhausen"`` for symmetric graphs, else ``"dilworth"``.
    """

    graph_hash: str
    n: int
    lower: List[BoundEntry]
    upper: List[BoundEntry]
    per_t: pd.DataFrame
    pinned: Optional[BoundEntry] = None
    rate_kind: str = "dilworth"
    notes: List[str] = field(default_factory=list)

    @property
    def best_lower(self) -> Optional[BoundEntry]:
        return _best(self.lower, highest=True)

    @property
    def best_upper(self) -> Optional[BoundEntry]:
        return _best(self.upper, highest=False)

    def to_dict(self) -> Dict[str, object]:
        records = []
        for row in self.per_t.to_dict(orient="records"):
            records.append({k: (None if isinstance(v, float) and math.isnan(v) else v) for k, v in row.items()})
        best_lower, best_upper = self.best_lower, self.best_upper
        return {
            "graph_hash": self.graph_hash,
            "n": self.n,
            "rate_kind": self.rate_kind,
            "lower_bounds": [e.to_dict() for e in self.lower],
            "upper_bounds": [e.to_dict() for e in self.upper],
            "best_lower": best_lower.to_dict() if best_lower else None,
            "best_upper": best_upper.to_dict() if best_upper else None,
            "pinned": self.pinned.to_dict() if self.pinned else None,
            "per_t": records,
            "notes": list(self.notes),
        }

    def to_csv(self, path: Optional[str] = None) -> Optional[str]:
        """Per-t table as CSV, written to ``path`` or returned as text."""
        return self.per_t.to_csv(path, index=False)


class _LPCell(SolverTemplate):
    """Fractional dichromatic number of one power under a time budget."""

    name = "chidirf"

    def __init__(self, G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None):
        super().__init__(budget, limits)
        self.G = G

    def solve(self) -> Optional[LPSolution]:
        self.start()
        try:
            return fractional_dichromatic(self.G, self.limits, self.tick)
        except (BudgetExhausted, EnumerationLimitError) as ex:
            logger.warning(f"chidirf of {self.G} not computed: {ex}")
            return None


def _power_row(G: Digraph, t: int, budget: Optional[float], limits: Limits) -> Dict[str, object]:
    row: Dict[str, object] = {column: None for column in PER_T_COLUMNS}
    row["t"] = t
    if G.n**t > limits.max_vertices:
        logger.warning(f"Power t={t} of {G} has {G.n ** t} vertices, above the vertex limit; row skipped")
        row.update(chi_status="skipped", chidir_status="skipped")
        return row
    P = G if t == 1 else and_power(G, t, limits)
    chi = chromatic_number(P, budget, limits)
    chidir = dichromatic_number(P, budget, limits)
    lp = _LPCell(P, budget, limits).solve()
    row.update(
        chi=chi.value,
        chi_status=chi.status,
        chidir=chidir.value,
        chidir_status=chidir.status,
        chidirf_exact=format_rational(lp.value) if lp is not None else None,
        root_chi=chi.value ** (1.0 / t),
        root_chidir=chidir.value ** (1.0 / t),
        root_chidirf=float(lp.value) ** (1.0 / t) if lp is not None else None,
    )
    row["_chidirf"] = lp.value if lp is not None else None
    return row


def transported_square_cover(G: Digraph) -> Optional[AcyclicCover]:
    """The six-class cover of the square of A5c carried over to ``G`` by an isomorphism, if any."""
    if G.n != 5:
        return None
    perm = find_isomorphism(generate_family("A5c"), G)
    if perm is None:
        return None
    orders = []
    for order in a5c_square_cover().orders:
        moved = []
        for x in order:
            a, b = decode_index(x, 5, 2)
            moved.append(encode_sequence((perm[a], perm[b]), 5))
        orders.append(tuple(moved))
    return AcyclicCover(tuple(orders))


def static_bounds(
    G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None
) -> Tuple[List[BoundEntry], List[BoundEntry], List[str]]:
    """Bounds that need no power of ``G``: (lower entries, upper entries, notes)."""
    limits = resolve_limits(limits)
    n = G.n
    lower: List[BoundEntry] = []
    upper: List[BoundEntry] = []
    notes: List[str] = []

    _, m = alon_sperner_upper(G.complement())
    lower.append(BoundEntry("lower", "log n - Gamma, Alon bound on the complement", Fraction(n, m)))

    omega = symmetric_clique_number(G, budget, limits)
    lower.append(BoundEntry("lower", "symmetric clique number", Fraction(omega.value)))

    cited = cited_sperner_capacity(G.complement())
    if cited is not None:
        base, root = cited
        lower.append(BoundEntry("lower", "log n - Gamma, cited Sperner capacity of the complement",
                                Fraction(n) ** root / base, root, cited=True, status="cited"))
        notes.append("complement is an oriented 5-cycle; its cited Sperner capacity is used")

    try:
        lp = fractional_dichromatic(G, limits)
        upper.append(BoundEntry("upper", "fractional dichromatic number", lp.value))
    except EnumerationLimitError as ex:
        notes.append(f"fractional dichromatic number not computed: {ex}")

    if n <= limits.transitivity_max_n and is_vertex_transitive(G, limits):
        a = acyclicity_number(G, budget, limits)
        if a.optimal:
            upper.append(BoundEntry("upper", "vertex-transitive n / a(G)", Fraction(n, a.value)))

    cover = transported_square_cover(G)
    if cover is not None and n * n > limits.max_vertices:
        notes.append("square cover not checked: the square exceeds the vertex limit")
    elif cover is not None:
        square = and_power(G, 2, limits)
        if verify_certificate(square, cover).ok:
            upper.append(BoundEntry("upper", "explicit acyclic cover of the square", Fraction(cover.k), 2))
        else:
            logger.error(f"Transported square cover failed to verify on {G}")
    return lower, upper, notes


def dilworth_bounds(
    G: Digraph, t_max: int = DEFAULT_TMAX, budget: Optional[float] = None, limits: Optional[Limits] = None
) -> BoundReport:
    """Assemble the lower and upper bounds on the Dilworth rate of ``G``.

    Args:
        G: The digraph.
        t_max: Largest power examined (0 skips the per-t table).
        budget: Seconds per solver call.
        limits: Size caps.

    Returns:
        The report; ``pinned`` is set when the best lower and upper bounds
        agree exactly.

    Raises:
        ValueError: For a negative ``t_max``.
        RuntimeError: If a lower bound exceeds an upper bound.
    """
    if t_max < 0:
        raise ValueError(f"t_max must be >= 0, got {t_max}")
    limits = resolve_limits(limits)
    lower, upper, notes = static_bounds(G, budget, limits)

    rows = []
    for t in range(1, t_max + 1):
        row = _power_row(G, t, budget, limits)
        exact_lp = row.pop("_chidirf", None)
        rows.append(row)
        if row["chi"] is not None:
            upper.append(BoundEntry("upper", f"chi of power t={t}", Fraction(row["chi"]), t,
                                    status=row["chi_status"]))
            upper.append(BoundEntry("upper", f"chi_dir of power t={t}", Fraction(row["chidir"]), t,
                                    status=row["chidir_status"]))
        if exact_lp is not None and t > 1:
            upper.append(BoundEntry("upper", f"fractional chi_dir of power t={t}", exact_lp, t))
    per_t = pd.DataFrame(rows, columns=list(PER_T_COLUMNS), dtype=object)

    report = BoundReport(
        graph_hash=G.graph_hash,
        n=G.n,
        lower=lower,
        upper=upper,
        per_t=per_t,
        rate_kind="witsenhausen" if G.is_symmetric else "dilworth",
        notes=notes,
    )
    best_lower, best_upper = report.best_lower, report.best_upper
    if best_lower is not None and best_upper is not None:
        order = compare_roots(best_lower, best_upper)
        if order > 0:
            logger.error(f"Lower bound {best_lower} exceeds upper bound {best_upper} on {G}")
            raise RuntimeError(f"Inconsistent bounds: {best_lower.provenance} > {best_upper.provenance}")
        if order == 0:
            report.pinned = best_lower
            logger.info(f"Dilworth rate of {G} pinned to log2({format_rational(best_lower.base)})"
                        f"/{best_lower.root} = {best_lower.log2:.6g}")
    return report


# ----------------------------------------------------------------------
# Compound families and type classes
# ----------------------------------------------------------------------


def compound_report(
    family: Sequence[Digraph], t_max: int = DEFAULT_TMAX, budget: Optional[float] = None,
    limits: Optional[Limits] = None,
) -> pd.DataFrame:
    """Chromatic numbers of the union of powers beside each member's own.

    Columns: ``t``, ``chi_union``, ``chi_union_status``, ``chi_member_<i>``
    per member, ``max_member_chi``, ``union_ge_max`` (sanity flag),
    ``bits`` (second-message length for the compound channel),
    ``union_rate`` and ``reference_rate`` (the smallest member rate at this t).
    """
    limits = resolve_limits(limits)
    if not family:
        raise ValueError("A compound family needs at least one member")
    rows = []
    for t in range(1, t_max + 1):
        union = compound_union_power(family, t, limits)
        chi_union = chromatic_number(union, budget, limits)
        members = [chromatic_number(and_power(G, t, limits), budget, limits).value for G in family]
        row = {"t": t, "chi_union": chi_union.value, "chi_union_status": chi_union.status}
        for i, value in enumerate(members):
            row[f"chi_member_{i}"] = value
        row["max_member_chi"] = max(members)
        row["union_ge_max"] = chi_union.value >= max(members)
        row["bits"] = math.ceil(math.log2(chi_union.value)) if chi_union.value > 1 else 0
        row["union_rate"] = math.log2(chi_union.value) / t
        row["reference_rate"] = min(math.log2(v) for v in members) / t
        if not row["union_ge_max"]:
            logger.error(f"Union chi {chi_union.value} below member maximum {max(members)} at t={t}")
        rows.append(row)
    return pd.DataFrame(rows)


@dataclass(frozen=True)
class TypeClassRecord:
    """Parameters of the subgraph of a power induced on one type class."""

    counts: Tuple[int, ...]
    t: int
    size: int
    alpha: int
    alpha_optimal: bool
    chi_f: Fraction
    identity_holds: bool
    entropy: float
    vertex_transitive: Optional[bool]

    def to_dict(self) -> Dict[str, object]:
        return {
            "counts": list(self.counts),
            "t": self.t,
            "size": self.size,
            "alpha": self.alpha,
            "alpha_optimal": self.alpha_optimal,
            "chi_f": format_rational(self.chi_f),
            "identity_holds": self.identity_holds,
            "entropy": self.entropy,
            "vertex_transitive": self.vertex_transitive,
        }


def within_type_report(
    G: Digraph, t: int, tv: TypeVector, budget: Optional[float] = None, limits: Optional[Limits] = None
) -> TypeClassRecord:
    """Size, independence number and fractional chromatic number of a type class.

    The class is vertex-transitive, so ``chi_f == size / alpha`` is
    expected to hold exactly.
    """
    limits = resolve_limits(limits)
    sub, _ = type_class_subgraph(G, t, tv, limits)
    alpha: ParamResult = independence_number(sub, budget, limits)
    chi_f = fractional_chromatic(sub, limits).value
    identity = chi_f == Fraction(sub.n, alpha.value)
    transitive = is_vertex_transitive(sub, limits) if sub.n <= limits.transitivity_max_n else None
    if not identity and alpha.optimal:
        logger.warning(f"Type class {tv.counts} of t={t}: chi_f={chi_f} differs from {sub.n}/{alpha.value}")
    return TypeClassRecord(
        counts=tv.counts,
        t=t,
        size=sub.n,
        alpha=alpha.value,
        alpha_optimal=alpha.optimal,
        chi_f=chi_f,
        identity_holds=identity,
        entropy=entropy(Distribution.of_type(tv)),
        vertex_transitive=transitive,
    )


# ----------------------------------------------------------------------
# Tournament scan
# ----------------------------------------------------------------------


def tournament_from_code(n: int, code: int) -> Digraph:
    """Tournament whose k-th pair ``(i, j)``, ``i < j``, points ``i -> j`` iff bit k of ``code`` is set."""
    edges = [(i, j) if code >> k & 1 else (j, i) for k, (i, j) in enumerate(combinations(range(n), 2))]
    return Digraph.from_edges(n, edges)


def tournament_code(G: Digraph) -> int:
    return sum(1 << k for k, (i, j) in enumerate(combinations(range(G.n), 2)) if G.has_edge(i, j))


def _canonical_code(G: Digraph) -> int:
    return min(tournament_code(G.relabel(perm)) for perm in permutations(range(G.n)))


def scan_tournaments(n: int, budget: Optional[float] = None, limits: Optional[Limits] = None) -> pd.DataFrame:
    """Compare the best lower bound with the fractional dichromatic number over all tournaments.

    Tournaments on up to 5 vertices are reduced to isomorphism classes.
    Exploratory: a ``gap`` row only says the bounds computed here differ.

    Raises:
        ValueError: Unless ``1 <= n <= 6``.
    """
    if not 1 <= n <= 6:
        raise ValueError(f"Tournament scan supports 1 <= n <= 6, got {n}")
    limits = resolve_limits(limits)
    pairs = n * (n - 1) // 2
    seen = set()
    rows = []
    for code in range(1 << pairs):
        G = tournament_from_code(n, code)
        if n <= 5:
            canonical = _canonical_code(G)
            if canonical in seen:
                continue
            seen.add(canonical)
        lower, upper, _ = static_bounds(G, budget, limits)
        best_lower = _best(lower, highest=True)
        lp = next((e for e in upper if e.provenance == "fractional dichromatic number"), None)
        rows.append({
            "code": code,
            "scores": ",".join(str(d) for d in sorted(int(x) for x in G.out_degrees())),
            "lower": f"{format_rational(best_lower.base)}^(1/{best_lower.root})",
            "lower_log2": best_lower.log2,
            "chidirf": format_rational(lp.base) if lp else None,
            "chidirf_log2": lp.log2 if lp else None,
            "gap": bool(lp and compare_roots(best_lower, lp) < 0),
        })
    logger.info(f"Scanned {len(rows)} tournaments on {n} vertices, {sum(r['gap'] for r in rows)} with a gap")
    return pd.DataFrame(rows)
