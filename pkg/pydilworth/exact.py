"""
Exact combinatorial parameters of digraphs, with certificates.

Solvers:
--------
independence_number       largest set with no edge in either direction
symmetric_clique_number   largest set with every pair joined both ways
transitive_clique_number  largest set with a linear order whose forward pairs are edges
acyclicity_number         largest set inducing no directed cycle
chromatic_number          proper colorings of the underlying graph (DSATUR branch-and-bound)
dichromatic_number        covers by acyclic sets (set-cover branch-and-bound)

Every solver runs under a time budget (see ``base.SolverTemplate``). When
the budget runs out the result carries ``optimal=False`` and a
``(lower, upper)`` bracket; the certificate always backs the reported
value, and it is verified before it is returned.
"""

import logging
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .base import BudgetExhausted, Limits, SolverTemplate, resolve_limits
from .digraph import Digraph, closes_cycle, topological_order
from .families import a5c_square_orders
from .fractional import EnumerationLimitError, SetSystem, fractional_cover_number, maximal_acyclic_sets
from .products import PowerOracle, TypeVector, and_power, decode_index, encode_sequence, parse_vertex
from .utils.decorators import parameter_validator
from .utils.utilities import iter_bits, mask_of, popcount

# Setup module logger
logger = logging.getLogger(__name__)

SUBSET_KINDS = ("independent", "symmetric-clique", "transitive-clique", "acyclic")


# ----------------------------------------------------------------------
# Certificates
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Coloring:
    """Color index per vertex.

    Attributes:
        colors (tuple): ``colors[v]`` is the color of vertex ``v``.
    """

    colors: Tuple[int, ...]

    @property
    def k(self) -> int:
        """Number of colors used."""
        return len(set(self.colors))

    def classes(self) -> List[List[int]]:
        """Color classes, ordered by color index."""
        grouped: Dict[int, List[int]] = {}
        for v, c in enumerate(self.colors):
            grouped.setdefault(c, []).append(v)
        return [grouped[c] for c in sorted(grouped)]

    def normalized(self) -> "Coloring":
        """Same partition with colors renumbered by first appearance."""
        relabel: Dict[int, int] = {}
        return Coloring(tuple(relabel.setdefault(c, len(relabel)) for c in self.colors))

    def to_dict(self) -> Dict[str, object]:
        return {"colors": list(self.colors)}


@dataclass(frozen=True)
class AcyclicCover:
    """Acyclic classes covering the vertices, each with a topological order.

    Attributes:
        orders (tuple): One vertex order per class; every edge inside a class
            must go from an earlier to a later vertex.
    """

    orders: Tuple[Tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.orders)

    @property
    def classes(self) -> List[frozenset]:
        return [frozenset(order) for order in self.orders]

    @classmethod
    def from_classes(cls, G: Digraph, classes: Sequence[Sequence[int]]) -> "AcyclicCover":
        """Attach topological orders to vertex classes.

        Raises:
            ValueError: If a class induces a directed cycle.
        """
        orders = []
        for i, members in enumerate(classes):
            order = topological_order(G, members)
            if order is None:
                raise ValueError(f"Class {i} {sorted(members)} induces a directed cycle")
            orders.append(tuple(order))
        return cls(tuple(orders))

    def class_of(self, n: int) -> List[int]:
        """Index of the first class containing each vertex (-1 when uncovered)."""
        owner = [-1] * n
        for i, order in enumerate(self.orders):
            for v in order:
                if 0 <= v < n and owner[v] < 0:
                    owner[v] = i
        return owner

    def to_dict(self) -> Dict[str, object]:
        return {"orders": [list(order) for order in self.orders]}


@dataclass(frozen=True)
class SubsetCertificate:
    """A vertex set witnessing a lower bound.

    Attributes:
        kind (str): One of ``SUBSET_KINDS``.
        vertices (tuple): Members, sorted.
        order (tuple): Linear order for the transitive-clique and acyclic kinds.
    """

    kind: str
    vertices: Tuple[int, ...]
    order: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in SUBSET_KINDS:
            raise ValueError(f"Unknown subset certificate kind '{self.kind}'")

    def to_dict(self) -> Dict[str, object]:
        payload: Dict[str, object] = {"vertices": list(self.vertices)}
        if self.order is not None:
            payload["order"] = list(self.order)
        return payload


Certificate = Union[Coloring, AcyclicCover, SubsetCertificate]


@dataclass(frozen=True)
class Verification:
    """Outcome of ``verify_certificate``.

    Attributes:
        ok (bool): Whether every invariant holds.
        violation (tuple): The first violation found, e.g. ``("edge", (0, 1))``.
    """

    ok: bool
    violation: Optional[Tuple] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ParamResult:
    """Value of one parameter with its certificate and search statistics.

    For maximization problems ``value`` is the certified lower end; for
    coloring problems it is the certified upper end. ``optimal`` means
    ``lower == upper`` was proved.
    """

    name: str
    value: int
    lower: int
    upper: int
    optimal: bool
    certificate: Certificate
    nodes: int = 0
    digest: str = ""
    elapsed: float = 0.0
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def __iter__(self) -> Iterator:
        yield self.value
        yield self.certificate

    @property
    def status(self) -> str:
        return "optimal" if self.optimal else "bracket"

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "optimal": self.optimal,
            "nodes": self.nodes,
            "digest": self.digest,
        }


# ----------------------------------------------------------------------
# Verification
# ----------------------------------------------------------------------


def _check_vertices(G: Digraph, vertices: Sequence[int], what: str) -> None:
    for v in vertices:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < G.n:
            raise ValueError(f"{what} names vertex {v!r}, out of range for n={G.n}")


def verify_certificate(G: Digraph, cert: Certificate) -> Verification:
    """Check a certificate against ``G``.

    Returns:
        ``Verification(True)`` or the first violation: the lexicographically
        first offending edge for colorings and subsets, the first uncovered
        vertex or backward edge for covers.

    Raises:
        ValueError: On a structurally malformed certificate (wrong length,
            out-of-range or repeated vertices).
    """
    if isinstance(cert, Coloring):
        if len(cert.colors) != G.n:
            raise ValueError(f"Coloring has {len(cert.colors)} entries for a graph with {G.n} vertices")
        if any(isinstance(c, bool) or not isinstance(c, int) or c < 0 for c in cert.colors):
            raise ValueError("Colors must be non-negative integers")
        for u, v in G.edges():
            if cert.colors[u] == cert.colors[v]:
                return Verification(False, ("edge", (u, v)))
        return Verification(True)

    if isinstance(cert, AcyclicCover):
        for i, order in enumerate(cert.orders):
            _check_vertices(G, order, f"Class {i}")
            if len(set(order)) != len(order):
                raise ValueError(f"Class {i} repeats a vertex")
        covered = mask_of(v for order in cert.orders for v in order)
        if covered != G.full_mask:
            return Verification(False, ("uncovered", next(iter_bits(G.full_mask & ~covered))))
        for i, order in enumerate(cert.orders):
            position = {v: p for p, v in enumerate(order)}
            members = mask_of(order)
            for u in order:
                for v in iter_bits(G.rows[u] & members):
                    if position[v] < position[u]:
                        return Verification(False, ("backward-edge", i, (u, v)))
        return Verification(True)

    if isinstance(cert, SubsetCertificate):
        _check_vertices(G, cert.vertices, "Subset certificate")
        if len(set(cert.vertices)) != len(cert.vertices):
            raise ValueError("Subset certificate repeats a vertex")
        members = mask_of(cert.vertices)
        if cert.kind == "independent":
            for u in sorted(cert.vertices):
                hit = G.sym_rows[u] & members
                if hit:
                    v = next(iter_bits(hit))
                    return Verification(False, ("edge", (u, v) if G.has_edge(u, v) else (v, u)))
            return Verification(True)
        if cert.kind == "symmetric-clique":
            for u in sorted(cert.vertices):
                for v in sorted(cert.vertices):
                    if u != v and not G.has_edge(u, v):
                        return Verification(False, ("missing-edge", (u, v)))
            return Verification(True)
        order = cert.order
        if order is None:
            if cert.kind == "acyclic":
                return Verification(True) if topological_order(G, cert.vertices) is not None else \
                    Verification(False, ("cycle", tuple(sorted(cert.vertices))))
            raise ValueError("Transitive-clique certificate needs an order")
        if sorted(order) != sorted(cert.vertices):
            raise ValueError("Certificate order does not list exactly its vertices")
        if cert.kind == "transitive-clique":
            for i, u in enumerate(order):
                for v in order[i + 1:]:
                    if not G.has_edge(u, v):
                        return Verification(False, ("missing-edge", (u, v)))
            return Verification(True)
        position = {v: p for p, v in enumerate(order)}
        for u in order:
            for v in iter_bits(G.rows[u] & members):
                if position[v] < position[u]:
                    return Verification(False, ("backward-edge", (u, v)))
        return Verification(True)

    raise ValueError(f"Unsupported certificate type {type(cert).__name__}")


def _require(G: Digraph, cert: Certificate, what: str) -> None:
    check = verify_certificate(G, cert)
    if not check.ok:
        raise RuntimeError(f"{what} produced an invalid certificate: {check.violation}")


def _check_size(G: Digraph, limits: Limits) -> None:
    if G.n > limits.solver_max_n:
        raise ValueError(f"Graph with {G.n} vertices exceeds the solver limit {limits.solver_max_n}")


# ----------------------------------------------------------------------
# Clique search (independent sets, symmetric and transitive cliques)
# ----------------------------------------------------------------------


def greedy_color_classes(rows: Sequence[int], candidates: int) -> List[Tuple[int, int]]:
    """Sequential greedy coloring of ``candidates``, lowest bit first.

    Returns:
        (vertex, color) pairs with colors 1, 2, ... in non-decreasing order.
    """
    result = []
    color = 0
    uncolored = candidates
    while uncolored:
        color += 1
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~low & ~rows[v]
            uncolored &= ~low
            result.append((v, color))
    return result


class CliqueSolver(SolverTemplate):
    """Maximum clique by branch-and-bound with greedy-coloring bounds.

    Vertices are renumbered by descending degree (index tie-break) so that
    "lowest bit" means "highest degree". An optional ``acyclic_in`` digraph
    additionally requires the clique to induce an acyclic subgraph of it,
    which turns the search into a transitive-clique search.
    """

    name = "clique"

    def __init__(
        self,
        rows: Sequence[int],
        acyclic_in: Optional[Digraph] = None,
        budget: Optional[float] = None,
        limits: Optional[Limits] = None,
    ):
        super().__init__(budget, limits)
        n = len(rows)
        self.order = sorted(range(n), key=lambda v: (-popcount(rows[v]), v))
        position = {v: i for i, v in enumerate(self.order)}
        self.rows = [mask_of(position[w] for w in iter_bits(rows[v])) for v in self.order]
        self.acyclic_in = acyclic_in
        self.n = n
        self.best: List[int] = []

    def _feasible(self, chosen: List[int], v: int) -> bool:
        if self.acyclic_in is None:
            return True
        members = mask_of(self.order[u] for u in chosen)
        original = self.order[v]
        return not closes_cycle(self.acyclic_in, members | (1 << original), original)

    def _expand(self, chosen: List[int], candidates: int) -> None:
        self.tick()
        for v, color in reversed(greedy_color_classes(self.rows, candidates)):
            if len(chosen) + color <= len(self.best):
                return
            candidates &= ~(1 << v)
            if not self._feasible(chosen, v):
                continue
            chosen.append(v)
            nxt = candidates & self.rows[v]
            if self.acyclic_in is not None:
                nxt = mask_of(u for u in iter_bits(nxt) if self._feasible(chosen, u))
            if nxt:
                self._expand(chosen, nxt)
            elif len(chosen) > len(self.best):
                self.best = list(chosen)
                self.record(f"best={len(self.best)}")
            chosen.pop()

    def upper_bound(self) -> int:
        classes = greedy_color_classes(self.rows, (1 << self.n) - 1)
        return classes[-1][1] if classes else 0

    def solve(self) -> Tuple[List[int], bool]:
        """Return the best clique (original labels) and whether it is proved maximum."""
        self.start()
        optimal = True
        try:
            self._expand([], (1 << self.n) - 1)
        except BudgetExhausted as ex:
            logger.warning(str(ex))
            optimal = False
        return sorted(self.order[v] for v in self.best), optimal


def _subset_result(
    name: str, G: Digraph, solver: CliqueSolver, kind: str, order_graph: Optional[Digraph] = None
) -> ParamResult:
    members, optimal = solver.solve()
    if not members:
        members = [0]
    order = None
    if kind == "transitive-clique":
        order = tuple(topological_order(order_graph, members))
    cert = SubsetCertificate(kind, tuple(members), order)
    _require(G, cert, name)
    value = len(members)
    upper = value if optimal else max(value, solver.upper_bound())
    logger.info(f"{name}: {value} ({'optimal' if optimal else f'bracket [{value}, {upper}]'})")
    return ParamResult(name, value, value, upper, optimal, cert, solver.nodes, solver.digest, solver.elapsed)


def independence_number(G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None) -> ParamResult:
    """Largest set with no edge in either direction between members."""
    limits = resolve_limits(limits)
    _check_size(G, limits)
    complement_rows = G.symmetrize().complement().rows
    solver = CliqueSolver(complement_rows, budget=budget, limits=limits)
    solver.name = "independence"
    return _subset_result("independence_number", G, solver, "independent")


def symmetric_clique_number(
    G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None
) -> ParamResult:
    """Largest set in which every ordered pair is an edge."""
    limits = resolve_limits(limits)
    _check_size(G, limits)
    solver = CliqueSolver(G.bidirected().rows, budget=budget, limits=limits)
    solver.name = "symmetric-clique"
    return _subset_result("symmetric_clique_number", G, solver, "symmetric-clique")


def transitive_clique_number(
    G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None
) -> ParamResult:
    """Largest set admitting a linear order in which every forward pair is an edge.

    Such a set is a clique of the underlying graph whose one-way edges form
    an acyclic subgraph; a topological order of those edges is the witness.
    """
    limits = resolve_limits(limits)
    _check_size(G, limits)
    bidirected = G.bidirected()
    one_way = Digraph(G.n, tuple(row & ~both for row, both in zip(G.rows, bidirected.rows)))
    solver = CliqueSolver(G.sym_rows, acyclic_in=one_way, budget=budget, limits=limits)
    solver.name = "transitive-clique"
    return _subset_result("transitive_clique_number", G, solver, "transitive-clique", one_way)


# ----------------------------------------------------------------------
# Acyclicity number
# ----------------------------------------------------------------------


class AcyclicSetSolver(SolverTemplate):
    """Largest acyclic induced set by include/exclude branch-and-bound.

    Vertices that would close a cycle with the current set are dropped from
    the candidates for the whole subtree (acyclicity is hereditary), and the
    bound is current size plus remaining addable candidates.
    """

    name = "acyclic-set"

    def __init__(self, G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None):
        super().__init__(budget, limits)
        self.G = G
        self.best = 0
        self.best_size = 0

    def _search(self, chosen: int, size: int, candidates: int) -> None:
        self.tick()
        candidates = mask_of(v for v in iter_bits(candidates) if not closes_cycle(self.G, chosen | (1 << v), v))
        if size + popcount(candidates) <= self.best_size:
            return
        if not candidates:
            self.best, self.best_size = chosen, size
            self.record(f"best={size}")
            return
        v = next(iter_bits(candidates))
        rest = candidates & ~(1 << v)
        self._search(chosen | (1 << v), size + 1, rest)
        self._search(chosen, size, rest)

    def solve(self) -> Tuple[List[int], bool]:
        self.start()
        optimal = True
        try:
            self._search(0, 0, self.G.full_mask)
        except BudgetExhausted as ex:
            logger.warning(str(ex))
            optimal = False
        return list(iter_bits(self.best)), optimal


def acyclicity_number(G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None) -> ParamResult:
    """Largest vertex set inducing no directed cycle (a bidirected pair is a 2-cycle)."""
    limits = resolve_limits(limits)
    _check_size(G, limits)
    solver = AcyclicSetSolver(G, budget, limits)
    members, optimal = solver.solve()
    if not members:
        members = [0]
    cert = SubsetCertificate("acyclic", tuple(members), tuple(topological_order(G, members)))
    _require(G, cert, "acyclicity_number")
    value = len(members)
    upper = value if optimal else G.n
    logger.info(f"acyclicity_number: {value} ({'optimal' if optimal else f'bracket [{value}, {upper}]'})")
    return ParamResult("acyclicity_number", value, value, upper, optimal, cert, solver.nodes, solver.digest,
                       solver.elapsed)


# ----------------------------------------------------------------------
# Chromatic number
# ----------------------------------------------------------------------


def dsatur_coloring(rows: Sequence[int]) -> List[int]:
    """Greedy DSATUR coloring (saturation, then degree, then lowest index)."""
    n = len(rows)
    colors = [-1] * n
    saturation = [0] * n
    degree = [popcount(r) for r in rows]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0), key=lambda u: (popcount(saturation[u]), degree[u], -u))
        c = 0
        while saturation[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in iter_bits(rows[v]):
            saturation[u] |= 1 << c
    return colors


def height_coloring(G: Digraph) -> Optional[List[int]]:
    """Longest-path layering of an acyclic digraph, or None if ``G`` has a cycle.

    Along every edge the layer strictly increases, so the layering is a
    proper coloring with (longest path + 1) colors.
    """
    order = topological_order(G)
    if order is None:
        return None
    height = [0] * G.n
    for v in order:
        for w in iter_bits(G.rows[v]):
            height[w] = max(height[w], height[v] + 1)
    return height


def iterated_greedy(rows: Sequence[int], colors: List[int], rounds: int = 40) -> List[int]:
    """Recolor first-fit class by class in alternating class orders; never adds colors."""
    best = list(colors)
    current = list(colors)
    for r in range(rounds):
        classes: Dict[int, List[int]] = {}
        for v, c in enumerate(current):
            classes.setdefault(c, []).append(v)
        groups = sorted(classes.values(), key=lambda g: (-len(g), g[0]))
        if r % 2:
            groups.reverse()
        recolored = [-1] * len(rows)
        for group in groups:
            for v in group:
                used = 0
                for u in iter_bits(rows[v]):
                    if recolored[u] >= 0:
                        used |= 1 << recolored[u]
                c = 0
                while used >> c & 1:
                    c += 1
                recolored[v] = c
        current = recolored
        if len(set(current)) < len(set(best)):
            best = list(current)
    return best


class ChromaticSolver(SolverTemplate):
    """Exact coloring by DSATUR branch-and-bound.

    The lower bound is a maximum clique (given a share of the budget); the
    incumbent is the best of DSATUR greedy, iterated greedy and, for acyclic
    inputs, the height layering.
    """

    name = "chromatic"

    def __init__(self, G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None):
        super().__init__(budget, limits)
        self.G = G
        self.rows = G.sym_rows
        self.n = G.n
        self.degree = [popcount(r) for r in self.rows]

    def _branch(self, colored: int, k: int) -> None:
        self.tick()
        if colored == self.n:
            if k < self.best_k:
                self.best_k = k
                self.best_colors = list(self.colors)
                self.record(f"upper={k}")
            return
        v = max(
            (u for u in range(self.n) if self.colors[u] < 0),
            key=lambda u: (popcount(self.saturation[u]), self.degree[u], -u),
        )
        for c in range(k + 1):
            if c == k and k + 1 >= self.best_k:
                break
            if self.saturation[v] >> c & 1:
                continue
            changed = [u for u in iter_bits(self.rows[v]) if self.colors[u] < 0 and not self.saturation[u] >> c & 1]
            self.colors[v] = c
            for u in changed:
                self.saturation[u] |= 1 << c
            self._branch(colored + 1, max(k, c + 1))
            for u in changed:
                self.saturation[u] &= ~(1 << c)
            self.colors[v] = -1
            if self.best_k <= self.lower:
                return

    def solve(self) -> Tuple[List[int], int, bool, List[int]]:
        """Return (coloring, lower bound, optimal, clique witness)."""
        self.start()
        clique_solver = CliqueSolver(self.rows, budget=max(self.budget / 4, 1e-3), limits=self.limits)
        clique, _ = clique_solver.solve()
        self.lower = max(len(clique), 1)

        candidates = [dsatur_coloring(self.rows)]
        layered = height_coloring(self.G)
        if layered is not None:
            candidates.append(layered)
        start = min(candidates, key=lambda c: len(set(c)))
        incumbent = iterated_greedy(self.rows, start)
        self.best_colors = incumbent
        self.best_k = len(set(incumbent))
        self.record(f"lower={self.lower};upper={self.best_k}")

        optimal = True
        if self.best_k > self.lower:
            self.colors = [-1] * self.n
            self.saturation = [0] * self.n
            try:
                self._branch(0, 0)
            except BudgetExhausted as ex:
                logger.warning(str(ex))
                optimal = False
        if optimal:
            self.lower = self.best_k
        return self.best_colors, self.lower, optimal, clique


def chromatic_number(G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None) -> ParamResult:
    """Chromatic number of the underlying undirected graph, with a proper coloring."""
    limits = resolve_limits(limits)
    _check_size(G, limits)
    solver = ChromaticSolver(G, budget, limits)
    colors, lower, optimal, _ = solver.solve()
    cert = Coloring(tuple(colors)).normalized()
    _require(G, cert, "chromatic_number")
    upper = cert.k
    logger.info(f"chromatic_number: {upper} ({'optimal' if optimal else f'bracket [{lower}, {upper}]'})")
    return ParamResult("chromatic_number", upper, lower, upper, optimal, cert, solver.nodes, solver.digest,
                       solver.elapsed)


# ----------------------------------------------------------------------
# Dichromatic number
# ----------------------------------------------------------------------


def greedy_dicoloring(G: Digraph) -> List[int]:
    """First-fit assignment of vertices (descending degree) to acyclic classes."""
    order = sorted(range(G.n), key=lambda v: (-popcount(G.sym_rows[v]), v))
    classes: List[int] = []
    for v in order:
        for i, members in enumerate(classes):
            if not closes_cycle(G, members | (1 << v), v):
                classes[i] = members | (1 << v)
                break
        else:
            classes.append(1 << v)
    return classes


def greedy_set_cover(system: SetSystem) -> List[int]:
    """Repeatedly take the set covering most uncovered elements (lowest index on ties)."""
    uncovered = (1 << system.ground) - 1
    chosen = []
    while uncovered:
        i = max(range(len(system.sets)), key=lambda j: (popcount(system.sets[j] & uncovered), -j))
        chosen.append(system.sets[i] & uncovered)
        uncovered &= ~system.sets[i]
    return chosen


class DichromaticSolver(SolverTemplate):
    """Exact dichromatic number.

    Set-cover branch-and-bound over the maximal acyclic sets, bounded below
    by the covering LP; when the sets are too many to enumerate it falls back
    to assigning vertices to acyclic classes directly.
    """

    name = "dichromatic"

    def __init__(self, G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None):
        super().__init__(budget, limits)
        self.G = G
        self.system: Optional[SetSystem] = None
        self.lp_value = None
        self.notes: List[str] = []

    # set cover over maximal sets
    def _cover(self, uncovered: int, chosen: List[int]) -> None:
        self.tick()
        if not uncovered:
            if len(chosen) < len(self.best):
                self.best = list(chosen)
                self.record(f"upper={len(chosen)}")
            return
        if len(chosen) + 1 >= len(self.best):
            return
        sets = self.system.sets
        max_cover = max(popcount(s & uncovered) for s in sets)
        if len(chosen) + -(-popcount(uncovered) // max_cover) >= len(self.best):
            return
        u = min(iter_bits(uncovered), key=lambda x: (len(self.containing[x]), x))
        for i in sorted(self.containing[u], key=lambda j: (-popcount(sets[j] & uncovered), j)):
            chosen.append(sets[i] & uncovered)
            self._cover(uncovered & ~sets[i], chosen)
            chosen.pop()
            if len(self.best) <= self.lower:
                return

    # direct assignment when enumeration overflows
    def _assign(self, i: int, classes: List[int]) -> None:
        self.tick()
        if len(classes) >= len(self.best):
            return
        if i == self.G.n:
            self.best = list(classes)
            self.record(f"upper={len(classes)}")
            return
        v = self.order[i]
        for j, members in enumerate(classes):
            if not closes_cycle(self.G, members | (1 << v), v):
                classes[j] = members | (1 << v)
                self._assign(i + 1, classes)
                classes[j] = members
                if len(self.best) <= self.lower:
                    return
        if len(classes) + 1 < len(self.best):
            classes.append(1 << v)
            self._assign(i + 1, classes)
            classes.pop()

    def solve(self) -> Tuple[List[int], int, bool]:
        """Return (classes as bit masks, lower bound, optimal)."""
        self.start()
        G = self.G
        share = max(self.budget / 6, 1e-3)
        clique, _ = CliqueSolver(G.bidirected().rows, budget=share, limits=self.limits).solve()
        acyclic = AcyclicSetSolver(G, share, self.limits)
        members, acyclic_optimal = acyclic.solve()
        a = len(members) if acyclic_optimal else G.n
        self.lower = max(len(clique), -(-G.n // max(a, 1)), 1)

        self.best = greedy_dicoloring(G)
        try:
            self.system = maximal_acyclic_sets(G, self.limits, self.tick)
        except EnumerationLimitError as ex:
            self.notes.append(f"set enumeration stopped after {ex.partial_count} sets")
            logger.warning(f"dichromatic: {ex}; falling back to direct assignment")
        except BudgetExhausted as ex:
            logger.warning(str(ex))
            return self.best, self.lower, False

        if self.system is not None:
            lp = fractional_cover_number(self.system)
            self.lp_value = lp.value
            self.lower = max(self.lower, math.ceil(lp.value))
            cover = greedy_set_cover(self.system)
            if len(cover) < len(self.best):
                self.best = cover
        self.record(f"lower={self.lower};upper={len(self.best)}")

        optimal = True
        if len(self.best) > self.lower:
            try:
                if self.system is not None:
                    self.containing = [[] for _ in range(G.n)]
                    for i, s in enumerate(self.system.sets):
                        for v in iter_bits(s):
                            self.containing[v].append(i)
                    self._cover((1 << G.n) - 1, [])
                else:
                    self.order = sorted(range(G.n), key=lambda v: (-popcount(G.sym_rows[v]), v))
                    self._assign(0, [])
            except BudgetExhausted as ex:
                logger.warning(str(ex))
                optimal = False
        if optimal:
            self.lower = len(self.best)
        return self.best, self.lower, optimal


def dichromatic_number(G: Digraph, budget: Optional[float] = None, limits: Optional[Limits] = None) -> ParamResult:
    """Minimum number of acyclic sets covering the vertices, with an acyclic cover."""
    limits = resolve_limits(limits)
    _check_size(G, limits)
    solver = DichromaticSolver(G, budget, limits)
    classes, lower, optimal = solver.solve()
    cover = AcyclicCover.from_classes(G, [list(iter_bits(c)) for c in classes if c])
    _require(G, cover, "dichromatic_number")
    upper = cover.k
    logger.info(f"dichromatic_number: {upper} ({'optimal' if optimal else f'bracket [{lower}, {upper}]'})")
    return ParamResult("dichromatic_number", upper, min(lower, upper), upper, optimal, cover, solver.nodes,
                       solver.digest, solver.elapsed, tuple(solver.notes))


# ----------------------------------------------------------------------
# Constructive coloring of powers
# ----------------------------------------------------------------------


def constructive_bound(n: int, k: int, t: int) -> int:
    """Color count guaranteed by ``constructive_power_coloring``: ``(t+1)^n * k^t``."""
    return (t + 1) ** n * k**t


@parameter_validator(t=lambda t: isinstance(t, int) and t >= 1)
def constructive_power_coloring(
    G: Digraph, cover: AcyclicCover, t: int, limits: Optional[Limits] = None
) -> Coloring:
    """Proper coloring of the t-th AND power from an acyclic cover of ``G``.

    A sequence is colored by the pair (sequence of class indices of its
    letters, type of the sequence). Along an edge between two sequences
    with the same class pattern every letter moves weakly forward in its
    class order, and strictly for at least one, while equal types keep the
    summed positions fixed. So equal colors never meet on an edge.

    Raises:
        ValueError: If ``cover`` does not verify against ``G``.
    """
    check = verify_certificate(G, cover)
    if not check.ok:
        raise ValueError(f"Cover does not verify against the graph: {check.violation}")
    limits = resolve_limits(limits)
    size = G.n**t
    if size > limits.max_vertices:
        raise ValueError(f"Power with {size} vertices exceeds the vertex limit {limits.max_vertices}")
    owner = cover.class_of(G.n)
    palette: Dict[Tuple, int] = {}
    colors = []
    for x in range(size):
        seq = decode_index(x, G.n, t)
        key = (tuple(owner[a] for a in seq), TypeVector.of_sequence(seq, G.n).counts)
        colors.append(palette.setdefault(key, len(palette)))
    logger.debug(f"constructive coloring of power t={t}: {len(palette)} colors "
                 f"(bound {constructive_bound(G.n, cover.k, t)})")
    return Coloring(tuple(colors))


def a5c_square_cover() -> AcyclicCover:
    """The six-class acyclic cover of the square of A5c, in power indices."""
    return AcyclicCover(tuple(tuple(encode_sequence(seq, 5) for seq in order) for order in a5c_square_orders()))


def power_cover(G: Digraph, cover: AcyclicCover, t: int) -> AcyclicCover:
    """Product cover of the t-th AND power: classes are t-fold products of classes.

    The AND product of acyclic sets is acyclic, so this covers the power
    with ``k^t`` classes.
    """
    classes = []
    for combo in product(range(cover.k), repeat=t):
        members = [encode_sequence(seq, G.n) for seq in product(*(sorted(cover.orders[i]) for i in combo))]
        classes.append(members)
    power_graph = and_power(G, t)
    return AcyclicCover.from_classes(power_graph, classes)


# ----------------------------------------------------------------------
# Certificate files
# ----------------------------------------------------------------------


def certificate_kind(cert: Certificate) -> str:
    if isinstance(cert, Coloring):
        return "coloring"
    if isinstance(cert, AcyclicCover):
        return "acyclic_cover"
    return cert.kind


def certificate_to_dict(G: Digraph, cert: Certificate, value: Optional[int] = None,
                        optimal: bool = False) -> Dict[str, object]:
    """JSON form ``{"kind", "graph_hash", "value", "witness", "optimal"}``."""
    if value is None:
        value = cert.k if isinstance(cert, (Coloring, AcyclicCover)) else len(cert.vertices)
    return {
        "kind": certificate_kind(cert),
        "graph_hash": G.graph_hash,
        "value": value,
        "witness": cert.to_dict(),
        "optimal": optimal,
    }


def certificate_from_dict(payload: Dict[str, object], header: Optional[Dict[str, object]] = None) -> Certificate:
    """Parse a certificate object; power vertices may be named by sequence when a header is given.

    Raises:
        ValueError: If required keys are missing or malformed.
    """
    if not isinstance(payload, dict) or "kind" not in payload or "witness" not in payload:
        raise ValueError("Certificate JSON needs 'kind' and 'witness'")
    kind = payload["kind"]
    witness = payload["witness"]
    if not isinstance(witness, dict):
        raise ValueError("Certificate witness must be an object")
    if kind == "coloring":
        colors = witness.get("colors")
        if not isinstance(colors, list):
            raise ValueError("Coloring witness needs a 'colors' list")
        return Coloring(tuple(colors))
    if kind == "acyclic_cover":
        orders = witness.get("orders")
        if not isinstance(orders, list) or not all(isinstance(o, list) for o in orders):
            raise ValueError("Acyclic cover witness needs an 'orders' list of lists")
        return AcyclicCover(tuple(tuple(parse_vertex(v, header) for v in order) for order in orders))
    if kind in SUBSET_KINDS:
        vertices = witness.get("vertices")
        if not isinstance(vertices, list):
            raise ValueError("Subset witness needs a 'vertices' list")
        order = witness.get("order")
        return SubsetCertificate(
            kind,
            tuple(sorted(parse_vertex(v, header) for v in vertices)),
            tuple(parse_vertex(v, header) for v in order) if order is not None else None,
        )
    raise ValueError(f"Unknown certificate kind '{kind}'")


# ----------------------------------------------------------------------
# All parameters
# ----------------------------------------------------------------------

# Mapping of parameter names to solver functions
PARAMETERS = {
    "alpha": independence_number,
    "omega_s": symmetric_clique_number,
    "omega_tr": transitive_clique_number,
    "a": acyclicity_number,
    "chi": chromatic_number,
    "chi_dir": dichromatic_number,
}


def compute_all_params(
    G: Digraph, names: Optional[Sequence[str]] = None, budget: Optional[float] = None,
    limits: Optional[Limits] = None,
) -> Dict[str, ParamResult]:
    """Run the named solvers (all by default), in ``PARAMETERS`` order.

    Raises:
        ValueError: For an unknown parameter name.
    """
    names = list(PARAMETERS) if not names else list(names)
    for name in names:
        if name not in PARAMETERS:
            raise ValueError(f"Unknown parameter '{name}', expected one of {', '.join(PARAMETERS)}")
    return {name: PARAMETERS[name](G, budget, limits) for name in PARAMETERS if name in names}


def power_oracle_coloring_check(G: Digraph, t: int, coloring: Coloring) -> Verification:
    """Properness of a coloring of the t-th AND power checked through the pairwise oracle."""
    oracle = PowerOracle(G, t, "and")
    if len(coloring.colors) != oracle.n:
        raise ValueError(f"Coloring has {len(coloring.colors)} entries for a power with {oracle.n} vertices")
    for x in range(oracle.n):
        for y in range(x + 1, oracle.n):
            if coloring.colors[x] != coloring.colors[y]:
                continue
            if oracle.has_edge(x, y):
                return Verification(False, ("edge", (x, y)))
            if oracle.has_edge(y, x):
                return Verification(False, ("edge", (y, x)))
    return Verification(True)
