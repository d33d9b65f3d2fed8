"""
Directed graphs on positionally labelled vertices.

A ``Digraph`` stores one out-neighbour bit row per vertex (a Python int,
so there is no upper bound on ``n``; rows beyond a machine word simply
become multi-word integers). Everything here is immutable and label
stable: vertex ``v`` of an input is vertex ``v`` of every output.

The module also holds the graph text/JSON formats, the closure graph of a
channel digraph together with its gadget construction and realizability
test, acyclicity testing, and vertex-transitivity testing.
"""

import hashlib
import heapq
import json
import logging
import sys
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .base import Limits, resolve_limits
from .utils.utilities import iter_bits, mask_of, popcount

# Setup module logger
logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

TRANSFORMS = ("complement", "reverse", "symmetrize")


@dataclass(frozen=True)
class Digraph:
    """Loop-free directed graph on vertices ``0..n-1``.

    Attributes:
        n (int): Vertex count.
        rows (tuple): ``rows[u]`` has bit ``v`` set iff the edge (u, v) is present.
    """

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"A digraph needs at least one vertex, got n={self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"Expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise ValueError(f"Row {u} has an endpoint out of range for n={self.n}")
            if row >> u & 1:
                raise ValueError(f"Edge ({u}, {u}) is a self-loop")

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Digraph":
        """Build a digraph from ordered pairs; duplicates collapse.

        Raises:
            ValueError: On a self-loop or an endpoint outside ``0..n-1``.
        """
        if n < 1:
            raise ValueError(f"A digraph needs at least one vertex, got n={n}")
        rows = [0] * n
        for edge in edges:
            if len(edge) != 2:
                raise ValueError(f"Edge {tuple(edge)!r} is not an ordered pair")
            u, v = int(edge[0]), int(edge[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"Edge ({u}, {v}) has an endpoint out of range for n={n}")
            if u == v:
                raise ValueError(f"Edge ({u}, {v}) is a self-loop")
            rows[u] |= 1 << v
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> "Digraph":
        """Build a digraph from a square boolean (or 0/1) adjacency matrix."""
        matrix = np.asarray(matrix, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError(f"Adjacency matrix must be square, got shape {matrix.shape}")
        n = matrix.shape[0]
        return cls.from_edges(n, zip(*np.nonzero(matrix)))

    @classmethod
    def empty(cls, n: int) -> "Digraph":
        return cls(n, (0,) * n)

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @cached_property
    def in_rows(self) -> Tuple[int, ...]:
        """``in_rows[v]`` has bit ``u`` set iff the edge (u, v) is present."""
        cols = [0] * self.n
        for u, row in enumerate(self.rows):
            for v in iter_bits(row):
                cols[v] |= 1 << u
        return tuple(cols)

    @cached_property
    def closed_rows(self) -> Tuple[int, ...]:
        """Out-rows with the vertex itself added (the out-closure)."""
        return tuple(row | (1 << u) for u, row in enumerate(self.rows))

    @cached_property
    def sym_rows(self) -> Tuple[int, ...]:
        """Rows of the underlying undirected graph."""
        return tuple(out | inc for out, inc in zip(self.rows, self.in_rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> List[Edge]:
        """All edges, sorted lexicographically."""
        return [(u, v) for u, row in enumerate(self.rows) for v in iter_bits(row)]

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.rows)

    def out_degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def in_degree(self, v: int) -> int:
        return popcount(self.in_rows[v])

    def out_degrees(self) -> np.ndarray:
        return self.matrix.sum(axis=1)

    def in_degrees(self) -> np.ndarray:
        return self.matrix.sum(axis=0)

    @property
    def max_out_degree(self) -> int:
        return int(self.out_degrees().max())

    @property
    def max_in_degree(self) -> int:
        return int(self.in_degrees().max())

    @cached_property
    def matrix(self) -> np.ndarray:
        """Dense boolean adjacency matrix (read-only view)."""
        mat = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            mat[u, v] = True
        mat.setflags(write=False)
        return mat

    @property
    def is_symmetric(self) -> bool:
        return self.rows == self.in_rows

    # ------------------------------------------------------------------
    # Transformations
    # ------------------------------------------------------------------

    def complement(self) -> "Digraph":
        full = self.full_mask
        return Digraph(self.n, tuple(~row & full & ~(1 << u) for u, row in enumerate(self.rows)))

    def reverse(self) -> "Digraph":
        return Digraph(self.n, self.in_rows)

    def symmetrize(self) -> "Digraph":
        return Digraph(self.n, self.sym_rows)

    def bidirected(self) -> "Digraph":
        """Symmetric digraph keeping only the pairs joined in both directions."""
        return Digraph(self.n, tuple(out & inc for out, inc in zip(self.rows, self.in_rows)))

    def induced(self, vertices: Sequence[int]) -> "Digraph":
        """Subgraph induced on ``vertices``, relabelled ``0..k-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("Induced subgraph vertices must be distinct")
        rows = []
        for v in vertices:
            if not 0 <= v < self.n:
                raise ValueError(f"Vertex {v} is out of range for n={self.n}")
            rows.append(mask_of(index[w] for w in iter_bits(self.rows[v]) if w in index))
        return Digraph(len(vertices), tuple(rows))

    def relabel(self, permutation: Sequence[int]) -> "Digraph":
        """Image of the graph under ``v -> permutation[v]``."""
        if sorted(permutation) != list(range(self.n)):
            raise ValueError("Relabelling must be a permutation of the vertices")
        return Digraph.from_edges(self.n, ((permutation[u], permutation[v]) for u, v in self.edges()))

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: ``n <count>`` then one ``u v`` line per edge."""
        lines = [f"n {self.n}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def to_dict(self) -> Dict[str, object]:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges()]}

    @cached_property
    def graph_hash(self) -> str:
        """sha256 digest of the canonical text form."""
        return hashlib.sha256(self.to_text().encode()).hexdigest()

    def to_networkx(self):
        """Equivalent ``networkx.DiGraph`` (networkx imported on demand)."""
        import networkx as nx

        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def __str__(self) -> str:
        return f"Digraph(n={self.n}, edges={self.edge_count})"


# ----------------------------------------------------------------------
# Construction and transforms
# ----------------------------------------------------------------------


def build_digraph(n: int, edges: Iterable[Sequence[int]]) -> Digraph:
    """Digraph on ``n`` vertices with exactly the given (deduplicated) edges."""
    return Digraph.from_edges(n, edges)


def transform(G: Digraph, kind: str) -> Digraph:
    """Apply ``complement``, ``reverse`` or ``symmetrize``.

    Raises:
        ValueError: For an unknown transform name.
    """
    if kind == "complement":
        return G.complement()
    if kind == "reverse":
        return G.reverse()
    if kind == "symmetrize":
        return G.symmetrize()
    raise ValueError(f"Unknown transform '{kind}', expected one of {', '.join(TRANSFORMS)}")


def union(G1: Digraph, G2: Digraph) -> Digraph:
    """Edge-wise union of two digraphs on the same vertex set."""
    if G1.n != G2.n:
        raise ValueError(f"Cannot unite digraphs with {G1.n} and {G2.n} vertices")
    return Digraph(G1.n, tuple(a | b for a, b in zip(G1.rows, G2.rows)))


# ----------------------------------------------------------------------
# Acyclicity
# ----------------------------------------------------------------------


def topological_order(G: Digraph, vertices: Optional[Iterable[int]] = None) -> Optional[List[int]]:
    """Topological order of the subgraph induced on ``vertices`` (all by default).

    Kahn elimination, always removing the smallest available vertex, so the
    order is the lexicographically least one.

    Returns:
        The order, or None when the induced subgraph has a directed cycle
        (a bidirected pair counts as a 2-cycle).
    """
    mask = G.full_mask if vertices is None else mask_of(vertices)
    indegree = {v: popcount(G.in_rows[v] & mask) for v in iter_bits(mask)}
    ready = [v for v in iter_bits(mask) if indegree[v] == 0]
    order: List[int] = []

    heapq.heapify(ready)
    while ready:
        u = heapq.heappop(ready)
        order.append(u)
        for w in iter_bits(G.rows[u] & mask):
            indegree[w] -= 1
            if indegree[w] == 0:
                heapq.heappush(ready, w)
    if len(order) != len(indegree):
        return None
    return order


def is_acyclic(G: Digraph, vertices: Optional[Iterable[int]] = None) -> bool:
    """True iff the subgraph induced on ``vertices`` has no directed cycle."""
    return topological_order(G, vertices) is not None


def reach_within(G: Digraph, sources: int, mask: int) -> int:
    """Vertices of ``mask`` reachable from the bit set ``sources`` inside ``mask``."""
    seen = sources & mask
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= G.rows[u]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen


def closes_cycle(G: Digraph, acyclic_mask: int, v: int) -> bool:
    """Whether adding ``v`` to the acyclic set ``acyclic_mask`` creates a directed cycle.

    A cycle through ``v`` exists iff some out-neighbour of ``v`` in the set
    reaches an in-neighbour of ``v`` inside the set.
    """
    mask = acyclic_mask & ~(1 << v)
    start = G.rows[v] & mask
    if not start or not G.in_rows[v] & mask:
        return False
    return bool(reach_within(G, start, mask) & G.in_rows[v])


# ----------------------------------------------------------------------
# Closure graph
# ----------------------------------------------------------------------


def closure_graph(G: Digraph) -> Digraph:
    """Symmetric graph joining letters that can meet at a common channel output.

    ``{a, b}`` is an edge iff (a, b) or (b, a) is an edge of ``G`` or ``a`` and
    ``b`` share an out-neighbour.
    """
    rows = list(G.sym_rows)
    for v in range(G.n):
        sources = G.in_rows[v]
        for a in iter_bits(sources):
            rows[a] |= sources & ~(1 << a)
    return Digraph(G.n, tuple(rows))


def closure_gadget(G: Digraph) -> Digraph:
    """Digraph whose closure contains ``G`` as the subgraph induced on ``0..n-1``.

    One new vertex ``v_e`` per undirected edge ``e = {a, b}`` (numbered
    ``n, n+1, ...`` in lexicographic edge order) receives the edges
    (a, v_e) and (b, v_e); the original edges are dropped.

    Raises:
        ValueError: If ``G`` is not symmetric.
    """
    if not G.is_symmetric:
        raise ValueError("closure_gadget expects a symmetric digraph")
    undirected = [(a, b) for a, b in G.edges() if a < b]
    n = G.n + len(undirected)
    edges = []
    for i, (a, b) in enumerate(undirected):
        edges.extend([(a, G.n + i), (b, G.n + i)])
    return Digraph.from_edges(n, edges)


@dataclass(frozen=True)
class Realizability:
    """Three-valued answer of ``is_closure_realizable``.

    Attributes:
        answer (str): ``"yes"``, ``"no"`` or ``"unknown"``.
        witness (Digraph): A digraph whose closure equals the input, when ``answer == "yes"``.
        reason (str): Which decision path produced the answer.
    """

    answer: str
    witness: Optional[Digraph] = None
    reason: str = ""

    def to_dict(self) -> Dict[str, object]:
        payload: Dict[str, object] = {"answer": self.answer, "reason": self.reason}
        if self.witness is not None:
            payload["witness"] = self.witness.to_dict()
        return payload


def _components(G: Digraph) -> List[int]:
    """Connected components of the underlying graph as bit sets."""
    remaining = G.full_mask
    components = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= G.sym_rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        components.append(comp)
        remaining &= ~comp
    return components


def is_triangle_free(G: Digraph) -> bool:
    rows = G.sym_rows
    return all(not rows[a] & rows[b] for a in range(G.n) for b in iter_bits(rows[a]) if a < b)


def is_bipartite(G: Digraph) -> bool:
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(G.sym_rows[u]):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def _orient_pseudoforest(G: Digraph) -> Optional[Digraph]:
    """Orient every edge so that all in-degrees are at most one.

    Leaves are peeled with the edge pointing at the leaf; what survives
    must be disjoint cycles, which are oriented cyclically.

    Returns:
        The orientation, or None when some component has more edges than vertices.
    """
    rows = list(G.sym_rows)
    degree = [popcount(r) for r in rows]
    edges: List[Edge] = []
    leaves = deque(v for v in range(G.n) if degree[v] == 1)
    while leaves:
        leaf = leaves.popleft()
        if degree[leaf] != 1:
            continue
        parent = next(iter_bits(rows[leaf]))
        edges.append((parent, leaf))
        rows[leaf] = 0
        rows[parent] &= ~(1 << leaf)
        degree[leaf] = 0
        degree[parent] -= 1
        if degree[parent] == 1:
            leaves.append(parent)

    if any(d not in (0, 2) for d in degree):
        return None
    visited = 0
    for start in range(G.n):
        if degree[start] != 2 or visited >> start & 1:
            continue
        prev, cur = -1, start
        while True:
            visited |= 1 << cur
            nxt = [w for w in iter_bits(rows[cur]) if w != prev]
            step = nxt[0] if prev >= 0 else min(iter_bits(rows[cur]))
            edges.append((cur, step))
            prev, cur = cur, step
            if cur == start:
                break
    return Digraph.from_edges(G.n, edges)


def _search_realization(G: Digraph) -> Optional[Digraph]:
    """Exhaustive search for F with closure_graph(F) == G.

    Edges of F are confined to edges of G (the closure contains the
    symmetrization of F), and no two endpoints of a non-edge of G may share an
    out-neighbour.
    """
    n = G.n
    pairs = [(a, b) for a in range(n) for b in iter_bits(G.sym_rows[a]) if a < b]
    non_adjacent = [(G.full_mask & ~G.sym_rows[a] & ~(1 << a)) for a in range(n)]
    out = [0] * n
    # both directions first, then each single direction, then neither
    options = ((1, 1), (1, 0), (0, 1), (0, 0))

    def consistent(u: int) -> bool:
        row = out[u]
        return all(not row & out[x] for x in iter_bits(non_adjacent[u]))

    def extend(i: int) -> Optional[Digraph]:
        if i == len(pairs):
            candidate = Digraph(n, tuple(out))
            return candidate if closure_graph(candidate) == G else None
        a, b = pairs[i]
        for forward, backward in options:
            saved_a, saved_b = out[a], out[b]
            if forward:
                out[a] |= 1 << b
            if backward:
                out[b] |= 1 << a
            if consistent(a) and consistent(b):
                found = extend(i + 1)
                if found is not None:
                    return found
            out[a], out[b] = saved_a, saved_b
        return None

    return extend(0)


def is_closure_realizable(G: Digraph, limits: Optional[Limits] = None) -> Realizability:
    """Decide whether ``G`` is the closure graph of some digraph.

    Triangle-free graphs (bipartite ones included) are decided for every n:
    a realization must be an orientation of ``G`` itself with all in-degrees
    at most one, which exists iff no connected component has more edges than
    vertices. Other graphs go to an exhaustive search up to
    ``limits.realizable_max_n`` vertices; beyond it the answer is unknown.

    Raises:
        ValueError: If ``G`` is not symmetric.
    """
    if not G.is_symmetric:
        raise ValueError("is_closure_realizable expects a symmetric digraph")
    limits = resolve_limits(limits)
    undirected_edges = G.edge_count // 2

    if is_triangle_free(G):
        bipartite = is_bipartite(G)
        if bipartite and undirected_edges >= G.n + 1:
            logger.info(f"Not realizable: bipartite with |E|={undirected_edges} >= |V|+1={G.n + 1}")
            return Realizability("no", reason="bipartite with |E| >= |V|+1")
        witness = _orient_pseudoforest(G)
        if witness is None:
            return Realizability("no", reason="triangle-free component with more edges than vertices")
        return Realizability("yes", witness, reason="triangle-free orientation with in-degrees <= 1")

    if G.n > limits.realizable_max_n:
        logger.warning(f"Realizability of a {G.n}-vertex graph with triangles is beyond the search horizon")
        return Realizability("unknown", reason=f"n={G.n} exceeds realizable_max_n={limits.realizable_max_n}")

    witness = _search_realization(G)
    if witness is None:
        return Realizability("no", reason="exhaustive search")
    return Realizability("yes", witness, reason="exhaustive search")


# ----------------------------------------------------------------------
# Vertex transitivity
# ----------------------------------------------------------------------


def _profiles(G: Digraph) -> List[Tuple[int, int, int]]:
    bidirected = G.bidirected()
    return [(G.out_degree(v), G.in_degree(v), bidirected.out_degree(v)) for v in range(G.n)]


def find_automorphism(G: Digraph, source: int, target: int) -> Optional[List[int]]:
    """An automorphism of ``G`` sending ``source`` to ``target``, if one exists.

    Backtracking over vertex images, extending the mapping in an order that
    keeps each new vertex adjacent to already mapped ones, with candidates
    filtered by (out-degree, in-degree, bidirected-degree) profile.
    """
    n = G.n
    profile = _profiles(G)
    if profile[source] != profile[target]:
        return None

    order = [source]
    placed = 1 << source
    while len(order) < n:
        rest = [v for v in range(n) if not placed >> v & 1]
        v = max(rest, key=lambda x: (popcount(G.sym_rows[x] & placed), -x))
        order.append(v)
        placed |= 1 << v

    image = [-1] * n
    used = 0

    def compatible(x: int, y: int) -> bool:
        for w in order:
            mw = image[w]
            if mw < 0:
                break
            if G.has_edge(x, w) != G.has_edge(y, mw) or G.has_edge(w, x) != G.has_edge(mw, y):
                return False
        return True

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        x = order[depth]
        for y in range(n):
            if used >> y & 1 or profile[y] != profile[x]:
                continue
            if compatible(x, y):
                image[x] = y
                used |= 1 << y
                if extend(depth + 1):
                    return True
                image[x] = -1
                used &= ~(1 << y)
        return False

    image[source] = target
    used = 1 << target
    return image if extend(1) else None


def is_vertex_transitive(G: Digraph, limits: Optional[Limits] = None) -> bool:
    """True iff the automorphism group of ``G`` acts transitively on vertices.

    Raises:
        ValueError: If ``n`` exceeds ``limits.transitivity_max_n``.
    """
    limits = resolve_limits(limits)
    if G.n > limits.transitivity_max_n:
        raise ValueError(
            f"Vertex-transitivity test limited to n <= {limits.transitivity_max_n} (got n={G.n}); "
            f"raise transitivity_max_n to allow it"
        )
    if len(set(_profiles(G))) > 1:
        return False
    orbit = 1
    for target in range(1, G.n):
        if orbit >> target & 1:
            continue
        auto = find_automorphism(G, 0, target)
        if auto is None:
            return False
        # close the orbit of 0 under the automorphism found
        frontier = orbit
        while frontier:
            new = mask_of(auto[v] for v in iter_bits(frontier)) & ~orbit
            orbit |= new
            frontier = new
    return True


def find_isomorphism(G: Digraph, H: Digraph) -> Optional[List[int]]:
    """A bijection ``p`` with ``H == G.relabel(p)``, by brute force over small graphs."""
    if G.n != H.n or G.edge_count != H.edge_count:
        return None
    if G.n > 8:
        raise ValueError(f"Isomorphism search is limited to n <= 8 (got n={G.n})")
    target = set(H.edges())
    for perm in permutations(range(G.n)):
        if all((perm[u], perm[v]) in target for u, v in G.edges()):
            return list(perm)
    return None


# ----------------------------------------------------------------------
# Graph files
# ----------------------------------------------------------------------


def parse_graph_text(text: str) -> Digraph:
    """Parse the text format: ``n <count>`` then ``u v`` lines; ``#`` starts a comment.

    Raises:
        ValueError: On a missing header, malformed lines or invalid edges.
    """
    n: Optional[int] = None
    edges: List[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise ValueError(f"Line {lineno}: expected header 'n <count>', got '{raw.strip()}'")
            try:
                n = int(fields[1])
            except ValueError:
                raise ValueError(f"Line {lineno}: vertex count is not an integer: '{fields[1]}'")
            continue
        if len(fields) != 2:
            raise ValueError(f"Line {lineno}: expected 'u v', got '{raw.strip()}'")
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ValueError(f"Line {lineno}: edge endpoints must be integers, got '{raw.strip()}'")
    if n is None:
        raise ValueError("Graph text has no 'n <count>' header")
    return Digraph.from_edges(n, edges)


def graph_from_dict(payload: Dict[str, object]) -> Digraph:
    """Parse the JSON form ``{"n": int, "edges": [[u, v], ...]}``."""
    if not isinstance(payload, dict) or "n" not in payload:
        raise ValueError("Graph JSON must be an object with keys 'n' and 'edges'")
    return Digraph.from_edges(int(payload["n"]), payload.get("edges", []))


def loads_graph(text: str) -> Digraph:
    """Parse either graph format, sniffing JSON by its leading brace."""
    if text.lstrip().startswith('{'):
        return graph_from_dict(json.loads(text))
    return parse_graph_text(text)


def read_graph(path: str) -> Digraph:
    """Read a graph file; ``-`` reads standard input."""
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    graph = loads_graph(text)
    logger.debug(f"Read {graph} from {path}")
    return graph


def dumps_graph(G: Digraph, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(G.to_dict(), sort_keys=True) + "\n"
    if fmt == "text":
        return G.to_text()
    raise ValueError(f"Unknown graph format '{fmt}', expected 'text' or 'json'")


def write_graph(G: Digraph, path: str, fmt: Optional[str] = None) -> None:
    """Write a graph file; the format follows the extension unless given."""
    fmt = fmt or ("json" if path.endswith(".json") else "text")
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps_graph(G, fmt))
    logger.info(f"Wrote {G} to {path}")
