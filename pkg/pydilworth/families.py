"""
Named digraph families.

Each family tag maps to a builder in ``_family_builders``; ``generate``
looks the tag up, validates the parameters and returns the digraph with
its canonical vertex numbering.

Available families:
-------------------
C n      cyclically oriented cycle, edges (i, i+1 mod n), n >= 3
S n      complement of C n
T m      cyclic tournament, (i, j) iff j - i mod m in 1..(m-1)/2, m odd
A5       orientation of the 5-cycle with out-degrees (0, 0, 1, 2, 2)
A5c      complement of A5
L        two vertices, one edge (0, 1)
F        three vertices, edges (0,1), (1,0), (0,2), (2,0), (1,2)
K n      complete symmetric digraph
E n      edgeless digraph
TT n     transitive tournament, (i, j) iff i < j
Csym n   symmetric cycle
P n      symmetric path
Kbip a b symmetric complete bipartite graph
V        three letters, two of which collide: edges (0, 2), (1, 2)
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from .digraph import Digraph

# Setup module logger
logger = logging.getLogger(__name__)

# A_5 on the cycle 0-1-2-3-4-0; vertex 3 has the single out-neighbour 2
A5_EDGES = ((3, 2), (4, 3), (4, 0), (1, 0), (1, 2))

# Six acyclic classes covering the square of A5c. Each token "xy" is the
# vertex (x, y); along a line every edge runs from right to left.
A5C_SQUARE_LINES = (
    "44,31,10,23,02",
    "14,43,01,30,22",
    "41,33,32,20",
    "13,21,42,00",
    "11,12,04,03",
    "34,24,40",
)


@dataclass(frozen=True)
class GraphFamily:
    """A family tag with its size parameters.

    Attributes:
        tag (str): Family name, one of the keys of ``FAMILY_TAGS``.
        params (tuple): Integer size parameters (may be empty).
    """

    tag: str
    params: Tuple[int, ...] = ()

    def __str__(self) -> str:
        return " ".join([self.tag, *map(str, self.params)])


def _cycle(k: int) -> Digraph:
    if k < 3:
        raise ValueError(f"Cycle C_k requires k >= 3, got {k}")
    return Digraph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def _cycle_complement(k: int) -> Digraph:
    return _cycle(k).complement()


def _tournament(m: int) -> Digraph:
    if m < 1 or m % 2 == 0:
        raise ValueError(f"Tournament T_m requires an odd m >= 1, got {m}")
    half = (m - 1) // 2
    return Digraph.from_edges(m, ((i, (i + r) % m) for i in range(m) for r in range(1, half + 1)))


def _alt_cycle() -> Digraph:
    return Digraph.from_edges(5, A5_EDGES)


def _alt_cycle_complement() -> Digraph:
    return _alt_cycle().complement()


def _single_edge() -> Digraph:
    return Digraph.from_edges(2, [(0, 1)])


def _bollobas() -> Digraph:
    return Digraph.from_edges(3, [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2)])


def _complete(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"K_n requires n >= 1, got {n}")
    return Digraph.empty(n).complement()


def _empty(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"E_n requires n >= 1, got {n}")
    return Digraph.empty(n)


def _transitive_tournament(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"Transitive tournament requires n >= 1, got {n}")
    return Digraph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def _symmetric_cycle(k: int) -> Digraph:
    return _cycle(k).symmetrize()


def _symmetric_path(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"Path P_n requires n >= 1, got {n}")
    return Digraph.from_edges(n, ((i, i + 1) for i in range(n - 1))).symmetrize()


def _complete_bipartite(a: int, b: int) -> Digraph:
    if a < 1 or b < 1:
        raise ValueError(f"K_(a,b) requires a, b >= 1, got ({a}, {b})")
    return Digraph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b))).symmetrize()


def _collision() -> Digraph:
    return Digraph.from_edges(3, [(0, 2), (1, 2)])


# Mapping of family tags to builders
_family_builders: Dict[str, Callable[..., Digraph]] = {
    "C": _cycle,
    "S": _cycle_complement,
    "T": _tournament,
    "A5": _alt_cycle,
    "A5c": _alt_cycle_complement,
    "L": _single_edge,
    "F": _bollobas,
    "K": _complete,
    "E": _empty,
    "TT": _transitive_tournament,
    "Csym": _symmetric_cycle,
    "P": _symmetric_path,
    "Kbip": _complete_bipartite,
    "V": _collision,
}

# Number of integer parameters each family takes
_family_arity: Dict[str, int] = {
    "C": 1, "S": 1, "T": 1, "A5": 0, "A5c": 0, "L": 0, "F": 0,
    "K": 1, "E": 1, "TT": 1, "Csym": 1, "P": 1, "Kbip": 2, "V": 0,
}

FAMILY_TAGS = tuple(_family_builders)


def generate(family: GraphFamily) -> Digraph:
    """Build the digraph of a named family.

    Args:
        family: Tag and parameters.

    Returns:
        The digraph with its canonical numbering.

    Raises:
        ValueError: For an unknown tag, a wrong parameter count or invalid parameters.
    """
    builder = _family_builders.get(family.tag)
    if builder is None:
        raise ValueError(f"Unknown family '{family.tag}'. Supported families: {', '.join(FAMILY_TAGS)}")
    arity = _family_arity[family.tag]
    if len(family.params) != arity:
        raise ValueError(f"Family '{family.tag}' takes {arity} parameter(s), got {len(family.params)}")
    graph = builder(*family.params)
    logger.debug(f"Generated {family}: {graph}")
    return graph


def generate_family(tag: str, *params: int) -> Digraph:
    """Shorthand for ``generate(GraphFamily(tag, params))``."""
    return generate(GraphFamily(tag, tuple(int(p) for p in params)))


def a5c_square_orders() -> List[List[Tuple[int, int]]]:
    """Topological orders of the six acyclic classes of the square of A5c.

    Each printed line is reversed so that every edge inside a class runs
    forward in its order.
    """
    return [[(int(tok[0]), int(tok[1])) for tok in reversed(line.split(","))] for line in A5C_SQUARE_LINES]
