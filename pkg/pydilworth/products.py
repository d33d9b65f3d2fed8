"""
AND and OR products of digraphs, their powers, and exact-type classes.

Vertex ``(f, g)`` of a binary product gets index ``f * |V(G)| + g``; the
vertex of a t-th power encoding ``(a_1, ..., a_t)`` gets the mixed-radix
value with ``a_1`` most significant. This numbering is part of the
certificate format and does not change.

Materialized products build each bit row with one big-integer
multiplication: the out-closure row of ``g`` is copied into every block
``f'`` selected by a spread mask, and blocks never overlap, so no carries
occur.
"""

import json
import logging
import math
import os
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .base import Limits, resolve_limits
from .digraph import Digraph, union
from .utils.decorators import parameter_validator
from .utils.utilities import iter_bits

# Setup module logger
logger = logging.getLogger(__name__)

PRODUCT_OPS = ("and", "or")


# ----------------------------------------------------------------------
# Sequence codec
# ----------------------------------------------------------------------


def encode_sequence(seq: Sequence[int], base: int) -> int:
    """Mixed-radix value of ``seq`` over ``[0, base)``, first letter most significant."""
    value = 0
    for letter in seq:
        if not 0 <= letter < base:
            raise ValueError(f"Letter {letter} is out of range for alphabet size {base}")
        value = value * base + letter
    return value


def decode_index(value: int, base: int, length: int) -> Tuple[int, ...]:
    """Inverse of ``encode_sequence``."""
    if not 0 <= value < base**length:
        raise ValueError(f"Index {value} is out of range for {base}^{length} sequences")
    letters = []
    for _ in range(length):
        value, letter = divmod(value, base)
        letters.append(letter)
    return tuple(reversed(letters))


@dataclass(frozen=True)
class PowerIndex:
    """A vertex of a t-th power, as index plus alphabet and length.

    Attributes:
        base (int): Alphabet size n.
        length (int): Sequence length t.
        value (int): Index in ``[0, n^t)``.
    """

    base: int
    length: int
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.base**self.length:
            raise ValueError(f"Index {self.value} is out of range for {self.base}^{self.length} sequences")

    @classmethod
    def encode(cls, seq: Sequence[int], base: int) -> "PowerIndex":
        return cls(base, len(seq), encode_sequence(seq, base))

    def decode(self) -> Tuple[int, ...]:
        return decode_index(self.value, self.base, self.length)

    def label(self) -> str:
        return format_sequence(self.decode())


def format_sequence(seq: Sequence[int]) -> str:
    """Compact label: concatenated digits for alphabets up to 10, else comma separated."""
    if all(0 <= a < 10 for a in seq):
        return "".join(map(str, seq))
    return ",".join(map(str, seq))


# ----------------------------------------------------------------------
# Types
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class TypeVector:
    """Letter occurrence counts of a sequence.

    Attributes:
        counts (tuple): ``counts[a]`` is the number of positions holding letter ``a``.
    """

    counts: Tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.counts):
            raise ValueError(f"Type counts must be non-negative, got {self.counts}")

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def class_size(self) -> int:
        """Number of sequences of this type (the multinomial coefficient)."""
        size = math.factorial(self.total)
        for c in self.counts:
            size //= math.factorial(c)
        return size

    @classmethod
    def of_sequence(cls, seq: Sequence[int], n: int) -> "TypeVector":
        counts = [0] * n
        for letter in seq:
            counts[letter] += 1
        return cls(tuple(counts))

    def sequences(self) -> Iterator[Tuple[int, ...]]:
        """All sequences of this type in lexicographic order."""
        remaining = list(self.counts)
        current: List[int] = []

        def extend() -> Iterator[Tuple[int, ...]]:
            if len(current) == self.total:
                yield tuple(current)
                return
            for letter, left in enumerate(remaining):
                if left:
                    remaining[letter] -= 1
                    current.append(letter)
                    yield from extend()
                    current.pop()
                    remaining[letter] += 1

        return extend()


def type_vectors(n: int, t: int) -> Iterator[TypeVector]:
    """All types of length-``t`` sequences over ``n`` letters, lexicographically."""

    def compositions(slots: int, left: int) -> Iterator[Tuple[int, ...]]:
        if slots == 1:
            yield (left,)
            return
        for first in range(left, -1, -1):
            for rest in compositions(slots - 1, left - first):
                yield (first,) + rest

    for counts in sorted(compositions(n, t)):
        yield TypeVector(counts)


# ----------------------------------------------------------------------
# Materialized products
# ----------------------------------------------------------------------


def _check_size(size: int, limits: Limits) -> None:
    if size > limits.max_vertices:
        raise ValueError(
            f"Product with {size} vertices exceeds the vertex limit {limits.max_vertices}; "
            f"required max_vertices >= {size}"
        )


def _spread(mask: int, block: int) -> int:
    """Place a 1 at the start of block ``f`` for every bit ``f`` of ``mask``."""
    spread = 0
    for f in iter_bits(mask):
        spread |= 1 << (f * block)
    return spread


def and_product(F: Digraph, G: Digraph, limits: Optional[Limits] = None) -> Digraph:
    """AND (strong) product: every coordinate stays or advances, at least one advances.

    Raises:
        ValueError: If the product exceeds ``limits.max_vertices``.
    """
    limits = resolve_limits(limits)
    size = F.n * G.n
    _check_size(size, limits)
    block = G.n
    spreads = [_spread(closed, block) for closed in F.closed_rows]
    rows = []
    for f in range(F.n):
        for g in range(G.n):
            rows.append(G.closed_rows[g] * spreads[f] & ~(1 << (f * block + g)))
    return Digraph(size, tuple(rows))


def or_product(F: Digraph, G: Digraph, limits: Optional[Limits] = None) -> Digraph:
    """OR product: an edge whenever at least one coordinate pair is an edge.

    Raises:
        ValueError: If the product exceeds ``limits.max_vertices``.
    """
    limits = resolve_limits(limits)
    size = F.n * G.n
    _check_size(size, limits)
    block = G.n
    every_block = _spread(F.full_mask, block)
    rows = []
    for f in range(F.n):
        first = G.full_mask * _spread(F.rows[f], block)
        for g in range(G.n):
            rows.append(first | G.rows[g] * every_block)
    return Digraph(size, tuple(rows))


_products = {"and": and_product, "or": or_product}


@parameter_validator(t=lambda t: isinstance(t, int) and t >= 1)
def power(G: Digraph, t: int, op: str = "and", limits: Optional[Limits] = None) -> Digraph:
    """t-fold AND or OR product of ``G`` with itself.

    Raises:
        ValueError: For an unknown ``op`` or if ``n^t`` exceeds the vertex limit.
    """
    if op not in _products:
        raise ValueError(f"Unknown product '{op}', expected one of {', '.join(PRODUCT_OPS)}")
    limits = resolve_limits(limits)
    _check_size(G.n**t, limits)
    product = _products[op]
    result = G
    for _ in range(t - 1):
        result = product(result, G, limits)
    logger.debug(f"{op}-power t={t} of {G}: {result}")
    return result


def and_power(G: Digraph, t: int, limits: Optional[Limits] = None) -> Digraph:
    """t-th AND power; vertex ``i`` encodes ``decode_index(i, G.n, t)``."""
    return power(G, t, "and", limits)


def or_power(G: Digraph, t: int, limits: Optional[Limits] = None) -> Digraph:
    """t-th OR power; vertex ``i`` encodes ``decode_index(i, G.n, t)``."""
    return power(G, t, "or", limits)


class PowerOracle:
    """Pairwise edge queries on a power graph without materializing it.

    Attributes:
        base (Digraph): The factor graph.
        t (int): Power exponent.
        op (str): ``"and"`` or ``"or"``.
    """

    def __init__(self, base: Digraph, t: int, op: str = "and"):
        if op not in _products:
            raise ValueError(f"Unknown product '{op}', expected one of {', '.join(PRODUCT_OPS)}")
        if t < 1:
            raise ValueError(f"Power exponent must be >= 1, got {t}")
        self.base = base
        self.t = t
        self.op = op

    @property
    def n(self) -> int:
        return self.base.n**self.t

    def sequence(self, x: int) -> Tuple[int, ...]:
        return decode_index(x, self.base.n, self.t)

    def has_edge_sequences(self, xs: Sequence[int], ys: Sequence[int]) -> bool:
        if tuple(xs) == tuple(ys):
            return False
        if self.op == "and":
            return all(self.base.closed_rows[a] >> b & 1 for a, b in zip(xs, ys))
        return any(self.base.rows[a] >> b & 1 for a, b in zip(xs, ys))

    def has_edge(self, x: int, y: int) -> bool:
        return self.has_edge_sequences(self.sequence(x), self.sequence(y))


# ----------------------------------------------------------------------
# Type classes and compound families
# ----------------------------------------------------------------------


@parameter_validator(t=lambda t: isinstance(t, int) and t >= 1)
def type_class_subgraph(
    G: Digraph, t: int, tv: TypeVector, limits: Optional[Limits] = None
) -> Tuple[Digraph, List[int]]:
    """Subgraph of the t-th AND power induced on the sequences of type ``tv``.

    Returns:
        The induced digraph (vertices relabelled ``0..|T|-1``) and the power
        indices of its vertices in lexicographic order.

    Raises:
        ValueError: If ``tv`` does not have ``G.n`` entries summing to ``t``,
            or the class exceeds the vertex limit.
    """
    if len(tv.counts) != G.n or tv.total != t:
        raise ValueError(f"Type {tv.counts} does not describe length-{t} sequences over {G.n} letters")
    limits = resolve_limits(limits)
    _check_size(tv.class_size, limits)
    oracle = PowerOracle(G, t, "and")
    sequences = list(tv.sequences())
    rows = []
    for xs in sequences:
        row = 0
        for j, ys in enumerate(sequences):
            if oracle.has_edge_sequences(xs, ys):
                row |= 1 << j
        rows.append(row)
    vertices = [encode_sequence(xs, G.n) for xs in sequences]
    return Digraph(len(sequences), tuple(rows)), vertices


@parameter_validator(t=lambda t: isinstance(t, int) and t >= 1)
def compound_union_power(family: Sequence[Digraph], t: int, limits: Optional[Limits] = None) -> Digraph:
    """Union of the t-th AND powers of the members (not the power of the union).

    Raises:
        ValueError: On an empty family or members with different vertex counts.
    """
    if not family:
        raise ValueError("A compound family needs at least one member")
    sizes = {G.n for G in family}
    if len(sizes) != 1:
        raise ValueError(f"Compound family members must share a vertex set, got sizes {sorted(sizes)}")
    result = and_power(family[0], t, limits)
    for G in family[1:]:
        result = union(result, and_power(G, t, limits))
    return result


# ----------------------------------------------------------------------
# Sidecar header
# ----------------------------------------------------------------------


def power_header(base_n: int, t: int, op: str = "and") -> Dict[str, object]:
    """Sidecar header naming the factor size, exponent and product of a power graph."""
    if op not in _products:
        raise ValueError(f"Unknown product '{op}', expected one of {', '.join(PRODUCT_OPS)}")
    return {"base_n": base_n, "t": t, "op": op}


def header_path(graph_path: str) -> str:
    return graph_path + ".json" if not graph_path.endswith(".json") else graph_path[:-5] + ".header.json"


def write_power_header(graph_path: str, header: Dict[str, object]) -> str:
    path = header_path(graph_path)
    with open(path, "w", encoding="utf-8") as f:
        f.write(json.dumps(header, sort_keys=True) + "\n")
    return path


def read_power_header(graph_path: str) -> Optional[Dict[str, object]]:
    """The sidecar header of a power graph file, or None when absent."""
    path = header_path(graph_path)
    if not os.path.exists(path):
        return None
    with open(path, encoding="utf-8") as f:
        header = json.load(f)
    for key in ("base_n", "t", "op"):
        if key not in header:
            raise ValueError(f"Power header {path} is missing '{key}'")
    return header


def parse_vertex(token, header: Optional[Dict[str, object]] = None) -> int:
    """Vertex from a certificate: an int, a letter list, or a digit string with a header."""
    if isinstance(token, bool):
        raise ValueError(f"Invalid vertex {token!r}")
    if isinstance(token, int):
        return token
    if isinstance(token, list):
        if header is None:
            raise ValueError("Sequence-named vertices need a power header")
        return encode_sequence([int(a) for a in token], int(header["base_n"]))
    if isinstance(token, str):
        if header is None:
            return int(token)
        letters = token.split(",") if "," in token else list(token)
        if len(letters) != int(header["t"]):
            raise ValueError(f"Vertex label '{token}' does not have length {header['t']}")
        return encode_sequence([int(a) for a in letters], int(header["base_n"]))
    raise ValueError(f"Invalid vertex {token!r}")
