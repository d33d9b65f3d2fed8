"""
Confirmation and complete-decoding protocols over a noisy channel.

A channel is given by its confusion digraph: an edge (a, b) means input
letter ``a`` may come out as ``b``; every letter may also come out
unchanged. Block length ``t`` sequences are indexed as power vertices
(first letter most significant).

The checks are exhaustive: every sent block is paired with every block
the channel can produce from it, and the first failure in lexicographic
order of (sent, received) is reported.
"""

import logging
import math
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple, Union

import numpy as np
import pandas as pd

from .base import Limits, resolve_limits
from .digraph import Digraph, closure_graph
from .exact import Coloring, chromatic_number, verify_certificate
from .products import and_power, decode_index, encode_sequence, format_sequence
from .utils.utilities import iter_bits

# Setup module logger
logger = logging.getLogger(__name__)

CHANNEL_MODES = ("exhaustive", "seeded")
VARIANTS = ("confirm", "decode")

Block = Tuple[int, ...]


@dataclass(frozen=True)
class ChannelModel:
    """A channel described by its confusion digraph.

    Attributes:
        graph (Digraph): Edge (a, b) means ``a`` may be received as ``b``.
        mode (str): ``"exhaustive"`` enumerates every output, ``"seeded"``
            samples one output reproducibly.
        seed (int): Seed for the seeded mode.
    """

    graph: Digraph
    mode: str = "exhaustive"
    seed: Optional[int] = None

    def __post_init__(self):
        if self.mode not in CHANNEL_MODES:
            raise ValueError(f"Unknown channel mode '{self.mode}', expected one of {', '.join(CHANNEL_MODES)}")

    def outputs_of(self, letter: int) -> List[int]:
        """Letters ``letter`` can come out as, in increasing order."""
        return sorted({letter, *iter_bits(self.graph.rows[letter])})

    def inputs_of(self, letter: int) -> List[int]:
        """Letters that can come out as ``letter``, in increasing order."""
        return sorted({letter, *iter_bits(self.graph.in_rows[letter])})

    def can_produce(self, sent: Sequence[int], received: Sequence[int]) -> bool:
        return len(sent) == len(received) and all(
            a == b or self.graph.has_edge(a, b) for a, b in zip(sent, received)
        )


@dataclass(frozen=True)
class ChannelTranscript:
    """One round of a protocol.

    Attributes:
        sent (tuple): Block fed to the channel.
        received (tuple): Block the receiver got.
        noiseless_msg (int): Color index sent over the noiseless side channel.
        verdict: ``"confirm"``/``"reject"`` for the confirmation protocol,
            the decoded block (or ``"ambiguous"``) for complete decoding.
    """

    sent: Block
    received: Block
    noiseless_msg: int
    verdict: Union[str, Block]

    def to_dict(self) -> Dict[str, object]:
        return {
            "sent": format_sequence(self.sent),
            "received": format_sequence(self.received),
            "noiseless_msg": self.noiseless_msg,
            "verdict": self.verdict if isinstance(self.verdict, str) else format_sequence(self.verdict),
        }


@dataclass(frozen=True)
class ProtocolCheck:
    """Result of an exhaustive protocol check.

    Attributes:
        passed (bool): No sent/received pair defeats the protocol.
        counterexample (dict): The first failing pair, when ``passed`` is False.
        pairs_checked (int): Number of (sent, received) pairs examined.
    """

    passed: bool
    counterexample: Optional[Dict[str, object]] = None
    pairs_checked: int = 0

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> Dict[str, object]:
        return {"passed": self.passed, "counterexample": self.counterexample, "pairs_checked": self.pairs_checked}


def channel_outputs(
    ch: ChannelModel, x: Sequence[int], rng: Optional[np.random.Generator] = None
) -> Set[Block]:
    """Blocks the channel can produce from ``x``.

    In exhaustive mode all of them; in seeded mode a single sample drawn
    with ``rng`` (or a generator seeded with ``ch.seed``).

    Raises:
        ValueError: If a letter is out of range.
    """
    for a in x:
        if not 0 <= a < ch.graph.n:
            raise ValueError(f"Letter {a} out of range for an alphabet of {ch.graph.n}")
    choices = [ch.outputs_of(a) for a in x]
    if ch.mode == "exhaustive":
        return set(product(*choices))
    rng = rng if rng is not None else np.random.default_rng(ch.seed)
    return {tuple(int(c[rng.integers(len(c))]) for c in choices)}


def _sorted_outputs(ch: ChannelModel, x: Sequence[int]) -> Iterator[Block]:
    return product(*(ch.outputs_of(a) for a in x))


def _check_coloring(G: Digraph, t: int, coloring: Coloring, require_proper: bool, what: str,
                    limits: Limits) -> None:
    size = G.n**t
    if size > limits.exhaustive_max:
        raise ValueError(f"{size} blocks exceed the exhaustive limit {limits.exhaustive_max}")
    if len(coloring.colors) != size:
        raise ValueError(f"Coloring has {len(coloring.colors)} entries, expected {size} for t={t}")
    if require_proper:
        check = verify_certificate(and_power(G, t, limits), coloring)
        if not check.ok:
            raise ValueError(f"Coloring is not a proper coloring of the {what} power: violation {check.violation}")


def confirm_protocol_check(
    ch: ChannelModel, t: int, coloring: Coloring, require_proper: bool = True, limits: Optional[Limits] = None
) -> ProtocolCheck:
    """Check the confirmation protocol built on a coloring of the t-th AND power.

    The sender transmits the color of the block; the receiver confirms iff
    the color of the received block matches. The protocol passes iff every
    confirmation is correct and every correct reception is confirmed.

    Args:
        ch: The channel.
        t: Block length.
        coloring: Coloring of the channel power, indexed by power index.
        require_proper: Reject colorings that are not proper (pass False to
            search for counterexamples on arbitrary colorings).
        limits: ``exhaustive_max`` caps the number of blocks.

    Raises:
        ValueError: If the coloring is improper (with ``require_proper``) or
            the block space is too large.
    """
    limits = resolve_limits(limits)
    G = ch.graph
    _check_coloring(G, t, coloring, require_proper, "channel", limits)
    colors = coloring.colors
    checked = 0
    for x_index in range(G.n**t):
        x = decode_index(x_index, G.n, t)
        for y in _sorted_outputs(ch, x):
            checked += 1
            confirmed = colors[encode_sequence(y, G.n)] == colors[x_index]
            if confirmed != (y == x):
                example = {
                    "sent": format_sequence(x),
                    "received": format_sequence(y),
                    "kind": "false confirmation" if confirmed else "missed confirmation",
                }
                logger.info(f"Confirmation protocol fails at t={t}: {example}")
                return ProtocolCheck(False, example, checked)
    logger.info(f"Confirmation protocol passes at t={t} ({checked} pairs)")
    return ProtocolCheck(True, None, checked)


def decode_candidates(ch: ChannelModel, y: Sequence[int], color: int, colors: Sequence[int]) -> List[Block]:
    """Blocks that could have produced ``y`` and carry color ``color``, in lexicographic order."""
    n = ch.graph.n
    return [z for z in product(*(ch.inputs_of(b) for b in y)) if colors[encode_sequence(z, n)] == color]


def decode_protocol_check(
    ch: ChannelModel, t: int, coloring: Coloring, require_proper: bool = True, limits: Optional[Limits] = None
) -> ProtocolCheck:
    """Check complete zero-error decoding from a coloring of the closure power.

    The receiver decodes to the blocks that can produce what it received
    and carry the transmitted color; decoding succeeds iff that set is
    exactly the sent block.

    Raises:
        ValueError: If the coloring is not proper on the t-th power of the
            closure graph (with ``require_proper``) or the block space is too large.
    """
    limits = resolve_limits(limits)
    G = ch.graph
    _check_coloring(closure_graph(G), t, coloring, require_proper, "closure", limits)
    colors = coloring.colors
    checked = 0
    for x_index in range(G.n**t):
        x = decode_index(x_index, G.n, t)
        for y in _sorted_outputs(ch, x):
            checked += 1
            candidates = decode_candidates(ch, y, colors[x_index], colors)
            if candidates != [x]:
                example = {
                    "sent": format_sequence(x),
                    "received": format_sequence(y),
                    "candidates": [format_sequence(z) for z in candidates],
                }
                logger.info(f"Decoding protocol fails at t={t}: {example}")
                return ProtocolCheck(False, example, checked)
    logger.info(f"Decoding protocol passes at t={t} ({checked} pairs)")
    return ProtocolCheck(True, None, checked)


def message_length_table(
    ch: ChannelModel, t_max: int, variant: str = "confirm", budget: Optional[float] = None,
    limits: Optional[Limits] = None,
) -> pd.DataFrame:
    """Bits of the noiseless message per block length.

    Columns: ``t``, ``chi`` (of the channel power, or of the closure power
    for ``decode``), ``status``, ``bits`` = ceil(log2 chi), ``rate`` = bits / t.
    """
    if variant not in VARIANTS:
        raise ValueError(f"Unknown variant '{variant}', expected one of {', '.join(VARIANTS)}")
    limits = resolve_limits(limits)
    base = ch.graph if variant == "confirm" else closure_graph(ch.graph)
    rows = []
    for t in range(1, t_max + 1):
        result = chromatic_number(and_power(base, t, limits), budget, limits)
        bits = math.ceil(math.log2(result.value)) if result.value > 1 else 0
        rows.append({"t": t, "chi": result.value, "status": result.status, "bits": bits, "rate": bits / t})
    return pd.DataFrame(rows, columns=["t", "chi", "status", "bits", "rate"])


def simulate_transcripts(
    ch: ChannelModel, t: int, coloring: Coloring, count: int, seed: int = 0, variant: str = "confirm"
) -> List[ChannelTranscript]:
    """Seeded demonstration rounds of a protocol.

    Each round draws a uniform block, passes it through the channel with
    one sampled behavior and records the receiver's verdict.
    """
    if variant not in VARIANTS:
        raise ValueError(f"Unknown variant '{variant}', expected one of {', '.join(VARIANTS)}")
    n = ch.graph.n
    if len(coloring.colors) != n**t:
        raise ValueError(f"Coloring has {len(coloring.colors)} entries, expected {n ** t} for t={t}")
    sampler = ChannelModel(ch.graph, "seeded", seed)
    rng = np.random.default_rng(seed)
    colors = coloring.colors
    transcripts = []
    for _ in range(count):
        x = tuple(int(a) for a in rng.integers(n, size=t))
        (y,) = channel_outputs(sampler, x, rng)
        msg = colors[encode_sequence(x, n)]
        if variant == "confirm":
            verdict: Union[str, Block] = "confirm" if colors[encode_sequence(y, n)] == msg else "reject"
        else:
            candidates = decode_candidates(ch, y, msg, colors)
            verdict = candidates[0] if len(candidates) == 1 else "ambiguous"
        transcripts.append(ChannelTranscript(x, y, msg, verdict))
    logger.debug(f"Simulated {count} {variant} rounds at t={t} with seed {seed}")
    return transcripts
