"""
Utility functions for the pydilworth library.

This module contains small helpers used throughout the library for tasks
like bit-row manipulation, exact rational formatting and parsing, limit
overrides, deterministic JSON output and run folder management.
"""

import json
import logging
import math
import os
import re
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Union

# Setup module logger
logger = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order.

    Args:
        mask: Non-negative integer used as a bit set.

    Yields:
        Bit positions, lowest first.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Build a bit set from an iterable of vertex indices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    """Number of set bits in ``mask``."""
    return bin(mask).count("1")


def create_run_folder(base_path: str) -> str:
    """Create a new run folder with incrementing number.

    Finds the highest numbered ``runN`` folder below ``base_path`` and
    creates the next one. Used by the CLI to keep the artifacts of each
    invocation together.

    Args:
        base_path: Base directory path where run folders will be created.

    Returns:
        Path to the newly created run folder.

    Raises:
        OSError: If directory creation fails.
    """
    os.makedirs(base_path, exist_ok=True)

    max_num = 0
    run_pattern = re.compile(r'run(\d+)$')
    for item in os.listdir(base_path):
        if os.path.isdir(os.path.join(base_path, item)):
            match = run_pattern.match(item)
            if match:
                max_num = max(max_num, int(match.group(1)))

    run_dir = os.path.join(base_path, f"run{max_num + 1}")
    try:
        os.makedirs(run_dir)
    except OSError as e:
        logger.error(f"Failed to create run folder {run_dir}: {str(e)}")
        raise

    logger.info(f"Created run folder: {run_dir}")
    return run_dir


def format_rational(value: Union[Fraction, int]) -> str:
    """Serialize a rational as a ``"p/q"`` string (``"p"`` when q = 1)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an integer into an exact Fraction.

    Args:
        text: Serialized rational.

    Returns:
        The reduced Fraction.

    Raises:
        ValueError: If the text is not a rational literal or the denominator is zero.
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    match = re.fullmatch(r'\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?', str(text))
    if not match:
        raise ValueError(f"Not a rational literal: '{text}'")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator in rational literal: '{text}'")
    return Fraction(numerator, denominator)


def format_float(value: float, digits: int = 6) -> str:
    """Format a float for display with ``digits`` significant digits."""
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "nan"
    return f"{value:.{digits}g}"


def log2_rational(value: Union[Fraction, int]) -> float:
    """Base-2 logarithm of a positive rational, exact for powers of two."""
    value = Fraction(value)
    if value <= 0:
        raise ValueError(f"Logarithm of non-positive value {value}")
    return math.log2(value.numerator) - math.log2(value.denominator)


def parse_limits(text: str) -> Dict[str, Union[int, float]]:
    """Parse a ``key=value,key=value`` override string.

    Args:
        text: Comma separated assignments, e.g. ``"max_vertices=4096,budget_seconds=5"``.

    Returns:
        Mapping from key to parsed number.

    Raises:
        ValueError: On a malformed assignment or a non-positive value.
    """
    overrides: Dict[str, Union[int, float]] = {}
    for item in filter(None, (part.strip() for part in text.split(','))):
        key, sep, raw = item.partition('=')
        if not sep or not key.strip():
            raise ValueError(f"Malformed limit override '{item}', expected key=value")
        raw = raw.strip()
        try:
            value: Union[int, float] = int(raw)
        except ValueError:
            try:
                value = float(raw)
            except ValueError:
                raise ValueError(f"Limit '{key.strip()}' is not a number: '{raw}'")
        if value <= 0:
            raise ValueError(f"Limit '{key.strip()}' must be positive, got {raw}")
        overrides[key.strip()] = value
    return overrides


def dump_json(payload: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
