"""
Utility functions for the pydilworth library.

This package contains helpers for bit-row manipulation, rational
formatting, logging configuration, run ledgers and decorators.
"""

from .decorators import command_handler, parameter_validator
from .logger import RunLog, configure_logging
from .utilities import (
    create_run_folder,
    dump_json,
    format_float,
    format_rational,
    iter_bits,
    log2_rational,
    mask_of,
    parse_limits,
    parse_rational,
    popcount,
)

__all__ = [
    'RunLog',
    'command_handler',
    'configure_logging',
    'create_run_folder',
    'dump_json',
    'format_float',
    'format_rational',
    'iter_bits',
    'log2_rational',
    'mask_of',
    'parameter_validator',
    'parse_limits',
    'parse_rational',
    'popcount',
]
