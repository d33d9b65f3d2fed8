"""
Decorators for the pydilworth library.

This module provides decorators for cross-cutting concerns: parameter
validation for library functions and uniform error reporting for CLI
commands.
"""

import functools
import inspect
import json
import logging
import sys
import time
import traceback
from typing import Any, Callable, Optional, TypeVar

# Setup module logger
logger = logging.getLogger(__name__)

# Type variable for the decorated function's return type
T = TypeVar('T')

# Exit status used for usage and input errors
EXIT_INPUT_ERROR = 2

# Substrings of error messages mapped to human-friendly hints
_error_hints = {
    "self-loop": "Graph files must not contain edges of the form 'v v'.",
    "out of range": "Vertex indices are 0-based and must be below the declared vertex count.",
    "vertex limit": "Raise the cap with --limits max_vertices=N if memory allows.",
    "enumeration": "Raise the cap with --limits max_sets=N or use a smaller graph.",
    "graph_hash": "The certificate was produced for a different graph file.",
    "transitivity": "Raise the cap with --limits transitivity_max_n=N.",
    "exhaustive": "Raise the cap with --limits exhaustive_max=N or lower t.",
    "Unknown family": "Run 'pydilworth gen --help' for the list of families.",
    "rational": "Rationals are written as 'p/q' or 'p'.",
}


def parameter_validator(**validators: Callable[[Any], bool]):
    """Decorator to validate parameters before executing a function.

    Each keyword names a parameter of the decorated function and maps it to a
    predicate. Works for plain functions and methods alike.

    Args:
        **validators: Parameter names mapped to predicates returning True when valid.

    Returns:
        The decorator function.

    Example:
        @parameter_validator(t=lambda t: t >= 1)
        def and_power(G, t):
            ...
    """

    def decorator(func: Callable[..., T]) -> Callable[..., T]:
        sig = inspect.signature(func)

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> T:
            bound_args = sig.bind(*args, **kwargs)
            bound_args.apply_defaults()

            for param_name, validator in validators.items():
                if param_name in bound_args.arguments:
                    value = bound_args.arguments[param_name]
                    if not validator(value):
                        error_msg = f"Invalid value for parameter '{param_name}' of {func.__name__}: {value!r}"
                        logger.error(error_msg)
                        raise ValueError(error_msg)

            return func(*args, **kwargs)

        return wrapper

    return decorator


def _hint_for(message: str) -> str:
    for fragment, hint in _error_hints.items():
        if fragment in message:
            return hint
    return ""


def command_handler(
    module_logger: Optional[logging.Logger] = None,
    log_success: bool = False,
    suppress_traceback: bool = False,
) -> Callable[[Callable[..., int]], Callable[..., int]]:
    """Create a decorator that turns exceptions of a CLI command into exit statuses.

    Input problems (``ValueError``, ``KeyError``, ``OSError``) and unexpected
    failures are logged, reported on stderr as one JSON object
    ``{"error", "message", "hint"}`` and mapped to exit status 2.

    Args:
        module_logger: Logger to use for error messages. If None, uses this module's logger.
        log_success: Whether to log the elapsed time of successful commands.
        suppress_traceback: Whether to omit the traceback from logged unexpected errors.

    Returns:
        Decorator function wrapping a command that returns an exit status.
    """
    log = module_logger or logger

    def report(kind: str, message: str, **extra: Any) -> None:
        payload = {"error": kind, "message": message, "hint": _hint_for(message)}
        payload.update(extra)
        sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")

    def decorator(func: Callable[..., int]) -> Callable[..., int]:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> int:
            start_time = time.time()
            try:
                status = func(*args, **kwargs)
            except (ValueError, KeyError) as ex:
                message = str(ex.args[0]) if isinstance(ex, KeyError) and ex.args else str(ex)
                log.error(f"{func.__name__}: {message}")
                extra = {}
                if hasattr(ex, "partial_count"):
                    extra["partial_count"] = ex.partial_count
                report(type(ex).__name__, message, **extra)
                return EXIT_INPUT_ERROR
            except OSError as ex:
                log.error(f"{func.__name__}: I/O error: {str(ex)}")
                report(type(ex).__name__, str(ex))
                return EXIT_INPUT_ERROR
            except Exception as ex:
                tb = "" if suppress_traceback else f"\nTraceback: {traceback.format_exc()}"
                log.error(f"Unexpected error in {func.__name__}: {type(ex).__name__}: {str(ex)}{tb}")
                report(type(ex).__name__, str(ex))
                return EXIT_INPUT_ERROR

            if log_success:
                log.debug(f"{func.__name__} finished with status {status} in {time.time() - start_time:.3f}s")
            return status

        return wrapper

    return decorator
