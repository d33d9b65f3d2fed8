"""
Logging utilities for pydilworth runs.

``configure_logging`` wires the standard ``logging`` tree for the CLI.
``RunLog`` keeps a plain-text ledger of one CLI run: a header, free-form
notes and one line per emitted artifact with its sha256 digest, so that
certificates written by a run can be audited later.
"""

import hashlib
import logging
import os
from datetime import datetime
from typing import Any, List, Optional, TextIO, Tuple

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
TIMESTAMP_FORMAT = "%Y-%m-%d %H:%M:%S"

_VERBOSITY_LEVELS = {0: logging.WARNING, 1: logging.INFO, 2: logging.DEBUG}


def configure_logging(verbosity: int = 0, log_file: Optional[str] = None) -> logging.Logger:
    """Attach console (stderr) and optional file handlers to the package logger.

    Args:
        verbosity: 0 = warnings, 1 = info, 2 or more = debug.
        log_file: Optional path of a log file receiving the same records.

    Returns:
        The configured ``pydilworth`` logger.
    """
    level = _VERBOSITY_LEVELS.get(min(max(verbosity, 0), 2), logging.DEBUG)
    package_logger = logging.getLogger("pydilworth")
    package_logger.setLevel(level)

    for handler in list(package_logger.handlers):
        if not isinstance(handler, logging.NullHandler):
            package_logger.removeHandler(handler)
            handler.close()

    formatter = logging.Formatter(LOG_FORMAT, datefmt=TIMESTAMP_FORMAT)
    console = logging.StreamHandler()
    console.setFormatter(formatter)
    package_logger.addHandler(console)

    if log_file:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(formatter)
        package_logger.addHandler(file_handler)

    return package_logger


class RunLog:
    """Artifact ledger for a single CLI run.

    Attributes:
        directory (str): Directory holding the ledger file.
        log_file (str): Name of the ledger file.
        artifacts (list): (path, sha256) pairs recorded so far.
    """

    def __init__(self, directory: str = ".", log_file: str = "run_log.txt", command: str = ""):
        """Create the ledger and write its header.

        Args:
            directory: Directory where the ledger is stored; created if missing.
            log_file: Name of the ledger file.
            command: The command line being executed, written into the header.
        """
        self.directory = directory
        self.log_file = log_file
        self.artifacts: List[Tuple[str, str]] = []
        os.makedirs(self.directory, exist_ok=True)
        self._log_header(command)

    @property
    def path(self) -> str:
        return os.path.join(self.directory, self.log_file)

    def _open(self, mode: str = "a") -> TextIO:
        return open(self.path, mode, encoding="utf-8")

    def _log_header(self, command: str) -> None:
        start_time = datetime.now().strftime(TIMESTAMP_FORMAT)
        with self._open("a") as f:
            f.write(f"{'=' * 80}\n")
            f.write(f"Run started at {start_time}\n")
            if command:
                f.write(f"Command: {command}\n")
            f.write(f"{'=' * 80}\n")

    def note(self, message: Any) -> None:
        """Append a timestamped free-form line."""
        timestamp = datetime.now().strftime(TIMESTAMP_FORMAT)
        with self._open() as f:
            f.write(f"{timestamp} {message}\n")

    def record_artifact(self, path: str) -> str:
        """Hash an emitted file and append it to the ledger.

        Args:
            path: Path of the artifact that was just written.

        Returns:
            The hex sha256 digest of the file contents.
        """
        with open(path, "rb") as f:
            digest = hashlib.sha256(f.read()).hexdigest()
        self.artifacts.append((path, digest))
        self.note(f"artifact {path} sha256={digest}")
        return digest

    def separator(self, char: str = '-', length: int = 80) -> None:
        with self._open() as f:
            f.write(char * length + "\n")
