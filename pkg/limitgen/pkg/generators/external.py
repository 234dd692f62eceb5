"""
External generators over a pipe.

The harness writes one line per query to the child's standard input::

    history (c,k) (c,k) ...

and reads one ``(c,k)`` line back. With ``fresh=True`` the child is
restarted before every query, so each answer depends on its prefix alone.
"""

import logging
import select
import shlex
import subprocess
from typing import List, Optional, Sequence

from limitgen.pkg.errors import ExternalGeneratorError
from limitgen.pkg.universe import Element, parse_element

logger = logging.getLogger(__name__)

EXTERNAL_PREFIX = "external:"


def format_history(history: Sequence[Element]) -> str:
    """Request line for ``history`` (no trailing newline)."""
    return " ".join(["history"] + [str(e) for e in history])


class ExternalGenerator:
    """A generator running as a child process."""

    def __init__(self, command: str, fresh: bool = True, timeout: float = 5.0, noise: Optional[int] = None):
        self.command = command
        self.argv: List[str] = shlex.split(command)
        if not self.argv:
            raise ValueError("external generator command is empty")
        self.fresh = fresh
        self.timeout = timeout
        self.noise = noise
        self.name = EXTERNAL_PREFIX + command
        self._process: Optional[subprocess.Popen] = None
        self.restarts = 0

    def _start(self) -> subprocess.Popen:
        try:
            process = subprocess.Popen(
                self.argv,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                bufsize=1,
            )
        except OSError as e:
            raise ExternalGeneratorError(f"cannot start {self.command!r}: {e}")
        self.restarts += 1
        logger.debug(f"Started external generator {self.command!r} (pid {process.pid}, start #{self.restarts})")
        return process

    def _stop(self) -> None:
        process = self._process
        self._process = None
        if process is None:
            return
        try:
            if process.stdin:
                process.stdin.close()
            process.wait(timeout=self.timeout)
        except subprocess.TimeoutExpired:
            process.kill()
            process.wait()
        except OSError:
            process.kill()
        if process.stdout:
            process.stdout.close()

    def reset(self) -> None:
        self._stop()

    def close(self) -> None:
        self._stop()

    def query(self, history: Sequence[Element]) -> Element:
        if self.fresh:
            self._stop()
        if self._process is None:
            self._process = self._start()
        process = self._process

        try:
            process.stdin.write(format_history(history) + "\n")
            process.stdin.flush()
        except (BrokenPipeError, OSError) as e:
            self._stop()
            raise ExternalGeneratorError(f"{self.command!r} closed its input: {e}")

        readable, _, _ = select.select([process.stdout], [], [], self.timeout)
        if not readable:
            self._stop()
            raise ExternalGeneratorError(f"{self.command!r} did not answer within {self.timeout} seconds")
        line = process.stdout.readline()
        if not line:
            self._stop()
            raise ExternalGeneratorError(f"{self.command!r} exited without answering")
        try:
            answer = parse_element(line)
        except ValueError:
            self._stop()
            raise ExternalGeneratorError(f"{self.command!r} answered {line.strip()!r}, expected (c,k)")
        if self.fresh:
            self._stop()
        return answer

    def __enter__(self) -> "ExternalGenerator":
        return self

    def __exit__(self, *exc) -> None:
        self._stop()
