"""
The generation game: play loop, traces and settle times.
"""

from .play import play
from .trace import (
    GameTrace,
    StepRecord,
    TraceHeader,
    check_judgments,
    parse_trace,
    read_trace,
    settle_time,
    write_trace,
)

__all__ = [
    "play",
    "GameTrace",
    "StepRecord",
    "TraceHeader",
    "check_judgments",
    "parse_trace",
    "read_trace",
    "settle_time",
    "write_trace",
]
