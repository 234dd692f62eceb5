"""
Game traces and the trace file codec.

A trace file starts with ``#! key=value`` header lines and then holds one
line per step::

    t=<t> x=(<c>,<k>) z=(<c>,<k>) correct=<0|1> closure=<empty|finite:<n>|infinite>
"""

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from limitgen.pkg.universe import Element, SetDescriptor, member, parse_element, parse_elements

HEADER_PREFIX = "#!"
HEADER_KEYS = (
    "collection",
    "target",
    "generator",
    "noise",
    "enumeration_noise",
    "schedule",
    "seed",
    "promised_tstar",
)
NONE = "none"

STEP_PATTERN = re.compile(
    r"t=(\d+) x=(\(\d+,\d+\)) z=(\(\d+,\d+\)) correct=([01]) closure=(empty|finite:\d+|infinite)"
)


@dataclass(frozen=True)
class StepRecord:
    """One round of the game."""

    t: int
    x: Element
    z: Element
    correct: bool
    closure: str
    chain_index: Optional[int] = None
    truncated: bool = False

    def to_line(self) -> str:
        return f"t={self.t} x={self.x} z={self.z} correct={int(self.correct)} closure={self.closure}"


def _optional_int(value: str) -> Optional[int]:
    return None if value == NONE else int(value)


@dataclass(frozen=True)
class TraceHeader:
    collection: str
    target: str
    generator: str
    noise: Optional[int]
    enumeration_noise: Tuple[Element, ...] = ()
    schedule: str = "prefix"
    seed: int = 0
    promised_tstar: Optional[int] = None
    mismatch: bool = False

    def to_lines(self) -> List[str]:
        values = {
            "collection": self.collection,
            "target": self.target,
            "generator": self.generator,
            "noise": NONE if self.noise is None else str(self.noise),
            "enumeration_noise": " ".join(str(e) for e in self.enumeration_noise) or NONE,
            "schedule": self.schedule,
            "seed": str(self.seed),
            "promised_tstar": NONE if self.promised_tstar is None else str(self.promised_tstar),
        }
        lines = [f"{HEADER_PREFIX} {key}={values[key]}" for key in HEADER_KEYS]
        if self.mismatch:
            lines.append(f"{HEADER_PREFIX} mismatch=1")
        return lines

    @classmethod
    def from_values(cls, values: Dict[str, str]) -> "TraceHeader":
        missing = [key for key in HEADER_KEYS if key not in values]
        if missing:
            raise ValueError(f"trace header is missing: {', '.join(missing)}")
        noise_text = values["enumeration_noise"]
        return cls(
            collection=values["collection"],
            target=values["target"],
            generator=values["generator"],
            noise=_optional_int(values["noise"]),
            enumeration_noise=() if noise_text == NONE else tuple(parse_elements(noise_text)),
            schedule=values["schedule"],
            seed=int(values["seed"]),
            promised_tstar=_optional_int(values["promised_tstar"]),
            mismatch=values.get("mismatch") == "1",
        )


@dataclass
class GameTrace:
    header: TraceHeader
    steps: List[StepRecord] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def to_text(self) -> str:
        lines = self.header.to_lines() + [step.to_line() for step in self.steps]
        return "\n".join(lines) + "\n"


def settle_time(trace: GameTrace) -> Optional[int]:
    """
    Smallest t from which every recorded step is correct; None when the last
    step is wrong (never within the horizon).
    """
    if not trace.steps:
        raise ValueError("settle time of an empty trace")
    settled: Optional[int] = None
    for step in reversed(trace.steps):
        if not step.correct:
            break
        settled = step.t
    return settled


def check_judgments(trace: GameTrace, target: SetDescriptor) -> List[int]:
    """Steps whose recorded judgment disagrees with z_t in K minus S_t."""
    seen = set()
    wrong = []
    for step in trace.steps:
        seen.add(step.x)
        expected = member(target, step.z) and step.z not in seen
        if expected != step.correct:
            wrong.append(step.t)
    return wrong


def parse_trace(text: str) -> GameTrace:
    """Parse a trace file; steps must be consecutive from t = 0."""
    values: Dict[str, str] = {}
    steps: List[StepRecord] = []
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if line.startswith(HEADER_PREFIX):
            key, sep, value = line[len(HEADER_PREFIX):].strip().partition("=")
            if not sep:
                raise ValueError(f"line {number}: malformed header {line!r}")
            values[key] = value
            continue
        match = STEP_PATTERN.fullmatch(line)
        if not match:
            raise ValueError(f"line {number}: malformed step {line!r}")
        t = int(match.group(1))
        if t != len(steps):
            raise ValueError(f"line {number}: expected step t={len(steps)}, got t={t}")
        steps.append(
            StepRecord(t, parse_element(match.group(2)), parse_element(match.group(3)), match.group(4) == "1", match.group(5))
        )
    return GameTrace(TraceHeader.from_values(values), steps)


def read_trace(path: Union[str, Path]) -> GameTrace:
    return parse_trace(Path(path).read_text(encoding="utf-8"))


def write_trace(trace: GameTrace, path: Union[str, Path]) -> None:
    Path(path).write_text(trace.to_text(), encoding="utf-8")
