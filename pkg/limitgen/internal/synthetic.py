"""
Synthetic generators with known refutation cases.
"""

from typing import Optional, Sequence

from limitgen.pkg.universe import Element


class FreshColumnGenerator:
    """Answers a history of length n with (offset + n - 1, 0): a new column every time."""

    def __init__(self, offset: int = 100, name: str = "fresh-column"):
        self.offset = offset
        self.name = name
        self.noise: Optional[int] = None

    def reset(self) -> None:
        pass

    def query(self, history: Sequence[Element]) -> Element:
        return Element(self.offset + len(history) - 1, 0)


class FirstColumnRepeatGenerator:
    """Answers (c, 1) for the column c of the first string."""

    def __init__(self, name: str = "first-column-repeat"):
        self.name = name
        self.noise: Optional[int] = None

    def reset(self) -> None:
        pass

    def query(self, history: Sequence[Element]) -> Element:
        if not history:
            raise ValueError("empty history")
        return Element(history[0].column, 1)
