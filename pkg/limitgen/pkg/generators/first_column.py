"""
Noiseless generator for the column family.

The column of the first string is contained in every target, so the smallest
unseen element of that column is always a correct output.
"""

from typing import Optional, Sequence

from limitgen.pkg.universe import Element


class FirstColumnGenerator:
    """Outputs the smallest unseen element of the first string's column."""

    def __init__(self, name: str = "first-column"):
        self.name = name
        self.noise: Optional[int] = 0

    def reset(self) -> None:
        pass

    def query(self, history: Sequence[Element]) -> Element:
        if not history:
            raise ValueError("the first-column generator needs at least one observed string")
        column = history[0].column
        seen = {e.index for e in history if e.column == column}
        index = 0
        while index in seen:
            index += 1
        return Element(column, index)
