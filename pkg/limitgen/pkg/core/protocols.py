"""
Component protocols shared across packages.
"""

from typing import TYPE_CHECKING, Optional, Protocol, Sequence, Tuple, runtime_checkable

from limitgen.pkg.universe import Element

if TYPE_CHECKING:
    from limitgen.pkg.closure import ClosureResult


@runtime_checkable
class GeneratorProtocol(Protocol):
    """
    A generator answers a history x_0..x_t with its output z_t.

    ``query`` must depend on the history only; ``reset`` drops any state
    an implementation keeps between calls (external processes).
    """

    name: str
    noise: Optional[int]

    def reset(self) -> None:
        ...

    def query(self, history: Sequence[Element]) -> Element:
        ...


@runtime_checkable
class ChainPositioned(Protocol):
    """Generators that walk a chain of collections report their position."""

    def position(self, t: int) -> Tuple[int, bool]:
        """(j_t, truncated) at step t."""
        ...


@runtime_checkable
class ClosureReporting(Protocol):
    """Generators that can report the closure they act on."""

    def closure_for(self, history: Sequence[Element]) -> "ClosureResult":
        ...
