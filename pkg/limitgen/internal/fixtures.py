"""
Small named collections with hand-derived dimensions.

- ``example_collection``: two languages sharing four elements; NC_0 = 4,
  NC_1 = 6.
- ``shared_tail_collection``: two columns sharing a four-element tail;
  NC_2 = 8.
- ``gadget_chain_levels``: D_0 <= D_1 <= D_2 built from column pairs that
  share 1, 2 and 3 extra elements; NC_1 = 3, 4, 5.
"""

from typing import List

from limitgen.pkg.universe import Element, ExplicitCollection, NamedLanguage, canonicalize

GADGET_EXTRA_SIZES = (1, 2, 3)
GADGET_EXTRA_COLUMN = 10


def example_collection() -> ExplicitCollection:
    return ExplicitCollection.of(
        "c_ex",
        {
            "L1": canonicalize({0}, [Element(1, 0), Element(1, 1)]),
            "L2": canonicalize({1}, [Element(0, 0), Element(0, 1)]),
        },
    )


def shared_tail_collection() -> ExplicitCollection:
    tail = [Element(2, k) for k in range(4)]
    return ExplicitCollection.of(
        "c_sh",
        {
            "M1": canonicalize({0}, tail),
            "M2": canonicalize({1}, tail),
        },
    )


def gadget_pair(m: int) -> List[NamedLanguage]:
    """P_m and Q_m: columns 2m and 2m+1, both extended by the same extras."""
    extras = [Element(GADGET_EXTRA_COLUMN + m, k) for k in range(GADGET_EXTRA_SIZES[m])]
    return [
        NamedLanguage(f"P{m}", canonicalize({2 * m}, extras)),
        NamedLanguage(f"Q{m}", canonicalize({2 * m + 1}, extras)),
    ]


def gadget_chain_levels() -> List[ExplicitCollection]:
    levels = []
    members: List[NamedLanguage] = []
    for m in range(len(GADGET_EXTRA_SIZES)):
        members.extend(gadget_pair(m))
        levels.append(ExplicitCollection(f"d{m}", tuple(members)))
    return levels
