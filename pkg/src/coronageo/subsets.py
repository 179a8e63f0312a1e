"""Canonical subset enumeration shared by the exact minimum-set searches.

Order contract: cardinality ascending, lexicographic by sorted vertex tuple
within a cardinality.  Searches that force a fixed subset into every
candidate enumerate exactly the supersets of that subset, in the same
relative order as the unrestricted enumeration.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .graphs import Mask, mask_of, vertex_tuple


def ascending_subsets(universe: Mask, forced: Mask = 0) -> Iterator[Mask]:
    """Supersets of ``forced`` inside ``universe | forced``, smallest first.

    The first yielded mask is ``forced`` itself (possibly empty).
    """
    free = vertex_tuple(universe & ~forced)
    for extra in range(len(free) + 1):
        for combo in combinations(free, extra):
            yield forced | mask_of(combo)
