"""Intersection property of a generating set of involutions."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from hypertope_extensions.config import (
    DEFAULT_INTERSECTION_BOUND,
    DEFAULT_INTERSECTION_ORDER_BOUND,
)
from hypertope_extensions.errors import ResourceLimitExceeded
from hypertope_extensions.flags import LayerStatus
from hypertope_extensions.perm.chain import PermGroup, build_chain
from hypertope_extensions.perm.intersection import subgroup_intersection
from hypertope_extensions.perm.permutation import Permutation

logger = logging.getLogger(__name__)

Subset = tuple[int, ...]


@dataclass(frozen=True)
class IntersectionCheck:
    status: LayerStatus
    pairs_checked: int = 0
    failing_pair: Optional[tuple[Subset, Subset]] = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status is LayerStatus.PASSED


def frontier_pairs(rank: int) -> list[tuple[Subset, Subset]]:
    """Unordered pairs of index sets where neither contains the other."""
    subsets = [
        subset
        for size in range(1, rank + 1)
        for subset in combinations(range(rank), size)
    ]
    pairs = []
    for first, second in combinations(subsets, 2):
        left, right = set(first), set(second)
        if left <= right or right <= left:
            continue
        pairs.append((first, second))
    return pairs


class _Parabolics:
    def __init__(self, gens: Sequence[Permutation]):
        self.gens = gens
        self.degree = gens[0].degree
        self.cache: dict[Subset, PermGroup] = {}

    def __getitem__(self, subset: Subset) -> PermGroup:
        if subset not in self.cache:
            self.cache[subset] = build_chain(
                [self.gens[index] for index in subset], degree=self.degree
            )
        return self.cache[subset]

    def order(self, subset: Subset) -> int:
        return self[subset].order if subset else 1


def intersection_property(
    gens: Sequence[Permutation],
    limit: int = DEFAULT_INTERSECTION_BOUND,
    order_bound: int = DEFAULT_INTERSECTION_ORDER_BOUND,
) -> IntersectionCheck:
    """Check ``<g_I> & <g_J> = <g_{I & J}>`` for every pair of index sets.

    Pairs with one set inside the other hold trivially and are not visited.
    The check is skipped when the group is larger than ``order_bound`` or a
    backtrack search exceeds ``limit`` nodes.
    """
    if not gens:
        return IntersectionCheck(LayerStatus.PASSED, detail="no generators")
    non_involutions = [
        index for index, gen in enumerate(gens) if not gen.is_involution()
    ]
    if non_involutions:
        raise ValueError(f"Generators {non_involutions} are not involutions.")

    parabolics = _Parabolics(gens)
    full = tuple(range(len(gens)))
    if parabolics.order(full) > order_bound:
        return IntersectionCheck(
            LayerStatus.SKIPPED,
            detail=f"order {parabolics.order(full)} exceeds {order_bound}",
        )

    checked = 0
    for first, second in frontier_pairs(len(gens)):
        common = tuple(sorted(set(first) & set(second)))
        try:
            meet = subgroup_intersection(parabolics[first], parabolics[second], limit)
        except ResourceLimitExceeded as error:
            logger.info("Intersection property skipped: %s", error)
            return IntersectionCheck(
                LayerStatus.SKIPPED, checked, (first, second), str(error)
            )
        checked += 1
        if meet.order != parabolics.order(common):
            logger.info(
                "Intersection property fails at %s, %s: order %d vs %d",
                first,
                second,
                meet.order,
                parabolics.order(common),
            )
            return IntersectionCheck(
                LayerStatus.FAILED,
                checked,
                (first, second),
                f"|<{first}> & <{second}>| = {meet.order}, "
                f"|<{common}>| = {parabolics.order(common)}",
            )

    return IntersectionCheck(
        LayerStatus.PASSED, checked, detail=f"{checked} pairs of parabolics"
    )
