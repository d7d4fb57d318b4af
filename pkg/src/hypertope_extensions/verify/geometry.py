"""Coset geometries of a group with a distinguished generating set.

Elements of type ``i`` are the right cosets ``G_i x`` of the parabolic
``G_i``; two elements are incident when their cosets share a group element.
All checks enumerate the group, so they are bounded by ``geometry_bound``.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from hypertope_extensions.config import DEFAULT_GEOMETRY_BOUND
from hypertope_extensions.errors import ResourceLimitExceeded
from hypertope_extensions.flags import LayerStatus
from hypertope_extensions.perm.chain import PermGroup
from hypertope_extensions.perm.permutation import POINT_DTYPE, Permutation
from hypertope_extensions.unionfind import UnionFind
from hypertope_extensions.verify.cgroup import IntersectionCheck

logger = logging.getLogger(__name__)

RESIDUAL_CONNECTEDNESS = (
    "standard: the incidence graph of every residue of rank >= 2, "
    "the whole geometry included, is connected"
)

Types = tuple[int, ...]
Flag = tuple[int, ...]


def maximal_parabolics(rank: int) -> list[list[int]]:
    """``G_i`` is generated by every generator but the ``i``-th."""
    return [[j for j in range(rank) if j != i] for i in range(rank)]


class CosetGeometry:
    def __init__(
        self,
        group: PermGroup,
        generators: Sequence[Permutation],
        parabolics: Sequence[Sequence[int]],
    ):
        self.group = group
        self.generators = tuple(generators)
        self.parabolics = tuple(tuple(parabolic) for parabolic in parabolics)

        rows = [element.images for element in group.elements()]
        self.table = np.array(rows, dtype=POINT_DTYPE)
        self.index = {
            row.tobytes(): position for position, row in enumerate(self.table)
        }
        identity = np.arange(group.degree, dtype=POINT_DTYPE).tobytes()
        self.identity = self.index[identity]

        self.cosets = tuple(
            self._coset_labels(parabolic) for parabolic in self.parabolics
        )
        self.counts = tuple(int(labels.max()) + 1 for labels in self.cosets)
        logger.debug(
            "Coset geometry of order %d: %s elements per type",
            len(self.table),
            list(self.counts),
        )

    @property
    def rank(self) -> int:
        return len(self.parabolics)

    def _lookup(self, rows: np.ndarray) -> np.ndarray:
        return np.fromiter(
            (self.index[row.tobytes()] for row in rows),
            dtype=np.int64,
            count=len(rows),
        )

    def _left_multiple(self, gen: Permutation) -> np.ndarray:
        """Index of ``g x`` for every element ``x``."""
        return self._lookup(self.table[:, gen.images])

    def _right_multiple(self, gen: Permutation) -> np.ndarray:
        """Index of ``x g`` for every element ``x``."""
        return self._lookup(gen.images[self.table])

    def _coset_labels(self, parabolic: Sequence[int]) -> np.ndarray:
        merger = UnionFind(len(self.table))
        for gen_index in parabolic:
            targets = self._left_multiple(self.generators[gen_index])
            for element, target in enumerate(targets):
                merger.union(element, int(target))
        labels = np.empty(len(self.table), dtype=np.int64)
        for label, block in enumerate(merger.blocks()):
            labels[block] = label
        return labels

    @cached_property
    def incidence(self) -> dict[tuple[int, int], dict[int, frozenset[int]]]:
        """``incidence[i, j][a]``: the type ``j`` elements incident to ``(i, a)``."""
        result: dict[tuple[int, int], dict[int, frozenset[int]]] = {}
        for i, j in combinations(range(self.rank), 2):
            forward: dict[int, set[int]] = {}
            backward: dict[int, set[int]] = {}
            for a, b in set(zip(self.cosets[i].tolist(), self.cosets[j].tolist())):
                forward.setdefault(a, set()).add(b)
                backward.setdefault(b, set()).add(a)
            result[i, j] = {a: frozenset(bs) for a, bs in forward.items()}
            result[j, i] = {b: frozenset(as_) for b, as_ in backward.items()}
        return result

    def incident(self, i: int, a: int, j: int, b: int) -> bool:
        if i == j:
            return a == b
        return b in self.incidence[i, j].get(a, frozenset())

    def candidates(self, types: Types, flag: Flag, new_type: int) -> set[int]:
        candidates = set(range(self.counts[new_type]))
        for kind, element in zip(types, flag):
            candidates &= self.incidence[kind, new_type].get(element, frozenset())
        return candidates

    @cached_property
    def flags(self) -> dict[Types, list[Flag]]:
        """Flags of every type set; a flag lists its elements in type order."""
        result: dict[Types, list[Flag]] = {(): [()]}
        for size in range(1, self.rank + 1):
            for types in combinations(range(self.rank), size):
                head, new_type = types[:-1], types[-1]
                result[types] = sorted(
                    flag + (element,)
                    for flag in result[head]
                    for element in self.candidates(head, flag, new_type)
                )
        return result

    @property
    def chambers(self) -> list[Flag]:
        return self.flags[tuple(range(self.rank))]

    @cached_property
    def borel_order(self) -> int:
        """Order of the intersection of all parabolics."""
        inside = np.ones(len(self.table), dtype=bool)
        for labels in self.cosets:
            inside &= labels == labels[self.identity]
        return int(inside.sum())

    def coset_action(self, gen: Permutation) -> list[np.ndarray]:
        """Right multiplication by ``gen`` on the elements of each type."""
        targets = self._right_multiple(gen)
        action = []
        for labels, count in zip(self.cosets, self.counts):
            images = np.empty(count, dtype=np.int64)
            images[labels] = labels[targets]
            action.append(images)
        return action


def build_geometry(
    group: PermGroup,
    generators: Optional[Sequence[Permutation]] = None,
    parabolics: Optional[Sequence[Sequence[int]]] = None,
    bound: int = DEFAULT_GEOMETRY_BOUND,
) -> CosetGeometry:
    """Tits coset geometry on the maximal parabolics, or on ``parabolics``."""
    generators = tuple(generators if generators is not None else group.generators)
    if group.order > bound:
        raise ResourceLimitExceeded("coset geometry group order", bound)
    if parabolics is None:
        parabolics = maximal_parabolics(len(generators))
    return CosetGeometry(group, generators, parabolics)


def is_thin(geometry: CosetGeometry) -> bool:
    """Every flag of corank 1 lies in exactly two chambers."""
    all_types = tuple(range(geometry.rank))
    extensions: Counter[tuple[Types, Flag]] = Counter()
    for chamber in geometry.chambers:
        for dropped in all_types:
            types = all_types[:dropped] + all_types[dropped + 1 :]
            extensions[types, chamber[:dropped] + chamber[dropped + 1 :]] += 1

    for dropped in all_types:
        types = all_types[:dropped] + all_types[dropped + 1 :]
        for flag in geometry.flags[types]:
            if extensions[types, flag] != 2:
                logger.debug(
                    "Flag %s of type %s is in %d chambers",
                    flag,
                    types,
                    extensions[types, flag],
                )
                return False
    return True


def _residue_connected(geometry: CosetGeometry, types: Types, flag: Flag) -> bool:
    remaining = [kind for kind in range(geometry.rank) if kind not in types]
    members = {
        kind: sorted(geometry.candidates(types, flag, kind)) for kind in remaining
    }
    if any(not elements for elements in members.values()):
        return False

    offsets: dict[int, int] = {}
    total = 0
    for kind in remaining:
        offsets[kind] = total
        total += len(members[kind])
    position = {
        (kind, element): offsets[kind] + rank
        for kind in remaining
        for rank, element in enumerate(members[kind])
    }

    merger = UnionFind(total)
    for first, second in combinations(remaining, 2):
        allowed = set(members[second])
        for a in members[first]:
            for b in geometry.incidence[first, second].get(a, frozenset()) & allowed:
                merger.union(position[first, a], position[second, b])
    return len(merger) == 1


def is_residually_connected(geometry: CosetGeometry) -> bool:
    for types, flags in geometry.flags.items():
        if geometry.rank - len(types) < 2:
            continue
        for flag in flags:
            if not _residue_connected(geometry, types, flag):
                logger.debug(
                    "Residue of flag %s of type %s is disconnected", flag, types
                )
                return False
    return True


def transitive_types(geometry: CosetGeometry) -> dict[Types, bool]:
    """Whether the group is transitive on the flags of each type set."""
    actions = [geometry.coset_action(gen) for gen in geometry.generators]
    result: dict[Types, bool] = {}
    for types, flags in geometry.flags.items():
        if not flags:
            result[types] = True
            continue
        seen = {flags[0]}
        queue = [flags[0]]
        while queue:
            flag = queue.pop()
            for action in actions:
                image = tuple(
                    int(action[kind][element]) for kind, element in zip(types, flag)
                )
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        result[types] = len(seen) == len(flags)
    return result


@dataclass(frozen=True)
class GeometryProperties:
    thin: bool
    residually_connected: bool
    flag_transitive: bool
    chamber_transitive: bool
    chambers: int
    borel_order: int
    group_order: int

    @property
    def borel_accounting(self) -> bool:
        """Chambers times |B| is |G|, with B the trivial meet of all parabolics."""
        return self.borel_order == 1 and self.chambers * self.borel_order == (
            self.group_order
        )


def geometry_properties(geometry: CosetGeometry) -> GeometryProperties:
    transitive = transitive_types(geometry)
    properties = GeometryProperties(
        thin=is_thin(geometry),
        residually_connected=is_residually_connected(geometry),
        flag_transitive=all(transitive.values()),
        chamber_transitive=transitive[tuple(range(geometry.rank))],
        chambers=len(geometry.chambers),
        borel_order=geometry.borel_order,
        group_order=geometry.group.order,
    )
    logger.info(
        "Geometry of order %d: thin %s, residually connected %s, flag-transitive %s",
        geometry.group.order,
        properties.thin,
        properties.residually_connected,
        properties.flag_transitive,
    )
    return properties


@dataclass(frozen=True)
class CertificationReport:
    intersection_property: LayerStatus
    thin: Optional[bool] = None
    residually_connected: Optional[bool] = None
    flag_transitive: Optional[bool] = None
    chambers: Optional[int] = None
    borel_order: Optional[int] = None
    borel_accounting: Optional[bool] = None
    residual_connectedness: str = RESIDUAL_CONNECTEDNESS
    detail: str = ""

    @property
    def geometry_checked(self) -> bool:
        return self.thin is not None

    @property
    def hypertope_certified(self) -> bool:
        return (
            self.intersection_property is LayerStatus.PASSED
            and self.thin is True
            and self.residually_connected is True
            and self.flag_transitive is True
            and self.borel_accounting is True
        )


def certify(
    group: PermGroup,
    intersection: IntersectionCheck,
    bound: int = DEFAULT_GEOMETRY_BOUND,
) -> CertificationReport:
    """Combine the intersection property with the exhaustive geometry checks."""
    try:
        geometry = build_geometry(group, bound=bound)
    except ResourceLimitExceeded as error:
        return CertificationReport(intersection.status, detail=str(error))
    properties = geometry_properties(geometry)
    return CertificationReport(
        intersection_property=intersection.status,
        thin=properties.thin,
        residually_connected=properties.residually_connected,
        flag_transitive=properties.flag_transitive,
        chambers=properties.chambers,
        borel_order=properties.borel_order,
        borel_accounting=properties.borel_accounting,
        detail=intersection.detail,
    )
