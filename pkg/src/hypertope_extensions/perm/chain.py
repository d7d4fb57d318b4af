import logging
from math import prod
from typing import Iterator, Optional, Sequence

import numpy as np

from hypertope_extensions.errors import DegreeMismatchError
from hypertope_extensions.fp.words import Word, evaluate
from hypertope_extensions.perm.permutation import (
    POINT_DTYPE,
    Permutation,
    orbit_with_transversal,
)

logger = logging.getLogger(__name__)


class _Level:
    """One level of a stabilizer chain.

    ``gens`` generate the pointwise stabilizer of the earlier base points,
    ``transversal[v]`` maps ``point`` to ``v`` and ``inverse[v]`` is its
    inverse. Entries are never replaced once added.
    """

    __slots__ = ("point", "gens", "orbit", "transversal", "inverse", "checked")

    def __init__(self, point: int, degree: int):
        identity = np.arange(degree, dtype=POINT_DTYPE)
        self.point = point
        self.gens: list[np.ndarray] = []
        self.orbit: list[int] = [point]
        self.transversal: dict[int, np.ndarray] = {point: identity}
        self.inverse: dict[int, np.ndarray] = {point: identity}
        self.checked: set[tuple[int, int]] = set()

    def add_generator(self, new_gen: np.ndarray) -> None:
        # Points already in the orbit are closed under the older generators.
        closed = len(self.orbit)
        self.gens.append(new_gen)
        position = 0
        while position < len(self.orbit):
            current = self.orbit[position]
            word = self.transversal[current]
            for gen in self.gens if position >= closed else (new_gen,):
                image = int(gen[current])
                if image in self.transversal:
                    continue
                element = gen[word]
                inverse = np.empty_like(element)
                inverse[element] = np.arange(element.size, dtype=POINT_DTYPE)
                self.transversal[image] = element
                self.inverse[image] = inverse
                self.orbit.append(image)
            position += 1


def _is_identity(array: np.ndarray, identity: np.ndarray) -> bool:
    return bool(np.array_equal(array, identity))


def _first_moved_point(array: np.ndarray) -> int:
    return int(np.flatnonzero(array != np.arange(array.size))[0])


class PermGroup:
    """Permutation group with a completed stabilizer chain.

    Immutable once built; use :func:`build_chain` to construct one.
    """

    def __init__(
        self,
        generators: Sequence[Permutation],
        degree: int,
        levels: list[_Level],
    ):
        self.generators: tuple[Permutation, ...] = tuple(generators)
        self.degree = degree
        self._levels = levels
        self._identity = np.arange(degree, dtype=POINT_DTYPE)
        self.order: int = prod((len(level.orbit) for level in levels), start=1)

    def __repr__(self) -> str:
        return (
            f"PermGroup(degree={self.degree}, order={self.order}, "
            f"generators={len(self.generators)})"
        )

    def __contains__(self, perm: Permutation) -> bool:
        return self.contains(perm)

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(level.point for level in self._levels)

    @property
    def strong_generators(self) -> list[Permutation]:
        seen: set[bytes] = set()
        result: list[Permutation] = []
        for level in self._levels:
            for gen in level.gens:
                key = gen.tobytes()
                if key not in seen:
                    seen.add(key)
                    result.append(Permutation.from_array(gen))
        return result

    @property
    def transversals(self) -> list[dict[int, Permutation]]:
        return [
            {
                point: Permutation.from_array(level.transversal[point])
                for point in level.orbit
            }
            for level in self._levels
        ]

    @property
    def basic_orbits(self) -> list[list[int]]:
        return [list(level.orbit) for level in self._levels]

    def is_trivial(self) -> bool:
        return self.order == 1

    def sift(self, perm: Permutation, start: int = 0) -> tuple[Permutation, int]:
        """Strip ``perm`` through the chain.

        Returns the residue and the level at which sifting stopped; the level
        equals the chain length when every base image was found.
        """
        if perm.degree != self.degree:
            raise DegreeMismatchError(self.degree, perm.degree)
        residue, level = _sift(self._levels, perm.images, start)
        return Permutation.from_array(residue), level

    def contains(self, perm: Permutation) -> bool:
        if perm.degree != self.degree:
            raise DegreeMismatchError(self.degree, perm.degree)
        residue, level = _sift(self._levels, perm.images, 0)
        return level == len(self._levels) and _is_identity(residue, self._identity)

    def orbit(self, point: int) -> list[int]:
        if not self.generators:
            return [point]
        orbit, _ = orbit_with_transversal(self.generators, point)
        return sorted(orbit)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(gen) for gen in self.generators)

    def same_group(self, other: "PermGroup") -> bool:
        return self.order == other.order and self.is_subgroup_of(other)

    def elements(self) -> Iterator[Permutation]:
        """Every element exactly once, in a deterministic order.

        Elements are the products ``u_{k-1} * ... * u_0`` of transversal
        entries, the last level varying slowest.
        """
        levels = self._levels

        def walk(index: int, prefix: np.ndarray) -> Iterator[Permutation]:
            if index < 0:
                yield Permutation.from_array(prefix)
                return
            level = levels[index]
            for point in level.orbit:
                yield from walk(index - 1, level.transversal[point][prefix])

        yield from walk(len(levels) - 1, self._identity.copy())

    def subgroup(
        self, gens: Sequence[Permutation], share_base: bool = False
    ) -> "PermGroup":
        return build_chain(
            gens,
            degree=self.degree,
            base_prefix=self.base if share_base else None,
        )


def _sift(
    levels: Sequence[_Level], element: np.ndarray, start: int
) -> tuple[np.ndarray, int]:
    for index in range(start, len(levels)):
        level = levels[index]
        image = int(element[level.point])
        inverse = level.inverse.get(image)
        if inverse is None:
            return element, index
        element = inverse[element]
    return element, len(levels)


def _schreier_sims(
    gens: list[np.ndarray], degree: int, base_prefix: Sequence[int]
) -> list[_Level]:
    identity = np.arange(degree, dtype=POINT_DTYPE)
    levels = [_Level(int(point), degree) for point in base_prefix]

    for gen in gens:
        if all(int(gen[level.point]) == level.point for level in levels):
            levels.append(_Level(_first_moved_point(gen), degree))

    for gen in gens:
        for level in levels:
            level.add_generator(gen)
            if int(gen[level.point]) != level.point:
                break

    index = len(levels) - 1
    while index >= 0:
        jump = _complete_level(levels, index, degree, identity)
        if jump is None:
            logger.debug(
                "Level %d complete: base point %d, orbit %d, %d generators",
                index,
                levels[index].point,
                len(levels[index].orbit),
                len(levels[index].gens),
            )
            index -= 1
        else:
            index = jump

    return levels


def _complete_level(
    levels: list[_Level], index: int, degree: int, identity: np.ndarray
) -> Optional[int]:
    """Sift every unchecked Schreier generator of level ``index``.

    Returns the level to resume from when a new strong generator was added,
    or ``None`` once the level is complete.
    """
    level = levels[index]
    position = 0
    while position < len(level.orbit):
        beta = level.orbit[position]
        word = level.transversal[beta]
        for gen_index, gen in enumerate(level.gens):
            if (beta, gen_index) in level.checked:
                continue
            level.checked.add((beta, gen_index))

            gamma = int(gen[beta])
            schreier = level.inverse[gamma][gen[word]]
            if _is_identity(schreier, identity):
                continue

            residue, drop = _sift(levels, schreier, index + 1)
            if drop == len(levels) and _is_identity(residue, identity):
                continue

            if drop == len(levels):
                levels.append(_Level(_first_moved_point(residue), degree))
            for target in range(index + 1, drop + 1):
                levels[target].add_generator(residue)
            return drop
        position += 1
    return None


def build_chain(
    gens: Sequence[Permutation],
    degree: Optional[int] = None,
    base_prefix: Optional[Sequence[int]] = None,
) -> PermGroup:
    """Deterministic Schreier-Sims.

    New base points are the smallest point moved by the element that needs
    them: first by each generator fixing the base so far, in generator order,
    then by each Schreier residue that sifts through. The base is therefore
    not sorted, nor the smallest moved points of the group. ``base_prefix``
    forces the first base points, so that chains of different groups can
    share a base.
    """
    if degree is None:
        if not gens:
            raise ValueError("An empty generator list needs an explicit degree.")
        degree = gens[0].degree
    for gen in gens:
        if gen.degree != degree:
            raise DegreeMismatchError(degree, gen.degree)

    identity = np.arange(degree, dtype=POINT_DTYPE)
    arrays = [gen.images for gen in gens if not _is_identity(gen.images, identity)]
    levels = _schreier_sims(arrays, degree, base_prefix or ())
    group = PermGroup(gens, degree, levels)
    logger.debug(
        "Built chain of degree %d: base length %d, order %d",
        degree,
        len(levels),
        group.order,
    )
    return group


def contains(group: PermGroup, perm: Permutation) -> bool:
    return group.contains(perm)


def generated_subgroup_order(group: PermGroup, words: Sequence[Word]) -> int:
    """Order of the subgroup generated by ``words`` at the group generators."""
    elements = [evaluate(word, group.generators, degree=group.degree) for word in words]
    return build_chain(elements, degree=group.degree).order
