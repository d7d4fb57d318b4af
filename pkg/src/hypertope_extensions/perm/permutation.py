import logging
from functools import reduce
from math import lcm
from typing import Iterable, Optional, Sequence

import numpy as np

from hypertope_extensions.errors import DegreeMismatchError

logger = logging.getLogger(__name__)

POINT_DTYPE = np.intp


class Permutation:
    """Bijection on ``{0, ..., degree - 1}`` stored as its image array.

    Permutations act on the right: ``p * q`` applies ``p`` first, then ``q``.
    """

    __slots__ = ("images", "_hash")

    images: np.ndarray

    def __init__(self, images: "Iterable[int] | np.ndarray", validate: bool = True):
        array = np.array(images, dtype=POINT_DTYPE)
        if validate:
            if array.ndim != 1:
                raise ValueError("Permutation images must be one-dimensional.")
            seen = np.zeros(array.size, dtype=bool)
            if array.size and (array.min() < 0 or array.max() >= array.size):
                raise ValueError("Permutation images must lie in range(degree).")
            seen[array] = True
            if not seen.all():
                raise ValueError("Permutation images must be a bijection.")
        array.setflags(write=False)
        self.images = array
        self._hash: Optional[int] = None

    @classmethod
    def from_array(cls, array: np.ndarray) -> "Permutation":
        """Wrap an image array already known to be a bijection, without copying."""
        perm = cls.__new__(cls)
        array.setflags(write=False)
        perm.images = array
        perm._hash = None
        return perm

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls.from_array(np.arange(degree, dtype=POINT_DTYPE))

    @classmethod
    def from_cycles(
        cls, degree: int, cycles: Iterable[Sequence[int]]
    ) -> "Permutation":
        images = np.arange(degree, dtype=POINT_DTYPE)
        for cycle in cycles:
            for position, point in enumerate(cycle):
                images[point] = cycle[(position + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self) -> int:
        return int(self.images.size)

    def __call__(self, point: int) -> int:
        return int(self.images[point])

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, exponent: int) -> "Permutation":
        return self.power(exponent)

    def __invert__(self) -> "Permutation":
        return self.inverse()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return bool(np.array_equal(self.images, other.images))

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images.tobytes())
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        return self.images.tolist() < other.images.tolist()

    def __repr__(self) -> str:
        return f"Permutation({self.images.tolist()!r})"

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join(
            "(" + " ".join(str(point) for point in cycle) + ")" for cycle in cycles
        )

    def inverse(self) -> "Permutation":
        inverse = np.empty_like(self.images)
        inverse[self.images] = np.arange(self.images.size, dtype=POINT_DTYPE)
        return Permutation.from_array(inverse)

    def power(self, exponent: int) -> "Permutation":
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = self.identity(self.degree)
        while exponent:
            if exponent & 1:
                result = compose(result, base)
            base = compose(base, base)
            exponent >>= 1
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point."""
        images = self.images.tolist()
        visited = [False] * len(images)
        result: list[tuple[int, ...]] = []
        for start in range(len(images)):
            if visited[start] or images[start] == start:
                continue
            cycle = [start]
            visited[start] = True
            point = images[start]
            while point != start:
                visited[point] = True
                cycle.append(point)
                point = images[point]
            result.append(tuple(cycle))
        return result

    def order(self) -> int:
        return reduce(lcm, (len(cycle) for cycle in self.cycles()), 1)

    def is_identity(self) -> bool:
        return bool(
            np.array_equal(self.images, np.arange(self.images.size, dtype=POINT_DTYPE))
        )

    def is_involution(self) -> bool:
        return not self.is_identity() and compose(self, self).is_identity()

    def fixed_points(self) -> list[int]:
        return np.flatnonzero(self.images == np.arange(self.images.size)).tolist()

    def moved_points(self) -> list[int]:
        return np.flatnonzero(self.images != np.arange(self.images.size)).tolist()

    def commutes_with(self, other: "Permutation") -> bool:
        return compose(self, other) == compose(other, self)

    def conjugate(self, other: "Permutation") -> "Permutation":
        """Return ``other^-1 * self * other``."""
        return compose(compose(other.inverse(), self), other)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    if p.degree != q.degree:
        raise DegreeMismatchError(p.degree, q.degree)
    return Permutation.from_array(q.images[p.images])


def product(perms: Iterable[Permutation], degree: int) -> Permutation:
    result = Permutation.identity(degree)
    for perm in perms:
        result = compose(result, perm)
    return result


def orbit_with_transversal(
    gens: Sequence[Permutation], point: int
) -> tuple[list[int], dict[int, Permutation]]:
    """Orbit of ``point`` in breadth-first order and a transversal into it.

    ``transversal[v]`` maps ``point`` to ``v``.
    """
    if not gens:
        raise ValueError("At least one generator is required.")
    degree = gens[0].degree
    if not 0 <= point < degree:
        raise ValueError(f"Point {point} out of range for degree {degree}.")
    for gen in gens[1:]:
        if gen.degree != degree:
            raise DegreeMismatchError(degree, gen.degree)

    orbit = [point]
    transversal = {point: Permutation.identity(degree)}
    position = 0
    while position < len(orbit):
        current = orbit[position]
        for gen in gens:
            image = int(gen.images[current])
            if image not in transversal:
                transversal[image] = compose(transversal[current], gen)
                orbit.append(image)
        position += 1

    return orbit, transversal


def orbits(gens: Sequence[Permutation], degree: int) -> list[list[int]]:
    """Partition of ``range(degree)`` into orbits, each sorted, by minimum."""
    seen = [False] * degree
    result: list[list[int]] = []
    images = [gen.images.tolist() for gen in gens]
    for start in range(degree):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        position = 0
        while position < len(orbit):
            current = orbit[position]
            for gen_images in images:
                image = gen_images[current]
                if not seen[image]:
                    seen[image] = True
                    orbit.append(image)
            position += 1
        result.append(sorted(orbit))
    return result
