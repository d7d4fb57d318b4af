"""Diagonal classes of a vertex-transitive polytope.

Two vertex pairs ``{F0, v}`` and ``{F0, w}`` lie in the same diagonal class
when ``w`` is in ``G_0 t_v G_0`` or ``G_0 t_v^-1 G_0``, where ``G_0`` is the
stabilizer of ``F0`` and ``t_v`` maps ``F0`` to ``v``. On vertices this is
the ``G_0``-orbit of ``v`` merged with the ``G_0``-orbit of ``F0 t_v^-1``.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from hypertope_extensions.catalog.realize import RealizedPolytope
from hypertope_extensions.errors import InvariantViolation, RepresentativeError
from hypertope_extensions.perm.permutation import (
    Permutation,
    orbit_with_transversal,
    orbits,
)
from hypertope_extensions.unionfind import UnionFind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiagonalClassification:
    """Partition of the non-base vertices into diagonal classes.

    ``beta_reps[k]`` is the smallest ``i >= 1`` with ``F0 beta^i`` in
    ``classes[k]``.
    """

    classes: tuple[tuple[int, ...], ...]
    antipodal_index: int
    edge_index: int
    beta: Permutation
    beta_reps: tuple[int, ...]

    def class_of(self, vertex: int) -> int:
        for index, block in enumerate(self.classes):
            if vertex in block:
                return index
        raise ValueError(f"Vertex {vertex} is not in any diagonal class.")

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(block) for block in self.classes)

    @property
    def antipodal_exponent(self) -> int:
        return self.beta_reps[self.antipodal_index]

    @property
    def extra_exponents(self) -> tuple[int, ...]:
        """Representatives of the classes that are neither edges nor antipodal."""
        return tuple(
            sorted(
                exponent
                for index, exponent in enumerate(self.beta_reps)
                if index not in (self.edge_index, self.antipodal_index)
            )
        )


def _merged_classes(polytope: RealizedPolytope) -> list[list[int]]:
    base = polytope.base_vertex
    degree = polytope.degree
    stabilizer_gens = polytope.taus[1:]
    stabilizer_orbits = orbits(stabilizer_gens, degree)
    orbit_of = {
        vertex: index
        for index, orbit in enumerate(stabilizer_orbits)
        for vertex in orbit
    }
    _, transversal = orbit_with_transversal(polytope.taus, base)

    merger = UnionFind(len(stabilizer_orbits))
    for index, orbit in enumerate(stabilizer_orbits):
        vertex = orbit[0]
        if vertex == base:
            continue
        partner = transversal[vertex].inverse()(base)
        merger.union(index, orbit_of[partner])

    classes = [
        sorted(vertex for index in block for vertex in stabilizer_orbits[index])
        for block in merger.blocks()
    ]
    return sorted(
        (block for block in classes if base not in block),
        key=lambda block: block[0],
    )


def _smallest_exponents(
    polytope: RealizedPolytope, classes: Sequence[Sequence[int]], beta: Permutation
) -> tuple[int, ...]:
    class_of = {
        vertex: index for index, block in enumerate(classes) for vertex in block
    }
    reps: list[Optional[int]] = [None] * len(classes)
    base = polytope.base_vertex
    point = base
    for exponent in range(1, beta.order() + 1):
        point = beta(point)
        if point == base:
            break
        index = class_of[point]
        if reps[index] is None:
            reps[index] = exponent

    if any(rep is None for rep in reps):
        reached = sorted(rep for rep in reps if rep is not None)
        raise RepresentativeError(
            polytope.descriptor.name,
            reached,
            f"Powers of beta reach {len(reached)} of {len(classes)} diagonal "
            "classes.",
            classes=len(classes),
        )
    return tuple(rep for rep in reps if rep is not None)


def distance_classes(n: int, base: int = 0) -> list[list[int]]:
    """Vertices of the signed-coordinate cube grouped by squared distance to ``base``.

    Bit ``k`` of a vertex set means coordinate ``k`` is ``-1``.
    """
    vertices = np.arange(2**n)
    coordinates = 1 - 2 * ((vertices[:, None] >> np.arange(n)) & 1)
    distances = ((coordinates - coordinates[base]) ** 2).sum(axis=1)
    return [
        np.flatnonzero(distances == distance).tolist()
        for distance in np.unique(distances[distances > 0])
    ]


def diagonal_classes(polytope: RealizedPolytope) -> DiagonalClassification:
    classes = _merged_classes(polytope)
    if polytope.method == "coordinates":
        expected = distance_classes(polytope.descriptor.rank, polytope.base_vertex)
        if sorted(classes) != sorted(expected):
            raise InvariantViolation(
                "cube-distance-classes", f"{polytope.descriptor.name}"
            )
    beta = polytope.beta
    reps = _smallest_exponents(polytope, classes, beta)

    def index_of(vertex: int) -> int:
        return next(index for index, block in enumerate(classes) if vertex in block)

    classification = DiagonalClassification(
        classes=tuple(tuple(block) for block in classes),
        antipodal_index=index_of(polytope.alpha(polytope.base_vertex)),
        edge_index=index_of(polytope.taus[0](polytope.base_vertex)),
        beta=beta,
        beta_reps=reps,
    )
    logger.info(
        "%s has %d diagonal classes of sizes %s",
        polytope.descriptor.name,
        len(classes),
        list(classification.sizes),
    )
    return classification


def validate_transversal(
    polytope: RealizedPolytope,
    classification: DiagonalClassification,
    exponents: Sequence[int],
    error_handler: Optional[Callable[[Exception], None]] = None,
) -> None:
    """Check that ``F0 beta^i`` for the listed ``i`` hits every class exactly once."""
    base = polytope.base_vertex
    vertices = [classification.beta.power(exponent)(base) for exponent in exponents]
    hit = [
        classification.class_of(vertex) if vertex != base else -1
        for vertex in vertices
    ]

    if sorted(hit) != list(range(len(classification.classes))):
        error = RepresentativeError(
            polytope.descriptor.name,
            exponents,
            f"Classes hit: {hit}; {len(classification.classes)} classes.",
        )
        if error_handler:
            error_handler(error)
            return
        raise error


def beta_representatives(
    polytope: RealizedPolytope, classification: DiagonalClassification
) -> list[int]:
    """Smallest beta exponents, one per class, in increasing order.

    The published exponent list of the family is validated as a transversal.
    """
    validate_transversal(
        polytope, classification, polytope.descriptor.diagonal_exponents
    )
    return sorted(classification.beta_reps)


def antipodal_class(
    polytope: RealizedPolytope, classification: DiagonalClassification
) -> int:
    return classification.class_of(polytope.alpha(polytope.base_vertex))
