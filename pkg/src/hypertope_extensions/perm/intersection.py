# pylint: disable=protected-access
import logging

import numpy as np

from hypertope_extensions.config import DEFAULT_INTERSECTION_BOUND
from hypertope_extensions.errors import DegreeMismatchError, ResourceLimitExceeded
from hypertope_extensions.perm.chain import PermGroup, build_chain
from hypertope_extensions.perm.permutation import POINT_DTYPE, Permutation

logger = logging.getLogger(__name__)


class _Search:
    """Backtrack over the chain of ``a`` pruned by partial sifts in ``b``.

    ``b`` must share the base of ``a`` as a prefix. An element of ``a`` is the
    product ``u_{k-1} * ... * u_0`` of transversal entries; the suffix
    ``u_i * ... * u_0`` already fixes the images of the first ``i + 1`` base
    points, so each partial choice can be tested against ``b``'s orbits.
    """

    def __init__(self, a: PermGroup, b: PermGroup, limit: int):
        self.a = a
        self.b = b
        self.limit = limit
        self.visited = 0
        self.found: list[Permutation] = []
        self.result = build_chain([], degree=a.degree)

    def run(self) -> PermGroup:
        identity = np.arange(self.a.degree, dtype=POINT_DTYPE)
        self._descend(0, identity, identity)
        logger.debug(
            "Intersection search visited %d nodes, found order %d",
            self.visited,
            self.result.order,
        )
        return self.result

    def _descend(self, depth: int, suffix: np.ndarray, stripper: np.ndarray) -> None:
        a_levels = self.a._levels
        if depth == len(a_levels):
            self._accept(suffix)
            return

        a_level = a_levels[depth]
        b_level = self.b._levels[depth]
        for point in a_level.orbit:
            self.visited += 1
            if self.visited > self.limit:
                raise ResourceLimitExceeded("intersection backtrack", self.limit)

            candidate = suffix[a_level.transversal[point]]
            image = int(stripper[candidate[a_level.point]])
            inverse = b_level.inverse.get(image)
            if inverse is None:
                continue
            self._descend(depth + 1, candidate, inverse[stripper])

    def _accept(self, element: np.ndarray) -> None:
        perm = Permutation.from_array(element)
        if perm.is_identity() or not self.b.contains(perm):
            return
        if self.result.contains(perm):
            return
        self.found.append(perm)
        self.result = build_chain(self.found, degree=self.a.degree)


def subgroup_intersection(
    a: PermGroup, b: PermGroup, limit: int = DEFAULT_INTERSECTION_BOUND
) -> PermGroup:
    """Exact intersection of two permutation groups of the same degree.

    Raises :class:`ResourceLimitExceeded` when the backtrack search visits more
    than ``limit`` nodes.
    """
    if a.degree != b.degree:
        raise DegreeMismatchError(a.degree, b.degree)

    if a.is_subgroup_of(b):
        return a
    if b.is_subgroup_of(a):
        return b

    if b.order < a.order:
        a, b = b, a

    shared = build_chain(b.generators, degree=b.degree, base_prefix=a.base)
    return _Search(a, shared, limit).run()
