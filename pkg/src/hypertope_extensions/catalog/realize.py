import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Literal, Optional, Sequence

import numpy as np

from hypertope_extensions.catalog.families import FamilyDescriptor
from hypertope_extensions.config import DEFAULT_COSET_LIMIT
from hypertope_extensions.errors import InvariantViolation, ResourceLimitExceeded
from hypertope_extensions.flags import Family
from hypertope_extensions.fp.coset_table import todd_coxeter
from hypertope_extensions.fp.homomorphism import relators_hold
from hypertope_extensions.fp.presentation import (
    Presentation,
    coxeter_presentation,
    string_matrix,
)
from hypertope_extensions.fp.words import evaluate
from hypertope_extensions.perm.chain import PermGroup, build_chain
from hypertope_extensions.perm.permutation import POINT_DTYPE, Permutation, compose

logger = logging.getLogger(__name__)

Method = Literal["coordinates", "cosets"]


@dataclass(frozen=True)
class RealizedPolytope:
    """Faithful vertex action of a catalogued polytope.

    ``taus`` are the distinguished generators, ``base_vertex`` is the vertex
    fixed by ``tau_1, ..., tau_{n-1}`` and ``alpha`` the central involution.
    """

    descriptor: FamilyDescriptor
    group: PermGroup
    taus: tuple[Permutation, ...]
    base_vertex: int
    alpha: Permutation
    presentation: Presentation
    method: Method

    @property
    def degree(self) -> int:
        return self.group.degree

    @property
    def beta(self) -> Permutation:
        return evaluate(self.descriptor.beta_word, self.taus)

    @cached_property
    def stabilizer(self) -> PermGroup:
        """The vertex stabilizer ``G_0 = <tau_1, ..., tau_{n-1}>``."""
        return build_chain(self.taus[1:], degree=self.degree)

    def antipode(self, vertex: int) -> int:
        return self.alpha(vertex)


def coxeter_matrix(gens: Sequence[Permutation]) -> list[list[int]]:
    """Orders of the pairwise products of involutory generators."""
    for gen in gens:
        if not gen.is_involution():
            raise ValueError(f"Generator {gen} is not an involution.")
    return [
        [1 if i == j else compose(gi, gj).order() for j, gj in enumerate(gens)]
        for i, gi in enumerate(gens)
    ]


def _cube_coordinates(n: int) -> list[Permutation]:
    """Signed-coordinate action on ``{+1,-1}^n``.

    Vertex ``v`` has bit ``k`` set when coordinate ``k`` is ``-1``; ``tau_0``
    negates the first coordinate and ``tau_j`` swaps coordinates ``j-1`` and
    ``j``.
    """
    vertices = np.arange(2**n, dtype=POINT_DTYPE)
    taus = [Permutation(vertices ^ 1)]
    for j in range(1, n):
        low = (vertices >> (j - 1)) & 1
        high = (vertices >> j) & 1
        differs = low != high
        swapped = np.where(differs, vertices ^ ((1 << (j - 1)) | (1 << j)), vertices)
        taus.append(Permutation(swapped))
    return taus


def _coset_action(
    descriptor: FamilyDescriptor, presentation: Presentation, limit: int
) -> list[Permutation]:
    stabilizer = [(index,) for index in range(1, descriptor.rank)]
    table = todd_coxeter(presentation, stabilizer, limit=limit)
    if not table.is_complete:
        raise ResourceLimitExceeded("vertex coset enumeration", limit)
    return table.action()


def _check(condition: bool, check: str, detail: str = "") -> None:
    if not condition:
        raise InvariantViolation(check, detail)


def _central_involution(
    descriptor: FamilyDescriptor, taus: Sequence[Permutation]
) -> Permutation:
    alpha = evaluate(descriptor.alpha_word, taus)
    _check(alpha.is_involution(), "alpha-involution", f"{descriptor.name}")
    _check(
        all(alpha.commutes_with(tau) for tau in taus),
        "alpha-central",
        f"{descriptor.name}",
    )
    _check(
        not alpha.fixed_points(),
        "alpha-fixed-point-free",
        f"{descriptor.name}",
    )
    return alpha


def central_involution(polytope: RealizedPolytope) -> Permutation:
    """Evaluate the alpha word; it must be a central fixed-point-free involution."""
    return _central_involution(polytope.descriptor, polytope.taus)


def realize(
    descriptor: FamilyDescriptor,
    method: Optional[Method] = None,
    coset_limit: int = DEFAULT_COSET_LIMIT,
) -> RealizedPolytope:
    """Build and certify the vertex action of ``descriptor``.

    The cube defaults to its signed-coordinate model; every other family is
    realized on the cosets of ``<tau_1, ..., tau_{n-1}>``.
    """
    if method is None:
        method = "coordinates" if descriptor.family is Family.CUBE else "cosets"
    if method == "coordinates" and descriptor.family is not Family.CUBE:
        raise ValueError("Only the cube family has a coordinate model.")

    presentation = coxeter_presentation(string_matrix(descriptor.schlafli))
    if method == "coordinates":
        taus = _cube_coordinates(descriptor.rank)
    else:
        taus = _coset_action(descriptor, presentation, coset_limit)

    base_vertex = 0
    group = build_chain(taus)

    _check(
        group.degree == descriptor.vertex_count,
        "degree",
        f"{group.degree} != {descriptor.vertex_count}",
    )
    _check(
        group.order == descriptor.expected_order,
        "faithful-order",
        f"{group.order} != {descriptor.expected_order}",
    )
    _check(relators_hold(presentation, taus), "coxeter-relators")
    _check(
        all(tau(base_vertex) == base_vertex for tau in taus[1:]),
        "base-vertex-stabilizer",
    )
    alpha = _central_involution(descriptor, taus)

    logger.info(
        "Realized %s on %d vertices (%s), order %d",
        descriptor.name,
        group.degree,
        method,
        group.order,
    )
    return RealizedPolytope(
        descriptor=descriptor,
        group=group,
        taus=tuple(taus),
        base_vertex=base_vertex,
        alpha=alpha,
        presentation=presentation,
        method=method,
    )
