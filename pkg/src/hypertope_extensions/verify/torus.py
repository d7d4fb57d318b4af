"""Classification of regular maps ``{4,4}_(a,b)`` by their automorphism group."""

import logging
from typing import Sequence

from hypertope_extensions.errors import UnclassifiableResidueError
from hypertope_extensions.perm.chain import PermGroup
from hypertope_extensions.perm.permutation import Permutation, product

logger = logging.getLogger(__name__)


def torus_relations_hold(sigmas: Sequence[Permutation]) -> bool:
    s0, s1, s2 = sigmas
    degree = s0.degree
    return (
        product([s0, s1], degree).power(4).is_identity()
        and product([s1, s2], degree).power(4).is_identity()
        and product([s0, s2], degree).power(2).is_identity()
    )


def translation(sigmas: Sequence[Permutation]) -> Permutation:
    """``sigma_0 sigma_1 sigma_2 sigma_1``, a unit translation of the square tiling."""
    s0, s1, s2 = sigmas
    return product([s0, s1, s2, s1], s0.degree)


def classify_torus_44(
    residue: PermGroup, sigmas: "Sequence[Permutation] | None" = None
) -> tuple[int, int]:
    """Return ``(a, b)`` with the residue the group of ``{4,4}_(a,b)``.

    ``{4,4}_(k,0)`` has order ``8k^2`` and ``{4,4}_(k,k)`` order ``16k^2``,
    where ``k`` (resp. ``2k``) is the order of the unit translation.
    """
    sigmas = tuple(sigmas if sigmas is not None else residue.generators)
    if len(sigmas) != 3:
        raise ValueError(f"A rank 3 residue needs 3 generators, got {len(sigmas)}.")
    if not torus_relations_hold(sigmas):
        raise ValueError("The generators do not satisfy the {4,4} relations.")

    k = translation(sigmas).order()
    order = residue.order
    if order == 8 * k * k:
        shape = (k, 0)
    elif order == 4 * k * k and k % 2 == 0:
        shape = (k // 2, k // 2)
    else:
        raise UnclassifiableResidueError(order, k)
    logger.debug("Residue of order %d is {4,4}_%s", order, shape)
    return shape
