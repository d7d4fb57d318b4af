import logging
from dataclasses import dataclass, field
from typing import Sequence

from hypertope_extensions.fp.presentation import Presentation
from hypertope_extensions.fp.words import Expr, evaluate_expr
from hypertope_extensions.perm.chain import PermGroup, build_chain
from hypertope_extensions.perm.permutation import Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EpimorphismReport:
    relators_hold: bool
    generates: bool
    generated_order: int
    target_order: int
    failed_relators: tuple[int, ...] = field(default=())

    @property
    def is_epimorphism(self) -> bool:
        return self.relators_hold and self.generates


def failed_relators(
    relators: Sequence[Expr], images: Sequence[Permutation]
) -> list[int]:
    """Indices of the relators that do not evaluate to the identity."""
    return [
        index
        for index, relator in enumerate(relators)
        if not evaluate_expr(relator, images).is_identity()
    ]


def relators_hold(presentation: Presentation, images: Sequence[Permutation]) -> bool:
    if len(images) != presentation.ngens:
        raise ValueError(
            f"Expected {presentation.ngens} images, got {len(images)}."
        )
    if not all(image.power(2).is_identity() for image in images):
        return False
    return not failed_relators(presentation.relators, images)


def verify_epimorphism(
    presentation: Presentation,
    images: Sequence[Permutation],
    target: PermGroup,
) -> EpimorphismReport:
    """Check that the generator assignment defines a surjection onto ``target``.

    Failures are report fields, never exceptions.
    """
    if len(images) != presentation.ngens:
        raise ValueError(
            f"Expected {presentation.ngens} images, got {len(images)}."
        )

    involutions = all(image.power(2).is_identity() for image in images)
    failed = tuple(failed_relators(presentation.relators, images))
    if list(images) == list(target.generators):
        generated = target
    else:
        generated = build_chain(images, degree=target.degree)
    generates = generated.order == target.order and generated.is_subgroup_of(target)

    report = EpimorphismReport(
        relators_hold=involutions and not failed,
        generates=generates,
        generated_order=generated.order,
        target_order=target.order,
        failed_relators=failed,
    )
    logger.debug(
        "Epimorphism check: relators %s, generates %s (%d of %d)",
        report.relators_hold,
        report.generates,
        report.generated_order,
        report.target_order,
    )
    return report
