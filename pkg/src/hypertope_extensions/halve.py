"""Halving of an extension: ``rho_0`` is replaced by ``rho_0 rho_1 rho_0``."""

import logging
from dataclasses import dataclass
from typing import Sequence

from hypertope_extensions.catalog.realize import coxeter_matrix
from hypertope_extensions.config import DEFAULT_COSET_LIMIT
from hypertope_extensions.errors import InvariantViolation
from hypertope_extensions.extend import ExtensionArtifact, presentation_order_layer
from hypertope_extensions.flags import Family, L3Strategy, LayerStatus
from hypertope_extensions.fp.homomorphism import verify_epimorphism
from hypertope_extensions.fp.presentation import Presentation, coxeter_relators
from hypertope_extensions.fp.words import (
    Expr,
    Gen,
    Power,
    Seq,
    evaluate_expr,
    gens,
    inverse,
    power,
    seq,
)
from hypertope_extensions.layers import LayeredReport, LayerResult
from hypertope_extensions.perm.chain import PermGroup, build_chain
from hypertope_extensions.perm.permutation import Permutation, compose

logger = logging.getLogger(__name__)

HALVED_LABEL = "rt0"

HALVING_PROVENANCE = "Sec 2.3: H(P) has index 2 in G(P) iff p_1 is even"


def halved_labels(ngens: int) -> tuple[str, ...]:
    return (HALVED_LABEL,) + tuple(f"r{index}" for index in range(1, ngens))


def y_matrix(schlafli: Sequence[int]) -> list[list[int]]:
    """Coxeter matrix of the halved diagram of a string type ``{4, p_2, ...}``.

    ``rho~_0`` commutes with ``rho_1`` and joins ``rho_2`` with the label
    ``p_2``; ``rho_1, ..., rho_n`` keep their string diagram.
    """
    ngens = len(schlafli) + 1
    matrix = [[1 if i == j else 2 for j in range(ngens)] for i in range(ngens)]
    for index in range(1, len(schlafli)):
        matrix[index][index + 1] = matrix[index + 1][index] = schlafli[index]
    matrix[0][2] = matrix[2][0] = schlafli[1]
    return matrix


def halved_type_label(schlafli: Sequence[int]) -> str:
    p = schlafli[1]
    rest = schlafli[2:]
    if not rest:
        return f"{{{p},{p}}}"
    return f"{{{p}/{p}," + ",".join(str(label) for label in rest) + "}"


@dataclass(frozen=True)
class HalvingArtifact:
    source: ExtensionArtifact
    generators: tuple[Permutation, ...]
    concrete: PermGroup
    presentation: Presentation
    diagram: tuple[tuple[int, ...], ...]

    @property
    def expected_order(self) -> int:
        return self.source.expected_order // 2

    @property
    def name(self) -> str:
        return f"H({self.source.spec.name})"

    @property
    def type_label(self) -> str:
        return halved_type_label(self.source.spec.schlafli)

    @property
    def expected_diagram(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row) for row in y_matrix(self.source.spec.schlafli))

    @property
    def diagram_matches(self) -> bool:
        return self.diagram == self.expected_diagram


def _tilde_beta(rank: int) -> Seq:
    return gens(0, *range(2, rank))


def _beta(rank: int) -> Seq:
    return gens(*range(1, rank))


def _beta_form_relator(rank: int, exponent: int, k: int, antipodal: bool) -> Expr:
    """``(beta~^-i beta^i)^k``, or ``(beta~^a beta^a)^k`` for the antipodal class."""
    tilde = _tilde_beta(rank)
    tilde_part = (
        power(tilde, exponent) if antipodal else power(inverse(tilde), exponent)
    )
    return Power(seq(tilde_part, power(_beta(rank), exponent)), k)


def _polygon_relators(p: int, s: int) -> list[Expr]:
    def skew(j: int, k: int) -> Expr:
        return Power(
            seq(
                power(gens(0, 2), j - 1),
                Gen(0),
                Gen(1),
                power(gens(2, 1), j - 1),
            ),
            k,
        )

    return [skew(j, 2) for j in range(2, p)] + [skew(p, s)]


def _orthoplex_relator(rank: int, s: int) -> Expr:
    n = rank - 1
    return Power(gens(0, *range(2, n + 1), *range(n - 1, 0, -1)), 2 * s)


def halving_presentation(artifact: ExtensionArtifact) -> Presentation:
    """Relator table of the halved group in generators ``rho~_0, rho_1, ..., rho_n``."""
    spec = artifact.spec
    descriptor = spec.base
    rank = spec.rank
    relators = coxeter_relators(y_matrix(spec.schlafli))
    if descriptor.family is Family.POLYGON:
        relators.extend(_polygon_relators(descriptor.parameter or 2, spec.s))
    elif descriptor.family is Family.ORTHOPLEX:
        relators.append(_orthoplex_relator(rank, spec.s))
    else:
        antipodal = descriptor.antipodal_exponent
        relators.extend(
            _beta_form_relator(rank, exponent, 2, antipodal=False)
            for exponent in descriptor.diagonal_exponents
            if exponent not in (1, antipodal)
        )
        relators.append(_beta_form_relator(rank, antipodal, spec.s, antipodal=True))
    return Presentation.create(rank, relators, halved_labels(rank))


def realize_halving(artifact: ExtensionArtifact) -> HalvingArtifact:
    rhos = artifact.generators
    tilde = compose(compose(rhos[0], rhos[1]), rhos[0])
    generators = (tilde,) + tuple(rhos[1:])
    concrete = build_chain(generators)
    if 2 * concrete.order != artifact.concrete.order:
        raise InvariantViolation(
            "halving-index",
            f"{concrete.order} * 2 != {artifact.concrete.order} "
            f"for {artifact.spec.name}",
        )
    diagram = tuple(tuple(row) for row in coxeter_matrix(generators))
    halving = HalvingArtifact(
        source=artifact,
        generators=generators,
        concrete=concrete,
        presentation=halving_presentation(artifact),
        diagram=diagram,
    )
    if not halving.diagram_matches:
        logger.error("%s has diagram %s", halving.name, diagram)
    logger.info("Halved %s, order %d", artifact.spec.name, concrete.order)
    return halving


def verify_halving(
    halving: HalvingArtifact,
    tc_limit: int = DEFAULT_COSET_LIMIT,
    strategy: L3Strategy = L3Strategy.TRIVIAL,
    enumerate_presentation: bool = True,
) -> LayeredReport:
    layers: list[LayerResult] = []
    tilde, first = halving.generators[0], halving.generators[1]

    epimorphism = verify_epimorphism(
        halving.presentation, halving.generators, halving.concrete
    )
    involution = tilde.is_involution() and tilde != first
    layers.append(
        LayerResult.check(
            "L1",
            epimorphism.relators_hold and involution,
            f"relators {epimorphism.relators_hold}, "
            f"failed {list(epimorphism.failed_relators)}, "
            f"rt0 involution distinct from r1 {involution}",
        )
    )
    layers.append(
        LayerResult.check(
            "L2",
            halving.concrete.order == halving.expected_order
            and halving.diagram_matches,
            f"order {halving.concrete.order}, expected {halving.expected_order} "
            f"({HALVING_PROVENANCE}); diagram {halving.type_label} "
            f"{halving.diagram_matches}",
            halving.concrete.order,
        )
    )

    if not enumerate_presentation:
        layers.append(LayerResult.skipped("L3", "not requested"))
    elif any(layer.status is LayerStatus.FAILED for layer in layers):
        layers.append(LayerResult.skipped("L3", "lower layers failed"))
    else:
        layers.append(
            presentation_order_layer(
                halving.presentation,
                halving.expected_order,
                halving.source.spec.base.expected_order,
                strategy,
                tc_limit,
            )
        )

    report = LayeredReport(halving.name, tuple(layers))
    report.log()
    return report


def halving_identities(halving: HalvingArtifact) -> dict[str, bool]:
    """Family-specific relations of the concrete halved group."""
    images = halving.generators
    spec = halving.source.spec
    family = spec.base.family
    s = spec.s

    def holds(expr: Expr) -> bool:
        return evaluate_expr(expr, images).is_identity()

    identities: dict[str, bool] = {}
    if family is Family.CUBE:
        identities["o(rt0 r2 r1 r2) = 4"] = (
            evaluate_expr(gens(0, 2, 1, 2), images).order() == 4
        )
        identities["o((rt0 r2 r1)^2) = 2"] = (
            evaluate_expr(Power(gens(0, 2, 1), 2), images).order() == 2
        )
        if spec.base.parameter == 3:
            identities[f"((rt0 r2 r3)^3 (r1 r2 r3)^3)^{s} = 1"] = holds(
                Power(seq(Power(gens(0, 2, 3), 3), Power(gens(1, 2, 3), 3)), s)
            )
    elif family is Family.ORTHOPLEX:
        identities[f"chain relator ^{2 * s} = 1"] = holds(
            _orthoplex_relator(spec.rank, s)
        )
    elif family is Family.CELL24:
        identities["(rt0 r2 r3 r4 r3 r2 r1)^4 = 1"] = holds(
            Power(gens(0, 2, 3, 4, 3, 2, 1), 4)
        )
    return identities
