"""The extension ``2^{P,G(s)}`` of a centrally symmetric polytope ``P``.

The concrete group acts on ``|V| + |V|*s`` points: the vertices of ``P``
followed by one block of ``2s`` points per antipodal pair ``{F, F alpha}``.
The dihedral group ``D_s`` acts regularly on a block: point ``k`` stands for
``r^k`` and point ``s + k`` for ``r^k a``. The smaller vertex of a pair acts
on its block as the reflection ``k <-> s + k``, the larger one as
``k -> s + (k - 1)``; their product has order ``s``. A vertex permutation
``tau`` is lifted by moving blocks along with their pairs, composed with the
swap ``k -> -k, s + k -> s + (-k - 1)`` whenever ``tau`` sends the smaller
vertex of a pair to the larger vertex of its image pair.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from hypertope_extensions.catalog.families import FamilyDescriptor
from hypertope_extensions.catalog.realize import RealizedPolytope, coxeter_matrix
from hypertope_extensions.config import DEFAULT_CENTRAL_BOUND, DEFAULT_COSET_LIMIT
from hypertope_extensions.diagonals import DiagonalClassification
from hypertope_extensions.errors import InvariantViolation
from hypertope_extensions.flags import Family, L3Strategy, LayerStatus
from hypertope_extensions.fp.coset_table import todd_coxeter
from hypertope_extensions.fp.homomorphism import verify_epimorphism
from hypertope_extensions.fp.presentation import (
    Presentation,
    coxeter_relators,
    string_matrix,
)
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
from hypertope_extensions.perm.permutation import (
    POINT_DTYPE,
    Permutation,
    compose,
    orbit_with_transversal,
)

logger = logging.getLogger(__name__)

ORDER_PROVENANCE = "Thm 8C5: (2s)^(|V|/2) * |G(P)|"

BETA_FORM_FAMILIES = frozenset(
    {
        Family.CUBE,
        Family.ICOSAHEDRON,
        Family.DODECAHEDRON,
        Family.CELL24,
        Family.CELL600,
        Family.CELL120,
    }
)


@dataclass(frozen=True)
class ExtensionSpec:
    base: FamilyDescriptor
    s: int

    def __post_init__(self):
        if self.s < 2:
            raise ValueError("The extension needs s >= 2.")

    @property
    def q(self) -> int:
        return self.base.vertex_count // 2

    @property
    def rank(self) -> int:
        """Number of generators ``rho_0, ..., rho_n``."""
        return self.base.rank + 1

    @property
    def schlafli(self) -> tuple[int, ...]:
        return (4,) + self.base.schlafli

    @property
    def expected_order(self) -> int:
        return (2 * self.s) ** self.q * self.base.expected_order

    @property
    def name(self) -> str:
        return f"2^{{{self.base.type_label},G({self.s})}}"

    @property
    def type_label(self) -> str:
        return "{" + ",".join(str(label) for label in self.schlafli) + "}"


@dataclass(frozen=True)
class BlockLayout:
    vertex_count: int
    s: int
    pairs: tuple[int, ...]

    @cached_property
    def pair_of(self) -> dict[int, int]:
        return {vertex: index for index, vertex in enumerate(self.pairs)}

    @property
    def degree(self) -> int:
        return self.vertex_count + 2 * self.s * len(self.pairs)

    def offset(self, pair: int) -> int:
        return self.vertex_count + 2 * self.s * pair


def _dihedral_images(s: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Block images of the low reflection, the high reflection and the swap."""
    k = np.arange(s, dtype=POINT_DTYPE)
    low = np.concatenate([s + k, k])
    high = np.concatenate([s + (k - 1) % s, (k + 1) % s])
    swap = np.concatenate([(-k) % s, s + (-k - 1) % s])
    return low, high, swap


class _Builder:
    def __init__(self, polytope: RealizedPolytope, s: int):
        self.polytope = polytope
        self.s = s
        alpha = polytope.alpha
        vertices = range(polytope.degree)
        self.low = [min(vertex, alpha(vertex)) for vertex in vertices]
        self.layout = BlockLayout(
            vertex_count=polytope.degree,
            s=s,
            pairs=tuple(sorted(set(self.low))),
        )
        self.low_images, self.high_images, self.swap_images = _dihedral_images(s)

    def identity(self) -> np.ndarray:
        return np.arange(self.layout.degree, dtype=POINT_DTYPE)

    def sigma(self, vertex: int) -> Permutation:
        layout = self.layout
        images = self.identity()
        offset = layout.offset(layout.pair_of[self.low[vertex]])
        block = self.low_images if self.low[vertex] == vertex else self.high_images
        images[offset : offset + 2 * self.s] = offset + block
        return Permutation.from_array(images)

    def lift(self, tau: Permutation) -> Permutation:
        layout = self.layout
        width = 2 * self.s
        images = self.identity()
        images[: layout.vertex_count] = tau.images
        for pair, low in enumerate(layout.pairs):
            moved = tau(low)
            target = layout.offset(layout.pair_of[self.low[moved]])
            block = (
                self.swap_images
                if self.low[moved] != moved
                else np.arange(width, dtype=POINT_DTYPE)
            )
            offset = layout.offset(pair)
            images[offset : offset + width] = target + block
        return Permutation.from_array(images)

    def generators(self) -> list[Permutation]:
        base = self.polytope.base_vertex
        return [self.sigma(base)] + [self.lift(tau) for tau in self.polytope.taus]

    def self_check(self, rhos: Sequence[Permutation]) -> None:
        """Check ``sigma_F sigma_{F alpha} = tau^-1 rho_0 alpha rho_0 alpha tau``.

        Here ``tau`` is a transversal element with ``F0 tau = F``.
        """
        polytope = self.polytope
        alpha = self.lift(polytope.alpha)
        core = compose(compose(compose(rhos[0], alpha), rhos[0]), alpha)
        _, transversal = orbit_with_transversal(polytope.taus, polytope.base_vertex)
        for vertex in range(polytope.degree):
            tau = self.lift(transversal[vertex])
            expected = compose(compose(tau.inverse(), core), tau)
            actual = compose(self.sigma(vertex), self.sigma(polytope.alpha(vertex)))
            if actual != expected:
                raise InvariantViolation(
                    "block-self-check", f"vertex {vertex} of {polytope.descriptor.name}"
                )


def realize_extension(polytope: RealizedPolytope, s: int) -> PermGroup:
    """Concrete ``D_s^q`` semidirect ``G(P)`` with generators ``rho_0, ..., rho_n``."""
    builder = _Builder(polytope, s)
    rhos = builder.generators()
    builder.self_check(rhos)
    return build_chain(rhos)


def _beta(rank: int) -> Seq:
    return gens(*range(1, rank))


def beta_power(rank: int, exponent: int) -> Expr:
    """``beta^exponent`` with ``beta = rho_1 ... rho_n``; negative exponents reverse."""
    beta = _beta(rank)
    if exponent < 0:
        return power(inverse(beta), -exponent)
    return power(beta, exponent)


def diagonal_relator(rank: int, exponent: int) -> Expr:
    """``(rho_0 beta^-i rho_0 beta^i)^2``."""
    return Power(
        seq(Gen(0), beta_power(rank, -exponent), Gen(0), beta_power(rank, exponent)), 2
    )


def antipodal_relator(rank: int, exponent: int, s: int) -> Expr:
    """``(rho_0 beta^a rho_0 beta^a)^s``."""
    return Power(
        seq(Gen(0), beta_power(rank, exponent), Gen(0), beta_power(rank, exponent)), s
    )


def _coxeter_part(spec: ExtensionSpec) -> list[Expr]:
    return coxeter_relators(string_matrix(spec.schlafli))


def extension_presentation(
    polytope: RealizedPolytope, classification: DiagonalClassification, s: int
) -> Presentation:
    """General recipe: Coxeter relators, one relator per diagonal class."""
    spec = ExtensionSpec(polytope.descriptor, s)
    relators = _coxeter_part(spec)
    relators.extend(
        diagonal_relator(spec.rank, exponent)
        for exponent in classification.extra_exponents
    )
    relators.append(
        antipodal_relator(spec.rank, classification.antipodal_exponent, s)
    )
    return Presentation.create(spec.rank, relators)


def _polygon_table(p: int, s: int) -> list[Expr]:
    def skew(j: int, exponent: int) -> Expr:
        return Power(seq(Gen(0), Gen(1), power(gens(2, 1), j - 1)), exponent)

    return [skew(j, 4) for j in range(2, p)] + [skew(p, 2 * s)]


def _orthoplex_table(rank: int, s: int) -> list[Expr]:
    n = rank - 1
    chain = list(range(0, n + 1)) + list(range(n - 1, 0, -1))
    return [Power(gens(*chain), 2 * s)]


def table_presentation(spec: ExtensionSpec) -> Presentation:
    """Relator table published for the family of ``spec.base``."""
    descriptor = spec.base
    relators = _coxeter_part(spec)
    if descriptor.family is Family.POLYGON:
        relators.extend(_polygon_table(descriptor.parameter or 2, spec.s))
    elif descriptor.family is Family.ORTHOPLEX:
        relators.extend(_orthoplex_table(spec.rank, spec.s))
    else:
        antipodal = descriptor.antipodal_exponent
        relators.extend(
            diagonal_relator(spec.rank, exponent)
            for exponent in descriptor.diagonal_exponents
            if exponent not in (1, antipodal)
        )
        relators.append(antipodal_relator(spec.rank, antipodal, spec.s))
    return Presentation.create(spec.rank, relators)


@dataclass(frozen=True)
class ExtensionArtifact:
    spec: ExtensionSpec
    polytope: RealizedPolytope
    classification: DiagonalClassification
    presentation: Presentation
    recipe: Presentation
    generators: tuple[Permutation, ...]
    concrete: PermGroup
    layout: BlockLayout

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def expected_order(self) -> int:
        return self.spec.expected_order

    @property
    def recipe_is_word_identical(self) -> bool:
        return self.recipe.equivalent_to(self.presentation)

    def sigma(self, vertex: int) -> Permutation:
        return _Builder(self.polytope, self.spec.s).sigma(vertex)

    def sigmas(self) -> list[Permutation]:
        builder = _Builder(self.polytope, self.spec.s)
        return [builder.sigma(vertex) for vertex in range(self.polytope.degree)]

    def central_element(self) -> Optional[Permutation]:
        """``prod (sigma_F sigma_{F alpha})^(s/2)`` over the pairs, for even ``s``."""
        if self.spec.s % 2:
            return None
        builder = _Builder(self.polytope, self.spec.s)
        result = Permutation.identity(self.layout.degree)
        for low in self.layout.pairs:
            rotation = compose(
                builder.sigma(low), builder.sigma(self.polytope.alpha(low))
            )
            result = compose(result, rotation.power(self.spec.s // 2))
        return result


def build_extension(
    polytope: RealizedPolytope, classification: DiagonalClassification, s: int
) -> ExtensionArtifact:
    spec = ExtensionSpec(polytope.descriptor, s)
    builder = _Builder(polytope, s)
    rhos = builder.generators()
    builder.self_check(rhos)
    concrete = build_chain(rhos)
    artifact = ExtensionArtifact(
        spec=spec,
        polytope=polytope,
        classification=classification,
        presentation=table_presentation(spec),
        recipe=extension_presentation(polytope, classification, s),
        generators=tuple(rhos),
        concrete=concrete,
        layout=builder.layout,
    )
    logger.info(
        "Built %s on %d points, order %d",
        spec.name,
        builder.layout.degree,
        concrete.order,
    )
    return artifact


def block_relations_hold(artifact: ExtensionArtifact) -> bool:
    """``sigma_F sigma_{F alpha}`` has order ``s``; all other sigma pairs commute."""
    sigmas = artifact.sigmas()
    alpha = artifact.polytope.alpha
    s = artifact.spec.s
    for first in range(len(sigmas)):
        for second in range(first + 1, len(sigmas)):
            if alpha(first) == second:
                if compose(sigmas[first], sigmas[second]).order() != s:
                    return False
            elif not sigmas[first].commutes_with(sigmas[second]):
                return False
    return True


def w_order(artifact: ExtensionArtifact, chain_limit: int = 120) -> int:
    """Order of ``W = <sigma_F>``.

    Up to ``chain_limit`` vertices the chain of all sigmas is built; beyond
    it the order is the product over blocks, which have disjoint supports.
    """
    sigmas = artifact.sigmas()
    if len(sigmas) <= chain_limit:
        return build_chain(sigmas).order

    alpha = artifact.polytope.alpha
    order = 1
    covered: set[int] = set()
    for low in artifact.layout.pairs:
        pair = [sigmas[low], sigmas[alpha(low)]]
        support = set(pair[0].moved_points()) | set(pair[1].moved_points())
        if support & covered:
            raise InvariantViolation("block-supports", f"pair of vertex {low}")
        covered |= support
        order *= build_chain(pair).order
    return order


def _vertex_orbit(
    layout: BlockLayout, generators: Sequence[Permutation], bound: int
) -> Optional[list[tuple[int, ...]]]:
    """Images of the set of block points ``0`` under the group.

    Its stabilizer is ``<rho_1, ..., rho_n>``, so the images stand for the
    vertices of the extension. Returns ``None`` past ``bound`` images.
    """
    width = 2 * layout.s
    offsets = np.array(
        [layout.offset(pair) for pair in range(len(layout.pairs))], dtype=POINT_DTYPE
    )

    def act(state: tuple[int, ...], perm: Permutation) -> tuple[int, ...]:
        images = perm.images[offsets + np.array(state, dtype=POINT_DTYPE)]
        relative = images - layout.vertex_count
        result = np.empty(len(state), dtype=POINT_DTYPE)
        result[relative // width] = relative % width
        return tuple(result.tolist())

    start = (0,) * len(layout.pairs)
    seen = {start}
    orbit = [start]
    position = 0
    while position < len(orbit):
        for gen in generators:
            image = act(orbit[position], gen)
            if image not in seen:
                if len(orbit) >= bound:
                    return None
                seen.add(image)
                orbit.append(image)
        position += 1
    return orbit


def central_symmetry_layer(
    artifact: ExtensionArtifact, bound: int = DEFAULT_CENTRAL_BOUND
) -> LayerResult:
    s = artifact.spec.s
    if s % 2:
        return LayerResult.skipped("L4", "s is odd")
    vertices = (2 * s) ** artifact.q
    if vertices > bound:
        return LayerResult.skipped(
            "L4", f"{vertices} vertices exceed the bound {bound}"
        )

    z = artifact.central_element()
    assert z is not None
    if not z.is_involution():
        return LayerResult.failed("L4", "z is not an involution")
    if not all(z.commutes_with(gen) for gen in artifact.generators):
        return LayerResult.failed("L4", "z is not central")

    orbit = _vertex_orbit(artifact.layout, artifact.generators, bound)
    if orbit is None or len(orbit) != vertices:
        return LayerResult.failed(
            "L4", f"vertex orbit has {len(orbit or ())} elements, expected {vertices}"
        )
    offsets = np.array(
        [artifact.layout.offset(pair) for pair in range(len(artifact.layout.pairs))],
        dtype=POINT_DTYPE,
    )
    # z only rotates inside blocks, so it maps a state to a state blockwise.
    fixed = sum(
        1
        for state in orbit
        if np.array_equal(
            z.images[offsets + np.array(state, dtype=POINT_DTYPE)] - offsets, state
        )
    )
    return LayerResult.check(
        "L4",
        fixed == 0,
        f"z central involution, {fixed} fixed vertices of {vertices}",
        vertices,
    )


def presentation_order_layer(
    presentation: Presentation,
    expected: int,
    base_order: int,
    strategy: L3Strategy,
    limit: int,
) -> LayerResult:
    """Certify the presented order by coset enumeration.

    The parabolic strategy enumerates over ``<rho_1, ..., rho_n>``, whose
    presented image is exactly ``G(P)`` once the lower layers passed.
    """
    if strategy is L3Strategy.PARABOLIC:
        subgroup = [(index,) for index in range(1, presentation.ngens)]
        multiplier = base_order
    else:
        subgroup = []
        multiplier = 1

    table = todd_coxeter(presentation, subgroup, limit=limit)
    if not table.is_complete or table.index is None:
        return LayerResult.skipped(
            "L3", f"coset enumeration aborted at limit {limit} ({strategy})"
        )
    order = table.index * multiplier
    return LayerResult.check(
        "L3",
        order == expected,
        f"presented order {order} from {table.index} cosets ({strategy})",
        order,
    )


def verify_extension(
    artifact: ExtensionArtifact,
    tc_limit: int = DEFAULT_COSET_LIMIT,
    strategy: L3Strategy = L3Strategy.TRIVIAL,
    central_bound: int = DEFAULT_CENTRAL_BOUND,
    enumerate_presentation: bool = True,
    central_symmetry: bool = True,
) -> LayeredReport:
    """Layers L1 to L4 of the extension; L3 and L4 may be skipped with a reason."""
    spec = artifact.spec
    layers: list[LayerResult] = []

    table = verify_epimorphism(
        artifact.presentation, artifact.generators, artifact.concrete
    )
    recipe = verify_epimorphism(artifact.recipe, artifact.generators, artifact.concrete)
    blocks = artifact.polytope.degree > 120 or block_relations_hold(artifact)
    layers.append(
        LayerResult.check(
            "L1",
            table.relators_hold and recipe.relators_hold and blocks,
            f"table relators {table.relators_hold}, recipe relators "
            f"{recipe.relators_hold}, block relations {blocks}",
        )
    )

    matrix = coxeter_matrix(artifact.generators)
    type_ok = matrix == string_matrix(spec.schlafli)
    w_ok = w_order(artifact) == (2 * spec.s) ** spec.q
    layers.append(
        LayerResult.check(
            "L2",
            artifact.concrete.order == spec.expected_order and type_ok and w_ok,
            f"order {artifact.concrete.order}, expected {spec.expected_order} "
            f"({ORDER_PROVENANCE}); type {spec.type_label} {type_ok}; "
            f"W order (2s)^q {w_ok}",
            artifact.concrete.order,
        )
    )

    if not enumerate_presentation:
        layers.append(LayerResult.skipped("L3", "not requested"))
    elif any(layer.status is LayerStatus.FAILED for layer in layers):
        layers.append(LayerResult.skipped("L3", "lower layers failed"))
    else:
        l3 = presentation_order_layer(
            artifact.presentation,
            spec.expected_order,
            spec.base.expected_order,
            strategy,
            tc_limit,
        )
        if l3.status is LayerStatus.PASSED and not artifact.recipe_is_word_identical:
            recipe_l3 = presentation_order_layer(
                artifact.recipe,
                spec.expected_order,
                spec.base.expected_order,
                strategy,
                tc_limit,
            )
            l3 = LayerResult(
                "L3",
                recipe_l3.status,
                f"{l3.detail}; recipe {recipe_l3.detail}",
                l3.value,
            )
        layers.append(l3)

    if central_symmetry:
        layers.append(central_symmetry_layer(artifact, central_bound))
    else:
        layers.append(LayerResult.skipped("L4", "not requested"))

    report = LayeredReport(spec.name, tuple(layers))
    report.log()
    return report


def extension_identities(artifact: ExtensionArtifact) -> dict[str, bool]:
    """Family-specific relations of the concrete extension group."""
    rhos = artifact.generators
    family = artifact.spec.base.family
    identities: dict[str, bool] = {}
    if family is Family.CUBE:
        residue = build_chain(rhos[:3])
        identities["residue <r0,r1,r2> has order 128"] = residue.order == 128
        identities["(r0 r1 r2 r1)^4 = 1"] = evaluate_expr(
            Power(gens(0, 1, 2, 1), 4), rhos
        ).is_identity()
    if family is Family.CELL24:
        identities["(r0 r1 r2 r3 r4 r3 r2 r1)^4 = 1"] = evaluate_expr(
            Power(gens(0, 1, 2, 3, 4, 3, 2, 1), 4), rhos
        ).is_identity()
    return identities
