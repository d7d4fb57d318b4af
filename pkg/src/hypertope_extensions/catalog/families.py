"""Centrally symmetric spherical regular polytopes and their published data."""

import logging
from dataclasses import dataclass
from math import factorial
from typing import Optional

from hypertope_extensions.flags import Family
from hypertope_extensions.fp.words import Word

logger = logging.getLogger(__name__)

TABLE_PROVENANCE = (
    "Table 1: centrally symmetric non-degenerate regular polytopes of spherical type"
)


@dataclass(frozen=True)
class FamilyDescriptor:
    family: Family
    schlafli: tuple[int, ...]
    vertex_count: int
    alpha_exponent: int
    expected_order: int
    diagonal_exponents: tuple[int, ...]
    parameter: Optional[int] = None
    provenance: str = TABLE_PROVENANCE
    diagonal_provenance: str = TABLE_PROVENANCE

    @property
    def rank(self) -> int:
        """Number of generators ``tau_0, ..., tau_{n-1}``."""
        return len(self.schlafli) + 1

    @property
    def name(self) -> str:
        if self.parameter is None:
            return str(self.family)
        return f"{self.family}({self.parameter})"

    @property
    def type_label(self) -> str:
        return "{" + ",".join(str(label) for label in self.schlafli) + "}"

    @property
    def beta_word(self) -> Word:
        return tuple(range(self.rank))

    @property
    def alpha_word(self) -> Word:
        return self.beta_word * self.alpha_exponent

    @property
    def alpha_label(self) -> str:
        taus = "".join(f"t{index}" for index in range(self.rank))
        return f"({taus})^{self.alpha_exponent}"

    @property
    def antipodal_exponent(self) -> int:
        return self.alpha_exponent

    @property
    def diagonal_count(self) -> int:
        return len(self.diagonal_exponents)

    @property
    def half_vertex_count(self) -> int:
        return self.vertex_count // 2


def polygon(p: int) -> FamilyDescriptor:
    if p < 2:
        raise ValueError("The polygon family needs p >= 2.")
    return FamilyDescriptor(
        family=Family.POLYGON,
        schlafli=(2 * p,),
        vertex_count=2 * p,
        alpha_exponent=p,
        expected_order=4 * p,
        diagonal_exponents=tuple(range(1, p + 1)),
        parameter=p,
        diagonal_provenance="Sec 3.1 via Cor 8C7: p classes of the 2p-gon",
    )


def orthoplex(n: int) -> FamilyDescriptor:
    if n < 3:
        raise ValueError("The orthoplex family needs n >= 3.")
    return FamilyDescriptor(
        family=Family.ORTHOPLEX,
        schlafli=(3,) * (n - 2) + (4,),
        vertex_count=2 * n,
        alpha_exponent=n,
        expected_order=2**n * factorial(n),
        diagonal_exponents=(1, n),
        parameter=n,
        diagonal_provenance="derived: exhaustive double-coset computation",
    )


def cube(n: int) -> FamilyDescriptor:
    if n < 3:
        raise ValueError("The cube family needs n >= 3.")
    return FamilyDescriptor(
        family=Family.CUBE,
        schlafli=(4,) + (3,) * (n - 2),
        vertex_count=2**n,
        alpha_exponent=n,
        expected_order=2**n * factorial(n),
        diagonal_exponents=tuple(range(1, n + 1)),
        parameter=n,
        diagonal_provenance="Sec 3.3 Lemma: the n-cube has exactly n classes",
    )


ICOSAHEDRON = FamilyDescriptor(
    family=Family.ICOSAHEDRON,
    schlafli=(3, 5),
    vertex_count=12,
    alpha_exponent=5,
    expected_order=120,
    diagonal_exponents=(1, 3, 5),
    diagonal_provenance="Sec 4.1: diagonal class exponents",
)

DODECAHEDRON = FamilyDescriptor(
    family=Family.DODECAHEDRON,
    schlafli=(5, 3),
    vertex_count=20,
    alpha_exponent=5,
    expected_order=120,
    diagonal_exponents=(1, 2, 3, 4, 5),
    diagonal_provenance="Sec 4.2: diagonal class exponents",
)

CELL24 = FamilyDescriptor(
    family=Family.CELL24,
    schlafli=(3, 4, 3),
    vertex_count=24,
    alpha_exponent=6,
    expected_order=1152,
    diagonal_exponents=(1, 3, 4, 6),
    diagonal_provenance="Sec 4.3: diagonal class exponents",
)

CELL600 = FamilyDescriptor(
    family=Family.CELL600,
    schlafli=(3, 3, 5),
    vertex_count=120,
    alpha_exponent=15,
    expected_order=14400,
    diagonal_exponents=(1, 4, 6, 7, 9, 10, 12, 15),
    diagonal_provenance="Sec 4.4: diagonal class exponents",
)

CELL120 = FamilyDescriptor(
    family=Family.CELL120,
    schlafli=(5, 3, 3),
    vertex_count=600,
    alpha_exponent=15,
    expected_order=14400,
    diagonal_exponents=tuple(range(1, 16)),
    diagonal_provenance="Sec 4.5: diagonal class exponents",
)

EXCEPTIONAL = {
    Family.ICOSAHEDRON: ICOSAHEDRON,
    Family.DODECAHEDRON: DODECAHEDRON,
    Family.CELL24: CELL24,
    Family.CELL600: CELL600,
    Family.CELL120: CELL120,
}


def descriptor(
    family: "Family | str", p: Optional[int] = None, n: Optional[int] = None
) -> FamilyDescriptor:
    family = Family(family)
    if family is Family.POLYGON:
        if p is None:
            raise ValueError("The polygon family needs --p.")
        return polygon(p)
    if family is Family.ORTHOPLEX:
        if n is None:
            raise ValueError("The orthoplex family needs --n.")
        return orthoplex(n)
    if family is Family.CUBE:
        if n is None:
            raise ValueError("The cube family needs --n.")
        return cube(n)
    return EXCEPTIONAL[family]


def catalog_rows(max_n: int = 6, max_p: int = 8) -> list[FamilyDescriptor]:
    """Every catalogued polytope with ``n <= max_n`` and ``p <= max_p``."""
    rows = [polygon(p) for p in range(2, max_p + 1)]
    rows.extend(orthoplex(n) for n in range(3, max_n + 1))
    rows.extend(cube(n) for n in range(3, max_n + 1))
    rows.extend(EXCEPTIONAL.values())
    return rows


def format_catalog(rows: list[FamilyDescriptor]) -> str:
    header = ("family", "type", "vertices", "alpha", "order")
    table = [header] + [
        (
            row.name,
            row.type_label,
            str(row.vertex_count),
            row.alpha_label,
            str(row.expected_order),
        )
        for row in rows
    ]
    widths = [max(len(line[column]) for line in table) for column in range(5)]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip()
        for line in table
    )
