import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from hypertope_extensions.fp.words import (
    Expr,
    Gen,
    Power,
    Word,
    canonicalize,
    flatten,
    gens,
    validate_word,
)

logger = logging.getLogger(__name__)


def default_labels(ngens: int) -> tuple[str, ...]:
    return tuple(f"r{index}" for index in range(ngens))


def label_index(label: str) -> int:
    """Generator index encoded by a label's trailing digits."""
    digits = label.lstrip("abcdefghijklmnopqrstuvwxyz")
    return int(digits)


@dataclass(frozen=True)
class Presentation:
    """Group generated by ``ngens`` involutions subject to ``relators``.

    The involution relators ``g^2`` are implicit in every presentation;
    ``relators`` holds the remaining relators, duplicate-free by canonical
    word. Use :meth:`create` to build one from arbitrary relators.
    """

    ngens: int
    relators: tuple[Expr, ...] = ()
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.ngens))
        if len(self.labels) != self.ngens:
            raise ValueError("One label per generator is required.")
        for relator in self.relators:
            validate_word(flatten(relator), self.ngens)

    @classmethod
    def create(
        cls,
        ngens: int,
        relators: Iterable[Expr],
        labels: Optional[Sequence[str]] = None,
    ) -> "Presentation":
        seen: set[Word] = set()
        kept: list[Expr] = []
        for relator in relators:
            word = flatten(relator)
            validate_word(word, ngens)
            canonical = canonicalize(word)
            if not canonical or canonical in seen:
                continue
            seen.add(canonical)
            kept.append(relator)
        return cls(ngens, tuple(kept), tuple(labels) if labels else ())

    @property
    def involution_relators(self) -> tuple[Expr, ...]:
        return tuple(Power(Gen(index), 2) for index in range(self.ngens))

    def words(self) -> list[Word]:
        """Every relator as a word, involution relators first."""
        return [flatten(relator) for relator in self.involution_relators] + [
            flatten(relator) for relator in self.relators
        ]

    def canonical_relators(self) -> tuple[Word, ...]:
        return tuple(
            sorted(
                {
                    canonical
                    for relator in self.relators
                    if (canonical := canonicalize(flatten(relator)))
                }
            )
        )

    def equivalent_to(self, other: "Presentation") -> bool:
        """Word-for-word identity after canonicalization."""
        return (
            self.ngens == other.ngens
            and self.canonical_relators() == other.canonical_relators()
        )

    def with_relators(self, relators: Iterable[Expr]) -> "Presentation":
        return Presentation.create(
            self.ngens, [*self.relators, *relators], self.labels
        )


def coxeter_relators(matrix: Sequence[Sequence[int]]) -> list[Expr]:
    """Relators ``(r_i r_j)^m_ij`` for every pair ``i < j``."""
    relators: list[Expr] = []
    for i, row in enumerate(matrix):
        for j in range(i + 1, len(row)):
            relators.append(Power(gens(i, j), row[j]))
    return relators


def string_matrix(schlafli: Sequence[int]) -> list[list[int]]:
    """Coxeter matrix of the string diagram with the given edge labels."""
    rank = len(schlafli) + 1
    matrix = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for i, label in enumerate(schlafli):
        matrix[i][i + 1] = matrix[i + 1][i] = label
    return matrix


def coxeter_presentation(
    matrix: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None
) -> Presentation:
    return Presentation.create(len(matrix), coxeter_relators(matrix), labels)
