import logging
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from hypertope_extensions.config import DEFAULT_COSET_LIMIT
from hypertope_extensions.flags import EnumerationStatus
from hypertope_extensions.fp.presentation import Presentation
from hypertope_extensions.fp.words import Word, canonicalize, validate_word
from hypertope_extensions.perm.permutation import POINT_DTYPE, Permutation

logger = logging.getLogger(__name__)

UNDEFINED = -1
PROGRESS_INTERVAL = 100_000


@dataclass(frozen=True)
class CosetTable:
    """Result of a coset enumeration.

    When complete, ``rows[c, x]`` is the coset ``c`` is sent to by generator
    ``x``; row 0 is the subgroup coset. An aborted table keeps no rows.
    """

    ngens: int
    status: EnumerationStatus
    defined: int
    live: int
    limit: int
    rows: Optional[np.ndarray] = None

    @property
    def is_complete(self) -> bool:
        return self.status is EnumerationStatus.COMPLETE

    @property
    def index(self) -> Optional[int]:
        return self.live if self.is_complete else None

    def action(self) -> list[Permutation]:
        """Generator actions on cosets, one permutation per generator."""
        if self.rows is None:
            raise ValueError("An aborted enumeration has no coset action.")
        return [
            Permutation(self.rows[:, column]) for column in range(self.ngens)
        ]

    def satisfies(self, words: Sequence[Word]) -> bool:
        """Direct scan: every word fixes every coset."""
        if self.rows is None:
            return False
        start = np.arange(self.live, dtype=POINT_DTYPE)
        for word in words:
            current = start
            for letter in word:
                current = self.rows[current, letter]
            if not np.array_equal(current, start):
                return False
        return True


class _Aborted(Exception):
    pass


class _Enumerator:
    """HLT enumeration over involutory generators.

    Each column is its own inverse column: defining ``c.x = d`` also defines
    ``d.x = c``. Coincidences keep the smaller coset, so coset 0 survives.
    """

    def __init__(self, ngens: int, relators: Sequence[Word], limit: int):
        self.ngens = ngens
        self.relators = relators
        self.limit = limit
        self.table: list[int] = []
        self.parent: list[int] = []
        self.defined = 0
        self._new_coset()

    def _new_coset(self) -> int:
        if self.defined >= self.limit:
            raise _Aborted()
        coset = len(self.parent)
        self.parent.append(coset)
        self.table.extend([UNDEFINED] * self.ngens)
        self.defined += 1
        if self.defined % PROGRESS_INTERVAL == 0:
            logger.debug("Defined %d cosets", self.defined)
        return coset

    def _define(self, coset: int, letter: int) -> None:
        image = self._new_coset()
        self.table[coset * self.ngens + letter] = image
        self.table[image * self.ngens + letter] = coset

    def _rep(self, coset: int) -> int:
        parent = self.parent
        root = coset
        while parent[root] != root:
            root = parent[root]
        while parent[coset] != root:
            parent[coset], coset = root, parent[coset]
        return root

    def _merge(self, first: int, second: int, queue: deque[int]) -> None:
        first, second = self._rep(first), self._rep(second)
        if first == second:
            return
        keep, drop = min(first, second), max(first, second)
        self.parent[drop] = keep
        queue.append(drop)

    def _coincidence(self, first: int, second: int) -> None:
        ngens = self.ngens
        table = self.table
        queue: deque[int] = deque()
        self._merge(first, second, queue)
        while queue:
            dead = queue.popleft()
            for letter in range(ngens):
                target = table[dead * ngens + letter]
                if target == UNDEFINED:
                    continue
                table[target * ngens + letter] = UNDEFINED
                mu = self._rep(dead)
                nu = self._rep(target)
                if table[mu * ngens + letter] != UNDEFINED:
                    self._merge(nu, table[mu * ngens + letter], queue)
                elif table[nu * ngens + letter] != UNDEFINED:
                    self._merge(mu, table[nu * ngens + letter], queue)
                else:
                    table[mu * ngens + letter] = nu
                    table[nu * ngens + letter] = mu

    def _scan_and_fill(self, coset: int, word: Word) -> None:
        ngens = self.ngens
        table = self.table
        forward, backward = coset, coset
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[forward * ngens + word[i]] != UNDEFINED:
                forward = table[forward * ngens + word[i]]
                i += 1
            if i > j:
                if forward != backward:
                    self._coincidence(forward, backward)
                return
            while j >= i and table[backward * ngens + word[j]] != UNDEFINED:
                backward = table[backward * ngens + word[j]]
                j -= 1
            if j < i:
                self._coincidence(forward, backward)
                return
            if i == j:
                table[forward * ngens + word[i]] = backward
                table[backward * ngens + word[i]] = forward
                return
            self._define(forward, word[i])

    def _is_live(self, coset: int) -> bool:
        return self.parent[coset] == coset

    def run(self, subgroup_words: Sequence[Word]) -> None:
        for word in subgroup_words:
            self._scan_and_fill(0, word)

        coset = 0
        while coset < len(self.parent):
            if self._is_live(coset):
                for word in self.relators:
                    self._scan_and_fill(coset, word)
                    if not self._is_live(coset):
                        break
                else:
                    offset = coset * self.ngens
                    for letter in range(self.ngens):
                        if self.table[offset + letter] == UNDEFINED:
                            self._define(coset, letter)
            coset += 1

    def live_cosets(self) -> list[int]:
        return [coset for coset in range(len(self.parent)) if self._is_live(coset)]

    def compact(self) -> np.ndarray:
        live = self.live_cosets()
        renumber = {coset: index for index, coset in enumerate(live)}
        rows = np.empty((len(live), self.ngens), dtype=POINT_DTYPE)
        for index, coset in enumerate(live):
            offset = coset * self.ngens
            for letter in range(self.ngens):
                rows[index, letter] = renumber[self._rep(self.table[offset + letter])]
        return rows


def todd_coxeter(
    presentation: Presentation,
    subgroup_gens: Sequence[Word] = (),
    limit: int = DEFAULT_COSET_LIMIT,
) -> CosetTable:
    """Enumerate the cosets of the subgroup generated by ``subgroup_gens``.

    Returns an aborted table, not an error, once more than ``limit`` cosets
    would have to be defined.
    """
    if limit < 1:
        raise ValueError("The coset limit must be at least 1.")
    for word in subgroup_gens:
        validate_word(word, presentation.ngens)

    relators = [
        word
        for word in (canonicalize(word) for word in presentation.words())
        if word
    ]
    enumerator = _Enumerator(presentation.ngens, relators, limit)
    try:
        enumerator.run([tuple(word) for word in subgroup_gens if word])
    except _Aborted:
        live = len(enumerator.live_cosets())
        logger.info(
            "Coset enumeration aborted at %d defined cosets (%d live)",
            enumerator.defined,
            live,
        )
        return CosetTable(
            ngens=presentation.ngens,
            status=EnumerationStatus.ABORTED,
            defined=enumerator.defined,
            live=live,
            limit=limit,
        )

    rows = enumerator.compact()
    logger.info(
        "Coset enumeration complete: index %d after %d defined cosets",
        len(rows),
        enumerator.defined,
    )
    return CosetTable(
        ngens=presentation.ngens,
        status=EnumerationStatus.COMPLETE,
        defined=enumerator.defined,
        live=len(rows),
        limit=limit,
        rows=rows,
    )
