"""Words in involutory generators and the expression trees relators are kept as.

A :data:`Word` is a tuple of generator indices. Every generator is an
involution, so a word's inverse is its reversal.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from hypertope_extensions.errors import GeneratorIndexError
from hypertope_extensions.perm.permutation import Permutation, compose

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


@dataclass(frozen=True)
class Gen:
    index: int


@dataclass(frozen=True)
class Seq:
    items: tuple["Expr", ...]


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: int


Expr = Union[Gen, Seq, Power]


def gens(*indices: int) -> Seq:
    return Seq(tuple(Gen(index) for index in indices))


def seq(*items: "Expr | Iterable[Expr]") -> Seq:
    flat: list[Expr] = []
    for item in items:
        if isinstance(item, (Gen, Seq, Power)):
            flat.append(item)
        else:
            flat.extend(item)
    return Seq(tuple(flat))


def power(base: Expr, exponent: int) -> Expr:
    if exponent == 1:
        return base
    return Power(base, exponent)


def inverse(expr: Expr) -> Expr:
    if isinstance(expr, Gen):
        return expr
    if isinstance(expr, Seq):
        return Seq(tuple(inverse(item) for item in reversed(expr.items)))
    return Power(inverse(expr.base), expr.exponent)


def flatten(expr: Expr) -> Word:
    if isinstance(expr, Gen):
        return (expr.index,)
    if isinstance(expr, Seq):
        return tuple(letter for item in expr.items for letter in flatten(item))
    if expr.exponent < 0:
        return flatten(inverse(expr.base)) * -expr.exponent
    return flatten(expr.base) * expr.exponent


def generators_of(expr: Expr) -> set[int]:
    return set(flatten(expr))


def validate_word(word: Sequence[int], ngens: int) -> None:
    for letter in word:
        if not 0 <= letter < ngens:
            raise GeneratorIndexError(letter, ngens)


def free_reduce(word: Sequence[int]) -> Word:
    stack: list[int] = []
    for letter in word:
        if stack and stack[-1] == letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def cyclic_reduce(word: Sequence[int]) -> Word:
    reduced = free_reduce(word)
    start, end = 0, len(reduced)
    while end - start >= 2 and reduced[start] == reduced[end - 1]:
        start += 1
        end -= 1
    return reduced[start:end]


def canonicalize(word: Sequence[int]) -> Word:
    """Free and cyclic reduction followed by the lexicographically least rotation."""
    reduced = cyclic_reduce(word)
    if not reduced:
        return ()
    return min(reduced[shift:] + reduced[:shift] for shift in range(len(reduced)))


def evaluate(
    word: Sequence[int],
    images: Sequence[Permutation],
    degree: Optional[int] = None,
) -> Permutation:
    """Product of ``images`` along ``word``, first letter applied first."""
    if degree is None:
        if not images:
            raise ValueError("An empty image list needs an explicit degree.")
        degree = images[0].degree
    validate_word(word, len(images))
    result = Permutation.identity(degree)
    for letter in word:
        result = compose(result, images[letter])
    return result


def evaluate_expr(
    expr: Expr,
    images: Sequence[Permutation],
    degree: Optional[int] = None,
) -> Permutation:
    """Like :func:`evaluate`, with powers taken by repeated squaring."""
    if degree is None:
        if not images:
            raise ValueError("An empty image list needs an explicit degree.")
        degree = images[0].degree
    if isinstance(expr, Gen):
        validate_word((expr.index,), len(images))
        return images[expr.index]
    if isinstance(expr, Seq):
        result = Permutation.identity(degree)
        for item in expr.items:
            result = compose(result, evaluate_expr(item, images, degree))
        return result
    return evaluate_expr(expr.base, images, degree).power(expr.exponent)
