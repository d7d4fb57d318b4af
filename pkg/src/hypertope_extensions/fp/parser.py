import logging
from pathlib import Path

from lark import Lark, Transformer, Tree, v_args
from lark.exceptions import UnexpectedInput, VisitError

from hypertope_extensions.errors import GeneratorIndexError, PresentationSyntaxError
from hypertope_extensions.fp.presentation import (
    Presentation,
    default_labels,
    label_index,
)
from hypertope_extensions.fp.words import Expr, Gen, Power, Seq

logger = logging.getLogger(__name__)


def _get_parser() -> Lark:
    try:
        return getattr(_get_parser, "cache")
    except AttributeError:
        grammar_path = Path(__file__).parent / "grammars" / "presentation.lark"
        grammar = grammar_path.read_text(encoding="utf-8")

        parser = Lark(
            grammar,
            parser="lalr",
            lexer="basic",
            propagate_positions=True,
            maybe_placeholders=False,
            start="start",
            source_path=str(grammar_path),
        )
        setattr(_get_parser, "cache", parser)

        return getattr(_get_parser, "cache")


PARSER = _get_parser()


def _collapse(items: list[Expr]) -> Expr:
    return items[0] if len(items) == 1 else Seq(tuple(items))


@v_args(tree=True)
class PresentationBuilder(Transformer):
    """Turns a parse tree into a :class:`Presentation`.

    Generator labels are remembered so that ``rt0`` survives a round trip.
    """

    def __init__(self):
        super().__init__()
        self.labels: dict[int, str] = {}

    def header(self, tree: Tree) -> int:
        return int(tree.children[0])

    def generator(self, tree: Tree) -> Gen:
        label = str(tree.children[0])
        index = label_index(label)
        self.labels.setdefault(index, label)
        return Gen(index)

    def group(self, tree: Tree) -> Expr:
        return _collapse(list(tree.children))

    def power(self, tree: Tree) -> int:
        return int(tree.children[0])

    def factor(self, tree: Tree) -> Expr:
        items = tree.children
        if len(items) == 1:
            return items[0]
        return Power(items[0], items[1])

    def relator(self, tree: Tree) -> Expr:
        return _collapse(list(tree.children))

    def start(self, tree: Tree) -> Presentation:
        ngens, *relators = tree.children
        for index in self.labels:
            if index >= ngens:
                raise GeneratorIndexError(index, ngens)
        labels = [
            self.labels.get(index, default)
            for index, default in enumerate(default_labels(ngens))
        ]
        return Presentation.create(ngens, relators, labels)


def parse_presentation(text: str) -> Presentation:
    try:
        tree = PARSER.parse(text)
    except UnexpectedInput as error:
        raise PresentationSyntaxError(
            f"Invalid presentation text: {error}",
            line=getattr(error, "line", None),
            column=getattr(error, "column", None),
        ) from error

    try:
        return PresentationBuilder().transform(tree)
    except VisitError as error:
        raise error.orig_exc from error


def read_presentation(path: Path) -> Presentation:
    return parse_presentation(path.read_text(encoding="utf-8"))
