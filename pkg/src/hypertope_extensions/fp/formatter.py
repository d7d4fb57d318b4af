from pathlib import Path
from typing import Any, Callable, Sequence

from hypertope_extensions.fp.presentation import Presentation
from hypertope_extensions.fp.words import Expr, Gen, Power, Seq, inverse


def _format_gen(gen: Gen, labels: Sequence[str]) -> str:
    return labels[gen.index]


def _format_seq(sequence: Seq, labels: Sequence[str]) -> str:
    return " ".join(_format_expr(item, labels) for item in sequence.items)


def _format_power(power: Power, labels: Sequence[str]) -> str:
    if power.exponent < 0:
        return _format_power(Power(inverse(power.base), -power.exponent), labels)
    base = _format_expr(power.base, labels)
    if power.exponent == 1:
        return base
    if isinstance(power.base, Gen):
        return f"{base}^{power.exponent}"
    return f"( {base} )^{power.exponent}"


def _format_expr(expr: Any, labels: Sequence[str]) -> str:
    formatter_map: dict[Any, Callable[[Any, Sequence[str]], str]] = {
        Gen: _format_gen,
        Seq: _format_seq,
        Power: _format_power,
    }

    expr_type = type(expr)

    if expr_type in formatter_map:
        return formatter_map[expr_type](expr, labels)

    raise TypeError(f"Cannot format {expr_type.__name__} as a relator.")


class Formatter:
    def format(self, presentation: Presentation) -> str:
        labels = presentation.labels
        lines = [f"gens {presentation.ngens}"]
        lines.extend(
            _format_expr(relator, labels)
            for relator in presentation.involution_relators
        )
        lines.extend(
            _format_expr(relator, labels) for relator in presentation.relators
        )
        return "\n".join(lines) + "\n"

    def format_relator(self, relator: Expr, labels: Sequence[str]) -> str:
        return _format_expr(relator, labels)

    def write(self, presentation: Presentation, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.format(presentation), encoding="utf-8")
        return path


FORMATTER = Formatter()
