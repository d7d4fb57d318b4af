from typing import Optional, Sequence


class HypertopeError(Exception):
    """Base exception for hypertope-extensions errors."""


class DegreeMismatchError(HypertopeError):
    """Exception raised when permutations of different degrees are combined."""

    def __init__(self, left: int, right: int):
        super().__init__(f"Degree mismatch: {left} != {right}.")
        self.left = left
        self.right = right


class GeneratorIndexError(HypertopeError):
    """Exception raised when a word references an undefined generator."""

    def __init__(self, index: int, ngens: int):
        super().__init__(
            f"Generator index {index} out of range for {ngens} generators."
        )
        self.index = index
        self.ngens = ngens


class ResourceLimitExceeded(HypertopeError):
    """Exception raised when a bounded computation trips its limit."""

    def __init__(self, resource: str, limit: int):
        super().__init__(f"Resource limit exceeded for {resource}: {limit}.")
        self.resource = resource
        self.limit = limit


class InvariantViolation(HypertopeError):
    """Exception raised when a certified property fails to hold."""

    def __init__(self, check: str, detail: str = ""):
        message = f"Invariant '{check}' violated."
        if detail:
            message = f"{message} {detail}"
        super().__init__(message)
        self.check = check
        self.detail = detail


class RepresentativeError(HypertopeError):
    """Exception raised when beta exponents do not form a class transversal."""

    def __init__(
        self,
        family: str,
        exponents: Sequence[int],
        detail: str = "",
        classes: Optional[int] = None,
    ):
        listed = ", ".join(str(exponent) for exponent in exponents)
        message = f"Invalid beta representatives for {family}: [{listed}]."
        if detail:
            message = f"{message} {detail}"
        super().__init__(message)
        self.family = family
        self.exponents = list(exponents)
        self.classes = classes


class UnclassifiableResidueError(HypertopeError):
    """Exception raised when a {4,4} residue matches no torus map shape."""

    def __init__(self, order: int, translation_order: int):
        super().__init__(
            f"Residue of order {order} with translation order "
            f"{translation_order} is not a {{4,4}}_(a,0) or {{4,4}}_(a,a) map."
        )
        self.order = order
        self.translation_order = translation_order


class PresentationSyntaxError(HypertopeError):
    """Exception raised when presentation text does not parse."""

    line: int = 0
    column: int = 0

    def __init__(
        self, message: str, line: Optional[int] = None, column: Optional[int] = None
    ):
        super().__init__(message)
        if line is not None:
            self.line = line
        if column is not None:
            self.column = column


class LayerFailure(HypertopeError):
    """Exception raised when a verification layer fails."""

    def __init__(self, layer: str, reason: str):
        super().__init__(f"Layer {layer} failed: {reason}")
        self.layer = layer
        self.reason = reason
