import logging
from dataclasses import dataclass, field
from typing import Optional

from hypertope_extensions.errors import LayerFailure
from hypertope_extensions.flags import LayerStatus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LayerResult:
    layer: str
    status: LayerStatus
    detail: str = ""
    value: Optional[int] = None

    @classmethod
    def passed(
        cls, layer: str, detail: str = "", value: Optional[int] = None
    ) -> "LayerResult":
        return cls(layer, LayerStatus.PASSED, detail, value)

    @classmethod
    def failed(
        cls, layer: str, detail: str, value: Optional[int] = None
    ) -> "LayerResult":
        return cls(layer, LayerStatus.FAILED, detail, value)

    @classmethod
    def skipped(cls, layer: str, detail: str) -> "LayerResult":
        return cls(layer, LayerStatus.SKIPPED, detail)

    @classmethod
    def check(
        cls, layer: str, condition: bool, detail: str, value: Optional[int] = None
    ) -> "LayerResult":
        if condition:
            return cls.passed(layer, detail, value)
        return cls.failed(layer, detail, value)


@dataclass(frozen=True)
class LayeredReport:
    """Ordered verification layers; a failed layer is fatal, a skipped one is not."""

    subject: str
    layers: tuple[LayerResult, ...] = field(default=())

    @property
    def fatal(self) -> bool:
        return any(layer.status is LayerStatus.FAILED for layer in self.layers)

    def get(self, name: str) -> Optional[LayerResult]:
        return next((layer for layer in self.layers if layer.layer == name), None)

    def status(self, name: str) -> Optional[LayerStatus]:
        layer = self.get(name)
        return layer.status if layer else None

    def raise_for_failure(self) -> None:
        for layer in self.layers:
            if layer.status is LayerStatus.FAILED:
                raise LayerFailure(f"{self.subject} {layer.layer}", layer.detail)

    def log(self) -> None:
        for layer in self.layers:
            log = logger.error if layer.status is LayerStatus.FAILED else logger.info
            log("%s %s %s: %s", self.subject, layer.layer, layer.status, layer.detail)
