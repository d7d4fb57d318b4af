import logging
from enum import IntEnum, StrEnum

logger = logging.getLogger(__name__)


class Family(StrEnum):
    POLYGON = "polygon"
    ORTHOPLEX = "orthoplex"
    CUBE = "cube"
    ICOSAHEDRON = "icosahedron"
    DODECAHEDRON = "dodecahedron"
    CELL24 = "cell24"
    CELL600 = "cell600"
    CELL120 = "cell120"

    def __repr__(self) -> str:
        return f"Family.{self.name}"

    @property
    def takes_p(self) -> bool:
        return self is Family.POLYGON

    @property
    def takes_n(self) -> bool:
        return self in (Family.ORTHOPLEX, Family.CUBE)


class Level(IntEnum):
    """Verification levels; each level includes the ones below it."""

    ORDERS = 1
    RELATIONS = 2
    CGROUP = 3
    GEOMETRY = 4

    @classmethod
    def from_name(cls, name: str) -> "Level":
        return cls[name.upper()]

    def __str__(self) -> str:
        return self.name.lower()


class LayerStatus(StrEnum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"

    def __repr__(self) -> str:
        return f"LayerStatus.{self.name}"


class EnumerationStatus(StrEnum):
    COMPLETE = "complete"
    ABORTED = "aborted"

    def __repr__(self) -> str:
        return f"EnumerationStatus.{self.name}"


class L3Strategy(StrEnum):
    TRIVIAL = "trivial"
    PARABOLIC = "parabolic"


class Which(StrEnum):
    EXTENSION = "extension"
    HALVING = "halving"
