"""Versioned JSON report of a job.

Exact integers are written as decimal strings; group orders reach hundreds of
digits.
"""

import logging
from typing import Annotated, Optional

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer

from hypertope_extensions.flags import LayerStatus
from hypertope_extensions.layers import LayeredReport
from hypertope_extensions.version import VERSION

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1"

BigInt = Annotated[int, PlainSerializer(str, return_type=str)]


class _Model(BaseModel):
    model_config = ConfigDict(frozen=True, use_enum_values=True)


class LimitsModel(_Model):
    coset_limit: BigInt
    geometry_bound: BigInt
    intersection_bound: BigInt
    central_bound: BigInt
    intersection_order_bound: BigInt


class JobModel(_Model):
    family: str
    p: Optional[int] = None
    n: Optional[int] = None
    s: int
    level: str
    l3_strategy: str
    limits: LimitsModel


class Claim(_Model):
    expected: BigInt
    computed: Optional[BigInt] = None
    provenance: str

    @property
    def holds(self) -> bool:
        return self.computed == self.expected


class CatalogModel(_Model):
    name: str
    type: str
    vertices: BigInt
    alpha: str
    order: Claim
    method: str


class DiagonalsModel(_Model):
    count: int
    sizes: list[int]
    representatives: list[int]
    published: list[int]
    antipodal_index: int
    antipodal_exponent: int
    provenance: str


class LayerModel(_Model):
    layer: str
    status: LayerStatus
    detail: str
    value: Optional[BigInt] = None


class ExtensionModel(_Model):
    name: str
    type: str
    degree: int
    order: Claim
    recipe_word_identical: bool
    layers: list[LayerModel] = Field(default_factory=list)
    identities: dict[str, bool] = Field(default_factory=dict)


class HalvingModel(_Model):
    name: str
    type: str
    order: Claim
    diagram: list[list[int]]
    diagram_matches: bool
    layers: list[LayerModel] = Field(default_factory=list)
    identities: dict[str, bool] = Field(default_factory=dict)


class CGroupModel(_Model):
    subject: str
    status: LayerStatus
    pairs_checked: int
    failing_pair: Optional[list[list[int]]] = None
    detail: str = ""


class GeometryModel(_Model):
    subject: str
    intersection_property: LayerStatus
    thin: Optional[bool] = None
    residually_connected: Optional[bool] = None
    flag_transitive: Optional[bool] = None
    chambers: Optional[BigInt] = None
    borel_order: Optional[BigInt] = None
    borel_accounting: Optional[bool] = None
    hypertope_certified: bool
    residual_connectedness: str
    detail: str = ""


class ResidueModel(_Model):
    subject: str
    generators: list[str]
    shape: Optional[list[int]] = None
    order: Optional[BigInt] = None
    provenance: str
    detail: str = ""


class Report(_Model):
    schema_version: str = SCHEMA_VERSION
    tool_version: str = ".".join(VERSION)
    job: JobModel
    catalog: Optional[CatalogModel] = None
    diagonals: Optional[DiagonalsModel] = None
    extension: Optional[ExtensionModel] = None
    halving: Optional[HalvingModel] = None
    cgroup: list[CGroupModel] = Field(default_factory=list)
    geometry: list[GeometryModel] = Field(default_factory=list)
    residues: list[ResidueModel] = Field(default_factory=list)
    fatal: bool = False
    error: Optional[str] = None
    timings: Optional[dict[str, float]] = None

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True) + "\n"


def layer_models(report: LayeredReport) -> list[LayerModel]:
    return [
        LayerModel(
            layer=layer.layer,
            status=layer.status,
            detail=layer.detail,
            value=layer.value,
        )
        for layer in report.layers
    ]


class SuiteEntry(_Model):
    job: str
    fatal: bool
    error: Optional[str] = None
    expected_error: Optional[str] = None
    path: str

    @property
    def expected(self) -> bool:
        """A fatal entry whose error is the one recorded for its job."""
        return (
            self.fatal
            and self.expected_error is not None
            and (self.error or "").startswith(self.expected_error)
        )


class SuiteSummary(_Model):
    schema_version: str = SCHEMA_VERSION
    jobs: list[SuiteEntry]

    @property
    def fatal(self) -> bool:
        return any(entry.fatal and not entry.expected for entry in self.jobs)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True) + "\n"
