import logging
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterator, Optional

from hypertope_extensions.catalog.families import descriptor
from hypertope_extensions.catalog.realize import RealizedPolytope, realize
from hypertope_extensions.config import DEFAULT_LIMITS, Limits
from hypertope_extensions.diagonals import (
    DiagonalClassification,
    beta_representatives,
    diagonal_classes,
)
from hypertope_extensions.errors import HypertopeError, UnclassifiableResidueError
from hypertope_extensions.extend import (
    ORDER_PROVENANCE,
    ExtensionArtifact,
    ExtensionSpec,
    build_extension,
    extension_identities,
    verify_extension,
)
from hypertope_extensions.flags import Family, L3Strategy, LayerStatus, Level, Which
from hypertope_extensions.fp.formatter import FORMATTER
from hypertope_extensions.fp.presentation import Presentation
from hypertope_extensions.halve import (
    HALVING_PROVENANCE,
    HalvingArtifact,
    halving_identities,
    realize_halving,
    verify_halving,
)
from hypertope_extensions.perm.chain import build_chain
from hypertope_extensions.perm.permutation import Permutation
from hypertope_extensions.report import (
    CatalogModel,
    CGroupModel,
    Claim,
    DiagonalsModel,
    ExtensionModel,
    GeometryModel,
    HalvingModel,
    JobModel,
    LimitsModel,
    Report,
    ResidueModel,
    SuiteEntry,
    SuiteSummary,
    layer_models,
)
from hypertope_extensions.verify.cgroup import IntersectionCheck, intersection_property
from hypertope_extensions.verify.geometry import certify
from hypertope_extensions.verify.torus import classify_torus_44

logger = logging.getLogger(__name__)

TORUS_PROVENANCE = "Cor 8C7 and Sec 3.3: {4,4}_(2s,0) residues, halved to {4,4}_(s,s)"


@dataclass(frozen=True)
class Job:
    spec: ExtensionSpec
    level: Level = Level.RELATIONS
    limits: Limits = DEFAULT_LIMITS
    strategy: L3Strategy = L3Strategy.TRIVIAL
    timings: bool = False
    stretch: bool = False
    expected_error: Optional[str] = None

    @classmethod
    def create(
        cls,
        family: "Family | str",
        s: int,
        p: Optional[int] = None,
        n: Optional[int] = None,
        **kwargs,
    ) -> "Job":
        return cls(ExtensionSpec(descriptor(family, p=p, n=n), s), **kwargs)

    @property
    def label(self) -> str:
        base = self.spec.base
        name = str(base.family)
        if base.parameter is not None:
            name = f"{name}-{base.parameter}"
        return f"{name}_s{self.spec.s}"


@dataclass
class Artifacts:
    polytope: RealizedPolytope
    classification: DiagonalClassification
    extension: ExtensionArtifact
    halving: Optional[HalvingArtifact] = None


@dataclass
class _Stopwatch:
    enabled: bool
    laps: dict[str, float] = field(default_factory=dict)

    @contextmanager
    def lap(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            if self.enabled:
                self.laps[name] = round(time.perf_counter() - start, 3)


def build_artifacts(job: Job, halving: bool = True) -> Artifacts:
    polytope = realize(job.spec.base, coset_limit=job.limits.coset_limit)
    classification = diagonal_classes(polytope)
    beta_representatives(polytope, classification)
    extension = build_extension(polytope, classification, job.spec.s)
    return Artifacts(
        polytope=polytope,
        classification=classification,
        extension=extension,
        halving=realize_halving(extension) if halving else None,
    )


def _job_model(job: Job) -> JobModel:
    base = job.spec.base
    limits = job.limits
    return JobModel(
        family=str(base.family),
        p=base.parameter if base.family.takes_p else None,
        n=base.parameter if base.family.takes_n else None,
        s=job.spec.s,
        level=str(job.level),
        l3_strategy=str(job.strategy),
        limits=LimitsModel(
            coset_limit=limits.coset_limit,
            geometry_bound=limits.geometry_bound,
            intersection_bound=limits.intersection_bound,
            central_bound=limits.central_bound,
            intersection_order_bound=limits.intersection_order_bound,
        ),
    )


def _catalog_model(polytope: RealizedPolytope) -> CatalogModel:
    base = polytope.descriptor
    return CatalogModel(
        name=base.name,
        type=base.type_label,
        vertices=polytope.degree,
        alpha=base.alpha_label,
        order=Claim(
            expected=base.expected_order,
            computed=polytope.group.order,
            provenance=base.provenance,
        ),
        method=polytope.method,
    )


def _diagonals_model(
    polytope: RealizedPolytope, classification: DiagonalClassification
) -> DiagonalsModel:
    return DiagonalsModel(
        count=len(classification.classes),
        sizes=list(classification.sizes),
        representatives=sorted(classification.beta_reps),
        published=list(polytope.descriptor.diagonal_exponents),
        antipodal_index=classification.antipodal_index,
        antipodal_exponent=classification.antipodal_exponent,
        provenance=polytope.descriptor.diagonal_provenance,
    )


def _residue(
    subject: str, labels: list[str], sigmas: list[Permutation]
) -> ResidueModel:
    group = build_chain(sigmas)
    try:
        shape = classify_torus_44(group, sigmas)
    except (UnclassifiableResidueError, ValueError) as error:
        return ResidueModel(
            subject=subject,
            generators=labels,
            order=group.order,
            provenance=TORUS_PROVENANCE,
            detail=str(error),
        )
    return ResidueModel(
        subject=subject,
        generators=labels,
        shape=list(shape),
        order=group.order,
        provenance=TORUS_PROVENANCE,
    )


def toroidal_residues(artifacts: Artifacts) -> list[ResidueModel]:
    """``{4,4}`` residues of the cube and square extensions and of their halvings."""
    base = artifacts.extension.spec.base
    is_square = base.family is Family.POLYGON and base.parameter == 2
    if base.family is not Family.CUBE and not is_square:
        return []

    rhos = list(artifacts.extension.generators)
    residues = [
        _residue(artifacts.extension.spec.name, ["r0", "r1", "r2"], rhos[:3])
    ]
    if artifacts.halving is not None:
        tilde = artifacts.halving.generators
        residues.append(
            _residue(
                artifacts.halving.name,
                ["rt0", "r2", "r1"],
                [tilde[0], tilde[2], tilde[1]],
            )
        )
    return residues


def _cgroup_model(
    subject: str, gens: tuple[Permutation, ...], limits: Limits
) -> tuple[IntersectionCheck, CGroupModel]:
    check = intersection_property(
        gens, limits.intersection_bound, limits.intersection_order_bound
    )
    model = CGroupModel(
        subject=subject,
        status=check.status,
        pairs_checked=check.pairs_checked,
        failing_pair=(
            [list(check.failing_pair[0]), list(check.failing_pair[1])]
            if check.failing_pair
            else None
        ),
        detail=check.detail,
    )
    return check, model


def run_job(job: Job) -> Report:
    """Catalog, diagonals, extension, halving and the requested verification.

    Fatal failures stop the pipeline and are recorded in the report.
    """
    stopwatch = _Stopwatch(job.timings)
    sections: dict = {"job": _job_model(job)}
    cgroup: list[CGroupModel] = []
    geometry: list[GeometryModel] = []
    residues: list[ResidueModel] = []
    checks: list[IntersectionCheck] = []
    fatal = False
    error: Optional[str] = None
    spec = job.spec
    relations = job.level >= Level.RELATIONS

    try:
        with stopwatch.lap("catalog"):
            polytope = realize(spec.base, coset_limit=job.limits.coset_limit)
        sections["catalog"] = _catalog_model(polytope)

        with stopwatch.lap("diagonals"):
            classification = diagonal_classes(polytope)
            beta_representatives(polytope, classification)
        sections["diagonals"] = _diagonals_model(polytope, classification)

        with stopwatch.lap("extension"):
            extension = build_extension(polytope, classification, spec.s)
            extension_report = verify_extension(
                extension,
                tc_limit=job.limits.coset_limit,
                strategy=job.strategy,
                central_bound=job.limits.central_bound,
                enumerate_presentation=relations,
                central_symmetry=relations,
            )
        sections["extension"] = ExtensionModel(
            name=spec.name,
            type=spec.type_label,
            degree=extension.layout.degree,
            order=Claim(
                expected=spec.expected_order,
                computed=extension.concrete.order,
                provenance=ORDER_PROVENANCE,
            ),
            recipe_word_identical=extension.recipe_is_word_identical,
            layers=layer_models(extension_report),
            identities=extension_identities(extension) if relations else {},
        )
        extension_report.raise_for_failure()

        with stopwatch.lap("halving"):
            halving = realize_halving(extension)
            halving_report = verify_halving(
                halving,
                tc_limit=job.limits.coset_limit,
                strategy=job.strategy,
                enumerate_presentation=relations,
            )
        sections["halving"] = HalvingModel(
            name=halving.name,
            type=halving.type_label,
            order=Claim(
                expected=halving.expected_order,
                computed=halving.concrete.order,
                provenance=HALVING_PROVENANCE,
            ),
            diagram=[list(row) for row in halving.diagram],
            diagram_matches=halving.diagram_matches,
            layers=layer_models(halving_report),
            identities=halving_identities(halving) if relations else {},
        )
        halving_report.raise_for_failure()

        artifacts = Artifacts(polytope, classification, extension, halving)
        if relations:
            with stopwatch.lap("residues"):
                residues = toroidal_residues(artifacts)

        subjects = [
            (spec.name, extension.concrete, extension.generators),
            (halving.name, halving.concrete, halving.generators),
        ]
        if job.level >= Level.CGROUP:
            with stopwatch.lap("cgroup"):
                for subject, _, gens in subjects:
                    check, model = _cgroup_model(subject, gens, job.limits)
                    checks.append(check)
                    cgroup.append(model)
            fatal = any(check.status is LayerStatus.FAILED for check in checks)

        if job.level >= Level.GEOMETRY and not fatal:
            with stopwatch.lap("geometry"):
                for (subject, group, _), check in zip(subjects, checks):
                    result = certify(group, check, job.limits.geometry_bound)
                    geometry.append(
                        GeometryModel(
                            subject=subject,
                            intersection_property=result.intersection_property,
                            thin=result.thin,
                            residually_connected=result.residually_connected,
                            flag_transitive=result.flag_transitive,
                            chambers=result.chambers,
                            borel_order=result.borel_order,
                            borel_accounting=result.borel_accounting,
                            hypertope_certified=result.hypertope_certified,
                            residual_connectedness=result.residual_connectedness,
                            detail=result.detail,
                        )
                    )
                    if result.geometry_checked and not result.hypertope_certified:
                        fatal = True
    except HypertopeError as exception:
        logger.exception("Job %s failed", job.label)
        fatal = True
        error = f"{type(exception).__name__}: {exception}"

    return Report(
        **sections,
        cgroup=cgroup,
        geometry=geometry,
        residues=residues,
        fatal=fatal,
        error=error,
        timings=stopwatch.laps if job.timings else None,
    )


def export_presentation(job: Job, which: Which, path: "Path | str") -> Path:
    """Write the extension or halving presentation of ``job`` in the text format."""
    artifacts = build_artifacts(job, halving=which is Which.HALVING)
    presentation: Presentation
    if which is Which.HALVING:
        assert artifacts.halving is not None
        presentation = artifacts.halving.presentation
    else:
        presentation = artifacts.extension.presentation
    path = Path(path)
    FORMATTER.write(presentation, path)
    logger.info("Wrote %s presentation of %s to %s", which, job.label, path)
    return path


def _acceptance_jobs() -> list[Job]:
    def job(family: "Family | str", s: int, level: Level, **kwargs) -> Job:
        p = kwargs.pop("p", None)
        n = kwargs.pop("n", None)
        return Job.create(family, s, p=p, n=n, level=level, **kwargs)

    parabolic = L3Strategy.PARABOLIC
    return [
        job(Family.POLYGON, 2, Level.GEOMETRY, p=2),
        job(Family.POLYGON, 3, Level.GEOMETRY, p=2),
        job(Family.POLYGON, 2, Level.CGROUP, p=3),
        job(Family.ORTHOPLEX, 2, Level.CGROUP, n=3),
        job(Family.ORTHOPLEX, 3, Level.CGROUP, n=3),
        job(Family.ORTHOPLEX, 2, Level.CGROUP, n=4, strategy=parabolic),
        job(Family.ORTHOPLEX, 3, Level.CGROUP, n=4, strategy=parabolic),
        job(Family.CUBE, 2, Level.CGROUP, n=3),
        job(Family.CUBE, 2, Level.RELATIONS, n=4, strategy=parabolic),
        job(Family.ICOSAHEDRON, 2, Level.CGROUP, strategy=parabolic),
        job(Family.DODECAHEDRON, 2, Level.ORDERS),
        job(Family.CELL24, 2, Level.ORDERS),
        job(Family.CELL600, 2, Level.ORDERS),
        job(
            Family.CELL120,
            2,
            Level.ORDERS,
            stretch=True,
            expected_error="RepresentativeError",
        ),
        job(
            Family.DODECAHEDRON,
            2,
            Level.RELATIONS,
            strategy=parabolic,
            limits=Limits(coset_limit=20_000_000),
            stretch=True,
        ),
    ]


ACCEPTANCE_JOBS = _acceptance_jobs()


def suite_jobs(include_stretch: bool = False, timings: bool = False) -> list[Job]:
    return [
        replace(job, timings=timings)
        for job in ACCEPTANCE_JOBS
        if include_stretch or not job.stretch
    ]


def run_suite(
    jobs: list[Job], out_dir: "Path | str", workers: int = 1
) -> SuiteSummary:
    """Run ``jobs`` in a process pool and write one report per job plus a summary."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run_job, jobs))
    else:
        reports = [run_job(job) for job in jobs]

    entries = []
    for job, report in zip(jobs, reports):
        path = out_dir / f"{job.label}.json"
        path.write_text(report.to_json(), encoding="utf-8")
        entries.append(
            SuiteEntry(
                job=job.label,
                fatal=report.fatal,
                error=report.error,
                expected_error=job.expected_error,
                path=path.name,
            )
        )
        if entries[-1].expected:
            logger.info("Job %s: fatal as expected", job.label)
        else:
            log = logger.error if report.fatal else logger.info
            log("Job %s: %s", job.label, "fatal" if report.fatal else "ok")

    summary = SuiteSummary(jobs=entries)
    (out_dir / "summary.json").write_text(summary.to_json(), encoding="utf-8")
    return summary

