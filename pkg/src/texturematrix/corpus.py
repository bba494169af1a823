"""Batch analysis of image sets, contrast rankings and cross-statistic correlation."""

import csv
import io
import logging
import math
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from itertools import repeat
from pathlib import Path
from typing import TextIO, TypeVar

import numpy as np
from pydantic import BaseModel, ValidationError, field_validator

from texturematrix.errors import (
    ContractError,
    CorpusLoadError,
    DegenerateGeometryError,
    TextureMatrixError,
)
from texturematrix.formats import load_image
from texturematrix.gldv import GroupedDifferenceVector, gldv, group_gldv
from texturematrix.glcm import normalize, symmetric_glcm
from texturematrix.pixel_grid import STANDARD_AXES, PixelGrid, SymmetricAxis, to_luma
from texturematrix.texture_stats import (
    STATISTIC_NAMES,
    TextureStatistics,
    compute_stats,
    display_value,
)

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ("image", "axis", *STATISTIC_NAMES, "prob_diff_0_19", "degenerate")

# Statistics correlated against contrast, in report order.
REPORTED_STATISTICS = (
    "dissimilarity",
    "homogeneity",
    "entropy",
    "energy",
    "std_dev",
    "correlation",
    "prob_diff_0_19",
    "asm",
    "mean",
    "max_probability",
)

REFERENCE_TABLES = {
    "statistics": "reference_statistics.csv",
    "contrast": "reference_contrast.csv",
    "average-contrast": "reference_average_contrast.csv",
}


# ── Records and tables ───────────────────────────────────────────────


@dataclass(frozen=True)
class AxisAnalysis:
    """Statistics and Group GLDV of one image along one axis."""

    stats: TextureStatistics
    groups: GroupedDifferenceVector


@dataclass(frozen=True)
class StatRecord:
    image_label: str
    axis: SymmetricAxis
    stats: TextureStatistics | None
    prob_diff_0_19: float | None
    # Set instead of stats when the image has no pairs along the axis.
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None

    def value(self, name: str) -> float:
        if self.stats is None or self.prob_diff_0_19 is None:
            raise ContractError(f"{self.image_label} ({self.axis.label}) has no statistics")
        if name == "prob_diff_0_19":
            return self.prob_diff_0_19
        return self.stats.values()[name]


@dataclass
class CorpusTable:
    records: list[StatRecord]
    provenance: str = "computed"
    # (path, reason) for every image skipped by a lenient batch.
    failures: list[tuple[str, str]] = field(default_factory=list)

    def __post_init__(self) -> None:
        seen: set[tuple[str, SymmetricAxis]] = set()
        for record in self.records:
            key = (record.image_label, record.axis)
            if key in seen:
                raise ContractError(
                    f"duplicate record for {record.image_label!r} ({record.axis.label})"
                )
            seen.add(key)

    def valid_records(self) -> list[StatRecord]:
        return [r for r in self.records if r.ok]

    def for_axis(self, axis: SymmetricAxis) -> list[StatRecord]:
        return [r for r in self.valid_records() if r.axis is axis]


# ── Single image and batch analysis ──────────────────────────────────


def analyze_axis(image: PixelGrid, axis: SymmetricAxis) -> AxisAnalysis:
    """Run the GLCM, normalization, statistics and Group GLDV chain for one axis."""
    glcm = symmetric_glcm(image, axis)
    stats = compute_stats(normalize(glcm))
    return AxisAnalysis(stats=stats, groups=group_gldv(gldv(glcm)))


def analyze_image(
    image: PixelGrid, label: str, axes: Sequence[SymmetricAxis] = STANDARD_AXES
) -> list[StatRecord]:
    """One record per axis; an axis without pairs yields an error record."""
    records = []
    for axis in axes:
        try:
            analysis = analyze_axis(image, axis)
        except DegenerateGeometryError as exc:
            logger.debug("%s (%s): %s", label, axis.label, exc)
            records.append(StatRecord(label, axis, None, None, error=str(exc)))
            continue
        records.append(
            StatRecord(label, axis, analysis.stats, analysis.groups.smooth_probability)
        )
    return records


@dataclass(frozen=True)
class _ImageOutcome:
    path: str
    records: list[StatRecord]
    error: str | None = None


def _analyze_path(path: str, axes: Sequence[SymmetricAxis], luma: bool) -> _ImageOutcome:
    try:
        image = load_image(path)
    except (OSError, TextureMatrixError) as exc:
        return _ImageOutcome(path, [], str(exc))
    if luma:
        image = to_luma(image)
    return _ImageOutcome(path, analyze_image(image, path, axes))


def _unique_paths(paths: Iterable[str]) -> list[str]:
    unique: list[str] = []
    seen: set[str] = set()
    for path in paths:
        if path in seen:
            logger.warning("Ignoring repeated input %s", path)
            continue
        seen.add(path)
        unique.append(path)
    return unique


def analyze_corpus(
    paths: Iterable[str | Path],
    axes: Sequence[SymmetricAxis] = STANDARD_AXES,
    workers: int = 1,
    luma: bool = False,
    strict: bool = True,
) -> CorpusTable:
    """Analyze every image; records keep input order, then axis order.

    With ``strict`` a load failure aborts the batch; otherwise the image is
    skipped and listed in ``failures``. A path given more than once is
    analyzed once.
    """
    paths = _unique_paths(str(p) for p in paths)
    axes = tuple(axes)
    if workers > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(_analyze_path, paths, repeat(axes), repeat(luma)))
    else:
        outcomes = [_analyze_path(path, axes, luma) for path in paths]

    records: list[StatRecord] = []
    failures: list[tuple[str, str]] = []
    for outcome in outcomes:
        if outcome.error is not None:
            if strict:
                raise CorpusLoadError(outcome.path, outcome.error)
            logger.warning("Skipping %s: %s", outcome.path, outcome.error)
            failures.append((outcome.path, outcome.error))
            continue
        records.extend(outcome.records)

    logger.info(
        "Analyzed %d image(s): %d record(s), %d failure(s)",
        len(paths),
        len(records),
        len(failures),
    )
    return CorpusTable(records, "computed", failures)


# ── Rankings ─────────────────────────────────────────────────────────


def rank_records(table: CorpusTable, axis: SymmetricAxis) -> list[StatRecord]:
    """Records for ``axis`` by ascending contrast, ties broken by label."""
    return sorted(table.for_axis(axis), key=lambda r: (r.value("contrast"), r.image_label))


def rank_by_contrast(table: CorpusTable, axis: SymmetricAxis) -> list[tuple[str, float]]:
    return [(r.image_label, r.value("contrast")) for r in rank_records(table, axis)]


@dataclass(frozen=True)
class Anisotropy:
    image_label: str
    smoothest: SymmetricAxis
    roughest: SymmetricAxis
    contrast_ratio: float


def anisotropy(table: CorpusTable) -> list[Anisotropy]:
    """How much an image's contrast differs between its axes (max / min)."""
    by_image: dict[str, list[StatRecord]] = {}
    for record in table.valid_records():
        by_image.setdefault(record.image_label, []).append(record)

    results = []
    for label, records in by_image.items():
        if len(records) < 2:
            continue
        smooth = min(records, key=lambda r: r.value("contrast"))
        rough = max(records, key=lambda r: r.value("contrast"))
        low, high = smooth.value("contrast"), rough.value("contrast")
        if low > 0:
            ratio = high / low
        else:
            ratio = 1.0 if high == 0 else math.inf
        results.append(Anisotropy(label, smooth.axis, rough.axis, ratio))
    return results


# ── Correlation ──────────────────────────────────────────────────────


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Sample Pearson correlation coefficient."""
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    if x.ndim != 1 or x.shape != y.shape:
        raise ContractError(f"series lengths differ: {x.size} and {y.size}")
    if x.size < 2:
        raise ContractError(f"need at least 2 values, got {x.size}")
    if np.ptp(x) == 0 or np.ptp(y) == 0:
        raise ContractError("a series has zero variance")

    dx = x - x.mean()
    dy = y - y.mean()
    return math.fsum(dx * dy) / math.sqrt(math.fsum(dx * dx) * math.fsum(dy * dy))


class PoolingScheme(str, Enum):
    """Which records form one sample when correlating statistics."""

    ALL = "all"
    PER_AXIS = "per-axis"
    AXIS_AVERAGED = "axis-averaged"


@dataclass(frozen=True)
class CrossStatisticReport:
    pooling: PoolingScheme
    axis: SymmetricAxis | None
    sample_size: int
    provenance: str
    # (statistic, r against contrast); None when a column has zero variance.
    coefficients: list[tuple[str, float | None]]

    def header(self) -> str:
        scope = f"{self.pooling.value} ({self.axis.label})" if self.axis else self.pooling.value
        return f"# pooling: {scope}; samples: {self.sample_size}; source: {self.provenance}"

    def coefficient(self, name: str) -> float | None:
        return dict(self.coefficients)[name]


def _samples(
    table: CorpusTable, pooling: PoolingScheme, axis: SymmetricAxis | None
) -> dict[str, list[float]]:
    names = ("contrast", *REPORTED_STATISTICS)
    if pooling is PoolingScheme.PER_AXIS:
        if axis is None:
            raise ContractError("per-axis pooling needs an axis")
        records = table.for_axis(axis)
    else:
        records = table.valid_records()

    if pooling is not PoolingScheme.AXIS_AVERAGED:
        return {name: [r.value(name) for r in records] for name in names}

    by_image: dict[str, list[StatRecord]] = {}
    for record in records:
        by_image.setdefault(record.image_label, []).append(record)
    return {
        name: [math.fsum(r.value(name) for r in group) / len(group) for group in by_image.values()]
        for name in names
    }


def cross_statistic_report(
    table: CorpusTable,
    pooling: PoolingScheme = PoolingScheme.ALL,
    axis: SymmetricAxis | None = None,
) -> CrossStatisticReport:
    """Pearson r of every statistic against contrast over the pooled sample."""
    samples = _samples(table, pooling, axis)
    contrast = samples["contrast"]
    if len(contrast) < 2:
        raise ContractError(f"need at least 2 records to correlate, got {len(contrast)}")

    coefficients: list[tuple[str, float | None]] = []
    for name in REPORTED_STATISTICS:
        try:
            r = pearson(samples[name], contrast)
        except ContractError:
            logger.info("%s vs contrast is undefined (zero variance)", name)
            r = None
        coefficients.append((name, r))

    return CrossStatisticReport(
        pooling=pooling,
        axis=axis if pooling is PoolingScheme.PER_AXIS else None,
        sample_size=len(contrast),
        provenance=table.provenance,
        coefficients=coefficients,
    )


# ── Fixture and table files ──────────────────────────────────────────


def _parse_axis(value: object) -> object:
    return SymmetricAxis.from_label(value) if isinstance(value, str) else value


class StatisticsRow(BaseModel):
    """One line of a statistics table: every statistic of one image along one axis."""

    image: str
    axis: SymmetricAxis
    contrast: float
    dissimilarity: float
    homogeneity: float
    asm: float
    entropy: float
    mean: float
    energy: float
    std_dev: float
    correlation: float
    max_probability: float
    prob_diff_0_19: float
    degenerate: bool = False

    @field_validator("axis", mode="before")
    @classmethod
    def parse_axis(cls, v: object) -> object:
        return _parse_axis(v)

    def to_record(self) -> StatRecord:
        stats = TextureStatistics(
            **{name: getattr(self, name) for name in STATISTIC_NAMES},
            axis=self.axis,
            degenerate=self.degenerate,
        )
        return StatRecord(self.image, self.axis, stats, self.prob_diff_0_19)


class ContrastRow(BaseModel):
    """Contrast and probability of difference 0-19 of one image along one axis."""

    image: str
    axis: SymmetricAxis
    contrast: float
    prob_diff_0_19: float

    @field_validator("axis", mode="before")
    @classmethod
    def parse_axis(cls, v: object) -> object:
        return _parse_axis(v)


class AverageContrastRow(BaseModel):
    image: str
    average_contrast: float


_Row = TypeVar("_Row", bound=BaseModel)


def _read_source(source: str | Path) -> tuple[str, str]:
    """Return (name, text) of a packaged fixture name or a CSV path."""
    if isinstance(source, str) and source in REFERENCE_TABLES:
        resource = resources.files("texturematrix") / "data" / REFERENCE_TABLES[source]
        return source, resource.read_text(encoding="utf-8")
    path = Path(source)
    return path.stem, path.read_text(encoding="utf-8")


def _read_rows(source: str | Path, model: type[_Row]) -> tuple[str, list[_Row]]:
    name, text = _read_source(source)
    rows = []
    for line, raw in enumerate(csv.DictReader(io.StringIO(text)), start=2):
        try:
            rows.append(model.model_validate(raw))
        except ValidationError as exc:
            raise ContractError(f"{name} line {line}: {exc.errors()[0]['msg']}") from exc
    return name, rows


def load_fixture(source: str | Path = "statistics") -> CorpusTable:
    """Load a statistics CSV (packaged reference tables by default) as a table."""
    name, rows = _read_rows(source, StatisticsRow)
    logger.debug("Loaded %d record(s) from %s", len(rows), name)
    return CorpusTable([row.to_record() for row in rows], provenance=f"fixture:{name}")


def load_contrast_table(source: str | Path = "contrast") -> list[ContrastRow]:
    return _read_rows(source, ContrastRow)[1]


def load_average_contrast(source: str | Path = "average-contrast") -> dict[str, float]:
    return {row.image: row.average_contrast for row in _read_rows(source, AverageContrastRow)[1]}


@dataclass(frozen=True)
class AverageContrastCheck:
    image_label: str
    computed: float
    published: float

    @property
    def difference(self) -> float:
        return abs(self.computed - self.published)


def reconstruct_average_contrast(
    contrast_rows: Iterable[ContrastRow], published: dict[str, float]
) -> list[AverageContrastCheck]:
    """Average each image's three axis contrasts and pair it with the published value."""
    by_image: dict[str, dict[SymmetricAxis, float]] = {}
    for row in contrast_rows:
        by_image.setdefault(row.image, {})[row.axis] = row.contrast

    checks = []
    for label, contrasts in by_image.items():
        missing = [axis.label for axis in STANDARD_AXES if axis not in contrasts]
        if missing:
            raise ContractError(f"{label} lacks contrast for {', '.join(missing)}")
        if label not in published:
            raise ContractError(f"{label} has no published average contrast")
        computed = math.fsum(contrasts[axis] for axis in STANDARD_AXES) / len(STANDARD_AXES)
        checks.append(AverageContrastCheck(label, computed, published[label]))
    return checks


def write_table_csv(table: CorpusTable, stream: TextIO) -> None:
    """Write valid records at table precision, in the layout load_fixture reads."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for record in table.valid_records():
        values = record.stats.values()
        writer.writerow(
            [
                record.image_label,
                record.axis.label,
                *(display_value(name, values[name]) for name in STATISTIC_NAMES),
                display_value("prob_diff_0_19", record.prob_diff_0_19),
                int(record.stats.degenerate),
            ]
        )
