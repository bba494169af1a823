"""Per-image report: statistics and Group GLDV for each requested axis."""

from collections.abc import Sequence
from dataclasses import dataclass

from texturematrix.corpus import analyze_axis
from texturematrix.gldv import GroupedDifferenceVector
from texturematrix.pixel_grid import STANDARD_AXES, PixelGrid, SymmetricAxis
from texturematrix.texture_stats import TextureStatistics, average_contrast


@dataclass(frozen=True)
class ReportDocument:
    image_label: str
    statistics: dict[SymmetricAxis, TextureStatistics]
    groups: dict[SymmetricAxis, GroupedDifferenceVector]
    # Only set when Horizontal, Vertical and main Diagonal are all present.
    average_contrast: float | None

    @property
    def axes(self) -> list[SymmetricAxis]:
        return list(self.statistics)


def build_report(
    image: PixelGrid, label: str, axes: Sequence[SymmetricAxis] = STANDARD_AXES
) -> ReportDocument:
    """Analyze ``image`` along each axis (duplicates dropped, order kept).

    Raises DegenerateGeometryError if any requested axis has no pixel pairs.
    """
    analyses = {axis: analyze_axis(image, axis) for axis in dict.fromkeys(axes)}
    statistics = {axis: analysis.stats for axis, analysis in analyses.items()}

    average = None
    if all(axis in statistics for axis in STANDARD_AXES):
        average = average_contrast(*(statistics[axis] for axis in STANDARD_AXES))

    return ReportDocument(
        image_label=label,
        statistics=statistics,
        groups={axis: analysis.groups for axis, analysis in analyses.items()},
        average_contrast=average,
    )
