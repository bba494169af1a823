"""JSON report rendering; full precision unless display precision is requested."""

import json
from typing import Any

from texturematrix.gldv import GroupedDifferenceVector
from texturematrix.renderers.base import Renderer
from texturematrix.report import ReportDocument
from texturematrix.texture_stats import TextureStatistics, display_value


def _number(name: str, value: float, display: bool) -> float:
    return float(display_value(name, value)) if display else value


def statistics_payload(stats: TextureStatistics, display: bool = False) -> dict[str, Any]:
    payload: dict[str, Any] = {
        name: _number(name, value, display) for name, value in stats.values().items()
    }
    payload["degenerate"] = stats.degenerate
    return payload


def group_gldv_payload(groups: GroupedDifferenceVector, display: bool = False) -> list[dict]:
    return [
        {
            "range_lo": entry.range_lo,
            "range_hi": entry.range_hi,
            "count": entry.count,
            "probability": _number("probability", entry.probability, display),
        }
        for entry in groups.entries()
    ]


def report_payload(report: ReportDocument, display: bool = False) -> dict[str, Any]:
    """Build the report object: image label, one key per axis, average contrast."""
    result: dict[str, Any] = {"image": report.image_label}
    for axis in report.axes:
        groups = report.groups[axis]
        result[axis.label] = {
            "statistics": statistics_payload(report.statistics[axis], display),
            "prob_diff_0_19": _number("prob_diff_0_19", groups.smooth_probability, display),
            "total_pairs": groups.total_pairs,
            "group_gldv": group_gldv_payload(groups, display),
        }
    if report.average_contrast is not None:
        result["average_contrast"] = _number(
            "average_contrast", report.average_contrast, display
        )
    return result


class JsonRenderer(Renderer):
    def render(self, report: ReportDocument) -> str:
        return json.dumps(report_payload(report, self._display_precision), indent=2) + "\n"
