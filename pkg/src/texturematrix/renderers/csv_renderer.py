"""CSV report rendering at table precision, one row per axis."""

import csv
import io

from texturematrix.corpus import TABLE_COLUMNS
from texturematrix.renderers.base import Renderer
from texturematrix.report import ReportDocument
from texturematrix.texture_stats import STATISTIC_NAMES, display_value

REPORT_COLUMNS = (*TABLE_COLUMNS, "average_contrast")


class CsvRenderer(Renderer):
    """Rows share the batch table layout, plus the image's average contrast."""

    def render(self, report: ReportDocument) -> str:
        average = (
            display_value("average_contrast", report.average_contrast)
            if report.average_contrast is not None
            else ""
        )
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        for axis in report.axes:
            stats = report.statistics[axis]
            values = stats.values()
            writer.writerow(
                [
                    report.image_label,
                    axis.label,
                    *(display_value(name, values[name]) for name in STATISTIC_NAMES),
                    display_value("prob_diff_0_19", report.groups[axis].smooth_probability),
                    int(stats.degenerate),
                    average,
                ]
            )
        return buffer.getvalue()
