"""CSV exports of count matrices, probability matrices and difference vectors."""

import csv
import io
from collections.abc import Iterable

from texturematrix.glcm import CooccurrenceMatrix, ProbabilityMatrix
from texturematrix.gldv import DifferenceVector, GroupedDifferenceVector

EXPORT_KINDS = ("glcm", "nglcm", "gldv", "group-gldv")


def _csv(header: tuple[str, ...], rows: Iterable[Iterable[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def glcm_csv(matrix: CooccurrenceMatrix) -> str:
    """Non-zero cells as ``i,j,count`` sorted by (i, j)."""
    return _csv(("i", "j", "count"), matrix.nonzero_cells())


def nglcm_csv(matrix: ProbabilityMatrix) -> str:
    # repr keeps every digit, so the written values still sum to 1.
    return _csv(("i", "j", "prob"), ((i, j, repr(p)) for i, j, p in matrix.nonzero_cells()))


def gldv_csv(vector: DifferenceVector) -> str:
    """All 256 differences, zero counts included."""
    return _csv(
        ("difference", "count", "probability"),
        ((e.difference, e.count, repr(e.probability)) for e in vector.entries()),
    )


def group_gldv_csv(groups: GroupedDifferenceVector) -> str:
    return _csv(
        ("range_lo", "range_hi", "count", "probability"),
        ((e.range_lo, e.range_hi, e.count, repr(e.probability)) for e in groups.entries()),
    )
