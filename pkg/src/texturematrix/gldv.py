"""Grey level difference vectors: a symmetric GLCM collapsed along |i - j|."""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from texturematrix.errors import ContractError, DegenerateGeometryError
from texturematrix.glcm import LEVELS, CooccurrenceMatrix
from texturematrix.pixel_grid import SymmetricAxis

GROUP_WIDTH = 20
GROUP_RANGES: tuple[tuple[int, int], ...] = tuple(
    (lo, min(lo + GROUP_WIDTH - 1, LEVELS - 1)) for lo in range(0, LEVELS, GROUP_WIDTH)
)

_DIFFERENCES = np.arange(LEVELS, dtype=np.float64)


class DifferenceEntry(NamedTuple):
    difference: int
    count: int
    probability: float


class GroupEntry(NamedTuple):
    range_lo: int
    range_hi: int
    count: int
    probability: float


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class DifferenceVector:
    """Occurrences and probabilities of each difference 0..255."""

    counts: np.ndarray
    probabilities: np.ndarray
    tag: SymmetricAxis
    total_pairs: int

    def entries(self) -> list[DifferenceEntry]:
        return [
            DifferenceEntry(d, int(n), float(p))
            for d, (n, p) in enumerate(zip(self.counts, self.probabilities))
        ]

    def contrast(self) -> float:
        return math.fsum(_DIFFERENCES**2 * self.probabilities)

    def dissimilarity(self) -> float:
        return math.fsum(_DIFFERENCES * self.probabilities)

    def homogeneity(self) -> float:
        return math.fsum(self.probabilities / (1.0 + _DIFFERENCES**2))


@dataclass(frozen=True, eq=False)
class GroupedDifferenceVector:
    """The difference vector summed into 13 fixed buckets (0-19, ..., 240-255)."""

    counts: np.ndarray
    probabilities: np.ndarray
    tag: SymmetricAxis
    total_pairs: int

    def entries(self) -> list[GroupEntry]:
        return [
            GroupEntry(lo, hi, int(n), float(p))
            for (lo, hi), n, p in zip(GROUP_RANGES, self.counts, self.probabilities)
        ]

    @property
    def smooth_probability(self) -> float:
        """Probability of a difference in 0-19."""
        return float(self.probabilities[0])


def gldv(glcm: CooccurrenceMatrix) -> DifferenceVector:
    """Sum the main diagonal and each pair of lines parallel to it.

    Difference 0 is the main diagonal; difference d > 0 is the two lines d
    cells above and below it.
    """
    if not isinstance(glcm.tag, SymmetricAxis):
        raise ContractError(f"difference vectors need a symmetric matrix, got {glcm.tag.name}")
    if glcm.total_pairs == 0:
        raise DegenerateGeometryError(f"{glcm.tag.label} matrix has no pairs")

    counts = np.array(
        [np.trace(glcm.counts, d) + (np.trace(glcm.counts, -d) if d else 0) for d in range(LEVELS)],
        dtype=np.int64,
    )
    return DifferenceVector(
        counts=_frozen(counts),
        probabilities=_frozen(counts / glcm.total_pairs),
        tag=glcm.tag,
        total_pairs=glcm.total_pairs,
    )


def group_gldv(vector: DifferenceVector) -> GroupedDifferenceVector:
    """Collapse 256 differences into the 13 fixed 20-wide groups."""
    starts = [lo for lo, _ in GROUP_RANGES]
    counts = np.add.reduceat(vector.counts, starts).astype(np.int64)
    return GroupedDifferenceVector(
        counts=_frozen(counts),
        probabilities=_frozen(counts / vector.total_pairs),
        tag=vector.tag,
        total_pairs=vector.total_pairs,
    )
