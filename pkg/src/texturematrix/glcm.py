"""Grey level co-occurrence matrices (GLCM) and their normalized probability form."""

import logging
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from texturematrix.errors import ContractError, DegenerateGeometryError
from texturematrix.pixel_grid import Direction, PixelGrid, SymmetricAxis

logger = logging.getLogger(__name__)

LEVELS = 256


def _readonly(array: np.ndarray, dtype: type) -> np.ndarray:
    array = np.array(array, dtype=dtype)
    if array.shape != (LEVELS, LEVELS):
        raise ContractError(f"matrix must be {LEVELS}x{LEVELS}, got {array.shape}")
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class CooccurrenceMatrix:
    """Pair counts indexed ``(reference level, neighbour level)``.

    Always full-range 256x256, whatever grey levels the image actually uses.
    """

    counts: np.ndarray
    tag: Direction | SymmetricAxis
    total_pairs: int = field(init=False)

    def __post_init__(self) -> None:
        counts = _readonly(self.counts, np.int64)
        if counts.min() < 0:
            raise ContractError("co-occurrence counts must be non-negative")
        if isinstance(self.tag, SymmetricAxis) and not np.array_equal(counts, counts.T):
            raise ContractError(f"{self.tag.label} counts are not symmetric")
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "total_pairs", int(counts.sum()))

    @property
    def is_symmetric(self) -> bool:
        return isinstance(self.tag, SymmetricAxis)

    def transpose(self) -> "CooccurrenceMatrix":
        """Swap reference and neighbour; a directional matrix becomes its opposite."""
        tag = self.tag.opposite if isinstance(self.tag, Direction) else self.tag
        return CooccurrenceMatrix(self.counts.T, tag)

    def trimmed_size(self) -> int:
        """Side of the smallest top-left block holding every non-zero cell."""
        rows, cols = np.nonzero(self.counts)
        if rows.size == 0:
            return 0
        return int(max(rows.max(), cols.max())) + 1

    def nonzero_cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(i, j, count)`` for every non-zero cell in row-major order."""
        for i, j in zip(*np.nonzero(self.counts)):
            yield int(i), int(j), int(self.counts[i, j])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CooccurrenceMatrix):
            return NotImplemented
        return self.tag == other.tag and np.array_equal(self.counts, other.counts)


@dataclass(frozen=True, eq=False)
class ProbabilityMatrix:
    """Joint probabilities P(i, j) of a symmetric co-occurrence matrix."""

    probs: np.ndarray
    tag: SymmetricAxis
    total_pairs: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "probs", _readonly(self.probs, np.float64))

    def nonzero_cells(self) -> Iterator[tuple[int, int, float]]:
        for i, j in zip(*np.nonzero(self.probs)):
            yield int(i), int(j), float(self.probs[i, j])


# ── Production accumulation ──────────────────────────────────────────


def _pair_levels(image: PixelGrid, direction: Direction) -> tuple[np.ndarray, np.ndarray]:
    """Return flat (reference, neighbour) levels for every in-bounds pair, all planes pooled."""
    dr, dc = direction.offset
    rows, cols = image.rows, image.cols
    if rows - abs(dr) <= 0 or cols - abs(dc) <= 0:
        raise DegenerateGeometryError(
            f"a {rows}x{cols} image has no {direction.name} neighbour pairs"
        )
    planes = image.planes
    reference = planes[:, max(0, -dr) : rows - max(0, dr), max(0, -dc) : cols - max(0, dc)]
    neighbour = planes[:, max(0, dr) : rows - max(0, -dr), max(0, dc) : cols - max(0, -dc)]
    return reference.astype(np.intp).ravel(), neighbour.astype(np.intp).ravel()


def _accumulate(codes: np.ndarray) -> np.ndarray:
    counts = np.bincount(codes, minlength=LEVELS * LEVELS)
    return counts.astype(np.int64).reshape(LEVELS, LEVELS)


def directional_glcm(image: PixelGrid, direction: Direction) -> CooccurrenceMatrix:
    """Count every (reference, neighbour) pair one step away in ``direction``."""
    reference, neighbour = _pair_levels(image, direction)
    matrix = CooccurrenceMatrix(_accumulate(reference * LEVELS + neighbour), direction)
    logger.debug("Built %s GLCM: %d pairs", direction.name, matrix.total_pairs)
    return matrix


def symmetric_glcm(image: PixelGrid, axis: SymmetricAxis) -> CooccurrenceMatrix:
    """Count pairs along both directions of ``axis`` in a single pass.

    Each pair found in the first direction is recorded as (i, j) and (j, i),
    which equals the sum of the two opposite directional matrices.
    """
    reference, neighbour = _pair_levels(image, axis.directions[0])
    codes = np.concatenate((reference * LEVELS + neighbour, neighbour * LEVELS + reference))
    matrix = CooccurrenceMatrix(_accumulate(codes), axis)
    logger.debug(
        "Built %s GLCM: %d pairs, levels 0..%d occupied",
        axis.label,
        matrix.total_pairs,
        matrix.trimmed_size() - 1,
    )
    return matrix


def normalize(glcm: CooccurrenceMatrix) -> ProbabilityMatrix:
    """Divide every cell by the total pair count."""
    if not isinstance(glcm.tag, SymmetricAxis):
        raise ContractError(f"only symmetric matrices are normalized, got {glcm.tag.name}")
    if glcm.total_pairs == 0:
        raise DegenerateGeometryError(f"{glcm.tag.label} matrix has no pairs")
    return ProbabilityMatrix(glcm.counts / glcm.total_pairs, glcm.tag, glcm.total_pairs)


# ── Reference oracle ─────────────────────────────────────────────────


def oracle_glcm(image: PixelGrid, direction: Direction) -> CooccurrenceMatrix:
    """Directional GLCM by a literal loop over every pixel and bounds-checked neighbour.

    Shares nothing with the vectorized path; tests compare the two.
    """
    dr, dc = direction.offset
    pairs: Counter[tuple[int, int]] = Counter()
    for plane in image.planes.tolist():
        height = len(plane)
        for r in range(height):
            width = len(plane[r])
            for c in range(width):
                nr, nc = r + dr, c + dc
                if 0 <= nr < height and 0 <= nc < width:
                    pairs[plane[r][c], plane[nr][nc]] += 1
    if not pairs:
        raise DegenerateGeometryError(f"no {direction.name} neighbour pairs")

    counts = np.zeros((LEVELS, LEVELS), dtype=np.int64)
    for (i, j), n in pairs.items():
        counts[i, j] = n
    return CooccurrenceMatrix(counts, direction)


def oracle_symmetric_glcm(image: PixelGrid, axis: SymmetricAxis) -> CooccurrenceMatrix:
    """Symmetric GLCM as the sum of two separately built oracle matrices."""
    first, second = (oracle_glcm(image, d) for d in axis.directions)
    return CooccurrenceMatrix(first.counts + second.counts, axis)
