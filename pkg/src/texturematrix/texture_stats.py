"""Second-order texture statistics of a normalized symmetric GLCM."""

import logging
import math
from dataclasses import asdict, dataclass
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from texturematrix.errors import ContractError
from texturematrix.glcm import ProbabilityMatrix
from texturematrix.pixel_grid import SymmetricAxis

logger = logging.getLogger(__name__)

NORMALIZATION_TOLERANCE = 1e-9

# Column order used by every table, report and fixture.
STATISTIC_NAMES = (
    "contrast",
    "dissimilarity",
    "homogeneity",
    "asm",
    "entropy",
    "mean",
    "energy",
    "std_dev",
    "correlation",
    "max_probability",
)

# Decimal places used when a value is shown in a table.
DISPLAY_PLACES = {
    "contrast": 2,
    "dissimilarity": 2,
    "entropy": 2,
    "mean": 2,
    "std_dev": 2,
    "average_contrast": 2,
    "homogeneity": 4,
    "asm": 4,
    "energy": 4,
    "correlation": 4,
    "max_probability": 4,
    "prob_diff_0_19": 4,
    "probability": 4,
}


@dataclass(frozen=True)
class TextureStatistics:
    contrast: float
    dissimilarity: float
    homogeneity: float
    asm: float
    energy: float
    max_probability: float
    entropy: float  # natural log
    mean: float
    std_dev: float
    correlation: float
    axis: SymmetricAxis
    # True when sigma is zero and correlation was set to 1 by convention.
    degenerate: bool = False

    def values(self) -> dict[str, float]:
        """Statistic values keyed by name, in STATISTIC_NAMES order."""
        raw = asdict(self)
        return {name: raw[name] for name in STATISTIC_NAMES}


def display_value(name: str, value: float) -> str:
    """Format ``value`` with the table precision for ``name``, rounding half up."""
    places = DISPLAY_PLACES.get(name, 4)
    quantum = Decimal(1).scaleb(-places)
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def compute_stats(matrix: ProbabilityMatrix) -> TextureStatistics:
    """Evaluate all ten statistics over the non-zero cells, in row-major order.

    Zero cells contribute nothing to any sum (0 * ln 0 is taken as 0), so
    skipping them matches the full 256x256 summation. Sums use math.fsum,
    which is exactly rounded and therefore independent of summation order.
    """
    probs = matrix.probs
    total = math.fsum(probs.ravel())
    if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
        raise ContractError(f"probabilities sum to {total!r}, not 1")
    if probs.min() < 0:
        raise ContractError("probabilities must be non-negative")
    if not np.array_equal(probs, probs.T):
        raise ContractError(f"{matrix.tag.label} probability matrix is not symmetric")

    rows, cols = np.nonzero(probs)
    p = probs[rows, cols]
    i = rows.astype(np.float64)
    j = cols.astype(np.float64)
    diff = i - j

    asm = math.fsum(p * p)
    mean = math.fsum(i * p)
    variance = math.fsum((i - mean) ** 2 * p)
    if variance == 0.0:
        correlation, degenerate = 1.0, True
        logger.debug("%s: zero variance, correlation set to 1", matrix.tag.label)
    else:
        correlation = math.fsum(p * (i - mean) * (j - mean)) / variance
        degenerate = False

    return TextureStatistics(
        contrast=math.fsum(diff**2 * p),
        dissimilarity=math.fsum(np.abs(diff) * p),
        homogeneity=math.fsum(p / (1.0 + diff**2)),
        asm=asm,
        energy=math.sqrt(asm),
        max_probability=float(p.max()),
        entropy=math.fsum(-p * np.log(p)),
        mean=mean,
        std_dev=math.sqrt(variance),
        correlation=correlation,
        axis=matrix.tag,
        degenerate=degenerate,
    )


def column_mean(matrix: ProbabilityMatrix) -> float:
    """Mean over the neighbour index j; equals ``mean`` for symmetric input."""
    rows, cols = np.nonzero(matrix.probs)
    return math.fsum(cols.astype(np.float64) * matrix.probs[rows, cols])


def column_std_dev(matrix: ProbabilityMatrix) -> float:
    """Standard deviation over j; equals ``std_dev`` for symmetric input."""
    rows, cols = np.nonzero(matrix.probs)
    p = matrix.probs[rows, cols]
    j = cols.astype(np.float64)
    mean = column_mean(matrix)
    return math.sqrt(math.fsum((j - mean) ** 2 * p))


def average_contrast(
    horizontal: TextureStatistics,
    vertical: TextureStatistics,
    diagonal: TextureStatistics,
) -> float:
    """Mean of the Horizontal, Vertical and Diagonal contrast values."""
    if horizontal.axis is not SymmetricAxis.HORIZONTAL:
        raise ContractError(f"expected horizontal statistics, got {horizontal.axis.label}")
    if vertical.axis is not SymmetricAxis.VERTICAL:
        raise ContractError(f"expected vertical statistics, got {vertical.axis.label}")
    if diagonal.axis not in (SymmetricAxis.DIAGONAL_MAIN, SymmetricAxis.DIAGONAL_ANTI):
        raise ContractError(f"expected diagonal statistics, got {diagonal.axis.label}")
    return (horizontal.contrast + vertical.contrast + diagonal.contrast) / 3
