"""Tests for the ten second-order statistics."""

import math

import numpy as np
import pytest

from texturematrix.errors import ContractError
from texturematrix.glcm import ProbabilityMatrix, normalize, symmetric_glcm
from texturematrix.pixel_grid import PixelGrid, SymmetricAxis
from texturematrix.texture_stats import (
    STATISTIC_NAMES,
    TextureStatistics,
    average_contrast,
    column_mean,
    column_std_dev,
    compute_stats,
    display_value,
)
from tests.conftest import SEEDS, grid


def _stats(image: PixelGrid, axis: SymmetricAxis = SymmetricAxis.HORIZONTAL) -> TextureStatistics:
    return compute_stats(normalize(symmetric_glcm(image, axis)))


def _with_contrast(axis: SymmetricAxis, contrast: float) -> TextureStatistics:
    return TextureStatistics(
        contrast=contrast,
        dissimilarity=0.0,
        homogeneity=1.0,
        asm=1.0,
        energy=1.0,
        max_probability=1.0,
        entropy=0.0,
        mean=0.0,
        std_dev=0.0,
        correlation=1.0,
        axis=axis,
    )


def _literal_stats(probs: np.ndarray) -> dict[str, float]:
    """Every statistic as a plain double loop over all 256x256 cells."""
    cells = probs.tolist()
    size = len(cells)
    names = ("contrast", "dissimilarity", "homogeneity", "asm", "entropy", "mean")
    sums = dict.fromkeys(names, 0.0)
    biggest = 0.0
    for i in range(size):
        for j in range(size):
            p = cells[i][j]
            sums["contrast"] += p * (i - j) ** 2
            sums["dissimilarity"] += p * abs(i - j)
            sums["homogeneity"] += p / (1 + (i - j) ** 2)
            sums["asm"] += p * p
            if p > 0:
                sums["entropy"] -= p * math.log(p)
            sums["mean"] += i * p
            biggest = max(biggest, p)
    mean = sums["mean"]
    variance = covariance = 0.0
    for i in range(size):
        for j in range(size):
            p = cells[i][j]
            variance += p * (i - mean) ** 2
            covariance += p * (i - mean) * (j - mean)
    return {
        **sums,
        "energy": math.sqrt(sums["asm"]),
        "max_probability": biggest,
        "std_dev": math.sqrt(variance),
        "correlation": covariance / variance if variance else 1.0,
    }


def test_constant_image():
    stats = _stats(grid([[42] * 4] * 3))
    assert stats.contrast == 0.0
    assert stats.dissimilarity == 0.0
    assert stats.homogeneity == 1.0
    assert stats.asm == 1.0
    assert stats.energy == 1.0
    assert stats.max_probability == 1.0
    assert stats.entropy == 0.0
    assert stats.mean == 42.0
    assert stats.std_dev == 0.0
    assert stats.correlation == 1.0
    assert stats.degenerate is True


def test_two_pixel_image():
    stats = _stats(grid([[0, 1]]))
    assert stats.contrast == pytest.approx(1.0)
    assert stats.dissimilarity == pytest.approx(1.0)
    assert stats.homogeneity == pytest.approx(0.5)
    assert stats.asm == pytest.approx(0.5)
    assert stats.energy == pytest.approx(math.sqrt(0.5))
    assert stats.entropy == pytest.approx(math.log(2))
    assert stats.mean == pytest.approx(0.5)
    assert stats.std_dev == pytest.approx(0.5)
    assert stats.correlation == pytest.approx(-1.0)
    assert stats.max_probability == 0.5
    assert stats.degenerate is False


def test_extreme_two_pixel_image():
    stats = _stats(grid([[0, 255]]))
    assert stats.contrast == pytest.approx(65025.0, abs=1e-9)
    assert stats.dissimilarity == pytest.approx(255.0, abs=1e-9)
    assert stats.homogeneity == pytest.approx(1 / (1 + 255**2), abs=1e-9)
    assert stats.asm == pytest.approx(0.5, abs=1e-9)
    assert stats.entropy == pytest.approx(math.log(2), abs=1e-9)
    assert stats.mean == pytest.approx(127.5, abs=1e-9)
    assert stats.std_dev == pytest.approx(127.5, abs=1e-9)
    assert stats.correlation == pytest.approx(-1.0, abs=1e-9)


@pytest.mark.parametrize(
    ("rows", "axis"),
    [
        ([[0, 255]], SymmetricAxis.HORIZONTAL),
        ([[0, 1]], SymmetricAxis.HORIZONTAL),
        ([[3, 3], [3, 3]], SymmetricAxis.DIAGONAL_MAIN),
    ],
)
def test_small_images_match_literal_sums(rows, axis):
    matrix = normalize(symmetric_glcm(grid(rows), axis))
    expected = _literal_stats(matrix.probs)
    for name, value in compute_stats(matrix).values().items():
        assert value == pytest.approx(expected[name], rel=1e-9, abs=1e-9), name


@pytest.mark.parametrize("seed", SEEDS)
def test_random_images_match_literal_sums(seed):
    rng = np.random.default_rng(seed)
    rows, cols = rng.integers(2, 17, size=2)
    levels = (4, 256)[seed % 2]
    image = PixelGrid(rng.integers(0, levels, size=(rows, cols), dtype=np.uint8))
    axis = list(SymmetricAxis)[seed % len(SymmetricAxis)]
    matrix = normalize(symmetric_glcm(image, axis))
    expected = _literal_stats(matrix.probs)
    for name, value in compute_stats(matrix).values().items():
        assert value == pytest.approx(expected[name], rel=1e-9, abs=1e-9), name


@pytest.mark.parametrize("seed", SEEDS)
def test_statistic_identities(seed):
    rng = np.random.default_rng(seed)
    image = PixelGrid(rng.integers(0, 256, size=(3, 9, 7), dtype=np.uint8))
    for axis in SymmetricAxis:
        matrix = normalize(symmetric_glcm(image, axis))
        stats = compute_stats(matrix)
        occupied = np.count_nonzero(matrix.probs)
        assert stats.energy**2 == pytest.approx(stats.asm, rel=1e-12)
        assert 0.0 < stats.homogeneity <= 1.0
        assert 0.0 <= stats.entropy <= math.log(occupied) + 1e-12
        assert -1.0 - 1e-9 <= stats.correlation <= 1.0 + 1e-9
        assert stats.dissimilarity**2 <= stats.contrast + 1e-9
        assert column_mean(matrix) == stats.mean
        assert column_std_dev(matrix) == stats.std_dev


@pytest.mark.parametrize("seed", SEEDS)
def test_level_shift_moves_only_the_mean(seed):
    rng = np.random.default_rng(seed)
    values = rng.integers(0, 200, size=(8, 8), dtype=np.uint8)
    base = _stats(PixelGrid(values), SymmetricAxis.VERTICAL)
    shifted = _stats(PixelGrid(values + 50), SymmetricAxis.VERTICAL)
    for name in STATISTIC_NAMES:
        if name == "mean":
            continue
        assert getattr(shifted, name) == pytest.approx(getattr(base, name), rel=1e-9, abs=1e-12)
    assert shifted.mean == pytest.approx(base.mean + 50)


def test_uniform_cells_reach_log_n_entropy():
    # Four occupied cells with equal counts.
    image = grid([[0, 1, 0, 1], [2, 3, 2, 3]])
    stats = _stats(image)
    assert stats.entropy == pytest.approx(math.log(4))


def test_values_follow_table_column_order():
    stats = _stats(grid([[0, 1]]))
    assert tuple(stats.values()) == STATISTIC_NAMES


def test_rejects_unnormalized_or_asymmetric_input():
    counts = np.zeros((256, 256))
    counts[0, 0] = 2.0
    with pytest.raises(ContractError, match="sum"):
        compute_stats(ProbabilityMatrix(counts, SymmetricAxis.HORIZONTAL))

    probs = np.zeros((256, 256))
    probs[0, 1] = 1.0
    with pytest.raises(ContractError, match="not symmetric"):
        compute_stats(ProbabilityMatrix(probs, SymmetricAxis.HORIZONTAL))


@pytest.mark.parametrize(
    ("contrasts", "expected"),
    [((1.11, 1.00, 1.74), "1.28"), ((3462.06, 2276.93, 3780.63), "3173.21")],
)
def test_average_contrast(contrasts, expected):
    h, v, d = contrasts
    result = average_contrast(
        _with_contrast(SymmetricAxis.HORIZONTAL, h),
        _with_contrast(SymmetricAxis.VERTICAL, v),
        _with_contrast(SymmetricAxis.DIAGONAL_MAIN, d),
    )
    assert display_value("average_contrast", result) == expected


def test_average_contrast_checks_axes():
    horizontal = _with_contrast(SymmetricAxis.HORIZONTAL, 1.0)
    with pytest.raises(ContractError):
        average_contrast(horizontal, horizontal, horizontal)


@pytest.mark.parametrize(
    ("name", "value", "shown"),
    [
        ("contrast", 0.125, "0.13"),
        ("contrast", 0.0, "0.00"),
        ("homogeneity", 0.00005, "0.0001"),
        ("correlation", -0.83455, "-0.8346"),
        ("mean", 127.5, "127.50"),
    ],
)
def test_display_value_rounds_half_up(name, value, shown):
    assert display_value(name, value) == shown
