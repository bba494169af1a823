"""Tests for co-occurrence matrix construction."""

import numpy as np
import pytest

from texturematrix.errors import ContractError, DegenerateGeometryError
from texturematrix.glcm import (
    CooccurrenceMatrix,
    directional_glcm,
    normalize,
    oracle_glcm,
    oracle_symmetric_glcm,
    symmetric_glcm,
)
from texturematrix.pixel_grid import Direction, PixelGrid, SymmetricAxis
from tests.conftest import SEEDS, grid, random_grid

# 20 seeds x 10 grids = 200 grids per channel count.
ORACLE_SEEDS = range(20)


@pytest.mark.parametrize("seed", ORACLE_SEEDS)
@pytest.mark.parametrize("channels", [1, 3])
def test_matches_oracle_on_random_grids(seed, channels):
    rng = np.random.default_rng(seed)
    for index in range(10):
        levels = 8 if index % 2 else 256
        image = random_grid(rng, levels=levels, channels=channels)
        for direction in Direction:
            try:
                expected = oracle_glcm(image, direction)
            except DegenerateGeometryError:
                with pytest.raises(DegenerateGeometryError):
                    directional_glcm(image, direction)
                continue
            assert directional_glcm(image, direction) == expected


@pytest.mark.parametrize("seed", SEEDS)
def test_transpose_is_the_opposite_direction(seed):
    rng = np.random.default_rng(seed)
    image = PixelGrid(rng.integers(0, 256, size=(3, 4, 5), dtype=np.uint8))
    for direction in Direction:
        transposed = directional_glcm(image, direction).transpose()
        assert transposed == directional_glcm(image, direction.opposite)


@pytest.mark.parametrize("direction", list(Direction))
def test_pair_count_formula(direction):
    image = PixelGrid(np.zeros((3, 6, 9), dtype=np.uint8))
    dr, dc = direction.offset
    assert directional_glcm(image, direction).total_pairs == 3 * (6 - abs(dr)) * (9 - abs(dc))


@pytest.mark.parametrize("seed", SEEDS)
def test_symmetric_matrix_is_sum_of_opposites(seed):
    rng = np.random.default_rng(seed)
    image = PixelGrid(rng.integers(0, 256, size=(3, 7, 6), dtype=np.uint8))
    for axis in SymmetricAxis:
        matrix = symmetric_glcm(image, axis)
        assert matrix == oracle_symmetric_glcm(image, axis)
        assert np.array_equal(matrix.counts, matrix.counts.T)
        first, second = axis.directions
        assert matrix.total_pairs == (
            directional_glcm(image, first).total_pairs + directional_glcm(image, second).total_pairs
        )


def test_horizontal_pair_of_two_pixels():
    matrix = symmetric_glcm(grid([[5, 7]]), SymmetricAxis.HORIZONTAL)
    assert list(matrix.nonzero_cells()) == [(5, 7, 1), (7, 5, 1)]
    assert matrix.total_pairs == 2
    assert matrix.trimmed_size() == 8


def test_directional_counts_on_a_small_image():
    image = grid([[0, 0, 1], [1, 2, 2]])
    east = directional_glcm(image, Direction.E)
    assert list(east.nonzero_cells()) == [(0, 0, 1), (0, 1, 1), (1, 2, 1), (2, 2, 1)]
    south = directional_glcm(image, Direction.S)
    assert list(south.nonzero_cells()) == [(0, 1, 1), (0, 2, 1), (1, 2, 1)]


def test_main_and_anti_diagonals_differ():
    image = grid([[0, 1], [1, 0]])
    main = symmetric_glcm(image, SymmetricAxis.DIAGONAL_MAIN)
    anti = symmetric_glcm(image, SymmetricAxis.DIAGONAL_ANTI)
    assert list(main.nonzero_cells()) == [(0, 0, 2)]
    assert list(anti.nonzero_cells()) == [(1, 1, 2)]


def test_channels_are_never_paired_with_each_other():
    image = PixelGrid(np.array([[[1, 1]], [[2, 2]], [[3, 3]]], dtype=np.uint8))
    matrix = directional_glcm(image, Direction.E)
    assert list(matrix.nonzero_cells()) == [(1, 1, 1), (2, 2, 1), (3, 3, 1)]


@pytest.mark.parametrize(
    ("shape", "direction"),
    [((1, 5), Direction.S), ((5, 1), Direction.E), ((1, 1), Direction.SE), ((1, 4), Direction.NE)],
)
def test_thin_images_have_no_pairs(shape, direction):
    with pytest.raises(DegenerateGeometryError):
        directional_glcm(PixelGrid(np.zeros(shape, dtype=np.uint8)), direction)


def test_single_row_still_pairs_horizontally():
    matrix = symmetric_glcm(grid([[3, 3, 3]]), SymmetricAxis.HORIZONTAL)
    assert list(matrix.nonzero_cells()) == [(3, 3, 4)]
    with pytest.raises(DegenerateGeometryError):
        symmetric_glcm(grid([[3, 3, 3]]), SymmetricAxis.VERTICAL)


def test_normalize_sums_to_one():
    rng = np.random.default_rng(11)
    image = PixelGrid(rng.integers(0, 256, size=(9, 9), dtype=np.uint8))
    probs = normalize(symmetric_glcm(image, SymmetricAxis.VERTICAL))
    assert abs(probs.probs.sum() - 1.0) < 1e-12
    assert probs.total_pairs == 2 * 8 * 9


def test_normalize_rejects_directional_and_empty_matrices():
    image = grid([[1, 2], [3, 4]])
    with pytest.raises(ContractError):
        normalize(directional_glcm(image, Direction.E))
    with pytest.raises(DegenerateGeometryError):
        normalize(CooccurrenceMatrix(np.zeros((256, 256)), SymmetricAxis.HORIZONTAL))


def test_symmetric_tag_requires_symmetric_counts():
    counts = np.zeros((256, 256), dtype=np.int64)
    counts[0, 5] = 3
    with pytest.raises(ContractError, match="not symmetric"):
        CooccurrenceMatrix(counts, SymmetricAxis.HORIZONTAL)
    assert CooccurrenceMatrix(counts, Direction.E).total_pairs == 3
    counts[5, 0] = 3
    assert CooccurrenceMatrix(counts, SymmetricAxis.HORIZONTAL).total_pairs == 6


def test_matrix_contract():
    with pytest.raises(ContractError):
        CooccurrenceMatrix(np.zeros((8, 8)), Direction.E)
    counts = np.zeros((256, 256))
    counts[1, 1] = -1
    with pytest.raises(ContractError):
        CooccurrenceMatrix(counts, Direction.E)
    assert CooccurrenceMatrix(np.zeros((256, 256)), Direction.E).trimmed_size() == 0
