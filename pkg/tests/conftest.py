"""Shared test fixtures."""

import numpy as np
import pytest

from texturematrix.formats import save_image
from texturematrix.pixel_grid import PixelGrid

SEEDS = range(10)


def grid(rows: list[list[int]]) -> PixelGrid:
    """Single-channel grid from nested rows."""
    return PixelGrid(np.array(rows, dtype=np.uint8))


def random_grid(rng: np.random.Generator, levels: int = 256, channels: int = 1) -> PixelGrid:
    """Random grid up to 16x16 using grey levels 0..levels-1."""
    rows, cols = rng.integers(1, 17, size=2)
    return PixelGrid(rng.integers(0, levels, size=(channels, rows, cols), dtype=np.uint8))


# 3x4 image with distinct horizontal, vertical and diagonal textures.
TEXTURED = [
    [0, 0, 1, 1],
    [0, 0, 1, 1],
    [0, 2, 2, 2],
]


@pytest.fixture
def textured():
    return grid(TEXTURED)


@pytest.fixture
def constant_pgm(tmp_path):
    path = tmp_path / "const.pgm"
    save_image(grid([[7] * 5] * 4), path)
    return path


@pytest.fixture
def textured_pgm(tmp_path):
    path = tmp_path / "textured.pgm"
    save_image(grid(TEXTURED), path)
    return path


@pytest.fixture
def image_dir(tmp_path):
    """Directory of three small images with different textures."""
    directory = tmp_path / "images"
    directory.mkdir()
    rng = np.random.default_rng(7)
    save_image(grid(TEXTURED), directory / "a.pgm")
    save_image(PixelGrid(rng.integers(0, 256, size=(6, 6), dtype=np.uint8)), directory / "b.pgm")
    save_image(PixelGrid(rng.integers(0, 256, size=(3, 5, 5), dtype=np.uint8)), directory / "c.png")
    return directory
