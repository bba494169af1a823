"""Tests for matrix and difference vector CSV exports."""

import csv
import io
import math

import numpy as np

from texturematrix.exports import glcm_csv, gldv_csv, group_gldv_csv, nglcm_csv
from texturematrix.glcm import directional_glcm, normalize, symmetric_glcm
from texturematrix.gldv import gldv, group_gldv
from texturematrix.pixel_grid import Direction, PixelGrid, SymmetricAxis
from tests.conftest import grid


def test_glcm_rows_skip_zero_cells():
    text = glcm_csv(symmetric_glcm(grid([[5, 7]]), SymmetricAxis.HORIZONTAL))
    assert text == "i,j,count\n5,7,1\n7,5,1\n"


def test_directional_glcm_rows_are_sorted():
    text = glcm_csv(directional_glcm(grid([[9, 1, 4]]), Direction.E))
    assert text.splitlines() == ["i,j,count", "1,4,1", "9,1,1"]


def test_nglcm_probabilities_sum_to_one():
    rng = np.random.default_rng(2)
    image = PixelGrid(rng.integers(0, 256, size=(3, 9, 9), dtype=np.uint8))
    text = nglcm_csv(normalize(symmetric_glcm(image, SymmetricAxis.DIAGONAL_MAIN)))
    rows = list(csv.DictReader(io.StringIO(text)))
    assert abs(math.fsum(float(row["prob"]) for row in rows) - 1.0) < 1e-9


def test_gldv_has_every_difference():
    lines = gldv_csv(gldv(symmetric_glcm(grid([[5, 7]]), SymmetricAxis.HORIZONTAL))).splitlines()
    assert lines[0] == "difference,count,probability"
    assert len(lines) == 257
    assert lines[1] == "0,0,0.0"
    assert lines[3] == "2,2,1.0"


def test_group_gldv_has_thirteen_rows():
    groups = group_gldv(gldv(symmetric_glcm(grid([[5, 7]]), SymmetricAxis.HORIZONTAL)))
    lines = group_gldv_csv(groups).splitlines()
    assert lines[0] == "range_lo,range_hi,count,probability"
    assert len(lines) == 14
    assert lines[1] == "0,19,2,1.0"
    assert lines[-1] == "240,255,0,0.0"
