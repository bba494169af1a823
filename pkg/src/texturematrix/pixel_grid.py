"""Images as grids of 8-bit grey levels, and the neighbour geometry used to pair pixels."""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from texturematrix.errors import ContractError, ImageDimensionError

# ITU-R BT.601
_LUMA_WEIGHTS = (0.299, 0.587, 0.114)


class Direction(Enum):
    """Compass direction from a reference pixel to its neighbour, as (row, col) offsets.

    Rows grow downward and columns rightward, so North is row - 1.
    """

    E = (0, 1)
    NE = (-1, 1)
    N = (-1, 0)
    NW = (-1, -1)
    W = (0, -1)
    SW = (1, -1)
    S = (1, 0)
    SE = (1, 1)

    @property
    def offset(self) -> tuple[int, int]:
        return self.value

    @property
    def opposite(self) -> "Direction":
        dr, dc = self.value
        return Direction((-dr, -dc))

    @property
    def angle(self) -> int:
        """Compass angle in degrees, East = 0 counter-clockwise."""
        return _ANGLES[self]

    @classmethod
    def from_label(cls, label: str) -> "Direction":
        try:
            return cls[label.strip().upper()]
        except KeyError:
            raise ContractError(
                f"Unknown direction: {label!r}. Available: {', '.join(d.name.lower() for d in cls)}"
            ) from None


_ANGLES = {
    Direction.E: 0,
    Direction.NE: 45,
    Direction.N: 90,
    Direction.NW: 135,
    Direction.W: 180,
    Direction.SW: 225,
    Direction.S: 270,
    Direction.SE: 315,
}


class SymmetricAxis(Enum):
    """A pair of opposite directions whose co-occurrences are pooled symmetrically."""

    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    DIAGONAL_MAIN = "diagonal"
    DIAGONAL_ANTI = "diagonal-anti"

    @property
    def directions(self) -> tuple[Direction, Direction]:
        return _AXIS_DIRECTIONS[self]

    @property
    def label(self) -> str:
        return self.value

    @classmethod
    def from_label(cls, label: str) -> "SymmetricAxis":
        axis = _AXIS_ALIASES.get(label.strip().lower())
        if axis is None:
            raise ContractError(
                f"Unknown axis: {label!r}. Available: {', '.join(sorted(_AXIS_ALIASES))}"
            )
        return axis


_AXIS_DIRECTIONS = {
    SymmetricAxis.HORIZONTAL: (Direction.E, Direction.W),
    SymmetricAxis.VERTICAL: (Direction.S, Direction.N),
    SymmetricAxis.DIAGONAL_MAIN: (Direction.SE, Direction.NW),
    SymmetricAxis.DIAGONAL_ANTI: (Direction.NE, Direction.SW),
}

_AXIS_ALIASES = {
    "h": SymmetricAxis.HORIZONTAL,
    "horizontal": SymmetricAxis.HORIZONTAL,
    "v": SymmetricAxis.VERTICAL,
    "vertical": SymmetricAxis.VERTICAL,
    "diagonal": SymmetricAxis.DIAGONAL_MAIN,
    "diagonal-main": SymmetricAxis.DIAGONAL_MAIN,
    "diagonal-anti": SymmetricAxis.DIAGONAL_ANTI,
}

# Horizontal, Vertical and (main) Diagonal: the three matrices of a full analysis.
STANDARD_AXES = (SymmetricAxis.HORIZONTAL, SymmetricAxis.VERTICAL, SymmetricAxis.DIAGONAL_MAIN)


def neighbor_offset(direction: Direction) -> tuple[int, int]:
    """Return the (row, col) step from a reference pixel to its neighbour."""
    return direction.offset


def opposite(direction: Direction) -> Direction:
    return direction.opposite


@dataclass(frozen=True, eq=False)
class PixelGrid:
    """An immutable 8-bit image stored as ``(channels, rows, cols)`` planes.

    Each channel is an independent 2-D plane; no operation ever pairs pixels
    across channels.
    """

    planes: np.ndarray

    def __post_init__(self) -> None:
        planes = np.asarray(self.planes)
        if planes.ndim == 2:
            planes = planes[np.newaxis]
        if planes.ndim != 3:
            raise ContractError(f"expected a 2-D or 3-D array, got {planes.ndim} dimensions")
        channels, rows, cols = planes.shape
        if channels not in (1, 3):
            raise ContractError(f"channels must be 1 or 3, got {channels}")
        if rows == 0 or cols == 0:
            raise ImageDimensionError(f"image has zero size ({rows}x{cols})", field="dimensions")
        if not (np.issubdtype(planes.dtype, np.integer) or planes.dtype == np.bool_):
            raise ContractError(f"grey levels must be integers, got dtype {planes.dtype}")
        if planes.min() < 0 or planes.max() > 255:
            raise ContractError(
                f"grey levels must lie in [0, 255], got [{planes.min()}, {planes.max()}]"
            )
        planes = planes.astype(np.uint8, copy=True)
        planes.flags.writeable = False
        object.__setattr__(self, "planes", planes)

    @classmethod
    def from_values(cls, rows: int, cols: int, channels: int, values) -> "PixelGrid":
        """Build a grid from a flat row-major sequence, one full plane per channel."""
        flat = np.asarray(values)
        if flat.size != rows * cols * channels:
            raise ContractError(
                f"expected {rows * cols * channels} values for {rows}x{cols}x{channels}, "
                f"got {flat.size}"
            )
        return cls(flat.reshape(channels, rows, cols))

    @property
    def channels(self) -> int:
        return self.planes.shape[0]

    @property
    def rows(self) -> int:
        return self.planes.shape[1]

    @property
    def cols(self) -> int:
        return self.planes.shape[2]

    @property
    def values(self) -> np.ndarray:
        """Flat row-major view of all planes."""
        return self.planes.reshape(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PixelGrid):
            return NotImplemented
        return np.array_equal(self.planes, other.planes)

    def __repr__(self) -> str:
        return f"PixelGrid(rows={self.rows}, cols={self.cols}, channels={self.channels})"


def to_luma(image: PixelGrid) -> PixelGrid:
    """Collapse an RGB grid to one BT.601 luma plane, rounding half up."""
    if image.channels == 1:
        return image
    red, green, blue = image.planes.astype(np.float64)
    wr, wg, wb = _LUMA_WEIGHTS
    luma = np.floor(wr * red + wg * green + wb * blue + 0.5)
    return PixelGrid(np.clip(luma, 0, 255).astype(np.uint8))
