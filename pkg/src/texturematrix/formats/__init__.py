"""Image format registry and file-level load/save."""

import logging
from pathlib import Path

from texturematrix.errors import ImageFormatError
from texturematrix.formats.base import ImageFormat
from texturematrix.formats.netpbm import NetpbmFormat, encode_pgm
from texturematrix.formats.pngfile import PngFormat
from texturematrix.pixel_grid import PixelGrid

logger = logging.getLogger(__name__)

_FORMATS: dict[str, type[ImageFormat]] = {
    "netpbm": NetpbmFormat,
    "png": PngFormat,
}

SUPPORTED_SUFFIXES = tuple(suffix for cls in _FORMATS.values() for suffix in cls.suffixes)


def create_format(format_name: str) -> ImageFormat:
    """Create an image format instance by name."""
    cls = _FORMATS.get(format_name)
    if cls is None:
        raise ValueError(
            f"Unknown image format: {format_name!r}. Available: {', '.join(_FORMATS)}"
        )
    return cls()


def format_for_data(data: bytes) -> ImageFormat:
    for cls in _FORMATS.values():
        if cls.sniff(data[:16]):
            return cls()
    raise ImageFormatError(f"unrecognized file signature {data[:8]!r}", field="magic")


def format_for_path(path: str | Path) -> ImageFormat:
    suffix = Path(path).suffix.lower()
    for cls in _FORMATS.values():
        if suffix in cls.suffixes:
            return cls()
    raise ImageFormatError(
        f"cannot encode {suffix or 'suffix-less'} files. "
        f"Supported: {', '.join(SUPPORTED_SUFFIXES)}",
        field="suffix",
    )


def load_image(path: str | Path) -> PixelGrid:
    """Read an image file, choosing the decoder from its signature."""
    path = Path(path)
    data = path.read_bytes()
    image = format_for_data(data).decode(data)
    logger.debug(
        "Loaded %s (%dx%d, %d channel(s))", path, image.rows, image.cols, image.channels
    )
    return image


def save_image(image: PixelGrid, path: str | Path) -> None:
    """Write an image file, choosing the encoder from the path suffix."""
    path = Path(path)
    if path.suffix.lower() == ".pgm":
        data = encode_pgm(image)
    else:
        data = format_for_path(path).encode(image)
    path.write_bytes(data)
    logger.debug("Saved %s", path)
