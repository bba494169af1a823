"""Netpbm grey maps (P2/P5) and pixel maps (P3/P6) with maxval 255."""

import logging

import numpy as np

from texturematrix.errors import ContractError, ImageDimensionError, ImageFormatError
from texturematrix.formats.base import ImageFormat
from texturematrix.pixel_grid import PixelGrid

logger = logging.getLogger(__name__)

MAXVAL = 255

_CHANNELS = {b"P2": 1, b"P5": 1, b"P3": 3, b"P6": 3}
_PLAIN = (b"P2", b"P3")
_HEADER_FIELDS = ("width", "height", "maxval")


def _skip_space_and_comments(data: bytes, pos: int) -> int:
    while pos < len(data):
        char = data[pos : pos + 1]
        if char.isspace():
            pos += 1
        elif char == b"#":
            newline = data.find(b"\n", pos)
            pos = len(data) if newline < 0 else newline + 1
        else:
            break
    return pos


def _parse_int(token: bytes, field: str) -> int:
    if not token.isdigit():
        raise ImageFormatError(f"{field} is not a decimal integer: {token[:16]!r}", field=field)
    return int(token)


def parse_header(data: bytes) -> tuple[bytes, int, int, int]:
    """Parse a Netpbm header.

    Returns (magic, width, height, raster offset). Comments are tolerated
    anywhere between header tokens.
    """
    magic = data[:2]
    if magic not in _CHANNELS:
        raise ImageFormatError(f"unsupported Netpbm magic {magic!r}", field="magic")

    pos = 2
    values: list[int] = []
    for field in _HEADER_FIELDS:
        pos = _skip_space_and_comments(data, pos)
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace() and data[pos] != ord("#"):
            pos += 1
        if start == pos:
            raise ImageFormatError("header is truncated", field=field)
        values.append(_parse_int(data[start:pos], field))

    width, height, maxval = values
    if maxval != MAXVAL:
        raise ImageFormatError(f"maxval must be {MAXVAL}, got {maxval}", field="maxval")
    if width == 0:
        raise ImageDimensionError("image has zero width", field="width")
    if height == 0:
        raise ImageDimensionError("image has zero height", field="height")
    if pos >= len(data) or not data[pos : pos + 1].isspace():
        raise ImageFormatError("missing whitespace after maxval", field="maxval")
    # Exactly one whitespace byte separates the header from a binary raster.
    return magic, width, height, pos + 1


class NetpbmFormat(ImageFormat):
    """PGM/PPM reader and writer; binary (P5/P6) output by default."""

    suffixes = (".pgm", ".ppm", ".pnm")

    def __init__(self, binary: bool = True) -> None:
        self._binary = binary

    @classmethod
    def sniff(cls, header: bytes) -> bool:
        return header[:2] in _CHANNELS

    def decode(self, data: bytes) -> PixelGrid:
        magic, width, height, offset = parse_header(data)
        channels = _CHANNELS[magic]
        count = width * height * channels

        if magic in _PLAIN:
            body = data[offset - 1 :].splitlines()
            tokens = b" ".join(line.split(b"#", 1)[0] for line in body).split()
            if len(tokens) < count:
                raise ImageFormatError(
                    f"expected {count} samples, found {len(tokens)}", field="body"
                )
            try:
                samples = np.array([int(t) for t in tokens[:count]], dtype=np.int64)
            except ValueError as exc:
                raise ImageFormatError(f"non-numeric sample: {exc}", field="body") from exc
            if samples.min() < 0 or samples.max() > MAXVAL:
                raise ImageFormatError(f"sample outside [0, {MAXVAL}]", field="body")
            raster = samples.astype(np.uint8)
        else:
            if len(data) - offset < count:
                raise ImageFormatError(
                    f"raster is truncated: expected {count} bytes, found {len(data) - offset}",
                    field="body",
                )
            raster = np.frombuffer(data, dtype=np.uint8, count=count, offset=offset)

        logger.debug("Decoded %s %dx%d", magic.decode(), width, height)
        # Samples are interleaved per pixel; planes are split out here.
        return PixelGrid(raster.reshape(height, width, channels).transpose(2, 0, 1))

    def encode(self, image: PixelGrid) -> bytes:
        if image.channels == 1:
            magic = "P5" if self._binary else "P2"
        else:
            magic = "P6" if self._binary else "P3"
        header = f"{magic}\n{image.cols} {image.rows}\n{MAXVAL}\n".encode("ascii")
        interleaved = image.planes.transpose(1, 2, 0)
        if self._binary:
            return header + interleaved.tobytes()
        lines = (" ".join(str(v) for v in row.reshape(-1)) for row in interleaved)
        return header + ("\n".join(lines) + "\n").encode("ascii")


def encode_pgm(image: PixelGrid, binary: bool = True) -> bytes:
    """Encode a single-channel grid as P5 (binary) or P2 (plain) PGM."""
    if image.channels != 1:
        raise ContractError(f"PGM holds one channel, image has {image.channels}")
    return NetpbmFormat(binary=binary).encode(image)
