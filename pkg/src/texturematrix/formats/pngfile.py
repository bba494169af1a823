"""PNG decoding and encoding through pypng (8-bit greyscale and RGB only)."""

import io

import numpy as np
import png

from texturematrix.errors import ImageDimensionError, ImageFormatError
from texturematrix.formats.base import ImageFormat
from texturematrix.pixel_grid import PixelGrid

SIGNATURE = b"\x89PNG\r\n\x1a\n"


class PngFormat(ImageFormat):
    suffixes = (".png",)

    @classmethod
    def sniff(cls, header: bytes) -> bool:
        return header.startswith(SIGNATURE)

    def decode(self, data: bytes) -> PixelGrid:
        try:
            width, height, rows, info = png.Reader(bytes=data).read()
            if info.get("palette"):
                raise ImageFormatError("palette images are not supported", field="palette")
            if info["alpha"]:
                raise ImageFormatError("alpha channels are not supported", field="alpha")
            if info["bitdepth"] != 8:
                raise ImageFormatError(
                    f"bit depth must be 8, got {info['bitdepth']}", field="bitdepth"
                )
            if width == 0 or height == 0:
                raise ImageDimensionError("image has zero size", field="dimensions")
            pixels = np.vstack([np.asarray(row, dtype=np.uint8) for row in rows])
        except png.Error as exc:
            raise ImageFormatError(f"invalid PNG: {exc}", field="body") from exc

        channels = 1 if info["greyscale"] else 3
        return PixelGrid(pixels.reshape(height, width, channels).transpose(2, 0, 1))

    def encode(self, image: PixelGrid) -> bytes:
        writer = png.Writer(
            width=image.cols,
            height=image.rows,
            greyscale=image.channels == 1,
            bitdepth=8,
        )
        rows = image.planes.transpose(1, 2, 0).reshape(image.rows, -1)
        buffer = io.BytesIO()
        writer.write(buffer, rows.tolist())
        return buffer.getvalue()
