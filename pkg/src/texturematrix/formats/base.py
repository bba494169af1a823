"""Abstract base class for image file formats."""

from abc import ABC, abstractmethod

from texturematrix.pixel_grid import PixelGrid


class ImageFormat(ABC):
    """Decodes and encodes one family of 8-bit image files."""

    suffixes: tuple[str, ...] = ()

    @classmethod
    @abstractmethod
    def sniff(cls, header: bytes) -> bool:
        """Return True if ``header`` starts with this format's signature."""

    @abstractmethod
    def decode(self, data: bytes) -> PixelGrid:
        """Decode a complete file into a grid, preserving every grey level."""

    @abstractmethod
    def encode(self, image: PixelGrid) -> bytes:
        """Encode a grid into a complete file."""
