"""Exception hierarchy shared by the library and the command line."""


class TextureMatrixError(Exception):
    """Base class for every error raised by texturematrix."""

    exit_code = 1


class ImageFormatError(TextureMatrixError):
    """The file is not a supported 8-bit image, or its header is malformed."""

    def __init__(self, message: str, field: str | None = None) -> None:
        super().__init__(f"{message} (field: {field})" if field else message)
        self.field = field


class ImageDimensionError(ImageFormatError):
    """The image declares zero rows or zero columns."""


class DegenerateGeometryError(TextureMatrixError):
    """No pixel pair exists for the requested direction or axis."""

    exit_code = 2


class ContractError(TextureMatrixError, ValueError):
    """An operation was called with arguments outside its contract."""


class CorpusLoadError(TextureMatrixError):
    """An image of a batch could not be loaded."""

    def __init__(self, path: str, reason: str) -> None:
        super().__init__(f"{path}: {reason}")
        self.path = path
