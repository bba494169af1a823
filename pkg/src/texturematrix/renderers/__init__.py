"""Renderer registry and factory."""

from texturematrix.renderers.base import Renderer
from texturematrix.renderers.csv_renderer import CsvRenderer
from texturematrix.renderers.json_renderer import JsonRenderer

_RENDERERS: dict[str, type[Renderer]] = {
    "json": JsonRenderer,
    "csv": CsvRenderer,
}

RENDERER_NAMES = tuple(_RENDERERS)


def create_renderer(renderer_type: str, config: dict) -> Renderer:
    """Create a renderer instance by format name."""
    cls = _RENDERERS.get(renderer_type)
    if cls is None:
        raise ValueError(
            f"Unknown output format: {renderer_type!r}. Available: {', '.join(_RENDERERS)}"
        )
    return cls(config)
