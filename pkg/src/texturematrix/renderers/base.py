"""Abstract base class for report renderers."""

from abc import ABC, abstractmethod

from texturematrix.report import ReportDocument


class Renderer(ABC):
    """A renderer serializes a report into one output format."""

    def __init__(self, config: dict) -> None:
        self._display_precision: bool = config.get("display_precision", False)

    @abstractmethod
    def render(self, report: ReportDocument) -> str:
        """Return the complete serialized report, ending with a newline."""
