"""Hand-emitted SVG bar charts of a Group GLDV."""

from xml.sax.saxutils import escape

from texturematrix.errors import ContractError
from texturematrix.gldv import GroupedDifferenceVector
from texturematrix.texture_stats import display_value

_MARGIN_LEFT = 60
_MARGIN_RIGHT = 20
_MARGIN_TOP = 50
_MARGIN_BOTTOM = 60
_Y_TICKS = (0.0, 0.25, 0.5, 0.75, 1.0)
_INK = "#2f2f2f"
_QUOTE = {'"': "&quot;"}


class SvgBuilder:
    """Accumulates SVG elements; ``document()`` closes the root element."""

    def __init__(self, width: int, height: int) -> None:
        self._parts = [
            '<?xml version="1.0" standalone="no"?>\n'
            f'<svg version="1.1" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}" xmlns="http://www.w3.org/2000/svg">\n'
        ]

    def rect(self, x: float, y: float, width: float, height: float, **attrs: str) -> None:
        self._parts.append(
            f'<rect x="{x:.6f}" y="{y:.6f}" width="{width:.6f}" height="{height:.6f}"'
            f"{_attrs(attrs)}/>\n"
        )

    def line(self, x1: float, y1: float, x2: float, y2: float, **attrs: str) -> None:
        self._parts.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"{_attrs(attrs)}/>\n'
        )

    def text(self, x: float, y: float, content: str, **attrs: str) -> None:
        self._parts.append(
            f'<text x="{x:.2f}" y="{y:.2f}"{_attrs(attrs)}>{escape(content)}</text>\n'
        )

    def group_start(self, **attrs: str) -> None:
        self._parts.append(f"<g{_attrs(attrs)}>\n")

    def group_end(self) -> None:
        self._parts.append("</g>\n")

    def document(self) -> str:
        return "".join(self._parts) + "</svg>\n"


def _attrs(attrs: dict[str, str]) -> str:
    # class_ -> class, text_anchor -> text-anchor
    return "".join(
        f' {key.rstrip("_").replace("_", "-")}="{escape(str(value), _QUOTE)}"'
        for key, value in attrs.items()
    )


def group_gldv_chart(
    groups: GroupedDifferenceVector,
    contrast: float,
    label: str,
    width: int = 800,
    height: int = 400,
    gutter: int = 20,
    bar_fill: str = "#4c78a8",
) -> str:
    """Render one bar per 20-level group; a bar of probability 1 fills the plot height.

    The plot frame (class ``frame``) spans exactly the full-height value, so bar
    heights divided by the frame height are the group probabilities.
    """
    entries = groups.entries()
    plot_width = width - _MARGIN_LEFT - _MARGIN_RIGHT
    plot_height = height - _MARGIN_TOP - _MARGIN_BOTTOM
    bar_width = (plot_width - gutter * (len(entries) + 1)) / len(entries)
    if bar_width <= 0 or plot_height <= 0:
        raise ContractError(f"a {width}x{height} chart has no room for {len(entries)} bars")
    baseline = _MARGIN_TOP + plot_height

    svg = SvgBuilder(width, height)
    svg.rect(0, 0, width, height, fill="#ffffff")
    svg.text(
        width / 2,
        _MARGIN_TOP / 2,
        f"{groups.tag.label.capitalize()} Group GLDV: {label}",
        text_anchor="middle",
        font_size="16",
        font_family="sans-serif",
        fill=_INK,
    )
    svg.rect(
        _MARGIN_LEFT, _MARGIN_TOP, plot_width, plot_height, class_="frame", fill="none", stroke=_INK
    )

    for tick in _Y_TICKS:
        y = baseline - tick * plot_height
        svg.line(_MARGIN_LEFT - 5, y, _MARGIN_LEFT, y, stroke=_INK)
        svg.text(
            _MARGIN_LEFT - 8, y + 4, f"{tick:g}", text_anchor="end", font_size="11", fill=_INK
        )

    svg.group_start(class_="bars", fill=bar_fill)
    for index, entry in enumerate(entries):
        x = _MARGIN_LEFT + gutter + index * (bar_width + gutter)
        bar_height = entry.probability * plot_height
        svg.rect(x, baseline - bar_height, bar_width, bar_height, class_="bar")
    svg.group_end()

    svg.group_start(class_="x-labels", font_size="10", font_family="sans-serif", fill=_INK)
    for index, entry in enumerate(entries):
        x = _MARGIN_LEFT + gutter + index * (bar_width + gutter) + bar_width / 2
        svg.text(x, baseline + 16, f"{entry.range_lo}-{entry.range_hi}", text_anchor="middle")
    svg.group_end()

    svg.text(
        width - _MARGIN_RIGHT,
        height - 15,
        f"Contrast: {display_value('contrast', contrast)}",
        id="contrast",
        text_anchor="end",
        font_size="13",
        font_family="sans-serif",
        fill=_INK,
    )
    return svg.document()
