"""Command-line interface for texturematrix."""

import argparse
import io
import logging
import math
import sys
from collections.abc import Sequence
from pathlib import Path

import yaml

from texturematrix.chart import group_gldv_chart
from texturematrix.config import AppConfig, load_config
from texturematrix.corpus import (
    PoolingScheme,
    analyze_axis,
    analyze_corpus,
    anisotropy,
    cross_statistic_report,
    load_fixture,
    rank_records,
    write_table_csv,
)
from texturematrix.errors import TextureMatrixError
from texturematrix.exports import EXPORT_KINDS, glcm_csv, gldv_csv, group_gldv_csv, nglcm_csv
from texturematrix.formats import SUPPORTED_SUFFIXES, load_image
from texturematrix.glcm import directional_glcm, normalize, symmetric_glcm
from texturematrix.gldv import gldv, group_gldv
from texturematrix.pixel_grid import STANDARD_AXES, Direction, PixelGrid, SymmetricAxis, to_luma
from texturematrix.renderers import RENDERER_NAMES, create_renderer
from texturematrix.report import build_report
from texturematrix.texture_stats import display_value

logger = logging.getLogger("texturematrix")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 64

AXIS_CHOICES = ("h", "horizontal", "v", "vertical", "diagonal", "diagonal-main", "diagonal-anti")
DIRECTION_CHOICES = tuple(d.name.lower() for d in Direction)

_AXIS_HELP = (
    "symmetric axis; 'diagonal' is the main diagonal (SE+NW), "
    "'diagonal-anti' the other one (NE+SW)"
)


class _ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors with exit code 64 instead of argparse's 2."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ── Parser ───────────────────────────────────────────────────────────


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("-c", "--config", help="Path to config YAML file")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )

    image_opts = _ArgumentParser(add_help=False)
    image_opts.add_argument(
        "--luma", action="store_true", default=None, help="collapse RGB to BT.601 luma first"
    )
    image_opts.add_argument("--out", help="write to this file instead of standard output")

    parser = _ArgumentParser(
        prog="texturematrix",
        description="GLCM and GLDV texture statistics for 8-bit images",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser(
        "analyze", parents=[common, image_opts], help="statistics of one image"
    )
    analyze.add_argument("image")
    analyze.add_argument(
        "--axis", action="append", choices=(*AXIS_CHOICES, "all"), help=_AXIS_HELP
    )
    analyze.add_argument("--format", choices=RENDERER_NAMES)
    analyze.add_argument(
        "--display-precision",
        action="store_true",
        default=None,
        help="round JSON values to table precision",
    )
    analyze.set_defaults(handler=cmd_analyze)

    batch = commands.add_parser(
        "batch", parents=[common, image_opts], help="statistics table of many images"
    )
    batch.add_argument("inputs", nargs="+", metavar="PATH", help="image files or directories")
    batch.add_argument(
        "--axis", action="append", choices=(*AXIS_CHOICES, "all"), help=_AXIS_HELP
    )
    batch.add_argument("--workers", type=int, help="worker processes (default 1)")
    batch.set_defaults(handler=cmd_batch)

    chart = commands.add_parser(
        "chart", parents=[common, image_opts], help="SVG bar chart of the Group GLDV"
    )
    chart.add_argument("image")
    chart.add_argument("--axis", choices=AXIS_CHOICES, default="horizontal", help=_AXIS_HELP)
    chart.set_defaults(handler=cmd_chart)

    export = commands.add_parser(
        "export", parents=[common, image_opts], help="matrix or difference vector as CSV"
    )
    export.add_argument("image")
    export.add_argument("what", choices=EXPORT_KINDS)
    placement = export.add_mutually_exclusive_group()
    placement.add_argument("--axis", choices=AXIS_CHOICES, help=_AXIS_HELP)
    placement.add_argument(
        "--direction", choices=DIRECTION_CHOICES, help="single direction (glcm only)"
    )
    export.set_defaults(handler=cmd_export)

    correlate = commands.add_parser(
        "correlate", parents=[common], help="Pearson r of each statistic against contrast"
    )
    correlate.add_argument("table", nargs="?", help="statistics CSV (default: packaged tables)")
    correlate.add_argument("--pooling", choices=[p.value for p in PoolingScheme])
    correlate.add_argument("--axis", choices=AXIS_CHOICES, help="axis for per-axis pooling")
    correlate.add_argument("--out", help="write to this file instead of standard output")
    correlate.set_defaults(handler=cmd_correlate)

    rank = commands.add_parser(
        "rank", parents=[common], help="images by ascending contrast per axis"
    )
    rank.add_argument("table", nargs="?", help="statistics CSV (default: packaged tables)")
    rank.add_argument(
        "--axis", action="append", choices=(*AXIS_CHOICES, "all"), help=_AXIS_HELP
    )
    rank.add_argument(
        "--anisotropy", action="store_true", help="contrast ratio between each image's axes"
    )
    rank.add_argument("--out", help="write to this file instead of standard output")
    rank.set_defaults(handler=cmd_rank)

    return parser


def _check_usage(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command == "export" and args.direction and args.what != "glcm":
        parser.error(f"--direction only applies to glcm exports, not {args.what}")
    if args.command == "correlate" and args.pooling == "per-axis" and not args.axis:
        parser.error("--pooling per-axis needs --axis")
    if args.command == "batch" and args.workers is not None and args.workers < 1:
        parser.error("--workers must be at least 1")


# ── Helpers ──────────────────────────────────────────────────────────


def _resolve_axes(labels: Sequence[str]) -> tuple[SymmetricAxis, ...]:
    axes: list[SymmetricAxis] = []
    for label in labels:
        axes.extend(STANDARD_AXES if label == "all" else [SymmetricAxis.from_label(label)])
    return tuple(dict.fromkeys(axes))


def _load(path: str, luma: bool) -> PixelGrid:
    image = load_image(path)
    return to_luma(image) if luma else image


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info("Wrote %s", out)
    else:
        sys.stdout.write(text)


def _collect_paths(inputs: Sequence[str]) -> list[Path]:
    paths: list[Path] = []
    for name in inputs:
        path = Path(name)
        if path.is_dir():
            paths.extend(
                sorted(p for p in path.iterdir() if p.suffix.lower() in SUPPORTED_SUFFIXES)
            )
        else:
            paths.append(path)
    return paths


def _override(flag: object, configured: object) -> object:
    return configured if flag is None else flag


# ── Commands ─────────────────────────────────────────────────────────


def cmd_analyze(args: argparse.Namespace, config: AppConfig) -> int:
    axes = _resolve_axes(args.axis or config.analysis.axes)
    image = _load(args.image, _override(args.luma, config.analysis.luma))
    report = build_report(image, args.image, axes)

    renderer = create_renderer(
        _override(args.format, config.output.format),
        {"display_precision": _override(args.display_precision, config.output.display_precision)},
    )
    _emit(renderer.render(report), args.out)
    return EXIT_OK


def cmd_batch(args: argparse.Namespace, config: AppConfig) -> int:
    paths = _collect_paths(args.inputs)
    table = analyze_corpus(
        paths,
        axes=_resolve_axes(args.axis or config.analysis.axes),
        workers=_override(args.workers, config.analysis.workers),
        luma=_override(args.luma, config.analysis.luma),
        strict=False,
    )
    for record in table.records:
        if not record.ok:
            logger.warning("%s (%s): %s", record.image_label, record.axis.label, record.error)

    buffer = io.StringIO()
    write_table_csv(table, buffer)
    _emit(buffer.getvalue(), args.out)

    if not table.valid_records():
        logger.error("No image analyzed successfully (%d input(s))", len(paths))
        return EXIT_FAILURE
    return EXIT_OK


def cmd_chart(args: argparse.Namespace, config: AppConfig) -> int:
    axis = SymmetricAxis.from_label(args.axis)
    image = _load(args.image, _override(args.luma, config.analysis.luma))
    analysis = analyze_axis(image, axis)
    svg = group_gldv_chart(
        analysis.groups,
        analysis.stats.contrast,
        args.image,
        width=config.chart.width,
        height=config.chart.height,
        gutter=config.chart.gutter,
        bar_fill=config.chart.bar_fill,
    )
    _emit(svg, args.out)
    return EXIT_OK


def cmd_export(args: argparse.Namespace, config: AppConfig) -> int:
    image = _load(args.image, _override(args.luma, config.analysis.luma))
    if args.direction:
        _emit(glcm_csv(directional_glcm(image, Direction.from_label(args.direction))), args.out)
        return EXIT_OK

    glcm = symmetric_glcm(image, SymmetricAxis.from_label(args.axis or "horizontal"))
    if args.what == "glcm":
        text = glcm_csv(glcm)
    elif args.what == "nglcm":
        text = nglcm_csv(normalize(glcm))
    elif args.what == "gldv":
        text = gldv_csv(gldv(glcm))
    else:
        text = group_gldv_csv(group_gldv(gldv(glcm)))
    _emit(text, args.out)
    return EXIT_OK


def cmd_correlate(args: argparse.Namespace, config: AppConfig) -> int:
    table = load_fixture(args.table or "statistics")
    pooling = PoolingScheme(args.pooling) if args.pooling else config.corpus.pooling
    axis = SymmetricAxis.from_label(args.axis) if args.axis else None
    report = cross_statistic_report(table, pooling, axis)

    lines = [report.header(), "statistic,r"]
    for name, r in report.coefficients:
        lines.append(f"{name},{display_value('correlation', r) if r is not None else ''}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_rank(args: argparse.Namespace, config: AppConfig) -> int:
    table = load_fixture(args.table or "statistics")
    if args.anisotropy:
        lines = ["image,smoothest,roughest,contrast_ratio"]
        for row in anisotropy(table):
            ratio = row.contrast_ratio
            shown = "inf" if math.isinf(ratio) else display_value("contrast", ratio)
            lines.append(f"{row.image_label},{row.smoothest.label},{row.roughest.label},{shown}")
        _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK

    lines = ["axis,rank,image,contrast,prob_diff_0_19"]
    for axis in _resolve_axes(args.axis or config.analysis.axes):
        for position, record in enumerate(rank_records(table, axis), start=1):
            lines.append(
                f"{axis.label},{position},{record.image_label},"
                f"{display_value('contrast', record.value('contrast'))},"
                f"{display_value('prob_diff_0_19', record.value('prob_diff_0_19'))}"
            )
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# ── Entry points ─────────────────────────────────────────────────────


def _configure_logging(verbosity: int) -> None:
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbosity, 2)]
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )
    logging.getLogger("texturematrix").setLevel(level)


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_usage(parser, args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    _configure_logging(args.verbose)
    try:
        config = load_config(args.config)
        return args.handler(args, config)
    except TextureMatrixError as exc:
        logger.error("%s", exc)
        return exc.exit_code
    except (OSError, ValueError, yaml.YAMLError) as exc:
        # pydantic ValidationError is a ValueError; fold its report onto one line
        logger.error("%s", " ".join(str(exc).split()))
        return EXIT_FAILURE


def run() -> None:
    """CLI entry point."""
    sys.exit(main())
