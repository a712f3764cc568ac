#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: commands.py
# @Created:   2026-09-27 10:51:04
# @Modified:  2026-10-17 00:12:36

from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import click

from . import __version__
from .constants import (
    CONFIGURATION_CONTENTS,
    CONFIGURATION_FILENAME,
    CONFIGURATION_SECTION,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    PACKAGE_NAME,
)
from .duality import (
    dualizing_complex,
    global_pv_consequence,
    homological_manifold_check,
    pv_check,
    restriction_comparison,
)
from .errors import SheafHomologyError
from .files import Settings, corpus_files, load_settings, resolve
from .homology import (
    bar_homology,
    cohomology,
    duality_sequence_check,
    excision_check,
    homology,
    kunneth,
    local_homology,
    local_homology_sequence_check,
    local_mv_check,
    mv_closed_check,
    mv_open_check,
    universal_coefficients,
    verify,
)
from .log import child_logger, set_log_level
from .output import degree_lines, dumps, group_json, out, out_json, verdict
from .poset import FinitePoset, parse_subset
from .report import Report
from .schema import parse, parse_group, sheaf_to_json, space_to_json
from .sheaf import Sheaf, constant_sheaf
from .zlinalg import FgAbGroup

logger = child_logger(__name__)

Z = FgAbGroup.free(1)


class InputFailure(click.ClickException):
    """A library error surfaced to the command line."""

    exit_code = EXIT_INPUT_ERROR


class SheafGroup(click.Group):
    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except SheafHomologyError as e:
            raise InputFailure(str(e)) from None


class Input:
    """A parsed space with the sheaf to work on."""

    def __init__(self, name: str, space: FinitePoset, sheaf: Sheaf) -> None:
        self.name = name
        self.space = space
        self.sheaf = sheaf


def load_input(space: str, sheaf: Optional[str] = None) -> Input:
    """Read SPACE and the --sheaf file; the constant sheaf Z when none is given."""
    space_path, space_text = resolve(space)
    if sheaf is None:
        name, p, _ = parse(space_path, space_text=space_text)
        return Input(name, p, constant_sheaf(p, Z))
    sheaf_path, sheaf_text = resolve(sheaf)
    name, p, f = parse(space_path, sheaf_path, space_text, sheaf_text)
    return Input(name, p, f)


def settings_of(ctx: click.Context) -> Settings:
    return ctx.ensure_object(Settings)


def max_deg_of(ctx: click.Context, max_deg: Optional[int]) -> int:
    return settings_of(ctx).max_deg if max_deg is None else max_deg


def input_options(fn: Callable) -> Callable:
    """SPACE, --sheaf and --max-deg, shared by every computing command."""
    fn = click.option(
        "--max-deg",
        type=click.IntRange(min=0),
        default=None,
        help="Highest degree to compute.",
    )(fn)
    fn = click.option("--sheaf", help="Sheaf file on SPACE (default: constant Z).")(fn)
    return click.argument("space")(fn)


def subset_option(*decls: str, help: str) -> Callable:
    return click.option(*decls, required=True, metavar="A,B,...", help=help)


# emitting results


def emit_groups(
    ctx: click.Context,
    command: str,
    name: str,
    groups: Sequence[FgAbGroup],
    symbol: str = "H",
    superscript: bool = False,
) -> None:
    if settings_of(ctx).json:
        out_json({"command": command, "space": name, "groups": [group_json(g) for g in groups]})
        return
    for line in degree_lines(groups, symbol, superscript):
        out(line)


def print_report(report: Report) -> None:
    *body, last = str(report).splitlines()
    for line in body:
        out(line)
    verdict(report.passed, last)


def emit_reports(ctx: click.Context, reports: List[Report]) -> None:
    """Print every report and leave with 1 when any of them failed."""
    if settings_of(ctx).json:
        if len(reports) == 1:
            out_json(reports[0].to_json())
        else:
            out_json([r.to_json() for r in reports])
    else:
        for report in reports:
            print_report(report)
    code = max((r.return_code for r in reports), default=EXIT_OK)
    ctx.exit(code)


# the command group


@click.group(cls=SheafGroup, context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name=PACKAGE_NAME)
@click.option("-v", "--verbose", count=True, help="-v for progress, -vv for debugging.")
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False),
    help="Read options from this TOML file instead of the discovered ones.",
)
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker threads.")
@click.option("--json/--no-json", "as_json", default=None, help="Structured output.")
@click.option("--color/--no-color", default=None, help="Colored verdicts and logs.")
@click.pass_context
def cli(
    ctx: click.Context,
    verbose: int,
    config: Optional[str],
    threads: Optional[int],
    as_json: Optional[bool],
    color: Optional[bool],
) -> None:
    """Homology and cohomology of sheaves on finite spaces.

    A finite space is given as a JSON poset; bare names such as `s1` refer to
    the bundled corpus (see `corpus`).
    """
    set_log_level(verbose)
    settings = load_settings(config)
    overrides: Dict[str, Any] = {}
    if threads is not None:
        overrides["threads"] = threads
    if as_json is not None:
        overrides["json"] = as_json
    if color is not None:
        overrides["color"] = color
    if overrides:
        settings.update(overrides, "command line")
    ctx.obj = settings
    ctx.color = settings.color_flag
    set_log_level(verbose, settings.color_flag)
    logger.info("running %s", ctx.invoked_subcommand)


@cli.command("homology")
@input_options
@click.option(
    "--method",
    type=click.Choice(["resolution", "bar"]),
    default="resolution",
    show_default=True,
    help="Standard resolution or the bar complex.",
)
@click.pass_context
def homology_command(
    ctx: click.Context, space: str, sheaf: Optional[str], max_deg: Optional[int], method: str
) -> None:
    """H_i(X, F), one line per degree."""
    data = load_input(space, sheaf)
    compute = homology if method == "resolution" else bar_homology
    groups = compute(data.sheaf, max_deg_of(ctx, max_deg))
    emit_groups(ctx, "homology", data.name, groups)


@cli.command("cohomology")
@input_options
@click.pass_context
def cohomology_command(
    ctx: click.Context, space: str, sheaf: Optional[str], max_deg: Optional[int]
) -> None:
    """H^i(X, F) through the cobar complex."""
    data = load_input(space, sheaf)
    groups = cohomology(data.sheaf, max_deg_of(ctx, max_deg))
    emit_groups(ctx, "cohomology", data.name, groups, superscript=True)


@cli.command("local-homology")
@input_options
@subset_option("--closed", help="The closed support Y.")
@click.option("--sequence", is_flag=True, help="Also check the long exact sequence.")
@click.pass_context
def local_homology_command(
    ctx: click.Context,
    space: str,
    sheaf: Optional[str],
    max_deg: Optional[int],
    closed: str,
    sequence: bool,
) -> None:
    """H_i^Y(X, F) for a closed subset Y."""
    data = load_input(space, sheaf)
    y = parse_subset(data.space, closed)
    deg = max_deg_of(ctx, max_deg)
    groups = local_homology(data.space, y, data.sheaf, deg)
    if not sequence:
        emit_groups(ctx, "local-homology", data.name, groups, symbol="H^Y")
        return
    if not settings_of(ctx).json:
        for line in degree_lines(groups, "H^Y"):
            out(line)
    emit_reports(ctx, [local_homology_sequence_check(data.space, y, data.sheaf, deg)])


@cli.command("mv")
@input_options
@subset_option("--u", help="First open set.")
@subset_option("--v", help="Second open set.")
@click.pass_context
def mv_command(
    ctx: click.Context, space: str, sheaf: Optional[str], max_deg: Optional[int], u: str, v: str
) -> None:
    """Mayer-Vietoris sequence of an open cover X = U ∪ V."""
    data = load_input(space, sheaf)
    report = mv_open_check(
        data.space,
        parse_subset(data.space, u),
        parse_subset(data.space, v),
        data.sheaf,
        max_deg_of(ctx, max_deg),
    )
    emit_reports(ctx, [report])


@cli.command("mv-closed")
@input_options
@subset_option("--y", help="First closed set.")
@subset_option("--z", help="Second closed set.")
@click.option(
    "--local",
    is_flag=True,
    help="Local homology sequence for the supports Y and Z instead of a cover.",
)
@click.pass_context
def mv_closed_command(
    ctx: click.Context,
    space: str,
    sheaf: Optional[str],
    max_deg: Optional[int],
    y: str,
    z: str,
    local: bool,
) -> None:
    """Mayer-Vietoris sequence of a closed cover X = Y ∪ Z."""
    data = load_input(space, sheaf)
    check = local_mv_check if local else mv_closed_check
    report = check(
        data.space,
        parse_subset(data.space, y),
        parse_subset(data.space, z),
        data.sheaf,
        max_deg_of(ctx, max_deg),
    )
    emit_reports(ctx, [report])


@cli.command("excise")
@input_options
@subset_option("--open", "open_set", help="The open set U.")
@subset_option("--closed", help="The closed set Y inside U.")
@click.pass_context
def excise_command(
    ctx: click.Context,
    space: str,
    sheaf: Optional[str],
    max_deg: Optional[int],
    open_set: str,
    closed: str,
) -> None:
    """H_i^Y(U, F|_U) ≅ H_i^Y(X, F) for closed Y inside open U."""
    data = load_input(space, sheaf)
    report = excision_check(
        data.space,
        parse_subset(data.space, open_set),
        parse_subset(data.space, closed),
        data.sheaf,
        max_deg_of(ctx, max_deg),
    )
    emit_reports(ctx, [report])


@cli.command("uct")
@input_options
@click.option("--coeff", required=True, help='Coefficient group, e.g. "Z/2" or "Z^2".')
@click.pass_context
def uct_command(
    ctx: click.Context, space: str, sheaf: Optional[str], max_deg: Optional[int], coeff: str
) -> None:
    """Universal coefficients for F ⊗^L G."""
    data = load_input(space, sheaf)
    report = universal_coefficients(data.sheaf, parse_group(coeff), max_deg_of(ctx, max_deg))
    emit_reports(ctx, [report])


@cli.command("kunneth")
@input_options
@click.argument("space2")
@click.argument("sheaf2", required=False)
@click.pass_context
def kunneth_command(
    ctx: click.Context,
    space: str,
    sheaf: Optional[str],
    max_deg: Optional[int],
    space2: str,
    sheaf2: Optional[str],
) -> None:
    """Homology of X1 × X2 with F1 ⊠ F2 against the Künneth formula."""
    first = load_input(space, sheaf)
    second = load_input(space2, sheaf2)
    report = kunneth(
        first.space, first.sheaf, second.space, second.sheaf, max_deg_of(ctx, max_deg)
    )
    if not settings_of(ctx).json:
        for line in degree_lines(report.columns["H(X1 x X2)"]):
            out(line)
    emit_reports(ctx, [report])


@cli.command("dual")
@input_options
@click.pass_context
def dual_command(
    ctx: click.Context, space: str, sheaf: Optional[str], max_deg: Optional[int]
) -> None:
    """Cohomology of the derived dual against Hom and Ext of homology."""
    data = load_input(space, sheaf)
    emit_reports(ctx, [duality_sequence_check(data.sheaf, max_deg_of(ctx, max_deg))])


@cli.command("dualizing")
@click.argument("space")
@click.option("--max-deg", type=click.IntRange(min=0), default=None)
@click.option(
    "--open",
    "open_set",
    metavar="A,B,...",
    help="Compare the restriction to this open with its own dualizing complex.",
)
@click.pass_context
def dualizing_command(
    ctx: click.Context, space: str, max_deg: Optional[int], open_set: Optional[str]
) -> None:
    """Stalk cohomology of the dualizing complex, per element."""
    settings = settings_of(ctx)
    data = load_input(space)
    if open_set is not None:
        u = parse_subset(data.space, open_set)
        emit_reports(ctx, [restriction_comparison(data.space, u, max_deg)])
        return
    d = dualizing_complex(data.space, max_deg, settings.threads)
    stalks = {x: d.stalk_cohomology(x) for x in data.space.elements}
    total = d.global_cohomology()
    if settings.json:
        out_json(
            {
                "space": data.name,
                "stalks": {x: [group_json(g) for g in gs] for x, gs in stalks.items()},
                "global": [group_json(g) for g in total],
            }
        )
        return
    for x, gs in stalks.items():
        out(f"D({x}): " + ", ".join(f"H^{-n} = {g}" for n, g in enumerate(gs)))
    out("R(X, D): " + ", ".join(f"H^{-n} = {g}" for n, g in enumerate(total)))


@cli.command("pv-check")
@click.argument("space")
@click.option("--max-deg", type=click.IntRange(min=0), default=None)
@click.option("--global", "with_global", is_flag=True, help="Also compare R(X, D) with H(X, Z).")
@click.pass_context
def pv_check_command(
    ctx: click.Context, space: str, max_deg: Optional[int], with_global: bool
) -> None:
    """Poincaré-Verdier duality on the basis of minimal opens."""
    settings = settings_of(ctx)
    data = load_input(space)
    deg = max_deg_of(ctx, max_deg)
    d = dualizing_complex(data.space, deg, settings.threads)
    reports = [pv_check(data.space, deg, settings.threads, d)]
    if with_global:
        reports.append(global_pv_consequence(data.space, deg, d))
    emit_reports(ctx, reports)


@cli.command("manifold-check")
@click.argument("space")
@click.option(
    "--max-deg",
    type=click.IntRange(min=0),
    default=None,
    help="Degree bound for D_X, at least the height of the space. Unbounded by default.",
)
@click.pass_context
def manifold_check_command(
    ctx: click.Context, space: str, max_deg: Optional[int]
) -> None:
    """Whether the space is a homological manifold, and its orientability."""
    settings = settings_of(ctx)
    data = load_input(space)
    report = homological_manifold_check(data.space, max_deg, settings.threads)
    if settings.json:
        out_json(report.to_json())
    else:
        *body, last = str(report).splitlines()
        for line in body:
            out(line)
        verdict(report.verdict, last)
    ctx.exit(report.return_code)


@cli.command("verify")
@input_options
@click.pass_context
def verify_command(
    ctx: click.Context, space: str, sheaf: Optional[str], max_deg: Optional[int]
) -> None:
    """Cross-check resolutions, bar complexes and the exact sequences."""
    settings = settings_of(ctx)
    data = load_input(space, sheaf)
    reports = verify(data.space, data.sheaf, max_deg_of(ctx, max_deg), settings.threads)
    emit_reports(ctx, reports)


@cli.command("corpus")
@click.pass_context
def corpus_command(ctx: click.Context) -> None:
    """List the bundled spaces and sheaves."""
    names = corpus_files()
    if settings_of(ctx).json:
        out_json(names)
        return
    for name in names:
        out(name)


@cli.command("serialize")
@click.argument("space")
@click.option("--sheaf", help="Write this sheaf instead of the space.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Output file.")
def serialize_command(space: str, sheaf: Optional[str], output: Optional[str]) -> None:
    """Write the canonical form of a space or a sheaf."""
    data = load_input(space, sheaf)
    if sheaf is None:
        text = dumps(space_to_json(data.name, data.space))
    else:
        text = dumps(sheaf_to_json(data.name, data.sheaf))
    if output is None:
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text, encoding="utf-8")
        logger.info("wrote %s", output)


@cli.command("init-config")
@click.argument(
    "folder",
    type=click.Path(exists=True, file_okay=False),
    default=".",
    required=False,
)
def init_config_command(folder: str) -> None:
    """Add a [tool.sheaf_homology] table to FOLDER/pyproject.toml."""
    path = Path(folder) / CONFIGURATION_FILENAME
    existing = path.read_text(encoding="utf-8") if path.is_file() else ""
    if f"[tool.{CONFIGURATION_SECTION}]" in existing:
        raise InputFailure(f"{path} already has a [tool.{CONFIGURATION_SECTION}] table")
    separator = "\n" if existing and not existing.endswith("\n\n") else ""
    path.write_text(existing + separator + CONFIGURATION_CONTENTS, encoding="utf-8")
    out(f"wrote {path}")


def main() -> None:
    cli(prog_name=PACKAGE_NAME)
