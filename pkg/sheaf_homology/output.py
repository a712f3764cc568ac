#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: output.py
# @Created:   2026-09-25 14:02:19
# @Modified:  2026-10-15 22:10:31

"""Printing results. Results go to stdout, diagnostics to stderr."""

import json
from typing import Any, List, Optional, Sequence, Union

import click

from .zlinalg import FgAbGroup


def out(message: str = "", nl: bool = True, **styles: Any) -> None:
    click.secho(message, nl=nl, **styles)


def degree_lines(
    groups: Sequence[Union[FgAbGroup, str]], symbol: str = "H", superscript: bool = False
) -> List[str]:
    """`H_1 = Z + Z/2` per degree, or `H^1 = ...` with `superscript`."""
    mark = "^" if superscript else "_"
    return [f"{symbol}{mark}{i} = {g}" for i, g in enumerate(groups)]


def group_json(g: FgAbGroup) -> dict:
    return {"rank": g.rank, "torsion": list(g.torsion), "text": str(g)}


def dumps(data: Any) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def out_json(data: Any) -> None:
    click.echo(dumps(data), nl=False)


def verdict(passed: bool, text: Optional[str] = None) -> None:
    """A PASS/FAIL line, colored when the terminal allows it."""
    text = text or ("PASS" if passed else "FAIL")
    out(text, fg="green" if passed else "red", bold=True)
