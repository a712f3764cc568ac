#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: schema.py
# @Created:   2026-09-26 09:15:48
# @Modified:  2026-10-16 22:41:07

"""JSON descriptions of spaces and sheaves.

A space file is

    {"name": "s1", "elements": ["a", "b", "c", "d"],
     "covers": [["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"]]}

and a sheaf file on it is

    {"space": "s1",
     "stalks": {"a": {"rank": 1, "torsion": []}, ...},
     "maps": {"a->c": [[1]], ...}}

Stalk generators are ordered free ones first, then one per torsion
coefficient in the listed order. A map is a matrix with one row per target
generator and one column per source generator. A map may be omitted only
when one of its ends is the zero group.
"""

import json
import re
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from .errors import InputError, SheafHomologyError
from .log import child_logger
from .poset import FinitePoset
from .sheaf import Sheaf
from .zlinalg import FgAbGroup, GroupMap, IntMatrix

logger = child_logger(__name__)

PathLike = Union[str, Path]

_GROUP_PART = re.compile(r"^Z(?:\^(\d+)|/(\d+))?$")


def parse_group(text: str) -> FgAbGroup:
    """`0`, `Z`, `Z^3`, `Z/2`, `Z + Z/2 + Z/4` (spaces optional)."""
    compact = text.replace(" ", "")
    if compact == "0":
        return FgAbGroup.zero()
    rank, torsion = 0, []
    for part in compact.split("+"):
        m = _GROUP_PART.match(part)
        if m is None:
            raise InputError(f"cannot read the group {text!r}")
        power, order = m.groups()
        if order is not None:
            if int(order) < 1:
                raise InputError(f"cannot read the group {text!r}")
            if int(order) > 1:
                torsion.append(int(order))
        else:
            rank += int(power) if power is not None else 1
    return FgAbGroup.from_invariants(rank, torsion)


def _load(source: Union[PathLike, str], text: Optional[str] = None) -> Dict[str, Any]:
    path = str(source)
    if text is None:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot read file: {e.strerror}", path) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        message = f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}"
        raise InputError(message, path) from None
    if not isinstance(data, dict):
        raise InputError("top level must be an object", path)
    return data


def _require(data: Mapping[str, Any], key: str, kind: type, path: str) -> Any:
    if key not in data:
        raise InputError(f"missing key {key!r}", path)
    value = data[key]
    if not isinstance(value, kind):
        raise InputError(f"{key!r} must be a {kind.__name__}", path)
    return value


def space_from_json(data: Mapping[str, Any], path: str = "<space>") -> Tuple[str, FinitePoset]:
    name = str(data.get("name", Path(path).stem))
    elements = _require(data, "elements", list, path)
    covers = _require(data, "covers", list, path)
    if not all(isinstance(x, str) for x in elements):
        raise InputError("elements must be strings", path)
    pairs = []
    for i, c in enumerate(covers):
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c)):
            raise InputError(f"covers[{i}] must be a pair of element names", path)
        pairs.append((c[0], c[1]))
    try:
        return name, FinitePoset.build(elements, pairs)
    except SheafHomologyError as e:
        raise InputError(str(e), path) from None


def _stalk(entry: Any, x: str, path: str) -> FgAbGroup:
    if isinstance(entry, str):
        return parse_group(entry)
    if not isinstance(entry, dict):
        raise InputError(f"stalks[{x}] must be an object or a group like 'Z + Z/2'", path)
    rank = entry.get("rank", 0)
    torsion = entry.get("torsion", [])
    if not isinstance(rank, int) or rank < 0:
        raise InputError(f"stalks[{x}].rank must be a non-negative integer", path)
    if not (isinstance(torsion, list) and all(isinstance(d, int) and d > 1 for d in torsion)):
        raise InputError(f"stalks[{x}].torsion must list integers above 1", path)
    return FgAbGroup.from_invariants(rank, torsion)


def _matrix(rows: Any, key: str, shape: Tuple[int, int], path: str) -> IntMatrix:
    if not (isinstance(rows, list) and all(isinstance(r, list) for r in rows)):
        raise InputError(f"maps[{key}] must be a list of rows", path)
    if not all(isinstance(v, int) and not isinstance(v, bool) for r in rows for v in r):
        raise InputError(f"maps[{key}] must hold integers", path)
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise InputError(f"maps[{key}] has rows of different lengths", path)
    n_rows, n_cols = shape
    # [] stands for the map into or out of a zero stalk
    if not rows and n_rows * n_cols == 0:
        return IntMatrix.zeros(n_rows, n_cols)
    return IntMatrix.from_rows(rows, widths.pop() if widths else 0)


def sheaf_from_json(
    data: Mapping[str, Any], p: FinitePoset, space_name: Optional[str] = None, path: str = "<sheaf>"
) -> Sheaf:
    ref = data.get("space")
    if ref is not None and space_name is not None and ref != space_name:
        raise InputError(f"sheaf is written for space {ref!r}, not {space_name!r}", path)
    stalk_data = _require(data, "stalks", dict, path)
    stalks = {}
    for x, entry in stalk_data.items():
        if x not in p:
            raise InputError(f"stalk given for unknown element {x!r}", path)
        stalks[x] = _stalk(entry, x, path)
    for x in p.elements:
        if x not in stalks:
            raise InputError(f"no stalk for element {x!r}", path)
    map_data = data.get("maps", {})
    if not isinstance(map_data, dict):
        raise InputError("'maps' must be a dict", path)
    maps = {}
    for key, rows in map_data.items():
        ends = key.split("->")
        if len(ends) != 2:
            raise InputError(f"map key {key!r} must look like 'x->y'", path)
        x, y = (e.strip() for e in ends)
        if x not in stalks or y not in stalks:
            raise InputError(f"map key {key!r} names an unknown element", path)
        maps[(x, y)] = _matrix(rows, key, (stalks[y].ngens, stalks[x].ngens), path)
    try:
        return Sheaf(p, stalks, maps)
    except SheafHomologyError as e:
        raise InputError(str(e), path) from None


def read_space(path: PathLike, text: Optional[str] = None) -> Tuple[str, FinitePoset]:
    return space_from_json(_load(path, text), str(path))


def read_sheaf(
    path: PathLike, p: FinitePoset, space_name: Optional[str] = None, text: Optional[str] = None
) -> Sheaf:
    return sheaf_from_json(_load(path, text), p, space_name, str(path))


def parse(
    space: PathLike,
    sheaf: Optional[PathLike] = None,
    space_text: Optional[str] = None,
    sheaf_text: Optional[str] = None,
) -> Tuple[str, FinitePoset, Optional[Sheaf]]:
    """Read a space file and, optionally, a sheaf file on it."""
    name, p = read_space(space, space_text)
    logger.info("read space %s with %d elements", name, len(p))
    if sheaf is None:
        return name, p, None
    return name, p, read_sheaf(sheaf, p, name, sheaf_text)


# serialization


def space_to_json(name: str, p: FinitePoset) -> Dict[str, Any]:
    return {
        "name": name,
        "elements": list(p.elements),
        "covers": [list(c) for c in p.sorted_covers],
    }


def _file_order(g: FgAbGroup) -> List[int]:
    """Positions of normal-form coordinates listed free first, then torsion."""
    moduli = [d for d in g._moduli if d != 1]
    free = [i for i, d in enumerate(moduli) if d == 0]
    torsion = [i for i, d in enumerate(moduli) if d != 0]
    return free + torsion


def sheaf_to_json(space_name: str, f: Sheaf) -> Dict[str, Any]:
    """Canonical form: every stalk rewritten on its invariant-factor generators."""
    stalks, maps = {}, {}
    for x in f.elements:
        g = f.stalk(x)
        stalks[x] = {"rank": g.rank, "torsion": list(g.torsion)}
    for x, y in f.base.sorted_covers:
        m = GroupMap(f.stalk(x), f.stalk(y), f.cover_matrix(x, y)).normal_matrix()
        rows, cols = _file_order(f.stalk(y)), _file_order(f.stalk(x))
        maps[f"{x}->{y}"] = m.submatrix(rows, cols).to_lists()
    return {"space": space_name, "stalks": stalks, "maps": maps}
