#!/usr/bin/env python
# -*- coding: utf-8 -*-
# @File Name: files.py
# @Created:   2026-09-26 15:37:02
# @Modified:  2026-10-16 23:05:44

import sys
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import platformdirs

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .constants import (
    CONFIGURATION_FILENAME,
    CONFIGURATION_SECTION,
    CORPUS_PACKAGE,
    DEFAULT_MAX_DEG,
    DEFAULT_THREADS,
    PACKAGE_NAME,
    USER_CONFIGURATION_FILENAME,
)
from .errors import InputError
from .log import child_logger
from .mode import ColorMode, OutputMode

logger = child_logger(__name__)


@lru_cache()
def find_project_root(start: Optional[str] = None) -> Tuple[Path, str]:
    """Return a directory containing .git, .hg, or pyproject.toml.

    The search walks up from `start` (the current directory by default). If
    no directory has a marker, the root of the file system is returned.

    Returns a two-tuple with the directory and a string describing the
    marker that was found.
    """
    base = Path(start or Path.cwd()).resolve()
    if base.is_file():
        base = base.parent

    directory = base
    for directory in (base, *base.parents):
        if (directory / ".git").exists():
            return directory, ".git directory"

        if (directory / ".hg").is_dir():
            return directory, ".hg directory"

        if (directory / CONFIGURATION_FILENAME).is_file():
            return directory, CONFIGURATION_FILENAME

    return directory, "file system root"


def find_pyproject_toml(start: Optional[str] = None) -> Optional[str]:
    """Find the absolute filepath to a pyproject.toml if it exists"""
    root, _ = find_project_root(start or str(Path.cwd()))
    path = root / CONFIGURATION_FILENAME
    return str(path) if path.is_file() else None


def find_user_config() -> Optional[Path]:
    """The user-level config.toml in the platform's config directory, if any.

    Returns None when the directory cannot be determined or read.
    """
    try:
        directory = Path(platformdirs.user_config_dir(PACKAGE_NAME))
        path = directory / USER_CONFIGURATION_FILENAME
        return path if path.is_file() else None
    except (PermissionError, RuntimeError) as e:
        logger.warning("ignoring user configuration directory due to %r", e)
        return None


def _normalize(config: Dict[str, Any]) -> Dict[str, Any]:
    return {k.replace("--", "").replace("-", "_"): v for k, v in config.items()}


def parse_pyproject_toml(path_config: str) -> Dict[str, Any]:
    """Parse a pyproject toml file, pulling out the [tool.sheaf_homology] table.

    If parsing fails, will raise InputError.
    """
    data = _read_toml(path_config)
    return _normalize(data.get("tool", {}).get(CONFIGURATION_SECTION, {}))


def parse_user_config(path_config: str) -> Dict[str, Any]:
    """A user config is either bare keys or a [tool.sheaf_homology] table."""
    data = _read_toml(path_config)
    table = data.get("tool", {}).get(CONFIGURATION_SECTION)
    return _normalize(table if table is not None else data)


def _read_toml(path_config: str) -> Dict[str, Any]:
    try:
        with open(path_config, "rb") as f:
            return tomllib.load(f)
    except OSError as e:
        raise InputError(f"cannot read configuration: {e.strerror}", path_config) from None
    except tomllib.TOMLDecodeError as e:
        raise InputError(f"invalid TOML: {e}", path_config) from None


@dataclass
class Settings:
    max_deg: int = DEFAULT_MAX_DEG
    threads: int = DEFAULT_THREADS
    output: OutputMode = OutputMode.TEXT
    color: ColorMode = ColorMode.AUTO
    sources: Tuple[str, ...] = ()

    @property
    def json(self) -> bool:
        return self.output is OutputMode.JSON

    @property
    def color_flag(self) -> Optional[bool]:
        """The value click expects for `Context.color`: None means auto."""
        if self.color is ColorMode.AUTO:
            return None
        return self.color is ColorMode.ON

    def update(self, config: Dict[str, Any], source: str) -> None:
        for key, value in config.items():
            if key == "max_deg":
                if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                    raise InputError("max-deg must be a non-negative integer", source)
                self.max_deg = value
            elif key == "threads":
                if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                    raise InputError("threads must be a positive integer", source)
                self.threads = value
            elif key == "json":
                if not isinstance(value, bool):
                    raise InputError("json must be true or false", source)
                self.output = OutputMode.JSON if value else OutputMode.TEXT
            elif key == "color":
                if isinstance(value, bool):
                    self.color = ColorMode.ON if value else ColorMode.OFF
                elif value in [m.value for m in ColorMode]:
                    self.color = ColorMode(value)
                else:
                    raise InputError('color must be true, false or "auto"', source)
            else:
                logger.warning("%s: unknown configuration key %r", source, key)
        self.sources = self.sources + (source,)


def load_settings(config_file: Optional[str] = None, start: Optional[str] = None) -> Settings:
    """Built-in defaults, overridden by the user config, then by the project's
    pyproject.toml. An explicit `config_file` replaces both files."""
    settings = Settings()
    if config_file is not None:
        settings.update(parse_user_config(config_file), config_file)
        logger.info("using configuration %s", config_file)
        return settings
    user = find_user_config()
    if user is not None:
        settings.update(parse_user_config(str(user)), str(user))
    project = find_pyproject_toml(start)
    if project is not None:
        settings.update(parse_pyproject_toml(project), project)
    logger.info("configuration from %s", ", ".join(settings.sources) or "defaults")
    return settings


# bundled corpus


def corpus_files() -> List[str]:
    return sorted(
        entry.name
        for entry in resources.files(CORPUS_PACKAGE).iterdir()
        if entry.name.endswith(".json")
    )


def read_corpus(name: str) -> str:
    return resources.files(CORPUS_PACKAGE).joinpath(name).read_text(encoding="utf-8")


def resolve(path: Union[str, Path]) -> Tuple[str, Optional[str]]:
    """A path on disk, or a bare name of a bundled file.

    Returns the display name and the text when it comes from the corpus
    (None when the file is on disk).
    """
    path = str(path)
    if Path(path).exists():
        return path, None
    name = path if path.endswith(".json") else f"{path}.json"
    if Path(name).name == name and name in corpus_files():
        logger.info("%s resolved in the bundled corpus", name)
        return name, read_corpus(name)
    raise InputError("no such file, and no bundled file of that name", path)
