import pytest

from sheaf_homology import files
from sheaf_homology.errors import InputError
from sheaf_homology.mode import ColorMode, OutputMode


def test_defaults():
    settings = files.load_settings()
    assert settings.max_deg == 2
    assert settings.threads == 1
    assert settings.output is OutputMode.TEXT
    assert settings.color is ColorMode.AUTO
    assert settings.sources == ()


@pytest.mark.parametrize(
    "config, message",
    [
        ({"max_deg": -1}, "max-deg must be a non-negative integer"),
        ({"max_deg": True}, "max-deg must be a non-negative integer"),
        ({"threads": 0}, "threads must be a positive integer"),
        ({"json": "yes"}, "json must be true or false"),
        ({"color": "sometimes"}, "color must be"),
    ],
)
def test_update_rejects_bad_values(config, message):
    with pytest.raises(InputError, match=message):
        files.Settings().update(config, "config.toml")


def test_update_accepts_color_spellings():
    settings = files.Settings()
    settings.update({"color": False}, "a")
    assert settings.color is ColorMode.OFF
    settings.update({"color": "on"}, "b")
    assert settings.color is ColorMode.ON
    assert settings.color_flag is True
    assert settings.sources == ("a", "b")


def test_unknown_keys_warn(monkeypatch):
    warnings = []
    monkeypatch.setattr(files.logger, "warning", lambda *args: warnings.append(args))
    files.Settings().update({"colour": "on"}, "config.toml")
    assert warnings == [("%s: unknown configuration key %r", "config.toml", "colour")]


def test_project_overrides_user(monkeypatch, tmp_path):
    user = tmp_path / "config.toml"
    user.write_text("max-deg = 5\nthreads = 3\n")
    monkeypatch.setattr(files, "find_user_config", lambda: user)
    (tmp_path / "pyproject.toml").write_text("[tool.sheaf_homology]\nmax-deg = 3\n")

    settings = files.load_settings()
    assert settings.max_deg == 3
    assert settings.threads == 3
    assert len(settings.sources) == 2


def test_explicit_config_replaces_both(monkeypatch, tmp_path):
    user = tmp_path / "config.toml"
    user.write_text("threads = 3\n")
    monkeypatch.setattr(files, "find_user_config", lambda: user)
    (tmp_path / "pyproject.toml").write_text("[tool.sheaf_homology]\nmax-deg = 3\n")
    explicit = tmp_path / "other.toml"
    explicit.write_text("[tool.sheaf_homology]\njson = true\n")

    settings = files.load_settings(str(explicit))
    assert settings.json
    assert settings.max_deg == 2
    assert settings.threads == 1
    assert settings.sources == (str(explicit),)


def test_pyproject_without_table_changes_nothing(tmp_path):
    (tmp_path / "pyproject.toml").write_text("[tool.other]\nmax-deg = 9\n")
    assert files.load_settings().max_deg == 2


def test_bad_toml_is_an_input_error(tmp_path):
    path = tmp_path / "broken.toml"
    path.write_text("max-deg = \n")
    with pytest.raises(InputError, match="invalid TOML"):
        files.load_settings(str(path))
    with pytest.raises(InputError, match="cannot read configuration"):
        files.load_settings(str(tmp_path / "missing.toml"))


def test_project_root_markers(tmp_path):
    nested = tmp_path / "a" / "b"
    nested.mkdir(parents=True)
    root, marker = files.find_project_root(str(nested))
    assert root == tmp_path.resolve()
    assert marker == ".git directory"


def test_resolve_bundled_names():
    for name in ("s1", "s1.json"):
        shown, text = files.resolve(name)
        assert shown == "s1.json"
        assert '"elements"' in text


def test_resolve_prefers_files_on_disk(tmp_path):
    path = tmp_path / "s1.json"
    path.write_text("{}")
    shown, text = files.resolve("s1.json")
    assert shown == "s1.json"
    assert text is None


def test_resolve_missing():
    with pytest.raises(InputError, match="no such file, and no bundled file of that name"):
        files.resolve("klein_bottle")


def test_corpus_lists_bundled_files():
    names = files.corpus_files()
    assert "s1.json" in names
    assert "twisted_s1.json" in names
    assert all(name.endswith(".json") for name in names)
    assert names == sorted(names)
