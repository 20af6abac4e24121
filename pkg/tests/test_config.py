from pathlib import Path

from config import Limits, get_settings, load_settings, reset_settings

BUNDLED = Path(__file__).parent.parent / "config" / "skewrank.yaml"


def test_bundled_defaults():
    settings = load_settings(BUNDLED)
    assert settings.limits.max_enum == 4096
    assert settings.limits.max_truncation_bits == 32
    assert settings.default_precision == 8
    assert settings.verify_precision == 3
    assert settings.oracle is True
    assert settings.source == str(BUNDLED)


def test_missing_file_uses_dataclass_defaults(tmp_path):
    settings = load_settings(tmp_path / "none.yaml")
    assert settings.limits == Limits()
    assert settings.samples == 200


def test_partial_yaml(tmp_path):
    path = tmp_path / "custom.yaml"
    path.write_text("limits:\n  max_enum: 64\nverify:\n  oracle: false\n  samples: 5\n",
                    encoding="utf-8")
    settings = load_settings(path)
    assert settings.limits.max_enum == 64
    assert settings.limits.max_elements == Limits().max_elements
    assert settings.oracle is False
    assert settings.samples == 5


def test_env_overrides(tmp_path, monkeypatch):
    path = tmp_path / "custom.yaml"
    path.write_text("series:\n  default_precision: 5\n", encoding="utf-8")
    monkeypatch.setenv("SKEWRANK_CONFIG", str(path))
    monkeypatch.setenv("SKEWRANK_MAX_ENUM", "16")
    reset_settings()
    settings = get_settings()
    assert settings.default_precision == 5
    assert settings.limits.max_enum == 16


def test_singleton():
    assert get_settings() is get_settings()
    first = get_settings()
    reset_settings()
    assert get_settings() is not first
