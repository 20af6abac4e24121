"""
SKEWRANK - Configuration

Limits and defaults come from config/skewrank.yaml.
Priority: SKEWRANK_CONFIG > ./config/skewrank.yaml > bundled copy.
"""

import os
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional

import yaml

logger = logging.getLogger("skewrank.config")


@dataclass
class Limits:
    """Resource caps"""
    max_enum: int = 2 ** 12
    max_elements: int = 2 ** 20
    max_center: int = 2 ** 16
    max_truncation_bits: int = 32
    max_order: int = 100000


@dataclass
class Settings:
    """Runtime settings"""
    limits: Limits = field(default_factory=Limits)
    default_precision: int = 8
    verify_precision: int = 3
    samples: int = 200
    seed: int = 20240601
    oracle: bool = True
    log_level: str = "WARNING"
    source: str = ""


def _find_config_path() -> Optional[Path]:
    """Resolve the configuration file"""
    env_path = os.environ.get("SKEWRANK_CONFIG")
    if env_path:
        return Path(env_path)

    cwd_config = Path.cwd() / "config" / "skewrank.yaml"
    if cwd_config.exists():
        return cwd_config

    bundled = Path(__file__).parent.parent / "config" / "skewrank.yaml"
    if bundled.exists():
        return bundled
    return None


def _load_yaml(path: Optional[Path]) -> Dict:
    if path is None or not path.exists():
        return {}
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def load_settings(path: Optional[Path] = None) -> Settings:
    """Load settings from YAML, then apply environment overrides"""
    if path is None:
        path = _find_config_path()
    raw = _load_yaml(path)

    limits_cfg = raw.get("limits", {})
    defaults = Limits()
    limits = Limits(
        max_enum=int(limits_cfg.get("max_enum", defaults.max_enum)),
        max_elements=int(limits_cfg.get("max_elements", defaults.max_elements)),
        max_center=int(limits_cfg.get("max_center", defaults.max_center)),
        max_truncation_bits=int(limits_cfg.get("max_truncation_bits",
                                               defaults.max_truncation_bits)),
        max_order=int(limits_cfg.get("max_order", defaults.max_order)),
    )

    max_enum = os.environ.get("SKEWRANK_MAX_ENUM")
    if max_enum:
        limits.max_enum = int(max_enum)

    series_cfg = raw.get("series", {})
    verify_cfg = raw.get("verify", {})
    logging_cfg = raw.get("logging", {})

    settings = Settings(
        limits=limits,
        default_precision=int(series_cfg.get("default_precision", 8)),
        verify_precision=int(verify_cfg.get("precision", 3)),
        samples=int(verify_cfg.get("samples", 200)),
        seed=int(verify_cfg.get("seed", 20240601)),
        oracle=bool(verify_cfg.get("oracle", True)),
        log_level=str(logging_cfg.get("level", "WARNING")),
        source=str(path) if path else "",
    )
    logger.debug("[Config] loaded from %s", settings.source or "(defaults)")
    return settings


# ============================================
# Singleton Instance
# ============================================

_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Settings singleton"""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def reset_settings():
    """Reset for testing"""
    global _settings
    _settings = None
