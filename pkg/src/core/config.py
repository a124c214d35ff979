# src/core/config.py
import os
import re
from functools import lru_cache
from pathlib import Path
from typing import List

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field

SETTINGS_PATH = "config/settings.yaml"

_PLACEHOLDER = re.compile(r"\$\{([A-Za-z_][A-Za-z0-9_]*)(?::-([^}]*))?\}")


class AppSettings(BaseModel):
    output_dir: str = "output"


class SolverSettings(BaseModel):
    budget: int = Field(default=100_000_000, gt=0)
    color_order: List[int] = [0, 1, 2]


class ClassifySettings(BaseModel):
    max_order: int = 14
    workers: int = Field(default=1, ge=1)
    progress: bool = True


class CirculantSettings(BaseModel):
    float_digits: int = 200
    residual_tolerance: float = 1e-9


class LoggingSettings(BaseModel):
    level: str = "INFO"
    file: str = "logs/balanced.log"
    config: str = "config/logging.yaml"


class Settings(BaseModel):
    app: AppSettings = AppSettings()
    solver: SolverSettings = SolverSettings()
    classify: ClassifySettings = ClassifySettings()
    circulant: CirculantSettings = CirculantSettings()
    logging: LoggingSettings = LoggingSettings()


def expand_env(text: str) -> str:
    """Replace ${VAR} and ${VAR:-default} with environment values."""

    def repl(match: re.Match) -> str:
        name, default = match.group(1), match.group(2)
        value = os.environ.get(name)
        if value is None or value == "":
            return default if default is not None else ""
        return value

    return _PLACEHOLDER.sub(repl, text)


def load_settings(path: str | None = None) -> Settings:
    load_dotenv()
    settings_path = Path(path or os.environ.get("BALANCED_SETTINGS", SETTINGS_PATH))
    if not settings_path.exists():
        return Settings()

    with open(settings_path, "r", encoding="utf-8") as f:
        raw = yaml.safe_load(expand_env(f.read())) or {}

    # empty values from unset variables fall back to model defaults
    cleaned = {
        section: {k: v for k, v in (values or {}).items() if v not in (None, "")}
        for section, values in raw.items()
    }
    return Settings(**cleaned)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return load_settings()


def reload_settings() -> Settings:
    get_settings.cache_clear()
    return get_settings()
