# src/core/logging.py
import logging
import logging.config
import sys
from pathlib import Path

import yaml

logger = logging.getLogger("balanced")
logger.setLevel(logging.INFO)
handler = logging.StreamHandler(sys.stderr)
formatter = logging.Formatter("%(asctime)s | %(levelname)s | %(message)s")
handler.setFormatter(formatter)
logger.addHandler(handler)


def configure_logging(config_path: str = "config/logging.yaml", level: str | None = None,
                      log_file: str | None = None) -> None:
    """Apply the dictConfig in config/logging.yaml, creating the log directory first.

    The package logger keeps its stderr handler and additionally writes to the
    file handlers the config declares, redirected to log_file when given.
    Missing config leaves stderr only.
    """
    path = Path(config_path)
    if path.exists():
        with open(path, "r", encoding="utf-8") as f:
            config = yaml.safe_load(f)

        for spec in config.get("handlers", {}).values():
            filename = spec.get("filename")
            if filename:
                if log_file:
                    spec["filename"] = filename = log_file
                Path(filename).parent.mkdir(parents=True, exist_ok=True)

        config.setdefault("disable_existing_loggers", False)
        logging.config.dictConfig(config)

        logger.propagate = False
        for h in [h for h in logger.handlers if isinstance(h, logging.FileHandler)]:
            logger.removeHandler(h)
        for h in logging.getLogger().handlers:
            if isinstance(h, logging.FileHandler):
                logger.addHandler(h)

    if level:
        logger.setLevel(level.upper())
