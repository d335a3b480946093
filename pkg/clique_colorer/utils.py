import os
from pathlib import Path

import i18n
import psutil
import yaml

from clique_colorer import settings
from clique_colorer.exceptions import CliqueColorerError
from clique_colorer.logging import logger

LOCALES_PATH = Path(__file__).resolve().parent.parent / "locales"
CONFIG_KEYS = (
    "LANG",
    "THREADS",
    "TIMEOUT",
    "PROGRESS_SECONDS",
    "SUBDIVISION_SIZE_LIMIT",
    "DECOMPOSE_SIZE_LIMIT",
    "KURATOWSKI_SIZE_LIMIT",
    "ATLAS_N_MAX",
)


def setup_i18n(lang):
    i18n.set("locale", lang)
    i18n.set("fallback", "en")
    i18n.set("skip_locale_root_data", True)
    i18n.set("filename_format", "{locale}.{format}")
    if str(LOCALES_PATH) not in i18n.load_path:
        i18n.load_path.append(str(LOCALES_PATH))


def load_config(path=None):
    """
    Overrides settings from a YAML file. An explicit path must exist;
    the default file is optional.
    """
    explicit = path is not None
    path = path or settings.DEFAULT_CONFIG_FILE
    if not os.path.isfile(path):
        if explicit:
            raise CliqueColorerError(f"configuration file not found: {path}")
        return
    with open(path) as f:
        try:
            parsed = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise CliqueColorerError(f"unable to read configuration file {path}: {e}")
    if not isinstance(parsed, dict):
        raise CliqueColorerError(f"configuration file {path} is not a mapping")
    for key, value in parsed.items():
        name = str(key).upper()
        if name not in CONFIG_KEYS:
            logger.warning(f"Ignoring unknown configuration key '{key}' in {path}")
            continue
        setattr(settings, name, value)
    settings.CONFIG_PATH = path
    logger.debug(f"configuration loaded from {path}")


def resolve_threads(cli_threads=None):
    """
    Worker count: command line, then environment, then configuration,
    then the number of physical cores
    """
    if cli_threads is not None:
        threads = cli_threads
    elif os.environ.get(settings.THREADS_ENV_VAR):
        raw = os.environ[settings.THREADS_ENV_VAR]
        try:
            threads = int(raw)
        except ValueError:
            raise CliqueColorerError(
                f"{settings.THREADS_ENV_VAR} must be an integer, got {raw!r}"
            )
    elif settings.THREADS is not None:
        threads = int(settings.THREADS)
    else:
        threads = psutil.cpu_count(logical=False) or psutil.cpu_count() or 1
    if threads < 1:
        raise CliqueColorerError(f"thread count must be positive, got {threads}")
    return threads
