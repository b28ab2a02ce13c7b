import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from src.core.errors import ConfigurationError
from src.core.ports.report_ports import ConfigLoaderPort
from src.core.utils.path_utils import resolve_path
from src.settings import Settings

logger = logging.getLogger(__name__)


class YAMLConfigLoader(ConfigLoaderPort):
    def __init__(self, settings: Optional[Settings] = None) -> None:
        self.settings = settings or Settings()
        self._loaded: Dict[Path, Dict[str, Any]] = {}

    @property
    def default_path(self) -> Path:
        return resolve_path(self.settings.config_file_path)

    def load_config(self, path: str | None) -> Dict[str, Any]:
        """Raw run configuration mapping; a missing default file means an empty config"""
        config_path = resolve_path(path) if path else self.default_path
        if config_path in self._loaded:
            return dict(self._loaded[config_path])

        if not config_path.exists():
            if path:
                raise ConfigurationError(f"config file not found: {config_path}")
            logger.info("no config file at %s, using built-in defaults", config_path)
            return {}

        try:
            with open(config_path, 'r', encoding='utf-8') as file:
                data: Any = yaml.safe_load(file)
        except yaml.YAMLError as e:
            raise ConfigurationError(f"cannot parse {config_path}: {e}") from e

        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ConfigurationError(f"{config_path} must hold a mapping at the top level")
        logger.debug("loaded run configuration from %s", config_path)
        self._loaded[config_path] = data
        return dict(data)
