"""
settings.yaml + TW_* ortam degiskenleri -> AppConfig.
Dosyada olmayan alanlar constants.py varsayilanlarini korur.
"""

import os
import yaml
from pathlib import Path
from typing import Optional, Dict, Any
from dataclasses import fields, replace

from .constants import (
    AppConfig, ReductionConfig, OracleConfig, CardinalConfig,
    OutputConfig, LoggingConfig, set_config
)
from ..utils.logger import get_tw_logger

logger = get_tw_logger("config_loader")


SECTION_CLASSES = {
    "reduction": ReductionConfig,
    "oracle": OracleConfig,
    "cardinals": CardinalConfig,
    "output": OutputConfig,
    "logging": LoggingConfig,
}

ENV_MAPPINGS = {
    "TW_LOG_LEVEL": ("logging", "log_level"),
    "TW_LOG_TO_FILE": ("logging", "log_to_file"),
    "TW_MAX_SEAM_STEPS": ("reduction", "max_seam_steps"),
    "TW_ORACLE_SEED": ("oracle", "default_seed"),
    "TW_ORACLE_TRIALS": ("oracle", "default_trials"),
    "TW_ORACLE_WORKERS": ("oracle", "workers"),
    "TW_OUTPUT_FORMAT": ("output", "default_format"),
}


class SettingsLoader:
    """
    settings.yaml yukleyici.

    Kullanim:
        config = SettingsLoader("config/settings.yaml").load()
    """

    DEFAULT_CONFIG_PATHS = [
        "config/settings.yaml",
        "settings.yaml",
    ]

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = config_path
        self._raw_config: Dict[str, Any] = {}

    def load(self, install: bool = True) -> AppConfig:
        """install=True ise sonuc global config olur."""
        config_file = self._find_config_file()

        if config_file:
            logger.debug(f"Konfigurasyon yukleniyor: {config_file}")
            self._raw_config = self._load_yaml(config_file)
        else:
            logger.debug("Konfigurasyon dosyasi bulunamadi, varsayilanlar kullaniliyor")
            self._raw_config = {}

        self._apply_env_overrides()
        config = self._build_config()

        if install:
            set_config(config)
        return config

    def _find_config_file(self) -> Optional[Path]:
        """Konfigurasyon dosyasini bul."""
        project_root = Path(__file__).resolve().parents[2]
        candidates = [self.config_path] if self.config_path else self.DEFAULT_CONFIG_PATHS

        for candidate in candidates:
            for path in (Path(candidate), project_root / candidate):
                if path.exists():
                    return path

        if self.config_path:
            logger.warning(f"Belirtilen konfigurasyon dosyasi bulunamadi: {self.config_path}")
        return None

    def _load_yaml(self, path: Path) -> Dict[str, Any]:
        """YAML dosyasini yukle."""
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            logger.error(f"YAML yuklemede hata: {e}")
            return {}

    def _apply_env_overrides(self):
        """Ortam degiskenlerinden override'lari uygula."""
        for env_var, (section, key) in ENV_MAPPINGS.items():
            value = os.environ.get(env_var)
            if value is None:
                continue
            self._raw_config.setdefault(section, {})
            self._raw_config[section][key] = self._convert_env_value(value)
            logger.debug(f"Ortam degiskeni uygulandi: {env_var}={value}")

    @staticmethod
    def _convert_env_value(value: str) -> Any:
        """Ortam degiskeni degerini uygun tipe donustur."""
        if value.lower() in ("true", "false", "yes", "no"):
            return value.lower() in ("true", "yes")
        try:
            return int(value)
        except ValueError:
            return value

    def _build_config(self) -> AppConfig:
        """Konfigurasyon nesnesini olustur."""
        config = AppConfig()
        for section, config_class in SECTION_CLASSES.items():
            built = self._build_section(config_class, self._raw_config.get(section) or {})
            config = replace(config, **{section: built})
        return config

    @staticmethod
    def _build_section(config_class: type, raw_data: Dict[str, Any]):
        """YAML'daki kucuk harfli anahtarlari UPPER_CASE field'lara esle."""
        defaults = config_class()
        valid_fields = {f.name for f in fields(config_class)}
        kwargs = {}
        for key, value in raw_data.items():
            name = key.upper()
            if name not in valid_fields:
                logger.warning(f"Bilinmeyen ayar atlandi: {config_class.__name__}.{key}")
                continue
            if name == "PREDECLARED":
                value = tuple((str(n), int(r), bool(reg)) for n, r, reg in value)
            kwargs[name] = value
        return replace(defaults, **kwargs)


def load_settings(config_path: Optional[str] = None, install: bool = True) -> AppConfig:
    return SettingsLoader(config_path).load(install=install)
