"""
Centralized Configuration Constants
====================================
Tum uygulama genelinde kullanilan sabit degerler.
Magic number'lar ve hardcoded degerler burada tanimlanir.
config/settings.yaml bu degerleri override edebilir (bkz. settings_loader).
"""

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Tuple


@dataclass(frozen=True)
class ReductionConfig:
    """Sadelestirme motoru ayarlari."""
    MAX_SEAM_STEPS: int = 256  # Sonlu iptal zinciri limiti (sonra UnsupportedCancellation)
    MAX_BACKWARD_STEPS: int = 4096  # Occurrence taramasinda geriye uzatma limiti


@dataclass(frozen=True)
class OracleConfig:
    """Minyatur oracle ayarlari."""
    DEFAULT_TRIALS: int = 1000  # Rastgele minyatur sayisi
    DEFAULT_SEED: int = 20240101  # Sabit tohum (rapora yazilir)
    MAX_WORD_LENGTH: int = 12  # Minyatur kelime uzunlugu
    MAX_PATTERN_LENGTH: int = 4  # Minyatur desen uzunlugu
    NOISE_COORDINATES: int = 2  # Desen disi koordinat sayisi
    EXHAUSTIVE_LENGTH: int = 6  # Tam tarama kelime uzunlugu
    EXHAUSTIVE_GROUPS: int = 3  # Tam taramadaki grup sayisi
    EXHAUSTIVE_ORDER: int = 4  # Tam taramadaki devirli grup mertebesi
    STAR_COPIES: int = 3  # Kosul (*) minyaturunde kopya sayisi
    WORKERS: int = 1  # Paralel deneme sayisi


@dataclass(frozen=True)
class CardinalConfig:
    """Onceden tanimli kardinaller (isim, rank, duzenli)."""
    PREDECLARED: Tuple[Tuple[str, int, bool], ...] = (
        ("w1", 1, True),  # omega_1, en dusuk sayilamaz rank
        ("k1", 2, True),
        ("L", 3, True),
    )
    DEFAULT_LAMBDA: str = "L"  # Mg(bits) icin varsayilan λ


@dataclass(frozen=True)
class OutputConfig:
    """Cikti ayarlari."""
    DEFAULT_FORMAT: str = "plain"
    EMPTY_WORD: str = "eps"
    JSON_INDENT: int = 2


@dataclass(frozen=True)
class LoggingConfig:
    """Logging ayarlari."""
    LOG_DIR: str = "logs"
    LOG_LEVEL: str = "WARNING"
    LOG_TO_FILE: bool = False
    MAX_LOG_SIZE_MB: int = 10
    BACKUP_COUNT: int = 3


@dataclass(frozen=True)
class AppConfig:
    """
    Ana uygulama konfigurasyonu.
    Tum alt konfigurasyonlari icerir.
    """
    reduction: ReductionConfig = field(default_factory=ReductionConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    cardinals: CardinalConfig = field(default_factory=CardinalConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    # Paths
    BASE_DIR: Path = field(default_factory=lambda: Path(__file__).parent.parent.parent)
    SETTINGS_FILE: Path = field(default_factory=lambda: Path("config/settings.yaml"))


# Global singleton instance
CONFIG = AppConfig()


# Convenience accessors
def get_config() -> AppConfig:
    """Get global config instance."""
    return CONFIG


def set_config(config: AppConfig) -> AppConfig:
    """Replace global config (settings_loader ve testler kullanir)."""
    global CONFIG
    CONFIG = config
    return CONFIG


def get_limit(key: str) -> int:
    """Get reduction/oracle limit value by key."""
    for group in (CONFIG.reduction, CONFIG.oracle):
        if hasattr(group, key):
            return getattr(group, key)
    raise KeyError(key)


def with_overrides(section: str, **values) -> AppConfig:
    """Tek bir bolumu degistirilmis yeni config (orijinal degismez)."""
    current = getattr(CONFIG, section)
    return replace(CONFIG, **{section: replace(current, **values)})
