"""
Logging Modulu
==============
Indirgeme, occurrence taramasi, oracle ve CLI icin ortak logger.

stdout komut ciktisina ayrilmistir; tum handler'lar stderr'e veya dosyaya yazar.
Ek alanlar mesaja `key=value` olarak eklenir, JSON modunda ayri alan olur.
"""

import json
import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass
from datetime import datetime
from functools import wraps
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional

from rich.console import Console
from rich.logging import RichHandler

ROOT_NAME = "tw"
PLAIN_FORMAT = "[%(levelname)s] [%(name)s] %(message)s"


@dataclass
class LogConfig:
    """Handler ve seviye ayarlari."""
    level: str = "WARNING"
    log_to_file: bool = False
    log_dir: str = "logs"
    use_rich: bool = True
    json_format: bool = False
    max_file_size_mb: int = 10
    backup_count: int = 3


@dataclass
class StepMetric:
    """Bir `timer` blogunun olcumu."""
    operation: str
    duration_ms: float
    success: bool
    error: Optional[str] = None


class JsonFormatter(logging.Formatter):
    """Satir basina bir JSON nesnesi."""

    def format(self, record: logging.LogRecord) -> str:
        payload: Dict[str, Any] = {
            "time": datetime.fromtimestamp(record.created).isoformat(timespec="seconds"),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        fields = getattr(record, "fields", None)
        if fields:
            payload["fields"] = fields
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return json.dumps(payload, ensure_ascii=False, default=str)


def _handlers(config: LogConfig) -> List[logging.Handler]:
    formatter = JsonFormatter() if config.json_format else logging.Formatter(PLAIN_FORMAT)

    if config.use_rich and not config.json_format:
        console: logging.Handler = RichHandler(
            console=Console(stderr=True), show_time=False, show_path=False, rich_tracebacks=True
        )
    else:
        console = logging.StreamHandler()
        console.setFormatter(formatter)
    handlers = [console]

    if config.log_to_file:
        directory = Path(config.log_dir)
        directory.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            directory / f"{ROOT_NAME}_{datetime.now():%Y%m%d}.log",
            maxBytes=config.max_file_size_mb * 1024 * 1024,
            backupCount=config.backup_count,
            encoding="utf-8",
        )
        file_handler.setFormatter(formatter)
        handlers.append(file_handler)
    return handlers


class TWLogger:
    """
    Isimli logger; ayni isim icin tek ornek.

    Kullanim:
        logger = TWLogger.get_logger("normal_form")
        logger.debug("Indirgendi", segments=4)
        with logger.timer("hom_matrix"):
            ...
    """

    _registry: Dict[str, 'TWLogger'] = {}
    _config: Optional[LogConfig] = None

    def __init__(self, name: str, config: Optional[LogConfig] = None):
        self.name = name
        self.config = config or TWLogger._config or LogConfig()
        self.metrics: List[StepMetric] = []
        self._logger = self._attach()

    @classmethod
    def get_logger(cls, name: str) -> 'TWLogger':
        if name not in cls._registry:
            cls._registry[name] = cls(name)
        return cls._registry[name]

    @classmethod
    def configure(cls, config: LogConfig):
        """Yeni ayarlari mevcut tum logger'lara uygula."""
        cls._config = config
        for instance in cls._registry.values():
            instance.config = config
            instance._logger = instance._attach()

    def _attach(self) -> logging.Logger:
        logger = logging.getLogger(f"{ROOT_NAME}.{self.name}")
        for handler in list(logger.handlers):
            handler.close()
        logger.handlers.clear()
        logger.setLevel(getattr(logging, self.config.level.upper(), logging.WARNING))
        logger.propagate = False
        for handler in _handlers(self.config):
            logger.addHandler(handler)
        return logger

    # ------------------------------------------------------------------
    # Seviyeler
    # ------------------------------------------------------------------

    def debug(self, msg: str, **fields):
        self._emit(logging.DEBUG, msg, fields)

    def info(self, msg: str, **fields):
        self._emit(logging.INFO, msg, fields)

    def warning(self, msg: str, **fields):
        self._emit(logging.WARNING, msg, fields)

    def error(self, msg: str, exc_info: bool = False, **fields):
        self._emit(logging.ERROR, msg, fields, exc_info)

    def _emit(self, level: int, msg: str, fields: Dict[str, Any], exc_info: bool = False):
        if not self._logger.isEnabledFor(level):
            return
        if fields and not self.config.json_format:
            msg = f"{msg} (" + " | ".join(f"{k}={v}" for k, v in fields.items()) + ")"
        self._logger.log(level, msg, exc_info=exc_info, extra={"fields": fields})

    # ------------------------------------------------------------------
    # Metrikler
    # ------------------------------------------------------------------

    @contextmanager
    def timer(self, operation: str, log_level: str = "DEBUG") -> Iterator[None]:
        """Blogun suresini olc; hata olsa da metrik kaydedilir."""
        start = time.perf_counter()
        error: Optional[str] = None
        try:
            yield
        except Exception as e:
            error = str(e)
            raise
        finally:
            metric = StepMetric(
                operation=operation,
                duration_ms=round((time.perf_counter() - start) * 1000, 2),
                success=error is None,
                error=error,
            )
            self.metrics.append(metric)
            status = "tamamlandi" if metric.success else "basarisiz"
            self._emit(getattr(logging, log_level.upper()), f"{operation} {status}",
                       {"duration_ms": metric.duration_ms})

    def get_metrics(self) -> List[StepMetric]:
        return self.metrics

    @classmethod
    def reset_metrics(cls):
        for instance in cls._registry.values():
            instance.metrics.clear()


def log_function_call(logger_name: Optional[str] = None):
    """
    Cagriyi DEBUG seviyesinde logla ve suresini olc.

    Kullanim:
        @log_function_call("homomorphisms")
        def hom_matrix(homs): ...
    """
    def decorator(func: Callable):
        @wraps(func)
        def wrapper(*args, **kwargs):
            logger = TWLogger.get_logger(logger_name or func.__module__)
            logger.debug(f"{func.__name__} cagriliyor", args=len(args), kwargs=sorted(kwargs))
            with logger.timer(func.__name__):
                return func(*args, **kwargs)
        return wrapper
    return decorator


# ============================================================
# Kisa Yollar
# ============================================================

def get_tw_logger(name: str) -> TWLogger:
    """Modul logger'i al."""
    return TWLogger.get_logger(name)


def configure_logging(
    level: str = "WARNING",
    log_to_file: bool = False,
    log_dir: str = "logs",
    use_rich: bool = True,
    json_format: bool = False,
    max_file_size_mb: int = 10,
    backup_count: int = 3
):
    """
    Tum logger'lari yeniden kur.

    Args:
        level: DEBUG, INFO, WARNING veya ERROR
        log_to_file: Dosyaya da yaz
        log_dir: Log dizini
        use_rich: Konsolda RichHandler kullan
        json_format: Satir basina JSON
        max_file_size_mb: Dosya basina boyut siniri
        backup_count: Saklanan eski dosya sayisi
    """
    TWLogger.configure(LogConfig(
        level=level,
        log_to_file=log_to_file,
        log_dir=log_dir,
        use_rich=use_rich,
        json_format=json_format,
        max_file_size_mb=max_file_size_mb,
        backup_count=backup_count,
    ))
