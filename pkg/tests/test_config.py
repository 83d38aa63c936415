"""
Konfigurasyon, Hata ve Logger Testleri
======================================
settings_loader, constants, exceptions ve logger modulleri.
"""

import json
import logging

import pytest

from src.config.constants import (
    AppConfig, OracleConfig, get_config, get_limit, set_config, with_overrides,
)
from src.config.settings_loader import SettingsLoader, load_settings
from src.utils.exceptions import (
    EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_VALIDATION, DSLError, NotAWord, ParseError,
    StarConditionViolated, TransfiniteWordError, UndeclaredAtom, UnsupportedCancellation,
    exit_code_for,
)
from src.utils.logger import JsonFormatter, TWLogger, configure_logging, get_tw_logger, log_function_call


@pytest.fixture
def settings_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text(
        "oracle:\n"
        "  default_trials: 25\n"
        "  bogus_key: 3\n"
        "cardinals:\n"
        "  predeclared:\n"
        "    - [w1, 1, true]\n"
        "    - [k2, 4, true]\n"
        "output:\n"
        "  default_format: structured\n",
        encoding="utf-8",
    )
    return path


# ============================================================
# SettingsLoader
# ============================================================

class TestSettingsLoader:
    """SettingsLoader testleri."""

    def test_yaml_values(self, settings_file):
        config = SettingsLoader(str(settings_file)).load(install=False)
        assert config.oracle.DEFAULT_TRIALS == 25
        assert config.oracle.DEFAULT_SEED == OracleConfig().DEFAULT_SEED
        assert config.output.DEFAULT_FORMAT == "structured"
        assert config.cardinals.PREDECLARED == (("w1", 1, True), ("k2", 4, True))

    def test_unknown_key_skipped(self, settings_file):
        config = SettingsLoader(str(settings_file)).load(install=False)
        assert not hasattr(config.oracle, "BOGUS_KEY")

    def test_env_override(self, settings_file, monkeypatch):
        monkeypatch.setenv("TW_ORACLE_TRIALS", "7")
        monkeypatch.setenv("TW_LOG_TO_FILE", "yes")
        config = SettingsLoader(str(settings_file)).load(install=False)
        assert config.oracle.DEFAULT_TRIALS == 7
        assert config.logging.LOG_TO_FILE is True

    def test_missing_file_uses_defaults(self, tmp_path):
        loader = SettingsLoader(str(tmp_path / "yok.yaml"))
        assert loader._find_config_file() is None
        assert loader.load(install=False).reduction == AppConfig().reduction

    def test_broken_yaml(self, tmp_path):
        path = tmp_path / "bozuk.yaml"
        path.write_text("oracle: [1, 2\n", encoding="utf-8")
        config = SettingsLoader(str(path)).load(install=False)
        assert config.oracle == OracleConfig()

    def test_install(self, settings_file, restore_config):
        load_settings(str(settings_file))
        assert get_config().oracle.DEFAULT_TRIALS == 25

    @pytest.mark.parametrize("raw, expected", [
        ("true", True), ("No", False), ("12", 12), ("plain", "plain"),
    ])
    def test_convert_env_value(self, raw, expected):
        assert SettingsLoader._convert_env_value(raw) == expected


class TestConstants:
    """get_limit ve with_overrides testleri."""

    def test_get_limit(self):
        assert get_limit("MAX_SEAM_STEPS") == get_config().reduction.MAX_SEAM_STEPS
        assert get_limit("WORKERS") == get_config().oracle.WORKERS
        with pytest.raises(KeyError):
            get_limit("NO_SUCH_LIMIT")

    def test_with_overrides_is_copy(self):
        before = get_config().oracle.DEFAULT_TRIALS
        changed = with_overrides("oracle", DEFAULT_TRIALS=3)
        assert changed.oracle.DEFAULT_TRIALS == 3
        assert get_config().oracle.DEFAULT_TRIALS == before

    def test_set_config(self, restore_config):
        set_config(with_overrides("output", DEFAULT_FORMAT="structured"))
        assert get_config().output.DEFAULT_FORMAT == "structured"


# ============================================================
# Hatalar
# ============================================================

class TestExceptions:
    """Hata siniflari ve cikis kodlari."""

    def test_to_dict(self):
        error = UndeclaredAtom("k9")
        assert error.to_dict() == {
            "error": "UndeclaredAtom",
            "code": "UNDECLARED_ATOM",
            "message": "Tanimlanmamis kardinal: 'k9'",
            "details": {"name": "k9"},
        }
        assert str(error).startswith("[UNDECLARED_ATOM]")

    def test_parse_error(self):
        error = ParseError(2, ["INT", "IDENT", "INT"])
        assert error.offset == 2
        assert error.expected == ["IDENT", "INT"]
        assert isinstance(error, DSLError)
        assert "girdi sonu" in error.message

    @pytest.mark.parametrize("error, code", [
        (ParseError(0, ["eps"], "x"), EXIT_PARSE),
        (NotAWord(["coordinate 0 hit w1 times"]), EXIT_VALIDATION),
        (StarConditionViolated("Mk(k1)", "Mk(k1)"), EXIT_VALIDATION),
        (UnsupportedCancellation("seam"), EXIT_UNSUPPORTED),
        (TransfiniteWordError("genel"), EXIT_UNSUPPORTED),
    ])
    def test_exit_codes(self, error, code):
        assert exit_code_for(error) == code


# ============================================================
# Logger
# ============================================================

class TestLogger:
    """TWLogger testleri."""

    def test_same_instance(self):
        assert get_tw_logger("words") is TWLogger.get_logger("words")

    def test_timer_records_metric(self):
        TWLogger.reset_metrics()
        logger = get_tw_logger("test_timer")
        with logger.timer("reduce"):
            pass
        metrics = logger.get_metrics()
        assert len(metrics) == 1
        assert metrics[0].operation == "reduce"
        assert metrics[0].success

    def test_timer_failure(self):
        TWLogger.reset_metrics()
        logger = get_tw_logger("test_timer_fail")
        with pytest.raises(ValueError):
            with logger.timer("phi"):
                raise ValueError("bozuk")
        assert not logger.get_metrics()[0].success
        assert logger.get_metrics()[0].error == "bozuk"

    def test_log_function_call(self):
        TWLogger.reset_metrics()

        @log_function_call("test_decorator")
        def double(x):
            return 2 * x

        assert double(4) == 8
        assert get_tw_logger("test_decorator").get_metrics()[0].operation == "double"

    def test_json_formatter(self):
        record = logging.LogRecord("tw.test", logging.INFO, __file__, 1, "mesaj", None, None)
        record.fields = {"segments": 3}
        data = json.loads(JsonFormatter().format(record))
        assert data["message"] == "mesaj"
        assert data["fields"] == {"segments": 3}

    def test_configure_logging(self, tmp_path):
        configure_logging(level="DEBUG", log_to_file=True, log_dir=str(tmp_path), use_rich=False)
        get_tw_logger("test_configure").info("dosyaya")
        configure_logging()
        assert list(tmp_path.iterdir())
