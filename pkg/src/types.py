"""
Type Definitions Module
=======================
Merkezi type tanimlari ve protokoller.
mypy ve IDE support icin kapsamli type hints.
"""

from typing import Protocol, runtime_checkable, Dict, List, Any, Tuple, Union
from enum import Enum


# ═══════════════════════════════════════════════════════════════════════════════
# ENUMS
# ═══════════════════════════════════════════════════════════════════════════════

class Sign(str, Enum):
    """Occurrence isareti."""
    PLUS = "+"
    MINUS = "-"

    @property
    def flipped(self) -> 'Sign':
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS


class GroupKind(str, Enum):
    """Koordinat grup turleri."""
    INTEGERS = "integers"
    CYCLIC = "cyclic"
    FREE = "free"


class OutputFormat(str, Enum):
    """CLI cikti formatlari."""
    PLAIN = "plain"
    STRUCTURED = "structured"


class Comparison(str, Enum):
    """Ordinal karsilastirma sonucu."""
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    @classmethod
    def of(cls, value: int) -> 'Comparison':
        if value < 0:
            return cls.LESS
        if value > 0:
            return cls.GREATER
        return cls.EQUAL


# ═══════════════════════════════════════════════════════════════════════════════
# TYPE ALIASES
# ═══════════════════════════════════════════════════════════════════════════════

# Grup elemani: tamsayi, mod n kalan veya serbest grupta indirgenmis harf dizisi
GroupElement = Union[int, Tuple[int, ...]]

# key=value satirlari
ReportLines = List[str]


# ═══════════════════════════════════════════════════════════════════════════════
# PROTOCOLS
# ═══════════════════════════════════════════════════════════════════════════════

@runtime_checkable
class Serializable(Protocol):
    """Dict'e cevrilebilir nesneler."""
    def to_dict(self) -> Dict[str, Any]: ...


@runtime_checkable
class LineReport(Serializable, Protocol):
    """Satir bazli (key=value) rapor uretebilen nesneler."""
    def to_lines(self) -> ReportLines: ...


def format_value(value: Any) -> str:
    """key=value ciktisi icin deger formatla (bool -> true/false)."""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)
