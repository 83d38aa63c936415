# Transfinit Kelimeler - Ana Modul
"""
tw 1.0
======
Transfinit kelimeler, tam serbest carpim ve desen sayan homomorfizmalar.
"""

from typing import TYPE_CHECKING

# Version info
__version__ = "1.0.0"
__author__ = "tw Team"

# Type exports (lazy import for performance)
if TYPE_CHECKING:
    from .types import (
        # Enums
        Sign,
        GroupKind,
        OutputFormat,
        Comparison,
        # Type aliases
        GroupElement,
        ReportLines,
        format_value,
        # Protocols
        Serializable,
        LineReport,
    )

__all__ = [
    "__version__",
    "__author__",
]
