"""Ordinal ve lineer sira terim cebiri."""

from .cardinals import CardinalAtom, CardinalRegistry, OMEGA, OMEGA_ONE
from .ordinal import Ordinal, ZERO, ONE, ord_cmp, ord_add, ord_succ
from .order import (
    OrderTerm, FiniteOrder, Interval, Sum, RepeatOmegaOne, Reverse,
    WellOrdered, Reversed, Repeated, order_iso, cofinality
)

__all__ = [
    'CardinalAtom', 'CardinalRegistry', 'OMEGA', 'OMEGA_ONE',
    'Ordinal', 'ZERO', 'ONE', 'ord_cmp', 'ord_add', 'ord_succ',
    'OrderTerm', 'FiniteOrder', 'Interval', 'Sum', 'RepeatOmegaOne', 'Reverse',
    'WellOrdered', 'Reversed', 'Repeated', 'order_iso', 'cofinality',
]
