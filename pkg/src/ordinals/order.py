"""
Lineer Sira Terimleri
=====================
FiniteOrder, Interval, Sum, RepeatOmegaOne ve Reverse terimleri ile
kanonik forma indirgeme. order_iso kanonik formlari karsilastirir.

Kanonik form parcalari:
- WellOrdered(α)   : iyi sirali blok, α > 0
- Reversed(γ)      : γ* (γ sonsuz, sonlu kuyrugu yok)
- Repeated(κ)      : κ·ω₁ = ω^(κ+ω₁), κ bir atom
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

from .cardinals import CardinalAtom, OMEGA_ONE
from .ordinal import Ordinal, ZERO, ONE, exponent_key
from ..utils.exceptions import UnsupportedFragment, EmptyOrder


# ═══════════════════════════════════════════════════════════════════════════
# SIRA TERIMLERI
# ═══════════════════════════════════════════════════════════════════════════

class OrderTerm:
    """Sira terimi temel sinifi."""

    def canonical(self) -> Tuple['Part', ...]:
        parts: List[Part] = []
        for part in self._parts():
            _push(parts, part)
        return tuple(parts)

    def _parts(self) -> List['Part']:
        raise NotImplementedError

    @property
    def is_empty(self) -> bool:
        return not self.canonical()


@dataclass(frozen=True)
class FiniteOrder(OrderTerm):
    n: int

    def _parts(self) -> List['Part']:
        return [WellOrdered(Ordinal.nat(self.n))] if self.n else []


@dataclass(frozen=True)
class Interval(OrderTerm):
    """[start, bound)."""
    bound: Ordinal
    start: Ordinal = ZERO

    def __post_init__(self):
        if not self.start < self.bound:
            raise EmptyOrder(f"[{self.start}, {self.bound})")

    @property
    def length(self) -> Ordinal:
        return self.start.minus_left(self.bound)

    def _parts(self) -> List['Part']:
        return [WellOrdered(self.length)]


@dataclass(frozen=True)
class Sum(OrderTerm):
    left: OrderTerm
    right: OrderTerm

    def _parts(self) -> List['Part']:
        return list(self.left.canonical()) + list(self.right.canonical())


@dataclass(frozen=True)
class RepeatOmegaOne(OrderTerm):
    """Blogun ω₁ kopyasi art arda."""
    block: OrderTerm

    def _parts(self) -> List['Part']:
        block = self.block.canonical()
        if not block:
            return []
        if len(block) != 1 or not isinstance(block[0], WellOrdered):
            raise UnsupportedFragment("RepeatOmegaOne", "blok iyi sirali degil")
        return [Repeated.of(block[0].length)]


@dataclass(frozen=True)
class Reverse(OrderTerm):
    inner: OrderTerm

    @staticmethod
    def of(inner: OrderTerm) -> OrderTerm:
        """Reverse(Reverse(O)) = O."""
        if isinstance(inner, Reverse):
            return inner.inner
        return Reverse(inner)

    def _parts(self) -> List['Part']:
        return [_reverse_part(part) for part in reversed(self.inner.canonical())]


# ═══════════════════════════════════════════════════════════════════════════
# KANONIK PARCALAR
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class WellOrdered:
    length: Ordinal


@dataclass(frozen=True)
class Reversed:
    length: Ordinal


@dataclass(frozen=True)
class Repeated:
    """κ·ω₁; dogal us icin dogrudan ω₁ olur."""
    atom: CardinalAtom

    @staticmethod
    def of(block: Ordinal) -> Union[WellOrdered, 'Repeated']:
        lead = block.leading_exponent
        if isinstance(lead, CardinalAtom):
            return Repeated(lead)
        return WellOrdered(Ordinal.atom(OMEGA_ONE))


Part = Union[WellOrdered, Reversed, Repeated]


def _reverse_part(part: Part) -> Part:
    if isinstance(part, WellOrdered):
        return Reversed(part.length)
    if isinstance(part, Reversed):
        return WellOrdered(part.length)
    raise UnsupportedFragment("Reverse", f"{part.atom}·w1 tersi")


def _atoms_above(length: Ordinal, atom: CardinalAtom) -> Ordinal:
    """α'nin κ'dan buyuk atom uslu terimleri (κ·ω₁ digerlerini yutar)."""
    return Ordinal(tuple(t for t in length.terms if exponent_key(t[0]) > exponent_key(atom)))


def _push(parts: List[Part], part: Part) -> None:
    if isinstance(part, Reversed):
        body, finite = part.length.split_finite()
        if finite:
            _push(parts, WellOrdered(Ordinal.nat(finite)))
        if body.is_zero:
            return
        part = Reversed(body)
    if not parts:
        parts.append(part)
        return
    last = parts[-1]
    if isinstance(last, WellOrdered) and isinstance(part, WellOrdered):
        parts[-1] = WellOrdered(last.length + part.length)
    elif isinstance(last, Reversed) and isinstance(part, Reversed):
        parts[-1] = Reversed(part.length + last.length)
    elif isinstance(last, Reversed) and isinstance(part, WellOrdered) and part.length.is_finite:
        return
    elif isinstance(last, WellOrdered) and isinstance(part, Repeated):
        high = _atoms_above(last.length, part.atom)
        parts.pop()
        if not high.is_zero:
            parts.append(WellOrdered(high))
            parts.append(part)
        else:
            _push(parts, part)
    elif isinstance(last, Repeated) and isinstance(part, WellOrdered):
        lead = part.length.leading_atom
        if lead is not None and lead.rank > last.atom.rank:
            parts.pop()
            _push(parts, part)
        else:
            parts.append(part)
    elif isinstance(last, Repeated) and isinstance(part, Repeated):
        if part.atom.rank > last.atom.rank:
            parts.pop()
            _push(parts, part)
        else:
            parts.append(part)
    else:
        parts.append(part)


# ═══════════════════════════════════════════════════════════════════════════
# ISLEMLER
# ═══════════════════════════════════════════════════════════════════════════

def order_iso(a: OrderTerm, b: OrderTerm) -> bool:
    """Kanonik formlar ayni ise izomorf."""
    return a.canonical() == b.canonical()


def cofinality(order: OrderTerm) -> Ordinal:
    """Son kanonik parcaya gore kofinalite."""
    parts = order.canonical()
    if not parts:
        raise EmptyOrder("order")
    last = parts[-1]
    if isinstance(last, WellOrdered):
        return last.length.cofinality()
    if isinstance(last, Reversed):
        return ONE
    return Ordinal.atom(OMEGA_ONE)
