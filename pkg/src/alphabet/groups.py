"""
Koordinat Gruplari
==================
Uc yerlesik grup turu: toplamsal tamsayilar, n. mertebeden devirli grup
ve k uretecli serbest grup. Serbest grup elemanlari ±(i+1) tamsayilarinin
serbestce indirgenmis tuple'laridir.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from ..types import GroupKind, GroupElement
from ..utils.exceptions import InvalidGroupSpec, InvalidElement


def free_reduce(symbols: Iterable[int]) -> Tuple[int, ...]:
    """Stack ile serbest indirgeme (x x⁻¹ ciftlerini sil)."""
    stack: List[int] = []
    for symbol in symbols:
        if stack and stack[-1] == -symbol:
            stack.pop()
        else:
            stack.append(symbol)
    return tuple(stack)


@dataclass(frozen=True)
class GroupSpec:
    """Bir koordinatin grubu."""
    kind: GroupKind
    order: Optional[int] = None
    rank: Optional[int] = None

    def __post_init__(self):
        if self.kind is GroupKind.CYCLIC and (self.order is None or self.order < 2):
            raise InvalidGroupSpec("cyclic", self.order)
        if self.kind is GroupKind.FREE and (self.rank is None or self.rank < 1):
            raise InvalidGroupSpec("free", self.rank)

    @classmethod
    def integers(cls) -> 'GroupSpec':
        return cls(GroupKind.INTEGERS)

    @classmethod
    def cyclic(cls, n: int) -> 'GroupSpec':
        return cls(GroupKind.CYCLIC, order=n)

    @classmethod
    def free(cls, k: int) -> 'GroupSpec':
        return cls(GroupKind.FREE, rank=k)

    @classmethod
    def parse(cls, text: str) -> 'GroupSpec':
        """`integers`, `cyclic:4`, `free:2`."""
        kind, _, parameter = text.strip().partition(":")
        try:
            if kind == GroupKind.INTEGERS.value and not parameter:
                return cls.integers()
            if kind == GroupKind.CYCLIC.value:
                return cls.cyclic(int(parameter))
            if kind == GroupKind.FREE.value:
                return cls.free(int(parameter))
        except ValueError:
            raise InvalidGroupSpec(kind, parameter) from None
        raise InvalidGroupSpec(kind, parameter or None)

    def __str__(self) -> str:
        if self.kind is GroupKind.CYCLIC:
            return f"cyclic:{self.order}"
        if self.kind is GroupKind.FREE:
            return f"free:{self.rank}"
        return self.kind.value

    # ------------------------------------------------------------------
    # Grup islemleri
    # ------------------------------------------------------------------

    def identity(self) -> GroupElement:
        return () if self.kind is GroupKind.FREE else 0

    def designated(self) -> GroupElement:
        """Secilmis birim olmayan eleman (uretec 1 / ilk serbest sembol)."""
        return (1,) if self.kind is GroupKind.FREE else 1

    def is_identity(self, element: GroupElement) -> bool:
        return element == self.identity()

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        if self.kind is GroupKind.INTEGERS:
            return a + b
        if self.kind is GroupKind.CYCLIC:
            return (a + b) % self.order
        return free_reduce(a + b)

    def inv(self, a: GroupElement) -> GroupElement:
        if self.kind is GroupKind.INTEGERS:
            return -a
        if self.kind is GroupKind.CYCLIC:
            return (-a) % self.order
        return tuple(-symbol for symbol in reversed(a))

    def check(self, element: GroupElement) -> GroupElement:
        """Eleman bu gruba ait mi (InvalidElement)."""
        if self.kind is GroupKind.FREE:
            if not isinstance(element, tuple):
                raise InvalidElement(element, f"{self} icin tuple bekleniyor")
            for symbol in element:
                if not isinstance(symbol, int) or symbol == 0 or abs(symbol) > self.rank:
                    raise InvalidElement(element, f"{self} icin gecersiz sembol {symbol}")
            if free_reduce(element) != element:
                raise InvalidElement(element, "serbestce indirgenmis degil")
            return element
        if not isinstance(element, int) or isinstance(element, bool):
            raise InvalidElement(element, f"{self} icin tamsayi bekleniyor")
        if self.kind is GroupKind.CYCLIC and not 0 <= element < self.order:
            raise InvalidElement(element, f"mod {self.order} kalan degil")
        return element

    # ------------------------------------------------------------------
    # Metin
    # ------------------------------------------------------------------

    def parse_element(self, text: str) -> GroupElement:
        """Eleman literali: tamsayi (devirli icin mod n) veya `aB` gibi harfler."""
        text = text.strip()
        if self.kind is GroupKind.FREE:
            symbols = []
            for char in text:
                if not char.isalpha() or not char.isascii():
                    raise InvalidElement(text, "harf bekleniyor")
                index = ord(char.lower()) - ord("a") + 1
                if index > self.rank:
                    raise InvalidElement(text, f"'{char}' {self} disinda")
                symbols.append(index if char.islower() else -index)
            return free_reduce(symbols)
        try:
            value = int(text)
        except ValueError:
            raise InvalidElement(text, "tamsayi bekleniyor") from None
        if self.kind is GroupKind.CYCLIC:
            return value % self.order
        return value

    def format_element(self, element: GroupElement) -> str:
        if self.kind is GroupKind.FREE:
            return "".join(
                chr(ord("a") + abs(s) - 1) if s > 0 else chr(ord("A") + abs(s) - 1)
                for s in element
            )
        return str(element)

    def elements(self, limit: int = 8) -> List[GroupElement]:
        """Kucuk ornek kumesi (devirli icin tum grup)."""
        if self.kind is GroupKind.CYCLIC:
            return list(range(self.order))
        if self.kind is GroupKind.INTEGERS:
            return list(range(-(limit // 2), limit // 2 + 1))
        letters = [(i,) for i in range(1, self.rank + 1)] + [(-i,) for i in range(1, self.rank + 1)]
        return [()] + letters[:limit]
