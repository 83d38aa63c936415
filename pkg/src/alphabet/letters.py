"""
Harfler ve Alfabe
=================
Harf = koordinat (ordinal) + o koordinatin grubunda birim olmayan eleman.
Birim harfler hic saklanmaz: make_letter ve letter_mul birim icin None dondurur.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .groups import GroupSpec
from ..ordinals.ordinal import Ordinal
from ..types import GroupElement
from ..utils.exceptions import CoordinateMismatch, GroupMismatch, IdentityLetter


@dataclass(frozen=True)
class Letter:
    """Birim olmayan harf."""
    coordinate: Ordinal
    element: GroupElement
    group: GroupSpec

    def __post_init__(self):
        self.group.check(self.element)
        if self.group.is_identity(self.element):
            raise IdentityLetter(str(self.coordinate))

    @property
    def is_designated(self) -> bool:
        return self.element == self.group.designated()

    def inverse(self) -> 'Letter':
        return letter_inv(self)

    def __str__(self) -> str:
        if self.is_designated:
            return f"g[{self.coordinate}]"
        return f"elem({self.coordinate}, {self.group.format_element(self.element)})"


def make_letter(coordinate: Ordinal, element: GroupElement, group: GroupSpec) -> Optional[Letter]:
    """Birim eleman icin None (harf kaybolur)."""
    if group.is_identity(element):
        return None
    return Letter(coordinate, element, group)


def letter_mul(a: Letter, b: Letter) -> Optional[Letter]:
    """Ayni koordinatta grup carpimi; birim sonuc None."""
    if a.coordinate != b.coordinate:
        raise CoordinateMismatch(str(a.coordinate), str(b.coordinate))
    if a.group != b.group:
        raise GroupMismatch(str(a.coordinate))
    return make_letter(a.coordinate, a.group.mul(a.element, b.element), a.group)


def letter_inv(a: Letter) -> Letter:
    return Letter(a.coordinate, a.group.inv(a.element), a.group)


# ═══════════════════════════════════════════════════════════════════════════
# ALFABE
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class Region:
    """[start, stop) koordinat araligina atanmis grup."""
    start: Ordinal
    stop: Ordinal
    group: GroupSpec

    def contains(self, coordinate: Ordinal) -> bool:
        return self.start <= coordinate < self.stop


@dataclass(frozen=True)
class Alphabet:
    """
    Tum koordinatlar icin varsayilan grup, sonlu sayida bolgesel istisna
    ve opsiyonel indeks siniri (I = λ).
    """
    default: GroupSpec = GroupSpec.integers()
    regions: Tuple[Region, ...] = ()
    index_bound: Optional[Ordinal] = None

    def group_at(self, coordinate: Ordinal) -> GroupSpec:
        for region in self.regions:
            if region.contains(coordinate):
                return region.group
        return self.default

    def designated(self, coordinate: Ordinal) -> Letter:
        """g[α] = h[α]: koordinatin secilmis harfi."""
        group = self.group_at(coordinate)
        return Letter(coordinate, group.designated(), group)

    def letter(self, coordinate: Ordinal, element: GroupElement) -> Optional[Letter]:
        return make_letter(coordinate, element, self.group_at(coordinate))

    def in_range(self, coordinate: Ordinal) -> bool:
        return self.index_bound is None or coordinate < self.index_bound
