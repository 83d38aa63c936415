"""
Cantor Normal Form Ordinals
===========================
ω ussu dogal sayi olan terimler ve sembolik kardinal atomlari uzerinde
Cantor normal formu. Bir atom terimi (κ, c), κ = ω^κ oldugu icin κ·c'dir.

Desteklenen parca:
- ω ustleri dogal sayi (ε₀ altindaki saf ω kismi, ω^ω yok)
- atomlar sadece `atom·k + kalan` biciminde bas terim olarak
- toplama, ardil, soldan fark, dogal sayi ile carpma, atoma gore bolme

Parca disina cikan islemler UnsupportedFragment firlatir.
"""

from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Tuple, Union

from .cardinals import CardinalAtom
from ..types import Comparison
from ..utils.exceptions import UnsupportedFragment, EmptyOrder

Exponent = Union[int, CardinalAtom]
Term = Tuple[Exponent, int]


def exponent_key(exponent: Exponent) -> Tuple[int, int]:
    """Us sirasi: dogal sayilar < atomlar (rank ile)."""
    if isinstance(exponent, CardinalAtom):
        return (1, exponent.rank)
    return (0, exponent)


@total_ordering
@dataclass(frozen=True, eq=False)
class Ordinal:
    """Kesin azalan (us, katsayi) ciftleri; sifir bos tuple."""
    terms: Tuple[Term, ...] = ()

    def __post_init__(self):
        previous = None
        for exponent, coefficient in self.terms:
            if coefficient < 1:
                raise UnsupportedFragment("ordinal", f"katsayi {coefficient} < 1")
            if not isinstance(exponent, CardinalAtom) and exponent < 0:
                raise UnsupportedFragment("ordinal", f"negatif us {exponent}")
            if previous is not None and exponent_key(exponent) >= exponent_key(previous):
                raise UnsupportedFragment("ordinal", "terimler kesin azalan degil")
            previous = exponent

    # ------------------------------------------------------------------
    # Kurucular
    # ------------------------------------------------------------------

    @classmethod
    def nat(cls, n: int) -> 'Ordinal':
        if n < 0:
            raise UnsupportedFragment("ordinal", f"negatif dogal sayi {n}")
        return cls(((0, n),)) if n else cls()

    @classmethod
    def omega_power(cls, exponent: Exponent, coefficient: int = 1) -> 'Ordinal':
        return cls(((exponent, coefficient),)) if coefficient else cls()

    @classmethod
    def atom(cls, atom: CardinalAtom, coefficient: int = 1) -> 'Ordinal':
        """Atomu ordinal olarak gom; sayilabilir ω icin ω^1."""
        if not atom.uncountable:
            return cls.omega_power(1, coefficient)
        return cls.omega_power(atom, coefficient)

    @classmethod
    def coerce(cls, value: Union['Ordinal', int, CardinalAtom]) -> 'Ordinal':
        if isinstance(value, Ordinal):
            return value
        if isinstance(value, CardinalAtom):
            return cls.atom(value)
        if isinstance(value, int) and not isinstance(value, bool):
            return cls.nat(value)
        raise TypeError(f"ordinal degil: {value!r}")

    # ------------------------------------------------------------------
    # Sorgular
    # ------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def tail(self) -> int:
        """Sonlu kuyruk (ω^0 katsayisi)."""
        if self.terms:
            exponent, coefficient = self.terms[-1]
            if not isinstance(exponent, CardinalAtom) and exponent == 0:
                return coefficient
        return 0

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.tail > 0)

    @property
    def finite_value(self) -> int:
        if not self.is_finite:
            raise UnsupportedFragment("finite_value", f"{self} sonlu degil")
        return self.tail

    @property
    def is_successor(self) -> bool:
        return self.tail > 0

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and self.tail == 0

    @property
    def leading_exponent(self) -> Optional[Exponent]:
        return self.terms[0][0] if self.terms else None

    @property
    def last_exponent(self) -> Optional[Exponent]:
        return self.terms[-1][0] if self.terms else None

    @property
    def leading_atom(self) -> Optional[CardinalAtom]:
        exponent = self.leading_exponent
        return exponent if isinstance(exponent, CardinalAtom) else None

    @property
    def is_atom(self) -> bool:
        return len(self.terms) == 1 and isinstance(self.terms[0][0], CardinalAtom) and self.terms[0][1] == 1

    def as_atom(self) -> CardinalAtom:
        if not self.is_atom:
            raise UnsupportedFragment("as_atom", f"{self} bir kardinal atomu degil")
        return self.terms[0][0]

    def is_countable(self) -> bool:
        return self.leading_atom is None

    def split_finite(self) -> Tuple['Ordinal', int]:
        """self = limit_kismi + n."""
        n = self.tail
        if n:
            return Ordinal(self.terms[:-1]), n
        return self, 0

    # ------------------------------------------------------------------
    # Karsilastirma
    # ------------------------------------------------------------------

    def compare(self, other: 'Ordinal') -> int:
        for (e1, c1), (e2, c2) in zip(self.terms, other.terms):
            k1, k2 = exponent_key(e1), exponent_key(e2)
            if k1 != k2:
                return -1 if k1 < k2 else 1
            if c1 != c2:
                return -1 if c1 < c2 else 1
        if len(self.terms) == len(other.terms):
            return 0
        return -1 if len(self.terms) < len(other.terms) else 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return other >= 0 and self.terms == Ordinal.nat(other).terms
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __lt__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Ordinal.nat(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.compare(other) < 0

    # ------------------------------------------------------------------
    # Aritmetik
    # ------------------------------------------------------------------

    def __add__(self, other: Union['Ordinal', int]) -> 'Ordinal':
        if isinstance(other, int):
            other = Ordinal.nat(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        if other.is_zero:
            return self
        lead = exponent_key(other.terms[0][0])
        kept = []
        for exponent, coefficient in self.terms:
            key = exponent_key(exponent)
            if key > lead:
                kept.append((exponent, coefficient))
            elif key == lead:
                kept.append((exponent, coefficient + other.terms[0][1]))
                return Ordinal(tuple(kept) + other.terms[1:])
            else:
                break
        return Ordinal(tuple(kept) + other.terms)

    def __radd__(self, other: int) -> 'Ordinal':
        if isinstance(other, int):
            return Ordinal.nat(other) + self
        return NotImplemented

    def succ(self) -> 'Ordinal':
        return self + 1

    def pred(self) -> 'Ordinal':
        """Ardil ordinalin onculu."""
        if not self.is_successor:
            raise UnsupportedFragment("pred", f"{self} ardil degil")
        return self.minus_nat(1)

    def minus_nat(self, n: int) -> Optional['Ordinal']:
        """self = x + n ise x, yoksa None."""
        if n == 0:
            return self
        limit_part, tail = self.split_finite()
        if tail < n:
            return None
        return limit_part + (tail - n)

    def minus_left(self, other: 'Ordinal') -> 'Ordinal':
        """self <= other icin −self + other (yani [self, other) sira tipi)."""
        if self > other:
            raise UnsupportedFragment("minus_left", f"{self} > {other}")
        for index, ((e1, c1), (e2, c2)) in enumerate(zip(self.terms, other.terms)):
            if exponent_key(e1) != exponent_key(e2):
                return Ordinal(other.terms[index:])
            if c1 != c2:
                return Ordinal(((e2, c2 - c1),) + other.terms[index + 1:])
        return Ordinal(other.terms[len(self.terms):])

    def times_nat(self, k: int) -> 'Ordinal':
        """(ω^e·c + kalan)·k = ω^e·(c·k) + kalan."""
        if k < 0:
            raise UnsupportedFragment("times_nat", f"negatif carpan {k}")
        if k == 0 or self.is_zero:
            return Ordinal()
        (exponent, coefficient), rest = self.terms[0], self.terms[1:]
        return Ordinal(((exponent, coefficient * k),) + rest)

    def divmod_atom(self, atom: CardinalAtom) -> Tuple[int, 'Ordinal']:
        """self = λ·j + r, j sonlu, r < λ."""
        lead = self.leading_exponent
        if lead is None:
            return 0, self
        if exponent_key(lead) > exponent_key(atom):
            raise UnsupportedFragment("divmod_atom", f"{self} >= {atom}·ω")
        if lead == atom:
            return self.terms[0][1], Ordinal(self.terms[1:])
        return 0, self

    def below_repeat_of(self, atom: CardinalAtom) -> bool:
        """self < λ·ω₁ (bas us en fazla λ)."""
        lead = self.leading_exponent
        return lead is None or exponent_key(lead) <= exponent_key(atom)

    def cofinality(self) -> 'Ordinal':
        """[0, self) sirasinin kofinalitesi."""
        if self.is_zero:
            raise EmptyOrder("0")
        exponent = self.last_exponent
        if isinstance(exponent, CardinalAtom):
            if not exponent.regular:
                raise UnsupportedFragment("cofinality", f"{exponent} duzenli degil")
            return Ordinal.atom(exponent)
        if exponent == 0:
            return ONE
        return OMEGA

    # ------------------------------------------------------------------
    # Yazdirma
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exponent, coefficient in self.terms:
            if isinstance(exponent, CardinalAtom):
                base = exponent.name
            elif exponent == 0:
                parts.append(str(coefficient))
                continue
            elif exponent == 1:
                base = "w"
            else:
                base = f"w^{exponent}"
            parts.append(base if coefficient == 1 else f"{base}*{coefficient}")
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"Ordinal({self})"


ZERO = Ordinal()
ONE = Ordinal.nat(1)
OMEGA = Ordinal.omega_power(1)


# ═══════════════════════════════════════════════════════════════════════════
# FONKSIYONEL ARAYUZ
# ═══════════════════════════════════════════════════════════════════════════

def ord_cmp(a: Ordinal, b: Ordinal) -> Comparison:
    """Toplam ordinal sirasi."""
    return Comparison.of(a.compare(b))


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    return a + b


def ord_succ(a: Ordinal) -> Ordinal:
    return a.succ()
