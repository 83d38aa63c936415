"""
Desen Aileleri
==============
Occurrence sayimi yapilan kelimeler:

- Canonical(κ): M_κ, [0, κ) uzerinde β ↦ g_β
- BitPattern(g, λ): M_g, [0, λ) blogunda β ↦ h_{β + 2·g(β)}, ω₁ ayrik kopya
- FinitePattern(P): sonlu desen (minyatur oracle'in sembolik karsiligi)
"""

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from ..alphabet.letters import Alphabet, Letter
from ..ordinals.cardinals import CardinalAtom
from ..ordinals.ordinal import Ordinal, ZERO
from ..words.terms import (
    WordTerm, GenSeq, RepeatDisjoint, RepeatLiteral, GDescription, Lit, concat,
)
from ..utils.exceptions import NotRegularUncountable, NotUncountable, EmptyPattern


def build_M_kappa(kappa: CardinalAtom, alphabet: Optional[Alphabet] = None) -> GenSeq:
    """M_κ = GenSeq([0, κ), β ↦ g_β)."""
    if not kappa.is_regular_uncountable:
        raise NotRegularUncountable(kappa.name)
    return GenSeq.of(ZERO, Ordinal.atom(kappa), alphabet=alphabet)


def build_M_g(
    desc: GDescription,
    lam: CardinalAtom,
    alphabet: Optional[Alphabet] = None,
    chunked: bool = True
) -> Union[RepeatDisjoint, RepeatLiteral]:
    """
    M_g: [0, λ) blogunun ω₁ kopyasi.
    chunked=False koordinatlari kaydirmayan tekrari verir (dogrulama reddeder).
    """
    if not lam.uncountable:
        raise NotUncountable(lam.name)
    stop = Ordinal.atom(lam)
    block = GenSeq.of(ZERO, stop, desc.within(ZERO, stop), alphabet)
    if chunked:
        return RepeatDisjoint(block)
    return RepeatLiteral(block)


@dataclass(frozen=True)
class Canonical:
    """M_κ ailesi."""
    kappa: CardinalAtom

    def __post_init__(self):
        if not self.kappa.is_regular_uncountable:
            raise NotRegularUncountable(self.kappa.name)

    def word(self, alphabet: Optional[Alphabet] = None) -> WordTerm:
        return build_M_kappa(self.kappa, alphabet)

    def __str__(self) -> str:
        return f"Mk({self.kappa})"


@dataclass(frozen=True)
class BitPattern:
    """M_g ailesi; desc [0, λ) disindaki flip'lerden arindirilir."""
    desc: GDescription
    width: CardinalAtom
    chunked: bool = True

    def __post_init__(self):
        if not self.width.uncountable:
            raise NotUncountable(self.width.name)
        object.__setattr__(self, "desc", self.desc.within(ZERO, Ordinal.atom(self.width)))

    def word(self, alphabet: Optional[Alphabet] = None) -> WordTerm:
        return build_M_g(self.desc, self.width, alphabet, self.chunked)

    def bit(self, position: Ordinal) -> int:
        """M_g'nin mutlak konumdaki biti."""
        _, local = position.divmod_atom(self.width)
        return self.desc.bit(local)

    def __str__(self) -> str:
        label = f"Mg({self.desc}, {self.width})"
        return label if self.chunked else f"{label}[literal]"


@dataclass(frozen=True)
class FinitePattern:
    """Sonlu desen P; kuyruklari P'nin sonekleri."""
    letters: Tuple[Letter, ...]

    def __post_init__(self):
        if not self.letters:
            raise EmptyPattern()
        object.__setattr__(self, "letters", tuple(self.letters))

    def word(self, alphabet: Optional[Alphabet] = None) -> WordTerm:
        return concat(*(Lit(letter) for letter in self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return "fin(" + ".".join(str(letter) for letter in self.letters) + ")"


PatternFamily = Union[Canonical, BitPattern, FinitePattern]
