"""
Sonlu Kisitlama
===============
ρ_F: F disindaki koordinatlari silip kalan sonlu kelimeyi *_{i∈F} G_i
serbest carpiminda indirger. FiniteWord serbest carpim elemanidir.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Set, Tuple, Union

from .normal_form import segments
from .terms import WordTerm, Lit, GenSeq, RepeatDisjoint, Segment
from ..alphabet.letters import Letter, letter_inv, letter_mul
from ..ordinals.ordinal import Ordinal


@dataclass(frozen=True)
class FiniteWord:
    """Serbest carpimda indirgenmis sonlu kelime."""
    letters: Tuple[Letter, ...] = ()

    @classmethod
    def of(cls, letters: Iterable[Letter]) -> 'FiniteWord':
        """Stack ile indirge: ayni koordinatli komsular carpilir, birimler silinir."""
        stack: List[Letter] = []
        for letter in letters:
            if stack and stack[-1].coordinate == letter.coordinate:
                product = letter_mul(stack.pop(), letter)
                if product is not None:
                    stack.append(product)
            else:
                stack.append(letter)
        return cls(tuple(stack))

    def __mul__(self, other: 'FiniteWord') -> 'FiniteWord':
        return FiniteWord.of(self.letters + other.letters)

    def inverse(self) -> 'FiniteWord':
        return FiniteWord(tuple(letter_inv(letter) for letter in reversed(self.letters)))

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def coordinates(self) -> Set[Ordinal]:
        return {letter.coordinate for letter in self.letters}

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "eps"
        return ".".join(str(letter) for letter in self.letters)


IDENTITY = FiniteWord()

CoordinateSet = Iterable[Union[Ordinal, int]]


def _coordinates(F: CoordinateSet) -> Set[Ordinal]:
    return {Ordinal.coerce(f) for f in F}


def genseq_hits(seq: GenSeq, F: Set[Ordinal]) -> List[Tuple[Ordinal, Letter]]:
    """p + 2·bit(p) ∈ F olan konumlar: p = f (bit 0) veya p = f-2 (bit 1)."""
    hits = []
    for f in F:
        for position, bit in ((f, 0), (f.minus_nat(2), 1)):
            if position is not None and seq.contains(position) and seq.bit(position) == bit:
                hits.append((position, seq.letter(position)))
    return hits


def repeat_hits(rep: RepeatDisjoint, F: Set[Ordinal]) -> List[Tuple[Ordinal, Letter]]:
    hits = []
    for f in F:
        if not f.below_repeat_of(rep.width):
            continue
        k, _ = f.divmod_atom(rep.width)
        if k < rep.first_copy:
            continue
        copy = rep.copy(k)
        for position, letter in genseq_hits(copy, {f}):
            hits.append((position, letter_inv(letter) if rep.inverted else letter))
    return hits


def segment_hits(segment: Segment, F: Set[Ordinal]) -> List[Tuple[Optional[Ordinal], Letter]]:
    """Parcada koordinati F'de olan (konum, harf) ciftleri, okuma sirasinda. Lit konumu None."""
    if isinstance(segment, Lit):
        return [(None, segment.letter)] if segment.coordinate in F else []
    if isinstance(segment, GenSeq):
        hits = genseq_hits(segment, F)
    else:
        hits = repeat_hits(segment, F)
    hits.sort(key=lambda hit: hit[0], reverse=segment.inverted)
    return hits


def _segment_letters(segment: Segment, F: Set[Ordinal]) -> List[Letter]:
    return [letter for _, letter in segment_hits(segment, F)]


def restrict_finite(t: WordTerm, F: CoordinateSet) -> FiniteWord:
    """ρ_F(t): koordinati F'de olan harfler, sirayla, sonra indirgenmis."""
    coordinates = _coordinates(F)
    letters: List[Letter] = []
    for segment in segments(t):
        letters.extend(_segment_letters(segment, coordinates))
    return FiniteWord.of(letters)


def project(word: FiniteWord, X: CoordinateSet) -> FiniteWord:
    """ρ_XY: zaten kisitlanmis kelimeyi X ⊆ F kumesine indir."""
    coordinates = _coordinates(X)
    return FiniteWord.of(letter for letter in word if letter.coordinate in coordinates)


def equiv_on(a: WordTerm, b: WordTerm, F: CoordinateSet) -> bool:
    """ρ_F(a) = ρ_F(b)."""
    coordinates = _coordinates(F)
    return restrict_finite(a, coordinates) == restrict_finite(b, coordinates)
