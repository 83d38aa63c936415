"""
Kelime Terimleri
================
Sonlu tarifli (muhtemelen transfinit) kelimeler:

- Empty, Lit(harf), Concat(parcalar), Inv(ic)
- GenSeq([s, e), harf fonksiyonu): p konumunda h_{p + 2·bit(p)}
- RepeatDisjoint(blok): blogun ω₁ kopyasi, k. kopya [λ·k, λ·(k+1)) koordinatlarinda
- RepeatLiteral(blok): ayni koordinatlarla ω₁ kopya (kelime degil, dogrulama reddeder)

GenSeq konumlari mutlaktir: bit fonksiyonu konumun kendisi uzerinden tanimlanir,
bu yuzden ardisik GenSeq'ler flip kumelerinin birlesimi ile birlesir.
Bir ω-blogunun tum bitleri 1 olan kismi, 2 ileriden baslayan bitleri 0 olan
kisimla ayni harfleri yazar; tek blokluk dizilerde bitleri 0 olan yazim kullanilir.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from ..alphabet.letters import Alphabet, Letter, letter_inv
from ..ordinals.cardinals import CardinalAtom
from ..ordinals.ordinal import Ordinal, OMEGA, ZERO
from ..ordinals.order import Interval
from ..utils.exceptions import UnsupportedFragment


# ═══════════════════════════════════════════════════════════════════════════
# BIT TARIFLERI
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class GDescription:
    """
    g: konum -> {0, 1}, varsayilan bit + sonlu istisna kumesi.
    flips, biti (1 - default) olan konumlardir.
    """
    default: int = 0
    flips: FrozenSet[Ordinal] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.default not in (0, 1):
            raise UnsupportedFragment("GDescription", f"bit {self.default}")

    @classmethod
    def from_map(cls, exceptions: Mapping[Ordinal, int], default: int = 0) -> 'GDescription':
        """Varsayilana esit istisnalar atilir."""
        return cls(default, frozenset(
            Ordinal.coerce(key) for key, bit in exceptions.items() if bit != default
        ))

    def bit(self, position: Ordinal) -> int:
        return 1 - self.default if position in self.flips else self.default

    @property
    def exceptions(self) -> dict:
        return {position: 1 - self.default for position in self.flips}

    def within(self, start: Ordinal, stop: Ordinal) -> 'GDescription':
        """[start, stop) disindaki flip'leri at."""
        return GDescription(self.default, frozenset(p for p in self.flips if start <= p < stop))

    def shifted(self, base: Ordinal) -> 'GDescription':
        """Her flip'i base + p konumuna tasi (blok -> kopya)."""
        return GDescription(self.default, frozenset(base + p for p in self.flips))

    def sorted_flips(self) -> List[Ordinal]:
        return sorted(self.flips)

    def __str__(self) -> str:
        """DSL `bits` sozdizimi: {default=1, w:0}."""
        items = ["default=1"] if self.default else []
        items.extend(f"{position}:{1 - self.default}" for position in self.sorted_flips())
        return "{" + ", ".join(items) + "}"


ALL_ZERO = GDescription()


@dataclass(frozen=True)
class CanonicalGen:
    """β ↦ g_β."""

    @property
    def description(self) -> GDescription:
        return ALL_ZERO

    def bit(self, position: Ordinal) -> int:
        return 0


@dataclass(frozen=True)
class BitGen:
    """β ↦ h_{β + 2·g(β)}."""
    desc: GDescription

    @property
    def description(self) -> GDescription:
        return self.desc

    def bit(self, position: Ordinal) -> int:
        return self.desc.bit(position)


LetterFun = Union[CanonicalGen, BitGen]


def make_fun(desc: GDescription) -> LetterFun:
    """Hic bit 1 yoksa CanonicalGen."""
    if desc.default == 0 and not desc.flips:
        return CanonicalGen()
    return BitGen(desc)


def coordinate_of(position: Ordinal, bit: int) -> Ordinal:
    return position + 2 * bit


# ═══════════════════════════════════════════════════════════════════════════
# KELIME TERIMLERI
# ═══════════════════════════════════════════════════════════════════════════

class WordTerm:
    """Kelime terimi temel sinifi."""

    def __mul__(self, other: 'WordTerm') -> 'WordTerm':
        return concat(self, other)

    def __invert__(self) -> 'WordTerm':
        return Inv(self)


@dataclass(frozen=True)
class Empty(WordTerm):
    pass


EMPTY = Empty()


@dataclass(frozen=True)
class Lit(WordTerm):
    letter: Letter

    @property
    def coordinate(self) -> Ordinal:
        return self.letter.coordinate

    def inverted(self) -> 'Lit':
        return Lit(letter_inv(self.letter))


@dataclass(frozen=True)
class Concat(WordTerm):
    parts: Tuple[WordTerm, ...]


@dataclass(frozen=True)
class Inv(WordTerm):
    inner: WordTerm


@dataclass(frozen=True)
class GenSeq(WordTerm):
    """
    [start, stop) uzerinde uretec dizisi.
    inverted=True ise konumlar azalan sirada okunur ve her harf tersine cevrilir.
    """
    order: Interval
    fun: LetterFun
    alphabet: Alphabet
    inverted: bool = False

    @classmethod
    def of(cls, start: Ordinal, stop: Ordinal, desc: GDescription = ALL_ZERO,
           alphabet: Optional[Alphabet] = None, inverted: bool = False) -> 'GenSeq':
        return cls(Interval(stop, start), make_fun(desc), alphabet or Alphabet(), inverted)

    @property
    def start(self) -> Ordinal:
        return self.order.start

    @property
    def stop(self) -> Ordinal:
        return self.order.bound

    @property
    def desc(self) -> GDescription:
        return self.fun.description

    @property
    def default(self) -> int:
        return self.desc.default

    @property
    def flips(self) -> FrozenSet[Ordinal]:
        return self.desc.flips

    def contains(self, position: Ordinal) -> bool:
        return self.start <= position < self.stop

    def bit(self, position: Ordinal) -> int:
        return self.fun.bit(position)

    def coordinate(self, position: Ordinal) -> Ordinal:
        return coordinate_of(position, self.bit(position))

    def letter(self, position: Ordinal) -> Letter:
        """p konumundaki okunan harf (ters dizide ters harf)."""
        letter = self.alphabet.designated(self.coordinate(position))
        return letter_inv(letter) if self.inverted else letter

    def flipped(self) -> 'GenSeq':
        return GenSeq(self.order, self.fun, self.alphabet, not self.inverted)

    def restrict(self, start: Ordinal, stop: Ordinal) -> List[WordTerm]:
        """[start, stop) ∩ [s, e) parcasi, kanonik parcalar olarak."""
        lo = max(start, self.start)
        hi = min(stop, self.stop)
        return genseq_pieces(lo, hi, self.desc, self.alphabet, self.inverted)


@dataclass(frozen=True)
class RepeatDisjoint(WordTerm):
    """
    Blogun ω₁ kopyasi; blok [b0, λ) uzerinde artan bir GenSeq.
    k. kopya [λ·k + b0, λ·(k+1)) konumlarini, blok flip'lerini λ·k kaydirarak kullanir.
    first_copy, kuyruklarda ilk kopyanin sirasi (sonlu).
    """
    block: GenSeq
    first_copy: int = 0
    inverted: bool = False

    @property
    def width(self) -> CardinalAtom:
        return self.block.stop.as_atom()

    @property
    def block_start(self) -> Ordinal:
        return self.block.start

    def chunk_base(self, k: int) -> Ordinal:
        return Ordinal.atom(self.width, k)

    def copy(self, k: int) -> GenSeq:
        """k. kopya (artan yonde)."""
        base = self.chunk_base(k)
        return GenSeq.of(
            base + self.block.start, Ordinal.atom(self.width, k + 1),
            self.block.desc.shifted(base), self.block.alphabet,
        )

    def from_copy(self, k: int) -> 'RepeatDisjoint':
        return RepeatDisjoint(self.block, k, self.inverted)

    def flipped(self) -> 'RepeatDisjoint':
        return RepeatDisjoint(self.block, self.first_copy, not self.inverted)

    def letter(self, position: Ordinal) -> Letter:
        k, _ = position.divmod_atom(self.width)
        copy = self.copy(k)
        return copy.flipped().letter(position) if self.inverted else copy.letter(position)


@dataclass(frozen=True)
class RepeatLiteral(WordTerm):
    """Blogun ω₁ kopyasi, koordinatlar kaydirilmadan."""
    block: WordTerm


Segment = Union[Lit, GenSeq, RepeatDisjoint]


# ═══════════════════════════════════════════════════════════════════════════
# KURUCULAR
# ═══════════════════════════════════════════════════════════════════════════

def concat(*terms: WordTerm) -> WordTerm:
    """Empty'leri atarak birlestir."""
    parts = tuple(t for t in terms if not isinstance(t, Empty))
    if not parts:
        return EMPTY
    if len(parts) == 1:
        return parts[0]
    return Concat(parts)


def from_segments(segments: Iterable[WordTerm]) -> WordTerm:
    return concat(*segments)


def letter_term(letter: Optional[Letter]) -> WordTerm:
    return Lit(letter) if letter is not None else EMPTY


def genseq_pieces(start: Ordinal, stop: Ordinal, desc: GDescription,
                  alphabet: Alphabet, inverted: bool = False) -> List[WordTerm]:
    """
    [start, stop) aralikli GenSeq'in kanonik parcalari.
    stop her zaman limit kalir; sonlu kuyruk Lit olarak acilir.
    Bos aralik bos liste verir.
    """
    if not start < stop:
        return []
    limit_part, finite = stop.split_finite()
    pieces: List[WordTerm] = []
    if start < limit_part:
        pieces.append(_run(start, limit_part, desc, alphabet))
        first_tail = 0
    else:
        first_tail = start.split_finite()[1]
    for n in range(first_tail, finite):
        position = limit_part + n
        pieces.append(Lit(alphabet.designated(coordinate_of(position, desc.bit(position)))))
    if inverted:
        return [invert_segment(piece) for piece in reversed(pieces)]
    return pieces


def _run(start: Ordinal, stop: Ordinal, desc: GDescription, alphabet: Alphabet) -> GenSeq:
    """
    [start, stop) limit bitisli dizi.
    Tek ω-blogu kaplayip tum bitleri 1 olan dizi, ayni harfleri yazan
    [start + 2, stop) CanonicalGen dizisine cevrilir.
    """
    desc = desc.within(start, stop)
    block = start.split_finite()[0]
    if desc.default == 1 and not desc.flips and stop == block + OMEGA:
        return GenSeq(Interval(stop, start + 2), CanonicalGen(), alphabet)
    return GenSeq(Interval(stop, start), make_fun(desc), alphabet)


def invert_segment(segment: Segment) -> Segment:
    if isinstance(segment, Lit):
        return segment.inverted()
    return segment.flipped()
