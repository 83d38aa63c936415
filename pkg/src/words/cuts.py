"""
Kesim Noktalari
===============
Kanonik parca listesi icinde kesim: (yol, ofset).

- Lit i: (i,) ofset 0 (oncesi) veya 1 (sonrasi)
- GenSeq i: (i,) ofset β ∈ [s, e]; β'dan kucuk konumlar ile diger konumlar ayrilir
- RepeatDisjoint i: (i, k) ofset β ∈ [b0, λ] k. kopyanin blok-ici konumu
- kelime sonu: (n,) ofset 0
- repeat_limit=λ: i. parcanin λ·ω₁ noktasi (ordinal olarak yazilamaz)
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .normal_form import reduced_segments
from .terms import WordTerm, Lit, GenSeq, RepeatDisjoint, Segment, EMPTY, from_segments
from ..ordinals.cardinals import CardinalAtom
from ..ordinals.ordinal import Ordinal, ZERO, ONE
from ..utils.exceptions import InvalidCut, UnsupportedFragment


@dataclass(frozen=True)
class CutPoint:
    """Kanonik formda bir kesim."""
    path: Tuple[int, ...]
    offset: Ordinal = ZERO
    repeat_limit: Optional[CardinalAtom] = None

    @property
    def index(self) -> int:
        return self.path[0]

    def __str__(self) -> str:
        where = "/".join(str(p) for p in self.path)
        if self.repeat_limit is not None:
            return f"{where}@{self.repeat_limit}*w1"
        return f"{where}@{self.offset}"


def _segment_length(segment: Segment) -> Ordinal:
    if isinstance(segment, Lit):
        return ONE
    return segment.order.length


def cut_at_offset(t: WordTerm, offset: Ordinal) -> CutPoint:
    """Iyi sirali kelimede, tanim kumesinin `offset` konumundaki kesim."""
    return cut_in_segments(reduced_segments(t), offset)


def cut_in_segments(segs: List[Segment], offset: Ordinal) -> CutPoint:
    remaining = Ordinal.coerce(offset)
    for i, segment in enumerate(segs):
        if not isinstance(segment, Lit) and segment.inverted:
            raise UnsupportedFragment("cut_at_offset", "ters parca iyi sirali degil")
        if isinstance(segment, RepeatDisjoint):
            if remaining.below_repeat_of(segment.width):
                copies, rest = remaining.divmod_atom(segment.width)
                return CutPoint((i, segment.first_copy + copies), segment.block_start + rest)
            continue
        length = _segment_length(segment)
        if remaining < length:
            if isinstance(segment, Lit):
                return CutPoint((i,), ZERO)
            return CutPoint((i,), segment.start + remaining)
        remaining = length.minus_left(remaining)
    if remaining.is_zero:
        return CutPoint((len(segs),), ZERO)
    raise InvalidCut(str(offset), "kelime uzunlugunu asiyor")


def _locate(segs: List[Segment], cut: CutPoint) -> Optional[Segment]:
    i = cut.index
    if i == len(segs):
        if cut.offset.is_zero and len(cut.path) == 1 and cut.repeat_limit is None:
            return None
        raise InvalidCut(str(cut), "kelime sonu ofseti 0 olmali")
    if not 0 <= i < len(segs):
        raise InvalidCut(str(cut), "parca yok")
    segment = segs[i]
    if cut.repeat_limit is not None:
        if not isinstance(segment, RepeatDisjoint) or segment.width != cut.repeat_limit or len(cut.path) != 1:
            raise UnsupportedFragment("cut", f"{cut.repeat_limit}·ω₁ noktasi bu parcada yazilamaz")
        return segment
    if isinstance(segment, Lit):
        if len(cut.path) != 1 or cut.offset not in (ZERO, ONE):
            raise InvalidCut(str(cut), "harf ofseti 0 veya 1")
    elif isinstance(segment, GenSeq):
        if len(cut.path) != 1 or not segment.start <= cut.offset <= segment.stop:
            raise InvalidCut(str(cut), f"[{segment.start}, {segment.stop}] disinda")
    else:
        if len(cut.path) != 2 or cut.path[1] < segment.first_copy \
                or not segment.block_start <= cut.offset <= segment.block.stop:
            raise InvalidCut(str(cut), "tekrar kopyasi veya blok konumu gecersiz")
    return segment


def tail_segments(segs: List[Segment], cut: CutPoint) -> List[Segment]:
    segment = _locate(segs, cut)
    if segment is None:
        return []
    i = cut.index
    rest = segs[i + 1:]
    if cut.repeat_limit is not None:
        return ([segment] if segment.inverted else []) + rest
    if isinstance(segment, Lit):
        return ([segment] if cut.offset.is_zero else []) + rest
    if isinstance(segment, GenSeq):
        if segment.inverted:
            return segment.restrict(segment.start, cut.offset) + rest
        return segment.restrict(cut.offset, segment.stop) + rest
    k = cut.path[1]
    copy = segment.copy(k)
    point = segment.chunk_base(k) + cut.offset
    if segment.inverted:
        lower = [segment.copy(j).flipped() for j in reversed(range(segment.first_copy, k))]
        return copy.flipped().restrict(copy.start, point) + lower + rest
    return copy.restrict(point, copy.stop) + [segment.from_copy(k + 1)] + rest


def head_segments(segs: List[Segment], cut: CutPoint) -> List[Segment]:
    segment = _locate(segs, cut)
    if segment is None:
        return list(segs)
    i = cut.index
    before = segs[:i]
    if cut.repeat_limit is not None:
        return before + ([] if segment.inverted else [segment])
    if isinstance(segment, Lit):
        return before + ([] if cut.offset.is_zero else [segment])
    if isinstance(segment, GenSeq):
        if segment.inverted:
            return before + segment.restrict(cut.offset, segment.stop)
        return before + segment.restrict(segment.start, cut.offset)
    k = cut.path[1]
    copy = segment.copy(k)
    point = segment.chunk_base(k) + cut.offset
    if segment.inverted:
        return before + [segment.from_copy(k + 1)] + copy.flipped().restrict(point, copy.stop)
    lower = [segment.copy(j) for j in range(segment.first_copy, k)]
    return before + lower + copy.restrict(copy.start, point)


def tail(t: WordTerm, cut: CutPoint) -> WordTerm:
    """Kesimden sonraki kisim."""
    return from_segments(tail_segments(reduced_segments(t), cut))


def head(t: WordTerm, cut: CutPoint) -> WordTerm:
    """Kesimden onceki kisim."""
    return from_segments(head_segments(reduced_segments(t), cut))


def tail_at(t: WordTerm, offset: Ordinal) -> WordTerm:
    """M_{κ,β} gibi: iyi sirali kelimenin `offset`ten baslayan son parcasi."""
    segs = reduced_segments(t)
    return from_segments(tail_segments(segs, cut_in_segments(segs, offset)))


def slice_word(t: WordTerm, start: Ordinal, stop: Optional[Ordinal] = None) -> WordTerm:
    """[start, stop) konum araligi; stop verilmezse kuyruk."""
    segs = reduced_segments(t)
    after = tail_segments(segs, cut_in_segments(segs, start))
    if stop is None:
        return from_segments(after)
    start, stop = Ordinal.coerce(start), Ordinal.coerce(stop)
    if stop < start:
        raise InvalidCut(f"{start}..{stop}", "bitis baslangictan once")
    if stop == start:
        return EMPTY
    return from_segments(head_segments(after, cut_in_segments(after, start.minus_left(stop))))
