"""
Occurrence Taramasi
===================
Indirgenmis kelimenin kanonik parcalarinda, desen ailesinin bir kuyrugu ile
eslesen maksimal konveks bolgeler.

+ isaretli bolgeler kuyrugun kendisine, - isaretli bolgeler tersine esittir.
Ortak son parcasi olan iki + bolge ayni siniftadir, bu yuzden siniflar desenin
bittigi kesimlerle birebirdir. - bolgeler ters cevrilmis kelimede + olarak aranir.

Desen sonu:
- Canonical(κ): artan ve varsayilan biti 0 olan parcada κ kesimi
- BitPattern(g, λ): ayni bloklu tekrarin λ·ω₁ noktasi (flip'siz g icin λ·ω₁'i
  iceren GenSeq/genis kopya da olur)
- FinitePattern(P): P'nin son harfine esit her harfin hemen arkasi
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple, Union

from .families import PatternFamily, Canonical, BitPattern, FinitePattern
from ..alphabet.letters import Alphabet, Letter
from ..config.constants import get_config
from ..ordinals.ordinal import Ordinal, ZERO, ONE
from ..types import Sign, ReportLines
from ..words.cuts import CutPoint
from ..words.normal_form import reduced_segments
from ..words.restriction import segment_hits
from ..words.terms import WordTerm, Lit, GenSeq, RepeatDisjoint, Segment, invert_segment
from ..utils.exceptions import UnsupportedFragment
from ..utils.logger import get_tw_logger

logger = get_tw_logger("occurrences")

# Desen konumu: ordinal (M_κ, M_g) veya sonlu desen indeksi
PatternPosition = Union[Ordinal, int]

# (parca indeksi, konum); Lit icin konum None
Spot = Tuple[int, Optional[Ordinal]]


@dataclass(frozen=True)
class Occurrence:
    """Maksimal occurrence: [start, end) kesimleri arasi bolge."""
    start: CutPoint
    end: CutPoint
    sign: Sign
    matched_tail: PatternPosition

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sign": self.sign.value,
            "start": str(self.start),
            "end": str(self.end),
            "matched_tail": str(self.matched_tail),
        }

    def to_line(self) -> str:
        return f"occurrence sign={self.sign.value} start={self.start} end={self.end} tail={self.matched_tail}"


@dataclass
class OccReport:
    """Isaret basina sinif sayilari ve her sinif icin bir temsilci."""
    plus_classes: int = 0
    minus_classes: int = 0
    representatives: List[Occurrence] = field(default_factory=list)

    @property
    def phi(self) -> int:
        return self.plus_classes - self.minus_classes

    def to_dict(self) -> Dict[str, Any]:
        return {
            "plus": self.plus_classes,
            "minus": self.minus_classes,
            "phi": self.phi,
            "representatives": [occ.to_dict() for occ in self.representatives],
        }

    def to_lines(self) -> ReportLines:
        lines = [f"plus={self.plus_classes} minus={self.minus_classes} phi={self.phi}"]
        lines.extend(occ.to_line() for occ in self.representatives)
        return lines


# ═══════════════════════════════════════════════════════════════════════════
# KONUM VE KESIM YARDIMCILARI
# ═══════════════════════════════════════════════════════════════════════════

def _letter_at(segment: Segment, position: Optional[Ordinal]) -> Letter:
    if isinstance(segment, Lit):
        return segment.letter
    return segment.letter(position)


def _alphabet_of(segment: Segment) -> Alphabet:
    if isinstance(segment, RepeatDisjoint):
        return segment.block.alphabet
    return segment.alphabet


def _last_spot(segs: List[Segment], i: int) -> Optional[Spot]:
    """i. parcanin okuma sirasinda son harfi."""
    if i < 0:
        return None
    segment = segs[i]
    if isinstance(segment, Lit):
        return i, None
    if not segment.inverted:
        return None
    if isinstance(segment, GenSeq):
        return i, segment.start
    return i, segment.chunk_base(segment.first_copy) + segment.block_start


def _previous_spot(segs: List[Segment], spot: Spot) -> Optional[Spot]:
    """Okuma sirasinda hemen onceki harf; limit konumda None."""
    i, position = spot
    segment = segs[i]
    if isinstance(segment, Lit):
        return _last_spot(segs, i - 1)
    if segment.inverted:
        return i, position.succ()
    if isinstance(segment, GenSeq):
        lower, opens_segment = segment.start, True
    else:
        k, _ = position.divmod_atom(segment.width)
        lower = segment.chunk_base(k) + segment.block_start
        opens_segment = k == segment.first_copy
    if position == lower:
        return _last_spot(segs, i - 1) if opens_segment else None
    if position.is_successor:
        return i, position.pred()
    return None


def _cut_before(segs: List[Segment], spot: Spot) -> CutPoint:
    i, position = spot
    segment = segs[i]
    if isinstance(segment, Lit):
        return CutPoint((i,), ZERO)
    if isinstance(segment, GenSeq):
        return CutPoint((i,), position.succ() if segment.inverted else position)
    k, local = position.divmod_atom(segment.width)
    return CutPoint((i, k), local.succ() if segment.inverted else local)


def _cut_after(segs: List[Segment], spot: Spot) -> CutPoint:
    i, position = spot
    segment = segs[i]
    if isinstance(segment, Lit):
        return CutPoint((i,), ONE)
    if isinstance(segment, GenSeq):
        return CutPoint((i,), position if segment.inverted else position.succ())
    k, local = position.divmod_atom(segment.width)
    return CutPoint((i, k), local if segment.inverted else local.succ())


def _word_start(segs: List[Segment]) -> CutPoint:
    """Ilk harften onceki kesim."""
    segment = segs[0]
    if isinstance(segment, Lit):
        return CutPoint((0,), ZERO)
    if isinstance(segment, GenSeq):
        return CutPoint((0,), segment.stop if segment.inverted else segment.start)
    if segment.inverted:
        return CutPoint((0,), ZERO, repeat_limit=segment.width)
    return CutPoint((0, segment.first_copy), segment.block_start)


def mirror_segments(segs: List[Segment]) -> List[Segment]:
    """X⁻¹'in kanonik parcalari."""
    return [invert_segment(segment) for segment in reversed(segs)]


def _unmirror_cut(segs: List[Segment], cut: CutPoint) -> CutPoint:
    """Ters kelimedeki kesimi X'teki kesime cevir (once/sonra yer degistirir)."""
    n = len(segs)
    if cut.index == n:
        return _word_start(segs)
    j = n - 1 - cut.index
    offset = cut.offset
    if isinstance(segs[j], Lit):
        offset = ZERO if offset == ONE else ONE
    return CutPoint((j,) + cut.path[1:], offset, cut.repeat_limit)


# ═══════════════════════════════════════════════════════════════════════════
# TARAMA
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class _Anchor:
    """Desen sonu kesimi ve o parcadaki en erken eslesen harf."""
    end: CutPoint
    spot: Spot
    matched: PatternPosition
    alphabet: Optional[Alphabet] = None


class _Scanner:
    """Tek yonlu (+) tarama."""

    def __init__(self, segs: List[Segment], family: PatternFamily):
        self.segs = segs
        self.family = family
        self.max_steps = get_config().reduction.MAX_BACKWARD_STEPS

    def occurrences(self, sign: Sign = Sign.PLUS) -> List[Occurrence]:
        found: Dict[CutPoint, Occurrence] = {}
        for anchor in self._anchors():
            if anchor.end in found:
                continue
            spot, matched = self._extend_back(anchor)
            found[anchor.end] = Occurrence(_cut_before(self.segs, spot), anchor.end, sign, matched)
        return list(found.values())

    def _anchors(self) -> Iterator[_Anchor]:
        if isinstance(self.family, Canonical):
            return self._canonical_anchors(self.family)
        if isinstance(self.family, BitPattern):
            return self._bit_anchors(self.family)
        return self._finite_anchors(self.family)

    # ------------------------------------------------------------------
    # Desen harfleri
    # ------------------------------------------------------------------

    def _expected(self, position: PatternPosition, alphabet: Optional[Alphabet]) -> Letter:
        family = self.family
        if isinstance(family, FinitePattern):
            return family.letters[position]
        if isinstance(family, Canonical):
            return alphabet.designated(position)
        return alphabet.designated(position + 2 * family.bit(position))

    @staticmethod
    def _predecessor(position: PatternPosition) -> Optional[PatternPosition]:
        if isinstance(position, int):
            return position - 1 if position > 0 else None
        return position.pred() if position.is_successor else None

    def _extend_back(self, anchor: _Anchor) -> Tuple[Spot, PatternPosition]:
        """Onceki harfler desenin onceki harflerine esit oldukca bolgeyi genislet."""
        spot, matched = anchor.spot, anchor.matched
        steps = 0
        while True:
            previous_position = self._predecessor(matched)
            if previous_position is None:
                break
            previous = _previous_spot(self.segs, spot)
            if previous is None:
                break
            letter = _letter_at(self.segs[previous[0]], previous[1])
            if letter != self._expected(previous_position, anchor.alphabet):
                break
            spot, matched = previous, previous_position
            steps += 1
            if steps > self.max_steps:
                raise UnsupportedFragment("occurrences", f"{self.max_steps} adimda bolge baslangici bulunamadi")
        return spot, matched

    # ------------------------------------------------------------------
    # Aile bazli desen sonlari
    # ------------------------------------------------------------------

    def _canonical_anchors(self, family: Canonical) -> Iterator[_Anchor]:
        K = Ordinal.atom(family.kappa)
        for i, segment in enumerate(self.segs):
            if isinstance(segment, GenSeq) and not segment.inverted \
                    and segment.default == 0 and segment.start < K <= segment.stop:
                region = max([segment.start] + [f.succ() for f in segment.flips if f < K])
                yield _Anchor(CutPoint((i,), K), (i, region), region, segment.alphabet)
            elif isinstance(segment, RepeatDisjoint) and not segment.inverted \
                    and segment.first_copy == 0 and segment.block.default == 0 \
                    and segment.block_start < K <= segment.block.stop:
                region = max([segment.block_start] + [f.succ() for f in segment.block.flips if f < K])
                yield _Anchor(CutPoint((i, 0), K), (i, region), region, segment.block.alphabet)

    def _bit_anchors(self, family: BitPattern) -> Iterator[_Anchor]:
        lam = family.width
        default = family.desc.default
        for i, segment in enumerate(self.segs):
            if isinstance(segment, RepeatDisjoint) and not segment.inverted and segment.width == lam \
                    and segment.block_start == ZERO and segment.block.desc == family.desc:
                yield self._repeat_anchor(family, i, segment)
            elif family.desc.flips:
                continue
            elif isinstance(segment, GenSeq) and not segment.inverted and segment.default == default \
                    and segment.start.below_repeat_of(lam) and not segment.stop.below_repeat_of(lam):
                region = max([segment.start] + [f.succ() for f in segment.flips if f.below_repeat_of(lam)])
                yield _Anchor(CutPoint((i,), ZERO, repeat_limit=lam), (i, region), region, segment.alphabet)
            elif isinstance(segment, RepeatDisjoint) and not segment.inverted and segment.first_copy == 0 \
                    and lam < segment.width and segment.block.default == default \
                    and segment.block_start.below_repeat_of(lam):
                block = segment.block
                region = max([block.start] + [f.succ() for f in block.flips if f.below_repeat_of(lam)])
                yield _Anchor(CutPoint((i, 0), ZERO, repeat_limit=lam), (i, region), region, block.alphabet)

    def _repeat_anchor(self, family: BitPattern, i: int, segment: RepeatDisjoint) -> _Anchor:
        """Ayni bloklu tekrar; onundeki yarim kopya varsa ona uzanir."""
        end = CutPoint((i,), ZERO, repeat_limit=family.width)
        k = segment.first_copy
        start = segment.chunk_base(k)
        alphabet = segment.block.alphabet
        previous = self.segs[i - 1] if i > 0 else None
        if k > 0 and isinstance(previous, GenSeq) and not previous.inverted \
                and previous.stop == start and previous.alphabet == alphabet \
                and previous.default == family.desc.default:
            base = segment.chunk_base(k - 1)
            lo = max(previous.start, base)
            pattern_flips = family.desc.shifted(base).flips
            mismatches = [p.succ() for p in previous.flips ^ pattern_flips if lo <= p < start]
            region = max([lo] + mismatches)
            return _Anchor(end, (i - 1, region), region, alphabet)
        return _Anchor(end, (i, start), start, alphabet)

    def _finite_anchors(self, family: FinitePattern) -> Iterator[_Anchor]:
        last = family.letters[-1]
        for i, segment in enumerate(self.segs):
            for position, letter in segment_hits(segment, {last.coordinate}):
                if letter == last:
                    spot = (i, position)
                    yield _Anchor(_cut_after(self.segs, spot), spot, len(family) - 1)


# ═══════════════════════════════════════════════════════════════════════════
# PUBLIC API
# ═══════════════════════════════════════════════════════════════════════════

def count_segments(segs: List[Segment], family: PatternFamily) -> OccReport:
    """Indirgenmis parca listesi uzerinde sinif sayimi."""
    plus = _Scanner(segs, family).occurrences(Sign.PLUS)
    minus = [
        Occurrence(_unmirror_cut(segs, occ.end), _unmirror_cut(segs, occ.start), Sign.MINUS, occ.matched_tail)
        for occ in _Scanner(mirror_segments(segs), family).occurrences(Sign.MINUS)
    ]
    logger.debug("Occurrence taramasi", family=str(family), plus=len(plus), minus=len(minus))
    return OccReport(len(plus), len(minus), plus + minus)


def class_count(X: WordTerm, family: PatternFamily) -> OccReport:
    """|Occ⁺/~| ve |Occ⁻/~|, indirgenmis kelime uzerinde."""
    return count_segments(reduced_segments(X), family)


def occurrences(X: WordTerm, family: PatternFamily) -> List[Occurrence]:
    """Sinif basina bir maksimal occurrence."""
    return class_count(X, family).representatives


def phi_eval(X: WordTerm, family: PatternFamily) -> int:
    """φ(X) = |Occ⁺(V)/~| - |Occ⁻(V)/~|, V indirgenmis kelime."""
    return class_count(X, family).phi
