"""
Kanonik Indirgenmis Form
========================
Terimi atomik parcalara (Lit, GenSeq, RepeatDisjoint) acar ve yigin tabanli
bir dikis motoru ile indirger.

Dikiste iki tur etkilesim vardir:
- iptal (Cancellation): sol parcanin sonu, sag parcanin basinin tersi
- birlesme: ayni koordinatli harflerin carpimi, Lit emilimi, ardisik GenSeq'ler,
  tam kopya emilimi (GenSeq + RepeatDisjoint)

Limit tipli bir GenSeq'in son harfi yoktur; artan GenSeq ile ters GenSeq ancak
ortak bitis noktasinda ortak kuyruklarini iptal eder. Ters GenSeq ile artan GenSeq
arasindaki zincir ω-bloklar halinde sembolik ilerler; karar verilemeyen uzun
zincirler UnsupportedCancellation firlatir.
"""

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Deque, List, Optional, Tuple

from .terms import (
    WordTerm, Empty, Lit, Concat, Inv, GenSeq, RepeatDisjoint, RepeatLiteral, Segment,
    GDescription, BitGen, make_fun, coordinate_of, genseq_pieces, from_segments, concat, invert_segment,
)
from .validation import validate_word
from ..alphabet.letters import Letter, letter_inv, letter_mul
from ..config.constants import get_config
from ..ordinals.cardinals import CardinalAtom
from ..ordinals.ordinal import Ordinal, OMEGA
from ..ordinals.order import OrderTerm, FiniteOrder, Interval, Sum, RepeatOmegaOne, Reverse, cofinality
from ..utils.exceptions import NotAWord, UnsupportedCancellation
from ..utils.logger import get_tw_logger

logger = get_tw_logger("normal_form")


# ═══════════════════════════════════════════════════════════════════════════
# DUZLESTIRME
# ═══════════════════════════════════════════════════════════════════════════

def segments(t: WordTerm) -> List[Segment]:
    """Inv yapraklara itilmis, GenSeq'leri kanonik atomik parca listesi."""
    out: List[Segment] = []
    stack: List[Tuple[WordTerm, bool]] = [(t, False)]
    while stack:
        term, inverted = stack.pop()
        if isinstance(term, Empty):
            continue
        if isinstance(term, Lit):
            out.append(term.inverted() if inverted else term)
        elif isinstance(term, Concat):
            parts = list(reversed(term.parts)) if inverted else list(term.parts)
            stack.extend((part, inverted) for part in reversed(parts))
        elif isinstance(term, Inv):
            stack.append((term.inner, not inverted))
        elif isinstance(term, GenSeq):
            out.extend(genseq_pieces(term.start, term.stop, term.desc, term.alphabet,
                                     term.inverted != inverted))
        elif isinstance(term, RepeatDisjoint):
            out.append(_canonical_repeat(term, inverted))
        elif isinstance(term, RepeatLiteral):
            raise NotAWord(["FINITE_PREIMAGE: koordinatlar kaydirilmadan ω₁ kez tekrar ediliyor"])
        else:
            raise TypeError(f"Bilinmeyen terim: {term!r}")
    return out


def _canonical_repeat(rep: RepeatDisjoint, inverted: bool) -> RepeatDisjoint:
    block = rep.block
    canonical = GenSeq(
        Interval(block.stop, block.start), make_fun(block.desc.within(block.start, block.stop)),
        block.alphabet,
    )
    return RepeatDisjoint(canonical, rep.first_copy, rep.inverted != inverted)


# ═══════════════════════════════════════════════════════════════════════════
# DIKIS HARFLERI
# ═══════════════════════════════════════════════════════════════════════════

def first_letter(segment: Segment) -> Optional[Letter]:
    """Okuma sirasinda ilk harf; ters GenSeq/tekrarin ilk harfi yoktur."""
    if isinstance(segment, Lit):
        return segment.letter
    if segment.inverted:
        return None
    if isinstance(segment, GenSeq):
        return segment.letter(segment.start)
    copy = segment.copy(segment.first_copy)
    return copy.letter(copy.start)


def last_letter(segment: Segment) -> Optional[Letter]:
    """Okuma sirasinda son harf; artan GenSeq/tekrarin son harfi yoktur."""
    if isinstance(segment, Lit):
        return segment.letter
    if not segment.inverted:
        return None
    if isinstance(segment, GenSeq):
        return segment.letter(segment.start)
    copy = segment.copy(segment.first_copy)
    return letter_inv(copy.letter(copy.start))


def split_first_copy(rep: RepeatDisjoint) -> List[Segment]:
    """Ilk kopyayi ayir: artan icin [kopya, kalan], ters icin [kalan, ters kopya]."""
    k = rep.first_copy
    if rep.inverted:
        return [rep.from_copy(k + 1), rep.copy(k).flipped()]
    return [rep.copy(k), rep.from_copy(k + 1)]


def _is_gen(segment: Segment, inverted: bool) -> bool:
    return isinstance(segment, GenSeq) and segment.inverted == inverted


def _is_rep(segment: Segment, inverted: bool) -> bool:
    return isinstance(segment, RepeatDisjoint) and segment.inverted == inverted


# ═══════════════════════════════════════════════════════════════════════════
# IPTAL
# ═══════════════════════════════════════════════════════════════════════════

@dataclass
class Cancellation:
    """a = left · middle ve b = middle⁻¹ · right."""
    left: List[Segment]
    middle: List[Segment]
    right: List[Segment]


def cancel_pair(a: Segment, b: Segment) -> Optional[Cancellation]:
    """a·b dikisinde en az bir harf iptal oluyorsa ayrisim, yoksa None."""
    if _is_gen(a, False) and _is_gen(b, True):
        return _cancel_common_tail(a, b)
    if _is_rep(a, False) and _is_rep(b, True):
        return _cancel_repeat_tails(a, b)

    last, first = last_letter(a), first_letter(b)
    if last is None or first is None or last.coordinate != first.coordinate:
        return None

    if isinstance(a, RepeatDisjoint) and isinstance(b, RepeatDisjoint) \
            and a.block == b.block and a.first_copy == b.first_copy:
        return Cancellation([], [a], [])
    if isinstance(a, RepeatDisjoint):
        head = split_first_copy(a)
        inner = cancel_pair(head[-1], b)
        return None if inner is None else Cancellation(head[:-1] + inner.left, inner.middle, inner.right)
    if isinstance(b, RepeatDisjoint):
        head = split_first_copy(b)
        inner = cancel_pair(a, head[0])
        return None if inner is None else Cancellation(inner.left, inner.middle, inner.right + head[1:])

    if isinstance(a, GenSeq) and isinstance(b, GenSeq) and a.alphabet == b.alphabet:
        return _cancel_seam(a, b)
    if letter_mul(last, first) is not None:
        return None
    return Cancellation(_drop_last(a), [Lit(last)], _drop_first(b))


def _drop_first(segment: Segment) -> List[Segment]:
    if isinstance(segment, Lit):
        return []
    return segment.restrict(segment.start.succ(), segment.stop)


def _drop_last(segment: Segment) -> List[Segment]:
    # ters GenSeq'in son harfi en kucuk konumdadir
    if isinstance(segment, Lit):
        return []
    return segment.restrict(segment.start.succ(), segment.stop)


def _cancel_common_tail(a: GenSeq, b: GenSeq) -> Optional[Cancellation]:
    """[s1, e) · [s2, e)⁻¹: bitlerin uyustugu ortak kuyruk silinir."""
    if a.stop != b.stop or a.alphabet != b.alphabet:
        return None
    if a.default != b.default:
        return _cancel_shifted_tail(a, b)
    lo = max(a.start, b.start)
    disagreements = [p.succ() for p in a.flips ^ b.flips if lo <= p < a.stop]
    m = max([lo] + disagreements)
    return Cancellation(a.restrict(a.start, m), a.restrict(m, a.stop), b.restrict(b.start, m))


def _cancel_shifted_tail(a: GenSeq, b: GenSeq) -> Optional[Cancellation]:
    """
    Varsayilanlari farkli kuyruklar yalnizca son ω-blokta eslesir:
    a'nin blok + n konumu b'nin blok + n + 2·(d_a - d_b) konumuyla ayni koordinattadir.
    """
    block = last_block(a.stop)
    if block is None:
        return None
    shift = 2 * (a.default - b.default)
    bounds = [0, -shift, _offset_in(a.start, block), _offset_in(b.start, block) - shift]
    bounds += [_offset_in(p, block) + 1 for p in a.flips if p >= block]
    bounds += [_offset_in(p, block) + 1 - shift for p in b.flips if p >= block]
    n = max(bounds)
    cut_a, cut_b = block + n, block + (n + shift)
    return Cancellation(a.restrict(a.start, cut_a), a.restrict(cut_a, a.stop), b.restrict(b.start, cut_b))


def last_block(stop: Ordinal) -> Optional[Ordinal]:
    """stop = blok + ω ise blok, degilse None."""
    if not stop.terms:
        return None
    exponent, coefficient = stop.terms[-1]
    if isinstance(exponent, CardinalAtom) or exponent != 1:
        return None
    rest = ((1, coefficient - 1),) if coefficient > 1 else ()
    return Ordinal(stop.terms[:-1] + rest)


def _offset_in(position: Ordinal, block: Ordinal) -> int:
    return position.split_finite()[1] if position >= block else 0


def _cancel_repeat_tails(a: RepeatDisjoint, b: RepeatDisjoint) -> Optional[Cancellation]:
    """Ayni bloklu artan ve ters tekrar: K = max(k1, k2) kopyasindan itibaren silinir."""
    if a.block != b.block:
        return None
    top = max(a.first_copy, b.first_copy)
    left = [a.copy(k) for k in range(a.first_copy, top)]
    right = [a.copy(k).flipped() for k in reversed(range(b.first_copy, top))]
    return Cancellation(left, [a.from_copy(top)], right)


def _cancel_seam(a: GenSeq, b: GenSeq) -> Optional[Cancellation]:
    """Ters [s1, e1) ile artan [s2, e2): eslesen harf ciftleri basladiktan sonra."""
    pos1, pos2 = seam_positions(a, b)
    if pos1 == a.start:
        return None
    return Cancellation(a.restrict(pos1, a.stop), a.restrict(a.start, pos1), b.restrict(pos2, b.stop))


def seam_positions(a: GenSeq, b: GenSeq) -> Tuple[Ordinal, Ordinal]:
    """
    a (ters) sonundan, b (artan) basindan iptal edilen harfler.
    Donus: a'nin ve b'nin kalan ilk konumlari.
    """
    pos1, pos2 = a.start, b.start
    max_steps = get_config().reduction.MAX_SEAM_STEPS
    steps = 0
    while pos1 < a.stop and pos2 < b.stop:
        if a.coordinate(pos1) != b.coordinate(pos2):
            break
        if pos1 == pos2 and a.default == b.default:
            ahead = [p for p in a.flips ^ b.flips if p >= pos1]
            pos1 = pos2 = min(ahead + [a.stop, b.stop])
            continue
        limit1, n1 = pos1.split_finite()
        limit2, n2 = pos2.split_finite()
        block_end = limit1 + OMEGA
        aligned = limit1 == limit2 and n1 + 2 * a.default == n2 + 2 * b.default
        if aligned and not _flips_between(a, pos1, block_end) and not _flips_between(b, pos2, block_end):
            pos1 = pos2 = block_end
            continue
        pos1, pos2 = pos1.succ(), pos2.succ()
        steps += 1
        if steps > max_steps:
            raise UnsupportedCancellation(f"{max_steps} adimda karar verilemedi ({a.start}, {b.start})")
    return pos1, pos2


def _flips_between(seq: GenSeq, lo: Ordinal, hi: Ordinal) -> bool:
    return any(lo <= p < hi for p in seq.flips)


# ═══════════════════════════════════════════════════════════════════════════
# BIRLESME
# ═══════════════════════════════════════════════════════════════════════════

def _with_bit(desc: GDescription, position: Ordinal, bit: int) -> GDescription:
    if bit == desc.default:
        return desc
    return GDescription(desc.default, desc.flips | {position})


def merge_pair(a: Segment, b: Segment) -> Optional[List[Segment]]:
    """Iptalsiz birlesme; degisiklik yoksa None."""
    last, first = last_letter(a), first_letter(b)
    if last is not None and first is not None and last.coordinate == first.coordinate:
        # ayrilan kopya b ile hemen birlesir; yigina tam kopya olarak donmez
        if isinstance(a, RepeatDisjoint):
            head = split_first_copy(a)
            return head[:-1] + merge_pair(head[-1], b)
        if isinstance(b, RepeatDisjoint):
            head = split_first_copy(b)
            return merge_pair(a, head[0]) + head[1:]
        merged = letter_mul(last, first)
        middle = [Lit(merged)] if merged is not None else []
        return _drop_last(a) + middle + _drop_first(b)

    if isinstance(a, Lit) and _is_gen(b, False):
        return _absorb_before(a, b)
    if _is_gen(a, True) and isinstance(b, Lit):
        return _absorb_after(a, b)
    if _is_gen(a, False) and _is_gen(b, False):
        return _join(a, b)
    if _is_gen(a, True) and _is_gen(b, True):
        joined = _join(b.flipped(), a.flipped())
        return None if joined is None else [joined[0].flipped()]
    if _is_gen(a, False) and _is_rep(b, False):
        return _absorb_copy(a, b)
    if _is_rep(a, True) and _is_gen(b, True):
        absorbed = _absorb_copy(b.flipped(), a.flipped())
        if absorbed is None:
            return None
        return [invert_segment(piece) for piece in reversed(absorbed)]
    return None


def _absorb_before(lit: Lit, seq: GenSeq) -> Optional[List[Segment]]:
    """g[s-1] veya g[s+1] harfi [s, e) dizisinin basina katilir."""
    if not seq.start.is_successor:
        return None
    position = seq.start.pred()
    for bit in (0, 1):
        if lit.letter == seq.alphabet.designated(coordinate_of(position, bit)):
            desc = _with_bit(seq.desc, position, bit)
            return [GenSeq(Interval(seq.stop, position), make_fun(desc), seq.alphabet)]
    return None


def _absorb_after(seq: GenSeq, lit: Lit) -> Optional[List[Segment]]:
    absorbed = _absorb_before(lit.inverted(), seq.flipped())
    return None if absorbed is None else [absorbed[0].flipped()]


def _join(a: GenSeq, b: GenSeq) -> Optional[List[Segment]]:
    """
    [s, m) · [m, e) ayni varsayilan bitle tek dizi.
    Tek blokluk bitleri 0 olan parca, bitleri 1 olan esdegeriyle de denenir.
    """
    if a.alphabet != b.alphabet:
        return None
    for left, right in product((a, _high_form(a)), (b, _high_form(b))):
        if left.stop == right.start and left.default == right.default:
            desc = GDescription(left.default, left.flips | right.flips)
            return [GenSeq(Interval(right.stop, left.start), make_fun(desc), a.alphabet)]
    return None


def _high_form(seq: GenSeq) -> GenSeq:
    """[β + 2, β + ω) bitleri 0 ise ayni harfleri yazan [β, β + ω) bitleri 1 dizisi."""
    block, offset = seq.start.split_finite()
    if seq.default == 0 and not seq.flips and offset >= 2 and seq.stop == block + OMEGA:
        return GenSeq(Interval(seq.stop, block + (offset - 2)), BitGen(GDescription(1)), seq.alphabet)
    return seq


def _absorb_copy(seq: GenSeq, rep: RepeatDisjoint) -> Optional[List[Segment]]:
    """(k-1). kopyayi tam kapsayan GenSeq tekrarin icine katilir."""
    k = rep.first_copy
    if k == 0:
        return None
    copy = rep.copy(k - 1)
    if seq.stop != copy.stop or not seq.start <= copy.start or seq.alphabet != copy.alphabet:
        return None
    if seq.desc.within(copy.start, copy.stop) != copy.desc:
        return None
    return seq.restrict(seq.start, copy.start) + [rep.from_copy(k - 1)]


# ═══════════════════════════════════════════════════════════════════════════
# INDIRGEME
# ═══════════════════════════════════════════════════════════════════════════

def _combine(top: Segment, segment: Segment) -> Optional[List[Segment]]:
    cut = cancel_pair(top, segment)
    if cut is not None:
        return cut.left + cut.right
    return merge_pair(top, segment)


def reduce_segments(items: List[Segment]) -> List[Segment]:
    """Yigin tabanli indirgeme; yerine konan parcalar bekleyen kuyrugun basina doner."""
    pending: Deque[Segment] = deque(items)
    stack: List[Segment] = []
    while pending:
        segment = pending.popleft()
        if isinstance(segment, GenSeq):
            pieces = segment.restrict(segment.start, segment.stop)
            if pieces != [segment]:
                pending.extendleft(reversed(pieces))
                continue
        if not stack:
            stack.append(segment)
            continue
        replacement = _combine(stack[-1], segment)
        if replacement is None:
            stack.append(segment)
        else:
            stack.pop()
            pending.extendleft(reversed(replacement))
    return stack


def _checked(t: WordTerm) -> None:
    report = validate_word(t)
    if not report.valid:
        raise NotAWord(report.summary())


def reduced_segments(t: WordTerm) -> List[Segment]:
    _checked(t)
    result = reduce_segments(segments(t))
    logger.debug("Indirgendi", segments=len(result))
    return result


def reduce(t: WordTerm) -> WordTerm:
    """Kanonik indirgenmis form: Empty, tek parca veya Concat."""
    return from_segments(reduced_segments(t))


def is_reduced(t: WordTerm) -> bool:
    return segments(t) == reduced_segments(t)


def word_iso(a: WordTerm, b: WordTerm) -> bool:
    """
    Kanonik formlar parca parca ayni mi; degilse a·b⁻¹ bos kelimeye indirgeniyor mu.
    Ikinci yol, ayni harf dizisinin farkli hizalanmis GenSeq yazimlarini yakalar.
    """
    left, right = reduced_segments(a), reduced_segments(b)
    if left == right:
        return True
    return not reduce_segments(left + [invert_segment(s) for s in reversed(right)])


def inverse(t: WordTerm) -> WordTerm:
    return Inv(t)


# ═══════════════════════════════════════════════════════════════════════════
# YARI-INDIRGENMIS AYRISIM
# ═══════════════════════════════════════════════════════════════════════════

def quasi_decompose(x: WordTerm, y: WordTerm) -> Tuple[WordTerm, WordTerm, WordTerm]:
    """
    x ≅ x1·m, y ≅ m⁻¹·y1 ve x1·y1 dikiste sadece birlesme yapar.
    Iptal zinciri ilk birlesmede veya etkilesimsiz dikiste durur.
    """
    left = reduced_segments(x)
    right = reduced_segments(y)
    middle: List[Segment] = []
    while left and right:
        cut = cancel_pair(left[-1], right[0])
        if cut is None:
            break
        left[-1:] = cut.left
        right[0:1] = cut.right
        middle[0:0] = cut.middle
    return from_segments(left), from_segments(middle), from_segments(right)


# ═══════════════════════════════════════════════════════════════════════════
# TANIM KUMESI
# ═══════════════════════════════════════════════════════════════════════════

def _segment_order(segment: Segment) -> OrderTerm:
    if isinstance(segment, Lit):
        return FiniteOrder(1)
    if isinstance(segment, GenSeq):
        order: OrderTerm = segment.order
    else:
        order = RepeatOmegaOne(Interval(segment.block.stop, segment.block.start))
    return Reverse.of(order) if segment.inverted else order


def word_order(t: WordTerm) -> OrderTerm:
    """Indirgenmis kelimenin tanim kumesi (W̄) sira terimi olarak."""
    order: OrderTerm = FiniteOrder(0)
    for segment in reduced_segments(t):
        order = Sum(order, _segment_order(segment))
    return order


def word_cofinality(t: WordTerm) -> Ordinal:
    return cofinality(word_order(t))


__all__ = [
    'segments', 'reduce', 'reduced_segments', 'reduce_segments', 'is_reduced', 'word_iso',
    'inverse', 'concat', 'quasi_decompose', 'word_order', 'word_cofinality',
    'cancel_pair', 'merge_pair', 'Cancellation', 'first_letter', 'last_letter',
    'split_first_copy', 'seam_positions',
]
