"""
Yazdirici
=========
Indirgenmis kelimeyi tekrar parse edilebilen ifade diline cevirir.
Bos kelime `eps` olarak yazilir.
"""

from typing import List

from ..config.constants import get_config
from ..ordinals.cardinals import CardinalAtom, OMEGA_ONE
from ..ordinals.ordinal import Ordinal
from ..specker.families import PatternFamily
from ..words.normal_form import reduced_segments
from ..words.terms import GDescription, GenSeq, Lit, RepeatDisjoint, Segment, WordTerm


def _width_of(stop: Ordinal) -> CardinalAtom:
    """Araligi tasiyan atom; sayilabilir bitiste ω₁."""
    return stop.leading_atom or OMEGA_ONE


def _canonical_range(start: Ordinal, stop: Ordinal, mu: CardinalAtom) -> str:
    if stop.is_atom and start.is_zero:
        return f"Mk({mu})"
    if stop.is_atom:
        return f"seg(Mk({mu}), {start})"
    if stop <= Ordinal.atom(mu):
        return f"seg(Mk({mu}), {start}, {stop})"
    return f"seg(rep_w1(Mk({mu})), {start}, {stop})"


def _bit_range(seq: GenSeq, mu: CardinalAtom) -> List[str]:
    """Her kopya parcasi icin `seg(Mg(yerel bitler, μ), a, b)`."""
    first, _ = seq.start.divmod_atom(mu)
    last, rest = seq.stop.divmod_atom(mu)
    if rest.is_zero:
        last -= 1
    pieces = []
    for k in range(first, last + 1):
        base = Ordinal.atom(mu, k)
        lo = max(seq.start, base)
        hi = min(seq.stop, Ordinal.atom(mu, k + 1))
        local = GDescription(seq.default, frozenset(
            base.minus_left(p) for p in seq.flips if lo <= p < hi
        ))
        pieces.append(f"seg(Mg({local}, {mu}), {lo}, {hi})")
    return pieces


def _print_genseq(seq: GenSeq) -> str:
    if seq.inverted:
        return f"inv({_print_genseq(seq.flipped())})"
    mu = _width_of(seq.stop)
    if seq.default == 0 and not seq.flips:
        return _canonical_range(seq.start, seq.stop, mu)
    return ".".join(_bit_range(seq, mu))


def _print_repeat(rep: RepeatDisjoint) -> str:
    if rep.inverted:
        return f"inv({_print_repeat(rep.flipped())})"
    mu = rep.width
    block = rep.block
    if block.start.is_zero:
        if block.default == 0 and not block.flips:
            text = f"rep_w1(Mk({mu}))"
        else:
            text = f"Mg({block.desc}, {mu})"
    else:
        text = f"rep_w1({_print_genseq(block)})"
    if rep.first_copy:
        return f"seg({text}, {Ordinal.atom(mu, rep.first_copy)})"
    return text


def print_segment(segment: Segment) -> str:
    if isinstance(segment, Lit):
        return str(segment.letter)
    if isinstance(segment, GenSeq):
        return _print_genseq(segment)
    return _print_repeat(segment)


def print_term(t: WordTerm) -> str:
    """Indirgenmis normal form; bos kelime `eps`."""
    segs = reduced_segments(t)
    if not segs:
        return get_config().output.EMPTY_WORD
    return ".".join(print_segment(segment) for segment in segs)


def print_family(family: PatternFamily) -> str:
    return str(family)


__all__ = ['print_term', 'print_segment', 'print_family']
