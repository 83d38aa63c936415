"""Transfinit kelime terim cebiri."""

from .terms import (
    WordTerm, Empty, EMPTY, Lit, Concat, Inv, GenSeq, RepeatDisjoint, RepeatLiteral,
    GDescription, CanonicalGen, BitGen, LetterFun, make_fun, concat, genseq_pieces,
)
from .validation import validate_word, ValidationReport, Violation
from .normal_form import (
    segments, reduce, reduced_segments, is_reduced, word_iso, inverse,
    quasi_decompose, word_order, word_cofinality,
)
from .restriction import FiniteWord, restrict_finite, project, equiv_on
from .cuts import CutPoint, cut_at_offset, tail, head, tail_at, slice_word

__all__ = [
    'WordTerm', 'Empty', 'EMPTY', 'Lit', 'Concat', 'Inv', 'GenSeq', 'RepeatDisjoint', 'RepeatLiteral',
    'GDescription', 'CanonicalGen', 'BitGen', 'LetterFun', 'make_fun', 'concat', 'genseq_pieces',
    'validate_word', 'ValidationReport', 'Violation',
    'segments', 'reduce', 'reduced_segments', 'is_reduced', 'word_iso', 'inverse',
    'quasi_decompose', 'word_order', 'word_cofinality',
    'FiniteWord', 'restrict_finite', 'project', 'equiv_on',
    'CutPoint', 'cut_at_offset', 'tail', 'head', 'tail_at', 'slice_word',
]
