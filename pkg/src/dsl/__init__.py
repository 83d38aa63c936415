"""
Ifade Dili
==========
Kelime, ordinal, bit tarifi ve desen ailesi metinleri icin tokenizer,
parser ve yazdirici.
"""

from .tokenizer import Token, TokenKind, tokenize
from .parser import (
    Parser,
    parse_expr,
    parse_ordinal,
    parse_bits,
    parse_family,
    parse_coordinates,
    parse_matrix_file,
    repeat_block,
    finite_family,
)
from .printer import print_term, print_segment, print_family

__all__ = [
    'Token', 'TokenKind', 'tokenize',
    'Parser', 'parse_expr', 'parse_ordinal', 'parse_bits', 'parse_family',
    'parse_coordinates', 'parse_matrix_file', 'repeat_block', 'finite_family',
    'print_term', 'print_segment', 'print_family',
]
