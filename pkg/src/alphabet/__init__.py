"""Koordinatlar, gruplar ve harfler."""

from .groups import GroupSpec, free_reduce
from .letters import Letter, Alphabet, Region, make_letter, letter_mul, letter_inv

__all__ = [
    'GroupSpec', 'free_reduce',
    'Letter', 'Alphabet', 'Region', 'make_letter', 'letter_mul', 'letter_inv',
]
