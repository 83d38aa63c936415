"""
Minyatur Ornekler
=================
κ, ω₁ ve λ yerine sonlu boyutlar: desen P = g_0 ... g_{m-1} (M_κ'nin ilk m harfi,
harfler birebir), kelime uzunlugu n. Kelimeler rastgele ama tohumdan tekrar uretilebilir.
"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..alphabet.letters import Alphabet, Letter
from ..config.constants import get_config
from ..ordinals.ordinal import Ordinal
from ..specker.families import FinitePattern
from ..words.restriction import FiniteWord
from ..words.terms import WordTerm, Lit, concat

# Sembolik parametrelerin sonlu karsiliklari
MAPPING_NOTE = "kappa->m (desen uzunlugu), w1/lambda->n (kelime uzunlugu)"

# Rastgele harf elemanlari: secilmis, tersi ve secilmis olmayan bir eleman
ELEMENTS = (1, -1, 2)


@dataclass(frozen=True)
class Miniature:
    """Sonlu kelime + birebir harfli sonlu desen."""
    word: FiniteWord
    pattern: FiniteWord
    seed: int = 0
    mapping: str = MAPPING_NOTE

    def __post_init__(self):
        if self.pattern.is_identity:
            raise ValueError("Minyatur desen bos olamaz")

    def word_term(self) -> WordTerm:
        return concat(*(Lit(letter) for letter in self.word))

    def family(self) -> FinitePattern:
        return FinitePattern(self.pattern.letters)

    @property
    def injective(self) -> bool:
        """Desen harfleri ikiser ikiser farkli mi."""
        return len(set(self.pattern.letters)) == len(self.pattern)


def designated_pattern(m: int, alphabet: Optional[Alphabet] = None) -> FiniteWord:
    """g_0 g_1 ... g_{m-1}."""
    alphabet = alphabet or Alphabet()
    return FiniteWord(tuple(alphabet.designated(Ordinal.nat(c)) for c in range(m)))


def generate_miniature(
    seed: int,
    max_word: Optional[int] = None,
    max_pattern: Optional[int] = None,
    alphabet: Optional[Alphabet] = None
) -> Miniature:
    """
    Tohumdan minyatur uret.

    Desen koordinatlari 0..m-1; kelime harfleri bu koordinatlar ve
    NOISE_COORDINATES kadar desen disi koordinattan secilir, sonra indirgenir.
    """
    settings = get_config().oracle
    max_word = settings.MAX_WORD_LENGTH if max_word is None else max_word
    max_pattern = settings.MAX_PATTERN_LENGTH if max_pattern is None else max_pattern
    alphabet = alphabet or Alphabet()

    rng = np.random.default_rng(seed)
    m = int(rng.integers(1, max_pattern + 1))
    n = int(rng.integers(0, max_word + 1))
    pattern = designated_pattern(m, alphabet)

    letters: List[Letter] = []
    coordinates = rng.integers(0, m + settings.NOISE_COORDINATES, size=n)
    elements = rng.choice(len(ELEMENTS), size=n, p=[0.6, 0.3, 0.1])
    for coordinate, element in zip(coordinates, elements):
        letter = alphabet.letter(Ordinal.nat(int(coordinate)), ELEMENTS[int(element)])
        if letter is not None:
            letters.append(letter)
    return Miniature(FiniteWord.of(letters), pattern, seed)


def repeated_letter_miniature(alphabet: Optional[Alphabet] = None) -> Miniature:
    """P = a b a, X = a b a b a: ortusen ama denk olmayan iki occurrence."""
    alphabet = alphabet or Alphabet()
    a = alphabet.designated(Ordinal.nat(0))
    b = alphabet.designated(Ordinal.nat(1))
    return Miniature(FiniteWord((a, b, a, b, a)), FiniteWord((a, b, a)))
