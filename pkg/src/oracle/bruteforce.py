"""
Kaba Kuvvet Oracle
==================
Sembolik motordan bagimsiz, sonlu ornekler uzerinde tam tarama:

- finite_reduce_oracle: serbest carpimda klasik yigin indirgemesi
- occ_bruteforce: O(n²) aralik taramasi
- classes_bruteforce: ortak son parca iliskisinin denklik siniflari (union-find)
- star_bruteforce: iki sonlu tekrar kelimesinin ortak soneki var mi
"""

import collections
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Generic, Iterable, List, Optional, Sequence, Tuple, TypeVar

from .miniature import Miniature
from ..config.constants import get_config
from ..alphabet.letters import Alphabet, Letter, letter_inv
from ..ordinals.ordinal import Ordinal
from ..types import Sign
from ..words.restriction import FiniteWord

T = TypeVar("T")


# ═══════════════════════════════════════════════════════════════════════════
# INDIRGEME
# ═══════════════════════════════════════════════════════════════════════════

def finite_reduce_oracle(word: Iterable[Letter]) -> FiniteWord:
    """Harfleri it; ayni koordinatli komsulari carp, birimleri at."""
    stack: List[Letter] = []
    for letter in word:
        if not stack or stack[-1].coordinate != letter.coordinate:
            stack.append(letter)
            continue
        top = stack.pop()
        element = top.group.mul(top.element, letter.element)
        if not top.group.is_identity(element):
            stack.append(Letter(top.coordinate, element, top.group))
    return FiniteWord(tuple(stack))


# ═══════════════════════════════════════════════════════════════════════════
# OCCURRENCE TARAMASI
# ═══════════════════════════════════════════════════════════════════════════

@dataclass(frozen=True)
class BruteOccurrence:
    """[start, stop] kapali aralik; tail desen sonekinin baslangic indeksi."""
    start: int
    stop: int
    sign: Sign
    tail: int

    def overlaps(self, other: 'BruteOccurrence') -> bool:
        return self.start <= other.stop and other.start <= self.stop


def occ_bruteforce(mini: Miniature) -> List[BruteOccurrence]:
    """Desenin bos olmayan bir sonekine (+) veya onun tersine (-) esit tum araliklar."""
    word = mini.word.letters
    pattern = mini.pattern.letters
    m = len(pattern)
    suffixes = {pattern[t:]: t for t in range(m)}
    inverses = {tuple(letter_inv(x) for x in reversed(pattern[t:])): t for t in range(m)}

    found: List[BruteOccurrence] = []
    for start in range(len(word)):
        for stop in range(start, min(len(word), start + m)):
            piece = word[start:stop + 1]
            if piece in suffixes:
                found.append(BruteOccurrence(start, stop, Sign.PLUS, suffixes[piece]))
            if piece in inverses:
                found.append(BruteOccurrence(start, stop, Sign.MINUS, inverses[piece]))
    return found


# ═══════════════════════════════════════════════════════════════════════════
# DENKLIK SINIFLARI
# ═══════════════════════════════════════════════════════════════════════════

class DisjointSet(Generic[T]):
    """Yol sikistirma ve rank ile union-find."""

    def __init__(self):
        self.parent: Dict[T, T] = {}
        self.rank: Dict[T, int] = {}

    def make_set(self, e: T):
        if e in self.parent:
            return
        self.parent[e] = e
        self.rank[e] = 0

    def find(self, e: T) -> T:
        self.make_set(e)
        root = e
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[e] != root:
            self.parent[e], e = root, self.parent[e]
        return root

    def union(self, x: T, y: T):
        x_root, y_root = self.find(x), self.find(y)
        if x_root == y_root:
            return
        if self.rank[x_root] < self.rank[y_root]:
            x_root, y_root = y_root, x_root
        self.parent[y_root] = x_root
        if self.rank[x_root] == self.rank[y_root]:
            self.rank[x_root] += 1

    def sets(self) -> FrozenSet[FrozenSet[T]]:
        groups = collections.defaultdict(set)
        for e in self.parent:
            groups[self.find(e)].add(e)
        return frozenset(frozenset(s) for s in groups.values())


def end_equivalent(a: BruteOccurrence, b: BruteOccurrence) -> bool:
    """
    Ortak son parca: + icin ayni son konum, - icin ayni ilk konum
    (ters desen geriye dogru okunur).
    """
    if a.sign != b.sign:
        return False
    if a.sign is Sign.PLUS:
        return a.stop == b.stop
    return a.start == b.start


def occurrence_classes(occs: Sequence[BruteOccurrence]) -> FrozenSet[FrozenSet[BruteOccurrence]]:
    """Ikili karsilastirma ve union-find ile siniflar."""
    classes: DisjointSet[BruteOccurrence] = DisjointSet()
    for occ in occs:
        classes.make_set(occ)
    for a, b in combinations(occs, 2):
        if end_equivalent(a, b):
            classes.union(a, b)
    return classes.sets()


def classes_bruteforce(occs: Sequence[BruteOccurrence], word: FiniteWord) -> Tuple[int, int]:
    """(+ sinif sayisi, - sinif sayisi)."""
    if any(occ.stop >= len(word) for occ in occs):
        raise ValueError("Occurrence kelimenin disinda")
    counts = collections.Counter(next(iter(group)).sign for group in occurrence_classes(occs))
    return counts[Sign.PLUS], counts[Sign.MINUS]


def disjoint_or_equivalent_violations(
    occs: Sequence[BruteOccurrence]
) -> List[Tuple[BruteOccurrence, BruteOccurrence]]:
    """Ayni isaretli, ortusen ama denk olmayan occurrence ciftleri."""
    return [
        (a, b) for a, b in combinations(occs, 2)
        if a.sign == b.sign and a.overlaps(b) and not end_equivalent(a, b)
    ]


# ═══════════════════════════════════════════════════════════════════════════
# KOSUL (*) MINYATURU
# ═══════════════════════════════════════════════════════════════════════════

def repeat_word(bits: Sequence[int], copies: int, width: int, alphabet: Alphabet) -> Tuple[Letter, ...]:
    """k. kopyada p konumunun harfi h_{width·k + p + 2·bit(p)}."""
    return tuple(
        alphabet.designated(Ordinal.nat(width * k + p + 2 * bit))
        for k in range(copies)
        for p, bit in enumerate(bits)
    )


def star_bruteforce(bits_a: Sequence[int], bits_b: Sequence[int], copies: Optional[int] = None,
                    alphabet: Optional[Alphabet] = None) -> bool:
    """
    Tam kopya iceren ortak sonek yoksa True.
    Kisa bit dizisi 0 ile uzatilir; blok genisligi n + 2 oldugu icin
    kopyalarin koordinatlari ayriktir.
    """
    alphabet = alphabet or Alphabet()
    copies = copies or get_config().oracle.STAR_COPIES
    n = max(len(bits_a), len(bits_b), 1)
    padded_a = list(bits_a) + [0] * (n - len(bits_a))
    padded_b = list(bits_b) + [0] * (n - len(bits_b))
    word_a = repeat_word(padded_a, copies, n + 2, alphabet)
    word_b = repeat_word(padded_b, copies, n + 2, alphabet)
    for length in range(n, len(word_a) + 1):
        if word_a[-length:] == word_b[-length:]:
            return False
    return True
