"""
Homomorfizmalar
===============
φ_α = Σ_{g ∈ I_α} φ_g, kosul (*) kontrolu, φ matrisi ve Specker tanigi.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from .families import PatternFamily, Canonical, BitPattern, build_M_kappa
from .occurrences import count_segments, phi_eval
from ..alphabet.letters import Alphabet
from ..config.constants import get_config
from ..ordinals.cardinals import CardinalAtom
from ..ordinals.ordinal import Ordinal, ZERO
from ..types import ReportLines
from ..words.cuts import tail_at
from ..words.normal_form import reduced_segments
from ..words.restriction import FiniteWord, restrict_finite
from ..words.terms import WordTerm, Inv, concat
from ..utils.exceptions import StarConditionViolated
from ..utils.logger import get_tw_logger, log_function_call

logger = get_tw_logger("homomorphisms")


# ═══════════════════════════════════════════════════════════════════════════
# KOSUL (*)
# ═══════════════════════════════════════════════════════════════════════════

def _descriptor(family: PatternFamily) -> Tuple[Hashable, ...]:
    """Iki ailenin ortak kuyrugu var <=> descriptor'lar esit."""
    if isinstance(family, Canonical):
        return ("canonical", family.kappa)
    if isinstance(family, BitPattern):
        return ("bits", family.width, family.chunked, family.desc)
    # sonlu desenler son harfte ortak bir sonek paylasir
    return ("finite", family.letters[-1])


def star_check(a: PatternFamily, b: PatternFamily) -> bool:
    """a'nin hicbir kuyrugu b'nin bir kuyruguna izomorf degil."""
    return _descriptor(a) != _descriptor(b)


def almost_disjoint(a: Iterable[Hashable], b: Iterable[Hashable]) -> bool:
    """Sonlu kumeler icin |a ∩ b| < min(|a|, |b|)."""
    left, right = set(a), set(b)
    return len(left & right) < min(len(left), len(right))


@dataclass(frozen=True)
class SpeckerHom:
    """I_α indeks kumesi; elemanlar ikiser ikiser (*) kosulunu saglar."""
    index_set: Tuple[PatternFamily, ...]

    def __post_init__(self):
        object.__setattr__(self, "index_set", tuple(self.index_set))
        for a, b in combinations(self.index_set, 2):
            if not star_check(a, b):
                raise StarConditionViolated(str(a), str(b))

    def __call__(self, X: WordTerm) -> int:
        return phi_alpha(self, X)

    def __len__(self) -> int:
        return len(self.index_set)


def phi_alpha(hom: SpeckerHom, X: WordTerm) -> int:
    """φ_α(X): indeks kumesindeki ailelerin φ toplami."""
    segs = reduced_segments(X)
    return sum(count_segments(segs, family).phi for family in hom.index_set)


# ═══════════════════════════════════════════════════════════════════════════
# MATRIS
# ═══════════════════════════════════════════════════════════════════════════

def matrix_columns(homs: Sequence[SpeckerHom]) -> List[PatternFamily]:
    """Tum indeks kumelerindeki aileler, ilk gorulme sirasinda."""
    columns: List[PatternFamily] = []
    for hom in homs:
        for family in hom.index_set:
            if family not in columns:
                columns.append(family)
    return columns


@log_function_call("homomorphisms")
def hom_matrix(
    homs: Sequence[SpeckerHom],
    columns: Optional[Sequence[PatternFamily]] = None,
    alphabet: Optional[Alphabet] = None,
    workers: Optional[int] = None
) -> np.ndarray:
    """
    (α, g) hucresi φ_α(M_g).

    Args:
        homs: Satirlar (dogrulanmis indeks kumeleri)
        columns: Test aileleri (varsayilan: matrix_columns(homs))
        alphabet: Aile kelimelerinin alfabesi
        workers: Paralel hucre sayisi (varsayilan: config)

    Returns:
        len(homs) x len(columns) tamsayi matrisi
    """
    columns = list(columns) if columns is not None else matrix_columns(homs)
    workers = workers or get_config().oracle.WORKERS
    words = [reduced_segments(family.word(alphabet)) for family in columns]

    def cell(index: Tuple[int, int]) -> int:
        row, column = index
        return sum(count_segments(words[column], family).phi for family in homs[row].index_set)

    cells = [(row, column) for row in range(len(homs)) for column in range(len(columns))]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(cell, cells))
    else:
        values = [cell(index) for index in cells]

    matrix = np.zeros((len(homs), len(columns)), dtype=np.int64)
    for (row, column), value in zip(cells, values):
        matrix[row, column] = value
    logger.debug("phi matrisi", rows=len(homs), columns=len(columns), workers=workers)
    return matrix


# ═══════════════════════════════════════════════════════════════════════════
# HOMOMORFIZMA KONTROLLERI
# ═══════════════════════════════════════════════════════════════════════════

def phi_additivity(X: WordTerm, Y: WordTerm, family: PatternFamily) -> Tuple[int, int, int]:
    """(φ(XY), φ(X), φ(Y))."""
    return phi_eval(concat(X, Y), family), phi_eval(X, family), phi_eval(Y, family)


def phi_inverse_law(X: WordTerm, family: PatternFamily) -> Tuple[int, int]:
    """(φ(X⁻¹), φ(X))."""
    return phi_eval(Inv(X), family), phi_eval(X, family)


# ═══════════════════════════════════════════════════════════════════════════
# SPECKER TANIGI
# ═══════════════════════════════════════════════════════════════════════════

@dataclass
class WitnessReport:
    """W = M_{κ,β}: ρ_F(W) birim ama φ_κ(W) = 1."""
    beta: Ordinal
    word: WordTerm
    restriction: FiniteWord
    phi: int

    @property
    def ok(self) -> bool:
        return self.restriction.is_identity and self.phi == 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "beta": str(self.beta),
            "restriction": str(self.restriction),
            "phi": self.phi,
            "ok": self.ok,
        }

    def to_lines(self) -> ReportLines:
        return [f"beta={self.beta} restriction={self.restriction} phi={self.phi}"]


def specker_witness(
    F: Iterable[Union[Ordinal, int]],
    kappa: CardinalAtom,
    alphabet: Optional[Alphabet] = None
) -> WitnessReport:
    """β = max(F ∩ [0, κ)) + 1 (F bos ise 0) icin M_{κ,β}."""
    coordinates = {Ordinal.coerce(f) for f in F}
    bound = Ordinal.atom(kappa)
    below = [f for f in coordinates if f < bound]
    beta = max(below).succ() if below else ZERO
    word = tail_at(build_M_kappa(kappa, alphabet), beta)
    report = WitnessReport(beta, word, restrict_finite(word, coordinates), phi_eval(word, Canonical(kappa)))
    logger.debug("Specker tanigi", beta=str(beta), ok=report.ok)
    return report
