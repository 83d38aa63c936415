"""
Oracle Calistirici
==================
Sembolik motor ile kaba kuvvet oracle'ini ayni minyaturler uzerinde karsilastirir.
Denemeler bagimsizdir; rapor tohuma gore siralanir.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, List, Optional

from .bruteforce import classes_bruteforce, finite_reduce_oracle, occ_bruteforce
from .miniature import Miniature, generate_miniature
from ..alphabet.groups import GroupSpec
from ..alphabet.letters import Letter
from ..config.constants import get_config
from ..ordinals.ordinal import Ordinal
from ..specker.occurrences import class_count
from ..types import ReportLines, format_value
from ..words.normal_form import reduce_segments
from ..words.terms import Lit
from ..utils.logger import get_tw_logger

logger = get_tw_logger("oracle")

SEED_MODULUS = 2 ** 64


@dataclass(frozen=True)
class TrialResult:
    """Tek minyatur denemesi."""
    seed: int
    n: int
    agree: bool
    symbolic: tuple = ()
    brute: tuple = ()

    def to_line(self) -> str:
        return f"seed={self.seed} n={self.n} agree={format_value(self.agree)}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "n": self.n,
            "agree": self.agree,
            "symbolic": list(self.symbolic),
            "brute": list(self.brute),
        }


@dataclass
class OracleReport:
    """Deneme sonuclari (tohuma gore sirali)."""
    trials: List[TrialResult] = field(default_factory=list)

    def __post_init__(self):
        self.trials = sorted(self.trials, key=lambda trial: trial.seed)

    @property
    def total(self) -> int:
        return len(self.trials)

    @property
    def disagreements(self) -> int:
        return sum(1 for trial in self.trials if not trial.agree)

    def to_lines(self) -> ReportLines:
        lines = [trial.to_line() for trial in self.trials]
        lines.append(f"total={self.total} disagreements={self.disagreements}")
        return lines

    def to_dict(self) -> Dict[str, Any]:
        return {
            "trials": [trial.to_dict() for trial in self.trials],
            "total": self.total,
            "disagreements": self.disagreements,
        }


def compare_miniature(mini: Miniature) -> TrialResult:
    """Sembolik class_count ile kaba kuvvet sinif sayisini karsilastir."""
    brute = classes_bruteforce(occ_bruteforce(mini), mini.word)
    report = class_count(mini.word_term(), mini.family())
    symbolic = (report.plus_classes, report.minus_classes)
    return TrialResult(mini.seed, len(mini.word), symbolic == brute, symbolic, brute)


def run_trial(seed: int, max_word: Optional[int] = None, max_pattern: Optional[int] = None) -> TrialResult:
    return compare_miniature(generate_miniature(seed, max_word, max_pattern))


def run_oracle(
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    max_word: Optional[int] = None,
    max_pattern: Optional[int] = None,
    workers: Optional[int] = None
) -> OracleReport:
    """
    seed, seed+1, ... tohumlariyla `trials` minyatur dene.

    Args:
        trials: Deneme sayisi (varsayilan: config)
        seed: Baslangic tohumu (varsayilan: config)
        max_word: Kelime uzunlugu siniri
        max_pattern: Desen uzunlugu siniri
        workers: Paralel deneme sayisi

    Returns:
        OracleReport
    """
    settings = get_config().oracle
    trials = settings.DEFAULT_TRIALS if trials is None else trials
    seed = settings.DEFAULT_SEED if seed is None else seed
    workers = workers or settings.WORKERS
    seeds = [(seed + i) % SEED_MODULUS for i in range(trials)]

    with logger.timer("oracle"):
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(lambda s: run_trial(s, max_word, max_pattern), seeds))
        else:
            results = [run_trial(s, max_word, max_pattern) for s in seeds]

    report = OracleReport(results)
    if report.disagreements:
        logger.warning("Oracle uyusmazligi", disagreements=report.disagreements, total=report.total)
    return report


# ═══════════════════════════════════════════════════════════════════════════
# TAM TARAMA (INDIRGEME)
# ═══════════════════════════════════════════════════════════════════════════

@dataclass
class ReduceReport:
    """Tum kisa kelimelerde words.reduce ve yigin oracle'i karsilastirmasi."""
    total: int = 0
    disagreements: int = 0
    first_counterexample: Optional[List[Letter]] = None

    def to_lines(self) -> ReportLines:
        return [f"total={self.total} disagreements={self.disagreements}"]

    def to_dict(self) -> Dict[str, Any]:
        return {"total": self.total, "disagreements": self.disagreements}


def exhaustive_reduce_check(
    length: Optional[int] = None,
    groups: Optional[int] = None,
    order: Optional[int] = None
) -> ReduceReport:
    """
    `groups` adet Z/order grubu uzerindeki uzunlugu <= `length` olan tum kelimeler.
    Sembolik taraf dogrulama yapmadan reduce_segments kullanir.
    """
    settings = get_config().oracle
    length = settings.EXHAUSTIVE_LENGTH if length is None else length
    groups = settings.EXHAUSTIVE_GROUPS if groups is None else groups
    order = settings.EXHAUSTIVE_ORDER if order is None else order

    group = GroupSpec.cyclic(order)
    letters = [
        Letter(Ordinal.nat(c), element, group)
        for c in range(groups) for element in range(1, order)
    ]
    report = ReduceReport()
    with logger.timer("exhaustive_reduce"):
        for size in range(length + 1):
            for word in product(letters, repeat=size):
                expected = finite_reduce_oracle(word).letters
                actual = tuple(seg.letter for seg in reduce_segments([Lit(x) for x in word]))
                report.total += 1
                if actual != expected:
                    report.disagreements += 1
                    if report.first_counterexample is None:
                        report.first_counterexample = list(word)
    return report
