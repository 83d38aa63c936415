"""
Kelime Dogrulama
================
Bir terimin gercekten kelime olup olmadigini kontrol eder:

1. Sonlu on-goruntu: her koordinat sonlu kez kullanilir
   (GenSeq ve kopyalari ayrik RepeatDisjoint her koordinata en fazla 2 kez,
   RepeatLiteral ise ω₁ kez dokunur).
2. Komsuluk guvenligi: GenSeq icinde p ve p+1 konumlarinin koordinatlari farkli.
3. Tekrar blogu: artan GenSeq, sayilamaz bir atomda biter.
4. Opsiyonel indeks siniri (alfabe veya parametre ile).

Rapor tarzidir, hata firlatmaz.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .terms import (
    WordTerm, Empty, Lit, Concat, Inv, GenSeq, RepeatDisjoint, RepeatLiteral,
    BitGen, CanonicalGen, coordinate_of,
)
from ..ordinals.ordinal import Ordinal
from ..types import ReportLines, format_value
from ..utils.logger import get_tw_logger

logger = get_tw_logger("validation")


# Ihlal kodlari
FINITE_PREIMAGE = "FINITE_PREIMAGE"
ADJACENCY = "ADJACENCY"
INVALID_REPEAT_BLOCK = "INVALID_REPEAT_BLOCK"
COORDINATE_OUT_OF_RANGE = "COORDINATE_OUT_OF_RANGE"
UNKNOWN_LETTER_FUN = "UNKNOWN_LETTER_FUN"


@dataclass
class Violation:
    """Tek bir ihlal ve tanik koordinati."""
    code: str
    message: str
    witness: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code, "message": self.message, "witness": self.witness}


@dataclass
class ValidationReport:
    """validate_word sonucu."""
    valid: bool = True
    violations: List[Violation] = field(default_factory=list)
    sigma: bool = True

    def add(self, code: str, message: str, witness: str = "") -> None:
        self.violations.append(Violation(code, message, witness))
        self.valid = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "valid": self.valid,
            "sigma": self.sigma,
            "violations": [v.to_dict() for v in self.violations],
        }

    def to_lines(self) -> ReportLines:
        lines = [f"valid={format_value(self.valid)} sigma={format_value(self.sigma)}"]
        for violation in self.violations:
            lines.append(f"violation={violation.code} witness={violation.witness or '-'}")
        return lines

    def summary(self) -> List[str]:
        return [f"{v.code}: {v.message}" + (f" (witness {v.witness})" if v.witness else "")
                for v in self.violations]


def validate_word(t: WordTerm, index_bound: Optional[Ordinal] = None) -> ValidationReport:
    """Terim bir kelime mi? Her ihlal tanik ile raporlanir."""
    report = ValidationReport()
    _Validator(report, index_bound).visit(t)
    if not report.valid:
        logger.debug("Gecersiz terim", violations=len(report.violations))
    return report


class _Validator:
    """Terim agacini dolasan yardimci."""

    def __init__(self, report: ValidationReport, index_bound: Optional[Ordinal]):
        self.report = report
        self.index_bound = index_bound

    def _bound_for(self, seq: GenSeq) -> Optional[Ordinal]:
        return self.index_bound if self.index_bound is not None else seq.alphabet.index_bound

    def visit(self, t: WordTerm) -> None:
        if isinstance(t, Empty):
            return
        if isinstance(t, Lit):
            if self.index_bound is not None and not t.coordinate < self.index_bound:
                self._out_of_range(t.coordinate)
        elif isinstance(t, Concat):
            for part in t.parts:
                self.visit(part)
        elif isinstance(t, Inv):
            self.visit(t.inner)
        elif isinstance(t, GenSeq):
            self._genseq(t)
        elif isinstance(t, RepeatDisjoint):
            self._repeat(t)
        elif isinstance(t, RepeatLiteral):
            self._literal_repeat(t)
        else:
            raise TypeError(f"Bilinmeyen terim: {t!r}")

    def _out_of_range(self, coordinate: Ordinal) -> None:
        self.report.add(
            COORDINATE_OUT_OF_RANGE, "koordinat indeks kumesinin disinda", f"coordinate {coordinate}"
        )

    def _adjacency(self, seq: GenSeq) -> None:
        """p ve p+1 icin dort bit durumu: {p, p+2} ile {p+1, p+3} ayrik."""
        if not isinstance(seq.fun, (CanonicalGen, BitGen)):
            self.report.add(UNKNOWN_LETTER_FUN, f"harf fonksiyonu {seq.fun!r}", f"coordinate {seq.start}")
            return
        p = seq.start
        for a in (0, 1):
            for b in (0, 1):
                if coordinate_of(p, a) == coordinate_of(p.succ(), b):
                    self.report.add(ADJACENCY, "komsu konumlar ayni grupta", f"coordinate {p}")
                    return

    def _genseq(self, seq: GenSeq) -> None:
        self._adjacency(seq)
        if not seq.order.length.is_countable():
            self.report.sigma = False
        bound = self._bound_for(seq)
        if bound is None:
            return
        limit_part, finite = seq.stop.split_finite()
        if not limit_part <= bound:
            self._out_of_range(bound if seq.start <= bound else seq.coordinate(seq.start))
            return
        for n in range(finite):
            position = limit_part + n
            if seq.contains(position) and not seq.coordinate(position) < bound:
                self._out_of_range(seq.coordinate(position))
                return

    def _repeat(self, rep: RepeatDisjoint) -> None:
        self.report.sigma = False
        block = rep.block
        if (not isinstance(block, GenSeq) or block.inverted
                or not block.stop.is_atom or not block.stop.as_atom().uncountable):
            self.report.add(
                INVALID_REPEAT_BLOCK, "tekrar blogu sayilamaz bir atomda biten artan GenSeq olmali",
                f"coordinate {getattr(block, 'start', '?')}",
            )
            return
        self._adjacency(block)
        bound = self.index_bound if self.index_bound is not None else block.alphabet.index_bound
        if bound is not None and bound.below_repeat_of(rep.width):
            # Kopyalar λ·ξ koordinatlarina tasar; sinir λ·ω'nin altinda kaliyorsa asilir.
            copies, _ = bound.divmod_atom(rep.width)
            self._out_of_range(Ordinal.atom(rep.width, copies + 1))

    def _literal_repeat(self, rep: RepeatLiteral) -> None:
        self.report.sigma = False
        first = _some_coordinate(rep.block)
        if first is None:
            return
        self.report.add(
            FINITE_PREIMAGE, "koordinatlar kaydirilmadan ω₁ kez tekrar ediliyor",
            f"coordinate {first} hit w1 times",
        )
        self.visit(rep.block)


def _some_coordinate(t: WordTerm) -> Optional[Ordinal]:
    """Terimdeki ilk harfin koordinati (bos terim icin None)."""
    if isinstance(t, Lit):
        return t.coordinate
    if isinstance(t, GenSeq):
        return t.coordinate(t.start)
    if isinstance(t, RepeatDisjoint):
        return t.copy(t.first_copy).coordinate(t.copy(t.first_copy).start)
    if isinstance(t, (Inv, RepeatLiteral)):
        return _some_coordinate(t.inner if isinstance(t, Inv) else t.block)
    if isinstance(t, Concat):
        for part in t.parts:
            found = _some_coordinate(part)
            if found is not None:
                return found
    return None
