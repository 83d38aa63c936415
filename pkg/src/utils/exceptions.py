"""
Hata Siniflari
==============
Hata hiyerarsisi: ordinal, alfabe, kelime, Specker ve DSL.
Her hata bir kod ve log icin `details` tasir; CLI cikis kodlari burada eslenir.
"""

from typing import Optional, Dict, Any, Iterable


class TransfiniteWordError(Exception):
    """
    Tum uygulama hatalarinin temel sinifi.
    """

    def __init__(
        self,
        message: str,
        code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        self.message = message
        self.code = code or "UNKNOWN_ERROR"
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": self.__class__.__name__,
            "code": self.code,
            "message": self.message,
            "details": self.details,
        }

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}"


# ═══════════════════════════════════════════════════════════════════════════
# ORDINAL ERRORS
# ═══════════════════════════════════════════════════════════════════════════

class OrdinalError(TransfiniteWordError):
    """Ordinal ve sira tipi hatalari."""
    pass


class UndeclaredAtom(OrdinalError):
    """Tanimlanmamis kardinal atomu."""

    def __init__(self, name: str):
        super().__init__(
            message=f"Tanimlanmamis kardinal: '{name}'",
            code="UNDECLARED_ATOM",
            details={"name": name}
        )


class DuplicateAtom(OrdinalError):
    """Ayni isimle ikinci kardinal."""

    def __init__(self, name: str):
        super().__init__(
            message=f"Kardinal zaten tanimli: '{name}'",
            code="DUPLICATE_ATOM",
            details={"name": name}
        )


class RankConflict(OrdinalError):
    """Kardinal rank cakismasi."""

    def __init__(self, name: str, rank: int, holder: str = ""):
        super().__init__(
            message=f"Rank {rank} kullanimda: '{name}'" + (f" ('{holder}' ile cakisiyor)" if holder else ""),
            code="RANK_CONFLICT",
            details={"name": name, "rank": rank, "holder": holder}
        )


class UnsupportedFragment(OrdinalError):
    """Desteklenen ordinal/sira parcasi disinda kalan islem."""

    def __init__(self, operation: str, reason: str = ""):
        super().__init__(
            message=f"Desteklenmeyen parca: {operation}" + (f" - {reason}" if reason else ""),
            code="UNSUPPORTED_FRAGMENT",
            details={"operation": operation, "reason": reason}
        )


class EmptyOrder(OrdinalError):
    """Bos siranin kofinalitesi yok."""

    def __init__(self, what: str = "order"):
        super().__init__(
            message=f"Bos sira: {what}",
            code="EMPTY_ORDER",
            details={"what": what}
        )


# ═══════════════════════════════════════════════════════════════════════════
# ALPHABET ERRORS
# ═══════════════════════════════════════════════════════════════════════════

class AlphabetError(TransfiniteWordError):
    """Harf ve grup hatalari."""
    pass


class CoordinateMismatch(AlphabetError):
    """Farkli koordinatlardaki harfler carpilamaz."""

    def __init__(self, left: str, right: str):
        super().__init__(
            message=f"Koordinatlar farkli: {left} != {right}",
            code="COORDINATE_MISMATCH",
            details={"left": left, "right": right}
        )


class GroupMismatch(AlphabetError):
    """Ayni koordinatta farkli gruplar."""

    def __init__(self, coordinate: str):
        super().__init__(
            message=f"Koordinat {coordinate} icin grup tanimlari uyusmuyor",
            code="GROUP_MISMATCH",
            details={"coordinate": coordinate}
        )


class IdentityLetter(AlphabetError):
    """Birim eleman harf olarak saklanamaz."""

    def __init__(self, coordinate: str):
        super().__init__(
            message=f"Birim eleman harf olamaz (koordinat {coordinate})",
            code="IDENTITY_LETTER",
            details={"coordinate": coordinate}
        )


class InvalidGroupSpec(AlphabetError):
    """Gecersiz grup tanimi."""

    def __init__(self, kind: str, parameter: Any = None):
        super().__init__(
            message=f"Gecersiz grup: {kind}" + (f" ({parameter})" if parameter is not None else ""),
            code="INVALID_GROUP_SPEC",
            details={"kind": kind, "parameter": parameter}
        )


class InvalidElement(AlphabetError):
    """Gecersiz grup elemani."""

    def __init__(self, value: Any, reason: str = ""):
        super().__init__(
            message=f"Gecersiz eleman: '{value}'" + (f" - {reason}" if reason else ""),
            code="INVALID_ELEMENT",
            details={"value": str(value), "reason": reason}
        )


# ═══════════════════════════════════════════════════════════════════════════
# WORD ERRORS
# ═══════════════════════════════════════════════════════════════════════════

class WordError(TransfiniteWordError):
    """Kelime terimi hatalari."""
    pass


class UnsupportedCancellation(WordError):
    """Sembolik motorun karar veremedigi sadelestirme."""

    def __init__(self, reason: str = ""):
        super().__init__(
            message="Sadelestirme transfinit dikis noktasini asiyor" + (f": {reason}" if reason else ""),
            code="UNSUPPORTED_CANCELLATION",
            details={"reason": reason}
        )


class InvalidCut(WordError):
    """Kelimede olmayan kesim noktasi."""

    def __init__(self, cut: str, reason: str = ""):
        super().__init__(
            message=f"Gecersiz kesim: {cut}" + (f" - {reason}" if reason else ""),
            code="INVALID_CUT",
            details={"cut": cut, "reason": reason}
        )


class NotAWord(WordError):
    """Terim kelime kosullarini saglamiyor."""

    def __init__(self, violations: Iterable[str]):
        items = list(violations)
        super().__init__(
            message="Terim bir kelime degil: " + "; ".join(items),
            code="NOT_A_WORD",
            details={"violations": items}
        )


# ═══════════════════════════════════════════════════════════════════════════
# SPECKER ERRORS
# ═══════════════════════════════════════════════════════════════════════════

class SpeckerError(TransfiniteWordError):
    """Desen ailesi hatalari."""
    pass


class NotRegularUncountable(SpeckerError):
    """M_kappa icin duzenli ve sayilamaz kardinal gerekir."""

    def __init__(self, atom: str):
        super().__init__(
            message=f"'{atom}' duzenli ve sayilamaz bir kardinal degil",
            code="NOT_REGULAR_UNCOUNTABLE",
            details={"atom": atom}
        )


class NotUncountable(SpeckerError):
    """M_g icin sayilamaz kardinal gerekir."""

    def __init__(self, atom: str):
        super().__init__(
            message=f"'{atom}' sayilamaz bir kardinal degil",
            code="NOT_UNCOUNTABLE",
            details={"atom": atom}
        )


class EmptyPattern(SpeckerError):
    """Sonlu desen bos olamaz."""

    def __init__(self):
        super().__init__(
            message="Sonlu desen en az bir harf icermeli",
            code="EMPTY_PATTERN",
        )


class StarConditionViolated(SpeckerError):
    """Indeks kumesinde (*) kosulunu saglamayan aile cifti."""

    def __init__(self, left: str, right: str):
        super().__init__(
            message=f"(*) kosulu saglanmiyor: {left} ve {right} ortak kuyruk paylasiyor",
            code="STAR_CONDITION_VIOLATED",
            details={"left": left, "right": right}
        )


# ═══════════════════════════════════════════════════════════════════════════
# DSL ERRORS
# ═══════════════════════════════════════════════════════════════════════════

class DSLError(TransfiniteWordError):
    """Ifade dili hatalari."""
    pass


class ParseError(DSLError):
    """Parse hatasi (byte offset ve beklenen tokenlar ile)."""

    def __init__(self, offset: int, expected: Iterable[str], found: str = ""):
        expected_list = sorted(set(expected))
        super().__init__(
            message=f"Parse hatasi offset {offset}: beklenen {', '.join(expected_list) or '?'}"
                    + (f", bulunan '{found}'" if found else ", girdi sonu"),
            code="PARSE_ERROR",
            details={"offset": offset, "expected": expected_list, "found": found}
        )
        self.offset = offset
        self.expected = expected_list


# ═══════════════════════════════════════════════════════════════════════════
# CLI EXIT CODES
# ═══════════════════════════════════════════════════════════════════════════

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_UNSUPPORTED = 3

ERROR_EXIT_CODES = {
    ParseError: EXIT_PARSE,
    UndeclaredAtom: EXIT_PARSE,
    DuplicateAtom: EXIT_PARSE,
    RankConflict: EXIT_PARSE,
    InvalidElement: EXIT_PARSE,
    InvalidGroupSpec: EXIT_PARSE,
    NotAWord: EXIT_VALIDATION,
    NotRegularUncountable: EXIT_VALIDATION,
    NotUncountable: EXIT_VALIDATION,
    EmptyPattern: EXIT_VALIDATION,
    StarConditionViolated: EXIT_VALIDATION,
    IdentityLetter: EXIT_VALIDATION,
    InvalidCut: EXIT_VALIDATION,
    CoordinateMismatch: EXIT_VALIDATION,
    GroupMismatch: EXIT_VALIDATION,
    UnsupportedFragment: EXIT_UNSUPPORTED,
    UnsupportedCancellation: EXIT_UNSUPPORTED,
    EmptyOrder: EXIT_UNSUPPORTED,
}


def exit_code_for(error: TransfiniteWordError) -> int:
    """Hata sinifina karsilik gelen CLI cikis kodu."""
    for cls in type(error).__mro__:
        if cls in ERROR_EXIT_CODES:
            return ERROR_EXIT_CODES[cls]
    return EXIT_UNSUPPORTED
