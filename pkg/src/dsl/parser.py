"""
Ifade Dili Parser'i
===================
Recursive descent; `.` sol birlesimli.

    expr    := primary ('.' primary)*
    primary := 'eps' | ('g'|'h') '[' ord ']' | 'elem' '(' ord ',' element ')'
             | 'Mk' '(' atom ')' | 'Mg' '(' bits (',' atom)? ')'
             | 'seg' '(' expr ',' ord (',' ord)? ')' | 'inv' '(' expr ')'
             | 'rep_w1' '(' expr ')' | 'rep_w1_literal' '(' expr ')' | '(' expr ')'
    ord     := term ('+' term)*
    term    := base ('*' INT)?
    base    := INT | 'w' ('^' INT)? | ATOM
    bits    := '{' (item (',' item)*)? '}'
    item    := ord ':' ('0'|'1') | 'default' '=' ('0'|'1')
    family  := 'Mk' '(' atom ')' | 'Mg' '(' bits (',' atom)? ')' | 'fin' '(' expr ')' | bits
"""

from typing import Dict, Iterable, List, Optional

from .tokenizer import Token, TokenKind, tokenize
from ..alphabet.letters import Alphabet
from ..config.constants import get_config
from ..ordinals.cardinals import CardinalAtom, CardinalRegistry, OMEGA
from ..ordinals.ordinal import Ordinal
from ..specker.families import (
    PatternFamily, Canonical, BitPattern, FinitePattern, build_M_kappa, build_M_g,
)
from ..words.cuts import slice_word, tail_at
from ..words.normal_form import reduced_segments, segments
from ..words.terms import (
    WordTerm, EMPTY, Lit, Inv, GenSeq, RepeatDisjoint, RepeatLiteral, GDescription, concat,
)
from ..utils.exceptions import ParseError, UnsupportedFragment

PRIMARY_STARTS = (
    "eps", "g[", "h[", "elem(", "Mk(", "Mg(", "seg(", "inv(", "rep_w1(", "rep_w1_literal(", "(",
)
FAMILY_STARTS = ("Mk(", "Mg(", "fin(", "{")


class Parser:
    """
    Token akisi uzerinde parser.

    Kullanim:
        term = Parser("g[0].inv(g[0])").expression()
    """

    def __init__(
        self,
        source: str,
        registry: Optional[CardinalRegistry] = None,
        alphabet: Optional[Alphabet] = None
    ):
        self.tokens = tokenize(source)
        self.pos = 0
        self.registry = registry or CardinalRegistry.default()
        self.alphabet = alphabet or Alphabet()

    # ------------------------------------------------------------------
    # Token yardimcilari
    # ------------------------------------------------------------------

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.current
        if token.kind is not TokenKind.EOF:
            self.pos += 1
        return token

    def _error(self, expected: Iterable[str]) -> ParseError:
        return ParseError(self.current.offset, expected, str(self.current) if self.current.text else "")

    def _expect_punct(self, char: str) -> Token:
        if not self.current.is_punct(char):
            raise self._error([char])
        return self._advance()

    def _accept_punct(self, char: str) -> bool:
        if self.current.is_punct(char):
            self._advance()
            return True
        return False

    def _expect_int(self) -> int:
        if self.current.kind is not TokenKind.INT:
            raise self._error(["INT"])
        return int(self._advance().text)

    def _expect_bit(self) -> int:
        if not (self.current.kind is TokenKind.INT and self.current.text in ("0", "1")):
            raise self._error(["0", "1"])
        return int(self._advance().text)

    def finish(self) -> None:
        if self.current.kind is not TokenKind.EOF:
            raise self._error(["<eof>", "."])

    # ------------------------------------------------------------------
    # Ordinaller
    # ------------------------------------------------------------------

    def ordinal(self) -> Ordinal:
        value = self._ordinal_term()
        while self._accept_punct("+"):
            value = value + self._ordinal_term()
        return value

    def _ordinal_term(self) -> Ordinal:
        base = self._ordinal_base()
        if self._accept_punct("*"):
            return base.times_nat(self._expect_int())
        return base

    def _ordinal_base(self) -> Ordinal:
        token = self.current
        if token.kind is TokenKind.INT:
            return Ordinal.nat(int(self._advance().text))
        if token.is_ident(OMEGA.name):
            self._advance()
            if self._accept_punct("^"):
                return Ordinal.omega_power(self._expect_int())
            return Ordinal.omega_power(1)
        if token.kind is TokenKind.IDENT:
            return Ordinal.atom(self.atom())
        raise self._error(["INT", "w", "ATOM"])

    def atom(self) -> CardinalAtom:
        if self.current.kind is not TokenKind.IDENT:
            raise self._error(["ATOM"])
        return self.registry.get(self._advance().text)

    # ------------------------------------------------------------------
    # Bit tarifleri
    # ------------------------------------------------------------------

    def bits(self) -> GDescription:
        self._expect_punct("{")
        default = 0
        exceptions: Dict[Ordinal, int] = {}
        if not self._accept_punct("}"):
            while True:
                if self.current.is_ident("default"):
                    self._advance()
                    self._expect_punct("=")
                    default = self._expect_bit()
                else:
                    position = self.ordinal()
                    self._expect_punct(":")
                    exceptions[position] = self._expect_bit()
                if self._accept_punct("}"):
                    break
                self._expect_punct(",")
        return GDescription.from_map(exceptions, default)

    def _default_lambda(self) -> CardinalAtom:
        return self.registry.get(get_config().cardinals.DEFAULT_LAMBDA)

    def _bits_and_width(self):
        desc = self.bits()
        width = self.atom() if self._accept_punct(",") else self._default_lambda()
        return desc, width

    # ------------------------------------------------------------------
    # Kelimeler
    # ------------------------------------------------------------------

    def expression(self) -> WordTerm:
        term = self._primary()
        while self._accept_punct("."):
            term = concat(term, self._primary())
        return term

    def _call(self, name: str) -> bool:
        """`name(` varsa tuket."""
        if self.current.is_ident(name) and self.tokens[self.pos + 1].is_punct("("):
            self.pos += 2
            return True
        return False

    def _primary(self) -> WordTerm:
        token = self.current
        if token.is_ident("eps"):
            self._advance()
            return EMPTY
        if (token.is_ident("g") or token.is_ident("h")) and self.tokens[self.pos + 1].is_punct("["):
            self.pos += 2
            coordinate = self.ordinal()
            self._expect_punct("]")
            return Lit(self.alphabet.designated(coordinate))
        if self._call("elem"):
            coordinate = self.ordinal()
            self._expect_punct(",")
            element = self._element_literal()
            self._expect_punct(")")
            group = self.alphabet.group_at(coordinate)
            letter = self.alphabet.letter(coordinate, group.parse_element(element))
            return Lit(letter) if letter is not None else EMPTY
        if self._call("Mk"):
            kappa = self.atom()
            self._expect_punct(")")
            return build_M_kappa(kappa, self.alphabet)
        if self._call("Mg"):
            desc, width = self._bits_and_width()
            self._expect_punct(")")
            return build_M_g(desc, width, self.alphabet)
        if self._call("seg"):
            return self._segment()
        if self._call("inv"):
            inner = self.expression()
            self._expect_punct(")")
            return Inv(inner)
        if self._call("rep_w1"):
            inner = self.expression()
            self._expect_punct(")")
            return repeat_block(inner)
        if self._call("rep_w1_literal"):
            inner = self.expression()
            self._expect_punct(")")
            return RepeatLiteral(inner)
        if self._accept_punct("("):
            inner = self.expression()
            self._expect_punct(")")
            return inner
        raise self._error(PRIMARY_STARTS)

    def _element_literal(self) -> str:
        if self._accept_punct("-"):
            return "-" + str(self._expect_int())
        if self.current.kind in (TokenKind.INT, TokenKind.IDENT):
            return self._advance().text
        raise self._error(["INT", "-", "IDENT"])

    def _segment(self) -> WordTerm:
        inner = self.expression()
        self._expect_punct(",")
        start = self.ordinal()
        stop = self.ordinal() if self._accept_punct(",") else None
        self._expect_punct(")")
        if stop is None:
            return tail_at(inner, start)
        return slice_word(inner, start, stop)

    # ------------------------------------------------------------------
    # Aileler
    # ------------------------------------------------------------------

    def family(self) -> PatternFamily:
        if self._call("Mk"):
            kappa = self.atom()
            self._expect_punct(")")
            return Canonical(kappa)
        if self._call("Mg"):
            desc, width = self._bits_and_width()
            self._expect_punct(")")
            return BitPattern(desc, width)
        if self._call("fin"):
            inner = self.expression()
            self._expect_punct(")")
            return finite_family(inner)
        if self.current.is_punct("{"):
            return BitPattern(self.bits(), self._default_lambda())
        raise self._error(FAMILY_STARTS)


# ═══════════════════════════════════════════════════════════════════════════
# TERIM KURUCULARI
# ═══════════════════════════════════════════════════════════════════════════

def repeat_block(term: WordTerm) -> RepeatDisjoint:
    """rep_w1(expr): expr bir atomda biten artan GenSeq'e indirgenmeli."""
    pieces = reduced_segments(term)
    if len(pieces) != 1 or not isinstance(pieces[0], GenSeq) or pieces[0].inverted \
            or not pieces[0].stop.is_atom:
        raise UnsupportedFragment("rep_w1", "blok bir atomda biten artan GenSeq olmali")
    return RepeatDisjoint(pieces[0])


def finite_family(term: WordTerm) -> FinitePattern:
    """fin(expr): harfler yazildigi sirayla (indirgenmeden)."""
    pieces = segments(term)
    if not all(isinstance(piece, Lit) for piece in pieces):
        raise UnsupportedFragment("fin", "sonlu desen sadece harflerden olusur")
    return FinitePattern(tuple(piece.letter for piece in pieces))


# ═══════════════════════════════════════════════════════════════════════════
# PUBLIC API
# ═══════════════════════════════════════════════════════════════════════════

def parse_expr(source: str, registry: Optional[CardinalRegistry] = None,
               alphabet: Optional[Alphabet] = None) -> WordTerm:
    parser = Parser(source, registry, alphabet)
    term = parser.expression()
    parser.finish()
    return term


def parse_ordinal(source: str, registry: Optional[CardinalRegistry] = None) -> Ordinal:
    parser = Parser(source, registry)
    value = parser.ordinal()
    parser.finish()
    return value


def parse_bits(source: str, registry: Optional[CardinalRegistry] = None) -> GDescription:
    parser = Parser(source, registry)
    desc = parser.bits()
    parser.finish()
    return desc


def parse_family(source: str, registry: Optional[CardinalRegistry] = None,
                 alphabet: Optional[Alphabet] = None) -> PatternFamily:
    parser = Parser(source, registry, alphabet)
    family = parser.family()
    parser.finish()
    return family


def parse_coordinates(source: str, registry: Optional[CardinalRegistry] = None) -> List[Ordinal]:
    """`0,1,w+2` gibi virgulle ayrilmis ordinal listesi; bos metin bos liste."""
    parser = Parser(source, registry)
    values: List[Ordinal] = []
    if parser.current.kind is TokenKind.EOF:
        return values
    values.append(parser.ordinal())
    while parser._accept_punct(","):
        values.append(parser.ordinal())
    parser.finish()
    return values


def parse_matrix_file(text: str, registry: Optional[CardinalRegistry] = None,
                      alphabet: Optional[Alphabet] = None) -> List[List[PatternFamily]]:
    """
    Satir basina bir aile; bos satirlar indeks kumelerini ayirir, `#` yorumdur.
    """
    groups: List[List[PatternFamily]] = [[]]
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if not stripped:
            if groups[-1]:
                groups.append([])
            continue
        groups[-1].append(parse_family(stripped, registry, alphabet))
    return [group for group in groups if group]


__all__ = [
    'Parser', 'parse_expr', 'parse_ordinal', 'parse_bits', 'parse_family',
    'parse_coordinates', 'parse_matrix_file', 'repeat_block', 'finite_family',
]
