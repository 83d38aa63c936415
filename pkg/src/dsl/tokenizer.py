"""
Tokenizer
=========
Kelime ifade dili icin tokenlar. Offset'ler UTF-8 byte konumudur.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List

from ..utils.exceptions import ParseError


class TokenKind(str, Enum):
    INT = "INT"
    IDENT = "IDENT"
    PUNCT = "PUNCT"
    EOF = "EOF"


PUNCTUATION = frozenset(b"()[]{},.:=+*^-")


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    offset: int

    def is_punct(self, char: str) -> bool:
        return self.kind is TokenKind.PUNCT and self.text == char

    def is_ident(self, name: str) -> bool:
        return self.kind is TokenKind.IDENT and self.text == name

    def __str__(self) -> str:
        return self.text if self.kind is not TokenKind.EOF else "<eof>"


def _is_alpha(byte: int) -> bool:
    return 65 <= byte <= 90 or 97 <= byte <= 122


def _is_digit(byte: int) -> bool:
    return 48 <= byte <= 57


def tokenize(source: str) -> List[Token]:
    """Kaynak metni tokenlara bol; bilinmeyen karakterde ParseError."""
    data = source.encode("utf-8")
    tokens: List[Token] = []
    i = 0
    while i < len(data):
        byte = data[i]
        if byte in b" \t\r\n":
            i += 1
        elif _is_digit(byte):
            start = i
            while i < len(data) and _is_digit(data[i]):
                i += 1
            tokens.append(Token(TokenKind.INT, data[start:i].decode("ascii"), start))
        elif _is_alpha(byte):
            start = i
            while i < len(data) and (_is_alpha(data[i]) or _is_digit(data[i]) or data[i] == ord("_")):
                i += 1
            tokens.append(Token(TokenKind.IDENT, data[start:i].decode("ascii"), start))
        elif byte in PUNCTUATION:
            tokens.append(Token(TokenKind.PUNCT, chr(byte), i))
            i += 1
        else:
            found = data[i:].decode("utf-8", errors="replace")[:1]
            raise ParseError(i, ["token"], found)
    tokens.append(Token(TokenKind.EOF, "", len(data)))
    return tokens
