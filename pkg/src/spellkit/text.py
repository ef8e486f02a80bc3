"""Tokenization and normalization of raw text into classified tokens.

The tokenizer is deliberately policy-free: it emits every token it sees,
including single-character ones, and leaves filtering decisions (minimum
length, dictionary membership) to downstream consumers.  Offsets index into
the source string, so ``text[tok.start:tok.end] == tok.surface`` always
holds and the original text can be reconstructed from the tokens and the
gaps between them.
"""

from dataclasses import dataclass
from enum import Enum


class TokenClass(Enum):
    WORD = "word"
    NUMBER = "number"
    PUNCTUATION = "punctuation"
    MIXED = "mixed"


@dataclass(frozen=True)
class Token:
    """A classified span of the source text.

    ``surface`` is the exact slice of the source, ``normalized`` its
    case-folded form.  ``kind`` is WORD for purely alphabetic runs
    (internal hyphens allowed), NUMBER for digit runs, MIXED for
    alphanumeric blends like "b12", and PUNCTUATION for any other
    single non-space character.
    """

    surface: str
    normalized: str
    start: int
    end: int
    kind: TokenClass


def normalize(surface: str) -> str:
    """Return the locale-independent case-folded form of ``surface``.

    Full Unicode case folding, so Latin and Cyrillic both lowercase
    correctly.  Idempotent: ``normalize(normalize(s)) == normalize(s)``.
    """
    return surface.casefold()


def _classify(normalized: str) -> TokenClass:
    has_alpha = any(c.isalpha() for c in normalized)
    has_digit = any(c.isdigit() for c in normalized)
    if has_alpha and not has_digit and all(c.isalpha() or c == "-" for c in normalized):
        return TokenClass.WORD
    if has_digit and not has_alpha and all(c.isdigit() for c in normalized):
        return TokenClass.NUMBER
    return TokenClass.MIXED


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into non-overlapping, ordered tokens.

    Alphanumeric runs become WORD, NUMBER, or MIXED tokens; a hyphen is
    kept inside a token only when flanked by alphabetic characters on
    both sides ("anti-coagulant"), otherwise it is PUNCTUATION.  Every
    other non-space character is a single PUNCTUATION token.  Whitespace
    is never part of a token.
    """
    tokens: list[Token] = []
    n = len(text)
    i = 0
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isalnum():
            j = i + 1
            while j < n and text[j].isalnum():
                j += 1
            # A hyphen joins two runs only between alphabetic neighbours.
            while (
                j + 1 < n
                and text[j] == "-"
                and text[j - 1].isalpha()
                and text[j + 1].isalpha()
            ):
                j += 1
                while j < n and text[j].isalnum():
                    j += 1
            surface = text[i:j]
            norm = normalize(surface)
            tokens.append(Token(surface, norm, i, j, _classify(norm)))
            i = j
        else:
            tokens.append(Token(c, normalize(c), i, i + 1, TokenClass.PUNCTUATION))
            i += 1
    return tokens
