"""Finite alphabets and length-lexicographic word enumeration.

Words are plain Python strings; the alphabet fixes which single-character
symbols are allowed and, crucially, their order.  Every enumeration in the
workbench is length-lexicographic with ties broken by *alphabet* order (not
ASCII order), so all outputs are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InputError

Word = str


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        if not self.symbols:
            raise InputError("alphabet must contain at least one symbol")
        for ch in self.symbols:
            if len(ch) != 1:
                raise InputError(f"alphabet symbols are single characters, got {ch!r}")
        if len(set(self.symbols)) != len(self.symbols):
            raise InputError(f"duplicate symbols in alphabet {''.join(self.symbols)!r}")

    @classmethod
    def of(cls, symbols: str) -> "Alphabet":
        return cls(tuple(symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __contains__(self, ch: object) -> bool:
        return ch in self.symbols

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def index(self, ch: str) -> int:
        try:
            return self.symbols.index(ch)
        except ValueError:
            raise InputError(f"symbol {ch!r} not in alphabet {''.join(self.symbols)!r}") from None

    def validate_word(self, w: Word) -> None:
        for ch in w:
            if ch not in self.symbols:
                raise InputError(
                    f"symbol {ch!r} in word {w!r} not in alphabet {''.join(self.symbols)!r}"
                )

    def words(self, max_len: int) -> Iterator[Word]:
        """All words of length <= max_len in length-lex order."""
        if max_len < 0:
            raise InputError("word length bound must be non-negative")
        yield ""
        level = [""]
        for _ in range(max_len):
            nxt = []
            for w in level:
                for ch in self.symbols:
                    u = w + ch
                    yield u
                    nxt.append(u)
            level = nxt

    def word_count(self, max_len: int) -> int:
        """Number of words of length <= max_len."""
        k = len(self.symbols)
        if k == 1:
            return max_len + 1
        return (k ** (max_len + 1) - 1) // (k - 1)


@lru_cache(maxsize=None)
def lengthlex_words(symbols: tuple[str, ...], max_len: int) -> tuple[Word, ...]:
    return tuple(Alphabet(symbols).words(max_len))


@lru_cache(maxsize=None)
def lengthlex_index(symbols: tuple[str, ...], max_len: int) -> dict[Word, int]:
    return {w: i for i, w in enumerate(lengthlex_words(symbols, max_len))}
