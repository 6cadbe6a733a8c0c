"""Dictionary ordering as a uniform lexicographic structure.

Each word is padded to a fixed length with a gap symbol, every position is a
criterion with the same scale (the alphabet plus gap), and the word's key is
the positional integer of its code vector. Sorting keys sorts the words.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .core_types import Alternative, ScaleSpec


class LexiconError(ValueError):
    pass


class WordTooLongError(LexiconError):
    def __init__(self, word: str, max_length: int):
        super().__init__(f"word {word!r} has {len(word)} characters, max_length is {max_length}")
        self.word = word
        self.max_length = max_length


class UnknownSymbolError(LexiconError):
    def __init__(self, word: str, char: str):
        super().__init__(f"word {word!r} contains {char!r}, which is not in the alphabet")
        self.word = word
        self.char = char


@dataclass(frozen=True)
class AlphabetSpec:
    symbols: str
    gap_position: str = "first"
    max_length: int = 20

    def __post_init__(self):
        if not self.symbols:
            raise LexiconError("alphabet must have at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise LexiconError("alphabet symbols must be distinct")
        if self.gap_position not in ("first", "last"):
            raise LexiconError(f"gap_position must be 'first' or 'last', got {self.gap_position!r}")
        if self.max_length < 1:
            raise LexiconError("max_length must be positive")

    @property
    def radix(self) -> int:
        return len(self.symbols) + 1

    @property
    def gap_code(self) -> int:
        return 0 if self.gap_position == "first" else len(self.symbols)

    def code(self, char: str) -> int:
        i = self.symbols.find(char)
        if i < 0:
            raise KeyError(char)
        return i + 1 if self.gap_position == "first" else i

    @classmethod
    def from_json(cls, data: dict) -> "AlphabetSpec":
        return cls(symbols=data["symbols"],
                   gap_position=data.get("gap_position", "first"),
                   max_length=int(data.get("max_length", 20)))

    @classmethod
    def load(cls, path) -> "AlphabetSpec":
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


@dataclass(frozen=True, order=True)
class WordKey:
    key: int

    def __int__(self):
        return self.key


def code_vector(word: str, alphabet: AlphabetSpec) -> tuple[int, ...]:
    """Codes of ``word`` padded with the gap code to ``max_length`` positions."""
    if len(word) > alphabet.max_length:
        raise WordTooLongError(word, alphabet.max_length)
    codes = []
    for ch in word:
        try:
            codes.append(alphabet.code(ch))
        except KeyError:
            raise UnknownSymbolError(word, ch) from None
    codes.extend([alphabet.gap_code] * (alphabet.max_length - len(word)))
    return tuple(codes)


def position_weights(alphabet: AlphabetSpec) -> tuple[int, ...]:
    r = alphabet.radix
    return tuple(r ** (alphabet.max_length - p) for p in range(1, alphabet.max_length + 1))


def encode_word(word: str, alphabet: AlphabetSpec) -> WordKey:
    key = 0
    for c in code_vector(word, alphabet):
        key = key * alphabet.radix + c
    return WordKey(key)


def sort_lexicon(words: Iterable[str], alphabet: AlphabetSpec) -> list[str]:
    keyed = [(encode_word(w, alphabet).key, w) for w in words]
    keyed.sort(key=lambda t: t[0])
    return [w for _, w in keyed]


def position_scales(alphabet: AlphabetSpec) -> tuple[ScaleSpec, ...]:
    """One zero-based scale per position, so a word list is a decision problem."""
    return tuple(ScaleSpec(0, alphabet.radix - 1, f"pos{p}")
                 for p in range(1, alphabet.max_length + 1))


def word_alternative(word: str, alphabet: AlphabetSpec) -> Alternative:
    return Alternative(word, code_vector(word, alphabet))


def read_word_list(path) -> list[str]:
    text = Path(path).read_text(encoding="utf-8")
    return [line for line in text.splitlines() if line.strip()]

