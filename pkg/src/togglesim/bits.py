"""Fixed-width bit vectors and the transition-counting primitives.

A :class:`Word` is an immutable bit pattern of known width. Bit 0 is the
least significant bit and the rightmost character of the binary text form,
so a 16-bit bus "data(15)..data(0)" maps to indices 15..0. A :class:`Trace`
is an ordered sequence of same-width words, one per clock cycle; the number
of word-to-word transfers is one less than the number of words.

The transition count between two consecutive words is their Hamming
distance, i.e. the popcount of their XOR.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_WIDTH = 1024  # sanity bound; typical buses here are 4..16 lines

_HEX_DIGITS = frozenset("0123456789abcdefABCDEF")


def check_width(width: int) -> None:
    """Reject bus widths outside 1..MAX_WIDTH."""
    if not isinstance(width, int) or not 1 <= width <= MAX_WIDTH:
        raise ValueError(f"width must be an integer in 1..{MAX_WIDTH}, got {width!r}")


@dataclass(frozen=True)
class Word:
    """A value of exactly `width` bits; no hidden higher bits are stored."""

    width: int
    value: int

    def __post_init__(self) -> None:
        check_width(self.width)
        if not 0 <= self.value < (1 << self.width):
            raise ValueError(
                f"value 0x{self.value:X} does not fit in {self.width} bits"
            )

    def bit(self, index: int) -> int:
        """Bit at `index`, 0 = LSB."""
        if not 0 <= index < self.width:
            raise IndexError(f"bit index {index} out of range for width {self.width}")
        return (self.value >> index) & 1

    def __xor__(self, other: "Word") -> "Word":
        if self.width != other.width:
            raise ValueError(f"width mismatch: {self.width} vs {other.width}")
        return Word(self.width, self.value ^ other.value)

    def complement(self) -> "Word":
        return Word(self.width, self.value ^ ((1 << self.width) - 1))

    def to_binary(self) -> str:
        """MSB-first binary text, exactly `width` characters."""
        return format(self.value, f"0{self.width}b")

    def to_hex(self) -> str:
        """Uppercase hex, zero-padded to ceil(width/4) digits."""
        return format(self.value, f"0{(self.width + 3) // 4}X")

    def __repr__(self) -> str:
        return f"Word({self.width}, '{self.to_binary()}')"


def zero(width: int) -> Word:
    return Word(width, 0)


def word_from_text(text: str, radix: int, width: int) -> Word:
    """Parse an MSB-first binary or hex string into a `width`-bit Word.

    Binary accepts at most `width` digits, hex at most ceil(width/4); excess
    leading zeros within those limits are fine. Hex is case-insensitive.
    """
    check_width(width)
    if radix not in (2, 16):
        raise ValueError(f"radix must be 2 or 16, got {radix}")
    if not text:
        raise ValueError("empty text")
    if radix == 2:
        bad = set(text) - {"0", "1"}
        if bad:
            raise ValueError(f"invalid binary digit {sorted(bad)[0]!r} in {text!r}")
        if len(text) > width:
            raise ValueError(f"{len(text)} binary digits exceed width {width}")
        return Word(width, int(text, 2))
    bad = set(text) - _HEX_DIGITS
    if bad:
        raise ValueError(f"invalid hex digit {sorted(bad)[0]!r} in {text!r}")
    if len(text) > (width + 3) // 4:
        raise ValueError(f"{len(text)} hex digits exceed width {width}")
    value = int(text, 16)
    if value >= 1 << width:
        raise ValueError(f"value 0x{value:X} does not fit in {width} bits")
    return Word(width, value)


def popcount(a: Word) -> int:
    """Number of set bits."""
    return a.value.bit_count()


def hamming_distance(a: Word, b: Word) -> int:
    """Number of bit positions where two same-width words differ."""
    if a.width != b.width:
        raise ValueError(f"width mismatch: {a.width} vs {b.width}")
    return (a.value ^ b.value).bit_count()


@dataclass(frozen=True)
class Trace:
    """Same-width words over consecutive clock cycles, cycle 0 first."""

    width: int
    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        check_width(self.width)
        object.__setattr__(self, "words", tuple(self.words))
        if not self.words:
            raise ValueError("empty trace: need at least one word")
        for i, w in enumerate(self.words):
            if w.width != self.width:
                raise ValueError(
                    f"word {i} has width {w.width}, trace declares {self.width}"
                )

    @classmethod
    def from_words(cls, words: Iterable[Word]) -> "Trace":
        ws = tuple(words)
        if not ws:
            raise ValueError("empty trace: need at least one word")
        return cls(ws[0].width, ws)

    @property
    def transfers(self) -> int:
        """Word-to-word transitions observed; len(words) - 1."""
        return len(self.words) - 1

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __getitem__(self, index: int) -> Word:
        return self.words[index]
