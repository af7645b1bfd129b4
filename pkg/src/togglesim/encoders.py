"""Low-transition bus encodings: gray mapping and invert-line signaling."""

from __future__ import annotations

from dataclasses import dataclass

from .bits import Trace, Word, hamming_distance


def gray_encode(w: Word) -> Word:
    """Reflected-binary code: each increment of the source flips one bit."""
    return Word(w.width, w.value ^ (w.value >> 1))


def gray_decode(g: Word) -> Word:
    """Inverse of gray_encode (prefix XOR from the MSB down)."""
    value = g.value
    mask = value >> 1
    while mask:
        value ^= mask
        mask >>= 1
    return Word(g.width, value)


@dataclass(frozen=True)
class BusLineState:
    """What is physically on the wires: data lines plus the invert line."""

    word: Word
    invert: bool


def bus_invert_encode(prev: BusLineState, next_raw: Word) -> BusLineState:
    """Choose the next line state for `next_raw` given the current lines.

    If more than half the data lines would flip, the complement is driven
    with the invert line high; a tie (exactly half) stays uninverted so the
    invert line keeps quiet.
    """
    if prev.word.width != next_raw.width:
        raise ValueError(f"width mismatch: {prev.word.width} vs {next_raw.width}")
    if 2 * hamming_distance(prev.word, next_raw) > next_raw.width:
        return BusLineState(next_raw.complement(), True)
    return BusLineState(next_raw, False)


def bus_invert_decode(line: BusLineState) -> Word:
    """Recover the raw word from the line state."""
    return line.word.complement() if line.invert else line.word


def gray_encode_trace(trace: Trace) -> Trace:
    """Gray-map every word of a trace (an address-bus style recoding)."""
    return Trace(trace.width, tuple(gray_encode(w) for w in trace))


def _with_invert_line(state: BusLineState) -> Word:
    # Invert line rides as the extra MSB above the data lines.
    w = state.word
    return Word(w.width + 1, (int(state.invert) << w.width) | w.value)


def bus_invert_encode_trace(trace: Trace) -> Trace:
    """Re-encode a raw trace as it would appear on invert-signaled lines.

    Output words are one bit wider, the invert line being the extra MSB.
    The first word is transmitted unmodified with the invert line low.
    """
    state = BusLineState(trace[0], False)
    encoded = [_with_invert_line(state)]
    for raw in trace.words[1:]:
        state = bus_invert_encode(state, raw)
        encoded.append(_with_invert_line(state))
    return Trace(trace.width + 1, tuple(encoded))


def bus_invert_decode_trace(encoded: Trace) -> Trace:
    """Strip the invert line and undo inversions, recovering the raw trace."""
    if encoded.width < 2:
        raise ValueError("encoded trace must carry at least one data line")
    width = encoded.width - 1
    mask = (1 << width) - 1
    words = []
    for w in encoded:
        line = BusLineState(Word(width, w.value & mask), bool(w.bit(width)))
        words.append(bus_invert_decode(line))
    return Trace(width, tuple(words))
