"""Deterministic stimulus sources for exercising a bus or circuit under test.

Six generator kinds are modeled: internal (Galois) and external (Fibonacci)
linear feedback shift registers, elementary cellular automata with rules 90
and 150, and plain binary and gray address counters.

Shift and tap conventions, fixed so sequences are reproducible:

* Registers shift one position toward the LSB per step (bit i takes the old
  bit i+1).
* Tap positions are 1-based, position `width` being the MSB stage; tap t
  reads or injects at bit index t-1.
* External LFSR: the XOR of all tapped bits of the old state enters at the
  vacated MSB. Maximal-length sequences in this form require a tap at
  position 1; otherwise the LSB stage never feeds back, the state map is
  not injective, and orbits collapse into shorter cycles.
* Internal LFSR: the old LSB is the feedback bit; it enters at the MSB and
  XORs into bit t-1 for every tap t below `width`.
* CA cells are the bit positions; the left neighbor of cell i is bit i+1
  (one position more significant), the right neighbor bit i-1. A null
  boundary reads constant 0 outside the register; a cyclic boundary wraps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .bits import Trace, Word, check_width
from .encoders import gray_decode, gray_encode

KINDS = ("lfsr_internal", "lfsr_external", "ca90", "ca150", "binary", "gray")
LFSR_KINDS = ("lfsr_internal", "lfsr_external")
CA_KINDS = ("ca90", "ca150")

# Stock degree-16 feedback polynomial, used for 16-bit registers when none
# is given explicitly; maximal-length in the Galois form.
DEFAULT_TAPS_16 = frozenset({16, 14, 13, 11})


def _validated_taps(taps: Iterable[int], width: int) -> frozenset[int]:
    positions = frozenset(int(t) for t in taps)
    if not positions:
        raise ValueError("at least one feedback tap is required")
    for t in sorted(positions):
        if not 1 <= t <= width:
            raise ValueError(f"invalid tap position {t} for width {width}")
    return positions


def _fibonacci_mask(taps: Iterable[int], width: int) -> int:
    mask = 0
    for t in _validated_taps(taps, width):
        mask |= 1 << (t - 1)
    return mask


def _galois_mask(taps: Iterable[int], width: int) -> int:
    mask = 1 << (width - 1)
    for t in _validated_taps(taps, width):
        if t != width:
            mask |= 1 << (t - 1)
    return mask


def lfsr_external_step(state: Word, taps: Iterable[int]) -> Word:
    """Fibonacci form: tapped bits XOR together and feed the vacated MSB."""
    mask = _fibonacci_mask(taps, state.width)
    feedback = (state.value & mask).bit_count() & 1
    return Word(state.width, (state.value >> 1) | (feedback << (state.width - 1)))


def lfsr_internal_step(state: Word, taps: Iterable[int]) -> Word:
    """Galois form: the exiting LSB re-enters at the MSB and XORs into each tapped stage."""
    mask = _galois_mask(taps, state.width)
    value = state.value >> 1
    if state.value & 1:
        value ^= mask
    return Word(state.width, value)


def ca_step(state: Word, rule: int | Sequence[int], boundary: str = "null") -> Word:
    """One synchronous update of a one-dimensional CA register.

    rule 90 sets each cell to left XOR right, rule 150 to left XOR self XOR
    right. A per-cell sequence of 90/150 (index i ruling cell/bit i) is also
    accepted for hybrid registers.
    """
    width = state.width
    v = state.value
    mask = (1 << width) - 1
    if boundary == "null":
        left = v >> 1
        right = (v << 1) & mask
    elif boundary == "cyclic":
        left = (v >> 1) | ((v & 1) << (width - 1))
        right = ((v << 1) | (v >> (width - 1))) & mask
    else:
        raise ValueError(f"boundary must be 'null' or 'cyclic', got {boundary!r}")
    updated90 = left ^ right
    updated150 = left ^ v ^ right
    if isinstance(rule, int):
        if rule == 90:
            return Word(width, updated90)
        if rule == 150:
            return Word(width, updated150)
        raise ValueError(f"rule must be 90 or 150, got {rule}")
    rules = tuple(rule)
    if len(rules) != width:
        raise ValueError(f"need one rule per cell: got {len(rules)} for width {width}")
    value = 0
    for i, r in enumerate(rules):
        if r == 90:
            value |= updated90 & (1 << i)
        elif r == 150:
            value |= updated150 & (1 << i)
        else:
            raise ValueError(f"rule must be 90 or 150, got {r} at cell {i}")
    return Word(width, value)


def counter_step(state: Word, kind: str) -> Word:
    """Advance a binary or gray address counter by one, wrapping at 2^width."""
    mask = (1 << state.width) - 1
    if kind == "binary":
        return Word(state.width, (state.value + 1) & mask)
    if kind == "gray":
        nxt = (gray_decode(state).value + 1) & mask
        return gray_encode(Word(state.width, nxt))
    raise ValueError(f"counter kind must be 'binary' or 'gray', got {kind!r}")


@dataclass(frozen=True)
class GeneratorConfig:
    """Everything that determines a stimulus stream.

    `taps` applies to LFSR kinds only and must include position `width`;
    `boundary` applies to CA kinds only and defaults to null.
    """

    kind: str
    width: int
    seed: Word
    taps: frozenset[int] | None = None
    boundary: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        check_width(self.width)
        if self.seed.width != self.width:
            raise ValueError(
                f"seed width {self.seed.width} does not match generator width {self.width}"
            )
        if self.kind in LFSR_KINDS:
            if self.taps is None:
                raise ValueError(f"{self.kind} requires feedback taps")
            taps = _validated_taps(self.taps, self.width)
            if self.width not in taps:
                raise ValueError(f"taps must include the register width {self.width}")
            object.__setattr__(self, "taps", taps)
            if self.seed.value == 0:
                raise ValueError("all-zero LFSR seed locks up; use a non-zero seed")
            if self.boundary is not None:
                raise ValueError("boundary applies to CA kinds only")
        elif self.kind in CA_KINDS:
            if self.taps is not None:
                raise ValueError("taps apply to LFSR kinds only")
            boundary = self.boundary if self.boundary is not None else "null"
            if boundary not in ("null", "cyclic"):
                raise ValueError(f"boundary must be 'null' or 'cyclic', got {boundary!r}")
            object.__setattr__(self, "boundary", boundary)
        else:
            if self.taps is not None:
                raise ValueError("taps apply to LFSR kinds only")
            if self.boundary is not None:
                raise ValueError("boundary applies to CA kinds only")


def step(config: GeneratorConfig, current: Word) -> Word:
    """One step of the configured generator."""
    if config.kind == "lfsr_external":
        return lfsr_external_step(current, config.taps)
    if config.kind == "lfsr_internal":
        return lfsr_internal_step(current, config.taps)
    if config.kind == "ca90":
        return ca_step(current, 90, config.boundary)
    if config.kind == "ca150":
        return ca_step(current, 150, config.boundary)
    return counter_step(current, config.kind)


class GeneratorState:
    """Mutable cursor over a generator's sequence, starting at the seed."""

    def __init__(self, config: GeneratorConfig, current: Word | None = None):
        self.config = config
        self.current = config.seed if current is None else current
        if self.current.width != config.width:
            raise ValueError(
                f"state width {self.current.width} does not match config width {config.width}"
            )

    def advance(self) -> Word:
        self.current = step(self.config, self.current)
        return self.current


def generate(config: GeneratorConfig, cycles: int) -> Trace:
    """Seed plus `cycles` generated words: a trace with `cycles` transfers."""
    if cycles < 0:
        raise ValueError(f"cycles must be >= 0, got {cycles}")
    words = [config.seed]
    current = config.seed
    for _ in range(cycles):
        current = step(config, current)
        words.append(current)
    return Trace(config.width, tuple(words))
