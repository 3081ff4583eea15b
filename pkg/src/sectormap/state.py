"""Bitmask encoding of highlighted sectors.

One unsigned integer carries the whole highlight state: bit k (1-based,
least significant first) is set exactly when sector k is highlighted. The
display form is a fixed-width binary string with sector 1 rightmost; the
canonical storage/wire form is plain decimal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import SectorId

MAX_WIDTH = 64


@dataclass(frozen=True)
class SectorBitmask:
    """An immutable sector highlight state of ``width`` meaningful bits."""

    bits: int
    width: int

    def __post_init__(self) -> None:
        if not 1 <= self.width <= MAX_WIDTH:
            raise ValueError(f"width must be in 1..{MAX_WIDTH}, got {self.width}")
        if not 0 <= self.bits < (1 << self.width):
            raise ValueError(f"bits {self.bits} out of range for width {self.width}")


def empty(width: int) -> SectorBitmask:
    return SectorBitmask(0, width)


def _check_id(mask: SectorBitmask, sector: SectorId) -> None:
    if not 1 <= sector <= mask.width:
        raise ValueError(f"sector id {sector} out of range 1..{mask.width}")


def bit_set(mask: SectorBitmask, sector: SectorId) -> SectorBitmask:
    """Return ``mask`` with the bit for ``sector`` set (idempotent)."""
    _check_id(mask, sector)
    return SectorBitmask(mask.bits | (1 << (sector - 1)), mask.width)


def bit_toggle(mask: SectorBitmask, sector: SectorId) -> SectorBitmask:
    """Return ``mask`` with the bit for ``sector`` flipped."""
    _check_id(mask, sector)
    return SectorBitmask(mask.bits ^ (1 << (sector - 1)), mask.width)


def bit_test(mask: SectorBitmask, sector: SectorId) -> bool:
    """True iff the bit for ``sector`` is set."""
    _check_id(mask, sector)
    return bool(mask.bits >> (sector - 1) & 1)


def sectors_of(mask: SectorBitmask) -> list[SectorId]:
    """Ascending list of the sector ids whose bits are set."""
    return [k for k in range(1, mask.width + 1) if mask.bits >> (k - 1) & 1]


def parse_bits(text: str, width: int) -> SectorBitmask:
    """Parse a fixed-width binary string; the rightmost character is sector 1."""
    if len(text) != width:
        raise ValueError(f"expected {width} binary digits, got {len(text)}")
    if text.strip("01"):
        raise ValueError(f"binary state may contain only '0'/'1': {text!r}")
    return SectorBitmask(int(text, 2), width)


def format_bits(mask: SectorBitmask) -> str:
    """Fixed-width binary string, sector 1 rightmost; inverse of parse_bits."""
    return format(mask.bits, f"0{mask.width}b")


def format_decimal(mask: SectorBitmask) -> str:
    """Canonical decimal serialization: base 10, no sign, no leading zeros."""
    return str(mask.bits)


def parse_decimal(text: str, width: int) -> SectorBitmask:
    if not text.isdigit():
        raise ValueError(f"decimal state must be an unsigned integer: {text!r}")
    return SectorBitmask(int(text, 10), width)


def parse_state(text: str, width: int) -> SectorBitmask:
    """Parse either spelling of a state: binary or decimal.

    A string of exactly ``width`` characters all '0'/'1' is read as the
    binary form; anything else must be a plain decimal integer.
    """
    if len(text) == width and not text.strip("01"):
        return parse_bits(text, width)
    return parse_decimal(text, width)
