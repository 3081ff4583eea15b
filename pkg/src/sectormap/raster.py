"""Sector mask layers, skeleton outline, and 1-bit image composition.

Masks are rasterized from the continuous hit test by classifying every
pixel center, so the mask set is simultaneously the highlight layer
library and a brute-force oracle for the geometry. Images are immutable
1-bit rasters composed pixelwise with OR (inclusive superimposition) and
XOR (exclusive superimposition), and serialized as netpbm PBM files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from . import geometry
from .geometry import PartitionSpec, SectorId
from .state import SectorBitmask, sectors_of

# plain-PBM convention: keep raster lines at most 70 characters
_PBM_LINE_WIDTH = 70


class PbmError(ValueError):
    """A malformed or unsupported netpbm file."""


@dataclass(frozen=True)
class BitImage:
    """A row-major 1-bit raster; one byte per pixel, 1 = foreground."""

    width: int
    height: int
    bits: bytes

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", bytes(self.bits))
        if self.width < 1 or self.height < 1:
            raise ValueError("image dimensions must be >= 1")
        if len(self.bits) != self.width * self.height:
            raise ValueError(
                f"expected {self.width * self.height} pixels, got {len(self.bits)}"
            )
        if self.bits.translate(None, b"\x00\x01"):
            raise ValueError("image bytes must be 0 or 1")

    def get(self, col: int, row: int) -> int:
        """Pixel value at (col, row); raises IndexError outside the canvas."""
        if not (0 <= col < self.width and 0 <= row < self.height):
            raise IndexError(f"pixel ({col}, {row}) outside {self.width}x{self.height}")
        return self.bits[row * self.width + col]

    def count_set(self) -> int:
        return sum(self.bits)


def blank(width: int, height: int) -> BitImage:
    return BitImage(width, height, bytes(width * height))


def _require_same_size(a: BitImage, b: BitImage) -> None:
    if a.width != b.width or a.height != b.height:
        raise ValueError(
            f"image dimensions differ: {a.width}x{a.height} vs {b.width}x{b.height}"
        )


def or_compose(a: BitImage, b: BitImage) -> BitImage:
    """Pixelwise logical OR (inclusive superimposition)."""
    _require_same_size(a, b)
    merged = int.from_bytes(a.bits, "big") | int.from_bytes(b.bits, "big")
    return BitImage(a.width, a.height, merged.to_bytes(len(a.bits), "big"))


def xor_compose(a: BitImage, b: BitImage) -> BitImage:
    """Pixelwise logical XOR (exclusive superimposition)."""
    _require_same_size(a, b)
    merged = int.from_bytes(a.bits, "big") ^ int.from_bytes(b.bits, "big")
    return BitImage(a.width, a.height, merged.to_bytes(len(a.bits), "big"))


def _classification_field(spec: PartitionSpec) -> bytes:
    """Sector label of every pixel center, row-major; 0 marks the exterior.

    Pixel (col, row) is sampled at its center, i.e. centered coordinates
    (col + 0.5 - center.x, center.y - (row + 0.5)).
    """
    width, height = spec.canvas_width, spec.canvas_height
    cx, cy = spec.center.x, spec.center.y
    classify = geometry.sector_index
    field = bytearray(width * height)
    idx = 0
    for row in range(height):
        dy = cy - (row + 0.5)
        for col in range(width):
            field[idx] = classify((col + 0.5) - cx, dy, spec)
            idx += 1
    return bytes(field)


def _check_sector(spec: PartitionSpec, sector: SectorId) -> None:
    if not 1 <= sector <= spec.sector_count:
        raise ValueError(f"sector id {sector} out of range 1..{spec.sector_count}")


def rasterize_sector(spec: PartitionSpec, sector: SectorId) -> BitImage:
    """Mask of one sector: pixels whose centers the hit test maps to it."""
    _check_sector(spec, sector)
    table = bytearray(256)
    table[sector] = 1
    field = _classification_field(spec)
    return BitImage(spec.canvas_width, spec.canvas_height, field.translate(bytes(table)))


def _skeleton_from_field(field: bytes, width: int, height: int) -> bytes:
    out = bytearray(width * height)
    for row in range(height):
        base = row * width
        for col in range(width):
            i = base + col
            label = field[i]
            if col + 1 < width and field[i + 1] != label:
                out[i] = 1
            elif row + 1 < height and field[i + width] != label:
                out[i] = 1
    return bytes(out)


def rasterize_skeleton(spec: PartitionSpec) -> BitImage:
    """Outline image marking every ring and slice boundary.

    A pixel is set when its classification label differs from its east or
    south neighbor's, which traces each boundary with a one-pixel line.
    """
    field = _classification_field(spec)
    return BitImage(
        spec.canvas_width,
        spec.canvas_height,
        _skeleton_from_field(field, spec.canvas_width, spec.canvas_height),
    )


@dataclass(frozen=True)
class LayerLibrary:
    """Skeleton plus one mask per sector, all on the spec's canvas."""

    spec: PartitionSpec
    skeleton: BitImage
    masks: tuple[BitImage, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "masks", tuple(self.masks))
        if len(self.masks) != self.spec.sector_count:
            raise ValueError(
                f"expected {self.spec.sector_count} masks, got {len(self.masks)}"
            )
        for img in (self.skeleton, *self.masks):
            if img.width != self.spec.canvas_width or img.height != self.spec.canvas_height:
                raise ValueError("library image dimensions must match the spec canvas")

    @property
    def sector_count(self) -> int:
        return self.spec.sector_count

    def mask(self, sector: SectorId) -> BitImage:
        _check_sector(self.spec, sector)
        return self.masks[sector - 1]


def build_library(spec: PartitionSpec) -> LayerLibrary:
    """Rasterize the skeleton and every sector mask in one classification pass."""
    width, height = spec.canvas_width, spec.canvas_height
    field = _classification_field(spec)
    mask_bits = [bytearray(width * height) for _ in range(spec.sector_count)]
    for i, label in enumerate(field):
        if label:
            mask_bits[label - 1][i] = 1
    return LayerLibrary(
        spec=spec,
        skeleton=BitImage(width, height, _skeleton_from_field(field, width, height)),
        masks=tuple(BitImage(width, height, bytes(m)) for m in mask_bits),
    )


def highlight_step(
    current_highlight: BitImage, library: LayerLibrary, sector: SectorId
) -> tuple[BitImage, BitImage]:
    """Toggle one sector in the highlight layer.

    Returns (highlight, display): the highlight XORed with the sector's
    mask, and that highlight ORed under the skeleton for showing.
    """
    highlight = xor_compose(current_highlight, library.mask(sector))
    display = or_compose(library.skeleton, highlight)
    return highlight, display


def render_state(library: LayerLibrary, mask: SectorBitmask) -> BitImage:
    """Rebuild the display image from a stored bitmask.

    ORs together the mask of every set bit, then the skeleton; an empty
    bitmask yields the skeleton alone.
    """
    if mask.width != library.sector_count:
        raise ValueError(
            f"state width {mask.width} does not match library with "
            f"{library.sector_count} sectors"
        )
    img = library.skeleton
    for sector in sectors_of(mask):
        img = or_compose(img, library.mask(sector))
    return img


# --- PBM serialization ---

def write_pbm(img: BitImage) -> bytes:
    """Serialize as plain ASCII PBM (P1); set pixels are black ('1')."""
    lines = [f"P1\n{img.width} {img.height}\n"]
    for row in range(img.height):
        start = row * img.width
        digits = bytes(48 + v for v in img.bits[start:start + img.width]).decode("ascii")
        for chunk_start in range(0, len(digits), _PBM_LINE_WIDTH):
            lines.append(digits[chunk_start:chunk_start + _PBM_LINE_WIDTH])
            lines.append("\n")
    return "".join(lines).encode("ascii")


def _scan_header_ints(data: bytes, pos: int, count: int) -> tuple[list[int], int]:
    """Read whitespace/comment-separated unsigned integers from a header."""
    values: list[int] = []
    n = len(data)
    while len(values) < count:
        while pos < n and (data[pos:pos + 1].isspace() or data[pos] == 0x23):
            if data[pos] == 0x23:  # '#' comment runs to end of line
                while pos < n and data[pos] not in (0x0A, 0x0D):
                    pos += 1
            else:
                pos += 1
        start = pos
        while pos < n and data[pos:pos + 1].isdigit():
            pos += 1
        if pos == start:
            raise PbmError("malformed header: expected an unsigned integer")
        values.append(int(data[start:pos]))
    return values, pos


def read_pbm(data: bytes) -> BitImage:
    """Parse a PBM file, plain (P1) or raw (P4)."""
    magic = bytes(data[:2])
    if magic not in (b"P1", b"P4"):
        if len(magic) == 2 and magic[0:1] == b"P" and magic[1:2].isdigit():
            raise PbmError(f"unsupported netpbm magic {magic.decode('ascii')!r}; only P1/P4 are read")
        raise PbmError("not a PBM file: missing P1/P4 magic number")
    (width, height), pos = _scan_header_ints(data, 2, 2)
    if width < 1 or height < 1:
        raise PbmError(f"malformed header: bad dimensions {width}x{height}")
    total = width * height
    if magic == b"P1":
        pixels = bytearray(total)
        filled = 0
        n = len(data)
        while filled < total and pos < n:
            byte = data[pos]
            if byte == 0x23:  # comment
                while pos < n and data[pos] not in (0x0A, 0x0D):
                    pos += 1
                continue
            if data[pos:pos + 1].isspace():
                pos += 1
                continue
            if byte == 0x30 or byte == 0x31:  # '0' / '1'
                pixels[filled] = byte - 0x30
                filled += 1
                pos += 1
                continue
            raise PbmError(f"invalid pixel character {chr(byte)!r} in P1 raster")
        if filled < total:
            raise PbmError(f"truncated P1 raster: expected {total} pixels, got {filled}")
        return BitImage(width, height, bytes(pixels))
    # P4: a single whitespace byte, then rows packed 8 pixels per byte, MSB first
    if pos >= len(data) or not data[pos:pos + 1].isspace():
        raise PbmError("malformed header: P4 raster must follow a single whitespace")
    pos += 1
    row_bytes = (width + 7) // 8
    needed = row_bytes * height
    raster = data[pos:pos + needed]
    if len(raster) < needed:
        raise PbmError(f"truncated P4 raster: expected {needed} bytes, got {len(raster)}")
    pixels = bytearray(total)
    for row in range(height):
        row_start = row * row_bytes
        out_start = row * width
        for col in range(width):
            byte = raster[row_start + (col >> 3)]
            pixels[out_start + col] = (byte >> (7 - (col & 7))) & 1
    return BitImage(width, height, bytes(pixels))


# --- library directory layout ---

SPEC_FILENAME = "spec.json"
SKELETON_FILENAME = "skeleton.pbm"


def _mask_filename(sector: SectorId) -> str:
    return f"sector_{sector:02d}.pbm"


def save_library(library: LayerLibrary, directory: str | Path) -> None:
    """Write spec.json, skeleton.pbm and one sector_NN.pbm per mask."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    spec_text = json.dumps(library.spec.to_dict(), indent=2) + "\n"
    (directory / SPEC_FILENAME).write_text(spec_text, encoding="utf-8")
    (directory / SKELETON_FILENAME).write_bytes(write_pbm(library.skeleton))
    for sector in range(1, library.sector_count + 1):
        path = directory / _mask_filename(sector)
        path.write_bytes(write_pbm(library.mask(sector)))


def load_library(directory: str | Path) -> LayerLibrary:
    """Load a library directory written by :func:`save_library`."""
    directory = Path(directory)
    spec_path = directory / SPEC_FILENAME
    if not spec_path.is_file():
        raise FileNotFoundError(f"no library at {directory}: missing {SPEC_FILENAME}")
    spec = PartitionSpec.from_dict(json.loads(spec_path.read_text(encoding="utf-8")))
    skeleton = read_pbm((directory / SKELETON_FILENAME).read_bytes())
    masks = tuple(
        read_pbm((directory / _mask_filename(sector)).read_bytes())
        for sector in range(1, spec.sector_count + 1)
    )
    return LayerLibrary(spec=spec, skeleton=skeleton, masks=masks)
