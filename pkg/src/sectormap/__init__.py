"""Hit testing, layer highlighting and bitmask state for canvases
partitioned by concentric ellipses and radial slices."""

from .geometry import (
    DEFAULT_SPEC,
    PartitionSpec,
    Point,
    SectorId,
    WindowRect,
    angle_of,
    ring_of,
    sector_of,
    slice_of,
    translate_point,
)
from .raster import (
    BitImage,
    LayerLibrary,
    PbmError,
    build_library,
    highlight_step,
    load_library,
    or_compose,
    rasterize_sector,
    rasterize_skeleton,
    read_pbm,
    render_state,
    save_library,
    write_pbm,
    xor_compose,
)
from .session import SessionState, hit_canvas
from .state import (
    SectorBitmask,
    bit_set,
    bit_test,
    bit_toggle,
    format_bits,
    format_decimal,
    parse_bits,
    parse_state,
    sectors_of,
)
from .store import RecordStore

__all__ = [
    "DEFAULT_SPEC",
    "PartitionSpec",
    "Point",
    "SectorId",
    "WindowRect",
    "angle_of",
    "ring_of",
    "sector_of",
    "slice_of",
    "translate_point",
    "BitImage",
    "LayerLibrary",
    "PbmError",
    "build_library",
    "highlight_step",
    "load_library",
    "or_compose",
    "rasterize_sector",
    "rasterize_skeleton",
    "read_pbm",
    "render_state",
    "save_library",
    "write_pbm",
    "xor_compose",
    "SessionState",
    "hit_canvas",
    "SectorBitmask",
    "bit_set",
    "bit_test",
    "bit_toggle",
    "format_bits",
    "format_decimal",
    "parse_bits",
    "parse_state",
    "sectors_of",
    "RecordStore",
]

__version__ = "0.1.0"
