"""One interactive session: click detection coupled to highlight state.

The CLI and the HTTP service both resolve canvas clicks through
:func:`hit_canvas`, so detection cannot drift between the two front ends.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import state as state_ops
from .geometry import PartitionSpec, Point, SectorId, WindowRect, sector_of, translate_point
from .raster import BitImage, LayerLibrary, blank, or_compose, render_state, xor_compose
from .state import SectorBitmask


def hit_canvas(spec: PartitionSpec, x: float, y: float) -> SectorId | None:
    """Resolve a canvas-coordinate click to a sector id, if any.

    Canvas points stand in for live mouse input: the window translation is
    applied with a zero window origin and the spec's center.
    """
    window = WindowRect(0, 0, spec.canvas_width, spec.canvas_height)
    centered = translate_point(window, Point(x, y), spec.center)
    return sector_of(centered, spec)


@dataclass
class SessionState:
    """Mutable coupling of a status bitmask and its highlight image.

    The highlight is always the XOR-fold of the masks of the set sectors,
    so toggling via clicks and reconstructing from a stored mask agree.
    """

    library: LayerLibrary
    status: SectorBitmask = field(init=False)
    highlight: BitImage = field(init=False)

    def __post_init__(self) -> None:
        self.reset()

    @property
    def spec(self) -> PartitionSpec:
        return self.library.spec

    def reset(self) -> None:
        self.status = state_ops.empty(self.library.sector_count)
        self.highlight = blank(self.spec.canvas_width, self.spec.canvas_height)

    def set_status(self, status: SectorBitmask) -> None:
        """Replace the status and rebuild the highlight layer to match."""
        if status.width != self.library.sector_count:
            raise ValueError(
                f"state width {status.width} does not match library with "
                f"{self.library.sector_count} sectors"
            )
        highlight = blank(self.spec.canvas_width, self.spec.canvas_height)
        for sector in state_ops.sectors_of(status):
            highlight = xor_compose(highlight, self.library.mask(sector))
        self.status = status
        self.highlight = highlight

    def hit(self, x: float, y: float) -> SectorId | None:
        """Apply one click: toggle the sector under (x, y), if any."""
        sector = hit_canvas(self.spec, x, y)
        if sector is not None:
            self.status = state_ops.bit_toggle(self.status, sector)
            self.highlight = xor_compose(self.highlight, self.library.mask(sector))
        return sector

    def display(self) -> BitImage:
        """The composed on-screen image: skeleton over the highlight."""
        return or_compose(self.library.skeleton, self.highlight)

    def render(self) -> BitImage:
        """The display reconstructed from the status bitmask alone."""
        return render_state(self.library, self.status)
