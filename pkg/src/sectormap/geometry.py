"""Continuous hit detection over concentric-ellipse partitions.

A canvas is partitioned by ``ring_count`` nested ellipses sharing one
center and ``slice_count`` equal angular slices, yielding
``ring_count * slice_count`` sectors. A click is resolved by translating
window coordinates onto a y-up cartesian plane centered on the partition,
bucketing the polar angle into a slice, and finding the smallest ellipse
whose containment inequality the point satisfies. Everything here is a
pure function over immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

# 1-based sector index, 1 .. ring_count * slice_count
SectorId = int


@dataclass(frozen=True)
class Point:
    """A point in pixels.

    Axis orientation depends on context: canvas/screen coordinates grow
    downward, centered coordinates (the output of :func:`translate_point`)
    grow upward. Coordinates must be finite.
    """

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"point coordinates must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class WindowRect:
    """A window rectangle in screen pixels (left/top inclusive edges)."""

    left: int
    top: int
    right: int
    bottom: int

    def __post_init__(self) -> None:
        if self.left >= self.right:
            raise ValueError(f"window needs left < right, got {self.left} >= {self.right}")
        if self.top >= self.bottom:
            raise ValueError(f"window needs top < bottom, got {self.top} >= {self.bottom}")


@dataclass(frozen=True)
class PartitionSpec:
    """The continuous geometric model of one partitioned canvas.

    ``semi_axis_x`` and ``semi_axis_y`` are the semi-axes of the innermost
    ellipse; ring ``i`` is bounded by the ellipse with semi-axes
    ``i * semi_axis_x`` by ``i * semi_axis_y``. ``center`` is given in
    canvas coordinates (y grows downward).
    """

    center: Point
    semi_axis_x: float
    semi_axis_y: float
    ring_count: int
    slice_count: int
    canvas_width: int
    canvas_height: int

    def __post_init__(self) -> None:
        if self.semi_axis_x <= 0 or self.semi_axis_y <= 0:
            raise ValueError("semi-axes must be positive")
        if self.ring_count < 1 or self.slice_count < 1:
            raise ValueError("ring_count and slice_count must be >= 1")
        if self.canvas_width < 1 or self.canvas_height < 1:
            raise ValueError("canvas dimensions must be >= 1")
        if self.ring_count * self.slice_count > 64:
            raise ValueError(
                f"{self.ring_count} rings x {self.slice_count} slices = "
                f"{self.ring_count * self.slice_count} sectors; "
                "state must fit one 64-bit integer"
            )
        if (self.ring_count * self.semi_axis_x > self.canvas_width / 2
                or self.ring_count * self.semi_axis_y > self.canvas_height / 2):
            raise ValueError("outermost ellipse does not fit the canvas")

    @property
    def sector_count(self) -> int:
        return self.ring_count * self.slice_count

    def to_dict(self) -> dict:
        """Serialize to the flat JSON object shared by CLI, service and UI."""
        return {
            "center_x": self.center.x,
            "center_y": self.center.y,
            "semi_axis_x": self.semi_axis_x,
            "semi_axis_y": self.semi_axis_y,
            "ring_count": self.ring_count,
            "slice_count": self.slice_count,
            "canvas_width": self.canvas_width,
            "canvas_height": self.canvas_height,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PartitionSpec":
        """Parse the flat JSON object form; all eight keys are required."""
        if not isinstance(data, dict):
            raise ValueError("partition spec must be a JSON object")
        keys = ("center_x", "center_y", "semi_axis_x", "semi_axis_y",
                "ring_count", "slice_count", "canvas_width", "canvas_height")
        missing = [k for k in keys if k not in data]
        if missing:
            raise ValueError(f"partition spec missing keys: {', '.join(missing)}")
        values = {}
        for key in keys:
            value = data[key]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ValueError(f"partition spec key {key!r} must be numeric")
            values[key] = value
        for key in ("ring_count", "slice_count", "canvas_width", "canvas_height"):
            if values[key] != int(values[key]):
                raise ValueError(f"partition spec key {key!r} must be an integer")
            values[key] = int(values[key])
        return cls(
            center=Point(values["center_x"], values["center_y"]),
            semi_axis_x=float(values["semi_axis_x"]),
            semi_axis_y=float(values["semi_axis_y"]),
            ring_count=values["ring_count"],
            slice_count=values["slice_count"],
            canvas_width=values["canvas_width"],
            canvas_height=values["canvas_height"],
        )


#: 512x384 canvas, 3 rings x 8 slices = 24 sectors, centered.
DEFAULT_SPEC = PartitionSpec(
    center=Point(256.0, 192.0),
    semi_axis_x=80.0,
    semi_axis_y=60.0,
    ring_count=3,
    slice_count=8,
    canvas_width=512,
    canvas_height=384,
)


def translate_point(window: WindowRect, mouse: Point, center_in_window: Point) -> Point:
    """Translate a screen-coordinate mouse point onto the centered plane.

    ``center_in_window`` is the partition center in window-local
    coordinates. The result has the center as origin and the y axis
    pointing upward.
    """
    wx = mouse.x - window.left
    wy = mouse.y - window.top
    return Point(wx - center_in_window.x, center_in_window.y - wy)


def _angle_xy(x: float, y: float) -> float:
    theta = math.atan2(y, x) % TWO_PI
    # a tiny negative atan2 result can round the modulo up to exactly 2*pi
    if theta >= TWO_PI:
        return 0.0
    return theta


def angle_of(p: Point) -> float:
    """Polar angle of ``p`` in [0, 2*pi), counterclockwise from +x.

    The origin maps to 0 by convention, so the center always lands in the
    first slice.
    """
    return _angle_xy(p.x, p.y)


def _ring_index(x: float, y: float, spec: PartitionSpec) -> int:
    """Smallest ring whose ellipse contains (x, y), or 0 when outside all."""
    b = spec.semi_axis_x
    a = spec.semi_axis_y
    for i in range(1, spec.ring_count + 1):
        if (x / (i * b)) ** 2 + (y / (i * a)) ** 2 <= 1.0:
            return i
    return 0


def ring_of(p: Point, spec: PartitionSpec) -> int | None:
    """Ring index (1-based, innermost first) containing ``p``.

    ``p`` is in centered coordinates. Boundary points belong to the inner
    ring; returns None outside the outermost ellipse.
    """
    ring = _ring_index(p.x, p.y, spec)
    return ring if ring else None


def slice_of(theta: float, spec: PartitionSpec) -> int:
    """Slice index in 0..slice_count-1 for an angle in [0, 2*pi).

    Slice k covers the half-open interval [2*pi*k/M, 2*pi*(k+1)/M).
    """
    if not (0.0 <= theta < TWO_PI):
        raise ValueError(f"angle must be in [0, 2*pi), got {theta}")
    k = int(theta * spec.slice_count / TWO_PI)
    # floating-point rounding at the top of the range can land on M
    if k >= spec.slice_count:
        k = spec.slice_count - 1
    return k


def sector_index(x: float, y: float, spec: PartitionSpec) -> int:
    """Scalar core of the hit test, on raw centered coordinates.

    Returns the 1-based sector id, or 0 when (x, y) lies outside the
    outermost ellipse. Sectors are numbered ring-major: ring 1 holds
    sectors 1..slice_count counterclockwise from the +x axis.
    """
    ring = _ring_index(x, y, spec)
    if ring == 0:
        return 0
    return (ring - 1) * spec.slice_count + slice_of(_angle_xy(x, y), spec) + 1


def sector_of(p: Point, spec: PartitionSpec) -> SectorId | None:
    """Resolve a centered-coordinate point to its sector id, if any."""
    sector = sector_index(p.x, p.y, spec)
    return sector if sector else None
