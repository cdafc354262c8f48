"""One-pass selection of disjoint unit-height rectangles via shifted windows.

The y-axis is tiled twice by half-open windows of height 2: the even tiling
uses windows [2i, 2i+2) and the odd tiling [2i+1, 2i+3). A closed rectangle
of height 1 with bottom edge y fits inside the window starting at floor(y)
and inside no other window of either tiling, so the two tilings split the
input into two groups, each group living in pairwise-disjoint windows.

Within one window every pair of rectangles overlaps vertically (their
bottoms differ by less than 1), so selecting disjoint rectangles there is
exactly selecting disjoint x-projections, which a per-window
:class:`~geostream.interval_selection.IntervalSelector` does with factor 2.
Rectangles from distinct windows of the same parity can never intersect.
Returning the better of the two parities therefore yields an independent
set at least a quarter of the optimum. Windows are created lazily, so only
windows that received at least one rectangle occupy memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bitio import BitWriter
from .geometry import UNIT_RECT, Interval, UnitRect
from .interval_selection import IntervalSelector
from .streamkit import StreamAlgorithm


@dataclass(frozen=True, slots=True)
class WindowKey:
    """Identifies the unique window [ell, ell+2) containing a rectangle."""

    ell: int
    parity: int

    def __post_init__(self) -> None:
        if self.parity != self.ell % 2:
            raise ValueError("parity must equal ell mod 2")


def window_of(rect: UnitRect) -> WindowKey:
    """The one window of the one tiling that fully contains ``rect``.

    ell = floor(y_bottom) is the only integer with
    ell <= y_bottom < ell + 1, hence [y, y+1] is inside [ell, ell+2) and
    misses every other window of both tilings.
    """
    ell = math.floor(rect.y_bottom)
    return WindowKey(ell, ell % 2)


class RectSelector(StreamAlgorithm):
    """Streaming 4-approximation for independent sets of unit-height rectangles."""

    input_kind = UNIT_RECT

    def __init__(self) -> None:
        self._windows: dict[int, IntervalSelector] = {}

    def process(self, obj: UnitRect) -> None:
        key = window_of(obj)
        core = self._windows.get(key.ell)
        if core is None:
            core = self._windows[key.ell] = IntervalSelector()
        # The stored interval always equals the owning rectangle's x-extent,
        # so the bottom edge alone reconstructs the rectangle.
        core.process(obj.x, payload=obj.y_bottom)

    def selected_by_window(self) -> dict[int, tuple[UnitRect, ...]]:
        out: dict[int, tuple[UnitRect, ...]] = {}
        for ell in sorted(self._windows):
            items = self._windows[ell].result_with_payloads()
            out[ell] = tuple(UnitRect(iv, y) for iv, y in items)
        return out

    def result(self) -> tuple[UnitRect, ...]:
        """Selected rectangles of the better parity (ties favour even)."""
        picks: dict[int, list[UnitRect]] = {0: [], 1: []}
        for ell, rects in self.selected_by_window().items():
            picks[ell % 2].extend(rects)
        best = picks[0] if len(picks[0]) >= len(picks[1]) else picks[1]
        return tuple(best)

    def write_canonical(self, writer: BitWriter) -> None:
        writer.write_uvarint(len(self._windows))
        for ell in sorted(self._windows):
            writer.write_flag(ell < 0)
            writer.write_uvarint(abs(ell))
            self._windows[ell].write_canonical(writer)

    def canonical_state(self) -> BitWriter:
        writer = BitWriter()
        self.write_canonical(writer)
        return writer

    def state_size_bits(self) -> int:
        return self.canonical_state().bit_length
