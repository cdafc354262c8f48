"""One-pass selection of pairwise-disjoint intervals in small memory.

The selector keeps a set of pairwise-disjoint intervals ordered by left
endpoint, never more than the size of a largest independent subset of the
prefix read so far. For an arriving interval exactly one of three things
happens:

* insert: it is disjoint from everything stored;
* replace: it meets exactly one stored interval and its right endpoint does
  not extend past that interval's right endpoint, in which case it takes the
  stored interval's place (an arrival equal to a stored interval is a no-op
  replacement, so duplicates are idempotent);
* discard: anything else.

Replacement prefers intervals that end earlier, which is what makes the
final stored set at least half the size of a largest independent subset of
the whole stream; the exhaustive and randomized suites in the tests pin
that factor against the exact oracle. Because the stored set is disjoint
and sorted, the intervals meeting a new arrival form one contiguous run,
found with two binary searches, so each arrival costs O(log k) comparisons
for k stored intervals.

Each stored interval may carry an opaque payload; payloads follow their
interval through replacement and count toward the canonical state size.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Any

from .bitio import BitWriter
from .geometry import INTERVAL, Coord, Interval
from .streamkit import StreamAlgorithm


class IntervalSelector(StreamAlgorithm):
    """Streaming selector for a large pairwise-disjoint subset of intervals."""

    input_kind = INTERVAL

    def __init__(self) -> None:
        self._lo: list[Coord] = []
        self._hi: list[Coord] = []
        self._payload: list[Any] = []

    def __len__(self) -> int:
        return len(self._lo)

    def process(self, obj: Interval, payload: Any = None) -> None:
        lo, hi = obj.lo, obj.hi
        # Stored intervals are disjoint and sorted, so both endpoint lists
        # are sorted and the intersecting run is [first, last).
        first = bisect_left(self._hi, lo)
        last = bisect_right(self._lo, hi)
        if first == last:
            self._lo.insert(first, lo)
            self._hi.insert(first, hi)
            self._payload.insert(first, payload)
        elif last - first == 1 and hi <= self._hi[first]:
            self._lo[first] = lo
            self._hi[first] = hi
            self._payload[first] = payload

    def result(self) -> tuple[Interval, ...]:
        """The stored intervals, in increasing order."""
        return tuple(Interval(lo, hi) for lo, hi in zip(self._lo, self._hi))

    def result_with_payloads(self) -> tuple[tuple[Interval, Any], ...]:
        return tuple(
            (Interval(lo, hi), payload)
            for lo, hi, payload in zip(self._lo, self._hi, self._payload)
        )

    def write_canonical(self, writer: BitWriter) -> None:
        writer.write_uvarint(len(self._lo))
        for lo, hi, payload in zip(self._lo, self._hi, self._payload):
            writer.write_coord(lo)
            writer.write_coord(hi)
            if payload is None:
                writer.write_flag(False)
            else:
                writer.write_flag(True)
                # Payloads used in this package are rectangle bottoms; the
                # stored interval already carries the x-extent.
                writer.write_coord(payload)

    def canonical_state(self) -> BitWriter:
        writer = BitWriter()
        self.write_canonical(writer)
        return writer

    def state_size_bits(self) -> int:
        return self.canonical_state().bit_length
