"""Exact maximum-clique size for interval streams over a bounded universe.

Intervals have integer endpoints in 1..U. The first pass keeps one counter
per coordinate and increments every counter covered by an arriving interval,
endpoints included. Intervals on a line have the Helly property, so the
largest clique equals the deepest point, and the depth profile can only
change at endpoints; the largest counter is therefore exactly the clique
number, and the smallest coordinate attaining it is kept as a witness.
A second pass emits precisely the intervals covering the witness coordinate,
which form a clique of that size.

For accounting, counters serialize with one uniform width of
ceil(log2(max_count + 1)) bits, recomputed per state, so the canonical
pass-1 state tracks U * log2(clique size) plus a small header. After the
first pass the counters are dropped: only the witness survives, and the
pass-2 output either goes to a caller-supplied sink (no state growth) or is
collected and then charged to the state.
"""

from __future__ import annotations

from typing import Callable

from .bitio import BitWriter
from .geometry import INTERVAL, Interval
from .streamkit import StreamAlgorithm


class UniverseViolationError(ValueError):
    """An interval endpoint was non-integer or outside 1..U."""


class PhaseError(RuntimeError):
    """A pass-2 operation was invoked before the first pass was finished."""


class CliqueCounter(StreamAlgorithm):
    """Two-pass exact clique computation for integer intervals in 1..U."""

    input_kind = INTERVAL

    def __init__(
        self,
        universe: int,
        collect: bool = True,
        sink: Callable[[Interval], None] | None = None,
    ) -> None:
        if universe < 1:
            raise ValueError("universe must hold at least one coordinate")
        self.universe = universe
        self._counts: list[int] | None = [0] * universe
        self._size = 0
        self._witness: int | None = None
        self._phase = 1
        self._collect = collect and sink is None
        self._sink = sink
        self._clique: list[Interval] = []

    def _check(self, obj: Interval) -> tuple[int, int]:
        lo, hi = obj.lo, obj.hi
        if not isinstance(lo, int) or not isinstance(hi, int):
            raise UniverseViolationError(f"non-integer endpoints: [{lo}, {hi}]")
        if lo < 1 or hi > self.universe:
            raise UniverseViolationError(
                f"[{lo}, {hi}] outside universe 1..{self.universe}"
            )
        return lo, hi

    def process(self, obj: Interval) -> None:
        lo, hi = self._check(obj)
        if self._phase == 1:
            counts = self._counts
            assert counts is not None
            for c in range(lo - 1, hi):
                counts[c] += 1
        else:
            if self.pass2_filter(obj):
                if self._sink is not None:
                    self._sink(obj)
                elif self._collect:
                    self._clique.append(obj)

    def _scan(self) -> tuple[int, int | None]:
        counts = self._counts
        assert counts is not None
        size = max(counts, default=0)
        if size == 0:
            return 0, None
        return size, counts.index(size) + 1

    def finish_pass(self) -> None:
        """Close pass 1: freeze (size, witness) and drop the counters."""
        if self._phase == 1:
            self._size, self._witness = self._scan()
            self._counts = None
            self._phase = 2

    def omega(self) -> tuple[int, int | None]:
        """Clique size and witness coordinate; requires pass 1 complete."""
        if self._phase == 1:
            raise PhaseError("pass 1 not finished; call finish_pass() first")
        return self._size, self._witness

    def pass2_filter(self, obj: Interval) -> bool:
        """True iff ``obj`` covers the witness coordinate found in pass 1."""
        if self._phase == 1:
            raise PhaseError("pass-2 filter invoked before finish_pass()")
        lo, hi = self._check(obj)
        return self._witness is not None and lo <= self._witness <= hi

    def result(self):
        """Pass 1: (size, witness coordinate). Pass 2: the witness clique."""
        if self._phase == 1:
            return self._scan()
        return tuple(self._clique)

    def write_canonical(self, writer: BitWriter) -> None:
        writer.write_uvarint(self.universe)
        if self._phase == 1:
            counts = self._counts
            assert counts is not None
            width = max(counts, default=0).bit_length()
            writer.write_uvarint(width)
            for value in counts:
                writer.write_uint(value, width)
            writer.write_flag(False)
        else:
            writer.write_uvarint(0)
            writer.write_flag(True)
            writer.write_flag(self._witness is not None)
            if self._witness is not None:
                writer.write_uvarint(self._witness)
                writer.write_uvarint(self._size)
            writer.write_uvarint(len(self._clique))
            for iv in self._clique:
                writer.write_interval(iv)

    def canonical_state(self) -> BitWriter:
        writer = BitWriter()
        self.write_canonical(writer)
        return writer

    def state_size_bits(self) -> int:
        return self.canonical_state().bit_length
