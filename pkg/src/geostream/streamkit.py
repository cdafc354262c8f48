"""Replayable object streams, multi-pass execution and memory accounting.

Streams are materialized sequences of geometric objects with an optional
partition into consecutive per-player segments; the partition marks where
the state of a streaming algorithm would be handed from one player to the
next. Algorithms see one object at a time and are charged, after every
arrival, for the exact bit length of a canonical serialization of their
state (see :mod:`geostream.bitio`), so the recorded peaks and handoff sizes
are implementation-independent quantities.

The on-disk format is JSONL: a header record ``{"kind", "count",
"players"?}`` followed by one object per line in the flat JSON form of
:mod:`geostream.geometry`. Player ranges are ``[player, start, end]``
half-open index pairs covering the stream in order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Sequence

from .geometry import GeomObject, kind_of, object_from_json, object_to_json

MIXED = "mixed"


class KindMismatchError(TypeError):
    """An algorithm received an object kind it does not accept."""

    def __init__(self, position: int, kind: str, expected: str) -> None:
        super().__init__(
            f"object at position {position} has kind {kind!r}, expected {expected!r}"
        )
        self.position = position
        self.kind = kind
        self.expected = expected


class StreamFormatError(ValueError):
    """A stream file could not be parsed; carries the 1-based line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class ObjectStream:
    """An ordered, replayable sequence of same-kind (or mixed) objects.

    ``players``, when present, is a tuple of ``(player, start, end)`` ranges
    that partition ``objects`` contiguously in player order 1..t.
    """

    kind: str
    objects: tuple[GeomObject, ...]
    players: tuple[tuple[int, int, int], ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", tuple(self.objects))
        if self.kind != MIXED:
            for obj in self.objects:
                if kind_of(obj) != self.kind:
                    raise ValueError(
                        f"stream of kind {self.kind!r} contains a {kind_of(obj)!r}"
                    )
        if self.players is not None:
            ranges = tuple((int(p), int(a), int(b)) for p, a, b in self.players)
            object.__setattr__(self, "players", ranges)
            cursor = 0
            for rank, (player, start, end) in enumerate(ranges, start=1):
                if player != rank or start != cursor or end < start:
                    raise ValueError("player ranges must partition the stream in order")
                cursor = end
            if cursor != len(self.objects):
                raise ValueError("player ranges must cover the whole stream")

    def __len__(self) -> int:
        return len(self.objects)

    def __iter__(self) -> Iterator[GeomObject]:
        return iter(self.objects)


def stream_of(
    objects: Iterable[GeomObject],
    kind: str | None = None,
    players: Sequence[tuple[int, int, int]] | None = None,
) -> ObjectStream:
    """Build a stream, inferring the kind tag from the objects if uniform."""
    objs = tuple(objects)
    if kind is None:
        kinds = {kind_of(o) for o in objs}
        if not kinds:
            raise ValueError("cannot infer the kind of an empty stream")
        kind = kinds.pop() if len(kinds) == 1 else MIXED
    return ObjectStream(kind, objs, tuple(players) if players is not None else None)


@dataclass(frozen=True)
class StreamStats:
    """Accounting record for one run: work done and memory used.

    ``items`` counts process() calls (stream length times passes);
    ``peak_state_bits`` is the largest canonical state size seen at any
    point of the run; ``handoff_bits`` lists the state size at each player
    boundary when the run was player-partitioned.
    """

    items: int
    passes: int
    peak_state_bits: int
    handoff_bits: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.passes < 1:
            raise ValueError("a run has at least one pass")
        if self.handoff_bits and self.peak_state_bits < max(self.handoff_bits):
            raise ValueError("peak below a recorded handoff")

    def to_json(self) -> dict:
        return {
            "items": self.items,
            "passes": self.passes,
            "peak_state_bits": self.peak_state_bits,
            "handoff_bits": list(self.handoff_bits),
        }


class StreamAlgorithm:
    """Contract for one-object-at-a-time algorithms run by this harness.

    ``state_size_bits()`` must equal the bit length of the canonical
    serialization of the current state, and ``result()`` must not mutate
    state. ``finish_pass()`` is invoked between passes so two-pass
    algorithms can switch phases without the harness knowing internals.
    """

    input_kind: str = MIXED

    def process(self, obj: GeomObject) -> None:
        raise NotImplementedError

    def finish_pass(self) -> None:  # noqa: B027 - deliberate no-op default
        pass

    def result(self) -> Any:
        raise NotImplementedError

    def state_size_bits(self) -> int:
        raise NotImplementedError


def _feed(alg: StreamAlgorithm, stream: ObjectStream) -> int:
    """Feed every object once; returns the peak state bits seen."""
    peak = alg.state_size_bits()
    expected = alg.input_kind
    for position, obj in enumerate(stream):
        actual = kind_of(obj)
        if expected != MIXED and actual != expected:
            raise KindMismatchError(position, actual, expected)
        alg.process(obj)
        bits = alg.state_size_bits()
        if bits > peak:
            peak = bits
    return peak


def run_stream(
    alg: StreamAlgorithm, stream: ObjectStream, passes: int = 1
) -> tuple[Any, StreamStats]:
    """Feed the whole stream ``passes`` times and account the state size.

    ``finish_pass`` runs between consecutive passes. Two runs on identical
    inputs produce identical results and identical stats.
    """
    if passes < 1:
        raise ValueError("passes must be >= 1")
    peak = alg.state_size_bits()
    for p in range(passes):
        if p:
            alg.finish_pass()
            peak = max(peak, alg.state_size_bits())
        peak = max(peak, _feed(alg, stream))
    stats = StreamStats(
        items=len(stream) * passes, passes=passes, peak_state_bits=peak
    )
    return alg.result(), stats


def run_player_partitioned(
    alg: StreamAlgorithm, stream: ObjectStream
) -> tuple[Any, StreamStats]:
    """Single pass recording the state size at every player boundary.

    Equivalent to ``run_stream(alg, stream, 1)`` except that
    ``stats.handoff_bits`` holds the canonical state size at each of the
    t - 1 handoff points.
    """
    if stream.players is None:
        raise ValueError("stream has no player boundaries")
    # One handoff after each player but the last; ends are non-decreasing and
    # may repeat when a player contributed nothing.
    ends = [end for _player, _start, end in stream.players[:-1]]
    handoffs: list[int] = []
    expected = alg.input_kind
    bits = alg.state_size_bits()
    peak = bits
    cursor = 0
    while cursor < len(ends) and ends[cursor] == 0:
        handoffs.append(bits)
        cursor += 1
    for position, obj in enumerate(stream):
        actual = kind_of(obj)
        if expected != MIXED and actual != expected:
            raise KindMismatchError(position, actual, expected)
        alg.process(obj)
        bits = alg.state_size_bits()
        if bits > peak:
            peak = bits
        done = position + 1
        while cursor < len(ends) and ends[cursor] == done:
            handoffs.append(bits)
            cursor += 1
    stats = StreamStats(
        items=len(stream),
        passes=1,
        peak_state_bits=peak,
        handoff_bits=tuple(handoffs),
    )
    return alg.result(), stats


def dumps_stream(stream: ObjectStream) -> str:
    """Serialize a stream to JSONL text (header line plus one object per line)."""
    header: dict[str, Any] = {"kind": stream.kind, "count": len(stream)}
    if stream.players is not None:
        header["players"] = [list(r) for r in stream.players]
    lines = [json.dumps(header)]
    lines.extend(json.dumps(object_to_json(obj)) for obj in stream)
    return "\n".join(lines) + "\n"


def loads_stream(text: str) -> ObjectStream:
    """Parse JSONL text back into a stream; errors carry line numbers."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise StreamFormatError(1, "missing header record")
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise StreamFormatError(1, f"bad header: {exc}") from exc
    if not isinstance(header, dict) or "kind" not in header or "count" not in header:
        raise StreamFormatError(1, "header must carry 'kind' and 'count'")
    count = header["count"]
    objects: list[GeomObject] = []
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        try:
            objects.append(object_from_json(json.loads(raw)))
        except (json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
            raise StreamFormatError(lineno, str(exc)) from exc
    if len(objects) != count:
        raise StreamFormatError(
            len(lines), f"header says {count} objects, found {len(objects)}"
        )
    players = header.get("players")
    ranges = tuple(tuple(r) for r in players) if players is not None else None
    try:
        return ObjectStream(header["kind"], tuple(objects), ranges)
    except ValueError as exc:
        raise StreamFormatError(1, str(exc)) from exc


def dump_stream(stream: ObjectStream, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_stream(stream))


def load_stream(path: str) -> ObjectStream:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_stream(fh.read())


def codec_roundtrip(stream: ObjectStream) -> ObjectStream:
    """Serialize and reparse a stream; the result is element-wise identical."""
    return loads_stream(dumps_stream(stream))
