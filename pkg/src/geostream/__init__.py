"""Streaming geometric independent-set and clique toolkit.

Exact geometric primitives, one-pass selection algorithms for intervals and
unit-height rectangles, an exact two-pass clique counter for interval
streams, promise-instance generators with all-or-nothing gaps, a replayable
stream harness with bit-level memory accounting, and an exact brute-force
oracle to validate everything against.
"""

from .geometry import (
    Coord,
    Interval,
    PermSegment,
    TwoInterval,
    UnitRect,
    as_coord,
    coord_str,
    intervals_intersect,
    kind_of,
    object_from_json,
    object_to_json,
    objects_intersect,
    parse_coord,
    rects_intersect,
    segments_intersect,
    two_intervals_intersect,
)
from .bitio import BitReader, BitWriter, coord_bits, interval_bits, uvarint_bits
from .streamkit import (
    KindMismatchError,
    ObjectStream,
    StreamAlgorithm,
    StreamFormatError,
    StreamStats,
    codec_roundtrip,
    dump_stream,
    dumps_stream,
    load_stream,
    loads_stream,
    run_player_partitioned,
    run_stream,
    stream_of,
)
from .interval_selection import IntervalSelector
from .rect_selection import RectSelector, WindowKey, window_of
from .interval_clique import CliqueCounter, PhaseError, UniverseViolationError
from .hardness import (
    ChainInstance,
    ChainLayout,
    DisjInstance,
    chain_layout,
    chain_nesting_report,
    clique_segments_from_disjointness,
    clique_unit_intervals_from_disjointness,
    gen_chain,
    gen_disjointness,
    instance_from_json,
    instance_to_json,
    interval_representation,
    segments_from_disjointness,
    two_intervals_from_chain,
    validate_chain,
    validate_disjointness,
)
from .oracle import (
    AdjacencyMatrix,
    CapExceededError,
    MixedKindError,
    intersection_graph,
    max_clique,
    max_independent_set,
    solve_max_independent_set,
)

__all__ = [name for name in dir() if not name.startswith("_")]
