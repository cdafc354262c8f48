"""Promise-instance generators whose streams have an all-or-nothing gap.

Two instance families drive the constructions:

* Shared-column instances (:class:`DisjInstance`): t rows of n columns with
  every row carrying exactly n/2t ones, every column carrying 0, 1 or t
  ones, and at most one column carrying t. The promised answer bit records
  whether a column with t ones exists.

* Chained-index instances (:class:`ChainInstance`): t-1 bit strings of
  width N together with one index per string, promising that every indexed
  bit equals a common hidden bit z.

From a shared-column instance the generators emit:

* ``segments_from_disjointness``: per one-bit, a segment between two
  horizontal lines. Top slots run left to right in column order; bottom
  slots run in reversed column order. Same-column segments are parallel,
  everything else crosses, so the largest independent set is t when a full
  column exists and 1 otherwise.
* ``clique_segments_from_disjointness``: the mirrored variant (bottom slot
  order reversed inside each column block), which complements the
  intersection graph edge-for-edge: the largest clique is t or 1.
* ``clique_unit_intervals_from_disjointness``: the same clique gap realised
  by same-length intervals, column blocks spaced too far apart to touch.
* ``interval_representation``: intervals whose intersection graph is
  identical, entry for entry, to the segment construction's: one long
  interval per one-bit in a singleton column (the long intervals pairwise
  overlap), and per slot of the full column a tiny interval inside the
  common core [n, n+1] of all long intervals (the tiny intervals pairwise
  disjoint).

From a chained-index instance, ``two_intervals_from_chain`` emits one
two-part interval per one-bit. Left members form per-party interval
stacks: all startpoints first, in index order, then all endpoints. Party
i+1's whole stack is placed in the gap just left of the startpoint of party
i's indexed interval, sized so that every descendant also stays inside that
gap; anything in the gap meets exactly the stack intervals with smaller
index. Right members repeat the construction with every bit string
reversed and live in a far-away region, so each object's two members cover
the "smaller index" and "larger index" halves of the intersection pattern.
The result: objects of parties a < i intersect everything of party i except
the indexed one, hence the largest independent set is the chain of indexed
objects (size t) when z = 1 and a single object when z = 0.

Every generator is paired with a validator that reports each promised
property as a pass/fail entry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .geometry import Interval, PermSegment, TwoInterval
from .streamkit import ObjectStream, stream_of


# ---------------------------------------------------------------------------
# shared-column (disjointness) instances


@dataclass(frozen=True)
class DisjInstance:
    """t rows of n columns, as bitmasks; bit j-1 of ``rows[i-1]`` is column j."""

    t: int
    n: int
    rows: tuple[int, ...]
    answer: int

    def ones(self, i: int) -> list[int]:
        """1-based columns where row i (1-based) has a one, ascending."""
        row = self.rows[i - 1]
        return [j + 1 for j in range(self.n) if (row >> j) & 1]

    def column_sum(self, j: int) -> int:
        return sum((row >> (j - 1)) & 1 for row in self.rows)


def gen_disjointness(n: int, t: int, answer: int, seed: int = 0) -> DisjInstance:
    """Generate a valid shared-column instance with the requested answer.

    Requires t >= 2 and n divisible by 2t. With answer 1, a seed-chosen
    column gets a one in every row and the remaining ones land in globally
    distinct columns; with answer 0 all ones land in distinct columns.
    """
    if t < 2:
        raise ValueError("need at least two players")
    if answer not in (0, 1):
        raise ValueError("answer must be 0 or 1")
    if n <= 0 or n % (2 * t) != 0:
        raise ValueError(f"n must be a positive multiple of 2t, got n={n}, t={t}")
    per_row = n // (2 * t)
    rng = random.Random(seed)
    rows = [0] * t
    if answer:
        j_star = rng.randrange(n)
        others = rng.sample([j for j in range(n) if j != j_star], t * (per_row - 1))
        for i in range(t):
            rows[i] = 1 << j_star
            for j in others[i * (per_row - 1) : (i + 1) * (per_row - 1)]:
                rows[i] |= 1 << j
    else:
        cols = rng.sample(range(n), t * per_row)
        for i in range(t):
            for j in cols[i * per_row : (i + 1) * per_row]:
                rows[i] |= 1 << j
    return DisjInstance(t=t, n=n, rows=tuple(rows), answer=answer)


def validate_disjointness(inst: DisjInstance) -> dict[str, bool]:
    """Pass/fail report for every promised property of the instance."""
    t, n = inst.t, inst.n
    shape_ok = (
        t >= 2
        and n > 0
        and len(inst.rows) == t
        and all(0 <= row < (1 << n) for row in inst.rows)
    )
    report = {"shape": shape_ok}
    if not shape_ok:
        report.update(
            row_weight=False, column_weight=False, full_columns=False, answer=False
        )
        return report
    per_row = n // (2 * t) if n % (2 * t) == 0 else None
    report["row_weight"] = per_row is not None and all(
        row.bit_count() == per_row for row in inst.rows
    )
    sums = [inst.column_sum(j) for j in range(1, n + 1)]
    report["column_weight"] = all(s in (0, 1, t) for s in sums)
    full = sum(1 for s in sums if s == t)
    report["full_columns"] = full <= 1
    report["answer"] = (inst.answer == 1) == (full >= 1)
    return report


def _require_valid_disjointness(inst: DisjInstance) -> None:
    report = validate_disjointness(inst)
    if not all(report.values()):
        failed = sorted(k for k, ok in report.items() if not ok)
        raise ValueError(f"invalid shared-column instance, failed: {failed}")


def segments_from_disjointness(inst: DisjInstance) -> ObjectStream:
    """Crossing-segment stream whose independent set is t or 1.

    Top slots: column j, slot i at x = (j-1)t + i. Bottom slots: the column
    blocks in reversed order, x = (n-j)t + i. Player i contributes one
    segment per one-bit of its row; players appear in order with boundaries.
    """
    _require_valid_disjointness(inst)
    t, n = inst.t, inst.n
    segments: list[PermSegment] = []
    players: list[tuple[int, int, int]] = []
    for i in range(1, t + 1):
        start = len(segments)
        for j in inst.ones(i):
            segments.append(PermSegment((j - 1) * t + i, (n - j) * t + i))
        players.append((i, start, len(segments)))
    return ObjectStream("perm_segment", tuple(segments), tuple(players))


def clique_segments_from_disjointness(inst: DisjInstance) -> ObjectStream:
    """Mirrored-segment stream whose clique is t or 1.

    Bottom blocks keep the column order but reverse the slot order inside
    each block: x = (j-1)t + (t+1-i). Same-column segments now cross and
    different columns stay parallel, the edge-complement of
    :func:`segments_from_disjointness` on the same instance.
    """
    _require_valid_disjointness(inst)
    t = inst.t
    segments = [
        PermSegment((j - 1) * t + i, (j - 1) * t + (t + 1 - i))
        for i in range(1, t + 1)
        for j in inst.ones(i)
    ]
    return stream_of(segments, kind="perm_segment")


def clique_unit_intervals_from_disjointness(inst: DisjInstance) -> ObjectStream:
    """Same-length-interval stream whose clique is t or 1.

    One-bit (i, j) becomes [3jt + i, 3jt + i + t]: all intervals have length
    t, starts within a column block differ by less than t (so a block is a
    clique), and consecutive blocks are separated by more than t.
    """
    _require_valid_disjointness(inst)
    t = inst.t
    intervals = [
        Interval(3 * j * t + i, 3 * j * t + i + t)
        for i in range(1, t + 1)
        for j in inst.ones(i)
    ]
    return stream_of(intervals, kind="interval")


def interval_representation(inst: DisjInstance) -> ObjectStream:
    """Interval stream isomorphic, edge for edge, to the segment stream.

    Emitted in the same order as :func:`segments_from_disjointness`: a
    one-bit in a singleton column j becomes the long interval [j, n+j];
    slot i of the full column becomes a tiny interval
    [n + (i-1)/t, n + (i-1)/t + 1/(2t)]. The long intervals pairwise
    overlap and all contain [n, n+1]; the tiny intervals sit disjointly
    inside [n, n+1].
    """
    _require_valid_disjointness(inst)
    t, n = inst.t, inst.n
    full_columns = {j for j in range(1, n + 1) if inst.column_sum(j) == t}
    intervals: list[Interval] = []
    for i in range(1, t + 1):
        for j in inst.ones(i):
            if j in full_columns:
                lo = n + Fraction(i - 1, t)
                intervals.append(Interval(lo, lo + Fraction(1, 2 * t)))
            else:
                intervals.append(Interval(j, n + j))
    return stream_of(intervals, kind="interval")


# ---------------------------------------------------------------------------
# chained-index instances


@dataclass(frozen=True)
class ChainInstance:
    """t-1 bit strings of width ``n_bits`` plus indexed-bit promise.

    Bit j-1 of ``strings[i-1]`` is position j of string i (both 1-based);
    ``indices[i-1]`` points into string i and the indexed bits all equal z.
    """

    t: int
    n_bits: int
    strings: tuple[int, ...]
    indices: tuple[int, ...]
    z: int

    def bit(self, i: int, j: int) -> int:
        """Bit at 1-based position j of 1-based string i."""
        return (self.strings[i - 1] >> (j - 1)) & 1

    def ones(self, i: int) -> list[int]:
        return [j for j in range(1, self.n_bits + 1) if self.bit(i, j)]


def gen_chain(n_bits: int, t: int, z: int, seed: int = 0) -> ChainInstance:
    """Generate a chained-index instance: indexed bits forced to z, rest random."""
    if t < 2:
        raise ValueError("need at least two parties")
    if n_bits < 1:
        raise ValueError("strings need at least one bit")
    if z not in (0, 1):
        raise ValueError("z must be 0 or 1")
    rng = random.Random(seed)
    strings: list[int] = []
    indices: list[int] = []
    for _ in range(t - 1):
        sigma = rng.randrange(1, n_bits + 1)
        mask = rng.getrandbits(n_bits)
        if z:
            mask |= 1 << (sigma - 1)
        else:
            mask &= ~(1 << (sigma - 1))
        strings.append(mask)
        indices.append(sigma)
    return ChainInstance(
        t=t, n_bits=n_bits, strings=tuple(strings), indices=tuple(indices), z=z
    )


def validate_chain(inst: ChainInstance) -> dict[str, bool]:
    """Pass/fail report for the chained-index promise."""
    t, width = inst.t, inst.n_bits
    shape_ok = (
        t >= 2
        and width >= 1
        and len(inst.strings) == t - 1
        and len(inst.indices) == t - 1
        and inst.z in (0, 1)
        and all(0 <= s < (1 << width) for s in inst.strings)
    )
    report = {"shape": shape_ok}
    if not shape_ok:
        report.update(index_range=False, promise=False)
        return report
    report["index_range"] = all(1 <= s <= width for s in inst.indices)
    report["promise"] = report["index_range"] and all(
        inst.bit(i, inst.indices[i - 1]) == inst.z for i in range(1, t)
    )
    return report


def _require_valid_chain(inst: ChainInstance) -> None:
    report = validate_chain(inst)
    if not all(report.values()):
        failed = sorted(k for k, ok in report.items() if not ok)
        raise ValueError(f"invalid chained-index instance, failed: {failed}")


@dataclass(frozen=True)
class ChainLayout:
    """Derived geometry of the two-part-interval construction.

    ``stack_lengths[i-1]`` is the nominal stack length of party i, following
    the recurrence length(t) = 2, length(i) = N * (length(i+1) + 2).
    ``anchors[i-1]`` is the global coordinate of the leftmost cell party i's
    left stack may touch, and ``right_offset`` translates the mirrored right
    region past everything on the left.
    """

    stack_lengths: tuple[int, ...]
    anchors: tuple[int, ...]
    right_offset: int


def _chain_reserves(n_bits: int, t: int) -> tuple[list[int], list[int]]:
    """Per-party stack widths W and reserves R (1-based, index 0 unused).

    W[i] is the exact cell count of party i's stack extent; R[i] adds the
    room every later party may consume to its left, so a gap of R[i] cells
    holds party i and all of its descendants. Reserves shrink geometrically
    (R[i+1] < W[i]), which is what keeps nesting strict at every level.
    """
    width = [0] * (t + 1)
    reserve = [0] * (t + 1)
    width[t] = reserve[t] = 2
    for i in range(t - 1, 0, -1):
        width[i] = n_bits * (reserve[i + 1] + 2)
        reserve[i] = width[i] + reserve[i + 1]
    return width, reserve


def _chain_anchors(
    n_bits: int, indices: tuple[int, ...], reserve: list[int], width: list[int]
) -> list[int]:
    """Anchor (leftmost cell) of each party's stack, 1-based list."""
    t = len(indices) + 1
    anchors = [0] * (t + 1)
    anchors[1] = 1
    for i in range(1, t):
        sigma = indices[i - 1]
        start_sigma = anchors[i] + (sigma - 1) * (reserve[i + 1] + 1)
        anchors[i + 1] = start_sigma - width[i + 1]
    return anchors


def _stack_interval(
    anchor: int, j: int, n_bits: int, spacing: int, offset: int = 0
) -> Interval:
    """Member j (1-based) of a stack anchored at ``anchor``.

    Startpoints are ``spacing`` apart, endpoints 1 apart, and every start
    precedes every end, so stack members pairwise intersect and the gap
    between consecutive startpoints has spacing - 1 free cells.
    """
    lo = anchor + (j - 1) * spacing
    hi = anchor + (j - 1) + n_bits * spacing
    return Interval(lo + offset, hi + offset)


def chain_layout(inst: ChainInstance) -> ChainLayout:
    """Stack lengths, anchors and the right-region offset for an instance."""
    _require_valid_chain(inst)
    t, width_bits = inst.t, inst.n_bits
    lengths = [0] * (t + 1)
    lengths[t] = 2
    for i in range(t - 1, 0, -1):
        lengths[i] = width_bits * (lengths[i + 1] + 2)
    width, reserve = _chain_reserves(width_bits, t)
    anchors = _chain_anchors(width_bits, inst.indices, reserve, width)
    right_offset = 2 * (anchors[1] + width[1])
    return ChainLayout(
        stack_lengths=tuple(lengths[1:]),
        anchors=tuple(anchors[1:]),
        right_offset=right_offset,
    )


def two_intervals_from_chain(inst: ChainInstance) -> ObjectStream:
    """Two-part-interval stream whose independent set is t (z=1) or 1 (z=0).

    Party i < t emits one object per one-bit j: the left member is stack
    member j of its left stack, the right member is stack member N+1-j of
    its mirrored stack (built from the reversed strings and reversed
    indices) shifted by the right offset. Party t emits a single two-part
    interval of width one cell on each side. Zero bits emit nothing but
    still occupy their stack slot, so coordinates never depend on the bit
    pattern, only on the indices.
    """
    _require_valid_chain(inst)
    t, n_bits = inst.t, inst.n_bits
    width, reserve = _chain_reserves(n_bits, t)
    left_anchor = _chain_anchors(n_bits, inst.indices, reserve, width)
    mirrored = tuple(n_bits + 1 - sigma for sigma in inst.indices)
    right_anchor = _chain_anchors(n_bits, mirrored, reserve, width)
    offset = 2 * (left_anchor[1] + width[1])

    objects: list[TwoInterval] = []
    players: list[tuple[int, int, int]] = []
    for i in range(1, t):
        start = len(objects)
        spacing = reserve[i + 1] + 1
        for j in inst.ones(i):
            left = _stack_interval(left_anchor[i], j, n_bits, spacing)
            right = _stack_interval(
                right_anchor[i], n_bits + 1 - j, n_bits, spacing, offset
            )
            objects.append(TwoInterval(left, right))
        players.append((i, start, len(objects)))
    start = len(objects)
    objects.append(
        TwoInterval(
            Interval(left_anchor[t], left_anchor[t] + 1),
            Interval(right_anchor[t] + offset, right_anchor[t] + 1 + offset),
        )
    )
    players.append((t, start, len(objects)))
    return ObjectStream("two_interval", tuple(objects), tuple(players))


def chain_nesting_report(inst: ChainInstance) -> dict[str, bool]:
    """Structural checks of the emitted two-part-interval stream.

    For each party i > 1, every left member must lie strictly inside the
    gap that ends at the startpoint of party i-1's indexed stack member
    (the gap spans one spacing, ending just before that startpoint); the
    mirrored condition must hold on the right; and all left members must
    precede all right members.
    """
    _require_valid_chain(inst)
    t, n_bits = inst.t, inst.n_bits
    width, reserve = _chain_reserves(n_bits, t)
    left_anchor = _chain_anchors(n_bits, inst.indices, reserve, width)
    mirrored = tuple(n_bits + 1 - sigma for sigma in inst.indices)
    right_anchor = _chain_anchors(n_bits, mirrored, reserve, width)
    offset = 2 * (left_anchor[1] + width[1])
    stream = two_intervals_from_chain(inst)
    assert stream.players is not None

    def gap(anchor: list[int], indices: tuple[int, ...], i: int, off: int):
        sigma = indices[i - 1]
        spacing = reserve[i + 1] + 1
        start_sigma = anchor[i] + (sigma - 1) * spacing + off
        return start_sigma - spacing, start_sigma

    report: dict[str, bool] = {}
    for i in range(2, t + 1):
        lo, hi = gap(left_anchor, inst.indices, i - 1, 0)
        rlo, rhi = gap(right_anchor, mirrored, i - 1, offset)
        _player, a, b = stream.players[i - 1]
        members = stream.objects[a:b]
        report[f"party_{i}_left_in_gap"] = all(
            lo < obj.left.lo and obj.left.hi < hi for obj in members
        )
        report[f"party_{i}_right_in_gap"] = all(
            rlo < obj.right.lo and obj.right.hi < rhi for obj in members
        )
    max_left = max(obj.left.hi for obj in stream.objects)
    min_right = min(obj.right.lo for obj in stream.objects)
    report["separated"] = max_left < min_right
    return report


# ---------------------------------------------------------------------------
# instance (de)serialization

DISJ_KIND = "disjointness_instance"
CHAIN_KIND = "chain_instance"


def _row_str(mask: int, n: int) -> str:
    return "".join("1" if (mask >> j) & 1 else "0" for j in range(n))


def _row_mask(text: str) -> int:
    mask = 0
    for j, ch in enumerate(text):
        if ch == "1":
            mask |= 1 << j
        elif ch != "0":
            raise ValueError(f"bad bit {ch!r} in row string")
    return mask


def instance_to_json(inst: DisjInstance | ChainInstance) -> dict:
    if isinstance(inst, DisjInstance):
        return {
            "kind": DISJ_KIND,
            "t": inst.t,
            "n": inst.n,
            "answer": inst.answer,
            "rows": [_row_str(row, inst.n) for row in inst.rows],
        }
    if isinstance(inst, ChainInstance):
        return {
            "kind": CHAIN_KIND,
            "t": inst.t,
            "n_bits": inst.n_bits,
            "z": inst.z,
            "strings": [_row_str(s, inst.n_bits) for s in inst.strings],
            "indices": list(inst.indices),
        }
    raise TypeError(f"not an instance: {inst!r}")


def instance_from_json(data: dict) -> DisjInstance | ChainInstance:
    kind = data.get("kind")
    if kind == DISJ_KIND:
        return DisjInstance(
            t=int(data["t"]),
            n=int(data["n"]),
            rows=tuple(_row_mask(r) for r in data["rows"]),
            answer=int(data["answer"]),
        )
    if kind == CHAIN_KIND:
        return ChainInstance(
            t=int(data["t"]),
            n_bits=int(data["n_bits"]),
            strings=tuple(_row_mask(s) for s in data["strings"]),
            indices=tuple(int(i) for i in data["indices"]),
            z=int(data["z"]),
        )
    raise ValueError(f"unknown instance kind: {kind!r}")
