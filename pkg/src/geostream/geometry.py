"""Exact geometric primitives shared by the algorithms, generators and oracles.

Coordinates are exact: plain Python integers or :class:`fractions.Fraction`
values. Every predicate below is decided by exact comparisons, so scaling all
coordinates by a positive integer can never flip an answer and there is no
epsilon anywhere. All objects are closed sets, and touching counts as
intersecting.

Each object kind has a flat JSON form carrying a ``"kind"`` tag and
string-encoded coordinates (decimal integers, or ``"p/q"`` for non-integer
rationals), so arbitrarily large coordinates round-trip bit-exactly through
text.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Coord = Union[int, Fraction]

INTERVAL = "interval"
PERM_SEGMENT = "perm_segment"
UNIT_RECT = "unit_rect"
TWO_INTERVAL = "two_interval"

OBJECT_KINDS = (INTERVAL, PERM_SEGMENT, UNIT_RECT, TWO_INTERVAL)


def as_coord(value: int | Fraction | str) -> Coord:
    """Coerce ``value`` into an exact coordinate.

    Fractions with denominator 1 are normalised to plain ints so that equal
    coordinates have a single representation. Strings accept the same
    ``"p"`` / ``"p/q"`` syntax produced by :func:`coord_str`.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        return parse_coord(value)
    raise TypeError(f"not an exact coordinate: {value!r}")


def coord_str(value: Coord) -> str:
    """Serialize a coordinate as ``"p"`` or ``"p/q"``."""
    if isinstance(value, int):
        return str(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_coord(text: str) -> Coord:
    """Parse the output of :func:`coord_str` back into an exact coordinate."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return as_coord(Fraction(int(num), int(den)))
    return int(text)


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval [lo, hi] on the real line; zero length is allowed."""

    lo: Coord
    hi: Coord

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", as_coord(self.lo))
        object.__setattr__(self, "hi", as_coord(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @property
    def length(self) -> Coord:
        return self.hi - self.lo


@dataclass(frozen=True, slots=True)
class PermSegment:
    """Segment with its top endpoint on the line y=1 and bottom on y=0.

    Only the two x-coordinates are stored; the carrier lines are fixed.
    """

    top_x: Coord
    bottom_x: Coord

    def __post_init__(self) -> None:
        object.__setattr__(self, "top_x", as_coord(self.top_x))
        object.__setattr__(self, "bottom_x", as_coord(self.bottom_x))


@dataclass(frozen=True, slots=True)
class UnitRect:
    """Closed axis-aligned rectangle [x.lo, x.hi] x [y_bottom, y_bottom + 1]."""

    x: Interval
    y_bottom: Coord

    def __post_init__(self) -> None:
        if not isinstance(self.x, Interval):
            raise TypeError("x must be an Interval")
        object.__setattr__(self, "y_bottom", as_coord(self.y_bottom))

    @property
    def y_top(self) -> Coord:
        return self.y_bottom + 1

    @property
    def y_projection(self) -> Interval:
        return Interval(self.y_bottom, self.y_bottom + 1)


@dataclass(frozen=True, slots=True)
class TwoInterval:
    """A pair of disjoint intervals treated as a single object.

    The left member ends strictly before the right member starts.
    """

    left: Interval
    right: Interval

    def __post_init__(self) -> None:
        if not isinstance(self.left, Interval) or not isinstance(self.right, Interval):
            raise TypeError("members must be Intervals")
        if not self.left.hi < self.right.lo:
            raise ValueError(
                f"member intervals must be disjoint and ordered: "
                f"{self.left.hi} !< {self.right.lo}"
            )


GeomObject = Union[Interval, PermSegment, UnitRect, TwoInterval]

_KIND_BY_TYPE = {
    Interval: INTERVAL,
    PermSegment: PERM_SEGMENT,
    UnitRect: UNIT_RECT,
    TwoInterval: TWO_INTERVAL,
}


def kind_of(obj: GeomObject) -> str:
    """Return the kind tag for a geometric object."""
    try:
        return _KIND_BY_TYPE[type(obj)]
    except KeyError:
        raise TypeError(f"not a geometric object: {obj!r}") from None


def intervals_intersect(a: Interval, b: Interval) -> bool:
    """True iff the closed intervals share at least one point."""
    return a.lo <= b.hi and b.lo <= a.hi


def segments_intersect(a: PermSegment, b: PermSegment) -> bool:
    """True iff two segments spanning the lines y=0 and y=1 share a point.

    With all endpoints on two parallel lines this reduces to an order test:
    the segments cross iff their top order and bottom order disagree, and
    they touch iff they share an endpoint, i.e.
    (a.top - b.top) * (a.bottom - b.bottom) <= 0.
    """
    return (a.top_x - b.top_x) * (a.bottom_x - b.bottom_x) <= 0


def rects_intersect(a: UnitRect, b: UnitRect) -> bool:
    """True iff two closed unit-height rectangles share at least one point.

    Both rectangles have height exactly 1, so the y-projections overlap iff
    the bottom edges are within 1 of each other.
    """
    if not intervals_intersect(a.x, b.x):
        return False
    diff = a.y_bottom - b.y_bottom
    return -1 <= diff <= 1


def two_intervals_intersect(a: TwoInterval, b: TwoInterval) -> bool:
    """True iff any member interval of ``a`` meets any member interval of ``b``."""
    return (
        intervals_intersect(a.left, b.left)
        or intervals_intersect(a.left, b.right)
        or intervals_intersect(a.right, b.left)
        or intervals_intersect(a.right, b.right)
    )


_PREDICATE_BY_KIND = {
    INTERVAL: intervals_intersect,
    PERM_SEGMENT: segments_intersect,
    UNIT_RECT: rects_intersect,
    TWO_INTERVAL: two_intervals_intersect,
}


def objects_intersect(a: GeomObject, b: GeomObject) -> bool:
    """Intersection predicate dispatching on the (shared) object kind."""
    ka, kb = kind_of(a), kind_of(b)
    if ka != kb:
        raise TypeError(f"cannot intersect {ka} with {kb}")
    return _PREDICATE_BY_KIND[ka](a, b)


def object_to_json(obj: GeomObject) -> dict:
    """Flat JSON form of a geometric object, with a ``kind`` tag."""
    if isinstance(obj, Interval):
        return {"kind": INTERVAL, "lo": coord_str(obj.lo), "hi": coord_str(obj.hi)}
    if isinstance(obj, PermSegment):
        return {
            "kind": PERM_SEGMENT,
            "top_x": coord_str(obj.top_x),
            "bottom_x": coord_str(obj.bottom_x),
        }
    if isinstance(obj, UnitRect):
        return {
            "kind": UNIT_RECT,
            "x_lo": coord_str(obj.x.lo),
            "x_hi": coord_str(obj.x.hi),
            "y_bottom": coord_str(obj.y_bottom),
        }
    if isinstance(obj, TwoInterval):
        return {
            "kind": TWO_INTERVAL,
            "left_lo": coord_str(obj.left.lo),
            "left_hi": coord_str(obj.left.hi),
            "right_lo": coord_str(obj.right.lo),
            "right_hi": coord_str(obj.right.hi),
        }
    raise TypeError(f"not a geometric object: {obj!r}")


def object_from_json(data: dict) -> GeomObject:
    """Inverse of :func:`object_to_json`."""
    kind = data.get("kind")
    if kind == INTERVAL:
        return Interval(parse_coord(data["lo"]), parse_coord(data["hi"]))
    if kind == PERM_SEGMENT:
        return PermSegment(parse_coord(data["top_x"]), parse_coord(data["bottom_x"]))
    if kind == UNIT_RECT:
        return UnitRect(
            Interval(parse_coord(data["x_lo"]), parse_coord(data["x_hi"])),
            parse_coord(data["y_bottom"]),
        )
    if kind == TWO_INTERVAL:
        return TwoInterval(
            Interval(parse_coord(data["left_lo"]), parse_coord(data["left_hi"])),
            Interval(parse_coord(data["right_lo"]), parse_coord(data["right_hi"])),
        )
    raise ValueError(f"unknown object kind: {kind!r}")
