"""Bit-exact canonical encodings used for memory accounting.

The stream harness charges an algorithm for the exact bit length of a
canonical, self-delimiting serialization of its state. The encoding
vocabulary is deliberately small:

* flag: a single bit;
* uint(w): an unsigned integer in exactly w bits (big-endian);
* uvarint: little-endian base-128 groups, 1 continuation bit + 7 payload
  bits per group, so a value n costs 8 * ceil(max(bitlen(n), 1) / 7) bits;
* coord: [fraction flag][sign flag][uvarint |numerator|] plus, for
  non-integer rationals, [uvarint denominator].

Writers keep (value, width) pairs, so measuring is O(1) per field and
packing to bytes happens only on demand.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import Coord, Interval


def uvarint_bits(n: int) -> int:
    """Bit cost of encoding ``n >= 0`` as a uvarint."""
    if n < 0:
        raise ValueError("uvarint encodes non-negative integers")
    return 8 * ((max(n.bit_length(), 1) + 6) // 7)


def coord_bits(c: Coord) -> int:
    """Bit cost of encoding an exact coordinate."""
    if isinstance(c, int):
        return 2 + uvarint_bits(abs(c))
    return 2 + uvarint_bits(abs(c.numerator)) + uvarint_bits(c.denominator)


def interval_bits(iv: Interval) -> int:
    """Bit cost of encoding a closed interval (two coordinates)."""
    return coord_bits(iv.lo) + coord_bits(iv.hi)


class BitWriter:
    """Accumulates fixed-width fields; length is exact in bits."""

    def __init__(self) -> None:
        self._fields: list[tuple[int, int]] = []
        self._bits = 0

    @property
    def bit_length(self) -> int:
        return self._bits

    def write_uint(self, value: int, width: int) -> None:
        if value < 0 or (width < value.bit_length()):
            raise ValueError(f"{value} does not fit in {width} bits")
        self._fields.append((value, width))
        self._bits += width

    def write_flag(self, flag: bool) -> None:
        self.write_uint(1 if flag else 0, 1)

    def write_uvarint(self, n: int) -> None:
        if n < 0:
            raise ValueError("uvarint encodes non-negative integers")
        while True:
            group = n & 0x7F
            n >>= 7
            self.write_uint(1 if n else 0, 1)
            self.write_uint(group, 7)
            if not n:
                break

    def write_coord(self, c: Coord) -> None:
        if isinstance(c, int):
            self.write_flag(False)
            self.write_flag(c < 0)
            self.write_uvarint(abs(c))
        elif isinstance(c, Fraction):
            self.write_flag(True)
            self.write_flag(c < 0)
            self.write_uvarint(abs(c.numerator))
            self.write_uvarint(c.denominator)
        else:
            raise TypeError(f"not a coordinate: {c!r}")

    def write_interval(self, iv: Interval) -> None:
        self.write_coord(iv.lo)
        self.write_coord(iv.hi)

    def to_bytes(self) -> bytes:
        """Pack all fields into bytes, padding the tail with zero bits."""
        acc = 0
        for value, width in self._fields:
            acc = (acc << width) | value
        pad = (-self._bits) % 8
        acc <<= pad
        return acc.to_bytes((self._bits + pad) // 8, "big")


class BitReader:
    """Reads back the fields written by :class:`BitWriter`."""

    def __init__(self, data: bytes, bit_length: int | None = None) -> None:
        self._data = data
        self._pos = 0
        self._limit = 8 * len(data) if bit_length is None else bit_length

    @property
    def bits_left(self) -> int:
        return self._limit - self._pos

    def read_uint(self, width: int) -> int:
        if self._pos + width > self._limit:
            raise EOFError("read past end of bit stream")
        value = 0
        pos = self._pos
        for _ in range(width):
            byte = self._data[pos >> 3]
            value = (value << 1) | ((byte >> (7 - (pos & 7))) & 1)
            pos += 1
        self._pos = pos
        return value

    def read_flag(self) -> bool:
        return bool(self.read_uint(1))

    def read_uvarint(self) -> int:
        shift = 0
        n = 0
        while True:
            more = self.read_uint(1)
            n |= self.read_uint(7) << shift
            shift += 7
            if not more:
                return n

    def read_coord(self) -> Coord:
        is_fraction = self.read_flag()
        negative = self.read_flag()
        num = self.read_uvarint()
        if is_fraction:
            den = self.read_uvarint()
            value: Coord = Fraction(num, den)
        else:
            value = num
        return -value if negative else value

    def read_interval(self) -> Interval:
        lo = self.read_coord()
        hi = self.read_coord()
        return Interval(lo, hi)
