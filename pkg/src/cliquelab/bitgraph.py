"""Bit-level network representation.

A network of order ``n`` is a reflexive, symmetric boolean adjacency matrix.
It is stored as a single row-major bit string of length ``n * n`` (row 1
first, column 1 leftmost), packed into a Python integer whose most
significant bit is string position 1.

Node indices are 1-based everywhere they are visible to callers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, Union

import numpy as np

__all__ = [
    "NetworkError",
    "FlatBits",
    "WordCounter",
    "Network",
    "network_from_rows",
    "flatten",
    "unflatten",
    "and_flat",
    "equals_flat",
    "words_for",
    "parse_net",
    "format_net",
    "read_net",
    "write_net",
    "PAPER_EXAMPLE_ROWS",
    "PAPER_EXAMPLE_FLAT",
    "paper_example",
]

DEFAULT_WORD_WIDTH = 64

# Six-node example network with a single maximal clique {2, 3, 4}.
PAPER_EXAMPLE_ROWS = (
    "100011",
    "011111",
    "011100",
    "011100",
    "110010",
    "110001",
)
PAPER_EXAMPLE_FLAT = "".join(PAPER_EXAMPLE_ROWS)


class NetworkError(ValueError):
    """Raised when a matrix or bit string is not a valid network.

    ``entry`` holds the offending 1-based ``(i, j)`` pair when there is one.
    """

    def __init__(self, message: str, entry: tuple[int, int] | None = None):
        super().__init__(message)
        self.entry = entry


def words_for(length: int, word_width: int) -> int:
    """Number of ``word_width``-bit words needed to cover ``length`` bits."""
    return -(-length // word_width)


@dataclass(frozen=True)
class FlatBits:
    """An immutable packed bit string.

    ``value`` holds the bits with string position 1 as the most significant
    of ``length`` bits.
    """

    length: int
    value: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.value < 0 or self.value.bit_length() > self.length:
            raise ValueError(f"value does not fit in {self.length} bits")

    @classmethod
    def from_string(cls, text: str) -> "FlatBits":
        text = text.strip()
        if text and set(text) - {"0", "1"}:
            bad = next(i for i, ch in enumerate(text, 1) if ch not in "01")
            raise ValueError(f"invalid bit character {text[bad - 1]!r} at position {bad}")
        return cls(len(text), int(text, 2) if text else 0)

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    def __len__(self) -> int:
        return self.length

    def bit(self, position: int) -> int:
        """Bit at 1-based ``position``."""
        if not 1 <= position <= self.length:
            raise IndexError(f"position {position} out of range [1, {self.length}]")
        return (self.value >> (self.length - position)) & 1

    @property
    def order(self) -> int:
        """Side length of the square matrix this string encodes."""
        n = math.isqrt(self.length)
        if n * n != self.length:
            raise NetworkError(f"length {self.length} is not a perfect square")
        return n


@dataclass
class WordCounter:
    """Accumulates the number of ``word_width``-bit word operations.

    With ``strict`` set, equality tests never exit early and always pay the
    full word cost.
    """

    word_width: int = DEFAULT_WORD_WIDTH
    word_ops: int = 0
    strict: bool = False

    def __post_init__(self) -> None:
        if self.word_width < 1:
            raise ValueError("word_width must be positive")

    def merge(self, other: "WordCounter") -> "WordCounter":
        if other.word_width != self.word_width or other.strict != self.strict:
            raise ValueError("cannot merge counters with different configurations")
        return WordCounter(self.word_width, self.word_ops + other.word_ops, self.strict)

    __add__ = merge


def _matrix_from_bits(n: int, value: int) -> np.ndarray:
    if n == 0:
        return np.zeros((0, 0), dtype=bool)
    digits = format(value, f"0{n * n}b").encode("ascii")
    return (np.frombuffer(digits, dtype=np.uint8) == ord("1")).reshape(n, n)


def _validate(matrix: np.ndarray) -> None:
    diagonal = np.flatnonzero(~np.diagonal(matrix))
    if diagonal.size:
        i = int(diagonal[0]) + 1
        raise NetworkError(f"entry ({i}, {i}) on the main diagonal is 0; networks are reflexive", (i, i))
    bad = np.argwhere(np.triu(matrix != matrix.T))
    if bad.size:
        i, j = (int(x) + 1 for x in bad[0])
        raise NetworkError(
            f"entry ({i}, {j}) = {int(matrix[i - 1, j - 1])} but entry ({j}, {i}) = "
            f"{int(matrix[j - 1, i - 1])}; networks are symmetric",
            (i, j),
        )


@dataclass(frozen=True)
class Network:
    """A validated reflexive, symmetric network backed by packed bits."""

    order: int
    bits: FlatBits = field(repr=False)

    def __post_init__(self) -> None:
        if self.order < 1:
            raise NetworkError("order must be a positive integer")
        if self.bits.length != self.order * self.order:
            raise NetworkError(
                f"bit string of length {self.bits.length} does not match order {self.order}"
            )
        _validate(_matrix_from_bits(self.order, self.bits.value))

    @property
    def matrix(self) -> np.ndarray:
        """A fresh read-only boolean copy of the adjacency matrix."""
        m = _matrix_from_bits(self.order, self.bits.value)
        m.flags.writeable = False
        return m

    def entry(self, i: int, j: int) -> int:
        """Adjacency value at 1-based ``(i, j)``."""
        n = self.order
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexError(f"entry ({i}, {j}) out of range for order {n}")
        return self.bits.bit((i - 1) * n + j)

    def rows(self) -> list[str]:
        s = str(self.bits)
        n = self.order
        return [s[r * n:(r + 1) * n] for r in range(n)]

    def __str__(self) -> str:
        return "\n".join(self.rows())


RowLike = Union[str, Sequence[int], Sequence[bool]]


def network_from_rows(rows: Iterable[RowLike]) -> Network:
    """Build a validated network from ``n`` rows of ``n`` bits each.

    Rows may be ``'0'``/``'1'`` strings or sequences of ints/bools.
    """
    parsed: list[str] = []
    for row in rows:
        if isinstance(row, str):
            text = row.strip()
        else:
            text = "".join("1" if int(v) else "0" for v in row)
        parsed.append(text)
    n = len(parsed)
    if n == 0:
        raise NetworkError("a network needs at least one row")
    for r, text in enumerate(parsed, 1):
        if len(text) != n:
            raise NetworkError(f"row {r} has length {len(text)}; expected {n} for a square matrix")
        if set(text) - {"0", "1"}:
            c = next(c for c, ch in enumerate(text, 1) if ch not in "01")
            raise NetworkError(f"entry ({r}, {c}) is {text[c - 1]!r}; expected '0' or '1'", (r, c))
    return Network(n, FlatBits.from_string("".join(parsed)))


def flatten(network: Network) -> FlatBits:
    return network.bits


def unflatten(bits: FlatBits | str) -> Network:
    """Split a length ``n*n`` bit string into ``n`` rows and validate."""
    if isinstance(bits, str):
        bits = FlatBits.from_string(bits)
    return Network(bits.order, bits)


def _check_lengths(a: FlatBits, b: FlatBits) -> None:
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} vs {b.length}")


def and_flat(a: FlatBits, b: FlatBits, counter: WordCounter) -> FlatBits:
    """Bitwise AND of two equal-length strings; charges one pass of words."""
    _check_lengths(a, b)
    counter.word_ops += words_for(a.length, counter.word_width)
    return FlatBits(a.length, a.value & b.value)


def _words_inspected(length: int, a: int, b: int, counter: WordCounter) -> int:
    total = words_for(length, counter.word_width)
    diff = a ^ b
    if counter.strict or not diff:
        return total
    # 0-based string position of the leftmost differing bit
    first = length - diff.bit_length()
    return first // counter.word_width + 1


def equals_flat(a: FlatBits, b: FlatBits, counter: WordCounter) -> bool:
    """Word-by-word equality, left to right.

    Stops at the first differing word unless ``counter.strict`` is set; the
    counter is charged for the words actually inspected.
    """
    _check_lengths(a, b)
    counter.word_ops += _words_inspected(a.length, a.value, b.value, counter)
    return a.value == b.value


def paper_example() -> Network:
    return network_from_rows(PAPER_EXAMPLE_ROWS)


# -- ".net" text format --------------------------------------------------------

def parse_net(text: str) -> Network:
    """Parse either the matrix form (``n`` then ``n`` rows) or the flat form."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise NetworkError("empty network file")
    if len(lines) == 1:
        return unflatten(lines[0])
    header, rows = lines[0], lines[1:]
    if not header.isdigit():
        raise NetworkError(f"first line must be the node count, got {header!r}")
    n = int(header)
    if len(rows) != n:
        raise NetworkError(f"header declares {n} rows but {len(rows)} follow")
    return network_from_rows(rows)


def format_net(network: Network, flat: bool = False) -> str:
    if flat:
        return str(network.bits) + "\n"
    return f"{network.order}\n" + "\n".join(network.rows()) + "\n"


def read_net(path: str | Path) -> Network:
    return parse_net(Path(path).read_text())


def write_net(path: str | Path, network: Network, flat: bool = False) -> None:
    Path(path).write_text(format_net(network, flat))
