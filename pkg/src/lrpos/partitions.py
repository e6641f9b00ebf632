"""Integer partitions (Young diagrams) with arbitrary-precision parts.

A partition labels an irreducible polynomial representation (Weyl
module) of GL_n.  Parts are plain Python integers, never fixed-width:
the interesting regimes involve parts whose bit length dwarfs a machine
word, and every computation here is exact.

All values are immutable and all functions are pure.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .errors import (
    HeightExceedsRank,
    MalformedInput,
    NegativePart,
    NonpositiveScale,
    NotWeaklyDecreasing,
)

_INT_TOKEN = re.compile(r"[+-]?[0-9]+")


class Partition:
    """Weakly decreasing positive integer parts, without trailing zeros.

    Canonical storage (zeros stripped) makes equality structural.
    Indexing past the height reads 0, so ``p[i]`` behaves like the
    zero-padded sequence without materializing the padding.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int):
                raise MalformedInput(f"partition part {p!r} is not an integer")
            if p < 0:
                raise NegativePart(f"partition part {p} is negative")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise NotWeaklyDecreasing(
                    f"parts {list(parts)} are not weakly decreasing"
                )
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self._parts = parts

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def height(self) -> int:
        """Number of nonzero parts (rows of the diagram)."""
        return len(self._parts)

    @property
    def size(self) -> int:
        """Sum of the parts (cells of the diagram), exact."""
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __getitem__(self, index: int) -> int:
        if index < 0:
            raise IndexError("partition parts are indexed from 0")
        return self._parts[index] if index < len(self._parts) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __lt__(self, other: "Partition") -> bool:
        return self._parts < other._parts

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)!r})"

    def __str__(self) -> str:
        return render_partition(self)

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts padded with zeros to length ``n``; height must fit."""
        if len(self._parts) > n:
            raise HeightExceedsRank(
                f"partition of height {len(self._parts)} does not fit in rank {n}"
            )
        return self._parts + (0,) * (n - len(self._parts))

    def scale(self, q: int) -> "Partition":
        """Multiply every part by the positive integer ``q``."""
        if not isinstance(q, int) or q < 1:
            raise NonpositiveScale(f"scale factor must be a positive integer, got {q!r}")
        return Partition(p * q for p in self._parts)

    def contains(self, other: "Partition") -> bool:
        """Componentwise containment of diagrams (other fits inside self)."""
        return all(other[i] <= self[i] for i in range(other.height))

    def to_json(self) -> list[str]:
        """Parts as decimal strings, preserving arbitrary precision."""
        return [str(p) for p in self._parts]

    @classmethod
    def from_json(cls, data: Iterable[str | int]) -> "Partition":
        return cls(int(p) for p in data)


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated list of decimal integers.

    The empty string and "0" denote the empty partition.  Whitespace
    around tokens is tolerated; trailing zeros are stripped.
    """
    stripped = text.strip()
    if stripped in ("", "0"):
        return Partition()
    parts = []
    for token in stripped.split(","):
        token = token.strip()
        if not _INT_TOKEN.fullmatch(token):
            raise MalformedInput(f"cannot parse partition part {token!r}")
        parts.append(int(token))
    return Partition(parts)


def render_partition(p: Partition) -> str:
    """Canonical text form: unpadded comma list, "0" for the empty partition."""
    if p.height == 0:
        return "0"
    return ",".join(str(part) for part in p.parts)


def weyl_dimension(lam: Partition, n: int) -> int:
    """Dimension of the GL_n Weyl module labeled by ``lam``.

    Computed by the classical product over positive roots,
    prod_{i<j} (lam_i - lam_j + j - i) / (j - i) with lam zero-padded to
    length n.  The quotient is exact (it counts the semistandard
    tableaux of shape lam with entries in [1, n], which the enumeration
    module verifies independently).
    """
    if n < 0:
        raise ValueError("rank must be nonnegative")
    pad = lam.padded(n)  # raises HeightExceedsRank
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= pad[i] - pad[j] + j - i
            den *= j - i
    dim, rem = divmod(num, den)
    if rem:  # cannot happen for a genuine partition
        raise AssertionError("dimension product is not integral")
    return dim


def partitions_of(total: int, max_height: int, max_part: int | None = None):
    """Yield all partitions of ``total`` with at most ``max_height`` parts.

    Descending lexicographic order, so output streams are stable.
    """
    if total < 0:
        return
    if max_part is None:
        max_part = total

    def rec(remaining: int, slots: int, cap: int):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        lowest = -(-remaining // slots)  # ceil: smallest workable first part
        for first in range(min(cap, remaining), lowest - 1, -1):
            for rest in rec(remaining - first, slots - 1, first):
                yield (first,) + rest

    for parts in rec(total, max_height, max_part):
        yield Partition(parts)
