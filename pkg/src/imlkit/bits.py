"""World sets as int bitmasks over an indexed world list."""
from __future__ import annotations

from typing import Iterable, Iterator


def mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members(m: int) -> Iterator[int]:
    """Indices set in ``m``, ascending."""
    i = 0
    while m:
        if m & 1:
            yield i
        m >>= 1
        i += 1


def subset(a: int, b: int) -> bool:
    return a & ~b == 0


def submasks(m: int) -> Iterator[int]:
    """All subsets of ``m`` (including 0 and ``m``), ascending as integers."""
    bits = list(members(m))
    for k in range(1 << len(bits)):
        yield mask(b for j, b in enumerate(bits) if k >> j & 1)


def popcount(m: int) -> int:
    return bin(m).count("1")
