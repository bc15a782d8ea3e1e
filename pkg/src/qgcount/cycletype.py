"""Conjugacy classes of the symmetric group on m letters, keyed by cycle type.

A cycle type is stored as the r-tuple ``(r_1, ..., r_m)`` where ``r_k`` counts
cycles of length ``k``.  Internally the hot paths use the sparse form
``((length, multiplicity), ...)`` with lengths ascending and multiplicities
positive; ``CycleType.parts`` converts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial, gcd
from typing import Iterator

from .perm import Permutation, cycle_decomposition

Parts = tuple[tuple[int, int], ...]


@dataclass(frozen=True, order=True)
class CycleType:
    r: tuple[int, ...]

    def __post_init__(self):
        r = tuple(self.r)
        object.__setattr__(self, "r", r)
        if any(x < 0 for x in r):
            raise ValueError(f"negative cycle count in {r}")
        if sum(k * x for k, x in enumerate(r, 1)) != len(r):
            raise ValueError(f"{r} does not describe a permutation of {len(r)} letters")

    @property
    def m(self) -> int:
        return len(self.r)

    @property
    def parts(self) -> Parts:
        return tuple((k, x) for k, x in enumerate(self.r, 1) if x)

    @classmethod
    def from_parts(cls, parts: Parts | dict[int, int], m: int | None = None) -> "CycleType":
        items = parts.items() if isinstance(parts, dict) else parts
        items = [(k, x) for k, x in items if x]
        if m is None:
            m = sum(k * x for k, x in items)
        r = [0] * m
        for k, x in items:
            if not 1 <= k <= m:
                raise ValueError(f"cycle length {k} outside 1..{m}")
            r[k - 1] += x
        return cls(tuple(r))

    @classmethod
    def from_lengths(cls, lengths, m: int | None = None) -> "CycleType":
        counts: dict[int, int] = {}
        for k in lengths:
            counts[k] = counts.get(k, 0) + 1
        return cls.from_parts(counts, m)

    @classmethod
    def identity(cls, m: int) -> "CycleType":
        return cls.from_parts({1: m}, m) if m else cls(())

    def lengths(self) -> list[int]:
        """Cycle lengths in ascending order."""
        return [k for k, x in self.parts for _ in range(x)]

    def partition_string(self) -> str:
        return "+".join(map(str, self.lengths()))

    def r_string(self) -> str:
        return "(" + ",".join(map(str, self.r)) + ")"

    def __str__(self) -> str:
        return self.partition_string()


_R_TUPLE_RE = re.compile(r"^\(\s*\d+(\s*,\s*\d+)*\s*\)$")


def parse_cycle_type(text: str, m: int | None = None) -> CycleType:
    """Parse ``"1+1+3"`` or ``"(2,0,1,0,0)"``."""
    text = text.strip()
    if _R_TUPLE_RE.match(text):
        t = CycleType(tuple(int(x) for x in text.strip("()").split(",")))
        if m is not None and t.m != m:
            raise ValueError(f"expected degree {m}, got {t.m}")
        return t
    if text in ("", "()"):
        return CycleType.identity(0) if not m else _bad(text)
    try:
        lengths = [int(x) for x in text.split("+")]
    except ValueError:
        _bad(text)
    if any(k < 1 for k in lengths):
        _bad(text)
    t = CycleType.from_lengths(lengths)
    if m is not None and t.m != m:
        raise ValueError(f"expected degree {m}, got {t.m}")
    return t


def _bad(text: str):
    raise ValueError(f"not a cycle type: {text!r}")


def cycle_type(p: Permutation) -> CycleType:
    return CycleType.from_lengths((len(c) for c in cycle_decomposition(p)), p.m)


# -- enumeration ----------------------------------------------------------------

def iter_parts(m: int) -> Iterator[Parts]:
    """Yield the sparse form of every cycle type of degree m.

    Order is descending lexicographic on the r-tuple, so the identity type comes
    first and the m-cycle last.
    """
    if m < 0:
        raise ValueError("degree must be non-negative")

    def rec(min_len: int, rem: int) -> Iterator[Parts]:
        if rem == 0:
            yield ()
            return
        for length in range(min_len, rem + 1):
            for mult in range(rem // length, 0, -1):
                left = rem - length * mult
                if 0 < left <= length:
                    continue
                head = ((length, mult),)
                for rest in rec(length + 1, left):
                    yield head + rest

    yield from rec(1, m)


def all_cycle_types(m: int) -> list[CycleType]:
    """Every cycle type of degree m, descending lexicographic on r (identity first)."""
    return [CycleType.from_parts(p, m) for p in iter_parts(m)]


def partition_count(m: int) -> int:
    """Number of partitions of m, by the standard coin-change recurrence."""
    ways = [1] + [0] * m
    for part in range(1, m + 1):
        for total in range(part, m + 1):
            ways[total] += ways[total - part]
    return ways[m]


# -- class invariants -------------------------------------------------------------

def centralizer_order_parts(parts: Parts) -> int:
    c = 1
    for k, x in parts:
        c *= k**x * factorial(x)
    return c


def centralizer_order(t: CycleType) -> int:
    """Order of the centralizer of any element of class t: prod k^r_k * r_k!."""
    return centralizer_order_parts(t.parts)


def class_size(t: CycleType) -> int:
    return factorial(t.m) // centralizer_order(t)


def power_parts(parts: Parts, k: int) -> Parts:
    """Sparse cycle type of sigma^k; a cycle of length l splits into gcd(l, k) cycles."""
    if k < 1:
        raise ValueError("power exponent must be positive")
    out: dict[int, int] = {}
    for length, mult in parts:
        g = gcd(length, k)
        new_len = length // g
        out[new_len] = out.get(new_len, 0) + g * mult
    return tuple(sorted(out.items()))


def power_type(t: CycleType, k: int) -> CycleType:
    return CycleType.from_parts(power_parts(t.parts, k), t.m)


def representative(t: CycleType) -> Permutation:
    """Fill cycles over 1..m consecutively, shortest cycles first."""
    cycles = []
    nxt = 1
    for length in t.lengths():
        cycles.append(list(range(nxt, nxt + length)))
        nxt += length
    return Permutation.from_cycles(cycles, t.m)


@dataclass(frozen=True)
class ClassRecord:
    """One conjugacy class together with the quantities the orbit count needs.

    ``power_centralizers[k-1]`` is the centralizer order of the class of sigma^k.
    """

    type: CycleType
    a_t: int
    c_t: int
    power_centralizers: tuple[int, ...]
    fix_count: int


def class_record(t: CycleType, memo: dict[Parts, int] | None = None) -> ClassRecord:
    if memo is None:
        memo = {}
    parts = t.parts
    pcs = []
    for k in range(1, t.m + 1):
        key = power_parts(parts, k)
        c = memo.get(key)
        if c is None:
            c = memo[key] = centralizer_order_parts(key)
        pcs.append(c)
    fix = 1
    for k, x in parts:
        fix *= pcs[k - 1] ** x
    c_t = pcs[0] if pcs else 1
    return ClassRecord(t, factorial(t.m) // c_t, c_t, tuple(pcs), fix)
