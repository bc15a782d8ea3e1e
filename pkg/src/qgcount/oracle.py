"""Brute-force ground truth for small orders.

Enumerates every right quasigroup with identity of order n, then counts orbits
and fixed points of the relabeling action directly.  Nothing here uses the
class-sum machinery in ``burnside`` or ``cycletype``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterator

import numpy as np

from .perm import Permutation, all_permutations, extend, inverse
from .quasigroup import CayleyTable

ORACLE_BOUND = 5


class OracleBoundError(ValueError):
    pass


def check_bound(n: int, bound: int = ORACLE_BOUND, force: bool = False) -> None:
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > bound and not force:
        raise OracleBoundError(
            f"oracle refuses n={n}: bound is {bound} "
            f"(order {n} has {factorial(n - 1) ** (n - 1)} tables); pass force to override"
        )


def _column_choices(n: int, j: int) -> list[tuple[int, ...]]:
    """Permutations i -> i o j with n -> j, lexicographic in their images."""
    rest = [x for x in range(1, n + 1) if x != j]
    return [p + (j,) for p in permutations(rest)]


def enumerate_tables(n: int, bound: int = ORACLE_BOUND, force: bool = False) -> Iterator[CayleyTable]:
    """Yield every valid table of order n once; column 1 varies slowest."""
    check_bound(n, bound, force)
    identity_col = tuple(range(1, n + 1))
    choices = [_column_choices(n, j) for j in range(1, n)]
    for cols in product(*choices):
        cols = cols + (identity_col,)
        yield CayleyTable(n, tuple(tuple(col[i] for col in cols) for i in range(n)))


@lru_cache(maxsize=None)
def table_array(n: int) -> np.ndarray:
    """All tables of order n as an (N, n, n) array, in ``enumerate_tables`` order."""
    choices = [np.array(_column_choices(n, j), dtype=np.int8) for j in range(1, n)]
    counts = [len(c) for c in choices]
    total = int(np.prod(counts, dtype=np.int64)) if counts else 1
    out = np.empty((total, n, n), dtype=np.int8)
    out[:, :, n - 1] = np.arange(1, n + 1, dtype=np.int8)
    if counts:
        idx = np.indices(counts).reshape(len(counts), -1)
        for j, c in enumerate(choices):
            out[:, :, j] = c[idx[j]]
    out.setflags(write=False)
    return out


def _keys(tables: np.ndarray) -> np.ndarray:
    """Base-n integer key of the non-forced cells (rows and columns 1..n-1)."""
    n = tables.shape[1]
    cells = tables[:, : n - 1, : n - 1].reshape(len(tables), -1).astype(np.int64) - 1
    weights = n ** np.arange(cells.shape[1], dtype=np.int64)
    return cells @ weights


def _relabel(tables: np.ndarray, s: Permutation) -> np.ndarray:
    """Vectorized ``table'[i][j] = s(table[s^-1 i][s^-1 j])``."""
    si = np.array(inverse(s).images, dtype=np.intp) - 1
    lut = np.array((0,) + s.images, dtype=np.int8)
    return lut[tables[:, si][:, :, si]]


def _as_full(sigma: Permutation, n: int) -> Permutation:
    if sigma.m == n - 1:
        return extend(sigma, n)
    if sigma.m == n and sigma(n) == n:
        return sigma
    raise ValueError(f"sigma must have degree {n - 1} (or degree {n} fixing {n})")


@dataclass(frozen=True)
class OrbitCensus:
    n: int
    total_structures: int
    orbit_count: int
    orbit_size_histogram: dict[int, int]

    @property
    def orbit_sizes(self) -> list[int]:
        return [size for size, k in sorted(self.orbit_size_histogram.items()) for _ in range(k)]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total_structures": self.total_structures,
            "orbit_count": self.orbit_count,
            "orbit_size_histogram": {str(k): v for k, v in sorted(self.orbit_size_histogram.items())},
        }


def orbit_labels(n: int, bound: int = ORACLE_BOUND, force: bool = False) -> np.ndarray:
    """For each enumerated table, the smallest key in its relabeling orbit."""
    check_bound(n, bound, force)
    tables = table_array(n)
    label = _keys(tables)
    for s in all_permutations(n - 1):
        s = extend(s, n)
        if not s.is_identity():
            np.minimum(label, _keys(_relabel(tables, s)), out=label)
    return label


def orbit_count(n: int, bound: int = ORACLE_BOUND, force: bool = False) -> OrbitCensus:
    labels = orbit_labels(n, bound, force)
    _, sizes = np.unique(labels, return_counts=True)
    hist = Counter(int(x) for x in sizes)
    return OrbitCensus(n, len(labels), len(sizes), dict(sorted(hist.items())))


def direct_fix_count(sigma: Permutation, n: int, bound: int = ORACLE_BOUND, force: bool = False) -> int:
    """Number of order-n tables left unchanged by relabeling with sigma."""
    check_bound(n, bound, force)
    s = _as_full(sigma, n)
    tables = table_array(n)
    return int(np.count_nonzero(_keys(_relabel(tables, s)) == _keys(tables)))


def stabilizer_order(q: CayleyTable) -> int:
    """Number of relabelings fixing n that leave q unchanged."""
    return sum(1 for s in all_permutations(q.n - 1) if q.relabel(extend(s, q.n)) == q)


def orbit_representatives(n: int, bound: int = ORACLE_BOUND, force: bool = False) -> list[CayleyTable]:
    """One table per orbit (the first one enumerated), in enumeration order."""
    labels = orbit_labels(n, bound, force)
    _, first = np.unique(labels, return_index=True)
    tables = table_array(n)
    return [array_to_table(tables[i]) for i in sorted(first)]


def array_to_table(arr: np.ndarray) -> CayleyTable:
    return CayleyTable(arr.shape[0], tuple(tuple(int(x) for x in row) for row in arr))
