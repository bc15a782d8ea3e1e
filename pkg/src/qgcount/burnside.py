"""Orbit count of right quasigroups with identity, summed over conjugacy classes.

For a permutation sigma of cycle type t on m = n-1 letters, the number of
transversals fixed by conjugation with sigma is the product, over the cycles
of sigma, of the centralizer order of sigma^(cycle length).  Averaging over
the group and grouping equal terms by class gives

    QG(n) = (1/m!) * sum_t a_t * prod_k c(t^k)^(r_k)
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from math import factorial
from typing import Callable, Iterable, Iterator

from .cycletype import (
    ClassRecord,
    CycleType,
    Parts,
    all_cycle_types,
    centralizer_order_parts,
    class_record,
    iter_parts,
    power_parts,
    representative,
)
from .perm import cycle_string

ProgressFn = Callable[[int], None]


def _fix_count_parts(parts: Parts, memo: dict[Parts, int]) -> int:
    fix = 1
    for k, mult in parts:
        key = power_parts(parts, k)
        c = memo.get(key)
        if c is None:
            c = memo[key] = centralizer_order_parts(key)
        fix *= c**mult
    return fix


def class_fix_count(t: CycleType) -> int:
    """Number of transversals fixed by conjugation with any element of class t."""
    return _fix_count_parts(t.parts, {})


_worker_memo: dict[Parts, int] = {}


def _partial_sum(m: int, batch: list[Parts]) -> int:
    memo = _worker_memo
    fact = factorial(m)
    total = 0
    for parts in batch:
        c = memo.get(parts)
        if c is None:
            c = memo[parts] = centralizer_order_parts(parts)
        total += (fact // c) * _fix_count_parts(parts, memo)
    return total


def _batches(it: Iterable[Parts], size: int) -> Iterator[list[Parts]]:
    it = iter(it)
    while batch := list(islice(it, size)):
        yield batch


def resolve_jobs(jobs: int | str | None) -> int:
    if jobs in (None, "auto", 0):
        return os.cpu_count() or 1
    jobs = int(jobs)
    if jobs < 1:
        raise ValueError("jobs must be positive")
    return jobs


def burnside_sum(
    n: int,
    jobs: int = 1,
    progress: ProgressFn | None = None,
    batch_size: int = 20000,
) -> int:
    """Return sum over classes of a_t * fix_count for Sigma_{n-1}, without storing rows."""
    if n < 1:
        raise ValueError("order must be at least 1")
    m = n - 1
    done = 0
    total = 0
    batches = _batches(iter_parts(m), batch_size)
    if jobs <= 1:
        for batch in batches:
            total += _partial_sum(m, batch)
            done += len(batch)
            if progress:
                progress(done)
        return total
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending = []
        for batch in batches:
            pending.append((len(batch), pool.submit(_partial_sum, m, batch)))
        for size, fut in pending:
            total += fut.result()
            done += size
            if progress:
                progress(done)
    return total


def qg(n: int, jobs: int = 1, progress: ProgressFn | None = None) -> int:
    """QG(n), the number of isomorphism classes of right quasigroups with identity of order n."""
    total = burnside_sum(n, jobs=jobs, progress=progress)
    q, rem = divmod(total, factorial(n - 1))
    if rem:
        raise ArithmeticError(f"Burnside sum for n={n} not divisible by {n - 1}!")
    return q


@dataclass(frozen=True)
class CensusTable:
    n: int
    rows: tuple[ClassRecord, ...] = field(repr=False)
    total_sum: int
    qg: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "rows": [
                {
                    "partition": row.type.partition_string(),
                    "r_tuple": list(row.type.r),
                    "a_t": row.a_t,
                    "c_t": row.c_t,
                    "power_centralizers": list(row.power_centralizers),
                    "fix_count": row.fix_count,
                }
                for row in self.rows
            ],
            "total_sum": self.total_sum,
            "qg": self.qg,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CensusTable":
        rows = tuple(
            ClassRecord(
                CycleType(tuple(row["r_tuple"])),
                row["a_t"],
                row["c_t"],
                tuple(row["power_centralizers"]),
                row["fix_count"],
            )
            for row in data["rows"]
        )
        return cls(data["n"], rows, data["total_sum"], data["qg"])

    def csv_rows(self) -> list[list]:
        header = ["partition", "representative", "a_t", "c_t", "r_tuple", "power_centralizers", "fix_count"]
        out: list[list] = [header]
        for row in self.rows:
            out.append([
                row.type.partition_string(),
                cycle_string(representative(row.type)),
                row.a_t,
                row.c_t,
                row.type.r_string(),
                "(" + ",".join(map(str, row.power_centralizers)) + ")",
                row.fix_count,
            ])
        return out

    def to_text(self) -> str:
        """Aligned table: class, representative, a_t, c_t, r-tuple, power centralizers, fix."""
        rows = self.csv_rows()
        rows[0] = ["class", "represent.", "a_t", "c_t", "r", "(c_t^1,...,c_t^m)", "fix"]
        cells = [[str(x) for x in row] for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
        numeric = {2, 3, 6}
        lines = []
        for idx, r in enumerate(cells):
            line = "  ".join(
                x.rjust(w) if i in numeric and idx else x.ljust(w)
                for i, (x, w) in enumerate(zip(r, widths))
            )
            lines.append(line.rstrip())
            if idx == 0:
                lines.append("-" * len(lines[0]))
        lines.append("")
        lines.append(f"n = {self.n}")
        lines.append(f"total_sum = {self.total_sum}")
        lines.append(f"QG({self.n}) = {self.qg}")
        return "\n".join(lines)


def census(n: int) -> CensusTable:
    """Full per-class table for Sigma_{n-1}; rows follow ``all_cycle_types`` order."""
    if n < 1:
        raise ValueError("order must be at least 1")
    m = n - 1
    memo: dict[Parts, int] = {}
    rows = tuple(class_record(t, memo) for t in all_cycle_types(m))
    total = sum(row.a_t * row.fix_count for row in rows)
    q, rem = divmod(total, factorial(m))
    if rem:
        raise ArithmeticError(f"Burnside sum for n={n} not divisible by {m}!")
    return CensusTable(n, rows, total, q)


def sequence(n_max: int, jobs: int = 1) -> list[tuple[int, int]]:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return [(n, qg(n, jobs=jobs)) for n in range(1, n_max + 1)]
