"""Cross-checks between the class-sum formula and the brute-force oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from . import oracle
from .burnside import census, class_fix_count
from .cycletype import all_cycle_types, representative
from .perm import Permutation
from .quasigroup import (
    CayleyTable,
    from_transversal,
    is_isomorphism,
    isomorphic_by_bijection,
    isomorphic_by_conjugation,
    to_transversal,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def random_table(n: int, rng: random.Random) -> CayleyTable:
    """Uniform random table: each non-identity column an independent random permutation n -> j."""
    cols = []
    for j in range(1, n):
        rest = [x for x in range(1, n + 1) if x != j]
        rng.shuffle(rest)
        cols.append(rest + [j])
    cols.append(list(range(1, n + 1)))
    return CayleyTable(n, tuple(tuple(col[i] for col in cols) for i in range(n)))


def random_relabeling(n: int, rng: random.Random) -> Permutation:
    images = list(range(1, n))
    rng.shuffle(images)
    return Permutation(images + [n])


def round_trip_tables(n: int, samples: int, rng: random.Random) -> Iterator[CayleyTable]:
    if n <= 4:
        yield from oracle.enumerate_tables(n)
    else:
        for _ in range(samples):
            yield random_table(n, rng)


def iso_pairs(n: int, pairs: int, rng: random.Random) -> Iterator[tuple[CayleyTable, CayleyTable]]:
    """Half relabeled copies (isomorphic by construction), half independent draws."""
    for k in range(pairs):
        a = random_table(n, rng)
        b = a.relabel(random_relabeling(n, rng)) if k % 2 == 0 else random_table(n, rng)
        yield a, b


def compare_iso(a: CayleyTable, b: CayleyTable) -> tuple[bool, bool]:
    """Return (the two searches agree and their witnesses check out, isomorphic)."""
    f = isomorphic_by_bijection(a, b)
    s = isomorphic_by_conjugation(a, b)
    if (f is None) != (s is None):
        return False, f is not None
    if f is None:
        return True, False
    return is_isomorphism(f, a, b) and is_isomorphism(s, a, b), True


def fix_rows(n: int, bound: int = oracle.ORACLE_BOUND, force: bool = False) -> list[tuple]:
    """Per class: (type, representative, formula fix count, direct fix count)."""
    oracle.check_bound(n, bound, force)
    rows = []
    for t in all_cycle_types(n - 1):
        rep = representative(t)
        rows.append((t, rep, class_fix_count(t), oracle.direct_fix_count(rep, n, bound, force)))
    return rows


def run_checks(
    n: int,
    seed: int = 0,
    samples: int = 10_000,
    pairs: int = 1_000,
    bound: int = oracle.ORACLE_BOUND,
    force: bool = False,
) -> list[Check]:
    oracle.check_bound(n, bound, force)
    rng = random.Random(seed)
    checks = []

    formula = census(n).qg
    direct = oracle.orbit_count(n, bound, force).orbit_count
    checks.append(Check("orbit count", formula == direct, f"formula {formula}, oracle {direct}"))

    rows = fix_rows(n, bound, force)
    bad = [str(t) for t, _, a, b in rows if a != b]
    checks.append(Check(
        "fixed points per class",
        not bad,
        f"{len(rows) - len(bad)}/{len(rows)} classes agree" + (f"; mismatched {', '.join(bad)}" if bad else ""),
    ))

    total = failed = 0
    for q in round_trip_tables(n, samples, rng):
        total += 1
        failed += from_transversal(to_transversal(q)) != q
    checks.append(Check("table/transversal round trip", failed == 0, f"{total - failed}/{total} tables"))

    total = failed = iso = 0
    for a, b in iso_pairs(n, pairs, rng):
        total += 1
        ok, found = compare_iso(a, b)
        failed += not ok
        iso += found
    checks.append(Check(
        "isomorphism tests agree",
        failed == 0,
        f"{total - failed}/{total} pairs ({iso} isomorphic)",
    ))
    return checks


def conjugated(q: CayleyTable, s: Permutation) -> CayleyTable:
    """Table of the transversal of q conjugated by s (s of degree n-1 or fixing n)."""
    return from_transversal(to_transversal(q).conjugate_by(s))
