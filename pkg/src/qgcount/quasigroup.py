"""Right quasigroups with identity as Cayley tables, and their transversals.

Elements are 1..n and the identity is always element n.  ``table[i-1][j-1]``
holds ``i o j``.  Each column ``j`` read as ``i -> i o j`` is a permutation
sending n to j, and those n columns form a right transversal of the
stabilizer of n in the symmetric group on n letters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .perm import Permutation, compose, conjugate, extend, inverse, oneline, parse


class QuasigroupError(ValueError):
    """Raised when a table or transversal violates an axiom."""


@dataclass(frozen=True)
class CayleyTable:
    n: int
    table: tuple[tuple[int, ...], ...]

    def __call__(self, i: int, j: int) -> int:
        return self.table[i - 1][j - 1]

    def column(self, j: int) -> Permutation:
        return Permutation(row[j - 1] for row in self.table)

    def relabel(self, s: Permutation) -> "CayleyTable":
        """Table of the image structure under the bijection s (which must fix n)."""
        if s.m != self.n or s(self.n) != self.n:
            raise ValueError("relabeling must be a permutation of 1..n fixing n")
        si = inverse(s)
        return CayleyTable(
            self.n,
            tuple(
                tuple(s(self(si(i), si(j))) for j in range(1, self.n + 1))
                for i in range(1, self.n + 1)
            ),
        )

    def is_associative(self) -> bool:
        r = range(1, self.n + 1)
        return all(self(self(a, b), c) == self(a, self(b, c)) for a in r for b in r for c in r)

    def to_text(self) -> str:
        return "\n".join([str(self.n)] + [" ".join(map(str, row)) for row in self.table]) + "\n"

    def to_json(self) -> dict:
        return {"n": self.n, "table": [list(row) for row in self.table]}


@dataclass(frozen=True)
class Transversal:
    n: int
    perms: tuple[Permutation, ...]

    def __post_init__(self):
        if len(self.perms) != self.n:
            raise QuasigroupError(f"expected {self.n} permutations, got {len(self.perms)}")
        for i, p in enumerate(self.perms, 1):
            if p.m != self.n:
                raise QuasigroupError(f"permutation {i} has degree {p.m}, expected {self.n}")
            if p(self.n) != i:
                raise QuasigroupError(f"permutation {i} sends {self.n} to {p(self.n)}, not {i}")
        if not self.perms[-1].is_identity():
            raise QuasigroupError(f"permutation {self.n} must be the identity")

    def conjugate_by(self, s: Permutation) -> "Transversal":
        """The set {x^s}, re-indexed so that entry i again sends n to i."""
        s = extend(s, self.n)
        if s(self.n) != self.n:
            raise ValueError("conjugating element must fix n")
        out: list[Permutation | None] = [None] * self.n
        for i, p in enumerate(self.perms, 1):
            out[s(i) - 1] = conjugate(p, s)
        return Transversal(self.n, tuple(out))

    def to_lines(self) -> list[str]:
        return [oneline(p) for p in self.perms]

    def to_json(self) -> dict:
        return {"n": self.n, "transversal": self.to_lines()}


def validate(rows: Sequence[Sequence[int]]) -> CayleyTable:
    """Check the axioms and return the table; raise QuasigroupError naming the first violation."""
    n = len(rows)
    if n == 0:
        raise QuasigroupError("empty table")
    table = tuple(tuple(int(x) for x in row) for row in rows)
    for i, row in enumerate(table, 1):
        if len(row) != n:
            raise QuasigroupError(f"row {i} has {len(row)} entries, expected {n}")
        for j, x in enumerate(row, 1):
            if not 1 <= x <= n:
                raise QuasigroupError(f"entry ({i},{j}) = {x} outside 1..{n}")
    for j in range(1, n + 1):
        if table[n - 1][j - 1] != j:
            raise QuasigroupError(f"identity axiom: row {n} column {j} is {table[n - 1][j - 1]}, expected {j}")
    for i in range(1, n + 1):
        if table[i - 1][n - 1] != i:
            raise QuasigroupError(f"identity axiom: row {i} column {n} is {table[i - 1][n - 1]}, expected {i}")
    for j in range(1, n + 1):
        if len({row[j - 1] for row in table}) != n:
            raise QuasigroupError(f"column not bijective: column {j}")
    return CayleyTable(n, table)


def to_transversal(q: CayleyTable) -> Transversal:
    """Column j becomes the permutation i -> i o j."""
    return Transversal(q.n, tuple(q.column(j) for j in range(1, q.n + 1)))


def from_transversal(t: Transversal) -> CayleyTable:
    """``i o j`` is the image of n under perms[i] followed by perms[j].

    Any coset representatives work; the product only matters up to which coset
    of the stabilizer of n it lands in.
    """
    n = t.n
    rows = [
        [compose(t.perms[i - 1], t.perms[j - 1])(n) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return validate(rows)


def _fixing_last(n: int):
    for images in permutations(range(1, n)):
        yield Permutation(images + (n,))


def isomorphic_by_bijection(a: CayleyTable, b: CayleyTable) -> Permutation | None:
    """Search bijections f fixing n with b(i^f, j^f) == a(i, j)^f."""
    if a.n != b.n:
        raise ValueError("tables have different orders")
    n = a.n
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    for f in _fixing_last(n):
        fi = f.images
        for i, j in cells:
            if b.table[fi[i - 1] - 1][fi[j - 1] - 1] != fi[a.table[i - 1][j - 1] - 1]:
                break
        else:
            return f
    return None


def isomorphic_by_conjugation(a: CayleyTable, b: CayleyTable) -> Permutation | None:
    """Find s fixing n whose conjugation carries a's transversal onto b's, entry i to entry i^s."""
    if a.n != b.n:
        raise ValueError("tables have different orders")
    ta, tb = to_transversal(a).perms, to_transversal(b).perms
    for s in _fixing_last(a.n):
        if all(conjugate(x, s) == tb[s(i) - 1] for i, x in enumerate(ta, 1)):
            return s
    return None


def is_isomorphism(f: Permutation, a: CayleyTable, b: CayleyTable) -> bool:
    n = a.n
    if f.m != n or f(n) != n:
        return False
    r = range(1, n + 1)
    return all(b(f(i), f(j)) == f(a(i, j)) for i in r for j in r)


# -- file formats ---------------------------------------------------------------

def parse_text(text: str) -> CayleyTable | Transversal:
    """Read a Cayley table or a transversal, deciding by content.

    Table text: a line with n, then n rows.  Transversal text: n lines, each a
    one-line permutation of degree n.  JSON objects carry a "table" or
    "transversal" key.  Blank lines and ``#`` comments are ignored.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        if "table" in data:
            q = validate(data["table"])
            if "n" in data and data["n"] != q.n:
                raise QuasigroupError(f"declared n={data['n']} but table has order {q.n}")
            return q
        if "transversal" in data:
            perms = tuple(parse(s) for s in data["transversal"])
            return Transversal(data.get("n", len(perms)), perms)
        raise QuasigroupError('JSON must contain "table" or "transversal"')
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise QuasigroupError("empty input")
    head = lines[0].split()
    if len(head) == 1 and len(lines) == int(head[0]) + 1:
        return validate([[int(x) for x in ln.split()] for ln in lines[1:]])
    perms = tuple(parse(ln) for ln in lines)
    return Transversal(len(perms), perms)


def read_table(path: str) -> CayleyTable:
    with open(path) as fh:
        obj = parse_text(fh.read())
    if isinstance(obj, Transversal):
        return from_transversal(obj)
    return obj
