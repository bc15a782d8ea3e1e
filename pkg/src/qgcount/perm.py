"""Permutations of {1..m} acting on the right.

Figures are 1-based and composition reads left to right:
``j^(p*q) == (j^p)^q``.
"""

from __future__ import annotations

import re
from itertools import permutations as _itertools_permutations
from math import lcm
from typing import Iterable, Iterator, Sequence


class Permutation:
    """An immutable bijection of {1..m}.

    ``images[j-1]`` is the image of figure ``j``.
    """

    __slots__ = ("_images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self._images = images

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        p = cls.__new__(cls)
        p._images = images
        return p

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls._trusted(tuple(range(1, m + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], m: int) -> "Permutation":
        images = list(range(1, m + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                if not 1 <= a <= m:
                    raise ValueError(f"figure {a} outside 1..{m}")
                if a in seen:
                    raise ValueError(f"figure {a} appears in more than one cycle")
                seen.add(a)
                images[a - 1] = b
        return cls(images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def m(self) -> int:
        return len(self._images)

    def __call__(self, j: int) -> int:
        return self._images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        return power(self, k)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __lt__(self, other: "Permutation") -> bool:
        return self._images < other._images

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)})"

    def __str__(self) -> str:
        return oneline(self)

    def is_identity(self) -> bool:
        return all(x == j for j, x in enumerate(self._images, 1))

    def order(self) -> int:
        return lcm(*(len(c) for c in cycle_decomposition(self))) if self.m else 1


def _check_degree(p: Permutation, q: Permutation) -> None:
    if p.m != q.m:
        raise ValueError(f"degree mismatch: {p.m} != {q.m}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``."""
    _check_degree(p, q)
    qi = q.images
    return Permutation._trusted(tuple(qi[x - 1] for x in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.m
    for j, x in enumerate(p.images, 1):
        inv[x - 1] = j
    return Permutation._trusted(tuple(inv))


def conjugate(p: Permutation, s: Permutation) -> Permutation:
    """Return ``s^-1 * p * s``, i.e. the map ``j^s -> (j^p)^s``."""
    _check_degree(p, s)
    out = [0] * p.m
    si = s.images
    for j, x in enumerate(p.images, 1):
        out[si[j - 1] - 1] = si[x - 1]
    return Permutation._trusted(tuple(out))


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        raise ValueError("exponent must be non-negative")
    images = list(range(1, p.m + 1))
    for cycle in cycle_decomposition(p):
        length = len(cycle)
        shift = k % length
        for pos, a in enumerate(cycle):
            images[a - 1] = cycle[(pos + shift) % length]
    return Permutation._trusted(tuple(images))


def cycle_decomposition(p: Permutation) -> list[list[int]]:
    """Disjoint cycles including fixed points, each starting at its minimum, sorted by minimum."""
    seen = [False] * (p.m + 1)
    cycles = []
    for start in range(1, p.m + 1):
        if seen[start]:
            continue
        cycle = []
        j = start
        while not seen[j]:
            seen[j] = True
            cycle.append(j)
            j = p(j)
        cycles.append(cycle)
    return cycles


def all_permutations(m: int) -> Iterator[Permutation]:
    """Every element of the symmetric group on {1..m}, in lexicographic order of images."""
    for images in _itertools_permutations(range(1, m + 1)):
        yield Permutation._trusted(images)


def extend(p: Permutation, m: int) -> Permutation:
    """Embed ``p`` into degree ``m`` by fixing the extra figures."""
    if m < p.m:
        raise ValueError("cannot shrink a permutation")
    return Permutation._trusted(p.images + tuple(range(p.m + 1, m + 1)))


# -- text forms ---------------------------------------------------------------

def oneline(p: Permutation) -> str:
    return " ".join(map(str, p.images))


def cycle_string(p: Permutation) -> str:
    """Cycle notation without fixed points; the identity prints as ``()``."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycle_decomposition(p) if len(c) > 1]
    return "".join(parts) or "()"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse(text: str, m: int | None = None) -> Permutation:
    """Parse one-line notation ``"2 1 3"`` or cycle notation ``"(1 2)(3 4 5)"``.

    Cycle notation needs ``m`` unless the largest figure written is the degree.
    Commas are accepted as separators in both forms.
    """
    text = text.strip()
    if text.startswith("("):
        if _CYCLE_RE.sub("", text).strip():
            raise ValueError(f"malformed cycle notation: {text!r}")
        cycles = [
            [int(x) for x in body.replace(",", " ").split()]
            for body in _CYCLE_RE.findall(text)
        ]
        cycles = [c for c in cycles if c]
        figures = [x for c in cycles for x in c]
        if m is None:
            m = max(figures, default=0)
        return Permutation.from_cycles(cycles, m)
    p = Permutation(int(x) for x in text.replace(",", " ").split())
    if m is not None and p.m != m:
        raise ValueError(f"expected degree {m}, got {p.m}")
    return p
