"""Permutations of {0..n-1} stored as image tuples.

Products follow the left-to-right convention: ``x * y`` applies ``x`` first,
then ``y``.  Conjugation is ``x ** g == g**-1 * x * g``.
"""
from __future__ import annotations

import re
from math import lcm
from operator import itemgetter
from typing import Iterable, Sequence

__all__ = ["Permutation", "parse_cycles", "compose"]


def compose(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    """Image tuple of ``x`` followed by ``y``."""
    if len(x) == 1:
        return (y[x[0]],)
    return itemgetter(*x)(y) if x else ()


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} outside 0..{degree - 1}")
                if a in seen:
                    raise ValueError(f"point {a} repeated in cycle notation")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse cycle notation such as ``"(0 1)(2 3 4)"``; ``"()"`` is the identity."""
        return cls.from_cycles(parse_cycles(text), degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(compose(self.images, other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __pow__(self, e: "int | Permutation") -> "Permutation":
        if isinstance(e, Permutation):
            return e.inverse() * self * e
        base = self if e >= 0 else self.inverse()
        out = Permutation.identity(self.degree)
        for _ in range(abs(e)):
            out = out * base
        return out

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        return self.cycle_string()


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str) -> list[tuple[int, ...]]:
    text = text.strip()
    if not text:
        raise ValueError("empty cycle string")
    rest = _CYCLE.sub("", text).strip()
    if rest:
        raise ValueError(f"malformed cycle notation: {text!r}")
    out = []
    for body in _CYCLE.findall(text):
        pts = [p for p in re.split(r"[,\s]+", body.strip()) if p]
        try:
            out.append(tuple(int(p) for p in pts))
        except ValueError:
            raise ValueError(f"non-integer point in cycle notation: {text!r}") from None
    return [c for c in out if c]
