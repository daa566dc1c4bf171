"""Persistence pairs and diagrams."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .simplex_tree import Simplex


@dataclass(frozen=True)
class PersistencePair:
    """One diagram point: a class of dimension ``dim`` born at ``birth``
    and destroyed at ``death`` (infinite for essential classes).

    The creator/killer simplices are carried for inspection only; diagram
    comparison ignores them, as reordering the filtration may change which
    simplex gets paired without changing the diagram.
    """

    dim: int
    birth: float
    death: float
    creator: Simplex | None = None
    killer: Simplex | None = None

    @property
    def essential(self) -> bool:
        return math.isinf(self.death)

    @property
    def triple(self) -> tuple[int, float, float]:
        return (self.dim, self.birth, self.death)


class PersistenceDiagram:
    """A multiset of (dim, birth, death) points."""

    def __init__(self, pairs: Iterable[PersistencePair] = ()):
        self.pairs = sorted(
            pairs,
            key=lambda q: (q.dim, q.birth, q.death, q.creator or (), q.killer or ()),
        )

    def __iter__(self) -> Iterator[PersistencePair]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PersistenceDiagram):
            return NotImplemented
        return self.multiset() == other.multiset()

    def __repr__(self) -> str:
        return f"PersistenceDiagram({len(self.pairs)} pairs)"

    def triples(self) -> list[tuple[int, float, float]]:
        return [q.triple for q in self.pairs]

    def multiset(self) -> Counter:
        return Counter(q.triple for q in self.pairs)

    def betti(self) -> dict[int, int]:
        """Essential-class count per dimension."""
        out: dict[int, int] = {}
        for q in self.pairs:
            if q.essential:
                out[q.dim] = out.get(q.dim, 0) + 1
        return out


def diagram_equal(d1: PersistenceDiagram, d2: PersistenceDiagram) -> bool:
    """Multiset equality of (dim, birth, death) points."""
    return d1.multiset() == d2.multiset()
