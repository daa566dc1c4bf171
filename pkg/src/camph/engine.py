"""Cocycle-tracking persistence computation.

Simplices enter in filtration order. For each one the engine sums the
annotations of its boundary faces with alternating signs (signs collapse
over Z_2 but the code path is field-generic): a vanishing sum starts a
fresh cocycle class in the simplex's dimension, a nonvanishing sum
destroys the youngest class contributing to it one dimension below and
pairs that class's creator with the new simplex. Live classes at the end
become essential pairs.

Two insertion-order strategies are available: deferring each creator
until one of its cofaces arrives, and reordering equal-value blocks; both
leave the diagram unchanged.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .annotations import (
    ZERO,
    AnnotationVector,
    CompressedAnnotationMatrix,
    negate_annotation,
    sum_annotations,
)
from .diagram import PersistenceDiagram, PersistencePair
from .errors import MissingFace, SlotAlreadyAssigned
from .field import OpCountingField, PrimeField
from .reorder import reordered_filtration
from .simplex_tree import Simplex, SimplexTree
from .stats import RunStats, StatsCollector


@dataclass
class EngineOptions:
    lazy: bool = True
    reorder: bool = True
    record_stats: bool = False
    emit_zero_length: bool = False
    debug: bool = False


@dataclass(frozen=True)
class Created:
    """The inserted simplex started a new cocycle class in this row."""

    row: int


@dataclass(frozen=True)
class Killed:
    """The inserted simplex destroyed a class and produced a pair."""

    row: int
    pair: PersistencePair


InsertionOutcome = Created | Killed


class PersistenceEngine:
    """Drives one filtration over one coefficient field.

    Strictly sequential; independent runs may share the (frozen) complex.
    """

    def __init__(
        self,
        complex: SimplexTree,
        field: PrimeField,
        options: EngineOptions | None = None,
    ):
        if not complex.finalized:
            raise ValueError("the complex must be finalized first")
        self.complex = complex
        self.options = options or EngineOptions()
        if self.options.record_stats and not isinstance(field, OpCountingField):
            field = OpCountingField(field.p)
        self.field = field
        self._matrices: dict[int, CompressedAnnotationMatrix] = {}
        self._slots: dict[Simplex, int] = {}
        self._slot_counts: dict[int, int] = {}
        # per dimension: live row -> (creator simplex, birth value, seq no)
        self._creators: dict[int, dict[int, tuple[Simplex, float, int]]] = {}
        self._pairs: list[PersistencePair] = []
        self._marked: dict[Simplex, int] = {}  # simplex -> reserved row
        self._seq = 0
        self._finished = False
        self._collector = StatsCollector() if self.options.record_stats else None

    # ------------------------------------------------------------------
    # insertion

    def insert(self, simplex) -> InsertionOutcome:
        """Standard insertion; every face must already be inserted."""
        simplex = tuple(sorted(simplex))
        if simplex in self._slots:
            raise SlotAlreadyAssigned(f"simplex {simplex} was already inserted")
        self._marked.pop(simplex, None)
        a_bd = self._boundary_annotation(simplex)
        if not a_bd:
            return Created(self._insert_creator(simplex))
        return self._insert_killer(simplex, a_bd)

    def lazy_evaluation(self, simplex) -> None:
        """Deferred insertion: creators wait until a coface needs them.

        A marked simplex goes in directly as a creator, skipping its
        boundary sum. Otherwise marked boundary faces are recursively
        forced in first; then a nonzero boundary sum destroys as usual
        while a zero sum only marks the simplex and defers it.

        Marking reserves the simplex's row index immediately, so a
        deferred class keeps the seniority of its original filtration
        position however late its column materializes. Without this, two
        deferred creators whose first cofaces arrive in opposite order
        would swap ages, and the destruction rule (remove the
        maximal-index row) would pair them differently than the standard
        insertion order does, changing the diagram.
        """
        simplex = tuple(sorted(simplex))
        if simplex in self._marked:
            row = self._marked.pop(simplex)
            self._insert_creator(simplex, row=row)
            return
        if simplex in self._slots:
            raise SlotAlreadyAssigned(f"simplex {simplex} was already inserted")
        if len(simplex) > 1:
            deferred = [
                face
                for face, _ in self.complex.boundary(simplex)
                if face in self._marked
            ]
            deferred.sort(key=self._marked.__getitem__)
            for face in deferred:
                self.lazy_evaluation(face)
        a_bd = self._boundary_annotation(simplex)
        if a_bd:
            self._insert_killer(simplex, a_bd)
        else:
            self._marked[simplex] = self._matrix(len(simplex) - 1).reserve_row()

    def finish(self) -> PersistenceDiagram:
        """Flush deferred creators, close essential classes, emit the diagram."""
        if self._finished:
            raise RuntimeError("finish() was already called")
        self._finished = True
        for simplex in list(self._marked):
            row = self._marked.pop(simplex)
            self._insert_creator(simplex, row=row)
        pairs = list(self._pairs)
        for dim in sorted(self._creators):
            rows = self._creators[dim]
            for row in sorted(rows):
                creator, birth, _ = rows[row]
                pairs.append(PersistencePair(dim, birth, math.inf, creator, None))
        if not self.options.emit_zero_length:
            pairs = [q for q in pairs if q.birth != q.death]
        return PersistenceDiagram(pairs)

    # ------------------------------------------------------------------
    # observations

    def is_marked(self, simplex) -> bool:
        return tuple(sorted(simplex)) in self._marked

    def live_cocycle_count(self, dim: int) -> int:
        matrix = self._matrices.get(dim)
        return matrix.live_row_count if matrix is not None else 0

    def live_cocycle_counts(self) -> dict[int, int]:
        return {d: m.live_row_count for d, m in self._matrices.items()}

    def stats(self) -> RunStats:
        ops = self.field.ops if isinstance(self.field, OpCountingField) else 0
        if self._collector is None:
            return RunStats(field_ops=ops)
        return self._collector.result(field_ops=ops)

    # ------------------------------------------------------------------
    # internals

    def _matrix(self, dim: int) -> CompressedAnnotationMatrix:
        matrix = self._matrices.get(dim)
        if matrix is None:
            matrix = CompressedAnnotationMatrix(self.field, debug=self.options.debug)
            self._matrices[dim] = matrix
        return matrix

    def _new_slot(self, simplex: Simplex) -> int:
        dim = len(simplex) - 1
        slot = self._slot_counts.get(dim, 0)
        self._slot_counts[dim] = slot + 1
        self._slots[simplex] = slot
        return slot

    def _boundary_annotation(self, simplex: Simplex) -> AnnotationVector:
        if len(simplex) == 1:
            return ZERO
        matrix = self._matrix(len(simplex) - 2)
        field = self.field
        acc: AnnotationVector = ZERO
        for face, sign in self.complex.boundary(simplex):
            slot = self._slots.get(face)
            if slot is None:
                raise MissingFace(f"face {face} of {simplex} was never inserted")
            vec = matrix.find_annotation(slot)
            if sign < 0:
                vec = negate_annotation(vec, field)
            acc, _ = sum_annotations(acc, vec, field)
        return acc

    def _insert_creator(self, simplex: Simplex, row: int | None = None) -> int:
        dim = len(simplex) - 1
        slot = self._new_slot(simplex)
        row = self._matrix(dim).create_cocycle(slot, row=row)
        self._creators.setdefault(dim, {})[row] = (
            simplex,
            self.complex.value(simplex),
            self._seq,
        )
        self._seq += 1
        self._sample()
        return row

    def _insert_killer(self, simplex: Simplex, a_bd: AnnotationVector) -> Killed:
        dim = len(simplex) - 1
        row = self._matrix(dim - 1).kill_cocycle(a_bd)
        slot = self._new_slot(simplex)
        self._matrix(dim).assign_zero(slot)
        creator, birth, _ = self._creators[dim - 1].pop(row)
        pair = PersistencePair(
            dim - 1, birth, self.complex.value(simplex), creator, simplex
        )
        self._pairs.append(pair)
        self._seq += 1
        self._sample()
        return Killed(row, pair)

    def _sample(self) -> None:
        if self._collector is not None:
            self._collector.sample(self._matrices)


def compute_persistence(
    complex: SimplexTree,
    field: PrimeField,
    options: EngineOptions | None = None,
) -> tuple[PersistenceDiagram, RunStats]:
    """Full run: order the filtration, insert everything, emit the diagram.

    With ``options.reorder`` the equal-value blocks are permuted first;
    with ``options.lazy`` insertions go through the deferred path. Stats
    counters are all zero unless ``options.record_stats`` is set.
    """
    opts = options or EngineOptions()
    engine = PersistenceEngine(complex, field, opts)
    if opts.reorder:
        sequence = reordered_filtration(complex)
    else:
        sequence = complex.filtration_order()
    step = engine.lazy_evaluation if opts.lazy else engine.insert
    for simplex in sequence:
        step(simplex)
    return engine.finish(), engine.stats()
