"""Sparse annotation vectors and the compressed annotation matrix.

An annotation vector assigns one Z_p coefficient to each live cocycle row;
vectors are sorted tuples of ``(row, coefficient)`` pairs with every
coefficient nonzero, the empty tuple being the zero vector. One matrix per
simplex dimension stores each distinct nonzero column exactly once, shares
columns between simplices through a union-find forest, and threads every
nonzero entry of a row through a doubly-linked ring so that destroying a
cocycle touches only the columns that actually meet its row.
"""
from __future__ import annotations

from .errors import (
    InvariantViolation,
    SlotAlreadyAssigned,
    UnassignedSlot,
    ZeroAnnotation,
)
from .field import PrimeField

AnnotationVector = tuple[tuple[int, int], ...]

ZERO: AnnotationVector = ()


def sum_annotations(
    a1: AnnotationVector, a2: AnnotationVector, field: PrimeField
) -> tuple[AnnotationVector, tuple[int, int] | None]:
    """Merge-add two sorted vectors with exact cancellation.

    Returns the sum together with its entry of maximal row index (None for
    the zero sum); that entry selects the cocycle a destruction removes.
    Cost is one pass over both inputs.
    """
    if not a1:
        return a2, (a2[-1] if a2 else None)
    if not a2:
        return a1, a1[-1]
    add = field.add
    out = []
    i = j = 0
    n1, n2 = len(a1), len(a2)
    while i < n1 and j < n2:
        r1, c1 = a1[i]
        r2, c2 = a2[j]
        if r1 < r2:
            out.append(a1[i])
            i += 1
        elif r2 < r1:
            out.append(a2[j])
            j += 1
        else:
            c = add(c1, c2)
            if c:
                out.append((r1, c))
            i += 1
            j += 1
    if i < n1:
        out.extend(a1[i:])
    if j < n2:
        out.extend(a2[j:])
    vec = tuple(out)
    return vec, (vec[-1] if vec else None)


def scale_annotation(
    a: AnnotationVector, lam: int, field: PrimeField
) -> AnnotationVector:
    """Multiply every coefficient by ``lam`` (0 yields the zero vector)."""
    if lam == 0 or not a:
        return ZERO
    if lam == 1:
        return a
    mul = field.mul
    return tuple((r, mul(c, lam)) for r, c in a)


def negate_annotation(a: AnnotationVector, field: PrimeField) -> AnnotationVector:
    if not a:
        return ZERO
    neg = field.neg
    return tuple((r, neg(c)) for r, c in a)


class _Entry:
    """One nonzero matrix entry; doubly linked into its row ring."""

    __slots__ = ("row", "coeff", "column", "prev", "nxt")

    def __init__(self, row: int, coeff: int, column: "_Column | None"):
        self.row = row
        self.coeff = coeff
        self.column = column
        self.prev = self
        self.nxt = self


class _Column:
    """One distinct nonzero annotation vector, owned by one class root."""

    __slots__ = ("key", "entries", "owner")

    def __init__(self, key: AnnotationVector, owner: int):
        self.key = key
        self.owner = owner
        self.entries: list[_Entry] = []


class CompressedAnnotationMatrix:
    """Annotation columns for the simplices of one dimension.

    Slots are caller-chosen hashable ids (one per simplex). Each slot is
    assigned exactly once, either to a fresh unit column (creation) or to
    the zero class (destruction); later updates may merge classes whose
    columns become equal. Row indices grow monotonically and are never
    reused, so the maximal row of a boundary annotation is always the
    youngest contributing cocycle.
    """

    def __init__(self, field: PrimeField, debug: bool = False):
        self._field = field
        self._debug = debug
        self._columns: dict[AnnotationVector, _Column] = {}
        self._rings: dict[int, _Entry] = {}  # live row -> ring sentinel
        self._parent: dict[int, int] = {}
        self._rank: dict[int, int] = {}
        self._root_column: dict[int, _Column] = {}  # nonzero class roots only
        self._zero_root: int | None = None
        self._next_row = 0
        self._nnz = 0

    # ------------------------------------------------------------------
    # observations

    @property
    def field(self) -> PrimeField:
        return self._field

    @property
    def live_row_count(self) -> int:
        """Rank of the cohomology group currently represented."""
        return len(self._rings)

    @property
    def distinct_column_count(self) -> int:
        return len(self._columns)

    @property
    def nonzero_count(self) -> int:
        return self._nnz

    @property
    def next_row_index(self) -> int:
        return self._next_row

    def is_assigned(self, slot) -> bool:
        return slot in self._parent

    # ------------------------------------------------------------------
    # operations

    def reserve_row(self) -> int:
        """Claim the next row index without materializing a column.

        Lets a caller that defers insertions pin each cocycle's seniority
        at its original filtration position: row order, which drives the
        destruction rule, then reflects filtration age even when columns
        materialize late.
        """
        row = self._next_row
        self._next_row += 1
        return row

    def create_cocycle(self, slot, row: int | None = None) -> int:
        """Start a new cocycle class for ``slot``; returns its row.

        Allocates a fresh row unless a previously reserved one is given.
        All other columns keep an implicit zero in the new row, so the
        sparse store needs no padding.
        """
        self._make_set(slot)
        if row is None:
            row = self.reserve_row()
        elif row >= self._next_row or row in self._rings:
            raise InvariantViolation(f"row {row} was not reserved or is live")
        self._rings[row] = _Entry(row, 0, None)  # sentinel
        key: AnnotationVector = ((row, 1),)
        column = _Column(key, slot)
        entry = _Entry(row, 1, column)
        column.entries.append(entry)
        self._link(entry)
        self._columns[key] = column
        self._root_column[slot] = column
        if self._debug:
            self.check_invariants()
        return row

    def assign_zero(self, slot) -> None:
        """Put ``slot`` into the zero-annotation class."""
        self._make_set(slot)
        self._merge_into_zero(slot)
        if self._debug:
            self.check_invariants()

    def find_annotation(self, slot) -> AnnotationVector:
        """Vector of the slot's class root (the zero vector for killers)."""
        if slot not in self._parent:
            raise UnassignedSlot(f"slot {slot!r} has no annotation")
        column = self._root_column.get(self._find(slot))
        return column.key if column is not None else ZERO

    def kill_cocycle(self, boundary_annotation: AnnotationVector) -> int:
        """Remove the youngest cocycle meeting ``boundary_annotation``.

        Let (j, c) be the maximal-row entry of the argument. Every column
        holding f != 0 in row j receives ``-f/c`` times the argument, which
        zeroes row j everywhere at once; updated columns are
        re-canonicalized, merging classes whose vectors collide. Returns j.
        """
        a_bd = boundary_annotation
        if not a_bd:
            raise ZeroAnnotation("cannot destroy with the zero annotation")
        for row, _ in a_bd:
            if row not in self._rings:
                raise InvariantViolation(f"row {row} is not live")
        row_j, c_j = a_bd[-1]
        field = self._field
        # snapshot the ring: the updates below unlink and relink entries
        sentinel = self._rings[row_j]
        targets: list[tuple[_Column, int]] = []
        entry = sentinel.nxt
        while entry is not sentinel:
            targets.append((entry.column, entry.coeff))
            entry = entry.nxt
        # the row operation is simultaneous: compute all sums before any
        # column changes shape, then rewrite
        updates: list[tuple[_Column, AnnotationVector]] = []
        for column, f in targets:
            lam = field.div(field.neg(f), c_j)
            scaled = scale_annotation(a_bd, lam, field)
            new_key, _ = sum_annotations(column.key, scaled, field)
            updates.append((column, new_key))
        for column, _ in updates:
            for entry in column.entries:
                self._unlink(entry)
            del self._columns[column.key]
        for column, new_key in updates:
            root = self._find(column.owner)
            if not new_key:
                del self._root_column[root]
                self._merge_into_zero(root)
            else:
                existing = self._columns.get(new_key)
                if existing is not None:
                    other = self._find(existing.owner)
                    del self._root_column[root]
                    del self._root_column[other]
                    self._root_column[self._union(root, other)] = existing
                else:
                    column.key = new_key
                    column.entries = []
                    for row, coeff in new_key:
                        entry = _Entry(row, coeff, column)
                        column.entries.append(entry)
                        self._link(entry)
                    self._columns[new_key] = column
        if sentinel.nxt is not sentinel:
            raise InvariantViolation(f"row {row_j} survived its destruction")
        del self._rings[row_j]
        if self._debug:
            self.check_invariants()
        return row_j

    # ------------------------------------------------------------------
    # internals

    def _make_set(self, slot) -> None:
        if slot in self._parent:
            raise SlotAlreadyAssigned(f"slot {slot!r} is already assigned")
        self._parent[slot] = slot
        self._rank[slot] = 0

    def _find(self, x):
        parent = self._parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def _union(self, ra, rb):
        # both arguments must be roots; returns the surviving root
        if ra == rb:
            return ra
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1
        return ra

    def _merge_into_zero(self, root) -> None:
        if self._zero_root is None:
            self._zero_root = root
        else:
            self._zero_root = self._union(root, self._find(self._zero_root))

    def _link(self, entry: _Entry) -> None:
        sentinel = self._rings[entry.row]
        last = sentinel.prev
        entry.prev = last
        entry.nxt = sentinel
        last.nxt = entry
        sentinel.prev = entry
        self._nnz += 1

    def _unlink(self, entry: _Entry) -> None:
        entry.prev.nxt = entry.nxt
        entry.nxt.prev = entry.prev
        self._nnz -= 1

    # ------------------------------------------------------------------
    # debug checking

    def check_invariants(self) -> None:
        """Exhaustive structural audit; raises InvariantViolation on failure."""
        p = self._field.p
        ring_entries: dict[int, _Entry] = {}
        for row, sentinel in self._rings.items():
            if row >= self._next_row:
                raise InvariantViolation(f"live row {row} above the allocator")
            count = 0
            entry = sentinel.nxt
            while entry is not sentinel:
                if entry.row != row:
                    raise InvariantViolation("entry linked into the wrong ring")
                if not 0 < entry.coeff < p:
                    raise InvariantViolation("non-canonical coefficient in ring")
                ring_entries[id(entry)] = entry
                count += 1
                entry = entry.nxt
            if count == 0:
                raise InvariantViolation(f"live row {row} has an empty ring")
        column_entries: dict[int, _Entry] = {}
        for key, column in self._columns.items():
            if column.key != key:
                raise InvariantViolation("column stored under a stale key")
            if not key:
                raise InvariantViolation("zero vector stored as a column")
            rows = [e.row for e in column.entries]
            if rows != sorted(set(rows)):
                raise InvariantViolation("column rows not strictly ascending")
            if tuple((e.row, e.coeff) for e in column.entries) != key:
                raise InvariantViolation("column entries disagree with key")
            for entry in column.entries:
                if entry.column is not column:
                    raise InvariantViolation("entry points at the wrong column")
                if entry.row not in self._rings:
                    raise InvariantViolation("column entry at a dead row")
                column_entries[id(entry)] = entry
        if set(ring_entries) != set(column_entries):
            raise InvariantViolation("ring and column entry sets differ")
        if self._nnz != len(column_entries):
            raise InvariantViolation("nonzero counter out of sync")
        # class forest <-> distinct columns
        for root in self._root_column:
            if self._parent.get(root) != root:
                raise InvariantViolation("column payload on a non-root")
        owned = {id(c) for c in self._root_column.values()}
        stored = {id(c) for c in self._columns.values()}
        if owned != stored or len(self._root_column) != len(self._columns):
            raise InvariantViolation("roots and distinct columns not in bijection")
        for root, column in self._root_column.items():
            if self._find(column.owner) != root:
                raise InvariantViolation("column owner left its class")
        zero_root = None
        if self._zero_root is not None:
            zero_root = self._find(self._zero_root)
            if zero_root in self._root_column:
                raise InvariantViolation("zero class owns a column")
        seen_roots = {self._find(slot) for slot in self._parent}
        for root in seen_roots:
            if root not in self._root_column and root != zero_root:
                raise InvariantViolation("class without a column is not the zero class")
