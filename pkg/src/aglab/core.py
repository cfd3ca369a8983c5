"""Finite groupoids given by Cayley tables, and bitset element sets."""

from dataclasses import dataclass

import numpy as np

from ._config import max_order
from .errors import ClosureError, InputError, SizeError


@dataclass(frozen=True)
class ElementSet:
    """A subset of ``range(n)`` stored as an integer bitmask."""

    n: int
    mask: int = 0

    @classmethod
    def of(cls, n, members=()):
        mask = 0
        for m in members:
            m = int(m)
            if not 0 <= m < n:
                raise InputError(f"element {m} outside carrier of order {n}")
            mask |= 1 << m
        return cls(n, mask)

    @classmethod
    def full(cls, n):
        return cls(n, (1 << n) - 1)

    def __iter__(self):
        mask = self.mask
        i = 0
        while mask:
            if mask & 1:
                yield i
            mask >>= 1
            i += 1

    def __contains__(self, x):
        return 0 <= x < self.n and bool(self.mask >> x & 1)

    def __len__(self):
        return bin(self.mask).count("1")

    def __bool__(self):
        return self.mask != 0

    def __or__(self, other):
        return ElementSet(self.n, self.mask | other.mask)

    def __and__(self, other):
        return ElementSet(self.n, self.mask & other.mask)

    def __sub__(self, other):
        return ElementSet(self.n, self.mask & ~other.mask)

    def __le__(self, other):
        return self.mask & ~other.mask == 0

    def is_full(self):
        return self.mask == (1 << self.n) - 1

    def members(self):
        return list(self)

    def __repr__(self):
        return f"ElementSet({self.members()})"


class FiniteGroupoid:
    """A finite carrier ``range(n)`` with a total product given by ``table``.

    Row index is the left operand.  Instances are immutable: the table is a
    read-only ``int8`` array.
    """

    __slots__ = ("_table", "_labels", "_rows")

    def __init__(self, table, labels=None):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise InputError(f"table must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        limit = max_order()
        if n > limit:
            raise SizeError(f"order {n} exceeds the maximum supported order {limit}")
        if arr.min() < 0 or arr.max() >= n:
            bad = np.argwhere((arr < 0) | (arr >= n))[0]
            raise InputError(f"table entry at {tuple(int(v) for v in bad)} is outside [0, {n})")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise InputError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise InputError("labels must be pairwise distinct")
        t = arr.astype(np.int8)
        t.setflags(write=False)
        self._table = t
        self._labels = labels
        self._rows = tuple(tuple(int(v) for v in row) for row in arr)

    @property
    def order(self):
        return self._table.shape[0]

    n = order

    @property
    def table(self):
        return self._table

    @property
    def labels(self):
        return self._labels

    @property
    def rows(self):
        """The table as nested tuples; fast for scalar lookups."""
        return self._rows

    def label(self, x):
        return self._labels[x] if self._labels else str(x)

    def index(self, label):
        if self._labels and label in self._labels:
            return self._labels.index(label)
        try:
            x = int(label)
        except (TypeError, ValueError):
            raise InputError(f"unknown element {label!r}") from None
        self._check(x)
        return x

    def _check(self, x):
        if not (isinstance(x, (int, np.integer)) and 0 <= x < self.order):
            raise InputError(f"element {x!r} outside carrier of order {self.order}")

    def product(self, a, b):
        self._check(a)
        self._check(b)
        return self._rows[a][b]

    def elements(self):
        return range(self.order)

    def carrier(self):
        return ElementSet.full(self.order)

    def relabel(self, perm):
        """The isomorphic copy in which element ``x`` is renamed ``perm[x]``."""
        perm = np.asarray(perm, dtype=np.int64)
        n = self.order
        if sorted(perm.tolist()) != list(range(n)):
            raise InputError(f"not a permutation of range({n}): {perm.tolist()}")
        inv = np.argsort(perm)
        new = perm[self._table.astype(np.int64)[np.ix_(inv, inv)]]
        labels = None
        if self._labels:
            labels = [self._labels[i] for i in inv]
        return FiniteGroupoid(new, labels)

    def same_table(self, other):
        return self.order == other.order and bool(np.array_equal(self._table, other._table))

    def __eq__(self, other):
        if not isinstance(other, FiniteGroupoid):
            return NotImplemented
        return self.same_table(other) and self._labels == other._labels

    def __hash__(self):
        return hash((self._rows, self._labels))

    def __repr__(self):
        return f"FiniteGroupoid(order={self.order}, rows={list(map(list, self._rows))})"


def product(g, a, b):
    return g.product(a, b)


def subset_product(g, A, B):
    rows = g.rows
    mask = 0
    for a in A:
        row = rows[a]
        for b in B:
            mask |= 1 << row[b]
    return ElementSet(g.order, mask)


def idempotents(g):
    rows = g.rows
    return ElementSet.of(g.order, (x for x in g.elements() if rows[x][x] == x))


def closure_witness(g, A):
    """First pair of ``A`` whose product leaves ``A``, or None if closed."""
    rows = g.rows
    for a in A:
        for b in A:
            if rows[a][b] not in A:
                return (a, b)
    return None


def induced(g, A):
    """The subgroupoid on ``A``, re-indexed by increasing element order.

    Returns ``(groupoid, members)``; ``members[i]`` is the original element
    renamed ``i``.
    """
    pair = closure_witness(g, A)
    if pair is not None:
        a, b = pair
        raise ClosureError(
            f"subset not closed: {g.label(a)}*{g.label(b)} = {g.label(g.product(a, b))} is outside",
            pair)
    members = A.members()
    pos = {m: i for i, m in enumerate(members)}
    table = [[pos[g.rows[a][b]] for b in members] for a in members]
    labels = [g.label(m) for m in members] if g.labels else None
    return FiniteGroupoid(table, labels), members


def square_subgroupoid(g):
    """``S^2`` and its induced groupoid; raises ClosureError if not closed."""
    full = g.carrier()
    s2 = subset_product(g, full, full)
    sub, _ = induced(g, s2)
    return s2, sub


def principal_ideals(g, a):
    g._check(a)
    full = g.carrier()
    single = ElementSet.of(g.order, [a])
    return subset_product(g, single, full), subset_product(g, full, single)


def left_ideal_closure(g, A):
    """Smallest ``I`` containing ``A`` with ``S I`` inside ``I``."""
    full = g.carrier()
    current = A
    while True:
        nxt = current | subset_product(g, full, current)
        if nxt == current:
            return current
        current = nxt


def right_ideal_closure(g, A):
    full = g.carrier()
    current = A
    while True:
        nxt = current | subset_product(g, current, full)
        if nxt == current:
            return current
        current = nxt


def ideal_closure(g, A):
    full = g.carrier()
    current = A
    while True:
        nxt = current | subset_product(g, full, current) | subset_product(g, current, full)
        if nxt == current:
            return current
        current = nxt
