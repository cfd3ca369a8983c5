"""Inflations: every product factors through a retraction onto a subgroupoid."""

import itertools
from dataclasses import dataclass
from typing import Optional

from ._config import max_order
from .core import ElementSet, FiniteGroupoid, closure_witness, induced, subset_product
from .errors import ClosureError, InputError, SizeError, TheoremViolation
from .inverses import completely_inverse_map, is_cia
from .laws import Law, check_law

# converse direction is checked by scanning every subset up to this order
SUBSET_SCAN_MAX = 10


@dataclass(frozen=True)
class InflationWitness:
    base_elements: ElementSet
    retraction: tuple
    fibers: dict  # u -> ElementSet

    def to_json(self, g):
        lab = g.label
        return {
            "base_elements": [lab(u) for u in self.base_elements],
            "retraction": {lab(x): lab(u) for x, u in enumerate(self.retraction)},
            "fibers": {lab(u): [lab(x) for x in f] for u, f in self.fibers.items()},
        }


def _witness_from_retraction(g, U, r):
    """Check every inflation invariant for the retraction ``r`` onto ``U``."""
    n = g.order
    m = g.rows
    if any(r[x] not in U for x in range(n)):
        return None
    if any(r[r[x]] != r[x] for x in range(n)):
        return None
    if any(r[u] != u for u in U):
        return None
    if any(m[x][y] != m[r[x]][r[y]] for x in range(n) for y in range(n)):
        return None
    fibers = {u: ElementSet.of(n, (x for x in range(n) if r[x] == u)) for u in U}
    return InflationWitness(U, tuple(r), fibers)


def is_inflation_of(g, U):
    if closure_witness(g, U) is not None or not U:
        return None
    m = g.rows
    n = g.order
    cols = [tuple(m[y][x] for y in range(n)) for x in range(n)]
    r = []
    for x in range(n):
        if x in U:
            r.append(x)
            continue
        match = [u for u in U if m[u] == m[x] and cols[u] == cols[x]]
        if not match:
            return None
        r.append(match[0])
    return _witness_from_retraction(g, U, r)


@dataclass(frozen=True)
class Theorem10Result:
    medial: bool
    s2_good: bool
    witness: Optional[InflationWitness]

    def to_json(self, g):
        return {"medial": self.medial, "s2_good": self.s2_good,
                "witness": None if self.witness is None else self.witness.to_json(g)}


def theorem10_check(g):
    medial = check_law(g, Law.medial).holds
    full = g.carrier()
    s2 = subset_product(g, full, full)
    try:
        sub, members = induced(g, s2)
        s2_good = is_cia(sub)
    except ClosureError:
        s2_good = False

    witness = None
    if medial and s2_good:
        inv_sub = completely_inverse_map(sub)
        pos = {x: i for i, x in enumerate(members)}
        m = g.rows
        r = []
        for x in g.elements():
            sq = m[x][x]
            e = m[sq][members[inv_sub[pos[sq]]]]
            r.append(m[e][x])
        witness = _witness_from_retraction(g, s2, r)
        if witness is None:
            raise TheoremViolation("medial groupoid with good S^2 is not inflated by x -> x^2(x^2)^-1 x")

    if g.order <= SUBSET_SCAN_MAX:
        for size in range(1, g.order + 1):
            for U in itertools.combinations(range(g.order), size):
                U = ElementSet.of(g.order, U)
                if is_inflation_of(g, U) is None:
                    continue
                sub_u, _ = induced(g, U)
                if is_cia(sub_u) and not (U == s2 and s2_good):
                    raise TheoremViolation(
                        f"inflation of a completely inverse AG** subgroupoid {U.members()} "
                        "but S^2 is not that subgroupoid")
    return Theorem10Result(medial, s2_good, witness)


def inflate(u, fiber_sizes):
    """Blow up element ``x`` of ``u`` into ``fiber_sizes[x]`` copies.

    Base elements keep their indices; extra copies follow in base order.
    """
    sizes = [int(s) for s in fiber_sizes]
    if len(sizes) != u.order:
        raise InputError(f"need {u.order} fiber sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise InputError("fiber sizes must be positive")
    total = sum(sizes)
    if total > max_order():
        raise SizeError(f"inflated order {total} exceeds {max_order()}")
    base = list(range(u.order))
    labels = [u.label(x) for x in base]
    for x, s in enumerate(sizes):
        for k in range(1, s):
            base.append(x)
            labels.append(f"{u.label(x)}_{k}")
    m = u.rows
    table = [[m[base[a]][base[b]] for b in range(total)] for a in range(total)]
    return FiniteGroupoid(table, labels if len(set(labels)) == total else None)
