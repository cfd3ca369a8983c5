"""Equational laws with lexicographically-first counterexamples."""

import enum
from dataclasses import dataclass
from typing import Optional

from . import _kernels as K
from .core import ElementSet, closure_witness
from .errors import ClosureError


class Law(enum.Enum):
    invertive = "invertive"
    medial = "medial"
    paramedial = "paramedial"
    ag_star_star = "ag_star_star"
    associative = "associative"
    commutative = "commutative"

    @classmethod
    def parse(cls, name):
        return cls(LAW_ALIASES.get(name, name))


LAW_ALIASES = {"agss": "ag_star_star", "assoc": "associative", "comm": "commutative"}

_CODES = {
    Law.invertive: K.INVERTIVE,
    Law.medial: K.MEDIAL,
    Law.paramedial: K.PARAMEDIAL,
    Law.ag_star_star: K.AGSS,
    Law.associative: K.ASSOC,
    Law.commutative: K.COMM,
}

# left and right side of each law, for humans
EQUATIONS = {
    Law.invertive: ("(xy)z", "(zy)x"),
    Law.medial: ("(xy)(zw)", "(xz)(yw)"),
    Law.paramedial: ("(xy)(zw)", "(wy)(zx)"),
    Law.ag_star_star: ("x(yz)", "y(xz)"),
    Law.associative: ("(xy)z", "x(yz)"),
    Law.commutative: ("xy", "yx"),
}


@dataclass(frozen=True)
class LawReport:
    law: Law
    holds: bool
    counterexample: Optional[tuple] = None
    lhs: Optional[int] = None
    rhs: Optional[int] = None

    def to_json(self, g=None):
        lab = g.label if g is not None else str
        out = {"law": self.law.value, "holds": self.holds, "counterexample": None}
        if not self.holds:
            left, right = EQUATIONS[self.law]
            out["counterexample"] = {
                "elements": [lab(x) for x in self.counterexample],
                "lhs": {"expr": left, "value": lab(self.lhs)},
                "rhs": {"expr": right, "value": lab(self.rhs)},
            }
        return out


def evaluate(g, law, args):
    """Both sides of ``law`` at ``args``; used to re-check witnesses."""
    m = g.rows
    if law is Law.invertive:
        x, y, z = args
        return m[m[x][y]][z], m[m[z][y]][x]
    if law is Law.medial:
        x, y, z, w = args
        return m[m[x][y]][m[z][w]], m[m[x][z]][m[y][w]]
    if law is Law.paramedial:
        x, y, z, w = args
        return m[m[x][y]][m[z][w]], m[m[w][y]][m[z][x]]
    if law is Law.ag_star_star:
        x, y, z = args
        return m[x][m[y][z]], m[y][m[x][z]]
    if law is Law.associative:
        x, y, z = args
        return m[m[x][y]][z], m[x][m[y][z]]
    x, y = args
    return m[x][y], m[y][x]


def check_law(g, law):
    if isinstance(law, str):
        law = Law.parse(law)
    raw = K.first_violation(g.table, _CODES[law])
    if raw[0] < 0:
        return LawReport(law, True)
    arity = K.LAW_ARITY[_CODES[law]]
    args = tuple(int(v) for v in raw[:arity])
    return LawReport(law, False, args, int(raw[4]), int(raw[5]))


def holds(g, law):
    return check_law(g, law).holds


def left_identities(g):
    rows = g.rows
    ids = range(g.order)
    return ElementSet.of(g.order, (e for e in g.elements() if tuple(rows[e]) == tuple(ids)))


@dataclass(frozen=True)
class SemilatticeVerdict:
    holds: bool
    reason: Optional[str] = None
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.holds


def is_semilattice_on(g, A):
    """Whether the product restricted to ``A`` is a semilattice.

    ``A`` must be closed; the first failing element/pair/triple is returned
    as the witness otherwise.
    """
    pair = closure_witness(g, A)
    if pair is not None:
        raise ClosureError(f"set {A.members()} is not closed under the product", pair)
    m = g.rows
    members = A.members()
    for x in members:
        if m[x][x] != x:
            return SemilatticeVerdict(False, "idempotent", (x,))
    for x in members:
        for y in members:
            if m[x][y] != m[y][x]:
                return SemilatticeVerdict(False, "commutative", (x, y))
    for x in members:
        for y in members:
            for z in members:
                if m[m[x][y]][z] != m[x][m[y][z]]:
                    return SemilatticeVerdict(False, "associative", (x, y, z))
    return SemilatticeVerdict(True)
