"""Left inverses, inverse sets, strong regularity and the three-way classifier."""

from dataclasses import dataclass, field
from typing import Optional

from .core import ElementSet, idempotents
from .errors import ClosureError, InvalidWitness, NotCompletelyInverse, TheoremViolation
from .laws import Law, check_law, is_semilattice_on, left_identities


@dataclass(frozen=True)
class InverseData:
    left_inverses: tuple  # of ElementSet; b in left_inverses[a] iff (ab)a = a
    V: tuple  # of ElementSet; mutual left inverses
    inverse_map: Optional[tuple]  # a -> a^-1 when every V(a) is a singleton
    commuting: tuple  # per element: some b in V(a) with ab = ba

    def to_json(self, g):
        lab = g.label
        return {
            "left_inverses": {lab(a): [lab(b) for b in s] for a, s in enumerate(self.left_inverses)},
            "V": {lab(a): [lab(b) for b in s] for a, s in enumerate(self.V)},
            "inverse_map": None if self.inverse_map is None
            else {lab(a): lab(b) for a, b in enumerate(self.inverse_map)},
            "commuting": {lab(a): c for a, c in enumerate(self.commuting)},
        }


def inverse_data(g):
    m = g.rows
    n = g.order
    left = []
    for a in range(n):
        left.append(ElementSet.of(n, (b for b in range(n) if m[m[a][b]][a] == a)))
    V = []
    for a in range(n):
        V.append(ElementSet.of(n, (b for b in left[a] if a in left[b])))
    commuting = tuple(any(m[a][b] == m[b][a] for b in V[a]) for a in range(n))
    inverse_map = None
    if all(len(v) == 1 for v in V):
        inverse_map = tuple(next(iter(v)) for v in V)
    return InverseData(tuple(left), tuple(V), inverse_map, commuting)


def is_completely_inverse(g):
    """Every element has exactly one inverse, and commutes with it."""
    data = inverse_data(g)
    return data.inverse_map is not None and all(data.commuting)


def strongly_regular_witness(g, a):
    m = g.rows
    for x in g.elements():
        ax = m[a][x]
        if m[ax][a] == a and ax == m[x][a]:
            return x
    return None


def is_strongly_regular(g):
    return all(strongly_regular_witness(g, a) is not None for a in g.elements())


def lemma1_inverse_from_witness(g, a, x):
    """The commuting inverse ``y = (xa)x`` built from a strong-regularity witness."""
    m = g.rows
    ax = g.product(a, x)
    if m[ax][a] != a or ax != m[x][a]:
        raise InvalidWitness(f"{g.label(x)} is not a strongly regular witness for {g.label(a)}")
    y = m[m[x][a]][x]
    mutual = m[m[a][y]][a] == a and m[m[y][a]][y] == y
    if not (mutual and m[a][y] == m[y][a]):
        if check_law(g, Law.invertive).holds:
            raise TheoremViolation(
                f"y = (xa)x = {g.label(y)} is not a commuting inverse of {g.label(a)} "
                "in an AG-groupoid")
        raise InvalidWitness(
            f"(xa)x = {g.label(y)} is not a commuting inverse of {g.label(a)}; "
            "the groupoid is not an AG-groupoid")
    return y


def completely_inverse_map(g):
    """The inverse map of a completely inverse AG**-groupoid.

    Raises NotCompletelyInverse otherwise.
    """
    if not check_law(g, Law.invertive).holds:
        raise NotCompletelyInverse("not an AG-groupoid: invertive law fails")
    if not check_law(g, Law.ag_star_star).holds:
        raise NotCompletelyInverse("the identity x(yz) = y(xz) fails")
    data = inverse_data(g)
    if data.inverse_map is None:
        bad = next(a for a, v in enumerate(data.V) if len(v) != 1)
        raise NotCompletelyInverse(
            f"element {g.label(bad)} has {len(data.V[bad])} inverses")
    if not all(data.commuting):
        bad = data.commuting.index(False)
        raise NotCompletelyInverse(f"element {g.label(bad)} does not commute with its inverse")
    return data.inverse_map


@dataclass
class PropertyReport:
    ag: bool
    ag_star_star: bool
    strongly_regular: bool
    e_semilattice: bool
    completely_inverse: bool
    completely_inverse_agss: bool
    sr_ag_e_semilattice: bool
    sr_agss: bool
    class3: str
    left_identities: list
    witnesses: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)

    def to_json(self, g):
        lab = g.label
        return {
            "ag": self.ag,
            "ag_star_star": self.ag_star_star,
            "strongly_regular": self.strongly_regular,
            "e_semilattice": self.e_semilattice,
            "completely_inverse": self.completely_inverse,
            "conditions": {
                "completely_inverse_agss": self.completely_inverse_agss,
                "strongly_regular_ag_e_semilattice": self.sr_ag_e_semilattice,
                "strongly_regular_agss": self.sr_agss,
            },
            "class3": self.class3,
            "left_identities": [lab(e) for e in self.left_identities],
            "witnesses": {k: [lab(x) for x in v] for k, v in self.witnesses.items()},
            "diagnostics": list(self.diagnostics),
        }


def classify(g, strict=True):
    """Measure the three equivalent characterisations independently.

    With ``strict`` a disagreement raises TheoremViolation; otherwise it is
    recorded in ``diagnostics`` and ``class3`` is ``"disagree"``.
    """
    witnesses = {}
    inv_rep = check_law(g, Law.invertive)
    ag = inv_rep.holds
    if not ag:
        witnesses["ag"] = list(inv_rep.counterexample)
    agss_rep = check_law(g, Law.ag_star_star)
    agss = agss_rep.holds
    if not agss:
        witnesses["ag_star_star"] = list(agss_rep.counterexample)

    # strongly regular: witness search per element
    sr = True
    for a in g.elements():
        if strongly_regular_witness(g, a) is None:
            sr = False
            witnesses["strongly_regular"] = [a]
            break

    # idempotents as a semilattice
    E = idempotents(g)
    try:
        verdict = is_semilattice_on(g, E)
        esl = verdict.holds
        if not esl:
            witnesses["e_semilattice"] = list(verdict.witness)
    except ClosureError as exc:
        esl = False
        witnesses["e_semilattice"] = list(exc.pair)

    # unique commuting inverses
    data = inverse_data(g)
    ci = data.inverse_map is not None and all(data.commuting)
    if not ci:
        if data.inverse_map is None:
            witnesses["completely_inverse"] = [next(a for a, v in enumerate(data.V) if len(v) != 1)]
        else:
            witnesses["completely_inverse"] = [data.commuting.index(False)]

    cond1 = ag and agss and ci
    cond2 = ag and sr and esl
    cond3 = ag and agss and sr
    diagnostics = []
    if cond1 == cond2 == cond3:
        class3 = "all-three" if cond1 else "none"
    else:
        class3 = "disagree"
        diagnostics.append(
            f"THEOREM-VIOLATION: characterisations disagree (cia={cond1}, sr+E={cond2}, sr+agss={cond3})")
        if strict:
            raise TheoremViolation(diagnostics[-1])
    return PropertyReport(
        ag=ag, ag_star_star=agss, strongly_regular=sr, e_semilattice=esl,
        completely_inverse=ci, completely_inverse_agss=cond1, sr_ag_e_semilattice=cond2,
        sr_agss=cond3, class3=class3, left_identities=left_identities(g).members(),
        witnesses=witnesses, diagnostics=diagnostics)


def is_cia(g):
    """Completely inverse AG**-groupoid."""
    return (check_law(g, Law.invertive).holds and check_law(g, Law.ag_star_star).holds
            and is_completely_inverse(g))
