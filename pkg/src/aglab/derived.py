"""The commutative product ``a[*]b = (b * bb^-1) a`` and Clifford decompositions."""

from dataclasses import dataclass

from .core import ElementSet, FiniteGroupoid, idempotents
from .errors import NotCompletelyInverse, NotSemilatticeOfAbelianGroups, TheoremViolation
from .inverses import completely_inverse_map, inverse_data
from .laws import Law, check_law


@dataclass(frozen=True)
class DerivedGroupoid:
    base: FiniteGroupoid
    derived: FiniteGroupoid
    inverse: tuple  # inverse map of the base


def derive(g):
    inv = completely_inverse_map(g)
    m = g.rows
    n = g.order
    table = [[m[m[b][m[b][inv[b]]]][a] for b in range(n)] for a in range(n)]
    h = FiniteGroupoid(table, g.labels)
    for law in (Law.commutative, Law.associative):
        rep = check_law(h, law)
        if not rep.holds:
            raise TheoremViolation(
                f"derived product is not {law.value}: counterexample {rep.counterexample}")
    return DerivedGroupoid(g, h, inv)


def prop11_check(g, dg=None):
    """Base and derived tables share their idempotents and agree on products among them."""
    dg = dg or derive(g)
    E = idempotents(g)
    if E != idempotents(dg.derived):
        return False
    return all(g.product(e, f) == dg.derived.product(e, f) for e in E for f in E)


def derived_inverse(g, a, dg=None):
    """The inverse of ``a`` for the derived product, computed in the base."""
    dg = dg or derive(g)
    m = g.rows
    ai = dg.inverse[a]
    value = m[a][m[ai][ai]]
    other = m[ai][m[a][ai]]
    if value != other:
        raise TheoremViolation(
            f"a(a^-1 a^-1) = {g.label(value)} differs from a^-1(a a^-1) = {g.label(other)}")
    d = dg.derived.rows
    found = [x for x in g.elements() if d[d[a][x]][a] == a and d[d[x][a]][x] == x]
    if found != [value]:
        raise TheoremViolation(
            f"derived inverses of {g.label(a)} found by search: {found}, formula gives {value}")
    return value


@dataclass(frozen=True)
class CliffordDecomposition:
    idempotents: ElementSet
    order_pairs: tuple  # (e, f) with e <= f, i.e. ef = e, e != f
    groups: dict  # e -> ElementSet
    links: dict  # (e, f) with e <= f -> {a in G_f: e a}
    abelian: dict  # e -> bool
    inverse: tuple

    def group_of(self, a):
        for e, G in self.groups.items():
            if a in G:
                return e
        raise KeyError(a)

    def to_json(self, g):
        lab = g.label
        return {
            "idempotents": [lab(e) for e in self.idempotents],
            "order": [[lab(e), lab(f)] for e, f in self.order_pairs],
            "groups": {lab(e): [lab(a) for a in G] for e, G in self.groups.items()},
            "abelian": {lab(e): v for e, v in self.abelian.items()},
            "links": [{"from": lab(f), "to": lab(e),
                       "map": {lab(a): lab(b) for a, b in mp.items()}}
                      for (e, f), mp in self.links.items() if e != f],
        }


def _fail(msg, witness=None):
    raise NotSemilatticeOfAbelianGroups(msg, witness)


def clifford_decompose(h):
    """Decompose a commutative inverse semigroup into its abelian groups.

    Every invariant of the result is verified; a failure raises
    NotSemilatticeOfAbelianGroups carrying a witness.
    """
    for law in (Law.commutative, Law.associative):
        rep = check_law(h, law)
        if not rep.holds:
            _fail(f"not {law.value}", rep.counterexample)
    data = inverse_data(h)
    if data.inverse_map is None:
        bad = next(a for a, v in enumerate(data.V) if len(v) != 1)
        _fail(f"element {h.label(bad)} has {len(data.V[bad])} inverses", (bad,))
    inv = data.inverse_map
    m = h.rows
    n = h.order
    E = idempotents(h)
    groups = {e: ElementSet.of(n, (a for a in range(n) if m[a][inv[a]] == e)) for e in E}
    covered = 0
    for e, G in groups.items():
        if covered & G.mask:
            _fail("groups overlap", (e,))
        covered |= G.mask
    if covered != (1 << n) - 1:
        _fail("groups do not cover the carrier")

    abelian = {}
    for e, G in groups.items():
        for a in G:
            if m[e][a] != a:
                _fail(f"{h.label(e)} is not the identity of its group", (e, a))
            if inv[a] not in G:
                _fail("group not closed under inverses", (a,))
            for b in G:
                if m[a][b] not in G:
                    _fail("group not closed", (a, b))
        abelian[e] = all(m[a][b] == m[b][a] for a in G for b in G)
        if not abelian[e]:
            _fail("group is not abelian", (e,))

    pairs = tuple((e, f) for e in E for f in E if e != f and m[e][f] == e)
    links = {}
    for e in E:
        for f in E:
            if m[e][f] != e:
                continue
            mp = {a: m[e][a] for a in groups[f]}
            for a, b in mp.items():
                if b not in groups[e]:
                    _fail("link leaves the target group", (e, f, a))
            for a in groups[f]:
                for b in groups[f]:
                    if mp[m[a][b]] != m[mp[a]][mp[b]]:
                        _fail("link is not a homomorphism", (e, f, a, b))
            links[(e, f)] = mp
    for (e, f), outer in links.items():
        for (f2, g2), inner in links.items():
            if f2 != f:
                continue
            through = links[(e, g2)]
            if any(outer[inner[a]] != through[a] for a in groups[g2]):
                _fail("links do not compose", (e, f, g2))

    for a in range(n):
        e = m[a][inv[a]]
        for b in range(n):
            f = m[b][inv[b]]
            ef = m[e][f]
            if m[links[(ef, e)][a]][links[(ef, f)][b]] != m[a][b]:
                _fail("product does not factor through the linking maps", (a, b))
    return CliffordDecomposition(E, pairs, groups, links, abelian, inv)


def is_sga(h):
    """Semilattice of abelian groups."""
    try:
        clifford_decompose(h)
    except NotSemilatticeOfAbelianGroups:
        return False
    return True


def prop14_check(h):
    clifford_decompose(h)
    try:
        dg = derive(h)
    except NotCompletelyInverse as exc:
        raise TheoremViolation(f"a semilattice of abelian groups failed to derive: {exc}") from exc
    return dg.derived.same_table(h)
