"""Building completely inverse AG**-groupoids from a semilattice of abelian groups
and an involutive idempotent-fixed automorphism, and taking them apart again."""

from dataclasses import dataclass

from .core import FiniteGroupoid, idempotents
from .derived import clifford_decompose, derive
from .errors import AglabError, InputError, NotCompletelyInverse, TheoremViolation
from .inverses import completely_inverse_map, is_cia
from .morphisms import Automorphism, is_homomorphism


@dataclass(frozen=True)
class StructurePair:
    sga: FiniteGroupoid
    A: Automorphism


def make_pair(sga, perm):
    """Validate ``perm`` as an involutive E-fixed automorphism of ``sga``."""
    perm = tuple(int(v) for v in perm)
    n = sga.order
    if sorted(perm) != list(range(n)):
        raise InputError(f"not a permutation of range({n}): {list(perm)}")
    clifford_decompose(sga)
    if not is_homomorphism(perm, sga, sga):
        raise InputError("permutation is not an automorphism")
    involutive = all(perm[perm[x]] == x for x in range(n))
    e_fixed = all(perm[e] == e for e in idempotents(sga))
    if not (involutive and e_fixed):
        raise InputError(f"automorphism is not involutive and idempotent-fixed: {list(perm)}")
    return StructurePair(sga, Automorphism(perm, involutive, e_fixed))


def construct_thm20(pair):
    """The groupoid ``a o b = A(a) b`` on the carrier of ``pair.sga``."""
    s, A = pair.sga, pair.A.perm
    m = s.rows
    n = s.order
    g = FiniteGroupoid([[m[A[a]][b] for b in range(n)] for a in range(n)], s.labels)
    try:
        inv = completely_inverse_map(g)
    except NotCompletelyInverse as exc:
        raise TheoremViolation(f"constructed groupoid is not completely inverse AG**: {exc}") from exc
    s_inv = clifford_decompose(s).inverse
    for a in range(n):
        if inv[a] != A[s_inv[a]]:
            raise TheoremViolation(f"inverse of {s.label(a)} is not A(a^-1)")
    if not derive(g).derived.same_table(s):
        raise TheoremViolation("deriving the constructed groupoid does not return the input")
    return g


def extract_thm21(g):
    """Split a completely inverse AG**-groupoid into ``(derived, A)``."""
    dg = derive(g)
    s = dg.derived
    inv = dg.inverse
    m = g.rows
    n = g.order
    perm = tuple(m[a][m[a][inv[a]]] for a in range(n))
    if sorted(perm) != list(range(n)):
        raise TheoremViolation(f"a -> a(aa^-1) is not a bijection: {list(perm)}")
    if not is_homomorphism(perm, s, s):
        raise TheoremViolation("a -> a(aa^-1) is not an automorphism of the derived product")
    involutive = all(perm[perm[x]] == x for x in range(n))
    e_fixed = all(perm[e] == e for e in idempotents(s))
    if not (involutive and e_fixed):
        raise TheoremViolation("a -> a(aa^-1) is not involutive and idempotent-fixed")
    sm = s.rows
    if any(m[a][b] != sm[perm[a]][b] for a in range(n) for b in range(n)):
        raise TheoremViolation("g(a, b) differs from derived(A(a), b)")
    try:
        clifford_decompose(s)
    except AglabError as exc:
        raise TheoremViolation(f"derived product is not a semilattice of abelian groups: {exc}") from exc
    return StructurePair(s, Automorphism(perm, involutive, e_fixed))


def roundtrip_cor22(g):
    if not is_cia(g):
        return False
    return construct_thm20(extract_thm21(g)).same_table(g)
