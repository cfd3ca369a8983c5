"""Canonical forms, isomorphisms, automorphisms and involutive E-fixed automorphisms."""

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .core import FiniteGroupoid, idempotents
from .derived import derive
from .errors import InputError, TheoremViolation

BRUTE_FORCE_MAX = 7


@dataclass(frozen=True)
class CanonicalForm:
    canonical_table: FiniteGroupoid
    witness_perm: tuple  # relabeling x -> witness_perm[x] maps g onto the canonical table

    @property
    def key(self):
        return self.canonical_table.rows


@dataclass(frozen=True)
class Automorphism:
    perm: tuple
    involutive: bool
    e_fixed: bool

    def __call__(self, x):
        return self.perm[x]

    def to_json(self, g):
        return {"perm": {g.label(x): g.label(y) for x, y in enumerate(self.perm)},
                "involutive": self.involutive, "e_fixed": self.e_fixed}


def _check_perm(perm, n):
    perm = tuple(int(v) for v in perm)
    if sorted(perm) != list(range(n)):
        raise InputError(f"not a permutation of range({n}): {list(perm)}")
    return perm


def is_homomorphism(perm, g, h):
    mg, mh = g.rows, h.rows
    n = g.order
    return all(perm[mg[a][b]] == mh[perm[a]][perm[b]] for a in range(n) for b in range(n))


def _relabeled_rows(t, perm):
    n = len(perm)
    inv = [0] * n
    for x, y in enumerate(perm):
        inv[y] = x
    return tuple(tuple(perm[t[inv[i]][inv[j]]] for j in range(n)) for i in range(n))


def _canonical_brute(g):
    perms, invs = K.permutations_array(g.order)
    idx = K.lexmin_perm(g.table, perms, invs)
    return tuple(int(v) for v in perms[idx])


def _canonical_search(g):
    """Branch and bound over row 0; the rest of the table is then determined.

    Labels are handed out in increasing order: column ``j`` of row 0 either
    already has a preimage or takes a fresh element, and a product landing
    on an unlabeled element must receive the next free label to stay
    minimal.  Only candidates attaining the minimal value at the current
    cell are expanded.
    """
    t = g.rows
    n = g.order
    psi = [-1] * n  # label -> element
    phi = [-1] * n  # element -> label
    row0 = [0] * n
    best = {"rows": None, "perm": None}

    def compare_prefix(j):
        if best["rows"] is None:
            return -1
        ref = best["rows"][0]
        for k in range(j + 1):
            if row0[k] != ref[k]:
                return -1 if row0[k] < ref[k] else 1
        return 0

    def value_of(x, nxt):
        # label the product t[p0][x] would receive once x is labeled
        v = t[psi[0]][x]
        if phi[v] >= 0:
            return phi[v], False
        return nxt, True

    def rec(j, nxt):
        if j == n:
            perm = tuple(phi)
            rows = _relabeled_rows(t, perm)
            if best["rows"] is None or rows < best["rows"]:
                best["rows"] = rows
                best["perm"] = perm
            return
        if psi[j] >= 0:
            options = [psi[j]]
        else:
            options = [x for x in range(n) if phi[x] < 0]
        scored = []
        for x in options:
            fresh = phi[x] < 0
            if fresh:
                phi[x], psi[j] = j, x
            val, _ = value_of(x, nxt + (1 if fresh else 0))
            if fresh:
                phi[x], psi[j] = -1, -1
            scored.append((val, x))
        low = min(v for v, _ in scored)
        for val, x in scored:
            if val != low:
                continue
            trail = []
            k = nxt
            if phi[x] < 0:
                phi[x], psi[j] = j, x
                trail.append(x)
                k += 1
            v = t[psi[0]][x]
            if phi[v] < 0:
                phi[v], psi[k] = k, v
                trail.append(v)
                k += 1
            row0[j] = phi[v]
            if compare_prefix(j) <= 0:
                rec(j + 1, k)
            for y in trail:
                psi[phi[y]] = -1
                phi[y] = -1

    for p0 in range(n):
        phi[p0], psi[0] = 0, p0
        rec(0, 1)
        phi[p0], psi[0] = -1, -1
    return best["perm"]


def canonical_form(g, method=None):
    """Lexicographically least row-major table over all relabelings."""
    if method is None:
        method = "brute" if g.order <= BRUTE_FORCE_MAX else "search"
    perm = _canonical_brute(g) if method == "brute" else _canonical_search(g)
    return CanonicalForm(FiniteGroupoid(_relabeled_rows(g.rows, perm)), perm)


def canonical_keys(tables):
    """Canonical row tuples for a stack of same-order tables (census hot path)."""
    tables = np.asarray(tables)
    if tables.shape[0] == 0:
        return []
    n = tables.shape[1]
    if n > BRUTE_FORCE_MAX:
        return [canonical_form(FiniteGroupoid(t)).key for t in tables]
    perms, invs = K.permutations_array(n)
    idx = K.lexmin_batch(tables, perms, invs)
    out = []
    for t, i in zip(tables, idx):
        p = perms[i]
        inv = invs[i]
        out.append(tuple(map(tuple, p[t.astype(np.int64)[np.ix_(inv, inv)]].tolist())))
    return out


def are_isomorphic(g, h):
    """A verified isomorphism ``g -> h`` as a permutation, or None."""
    if g.order != h.order:
        return None
    cg, ch = canonical_form(g), canonical_form(h)
    if cg.key != ch.key:
        return None
    inv_h = [0] * h.order
    for x, y in enumerate(ch.witness_perm):
        inv_h[y] = x
    iso = tuple(inv_h[cg.witness_perm[x]] for x in range(g.order))
    if not is_homomorphism(iso, g, h):
        raise TheoremViolation("canonical forms agree but the composed relabeling is not an isomorphism")
    return iso


def _morphism_search(g, h):
    """All bijective homomorphisms ``g -> h`` (propagating forced images)."""
    n = g.order
    if h.order != n:
        return []
    mg, mh = g.rows, h.rows
    idem_g = [mg[x][x] == x for x in range(n)]
    idem_h = [mh[x][x] == x for x in range(n)]
    phi = [-1] * n
    used = [False] * n
    found = []

    def assign(a, v, trail):
        stack = [(a, v)]
        while stack:
            a, v = stack.pop()
            if phi[a] >= 0:
                if phi[a] != v:
                    return False
                continue
            if used[v] or idem_g[a] != idem_h[v]:
                return False
            phi[a] = v
            used[v] = True
            trail.append(a)
            for b in range(n):
                if phi[b] < 0:
                    continue
                for x, y in ((a, b), (b, a)):
                    c = mg[x][y]
                    target = mh[phi[x]][phi[y]]
                    if phi[c] >= 0:
                        if phi[c] != target:
                            return False
                    else:
                        stack.append((c, target))
        return True

    def rec():
        try:
            a = phi.index(-1)
        except ValueError:
            found.append(tuple(phi))
            return
        for v in range(n):
            if used[v]:
                continue
            trail = []
            if assign(a, v, trail):
                rec()
            for x in trail:
                used[phi[x]] = False
                phi[x] = -1

    rec()
    return sorted(found)


def isomorphisms(g, h):
    return _morphism_search(g, h)


def automorphisms(g):
    E = idempotents(g)
    out = []
    for perm in _morphism_search(g, g):
        if not is_homomorphism(perm, g, g):
            raise TheoremViolation("automorphism search returned a non-homomorphism")
        involutive = all(perm[perm[x]] == x for x in range(g.order))
        e_fixed = all(perm[e] == e for e in E)
        out.append(Automorphism(perm, involutive, e_fixed))
    return out


def aut2e(g):
    return [a for a in automorphisms(g) if a.involutive and a.e_fixed]


def theorem15_check(B, g, h):
    """``(cond_a, cond_b)``: B is a derived isomorphism / B satisfies the product rule.

    cond_b reads ``B(a b) = [B(a^-1)]^-1 B(b)`` with the inverse and product
    on the right taken in ``h``.
    """
    dg, dh = derive(g), derive(h)
    B = _check_perm(B, g.order)
    if h.order != g.order:
        raise InputError("carriers differ in size")
    cond_a = is_homomorphism(B, dg.derived, dh.derived)
    mg, mh = g.rows, h.rows
    ig, ih = dg.inverse, dh.inverse
    cond_b = all(B[mg[a][b]] == mh[ih[B[ig[a]]]][B[b]]
                 for a in range(g.order) for b in range(g.order))
    if cond_a != cond_b:
        raise TheoremViolation(
            f"derived isomorphism ({cond_a}) and product rule ({cond_b}) disagree for B={list(B)}")
    return cond_a, cond_b


def cor16_check(B, g):
    B = _check_perm(B, g.order)
    dg = derive(g)
    is_aut = is_homomorphism(B, dg.derived, dg.derived)
    m, inv = g.rows, dg.inverse
    condition = all(B[m[a][b]] == m[inv[B[inv[a]]]][B[b]]
                    for a in range(g.order) for b in range(g.order))
    if is_aut != condition:
        raise TheoremViolation(
            f"derived automorphism ({is_aut}) and product rule ({condition}) disagree for B={list(B)}")
    return is_aut, condition
