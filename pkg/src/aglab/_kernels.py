"""Hot numeric kernels.

Every kernel exists twice: a numba ``@njit`` version (``_nb_*``) and a pure
numpy version (``_np_*``).  The public names at the bottom of the module are
bound to one family, chosen at import time.  Set ``AGLAB_DISABLE_NUMBA=1`` to
force the numpy family (useful for debugging and for the benchmark).

Tables are square ``int8`` arrays, ``t[a, b]`` being the product ``ab``.
Partial tables used by the search are ``(n+1, n+1)`` arrays in which the
value ``n`` means "unassigned"; row ``n`` and column ``n`` are filled with
``n`` so that a lookup through an unknown cell stays unknown.
"""

import itertools

import numpy as np

from ._config import numba_disabled

try:
    import numba
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    numba = None

# law codes
INVERTIVE, MEDIAL, PARAMEDIAL, AGSS, ASSOC, COMM = range(6)
LAW_ARITY = (3, 4, 4, 3, 3, 2)

# profile bits
F_INVERTIVE = 1 << 0
F_MEDIAL = 1 << 1
F_PARAMEDIAL = 1 << 2
F_AGSS = 1 << 3
F_ASSOC = 1 << 4
F_COMM = 1 << 5
F_LEFT_ID = 1 << 6
F_STRONGLY_REGULAR = 1 << 7
F_E_SEMILATTICE = 1 << 8
F_UNIQUE_INVERSES = 1 << 9
F_COMPLETELY_INVERSE = 1 << 10
F_AG_GROUP = 1 << 11
F_LEFT_SIMPLE = 1 << 12

# search constraints
C_INVERTIVE = 1
C_AGSS = 2
C_ASSOC = 4
C_COMM = 8
C_UNIQUE_INVERSE = 16

USING_NUMBA = numba is not None and not numba_disabled()


def _identity_decorator(fn):
    return fn


njit = numba.njit(cache=True) if numba is not None else _identity_decorator


# ---------------------------------------------------------------------------
# numba family
# ---------------------------------------------------------------------------

@njit
def _nb_sides(t, law, x, y, z, w):
    if law == INVERTIVE:
        return t[t[x, y], z], t[t[z, y], x]
    if law == MEDIAL:
        return t[t[x, y], t[z, w]], t[t[x, z], t[y, w]]
    if law == PARAMEDIAL:
        return t[t[x, y], t[z, w]], t[t[w, y], t[z, x]]
    if law == AGSS:
        return t[x, t[y, z]], t[y, t[x, z]]
    if law == ASSOC:
        return t[t[x, y], z], t[x, t[y, z]]
    return t[x, y], t[y, x]


@njit
def _nb_first_violation(t, law):
    n = t.shape[0]
    out = np.full(6, -1, np.int64)
    arity = 2
    if law == MEDIAL or law == PARAMEDIAL:
        arity = 4
    elif law != COMM:
        arity = 3
    nz = n if arity >= 3 else 1
    nw = n if arity == 4 else 1
    for x in range(n):
        for y in range(n):
            for z in range(nz):
                for w in range(nw):
                    lhs, rhs = _nb_sides(t, law, x, y, z, w)
                    if lhs != rhs:
                        out[0] = x
                        out[1] = y
                        if arity >= 3:
                            out[2] = z
                        if arity == 4:
                            out[3] = w
                        out[4] = lhs
                        out[5] = rhs
                        return out
    return out


@njit
def _nb_law_holds(t, law):
    return _nb_first_violation(t, law)[0] < 0


@njit
def _nb_profile_one(t):
    n = t.shape[0]
    flags = 0
    if _nb_law_holds(t, INVERTIVE):
        flags |= F_INVERTIVE
    if _nb_law_holds(t, MEDIAL):
        flags |= F_MEDIAL
    if _nb_law_holds(t, PARAMEDIAL):
        flags |= F_PARAMEDIAL
    if _nb_law_holds(t, AGSS):
        flags |= F_AGSS
    if _nb_law_holds(t, ASSOC):
        flags |= F_ASSOC
    if _nb_law_holds(t, COMM):
        flags |= F_COMM

    left_id = -1
    for e in range(n):
        ok = True
        for x in range(n):
            if t[e, x] != x:
                ok = False
                break
        if ok:
            left_id = e
            break
    if left_id >= 0:
        flags |= F_LEFT_ID

    # strong regularity: a = (ax)a with ax = xa
    sr = True
    for a in range(n):
        found = False
        for x in range(n):
            if t[t[a, x], a] == a and t[a, x] == t[x, a]:
                found = True
                break
        if not found:
            sr = False
            break
    if sr:
        flags |= F_STRONGLY_REGULAR

    # idempotents form a semilattice
    esl = True
    for e in range(n):
        if t[e, e] != e:
            continue
        for f in range(n):
            if t[f, f] != f:
                continue
            p = t[e, f]
            if t[p, p] != p or p != t[f, e]:
                esl = False
                break
            for g in range(n):
                if t[g, g] != g:
                    continue
                if t[p, g] != t[e, t[f, g]]:
                    esl = False
                    break
            if not esl:
                break
        if not esl:
            break
    if esl:
        flags |= F_E_SEMILATTICE

    # inverse sets V(a)
    unique = True
    commuting = True
    for a in range(n):
        count = 0
        inv = -1
        for c in range(n):
            if t[t[a, c], a] == a and t[t[c, a], c] == c:
                count += 1
                if inv < 0:
                    inv = c
        if count != 1:
            unique = False
            commuting = False
            break
        if t[a, inv] != t[inv, a]:
            commuting = False
    if unique:
        flags |= F_UNIQUE_INVERSES
    if unique and commuting:
        flags |= F_COMPLETELY_INVERSE

    if (flags & F_INVERTIVE) and left_id >= 0:
        group = True
        for a in range(n):
            found = False
            for x in range(n):
                if t[x, a] == left_id:
                    found = True
                    break
            if not found:
                group = False
                break
        if group:
            flags |= F_AG_GROUP

    # left simple: the left ideal generated by every singleton is everything
    simple = True
    reach = np.zeros(n, np.bool_)
    for a in range(n):
        reach[:] = False
        reach[a] = True
        changed = True
        while changed:
            changed = False
            for z in range(n):
                if reach[z]:
                    for x in range(n):
                        y = t[x, z]
                        if not reach[y]:
                            reach[y] = True
                            changed = True
        for y in range(n):
            if not reach[y]:
                simple = False
                break
        if not simple:
            break
    if simple:
        flags |= F_LEFT_SIMPLE
    return flags


@njit
def _nb_profile_batch(tables):
    out = np.empty(tables.shape[0], np.int64)
    for b in range(tables.shape[0]):
        out[b] = _nb_profile_one(tables[b])
    return out


@njit
def _nb_violates(ext, n, constraints):
    if constraints & C_COMM:
        for x in range(n):
            for y in range(x + 1, n):
                l = ext[x, y]
                r = ext[y, x]
                if l != n and r != n and l != r:
                    return True
    if constraints & (C_INVERTIVE | C_AGSS | C_ASSOC):
        for x in range(n):
            for y in range(n):
                xy = ext[x, y]
                for z in range(n):
                    if constraints & C_INVERTIVE:
                        l = ext[xy, z]
                        r = ext[ext[z, y], x]
                        if l != n and r != n and l != r:
                            return True
                    if constraints & C_AGSS:
                        l = ext[x, ext[y, z]]
                        r = ext[y, ext[x, z]]
                        if l != n and r != n and l != r:
                            return True
                    if constraints & C_ASSOC:
                        l = ext[xy, z]
                        r = ext[x, ext[y, z]]
                        if l != n and r != n and l != r:
                            return True
    if constraints & C_UNIQUE_INVERSE:
        for a in range(n):
            count = 0
            for c in range(n):
                if ext[ext[a, c], a] == a and ext[ext[c, a], c] == c:
                    count += 1
            if count > 1:
                return True
    return False


@njit
def _nb_search(prefix, n, depth0, stop, constraints):
    """Fill cells ``depth0 .. stop-1`` (row-major) depth first.

    Returns the surviving partial tables flattened (unfilled cells hold
    ``n``), the number of placements tried and the number rejected.
    """
    cells = n * n
    ext = prefix.copy()
    out = np.empty((64, cells), np.int8)
    count = 0
    nodes = 0
    pruned = 0
    if depth0 >= stop:
        if not _nb_violates(ext, n, constraints):
            for k in range(cells):
                out[0, k] = ext[k // n, k % n]
            count = 1
        return out[:count], nodes, pruned
    vals = np.full(cells, -1, np.int64)
    d = depth0
    while d >= depth0:
        i = d // n
        j = d % n
        v = vals[d] + 1
        if v >= n:
            ext[i, j] = n
            vals[d] = -1
            d -= 1
            continue
        vals[d] = v
        ext[i, j] = v
        nodes += 1
        if _nb_violates(ext, n, constraints):
            pruned += 1
            continue
        if d == stop - 1:
            if count == out.shape[0]:
                grown = np.empty((2 * out.shape[0], cells), np.int8)
                grown[:count] = out[:count]
                out = grown
            for k in range(cells):
                out[count, k] = ext[k // n, k % n]
            count += 1
            continue
        d += 1
    return out[:count], nodes, pruned


@njit
def _nb_lexmin_perm(t, perms, invs):
    """Index of the first permutation giving the lexicographically least relabeling."""
    n = t.shape[0]
    best = np.empty(n * n, np.int64)
    best_idx = -1
    for p in range(perms.shape[0]):
        perm = perms[p]
        inv = invs[p]
        state = 0  # 0 undecided, -1 smaller, 1 larger
        if best_idx < 0:
            state = -1
        for i in range(n):
            for j in range(n):
                v = perm[t[inv[i], inv[j]]]
                k = i * n + j
                if state == 0:
                    if v < best[k]:
                        state = -1
                    elif v > best[k]:
                        state = 1
                        break
                if state == -1:
                    best[k] = v
            if state == 1:
                break
        if state == -1:
            best_idx = p
    return best_idx


@njit
def _nb_lexmin_batch(tables, perms, invs):
    out = np.empty(tables.shape[0], np.int64)
    for b in range(tables.shape[0]):
        out[b] = _nb_lexmin_perm(tables[b], perms, invs)
    return out


# ---------------------------------------------------------------------------
# numpy family
# ---------------------------------------------------------------------------

def _grid(n, k):
    return np.indices((n,) * k)


def _np_sides(t, law):
    x, y, z, w = (list(_grid(t.shape[0], LAW_ARITY[law])) + [None, None])[:4]
    if law == INVERTIVE:
        return t[t[x, y], z], t[t[z, y], x]
    if law == MEDIAL:
        return t[t[x, y], t[z, w]], t[t[x, z], t[y, w]]
    if law == PARAMEDIAL:
        return t[t[x, y], t[z, w]], t[t[w, y], t[z, x]]
    if law == AGSS:
        return t[x, t[y, z]], t[y, t[x, z]]
    if law == ASSOC:
        return t[t[x, y], z], t[x, t[y, z]]
    return t[x, y], t[y, x]


def _np_first_violation(t, law):
    t = np.asarray(t, dtype=np.int64)
    lhs, rhs = _np_sides(t, law)
    out = np.full(6, -1, np.int64)
    bad = np.flatnonzero(lhs != rhs)
    if bad.size:
        pos = np.unravel_index(bad[0], lhs.shape)
        out[: len(pos)] = pos
        out[4] = lhs[pos]
        out[5] = rhs[pos]
    return out


def _np_law_holds_batch(T, law):
    """T has shape (B, n, n); returns a boolean vector."""
    B, n = T.shape[0], T.shape[1]
    k = LAW_ARITY[law]
    g = _grid(n, k)
    b = np.arange(B).reshape((B,) + (1,) * k)

    def m(u, v):
        return T[b, u, v]

    x, y = g[0], g[1]
    z = g[2] if k >= 3 else None
    w = g[3] if k == 4 else None
    if law == INVERTIVE:
        lhs, rhs = m(m(x, y), z), m(m(z, y), x)
    elif law == MEDIAL:
        lhs, rhs = m(m(x, y), m(z, w)), m(m(x, z), m(y, w))
    elif law == PARAMEDIAL:
        lhs, rhs = m(m(x, y), m(z, w)), m(m(w, y), m(z, x))
    elif law == AGSS:
        lhs, rhs = m(x, m(y, z)), m(y, m(x, z))
    elif law == ASSOC:
        lhs, rhs = m(m(x, y), z), m(x, m(y, z))
    else:
        lhs, rhs = m(x, y), m(y, x)
    return (lhs == rhs).reshape(B, -1).all(axis=1)


def _np_profile_batch(tables, chunk=4096):
    tables = np.asarray(tables, dtype=np.int64)
    parts = [_np_profile_chunk(tables[s:s + chunk]) for s in range(0, tables.shape[0], chunk)]
    if not parts:
        return np.zeros(0, np.int64)
    return np.concatenate(parts)


def _np_profile_chunk(T):
    B, n = T.shape[0], T.shape[1]
    flags = np.zeros(B, np.int64)
    for law, bit in ((INVERTIVE, F_INVERTIVE), (MEDIAL, F_MEDIAL), (PARAMEDIAL, F_PARAMEDIAL),
                     (AGSS, F_AGSS), (ASSOC, F_ASSOC), (COMM, F_COMM)):
        flags |= np.where(_np_law_holds_batch(T, law), bit, 0)

    ar = np.arange(n)
    b2 = np.arange(B)[:, None, None]
    b1 = np.arange(B)[:, None]
    is_left_id = (T == ar[None, None, :]).all(axis=2)  # (B, n)
    has_left_id = is_left_id.any(axis=1)
    left_id = np.where(has_left_id, is_left_id.argmax(axis=1), -1)
    flags |= np.where(has_left_id, F_LEFT_ID, 0)

    a, x = np.indices((n, n))
    ax = T[b2, a, x]
    xa = T[b2, x, a]
    sr_ok = (T[b2, ax, a] == a) & (ax == xa)
    flags |= np.where(sr_ok.any(axis=2).all(axis=1), F_STRONGLY_REGULAR, 0)

    idem = T[b1, ar, ar] == ar  # (B, n)
    e, f = np.indices((n, n))
    ef = T[b2, e, f]
    pair = idem[:, :, None] & idem[:, None, :]
    pair_ok = idem[b2, ef] & (ef == T[b2, f, e])
    e3, f3, g3 = np.indices((n, n, n))
    b3 = np.arange(B)[:, None, None, None]
    triple = idem[:, :, None, None] & idem[:, None, :, None] & idem[:, None, None, :]
    triple_ok = T[b3, T[b3, e3, f3], g3] == T[b3, e3, T[b3, f3, g3]]
    esl = ~(pair & ~pair_ok).reshape(B, -1).any(axis=1) & ~(triple & ~triple_ok).reshape(B, -1).any(axis=1)
    flags |= np.where(esl, F_E_SEMILATTICE, 0)

    c = x
    ac = T[b2, a, c]
    ca = T[b2, c, a]
    V = (T[b2, ac, a] == a) & (T[b2, ca, c] == c)  # V[b, a, c]
    counts = V.sum(axis=2)
    unique = (counts == 1).all(axis=1)
    inv = V.argmax(axis=2)
    commute = (T[b1, ar, inv] == T[b1, inv, ar]).all(axis=1)
    flags |= np.where(unique, F_UNIQUE_INVERSES, 0)
    flags |= np.where(unique & commute, F_COMPLETELY_INVERSE, 0)

    # a* a = e for every a, where e is the left identity
    e_col = np.maximum(left_id, 0)[:, None, None]
    solvable = (T[b2, x, a] == e_col).any(axis=2).all(axis=1)
    group = ((flags & F_INVERTIVE) != 0) & has_left_id & solvable
    flags |= np.where(group, F_AG_GROUP, 0)

    # left ideal closure of every singleton
    onehot = T[:, :, :, None] == ar[None, None, None, :]  # [b, x, z, y]
    image = onehot.any(axis=1).astype(np.int64)  # [b, z, y]: y in S z
    reach = np.broadcast_to(np.eye(n, dtype=np.int64), (B, n, n)).copy()
    for _ in range(n):
        reach = ((reach + reach @ image) > 0).astype(np.int64)
    flags |= np.where(reach.reshape(B, -1).all(axis=1), F_LEFT_SIMPLE, 0)
    return flags


def _np_violates_batch(E, n, constraints):
    """E has shape (F, n+1, n+1) with sentinel ``n``; returns a boolean vector."""
    F = E.shape[0]
    bad = np.zeros(F, bool)
    if constraints & C_COMM:
        x, y = np.indices((n, n))
        b = np.arange(F)[:, None, None]
        l, r = E[b, x, y], E[b, y, x]
        bad |= ((l != n) & (r != n) & (l != r)).reshape(F, -1).any(axis=1)
    if constraints & (C_INVERTIVE | C_AGSS | C_ASSOC):
        x, y, z = np.indices((n, n, n))
        b = np.arange(F)[:, None, None, None]
        checks = []
        if constraints & C_INVERTIVE:
            checks.append((E[b, E[b, x, y], z], E[b, E[b, z, y], x]))
        if constraints & C_AGSS:
            checks.append((E[b, x, E[b, y, z]], E[b, y, E[b, x, z]]))
        if constraints & C_ASSOC:
            checks.append((E[b, E[b, x, y], z], E[b, x, E[b, y, z]]))
        for l, r in checks:
            bad |= ((l != n) & (r != n) & (l != r)).reshape(F, -1).any(axis=1)
    if constraints & C_UNIQUE_INVERSE:
        a, c = np.indices((n, n))
        b = np.arange(F)[:, None, None]
        known = (E[b, E[b, a, c], a] == a) & (E[b, E[b, c, a], c] == c)
        bad |= (known.sum(axis=2) > 1).any(axis=1)
    return bad


def _np_search(prefix, n, depth0, stop, constraints, chunk=8192):
    """Breadth-first twin of ``_nb_search``: same survivors, same order, same counts."""
    cells = n * n
    frontier = np.asarray(prefix, dtype=np.int64)[None].copy()
    nodes = 0
    pruned = 0
    if depth0 >= stop:
        frontier = frontier[~_np_violates_batch(frontier, n, constraints)]
    step = max(1, chunk // n)
    for d in range(depth0, stop):
        i, j = divmod(d, n)
        survivors = []
        for s in range(0, frontier.shape[0], step):
            part = frontier[s:s + step]
            cand = np.repeat(part, n, axis=0)
            cand[:, i, j] = np.tile(np.arange(n), part.shape[0])
            bad = _np_violates_batch(cand, n, constraints)
            nodes += cand.shape[0]
            pruned += int(bad.sum())
            survivors.append(cand[~bad])
        frontier = np.concatenate(survivors) if survivors else frontier[:0]
        if frontier.shape[0] == 0:
            break
    return frontier[:, :n, :n].reshape(-1, cells).astype(np.int8), nodes, pruned


def _np_lexmin_perm(t, perms, invs):
    t = np.asarray(t, dtype=np.int64)
    P = perms.shape[0]
    ar = np.arange(P)[:, None, None]
    relabeled = perms[ar, t[invs[:, :, None], invs[:, None, :]]].reshape(P, -1)
    cand = np.arange(P)
    for col in range(relabeled.shape[1]):
        vals = relabeled[cand, col]
        cand = cand[vals == vals.min()]
        if cand.size == 1:
            break
    return int(cand[0])


def _np_lexmin_batch(tables, perms, invs):
    return np.array([_np_lexmin_perm(t, perms, invs) for t in tables], dtype=np.int64)


# ---------------------------------------------------------------------------
# shared helpers and public bindings
# ---------------------------------------------------------------------------

_PERM_CACHE = {}


def permutations_array(n):
    """All permutations of range(n) in itertools order, plus their inverses."""
    if n not in _PERM_CACHE:
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
        invs = np.argsort(perms, axis=1)
        _PERM_CACHE[n] = (perms, invs)
    return _PERM_CACHE[n]


def all_tables(n):
    """Every n x n table over range(n), in row-major lexicographic order."""
    cells = n * n
    codes = np.arange(n ** cells, dtype=np.int64)
    digits = np.empty((codes.size, cells), dtype=np.int8)
    for k in range(cells - 1, -1, -1):
        digits[:, k] = codes % n
        codes //= n
    return digits.reshape(-1, n, n)


def empty_partial(n):
    return np.full((n + 1, n + 1), n, dtype=np.int8)


def partial_from_flat(flat, n):
    ext = empty_partial(n)
    ext[:n, :n] = np.asarray(flat, dtype=np.int8).reshape(n, n)
    return ext


if USING_NUMBA:
    first_violation = _nb_first_violation
    _profile_batch_impl = _nb_profile_batch
    _search_impl = _nb_search
    _lexmin_perm_impl = _nb_lexmin_perm
    _lexmin_batch_impl = _nb_lexmin_batch
else:
    first_violation = _np_first_violation
    _profile_batch_impl = _np_profile_batch
    _search_impl = _np_search
    _lexmin_perm_impl = _np_lexmin_perm
    _lexmin_batch_impl = _np_lexmin_batch


def profile_batch(tables):
    tables = np.ascontiguousarray(tables, dtype=np.int8 if USING_NUMBA else np.int64)
    if tables.ndim == 2:
        tables = tables[None]
    return _profile_batch_impl(tables)


def search(prefix, n, depth0, constraints, stop=None):
    """Extend a partial table cell by cell, pruning on violated constraints."""
    stop = n * n if stop is None else stop
    prefix = np.ascontiguousarray(prefix, dtype=np.int8 if USING_NUMBA else np.int64)
    tables, nodes, pruned = _search_impl(prefix, n, depth0, stop, constraints)
    return np.asarray(tables, dtype=np.int8), int(nodes), int(pruned)


def lexmin_perm(t, perms, invs):
    return int(_lexmin_perm_impl(np.ascontiguousarray(t, dtype=np.int64), perms, invs))


def lexmin_batch(tables, perms, invs):
    return _lexmin_batch_impl(np.ascontiguousarray(tables, dtype=np.int64), perms, invs)
