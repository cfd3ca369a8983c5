"""Slow, obviously-correct reference implementations used as test oracles.

Nothing here imports aglab: every function works on plain nested tuples.
"""

import itertools

LAWS = {
    "invertive": (3, lambda m, x, y, z: (m[m[x][y]][z], m[m[z][y]][x])),
    "medial": (4, lambda m, x, y, z, w: (m[m[x][y]][m[z][w]], m[m[x][z]][m[y][w]])),
    "paramedial": (4, lambda m, x, y, z, w: (m[m[x][y]][m[z][w]], m[m[w][y]][m[z][x]])),
    "ag_star_star": (3, lambda m, x, y, z: (m[x][m[y][z]], m[y][m[x][z]])),
    "associative": (3, lambda m, x, y, z: (m[m[x][y]][z], m[x][m[y][z]])),
    "commutative": (2, lambda m, x, y: (m[x][y], m[y][x])),
}


def rows(t):
    return tuple(tuple(int(v) for v in r) for r in t)


def first_violation(m, law):
    arity, sides = LAWS[law]
    for args in itertools.product(range(len(m)), repeat=arity):
        lhs, rhs = sides(m, *args)
        if lhs != rhs:
            return args, lhs, rhs
    return None


def holds(m, law):
    return first_violation(m, law) is None


def idempotents(m):
    return {x for x in range(len(m)) if m[x][x] == x}


def left_identities(m):
    n = len(m)
    return {e for e in range(n) if all(m[e][x] == x for x in range(n))}


def inverses(m, a):
    n = len(m)
    return {b for b in range(n) if m[m[a][b]][a] == a and m[m[b][a]][b] == b}


def inverse_map(m):
    out = []
    for a in range(len(m)):
        v = inverses(m, a)
        if len(v) != 1:
            return None
        out.append(v.pop())
    return out


def is_cia(m):
    if not (holds(m, "invertive") and holds(m, "ag_star_star")):
        return False
    inv = inverse_map(m)
    return inv is not None and all(m[a][inv[a]] == m[inv[a]][a] for a in range(len(m)))


def is_strongly_regular(m):
    n = len(m)
    return all(any(m[m[a][x]][a] == a and m[a][x] == m[x][a] for x in range(n)) for a in range(n))


def e_is_semilattice(m):
    E = idempotents(m)
    return all(m[e][f] in E and m[e][f] == m[f][e] for e in E for f in E) and all(
        m[m[e][f]][g] == m[e][m[f][g]] for e in E for f in E for g in E)


def derived(m):
    inv = inverse_map(m)
    n = len(m)
    return tuple(tuple(m[m[b][m[b][inv[b]]]][a] for b in range(n)) for a in range(n))


def relabel(m, p):
    n = len(m)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[p[a]][p[b]] = p[m[a][b]]
    return tuple(map(tuple, out))


def canonical(m):
    return min(relabel(m, p) for p in itertools.permutations(range(len(m))))


def is_hom(p, g, h):
    n = len(g)
    return all(p[g[a][b]] == h[p[a]][p[b]] for a in range(n) for b in range(n))


def automorphisms(m):
    return [p for p in itertools.permutations(range(len(m))) if is_hom(p, m, m)]


def all_tables(n):
    for flat in itertools.product(range(n), repeat=n * n):
        yield tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def is_ag_group(m):
    n = len(m)
    if not holds(m, "invertive"):
        return False
    for e in left_identities(m):
        if all(any(m[x][a] == e for x in range(n)) for a in range(n)):
            return True
    return False


def is_left_simple(m):
    n = len(m)
    for a in range(n):
        ideal = {a}
        while True:
            nxt = ideal | {m[s][x] for s in range(n) for x in ideal}
            if nxt == ideal:
                break
            ideal = nxt
        if len(ideal) != n:
            return False
    return True


def zn_add(n):
    return tuple(tuple((a + b) % n for b in range(n)) for a in range(n))


def zn_sub(n):
    return tuple(tuple((b - a) % n for b in range(n)) for a in range(n))
