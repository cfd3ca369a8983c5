import pytest
from hypothesis import given, strategies as st

import oracle
from aglab.core import ElementSet, FiniteGroupoid, square_subgroupoid
from aglab.errors import InputError, SizeError
from aglab.inflation import inflate, is_inflation_of, theorem10_check
from aglab.inverses import completely_inverse_map
from aglab.laws import Law, check_law
from aglab.morphisms import are_isomorphic


def test_infl3(fx):
    g = fx["infl3"]
    res = theorem10_check(g)
    assert res.medial and res.s2_good
    w = res.witness
    zero, one, p = (g.index(x) for x in ("0", "1", "p"))
    m = g.rows
    assert m[m[m[p][p]][m[p][p]]][p] == one
    assert w.retraction == (zero, one, one)
    assert w.fibers[zero].members() == [zero]
    assert w.fibers[one].members() == [one, p]


def test_sub5_trivial_inflation(fx):
    w = theorem10_check(fx["sub5"]).witness
    assert w.retraction == tuple(range(5))
    assert all(len(f) == 1 for f in w.fibers.values())


def test_lz2_not_an_inflation(fx):
    res = theorem10_check(fx["lz2"])
    assert res.medial and not res.s2_good and res.witness is None
    s2, sub = square_subgroupoid(fx["lz2"])
    assert sub.same_table(fx["lz2"])


def test_inflate_examples(fx):
    assert inflate(fx["sl2"], [1, 2]).same_table(fx["infl3"])
    for name in ("sub5", "ex2", "lz2"):
        g = fx[name]
        assert inflate(g, [1] * g.order) == g
    big = inflate(fx["add3"], [2, 1, 1])
    assert big.order == 4 and check_law(big, Law.medial).holds
    res = theorem10_check(big)
    assert res.witness is not None
    s2, sub = square_subgroupoid(big)
    assert sub.same_table(fx["add3"])


def test_inflate_errors(fx):
    with pytest.raises(SizeError):
        inflate(fx["add5"], [4, 4, 4, 4, 1])
    with pytest.raises(InputError):
        inflate(fx["add5"], [1, 1])
    with pytest.raises(InputError):
        inflate(fx["sl2"], [1, 0])


def test_is_inflation_of_examples(fx):
    g = fx["infl3"]
    U = ElementSet.of(3, [g.index("0"), g.index("1")])
    assert is_inflation_of(g, U) is not None
    assert is_inflation_of(g, ElementSet.of(3, [g.index("0"), g.index("p")])) is None
    for h in fx.values():
        w = is_inflation_of(h, h.carrier())
        assert w is not None and all(len(f) == 1 for f in w.fibers.values())


def _verify_witness(g, w):
    m = g.rows
    r = w.retraction
    assert all(r[r[x]] == r[x] for x in g.elements())
    assert all(u in w.fibers[u] for u in w.base_elements)
    seen = sorted(x for f in w.fibers.values() for x in f)
    assert seen == list(g.elements())
    for x in g.elements():
        for y in g.elements():
            assert m[x][y] == m[r[x]][r[y]]
            assert r[m[x][y]] == m[r[x]][r[y]]


@given(st.data())
def test_inflation_round_trip(cia_census, data):
    n = data.draw(st.integers(1, 4))
    u = data.draw(st.sampled_from(cia_census[n]))
    sizes = data.draw(st.lists(st.integers(1, 3), min_size=n, max_size=n))
    g = inflate(u, sizes)
    res = theorem10_check(g)
    assert res.medial and res.s2_good
    _verify_witness(g, res.witness)
    base, _ = square_subgroupoid(g)
    assert res.witness.base_elements == base
    from aglab.core import induced
    assert are_isomorphic(induced(g, base)[0], u) is not None


def test_product_identity_on_census(cia_census):
    for members in cia_census.values():
        for g in members:
            m = g.rows
            inv = completely_inverse_map(g)
            for a in g.elements():
                for b in g.elements():
                    ab = m[a][b]
                    assert ab == m[m[m[a][a]][m[b][b]]][inv[ab]]


def test_converse_on_order3(order3_tables):
    from aglab import _kernels as K
    tables, flags = order3_tables
    medial = tables[(flags & K.F_MEDIAL) != 0][::5]
    for t in medial:
        g = FiniteGroupoid(t)
        res = theorem10_check(g)
        if res.witness is not None:
            _verify_witness(g, res.witness)
            s2 = {g.rows[a][b] for a in range(3) for b in range(3)}
            sub = [[sorted(s2).index(g.rows[a][b]) for b in sorted(s2)] for a in sorted(s2)]
            assert oracle.is_cia(sub)
