import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracle
from aglab.core import (ElementSet, FiniteGroupoid, idempotents, induced, left_ideal_closure,
                        principal_ideals, product, square_subgroupoid, subset_product)
from aglab.errors import ClosureError, InputError, SizeError


@st.composite
def groupoids(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    flat = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    return FiniteGroupoid(np.array(flat).reshape(n, n))


@st.composite
def groupoid_and_perm(draw, max_n=4):
    g = draw(groupoids(max_n))
    return g, draw(st.permutations(range(g.order)))


def es(g, labels):
    return ElementSet.of(g.order, [g.index(x) for x in labels])


def test_product_ex2(fx):
    g = fx["ex2"]
    assert g.label(product(g, g.index("c"), g.index("d"))) == "c"


def test_product_sub5(fx):
    assert product(fx["sub5"], 2, 0) == (0 - 2) % 5


def test_product_of_idempotent(fx):
    for g in fx.values():
        for e in idempotents(g):
            assert product(g, e, e) == e


def test_product_out_of_range(fx):
    with pytest.raises(InputError):
        product(fx["sl2"], 0, 2)
    with pytest.raises(InputError):
        product(fx["sl2"], -1, 0)


def test_subset_product_examples(fx):
    ex2 = fx["ex2"]
    assert subset_product(ex2, ex2.carrier(), es(ex2, "a")) == es(ex2, "a")
    sl2 = fx["sl2"]
    assert subset_product(sl2, ElementSet.of(2), sl2.carrier()) == ElementSet.of(2)
    assert subset_product(sl2, sl2.carrier(), sl2.carrier()).members() == [0, 1]


def test_idempotents_examples(fx):
    assert idempotents(fx["ex2"]) == es(fx["ex2"], "ab")
    assert idempotents(fx["add5"]).members() == [0]
    assert idempotents(fx["sub5"]).members() == [0]


def test_square_subgroupoid_infl3(fx):
    s2, sub = square_subgroupoid(fx["infl3"])
    assert s2.members() == [0, 1]
    assert oracle.canonical(sub.rows) == oracle.canonical(fx["sl2"].rows)


@pytest.mark.parametrize("name", ["add5", "ex2"])
def test_square_subgroupoid_full(fx, name):
    g = fx[name]
    s2, sub = square_subgroupoid(g)
    assert s2.is_full()
    assert sub.same_table(g)


def test_principal_ideals_examples(fx):
    ex2 = fx["ex2"]
    aS, Sa = principal_ideals(ex2, ex2.index("a"))
    assert aS == Sa == es(ex2, "a")
    aS, Sa = principal_ideals(fx["sub5"], 0)
    assert aS.is_full() and Sa.is_full()
    aS, Sa = principal_ideals(fx["trivial"], 0)
    assert aS.members() == Sa.members() == [0]


def test_induced_rejects_open_subset(fx):
    infl3 = fx["infl3"]
    with pytest.raises(ClosureError) as err:
        induced(infl3, es(infl3, ["0", "p"]))
    a, b = err.value.pair
    assert infl3.product(a, b) == infl3.index("1")


def test_induced_reindexes(fx):
    add4 = fx["add4"]
    sub, members = induced(add4, ElementSet.of(4, [0, 2]))
    assert members == [0, 2]
    assert sub.rows == ((0, 1), (1, 0))


def test_left_ideal_closure_sl2(fx):
    sl2 = fx["sl2"]
    assert left_ideal_closure(sl2, ElementSet.of(2, [0])).members() == [0]
    assert left_ideal_closure(sl2, ElementSet.of(2, [1])).is_full()


def test_table_validation():
    with pytest.raises(InputError):
        FiniteGroupoid([[0, 2], [0, 1]])
    with pytest.raises(InputError):
        FiniteGroupoid([[0, 1, 0], [0, 1, 0]])
    with pytest.raises(InputError):
        FiniteGroupoid([[0, 0], [0, 0]], labels=["x", "x"])
    with pytest.raises(InputError):
        FiniteGroupoid([[0, 0], [0, 0]], labels=["x"])
    with pytest.raises(InputError):
        FiniteGroupoid([])


def test_table_is_read_only(fx):
    t = fx["sl2"].table
    with pytest.raises(ValueError):
        t[0, 0] = 1


def test_table_copied_on_construction():
    src = np.array([[0, 0], [0, 1]])
    g = FiniteGroupoid(src)
    src[0, 0] = 1
    assert g.rows[0][0] == 0


def test_order_guard(monkeypatch):
    big = np.zeros((17, 17), dtype=int)
    with pytest.raises(SizeError):
        FiniteGroupoid(big)
    monkeypatch.setenv("AGLAB_MAX_ORDER", "3")
    with pytest.raises(SizeError):
        FiniteGroupoid(np.zeros((4, 4), dtype=int))
    FiniteGroupoid(np.zeros((3, 3), dtype=int))
    monkeypatch.setenv("AGLAB_MAX_ORDER", "40")
    with pytest.raises(InputError):
        FiniteGroupoid(np.zeros((2, 2), dtype=int))


def test_relabel_convention():
    g = FiniteGroupoid([[0, 0], [0, 1]])
    h = g.relabel([1, 0])
    assert h.rows == ((0, 1), (1, 1))
    assert h.rows == oracle.relabel(g.rows, (1, 0))


def test_element_set_algebra():
    a = ElementSet.of(5, [0, 2])
    b = ElementSet.of(5, [2, 3])
    assert (a | b).members() == [0, 2, 3]
    assert (a & b).members() == [2]
    assert (a - b).members() == [0]
    assert a & b <= a
    assert not ElementSet.of(5)
    assert ElementSet.full(5).is_full() and len(ElementSet.full(5)) == 5
    with pytest.raises(InputError):
        ElementSet.of(3, [3])


@given(groupoids())
def test_products_stay_in_carrier(g):
    assert all(0 <= g.product(a, b) < g.order for a in g.elements() for b in g.elements())


@given(groupoids(), st.data())
def test_subset_product_monotone(g, data):
    sub = st.sets(st.integers(0, g.order - 1))
    A = data.draw(sub)
    B = data.draw(sub)
    A2 = A | data.draw(sub)
    B2 = B | data.draw(sub)
    n = g.order
    small = subset_product(g, ElementSet.of(n, A), ElementSet.of(n, B))
    big = subset_product(g, ElementSet.of(n, A2), ElementSet.of(n, B2))
    assert small <= big
    assert set(small) == {g.rows[a][b] for a in A for b in B}


@given(groupoid_and_perm())
def test_idempotents_follow_relabeling(gp):
    g, perm = gp
    h = g.relabel(perm)
    assert set(idempotents(h)) == {perm[e] for e in idempotents(g)}
    assert set(idempotents(g)) == oracle.idempotents(g.rows)


@given(groupoids())
def test_square_is_full_subset_product(g):
    s2, sub = square_subgroupoid(g)
    assert s2 == subset_product(g, g.carrier(), g.carrier())
    assert sub.order == len(s2)
