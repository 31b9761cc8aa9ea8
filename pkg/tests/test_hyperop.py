from itertools import product

import pytest

from hvnssd.dihedral import DihedralGroup, GroupElement
from hvnssd.hyperop import HvGroup, check_reproduction, check_weak_associativity, fixed_elements

E = GroupElement


def rotations(n, *exps):
    return {E(k % n) for k in exps}


def closed_form(n, i, j):
    """a^i o a^j written out by hand: {a^(i+j), a^(i-j)} plus the fixed elements."""
    return rotations(n, i + j, i - j, 1, -1, 2, -2) | {E(0, True)}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 8, 16])
def test_rotation_products_match_closed_form(n):
    hv = HvGroup(n)
    for i, j in product(range(n), repeat=2):
        assert hv.hyper_product(E(i), E(j)).as_set() == closed_form(n, i, j)


def test_consecutive_rotations_product():
    n = 16
    hv = HvGroup(n)
    for i in range(n):
        expected = rotations(n, 2 * i + 1, 1, -1, 2, -2) | {E(0, True)}
        nxt = E((i + 1) % n)
        assert hv.hyper_product(E(i), nxt).as_set() == expected
        assert hv.hyper_product(nxt, E(i)).as_set() == expected


def test_n2_collapse():
    hv = HvGroup(2)
    assert hv.fixed_set == {E(1), E(0), E(0, True)}
    assert hv.hyper_product(E(1), E(1)).as_set() == {E(0), E(1), E(0, True)}


def test_fixed_set_sizes():
    assert len(fixed_elements(DihedralGroup(2))) == 3
    assert len(fixed_elements(DihedralGroup(3))) == 3
    assert len(fixed_elements(DihedralGroup(4))) == 4
    assert len(fixed_elements(DihedralGroup(5))) == 5


@pytest.mark.parametrize("n", range(2, 17))
def test_products_contain_fixed_set(n):
    hv = HvGroup(n)
    els = hv.group.elements()
    for x, y in product(els, repeat=2):
        p = hv.hyper_product(x, y)
        assert hv.fixed_set <= p.as_set()
        assert 1 <= len(p) <= 7


def test_set_product_singletons():
    hv = HvGroup(6)
    x, y = E(2, True), E(5)
    assert hv.hyper_product_sets([x], [y]) == hv.hyper_product(x, y)


def test_set_product_full_group_n2():
    hv = HvGroup(2)
    els = hv.group.elements()
    brute = set()
    for x in els:
        for y in els:
            g = hv.group
            brute |= {g.multiply(x, y), g.multiply(x, g.inverse(y))} | fixed_elements(g)
    assert hv.hyper_product_sets(els, els).as_set() == brute == set(els)


def test_set_product_rejects_empty():
    hv = HvGroup(4)
    with pytest.raises(ValueError):
        hv.hyper_product_sets([], [E(1)])


@pytest.mark.parametrize("n", [4, 9, 16])
def test_x_times_group_is_group(n):
    hv = HvGroup(n)
    els = hv.group.elements()
    for x in els:
        assert hv.hyper_product_sets([x], els).as_set() == set(els)
        assert hv.hyper_product_sets(els, [x]).as_set() == set(els)


def test_commutes_examples():
    hv = HvGroup(16)
    for i in range(16):
        assert hv.commutes(E(i), E((i + 1) % 16))
    for x in hv.group.elements():
        assert hv.commutes(x, x)
    assert not hv.commutes(E(1), E(5))


@pytest.mark.parametrize("n", range(2, 17))
def test_commutes_reflexive_symmetric(n):
    hv = HvGroup(n)
    els = hv.group.elements()
    for x, y in product(els, repeat=2):
        assert hv.commutes(x, y) == hv.commutes(y, x)
        expected = (hv.hyper_product(x, y).as_set() == hv.hyper_product(y, x).as_set())
        assert hv.commutes(x, y) == expected


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_rotation_neighbours_even_n(n):
    hv = HvGroup(n)
    for i in range(n):
        for d in (1, -1, 2, -2, n // 2):
            assert hv.commutes(E(i), E((i + d) % n))


@pytest.mark.parametrize("n", [2, 4])
def test_weak_associativity_small(n):
    r = check_weak_associativity(HvGroup(n))
    assert r.holds and r.witness is None
    assert r.checked == (2 * n) ** 3


@pytest.mark.parametrize("n", [4, 16])
def test_reproduction(n):
    r = check_reproduction(HvGroup(n))
    assert r.holds


def test_axiom_failure_reports_witness():
    # x o y = {x y a} is not associative once a reflection is involved:
    # e o (e o b) = {a^-2 b} but (e o e) o b = {b}
    def shifted(group, x, y):
        return {group.multiply(group.multiply(x, y), group.a(1))}

    hv = HvGroup(3, hyperoperation=shifted)
    wa = check_weak_associativity(hv)
    assert not wa.holds
    assert wa.witness == (E(0), E(0), E(0, True))

    def const(group, x, y):
        return {x} if x == y else {group.identity}

    hv = HvGroup(3, hyperoperation=const)
    rep = check_reproduction(hv)
    assert not rep.holds and rep.witness == (E(0),)
    assert "witness" in rep.describe()
