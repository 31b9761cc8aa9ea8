import networkx as nx
import pytest

from hvnssd.catalog import (FIGURE_ORDERS, format_summary_csv, gamma, load_catalog, parse_catalog,
                            single_substitutions, discrepancies, verify_all, verify_gamma)
from hvnssd.constructions import bridge_join
from hvnssd.dihedral import GroupElement
from hvnssd.hyperop import HvGroup

E = GroupElement


def test_catalog_has_43_sets():
    cat = load_catalog()
    assert sorted(cat) == list(range(1, 44))
    assert {len(g.elements) for g in cat.values()} == {2, 4, 6, 8, 10, 12, 14, 16}
    for gid, g in cat.items():
        assert len(g.elements) == FIGURE_ORDERS[gid]


def test_spot_entries():
    assert gamma(1).n == 16 and gamma(1).elements == (E(1), E(3))
    assert len(gamma(19).elements) == 10
    assert len(gamma(43).elements) == 16
    with pytest.raises(KeyError):
        gamma(44)


@pytest.mark.parametrize("gid", [1, 2, 3, 8, 24, 42, 43])
def test_verify_selected(gid):
    r = verify_gamma(gid)
    assert r.certificate.verdict
    assert r.order == FIGURE_ORDERS[gid]
    assert r.molecular


def test_gamma3_is_bridge_of_gamma1_gamma2():
    g1, g2, g3 = gamma(1), gamma(2), gamma(3)
    hv = HvGroup(16)
    joined = bridge_join(hv, g1.elements, g2.elements)
    r3 = verify_gamma(3)
    assert joined.graph == r3.graph
    H = nx.Graph(r3.graph.edges())
    assert nx.is_isomorphic(H, nx.path_graph(6))
    assert set(g3.elements) == set(g1.elements) | set(g2.elements)


def test_discrepancies_are_14_and_36():
    results = verify_all()
    assert [r.gamma.id for r in results if not r.certificate.verdict] == [14, 36]
    found = {d.id: d for d in discrepancies(results)}
    assert set(found) == {14, 36}
    assert found[14].certificate.det == 0 and found[14].connected
    assert found[36].isolated == ("a^17",)
    assert "a^17 -> a^17 b" in found[36].substitutions
    assert "det=0" in found[14].describe()


def test_single_substitutions_repair_gamma14():
    fixes = single_substitutions(14)
    assert (E(3, True), E(9, True)) in fixes


def test_summary_csv():
    lines = format_summary_csv(verify_all()).splitlines()
    assert lines[0] == "id,n,order,figure_order,nssd,molecular"
    assert len(lines) == 44
    assert lines[14] == "14,16,10,10,false,true"


@pytest.mark.parametrize("text", [
    "1; 16",
    "1; 16; a, a\n1; 16; a^3, a^5",
    "1; 16; a, a",
    "1; 16; a, q",
    "1; 16; a, a^3, a^5",
])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_catalog(text)


def test_parse_comments_and_blank_lines():
    cat = parse_catalog("# header\n\n2; 8; a, a^3, a^5, a^7  # trailing\n")
    assert cat[2].n == 8 and len(cat[2].elements) == 4


def test_load_catalog_from_path(tmp_path):
    p = tmp_path / "c.txt"
    p.write_text("1; 6; a, a^2\n")
    assert load_catalog(p)[1].elements == (E(1), E(2))
