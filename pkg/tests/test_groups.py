import pytest

from dunkl.groups import (RootDatum, GroupElement, parse_family,
                          UnsupportedFamilyError, mat_identity)


def test_group_orders():
    assert len(RootDatum("A", 3, 4).elements) == 24
    assert len(RootDatum("B", 3, 3).elements) == 48
    assert len(RootDatum("D", 3, 3).elements) == 24
    assert len(RootDatum("A1", 3, 3).elements) == 8


def test_positive_root_counts():
    assert len(RootDatum("A", 3, 4).positive_roots) == 6
    assert len(RootDatum("B", 3, 3).positive_roots) == 9
    assert len(RootDatum("D", 4, 4).positive_roots) == 12
    assert len(RootDatum("A1", 5, 5).positive_roots) == 5


def test_orbit_structure():
    assert RootDatum("A", 3, 4).num_orbits == 1
    assert RootDatum("B", 3, 3).num_orbits == 2       # long and short roots
    assert RootDatum("A1", 3, 3).num_orbits == 3      # one per factor
    assert RootDatum("A1", 3, 3, single_c=True).num_orbits == 1


def test_conjugacy_classes():
    s4 = RootDatum("A", 3, 4)
    assert len(s4.conjugacy_classes()) == 5           # partitions of 4
    b3 = RootDatum("B", 3, 3)
    assert len(b3.conjugacy_classes()) == 10          # bipartitions of 3
    assert sum(len(c) for c in b3.conjugacy_classes()) == 48


def test_minus_identity_membership():
    assert RootDatum("A1", 3, 3).contains_minus_identity()[0]
    assert RootDatum("B", 3, 3).contains_minus_identity()[0]
    assert not RootDatum("A", 3, 4).contains_minus_identity()[0]


def test_reflections_are_involutions():
    rd = RootDatum("B", 2, 2)
    ident = GroupElement(mat_identity(2))
    for s in rd.reflections:
        assert s * s == ident
        assert not s.is_identity()


def test_apply_exp_roundtrip():
    rd = RootDatum("B", 3, 3)
    for s in rd.reflections:
        exps = (2, 1, 0)
        img, sgn = s.apply_exp(exps)
        back, sgn2 = s.inverse().apply_exp(img)
        assert back == exps and sgn * sgn2 == 1


def test_cycle_type_labels():
    rd = RootDatum("A", 3, 4)
    labels = {rd.cycle_type_label(rd.elements[c[0]])
              for c in rd.conjugacy_classes()}
    assert labels == {"1,1,1,1", "2,1,1", "2,2", "3,1", "4"}


def test_parse_family():
    assert parse_family("A1^5") == ("A1", 5)
    assert parse_family("b") == ("B", None)
    with pytest.raises(UnsupportedFamilyError):
        parse_family("E8")
    with pytest.raises(UnsupportedFamilyError):
        parse_family("A1^x")


def test_mul_and_inv_tables():
    rd = RootDatum("A", 2, 3)
    n = len(rd.elements)
    for g in range(n):
        assert rd.mul_table[g][rd.inv_table[g]] == rd.identity_index
