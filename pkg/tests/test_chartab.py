import json

import pytest

from conjgen.chartab import (load_table, save_table, load_class_function,
                             match_classes, TableError, is_prime)
from conjgen.cyclotomic import parse
from tests.conftest import data_file

ALL_TABLES = ["s3", "s4", "d8", "q8", "a4", "sl23", "a5", "a6", "l27",
              "m11", "u33", "j2"]


def test_all_shipped_tables_validate(tables):
    for name in ALL_TABLES:
        t = tables(name)
        assert not t.is_frame
        assert t.n_classes == len(t.irreducibles)


def test_a5_degrees(tables):
    t = tables("a5")
    degrees = sorted(int(r[0].to_rational()) for r in t.irreducibles)
    assert degrees == [1, 3, 3, 4, 5]
    assert sum(d * d for d in degrees) == 60


def test_perturbed_table_fails(tables, tmp_path):
    path = tmp_path / "bad.ctab"
    save_table(tables("a5"), path)
    doc = json.loads(path.read_text())
    doc["irreducibles"][2][1] = "5"
    path.write_text(json.dumps(doc))
    with pytest.raises(TableError):
        load_table(path)


def test_power_class(tables):
    t = tables("a4")
    i3a, i3b = t.index_of("3a"), t.index_of("3b")
    # the two classes of 3-elements are mutually inverse
    assert t.inverse_class(i3a) == i3b
    assert t.inverse_class(i3b) == i3a
    assert t.power_class(i3a, 0) == 0
    assert t.power_class(t.index_of("2a"), 2) == 0
    # composite exponents factor through the prime maps
    tj = tables("j2")
    for k in range(tj.n_classes):
        assert tj.power_class(tj.power_class(k, 2), 3) == tj.power_class(k, 6)


def test_inverse_class_conjugate_values(tables):
    for name in ("a5", "l27", "j2"):
        t = tables(name)
        for k in range(t.n_classes):
            ki = t.inverse_class(k)
            for row in t.irreducibles:
                assert row[ki] == row[k].conj()


def test_classes_with_order_divisible_by(tables):
    t = tables("a5")
    fives = t.classes_with_order_divisible_by(5)
    assert [t.classes[k].label for k in fives] == ["5a", "5b"]
    assert tables("s3").classes_with_order_divisible_by(5) == []
    with pytest.raises(TableError):
        t.classes_with_order_divisible_by(1)
    with pytest.raises(TableError):
        t.classes_with_order_divisible_by(6)


def test_tables_match_groups(groups, tables):
    for name in ALL_TABLES:
        G, t = groups(name), tables(name)
        mapping, ambiguous = match_classes(G, t)
        assert sorted(mapping) == list(range(t.n_classes))
        gcls = G.conjugacy_classes()
        for i, j in enumerate(mapping):
            assert gcls[i].element_order == t.classes[j].element_order
            assert gcls[i].centralizer_order == t.classes[j].centralizer_order


def test_frame_table_loads_without_irreducibles():
    t = load_table(data_file("su62_frame.ctab"))
    assert t.is_frame
    assert t.power_class(t.index_of("9g"), 3) == t.index_of("3f")
    assert t.inverse_class(t.index_of("7a")) == t.index_of("7a")


def test_class_function_loading():
    t = load_table(data_file("su62_frame.ctab"))
    cf = load_class_function(data_file("su62_phi15.cfn"), t)
    assert cf.dim == 15
    assert cf.characteristic == 2
    assert cf.value(t.index_of("3f")) == parse("6")


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
