import pytest

from jonesone.cli import default_table
from jonesone.pd import InvalidPD, PDCode, TableEntry, dump_table, load_table

TREFOIL = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]


def test_trefoil_basics():
    pd = PDCode.from_list(TREFOIL)
    assert len(pd) == 3
    assert pd.is_knot()
    assert pd.is_alternating()
    assert abs(pd.writhe()) == 3
    assert pd.mirror().writhe() == -pd.writhe()
    assert PDCode.from_list(pd.to_list()) == pd


def test_label_must_appear_twice():
    with pytest.raises(InvalidPD):
        PDCode.from_list([[1, 2, 3, 4]])


def test_hopf_link_has_two_components():
    pd = PDCode.from_list([[4, 1, 3, 2], [2, 3, 1, 4]])
    assert len(pd.components) == 2
    assert not pd.is_knot()


def test_bundled_table_loads():
    table = load_table(default_table())
    assert len(table) == 250
    assert table[0].name == "0_1" and table[0].pd == []
    names = [e.name for e in table]
    assert len(set(names)) == len(names)
    for e in table:
        pd = e.code()
        assert pd.is_knot()
        assert len(pd) <= 10
        if e.alternating:
            # the listed diagrams of alternating knots are alternating
            assert pd.is_alternating()


def test_table_roundtrip(tmp_path):
    entries = [TableEntry("3_1", TREFOIL, True), TableEntry("0_1", [])]
    path = tmp_path / "t.jsonl"
    dump_table(entries, path)
    assert load_table(path) == entries


def test_table_errors(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"name": "x"}\n')
    with pytest.raises(ValueError):
        load_table(path)
