"""End-to-end smoke tests for the python bindings."""

import pytest

import arcnum


def test_arc_numbers():
    assert arcnum.arc_number("AABBCC") == 3
    assert arcnum.arc_number("ABAB") == 2
    assert arcnum.arc_number("ABCABC") == 2
    assert arcnum.arc_number("DAABBCCD") == 4
    assert arcnum.arc_number("") == 1


def test_parse_errors_become_value_errors():
    with pytest.raises(ValueError, match="'B'"):
        arcnum.arc_number("AAB")


def test_canonical_form_and_equivalence():
    assert arcnum.canonical_form("BCCB") == "AABB"
    assert arcnum.is_equivalent("ABAB", "BABA")
    assert not arcnum.is_equivalent("AABB", "ABAB")
    assert arcnum.relabel("1 2 1 2") == "ABAB"


def test_partitions():
    assert arcnum.minimal_partition("AABBCC") == [0, 2, 4]
    assert arcnum.is_embedded_partition("AABBCC", [0, 2, 4])
    assert not arcnum.is_embedded_partition("AABBCC", [0, 2])
    assert arcnum.reach_table("ABAB") == [2, 3, 0, 1]
    assert arcnum.greedy_partition("AABBCC", 5) == [5, 0, 2, 4]


def test_stars_and_witnesses():
    assert arcnum.make_star(1, 1) == "AABBCC"
    assert arcnum.make_star(2, 1) == "ABCADCEDBE"
    assert arcnum.is_star("ABCABC") == (2, 0)
    assert arcnum.is_star("ABAB") is None

    witness = arcnum.extract_star("ABCADCEDBE")
    assert witness["t"] == 2
    assert witness["a"] == 1
    assert sorted(witness["chords"]) == ["A", "B", "C", "D", "E"]
    assert arcnum.verify_witness("ABCADCEDBE", witness["t"], witness["a"],
                                 witness["chords"])
    assert not arcnum.verify_witness("ABCABC", 1, 1, ["A", "B", "C"])

    with pytest.raises(ValueError):
        arcnum.extract_star("ABAB")


def test_oracles_cross_validate():
    for word in arcnum.enumerate_diagrams(3):
        assert arcnum.arc_number(word) == arcnum.brute_force_arc_number(word)
    assert len(arcnum.enumerate_diagrams(4)) == 105
    found = arcnum.brute_force_find_star("ABCADCEDBE", 1)
    assert found is not None and found["t"] == 2
    assert arcnum.brute_force_find_star("ABAB", 1) is None


def test_random_diagram_is_deterministic():
    assert arcnum.random_diagram(5, 7) == arcnum.random_diagram(5, 7)
    assert arcnum.random_diagram(0, 1) == ""


def test_render_svg():
    svg = arcnum.render_svg("AABBCC", cuts=True)
    assert svg.count('<line class="chord') == 3
    assert svg.count('<line class="cut"') == 3
    assert svg.count('<circle class="dot"') == 6
