"""Front parsing and the tb / linking arithmetic on the shipped fixtures."""

import pytest

from corktwist import front
from corktwist.front import FrontParseError, parse_front, stabilize


def test_lens_unknot_tb(load):
    d = parse_front(load("lens.front"))
    assert d.components() == ["U"]
    assert d.writhe("U") == 0
    assert d.cusp_count("U") == 2
    assert d.tb("U") == -1


def test_trefoil_tb(load):
    d = parse_front(load("trefoil.front"))
    assert d.tb("K") == 1
    assert d.writhe("K") == 3
    assert d.cusp_count("K") == 4
    assert d.knottype("K") == "right_trefoil"
    report = d.tb_report("K")
    assert [c["sign"] for c in report["crossings"]] == [1, 1, 1]
    assert len(report["cusps"]) == 4


def test_trefoil_over_handle_sheds_cusps(load):
    d = parse_front(load("trefoil_handle.front"))
    assert d.tb("K") == 2
    assert d.handle_passes("K") == 2
    assert d.cusp_count("K") == 2


def test_stabilization_drops_tb_by_one_each_time(load):
    d = parse_front(load("trefoil.front"))
    tb = d.tb("K")
    for step in range(10):
        d = stabilize(d, "K", 1 if step % 2 else -1)
        assert d.tb("K") == tb - step - 1
    assert d.tb("K") == tb - 10


def test_stabilization_is_a_zigzag(load):
    # two new cusps, the crossing picture untouched
    d = parse_front(load("lens.front"))
    before = d.tb_report("U")
    s = stabilize(d, "U", 1)
    after = s.tb_report("U")
    assert len(after["crossings"]) == len(before["crossings"])
    assert after["writhe"] == before["writhe"]
    assert after["cusp_count"] == before["cusp_count"] + 2


def test_linking_number_hopf():
    text = """
arc A : (0,0) (4,4) (8,0)
arc A : (8,0) (4,-4) (0,0)
arc B : (5,1) (9,5) (13,1)
arc B : (13,1) (9,-3) (5,1)
orient A +
orient B +
"""
    d = parse_front(text)
    lk = d.linking_number("A", "B")
    assert lk == d.linking_number("B", "A")
    assert abs(lk) == 1


def test_two_component_symmetric_fixture(load):
    # the cork diagram's front: linking number one, both unknots with a kink
    from corktwist import kirby
    d = kirby.parse_kirby(load("mazur.kirby")).front
    assert abs(d.linking_number("K1", "K2")) == 1
    assert d.writhe("K1") == d.writhe("K2")


def test_parse_errors_carry_line_numbers():
    with pytest.raises(FrontParseError) as info:
        parse_front("arc K : (0,0) (1,1)\nnonsense Z\n")
    assert info.value.line == 2
    assert "line 2" in str(info.value)

    with pytest.raises(front.FrontError):
        parse_front("arc K : (0,0)\n")  # an arc needs two points

    with pytest.raises(front.FrontError):
        parse_front("orient K +\n")  # component never drawn


def test_vertical_segments_rejected():
    with pytest.raises(front.FrontError):
        parse_front("arc K : (0,0) (0,4) (2,0) (0,0)\n")


def test_rational_coordinates_exact():
    text = "arc U : (0,0) (1/3,1/7) (2,0)\narc U : (2,0) (1,-1/2) (0,0)\norient U +\n"
    d = parse_front(text)
    assert d.tb("U") == -1


def test_fixture_fronts_roundtrip_through_doc(load):
    from corktwist import kirby
    d = kirby.parse_kirby(load("mazur.kirby"))
    doc = kirby.kirby_to_doc(d)
    back = kirby.kirby_from_doc(doc)
    assert kirby.kirby_to_doc(back) == doc
