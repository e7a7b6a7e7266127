import pytest

import knights


def test_build_and_validate():
    t = knights.build(16, 12)
    assert t["dims"] == [12, 16]
    assert len(t["cells"]) == 192
    assert knights.validate(**t) == (True, "ok")


def test_tampered_tour_is_rejected():
    t = knights.build(16, 12)
    t["cells"][3], t["cells"][4] = t["cells"][4], t["cells"][3]
    ok, msg = knights.validate(**t)
    assert not ok and "illegal" in msg


def test_metrics_golden():
    m = knights.metrics(**knights.build(30, 30))
    assert m == {"turns": 266, "crossings": 374}


def test_unsupported_is_value_error():
    with pytest.raises(knights.UnsupportedDims):
        knights.build(14, 12)
    with pytest.raises(ValueError):
        knights.build_giraffe(50, 30)


def test_extensions():
    odd = knights.build_odd(17, 13)
    assert len(odd["cells"]) == 220
    assert knights.validate(**odd, missing=[[0, 0]])[0]
    assert knights.validate(**knights.build_symmetric(38))[0]
    assert knights.validate(**knights.build_multidim([12, 16, 5]))[0]
    g = knights.build_giraffe(52, 30)
    assert g["leaper"] == (1, 4)
    assert knights.validate(**g)[0]


def test_algebra_and_bound():
    assert knights.compose("VVHHVHHV") == "D"
    assert knights.compose("VHVH") == "HV"
    b = knights.crossing_bound()
    assert b["nodes"] == 216
    assert b["mean"] == (3, 1)


def test_plan_indexing():
    p = knights.Plan(30, 30)
    cells = knights.build(30, 30)["cells"]
    assert len(p) == 900
    for k in range(0, 900, 37):
        assert p.cell_at(k) == cells[k]
        assert p.index_of(*cells[k]) == k


def test_oracle_and_giraffe_effect():
    assert knights.find_closed_tour(6, 4) is None
    assert knights.find_closed_tour(6, 5) is not None
    u = knights.giraffe_effect("U")
    assert u == knights.giraffe_effect("HEEL") == knights.giraffe_effect("FLIPPED_HEEL")
    assert [u[u[i]] for i in range(16)] == list(range(16))
