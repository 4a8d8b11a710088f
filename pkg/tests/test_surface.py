import json

import pytest

from surfalg import fixtures
from surfalg.surface import (
    Arc,
    MarkedSurface,
    Triangulation,
    excluded_for_certificates,
    has_self_folded,
    min_valency,
    triangulation_from_json,
    triangulation_to_json,
    valency,
    validate_triangulation,
)


def test_builtin_fixtures_are_valid():
    for name in fixtures.BUILTIN_NAMES:
        t = fixtures.builtin_triangulation(name)
        report = validate_triangulation(t)
        assert report.ok, "%s: %s" % (name, report.violations)


def test_arc_and_triangle_counts():
    # 6g - 6 + 3p arcs and two triangles per three arcs
    expected = {"torus": (3, 2), "genus2": (9, 6), "sphere5": (9, 6),
                "tetra": (6, 4)}
    for name, (arcs, tris) in expected.items():
        t = fixtures.builtin_triangulation(name)
        g = t.surface.genus
        p = len(t.surface.punctures)
        assert len(t.arcs) == 6 * g - 6 + 3 * p == arcs
        assert len(t.triangles) == tris
        assert 3 * len(t.triangles) == 2 * len(t.arcs)


def test_valency_sums_to_twice_arcs():
    for name in fixtures.BUILTIN_NAMES:
        t = fixtures.builtin_triangulation(name)
        total = sum(valency(t, p) for p in t.surface.punctures)
        assert total == 2 * len(t.arcs)


def test_torus_valency():
    t = fixtures.torus()
    assert valency(t, "p") == 6
    assert min_valency(t) == 6


def test_valency_unknown_puncture():
    t = fixtures.torus()
    with pytest.raises(KeyError):
        valency(t, "nope")


def test_self_folded_detection():
    assert not has_self_folded(fixtures.torus())
    assert not has_self_folded(fixtures.genus2())
    assert has_self_folded(fixtures.sphere5_triangulation())
    assert not has_self_folded(fixtures.tetra())


def test_excluded_surfaces():
    # spheres with up to four punctures are excluded from certificates
    assert excluded_for_certificates(MarkedSurface(0, ("a", "b", "c")))
    assert excluded_for_certificates(MarkedSurface(0, ("a", "b", "c", "d")))
    assert not excluded_for_certificates(
        MarkedSurface(0, ("a", "b", "c", "d", "e")))
    assert not excluded_for_certificates(MarkedSurface(1, ("p",)))
    assert not excluded_for_certificates(MarkedSurface(2, ("p",)))


def test_validation_catches_bad_arc_count():
    t = Triangulation(
        MarkedSurface(1, ("p",)),
        (Arc("1", ("p", "p")), Arc("2", ("p", "p"))),
        (("1", "2", "1"),),
    )
    report = validate_triangulation(t)
    assert not report.ok
    assert any("arc" in v for v in report.violations)


def test_validation_catches_wrong_slot_count():
    # four arcs in three triangle slots: arc 3 appears once, arc 1 thrice
    t = Triangulation(
        MarkedSurface(1, ("p",)),
        (Arc("1", ("p", "p")), Arc("2", ("p", "p")), Arc("3", ("p", "p"))),
        (("1", "2", "3"), ("1", "2", "1")),
    )
    report = validate_triangulation(t)
    assert not report.ok


def test_validation_unknown_arc_in_triangle():
    t = Triangulation(
        MarkedSurface(1, ("p",)),
        (Arc("1", ("p", "p")), Arc("2", ("p", "p")), Arc("3", ("p", "p"))),
        (("1", "2", "3"), ("1", "2", "9")),
    )
    report = validate_triangulation(t)
    assert not report.ok
    assert any("9" in v for v in report.violations)


def test_json_round_trip():
    for name in fixtures.BUILTIN_NAMES:
        t = fixtures.builtin_triangulation(name)
        text = triangulation_to_json(t)
        back = triangulation_from_json(text)
        assert back == t


def test_json_rejects_unknown_field():
    t = fixtures.torus()
    doc = json.loads(triangulation_to_json(t))
    doc["extra"] = 1
    with pytest.raises(ValueError, match="extra"):
        triangulation_from_json(json.dumps(doc))


def test_json_rejects_missing_field():
    t = fixtures.torus()
    doc = json.loads(triangulation_to_json(t))
    del doc["triangles"]
    with pytest.raises(ValueError, match="triangles"):
        triangulation_from_json(json.dumps(doc))
