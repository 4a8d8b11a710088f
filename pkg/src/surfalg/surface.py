"""Triangulations of closed oriented marked surfaces.

A triangulation is stored combinatorially: arcs with endpoint punctures
(loops allowed) and triangles as cyclically ordered triples of arc ids.  The
cyclic order of each triangle follows the surface orientation (sides listed
clockwise); arrow directions of the derived quiver depend on it.

Counting invariants for an ideal triangulation of a closed surface of genus g
with p punctures:

    #arcs      = 6 g - 6 + 3 p
    #triangles = (2/3) #arcs
    sum of valencies = 2 #arcs   (a loop counts twice at its puncture)
"""

import json
from dataclasses import dataclass

__all__ = [
    "MarkedSurface",
    "Arc",
    "Triangulation",
    "ValidationReport",
    "validate_triangulation",
    "valency",
    "min_valency",
    "has_self_folded",
    "excluded_for_certificates",
    "triangulation_to_json",
    "triangulation_from_json",
]


@dataclass(frozen=True)
class MarkedSurface:
    genus: int
    punctures: tuple

    def __post_init__(self):
        object.__setattr__(self, "punctures", tuple(self.punctures))


@dataclass(frozen=True)
class Arc:
    """An arc between two punctures; endpoints may coincide (a loop)."""

    id: str
    endpoints: tuple

    def __post_init__(self):
        object.__setattr__(self, "endpoints", tuple(self.endpoints))

    def is_loop(self):
        return self.endpoints[0] == self.endpoints[1]


@dataclass(frozen=True)
class Triangulation:
    surface: MarkedSurface
    arcs: tuple
    triangles: tuple

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(self.arcs))
        object.__setattr__(
            self, "triangles", tuple(tuple(t) for t in self.triangles)
        )

    def arc_by_id(self, arc_id):
        for a in self.arcs:
            if a.id == arc_id:
                return a
        raise KeyError("unknown arc id %r" % (arc_id,))


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def ok(self):
        return len(self.violations) == 0

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(self.violations)


def validate_triangulation(t):
    """Check the structural and counting invariants of a triangulation.

    Violations are data, not faults: the report lists every failed
    invariant and is empty iff all of them hold.
    """
    v = []
    punctures = t.surface.punctures
    if len(punctures) == 0:
        v.append("no punctures")
    if any(p == "" for p in punctures):
        v.append("empty puncture identifier")
    if len(set(punctures)) != len(punctures):
        v.append("duplicate puncture identifiers")
    if t.surface.genus < 0:
        v.append("negative genus")

    arc_ids = [a.id for a in t.arcs]
    if any(i == "" for i in arc_ids):
        v.append("empty arc identifier")
    if len(set(arc_ids)) != len(arc_ids):
        v.append("duplicate arc identifiers")
    known = set(arc_ids)
    pset = set(punctures)
    for a in t.arcs:
        if len(a.endpoints) != 2:
            v.append("arc %r must have exactly two endpoints" % a.id)
            continue
        for q in a.endpoints:
            if q not in pset:
                v.append("arc %r has unknown endpoint %r" % (a.id, q))

    expected_arcs = 6 * t.surface.genus - 6 + 3 * len(punctures)
    if len(t.arcs) != expected_arcs:
        v.append(
            "arc count %d != 6*genus - 6 + 3*punctures = %d"
            % (len(t.arcs), expected_arcs)
        )
    if 3 * len(t.triangles) != 2 * len(t.arcs):
        v.append(
            "3 * triangle count (%d) != 2 * arc count (%d)"
            % (3 * len(t.triangles), 2 * len(t.arcs))
        )

    slot_count = {}
    for tri in t.triangles:
        if len(tri) != 3:
            v.append("triangle %r does not have three sides" % (tri,))
            continue
        for arc_id in tri:
            if arc_id not in known:
                v.append("unknown arc %r in triangle %r" % (arc_id, tri))
            slot_count[arc_id] = slot_count.get(arc_id, 0) + 1
    for arc_id in arc_ids:
        c = slot_count.get(arc_id, 0)
        if c != 2:
            v.append(
                "arc %r appears in %d triangle slots, expected 2" % (arc_id, c)
            )
    return ValidationReport(tuple(v))


def valency(t, p):
    """Number of arc-endpoint incidences at puncture p; a loop counts twice."""
    if p not in set(t.surface.punctures):
        raise KeyError("unknown puncture id %r" % (p,))
    total = 0
    for a in t.arcs:
        total += list(a.endpoints).count(p)
    return total


def min_valency(t):
    return min(valency(t, p) for p in t.surface.punctures)


def has_self_folded(t):
    """True iff some triangle uses one arc as two of its three sides."""
    return any(len(set(tri)) < 3 for tri in t.triangles)


def excluded_for_certificates(surface):
    """Surfaces excluded from growth/periodicity certificates.

    A sphere with 4 or fewer punctures is out of range of the certified
    statements (the 4-puncture sphere is of polynomial growth).
    """
    return surface.genus == 0 and len(surface.punctures) <= 4


_TOP_FIELDS = {"genus", "punctures", "arcs", "triangles"}
_ARC_FIELDS = {"id", "endpoints"}


def triangulation_to_json(t, indent=2):
    doc = {
        "genus": t.surface.genus,
        "punctures": list(t.surface.punctures),
        "arcs": [
            {"id": a.id, "endpoints": list(a.endpoints)} for a in t.arcs
        ],
        "triangles": [list(tri) for tri in t.triangles],
    }
    return json.dumps(doc, indent=indent)


def triangulation_from_json(text):
    """Parse the triangulation file format; unknown fields are rejected.

    Accepts either the JSON text or an already-decoded document object.
    """
    doc = json.loads(text) if isinstance(text, str) else text
    if not isinstance(doc, dict):
        raise ValueError("triangulation document must be a JSON object")
    unknown = set(doc) - _TOP_FIELDS
    if unknown:
        raise ValueError(
            "unknown field(s) in triangulation document: %s"
            % ", ".join(sorted(unknown))
        )
    missing = _TOP_FIELDS - set(doc)
    if missing:
        raise ValueError(
            "missing field(s) in triangulation document: %s"
            % ", ".join(sorted(missing))
        )
    if not isinstance(doc["genus"], int):
        raise ValueError("field 'genus' must be an integer")
    if not isinstance(doc["punctures"], list) or not all(
        isinstance(p, str) for p in doc["punctures"]
    ):
        raise ValueError("field 'punctures' must be a list of strings")
    arcs = []
    if not isinstance(doc["arcs"], list):
        raise ValueError("field 'arcs' must be a list")
    for rec in doc["arcs"]:
        if not isinstance(rec, dict):
            raise ValueError("each arc must be an object")
        unknown = set(rec) - _ARC_FIELDS
        if unknown:
            raise ValueError(
                "unknown field(s) in arc record: %s" % ", ".join(sorted(unknown))
            )
        if "id" not in rec or "endpoints" not in rec:
            raise ValueError("arc record needs fields 'id' and 'endpoints'")
        if not isinstance(rec["id"], str):
            raise ValueError("arc field 'id' must be a string")
        ep = rec["endpoints"]
        if (
            not isinstance(ep, list)
            or len(ep) != 2
            or not all(isinstance(q, str) for q in ep)
        ):
            raise ValueError(
                "arc field 'endpoints' must be a list of two puncture ids"
            )
        arcs.append(Arc(rec["id"], tuple(ep)))
    if not isinstance(doc["triangles"], list):
        raise ValueError("field 'triangles' must be a list")
    triangles = []
    for tri in doc["triangles"]:
        if (
            not isinstance(tri, list)
            or len(tri) != 3
            or not all(isinstance(x, str) for x in tri)
        ):
            raise ValueError(
                "each triangle must be a list of three arc ids"
            )
        triangles.append(tuple(tri))
    surface = MarkedSurface(doc["genus"], tuple(doc["punctures"]))
    return Triangulation(surface, tuple(arcs), tuple(triangles))
