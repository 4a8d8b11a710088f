"""Quiver with potential of a triangulation, and the f/g arrow permutations.

Path composition reads LEFT TO RIGHT throughout the package: a sequence of
arrows (l1, ..., ln) is composable iff target(l_i) = source(l_{i+1}).

For a triangulation with no self-folded triangles and all valencies >= 3:

* every triangle (a, b, c), listed in the cyclic order induced by the
  surface orientation, contributes the arrows a -> b, b -> c, c -> a;
* f cycles the three arrows of each triangle, so x f(x) f^2(x) is a
  3-cycle and f^3 = id;
* g sends an arrow x to the arrow out of target(x) that belongs to the
  other triangle containing the arc target(x); the orbit
  (x)(g x)(g^2 x)... is a composable cycle surrounding one puncture, and
  its length equals the valency of that puncture.

The potential is the sum of the triangle 3-cycles (coefficient +1) minus,
for each puncture q, lambda_q times the cycle surrounding q (lambda_q = 1
by default).  Its cyclic derivatives generate the relation ideal of the
algebra module.
"""

import json
from dataclasses import dataclass, field

__all__ = [
    "Arrow",
    "Quiver",
    "Potential",
    "ArrowMaps",
    "Relation",
    "RelationSet",
    "canonical_rotation",
    "build_quiver",
    "arrow_maps",
    "build_potential",
    "cyclic_derivative",
    "jacobian_relations",
    "quiver_to_dot",
    "quiver_to_json",
    "potential_to_json",
]


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate arrow ids")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise ValueError(
                    "arrow %r has endpoint outside the vertex set" % a.id
                )
        object.__setattr__(self, "_by_id", {a.id: a for a in self.arrows})

    def arrow(self, arrow_id):
        try:
            return self._by_id[arrow_id]
        except KeyError:
            raise KeyError("unknown arrow id %r" % (arrow_id,))

    def has_arrow(self, arrow_id):
        return arrow_id in self._by_id

    def arrows_out(self, v):
        return tuple(a for a in self.arrows if a.source == v)

    def arrows_in(self, v):
        return tuple(a for a in self.arrows if a.target == v)

    def path_source(self, path):
        return self.arrow(path[0]).source

    def path_target(self, path):
        return self.arrow(path[-1]).target

    def is_composable(self, path):
        """True iff consecutive arrows chain: target of each = source of next."""
        for x, y in zip(path, path[1:]):
            if self.arrow(x).target != self.arrow(y).source:
                return False
        return True


def canonical_rotation(path):
    """Lexicographically least rotation of a cyclic arrow-id sequence."""
    path = tuple(path)
    if not path:
        raise ValueError("empty cyclic path")
    n = len(path)
    best = path
    for k in range(1, n):
        cand = path[k:] + path[:k]
        if cand < best:
            best = cand
    return best


@dataclass(frozen=True)
class Potential:
    """Finite map from canonical cyclic paths to nonzero coefficients."""

    terms: dict

    def __post_init__(self):
        clean = {}
        for path, coeff in self.terms.items():
            path = tuple(path)
            if coeff == 0:
                continue
            if canonical_rotation(path) != path:
                raise ValueError(
                    "potential term %r is not stored as its canonical rotation"
                    % (path,)
                )
            clean[path] = coeff
        object.__setattr__(self, "terms", clean)

    def arrows_used(self):
        used = set()
        for path in self.terms:
            used.update(path)
        return used


@dataclass(frozen=True)
class Relation:
    """A scalar linear combination of parallel composable paths."""

    terms: tuple  # ((path_tuple, coeff), ...) sorted by (len, path)

    @staticmethod
    def from_dict(d):
        items = [(tuple(p), int(c)) for p, c in d.items() if c != 0]
        items.sort(key=lambda it: (len(it[0]), it[0]))
        return Relation(tuple(items))

    @property
    def min_length(self):
        return min(len(p) for p, _ in self.terms)

    @property
    def max_length(self):
        return max(len(p) for p, _ in self.terms)


@dataclass(frozen=True)
class RelationSet:
    generators: tuple

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for r in self.generators:
            if not r.terms:
                raise ValueError("zero relation in relation set")


@dataclass(frozen=True)
class ArrowMaps:
    """The triangle rotation f and the puncture rotation g.

    f and g are permutations of arrow ids.  orbit_puncture maps the id of
    one representative arrow per g-orbit to the puncture its orbit
    surrounds (keys are the minimal arrow id of each orbit).
    """

    f: dict
    g: dict
    orbit_puncture: dict = field(default_factory=dict)

    def f_orbit(self, arrow_id):
        return (arrow_id, self.f[arrow_id], self.f[self.f[arrow_id]])

    def f_orbits(self):
        seen = set()
        out = []
        for a in sorted(self.f):
            if a in seen:
                continue
            orb = self.f_orbit(a)
            seen.update(orb)
            out.append(orb)
        return out

    def g_orbit(self, arrow_id):
        """The g-orbit of an arrow, in composable cyclic order (x, gx, ...)."""
        orb = [arrow_id]
        cur = self.g[arrow_id]
        while cur != arrow_id:
            orb.append(cur)
            cur = self.g[cur]
        return tuple(orb)

    def g_orbits(self):
        seen = set()
        out = []
        for a in sorted(self.g):
            if a in seen:
                continue
            orb = self.g_orbit(a)
            seen.update(orb)
            out.append(orb)
        return out

    def orbit_length(self, arrow_id):
        return len(self.g_orbit(arrow_id))

    def puncture_of(self, arrow_id):
        key = min(self.g_orbit(arrow_id))
        return self.orbit_puncture.get(key)


def _check_build_preconditions(t):
    from . import surface as _surface

    report = _surface.validate_triangulation(t)
    if not report.ok:
        raise ValueError("invalid triangulation: %s" % report)
    if _surface.has_self_folded(t):
        bad = [tri for tri in t.triangles if len(set(tri)) < 3]
        raise ValueError(
            "triangulation has self-folded triangle(s): %s" % (bad,)
        )
    for p in t.surface.punctures:
        val = _surface.valency(t, p)
        if val < 3:
            raise ValueError(
                "puncture %r has valency %d < 3; quiver construction needs "
                "all valencies >= 3" % (p, val)
            )


def _arrow_id(tri_index, slot):
    return "x%d_%d" % (tri_index, slot)


def build_quiver(t):
    """Quiver of a triangulation: one vertex per arc, a 3-cycle per triangle.

    Triangle i with sides (a, b, c) contributes arrows
    x{i}_0: a -> b, x{i}_1: b -> c, x{i}_2: c -> a.
    Requires a valid triangulation with no self-folded triangles and all
    valencies >= 3; under that hypothesis no 2-cycles occur.
    """
    _check_build_preconditions(t)
    vertices = tuple(a.id for a in t.arcs)
    arrows = []
    for i, tri in enumerate(t.triangles):
        for s in range(3):
            arrows.append(Arrow(_arrow_id(i, s), tri[s], tri[(s + 1) % 3]))
    return Quiver(vertices, tuple(arrows))


def arrow_maps(t, q):
    """Compute f and g for the quiver of a triangulation.

    f(x{i}_s) = x{i}_{s+1 mod 3} rotates each triangle's 3-cycle.  g(x) is
    the arrow out of target(x) in the other triangle containing the arc
    target(x); equivalently, the continuation of x in the cycle around the
    puncture sitting at the corner of x's triangle between source(x) and
    target(x).
    """
    _check_build_preconditions(t)
    # occurrences of each arc in triangle slots: exactly two by validity
    occ = {}
    for i, tri in enumerate(t.triangles):
        for s in range(3):
            occ.setdefault(tri[s], []).append((i, s))

    f = {}
    g = {}
    corner_candidates = {}
    for i, tri in enumerate(t.triangles):
        for s in range(3):
            aid = _arrow_id(i, s)
            f[aid] = _arrow_id(i, (s + 1) % 3)
            target_arc = tri[(s + 1) % 3]
            others = [o for o in occ[target_arc] if o != (i, (s + 1) % 3)]
            if len(others) != 1:
                raise ValueError(
                    "no unique continuation for arrow %r at arc %r" % (aid, target_arc)
                )
            oi, os_ = others[0]
            g[aid] = _arrow_id(oi, os_)
            # the corner between the two arcs of this arrow is a puncture
            # shared by both arcs
            e1 = set(t.arc_by_id(tri[s]).endpoints)
            e2 = set(t.arc_by_id(target_arc).endpoints)
            corner_candidates[aid] = e1 & e2

    maps = ArrowMaps(f, g, {})
    orbit_puncture = {}
    valencies = {p: 0 for p in t.surface.punctures}
    from . import surface as _surface

    for p in valencies:
        valencies[p] = _surface.valency(t, p)
    for orb in maps.g_orbits():
        shared = None
        for aid in orb:
            c = corner_candidates[aid]
            shared = c if shared is None else (shared & c)
        if shared is None or len(shared) == 0:
            raise ValueError(
                "cannot determine the puncture surrounded by g-orbit %s" % (orb,)
            )
        if len(shared) > 1:
            # disambiguate by matching the orbit length to the valency
            shared = {p for p in shared if valencies.get(p) == len(orb)}
        if len(shared) != 1:
            raise ValueError(
                "ambiguous surrounding puncture for g-orbit %s" % (orb,)
            )
        orbit_puncture[min(orb)] = next(iter(shared))
    return ArrowMaps(f, g, orbit_puncture)


def build_potential(t, q, puncture_scalars=None):
    """Triangle 3-cycles plus scaled puncture cycles.

    One term per triangle (its 3-cycle, coefficient +1) and one term per
    puncture (the surrounding g-cycle, coefficient -lambda_q; lambda_q
    defaults to 1 for punctures missing from puncture_scalars, and
    puncture_scalars=None enables that default for all of them).
    """
    maps = arrow_maps(t, q)
    scalars = dict(puncture_scalars or {})
    for p in scalars:
        if p not in set(t.surface.punctures):
            raise KeyError("scalar for unknown puncture %r" % (p,))
        if scalars[p] == 0:
            raise ValueError("puncture scalar for %r must be nonzero" % (p,))
    terms = {}
    for i in range(len(t.triangles)):
        cyc = canonical_rotation(tuple(_arrow_id(i, s) for s in range(3)))
        terms[cyc] = terms.get(cyc, 0) + 1
    for orb in maps.g_orbits():
        p = maps.orbit_puncture[min(orb)]
        lam = scalars.get(p, 1)
        cyc = canonical_rotation(orb)
        terms[cyc] = terms.get(cyc, 0) - lam
    return Potential(terms)


def cyclic_derivative(w, a):
    """Cyclic derivative of a potential with respect to one arrow.

    For each term c * (l1 ... ln) and each position i with l_i = a this
    contributes c * (l_{i+1} ... l_n l_1 ... l_{i-1}): the derivative
    starts right after the removed occurrence.  Returns a dict mapping
    path tuples to coefficients (zero coefficients dropped).
    """
    out = {}
    for path, coeff in w.terms.items():
        n = len(path)
        for i in range(n):
            if path[i] != a:
                continue
            rot = path[i + 1 :] + path[:i]
            out[rot] = out.get(rot, 0) + coeff
    return {p: c for p, c in out.items() if c != 0}


def jacobian_relations(w):
    """One generator per arrow with nonzero cyclic derivative."""
    gens = []
    for a in sorted(w.arrows_used()):
        d = cyclic_derivative(w, a)
        if d:
            gens.append(Relation.from_dict(d))
    return RelationSet(tuple(gens))


def quiver_to_dot(q):
    """DOT export with stable (sorted) vertex and arrow ordering."""
    lines = ["digraph quiver {"]
    for v in sorted(q.vertices):
        lines.append('  "%s";' % v)
    for a in sorted(q.arrows, key=lambda a: a.id):
        lines.append('  "%s" -> "%s" [label="%s"];' % (a.source, a.target, a.id))
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_to_json(q, indent=2):
    doc = {
        "vertices": list(q.vertices),
        "arrows": [
            {"id": a.id, "source": a.source, "target": a.target}
            for a in q.arrows
        ],
    }
    return json.dumps(doc, indent=indent)


def potential_to_json(w, indent=2):
    doc = {
        "terms": [
            {"cycle": list(path), "coefficient": coeff}
            for path, coeff in sorted(w.terms.items())
        ]
    }
    return json.dumps(doc, indent=indent)
