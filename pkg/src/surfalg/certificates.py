"""Machine-checkable certificates and their JSON round trip.

Two kinds of certificate:

  free-composability: two band words over a presentation, a pattern depth,
  and the list of composition patterns that were verified to be bands.
  Replaying rebuilds the presentation from its spec and re-runs every
  composition up to the depth; no band enumeration is involved.

  periodicity: an algebra spec, a module spec, a syzygy period and the
  seeded isomorphism evidence.  Replaying rebuilds both and re-runs the
  periodicity check with the same seed.

All document readers are strict: unknown fields are rejected by name.
"""

import json
from dataclasses import dataclass

import numpy as np

from . import fixtures, qp, strings, algebra, homology
from .surface import triangulation_from_json, validate_triangulation

__all__ = [
    "GrowthCertificate",
    "PeriodicityCertificate",
    "VerificationResult",
    "presentation_from_spec",
    "algebra_from_spec",
    "module_from_spec",
    "make_growth_certificate",
    "make_periodicity_certificate",
    "certificate_to_json",
    "certificate_from_json",
    "verify_certificate",
]


def _check_fields(doc, where, required, optional=()):
    if not isinstance(doc, dict):
        raise ValueError("%s must be an object" % where)
    keys = set(doc)
    missing = sorted(set(required) - keys)
    if missing:
        raise ValueError("%s is missing field %r" % (where, missing[0]))
    unknown = sorted(keys - set(required) - set(optional))
    if unknown:
        raise ValueError("%s has unknown field %r" % (where, unknown[0]))


def _triangulation_from_source(spec, where):
    if ("builtin" in spec) == ("triangulation" in spec):
        raise ValueError(
            "%s needs exactly one of 'builtin' or 'triangulation'" % where)
    if "builtin" in spec:
        t = fixtures.builtin_triangulation(spec["builtin"])
        label = spec["builtin"]
    else:
        t = triangulation_from_json(spec["triangulation"])
        label = "custom"
    report = validate_triangulation(t)
    if not report.ok:
        raise ValueError(
            "%s triangulation is invalid: %s" % (where, report.violations[0]))
    return t, label


def presentation_from_spec(spec):
    """Rebuild a word presentation from its serializable spec."""
    _check_fields(spec, "presentation spec", ("source",),
                  ("builtin", "triangulation"))
    source = spec["source"]
    if source == "sphere5":
        if "builtin" in spec or "triangulation" in spec:
            raise ValueError(
                "presentation spec for sphere5 takes no surface fields")
        return strings.sphere5_presentation()
    if source == "string-quotient":
        t, label = _triangulation_from_source(spec, "presentation spec")
        q = qp.build_quiver(t)
        maps = qp.arrow_maps(t, q)
        return strings.string_quotient(
            q, maps, name="string-quotient(%s)" % label)
    raise ValueError("unknown presentation source %r" % (source,))


def algebra_from_spec(spec):
    """Rebuild the finite-dimensional algebra from its serializable spec.

    Besides triangulation sources, the builtin "kx2" gives the one-vertex
    algebra k[x]/(x^2), a minimal self-injective reference point.
    """
    _check_fields(spec, "algebra spec", (),
                  ("builtin", "triangulation", "field", "max_deg",
                   "path_budget"))
    p = int(spec.get("field", algebra.DEFAULT_PRIME))
    max_deg = int(spec.get("max_deg", algebra.DEFAULT_MAX_DEG))
    budget = int(spec.get("path_budget", algebra.DEFAULT_PATH_BUDGET))
    if spec.get("builtin") == "kx2":
        if "triangulation" in spec:
            raise ValueError(
                "algebra spec needs exactly one of 'builtin' or "
                "'triangulation'")
        q, rels = fixtures.kx2_algebra_data()
    else:
        t, _ = _triangulation_from_source(spec, "algebra spec")
        q = qp.build_quiver(t)
        rels = qp.jacobian_relations(qp.build_potential(t, q))
    return algebra.compute_basis(q, rels, p=p, max_deg=max_deg,
                                 path_budget=budget)


def module_from_spec(a, spec):
    """Build and validate a module over a from its serializable spec."""
    _check_fields(spec, "module spec", (), ("simple", "dims", "matrices"))
    if "simple" in spec:
        if "dims" in spec or "matrices" in spec:
            raise ValueError(
                "module spec mixes 'simple' with explicit data")
        return homology.simple_module(a, spec["simple"])
    if "dims" not in spec:
        raise ValueError("module spec is missing field 'dims'")
    dims = {}
    for v, d in spec["dims"].items():
        if not isinstance(d, int) or d < 0:
            raise ValueError("module dims for %r must be a nonnegative int" % v)
        dims[v] = d
    mats = {}
    for aid, rows in spec.get("matrices", {}).items():
        mats[aid] = np.array(rows, dtype=np.int64)
    m = homology.FDModule(
        {v: dims.get(v, 0) for v in a.quiver.vertices},
        {
            x.id: mats.get(
                x.id,
                np.zeros((dims.get(x.source, 0), dims.get(x.target, 0)),
                         dtype=np.int64))
            for x in a.quiver.arrows
        },
    )
    problems = homology.validate_module(a, m)
    if problems:
        raise ValueError("invalid module: %s" % problems[0])
    return m


# What a free-composability certificate does and does not establish.
GROWTH_SCOPE = (
    "exponential band growth is certified for the word presentation named "
    "in this document; every algebra having that presentation as a quotient "
    "inherits the growth")


@dataclass(frozen=True)
class GrowthCertificate:
    presentation: dict
    word1: str
    word2: str
    basepoint: str
    depth: int
    max_forbidden: int
    junctions: tuple
    necklaces: tuple
    scope: str = GROWTH_SCOPE

    def to_doc(self):
        return {
            "kind": "free-composability",
            "presentation": dict(self.presentation),
            "word1": self.word1,
            "word2": self.word2,
            "basepoint": self.basepoint,
            "depth": self.depth,
            "max_forbidden": self.max_forbidden,
            "scope": self.scope,
            "junctions": [
                {
                    "blocks": j["blocks"],
                    "last": j["last"],
                    "first": j["first"],
                    "violations": list(j["violations"]),
                    "seam_factors": list(j["seam_factors"]),
                }
                for j in self.junctions
            ],
            "necklaces": [
                {"symbols": s, "length": n, "band": ok}
                for s, n, ok in self.necklaces
            ],
        }


@dataclass(frozen=True)
class PeriodicityCertificate:
    algebra: dict
    module: dict
    period: int
    trials: int
    seed: int
    verdict: str
    dim_chain: tuple
    hom_dim: int
    witness: tuple

    def to_doc(self):
        return {
            "kind": "periodicity",
            "algebra": dict(self.algebra),
            "module": dict(self.module),
            "period": self.period,
            "trials": self.trials,
            "seed": self.seed,
            "verdict": self.verdict,
            "dim_chain": [list(dv) for dv in self.dim_chain],
            "hom_dim": self.hom_dim,
            "witness": list(self.witness),
        }


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    kind: str
    messages: tuple


def make_growth_certificate(pres_spec, p, w1, w2, depth=6):
    """Run the free-composability check and wrap the outcome.

    Returns a GrowthCertificate on success, or the CounterExample itself.
    """
    fc = strings.free_composability(p, w1, w2, depth=depth)
    if isinstance(fc, strings.CounterExample):
        return fc
    return GrowthCertificate(
        presentation=dict(pres_spec),
        word1=strings.format_word(fc.word1),
        word2=strings.format_word(fc.word2),
        basepoint=fc.basepoint,
        depth=fc.depth,
        max_forbidden=fc.max_forbidden,
        junctions=fc.junctions,
        necklaces=fc.necklaces,
    )


def make_periodicity_certificate(alg_spec, a, mod_spec, m, period=4,
                                 trials=20, seed=0):
    """Run the periodicity check and wrap the outcome (any verdict)."""
    res = homology.check_periodicity(a, m, period=period, trials=trials,
                                     seed=seed)
    iso = res.iso
    return PeriodicityCertificate(
        algebra=dict(alg_spec),
        module=dict(mod_spec),
        period=period,
        trials=trials,
        seed=seed,
        verdict=res.verdict,
        dim_chain=res.dim_chain,
        hom_dim=iso.hom_forward if iso is not None else 0,
        witness=iso.witness if iso is not None else (),
    )


def certificate_to_json(cert, indent=2):
    return json.dumps(cert.to_doc(), indent=indent, sort_keys=True)


def certificate_from_json(text):
    doc = json.loads(text) if isinstance(text, str) else text
    _check_fields(doc, "certificate",
                  ("kind",),
                  ("presentation", "word1", "word2", "basepoint", "depth",
                   "max_forbidden", "junctions", "necklaces", "scope",
                   "algebra", "module", "period", "trials", "seed",
                   "verdict", "dim_chain", "hom_dim", "witness"))
    kind = doc["kind"]
    if kind == "free-composability":
        _check_fields(doc, "free-composability certificate",
                      ("kind", "presentation", "word1", "word2", "basepoint",
                       "depth", "max_forbidden", "junctions", "necklaces"),
                      ("scope",))
        junctions = []
        for j in doc["junctions"]:
            _check_fields(j, "junction record",
                          ("blocks", "last", "first", "violations",
                           "seam_factors"))
            junctions.append({
                "blocks": j["blocks"],
                "last": j["last"],
                "first": j["first"],
                "violations": tuple(j["violations"]),
                "seam_factors": tuple(j["seam_factors"]),
            })
        necklaces = []
        for nd in doc["necklaces"]:
            _check_fields(nd, "necklace record",
                          ("symbols", "length", "band"))
            necklaces.append((nd["symbols"], nd["length"], nd["band"]))
        return GrowthCertificate(
            presentation=doc["presentation"],
            word1=doc["word1"],
            word2=doc["word2"],
            basepoint=doc["basepoint"],
            depth=doc["depth"],
            max_forbidden=doc["max_forbidden"],
            junctions=tuple(junctions),
            necklaces=tuple(necklaces),
            scope=doc.get("scope", GROWTH_SCOPE),
        )
    if kind == "periodicity":
        _check_fields(doc, "periodicity certificate",
                      ("kind", "algebra", "module", "period", "trials",
                       "seed", "verdict", "dim_chain", "hom_dim", "witness"))
        return PeriodicityCertificate(
            algebra=doc["algebra"],
            module=doc["module"],
            period=doc["period"],
            trials=doc["trials"],
            seed=doc["seed"],
            verdict=doc["verdict"],
            dim_chain=tuple(tuple(dv) for dv in doc["dim_chain"]),
            hom_dim=doc["hom_dim"],
            witness=tuple(doc["witness"]),
        )
    raise ValueError("unknown certificate kind %r" % (kind,))


def _verify_growth(cert):
    messages = []
    pres = presentation_from_spec(cert.presentation)
    w1 = strings.parse_word(cert.word1)
    w2 = strings.parse_word(cert.word2)
    fc = strings.free_composability(pres, w1, w2, depth=cert.depth)
    if isinstance(fc, strings.CounterExample):
        messages.append(
            "replay found a counterexample at pattern %s: %s"
            % (fc.symbols, fc.reason))
        return VerificationResult(False, "free-composability",
                                  tuple(messages))
    ok = True
    if strings.format_word(fc.word1) != cert.word1 or \
            strings.format_word(fc.word2) != cert.word2:
        ok = False
        messages.append("replayed rotations differ from the stored words")
    if fc.basepoint != cert.basepoint:
        ok = False
        messages.append(
            "basepoint mismatch: %s vs %s" % (fc.basepoint, cert.basepoint))
    got = {(s, n) for s, n, _ in fc.necklaces}
    want = {(s, n) for s, n, _ in cert.necklaces}
    if got != want:
        ok = False
        messages.append("necklace lists differ")
    else:
        messages.append(
            "replayed %d composition patterns to depth %d; all are bands"
            % (len(fc.necklaces), cert.depth))
    for j in fc.junctions:
        if j["violations"]:
            ok = False
            messages.append(
                "junction %s has violations %s"
                % (j["blocks"], list(j["violations"])))
    return VerificationResult(ok, "free-composability", tuple(messages))


def _verify_periodicity(cert):
    messages = []
    a = algebra_from_spec(cert.algebra)
    m = module_from_spec(a, cert.module)
    res = homology.check_periodicity(
        a, m, period=cert.period, trials=cert.trials, seed=cert.seed)
    ok = True
    if res.verdict != cert.verdict:
        ok = False
        messages.append(
            "verdict mismatch: replay says %s, certificate says %s"
            % (res.verdict, cert.verdict))
    if tuple(tuple(dv) for dv in res.dim_chain) != \
            tuple(tuple(dv) for dv in cert.dim_chain):
        ok = False
        messages.append("syzygy dimension chain differs")
    if res.iso is not None and tuple(res.iso.witness) != tuple(cert.witness):
        ok = False
        messages.append("isomorphism witness differs")
    if ok:
        messages.append(
            "replayed %d syzygy steps with seed %d; verdict %s confirmed"
            % (cert.period, cert.seed, cert.verdict))
    if cert.verdict != "periodic":
        ok = False
        messages.append("certificate does not claim periodicity")
    return VerificationResult(ok, "periodicity", tuple(messages))


def verify_certificate(cert):
    """Replay a certificate from scratch; returns a VerificationResult."""
    if isinstance(cert, (str, dict)):
        cert = certificate_from_json(cert)
    if isinstance(cert, GrowthCertificate):
        return _verify_growth(cert)
    if isinstance(cert, PeriodicityCertificate):
        return _verify_periodicity(cert)
    raise ValueError("not a certificate: %r" % (cert,))
