import numpy as np
import pytest

from surfalg import homology
from surfalg.homology import (
    FDModule,
    ar_translate,
    check_periodicity,
    iso_check,
    projective_cover,
    projective_module,
    radical_series,
    simple_module,
    syzygy,
    tube_rank,
    validate_module,
)

VS = ("1", "2", "3")


def test_simple_modules(torus_algebra):
    for v in VS:
        s = simple_module(torus_algebra, v)
        assert s.total_dim == 1
        assert s.dim_vector(VS) == tuple(1 if u == v else 0 for u in VS)
        assert validate_module(torus_algebra, s) == []


def test_projective_modules(torus_algebra):
    for v in VS:
        p = projective_module(torus_algebra, v)
        # column of the Cartan matrix: dim e_u A e_v per vertex u
        assert p.dim_vector(VS) == (4, 4, 4)
        assert validate_module(torus_algebra, p) == []


def test_validate_module_catches_bad_shapes(torus_algebra):
    m = FDModule(dims={"1": 1, "2": 1, "3": 0},
                 mats={"x0_0": np.zeros((2, 2), dtype=np.int64)})
    problems = validate_module(torus_algebra, m)
    assert any("shape" in s for s in problems)


def test_validate_module_checks_relations(torus_algebra):
    # acting only through one triangle breaks the two-term relations:
    # the short side acts nonzero, the long side acts as zero
    dims = {"1": 1, "2": 1, "3": 1}
    mats = {a.id: (np.ones((1, 1), dtype=np.int64)
                   if a.id.startswith("x0_") else
                   np.zeros((1, 1), dtype=np.int64))
            for a in torus_algebra.quiver.arrows}
    m = FDModule(dims=dims, mats=mats)
    problems = validate_module(torus_algebra, m)
    assert any("relation" in s for s in problems)


def test_validate_module_accepts_all_ones(torus_algebra):
    # with every arrow acting as identity both relation terms agree
    dims = {"1": 1, "2": 1, "3": 1}
    mats = {a.id: np.ones((1, 1), dtype=np.int64)
            for a in torus_algebra.quiver.arrows}
    m = FDModule(dims=dims, mats=mats)
    assert validate_module(torus_algebra, m) == []


def test_projective_cover_of_simple_is_projective(torus_algebra):
    for v in VS:
        s = simple_module(torus_algebra, v)
        cover = projective_cover(torus_algebra, s)
        assert cover.module.dim_vector(VS) == (4, 4, 4)
        assert [u for u, _ in cover.summands] == [v]


def test_syzygy_dimension_accounting(torus_algebra):
    # dim of the syzygy = dim of the cover minus dim of the module
    s = simple_module(torus_algebra, "1")
    cover = projective_cover(torus_algebra, s)
    o = syzygy(torus_algebra, s)
    assert o.total_dim == cover.module.total_dim - s.total_dim
    assert validate_module(torus_algebra, o) == []


def test_syzygy_of_projective_vanishes(torus_algebra):
    p = projective_module(torus_algebra, "2")
    o = syzygy(torus_algebra, p)
    assert o.total_dim == 0


def test_omega_four_chain(torus_algebra):
    chains = {
        "1": [(1, 0, 0), (3, 4, 4), (5, 4, 4), (3, 4, 4), (1, 0, 0)],
        "2": [(0, 1, 0), (4, 3, 4), (4, 5, 4), (4, 3, 4), (0, 1, 0)],
        "3": [(0, 0, 1), (4, 4, 3), (4, 4, 5), (4, 4, 3), (0, 0, 1)],
    }
    for v in VS:
        cur = simple_module(torus_algebra, v)
        got = [cur.dim_vector(VS)]
        for _ in range(4):
            cur = syzygy(torus_algebra, cur)
            got.append(cur.dim_vector(VS))
        assert got == chains[v]


def test_radical_series_descends(torus_algebra):
    p = projective_module(torus_algebra, "1")
    series = radical_series(torus_algebra, p)
    totals = [sum(layer) for layer in series]
    assert totals[0] == 12
    assert totals[-1] == 0
    assert all(a > b or (a == b == 0) for a, b in zip(totals, totals[1:]))


def test_iso_check_reflexive(torus_algebra):
    s = simple_module(torus_algebra, "1")
    res = iso_check(torus_algebra, s, s, trials=5, seed=1)
    assert res.verdict == "iso"


def test_iso_check_distinguishes_simples(torus_algebra):
    s1 = simple_module(torus_algebra, "1")
    s2 = simple_module(torus_algebra, "2")
    res = iso_check(torus_algebra, s1, s2)
    assert res.verdict == "not_iso"
    assert "dimension" in res.reason


def test_iso_check_seed_determinism(torus_algebra):
    s = simple_module(torus_algebra, "1")
    m = syzygy(torus_algebra, syzygy(torus_algebra, s))
    n = syzygy(torus_algebra, syzygy(torus_algebra, m))
    r1 = iso_check(torus_algebra, n, s, trials=20, seed=0)
    r2 = iso_check(torus_algebra, n, s, trials=20, seed=0)
    assert r1.verdict == r2.verdict == "iso"
    assert r1.witness == r2.witness


def test_periodicity_of_simples(torus_algebra):
    for v in VS:
        s = simple_module(torus_algebra, v)
        res = check_periodicity(torus_algebra, s, period=4, trials=20, seed=0)
        assert res.verdict == "periodic"
        assert len(res.dim_chain) == 5


def test_periodicity_rejects_projectives(torus_algebra):
    p = projective_module(torus_algebra, "1")
    with pytest.raises(ValueError, match="projective"):
        check_periodicity(torus_algebra, p)


def test_ar_translate_is_double_syzygy(torus_algebra):
    s = simple_module(torus_algebra, "3")
    tr = ar_translate(torus_algebra, s)
    direct2 = syzygy(torus_algebra, syzygy(torus_algebra, s))
    assert tr.dim_vector(VS) == direct2.dim_vector(VS)
    res = iso_check(torus_algebra, tr, direct2)
    assert res.verdict == "iso"


def test_tube_ranks(torus_algebra):
    for v in VS:
        s = simple_module(torus_algebra, v)
        assert tube_rank(torus_algebra, s) == 2


def test_tube_rank_one_example(tetra_algebra):
    # any module isomorphic to its own double syzygy sits in a rank-1 tube
    vs = sorted(tetra_algebra.quiver.vertices)
    ranks = set()
    for v in vs:
        s = simple_module(tetra_algebra, v)
        o2 = syzygy(tetra_algebra, syzygy(tetra_algebra, s))
        if s.dim_vector(vs) == o2.dim_vector(vs):
            ranks.add(tube_rank(tetra_algebra, s))
    # structural sanity: every reported rank is 1 or 2 (or undecided)
    assert ranks <= {1, 2, None}


def test_hom_dims_symmetric_for_iso_pairs(torus_algebra):
    s = simple_module(torus_algebra, "1")
    o4 = s
    for _ in range(4):
        o4 = syzygy(torus_algebra, o4)
    res = iso_check(torus_algebra, s, o4)
    assert res.verdict == "iso"
    assert res.hom_forward == res.hom_backward
