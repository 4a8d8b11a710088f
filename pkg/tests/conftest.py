import pytest

from surfalg import algebra, fixtures, qp, strings


@pytest.fixture(scope="session")
def torus_tri():
    return fixtures.torus()


@pytest.fixture(scope="session")
def torus_quiver(torus_tri):
    return qp.build_quiver(torus_tri)


@pytest.fixture(scope="session")
def torus_maps(torus_tri, torus_quiver):
    return qp.arrow_maps(torus_tri, torus_quiver)


@pytest.fixture(scope="session")
def torus_relations(torus_tri, torus_quiver):
    return qp.jacobian_relations(qp.build_potential(torus_tri, torus_quiver))


@pytest.fixture(scope="session")
def torus_algebra(torus_quiver, torus_relations):
    return algebra.compute_basis(torus_quiver, torus_relations, p=32003,
                                 max_deg=40)


@pytest.fixture(scope="session")
def tetra_algebra():
    t = fixtures.tetra()
    q = qp.build_quiver(t)
    w = qp.build_potential(
        t, q, puncture_scalars={p: 2 for p in t.surface.punctures})
    return algebra.compute_basis(q, qp.jacobian_relations(w), p=32003,
                                 max_deg=40)


@pytest.fixture(scope="session")
def sphere5_pres():
    return strings.sphere5_presentation()


@pytest.fixture(scope="session")
def torus_quotient(torus_quiver, torus_maps):
    return strings.string_quotient(torus_quiver, torus_maps,
                                   name="string-quotient(torus)")


@pytest.fixture(scope="session")
def genus2_setup():
    t = fixtures.genus2()
    q = qp.build_quiver(t)
    maps = qp.arrow_maps(t, q)
    pres = strings.string_quotient(q, maps, name="string-quotient(genus2)")
    return t, q, maps, pres
