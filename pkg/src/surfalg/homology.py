"""Right modules, projective covers, syzygies and periodicity checks.

A module is given by a dimension per vertex and one matrix per arrow; the
matrix of an arrow x: s -> t has shape (dims[s], dims[t]) and acts on row
vectors.  Relations of the algebra must act as zero; validate_module checks
this together with the shapes.

syzygy computes the kernel of the projective cover, so iterating it walks
the chain of syzygies; over a weakly symmetric algebra the squared syzygy
computes the translate used for tube ranks.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg

__all__ = [
    "FDModule",
    "IsoResult",
    "PeriodicityResult",
    "validate_module",
    "simple_module",
    "projective_module",
    "projective_cover",
    "syzygy",
    "radical_series",
    "iso_check",
    "check_periodicity",
    "ar_translate",
    "tube_rank",
]


@dataclass(frozen=True)
class FDModule:
    """dims: vertex -> nonnegative int; mats: arrow id -> numpy matrix."""

    dims: dict
    mats: dict

    @property
    def total_dim(self):
        return sum(self.dims.values())

    def dim_vector(self, vertices):
        return tuple(self.dims.get(v, 0) for v in vertices)


def _zeros(r, c):
    return np.zeros((int(r), int(c)), dtype=np.int64)


def _vertices(a):
    return sorted(a.quiver.vertices)


def validate_module(a, m):
    """Shape, range and relation checks; returns a list of violations."""
    out = []
    p = a.field
    dims = {v: int(m.dims.get(v, 0)) for v in a.quiver.vertices}
    for v in m.dims:
        if v not in a.quiver.vertices:
            out.append("dims mentions unknown vertex %r" % (v,))
    for aid in m.mats:
        if not a.quiver.has_arrow(aid):
            out.append("matrices mention unknown arrow %r" % (aid,))
    if out:
        return out
    for x in sorted(a.quiver.arrows, key=lambda x: x.id):
        mat = m.mats.get(x.id)
        want = (dims[x.source], dims[x.target])
        if mat is None:
            continue
        if tuple(mat.shape) != want:
            out.append(
                "matrix for %s has shape %s, expected %s"
                % (x.id, tuple(mat.shape), want))
        elif mat.size and (mat.min() < 0 or mat.max() >= p):
            out.append(
                "matrix for %s has entries outside 0..%d" % (x.id, p - 1))
    if out:
        return out
    for rel in a.relations.generators:
        acc = None
        src = a.quiver.path_source(rel.terms[0][0])
        tgt = a.quiver.path_target(rel.terms[0][0])
        for path, coeff in rel.terms:
            mat = _path_matrix(a, m, src, path)
            acc = (coeff * mat) % p if acc is None else (acc + coeff * mat) % p
        if acc is not None and acc.size and acc.any():
            out.append(
                "relation %s does not act as zero (%s to %s)"
                % (rel, src, tgt))
    return out


def _arrow_matrix(a, m, aid):
    x = a.quiver.arrow(aid)
    mat = m.mats.get(aid)
    if mat is None:
        return _zeros(m.dims.get(x.source, 0), m.dims.get(x.target, 0))
    return mat


def _path_matrix(a, m, src, path):
    mat = np.eye(m.dims.get(src, 0), dtype=np.int64)
    for aid in path:
        mat = linalg.matmul(mat, _arrow_matrix(a, m, aid), a.field)
    return mat


def simple_module(a, v):
    if v not in a.quiver.vertices:
        raise KeyError("unknown vertex %r" % (v,))
    dims = {u: (1 if u == v else 0) for u in a.quiver.vertices}
    mats = {
        x.id: _zeros(dims[x.source], dims[x.target])
        for x in a.quiver.arrows
    }
    return FDModule(dims, mats)


def projective_module(a, v):
    """The right module on the basis paths starting at v."""
    if v not in a.quiver.vertices:
        raise KeyError("unknown vertex %r" % (v,))
    idxs = a.indices_from(v)
    local = {}
    dims = {u: 0 for u in a.quiver.vertices}
    for bi in idxs:
        w = a.basis_target(bi)
        local[bi] = dims[w]
        dims[w] += 1
    mats = {}
    for x in sorted(a.quiver.arrows, key=lambda x: x.id):
        mat = _zeros(dims[x.source], dims[x.target])
        for bi in idxs:
            if a.basis_target(bi) != x.source:
                continue
            for bj, c in a.right_multiply_arrow(bi, x.id):
                mat[local[bi], local[bj]] = c
        mats[x.id] = mat
    return FDModule(dims, mats)


@dataclass(frozen=True)
class _Cover:
    module: object
    summands: tuple
    phi: dict
    basis: tuple


def projective_cover(a, m):
    """Projective cover of m, with the covering map.

    The top of m at each vertex is lifted by the standard basis vectors at
    the non-pivot columns of the reduced radical; each lift contributes one
    projective summand.  Returns the cover module, the summand multiset,
    the per-vertex matrix of the covering map (rows indexed by the cover
    basis at that vertex), and the cover basis (vertex, lift, algebra basis
    index) in row order.
    """
    p = a.field
    vertices = _vertices(a)
    lifts = []
    for v in vertices:
        dv = m.dims.get(v, 0)
        if dv == 0:
            continue
        rows = [
            _arrow_matrix(a, m, x.id)
            for x in sorted(a.quiver.arrows, key=lambda x: x.id)
            if x.target == v
        ]
        stacked = np.vstack([r for r in rows if r.shape[0]]) \
            if any(r.shape[0] for r in rows) else _zeros(0, dv)
        rad, piv = linalg.rref(stacked, p)
        free = [j for j in range(dv) if j not in set(piv)]
        for j in free:
            u = _zeros(1, dv)
            u[0, j] = 1
            lifts.append((v, u[0]))
    summands = {}
    for v, u in lifts:
        summands[v] = summands.get(v, 0) + 1

    basis = []
    for li, (v, u) in enumerate(lifts):
        for bi in a.indices_from(v):
            basis.append((li, bi))
    dims = {v: 0 for v in a.quiver.vertices}
    local = {}
    for row, (li, bi) in enumerate(basis):
        w = a.basis_target(bi)
        local[(li, bi)] = dims[w]
        dims[w] += 1
    mats = {}
    for x in sorted(a.quiver.arrows, key=lambda x: x.id):
        mat = _zeros(dims[x.source], dims[x.target])
        for li, bi in basis:
            if a.basis_target(bi) != x.source:
                continue
            for bj, c in a.right_multiply_arrow(bi, x.id):
                mat[local[(li, bi)], local[(li, bj)]] = c
        mats[x.id] = mat
    cover = FDModule(dims, mats)

    phi = {v: _zeros(dims[v], m.dims.get(v, 0)) for v in a.quiver.vertices}
    for li, bi in basis:
        v, path = a.basis[bi]
        w = a.basis_target(bi)
        u = lifts[li][1]
        img = linalg.matmul(
            u.reshape(1, -1), _path_matrix(a, m, v, path), p)
        phi[w][local[(li, bi)]] = img[0]
    for v in vertices:
        dv = m.dims.get(v, 0)
        if linalg.rank(phi[v], p) != dv:
            raise RuntimeError(
                "cover map is not surjective at vertex %r" % (v,))
    return _Cover(
        module=cover,
        summands=tuple(sorted(summands.items())),
        phi=phi,
        basis=tuple(basis),
    )


def syzygy(a, m):
    """Kernel of the projective cover, as a module."""
    p = a.field
    cover = projective_cover(a, m)
    kernels = {}
    frees = {}
    for v in a.quiver.vertices:
        rows, free = linalg.left_nullspace(cover.phi[v], p)
        kernels[v] = rows
        frees[v] = free
    dims = {v: int(kernels[v].shape[0]) for v in a.quiver.vertices}
    mats = {}
    for x in sorted(a.quiver.arrows, key=lambda x: x.id):
        s, t = x.source, x.target
        imgs = linalg.matmul(kernels[s], cover.module.mats[x.id], p)
        coords = imgs[:, frees[t]] if imgs.size else _zeros(dims[s], dims[t])
        if linalg.matmul(coords, kernels[t], p).tolist() != imgs.tolist():
            raise RuntimeError(
                "syzygy image of arrow %s leaves the kernel" % (x.id,))
        mats[x.id] = coords % p
    return FDModule(dims, mats)


def radical_series(a, m):
    """Per-vertex dimensions of the radical filtration, top layer first."""
    p = a.field
    vertices = _vertices(a)
    bases = {
        v: np.eye(m.dims.get(v, 0), dtype=np.int64) for v in vertices
    }
    series = []
    while True:
        series.append(tuple(int(bases[v].shape[0]) for v in vertices))
        if series[-1] == tuple(0 for _ in vertices):
            break
        nxt_rows = {v: [] for v in vertices}
        for x in sorted(a.quiver.arrows, key=lambda x: x.id):
            img = linalg.matmul(bases[x.source], _arrow_matrix(a, m, x.id), p)
            if img.shape[0]:
                nxt_rows[x.target].append(img)
        nxt = {}
        for v in vertices:
            if nxt_rows[v]:
                stacked = np.vstack(nxt_rows[v])
                rows, _ = linalg.rref(stacked, p)
                nxt[v] = rows
            else:
                nxt[v] = _zeros(0, m.dims.get(v, 0))
        if all(nxt[v].shape[0] == bases[v].shape[0] for v in vertices):
            raise RuntimeError("radical filtration does not descend")
        bases = nxt
    return tuple(series)


@dataclass(frozen=True)
class IsoResult:
    verdict: str
    reason: str
    hom_forward: int
    hom_backward: int
    witness: tuple
    trials: int
    seed: int


def _hom_basis(a, m, n):
    """Basis of the intertwiner space, as per-vertex matrix families."""
    p = a.field
    vertices = _vertices(a)
    offs = {}
    total = 0
    for v in vertices:
        offs[v] = total
        total += m.dims.get(v, 0) * n.dims.get(v, 0)
    eqs = []
    for x in sorted(a.quiver.arrows, key=lambda x: x.id):
        s, t = x.source, x.target
        ms, mt = m.dims.get(s, 0), m.dims.get(t, 0)
        ns, nt = n.dims.get(s, 0), n.dims.get(t, 0)
        if ms == 0 or nt == 0:
            continue
        mx = _arrow_matrix(a, m, x.id)
        nx = _arrow_matrix(a, n, x.id)
        for i in range(ms):
            for j in range(nt):
                row = [0] * total
                for k in range(mt):
                    row[offs[t] + k * nt + j] = (
                        row[offs[t] + k * nt + j] + int(mx[i, k])) % p
                for k in range(ns):
                    row[offs[s] + i * ns + k] = (
                        row[offs[s] + i * ns + k] - int(nx[k, j])) % p
                if any(row):
                    eqs.append(row)
    mat = np.array(eqs, dtype=np.int64) if eqs else _zeros(0, total)
    null, _ = linalg.nullspace(mat, p)
    basis = []
    for row in null:
        fam = {}
        for v in vertices:
            mv, nv = m.dims.get(v, 0), n.dims.get(v, 0)
            fam[v] = row[offs[v] : offs[v] + mv * nv].reshape(mv, nv) % p
        basis.append(fam)
    return basis


def iso_check(a, m, n, trials=20, seed=0):
    """Decide isomorphism by invariants, then randomized intertwiners.

    Dimension vectors and radical filtrations must match; then the
    intertwiner spaces in both directions are solved exactly, and random
    combinations of the forward basis are tested for invertibility at every
    vertex.  Returns iso (with the witnessing combination), not_iso (with
    the separating invariant), or inconclusive.
    """
    p = a.field
    vertices = _vertices(a)
    dm = m.dim_vector(vertices)
    dn = n.dim_vector(vertices)
    if dm != dn:
        return IsoResult(
            "not_iso", "dimension vectors differ: %s vs %s" % (dm, dn),
            0, 0, (), 0, seed)
    rm = radical_series(a, m)
    rn = radical_series(a, n)
    if rm != rn:
        return IsoResult(
            "not_iso",
            "radical filtrations differ: %s vs %s" % (rm, rn),
            0, 0, (), 0, seed)
    fwd = _hom_basis(a, m, n)
    bwd = _hom_basis(a, n, m)
    if len(fwd) != len(bwd):
        return IsoResult(
            "not_iso",
            "intertwiner spaces have different dimensions (%d vs %d)"
            % (len(fwd), len(bwd)),
            len(fwd), len(bwd), (), 0, seed)
    if not fwd:
        if m.total_dim == 0 and n.total_dim == 0:
            return IsoResult("iso", "both modules are zero", 0, 0, (), 0, seed)
        return IsoResult(
            "not_iso", "no nonzero intertwiners exist",
            0, 0, (), 0, seed)
    rng = np.random.default_rng(seed)
    for t in range(trials):
        coeffs = rng.integers(0, p, size=len(fwd))
        if not coeffs.any():
            coeffs[0] = 1
        ok = True
        for v in vertices:
            h = _zeros(m.dims.get(v, 0), n.dims.get(v, 0))
            for c, fam in zip(coeffs, fwd):
                h = (h + int(c) * fam[v]) % p
            if h.shape[0] != h.shape[1] or not linalg.is_invertible(h, p):
                ok = False
                break
        if ok:
            return IsoResult(
                "iso", "invertible intertwiner found on trial %d" % (t + 1),
                len(fwd), len(bwd),
                tuple(int(c) for c in coeffs), t + 1, seed)
    return IsoResult(
        "inconclusive",
        "no invertible intertwiner in %d random trials" % trials,
        len(fwd), len(bwd), (), trials, seed)


@dataclass(frozen=True)
class PeriodicityResult:
    period: int
    verdict: str
    dim_chain: tuple
    iso: object


def check_periodicity(a, m, period=4, trials=20, seed=0):
    """Compare the period-th syzygy with the module itself.

    Projective modules are rejected: their syzygy vanishes, so syzygy
    periodicity is not the right question for them.
    """
    if period < 1:
        raise ValueError("period must be >= 1")
    vertices = _vertices(a)
    chain = [m.dim_vector(vertices)]
    cur = m
    for k in range(period):
        cur = syzygy(a, cur)
        if cur.total_dim == 0:
            if k == 0:
                raise ValueError(
                    "module is projective; its syzygy vanishes")
            return PeriodicityResult(
                period, "not_periodic", tuple(chain), None)
        chain.append(cur.dim_vector(vertices))
    iso = iso_check(a, m, cur, trials=trials, seed=seed)
    verdict = "periodic" if iso.verdict == "iso" else (
        "not_periodic" if iso.verdict == "not_iso" else "inconclusive")
    return PeriodicityResult(period, verdict, tuple(chain), iso)


def ar_translate(a, m):
    """Squared syzygy, valid as the translate only over weakly symmetric algebras."""
    from .algebra import check_weakly_symmetric

    ok, _ = check_weakly_symmetric(a)
    if not ok:
        raise ValueError(
            "algebra is not weakly symmetric; the squared syzygy "
            "does not compute the translate")
    return syzygy(a, syzygy(a, m))


def tube_rank(a, m, trials=20, seed=0):
    """1 if the translate fixes m, 2 if its square does, else None."""
    tau = ar_translate(a, m)
    r1 = iso_check(a, m, tau, trials=trials, seed=seed)
    if r1.verdict == "iso":
        return 1
    tau2 = ar_translate(a, tau)
    r2 = iso_check(a, m, tau2, trials=trials, seed=seed)
    if r2.verdict == "iso":
        return 2
    return None
