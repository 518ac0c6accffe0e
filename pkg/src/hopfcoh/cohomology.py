"""The explicit two-sided resolution of a comodule, bounded complexes, and the
derived functors built from them: derived coinvariants, colinear Ext, the
comodule-valued EXT, relative Ext over A, and Ext over a plain algebra.

Deep degrees of the resolution C^{q+1}(M) = C^q(M) (x) H grow geometrically,
so the builders assemble coactions and differentials entrywise from structure
constants instead of composing generic Kronecker products, and every graded
construction is guarded by an ambient-dimension cap (HOPFCOH_CAP).
"""

from __future__ import annotations

import os

from hopfcoh.comodule import (
    Comodule,
    ComoduleMap,
    coinvariants,
    colinear_maps,
    hom_comodule,
    map_to_vec,
    quotient_comodule,
    sub_comodule,
    trivial_comodule,
    vec_to_map,
)
from hopfcoh.errors import ResourceCapError
from hopfcoh.hopf import Algebra, HopfAlgebra
from hopfcoh.linalg import Matrix, Subspace, column_space, kernel, kronecker, rank, solve_matrix
from hopfcoh.relative import (
    AlgebraModule,
    RelHopfModule,
    a_linear_maps,
    dual_module,
    free_module,
    generated_submodule,
    is_injective_module,
    module_linear_maps,
    rel_free_on_comodule,
    restrict_coaction,
    sub_rel_module,
)

DEFAULT_CAP = 10_000


def resource_cap() -> int:
    env = os.environ.get("HOPFCOH_CAP")
    return int(env) if env else DEFAULT_CAP


def _guard(needed: int, cap: int | None, what: str):
    limit = cap if cap is not None else resource_cap()
    if needed > limit:
        raise ResourceCapError("%s needs ambient dimension %d > cap %d" % (what, needed, limit))


class CochainComplex:
    """objects[i] in degree start + i; diffs[i]: objects[i] -> objects[i+1]."""

    def __init__(self, start: int, objects: list[Comodule], diffs: list[Matrix]):
        assert len(diffs) == len(objects) - 1
        self.start = start
        self.objects = objects
        self.diffs = diffs

    def degree_index(self, q: int) -> int:
        return q - self.start

    def object_at(self, q: int) -> Comodule:
        return self.objects[self.degree_index(q)]

    def diff_at(self, q: int) -> Matrix:
        return self.diffs[self.degree_index(q)]

    @property
    def top_degree(self) -> int:
        return self.start + len(self.objects) - 1

    def composites_vanish(self) -> bool:
        return all(
            (self.diffs[i + 1] @ self.diffs[i]).is_zero() for i in range(len(self.diffs) - 1)
        )

    def differentials_colinear(self) -> bool:
        return all(
            ComoduleMap(self.objects[i], self.objects[i + 1], d).is_colinear()
            for i, d in enumerate(self.diffs)
        )


class Homotopy:
    """Degree -1 maps psi_q: C^q -> C^{q-1}, indexed by q."""

    def __init__(self, maps: dict[int, Matrix]):
        self.maps = maps

    def at(self, q: int) -> Matrix:
        return self.maps[q]


def tensor_with_regular(c: Comodule) -> Comodule:
    """C (x) H with the tensor coaction, assembled entrywise."""
    h = c.hopf
    field = h.field
    dh = h.dim
    dim = c.dim * dh
    comult = h.comult
    mult = h.algebra.mult
    zero = field.zero
    rho = [[zero] * dim for _ in range(dim * dh)]
    for idx, row_nz in enumerate(c.coaction.row_nonzeros()):
        iprime, t = divmod(idx, dh)
        for i, v in row_nz:
            for k in range(dh):
                col = i * dh + k
                dk = comult[k]
                for k1 in range(dh):
                    for k2 in range(dh):
                        d = dk[k1][k2]
                        if not d:
                            continue
                        ts = mult[t][k2]
                        base = (iprime * dh + k1) * dh
                        coeff = v * d
                        for s in range(dh):
                            if ts[s]:
                                rho[base + s][col] += coeff * ts[s]
    return Comodule(h, dim, Matrix(field, [field.nrow(r) for r in rho], dim * dh, dim))


def _insert_one_matrix(h: HopfAlgebra, dim: int) -> Matrix:
    field = h.field
    zero = field.zero
    dh = h.dim
    data = [[zero] * dim for _ in range(dim * dh)]
    for i in range(dim):
        for k in range(dh):
            if h.unit[k]:
                data[i * dh + k][i] = h.unit[k]
    return Matrix(field, data, dim * dh, dim)


def _counit_collapse_matrix(h: HopfAlgebra, dim: int) -> Matrix:
    """psi on C (x) H: u (x) h -> eps(h) u."""
    field = h.field
    zero = field.zero
    dh = h.dim
    data = [[zero] * (dim * dh) for _ in range(dim)]
    for i in range(dim):
        row = data[i]
        for k in range(dh):
            if h.counit[k]:
                row[i * dh + k] = h.counit[k]
    return Matrix(field, data, dim, dim * dh)


def _next_differential(h: HopfAlgebra, prev: Matrix, dim_q1: int) -> Matrix:
    """phi_{q+1}(u (x) h) = u (x) h (x) 1 - phi_q(u) (x) h, entrywise."""
    field = h.field
    zero = field.zero
    dh = h.dim
    rows = dim_q1 * dh
    data = [[zero] * dim_q1 for _ in range(rows)]
    for i in range(dim_q1):
        for k in range(dh):
            if h.unit[k]:
                data[i * dh + k][i] = h.unit[k]
    for j2, row_nz in enumerate(prev.row_nonzeros()):
        for i, v in row_nz:
            base = j2 * dh
            for k in range(dh):
                data[base + k][i * dh + k] -= v
    return Matrix(field, [field.nrow(r) for r in data], rows, dim_q1)


def cobar_resolution(m: Comodule, qmax: int, cap: int | None = None):
    """Degrees -1..qmax of the standard resolution, with its contracting homotopy.

    Differentials phi_q exist for -1 <= q < qmax and psi_q for 0 <= q <= qmax;
    the homotopy identity phi_{q-1} psi_q + psi_{q+1} phi_q = id holds for
    0 <= q <= qmax - 1.
    """
    if qmax < 0:
        raise ValueError("qmax must be >= 0")
    h = m.hopf
    _guard(m.dim * h.dim ** (qmax + 1), cap, "resolution to degree %d" % qmax)
    objects = [m]
    for _ in range(qmax + 1):
        prev = objects[-1]
        objects.append(
            Comodule.lazy(h, prev.dim * h.dim, lambda prev=prev: tensor_with_regular(prev).coaction)
        )
    diffs = [_insert_one_matrix(h, m.dim)]
    for q in range(qmax):
        diffs.append(_next_differential(h, diffs[-1], objects[q + 1].dim))
    homotopy = {q: _counit_collapse_matrix(h, objects[q].dim) for q in range(qmax + 1)}
    return CochainComplex(-1, objects, diffs), Homotopy(homotopy)


# -- cohomology of complexes -------------------------------------------------


class GradedPiece:
    def __init__(self, degree: int, dim: int, comodule: Comodule | None, cycles: Subspace | None, boundaries: Subspace | None):
        self.degree = degree
        self.dim = dim
        self.comodule = comodule
        self.cycles = cycles
        self.boundaries = boundaries


class GradedComodule:
    """Cohomology per degree, as dimensions plus induced comodule structures."""

    def __init__(self, pieces: list[GradedPiece]):
        self.pieces = pieces

    def dims(self) -> list[int]:
        return [p.dim for p in self.pieces]

    def piece_at(self, degree: int) -> GradedPiece:
        for p in self.pieces:
            if p.degree == degree:
                return p
        raise KeyError(degree)


def complex_cohomology(c: CochainComplex, degrees=None) -> GradedComodule:
    """Kernel mod image per degree, with the induced coaction.

    Off-the-end differentials are zero maps, so the first and last degrees are
    plain kernels and cokernels.
    """
    if not c.composites_vanish():
        raise ValueError("differentials do not compose to zero")
    if degrees is None:
        degrees = range(c.start, c.top_degree + 1)
    pieces = []
    for q in degrees:
        obj = c.object_at(q)
        if q < c.top_degree:
            cycles = kernel(c.diff_at(q))
        else:
            cycles = Subspace.full(obj.field, obj.dim)
        if q > c.start:
            boundaries = column_space(c.diff_at(q - 1))
        else:
            boundaries = Subspace.zero(obj.field, obj.dim)
        assert cycles.contains_subspace(boundaries)
        zcom = sub_comodule(obj, cycles)
        b_in_z = solve_matrix(cycles.basis, boundaries.basis)
        assert b_in_z is not None
        bsub = Subspace.from_matrix_columns(b_in_z) if b_in_z.cols else Subspace.zero(obj.field, cycles.dim)
        piece, _ = quotient_comodule(zcom, bsub)
        pieces.append(GradedPiece(q, piece.dim, piece, cycles, boundaries))
    return GradedComodule(pieces)


def _plain_cohomology_dims(dims: list[int], diffs: list[Matrix], upto: int) -> list[int]:
    """Dims of ker/im for the complex (degrees 0..len(dims)-1), reported 0..upto."""
    out = []
    for q in range(upto + 1):
        ker_dim = dims[q] - rank(diffs[q]) if q < len(diffs) else dims[q]
        im_dim = rank(diffs[q - 1]) if q >= 1 else 0
        out.append(ker_dim - im_dim)
    return out


# -- derived functors ----------------------------------------------------------


def derived_coinvariants(m: Comodule, pmax: int, cap: int | None = None) -> list[int]:
    """Coinvariants applied degreewise to the resolution, then cohomology."""
    cx, _ = cobar_resolution(m, pmax + 1, cap)
    spaces = [coinvariants(cx.object_at(q)) for q in range(0, pmax + 2)]
    diffs = []
    for q in range(0, pmax + 1):
        image = cx.diff_at(q) @ spaces[q].basis
        d = solve_matrix(spaces[q + 1].basis, image)
        assert d is not None, "colinear differential must preserve coinvariants"
        diffs.append(d)
    return _plain_cohomology_dims([s.dim for s in spaces], diffs, pmax)


def ext_H(m: Comodule, n: Comodule, pmax: int, cap: int | None = None) -> list[int]:
    """Derived functors of the colinear-Hom: cohomology of Hom^H(M, C^*(N))."""
    m.same_hopf(n)
    cx, _ = cobar_resolution(n, pmax + 1, cap)
    _guard(m.dim * cx.objects[-1].dim, cap, "colinear Hom complex")
    spaces = [colinear_maps(m, cx.object_at(q)) for q in range(0, pmax + 2)]
    diffs = []
    field = m.field
    for q in range(0, pmax + 1):
        phi = cx.diff_at(q)
        cols = []
        for t in range(spaces[q].dim):
            g = vec_to_map(field, cx.object_at(q).dim, m.dim, spaces[q].basis.col(t))
            cols.append(map_to_vec(phi @ g))
        image = (
            Matrix.from_columns(field, cols)
            if cols
            else Matrix.zeros(field, cx.object_at(q + 1).dim * m.dim, 0)
        )
        d = solve_matrix(spaces[q + 1].basis, image)
        assert d is not None, "post-composition must preserve colinearity"
        diffs.append(d)
    return _plain_cohomology_dims([s.dim for s in spaces], diffs, pmax)


def _post_composition_matrix(field, phi: Matrix, src_dim: int) -> Matrix:
    """vec(phi @ G) as an operator on vec(G) for G: src -> rows(phi)."""
    rows = phi.rows * src_dim
    cols = phi.cols * src_dim
    zero = field.zero
    data = [[zero] * cols for _ in range(rows)]
    for r, row_nz in enumerate(phi.row_nonzeros()):
        for a, v in row_nz:
            rbase = r * src_dim
            abase = a * src_dim
            for b in range(src_dim):
                data[rbase + b][abase + b] = v
    return Matrix(field, data, rows, cols)


def EXT_rational(m: Comodule, n: Comodule, pmax: int, cap: int | None = None) -> GradedComodule:
    """Derived functors of the full Hom comodule HOM(M, -), degreewise on C^*(N).

    For finite-dimensional H these vanish in positive degrees; degree 0 carries
    the HOM(M, N) comodule structure on the canonical cycle basis.
    """
    m.same_hopf(n)
    field = m.field
    cx, _ = cobar_resolution(n, pmax + 1, cap)
    _guard(m.dim * cx.objects[-1].dim, cap, "Hom comodule complex")
    dims = [m.dim * cx.object_at(q).dim for q in range(0, pmax + 2)]
    diffs = [
        _post_composition_matrix(field, cx.diff_at(q), m.dim) for q in range(0, pmax + 1)
    ]
    plain = _plain_cohomology_dims(dims, diffs, pmax)
    pieces = []
    for q in range(0, pmax + 1):
        if q == 0 or plain[q] > 0:
            carrier = hom_comodule(m, cx.object_at(q)).carrier
            cycles = kernel(diffs[q])
            boundaries = (
                column_space(diffs[q - 1]) if q >= 1 else Subspace.zero(field, carrier.dim)
            )
            zcom = sub_comodule(carrier, cycles)
            b_in_z = solve_matrix(cycles.basis, boundaries.basis)
            assert b_in_z is not None
            bsub = (
                Subspace.from_matrix_columns(b_in_z)
                if b_in_z.cols
                else Subspace.zero(field, cycles.dim)
            )
            piece, _ = quotient_comodule(zcom, bsub)
            assert piece.dim == plain[q]
            pieces.append(GradedPiece(q, piece.dim, piece, cycles, boundaries))
        else:
            zero_comod = Comodule(m.hopf, 0, Matrix.zeros(field, 0, 0))
            pieces.append(GradedPiece(q, 0, zero_comod, None, None))
    return GradedComodule(pieces)


# -- free resolutions over A and plain algebras -----------------------------------


class FreeResolution:
    """P_i = A (x) V_i with the augmentation and connecting maps.

    maps[0]: P_0 -> M; maps[i]: P_i -> P_{i-1}; exactness is verified.
    """

    def __init__(self, modules: list[RelHopfModule], maps: list[Matrix], v_comodules: list[Comodule]):
        self.modules = modules
        self.maps = maps
        self.v_comodules = v_comodules


def a_free_resolution(m: RelHopfModule, length: int) -> FreeResolution:
    """Resolve by P_0 = A (x) M, then A (x) ker, iterated; exact by construction."""
    a = m.comodule_algebra
    field = m.field
    modules = []
    maps = []
    v_comodules = []
    current = m  # resolve this next; p: A (x) current -> current
    ida = Matrix.identity(field, a.dim)
    prev_inclusion = None
    for i in range(length + 1):
        v = current.comodule
        p_i = rel_free_on_comodule(a, v)
        cover = current.action  # A (x) V -> current, a (x) v -> a v
        if prev_inclusion is not None:
            cover = prev_inclusion @ cover
        modules.append(p_i)
        maps.append(cover)
        v_comodules.append(v)
        ker = kernel(current.action)
        sub = sub_rel_module(p_i, ker)
        prev_inclusion = ker.basis
        current = sub
    # exactness: im(maps[i+1]) = ker(maps[i])
    for i in range(len(maps) - 1):
        assert column_space(maps[i + 1]) == kernel(maps[i]), "resolution not exact at %d" % i
    assert rank(maps[0]) == m.dim, "augmentation not surjective"
    return FreeResolution(modules, maps, v_comodules)


def a_ext(m: RelHopfModule, n: RelHopfModule, pmax: int, cap: int | None = None) -> GradedComodule:
    """Relative Ext via the free resolution, with the Hom-comodule structure."""
    field = m.field
    res = a_free_resolution(m, pmax + 1)
    _guard(max(p.dim * n.dim for p in res.modules), cap, "relative Hom complex")
    spaces = [a_linear_maps(p, n) for p in res.modules]
    carriers = []
    for p, s in zip(res.modules, spaces):
        hom = hom_comodule(p.comodule, n.comodule)
        coact = restrict_coaction(hom.carrier, s.basis)
        assert coact is not None, "A-linear maps must be coaction-stable"
        carriers.append(Comodule(m.hopf, s.dim, coact))
    diffs = []
    for i in range(len(res.modules) - 1):
        d = res.maps[i + 1]  # P_{i+1} -> P_i
        cols = []
        for t in range(spaces[i].dim):
            f = vec_to_map(field, n.dim, res.modules[i].dim, spaces[i].basis.col(t))
            cols.append(map_to_vec(f @ d))
        image = (
            Matrix.from_columns(field, cols)
            if cols
            else Matrix.zeros(field, n.dim * res.modules[i + 1].dim, 0)
        )
        dd = solve_matrix(spaces[i + 1].basis, image)
        assert dd is not None, "precomposition must preserve A-linearity"
        diffs.append(dd)
    cx = CochainComplex(0, carriers, diffs)
    assert cx.differentials_colinear()
    return complex_cohomology(cx, range(0, pmax + 1))


def minimal_generators(m: AlgebraModule):
    """Greedy generating set: basis vectors not already generated by the earlier ones."""
    field = m.field
    gens = []
    span = Subspace.zero(field, m.dim)
    for j in range(m.dim):
        v = [field.one if i == j else field.zero for i in range(m.dim)]
        if span.contains(v):
            continue
        gens.append(v)
        span = generated_submodule(m, gens)
        if span.dim == m.dim:
            break
    return gens


def free_cover(m: AlgebraModule):
    """R^g -> M on a greedy generating set; returns (free module, cover matrix)."""
    r = m.algebra
    field = m.field
    gens = minimal_generators(m)
    g = len(gens)
    free = free_module(r, g)
    cover = Matrix.zeros(field, m.dim, free.dim)
    for t, gen in enumerate(gens):
        for j in range(r.dim):
            col = m.act_matrix(r.basis_vector(j)).apply(gen)
            for k in range(m.dim):
                cover.data[k][t * r.dim + j] = col[k]
    return free, cover


def algebra_free_resolution(m: AlgebraModule, length: int):
    """(modules [F_0..F_len], maps [F_0 -> M, F_1 -> F_0, ...]), exact."""
    from hopfcoh.relative import sub_module

    modules = []
    maps = []
    current = m
    prev_inclusion = None
    for _ in range(length + 1):
        free, cover = free_cover(current)  # cover lands in `current` coordinates
        maps.append(cover if prev_inclusion is None else prev_inclusion @ cover)
        modules.append(free)
        ker = kernel(cover)
        current = sub_module(free, ker)
        prev_inclusion = ker.basis
    for i in range(len(maps) - 1):
        assert column_space(maps[i + 1]) == kernel(maps[i]), "resolution not exact at %d" % i
    return modules, maps


def ext_over_algebra(r: Algebra, m: AlgebraModule, n: AlgebraModule, pmax: int) -> list[int]:
    """Ext_R(M, N) dims from a free resolution and the R-linear Hom complex."""
    assert m.algebra.mult == r.mult and n.algebra.mult == r.mult
    field = r.field
    modules, maps = algebra_free_resolution(m, pmax + 1)
    spaces = [module_linear_maps(f, n) for f in modules]
    diffs = []
    for i in range(len(modules) - 1):
        d = maps[i + 1]
        cols = []
        for t in range(spaces[i].dim):
            f = vec_to_map(field, n.dim, modules[i].dim, spaces[i].basis.col(t))
            cols.append(map_to_vec(f @ d))
        image = (
            Matrix.from_columns(field, cols)
            if cols
            else Matrix.zeros(field, n.dim * modules[i + 1].dim, 0)
        )
        dd = solve_matrix(spaces[i + 1].basis, image)
        assert dd is not None
        diffs.append(dd)
    return _plain_cohomology_dims([s.dim for s in spaces], diffs, pmax)


def a_ext_H(m: RelHopfModule, n: RelHopfModule, pmax: int) -> list[int]:
    """Derived functors of the A-linear colinear Hom, over the smash product."""
    from hopfcoh.relative import smash_product, to_smash_module

    smash = smash_product(m.comodule_algebra)
    return ext_over_algebra(
        smash.algebra, to_smash_module(smash, m), to_smash_module(smash, n), pmax
    )


class InjectiveResolution:
    """0 -> N -> E^0 -> E^1 -> ...; embedding is maps[0], then connecting maps."""

    def __init__(self, modules: list[AlgebraModule], embedding: Matrix, maps: list[Matrix]):
        self.modules = modules
        self.embedding = embedding
        self.maps = maps


def injective_resolution_fd_algebra(r: Algebra, n: AlgebraModule, length: int) -> InjectiveResolution:
    """Dualize a free resolution of the dual module over the opposite algebra."""
    d = dual_module(n)
    modules, maps = algebra_free_resolution(d, length)
    e_modules = []
    for f in modules:
        df = dual_module(f)  # over (R^op)^op, structurally R
        assert df.algebra.mult == r.mult
        e_modules.append(AlgebraModule(r, df.dim, df.action))
    embedding = maps[0].transpose()
    connecting = [maps[i].transpose() for i in range(1, len(maps))]
    assert rank(embedding) == n.dim, "embedding must be injective"
    prev = embedding
    for i, dmat in enumerate(connecting):
        assert (dmat @ prev).is_zero()
        assert column_space(prev) == kernel(dmat), "injective resolution not exact at %d" % i
        prev = dmat
    for i, e in enumerate(e_modules):
        assert is_injective_module(e), "degree %d is not injective" % i
    return InjectiveResolution(e_modules, embedding, connecting)
