"""Right H-comodules: coinvariants, tensor and Hom comodules, injectivity,
integral projectors, isotypic parts.

A comodule is a space M with a coaction matrix rho: M -> M (x) H, stored as a
(dim M * dim H) x (dim M) matrix in the global tensor ordering. The linear
Hom space Hom(M, N) is identified with N (x) M^* on the elementary-matrix
basis E_{ab} (e_b -> e_a), flattened by index a * dim M + b; the same
flattening is the row-major vec of the matrix of a map, so "vector of a map"
and "map of a vector" are literal reshapes.
"""

from __future__ import annotations

from hopfcoh.errors import HypothesisError
from hopfcoh.hopf import HopfAlgebra, ValidationReport
from hopfcoh.linalg import (
    Matrix,
    Subspace,
    column_space,
    invert,
    kernel,
    kronecker,
    quotient,
    solve_matrix,
    swap_matrix,
)


class Comodule:
    """Right H-comodule by its coaction matrix.

    Deeply iterated tensor constructions keep their coactions lazy (built on
    first access) because differentials of the standard resolution do not need
    them; see Comodule.lazy.
    """

    def __init__(self, hopf: HopfAlgebra, dim: int, coaction: Matrix):
        if coaction.rows != dim * hopf.dim or coaction.cols != dim:
            raise ValueError(
                "coaction must be %dx%d, got %dx%d"
                % (dim * hopf.dim, dim, coaction.rows, coaction.cols)
            )
        self.hopf = hopf
        self.dim = dim
        self._coaction = coaction
        self._builder = None

    @classmethod
    def lazy(cls, hopf: HopfAlgebra, dim: int, builder) -> "Comodule":
        self = cls.__new__(cls)
        self.hopf = hopf
        self.dim = dim
        self._coaction = None
        self._builder = builder
        return self

    @property
    def coaction(self) -> Matrix:
        if self._coaction is None:
            built = self._builder()
            assert built.rows == self.dim * self.hopf.dim and built.cols == self.dim
            self._coaction = built
            self._builder = None
        return self._coaction

    @property
    def field(self):
        return self.hopf.field

    def same_hopf(self, other: "Comodule"):
        if self.hopf is not other.hopf and not _same_hopf_data(self.hopf, other.hopf):
            raise ValueError("comodules over different Hopf algebras")

    def __repr__(self):
        return "Comodule(dim %d over dim-%d Hopf)" % (self.dim, self.hopf.dim)


def _same_hopf_data(a: HopfAlgebra, b: HopfAlgebra) -> bool:
    return (
        a.field == b.field
        and a.dim == b.dim
        and a.algebra.mult == b.algebra.mult
        and a.algebra.unit == b.algebra.unit
        and a.comult == b.comult
        and a.counit == b.counit
        and a.antipode == b.antipode
    )


class ComoduleMap:
    def __init__(self, source: Comodule, target: Comodule, matrix: Matrix):
        assert matrix.rows == target.dim and matrix.cols == source.dim
        self.source = source
        self.target = target
        self.matrix = matrix

    def is_colinear(self) -> bool:
        lhs = self.target.coaction @ self.matrix
        rhs = kronecker(self.matrix, Matrix.identity(self.matrix.field, self.source.hopf.dim)) @ self.source.coaction
        return lhs == rhs


# -- basic constructions ----------------------------------------------------


def insert_unit(h: HopfAlgebra, dim: int) -> Matrix:
    """m -> m (x) 1_H as a matrix M -> M (x) H."""
    return kronecker(Matrix.identity(h.field, dim), h.algebra.unit_col())


def trivial_comodule(h: HopfAlgebra, dim: int) -> Comodule:
    return Comodule(h, dim, insert_unit(h, dim))


def regular_comodule(h: HopfAlgebra) -> Comodule:
    return Comodule(h, h.dim, h.comult_matrix())


def free_comodule(v_dim: int, h: HopfAlgebra) -> Comodule:
    """V (x) H with coaction id_V (x) delta."""
    if v_dim < 0:
        raise ValueError("v_dim must be >= 0")
    return Comodule(h, v_dim * h.dim, kronecker(Matrix.identity(h.field, v_dim), h.comult_matrix()))


def grouplike_comodule(h: HopfAlgebra, grouplike) -> Comodule:
    """One-dimensional comodule m -> m (x) gamma for a group-like gamma."""
    return Comodule(h, 1, Matrix.column(h.field, grouplike))


def direct_sum_comodule(parts) -> Comodule:
    parts = list(parts)
    assert parts
    h = parts[0].hopf
    field = h.field
    dh = h.dim
    total = sum(p.dim for p in parts)
    rho = Matrix.zeros(field, total * dh, total)
    offset = 0
    for p in parts:
        p.same_hopf(parts[0])
        for j in range(p.dim):
            for i in range(p.dim):
                for k in range(dh):
                    v = p.coaction.data[i * dh + k][j]
                    if v:
                        rho.data[(offset + i) * dh + k][offset + j] = v
        offset += p.dim
    return Comodule(h, total, rho)


def validate_comodule(c: Comodule, subject: str = "comodule") -> ValidationReport:
    """Coassociativity and counit law, with a failing basis index as witness."""
    report = ValidationReport(subject)
    h = c.hopf
    field = h.field
    idh = Matrix.identity(field, h.dim)
    lhs = kronecker(c.coaction, idh) @ c.coaction
    rhs = kronecker(Matrix.identity(field, c.dim), h.comult_matrix()) @ c.coaction
    witness = None
    if lhs != rhs:
        witness = next(
            (j,) for j in range(c.dim) if lhs.col(j) != rhs.col(j)
        )
    report.add("coassoc", witness is None, witness)
    counit_side = kronecker(Matrix.identity(field, c.dim), h.counit_matrix()) @ c.coaction
    witness = None
    if counit_side != Matrix.identity(field, c.dim):
        witness = next((j,) for j in range(c.dim) if counit_side.col(j) != Matrix.identity(field, c.dim).col(j))
    report.add("counit", witness is None, witness)
    return report


def tensor_comodule(m: Comodule, n: Comodule) -> Comodule:
    """M (x) N with rho(m (x) n) = m_0 (x) n_0 (x) m_1 n_1."""
    m.same_hopf(n)
    h = m.hopf
    field = h.field
    idm = Matrix.identity(field, m.dim)
    idn = Matrix.identity(field, n.dim)
    idh = Matrix.identity(field, h.dim)
    step1 = kronecker(m.coaction, n.coaction)  # M N -> M H N H
    step2 = kronecker(kronecker(idm, swap_matrix(field, h.dim, n.dim)), idh)  # -> M N H H
    step3 = kronecker(kronecker(idm, idn), h.algebra.mult_matrix())  # -> M N H
    return Comodule(h, m.dim * n.dim, step3 @ step2 @ step1)


def coinvariants(m: Comodule) -> Subspace:
    """M^coH = { m : rho(m) = m (x) 1 } as a canonical subspace."""
    return kernel(m.coaction - insert_unit(m.hopf, m.dim))


# -- maps as vectors --------------------------------------------------------


def map_to_vec(f: Matrix):
    return f.to_flat()


def vec_to_map(field, tgt_dim: int, src_dim: int, vec) -> Matrix:
    return Matrix.from_flat(field, tgt_dim, src_dim, list(vec))


def _hom_basis_maps(field, tgt_dim, src_dim):
    for a in range(tgt_dim):
        for b in range(src_dim):
            e = Matrix.zeros(field, tgt_dim, src_dim)
            e.data[a][b] = field.one
            yield e


def maps_kernel(field, tgt_dim: int, src_dim: int, defects) -> Subspace:
    """Solutions f in Hom of the homogeneous conditions defect_i(f) = 0.

    Each defect is a linear callable Matrix -> Matrix; the kernel is returned
    in the flattened Hom coordinates.
    """
    n = tgt_dim * src_dim
    rows_blocks = []
    cols = []
    for e in _hom_basis_maps(field, tgt_dim, src_dim):
        col = []
        for d in defects:
            col.extend(map_to_vec(d(e)))
        cols.append(col)
    if not cols or not cols[0]:
        return Subspace.full(field, n)
    big = Matrix.from_columns(field, cols)
    return kernel(big)


def maps_solve(field, tgt_dim: int, src_dim: int, conditions):
    """Solve linear conditions on a map: list of (linear callable, target Matrix).

    Returns a Matrix solution or None.
    """
    n = tgt_dim * src_dim
    cols = []
    for e in _hom_basis_maps(field, tgt_dim, src_dim):
        col = []
        for fn, _ in conditions:
            col.extend(map_to_vec(fn(e)))
        cols.append(col)
    rhs = []
    for _, target in conditions:
        rhs.extend(map_to_vec(target))
    if n == 0:
        if any(rhs):
            return None
        return Matrix.zeros(field, tgt_dim, src_dim)
    big = Matrix.from_columns(field, cols)
    sol = solve_matrix(big, Matrix.column(field, rhs))
    if sol is None:
        return None
    return vec_to_map(field, tgt_dim, src_dim, sol.col(0))


def colinear_maps(m: Comodule, n: Comodule) -> Subspace:
    """Hom^H(M, N) inside flattened Hom(M, N).

    The colinearity defect rho_N f - (f (x) id) rho_M is assembled entrywise
    as one operator on vec(f), so large sparse coactions stay cheap.
    """
    m.same_hopf(n)
    field = m.field
    dm, dn, dh = m.dim, n.dim, m.hopf.dim
    unknowns = dn * dm
    if unknowns == 0:
        return Subspace.full(field, unknowns)
    zero = field.zero
    big = [[zero] * unknowns for _ in range(dn * dh * dm)]
    # rho_N f: coefficient of f[a][b] at output ((r), b) is rho_N[r][a]
    for r, row_nz in enumerate(n.coaction.row_nonzeros()):
        base = r * dm
        for a, v in row_nz:
            abase = a * dm
            brow_at = big
            for b in range(dm):
                brow_at[base + b][abase + b] += v
    # (f (x) id) rho_M: coefficient of f[a][b'] at output ((a, k), b) is rho_M[(b', k)][b]
    for idx, row_nz in enumerate(m.coaction.row_nonzeros()):
        bprime, k = divmod(idx, dh)
        for b, v in row_nz:
            for a in range(dn):
                big[(a * dh + k) * dm + b][a * dm + bprime] -= v
    mat = Matrix(field, [field.nrow(r) for r in big], dn * dh * dm, unknowns)
    return kernel(mat)


class HomComodule:
    """The full linear Hom(M, N) as a comodule (finite-dimensional H)."""

    def __init__(self, source: Comodule, target: Comodule, carrier: Comodule):
        self.source = source
        self.target = target
        self.carrier = carrier

    def map_to_vec(self, f: Matrix):
        return map_to_vec(f)

    def vec_to_map(self, vec) -> Matrix:
        return vec_to_map(self.source.field, self.target.dim, self.source.dim, vec)


def hom_coaction_transform(m: Comodule, n: Comodule) -> Matrix:
    """The map N (x) H -> N (x) H applied after (f (x) id) rho_M in the Hom coaction.

    Composite of rho_N (x) id, a flip of the two H factors, the inverse
    antipode on the M-side leg, and multiplication.
    """
    h = m.hopf
    field = h.field
    dh = h.dim
    idn = Matrix.identity(field, n.dim)
    idh = Matrix.identity(field, dh)
    step1 = kronecker(n.coaction, idh)  # N H -> N H H (target coaction first)
    step2 = kronecker(idn, swap_matrix(field, dh, dh))  # swap the two H legs
    step3 = kronecker(idn, kronecker(h.antipode_inv, idh))  # S^{-1} on the M leg
    step4 = kronecker(idn, h.algebra.mult_matrix())  # multiply
    return step4 @ step3 @ step2 @ step1


def hom_comodule(m: Comodule, n: Comodule) -> HomComodule:
    """Hom(M, N) with the coaction f -> f_0 (x) f_1 determined by

        f_0(m) (x) f_1 = f(m_0)_0 (x) S^{-1}(m_1) f(m_0)_1.
    """
    m.same_hopf(n)
    h = m.hopf
    field = h.field
    dh = h.dim
    dm, dn = m.dim, n.dim
    hom_dim = dn * dm
    transform = hom_coaction_transform(m, n)
    idh = Matrix.identity(field, dh)
    rho = Matrix.zeros(field, hom_dim * dh, hom_dim)
    for a in range(dn):
        for b in range(dm):
            e = Matrix.zeros(field, dn, dm)
            e.data[a][b] = field.one
            t = transform @ kronecker(e, idh) @ m.coaction  # (N H) x M
            col = a * dm + b
            for a2 in range(dn):
                for k in range(dh):
                    trow = t.data[a2 * dh + k]
                    for b2 in range(dm):
                        v = trow[b2]
                        if v:
                            rho.data[(a2 * dm + b2) * dh + k][col] = v
    carrier = Comodule(h, hom_dim, rho)
    return HomComodule(m, n, carrier)


def dual_comodule(m: Comodule) -> Comodule:
    """M^* = Hom(M, k) with the induced coaction."""
    return hom_comodule(m, trivial_comodule(m.hopf, 1)).carrier


# -- subobjects and quotients ------------------------------------------------


def restrict_coaction(m: Comodule, basis: Matrix):
    """Coaction matrix on the span of basis columns, or None if not stable."""
    idh = Matrix.identity(m.field, m.hopf.dim)
    return solve_matrix(kronecker(basis, idh), m.coaction @ basis)


def sub_comodule(m: Comodule, sub: Subspace) -> Comodule:
    restricted = restrict_coaction(m, sub.basis)
    if restricted is None:
        raise ValueError("subspace is not a subcomodule")
    return Comodule(m.hopf, sub.dim, restricted)


def quotient_comodule(m: Comodule, sub: Subspace):
    """(M / sub, projection); sub must be a subcomodule."""
    if restrict_coaction(m, sub.basis) is None:
        raise ValueError("subspace is not a subcomodule")
    reps, proj = quotient(m.dim, sub)
    idh = Matrix.identity(m.field, m.hopf.dim)
    rho = kronecker(proj, idh) @ m.coaction @ reps
    q = Comodule(m.hopf, proj.rows, rho)
    # the projection must be colinear for the induced structure
    assert kronecker(proj, idh) @ m.coaction == rho @ proj, "quotient coaction ill-defined"
    return q, proj


def coaction_components(m: Comodule, vec):
    """The M-components of rho(v), one per H basis index."""
    dh = m.hopf.dim
    image = m.coaction.apply(list(vec))
    comps = []
    for k in range(dh):
        comps.append([image[i * dh + k] for i in range(m.dim)])
    return comps


def generated_subcomodule(m: Comodule, vectors):
    """Smallest subcomodule containing the vectors, with its restricted structure.

    Returns (subspace, comodule_on_subspace).
    """
    field = m.field
    span = Subspace.from_spanning(field, m.dim, [list(v) for v in vectors])
    while True:
        new_vecs = []
        for j in range(span.dim):
            new_vecs.extend(coaction_components(m, span.basis.col(j)))
        bigger = span.sum_with(Subspace.from_spanning(field, m.dim, new_vecs))
        if bigger.dim == span.dim:
            break
        span = bigger
    return span, sub_comodule(m, span)


# -- currying -----------------------------------------------------------------


class CurryData:
    """Mutually inverse matrices between Hom^H(N (x) M, P) and Hom^H(M, HOM(N, P))."""

    def __init__(self, left: Subspace, right: Subspace, forward: Matrix, backward: Matrix):
        self.left = left
        self.right = right
        self.forward = forward
        self.backward = backward


def curry(m: Comodule, n: Comodule, p: Comodule) -> CurryData:
    """phi(f)(m)(n) = f(n (x) m), restricted to the colinear subspaces.

    In the flattened Hom coordinates phi is the identity reshape, so the
    returned matrices are change-of-basis between the two canonical kernels.
    """
    left = colinear_maps(tensor_comodule(n, m), p)
    hom_np = hom_comodule(n, p)
    right = colinear_maps(m, hom_np.carrier)
    forward = solve_matrix(right.basis, left.basis)
    backward = solve_matrix(left.basis, right.basis)
    if forward is None or backward is None:
        raise AssertionError("currying does not restrict to the colinear subspaces")
    return CurryData(left, right, forward, backward)


def flip_is_colinear(m: Comodule, n: Comodule) -> bool:
    """Sufficient symmetry check: is the flip M (x) N -> N (x) M colinear?"""
    tau = swap_matrix(m.field, m.dim, n.dim)
    return ComoduleMap(tensor_comodule(m, n), tensor_comodule(n, m), tau).is_colinear()


def curry_symmetric(m: Comodule, n: Comodule, p: Comodule) -> CurryData:
    """The flipped currying Hom^H(M (x) N, P) ~ Hom^H(M, HOM(N, P)).

    Runs only when the flip map witnesses the symmetry property; refuses
    otherwise (the general property is existential and not searched).
    """
    if not flip_is_colinear(n, m):
        raise HypothesisError("no symmetry witness: the flip map is not colinear")
    field = m.field
    left = colinear_maps(tensor_comodule(m, n), p)
    hom_np = hom_comodule(n, p)
    right = colinear_maps(m, hom_np.carrier)
    tau_nm = swap_matrix(field, n.dim, m.dim)  # N (x) M -> M (x) N
    tau_mn = swap_matrix(field, m.dim, n.dim)
    fwd_cols = []
    for t in range(left.dim):
        g = vec_to_map(field, p.dim, m.dim * n.dim, left.basis.col(t))
        coords = right.coords(map_to_vec(g @ tau_nm))
        assert coords is not None, "flipped map is not colinear into HOM"
        fwd_cols.append(coords)
    bwd_cols = []
    for t in range(right.dim):
        f = vec_to_map(field, p.dim, n.dim * m.dim, right.basis.col(t))
        coords = left.coords(map_to_vec(f @ tau_mn))
        assert coords is not None
        bwd_cols.append(coords)
    forward = Matrix.from_columns(field, fwd_cols) if fwd_cols else Matrix.zeros(field, right.dim, 0)
    backward = Matrix.from_columns(field, bwd_cols) if bwd_cols else Matrix.zeros(field, left.dim, 0)
    if left.dim:
        ident = Matrix.identity(field, left.dim)
        assert backward @ forward == ident and forward @ backward == ident
    return CurryData(left, right, forward, backward)


# -- injectivity ---------------------------------------------------------------


def is_injective_comodule(m: Comodule) -> bool:
    """Does rho: M -> M (x) H (free target) admit a colinear retraction?"""
    h = m.hopf
    field = h.field
    free = free_comodule(m.dim, h)
    idh = Matrix.identity(field, h.dim)

    def retraction_defect(r: Matrix) -> Matrix:
        return m.coaction @ r - kronecker(r, idh) @ free.coaction

    sol = maps_solve(
        field,
        m.dim,
        free.dim,
        [
            (lambda r: r @ m.coaction, Matrix.identity(field, m.dim)),
            (retraction_defect, Matrix.zeros(field, m.dim * h.dim, free.dim)),
        ],
    )
    return sol is not None


# -- integrals and isotypic pieces ---------------------------------------------


class ErgodicDecomposition:
    def __init__(self, invariant_part: Subspace, ergodic_part: Subspace, projector: Matrix):
        self.invariant_part = invariant_part
        self.ergodic_part = ergodic_part
        self.projector = projector


def integral_projector(m: Comodule, integral_data=None) -> ErgodicDecomposition:
    """p(m) = phi(m_1) m_0 for the normalized integral phi; M = im p (+) ker p."""
    from hopfcoh.hopf import integrals as _integrals

    h = m.hopf
    data = integral_data if integral_data is not None else _integrals(h)
    if not data.cosemisimple:
        raise HypothesisError("not cosemisimple")
    field = h.field
    phi_row = Matrix.row_vector(field, data.normalized)
    p = kronecker(Matrix.identity(field, m.dim), phi_row) @ m.coaction
    assert p @ p == p
    assert ComoduleMap(m, m, p).is_colinear()
    inv_part = column_space(p)
    assert inv_part == coinvariants(m)
    erg_part = kernel(p)
    assert inv_part.dim + erg_part.dim == m.dim
    assert inv_part.intersect(erg_part).dim == 0
    if inv_part.dim:
        assert p @ inv_part.basis == inv_part.basis
    return ErgodicDecomposition(inv_part, erg_part, p)


def is_simple_comodule(v: Comodule, samples: int = 10, seed: int = 1729) -> bool:
    """Every nonzero basis vector (plus seeded pseudo-random vectors) generates all of V."""
    import random as _random

    if v.dim == 0:
        return False
    field = v.field
    probes = [[field.one if i == j else field.zero for i in range(v.dim)] for j in range(v.dim)]
    rng = _random.Random(seed)
    for _ in range(samples):
        probes.append([field.coerce(rng.randrange(0, 5)) for _ in range(v.dim)])
    for vec in probes:
        if not any(vec):
            continue
        span, _ = generated_subcomodule(v, [vec])
        if span.dim != v.dim:
            return False
    return True


class IsotypicData:
    def __init__(self, component: Subspace, iso_matrix: Matrix, hom_dim: int):
        self.component = component
        self.iso_matrix = iso_matrix
        self.hom_dim = hom_dim


def isotypic_component(n: Comodule, v: Comodule) -> IsotypicData:
    """N_V as the image of the evaluation Hom^H(V, N) (x) V -> N."""
    n.same_hopf(v)
    if not is_simple_comodule(v) or colinear_maps(v, v).dim != 1:
        raise HypothesisError("not simple or not split")
    field = n.field
    homvs = colinear_maps(v, n)
    maps = [vec_to_map(field, n.dim, v.dim, homvs.basis.col(t)) for t in range(homvs.dim)]
    cols = []
    for g in maps:
        for c in range(v.dim):
            cols.append(g.col(c))
    if not cols:
        return IsotypicData(Subspace.zero(field, n.dim), Matrix.zeros(field, n.dim, 0), 0)
    ev = Matrix.from_columns(field, cols)
    component = column_space(ev)
    # evaluation is injective on Hom^H(V,N) (x) V, so it maps onto N_V isomorphically
    assert component.dim == homvs.dim * v.dim
    assert restrict_coaction(n, component.basis) is not None
    return IsotypicData(component, ev, homvs.dim)


# -- rationality witnesses -------------------------------------------------------


class RationalityWitness:
    def __init__(self, comodule: Comodule, inclusion: Matrix, element, evaluation: ComoduleMap):
        self.comodule = comodule  # V, a subcomodule of HOM(M, N)
        self.inclusion = inclusion  # columns: V basis as Hom vectors
        self.element = element  # coordinates of f in V
        self.evaluation = evaluation  # F: M (x) V -> N


def rationality_witness(m: Comodule, n: Comodule, f: Matrix) -> RationalityWitness:
    """V, v and colinear F: M (x) V -> N with F(m (x) v) = f(m) for all m."""
    field = m.field
    hom = hom_comodule(m, n)
    fvec = map_to_vec(f)
    span, vcom = generated_subcomodule(hom.carrier, [fvec])
    coords = span.coords(fvec)
    assert coords is not None
    maps = [vec_to_map(field, n.dim, m.dim, span.basis.col(t)) for t in range(span.dim)]
    ev = Matrix.zeros(field, n.dim, m.dim * span.dim)
    for c in range(m.dim):
        for j, g in enumerate(maps):
            col = g.col(c)
            for i in range(n.dim):
                ev.data[i][c * span.dim + j] = col[i]
    evaluation = ComoduleMap(tensor_comodule(m, vcom), n, ev)
    assert evaluation.is_colinear()
    # F(e_c (x) f) = f(e_c)
    for c in range(m.dim):
        out = [field.zero] * n.dim
        for j, g in enumerate(maps):
            if coords[j]:
                for i in range(n.dim):
                    out[i] += coords[j] * g.data[i][c]
        assert field.nrow(out) == f.col(c)
    return RationalityWitness(vcom, span.basis, coords, evaluation)
