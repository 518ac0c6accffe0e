"""Comodule algebras, relative (A,H)-Hopf modules, coinvariant subalgebras,
induction, the B-linear Hom from A, the nu map and its kernel, and the smash
product A # H^*.

Plain algebra modules (used for B-modules and for the smash transport) live
here too: an action of R on M is a matrix R (x) M -> M in the global tensor
ordering, so column i * dim M + x is e_i . e_x.
"""

from __future__ import annotations

from hopfcoh.comodule import (
    Comodule,
    coinvariants,
    colinear_maps,
    hom_comodule,
    integral_projector,
    map_to_vec,
    maps_kernel,
    maps_solve,
    quotient_comodule,
    restrict_coaction,
    sub_comodule,
    swap_matrix,
    tensor_comodule,
    trivial_comodule,
    validate_comodule,
    vec_to_map,
)
from hopfcoh.errors import HypothesisError, StructureError
from hopfcoh.hopf import Algebra, HopfAlgebra, ValidationReport, validate_algebra
from hopfcoh.linalg import Matrix, Subspace, kernel, kronecker, quotient, solve_matrix


class ComoduleAlgebra:
    """Algebra with a colinear multiplication and unit."""

    def __init__(self, algebra: Algebra, comodule: Comodule):
        assert algebra.dim == comodule.dim and algebra.field == comodule.field
        self.algebra = algebra
        self.comodule = comodule

    @property
    def hopf(self) -> HopfAlgebra:
        return self.comodule.hopf

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    def __repr__(self):
        return "ComoduleAlgebra(dim %d over dim-%d Hopf)" % (self.dim, self.hopf.dim)


def validate_comodule_algebra(a: ComoduleAlgebra, subject: str = "comodule_algebra") -> ValidationReport:
    report = validate_algebra(a.algebra, subject)
    for axiom, ok, witness in validate_comodule(a.comodule, subject).entries:
        report.add("coaction_" + axiom, ok, witness)
    h = a.hopf
    field = a.field
    d = a.dim
    ida = Matrix.identity(field, d)
    idh = Matrix.identity(field, h.dim)
    # rho(ab) = a0 b0 (x) a1 b1 on basis pairs
    lhs = a.comodule.coaction @ a.algebra.mult_matrix()
    step1 = kronecker(a.comodule.coaction, a.comodule.coaction)
    step2 = kronecker(kronecker(ida, swap_matrix(field, h.dim, d)), idh)
    step3 = kronecker(kronecker(ida, ida), h.algebra.mult_matrix())
    mult_then = kronecker(a.algebra.mult_matrix(), h.algebra.mult_matrix())
    rhs = mult_then @ step2 @ step1
    witness = None
    if lhs != rhs:
        for col in range(d * d):
            if lhs.col(col) != rhs.col(col):
                witness = (col // d, col % d)
                break
    report.add("mult_colinear", witness is None, witness)
    # rho(1) = 1 (x) 1
    rho_one = a.comodule.coaction.apply(a.algebra.unit)
    expect = [field.zero] * (d * h.dim)
    for i in range(d):
        if a.algebra.unit[i]:
            for k in range(h.dim):
                if h.unit[k]:
                    expect[i * h.dim + k] = a.algebra.unit[i] * h.unit[k]
    report.add("unit_colinear", field.nrow(rho_one) == field.nrow(expect), ())
    return report


def trivial_comodule_algebra(alg: Algebra, h: HopfAlgebra) -> ComoduleAlgebra:
    return ComoduleAlgebra(alg, trivial_comodule(h, alg.dim))


def regular_comodule_algebra(h: HopfAlgebra) -> ComoduleAlgebra:
    return ComoduleAlgebra(h.algebra, Comodule(h, h.dim, h.comult_matrix()))


class AlgebraModule:
    """Finite-dimensional left module over an Algebra, by its action matrix."""

    def __init__(self, algebra: Algebra, dim: int, action: Matrix):
        assert action.rows == dim and action.cols == algebra.dim * dim
        self.algebra = algebra
        self.dim = dim
        self.action = action

    @property
    def field(self):
        return self.algebra.field

    def act_matrix(self, vec) -> Matrix:
        """The operator for the algebra element with the given coordinates."""
        field = self.field
        out = Matrix.zeros(field, self.dim, self.dim)
        for i, c in enumerate(vec):
            if not c:
                continue
            for j in range(self.dim):
                col = self.action.col(i * self.dim + j)
                for k in range(self.dim):
                    if col[k]:
                        out.data[k][j] += c * col[k]
        out.data = [field.nrow(r) for r in out.data]
        return out

    def __repr__(self):
        return "AlgebraModule(dim %d over dim-%d algebra)" % (self.dim, self.algebra.dim)


def validate_module(m: AlgebraModule, subject: str = "module") -> ValidationReport:
    report = ValidationReport(subject)
    field = m.field
    ida = Matrix.identity(field, m.algebra.dim)
    idm = Matrix.identity(field, m.dim)
    unital = m.action @ kronecker(m.algebra.unit_col(), idm) == idm
    report.add("unital", unital, ())
    lhs = m.action @ kronecker(m.algebra.mult_matrix(), idm)
    rhs = m.action @ kronecker(ida, m.action)
    witness = None
    if lhs != rhs:
        for col in range(lhs.cols):
            if lhs.col(col) != rhs.col(col):
                witness = (col // (m.algebra.dim * m.dim), (col // m.dim) % m.algebra.dim, col % m.dim)
                break
    report.add("assoc_action", witness is None, witness)
    return report


def free_module(r: Algebra, n: int) -> AlgebraModule:
    """R^n with componentwise left multiplication; copy index is the slow one."""
    field = r.field
    d = r.dim
    action = Matrix.zeros(field, n * d, d * n * d)
    for i in range(d):
        for t in range(n):
            for j in range(d):
                col = i * (n * d) + (t * d + j)
                for k in range(d):
                    v = r.mult[i][j][k]
                    if v:
                        action.data[t * d + k][col] = v
    return AlgebraModule(r, n * d, action)


def regular_module(r: Algebra) -> AlgebraModule:
    return AlgebraModule(r, r.dim, r.mult_matrix())


def module_linear_maps(m: AlgebraModule, n: AlgebraModule) -> Subspace:
    """Hom_R(M, N) inside flattened Hom(M, N).

    Linearity is imposed for a generating set of R only; the action operators
    are multiplicative in R, so this cuts no solutions.
    """
    assert m.algebra is n.algebra or m.algebra.mult == n.algebra.mult
    field = m.field
    defects = []
    for i in m.algebra.generators():
        e = m.algebra.basis_vector(i)
        lm = m.act_matrix(e)
        ln = n.act_matrix(e)
        defects.append(lambda f, lm=lm, ln=ln: f @ lm - ln @ f)
    return maps_kernel(field, n.dim, m.dim, defects)


def sub_module(m: AlgebraModule, sub: Subspace) -> AlgebraModule:
    ida = Matrix.identity(m.field, m.algebra.dim)
    restricted = solve_matrix(sub.basis, m.action @ kronecker(ida, sub.basis))
    if restricted is None:
        raise ValueError("subspace is not a submodule")
    return AlgebraModule(m.algebra, sub.dim, restricted)


def quotient_module(m: AlgebraModule, sub: Subspace):
    ida = Matrix.identity(m.field, m.algebra.dim)
    if solve_matrix(sub.basis, m.action @ kronecker(ida, sub.basis)) is None:
        raise ValueError("subspace is not a submodule")
    reps, proj = quotient(m.dim, sub)
    action = proj @ m.action @ kronecker(ida, reps)
    if not (proj @ m.action @ kronecker(ida, sub.basis)).is_zero():
        raise ValueError("quotient action ill-defined")
    return AlgebraModule(m.algebra, proj.rows, action), proj


def generated_submodule(m: AlgebraModule, vectors) -> Subspace:
    field = m.field
    span = Subspace.from_spanning(field, m.dim, [list(v) for v in vectors])
    while True:
        new_vecs = []
        for j in range(span.dim):
            v = span.basis.col(j)
            for i in range(m.algebra.dim):
                new_vecs.append(m.action.apply(_tensor_vec(field, m.algebra.basis_vector(i), v)))
        bigger = span.sum_with(Subspace.from_spanning(field, m.dim, new_vecs))
        if bigger.dim == span.dim:
            return span
        span = bigger


def _tensor_vec(field, u, v):
    out = [field.zero] * (len(u) * len(v))
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if b:
                out[i * len(v) + j] = a * b
    return field.nrow(out)


def dual_module(m: AlgebraModule) -> AlgebraModule:
    """k-dual as a left module over the opposite algebra: (a . f)(x) = f(a x)."""
    opp = m.algebra.opposite()
    field = m.field
    d = m.dim
    action = Matrix.zeros(field, d, opp.dim * d)
    for i in range(opp.dim):
        for b in range(d):
            for x in range(d):
                v = m.action.data[b][i * d + x]
                if v:
                    action.data[x][i * d + b] = v
    return AlgebraModule(opp, d, action)


def is_projective_module(p: AlgebraModule) -> bool:
    """Does the free cover R^n -> P on all n = dim P basis vectors split R-linearly?

    A splitting s: P -> R^n decomposes into components in Hom_R(P, R), so the
    search runs in coordinates on that (small) space instead of on all of
    Hom(P, R^n).
    """
    r = p.algebra
    field = p.field
    n = p.dim
    if n == 0:
        return True
    hom_pr = module_linear_maps(p, regular_module(r))
    if hom_pr.dim == 0:
        return False
    # cover block t is x -> x . p_t; compose with each Hom_R(P, R) basis map
    cols = []
    for t in range(n):
        block = Matrix.zeros(field, n, r.dim)  # R -> P, e_j -> e_j . p_t
        for j in range(r.dim):
            col = p.action.col(j * n + t)
            for k in range(n):
                block.data[k][j] = col[k]
        for s in range(hom_pr.dim):
            smap = vec_to_map(field, r.dim, n, hom_pr.basis.col(s))
            cols.append(map_to_vec(block @ smap))
    big = Matrix(field, [list(row) for row in zip(*cols)], n * n, len(cols))
    target = Matrix.column(field, map_to_vec(Matrix.identity(field, n)))
    return solve_matrix(big, target) is not None


def is_injective_module(i: AlgebraModule) -> bool:
    return is_projective_module(dual_module(i))


# -- relative Hopf modules ----------------------------------------------------


class RelHopfModule:
    """Left A-module with a compatible right H-coaction."""

    def __init__(self, comodule_algebra: ComoduleAlgebra, comodule: Comodule, action: Matrix):
        assert action.rows == comodule.dim and action.cols == comodule_algebra.dim * comodule.dim
        self.comodule_algebra = comodule_algebra
        self.comodule = comodule
        self.action = action

    @property
    def dim(self):
        return self.comodule.dim

    @property
    def field(self):
        return self.comodule.field

    @property
    def hopf(self):
        return self.comodule.hopf

    def as_module(self) -> AlgebraModule:
        return AlgebraModule(self.comodule_algebra.algebra, self.dim, self.action)

    def __repr__(self):
        return "RelHopfModule(dim %d over A dim %d)" % (self.dim, self.comodule_algebra.dim)


def validate_rel_hopf_module(m: RelHopfModule, subject: str = "rel_hopf_module") -> ValidationReport:
    report = validate_module(m.as_module(), subject)
    for axiom, ok, witness in validate_comodule(m.comodule, subject).entries:
        report.add("coaction_" + axiom, ok, witness)
    a = m.comodule_algebra
    h = m.hopf
    field = m.field
    da, dm, dh = a.dim, m.dim, h.dim
    ida = Matrix.identity(field, da)
    idh = Matrix.identity(field, dh)
    idm = Matrix.identity(field, dm)
    # rho(am) = a0 m0 (x) a1 m1 on basis pairs
    lhs = m.comodule.coaction @ m.action
    step1 = kronecker(a.comodule.coaction, m.comodule.coaction)  # A M -> A H M H
    step2 = kronecker(kronecker(ida, swap_matrix(field, dh, dm)), idh)  # -> A M H H
    step3 = kronecker(m.action, h.algebra.mult_matrix())  # -> M H
    rhs = step3 @ step2 @ step1
    witness = None
    if lhs != rhs:
        for col in range(da * dm):
            if lhs.col(col) != rhs.col(col):
                witness = (col // dm, col % dm)
                break
    report.add("compatibility", witness is None, witness)
    return report


def regular_rel_module(a: ComoduleAlgebra) -> RelHopfModule:
    return RelHopfModule(a, a.comodule, a.algebra.mult_matrix())


def rel_free_on_comodule(a: ComoduleAlgebra, v: Comodule) -> RelHopfModule:
    """A (x) V with left multiplication on A and the tensor coaction."""
    idv = Matrix.identity(a.field, v.dim)
    action = kronecker(a.algebra.mult_matrix(), idv)
    return RelHopfModule(a, tensor_comodule(a.comodule, v), action)


def a_linear_maps(m: RelHopfModule, n: RelHopfModule) -> Subspace:
    return module_linear_maps(m.as_module(), n.as_module())


def a_hom_H(m: RelHopfModule, n: RelHopfModule) -> Subspace:
    """A-linear H-colinear maps inside flattened Hom(M, N)."""
    return a_linear_maps(m, n).intersect(colinear_maps(m.comodule, n.comodule))


def sub_rel_module(m: RelHopfModule, sub: Subspace) -> RelHopfModule:
    comod = sub_comodule(m.comodule, sub)
    ida = Matrix.identity(m.field, m.comodule_algebra.dim)
    action = solve_matrix(sub.basis, m.action @ kronecker(ida, sub.basis))
    if action is None:
        raise ValueError("subspace is not an A-submodule")
    return RelHopfModule(m.comodule_algebra, comod, action)


def quotient_rel_module(m: RelHopfModule, sub: Subspace):
    comod, proj = quotient_comodule(m.comodule, sub)
    ida = Matrix.identity(m.field, m.comodule_algebra.dim)
    reps, proj2 = quotient(m.dim, sub)
    assert proj2 == proj
    action = proj @ m.action @ kronecker(ida, reps)
    if not (proj @ m.action @ kronecker(ida, sub.basis)).is_zero():
        raise ValueError("quotient action ill-defined")
    return RelHopfModule(m.comodule_algebra, comod, action), proj


def generated_rel_submodule(m: RelHopfModule, vectors):
    """Smallest subspace containing the vectors closed under action and coaction."""
    from hopfcoh.comodule import coaction_components

    field = m.field
    span = Subspace.from_spanning(field, m.dim, [list(v) for v in vectors])
    while True:
        new_vecs = []
        for j in range(span.dim):
            v = span.basis.col(j)
            new_vecs.extend(coaction_components(m.comodule, v))
            for i in range(m.comodule_algebra.dim):
                new_vecs.append(m.action.apply(_tensor_vec(field, m.comodule_algebra.algebra.basis_vector(i), v)))
        bigger = span.sum_with(Subspace.from_spanning(field, m.dim, new_vecs))
        if bigger.dim == span.dim:
            return span, sub_rel_module(m, span)
        span = bigger


# -- coinvariant subalgebra -----------------------------------------------------


class CoinvariantAlgebra:
    """B = A^coH with its restricted structure constants."""

    def __init__(self, parent: ComoduleAlgebra, subspace: Subspace, algebra: Algebra):
        self.parent = parent
        self.subspace = subspace
        self.algebra = algebra

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def inclusion(self) -> Matrix:
        return self.subspace.basis

    def __repr__(self):
        return "CoinvariantAlgebra(dim %d in A dim %d)" % (self.dim, self.parent.dim)


def coinvariant_subalgebra(a: ComoduleAlgebra) -> CoinvariantAlgebra:
    field = a.field
    sub = coinvariants(a.comodule)
    unit_coords = sub.coords(a.algebra.unit)
    if unit_coords is None:
        raise StructureError("1_A is not coinvariant")
    d = sub.dim
    mult = [[[field.zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            prod = a.algebra.multiply(sub.basis.col(i), sub.basis.col(j))
            coords = sub.coords(prod)
            if coords is None:
                raise StructureError("coinvariants are not closed under multiplication")
            mult[i][j] = coords
    alg = Algebra(field, d, mult, unit_coords)
    assert validate_algebra(alg).ok
    return CoinvariantAlgebra(a, sub, alg)


def b_module_of_coinvariants(b: CoinvariantAlgebra, n: RelHopfModule) -> AlgebraModule:
    """N^coH as a module over B."""
    field = n.field
    sub = coinvariants(n.comodule)
    d = sub.dim
    action = Matrix.zeros(field, d, b.dim * d)
    for s in range(b.dim):
        avec = b.inclusion.col(s)
        for t in range(d):
            image = n.action.apply(_tensor_vec(field, avec, sub.basis.col(t)))
            coords = sub.coords(image)
            if coords is None:
                raise StructureError("coinvariants are not B-stable")
            for k in range(d):
                action.data[k][s * d + t] = coords[k]
    return AlgebraModule(b.algebra, d, action)


# -- rational A-linear Hom -------------------------------------------------------


class AHomData:
    """A-linear maps M -> N with the restricted Hom-comodule structure."""

    def __init__(self, source, target, subspace: Subspace, comodule: Comodule, module: RelHopfModule | None):
        self.source = source
        self.target = target
        self.subspace = subspace  # basis in flattened Hom(M, N)
        self.comodule = comodule  # coaction on the subspace coordinates
        self.module = module  # relative structure when A and H are commutative

    @property
    def dim(self):
        return self.subspace.dim

    def map_at(self, t: int) -> Matrix:
        return vec_to_map(self.comodule.field, self.target.dim, self.source.dim, self.subspace.basis.col(t))


def a_hom_rational(m: RelHopfModule, n: RelHopfModule, want_module: bool = False) -> AHomData:
    """The comodule of A-linear maps M -> N; coinvariants are checked to be
    exactly the A-linear colinear maps."""
    field = m.field
    sub = a_linear_maps(m, n)
    hom = hom_comodule(m.comodule, n.comodule)
    coact = restrict_coaction(hom.carrier, sub.basis)
    if coact is None:
        raise StructureError("A-linear maps are not coaction-stable")
    comod = Comodule(m.hopf, sub.dim, coact)
    # coinvariants in ambient coordinates = A-linear colinear maps
    coinv = coinvariants(comod)
    ambient_coinv = Subspace.from_spanning(
        field, hom.carrier.dim, [sub.basis.apply(coinv.basis.col(t)) for t in range(coinv.dim)]
    )
    direct = a_hom_H(m, n)
    assert ambient_coinv == direct, "coinvariant maps mismatch"
    module = None
    if want_module:
        if not (m.comodule_algebra.algebra.is_commutative() and m.hopf.algebra.is_commutative()):
            raise HypothesisError("not commutative")
        a = m.comodule_algebra
        action = Matrix.zeros(field, sub.dim, a.dim * sub.dim)
        for i in range(a.dim):
            la = _left_action_operator(m, a.algebra.basis_vector(i))
            for t in range(sub.dim):
                f = vec_to_map(field, n.dim, m.dim, sub.basis.col(t))
                coords = sub.coords(map_to_vec(f @ la))
                if coords is None:
                    raise StructureError("a.f = f o L(a) leaves the A-linear maps")
                for k in range(sub.dim):
                    action.data[k][i * sub.dim + t] = coords[k]
        module = RelHopfModule(a, comod, action)
        report = validate_rel_hopf_module(module)
        assert report.ok, report.failures()
    return AHomData(m, n, sub, comod, module)


def _left_action_operator(m: RelHopfModule, avec) -> Matrix:
    field = m.field
    out = Matrix.zeros(field, m.dim, m.dim)
    for j in range(m.dim):
        ej = [field.one if t == j else field.zero for t in range(m.dim)]
        col = m.action.apply(_tensor_vec(field, avec, ej))
        for k in range(m.dim):
            out.data[k][j] = col[k]
    return out


# -- induction A (x)_B - ----------------------------------------------------------


def _induction_relations(b: CoinvariantAlgebra, bmod: AlgebraModule, a: ComoduleAlgebra) -> Subspace:
    field = a.field
    da, dm = a.dim, bmod.dim
    rel_vecs = []
    for i in range(da):
        for s in range(b.dim):
            bvec = b.inclusion.col(s)
            ab = a.algebra.multiply(a.algebra.basis_vector(i), bvec)
            for j in range(dm):
                ej = [field.one if t == j else field.zero for t in range(dm)]
                bm = bmod.action.apply(_tensor_vec(field, b.algebra.basis_vector(s), ej))
                v = [field.zero] * (da * dm)
                for k in range(da):
                    if ab[k]:
                        v[k * dm + j] += ab[k]
                for k in range(dm):
                    if bm[k]:
                        v[i * dm + k] -= bm[k]
                rel_vecs.append(field.nrow(v))
    return Subspace.from_spanning(field, da * dm, rel_vecs)


class InducedModule:
    """A (x)_B M together with its quotient data and the map m -> [1 (x) m]."""

    def __init__(self, module: RelHopfModule, reps: Matrix, proj: Matrix, unit_map: Matrix):
        self.module = module
        self.reps = reps
        self.proj = proj
        self.unit_map = unit_map


def induce_with_data(b: CoinvariantAlgebra, bmod: AlgebraModule, a: ComoduleAlgebra) -> InducedModule:
    """A (x)_B M with coaction a (x) m -> a_0 (x) m (x) a_1."""
    assert bmod.algebra.mult == b.algebra.mult
    field = a.field
    h = a.hopf
    da, dm = a.dim, bmod.dim
    ambient = da * dm
    relations = _induction_relations(b, bmod, a)
    reps, proj = quotient(ambient, relations)
    ida = Matrix.identity(field, da)
    idm = Matrix.identity(field, dm)
    idh = Matrix.identity(field, h.dim)
    # coaction upstairs: a (x) m -> a0 (x) m (x) a1
    rho_up = kronecker(ida, swap_matrix(field, h.dim, dm)) @ kronecker(a.comodule.coaction, idm)
    if relations.dim and not (kronecker(proj, idh) @ rho_up @ relations.basis).is_zero():
        raise StructureError("induced coaction ill-defined")
    rho = kronecker(proj, idh) @ rho_up @ reps
    # action upstairs: multiplication on the left tensor factor
    act_up = kronecker(a.algebra.mult_matrix(), idm)
    if relations.dim and not (proj @ act_up @ kronecker(ida, relations.basis)).is_zero():
        raise StructureError("induced action ill-defined")
    action = proj @ act_up @ kronecker(ida, reps)
    out = RelHopfModule(a, Comodule(h, proj.rows, rho), action)
    report = validate_rel_hopf_module(out)
    assert report.ok, report.failures()
    unit_map = proj @ kronecker(a.algebra.unit_col(), idm)
    return InducedModule(out, reps, proj, unit_map)


def induce(b: CoinvariantAlgebra, bmod: AlgebraModule, a: ComoduleAlgebra) -> RelHopfModule:
    return induce_with_data(b, bmod, a).module


class AdjunctionData:
    """Mutually inverse matrices between _A Hom^H(A (x)_B M, N) and _B Hom(M, N^coH)."""

    def __init__(self, left: Subspace, right: Subspace, forward: Matrix, backward: Matrix):
        self.left = left
        self.right = right
        self.forward = forward
        self.backward = backward


def adjunction_check(b: CoinvariantAlgebra, bmod: AlgebraModule, n: RelHopfModule) -> AdjunctionData:
    """f -> (m -> f([1 (x) m])) against g -> ([a (x) m] -> a g(m))."""
    a = n.comodule_algebra
    field = a.field
    ind = induce_with_data(b, bmod, a)
    q = ind.module
    left = a_hom_H(q, n)
    ncoh = coinvariants(n.comodule)
    nmod = b_module_of_coinvariants(b, n)
    right = module_linear_maps(bmod, nmod)
    assert left.dim == right.dim
    fwd_cols = []
    for t in range(left.dim):
        f = vec_to_map(field, n.dim, q.dim, left.basis.col(t))
        g_ambient = f @ ind.unit_map  # M -> N, lands in coinvariants
        g = solve_matrix(ncoh.basis, g_ambient)
        assert g is not None, "unit-composed map is not coinvariant-valued"
        coords = right.coords(map_to_vec(g))
        assert coords is not None
        fwd_cols.append(coords)
    bwd_cols = []
    ida = Matrix.identity(field, a.dim)
    for t in range(right.dim):
        g = vec_to_map(field, nmod.dim, bmod.dim, right.basis.col(t))
        lift = n.action @ kronecker(ida, ncoh.basis @ g)  # A (x) M -> N
        f = lift @ ind.reps
        # well-definedness on the quotient
        rel = _induction_relations(b, bmod, a)
        if rel.dim:
            assert (lift @ rel.basis).is_zero()
        coords = left.coords(map_to_vec(f))
        assert coords is not None
        bwd_cols.append(coords)
    forward = Matrix.from_columns(field, fwd_cols) if fwd_cols else Matrix.zeros(field, right.dim, 0)
    backward = Matrix.from_columns(field, bwd_cols) if bwd_cols else Matrix.zeros(field, left.dim, 0)
    if left.dim:
        ident = Matrix.identity(field, left.dim)
        assert backward @ forward == ident
        assert forward @ backward == ident
    return AdjunctionData(left, right, forward, backward)


# -- B-linear Hom from A -----------------------------------------------------------


class BHomModule:
    """_B HOM(A, N) as a relative (A, H)-Hopf module, with evaluation at 1."""

    def __init__(self, module: RelHopfModule, basis: Subspace, ev_at_one: Matrix, b: CoinvariantAlgebra, n: AlgebraModule):
        self.module = module
        self.basis = basis  # in flattened Hom(A, N)
        self.ev_at_one = ev_at_one  # dim N x dim carrier
        self.b = b
        self.n = n

    @property
    def dim(self):
        return self.module.dim


def b_hom_from_A(a: ComoduleAlgebra, b: CoinvariantAlgebra, n: AlgebraModule) -> BHomModule:
    """B-linear maps A -> N, with (a.f)(x) = f(x a) and the Hom coaction."""
    assert n.algebra.mult == b.algebra.mult
    field = a.field
    h = a.hopf
    defects = []
    for s in b.algebra.generators():
        bvec = b.inclusion.col(s)
        la = a.algebra.left_mult_matrix(bvec)
        ln = n.act_matrix(b.algebra.basis_vector(s))
        defects.append(lambda f, la=la, ln=ln: f @ la - ln @ f)
    sub = maps_kernel(field, n.dim, a.dim, defects)
    hom = hom_comodule(a.comodule, trivial_comodule(h, n.dim))
    coact = restrict_coaction(hom.carrier, sub.basis)
    if coact is None:
        raise StructureError("B-linear maps are not coaction-stable")
    comod = Comodule(h, sub.dim, coact)
    action = Matrix.zeros(field, sub.dim, a.dim * sub.dim)
    for i in range(a.dim):
        ra = a.algebra.right_mult_matrix(a.algebra.basis_vector(i))
        for t in range(sub.dim):
            f = vec_to_map(field, n.dim, a.dim, sub.basis.col(t))
            coords = sub.coords(map_to_vec(f @ ra))
            if coords is None:
                raise StructureError("(a.f)(x) = f(x a) leaves the B-linear maps")
            for k in range(sub.dim):
                action.data[k][i * sub.dim + t] = coords[k]
    module = RelHopfModule(a, comod, action)
    report = validate_rel_hopf_module(module)
    assert report.ok, report.failures()
    ev = Matrix.zeros(field, n.dim, sub.dim)
    for t in range(sub.dim):
        f = vec_to_map(field, n.dim, a.dim, sub.basis.col(t))
        col = f.apply(a.algebra.unit)
        for k in range(n.dim):
            ev.data[k][t] = col[k]
    return BHomModule(module, sub, ev, b, n)


# -- nu and the bullet submodule ------------------------------------------------------


class NuData:
    def __init__(self, nu: Matrix, bullet: Subspace, bhom: BHomModule, coinv: Subspace):
        self.nu = nu  # M -> carrier of _B HOM(A, M^coH)
        self.bullet = bullet
        self.bhom = bhom
        self.coinv = coinv


def nu_and_bullet(m: RelHopfModule, integral_data=None) -> NuData:
    """nu(m)(a) = p(a m); bullet M = ker nu."""
    a = m.comodule_algebra
    field = m.field
    dec = integral_projector(m.comodule, integral_data)  # raises when not cosemisimple
    coinv = dec.invariant_part
    b = coinvariant_subalgebra(a)
    ncoh = b_module_of_coinvariants(b, m)
    bhom = b_hom_from_A(a, b, ncoh)
    cols = []
    for j in range(m.dim):
        ej = [field.one if t == j else field.zero for t in range(m.dim)]
        t = Matrix.zeros(field, ncoh.dim, a.dim)
        for i in range(a.dim):
            am = m.action.apply(_tensor_vec(field, a.algebra.basis_vector(i), ej))
            pam = dec.projector.apply(am)
            coords = coinv.coords(pam)
            assert coords is not None
            for k in range(ncoh.dim):
                t.data[k][i] = coords[k]
        coords = bhom.basis.coords(map_to_vec(t))
        assert coords is not None, "nu(m) is not B-linear"
        cols.append(coords)
    nu = Matrix.from_columns(field, cols) if cols else Matrix.zeros(field, bhom.dim, 0)
    if nu.rows != bhom.dim:
        nu = Matrix.zeros(field, bhom.dim, m.dim)
    bullet = kernel(nu)
    return NuData(nu, bullet, bhom, coinv)


# -- smash product ---------------------------------------------------------------------


class SmashAlgebra:
    """A # H^* on the basis e_i # f_k, index i * dim H + k."""

    def __init__(self, base: ComoduleAlgebra, dual: HopfAlgebra, algebra: Algebra):
        self.base = base
        self.dual = dual
        self.algebra = algebra

    @property
    def dim(self):
        return self.algebra.dim


def smash_product(a: ComoduleAlgebra) -> SmashAlgebra:
    """Multiplication (a # f)(b # g) = a b_0 # (f o L_{b_1}) * g."""
    from hopfcoh.hopf import dual_hopf

    h = a.hopf
    field = a.field
    da, dh = a.dim, h.dim
    d = da * dh
    multh = h.algebra.mult
    comulth = h.comult
    coact = a.comodule.coaction
    mult = [[[field.zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(da):
        for k in range(dh):
            row_idx = i * dh + k
            for j in range(da):
                for l in range(dh):
                    col_idx = j * dh + l
                    target = mult[row_idx][col_idx]
                    for jp in range(da):
                        for t in range(dh):
                            r = coact.data[jp * dh + t][j]
                            if not r:
                                continue
                            prod_a = a.algebra.mult[i][jp]
                            for s in range(dh):
                                mts = multh[t][s][k]
                                if not mts:
                                    continue
                                for c in range(dh):
                                    cc = comulth[c][s][l]
                                    if not cc:
                                        continue
                                    coeff = r * mts * cc
                                    for mm in range(da):
                                        if prod_a[mm]:
                                            target[mm * dh + c] += coeff * prod_a[mm]
    mult = [[field.nrow(row) for row in plane] for plane in mult]
    unit = [field.zero] * d
    for mm in range(da):
        if a.algebra.unit[mm]:
            for c in range(dh):
                if h.counit[c]:
                    unit[mm * dh + c] = a.algebra.unit[mm] * h.counit[c]
    alg = Algebra(field, d, mult, field.nrow(unit))
    report = validate_algebra(alg, "smash")
    assert report.ok, report.failures()
    return SmashAlgebra(a, dual_hopf(h), alg)


def to_smash_module(smash: SmashAlgebra, m: RelHopfModule) -> AlgebraModule:
    """(a # f) . m = a (m_0 f(m_1))."""
    a = smash.base
    field = m.field
    da, dh, dm = a.dim, a.hopf.dim, m.dim
    action = Matrix.zeros(field, dm, smash.dim * dm)
    for i in range(da):
        for k in range(dh):
            for j in range(dm):
                # m_0 f_k(m_1) for m = e_j
                vec = [m.comodule.coaction.data[jp * dh + k][j] for jp in range(dm)]
                out = m.action.apply(_tensor_vec(field, a.algebra.basis_vector(i), vec))
                col = (i * dh + k) * dm + j
                for x in range(dm):
                    action.data[x][col] = out[x]
    mod = AlgebraModule(smash.algebra, dm, action)
    report = validate_module(mod, "smash_module")
    assert report.ok, report.failures()
    return mod


def from_smash_module(smash: SmashAlgebra, mod: AlgebraModule) -> RelHopfModule:
    """Recover the A-action via a # eps and the coaction via 1 # f_k."""
    a = smash.base
    h = a.hopf
    field = mod.field
    da, dh, dm = a.dim, h.dim, mod.dim
    action = Matrix.zeros(field, dm, da * dm)
    for i in range(da):
        vec = [field.zero] * smash.dim
        for c in range(dh):
            if h.counit[c]:
                vec[i * dh + c] = h.counit[c]
        op = mod.act_matrix(vec)
        for j in range(dm):
            for x in range(dm):
                action.data[x][i * dm + j] = op.data[x][j]
    rho = Matrix.zeros(field, dm * dh, dm)
    for k in range(dh):
        vec = [field.zero] * smash.dim
        for mm in range(da):
            if a.algebra.unit[mm]:
                vec[mm * dh + k] = a.algebra.unit[mm]
        theta = mod.act_matrix(vec)
        for j in range(dm):
            for x in range(dm):
                if theta.data[x][j]:
                    rho.data[x * dh + k][j] = theta.data[x][j]
    comod = Comodule(h, dm, rho)
    if not validate_comodule(comod).ok:
        raise StructureError("smash module H^*-action is not counital/coassociative")
    out = RelHopfModule(a, comod, action)
    report = validate_rel_hopf_module(out)
    if not report.ok:
        raise StructureError("smash module does not transport to a relative Hopf module: %s" % report.failures())
    return out


def comodule_as_dual_module(dual: HopfAlgebra, m: Comodule) -> AlgebraModule:
    """Transport a right H-comodule to a left module over H^*: f . m = m_0 f(m_1)."""
    field = m.field
    dh = dual.dim
    dm = m.dim
    action = Matrix.zeros(field, dm, dh * dm)
    for k in range(dh):
        for j in range(dm):
            col = k * dm + j
            for jp in range(dm):
                v = m.coaction.data[jp * dh + k][j]
                if v:
                    action.data[jp][col] = v
    mod = AlgebraModule(dual.algebra, dm, action)
    report = validate_module(mod, "dual_module_transport")
    assert report.ok, report.failures()
    return mod


# -- tensor over A -----------------------------------------------------------------------


def tensor_over_A(m: RelHopfModule, n: RelHopfModule) -> RelHopfModule:
    """M (x)_A N for commutative A, with the multiplied coaction."""
    a = m.comodule_algebra
    if not a.algebra.is_commutative():
        raise HypothesisError("A not commutative")
    field = m.field
    h = m.hopf
    dm, dn, da = m.dim, n.dim, a.dim
    ambient = dm * dn
    rel_vecs = []
    for i in range(da):
        lam = _left_action_operator(m, a.algebra.basis_vector(i))
        lan = _left_action_operator(n, a.algebra.basis_vector(i))
        for j in range(dm):
            for t in range(dn):
                v = [field.zero] * ambient
                for k in range(dm):
                    if lam.data[k][j]:
                        v[k * dn + t] += lam.data[k][j]
                for k in range(dn):
                    if lan.data[k][t]:
                        v[j * dn + k] -= lan.data[k][t]
                rel_vecs.append(field.nrow(v))
    relations = Subspace.from_spanning(field, ambient, rel_vecs)
    tens = tensor_comodule(m.comodule, n.comodule)
    reps, proj = quotient(ambient, relations)
    idh = Matrix.identity(field, h.dim)
    ida = Matrix.identity(field, da)
    if relations.dim and not (kronecker(proj, idh) @ tens.coaction @ relations.basis).is_zero():
        raise StructureError("coaction on M (x)_A N ill-defined")
    rho = kronecker(proj, idh) @ tens.coaction @ reps
    act_up = Matrix.zeros(field, ambient, da * ambient)
    for i in range(da):
        lam = _left_action_operator(m, a.algebra.basis_vector(i))
        block = kronecker(lam, Matrix.identity(field, dn))
        for col in range(ambient):
            for row in range(ambient):
                v = block.data[row][col]
                if v:
                    act_up.data[row][i * ambient + col] = v
    if relations.dim and not (proj @ act_up @ kronecker(ida, relations.basis)).is_zero():
        raise StructureError("action on M (x)_A N ill-defined")
    action = proj @ act_up @ kronecker(ida, reps)
    out = RelHopfModule(a, Comodule(h, proj.rows, rho), action)
    report = validate_rel_hopf_module(out)
    assert report.ok, report.failures()
    return out


# -- injective cogenerator fixtures ----------------------------------------------------


def dual_regular_module(alg: Algebra) -> AlgebraModule:
    """k-dual of the right regular module: the canonical injective cogenerator."""
    field = alg.field
    d = alg.dim
    action = Matrix.zeros(field, d, d * d)
    for i in range(d):
        for bb in range(d):
            for x in range(d):
                v = alg.mult[x][i][bb]
                if v:
                    action.data[x][i * d + bb] = v
    return AlgebraModule(alg, d, action)


def cofree_rel_module(a: ComoduleAlgebra, i_mod: AlgebraModule) -> RelHopfModule:
    """I (x) H with action a . (i (x) h) = a_0 i (x) a_1 h and coaction id (x) delta."""
    assert i_mod.algebra.mult == a.algebra.mult
    field = a.field
    h = a.hopf
    da, di, dh = a.dim, i_mod.dim, h.dim
    dim = di * dh
    coaction = kronecker(Matrix.identity(field, di), h.comult_matrix())
    action = Matrix.zeros(field, dim, da * dim)
    for i in range(da):
        rho_a = [
            [a.comodule.coaction.data[ap * dh + t][i] for t in range(dh)] for ap in range(da)
        ]
        for x in range(di):
            for k in range(dh):
                col = i * dim + (x * dh + k)
                for ap in range(da):
                    for t in range(dh):
                        c = rho_a[ap][t]
                        if not c:
                            continue
                        ai = i_mod.action.col(ap * di + x)
                        th = h.algebra.mult[t][k]
                        for xx in range(di):
                            if ai[xx]:
                                for kk in range(dh):
                                    if th[kk]:
                                        action.data[xx * dh + kk][col] += c * ai[xx] * th[kk]
    action.data = [field.nrow(r) for r in action.data]
    out = RelHopfModule(a, Comodule(h, dim, coaction), action)
    report = validate_rel_hopf_module(out)
    assert report.ok, report.failures()
    return out
