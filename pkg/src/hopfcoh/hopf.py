"""Finite-dimensional algebras, coalgebras and Hopf algebras by structure constants.

Conventions, fixed once for the whole package:
  mult[i][j][k]    e_i * e_j = sum_k mult[i][j][k] e_k
  comult[i][j][k]  delta(e_i) = sum_{j,k} comult[i][j][k] e_j (x) e_k
  unit             coordinates of the identity element
  counit           covector of counit values on the basis
Antipodes are stored as matrices whose column b is the image of e_b.
"""

from __future__ import annotations

from hopfcoh.linalg import Field, Matrix, Subspace, invert, kernel, solve

AXIOMS = (
    "assoc",
    "unit",
    "coassoc",
    "counit",
    "bialgebra",
    "antipode",
    "antipode_bijective",
)


class NoAntipodeError(ValueError):
    pass


class ValidationReport:
    """Per-axiom pass/fail listing with basis-index witnesses on failure."""

    def __init__(self, subject: str):
        self.subject = subject
        self.entries: list[tuple[str, bool, tuple | None]] = []

    def add(self, axiom: str, ok: bool, witness=None):
        self.entries.append((axiom, ok, None if ok else tuple(witness or ())))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.entries)

    def failures(self):
        return [(axiom, witness) for axiom, ok, witness in self.entries if not ok]

    def failed_axioms(self):
        return [axiom for axiom, ok, _ in self.entries if not ok]

    def as_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "axioms": [
                {"axiom": a, "ok": ok, "witness": list(w) if w else None}
                for a, ok, w in self.entries
            ],
        }

    def __repr__(self):
        state = "ok" if self.ok else "FAILED %s" % (self.failed_axioms(),)
        return "ValidationReport(%s: %s)" % (self.subject, state)


def _coerce_cube(field: Field, dim: int, cube):
    if len(cube) != dim or any(len(plane) != dim for plane in cube) or any(
        len(row) != dim for plane in cube for row in plane
    ):
        raise ValueError("structure cube is not %d^3" % dim)
    return [[[field.coerce(x) for x in row] for row in plane] for plane in cube]


def _coerce_vec(field: Field, dim: int, vec):
    if len(vec) != dim:
        raise ValueError("vector length %d != dim %d" % (len(vec), dim))
    return [field.coerce(x) for x in vec]


class Algebra:
    """Associative unital algebra given by structure constants."""

    def __init__(self, field: Field, dim: int, mult, unit):
        self.field = field
        self.dim = dim
        self.mult = _coerce_cube(field, dim, mult)
        self.unit = _coerce_vec(field, dim, unit)

    def mult_matrix(self) -> Matrix:
        """The multiplication as a matrix H (x) H -> H."""
        d = self.dim
        m = Matrix.zeros(self.field, d, d * d)
        for i in range(d):
            for j in range(d):
                col = i * d + j
                for k in range(d):
                    m.data[k][col] = self.mult[i][j][k]
        return m

    def unit_col(self) -> Matrix:
        return Matrix.column(self.field, self.unit)

    def multiply(self, u, v):
        d = self.dim
        out = [self.field.zero] * d
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                row = self.mult[i][j]
                for k in range(d):
                    if row[k]:
                        out[k] += ab * row[k]
        return self.field.nrow(out)

    def left_mult_matrix(self, vec) -> Matrix:
        """L_a with a given by coordinates: column j is a * e_j."""
        d = self.dim
        m = Matrix.zeros(self.field, d, d)
        for i, a in enumerate(vec):
            if not a:
                continue
            for j in range(d):
                row = self.mult[i][j]
                for k in range(d):
                    if row[k]:
                        m.data[k][j] += a * row[k]
        m.data = [self.field.nrow(r) for r in m.data]
        return m

    def right_mult_matrix(self, vec) -> Matrix:
        """R_a: column i is e_i * a."""
        d = self.dim
        m = Matrix.zeros(self.field, d, d)
        for j, a in enumerate(vec):
            if not a:
                continue
            for i in range(d):
                row = self.mult[i][j]
                for k in range(d):
                    if row[k]:
                        m.data[k][i] += a * row[k]
        m.data = [self.field.nrow(r) for r in m.data]
        return m

    def basis_vector(self, i):
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def is_commutative(self) -> bool:
        return all(
            self.mult[i][j] == self.mult[j][i]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def generators(self):
        """Greedy basis indices generating the algebra (with 1); cached.

        Linear conditions that are multiplicative in the algebra element only
        need to be imposed on these.
        """
        cached = getattr(self, "_gens", None)
        if cached is not None:
            return cached
        from hopfcoh.linalg import Subspace

        span = Subspace.from_spanning(self.field, self.dim, [self.unit])
        gens = []
        for i in range(self.dim):
            e = self.basis_vector(i)
            if span.contains(e):
                continue
            gens.append(i)
            vectors = [span.basis.col(j) for j in range(span.dim)] + [e]
            while True:
                products = [
                    self.multiply(u, v) for u in vectors for v in vectors
                ]
                bigger = Subspace.from_spanning(self.field, self.dim, vectors + products)
                if bigger.dim == len(vectors):
                    break
                vectors = [bigger.basis.col(j) for j in range(bigger.dim)]
            span = Subspace.from_spanning(self.field, self.dim, vectors)
            if span.dim == self.dim:
                break
        self._gens = gens
        return gens

    def opposite(self) -> "Algebra":
        d = self.dim
        mult = [[self.mult[j][i] for j in range(d)] for i in range(d)]
        return Algebra(self.field, d, mult, self.unit)


def validate_algebra(alg: Algebra, subject: str = "algebra") -> ValidationReport:
    report = ValidationReport(subject)
    d = alg.dim
    f = alg.field
    witness = None
    for i in range(d):
        if witness:
            break
        for j in range(d):
            if witness:
                break
            for k in range(d):
                lhs = alg.multiply(alg.multiply(alg.basis_vector(i), alg.basis_vector(j)), alg.basis_vector(k))
                rhs = alg.multiply(alg.basis_vector(i), alg.multiply(alg.basis_vector(j), alg.basis_vector(k)))
                if lhs != rhs:
                    witness = (i, j, k)
                    break
    report.add("assoc", witness is None, witness)
    witness = None
    for j in range(d):
        e = alg.basis_vector(j)
        if alg.multiply(alg.unit, e) != e or alg.multiply(e, alg.unit) != e:
            witness = (j,)
            break
    report.add("unit", witness is None, witness)
    return report


class HopfAlgebra:
    """Hopf algebra with bijective antipode, all structure maps as constants."""

    def __init__(self, algebra: Algebra, comult, counit, antipode: Matrix, antipode_inv: Matrix | None = None):
        self.algebra = algebra
        f = algebra.field
        d = algebra.dim
        self.comult = _coerce_cube(f, d, comult)
        self.counit = _coerce_vec(f, d, counit)
        assert antipode.rows == d and antipode.cols == d
        self.antipode = antipode
        if antipode_inv is None:
            antipode_inv = invert(antipode)
            if antipode_inv is None:
                raise NoAntipodeError("antipode is not bijective")
        self.antipode_inv = antipode_inv

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def unit(self):
        return self.algebra.unit

    def comult_matrix(self) -> Matrix:
        """delta as a matrix H -> H (x) H."""
        d = self.dim
        m = Matrix.zeros(self.field, d * d, d)
        for i in range(d):
            for a in range(d):
                for b in range(d):
                    if self.comult[i][a][b]:
                        m.data[a * d + b][i] = self.comult[i][a][b]
        return m

    def counit_matrix(self) -> Matrix:
        return Matrix.row_vector(self.field, self.counit)

    def counit_value(self, vec):
        s = self.field.zero
        for e, x in zip(self.counit, vec):
            if e and x:
                s += e * x
        return self.field.nrow([s])[0]


def make_hopf(field: Field, dim: int, mult, unit, comult, counit, antipode=None) -> HopfAlgebra:
    """Assemble a HopfAlgebra, solving for the antipode when not supplied."""
    alg = Algebra(field, dim, mult, unit)
    com = _coerce_cube(field, dim, comult)
    cou = _coerce_vec(field, dim, counit)
    if antipode is None:
        s = solve_antipode(alg, com, cou)
    elif isinstance(antipode, Matrix):
        s = antipode
    else:
        s = Matrix.from_rows(field, antipode)
    return HopfAlgebra(alg, com, cou, s)


def solve_antipode(alg: Algebra, comult, counit) -> Matrix:
    """Solve the two antipode identities as a linear system in the entries of S."""
    d = alg.dim
    f = alg.field
    n = d * d  # unknowns s[c][a], index c*d + a
    rows = []
    rhs = []
    for i in range(d):
        for k in range(d):
            left = [f.zero] * n
            right = [f.zero] * n
            for a in range(d):
                for b in range(d):
                    cab = comult[i][a][b]
                    if not cab:
                        continue
                    for c in range(d):
                        # S(e_a) e_b and e_a S(e_b)
                        if alg.mult[c][b][k]:
                            left[c * d + a] += cab * alg.mult[c][b][k]
                        if alg.mult[a][c][k]:
                            right[c * d + b] += cab * alg.mult[a][c][k]
            target = counit[i] * alg.unit[k]
            rows.append(f.nrow(left))
            rhs.append(target)
            rows.append(f.nrow(right))
            rhs.append(target)
    sol = solve(Matrix(f, rows, len(rows), n), f.nrow(rhs))
    if sol is None:
        raise NoAntipodeError("the antipode equations are inconsistent")
    s = Matrix.zeros(f, d, d)
    for c in range(d):
        for a in range(d):
            s.data[c][a] = sol[c * d + a]
    return s


def validate_hopf(h: HopfAlgebra, subject: str = "hopf") -> ValidationReport:
    """Check every Hopf axiom, reporting basis-index witnesses on failure."""
    d = h.dim
    f = h.field
    alg = h.algebra
    report = validate_algebra(alg, subject)

    # coassociativity: (delta (x) id) delta = (id (x) delta) delta on e_i
    witness = None
    c = h.comult
    for i in range(d):
        ok = True
        for k1 in range(d):
            for k2 in range(d):
                for k3 in range(d):
                    lhs = sum(c[i][m][k3] * c[m][k1][k2] for m in range(d))
                    rhs = sum(c[i][k1][m] * c[m][k2][k3] for m in range(d))
                    if f.nrow([lhs - rhs])[0] != f.zero:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            witness = (i,)
            break
    report.add("coassoc", witness is None, witness)

    # counit law on e_i
    witness = None
    for i in range(d):
        left = [f.zero] * d
        right = [f.zero] * d
        for a in range(d):
            for b in range(d):
                if c[i][a][b]:
                    left[b] += h.counit[a] * c[i][a][b]
                    right[a] += h.counit[b] * c[i][a][b]
        e_i = alg.basis_vector(i)
        if f.nrow(left) != e_i or f.nrow(right) != e_i:
            witness = (i,)
            break
    report.add("counit", witness is None, witness)

    # bialgebra compatibility: delta and counit are algebra maps
    witness = None
    for i in range(d):
        if witness:
            break
        for j in range(d):
            # delta(e_i e_j) vs delta(e_i) delta(e_j)
            lhs = [[f.zero] * d for _ in range(d)]
            for k in range(d):
                if alg.mult[i][j][k]:
                    for a in range(d):
                        for b in range(d):
                            if c[k][a][b]:
                                lhs[a][b] += alg.mult[i][j][k] * c[k][a][b]
            rhs = [[f.zero] * d for _ in range(d)]
            for a1 in range(d):
                for b1 in range(d):
                    if not c[i][a1][b1]:
                        continue
                    for a2 in range(d):
                        for b2 in range(d):
                            coeff = c[i][a1][b1] * c[j][a2][b2]
                            if not coeff:
                                continue
                            for a in range(d):
                                if alg.mult[a1][a2][a]:
                                    for b in range(d):
                                        if alg.mult[b1][b2][b]:
                                            rhs[a][b] += coeff * alg.mult[a1][a2][a] * alg.mult[b1][b2][b]
            if [f.nrow(r) for r in lhs] != [f.nrow(r) for r in rhs]:
                witness = (i, j)
                break
            eps_prod = sum(alg.mult[i][j][k] * h.counit[k] for k in range(d))
            if f.nrow([eps_prod - h.counit[i] * h.counit[j]])[0] != f.zero:
                witness = (i, j)
                break
    if witness is None:
        # delta(1) = 1 (x) 1 and eps(1) = 1
        delta_unit = [[f.zero] * d for _ in range(d)]
        for i in range(d):
            if alg.unit[i]:
                for a in range(d):
                    for b in range(d):
                        if c[i][a][b]:
                            delta_unit[a][b] += alg.unit[i] * c[i][a][b]
        expect = [[f.zero] * d for _ in range(d)]
        for a in range(d):
            for b in range(d):
                expect[a][b] = alg.unit[a] * alg.unit[b]
        if [f.nrow(r) for r in delta_unit] != [f.nrow(r) for r in expect]:
            witness = ()
        elif h.counit_value(alg.unit) != f.one:
            witness = ()
    report.add("bialgebra", witness is None, witness)

    # antipode identities on e_i
    witness = None
    s = h.antipode
    for i in range(d):
        left = [f.zero] * d
        right = [f.zero] * d
        for a in range(d):
            for b in range(d):
                if not c[i][a][b]:
                    continue
                s_a = s.col(a)
                s_b = s.col(b)
                for k, v in enumerate(alg.multiply(s_a, alg.basis_vector(b))):
                    left[k] += c[i][a][b] * v
                for k, v in enumerate(alg.multiply(alg.basis_vector(a), s_b)):
                    right[k] += c[i][a][b] * v
        expect = f.nrow([h.counit[i] * u for u in alg.unit])
        if f.nrow(left) != expect or f.nrow(right) != expect:
            witness = (i,)
            break
    report.add("antipode", witness is None, witness)

    ok = invert(h.antipode) == h.antipode_inv and h.antipode_inv is not None
    report.add("antipode_bijective", ok, () if not ok else None)
    return report


def dual_hopf(h: HopfAlgebra) -> HopfAlgebra:
    """The dual Hopf algebra on the dual basis: all structure maps transpose."""
    d = h.dim
    mult = [[[h.comult[k][i][j] for k in range(d)] for j in range(d)] for i in range(d)]
    unit = list(h.counit)
    comult = [[[h.algebra.mult[j][k][i] for k in range(d)] for j in range(d)] for i in range(d)]
    counit = list(h.algebra.unit)
    alg = Algebra(h.field, d, mult, unit)
    return HopfAlgebra(alg, comult, counit, h.antipode.transpose(), h.antipode_inv.transpose())


class IntegralData:
    """Left integrals in H^*: the solution space of f * phi = f(1) phi."""

    def __init__(self, integral_space: Subspace, normalized, cosemisimple: bool):
        self.integral_space = integral_space
        self.normalized = normalized
        self.cosemisimple = cosemisimple

    def __repr__(self):
        return "IntegralData(dim %d, cosemisimple=%s)" % (self.integral_space.dim, self.cosemisimple)


def integrals(h: HopfAlgebra) -> IntegralData:
    """Solve the left-integral equations in H^* and normalize when possible.

    phi is stored by its values on the basis of H.  The defining condition,
    for every dual basis functional f_i:  (f_i * phi)(e_k) = f_i(1) phi(e_k).
    """
    d = h.dim
    f = h.field
    rows = []
    for i in range(d):
        for k in range(d):
            row = [f.zero] * d
            for b in range(d):
                if h.comult[k][i][b]:
                    row[b] += h.comult[k][i][b]
            row[k] -= h.unit[i]
            rows.append(f.nrow(row))
    space = kernel(Matrix(f, rows, len(rows), d))
    normalized = None
    for j in range(space.dim):
        col = space.basis.col(j)
        value = f.nrow([sum(u * x for u, x in zip(h.unit, col))])[0]
        if value:
            inv = f.inv(value)
            normalized = f.nrow([inv * x for x in col])
            break
    return IntegralData(space, normalized, normalized is not None)


def convolve(h: HopfAlgebra, u, v):
    """Convolution product in H^* of functionals given by basis values."""
    d = h.dim
    f = h.field
    out = [f.zero] * d
    for k in range(d):
        s = f.zero
        for a in range(d):
            for b in range(d):
                if h.comult[k][a][b]:
                    s += h.comult[k][a][b] * u[a] * v[b]
        out[k] = s
    return f.nrow(out)
