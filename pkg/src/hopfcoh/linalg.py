"""Exact dense linear algebra over Q and GF(p).

Scalars are `fractions.Fraction` over Q and canonical integers 0..p-1 over
GF(p); no floating point anywhere. Matrices are dense, row-major lists of
lists. Subspaces are stored in reduced column echelon form, so equality of
subspaces is literal equality of their basis matrices.

Tensor products use one global basis ordering: lexicographic with the LEFT
factor slowest, i.e. the basis vector e_i (x) e_j of V (x) W has index
i * dim(W) + j.  kronecker() and every higher-level module follow it.
"""

from __future__ import annotations

from fractions import Fraction


class FieldMismatchError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """The rationals (characteristic 0) or a prime field GF(p)."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError("characteristic must be 0 or a prime, got %r" % (characteristic,))
        self.characteristic = characteristic

    @property
    def kind(self) -> str:
        return "Q" if self.characteristic == 0 else "GF"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def coerce(self, x):
        """Coerce an int, string ("-3", "3/2") or Fraction into the field.

        Integral rationals are stored as plain ints (exact, and vastly faster
        in the dense kernels); genuine fractions stay Fraction.
        """
        p = self.characteristic
        if p == 0:
            if type(x) is int:
                return x
            f = Fraction(x)
            return f.numerator if f.denominator == 1 else f
        if isinstance(x, str):
            if "/" in x:
                num, den = x.split("/", 1)
                return (int(num) * self.inv(int(den) % p)) % p
            x = int(x)
        elif isinstance(x, Fraction):
            if x.denominator != 1:
                return (x.numerator * self.inv(x.denominator % p)) % p
            x = x.numerator
        return x % p

    def inv(self, x):
        p = self.characteristic
        if p == 0:
            if x == 0:
                raise ZeroDivisionError("inverse of 0")
            f = 1 / Fraction(x)
            return f.numerator if f.denominator == 1 else f
        x %= p
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % p)
        return pow(x, p - 2, p)

    def nrow(self, row):
        """Normalize a row after raw integer/Fraction arithmetic."""
        p = self.characteristic
        if p == 0:
            return row
        return [x % p for x in row]

    def fmt(self, x) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Field) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else "GF(%d)" % self.characteristic


QQ = Field(0)

_gf_cache: dict[int, Field] = {}


def GF(p: int) -> Field:
    if p not in _gf_cache:
        _gf_cache[p] = Field(p)
    return _gf_cache[p]


class Matrix:
    """Dense matrix over an exact field. Immutable once used in products."""

    __slots__ = ("field", "rows", "cols", "data", "_nz")

    def __init__(self, field: Field, data, rows: int | None = None, cols: int | None = None):
        self.field = field
        self.data = data
        self.rows = len(data) if rows is None else rows
        self.cols = (len(data[0]) if data else 0) if cols is None else cols
        self._nz = None
        assert all(len(r) == self.cols for r in data)

    def row_nonzeros(self):
        """Cached (col, value) pairs per row; rows must not change afterwards."""
        if self._nz is None:
            self._nz = [tuple((k, a) for k, a in enumerate(row) if a) for row in self.data]
        return self._nz

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        data = [[z] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = o
        return cls(field, data, n, n)

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Matrix":
        data = [[field.coerce(x) for x in r] for r in rows]
        return cls(field, data)

    @classmethod
    def from_flat(cls, field: Field, rows: int, cols: int, flat) -> "Matrix":
        if len(flat) != rows * cols:
            raise ValueError("expected %d entries, got %d" % (rows * cols, len(flat)))
        data = [[field.coerce(flat[r * cols + c]) for c in range(cols)] for r in range(rows)]
        return cls(field, data, rows, cols)

    @classmethod
    def column(cls, field: Field, vec) -> "Matrix":
        return cls(field, [[field.coerce(x)] for x in vec], len(vec), 1)

    @classmethod
    def row_vector(cls, field: Field, vec) -> "Matrix":
        return cls(field, [[field.coerce(x) for x in vec]], 1, len(vec))

    @classmethod
    def from_columns(cls, field: Field, cols) -> "Matrix":
        if not cols:
            return cls(field, [], 0, 0)
        n = len(cols[0])
        data = [[field.coerce(c[i]) for c in cols] for i in range(n)]
        return cls(field, data, n, len(cols))

    # -- basic ops ---------------------------------------------------------

    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError("matrices over different fields")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        assert self.rows == other.rows and self.cols == other.cols
        nrow = self.field.nrow
        return Matrix(
            self.field,
            [nrow([a + b for a, b in zip(ra, rb)]) for ra, rb in zip(self.data, other.data)],
            self.rows,
            self.cols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        assert self.rows == other.rows and self.cols == other.cols
        nrow = self.field.nrow
        return Matrix(
            self.field,
            [nrow([a - b for a, b in zip(ra, rb)]) for ra, rb in zip(self.data, other.data)],
            self.rows,
            self.cols,
        )

    def __neg__(self) -> "Matrix":
        nrow = self.field.nrow
        return Matrix(self.field, [nrow([-a for a in r]) for r in self.data], self.rows, self.cols)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        nrow = self.field.nrow
        return Matrix(self.field, [nrow([c * a for a in r]) for r in self.data], self.rows, self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch: %dx%d @ %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        zero = self.field.zero
        nrow = self.field.nrow
        bdata = other.data
        p = other.cols
        out = []
        for arow in self.row_nonzeros():
            acc = [zero] * p
            for k, a in arow:
                brow = bdata[k]
                if a == 1:
                    acc = [x + y for x, y in zip(acc, brow)]
                else:
                    acc = [x + a * y for x, y in zip(acc, brow)]
            out.append(nrow(acc))
        return Matrix(self.field, out, self.rows, p)

    def apply(self, vec):
        """Matrix times column vector (a plain list)."""
        assert len(vec) == self.cols
        zero = self.field.zero
        nrow = self.field.nrow
        out = []
        for arow in self.row_nonzeros():
            s = zero
            for k, a in arow:
                x = vec[k]
                if x:
                    s += a * x
            out.append(s)
        return nrow(out)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def is_zero(self) -> bool:
        return all(not x for r in self.data for x in r)

    def transpose(self) -> "Matrix":
        data = [[self.data[r][c] for r in range(self.rows)] for c in range(self.cols)]
        return Matrix(self.field, data, self.cols, self.rows)

    def col(self, j: int):
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def to_flat(self):
        return [x for r in self.data for x in r]

    def copy_data(self):
        return [list(r) for r in self.data]

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        data = [[self.data[i][j] for j in col_idx] for i in row_idx]
        return Matrix(self.field, data, len(row_idx), len(col_idx))

    @classmethod
    def hstack(cls, mats) -> "Matrix":
        mats = list(mats)
        assert mats
        rows = mats[0].rows
        assert all(m.rows == rows for m in mats)
        data = [sum((m.data[i] for m in mats), []) for i in range(rows)]
        return cls(mats[0].field, data, rows, sum(m.cols for m in mats))

    @classmethod
    def vstack(cls, mats) -> "Matrix":
        mats = list(mats)
        assert mats
        cols = mats[0].cols
        assert all(m.cols == cols for m in mats)
        data = [list(r) for m in mats for r in m.data]
        return cls(mats[0].field, data, sum(m.rows for m in mats), cols)

    def __repr__(self):
        return "Matrix(%r, %dx%d)" % (self.field, self.rows, self.cols)

    def pretty(self) -> str:
        fmt = self.field.fmt
        return "\n".join("[" + " ".join(fmt(x) for x in r) + "]" for r in self.data)


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Tensor product of linear maps in the global (left slowest) ordering."""
    if a.field != b.field:
        raise FieldMismatchError("kronecker over different fields")
    zero = a.field.zero
    nrow = a.field.nrow
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    out = [[zero] * cols for _ in range(rows)]
    for ia, arow in enumerate(a.data):
        for ja, av in enumerate(arow):
            if not av:
                continue
            rbase = ia * b.rows
            cbase = ja * b.cols
            for ib, brow in enumerate(b.data):
                orow = out[rbase + ib]
                for jb, bv in enumerate(brow):
                    if bv:
                        orow[cbase + jb] = av * bv
    return Matrix(a.field, [nrow(r) for r in out], rows, cols)


def swap_matrix(field: Field, d1: int, d2: int) -> Matrix:
    """The flip V (x) W -> W (x) V on basis vectors, as a permutation matrix."""
    m = Matrix.zeros(field, d1 * d2, d1 * d2)
    one = field.one
    for i in range(d1):
        for j in range(d2):
            m.data[j * d1 + i][i * d2 + j] = one
    return m


# -- echelon forms ---------------------------------------------------------

# above this many entries, elimination switches to dict-of-column rows; the
# pivot order (and hence every canonical form) is identical on both paths
_SPARSE_THRESHOLD = 40_000


def sparse_rref(rows, ncols: int, field: Field):
    """Gauss-Jordan over dict rows {col: nonzero value}; returns pivot columns."""
    p = field.characteristic
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if c in rows[i]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        pv = prow[c]
        if pv != 1:
            inv = field.inv(pv)
            if p:
                for k in prow:
                    prow[k] = (inv * prow[k]) % p
            else:
                for k in prow:
                    prow[k] = inv * prow[k]
        items = list(prow.items())
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row.get(c)
            if not f:
                continue
            if p:
                for k, v in items:
                    nv = (row.get(k, 0) - f * v) % p
                    if nv:
                        row[k] = nv
                    elif k in row:
                        del row[k]
            else:
                for k, v in items:
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    elif k in row:
                        del row[k]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _dict_rows(m: Matrix):
    return [dict(row) for row in m.row_nonzeros()]


def rref_in_place(data, field: Field):
    """Gauss-Jordan on a list-of-lists; returns the pivot column list."""
    rows = len(data)
    cols = len(data[0]) if rows else 0
    nrow = field.nrow
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if data[i][c]:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            data[r], data[pr] = data[pr], data[r]
        pv = data[r][c]
        if pv != 1:
            inv = field.inv(pv)
            data[r] = nrow([inv * x for x in data[r]])
        prow = data[r]
        for i in range(rows):
            if i != r and data[i][c]:
                f = data[i][c]
                data[i] = nrow([x - f * y for x, y in zip(data[i], prow)])
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def rank(m: Matrix) -> int:
    if m.rows * m.cols > _SPARSE_THRESHOLD:
        return len(sparse_rref(_dict_rows(m), m.cols, m.field))
    data = m.copy_data()
    return len(rref_in_place(data, m.field))


def kernel_basis(m: Matrix):
    """Canonical basis vectors (lists) of the null space of m."""
    field = m.field
    zero, one = field.zero, field.one
    p = field.characteristic
    if m.rows * m.cols > _SPARSE_THRESHOLD:
        rows = _dict_rows(m)
        pivots = sparse_rref(rows, m.cols, field)
        entry = lambda r, f: rows[r].get(f, zero)
    else:
        data = m.copy_data()
        pivots = rref_in_place(data, field)
        entry = lambda r, f: data[r][f]
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [zero] * m.cols
        v[f] = one
        for r, c in enumerate(pivots):
            x = entry(r, f)
            v[c] = (-x) % p if p else -x
        basis.append(v)
    return basis


def solve(m: Matrix, rhs):
    """One solution of m x = rhs (free variables set to 0), or None."""
    if len(rhs) != m.rows:
        raise ValueError("rhs length %d != rows %d" % (len(rhs), m.rows))
    x = solve_matrix(m, Matrix.column(m.field, rhs))
    return None if x is None else x.col(0)

def solve_matrix(m: Matrix, rhs: Matrix):
    """Solve m X = rhs columnwise; None if any column is inconsistent."""
    if m.field != rhs.field:
        raise FieldMismatchError("solve over different fields")
    if rhs.rows != m.rows:
        raise ValueError("rhs rows %d != rows %d" % (rhs.rows, m.rows))
    field = m.field
    zero = field.zero
    total_cols = m.cols + rhs.cols
    if m.rows * total_cols > _SPARSE_THRESHOLD:
        rows = []
        for mr, rr in zip(m.row_nonzeros(), rhs.row_nonzeros()):
            row = dict(mr)
            for j, v in rr:
                row[m.cols + j] = v
            rows.append(row)
        pivots = sparse_rref(rows, total_cols, field)
        for c in pivots:
            if c >= m.cols:
                return None
        out = [[zero] * rhs.cols for _ in range(m.cols)]
        for r, c in enumerate(pivots):
            row = rows[r]
            orow = out[c]
            for j, v in row.items():
                if j >= m.cols:
                    orow[j - m.cols] = v
        return Matrix(field, out, m.cols, rhs.cols)
    data = [mr + rr for mr, rr in zip(m.copy_data(), rhs.copy_data())]
    if not data:
        return Matrix.zeros(field, m.cols, rhs.cols)
    pivots = rref_in_place(data, field)
    # pivots beyond the coefficient block mean inconsistency
    for c in pivots:
        if c >= m.cols:
            return None
    out = [[zero] * rhs.cols for _ in range(m.cols)]
    for r, c in enumerate(pivots):
        out[c] = data[r][m.cols:]
    return Matrix(field, out, m.cols, rhs.cols)


def rcef(m: Matrix) -> Matrix:
    """Reduced column echelon form; columns are the canonical spanning set."""
    field = m.field
    if m.rows * m.cols > _SPARSE_THRESHOLD:
        rows = [{} for _ in range(m.cols)]
        for i, row_nz in enumerate(m.row_nonzeros()):
            for j, v in row_nz:
                rows[j][i] = v
        sparse_rref(rows, m.rows, field)
        zero = field.zero
        kept = [row for row in rows if row]
        data = [[zero] * m.rows for _ in kept]
        for r, row in enumerate(kept):
            drow = data[r]
            for j, v in row.items():
                drow[j] = v
        if not data:
            return Matrix.zeros(field, m.rows, 0)
        return Matrix(field, data, len(data), m.rows).transpose()
    data = m.transpose().copy_data()
    rref_in_place(data, field)
    data = [row for row in data if any(row)]
    if not data:
        return Matrix.zeros(field, m.rows, 0)
    return Matrix(field, data, len(data), m.rows).transpose()


class Subspace:
    """A subspace of k^n, kept as a reduced-column-echelon basis matrix."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Matrix):
        assert basis.rows == ambient_dim
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def from_spanning(cls, field: Field, ambient_dim: int, vectors) -> "Subspace":
        vectors = list(vectors)
        if not vectors:
            return cls(ambient_dim, Matrix.zeros(field, ambient_dim, 0))
        m = Matrix.from_columns(field, vectors)
        return cls(ambient_dim, rcef(m))

    @classmethod
    def from_matrix_columns(cls, m: Matrix) -> "Subspace":
        return cls(m.rows, rcef(m))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(field, ambient_dim, 0))

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(field, ambient_dim))

    @property
    def field(self) -> Field:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.cols

    def contains(self, vec) -> bool:
        return self.coords(vec) is not None

    def coords(self, vec):
        """Coordinates of vec in the canonical basis, or None."""
        return solve(self.basis, list(vec))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(other.basis.col(j)) for j in range(other.dim))

    def sum_with(self, other: "Subspace") -> "Subspace":
        assert self.ambient_dim == other.ambient_dim
        if self.dim == 0:
            return other
        if other.dim == 0:
            return self
        return Subspace.from_matrix_columns(Matrix.hstack([self.basis, other.basis]))

    def intersect(self, other: "Subspace") -> "Subspace":
        assert self.ambient_dim == other.ambient_dim
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        stacked = Matrix.hstack([self.basis, -other.basis])
        vecs = [self.basis.apply(k[: self.dim]) for k in kernel_basis(stacked)]
        return Subspace.from_spanning(self.field, self.ambient_dim, vecs)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim %d of k^%d)" % (self.dim, self.ambient_dim)


def kernel(m: Matrix) -> Subspace:
    return Subspace.from_spanning(m.field, m.cols, kernel_basis(m))


def column_space(m: Matrix) -> Subspace:
    return Subspace.from_matrix_columns(m)


def quotient(ambient_dim: int, sub: Subspace):
    """Complement representatives and projection for k^n / sub.

    Returns (reps, projection): reps' columns are standard basis vectors
    spanning a complement, projection maps k^n onto quotient coordinates with
    kernel exactly sub, and projection @ reps = identity.
    """
    if sub.ambient_dim != ambient_dim:
        raise ValueError("subspace ambient %d != %d" % (sub.ambient_dim, ambient_dim))
    field = sub.field
    # pivot rows of the echelon basis; complement = remaining standard vectors
    pivot_rows = []
    for j in range(sub.dim):
        col = sub.basis.col(j)
        for i in range(ambient_dim):
            if col[i]:
                pivot_rows.append(i)
                break
    pivot_set = set(pivot_rows)
    rep_rows = [i for i in range(ambient_dim) if i not in pivot_set]
    q = len(rep_rows)
    reps = Matrix.zeros(field, ambient_dim, q)
    one = field.one
    for j, i in enumerate(rep_rows):
        reps.data[i][j] = one
    if sub.dim == 0:
        return reps, Matrix.identity(field, ambient_dim)
    # invert [basis | reps] and keep the last q rows
    change = Matrix.hstack([sub.basis, reps])
    inv = solve_matrix(change, Matrix.identity(field, ambient_dim))
    assert inv is not None
    projection = Matrix(field, inv.data[sub.dim:], q, ambient_dim)
    return reps, projection


def invert(m: Matrix):
    """Inverse matrix, or None when singular."""
    if m.rows != m.cols:
        return None
    inv = solve_matrix(m, Matrix.identity(m.field, m.rows))
    if inv is None:
        return None
    if (m @ inv) != Matrix.identity(m.field, m.rows):
        return None
    return inv
