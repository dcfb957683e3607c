"""Dense exact matrices and the linear algebra the rest of the package needs.

``Mat`` is square and immutable.  Rectangular systems (stacked centralizer
equations, Krylov matrices) go through the list-of-rows helpers ``rref`` and
``nullspace``, which follow one convention everywhere: leftmost pivot,
pivot normalized to 1, fully reduced.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

from .errors import DimensionMismatch, DimensionTooLarge, FieldMismatch, SingularMatrix
from .fields import Field, PrimeField, Scalar
from .poly import Poly

MAX_DIM = 64

Vector = Tuple[Scalar, ...]


class Mat:
    """An n x n matrix over ``field``; rows are tuples of canonical scalars."""

    __slots__ = ("field", "n", "rows", "_hash")

    def __init__(self, field: Field, rows: Iterable[Iterable]):
        red = field.reduce
        rows = tuple(tuple(red(x) for x in row) for row in rows)
        n = len(rows)
        if n < 1 or any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square and non-empty")
        if n > MAX_DIM:
            raise DimensionTooLarge(f"n = {n} exceeds the limit {MAX_DIM}")
        self.field = field
        self.n = n
        self.rows = rows
        self._hash = None

    @classmethod
    def _raw(cls, field: Field, rows) -> "Mat":
        obj = cls.__new__(cls)
        obj.field = field
        obj.n = len(rows)
        obj.rows = rows
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        return cls.scalar(field, n, field.one)

    @classmethod
    def zero(cls, field: Field, n: int) -> "Mat":
        return cls.scalar(field, n, field.zero)

    @classmethod
    def scalar(cls, field: Field, n: int, lam) -> "Mat":
        if not 1 <= n <= MAX_DIM:
            raise (DimensionTooLarge if n > MAX_DIM else DimensionMismatch)(f"bad dimension n = {n}")
        lam = field.reduce(lam)
        z = field.zero
        return cls._raw(field, tuple(tuple(lam if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, field: Field, entries: Sequence) -> "Mat":
        n = len(entries)
        return cls(field, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, field: Field, n: int, i: int, j: int) -> "Mat":
        """The matrix unit E_ij (0-based indices)."""
        return cls(field, [[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def from_flat(cls, field: Field, n: int, flat: Sequence) -> "Mat":
        return cls(field, [flat[i * n:(i + 1) * n] for i in range(n)])

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence]) -> "Mat":
        n = len(cols)
        return cls._raw(field, tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))

    # -- queries --------------------------------------------------------

    @property
    def flat(self) -> Vector:
        return tuple(x for row in self.rows for x in row)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mat):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.rows))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Mat({self.field!r}, [{body}])"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def is_identity(self) -> bool:
        return self == Mat.identity(self.field, self.n)

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "Mat") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if self.n != other.n:
            raise DimensionMismatch(f"{self.n} vs {other.n}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        red = self.field.reduce
        return Mat._raw(self.field, tuple(
            tuple(red(x + y) for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other)
        red = self.field.reduce
        return Mat._raw(self.field, tuple(
            tuple(red(x - y) for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self) -> "Mat":
        red = self.field.reduce
        return Mat._raw(self.field, tuple(tuple(red(-x) for x in r) for r in self.rows))

    def scale(self, c) -> "Mat":
        red = self.field.reduce
        c = red(c)
        return Mat._raw(self.field, tuple(tuple(red(c * x) for x in r) for r in self.rows))

    def __matmul__(self, other: "Mat") -> "Mat":
        return mat_mul(self, other)

    def __pow__(self, e: int) -> "Mat":
        if e < 0:
            return inverse(self) ** (-e)
        result = Mat.identity(self.field, self.n)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def transpose(self) -> "Mat":
        return Mat._raw(self.field, tuple(zip(*self.rows)))

    def apply(self, v: Sequence) -> Vector:
        red = self.field.reduce
        return tuple(red(sum(x * y for x, y in zip(row, v))) for row in self.rows)


def mat_mul(a: Mat, b: Mat) -> Mat:
    a._check(b)
    cols = tuple(zip(*b.rows))
    field = a.field
    if isinstance(field, PrimeField):
        p = field.p
        return Mat._raw(field, tuple(
            tuple(sum(x * y for x, y in zip(row, col)) % p for col in cols) for row in a.rows))
    red = field.reduce
    return Mat._raw(field, tuple(
        tuple(red(sum(x * y for x, y in zip(row, col))) for col in cols) for row in a.rows))


def commutes(a: Mat, b: Mat) -> bool:
    return mat_mul(a, b) == mat_mul(b, a)


def is_central(a: Mat) -> bool:
    """True iff ``a`` is a scalar matrix (the center of M_n)."""
    lam = a.rows[0][0]
    for i, row in enumerate(a.rows):
        for j, x in enumerate(row):
            if x != (lam if i == j else 0):
                return False
    return True


def block_diag(field: Field, blocks: Sequence[Mat]) -> Mat:
    n = sum(b.n for b in blocks)
    rows = [[field.zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.n):
            for j in range(b.n):
                rows[off + i][off + j] = b.rows[i][j]
        off += b.n
    return Mat._raw(field, tuple(tuple(r) for r in rows))


def companion(f: Poly) -> Mat:
    """Companion matrix of monic ``f``: ones on the subdiagonal, last column -f_0..-f_{d-1}.

    With this orientation ``C e_j = e_{j+1}`` so ``e_1`` is a cyclic vector.
    """
    if f.degree < 1 or not f.is_monic():
        raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
    field = f.field
    d = f.degree
    rows = [[field.zero] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = field.one
    for i in range(d):
        rows[i][d - 1] = field.reduce(-f.coeffs[i])
    return Mat._raw(field, tuple(tuple(r) for r in rows))


def evaluate(f: Poly, a: Mat) -> Mat:
    """f(a) by Horner's rule."""
    if f.field != a.field:
        raise FieldMismatch(f"{f.field!r} vs {a.field!r}")
    n = a.n
    if f.is_zero():
        return Mat.zero(a.field, n)
    result = Mat.scalar(a.field, n, f.lc)
    for c in reversed(f.coeffs[:-1]):
        result = mat_mul(result, a)
        if c != 0:
            result = result + Mat.scalar(a.field, n, c)
    return result


# -- row reduction on plain lists ----------------------------------------


def rref(rows: Sequence[Sequence], ncols: int, field: Field) -> Tuple[List[List[Scalar]], List[int]]:
    """Reduced row echelon form.  Returns the nonzero rows and pivot columns."""
    R = [list(r) for r in rows]
    m = len(R)
    pivots: List[int] = []
    r = 0
    prime = isinstance(field, PrimeField)
    p = field.p if prime else 0
    red = field.reduce
    for c in range(ncols):
        if r == m:
            break
        piv = next((i for i in range(r, m) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        prow = R[r]
        if prow[c] != 1:
            inv = field.inv(prow[c])
            if prime:
                prow = [x * inv % p for x in prow]
            else:
                prow = [x * inv for x in prow]
            R[r] = prow
        for i in range(m):
            if i == r:
                continue
            f = R[i][c]
            if f == 0:
                continue
            row = R[i]
            if prime:
                R[i] = [(x - f * y) % p for x, y in zip(row, prow)]
            else:
                R[i] = [red(x - f * y) for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int, field: Field) -> List[Vector]:
    """Basis of the right null space, one vector per free column in increasing order."""
    R, pivots = rref(rows, ncols, field)
    pivset = set(pivots)
    red = field.reduce
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [field.zero] * ncols
        v[f] = field.one
        for k, pc in enumerate(pivots):
            v[pc] = red(-R[k][f])
        basis.append(tuple(v))
    return basis


def kernel_basis(a: Mat) -> List[Vector]:
    return nullspace(a.rows, a.n, a.field)


def rank(a: Mat) -> int:
    return len(rref(a.rows, a.n, a.field)[1])


def inverse(a: Mat) -> Mat:
    field, n = a.field, a.n
    aug = [list(row) + [field.one if i == j else field.zero for j in range(n)]
           for i, row in enumerate(a.rows)]
    R, pivots = rref(aug, 2 * n, field)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise SingularMatrix("matrix is not invertible")
    return Mat._raw(field, tuple(tuple(r[n:]) for r in R))


def solve_vector(a_rows: Sequence[Sequence], b: Sequence, ncols: int, field: Field) -> Vector:
    """One solution of ``a x = b`` (free variables zero); raises if inconsistent."""
    aug = [list(r) + [bi] for r, bi in zip(a_rows, b)]
    R, pivots = rref(aug, ncols + 1, field)
    if pivots and pivots[-1] == ncols:
        raise SingularMatrix("inconsistent linear system")
    x = [field.zero] * ncols
    for k, pc in enumerate(pivots):
        x[pc] = R[k][ncols]
    return tuple(x)


# -- annihilating polynomials --------------------------------------------


def _first_relation(field: Field, vectors) -> Poly:
    """Monic polynomial from the first linear dependency in a Krylov-type sequence.

    ``vectors`` yields v_0, v_1, ...; stops at the least d with v_d in the
    span of v_0..v_{d-1} and returns x^d - sum(c_i x^i).
    """
    red = field.reduce
    basis = []  # (pivot, vec, combo) with vec normalized at pivot
    for d, v in enumerate(vectors):
        v = list(v)
        combo = [field.zero] * d + [field.one]
        for pc, bv, bc in basis:
            c = v[pc]
            if c == 0:
                continue
            v = [red(x - c * y) for x, y in zip(v, bv)]
            combo = [red(x - c * y) for x, y in zip(combo, bc + [field.zero] * (len(combo) - len(bc)))]
        pc = next((i for i, x in enumerate(v) if x != 0), None)
        if pc is None:
            return Poly(field, combo)
        inv = field.inv(v[pc])
        basis.append((pc, [red(x * inv) for x in v], [red(x * inv) for x in combo]))
    raise ArithmeticError("sequence exhausted without a linear relation")


def minimal_polynomial(a: Mat) -> Poly:
    """Least-degree monic polynomial annihilating ``a`` (linear relation among powers)."""
    def powers():
        m = Mat.identity(a.field, a.n)
        while True:
            yield m.flat
            m = mat_mul(m, a)
    return _first_relation(a.field, powers())


def vector_minpoly(a: Mat, v: Sequence) -> Poly:
    """Order polynomial of ``v``: least monic g with g(a) v = 0."""
    def krylov():
        w = tuple(v)
        while True:
            yield w
            w = a.apply(w)
    return _first_relation(a.field, krylov())


def characteristic_polynomial(a: Mat) -> Poly:
    """det(xI - a) through reduction to upper Hessenberg form."""
    field, n = a.field, a.n
    red = field.reduce
    H = [list(r) for r in a.rows]
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if H[i][m - 1] != 0), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for row in H:
                row[i], row[m] = row[m], row[i]
        t_inv = field.inv(H[m][m - 1])
        for i in range(m + 1, n):
            u = red(H[i][m - 1] * t_inv)
            if u == 0:
                continue
            H[i] = [red(x - u * y) for x, y in zip(H[i], H[m])]
            for row in H:
                row[m] = red(row[m] + u * row[i])

    def h(i, j):  # 1-based access
        return H[i - 1][j - 1]

    x = Poly.x(field)
    chain = [Poly.one(field)]
    for m in range(1, n + 1):
        pm = (x - h(m, m)) * chain[m - 1]
        t = field.one
        for i in range(1, m):
            t = red(t * h(m - i + 1, m - i))
            coef = red(h(m - i, m) * t)
            if coef != 0:
                pm = pm - chain[m - i - 1] * coef
        chain.append(pm)
    return chain[n]
