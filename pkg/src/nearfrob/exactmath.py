"""Exact rational linear algebra.

Scalars are ``fractions.Fraction``.  A matrix is a list of rows, a vector a
list.  Elimination runs on sparse ``{column: value}`` rows because nearly
every system built elsewhere in the package (bimodule constraints, ideals of
path algebras) has only a handful of nonzeros per row.
"""

from fractions import Fraction

__all__ = [
    "frac", "to_mat", "zeros", "identity", "transpose", "matmul", "matvec",
    "kron", "mat_add", "mat_scale", "is_zero_mat", "Echelon", "rref", "rank",
    "nullspace", "sparse_nullspace", "solve", "sparse_solve", "invert",
    "row_basis", "fmt",
]


def frac(x):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def fmt(x):
    """Render a scalar as ``"p/q"`` (or ``"p"`` for integers)."""
    x = frac(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def to_mat(rows):
    return [[frac(x) for x in row] for row in rows]


def zeros(r, c):
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return m


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        orow = out[i]
        for k in range(inner):
            x = row[k]
            if x:
                brow = b[k]
                for j in range(cols):
                    if brow[j]:
                        orow[j] += x * brow[j]
    return out


def matvec(m, v):
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in m]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, m):
    c = frac(c)
    return [[c * x for x in row] for row in m]


def kron(a, b):
    """Kronecker product; row index (i, k) -> i*rows(b) + k."""
    rb, cb = len(b), len(b[0]) if b else 0
    out = zeros(len(a) * rb, (len(a[0]) if a else 0) * cb)
    for i, ra in enumerate(a):
        for j, x in enumerate(ra):
            if not x:
                continue
            for k in range(rb):
                for l in range(cb):
                    if b[k][l]:
                        out[i * rb + k][j * cb + l] = x * b[k][l]
    return out


def is_zero_mat(m):
    return all(not x for row in m for x in row)


def _sparse(row):
    return {j: frac(x) for j, x in enumerate(row) if x}


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Rows are kept fully reduced: every stored row has a leading 1 in its
    pivot column and zeros in all other pivot columns.  Pivot choice is the
    first nonzero column, so the result is the unique RREF of the rows added.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}  # pivot column -> sparse row

    @property
    def rank(self):
        return len(self.rows)

    @property
    def pivots(self):
        return sorted(self.rows)

    def reduce(self, row):
        """Remainder of a row (sparse dict or dense list) modulo the row space."""
        if not isinstance(row, dict):
            row = _sparse(row)
        r = {j: x for j, x in row.items() if x}
        for p in [j for j in r if j in self.rows]:
            c = r.get(p)
            if not c:
                continue
            for j, x in self.rows[p].items():
                v = r.get(j, 0) - c * x
                if v:
                    r[j] = v
                else:
                    r.pop(j, None)
        return r

    def add(self, row):
        """Add a sparse row; return True if it enlarged the row space."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r)
        c = r[p]
        if c != 1:
            r = {j: x / c for j, x in r.items()}
        for q, other in self.rows.items():
            d = other.get(p)
            if d:
                for j, x in r.items():
                    v = other.get(j, 0) - d * x
                    if v:
                        other[j] = v
                    else:
                        other.pop(j, None)
        self.rows[p] = r
        return True

    def contains(self, row):
        return not self.reduce(row)

    def dense_rows(self):
        out = []
        for p in self.pivots:
            row = [Fraction(0)] * self.ncols
            for j, x in self.rows[p].items():
                row[j] = x
            out.append(row)
        return out

    def kernel(self):
        """Basis of the nullspace, one vector per free column (leading 1 there)."""
        free = [j for j in range(self.ncols) if j not in self.rows]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.ncols
            v[f] = Fraction(1)
            for p, row in self.rows.items():
                x = row.get(f)
                if x:
                    v[p] = -x
            basis.append(v)
        return basis


def _echelon(m, ncols=None):
    if ncols is None:
        ncols = len(m[0]) if m else 0
    e = Echelon(ncols)
    for row in m:
        e.add(row if isinstance(row, dict) else _sparse(row))
    return e


def rref(m):
    """Return ``(reduced, rank, pivot_cols)``; ``reduced`` keeps the shape of m."""
    ncols = len(m[0]) if m else 0
    e = _echelon(m, ncols)
    reduced = e.dense_rows()
    reduced += zeros(len(m) - len(reduced), ncols)
    return reduced, e.rank, e.pivots


def rank(m):
    return _echelon(m).rank


def nullspace(m, ncols=None):
    if ncols is None:
        ncols = len(m[0]) if m else 0
    return _echelon(m, ncols).kernel()


def sparse_nullspace(rows, ncols):
    """Nullspace of a system given as an iterable of sparse dict rows."""
    e = Echelon(ncols)
    for r in rows:
        e.add(r)
    return e.kernel()


def sparse_solve(rows, rhs, ncols):
    """Particular solution of a sparse system, or None if inconsistent.

    ``rows`` are dicts over columns ``0..ncols-1``; ``rhs`` the matching
    right-hand sides.  Free variables are set to zero.
    """
    e = Echelon(ncols + 1)
    for r, b in zip(rows, rhs):
        r = dict(r)
        b = frac(b)
        if b:
            r[ncols] = b
        e.add(r)
    if ncols in e.rows:
        return None
    x = [Fraction(0)] * ncols
    for p, row in e.rows.items():
        x[p] = row.get(ncols, Fraction(0))
    return x


def solve(m, b):
    ncols = len(m[0]) if m else 0
    return sparse_solve([_sparse(r) for r in m], b, ncols)


def invert(m):
    n = len(m)
    e = Echelon(2 * n)
    for i, row in enumerate(m):
        r = _sparse(row)
        r[n + i] = Fraction(1)
        e.add(r)
    # [m | I] always has rank n; m is invertible iff every pivot lands in m
    if e.pivots != list(range(n)):
        return None
    inv = zeros(n, n)
    for p, row in e.rows.items():
        for j, x in row.items():
            if j >= n:
                inv[p][j - n] = x
    return inv


def row_basis(vectors, ncols):
    """Canonical (RREF) basis of the span of some vectors."""
    return _echelon(list(vectors), ncols).dense_rows()
