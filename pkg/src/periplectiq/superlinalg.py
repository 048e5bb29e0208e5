"""Sparse exact linear algebra over Q(q) on Z/2-graded tensor spaces.

Basis of V = C_q(n|n) in canonical order u_{-n}, ..., u_{-1}, u_1, ..., u_n.
A basis tuple (a_1, ..., a_k) of V^{⊗k} has flat index
sum_j idx(a_j) * (2n)^(k-j), so sorting flat indices sorts tuples
lexicographically in canonical order.

Operator tensor products follow the Koszul rule
(X ⊗ Y)(v ⊗ w) = (-1)^{p(Y) p(v)} Xv ⊗ Yw.
"""

from __future__ import annotations

import math
from functools import lru_cache
from itertools import product

from .qrat import ONE, ONE_POLY, ZERO, LaurentPoly, RatFunc, as_ratfunc, poly_gcd
from . import kernels as _k


class ShapeError(ValueError):
    """Dimension mismatch or out-of-range tensor position."""


# ---------------------------------------------------------------------------
# basis bookkeeping


def parity(a: int) -> int:
    return 1 if a < 0 else 0


def idx(a: int, n: int) -> int:
    if a == 0 or abs(a) > n:
        raise ShapeError(f"basis label {a} out of range for n={n}")
    return a + n if a < 0 else a + n - 1


def label(i: int, n: int) -> int:
    return i - n if i < n else i - n + 1


def labels(n: int) -> list[int]:
    return [label(i, n) for i in range(2 * n)]


def flat_index(tup, n: int) -> int:
    d = 2 * n
    out = 0
    for a in tup:
        out = out * d + idx(a, n)
    return out


@lru_cache(maxsize=None)
def tuples(n: int, k: int) -> tuple:
    """All basis tuples of V^{⊗k} in flat-index order."""
    return tuple(product(labels(n), repeat=k))


@lru_cache(maxsize=None)
def parities(n: int, k: int) -> tuple:
    return tuple(sum(parity(a) for a in t) & 1 for t in tuples(n, k))


# ---------------------------------------------------------------------------
# vectors


class SuperVector:
    """Sparse vector of V^{⊗k}; coefficients keyed by flat index."""

    __slots__ = ("n", "k", "data")

    def __init__(self, n: int, k: int, data: dict | None = None):
        self.n = n
        self.k = k
        self.data = {i: c for i, c in (data or {}).items() if c}

    @classmethod
    def basis(cls, n: int, tup) -> SuperVector:
        return cls(n, len(tup), {flat_index(tup, n): ONE})

    @classmethod
    def from_terms(cls, n: int, k: int, terms: dict) -> SuperVector:
        data: dict[int, RatFunc] = {}
        for tup, c in terms.items():
            if len(tup) != k:
                raise ShapeError(f"tuple {tup} has length != {k}")
            i = flat_index(tup, n)
            data[i] = data.get(i, ZERO) + as_ratfunc(c)
        return cls(n, k, data)

    @property
    def dim(self) -> int:
        return (2 * self.n) ** self.k

    @property
    def coeffs(self) -> dict:
        tl = tuples(self.n, self.k)
        return {tl[i]: c for i, c in sorted(self.data.items())}

    def is_zero(self) -> bool:
        return not self.data

    def __bool__(self):
        return bool(self.data)

    def _check(self, other: SuperVector):
        if (self.n, self.k) != (other.n, other.k):
            raise ShapeError("vectors live in different spaces")

    def __add__(self, other: SuperVector) -> SuperVector:
        self._check(other)
        out = dict(self.data)
        for i, c in other.data.items():
            v = out.get(i)
            out[i] = c if v is None else v + c
        return SuperVector(self.n, self.k, out)

    def __neg__(self):
        return SuperVector(self.n, self.k, {i: -c for i, c in self.data.items()})

    def __sub__(self, other: SuperVector) -> SuperVector:
        return self + (-other)

    def scale(self, c) -> SuperVector:
        c = as_ratfunc(c)
        if not c:
            return SuperVector(self.n, self.k)
        return SuperVector(self.n, self.k, {i: c * x for i, x in self.data.items()})

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, SuperVector):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and self.data == other.data

    def __hash__(self):
        return hash((self.n, self.k, frozenset(self.data.items())))

    def lead(self) -> int:
        return min(self.data)

    def normalized(self) -> SuperVector:
        """Scale so that the first nonzero coefficient is 1."""
        if not self.data:
            return self
        return self.scale(self.data[self.lead()].inv())

    def is_homogeneous(self) -> bool:
        par = parities(self.n, self.k)
        return len({par[i] for i in self.data}) <= 1

    def to_json(self) -> list:
        tl = tuples(self.n, self.k)
        return [[list(tl[i]), str(c)] for i, c in sorted(self.data.items())]

    def __repr__(self):
        parts = [f"({c})*{tuple(t)}" for t, c in self.coeffs.items()]
        return "SuperVector(" + " + ".join(parts or ["0"]) + ")"


def proportional(v: SuperVector, w: SuperVector) -> RatFunc | None:
    """Return c with v = c*w, or None if there is no such c (w must be nonzero)."""
    if not w.data:
        raise ShapeError("proportionality against the zero vector")
    if set(v.data) != set(w.data) and v.data:
        return None
    if not v.data:
        return ZERO
    i = w.lead()
    c = v.data[i] / w.data[i]
    for j, x in w.data.items():
        if v.data[j] != c * x:
            return None
    return c


# ---------------------------------------------------------------------------
# matrices


class SuperMatrix:
    """Sparse matrix with RatFunc entries, stored row-wise, with a declared parity."""

    __slots__ = ("rows", "cols", "parity", "data")

    def __init__(self, rows: int, cols: int, parity: int = 0, data: dict | None = None):
        self.rows = rows
        self.cols = cols
        self.parity = parity & 1
        clean: dict[int, dict[int, RatFunc]] = {}
        for r, row in (data or {}).items():
            row = {c: v for c, v in row.items() if v}
            if row:
                clean[r] = row
        self.data = clean

    @property
    def dims(self) -> tuple:
        return (self.rows, self.cols)

    # constructors -----------------------------------------------------------
    @classmethod
    def zero(cls, rows: int, cols: int | None = None, parity: int = 0) -> SuperMatrix:
        return cls(rows, rows if cols is None else cols, parity)

    @classmethod
    def identity(cls, dim: int) -> SuperMatrix:
        return cls(dim, dim, 0, {i: {i: ONE} for i in range(dim)})

    @classmethod
    def diagonal(cls, entries) -> SuperMatrix:
        entries = list(entries)
        return cls(len(entries), len(entries), 0, {i: {i: e} for i, e in enumerate(entries)})

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: dict, parity: int = 0) -> SuperMatrix:
        data: dict[int, dict[int, RatFunc]] = {}
        for (r, c), v in entries.items():
            v = as_ratfunc(v)
            if v:
                row = data.setdefault(r, {})
                row[c] = row.get(c, ZERO) + v
        return cls(rows, cols, parity, data)

    # access -----------------------------------------------------------------
    def __getitem__(self, rc) -> RatFunc:
        r, c = rc
        return self.data.get(r, {}).get(c, ZERO)

    def entries(self):
        for r in sorted(self.data):
            row = self.data[r]
            for c in sorted(row):
                yield r, c, row[c]

    def nnz(self) -> int:
        return sum(len(row) for row in self.data.values())

    def is_zero(self) -> bool:
        return not self.data

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self.dims == other.dims and self.data == other.data

    def __hash__(self):
        return hash((self.dims, self.nnz()))

    def transpose(self) -> SuperMatrix:
        data: dict[int, dict[int, RatFunc]] = {}
        for r, row in self.data.items():
            for c, v in row.items():
                data.setdefault(c, {})[r] = v
        return SuperMatrix(self.cols, self.rows, self.parity, data)

    # arithmetic --------------------------------------------------------------
    def __add__(self, other: SuperMatrix) -> SuperMatrix:
        return matadd(self, other)

    def __sub__(self, other: SuperMatrix) -> SuperMatrix:
        return matadd(self, scale(-ONE, other))

    def __neg__(self):
        return scale(-ONE, self)

    def __matmul__(self, other):
        if isinstance(other, SuperVector):
            return self.apply(other)
        return matmul(self, other)

    def __mul__(self, c):
        return scale(c, self)

    __rmul__ = __mul__

    def apply(self, v: SuperVector) -> SuperVector:
        if v.dim != self.cols:
            raise ShapeError(f"cannot apply {self.dims} matrix to vector of dim {v.dim}")
        out: dict[int, RatFunc] = {}
        cols = self.transpose_cache()
        for c, x in v.data.items():
            for r, m in cols.get(c, {}).items():
                t = m * x
                prev = out.get(r)
                out[r] = t if prev is None else prev + t
        return SuperVector(v.n, v.k, out)

    def transpose_cache(self) -> dict:
        # column view; recomputed on demand (matrices are small and immutable)
        cols: dict[int, dict[int, RatFunc]] = {}
        for r, row in self.data.items():
            for c, v in row.items():
                cols.setdefault(c, {})[r] = v
        return cols

    def column(self, c: int, n: int, k: int) -> SuperVector:
        return SuperVector(n, k, {r: row[c] for r, row in self.data.items() if c in row})

    def columns(self, n: int, k: int) -> list[SuperVector]:
        cols = self.transpose_cache()
        return [SuperVector(n, k, cols.get(c, {})) for c in range(self.cols)]

    def map_entries(self, f) -> SuperMatrix:
        return SuperMatrix(
            self.rows,
            self.cols,
            self.parity,
            {r: {c: f(v) for c, v in row.items()} for r, row in self.data.items()},
        )

    def at_one(self) -> SuperMatrix:
        """Entrywise specialization q -> 1 (raises PoleAtOne on a pole)."""
        return self.map_entries(lambda v: RatFunc.const(v.eval_at_one()))

    def parity_consistent(self, row_par, col_par) -> bool:
        return all(
            (row_par[r] + col_par[c]) & 1 == self.parity for r, c, _ in self.entries()
        )

    def max_entry_size(self) -> int:
        return max((v.size() for _, _, v in self.entries()), default=0)

    def to_json(self, n: int | None = None, k: int | None = None) -> dict:
        if n is not None and k is not None:
            tl = tuples(n, k)
            ents = [[list(tl[r]), list(tl[c]), str(v)] for r, c, v in self.entries()]
        else:
            ents = [[r, c, str(v)] for r, c, v in self.entries()]
        return {"dims": [self.rows, self.cols], "parity": self.parity, "entries": ents}

    def __repr__(self):
        return f"SuperMatrix({self.rows}x{self.cols}, parity={self.parity}, nnz={self.nnz()})"


def matmul(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    if a.cols != b.rows:
        raise ShapeError(f"matmul shape mismatch {a.dims} x {b.dims}")
    data: dict[int, dict[int, RatFunc]] = {}
    bdata = b.data
    for r, arow in a.data.items():
        acc: dict[int, RatFunc] = {}
        for m, x in arow.items():
            brow = bdata.get(m)
            if not brow:
                continue
            for c, y in brow.items():
                t = x * y
                prev = acc.get(c)
                acc[c] = t if prev is None else prev + t
        if acc:
            data[r] = acc
    return SuperMatrix(a.rows, b.cols, a.parity + b.parity, data)


def matadd(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    if a.dims != b.dims:
        raise ShapeError(f"matadd shape mismatch {a.dims} + {b.dims}")
    if a.is_zero():
        return SuperMatrix(b.rows, b.cols, b.parity, b.data)
    if b.is_zero():
        return a
    data = {r: dict(row) for r, row in a.data.items()}
    for r, row in b.data.items():
        target = data.setdefault(r, {})
        for c, v in row.items():
            prev = target.get(c)
            target[c] = v if prev is None else prev + v
    return SuperMatrix(a.rows, a.cols, a.parity, data)


def scale(c, a: SuperMatrix) -> SuperMatrix:
    c = as_ratfunc(c)
    if not c:
        return SuperMatrix(a.rows, a.cols, a.parity)
    if c == ONE:
        return a
    return SuperMatrix(
        a.rows, a.cols, a.parity, {r: {j: c * v for j, v in row.items()} for r, row in a.data.items()}
    )


def linear_combination(terms, dim: int, parity: int = 0) -> SuperMatrix:
    """Sum of c*M over (c, M) pairs."""
    out = SuperMatrix.zero(dim, dim, parity)
    for c, m in terms:
        out = matadd(out, scale(c, m))
    return out


def commutator(a: SuperMatrix, b: SuperMatrix, super_: bool = True) -> SuperMatrix:
    """[a, b] = ab - (-1)^{p(a)p(b)} ba (plain commutator if super_ is False)."""
    ab = matmul(a, b)
    ba = matmul(b, a)
    if super_ and a.parity and b.parity:
        return matadd(ab, ba)
    return matadd(ab, scale(-ONE, ba))


def power(a: SuperMatrix, e: int) -> SuperMatrix:
    out = SuperMatrix.identity(a.rows)
    for _ in range(e):
        out = matmul(out, a)
    return out


# ---------------------------------------------------------------------------
# super tensor products


def tensor(a: SuperMatrix, b: SuperMatrix, n: int, ka: int, kb: int) -> SuperMatrix:
    """Koszul tensor product of an operator on V^{⊗ka} with one on V^{⊗kb}."""
    da = (2 * n) ** ka
    db = (2 * n) ** kb
    if a.dims != (da, da) or b.dims != (db, db):
        raise ShapeError("tensor factor has the wrong dimension")
    par_a = parities(n, ka)
    bcols = b.transpose_cache()
    acols = a.transpose_cache()
    data: dict[int, dict[int, RatFunc]] = {}
    odd_b = b.parity
    for ca, acol in acols.items():
        sgn = -1 if (odd_b and par_a[ca]) else 1
        for cb, bcol in bcols.items():
            col = ca * db + cb
            for ra, x in acol.items():
                xs = -x if sgn < 0 else x
                base = ra * db
                for rb, y in bcol.items():
                    data.setdefault(base + rb, {})[col] = xs * y
    return SuperMatrix(da * db, da * db, a.parity + b.parity, data)


def place_operator(
    x: SuperMatrix,
    position: int,
    k: int,
    left_diag: SuperMatrix | None = None,
    right_diag: SuperMatrix | None = None,
    n: int | None = None,
) -> SuperMatrix:
    """left^{⊗(position-1)} ⊗ x ⊗ right^{⊗(k-position)} with Koszul signs.

    ``x`` acts on a single factor V. ``left_diag``/``right_diag`` must be even;
    ``None`` means the identity.
    """
    if n is None:
        n = x.rows // 2
    if x.dims != (2 * n, 2 * n):
        raise ShapeError("place_operator expects an operator on V")
    if not 1 <= position <= k:
        raise ShapeError(f"position {position} out of range 1..{k}")
    ident = SuperMatrix.identity(2 * n)
    left = left_diag if left_diag is not None else ident
    right = right_diag if right_diag is not None else ident
    if left.parity or right.parity:
        raise ShapeError("diagonal factors must be even")
    out = x
    for _ in range(k - position):
        out = tensor(out, right, n, _k_of(out, n), 1)
    for _ in range(position - 1):
        out = tensor(left, out, n, 1, _k_of(out, n))
    return out


def _k_of(m: SuperMatrix, n: int) -> int:
    d = 2 * n
    k = 0
    size = 1
    while size < m.rows:
        size *= d
        k += 1
    if size != m.rows:
        raise ShapeError("matrix dimension is not a power of 2n")
    return k


def embed(op: SuperMatrix, first: int, width: int, k: int, n: int) -> SuperMatrix:
    """Identity on all slots except ``first..first+width-1`` where ``op`` acts."""
    if not 1 <= first <= k - width + 1:
        raise ShapeError(f"slots {first}..{first + width - 1} out of range for k={k}")
    out = op
    if first + width - 1 < k:
        out = tensor(out, SuperMatrix.identity((2 * n) ** (k - first - width + 1)), n, width,
                     k - first - width + 1)
    if first > 1:
        out = tensor(SuperMatrix.identity((2 * n) ** (first - 1)), out, n, first - 1,
                     k - first + 1)
    return out


# ---------------------------------------------------------------------------
# elimination


def _poly_row(row: dict) -> dict:
    """Scale a row of RatFuncs to a primitive row of integer Laurent polynomials.

    The result spans the same line: denominators are cleared, then the common
    polynomial gcd, integer content and lowest q-power are divided out, and the
    first entry gets a positive leading coefficient.
    """
    row = {c: v for c, v in row.items() if v}
    if not row:
        return row
    for c in sorted(row):
        d = row[c].den
        if len(d.coeffs) > 1:
            dd = RatFunc(d, ONE_POLY, True)
            row = {j: v * dd for j, v in row.items()}
    keys = sorted(row)
    nums = [row[c].num for c in keys]
    den = math.lcm(*(p.den for p in nums))
    low = min(p.low for p in nums)
    cs = [tuple(x * (den // p.den) for x in p.coeffs) for p in nums]
    pg: tuple = ()
    for t in cs:
        pg = poly_gcd(pg, t) if pg else t
        if len(pg) == 1:
            break
    if len(pg) > 1:
        cs = [_k.divexact(t, pg) for t in cs]
    g = 0
    for t in cs:
        g = math.gcd(g, *t)
        if g == 1:
            break
    if cs[0][-1] < 0:
        g = -g
    if g != 1:
        cs = [tuple(x // g for x in t) for t in cs]
    return {
        c: RatFunc(LaurentPoly(p.low - low, t, 1), ONE_POLY, True)
        for c, p, t in zip(keys, nums, cs)
    }


def _row_weight(row: dict) -> int:
    return sum(v.size() for v in row.values())


def row_echelon(rows: list) -> tuple[list, list]:
    """Fraction-free forward elimination.

    ``rows`` is a list of dict rows (column -> RatFunc). Returns
    ``(pivot_rows, pivot_cols)``; pivot row i has leading column pivot_cols[i].
    Pivots are chosen column by column; among candidate rows the one with the
    fewest stored terms wins, ties going to the lowest row index.
    """
    work = [(i, _poly_row(r)) for i, r in enumerate(rows)]
    work = [(i, r) for i, r in work if r]
    pivots: list = []
    pcols: list = []
    while work:
        col = min(min(r) for _, r in work)
        cands = [(i, r) for i, r in work if min(r) == col]
        best = min(cands, key=lambda ir: (_row_weight(ir[1]), ir[0]))
        pivots.append(best[1])
        pcols.append(col)
        p = best[1][col]
        rest = []
        for i, r in work:
            if i == best[0]:
                continue
            if min(r) != col:
                rest.append((i, r))
                continue
            a = r[col]
            new = {}
            for c in set(r) | set(best[1]):
                if c == col:
                    continue
                v = r.get(c, ZERO) * p - best[1].get(c, ZERO) * a
                if v:
                    new[c] = v
            if new:
                rest.append((i, _poly_row(new)))
        work = rest
    return pivots, pcols


def rref(rows: list) -> tuple[list, list]:
    """Reduced row echelon form with unit pivots, rows sorted by pivot column."""
    pivots, pcols = row_echelon(rows)
    order = sorted(range(len(pcols)), key=lambda i: pcols[i])
    R = [dict(pivots[i]) for i in order]
    P = [pcols[i] for i in order]
    for i in range(len(R) - 1, -1, -1):
        inv = R[i][P[i]].inv()
        R[i] = {c: v * inv for c, v in R[i].items()}
        for j in range(i):
            a = R[j].get(P[i])
            if a:
                row = R[j]
                for c, v in R[i].items():
                    nv = row.get(c, ZERO) - a * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
    return R, P


def rank(a: SuperMatrix) -> int:
    rows = [a.data[r] for r in sorted(a.data)]
    return len(row_echelon(rows)[1])


def nullspace(a: SuperMatrix, n: int | None = None, k: int | None = None) -> list:
    """Basis of ker(a) in reduced echelon form (one vector per free column)."""
    if n is None or k is None:
        if a.cols % 2:
            raise ShapeError("pass n and k for matrices not acting on a tensor power of V")
        n, k = a.cols // 2, 1
    R, P = rref([a.data[r] for r in sorted(a.data)])
    pset = set(P)
    out = []
    for f in range(a.cols):
        if f in pset:
            continue
        data = {f: ONE}
        for row, p in zip(R, P):
            v = row.get(f)
            if v:
                data[p] = -v
        out.append(SuperVector(n, k, data))
    return out


class Echelon:
    """Incrementally maintained reduced echelon basis of a subspace."""

    def __init__(self, n: int, k: int, vectors=()):
        self.n = n
        self.k = k
        self.rows: dict[int, dict] = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: SuperVector) -> dict:
        data = dict(v.data)
        for p in sorted(self.rows):
            a = data.get(p)
            if a:
                for c, x in self.rows[p].items():
                    nv = data.get(c, ZERO) - a * x
                    if nv:
                        data[c] = nv
                    else:
                        data.pop(c, None)
        return data

    def contains(self, v: SuperVector) -> bool:
        return not self.reduce(v)

    def add(self, v: SuperVector) -> bool:
        """Insert v; return True if the span grew."""
        data = self.reduce(v)
        if not data:
            return False
        p = min(data)
        inv = data[p].inv()
        new = {c: x * inv for c, x in data.items()}
        for q_, row in self.rows.items():
            a = row.get(p)
            if a:
                for c, x in new.items():
                    nv = row.get(c, ZERO) - a * x
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
        self.rows[p] = new
        return True

    def basis(self) -> list:
        return [SuperVector(self.n, self.k, self.rows[p]) for p in sorted(self.rows)]


def span_union(vs, n: int | None = None, k: int | None = None) -> list:
    vs = list(vs)
    if not vs:
        return []
    n = vs[0].n if n is None else n
    k = vs[0].k if k is None else k
    R, P = rref([v.data for v in vs])
    return [SuperVector(n, k, r) for r in R]


def contains(subspace_basis, v: SuperVector) -> bool:
    e = Echelon(v.n, v.k, subspace_basis)
    return e.contains(v)


def vectors_rank(vs) -> int:
    return len(row_echelon([v.data for v in vs])[1])


def matrix_from_columns(vs, dim: int, parity: int = 0) -> SuperMatrix:
    data: dict[int, dict[int, RatFunc]] = {}
    for c, v in enumerate(vs):
        for r, x in v.data.items():
            data.setdefault(r, {})[c] = x
    return SuperMatrix(dim, len(vs), parity, data)


def image_basis(a: SuperMatrix, n: int, k: int) -> list:
    """Echelon basis of the column space of ``a``."""
    return span_union([c for c in a.columns(n, k) if c], n, k)
