"""Exact dense linear algebra over the scalar fields.

Everything is computed exactly; there is no numeric tolerance anywhere.

``solve_linear`` has two routes to the same canonical answer:

* a reference route: fraction/field Gauss-Jordan elimination with the
  first-nonzero pivot rule;
* a fast route for large rational systems: elimination modulo a fixed,
  deterministic list of 31-bit primes, Chinese remaindering, rational
  reconstruction, and then a mandatory exact verification of the candidate
  (solution, nullspace vector, or infeasibility certificate) over Q.

The fast route can never return a wrong answer: every candidate is checked
with exact rational arithmetic before being accepted, and on any failure the
reference route runs instead.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm

import numpy as np

from ..errors import DimensionError, InternalError
from .scalars import as_scalar, unify

_F0 = Fraction(0)
_F1 = Fraction(1)

# rational systems at least this large (rows * cols) take the modular route
_MODULAR_THRESHOLD = 10_000


class Matrix:
    """Immutable dense matrix over one scalar variant."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if rows:
            w = len(rows[0])
            if any(len(r) != w for r in rows):
                raise DimensionError("ragged rows")
            flat = unify([x for r in rows for x in r])
            it = iter(flat)
            rows = [tuple(next(it) for _ in range(w)) for _ in rows]
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", len(rows[0]) if rows else 0)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def identity(n: int):
        return Matrix([[_F1 if i == j else _F0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(m: int, n: int):
        return Matrix([[_F0] * n for _ in range(m)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(
            a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionError("matrix shape mismatch")
        return Matrix([[a + b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionError("matrix shape mismatch")
        return Matrix([[a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, s):
        s = as_scalar(s)
        return Matrix([[s * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError(
                    "cannot multiply %dx%d by %dx%d"
                    % (self.nrows, self.ncols, other.nrows, other.ncols))
            cols = list(zip(*other.rows)) if other.rows else []
            out = []
            for ra in self.rows:
                row = []
                for cb in cols:
                    acc = _F0
                    for a, b in zip(ra, cb):
                        if a and b:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return Matrix(out)
        return NotImplemented

    def apply(self, vec):
        """Matrix times column vector (any sequence)."""
        vec = list(vec)
        if len(vec) != self.ncols:
            raise DimensionError("vector length mismatch")
        out = []
        for r in self.rows:
            acc = _F0
            for a, x in zip(r, vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(unify(out)) if out else tuple()

    def transpose(self):
        return Matrix([list(c) for c in zip(*self.rows)]) if self.rows else Matrix([])

    def trace(self):
        if self.nrows != self.ncols:
            raise DimensionError("trace of non-square matrix")
        acc = _F0
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def rank(self) -> int:
        _, pivots = rref(self.rows)
        return len(pivots)

    def kron(self, other):
        out = []
        for ra in self.rows:
            for rb in other.rows:
                out.append([a * b for a in ra for b in rb])
        return Matrix(out)

    def __repr__(self):
        return "Matrix(%d x %d)" % (self.nrows, self.ncols)


def rref(rows):
    """Reduced row echelon form with the first-nonzero pivot rule.

    Takes an iterable of rows and returns (rows, pivot_columns) where rows is
    a tuple of tuples with leading ones and zeros above and below each pivot.
    This canonical form is unique for a given row space, so equality of row
    spaces is equality of the returned rows.
    """
    work = [list(r) for r in rows]
    if not work:
        return tuple(), tuple()
    ncols = len(work[0])
    if any(len(r) != ncols for r in work):
        raise DimensionError("ragged rows")
    m = len(work)
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        if inv != 1:
            work[r] = [x * inv for x in work[r]]
        prow = work[r]
        for i in range(m):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], prow)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in work), tuple(pivots)


class LinearSolution:
    """A particular solution plus a basis of the homogeneous nullspace."""

    __slots__ = ("particular", "nullspace")

    def __init__(self, particular, nullspace):
        object.__setattr__(self, "particular", tuple(particular))
        object.__setattr__(self, "nullspace", tuple(tuple(v) for v in nullspace))

    def __setattr__(self, *a):
        raise AttributeError("LinearSolution is immutable")

    def __repr__(self):
        return "LinearSolution(nullity=%d)" % len(self.nullspace)


class Infeasible:
    """Proof that A x = b has no solution.

    ``certificate`` is a vector y with y.A = 0 and y.b = 1; its existence is
    equivalent to b lying outside the column space of A, and it is verified
    with exact arithmetic before this object is constructed.
    """

    __slots__ = ("certificate",)

    def __init__(self, certificate):
        object.__setattr__(self, "certificate", tuple(certificate))

    def __setattr__(self, *a):
        raise AttributeError("Infeasible is immutable")

    def __repr__(self):
        return "Infeasible()"


def _dot(row, vec):
    acc = _F0
    for a, x in zip(row, vec):
        if a and x:
            acc = acc + a * x
    return acc


def _verify_certificate(rows, b, y):
    for j in range(len(rows[0]) if rows else 0):
        acc = _F0
        for i, row in enumerate(rows):
            if y[i] and row[j]:
                acc = acc + y[i] * row[j]
        if acc != 0:
            return False
    return _dot(y, b) != 0


def solve_linear(A, b, want_nullspace: bool = True):
    """Solve A x = b exactly; returns LinearSolution or Infeasible.

    The particular solution is canonical (free variables zero, RREF with the
    first-nonzero pivot rule), as is the nullspace basis (one vector per free
    column, ascending).  Set want_nullspace=False to skip the nullspace basis
    on large systems.
    """
    rows = list(A.rows) if isinstance(A, Matrix) else [list(r) for r in A]
    b = list(b)
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if len(b) != m:
        raise DimensionError("right-hand side length mismatch")
    if m == 0:
        return LinearSolution([], [])
    flat = unify([x for r in rows for x in r] + list(b))
    if n:
        it = iter(flat)
        rows = [[next(it) for _ in range(n)] for _ in range(m)]
    b = flat[m * n:]
    rational = all(isinstance(x, Fraction) for x in flat)
    if rational and m * (n + 1) >= _MODULAR_THRESHOLD:
        res = _solve_modular(rows, b, want_nullspace)
        if res is not None:
            return res
    return _solve_exact(rows, b, want_nullspace)


def _solve_exact(rows, b, want_nullspace):
    m = len(rows)
    n = len(rows[0])
    aug, pivots = rref([list(r) + [bi] for r, bi in zip(rows, b)])
    if pivots and pivots[-1] == n:
        # inconsistent; rerun with row tracking to extract a certificate
        tracked, tpiv = rref(
            [list(r) + [bi] + [_F1 if k == i else _F0 for k in range(m)]
             for i, (r, bi) in enumerate(zip(rows, b))])
        row_idx = None
        for i, c in enumerate(tpiv):
            if c == n:
                row_idx = i
                break
        if row_idx is None:
            raise InternalError("lost infeasibility under row tracking")
        y = tracked[row_idx][n + 1:]
        if not _verify_certificate(rows, b, y):
            raise InternalError("bad infeasibility certificate")
        return Infeasible(y)
    zero = b[0] * 0
    x = [zero] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    null = []
    if want_nullspace:
        pivset = set(pivots)
        one = zero + 1
        for f in range(n):
            if f in pivset:
                continue
            v = [zero] * n
            v[f] = one
            for i, c in enumerate(pivots):
                v[c] = -aug[i][f]
            null.append(v)
    return LinearSolution(x, null)


# ---------------------------------------------------------------------------
# modular fast route
# ---------------------------------------------------------------------------

_PRIME_LIST: list[int] = []
_PRIME_COUNT = 220


def _is_prime(n: int) -> bool:
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes31():
    if not _PRIME_LIST:
        c = 2**31 - 1
        while len(_PRIME_LIST) < _PRIME_COUNT:
            if _is_prime(c):
                _PRIME_LIST.append(c)
            c -= 2
    return _PRIME_LIST


def _rat_reconstruct(a: int, mmod: int):
    """Wang reconstruction of a rational from its residue, or None."""
    a %= mmod
    if a == 0:
        return _F0
    bound = isqrt(mmod // 2)
    r0, r1 = mmod, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    d = abs(s1)
    if d == 0 or d > bound or gcd(r1, d) != 1:
        return None
    num = r1 if s1 > 0 else -r1
    if (num - a * d) % mmod != 0:
        return None
    return Fraction(num, d)


def _crt_pair(r1, m1, r2, m2):
    t = ((r2 - r1) * pow(m1 % m2, -1, m2)) % m2
    return r1 + m1 * t, m1 * m2


def _modp_rref(M: np.ndarray, p: int):
    """In-place full RREF of int64 matrix mod p; returns pivot column list."""
    m, n = M.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        col = M[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        colv = M[:, c].copy()
        colv[r] = 0
        nzr = np.nonzero(colv)[0]
        if nzr.size:
            M[nzr] = (M[nzr] - np.outer(colv[nzr], M[r])) % p
        pivots.append(c)
        r += 1
    return pivots


def _solve_modular(rows, b, want_nullspace):
    """Deterministic modular solve with exact verification; None on failure."""
    m = len(rows)
    n = len(rows[0])
    # clear denominators per row: identical solution set, scaled certificate
    scales = []
    int_rows = []
    for r, bi in zip(rows, b):
        L = lcm(*(x.denominator for x in r), bi.denominator)
        int_rows.append([int(x * L) for x in r] + [int(bi * L)])
        scales.append(L)
    max_abs = max((abs(x) for row in int_rows for x in row), default=0)
    small = max_abs < 2**62
    base = np.array(int_rows, dtype=np.int64) if small else None

    primes = _primes31()
    batch = 4
    used = []  # list of (p, R_p, structure)
    structure = None
    idx = 0
    while idx < len(primes):
        for _ in range(batch):
            if idx >= len(primes):
                break
            p = primes[idx]
            idx += 1
            if small:
                Ab = base % p
            else:
                Ab = np.array([[x % p for x in row] for row in int_rows],
                              dtype=np.int64)
            track = np.concatenate([Ab, np.eye(m, dtype=np.int64)], axis=1)
            piv = _modp_rref(track, p)
            st = tuple(c for c in piv if c <= n)
            if structure is None or st != structure:
                # rank can only drop modulo a bad prime, so the structure with
                # the most pivots is the plausible one; keep the richest
                if structure is None or len(st) > len(structure):
                    structure = st
                    used = [(p, track)]
                # primes showing fewer pivots are discarded as bad
                continue
            used.append((p, track))
        if structure is None or not used:
            continue
        result = _assemble_modular(rows, b, int_rows, scales, used, structure,
                                   n, m, want_nullspace)
        if result is not None:
            return result
    return None


def _combine(used, entry_getter):
    """CRT-combine one entry across primes, then reconstruct a Fraction."""
    r_acc, m_acc = 0, 1
    for p, track in used:
        r_acc, m_acc = _crt_pair(r_acc, m_acc, int(entry_getter(track)) % p, p)
    return _rat_reconstruct(r_acc, m_acc)


def _assemble_modular(rows, b, int_rows, scales, used, structure, n, m,
                      want_nullspace):
    if structure and structure[-1] == n:
        # infeasibility candidate: certificate from the tracking block
        row_idx = len(structure) - 1
        y = []
        for k in range(m):
            val = _combine(used, lambda t, k=k: t[row_idx, n + 1 + k])
            if val is None:
                return None
            y.append(val * scales[k])
        if not _verify_certificate(rows, b, y):
            return None
        d = _dot(y, b)
        if d != 1:
            y = [yi / d for yi in y]
        return Infeasible(y)
    pivots = list(structure)
    x = [_F0] * n
    for i, c in enumerate(pivots):
        val = _combine(used, lambda t, i=i: t[i, n])
        if val is None:
            return None
        x[c] = val
    for row, bi in zip(rows, b):
        if _dot(row, x) != bi:
            return None
    null = []
    if want_nullspace:
        pivset = set(pivots)
        for f in range(n):
            if f in pivset:
                continue
            v = [_F0] * n
            v[f] = _F1
            for i, c in enumerate(pivots):
                val = _combine(used, lambda t, i=i, f=f: t[i, f])
                if val is None:
                    return None
                v[c] = -val
            for row in rows:
                if _dot(row, v) != 0:
                    return None
            null.append(v)
    return LinearSolution(x, null)


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

class Subspace:
    """A subspace of k^n in canonical form: RREF basis plus pivot columns.

    Two Subspace objects are equal exactly when they are the same subspace,
    because the reduced row echelon basis of a row space is unique.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, vectors=()):
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise DimensionError("vector length != ambient dimension")
        if vectors:
            reduced, pivots = rref(vectors)
            basis = tuple(r for r in reduced[: len(pivots)])
        else:
            basis, pivots = tuple(), tuple()
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, *a):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _reduce(self, vec):
        v = list(vec)
        if len(v) != self.ambient:
            raise DimensionError("vector length != ambient dimension")
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if f:
                v = [a - f * bcoef for a, bcoef in zip(v, row)]
        return v

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient != self.ambient:
            raise DimensionError("ambient dimensions differ")
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient == other.ambient
                and self.pivots == other.pivots
                and all(tuple(a) == tuple(bv)
                        for a, bv in zip(self.basis, other.basis)))

    def __hash__(self):
        return hash((self.ambient, self.pivots, self.basis))

    def sum(self, other: "Subspace") -> "Subspace":
        if other.ambient != self.ambient:
            raise DimensionError("ambient dimensions differ")
        return Subspace(self.ambient, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        # Zassenhaus: reduce [[U U], [W 0]]; rows with zero left half carry
        # an intersection basis in their right half
        if other.ambient != self.ambient:
            raise DimensionError("ambient dimensions differ")
        na = self.ambient
        block = [list(u) + list(u) for u in self.basis]
        for w in other.basis:
            block.append(list(w) + [0 * x for x in w])
        if not block:
            return Subspace(na)
        reduced, pivots = rref(block)
        out = []
        for row, c in zip(reduced, pivots):
            if c >= na:
                out.append(row[na:])
        return Subspace(na, out)

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient)
