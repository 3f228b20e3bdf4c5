"""Exact rational linear algebra with solution certificates.

Scalars are ``fractions.Fraction`` throughout; nothing in this package ever
touches floating point.  Systems are reduced by Gaussian elimination with
first-nonzero pivoting in fixed row order, so output is canonical: solving
the same system twice gives identical results, entry for entry.

``solve_linear`` never merely fails.  An unsolvable system comes back with a
witness row vector ``w`` satisfying ``w·A = 0`` and ``w·b != 0``, which any
caller can re-check independently of this module.

All values are immutable after construction and all functions are pure, so
everything here is safe to use from concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)

SOLVED = "solved"
INCONSISTENT = "inconsistent"


def rat(value, den=None) -> Fraction:
    """Coerce to a Fraction; accepts ints, strings like ``-3/4``, or a pair."""
    if den is None:
        return Fraction(value)
    return Fraction(value, den)


def format_rat(x: Fraction) -> str:
    """Serialize in lowest terms with positive denominator: ``p/q`` or ``p``."""
    return str(Fraction(x))


def parse_rat(s: str) -> Fraction:
    return Fraction(s)


def vec(values: Iterable) -> tuple:
    return tuple(Fraction(v) for v in values)


def zero_vec(n: int) -> tuple:
    return (ZERO,) * n


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, u: Sequence) -> tuple:
    c = Fraction(c)
    return tuple(c * a for a in u)


def vec_dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), ZERO)


def vec_is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


@dataclass(frozen=True)
class RatMatrix:
    """Dense rational matrix, entries row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"entry count {len(self.entries)} != {self.rows}x{self.cols}")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "RatMatrix":
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        entries = tuple(Fraction(x) for r in rows for x in r)
        return RatMatrix(nr, nc, entries)

    @staticmethod
    def zeros(rows: int, cols: int) -> "RatMatrix":
        return RatMatrix(rows, cols, (ZERO,) * (rows * cols))

    @staticmethod
    def identity(n: int) -> "RatMatrix":
        return RatMatrix(n, n, tuple(
            ONE if i == j else ZERO for i in range(n) for j in range(n)))

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def row_lists(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        ncols = self.cols
        return RatMatrix(ncols, self.rows, tuple(
            self.entries[i * ncols + j]
            for j in range(ncols) for i in range(self.rows)))

    def mul_vec(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(vec_dot(self.row(i), v) for i in range(self.rows))

    def matmul(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimension mismatch")
        cols = [other.column(j) for j in range(other.cols)]
        entries = tuple(
            vec_dot(self.row(i), cols[j])
            for i in range(self.rows) for j in range(other.cols))
        return RatMatrix(self.rows, other.cols, entries)

    def scale(self, c) -> "RatMatrix":
        c = Fraction(c)
        return RatMatrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def add(self, other: "RatMatrix") -> "RatMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RatMatrix(self.rows, self.cols, tuple(
            a + b for a, b in zip(self.entries, other.entries)))

    def sub(self, other: "RatMatrix") -> "RatMatrix":
        return self.add(other.scale(-1))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of an exact solve: a full solution set, or an infeasibility proof.

    kind == "solved":        A·particular = b, and particular + span(nullspace_basis)
                             is the complete solution set.
    kind == "inconsistent":  witness·A = 0 and witness·b != 0 (checked exactly).
    """

    kind: str
    particular: tuple | None = None
    nullspace_basis: tuple = ()
    witness: tuple | None = None

    @property
    def is_solved(self) -> bool:
        return self.kind == SOLVED


def _sparse_rows(A: RatMatrix) -> list:
    rows = []
    for i in range(A.rows):
        base = i * A.cols
        rows.append({j: A.entries[base + j]
                     for j in range(A.cols) if A.entries[base + j] != 0})
    return rows


class _Reduction:
    """Reduced row-echelon form of [A | b], tracking the row transform.

    Pivot rule: columns left to right, first remaining row (original order)
    with a nonzero entry.  This makes every downstream answer canonical.
    """

    def __init__(self, a_rows: list, b_vals: list | None, ncols: int,
                 track: bool = True):
        n = len(a_rows)
        self.n_rows = n
        self.ncols = ncols
        data = []
        for i, d in enumerate(a_rows):
            b = b_vals[i] if b_vals is not None else ZERO
            w = {i: ONE} if track else None
            data.append([dict(d), b, w])
        pivots = []
        used = [False] * n
        for col in range(ncols):
            pr = -1
            for ri in range(n):
                if not used[ri] and col in data[ri][0]:
                    pr = ri
                    break
            if pr < 0:
                continue
            used[pr] = True
            d, b, w = data[pr]
            inv = ONE / d[col]
            if inv != 1:
                for c in d:
                    d[c] *= inv
                data[pr][1] = b * inv
                if w is not None:
                    for k in w:
                        w[k] *= inv
            for ri in range(n):
                if ri == pr:
                    continue
                od, ob, ow = data[ri]
                f = od.get(col)
                if f is None:
                    continue
                for c, v in d.items():
                    nv = od.get(c, ZERO) - f * v
                    if nv == 0:
                        od.pop(c, None)
                    else:
                        od[c] = nv
                data[ri][1] = ob - f * data[pr][1]
                if ow is not None:
                    for k, v in data[pr][2].items():
                        nv = ow.get(k, ZERO) - f * v
                        if nv == 0:
                            ow.pop(k, None)
                        else:
                            ow[k] = nv
            pivots.append((col, pr))
        self.data = data
        self.pivots = pivots
        self.used = used
        self.pivot_cols = [c for c, _ in pivots]

    def rank(self) -> int:
        return len(self.pivots)

    def inconsistent_row(self) -> int:
        """Index of the first zero row of A with nonzero b, or -1."""
        for ri in range(self.n_rows):
            if not self.used[ri] and self.data[ri][1] != 0:
                return ri
        return -1

    def witness_for(self, ri: int) -> tuple:
        w = self.data[ri][2]
        return tuple(w.get(i, ZERO) for i in range(self.n_rows))

    def particular(self) -> tuple:
        x = [ZERO] * self.ncols
        for col, pr in self.pivots:
            x[col] = self.data[pr][1]
        return tuple(x)

    def nullspace_basis(self) -> tuple:
        pivot_set = set(self.pivot_cols)
        basis = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            v = [ZERO] * self.ncols
            v[free] = ONE
            for col, pr in self.pivots:
                coeff = self.data[pr][0].get(free)
                if coeff is not None:
                    v[col] = -coeff
            basis.append(tuple(v))
        return tuple(basis)


def solve_linear(A: RatMatrix, b: Sequence) -> LinearSolution:
    """Solve A·x = b exactly, or certify that no solution exists.

    Returns the canonical particular solution (free variables zero) together
    with the canonical nullspace basis, or an inconsistency witness.
    """
    b = vec(b)
    if len(b) != A.rows:
        raise ValueError(f"b has length {len(b)}, expected {A.rows}")
    red = _Reduction(_sparse_rows(A), list(b), A.cols, track=True)
    bad = red.inconsistent_row()
    if bad >= 0:
        return LinearSolution(INCONSISTENT, witness=red.witness_for(bad))
    return LinearSolution(SOLVED, particular=red.particular(),
                          nullspace_basis=red.nullspace_basis())


def nullspace(A: RatMatrix) -> list:
    """Canonical basis of {v : A·v = 0}: each free variable set to 1 in turn."""
    red = _Reduction(_sparse_rows(A), None, A.cols, track=False)
    return list(red.nullspace_basis())


def rank(A: RatMatrix) -> int:
    return _Reduction(_sparse_rows(A), None, A.cols, track=False).rank()


class GaussSolver:
    """Factor a matrix once, then solve A·x = rhs for many right-hand sides.

    The stored row transform gives each solve in O(nnz) time; consistency is
    checked through the recorded left-nullspace combinations, so a ``None``
    return is an exact "no solution", not an approximation.
    """

    def __init__(self, A: RatMatrix):
        self.A = A
        self.red = _Reduction(_sparse_rows(A), None, A.cols, track=True)

    @property
    def rank(self) -> int:
        return self.red.rank()

    def solve(self, rhs: Sequence) -> tuple | None:
        if len(rhs) != self.A.rows:
            raise ValueError("rhs length mismatch")
        red = self.red
        for ri in range(red.n_rows):
            if red.used[ri]:
                continue
            s = sum((c * rhs[k] for k, c in red.data[ri][2].items()), ZERO)
            if s != 0:
                return None
        x = [ZERO] * self.A.cols
        for col, pr in red.pivots:
            x[col] = sum((c * rhs[k] for k, c in red.data[pr][2].items()), ZERO)
        return tuple(x)
