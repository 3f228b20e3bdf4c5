"""The orthosymplectic Jordan superalgebra Josp(n|2m), built two ways.

``build_josp_table`` writes the structure constants directly from the
delta-formula multiplication table of the basis

    h_ij (i<=j), v_pq, s_pq (p<q), s~_pq (p<q)   even
    u_ip, k_ip                                   odd

with i,j in 1..n and p,q in 1..m.  ``build_josp_matrix`` independently
realizes the same basis as supermatrices fixed by the orthosymplectic
superinvolution of M_{n|2m}, computes all pairwise symmetrized products
X∘Y = (XY + (-1)^{|X||Y|}YX)/2 in the full matrix superalgebra, and
re-expresses them in the basis by an exact linear solve.
``structure_iso_check`` certifies that the two routes agree entry for entry.

Formula normalization: the h, f and f~ families are symmetric in their
indices, and each delta formula below is uniform in all indices only for the
doubled diagonal symbols h'_ii = 2 h_ii (and, on the skew module side,
f'_pp = 2 f_pp, f~'_pp = 2 f~_pp).  The stored basis keeps the undoubled
diagonal (so h_ii are idempotents); ``_in_weight``/``norm_term`` convert
between the two on the way in and out.  The matrix cross-check is the
authority for this convention.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .ratlinalg import HALF, ONE, ZERO, GaussSolver, RatMatrix
from .superalgebra import IdentityReport, Superalgebra


class JIdx(NamedTuple):
    """Basis symbol of Josp(n|2m); kinds h, v, s, st, u, k; 1-based indices."""

    kind: str
    a: int
    b: int


class SkewIdx(NamedTuple):
    """Basis symbol of the skew module; kinds a, at, f, ft, b, c; 1-based."""

    kind: str
    a: int
    b: int


JOSP_EVEN_KINDS = ("h", "v", "s", "st")
JOSP_ODD_KINDS = ("u", "k")
SKEW_EVEN_KINDS = ("a", "at", "f", "ft")
SKEW_ODD_KINDS = ("b", "c")


def josp_dim(n: int, m: int) -> int:
    return ((n + 2 * m) ** 2 + n - 2 * m) // 2


def skew_dim(n: int, m: int) -> int:
    return ((n + 2 * m) ** 2 - n + 2 * m) // 2


def josp_basis(n: int, m: int) -> list:
    basis = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            basis.append(JIdx("h", i, j))
    for p in range(1, m + 1):
        for q in range(1, m + 1):
            basis.append(JIdx("v", p, q))
    for p in range(1, m + 1):
        for q in range(p + 1, m + 1):
            basis.append(JIdx("s", p, q))
    for p in range(1, m + 1):
        for q in range(p + 1, m + 1):
            basis.append(JIdx("st", p, q))
    for i in range(1, n + 1):
        for p in range(1, m + 1):
            basis.append(JIdx("u", i, p))
    for i in range(1, n + 1):
        for p in range(1, m + 1):
            basis.append(JIdx("k", i, p))
    return basis


def skew_basis(n: int, m: int) -> list:
    basis = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            basis.append(SkewIdx("a", i, j))
    for p in range(1, m + 1):
        for q in range(1, m + 1):
            basis.append(SkewIdx("at", p, q))
    for p in range(1, m + 1):
        for q in range(p, m + 1):
            basis.append(SkewIdx("f", p, q))
    for p in range(1, m + 1):
        for q in range(p, m + 1):
            basis.append(SkewIdx("ft", p, q))
    for i in range(1, n + 1):
        for p in range(1, m + 1):
            basis.append(SkewIdx("b", i, p))
    for i in range(1, n + 1):
        for p in range(1, m + 1):
            basis.append(SkewIdx("c", i, p))
    return basis


def index_label(idx) -> str:
    return f"{idx.kind}{idx.a}{idx.b}"


def index_parity(idx) -> int:
    return 1 if idx.kind in ("u", "k", "b", "c") else 0


def _in_weight(idx) -> Fraction:
    # stored diagonal h/f/ft are half the doubled formula symbols
    if idx.kind in ("h", "f", "ft") and idx.a == idx.b:
        return HALF
    return ONE


def norm_term(cls, kind: str, a: int, b: int, coeff: Fraction):
    """Rewrite a formula symbol into the stored representative with weight.

    h, f, ft: symmetric, diagonal doubled in formulas; s, st, a: alternating
    with zero diagonal; v, at, u, k, b, c: stored for all index pairs.
    """
    if kind in ("h", "f", "ft"):
        if a == b:
            return cls(kind, a, a), 2 * coeff
        if a > b:
            a, b = b, a
        return cls(kind, a, b), coeff
    if kind in ("s", "st", "a"):
        if a == b:
            return None, ZERO
        if a > b:
            return cls(kind, b, a), -coeff
        return cls(kind, a, b), coeff
    return cls(kind, a, b), coeff


# -- the multiplication table of Josp(n|2m) ---------------------------------
# Each rule gives x∘y for one ordered kind pair in doubled-diagonal symbols;
# the missing order follows from graded commutativity.


def _hh(i, j, k, l):
    out = []
    if j == k:
        out.append(("h", i, l, HALF))
    if l == i:
        out.append(("h", k, j, HALF))
    if j == l:
        out.append(("h", i, k, HALF))
    if i == k:
        out.append(("h", j, l, HALF))
    return out


def _vv(p, q, r, t):
    out = []
    if q == r:
        out.append(("v", p, t, HALF))
    if p == t:
        out.append(("v", r, q, HALF))
    return out


def _s_st(p, q, r, t):
    out = []
    if q == r:
        out.append(("v", p, t, HALF))
    if p == t:
        out.append(("v", q, r, HALF))
    if q == t:
        out.append(("v", p, r, -HALF))
    if p == r:
        out.append(("v", q, t, -HALF))
    return out


def _vs(p, q, r, t):
    out = []
    if q == r:
        out.append(("s", p, t, HALF))
    if t == q:
        out.append(("s", r, p, HALF))
    return out


def _vst(p, q, r, t):
    out = []
    if p == r:
        out.append(("st", q, t, HALF))
    if p == t:
        out.append(("st", r, q, HALF))
    return out


def _uh(k_, r, i, j):
    out = []
    if j == k_:
        out.append(("u", i, r, HALF))
    if i == k_:
        out.append(("u", j, r, HALF))
    return out


def _kh(l, p, i, j):
    out = []
    if j == l:
        out.append(("k", i, p, HALF))
    if i == l:
        out.append(("k", j, p, HALF))
    return out


def _uv(k_, r, p, q):
    return [("u", k_, q, HALF)] if r == p else []


def _kv(l, r, p, q):
    return [("k", l, p, HALF)] if r == q else []


def _us(i, r, p, q):
    out = []
    if r == p:
        out.append(("k", i, q, HALF))
    if r == q:
        out.append(("k", i, p, -HALF))
    return out


def _kst(i, r, p, q):
    out = []
    if r == p:
        out.append(("u", i, q, HALF))
    if r == q:
        out.append(("u", i, p, -HALF))
    return out


def _uu(i, p, j, q):
    return [("st", p, q, HALF)] if i == j else []


def _kk(i, p, j, q):
    return [("s", q, p, HALF)] if i == j else []


def _uk(i, p, j, q):
    out = []
    if i == j:
        out.append(("v", q, p, HALF))
    if p == q:
        out.append(("h", i, j, -HALF))
    return out


_JOSP_RULES = {
    ("h", "h"): _hh,
    ("v", "v"): _vv,
    ("s", "st"): _s_st,
    ("v", "s"): _vs,
    ("v", "st"): _vst,
    ("u", "h"): _uh,
    ("k", "h"): _kh,
    ("u", "v"): _uv,
    ("k", "v"): _kv,
    ("u", "s"): _us,
    ("k", "st"): _kst,
    ("u", "u"): _uu,
    ("k", "k"): _kk,
    ("u", "k"): _uk,
}


def josp_product_terms(x: JIdx, y: JIdx) -> list:
    """x∘y as a list of (JIdx, coeff) in the stored basis normalization."""
    weight = _in_weight(x) * _in_weight(y)
    rule = _JOSP_RULES.get((x.kind, y.kind))
    if rule is not None:
        raw = rule(x.a, x.b, y.a, y.b)
    else:
        rule = _JOSP_RULES.get((y.kind, x.kind))
        if rule is None:
            return []
        swap_sign = -1 if index_parity(x) and index_parity(y) else 1
        raw = [(kind, a, b, swap_sign * c)
               for kind, a, b, c in rule(y.a, y.b, x.a, x.b)]
    out = []
    for kind, a, b, c in raw:
        idx, w = norm_term(JIdx, kind, a, b, c * weight)
        if idx is not None and w != 0:
            out.append((idx, w))
    return out


def build_josp_table(n: int, m: int) -> Superalgebra:
    """Josp(n|2m) straight from the multiplication table.

    Unit: sum of the h_ii and v_pp.  The even·even and even·odd products are
    symmetric, the odd·odd products skew, which fixes the mirrored entries.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if m < 0:
        raise ValueError("need m >= 0")
    basis = josp_basis(n, m)
    pos = {idx: t for t, idx in enumerate(basis)}
    dim = len(basis)
    parity = [index_parity(idx) for idx in basis]
    products = {}
    for ti in range(dim):
        for tj in range(ti, dim):
            terms = josp_product_terms(basis[ti], basis[tj])
            if not terms:
                continue
            row = [(pos[idx], c) for idx, c in terms]
            products[(ti, tj)] = row
            if tj != ti:
                sign = -1 if parity[ti] and parity[tj] else 1
                products[(tj, ti)] = [(k, sign * c) for k, c in row]
    unit = [ZERO] * dim
    for i in range(1, n + 1):
        unit[pos[JIdx("h", i, i)]] = ONE
    for p in range(1, m + 1):
        unit[pos[JIdx("v", p, p)]] = ONE
    alg = Superalgebra(
        name=f"Josp({n}|{2*m})[table]",
        parity=parity,
        basis_labels=[index_label(idx) for idx in basis],
        products=products,
        unit=unit,
    )
    alg.josp_params = (n, m)
    return alg


# -- matrix realization ------------------------------------------------------


def matrix_parity(n: int, m: int, r: int, c: int) -> int:
    """Block parity of the (r, c) matrix unit in the (n | 2m) split; 0-based."""
    return 0 if (r < n) == (c < n) else 1


def _unit_mat(size: int, r: int, c: int) -> RatMatrix:
    entries = [ZERO] * (size * size)
    entries[r * size + c] = ONE
    return RatMatrix(size, size, tuple(entries))


def josp_index_matrix(idx: JIdx, n: int, m: int) -> RatMatrix:
    """Matrix realization of a Josp basis symbol inside M_{n+2m}.

    With 1-based block offsets: rows/cols 1..n, n+1..n+m, n+m+1..n+2m.
    """
    size = n + 2 * m
    E = lambda r, c: _unit_mat(size, r - 1, c - 1)
    kind, a, b = idx
    if kind == "h":
        return E(a, b) if a == b else E(a, b).add(E(b, a))
    if kind == "v":
        return E(n + a, n + b).add(E(n + m + b, n + m + a))
    if kind == "s":
        return E(n + a, n + m + b).sub(E(n + b, n + m + a))
    if kind == "st":
        return E(n + m + a, n + b).sub(E(n + m + b, n + a))
    if kind == "u":
        return E(a, n + b).add(E(n + m + b, a))
    if kind == "k":
        return E(a, n + m + b).sub(E(n + b, a))
    raise ValueError(f"unknown kind {kind!r}")


def skew_index_matrix(idx: SkewIdx, n: int, m: int) -> RatMatrix:
    """Matrix realization of a skew-module basis symbol inside M_{n+2m}."""
    size = n + 2 * m
    E = lambda r, c: _unit_mat(size, r - 1, c - 1)
    kind, a, b = idx
    if kind == "a":
        return E(a, b).sub(E(b, a))
    if kind == "at":
        return E(n + a, n + b).sub(E(n + m + b, n + m + a))
    if kind == "f":
        # stored diagonal is the single unit, like h_ii
        if a == b:
            return E(n + a, n + m + a)
        return E(n + a, n + m + b).add(E(n + b, n + m + a))
    if kind == "ft":
        if a == b:
            return E(n + m + a, n + a)
        return E(n + m + a, n + b).add(E(n + m + b, n + a))
    if kind == "b":
        return E(a, n + b).sub(E(n + m + b, a))
    if kind == "c":
        return E(a, n + m + b).add(E(n + b, a))
    raise ValueError(f"unknown kind {kind!r}")


class SuperMatrix:
    """Element of M_{n|2m}: an (n+2m) square matrix with block grading."""

    def __init__(self, n: int, m: int, mat: RatMatrix):
        size = n + 2 * m
        if mat.rows != size or mat.cols != size:
            raise ValueError(
                f"matrix is {mat.rows}x{mat.cols}, expected {size}x{size}")
        self.n = n
        self.m = m
        self.mat = mat

    def homogeneous_parity(self):
        par = None
        for r in range(self.mat.rows):
            for c in range(self.mat.cols):
                if self.mat.entry(r, c) != 0:
                    p = matrix_parity(self.n, self.m, r, c)
                    if par is None:
                        par = p
                    elif par != p:
                        return None
        return par


def _u_matrix(m: int, invert: bool = False) -> RatMatrix:
    # U = [[0, -I_m], [I_m, 0]]; U^{-1} = -U
    entries = [[ZERO] * (2 * m) for _ in range(2 * m)]
    for p in range(m):
        entries[p][m + p] = ONE if invert else -ONE
        entries[m + p][p] = -ONE if invert else ONE
    return RatMatrix.from_rows(entries)


def osp_matrix(mat: RatMatrix, n: int, m: int,
               u_override: RatMatrix | None = None) -> RatMatrix:
    """Orthosymplectic superinvolution of an (n+2m) square matrix.

    Image of [[a, b], [c, d]] is diag(I_n, U) · [[a^t, -c^t], [b^t, d^t]] ·
    diag(I_n, U^{-1}) with U the standard symplectic form on the 2m block.
    ``u_override`` substitutes another U (test hook for broken involutions).
    """
    size = n + 2 * m
    if mat.rows != size or mat.cols != size:
        raise ValueError("matrix does not have the (n|2m) block shape")
    rows = mat.row_lists()
    mid = [[ZERO] * size for _ in range(size)]
    for r in range(size):
        for c in range(size):
            v = rows[r][c]
            if v == 0:
                continue
            if r < n and c < n:
                mid[c][r] = v                   # a^t
            elif r < n <= c:
                mid[c][r] = v                   # b^t goes to lower-left
            elif c < n <= r:
                mid[c][r] = -v                  # -c^t goes to upper-right
            else:
                mid[c][r] = v                   # d^t
    midm = RatMatrix.from_rows(mid)
    if m == 0:
        return midm
    if u_override is not None:
        u = u_override
        solver = GaussSolver(u)
        inv_cols = []
        for j in range(2 * m):
            rhs = [ZERO] * (2 * m)
            rhs[j] = ONE
            col = solver.solve(rhs)
            if col is None:
                raise ValueError("override U is singular")
            inv_cols.append(col)
        uinv = RatMatrix.from_rows(
            [[inv_cols[j][i] for j in range(2 * m)] for i in range(2 * m)])
    else:
        u = _u_matrix(m)
        uinv = _u_matrix(m, invert=True)
    left = _block_diag(RatMatrix.identity(n), u)
    right = _block_diag(RatMatrix.identity(n), uinv)
    return left.matmul(midm).matmul(right)


def _block_diag(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    size = a.rows + b.rows
    entries = [[ZERO] * size for _ in range(size)]
    for r in range(a.rows):
        for c in range(a.cols):
            entries[r][c] = a.entry(r, c)
    for r in range(b.rows):
        for c in range(b.cols):
            entries[a.rows + r][a.cols + c] = b.entry(r, c)
    return RatMatrix.from_rows(entries)


def osp(X: SuperMatrix) -> SuperMatrix:
    return SuperMatrix(X.n, X.m, osp_matrix(X.mat, X.n, X.m))


def osp_symmetric_basis(n: int, m: int) -> list:
    """The Josp basis as matrices; every member satisfies osp(X) = X."""
    return [(idx, josp_index_matrix(idx, n, m)) for idx in josp_basis(n, m)]


def _circ(X: RatMatrix, Y: RatMatrix, px: int, py: int) -> RatMatrix:
    XY = X.matmul(Y)
    YX = Y.matmul(X)
    if px and py:
        return XY.sub(YX).scale(HALF)
    return XY.add(YX).scale(HALF)


def build_josp_matrix(n: int, m: int) -> Superalgebra:
    """Josp(n|2m) computed inside M_{n+2m} and re-expressed in the basis.

    Any product that failed to land in the span of the basis would be an
    internal inconsistency; that raises RuntimeError and must never happen.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if m < 0:
        raise ValueError("need m >= 0")
    basis = josp_basis(n, m)
    dim = len(basis)
    size = n + 2 * m
    mats = [josp_index_matrix(idx, n, m) for idx in basis]
    parity = [index_parity(idx) for idx in basis]
    # columns of B are the vectorized basis matrices
    B = RatMatrix(size * size, dim, tuple(
        mats[t].entries[e] for e in range(size * size) for t in range(dim)))
    solver = GaussSolver(B)
    products = {}
    for ti in range(dim):
        for tj in range(ti, dim):
            prod = _circ(mats[ti], mats[tj], parity[ti], parity[tj])
            coeffs = solver.solve(prod.entries)
            if coeffs is None:
                raise RuntimeError(
                    f"product {basis[ti]}∘{basis[tj]} left the basis span")
            row = [(k, c) for k, c in enumerate(coeffs) if c != 0]
            if not row:
                continue
            products[(ti, tj)] = row
            if tj != ti:
                sign = -1 if parity[ti] and parity[tj] else 1
                products[(tj, ti)] = [(k, sign * c) for k, c in row]
    unit = [ZERO] * dim
    pos = {idx: t for t, idx in enumerate(basis)}
    for i in range(1, n + 1):
        unit[pos[JIdx("h", i, i)]] = ONE
    for p in range(1, m + 1):
        unit[pos[JIdx("v", p, p)]] = ONE
    alg = Superalgebra(
        name=f"Josp({n}|{2*m})[matrix]",
        parity=parity,
        basis_labels=[index_label(idx) for idx in basis],
        products=products,
        unit=unit,
    )
    alg.josp_params = (n, m)
    return alg


def structure_iso_check(A: Superalgebra, B: Superalgebra,
                        basis_map: Sequence[int]) -> bool:
    """True iff the structure constants agree entry-by-entry under the map.

    basis_map sends A's index i to B's index basis_map[i]; it must be a
    parity-preserving bijection.
    """
    if A.dim != B.dim:
        raise ValueError("dimension mismatch")
    bm = list(basis_map)
    if sorted(bm) != list(range(A.dim)):
        raise ValueError("basis_map is not a bijection")
    if any(A.parity[i] != B.parity[bm[i]] for i in range(A.dim)):
        raise ValueError("basis_map does not preserve parity")
    for i in range(A.dim):
        for j in range(A.dim):
            mapped = sorted((bm[k], c) for k, c in A.product_row(i, j))
            if tuple(mapped) != B.product_row(bm[i], bm[j]):
                return False
    return True


def superinvolution_laws(n: int, m: int,
                         u_override: RatMatrix | None = None) -> IdentityReport:
    """Check osp(osp(X)) = X and the signed antihomomorphism law on all
    matrix-unit pairs of M_{n|2m}."""
    size = n + 2 * m
    units = [(r, c, _unit_mat(size, r, c))
             for r in range(size) for c in range(size)]
    violations = []
    im = {}
    for r, c, e in units:
        ie = osp_matrix(e, n, m, u_override)
        im[(r, c)] = ie
        if not osp_matrix(ie, n, m, u_override).sub(e).is_zero():
            violations.append((("involution", r, c), None))
    for r1, c1, e1 in units:
        p1 = matrix_parity(n, m, r1, c1)
        for r2, c2, e2 in units:
            p2 = matrix_parity(n, m, r2, c2)
            lhs = osp_matrix(e1.matmul(e2), n, m, u_override)
            rhs = im[(r2, c2)].matmul(im[(r1, c1)])
            if p1 and p2:
                rhs = rhs.scale(-1)
            if not lhs.sub(rhs).is_zero():
                violations.append((("antihom", r1, c1, r2, c2), None))
    return IdentityReport.from_violations(violations)


def josp_params_from_labels(A: Superalgebra) -> tuple:
    """Recover (n, m) from the canonical basis labels of a Josp algebra."""
    params = getattr(A, "josp_params", None)
    if params is not None:
        return params
    n = 0
    m = 0
    for label in A.basis_labels:
        if label.startswith(("h", "u", "k")) and label[1:].isdigit():
            n = max(n, int(label[1]))
        if label.startswith("v") and label[1:].isdigit():
            m = max(m, int(label[1]))
        if label.startswith(("u", "k")) and label[1:].isdigit():
            m = max(m, int(label[2]))
    if josp_dim(n, m) != A.dim:
        raise ValueError("basis labels do not look like a Josp algebra")
    return (n, m)
