"""Graded bimodules over a superalgebra, stored by their left action.

The right action never needs storing: inside the split null extension the
product is graded-commutative, so m·a = (-1)^{|a||m|} a·m.  A module here is
"Jordan" exactly when its split null extension passes the two identity
checks, and that is how validity is certified in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import josp as _josp
from .josp import JIdx, SkewIdx, build_josp_table, index_label, index_parity
from .ratlinalg import HALF, ONE, ZERO, RatMatrix, nullspace, vec
from .superalgebra import Element, Superalgebra


class Superbimodule:
    """Module over a Superalgebra given by the left action tensor.

    action maps (algebra index i, module index j) to the sparse expansion of
    a_i·m_j in the module basis.  Grading is enforced: a nonzero coefficient
    on m_k needs parity_M[k] = parity_A[i] + parity_M[j] mod 2.
    """

    def __init__(self, algebra: Superalgebra, parity: Sequence[int],
                 basis_labels: Sequence[str], action, name: str = ""):
        self.algebra = algebra
        self.parity = tuple(int(p) for p in parity)
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError("parities must be 0 or 1")
        self.dim = len(self.parity)
        self.basis_labels = tuple(str(s) for s in basis_labels)
        if len(self.basis_labels) != self.dim:
            raise ValueError("label count != dimension")
        self.name = name or f"module over {algebra.name}"
        rows = [()] * (algebra.dim * self.dim)
        for (i, j), terms in action.items():
            if not (0 <= i < algebra.dim and 0 <= j < self.dim):
                raise ValueError(f"action index ({i},{j}) out of range")
            merged = {}
            for k, c in terms:
                c = Fraction(c)
                if c == 0:
                    continue
                if not 0 <= k < self.dim:
                    raise ValueError(f"action target {k} out of range")
                merged[k] = merged.get(k, ZERO) + c
            row = tuple(sorted((k, v) for k, v in merged.items() if v != 0))
            if row:
                rows[i * self.dim + j] = row
        self._rows = tuple(rows)
        self._check_grading()

    def _check_grading(self):
        pa = self.algebra.parity
        pm = self.parity
        for i in range(self.algebra.dim):
            for j in range(self.dim):
                want = (pa[i] + pm[j]) & 1
                for k, _ in self._rows[i * self.dim + j]:
                    if pm[k] != want:
                        raise ValueError(
                            f"module grading violated at l[{i}][{j}][{k}]")

    def action_row(self, i: int, j: int) -> tuple:
        return self._rows[i * self.dim + j]

    def act(self, x: Element, mcoords: Sequence) -> tuple:
        """Left action of an algebra element on module coordinates."""
        if x.algebra is not self.algebra:
            raise ValueError("element belongs to a different algebra")
        out = [ZERO] * self.dim
        for i, xi in enumerate(x.coords):
            if xi == 0:
                continue
            for j, mj in enumerate(mcoords):
                if mj == 0:
                    continue
                w = xi * mj
                for k, c in self._rows[i * self.dim + j]:
                    out[k] += w * c
        return tuple(out)

    def action_matrix(self, i: int) -> RatMatrix:
        """Matrix of m -> a_i·m; entry (k, j) is (a_i·m_j)_k."""
        entries = [[ZERO] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            for k, c in self._rows[i * self.dim + j]:
                entries[k][j] = c
        return RatMatrix.from_rows(entries)

    def even_indices(self) -> tuple:
        return tuple(j for j, p in enumerate(self.parity) if p == 0)

    def odd_indices(self) -> tuple:
        return tuple(j for j, p in enumerate(self.parity) if p == 1)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Superbimodule):
            return NotImplemented
        return (self.algebra == other.algebra and self.parity == other.parity
                and self.basis_labels == other.basis_labels
                and self._rows == other._rows)

    def __repr__(self):
        return f"Superbimodule({self.name!r}, dim={self.dim})"


def regular_bimodule(A: Superalgebra) -> Superbimodule:
    """A acting on itself by its own multiplication."""
    action = {}
    for i in range(A.dim):
        for j in range(A.dim):
            row = A.product_row(i, j)
            if row:
                action[(i, j)] = list(row)
    return Superbimodule(A, A.parity, A.basis_labels, action,
                         name=f"Reg({A.name})")


# -- the skew module over Josp(n|2m) -----------------------------------------
# Left action of the algebra symbols on the module symbols a, at, f, ft, b, c,
# in the same doubled-diagonal normalization as the algebra table (josp.py).


def _h_a(k, l, i, j):
    out = []
    if j == k:
        out.append(("a", i, l, HALF))
    if i == l:
        out.append(("a", k, j, HALF))
    if j == l:
        out.append(("a", i, k, HALF))
    if i == k:
        out.append(("a", l, j, HALF))
    return out


def _v_at(p, q, r, t):
    out = []
    if q == r:
        out.append(("at", p, t, HALF))
    if p == t:
        out.append(("at", r, q, HALF))
    return out


def _s_ft(p, q, r, t):
    out = []
    if q == r:
        out.append(("at", p, t, HALF))
    if q == t:
        out.append(("at", p, r, HALF))
    if p == r:
        out.append(("at", q, t, -HALF))
    if p == t:
        out.append(("at", q, r, -HALF))
    return out


def _st_f(p, q, r, t):
    out = []
    if p == r:
        out.append(("at", t, q, HALF))
    if p == t:
        out.append(("at", r, q, HALF))
    if q == r:
        out.append(("at", t, p, -HALF))
    if q == t:
        out.append(("at", r, p, -HALF))
    return out


def _s_at(p, q, r, t):
    out = []
    if p == t:
        out.append(("f", q, r, HALF))
    if q == t:
        out.append(("f", p, r, -HALF))
    return out


def _st_at(p, q, r, t):
    out = []
    if q == r:
        out.append(("ft", p, t, HALF))
    if p == r:
        out.append(("ft", q, t, -HALF))
    return out


def _v_f(p, q, r, t):
    out = []
    if q == r:
        out.append(("f", p, t, HALF))
    if t == q:
        out.append(("f", p, r, HALF))
    return out


def _v_ft(p, q, r, t):
    out = []
    if p == r:
        out.append(("ft", q, t, HALF))
    if p == t:
        out.append(("ft", q, r, HALF))
    return out


def _h_b(i, j, k, r):
    out = []
    if j == k:
        out.append(("b", i, r, HALF))
    if i == k:
        out.append(("b", j, r, HALF))
    return out


def _v_b(p, q, k, r):
    return [("b", k, q, HALF)] if r == p else []


def _h_c(i, j, k, r):
    out = []
    if j == k:
        out.append(("c", i, r, HALF))
    if i == k:
        out.append(("c", j, r, HALF))
    return out


def _v_c(p, q, k, r):
    return [("c", k, p, HALF)] if r == q else []


def _s_b(p, q, i, r):
    out = []
    if p == r:
        out.append(("c", i, q, HALF))
    if q == r:
        out.append(("c", i, p, -HALF))
    return out


def _st_c(p, q, i, r):
    out = []
    if r == p:
        out.append(("b", i, q, HALF))
    if q == r:
        out.append(("b", i, p, -HALF))
    return out


def _u_a(i, p, r, t):
    out = []
    if i == t:
        out.append(("b", r, p, HALF))
    if i == r:
        out.append(("b", t, p, -HALF))
    return out


def _u_at(i, p, r, t):
    return [("b", i, t, HALF)] if p == r else []


def _k_a(i, p, r, t):
    out = []
    if i == t:
        out.append(("c", r, p, HALF))
    if i == r:
        out.append(("c", t, p, -HALF))
    return out


def _k_at(i, p, r, t):
    return [("c", i, r, -HALF)] if p == t else []


def _u_f(i, p, r, t):
    out = []
    if p == r:
        out.append(("c", i, t, HALF))
    if p == t:
        out.append(("c", i, r, HALF))
    return out


def _k_ft(i, p, r, t):
    out = []
    if p == r:
        out.append(("b", i, t, HALF))
    if p == t:
        out.append(("b", i, r, HALF))
    return out


def _u_b(i, p, j, q):
    return [("ft", p, q, HALF)] if i == j else []


def _u_c(i, p, j, q):
    out = []
    if p == q:
        out.append(("a", i, j, HALF))
    if i == j:
        out.append(("at", q, p, -HALF))
    return out


def _k_c(i, p, j, q):
    return [("f", p, q, -HALF)] if i == j else []


def _k_b(i, p, j, q):
    out = []
    if p == q:
        out.append(("a", j, i, HALF))
    if i == j:
        out.append(("at", p, q, -HALF))
    return out


_SKEW_RULES = {
    ("h", "a"): _h_a,
    ("v", "at"): _v_at,
    ("s", "ft"): _s_ft,
    ("st", "f"): _st_f,
    ("s", "at"): _s_at,
    ("st", "at"): _st_at,
    ("v", "f"): _v_f,
    ("v", "ft"): _v_ft,
    ("h", "b"): _h_b,
    ("v", "b"): _v_b,
    ("h", "c"): _h_c,
    ("v", "c"): _v_c,
    ("s", "b"): _s_b,
    ("st", "c"): _st_c,
    ("u", "a"): _u_a,
    ("u", "at"): _u_at,
    ("k", "a"): _k_a,
    ("k", "at"): _k_at,
    ("u", "f"): _u_f,
    ("k", "ft"): _k_ft,
    ("u", "b"): _u_b,
    ("u", "c"): _u_c,
    ("k", "c"): _k_c,
    ("k", "b"): _k_b,
}


def skew_action_terms(x: JIdx, mdl: SkewIdx) -> list:
    """x acting on a skew-module symbol, in stored normalization."""
    rule = _SKEW_RULES.get((x.kind, mdl.kind))
    if rule is None:
        return []
    weight = _josp._in_weight(x) * _josp._in_weight(mdl)
    out = []
    for kind, a, b, c in rule(x.a, x.b, mdl.a, mdl.b):
        idx, w = _josp.norm_term(SkewIdx, kind, a, b, c * weight)
        if idx is not None and w != 0:
            out.append((idx, w))
    return out


def skew_bimodule(n: int, m: int) -> Superbimodule:
    """The module of osp-skew supermatrices over Josp(n|2m), by its tables."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    algebra = build_josp_table(n, m)
    abasis = _josp.josp_basis(n, m)
    mbasis = _josp.skew_basis(n, m)
    mpos = {idx: t for t, idx in enumerate(mbasis)}
    action = {}
    for i, aidx in enumerate(abasis):
        for j, midx in enumerate(mbasis):
            terms = skew_action_terms(aidx, midx)
            if terms:
                action[(i, j)] = [(mpos[idx], c) for idx, c in terms]
    return Superbimodule(
        algebra,
        parity=[index_parity(idx) for idx in mbasis],
        basis_labels=[index_label(idx) for idx in mbasis],
        action=action,
        name=f"Skew({n}|{2*m})",
    )


def opposite(M: Superbimodule) -> Superbimodule:
    """Parity flip with the action twisted by the sign of the actor."""
    action = {}
    for i in range(M.algebra.dim):
        sign = -1 if M.algebra.parity[i] else 1
        for j in range(M.dim):
            row = M.action_row(i, j)
            if row:
                action[(i, j)] = [(k, sign * c) for k, c in row]
    return Superbimodule(
        M.algebra,
        parity=[1 - p for p in M.parity],
        basis_labels=[f"{s}^op" for s in M.basis_labels],
        action=action,
        name=f"{M.name}^op",
    )


def direct_sum(M1: Superbimodule, M2: Superbimodule) -> Superbimodule:
    if M1.algebra != M2.algebra:
        raise ValueError("modules over different algebras")
    d1 = M1.dim
    action = {}
    for i in range(M1.algebra.dim):
        for j in range(d1):
            row = M1.action_row(i, j)
            if row:
                action[(i, j)] = list(row)
        for j in range(M2.dim):
            row = M2.action_row(i, j)
            if row:
                action[(i, d1 + j)] = [(d1 + k, c) for k, c in row]
    return Superbimodule(
        M1.algebra,
        parity=list(M1.parity) + list(M2.parity),
        basis_labels=[f"{s}(1)" for s in M1.basis_labels]
        + [f"{s}(2)" for s in M2.basis_labels],
        action=action,
        name=f"{M1.name}(+){M2.name}",
    )


def split_null_extension(A: Superalgebra, M: Superbimodule):
    """The algebra A ⊕ M with M·M = 0; returns (extension, module indices).

    The unit of A is kept iff it acts as the identity on M.
    """
    if M.algebra is not A and M.algebra != A:
        raise ValueError("module is not over the given algebra")
    da, dm = A.dim, M.dim
    dim = da + dm
    products = {}
    for i in range(da):
        for j in range(da):
            row = A.product_row(i, j)
            if row:
                products[(i, j)] = list(row)
    for i in range(da):
        for j in range(dm):
            row = M.action_row(i, j)
            if not row:
                continue
            shifted = [(da + k, c) for k, c in row]
            products[(i, da + j)] = shifted
            sign = -1 if A.parity[i] and M.parity[j] else 1
            products[(da + j, i)] = [(k, sign * c) for k, c in shifted]
    unit = None
    if A.unit is not None:
        ue = M.algebra.element(A.unit)
        if all(M.act(ue, _unit_coords(dm, j)) == _unit_coords(dm, j)
               for j in range(dm)):
            unit = tuple(A.unit) + (ZERO,) * dm
    ext = Superalgebra(
        name=f"{A.name} (+) {M.name}",
        parity=list(A.parity) + list(M.parity),
        basis_labels=list(A.basis_labels)
        + [f"{s}'" for s in M.basis_labels],
        products=products,
        unit=unit,
    )
    return ext, tuple(range(da, dim))


def _unit_coords(dim: int, j: int) -> tuple:
    coords = [ZERO] * dim
    coords[j] = ONE
    return tuple(coords)


def hom_space(M1: Superbimodule, M2: Superbimodule,
              parity_shift: int = 0) -> list:
    """Basis of maps φ: M1 -> M2 with φ(a·m) = (-1)^{shift·|a|} a·φ(m).

    φ shifts parity by ``parity_shift``; returned maps are dim2 x dim1
    matrices applying to coordinate columns, in canonical order.
    """
    if M1.algebra is not M2.algebra and M1.algebra != M2.algebra:
        raise ValueError("modules over different algebras")
    if parity_shift not in (0, 1):
        raise ValueError("parity_shift must be 0 or 1")
    A = M1.algebra
    unknowns = [(k2, k1) for k2 in range(M2.dim) for k1 in range(M1.dim)
                if M2.parity[k2] == (M1.parity[k1] + parity_shift) & 1]
    col = {u: c for c, u in enumerate(unknowns)}
    rows = []
    for i in range(A.dim):
        sign = -1 if (parity_shift and A.parity[i]) else 1
        for j in range(M1.dim):
            lrow = dict(M1.action_row(i, j))
            for k2 in range(M2.dim):
                coeffs = {}
                # φ(a_i·m_j)_k2
                for k1, c in lrow.items():
                    u = (k2, k1)
                    if u in col:
                        coeffs[col[u]] = coeffs.get(col[u], ZERO) + c
                # -(±) (a_i·φ(m_j))_k2
                for k2p in range(M2.dim):
                    carr = dict(M2.action_row(i, k2p))
                    c = carr.get(k2)
                    if c is None:
                        continue
                    u = (k2p, j)
                    if u in col:
                        coeffs[col[u]] = coeffs.get(col[u], ZERO) - sign * c
                if coeffs:
                    rows.append(coeffs)
    mat = RatMatrix(len(rows), len(unknowns), tuple(
        row.get(c, ZERO) for row in rows for c in range(len(unknowns))))
    basis = nullspace(mat)
    maps = []
    for v in basis:
        entries = [[ZERO] * M1.dim for _ in range(M2.dim)]
        for cidx, (k2, k1) in enumerate(unknowns):
            entries[k2][k1] = v[cidx]
        maps.append(RatMatrix.from_rows(entries))
    return maps


@dataclass(frozen=True)
class BurnsideResult:
    """kind is "yes", "no" (with an invariant-subspace witness) or "unknown"."""

    kind: str
    witness: tuple | None = None


def _primitive(vec: list) -> list | None:
    """Divide an integer vector by the gcd of its entries; None if zero."""
    from math import gcd

    g = 0
    for x in vec:
        g = gcd(g, x)
        if g == 1:
            return vec
    if g == 0:
        return None
    return [x // g for x in vec]


def _int_rows(entries) -> list | None:
    from math import lcm

    den = 1
    for c in entries:
        den = lcm(den, c.denominator)
    return _primitive([int(c * den) for c in entries])


class _IntSpan:
    """Row space of primitive integer vectors with exact reduction.

    Only the span matters to callers, so every vector is scaled to a
    primitive integer representative; reduction uses cross-multiplication
    and stays in integers throughout.
    """

    _GROWTH_LIMIT = 1 << 128

    def __init__(self, length: int):
        self.length = length
        self.rows = []  # (pivot index, primitive int list), pivot increasing

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: list) -> list | None:
        """Remainder of vec against the span, primitive; None if contained."""
        v = list(vec)
        for pivot, row in self.rows:
            c = v[pivot]
            if c == 0:
                continue
            lead = row[pivot]
            for i in range(self.length):
                v[i] = lead * v[i] - c * row[i]
            if max(map(abs, v)) > self._GROWTH_LIMIT:
                v = _primitive(v)
        return _primitive(v)

    def add(self, vec: list) -> bool:
        rem = self.reduce(vec)
        if rem is None:
            return False
        pivot = next(i for i, x in enumerate(rem) if x != 0)
        self.rows.append((pivot, rem))
        self.rows.sort(key=lambda pr: pr[0])
        return True


def _int_matmul(a: list, b: list, d: int) -> list:
    out = [0] * (d * d)
    for i in range(d):
        arow = a[i * d:(i + 1) * d]
        orow = out
        base = i * d
        for k, av in enumerate(arow):
            if av == 0:
                continue
            brow = b[k * d:(k + 1) * d]
            for j in range(d):
                bv = brow[j]
                if bv:
                    orow[base + j] += av * bv
    return out


def is_irreducible_burnside(M: Superbimodule) -> BurnsideResult:
    """Decide irreducibility where the associative envelope can.

    The span of all action operators, closed under composition and seeded
    with the identity, has dimension (dim M)^2 iff the action is dense; that
    certifies irreducibility over any extension field.  Otherwise a proper
    invariant subspace is searched as a cyclic submodule generated by a
    single basis vector.  Inconclusive cases return "unknown" rather than a
    guess: density is sufficient but not necessary over a non-closed field.
    """
    if M.dim < 1:
        raise ValueError("module must have positive dimension")
    d = M.dim
    full = d * d
    gens = []
    for i in range(M.algebra.dim):
        g = _int_rows(M.action_matrix(i).entries)
        if g is not None:
            gens.append(g)
    ident = [1 if i % (d + 1) == 0 else 0 for i in range(full)]
    span = _IntSpan(full)
    members = []
    queue = [ident] + gens
    while queue and len(span) < full:
        mat = queue.pop()
        if not span.add(mat):
            continue
        members.append(mat)
        for g in gens:
            queue.append(_int_matmul(mat, g, d))
            queue.append(_int_matmul(g, mat, d))
    if len(span) == full:
        return BurnsideResult("yes")
    # look for a proper cyclic submodule
    for j in range(d):
        orbit = _IntSpan(d)
        vectors = []
        for op in members:
            col = [op[k * d + j] for k in range(d)]
            rem = orbit.reduce(col)
            if rem is not None:
                orbit.add(col)
                vectors.append(tuple(Fraction(x) for x in rem))
        if 0 < len(vectors) < d:
            return BurnsideResult("no", witness=tuple(vectors))
    return BurnsideResult("unknown")
