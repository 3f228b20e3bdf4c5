"""Finite-dimensional superalgebras as exact structure-constant tables.

A superalgebra here is a Z2-graded algebra over the rationals: a parity per
basis index plus a tensor c with x_i·x_j = sum_k c[i][j][k] x_k, stored
sparsely.  The two defining identities of the Jordan case — graded
commutativity and the graded degree-4 identity — are decided by exhaustive
scans over basis tuples; both identities are multilinear in homogeneous
arguments, so basis exhaustion is a complete check, and the arithmetic is
exact, so the verdicts carry no tolerance.

Instances are immutable after construction and all operations are pure;
everything is safe to call from concurrent workers.  Violation lists are
produced in lexicographic index order regardless of backend.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _scan
from .ratlinalg import ONE, ZERO, RatMatrix, vec, vec_is_zero


def _normalize_products(products, dim) -> tuple:
    """products: {(i,j): iterable of (k, coeff)} -> flat tuple of sparse rows."""
    rows = [()] * (dim * dim)
    for (i, j), terms in products.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"product index ({i},{j}) out of range")
        merged = {}
        for k, cval in terms:
            if not 0 <= k < dim:
                raise ValueError(f"product target {k} out of range")
            cval = Fraction(cval)
            if cval == 0:
                continue
            merged[k] = merged.get(k, ZERO) + cval
        row = tuple(sorted((k, v) for k, v in merged.items() if v != 0))
        if row:
            rows[i * dim + j] = row
    return tuple(rows)


class Superalgebra:
    """Z2-graded algebra given by rational structure constants.

    products maps an index pair (i, j) to the sparse expansion of x_i·x_j;
    pairs that never appear multiply to zero.  Construction enforces the
    grading constraint (a nonzero coefficient on x_k needs
    parity[k] = parity[i]+parity[j] mod 2) and, when a unit is supplied,
    that it acts as the identity on every basis element.
    """

    def __init__(self, name: str, parity: Sequence[int],
                 basis_labels: Sequence[str], products, unit=None):
        self.name = str(name)
        self.parity = tuple(int(p) for p in parity)
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError("parities must be 0 or 1")
        self.dim = len(self.parity)
        self.basis_labels = tuple(str(s) for s in basis_labels)
        if len(self.basis_labels) != self.dim:
            raise ValueError("label count != dimension")
        if len(set(self.basis_labels)) != self.dim:
            raise ValueError("basis labels must be unique")
        self._rows = _normalize_products(products, self.dim)
        self._label_index = {s: i for i, s in enumerate(self.basis_labels)}
        self._check_grading()
        if unit is not None:
            unit = vec(unit)
            if len(unit) != self.dim:
                raise ValueError("unit vector has wrong length")
            self._check_unit(unit)
        self.unit = unit

    def _check_grading(self):
        dim = self.dim
        par = self.parity
        for i in range(dim):
            for j in range(dim):
                want = (par[i] + par[j]) & 1
                for k, _ in self._rows[i * dim + j]:
                    if par[k] != want:
                        raise ValueError(
                            f"grading violated at c[{i}][{j}][{k}]")

    def _check_unit(self, unit):
        for j in range(self.dim):
            ej = self.basis_element(j)
            left = self.multiply(self.element(unit), ej)
            right = self.multiply(ej, self.element(unit))
            if left.coords != ej.coords or right.coords != ej.coords:
                raise ValueError(f"claimed unit does not fix basis element {j}")

    # -- basic access -------------------------------------------------------

    def product_row(self, i: int, j: int) -> tuple:
        return self._rows[i * self.dim + j]

    def constant(self, i: int, j: int, k: int) -> Fraction:
        for kk, v in self._rows[i * self.dim + j]:
            if kk == k:
                return v
        return ZERO

    def rows_flat(self) -> tuple:
        return self._rows

    def label_index(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise ValueError(f"no basis element labelled {label!r}") from None

    def element(self, coords) -> "Element":
        coords = vec(coords)
        if len(coords) != self.dim:
            raise ValueError("coordinate length mismatch")
        return Element(self, coords)

    def basis_element(self, i: int) -> "Element":
        coords = [ZERO] * self.dim
        coords[i] = ONE
        return Element(self, tuple(coords))

    def zero(self) -> "Element":
        return Element(self, (ZERO,) * self.dim)

    def unit_element(self) -> "Element":
        if self.unit is None:
            raise ValueError(f"{self.name} has no unit")
        return Element(self, self.unit)

    # -- arithmetic ---------------------------------------------------------

    def multiply(self, x: "Element", y: "Element") -> "Element":
        """Bilinear extension of the structure constants."""
        if x.algebra is not self or y.algebra is not self:
            raise ValueError("elements belong to a different algebra")
        dim = self.dim
        out = [ZERO] * dim
        for i, xi in enumerate(x.coords):
            if xi == 0:
                continue
            base = i * dim
            for j, yj in enumerate(y.coords):
                if yj == 0:
                    continue
                w = xi * yj
                for k, c in self._rows[base + j]:
                    out[k] += w * c
        return Element(self, tuple(out))

    def left_mult_matrix(self, x: "Element") -> RatMatrix:
        """Matrix of m -> x·m in the basis: entry (k, j) is (x·x_j)_k."""
        if x.algebra is not self:
            raise ValueError("element belongs to a different algebra")
        dim = self.dim
        entries = [[ZERO] * dim for _ in range(dim)]
        for i, xi in enumerate(x.coords):
            if xi == 0:
                continue
            for j in range(dim):
                for k, c in self._rows[i * dim + j]:
                    entries[k][j] += xi * c
        return RatMatrix.from_rows(entries)

    # -- misc ---------------------------------------------------------------

    def even_indices(self) -> tuple:
        return tuple(i for i, p in enumerate(self.parity) if p == 0)

    def odd_indices(self) -> tuple:
        return tuple(i for i, p in enumerate(self.parity) if p == 1)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Superalgebra):
            return NotImplemented
        return (self.parity == other.parity
                and self.basis_labels == other.basis_labels
                and self._rows == other._rows
                and self.unit == other.unit)

    def __hash__(self):
        return hash((self.parity, self.basis_labels))

    def __repr__(self):
        return f"Superalgebra({self.name!r}, dim={self.dim})"


@dataclass(frozen=True)
class Element:
    algebra: Superalgebra
    coords: tuple

    def __add__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra, tuple(
            a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra, tuple(
            a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Element":
        c = Fraction(c)
        return Element(self.algebra, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return vec_is_zero(self.coords)

    def support(self) -> tuple:
        return tuple(i for i, a in enumerate(self.coords) if a != 0)

    def homogeneous_parity(self):
        """0 or 1 when supported in one parity class, None for mixed or zero."""
        seen = {self.algebra.parity[i] for i in self.support()}
        if len(seen) == 1:
            return seen.pop()
        return None

    def _same(self, other: "Element"):
        if self.algebra is not other.algebra:
            raise ValueError("elements belong to different algebras")

    def __repr__(self):
        labels = self.algebra.basis_labels
        parts = [f"{c}·{labels[i]}" for i, c in enumerate(self.coords) if c != 0]
        return " + ".join(parts) if parts else "0"


def multiply(algebra: Superalgebra, x: Element, y: Element) -> Element:
    return algebra.multiply(x, y)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of an identity scan; holds iff the violation list is empty."""

    holds: bool
    violations: tuple

    def __post_init__(self):
        assert self.holds == (len(self.violations) == 0)

    @staticmethod
    def from_violations(violations) -> "IdentityReport":
        violations = tuple(violations)
        return IdentityReport(len(violations) == 0, violations)


def check_supercommutative(A: Superalgebra) -> IdentityReport:
    """Check x_i x_j = (-1)^{|x_i||x_j|} x_j x_i on every index pair."""
    violations = []
    for i in range(A.dim):
        for j in range(i, A.dim):
            sign = -1 if (A.parity[i] and A.parity[j]) else 1
            left = dict(A.product_row(i, j))
            right = dict(A.product_row(j, i))
            keys = set(left) | set(right)
            resid = [ZERO] * A.dim
            ok = True
            for k in keys:
                d = left.get(k, ZERO) - sign * right.get(k, ZERO)
                if d != 0:
                    ok = False
                    resid[k] = d
            if not ok:
                violations.append(((i, j), Element(A, tuple(resid))))
    return IdentityReport.from_violations(violations)


def _sign(exp: int) -> int:
    return -1 if exp & 1 else 1


def jordan_residual(A: Superalgebra, quad, plain=False) -> Element:
    """Exact residual of the degree-4 identity on a basis quadruple."""
    i, j, k, l = quad
    x, y, z, t = (A.basis_element(q) for q in quad)
    if plain:
        s1 = s2 = s3 = s4 = 1
    else:
        px, py, pz, pt = (A.parity[q] for q in quad)
        s1 = _sign(pt * (pz + py) + pz * py)
        s2 = _sign(px * (py + pz + pt) + pt * pz)
        s3 = _sign(pt * pz + pt * py)
        s4 = _sign(py * pz)
    lhs = ((x * y) * z) * t + s1 * (((x * t) * z) * y) + s2 * (((y * t) * z) * x)
    rhs = (x * y) * (z * t) + s3 * ((x * t) * (y * z)) + s4 * ((x * z) * (y * t))
    return lhs - rhs


def check_super_jordan(A: Superalgebra, backend="auto") -> IdentityReport:
    """Scan the graded degree-4 identity over all dim^4 basis quadruples.

    Assumes the algebra already passed ``check_supercommutative``.
    """
    quads = _scan.jordan_scan(A.rows_flat(), A.dim, A.parity,
                              plain=False, backend=backend)
    return IdentityReport.from_violations(
        (q, jordan_residual(A, q)) for q in quads)


def check_plain_jordan(A: Superalgebra, backend="auto") -> IdentityReport:
    """Commutativity plus the ungraded degree-4 identity, for all-even algebras."""
    if any(A.parity):
        raise ValueError("plain check requires an all-even algebra")
    violations = [(pair, r) for pair, r in
                  check_supercommutative(A).violations]
    quads = _scan.jordan_scan(A.rows_flat(), A.dim, A.parity,
                              plain=True, backend=backend)
    violations.extend((q, jordan_residual(A, q, plain=True)) for q in quads)
    return IdentityReport.from_violations(violations)


# -- Grassmann algebra and envelope ----------------------------------------


class GrassmannAlgebra:
    """Exterior algebra on k anticommuting generators, monomials as bitmasks.

    e_i e_j = -e_j e_i and e_i^2 = 0, so a product of monomials is zero when
    the index sets meet, and otherwise equals the union monomial times the
    parity of the merge permutation.
    """

    def __init__(self, generators: int):
        if generators < 1:
            raise ValueError("need at least one generator")
        self.generators = generators
        self.monomials = tuple(range(1 << generators))

    @staticmethod
    def degree(mask: int) -> int:
        return bin(mask).count("1")

    def parity(self, mask: int) -> int:
        return self.degree(mask) & 1

    def product(self, ma: int, mb: int):
        """(sign, union mask), or (0, None) when a generator repeats."""
        if ma & mb:
            return 0, None
        # inversions: pairs (a in ma, b in mb) with a > b
        inv = 0
        for b in range(self.generators):
            if mb >> b & 1:
                inv += bin(ma >> (b + 1)).count("1")
        return (-1 if inv & 1 else 1), ma | mb

    def label(self, mask: int) -> str:
        if mask == 0:
            return "1"
        return "".join(f"e{i+1}" for i in range(self.generators)
                       if mask >> i & 1)


def grassmann_envelope(A: Superalgebra, k: int) -> Superalgebra:
    """Ungraded algebra on pairs (monomial, basis element) of matching parity.

    The product is (g⊗a)(h⊗b) = (gh)⊗(ab) with the exterior-algebra sign on
    gh; all parities of the result are 0.  Use k >= 4 when the result feeds
    the plain degree-4 identity check, so four arguments can carry distinct
    generators.
    """
    G = GrassmannAlgebra(k)
    basis = [(mask, a) for mask in G.monomials
             for a in range(A.dim) if G.parity(mask) == A.parity[a]]
    index = {ba: n for n, ba in enumerate(basis)}
    labels = [f"{G.label(mask)}*{A.basis_labels[a]}" for mask, a in basis]
    products = {}
    for n1, (m1, a1) in enumerate(basis):
        for n2, (m2, a2) in enumerate(basis):
            sign, mu = G.product(m1, m2)
            if sign == 0:
                continue
            row = A.product_row(a1, a2)
            if not row:
                continue
            products[(n1, n2)] = [(index[(mu, b)], sign * c) for b, c in row]
    return Superalgebra(
        name=f"envelope({A.name}, k={k})",
        parity=(0,) * len(basis),
        basis_labels=labels,
        products=products,
    )


def envelope_jordan_report(A: Superalgebra, k: int = 4,
                           backend="auto") -> IdentityReport:
    """Decide the plain Jordan identity on the Grassmann envelope of A.

    Every term of the multilinear identity vanishes on envelope elements
    whose generator supports intersect, and on pairwise-disjoint supports the
    six terms share a common sign relative to the assignment that gives slot
    i the single generator e_{i+1}; so scanning those canonical assignments,
    one per parity pattern of the four slots, decides the identity on the
    whole envelope.  Commutativity is checked on all envelope pairs.

    Violations are reported in envelope coordinates.
    """
    if k < 4:
        raise ValueError("four identity arguments need k >= 4")
    env = grassmann_envelope(A, k)
    violations = [(pair, r) for pair, r in
                  check_supercommutative(env).violations]
    # group envelope indices by monomial mask (same enumeration as the builder)
    G = GrassmannAlgebra(k)
    basis = [(mask, a) for mask in G.monomials
             for a in range(A.dim) if G.parity(mask) == A.parity[a]]
    by_mask = {}
    for n, (mask, _) in enumerate(basis):
        by_mask.setdefault(mask, []).append(n)
    quads = []
    for pattern in range(16):
        slots = []
        for pos in range(4):
            mask = (1 << pos) if (pattern >> pos) & 1 else 0
            slots.append(by_mask.get(mask, []))
        if any(not s for s in slots):
            continue
        quads.extend(_scan.jordan_scan(env.rows_flat(), env.dim, env.parity,
                                       plain=True, slots=slots,
                                       backend=backend))
    quads.sort()
    violations.extend((q, jordan_residual(env, q, plain=True)) for q in quads)
    return IdentityReport.from_violations(violations)
