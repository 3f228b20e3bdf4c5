"""Lifting a square-zero radical extension to a genuine subalgebra.

A MarkedExtension carries an algebra E, a graded ideal N with N·N = 0, a
model algebra J, and a graded section σ: J -> E that is a homomorphism
modulo N.  Because N squares to zero, asking for a corrected section
σ + τ (τ mapping into N) that is an exact homomorphism is a *linear*
condition on τ.  ``splitting_system`` assembles that system with one
equation block per unordered model basis pair; ``solve_splitting`` then
returns either the canonical correction (a Split certificate, re-checkable
by ``verify_splitting``) or an exact inconsistency witness over the
equation rows (a NoSplit certificate).

All model basis elements are lifted simultaneously; there is no separate
even/odd staging.  The classical staged relations are still verified after
the fact by ``verify_lemma_relations``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bimodule import Superbimodule, split_null_extension, skew_bimodule
from .josp import build_josp_table, josp_params_from_labels
from .ratlinalg import (
    HALF,
    ONE,
    ZERO,
    GaussSolver,
    RatMatrix,
    rat,
    solve_linear,
    vec,
)
from .superalgebra import (
    Element,
    IdentityReport,
    Superalgebra,
    check_super_jordan,
    check_supercommutative,
)


class JordanValidationError(ValueError):
    """A constructed table failed the graded degree-4 identity."""

    def __init__(self, quadruple):
        self.quadruple = quadruple
        super().__init__(
            f"super-Jordan identity fails on basis quadruple {quadruple}")


def _validate_jordan(E: Superalgebra) -> None:
    """Reject a table that fails either graded identity, naming the first
    violating tuple."""
    report = check_supercommutative(E)
    if not report.holds:
        raise JordanValidationError(report.violations[0][0])
    report = check_super_jordan(E)
    if not report.holds:
        raise JordanValidationError(report.violations[0][0])


class CorrectionMap:
    """Graded linear map from model basis into the radical.

    entries maps (model index, radical position) to a rational coefficient;
    radical positions index into the extension's radical tuple.
    """

    def __init__(self, entries=None):
        self.entries = {}
        for key, c in (entries or {}).items():
            c = Fraction(c)
            if c != 0:
                self.entries[tuple(key)] = c

    def coefficient(self, a: int, r: int) -> Fraction:
        return self.entries.get((a, r), ZERO)

    def items(self):
        return sorted(self.entries.items())

    def __eq__(self, other):
        if not isinstance(other, CorrectionMap):
            return NotImplemented
        return self.entries == other.entries

    def is_zero(self) -> bool:
        return not self.entries

    def __repr__(self):
        return f"CorrectionMap({self.entries!r})"


@dataclass(frozen=True)
class SplitCertificate:
    """kind "split" carries the correction; "no-split" carries the witness."""

    kind: str
    tau: CorrectionMap | None = None
    witness: tuple | None = None

    @property
    def is_split(self) -> bool:
        return self.kind == "split"


class MarkedExtension:
    """Extension E with marked square-zero ideal, model, and graded section."""

    def __init__(self, E: Superalgebra, radical: Sequence[int],
                 model: Superalgebra, section: Sequence[Sequence]):
        self.E = E
        self.radical = tuple(int(r) for r in radical)
        self.model = model
        self.section = tuple(vec(row) for row in section)
        self._radical_set = frozenset(self.radical)
        self.validate()

    # -- accessors ----------------------------------------------------------

    def section_element(self, a: int) -> Element:
        return self.E.element(self.section[a])

    def radical_element(self, r: int) -> Element:
        return self.E.basis_element(self.radical[r])

    def in_radical_span(self, coords) -> bool:
        return all(c == 0 for i, c in enumerate(coords)
                   if i not in self._radical_set)

    def radical_coords(self, coords) -> tuple:
        return tuple(coords[i] for i in self.radical)

    def correction_element(self, tau: CorrectionMap, a: int) -> Element:
        out = [ZERO] * self.E.dim
        for (aa, r), c in tau.entries.items():
            if aa == a:
                out[self.radical[r]] += c
        return self.E.element(out)

    def corrected_element(self, tau: CorrectionMap, a: int) -> Element:
        return self.section_element(a) + self.correction_element(tau, a)

    # -- invariants ---------------------------------------------------------

    def validate(self):
        E, model = self.E, self.model
        if len(set(self.radical)) != len(self.radical):
            raise ValueError("radical indices repeat")
        if any(not 0 <= r < E.dim for r in self.radical):
            raise ValueError("radical index out of range")
        if len(self.section) != model.dim:
            raise ValueError("section must cover every model basis element")
        rs = self._radical_set
        # ideal and square-zero
        for i in range(E.dim):
            for r in rs:
                for row in (E.product_row(i, r), E.product_row(r, i)):
                    for k, _ in row:
                        if k not in rs:
                            raise ValueError("marked ideal is not an ideal")
        for r1 in rs:
            for r2 in rs:
                if E.product_row(r1, r2):
                    raise ValueError("marked ideal does not square to zero")
        # graded section, homomorphism modulo the ideal
        for a in range(model.dim):
            se = self.section_element(a)
            par = se.homogeneous_parity()
            if par is None or par != model.parity[a]:
                raise ValueError(f"section image {a} is not homogeneous "
                                 "of the model parity")
        for a in range(model.dim):
            sa = self.section_element(a)
            for b in range(model.dim):
                prod = self.E.multiply(sa, self.section_element(b))
                target = self._section_of_product(a, b)
                if not self.in_radical_span((prod - target).coords):
                    raise ValueError(
                        "section is not a homomorphism modulo the ideal")
        # complement: section images plus radical basis span E
        cols = [list(row) for row in self.section]
        for r in self.radical:
            e = [ZERO] * E.dim
            e[r] = ONE
            cols.append(e)
        if len(cols) != E.dim:
            raise ValueError("model dim + radical size != extension dim")
        B = RatMatrix(E.dim, E.dim, tuple(
            cols[c][r] for r in range(E.dim) for c in range(E.dim)))
        if GaussSolver(B).rank != E.dim:
            raise ValueError("section + radical do not form a basis")

    def _section_of_product(self, a: int, b: int) -> Element:
        out = [ZERO] * self.E.dim
        for k, c in self.model.product_row(a, b):
            for i, s in enumerate(self.section[k]):
                out[i] += c * s
        return self.E.element(out)


@dataclass(frozen=True)
class SplittingSystem:
    """The assembled lifting system A·τ = b with its index bookkeeping.

    unknowns[c] = (model index, radical position) for column c;
    rows[r] = (model index a, model index b, radical position) for row r,
    ordered by pair (a <= b) then radical position.
    """

    matrix: RatMatrix
    rhs: tuple
    unknowns: tuple
    rows: tuple


def splitting_system(ext: MarkedExtension) -> SplittingSystem:
    """One equation block per unordered model pair, projected onto the ideal.

    For the pair (a, b) the requirement on τ is

        σ(x_a)·τ(x_b) + τ(x_a)·σ(x_b) - τ(x_a·x_b)
            = -(σ(x_a)·σ(x_b) - σ(x_a·x_b)),

    both sides lying in the span of the ideal because N·N = 0.
    """
    E, model = ext.E, ext.model
    nrad = len(ext.radical)
    unknowns = [(a, r) for a in range(model.dim) for r in range(nrad)
                if model.parity[a] == E.parity[ext.radical[r]]]
    col = {u: c for c, u in enumerate(unknowns)}
    # precompute σ(x_a)·n_r and n_r·σ(x_b) as radical coordinates
    sig_n = {}
    n_sig = {}
    for a in range(model.dim):
        sa = ext.section_element(a)
        for r in range(nrad):
            nr = ext.radical_element(r)
            sig_n[(a, r)] = ext.radical_coords(E.multiply(sa, nr).coords)
            n_sig[(r, a)] = ext.radical_coords(E.multiply(nr, sa).coords)
    rows = []
    data = []
    rhs = []
    for a in range(model.dim):
        for b in range(a, model.dim):
            resid = ext.E.multiply(ext.section_element(a),
                                   ext.section_element(b)) \
                - ext._section_of_product(a, b)
            resid_rad = ext.radical_coords(resid.coords)
            model_row = dict(model.product_row(a, b))
            for s in range(nrad):
                coeffs = {}

                def add(u, c):
                    if c != 0 and u in col:
                        coeffs[col[u]] = coeffs.get(col[u], ZERO) + c

                for r in range(nrad):
                    add((b, r), sig_n[(a, r)][s])     # σ(x_a)·τ(x_b)
                    add((a, r), n_sig[(r, b)][s])     # τ(x_a)·σ(x_b)
                for k, c in model_row.items():
                    add((k, s), -c)                   # -τ(x_a·x_b)
                rows.append((a, b, s))
                data.append(coeffs)
                rhs.append(-resid_rad[s])
    mat = RatMatrix(len(rows), len(unknowns), tuple(
        row.get(c, ZERO) for row in data for c in range(len(unknowns))))
    return SplittingSystem(mat, tuple(rhs), tuple(unknowns), tuple(rows))


def solve_splitting(ext: MarkedExtension) -> SplitCertificate:
    """Canonical correction when the lifting system is solvable, otherwise an
    exact witness over the equation rows."""
    system = splitting_system(ext)
    sol = solve_linear(system.matrix, system.rhs)
    if sol.is_solved:
        tau = CorrectionMap({
            system.unknowns[c]: v for c, v in enumerate(sol.particular)
            if v != 0})
        return SplitCertificate("split", tau=tau)
    return SplitCertificate("no-split", witness=sol.witness)


def verify_splitting(ext: MarkedExtension, tau: CorrectionMap) -> bool:
    """Independent check of a claimed correction, usable on any τ.

    True iff the corrected images multiply exactly by the model constants and
    together with the radical form a basis of E.
    """
    E, model = ext.E, ext.model
    corrected = [ext.corrected_element(tau, a) for a in range(model.dim)]
    for a in range(model.dim):
        for b in range(model.dim):
            prod = E.multiply(corrected[a], corrected[b])
            want = E.zero()
            for k, c in model.product_row(a, b):
                want = want + corrected[k].scale(c)
            if prod.coords != want.coords:
                return False
    cols = [list(x.coords) for x in corrected]
    for r in ext.radical:
        e = [ZERO] * E.dim
        e[r] = ONE
        cols.append(e)
    if len(cols) != E.dim:
        return False
    B = RatMatrix(E.dim, E.dim, tuple(
        cols[c][r] for r in range(E.dim) for c in range(E.dim)))
    return GaussSolver(B).rank == E.dim


def radical_bimodule(ext: MarkedExtension) -> Superbimodule:
    """The marked ideal as a module over the model, acting through σ."""
    E, model = ext.E, ext.model
    nrad = len(ext.radical)
    action = {}
    for a in range(model.dim):
        sa = ext.section_element(a)
        for r in range(nrad):
            prod = E.multiply(sa, ext.radical_element(r))
            row = [(k, c) for k, c in enumerate(ext.radical_coords(prod.coords))
                   if c != 0]
            if row:
                action[(a, r)] = row
    return Superbimodule(
        model,
        parity=[E.parity[r] for r in ext.radical],
        basis_labels=[E.basis_labels[r] for r in ext.radical],
        action=action,
        name=f"radical of {E.name}",
    )


# -- post-hoc relation checks ------------------------------------------------


def _josp_label_positions(model: Superalgebra):
    pos = {}
    for t, label in enumerate(model.basis_labels):
        pos[label] = t
    return pos


def verify_lemma_relations(ext: MarkedExtension,
                           tau: CorrectionMap) -> IdentityReport:
    """Check the staged lifting relations on the corrected elements.

    With X standing for the corrected image of x, the relations are, for all
    valid indices (S relations need two symplectic indices):

        U_ip·H_ij = U_jp/2          U_ip·V_pq = U_iq/2
        K_ip·H_ij = K_jp/2          K_ip·V_qp = K_iq/2
        U_ip·S_pq = K_iq/2          K_ip·S~_pq = U_iq/2
        U_ip·U_iq = S~_pq/2         K_jp·K_jq = S_qp/2
        U_ip·K_iq = V_qp/2 (p != q)
        U_ip·K_jp = -H_ij/2 (i != j)
        U_ip·K_ip = V_pp/2 - H_ii
    """
    model = ext.model
    n, m = josp_params_from_labels(model)
    pos = _josp_label_positions(model)
    E = ext.E

    def corr(kind, a, b):
        sign = 1
        if kind in ("s", "st"):
            if a == b:
                return E.zero()
            if a > b:
                a, b = b, a
                sign = -1
        if kind == "h" and a > b:
            a, b = b, a
        x = ext.corrected_element(tau, pos[f"{kind}{a}{b}"])
        return x.scale(sign)

    violations = []

    def check(name, indices, lhs, rhs):
        if lhs.coords != rhs.coords:
            violations.append(((name, indices), lhs - rhs))

    for i in range(1, n + 1):
        for p in range(1, m + 1):
            U_ip = corr("u", i, p)
            K_ip = corr("k", i, p)
            for j in range(1, n + 1):
                H = corr("h", i, j)
                check("U.H", (i, p, j), E.multiply(U_ip, H),
                      corr("u", j, p).scale(HALF))
                check("K.H", (i, p, j), E.multiply(K_ip, H),
                      corr("k", j, p).scale(HALF))
            for q in range(1, m + 1):
                check("U.V", (i, p, q),
                      E.multiply(U_ip, corr("v", p, q)),
                      corr("u", i, q).scale(HALF))
                check("K.V", (i, p, q),
                      E.multiply(K_ip, corr("v", q, p)),
                      corr("k", i, q).scale(HALF))
                if q != p:
                    check("U.S", (i, p, q),
                          E.multiply(U_ip, corr("s", p, q)),
                          corr("k", i, q).scale(HALF))
                    check("K.St", (i, p, q),
                          E.multiply(K_ip, corr("st", p, q)),
                          corr("u", i, q).scale(HALF))
                check("U.U", (i, p, q),
                      E.multiply(U_ip, corr("u", i, q)),
                      corr("st", p, q).scale(HALF))
                check("K.K", (i, p, q),
                      E.multiply(K_ip, corr("k", i, q)),
                      corr("s", q, p).scale(HALF))
                if q != p:
                    check("U.K", (i, p, q),
                          E.multiply(U_ip, corr("k", i, q)),
                          corr("v", q, p).scale(HALF))
            for j in range(1, n + 1):
                if j != i:
                    check("U.K'", (i, j, p),
                          E.multiply(U_ip, corr("k", j, p)),
                          corr("h", i, j).scale(-HALF))
            check("U.K0", (i, p),
                  E.multiply(U_ip, K_ip),
                  corr("v", p, p).scale(HALF) - corr("h", i, i))
    return IdentityReport.from_violations(violations)


# -- concrete extensions -----------------------------------------------------


def build_counterexample() -> MarkedExtension:
    """The eight-dimensional extension whose lifting system is inconsistent.

    Even part spanned by h, v, g, w and odd part by u, k, y, x; the ideal is
    {g, w, y, x} and the quotient is identified with Josp(1|2) by
    h, v, u, k.  The products below are the complete list of nonzero ones;
    the first group is symmetric, the second skew-symmetric.
    """
    labels = ["h", "v", "g", "w", "u", "k", "y", "x"]
    ix = {s: t for t, s in enumerate(labels)}
    parity = [0, 0, 0, 0, 1, 1, 1, 1]
    sym = [
        ("h", "h", [("h", 1)]),
        ("v", "v", [("v", 1)]),
        ("h", "g", [("g", 1)]),
        ("v", "w", [("w", 1)]),
        ("u", "h", [("u", HALF)]),
        ("u", "v", [("u", HALF)]),
        ("k", "h", [("k", HALF)]),
        ("k", "v", [("k", HALF)]),
        ("y", "h", [("y", HALF)]),
        ("y", "v", [("y", HALF)]),
        ("u", "g", [("y", HALF)]),
        ("u", "w", [("y", HALF)]),
        ("x", "h", [("x", HALF)]),
        ("x", "v", [("x", HALF)]),
        ("k", "g", [("x", HALF)]),
        ("k", "w", [("x", HALF)]),
    ]
    skew = [
        ("u", "x", [("w", HALF), ("g", -1)]),
        ("y", "k", [("w", HALF), ("g", -1)]),
        ("u", "k", [("v", HALF), ("h", -1), ("g", 1)]),
    ]
    products = {}

    def put(a, b, terms, sign):
        products[(ix[a], ix[b])] = [(ix[s], rat(c)) for s, c in terms]
        if a != b:
            products[(ix[b], ix[a])] = [(ix[s], sign * rat(c))
                                        for s, c in terms]

    for a, b, terms in sym:
        put(a, b, terms, 1)
    for a, b, terms in skew:
        put(a, b, terms, -1)
    unit = [ZERO] * 8
    unit[ix["h"]] = ONE
    unit[ix["v"]] = ONE
    E = Superalgebra("counterexample", parity, labels, products, unit=unit)
    model = build_josp_table(1, 1)
    section = []
    for label in ("h", "v", "u", "k"):
        coords = [ZERO] * 8
        coords[ix[label]] = ONE
        section.append(coords)
    # model basis order is h11, v11, u11, k11
    return MarkedExtension(E, (ix["g"], ix["w"], ix["y"], ix["x"]),
                           model, section)


def build_skew11_extension(xi_at, xi_f, xi_ft) -> MarkedExtension:
    """Extension of Josp(1|2) by its skew module with the u·k product
    perturbed by xi_at·a~ + xi_f·f + xi_ft·f~.

    The construction is validated against the graded degree-4 identity and
    rejected (JordanValidationError) if any quadruple fails; no non-Jordan
    table is ever returned.
    """
    xi = [rat(xi_at), rat(xi_f), rat(xi_ft)]
    A = build_josp_table(1, 1)
    M = skew_bimodule(1, 1)
    E0, radical = split_null_extension(A, M)
    u_idx = E0.label_index("u11")
    k_idx = E0.label_index("k11")
    pert = list(zip((E0.label_index("at11'"), E0.label_index("f11'"),
                     E0.label_index("ft11'")), xi))
    products = {}
    for i in range(E0.dim):
        for j in range(E0.dim):
            row = E0.product_row(i, j)
            if row:
                products[(i, j)] = list(row)
    uk = dict(products.get((u_idx, k_idx), []))
    for t, c in pert:
        uk[t] = uk.get(t, ZERO) + c
    products[(u_idx, k_idx)] = sorted(uk.items())
    products[(k_idx, u_idx)] = [(t, -c) for t, c in sorted(uk.items())]
    E = Superalgebra(E0.name + " [perturbed]", E0.parity, E0.basis_labels,
                     products, unit=E0.unit)
    _validate_jordan(E)
    section = []
    for a in range(A.dim):
        coords = [ZERO] * E.dim
        coords[a] = ONE
        section.append(coords)
    return MarkedExtension(E, radical, A, section)


def trivial_extension(A: Superalgebra, M: Superbimodule) -> MarkedExtension:
    """Split null extension marked with its canonical section."""
    E, radical = split_null_extension(A, M)
    section = []
    for a in range(A.dim):
        coords = [ZERO] * E.dim
        coords[a] = ONE
        section.append(coords)
    return MarkedExtension(E, radical, A, section)


def perturb_section(ext: MarkedExtension, d: CorrectionMap) -> MarkedExtension:
    """Replace σ by σ + d; all extension invariants survive the change."""
    for (a, r), _ in d.items():
        if ext.model.parity[a] != ext.E.parity[ext.radical[r]]:
            raise ValueError("perturbation is not parity-preserving")
    section = []
    for a in range(ext.model.dim):
        coords = list(ext.section[a])
        for (aa, r), c in d.entries.items():
            if aa == a:
                coords[ext.radical[r]] += c
        section.append(coords)
    return MarkedExtension(ext.E, ext.radical, ext.model, section)


def random_correction(ext: MarkedExtension, rng,
                      denominators=(1, 2)) -> CorrectionMap:
    """Random parity-preserving correction with small rational entries."""
    entries = {}
    for a in range(ext.model.dim):
        for r in range(len(ext.radical)):
            if ext.model.parity[a] != ext.E.parity[ext.radical[r]]:
                continue
            num = rng.randint(-3, 3)
            if num == 0:
                continue
            entries[(a, r)] = Fraction(num, rng.choice(denominators))
    return CorrectionMap(entries)
