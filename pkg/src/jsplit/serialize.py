"""JSON interchange for algebras, modules, and marked extensions.

Rationals serialize as "p/q" in lowest terms with q > 0, or "p" when q = 1.
Constants and actions list only nonzero entries as [i, j, k, "p/q"], sorted
lexicographically by (i, j, k) with 0-based indices, so files are canonical:
the same object always serializes to the same bytes.
"""

from __future__ import annotations

import json

from .bimodule import Superbimodule
from .ratlinalg import format_rat, parse_rat
from .splitting import MarkedExtension
from .superalgebra import Superalgebra


def algebra_to_dict(A: Superalgebra) -> dict:
    constants = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in A.product_row(i, j):
                constants.append([i, j, k, format_rat(c)])
    return {
        "name": A.name,
        "dim": A.dim,
        "parity": list(A.parity),
        "basis": list(A.basis_labels),
        "unit": [format_rat(c) for c in A.unit] if A.unit is not None else None,
        "constants": constants,
    }


def algebra_from_dict(d: dict) -> Superalgebra:
    dim = int(d["dim"])
    products = {}
    for i, j, k, c in d["constants"]:
        products.setdefault((i, j), []).append((k, parse_rat(c)))
    unit = d.get("unit")
    if unit is not None:
        unit = [parse_rat(c) for c in unit]
    A = Superalgebra(d.get("name", "algebra"), d["parity"], d["basis"],
                     products, unit=unit)
    if A.dim != dim:
        raise ValueError("dim field disagrees with parity length")
    return A


def bimodule_to_dict(M: Superbimodule) -> dict:
    action = []
    for i in range(M.algebra.dim):
        for j in range(M.dim):
            for k, c in M.action_row(i, j):
                action.append([i, j, k, format_rat(c)])
    return {
        "name": M.name,
        "dim": M.dim,
        "parity": list(M.parity),
        "basis": list(M.basis_labels),
        "algebra": algebra_to_dict(M.algebra),
        "action": action,
    }


def bimodule_from_dict(d: dict, algebra: Superalgebra | None = None) -> Superbimodule:
    A = algebra if algebra is not None else algebra_from_dict(d["algebra"])
    if algebra is not None:
        embedded = algebra_from_dict(d["algebra"])
        if embedded != A:
            raise ValueError("module was built over a different algebra")
    action = {}
    for i, j, k, c in d["action"]:
        action.setdefault((i, j), []).append((k, parse_rat(c)))
    return Superbimodule(A, d["parity"], d["basis"], action,
                         name=d.get("name", ""))


def extension_to_dict(ext: MarkedExtension) -> dict:
    d = algebra_to_dict(ext.E)
    d["ideal"] = list(ext.radical)
    d["model"] = algebra_to_dict(ext.model)
    section = []
    for a, row in enumerate(ext.section):
        for e, c in enumerate(row):
            if c != 0:
                section.append([a, e, format_rat(c)])
    d["section"] = section
    return d


def extension_from_dict(d: dict) -> MarkedExtension:
    E = algebra_from_dict(d)
    model = algebra_from_dict(d["model"])
    section = [[parse_rat("0")] * E.dim for _ in range(model.dim)]
    for a, e, c in d["section"]:
        section[a][e] = parse_rat(c)
    return MarkedExtension(E, d["ideal"], model, section)


def dump(obj: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
