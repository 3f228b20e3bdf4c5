"""Command-line front end.

Machine-readable JSON goes to stdout and is byte-identical across repeated
runs on the same inputs; the human-readable summary, including timings, goes
to stderr.  Exit status is nonzero whenever a verdict deviates from the
expected one.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time

from . import serialize
from .bimodule import (
    hom_space,
    opposite,
    regular_bimodule,
    skew_bimodule,
)
from .josp import build_josp_matrix, build_josp_table, structure_iso_check
from .ratlinalg import format_rat
from .splitting import (
    build_counterexample,
    perturb_section,
    radical_bimodule,
    random_correction,
    solve_splitting,
    trivial_extension,
    verify_splitting,
)
from .structure import (
    IdempotentFamily,
    peirce_decompose,
    verify_idempotent_family,
    verify_peirce_relations,
)
from .superalgebra import check_super_jordan, check_supercommutative

DEFAULT_GRID = ((1, 1), (2, 1), (1, 2))
KINDS = ("reg", "skew", "reg-op", "skew-op")


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _say(msg: str) -> None:
    sys.stderr.write(msg + "\n")


def _digest(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        h.update(fh.read())
    return h.hexdigest()


def _write_or_emit(obj: dict, out: str | None, summary: str) -> None:
    if out:
        serialize.dump(obj, out)
        _emit({"written": out, "dim": obj.get("dim")})
    else:
        _emit(obj)
    _say(summary)


def build_kind(n: int, m: int, kind: str):
    if kind == "reg":
        return regular_bimodule(build_josp_table(n, m))
    if kind == "skew":
        return skew_bimodule(n, m)
    if kind == "reg-op":
        return opposite(regular_bimodule(build_josp_table(n, m)))
    if kind == "skew-op":
        return opposite(skew_bimodule(n, m))
    raise ValueError(f"unknown bimodule kind {kind!r}")


def cmd_josp(args) -> int:
    builder = build_josp_matrix if args.realization == "matrix" \
        else build_josp_table
    A = builder(args.n, args.m)
    _write_or_emit(serialize.algebra_to_dict(A), args.out,
                   f"{A.name}: dim {A.dim}")
    return 0


def cmd_bimodule(args) -> int:
    M = build_kind(args.n, args.m, args.kind)
    _write_or_emit(serialize.bimodule_to_dict(M), args.out,
                   f"{M.name}: dim {M.dim} over {M.algebra.name}")
    return 0


def cmd_extend(args) -> int:
    alg = serialize.algebra_from_dict(serialize.load(args.algebra))
    mod = serialize.bimodule_from_dict(serialize.load(args.module), algebra=alg)
    ext = trivial_extension(alg, mod)
    _write_or_emit(serialize.extension_to_dict(ext), args.out,
                   f"extension dim {ext.E.dim}, ideal size {len(ext.radical)}")
    return 0


def cmd_check(args) -> int:
    A = serialize.algebra_from_dict(serialize.load(args.file))
    t0 = time.perf_counter()
    comm = check_supercommutative(A)
    jordan = check_super_jordan(A)
    dt = time.perf_counter() - t0
    report = {
        "command": "check",
        "inputs": {args.file: _digest(args.file)},
        "verdicts": [
            {"name": "supercommutative", "input": A.name, "ok": comm.holds,
             "violations": [list(v[0]) for v in comm.violations[:16]]},
            {"name": "super_jordan", "input": A.name, "ok": jordan.holds,
             "violations": [list(v[0]) for v in jordan.violations[:16]]},
        ],
    }
    _emit(report)
    _say(f"checked {A.name} (dim {A.dim}) in {dt*1000:.1f} ms: "
         f"supercommutative={comm.holds} super_jordan={jordan.holds}")
    return 0 if comm.holds and jordan.holds else 1


def cmd_peirce(args) -> int:
    A = serialize.algebra_from_dict(serialize.load(args.file))
    labels = [s.strip() for s in args.idempotents.split(",") if s.strip()]
    family = IdempotentFamily.from_labels(A, labels)
    if not verify_idempotent_family(A, family):
        _emit({"command": "peirce", "error": "not a complete orthogonal family"})
        return 1
    deco = peirce_decompose(A, family)
    relations = verify_peirce_relations(deco)
    report = {
        "command": "peirce",
        "inputs": {args.file: _digest(args.file)},
        "idempotents": labels,
        "components": [
            {"key": [labels[t] for t in key], "dim": len(basis)}
            for key, basis in sorted(deco.components.items())
        ],
        "relations_hold": relations.holds,
    }
    _emit(report)
    _say(f"peirce components: {[len(b) for _, b in sorted(deco.components.items())]} "
         f"relations_hold={relations.holds}")
    return 0 if relations.holds else 1


def cmd_split(args) -> int:
    ext = serialize.extension_from_dict(serialize.load(args.file))
    cert = solve_splitting(ext)
    if cert.is_split:
        ok = verify_splitting(ext, cert.tau)
        report = {
            "result": "split",
            "tau": [[a, r, format_rat(c)] for (a, r), c in cert.tau.items()],
            "verified": ok,
        }
        _emit(report)
        _say(f"split; correction entries: {len(cert.tau.entries)} verified={ok}")
        return 0 if ok else 1
    system_rows = _witness_pairs(ext, cert.witness)
    report = {
        "result": "no-split",
        "witness": [format_rat(c) for c in cert.witness],
        "violated_pairs": system_rows,
    }
    _emit(report)
    _say("no-split with exact witness")
    return 0


def _witness_pairs(ext, witness):
    from .splitting import splitting_system

    system = splitting_system(ext)
    pairs = []
    for ridx, c in enumerate(witness):
        if c != 0:
            a, b, _ = system.rows[ridx]
            pair = [ext.model.basis_labels[a], ext.model.basis_labels[b]]
            if pair not in pairs:
                pairs.append(pair)
    return pairs


def cmd_counterexample(args) -> int:
    t0 = time.perf_counter()
    ext = build_counterexample()
    comm = check_supercommutative(ext.E)
    jordan = check_super_jordan(ext.E)
    rad = radical_bimodule(ext)
    reg = regular_bimodule(ext.model)
    maps = hom_space(rad, reg, 0)
    from .ratlinalg import GaussSolver
    invertible = any(GaussSolver(phi).rank == rad.dim for phi in maps)
    cert = solve_splitting(ext)
    verdicts = [
        {"name": "supercommutative", "input": ext.E.name, "ok": comm.holds},
        {"name": "super_jordan", "input": ext.E.name, "ok": jordan.holds},
        {"name": "radical_isomorphic_to_regular", "input": ext.E.name,
         "ok": invertible},
        {"name": "no_split", "input": ext.E.name, "ok": not cert.is_split},
    ]
    ok = all(v["ok"] for v in verdicts)
    report = {
        "command": "counterexample",
        "verdicts": verdicts,
        "witness": [format_rat(c) for c in cert.witness]
        if not cert.is_split else None,
    }
    if args.out:
        serialize.dump(serialize.extension_to_dict(ext), args.out)
        report["written"] = args.out
    _emit(report)
    _say(f"counterexample pipeline in {(time.perf_counter()-t0)*1000:.0f} ms: "
         + ("all verdicts as expected" if ok else "DEVIATION"))
    return 0 if ok else 1


def _suite_point(n: int, m: int, kinds, seed: int):
    verdicts = []

    def verdict(name, ok, **extra):
        v = {"name": name, "input": f"({n},{m})", "ok": bool(ok)}
        v.update(extra)
        verdicts.append(v)

    table = build_josp_table(n, m)
    matrix = build_josp_matrix(n, m)
    verdict("realizations_isomorphic",
            structure_iso_check(table, matrix, list(range(table.dim))))
    verdict("supercommutative", check_supercommutative(table).holds)
    verdict("super_jordan", check_super_jordan(table).holds)
    rng = random.Random(seed * 1000003 + n * 101 + m)
    for kind in kinds:
        M = build_kind(n, m, kind)
        ext = trivial_extension(M.algebra, M)
        verdict(f"extension_super_jordan[{kind}]",
                check_super_jordan(ext.E).holds)
        cert = solve_splitting(ext)
        ok = cert.is_split and verify_splitting(ext, cert.tau)
        verdict(f"split[{kind}]", ok)
        pert = perturb_section(ext, random_correction(ext, rng))
        cert2 = solve_splitting(pert)
        ok2 = cert2.is_split and verify_splitting(pert, cert2.tau)
        verdict(f"split_perturbed[{kind}]", ok2)
    return verdicts


def cmd_suite(args) -> int:
    grid = [tuple(int(x) for x in g.split(",")) for g in args.grid] \
        if args.grid else list(DEFAULT_GRID)
    if args.kind is None:
        kinds = list(KINDS)
    else:
        kinds = [k for k in args.kind if k != "none"]
    if any(len(g) != 2 for g in grid):
        raise SystemExit("grid points must look like N,M")
    t0 = time.perf_counter()
    verdicts = []
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = [(g, pool.submit(_suite_point, g[0], g[1], kinds,
                                       args.seed)) for g in grid]
            for _, fut in futures:
                verdicts.extend(fut.result())
    else:
        for n, m in grid:
            verdicts.extend(_suite_point(n, m, kinds, args.seed))
    if args.counterexample:
        ext = build_counterexample()
        cert = solve_splitting(ext)
        verdicts.append({"name": "no_split[counterexample]",
                         "input": "(1,1)", "ok": not cert.is_split})
        verdicts.append({"name": "super_jordan[counterexample]",
                         "input": "(1,1)",
                         "ok": check_super_jordan(ext.E).holds})
    ok = all(v["ok"] for v in verdicts)
    report = {
        "command": "suite",
        "inputs": {},
        "grid": [list(g) for g in grid],
        "kinds": list(kinds),
        "seed": args.seed,
        "verdicts": verdicts,
    }
    _emit(report)
    dt = time.perf_counter() - t0
    _say(f"suite over {len(grid)} grid points in {dt:.2f} s: "
         + ("all pass" if ok else "FAILURES"))
    if not ok:
        first = next(v for v in verdicts if not v["ok"])
        _say(f"first failing verdict: {first['name']} on {first['input']}")
        return 1
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jsplit",
        description="Exact engine for orthosymplectic Jordan superalgebras "
                    "and Wedderburn splitting certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("josp", help="construct Josp(n|2m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--realization", choices=("table", "matrix"),
                   default="table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_josp)

    p = sub.add_parser("bimodule", help="construct an irreducible module")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bimodule)

    p = sub.add_parser("extend", help="split null extension of ALG by MOD")
    p.add_argument("algebra")
    p.add_argument("module")
    p.add_argument("--out")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("check", help="run both identity checks on a file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("peirce", help="Peirce decomposition report")
    p.add_argument("file")
    p.add_argument("--idempotents", required=True,
                   help="comma-separated basis labels")
    p.set_defaults(func=cmd_peirce)

    p = sub.add_parser("split", help="solve the lifting system of EXT.json")
    p.add_argument("file")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("counterexample",
                       help="emit the non-splittable extension and verify it")
    p.add_argument("--out")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("suite", help="batch verification over a grid")
    p.add_argument("--grid", nargs="+", metavar="N,M")
    p.add_argument("--kind", action="append", choices=KINDS + ("none",),
                   help="repeatable; 'none' runs the construction checks only")
    p.add_argument("--counterexample", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_suite)

    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
