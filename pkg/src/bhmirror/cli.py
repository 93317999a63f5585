"""Command-line interface.

Commands: analyze, mirror, table, verify, k3.  Output formats: text
(default), json (schema "bhmirror/1"), csv (table only).  All output is
deterministic: identical invocations produce byte-identical output.

Exit status: 0 success / all checks pass, 1 verification failure,
2 input error, 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import catalog as cat
from .errors import BHMirrorError, InputError, InternalError
from .geometry import (
    SectorGrid,
    fit_k3_pattern,
    k3_invariants,
    lattice_mirror_verdict,
    sector_grid,
)
from .milnor import equivariant_hilbert, fermat_monomial_basis, sector_algebra
from .mirror import (
    build_mirror_pair,
    verify_krawitz,
    verify_lg_mirror,
    verify_order2_exchange,
    verify_pair_duality,
)
from .poly import (
    InvertiblePolynomial,
    format_polynomial,
    is_calabi_yau,
    is_fermat_diagonal,
    parse_polynomial,
    restrict,
    split_cyclic,
    transpose,
)
from .statespace import build_state_space, moving_vanishing_violations
from .symmetry import (
    admissible_setup,
    aut_generators,
    aut_group,
    dual_group,
    enumerate_group,
    in_sl,
    j_element,
    s_element,
    sl_subgroup,
    symmetry,
)

SCHEMA = "bhmirror/1"


def _fmt_frac(x) -> str:
    return str(Fraction(x))


def _fmt_vec(g) -> str:
    return "[" + ", ".join(_fmt_frac(a) for a in g) + "]"


def parse_group_spec(spec: str, P: InvertiblePolynomial, cap: int):
    """Presets J | SL | full | trivial, or explicit `gen:[..];gen:[..]`."""
    spec = spec.strip()
    if spec == "trivial":
        return ()
    if spec == "J":
        return (j_element(P),)
    if spec == "SL":
        return sl_subgroup(P, cap).elements
    if spec == "full":
        return aut_generators(P)
    gens = []
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        if not part.startswith("gen:"):
            raise InputError(
                f"bad group spec {part!r}: expected gen:[...] or a preset "
                "J | SL | full | trivial")
        gens.append(symmetry(cat.parse_vector(part[4:])))
    return tuple(gens)


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def cmd_analyze(args, cap: int) -> int:
    P = parse_polynomial(args.polynomial)
    aut = aut_group(P, cap)
    sl = sum(1 for g in aut if in_sl(g))
    try:
        k, _ = split_cyclic(P)
        s = s_element(P)
    except BHMirrorError:
        k, s = None, None
    data = {
        "schema": SCHEMA,
        "command": "analyze",
        "polynomial": format_polynomial(P),
        "variables": list(P.var_names),
        "weights": list(P.weights),
        "degree": P.degree,
        "calabi_yau": is_calabi_yau(P),
        "atoms": [{"kind": a.kind,
                   "variables": [P.var_names[v] for v in a.variables],
                   "exponents": list(a.exponents)} for a in P.atoms],
        "aut_order": aut.order,
        "sl_order": sl,
        "j": [_fmt_frac(x) for x in j_element(P)],
        "s": [_fmt_frac(x) for x in s] if s else None,
        "k": k,
    }
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
        return 0
    print(f"polynomial: {data['polynomial']}")
    print(f"variables:  {' '.join(data['variables'])}")
    print(f"weights:    ({', '.join(map(str, data['weights']))})   degree: {data['degree']}")
    print(f"calabi_yau: {'yes' if data['calabi_yau'] else 'no'}")
    atoms = ", ".join(
        f"{a['kind']}({'*'.join(a['variables'])}; {','.join(map(str, a['exponents']))})"
        for a in data["atoms"])
    print(f"atoms:      {atoms}")
    print(f"aut_order:  {data['aut_order']}   sl_order: {data['sl_order']}")
    print(f"j:          {_fmt_vec(j_element(P))}")
    if s is not None:
        print(f"s:          {_fmt_vec(s)}   (k = {k})")
    else:
        print("s:          none (not of the split form x0^k + f)")
    return 0


# ---------------------------------------------------------------------------
# mirror
# ---------------------------------------------------------------------------

def cmd_mirror(args, cap: int) -> int:
    P = parse_polynomial(args.polynomial)
    Pv = transpose(P)
    gens = parse_group_spec(args.group, P, cap)
    H = enumerate_group(P, gens, cap)
    Hv = dual_group(H, cap)
    data = {
        "schema": SCHEMA,
        "command": "mirror",
        "polynomial": format_polynomial(P),
        "transpose": format_polynomial(Pv),
        "group_order": H.order,
        "dual_group_order": Hv.order,
        "dual_group_elements": [[_fmt_frac(x) for x in g] for g in Hv.elements],
    }
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
        return 0
    print(f"W          = {data['polynomial']}")
    print(f"transpose  = {data['transpose']}")
    print(f"group H    : order {H.order}")
    print(f"dual H'    : order {Hv.order}, elements:")
    for g in Hv.elements:
        print(f"  {_fmt_vec(g)}")
    return 0


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _grid_json(grid: SectorGrid, with_diamonds: bool, with_weights: bool) -> list:
    rows = []
    for b in range(grid.k):
        cells = []
        for a in range(grid.k):
            cell: dict = {"a": a, "total": grid.total(b, a)}
            if with_diamonds:
                cell["diamond"] = [
                    {"p": _fmt_frac(p), "q": _fmt_frac(q), "dim": dim}
                    for (p, q), dim in sorted(grid.cell(b, a).items())]
            if with_weights:
                cell["weights"] = [
                    {"p": _fmt_frac(p), "q": _fmt_frac(q), "weight": w, "dim": dim}
                    for (p, q, w), dim in sorted(grid.weighted_cell(b, a).items())]
            cells.append(cell)
        rows.append({"b": b, "cells": cells})
    return rows


def _print_grid_text(grid: SectorGrid, setup, with_diamonds: bool,
                     with_weights: bool) -> None:
    k = grid.k
    print(f"W = {format_polynomial(setup.W)}")
    print(f"k = {k}   K-order = {setup.K_inner.order}   "
          f"calabi_yau = {'yes' if grid.calabi_yau else 'no'}")
    print("rows: d_s = b/k (the H[s^b] slice); columns: d_j = a/k; "
          "entries: dim of the Q_j = 0 state space")
    totals = grid.row_totals()
    width = max(5, max(len(str(v)) for row in totals for v in row) + 2)
    header = " " * 8 + "".join(f"{'a=' + str(a):>{width}}" for a in range(k))
    print(header)
    for b in range(k):
        label = "H[id]" if b == 0 else f"H[s^{b}]"
        print(f"{label:8s}" + "".join(f"{v:>{width}}" for v in totals[b]))
    if with_diamonds:
        print("diamonds (p, q) -> dim:")
        for b in range(k):
            for a in range(k):
                cell = grid.cell(b, a)
                if cell:
                    body = "  ".join(f"({_fmt_frac(p)},{_fmt_frac(q)}):{d}"
                                     for (p, q), d in sorted(cell.items()))
                    print(f"  [b={b},a={a}] {body}")
    if with_weights:
        print("weights (p, q, w) -> dim:")
        for b in range(k):
            for a in range(k):
                cell = grid.weighted_cell(b, a)
                if cell:
                    body = "  ".join(f"({_fmt_frac(p)},{_fmt_frac(q)},{w}):{d}"
                                     for (p, q, w), d in sorted(cell.items()))
                    print(f"  [b={b},a={a}] {body}")


def cmd_table(args, cap: int) -> int:
    W = parse_polynomial(args.polynomial)
    _, f = split_cyclic(W)
    gens = parse_group_spec(args.K, f, cap)
    setup = admissible_setup(W, gens, cap)
    grid = sector_grid(build_state_space(setup, cap))
    if args.format == "json":
        data = {
            "schema": SCHEMA,
            "command": "table",
            "polynomial": format_polynomial(W),
            "k": grid.k,
            "K_order": setup.K_inner.order,
            "K_generators": [_fmt_vec(g) for g in setup.K_inner.generators],
            "calabi_yau": grid.calabi_yau,
            "rows": _grid_json(grid, args.diamonds, args.weights),
        }
        print(json.dumps(data, indent=2, sort_keys=True))
        return 0
    if args.format == "csv":
        print("b,a,p,q,weight,dim")
        for b in range(grid.k):
            for a in range(grid.k):
                for (p, q, w), dim in sorted(grid.weighted_cell(b, a).items()):
                    print(f"{b},{a},{_fmt_frac(p)},{_fmt_frac(q)},{w},{dim}")
        return 0
    _print_grid_text(grid, setup, args.diamonds, args.weights)
    return 0


# ---------------------------------------------------------------------------
# k3
# ---------------------------------------------------------------------------

def cmd_k3(args, cap: int) -> int:
    W = parse_polynomial(args.polynomial)
    _, f = split_cyclic(W)
    gens = parse_group_spec(args.K, f, cap)
    pair = build_mirror_pair(W, gens, cap)
    report = fit_k3_pattern(sector_grid(pair.source_table))
    mirror_report = fit_k3_pattern(sector_grid(pair.target_table))
    inv = k3_invariants(report)
    minv = k3_invariants(mirror_report)
    lattice = None
    if report.kind == "prime":
        lattice = lattice_mirror_verdict(report, mirror_report)
    data = {
        "schema": SCHEMA,
        "command": "k3",
        "polynomial": format_polynomial(W),
        "mirror_polynomial": format_polynomial(pair.target.W),
        "K_order": pair.source.K_inner.order,
        "K_generators": [_fmt_vec(g) for g in pair.source.K_inner.generators],
        "mirror_K_order": pair.target.K_inner.order,
        "order": report.order,
        "kind": report.kind,
        "parameters": dict(sorted(report.params.items())),
        "mirror_parameters": dict(sorted(mirror_report.params.items())),
        "invariants": {"f1": inv.f1, "N1": inv.N1, "g1": inv.g1,
                       "N2": inv.N2, "g2": inv.g2},
        "mirror_invariants": {"f1": minv.f1, "N1": minv.N1, "g1": minv.g1,
                              "N2": minv.N2, "g2": minv.g2},
        "lattice": lattice,
    }
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
        return 0
    print(f"W      = {data['polynomial']}")
    print(f"mirror = {data['mirror_polynomial']}")
    print(f"order k = {report.order}   pattern = {report.kind}")
    print("parameters:        " + "  ".join(f"{n}={v}" for n, v in sorted(report.params.items())))
    print("mirror parameters: " + "  ".join(f"{n}={v}" for n, v in sorted(mirror_report.params.items())))
    print(f"fixed locus:        f1={inv.f1} isolated points, N1={inv.N1} curves, total genus g1={inv.g1}")
    print(f"mirror fixed locus: f1={minv.f1} isolated points, N1={minv.N1} curves, total genus g1={minv.g1}")
    if lattice is not None:
        verdict = "mirror lattices" if lattice["mirror_ok"] else "NOT mirror lattices"
        print(f"lattice invariants: (r, a) = ({lattice['r']}, {lattice['a']}); "
              f"mirror (r, a) = ({lattice['r_mirror']}, {lattice['a_mirror']}) -> {verdict}")
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _cells_json(report) -> list[dict]:
    return [{"statement": item.statement,
             "cell": [_fmt_frac(x) for x in item.cell],
             "lhs": item.lhs, "rhs": item.rhs,
             "pass": item.ok} for item in report.items]


def _check_case(case: cat.CatalogCase, cap: int) -> list[dict]:
    results = []

    def record(check: str, passed: bool, detail: str = "", cells=None) -> None:
        entry = {"case": case.name, "check": check,
                 "passed": bool(passed), "detail": detail}
        if cells is not None:
            entry["cells"] = cells
        results.append(entry)

    W = case.parse()
    pair = build_mirror_pair(W, case.K_generators(), cap)
    setup = pair.source

    # Milnor dimensions: sector totals match the weight-product formula
    mismatch = []
    for h in setup.G_elements:
        alg = sector_algebra(W, h)
        expected = restrict(W, h).milnor_dimension
        if alg.total_dimension != expected:
            mismatch.append(_fmt_vec(h))
    record("milnor-dimensions", not mismatch,
           f"{len(setup.G_elements)} sectors" if not mismatch else f"bad: {mismatch}")

    # Fermat oracle: series engine against direct monomial enumeration
    if is_fermat_diagonal(W):
        bad = 0
        for h in setup.G_elements:
            R = restrict(W, h)
            series = equivariant_hilbert(R)
            oracle: dict = {}
            for _, key, degree in fermat_monomial_basis(R):
                bucket = oracle.setdefault(degree, {})
                bucket[key] = bucket.get(key, 0) + 1
            if oracle != series.coefficients:
                bad += 1
        record("fermat-oracle", bad == 0, f"{len(setup.G_elements)} sectors")

    violations = moving_vanishing_violations(pair.source_table)
    record("vanishing", not violations, f"{len(violations)} violations" if violations else "")

    dual = verify_pair_duality(pair)
    record("pair-duality", dual.passed, f"{dual.cells_checked} cells")

    lg = verify_lg_mirror(pair)
    record("lg-mirror", lg.passed,
           f"{lg.cells_checked} cells" if lg.passed else
           "; ".join(f"{v.statement}{v.cell}: {v.lhs} != {v.rhs}" for v in lg.violations[:5]),
           cells=_cells_json(lg))

    if setup.k == 2:
        o2 = verify_order2_exchange(pair)
        record("order2-exchange", o2.passed, f"{o2.cells_checked} cells",
               cells=_cells_json(o2))

    if "k3" in case.tags and (setup.k == 4 or setup.k in (3, 5, 7, 13)):
        try:
            rep = fit_k3_pattern(sector_grid(pair.source_table))
            mrep = fit_k3_pattern(sector_grid(pair.target_table))
            inv, minv = k3_invariants(rep), k3_invariants(mrep)
            ok = inv.N1 == minv.g1 + 1 and minv.N1 == inv.g1 + 1
            detail = f"N1={inv.N1} g1'={minv.g1}"
            if rep.kind == "order4":
                p4 = rep.params
                ok = ok and 2 * p4["a"] + p4["b"] + 2 * p4["a_dual"] + p4["b_dual"] == 24
                detail += " 2a+b+2a'+b'=24"
            else:
                p = rep.order
                ok = ok and inv.f1 + minv.f1 + 4 == 24 * (p - 2) // (p - 1)
                lattice = lattice_mirror_verdict(rep, mrep)
                ok = ok and lattice["mirror_ok"]
                detail += f" lattice=({lattice['r']},{lattice['a']})"
            record("k3-corollaries", ok, detail)
        except BHMirrorError as exc:
            record("k3-corollaries", False, f"{type(exc).__name__}: {exc}")
    return results


def cmd_verify(args, cap: int) -> int:
    if args.catalog:
        cases = cat.load_catalog(args.catalog)
    else:
        cases = cat.ADMISSIBLE_CASES
    if args.case:
        cases = tuple(c for c in cases if c.name == args.case)
        if not cases and args.case != "krawitz-scan":
            raise InputError(f"no catalog case named {args.case!r}")

    results: list[dict] = []
    with ThreadPoolExecutor(max_workers=min(8, os.cpu_count() or 1)) as pool:
        for case_results in pool.map(lambda c: _check_case(c, cap), cases):
            results.extend(case_results)

    if not args.case or args.case == "krawitz-scan":
        bad = []
        checked = 0
        for text in cat.KRAWITZ_POLYNOMIALS:
            rep = verify_krawitz(parse_polynomial(text), cap)
            checked += rep.cells_checked
            if not rep.passed:
                bad.append(text)
        results.append({"case": "krawitz-scan", "check": "krawitz",
                        "passed": not bad,
                        "detail": f"{len(cat.KRAWITZ_POLYNOMIALS)} polynomials, {checked} cells"
                        if not bad else f"failing: {bad}"})

    all_pass = all(r["passed"] for r in results)
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "command": "verify",
                          "passed": all_pass, "results": results},
                         indent=2, sort_keys=True))
    else:
        for r in results:
            status = "PASS" if r["passed"] else "FAIL"
            detail = f"  [{r['detail']}]" if r["detail"] else ""
            print(f"{status}  {r['case']}: {r['check']}{detail}")
        n_fail = sum(1 for r in results if not r["passed"])
        print(f"{'ALL CHECKS PASSED' if all_pass else f'{n_fail} CHECKS FAILED'} "
              f"({len(results)} checks)")
    return 0 if all_pass else 1


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhmirror",
        description="Exact mirror-symmetry computations for invertible "
                    "polynomials with a cyclic automorphism.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default="text")

    p = sub.add_parser("analyze", help="weights, atoms, symmetry groups")
    p.add_argument("polynomial")
    add_common(p)

    p = sub.add_parser("mirror", help="transpose polynomial and dual group")
    p.add_argument("polynomial")
    p.add_argument("--group", default="J",
                   help="subgroup of Aut: gen:[..];gen:[..] or J | SL | full | trivial")
    add_common(p)

    p = sub.add_parser("table", help="sector grid of the state space")
    p.add_argument("polynomial")
    p.add_argument("--K", default="trivial",
                   help="inner invariance group over the non-cyclic variables")
    p.add_argument("--weights", action="store_true", help="weight-resolved cells")
    p.add_argument("--diamonds", action="store_true", help="bidegree-resolved cells")
    add_common(p, ("text", "json", "csv"))

    p = sub.add_parser("k3", help="K3 pattern fit, fixed-locus and lattice invariants")
    p.add_argument("polynomial")
    p.add_argument("--K", default="trivial")
    add_common(p)

    p = sub.add_parser("verify", help="run the verification suite over a catalog")
    p.add_argument("--catalog", help="path to a JSON catalog file")
    p.add_argument("--case", help="run a single named case")
    add_common(p)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cap = int(os.environ.get("BHMIRROR_MAX_GROUP", 10**6))
    handlers = {
        "analyze": cmd_analyze,
        "mirror": cmd_mirror,
        "table": cmd_table,
        "k3": cmd_k3,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args, cap)
    except InternalError as exc:
        print(f"internal error [{exc.code}]: {exc}", file=sys.stderr)
        return 3
    except AssertionError as exc:
        print(f"internal error [Assertion]: {exc}", file=sys.stderr)
        return 3
    except BHMirrorError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error [IO]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
