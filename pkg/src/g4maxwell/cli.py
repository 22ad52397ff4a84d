"""Command-line surface: catalog checks, solving, scans, no-gos, and reports.

Exit codes: 0 all checks passed, 1 verification failure, 2 invalid input,
3 infeasible sampling.  All randomness flows from ``--seed`` through
counter-based generators, so repeated runs (and runs with different worker
counts) produce byte-identical documents.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .catalog import (GroupError, GroupId, parse_group, random_point,
                      structure_constants, verify_commutation)
from .maxwell import (FrameMetric, MetricError, ScanConfig, UPPER_TRIANGLE_INDEX,
                      algebraic_residual, field_kernel_basis,
                      field_nullspace_dim, pde_residual, residual_normalizer,
                      scan_classify, solve_alpha)
from .solutions import (InfeasibleSampling, certify_no_go,
                        emit_classification_report, enumerate_branches,
                        run_verification)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_BAD_INPUT = 2
EXIT_INFEASIBLE = 3


class InputError(ValueError):
    pass


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_eta_file(path: str) -> FrameMetric:
    """Read {"eta_upper_triangle": [10 reals]} with position-precise diagnostics."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise InputError(f"{path}: cannot read ({e.strerror})") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict) or "eta_upper_triangle" not in doc:
        raise InputError(f"{path}: expected an object with key 'eta_upper_triangle'")
    vals = doc["eta_upper_triangle"]
    if not isinstance(vals, list) or len(vals) != 10:
        got = f"list of {len(vals)}" if isinstance(vals, list) else type(vals).__name__
        raise InputError(f"{path}: 'eta_upper_triangle' must hold exactly 10 reals "
                         f"(row-major upper triangle), got {got}")
    for n, v in enumerate(vals):
        i, j = UPPER_TRIANGLE_INDEX[n]
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(float(v)):
            raise InputError(f"{path}: entry {n + 1} (eta_{{{i + 1}{j + 1}}}) is not a finite real: {v!r}")
    try:
        return FrameMetric.from_upper_triangle(vals)
    except MetricError as e:
        raise InputError(f"{path}: {e}") from None


def _parse_group_arg(text: str) -> GroupId:
    try:
        return parse_group(text)
    except GroupError as e:
        raise InputError(str(e)) from None


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_catalog_check(args) -> tuple[int, str]:
    g = _parse_group_arg(args.group)
    rng = np.random.Generator(np.random.Philox(key=np.array([args.seed, 300], dtype=np.uint64)))
    worst = {"commutation": 0.0, "duality": 0.0, "completeness": 0.0}
    for _ in range(args.samples):
        p = random_point(g, rng)
        rep = verify_commutation(g, p, args.tol)
        worst["commutation"] = max(worst["commutation"], rep.max_residual)
        worst["duality"] = max(worst["duality"], rep.duality_residual)
        worst["completeness"] = max(worst["completeness"], rep.completeness_residual)
    jac = structure_constants(g).jacobi_residual()
    passed = all(v <= args.tol for v in worst.values()) and jac <= 1e-14
    doc = {"command": "catalog-check", "group": g.label(), "samples": args.samples,
           "seed": args.seed, "tol": args.tol, "max_residuals": worst,
           "jacobi_residual": jac, "passed": passed}
    if args.format == "json":
        return (EXIT_OK if passed else EXIT_VERIFY_FAIL, _dump(doc))
    text = (f"{g.label()}: {args.samples} points, max commutation residual "
            f"{worst['commutation']:.3e}, duality {worst['duality']:.3e}, "
            f"completeness {worst['completeness']:.3e}, jacobi {jac:.3e} -> "
            f"{'PASS' if passed else 'FAIL'}\n")
    return (EXIT_OK if passed else EXIT_VERIFY_FAIL, text)


def cmd_solve(args) -> tuple[int, str]:
    g = _parse_group_arg(args.group)
    eta = load_eta_file(args.eta)
    C = structure_constants(g)
    basis = solve_alpha(C, eta, args.tol)
    field_basis = field_kernel_basis(C, eta, args.tol)
    rng = np.random.Generator(np.random.Philox(key=np.array([args.seed, 400], dtype=np.uint64)))
    worst = 0.0
    for row in field_basis:
        r = float(np.linalg.norm(algebraic_residual(C, eta, row)))
        for _ in range(3):
            p = random_point(g, rng)
            r = max(r, float(np.linalg.norm(pde_residual(g, eta, row, p))))
        worst = max(worst, r / residual_normalizer(C, eta, row))
    doc = {
        "command": "solve",
        "group": g.label(),
        "eta_upper_triangle": eta.upper_triangle(),
        "eta_det": eta.det,
        "eta_admissible": eta.admissible,
        "nullspace_basis": [[float(x) for x in row] for row in basis],
        "nullspace_dim": int(basis.shape[0]),
        "field_nullspace_basis": [[float(x) for x in row] for row in field_basis],
        "field_nullspace_dim": field_nullspace_dim(C, eta, args.tol),
        "pure_gauge_directions": list(C.gauge_indices()),
        "max_normalized_residual": worst,
        "seed": args.seed,
        "tol": args.tol,
    }
    if args.format == "json":
        return EXIT_OK, _dump(doc)
    lines = [f"group {g.label()}: nullspace dim {doc['nullspace_dim']} "
             f"(field-relevant {doc['field_nullspace_dim']}, pure gauge slots "
             f"{doc['pure_gauge_directions']})"]
    for row in field_basis:
        lines.append("  field solution alpha = [" + ", ".join(f"{x: .6f}" for x in row) + "]")
    lines.append(f"  max normalized residual {worst:.3e}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_scan(args) -> tuple[int, str]:
    g = _parse_group_arg(args.group)
    cfg = ScanConfig(count=args.samples, seed=args.seed, tol=args.tol, workers=args.workers)
    result = scan_classify(g, cfg)
    if args.format == "csv":
        lines = ["field_nullspace_dim,count"]
        for k in sorted(result.histogram):
            lines.append(f"{k},{result.histogram[k]}")
        return EXIT_OK, "\n".join(lines) + "\n"
    if args.format == "json":
        return EXIT_OK, _dump(result.to_dict())
    lines = [f"{g.label()}: {args.samples} Lorentzian samples, field nullspace dimensions:"]
    for k in sorted(result.histogram):
        lines.append(f"  dim {k}: {result.histogram[k]}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_nogo(args) -> tuple[int, str]:
    g = _parse_group_arg(args.group)
    _, certs = enumerate_branches()
    cert = next((c for c in certs if c.group_tag == g.tag), None)
    if cert is None:
        raise InputError(f"{g.label()} carries solution branches; no-go certification applies "
                         f"to G4-II, G4-III, G4-VII, G4-VIII")
    rep = certify_no_go(cert, n_samples=args.samples, seed=args.seed,
                        tol=args.tol, workers=args.workers)
    if args.format == "json":
        return (EXIT_OK if rep.passed else EXIT_VERIFY_FAIL, _dump(rep.to_dict()))
    nontrivial = args.samples - rep.histogram.get(0, 0)
    text = (f"{rep.group}: {nontrivial} nontrivial solutions in {args.samples} random "
            f"Lorentzian samples ({rep.zero_fraction:.2%} trivial)\n"
            f"  printed:   {rep.printed_relation}\n"
            f"  certified: {rep.certified_relation}\n"
            f"  enabling surface: min field dim {rep.enabling_min_field_dim}, "
            f"det signs {rep.enabling_det_signs}, max residual {rep.enabling_max_residual:.2e}\n"
            f"  -> {'PASS' if rep.passed else 'FAIL'}\n")
    return (EXIT_OK if rep.passed else EXIT_VERIFY_FAIL, text)


def cmd_verify_paper(args) -> tuple[int, str]:
    result = run_verification(branch_samples=args.branch_samples,
                              nogo_samples=args.nogo_samples,
                              seed=args.seed, tol=args.tol, workers=args.workers,
                              catalog_points=args.catalog_points)
    code = EXIT_OK if result.passed else EXIT_VERIFY_FAIL
    if args.format == "json":
        return code, _dump(result.to_dict())
    return code, emit_classification_report(result, "text")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="g4maxwell",
        description="Verification engine for invariant vacuum Maxwell fields on "
                    "simply transitive four-parameter homogeneous spacetimes.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, samples_default, tol_default=1e-9, formats=("text", "json")):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=tol_default)
        p.add_argument("--samples", type=int, default=samples_default)
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", default=None, help="write the document to a file instead of stdout")

    p = sub.add_parser("catalog-check", help="frame validity: duality, completeness, commutation")
    p.add_argument("--group", required=True)
    common(p, 100, tol_default=1e-10)
    p.set_defaults(handler=cmd_catalog_check)

    p = sub.add_parser("solve", help="nullspace of the field equations for a given frame metric")
    p.add_argument("--group", required=True)
    p.add_argument("--eta", required=True, help='JSON file {"eta_upper_triangle": [10 reals]}')
    common(p, 1)
    p.set_defaults(handler=cmd_solve)

    # csv output exists only here: it carries the scan histogram
    p = sub.add_parser("scan", help="histogram of field nullspace dimensions over random metrics")
    p.add_argument("--group", required=True)
    p.add_argument("--workers", type=int, default=1)
    common(p, 1000, formats=("text", "json", "csv"))
    p.set_defaults(handler=cmd_scan)

    p = sub.add_parser("nogo", help="certify a no-go group: scan plus forced-relation argument")
    p.add_argument("--group", required=True)
    p.add_argument("--workers", type=int, default=1)
    common(p, 10000)
    p.set_defaults(handler=cmd_nogo)

    for name in ("verify-paper", "report"):
        p = sub.add_parser(name, help="full classification: catalog, branches, no-gos, ledger")
        p.add_argument("--branch-samples", type=int, default=200)
        p.add_argument("--nogo-samples", type=int, default=10000)
        p.add_argument("--catalog-points", type=int, default=50)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None)
        p.set_defaults(handler=cmd_verify_paper)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "samples", 1) < 1:
        print("error: --samples must be >= 1", file=sys.stderr)
        return EXIT_BAD_INPUT
    if getattr(args, "tol", 1.0) <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        code, text = args.handler(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (GroupError, MetricError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except InfeasibleSampling as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
