"""Acceptance suite: every criterion at its stated tolerance, one line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the PASS/FAIL line
per criterion alongside the pytest verdicts.
"""

import json
import math
import time

import numpy as np
import pytest

from g4maxwell.catalog import (GroupId, random_point, structure_constants,
                               verify_commutation)
from g4maxwell.cli import main as cli_main
from g4maxwell.linalg4 import mutual_projection_residual
from g4maxwell.maxwell import (FieldStrength, algebraic_residual,
                               field_strength_frame, field_strength_holonomic,
                               frame_project, maxwell_matrix, pde_residual,
                               pde_residual_fd, random_lorentzian, solve_alpha)
from g4maxwell.catalog import frame
from g4maxwell.solutions import (certify_no_go, enumerate_branches,
                                 verify_branch)

CATALOG_CONFIGS = (
    GroupId("G4_I", c=-1.0), GroupId("G4_I", c=0.0), GroupId("G4_I", c=0.5),
    GroupId("G4_I", c=1.0), GroupId("G4_I", c=2.7),
    GroupId("G4_II"),
    GroupId("G4_III", alpha=math.pi / 6), GroupId("G4_III", alpha=math.pi / 3),
    GroupId("G4_IV"), GroupId("G4_V"), GroupId("G4_VII"), GroupId("G4_VIII"),
)

GROUPS_ONE_EACH = (
    GroupId("G4_I", c=2.7), GroupId("G4_II"), GroupId("G4_III", alpha=math.pi / 3),
    GroupId("G4_IV"), GroupId("G4_V"), GroupId("G4_VII"), GroupId("G4_VIII"),
)


def _report(num, name, ok, detail=""):
    print(f"criterion {num} [{name}]: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    assert ok, f"criterion {num} ({name}) failed: {detail}"


def test_criterion_1_frame_validity():
    t0 = time.perf_counter()
    rng = np.random.default_rng(1001)
    worst = 0.0
    for g in CATALOG_CONFIGS:
        for _ in range(100):
            rep = verify_commutation(g, random_point(g, rng), tol=1e-10)
            worst = max(worst, rep.max_residual, rep.duality_residual,
                        rep.completeness_residual)
    elapsed = time.perf_counter() - t0
    _report(1, "frame validity", worst <= 1e-10 and elapsed <= 5.0,
            f"(max residual {worst:.2e}, {elapsed:.2f} s)")


def test_criterion_2_jacobi():
    worst = max(structure_constants(g).jacobi_residual() for g in CATALOG_CONFIGS)
    _report(2, "jacobi identity", worst <= 1e-14, f"(max residual {worst:.2e})")


def test_criterion_3_field_strength_projection():
    rng = np.random.default_rng(1003)
    worst = 0.0
    for g in GROUPS_ONE_EACH:
        C = structure_constants(g)
        for _ in range(20):
            alpha = rng.uniform(-1, 1, 4)
            p = random_point(g, rng)
            projected = frame_project(frame(g, p), field_strength_holonomic(g, alpha, p))
            worst = max(worst, np.abs(projected - field_strength_frame(C, alpha)).max())
    _report(3, "field strength projection", worst <= 1e-10, f"(max deviation {worst:.2e})")


def test_criterion_4_oracle_equivalence():
    rng = np.random.default_rng(1004)
    worst_alg = worst_fd = 0.0
    for g in GROUPS_ONE_EACH:
        C = structure_constants(g)
        for _ in range(50):
            eta = random_lorentzian(rng, max_cond=50)
            alpha = rng.uniform(-1, 1, 4)
            p = random_point(g, rng)
            r_pde = pde_residual(g, eta, alpha, p)
            worst_alg = max(worst_alg, np.abs(r_pde - algebraic_residual(C, eta, alpha)).max())
            worst_fd = max(worst_fd, np.abs(r_pde - pde_residual_fd(g, eta, alpha, p, h=1e-5)).max())
    _report(4, "oracle equivalence", worst_alg <= 1e-9 and worst_fd <= 1e-6,
            f"(|pde-alg| {worst_alg:.2e}, |pde-fd| {worst_fd:.2e})")


def test_criterion_5_homogeneity():
    rng = np.random.default_rng(1005)
    worst = 0.0
    for g in GROUPS_ONE_EACH:
        eta = random_lorentzian(rng, max_cond=50)
        alpha = rng.uniform(-1, 1, 4)
        values = np.array([pde_residual(g, eta, alpha, random_point(g, rng))
                           for _ in range(20)])
        worst = max(worst, np.ptp(values, axis=0).max())
    _report(5, "homogeneity", worst <= 1e-9, f"(max spread {worst:.2e})")


def test_criterion_6_branch_verification():
    t0 = time.perf_counter()
    branches, _ = enumerate_branches()
    reports = {b.id: verify_branch(b, n_samples=200, tol=1e-9, seed=1006) for b in branches}
    elapsed = time.perf_counter() - t0

    ok = all(r.passed for r in reports.values())
    worst = max(r.field_residual_max for r in reports.values())
    constraint_worst = max(r.constraints_residual_max for r in reports.values())

    # the four named relations are reproduced on the sampled members:
    # the generic-branch eta^44 relation, the c=0 surface (certified covariant
    # reading, with the contravariant one rejected in the ledger), the
    # G4(IV) branch-2 block conditions, and the G4(V) closure relations
    named_ok = (reports["G4I-generic"].constraints_residual_max <= 1e-10
                and reports["G4I-c0"].constraints_residual_max <= 1e-10
                and bool(reports["G4I-c0"].ledger)
                and reports["G4IV-b2"].constraints_residual_max <= 1e-10
                and reports["G4V-main"].constraints_residual_max <= 1e-10
                and bool(reports["G4V-main"].ledger))
    # corrected branches must carry ledger entries; confirmed ones pass printed
    ledger_ok = all(bool(reports[bid].ledger) == reports[bid].substituted
                    or bool(reports[bid].ledger)
                    for bid in reports)
    _report(6, "branch verification",
            ok and named_ok and ledger_ok and worst <= 1e-9
            and constraint_worst <= 1e-10 and elapsed <= 60.0,
            f"(max residual {worst:.2e}, constraints {constraint_worst:.2e}, {elapsed:.1f} s)")


def test_criterion_7_no_go_certification():
    t0 = time.perf_counter()
    _, certs = enumerate_branches()
    ok = True
    details = []
    for cert in certs:
        rep = certify_no_go(cert, n_samples=10_000, seed=1007)
        ok = ok and rep.passed and rep.zero_fraction == 1.0
        if cert.group_tag in ("G4_II", "G4_III"):
            # the forced relation reproduces "g > 0": every constructed
            # enabling metric has positive determinant
            ok = ok and rep.enabling_det_signs == [1]
        else:
            # rank argument: nondegenerate spatial block forces alpha = 0
            ok = ok and rep.rank_check_min == 3 and rep.enabling_min_field_dim >= 1
        details.append(f"{cert.group_tag}:{rep.zero_fraction:.0%}")
    elapsed = time.perf_counter() - t0
    _report(7, "no-go certification", ok and elapsed <= 120.0,
            f"({', '.join(details)}; {elapsed:.1f} s)")


def test_criterion_8_scale_invariance():
    rng = np.random.default_rng(1008)
    worst = 0.0
    for g in GROUPS_ONE_EACH:
        C = structure_constants(g)
        for lam in (0.1, 10.0):
            for _ in range(10):
                eta = random_lorentzian(rng)
                b1 = solve_alpha(C, eta)
                b2 = solve_alpha(C, eta.scaled(lam))
                worst = max(worst, mutual_projection_residual(b1, b2))
    _report(8, "scale invariance", worst <= 1e-8, f"(max projection residual {worst:.2e})")


def test_criterion_9_cli_determinism(tmp_path, capsys):
    outs = []
    for run in range(2):
        path = tmp_path / f"scan-{run}.json"
        code = cli_main(["scan", "--group", "G4-II", "--samples", "400", "--seed", "42",
                         "--format", "json", "--out", str(path)])
        assert code == 0
        outs.append(path.read_bytes())
    workers_path = tmp_path / "scan-w4.json"
    code = cli_main(["scan", "--group", "G4-II", "--samples", "400", "--seed", "42",
                     "--format", "json", "--workers", "4", "--out", str(workers_path)])
    assert code == 0
    w4 = workers_path.read_bytes()

    report_paths = []
    for run in range(2):
        path = tmp_path / f"verify-{run}.json"
        code = cli_main(["verify-paper", "--branch-samples", "10", "--nogo-samples", "200",
                         "--catalog-points", "5", "--seed", "7", "--format", "json",
                         "--out", str(path)])
        assert code == 0
        report_paths.append(path.read_bytes())

    ok = (outs[0] == outs[1] == w4) and report_paths[0] == report_paths[1]
    _report(9, "CLI determinism", ok,
            "(byte-identical re-runs; worker count does not change documents)")
