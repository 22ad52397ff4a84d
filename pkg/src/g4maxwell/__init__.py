"""Invariant vacuum Maxwell fields on simply transitive G4 homogeneous spacetimes.

The package is organized as:

* :mod:`g4maxwell.jets` — exact first-derivative scalar arithmetic and 4x4
  jet matrices (the numeric kernel);
* :mod:`g4maxwell.linalg4` — small dense determinant/inverse/signature/
  nullspace helpers;
* :mod:`g4maxwell.catalog` — the seven group tetrads, structure constants,
  domain guards and the commutation self-check;
* :mod:`g4maxwell.maxwell` — invariant fields, the covariant-divergence and
  algebraic residuals, the linear solver and classification scans;
* :mod:`g4maxwell.solutions` — the branch registry, no-go certificates,
  verification harness and the classification report;
* :mod:`g4maxwell.cli` — the ``g4maxwell`` command line.
"""

from .catalog import (CATALOG_CORRECTIONS, DomainError, FrameEval, GroupError,
                      GroupId, StructureConstants, domain_guard, frame,
                      killing_fields_g4vii, parse_group, random_point,
                      structure_constants, verify_commutation, verify_jacobi)
from .jets import Jet1, JetMatrix4, Point, jet_lift
from .linalg4 import Signature, det4, inv4, nullspace4, signature4
from .maxwell import (FieldStrength, FrameMetric, ScanConfig, ScanResult,
                      algebraic_residual, field_nullspace_dim,
                      field_strength_frame, field_strength_holonomic,
                      maxwell_matrix, metric_holonomic, pde_residual,
                      pde_residual_fd, potential_holonomic, random_lorentzian,
                      residual_report, scan_classify, solve_alpha)

__version__ = "0.1.0"
