"""Invariant electromagnetic fields and the vacuum field equations, two ways.

A constant frame potential alpha_alpha induces the holonomic potential
A_i = e^alpha_i alpha_alpha and the frame field strength
F_{alpha beta} = C^gamma_{alpha beta} alpha_gamma.  The vacuum equations are
computed along two independent routes:

* ``pde_residual``: the covariant divergence
  R^i = |det g|^{-1/2} d_j(|det g|^{1/2} F^{alpha beta} e_alpha^i e_beta^j),
  projected back to the frame, with all derivatives supplied exactly by jets
  (and re-checked against central finite differences in ``pde_residual_fd``);

* ``algebraic_residual``: the point-free contraction
  R^gamma = -(C^alpha_{beta alpha} F^{gamma beta}
             + 1/2 C^gamma_{alpha beta} F^{alpha beta}),
  whose exact form was fixed by matching the PDE route on randomized inputs.

Both agree to machine precision for every catalog group, which is what turns
the field equations into the 4x4 linear system ``maxwell_matrix`` in the
potential constants.  The sign convention for the holonomic field strength
is F_ij = A_{i,j} - A_{j,i}, chosen so the frame projection of the
jet-computed F_ij reproduces C^gamma_{alpha beta} alpha_gamma with the same
bracket convention the catalog verifies.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from . import linalg4
from .catalog import (FrameEval, GroupId, StructureConstants, frame,
                      random_point, structure_constants)
from .jets import Jet1, JetMatrix4, Point

UPPER_TRIANGLE_INDEX = ((0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3))

MINKOWSKI_DIAG = np.array([-1.0, 1.0, 1.0, 1.0])


class MetricError(ValueError):
    """Invalid frame metric input."""


@dataclass(frozen=True)
class FrameMetric:
    """Constant symmetric frame metric: eta_down, its inverse eta_up, and det(eta_down)."""

    eta_down: np.ndarray
    eta_up: np.ndarray
    det: float

    @classmethod
    def from_eta_down(cls, m) -> "FrameMetric":
        a = np.asarray(m, dtype=float).reshape(4, 4)
        if not np.all(np.isfinite(a)):
            raise MetricError("non-finite metric entries")
        if np.abs(a - a.T).max() > 1e-12 * max(1.0, np.abs(a).max()):
            raise MetricError("frame metric must be symmetric")
        a = 0.5 * (a + a.T)
        d = float(np.linalg.det(a))
        if d == 0.0:
            raise MetricError("frame metric is singular")
        return cls(eta_down=a, eta_up=np.linalg.inv(a), det=d)

    @classmethod
    def from_eta_up(cls, m) -> "FrameMetric":
        inv = np.linalg.inv(np.asarray(m, dtype=float).reshape(4, 4))
        return cls.from_eta_down(0.5 * (inv + inv.T))

    @classmethod
    def from_upper_triangle(cls, vals: Sequence[float]) -> "FrameMetric":
        vals = list(vals)
        if len(vals) != 10:
            raise MetricError(f"expected 10 upper-triangle entries, got {len(vals)}")
        a = np.zeros((4, 4))
        for (i, j), v in zip(UPPER_TRIANGLE_INDEX, vals):
            a[i, j] = a[j, i] = float(v)
        return cls.from_eta_down(a)

    def upper_triangle(self) -> list[float]:
        return [float(self.eta_down[i, j]) for i, j in UPPER_TRIANGLE_INDEX]

    @property
    def admissible(self) -> bool:
        """Lorentzian up to overall sign, i.e. det(eta_down) < 0."""
        return self.det < 0.0

    def signature(self, tol: float = 1e-9) -> linalg4.Signature:
        return linalg4.signature4(self.eta_down, tol)

    def scaled(self, lam: float) -> "FrameMetric":
        return FrameMetric.from_eta_down(lam * self.eta_down)

    def raise_form(self, f_down: np.ndarray) -> np.ndarray:
        f_up = self.eta_up @ f_down @ self.eta_up
        return 0.5 * (f_up - f_up.T)


def as_potential(alpha) -> np.ndarray:
    a = np.asarray(alpha, dtype=float).reshape(4)
    if not np.all(np.isfinite(a)):
        raise ValueError("potential constants must be finite")
    return a


@dataclass(frozen=True)
class FieldStrength:
    """Antisymmetric frame tensor: F_down = F_{alpha beta}, F_up = eta^.. eta^.. F_down."""

    f_down: np.ndarray
    f_up: np.ndarray

    @classmethod
    def from_potential(cls, C: StructureConstants, eta: FrameMetric, alpha) -> "FieldStrength":
        f_down = field_strength_frame(C, alpha)
        return cls(f_down=f_down, f_up=eta.raise_form(f_down))


def field_strength_frame(C: StructureConstants, alpha) -> np.ndarray:
    """F_{alpha beta} = C^gamma_{alpha beta} alpha_gamma (exactly antisymmetric)."""
    return np.einsum("gab,g->ab", C.C, as_potential(alpha))


def pfaffian(f: np.ndarray) -> float:
    """Pfaffian of an antisymmetric 4x4 matrix: f12 f34 - f13 f24 + f14 f23."""
    return float(f[0, 1] * f[2, 3] - f[0, 2] * f[1, 3] + f[0, 3] * f[1, 2])


# ---------------------------------------------------------------------------
# Holonomic quantities (jet-valued)
# ---------------------------------------------------------------------------


class JetVector(NamedTuple):
    """Four scalars with exact first partials: values[i], partials[k, i] = d_k values[i]."""

    values: np.ndarray
    partials: np.ndarray


def metric_holonomic(g: GroupId, eta: FrameMetric, p: Point):
    """(g_down, g_up, det_g) at p, all with exact first derivatives.

    g_down is built from the covectors, g_up from the frame vectors; they are
    exact mutual inverses, and det_g = det(e^alpha_i)^2 det(eta).
    """
    fe = frame(g, p)
    eta_d = JetMatrix4.constant(eta.eta_down)
    eta_u = JetMatrix4.constant(eta.eta_up)
    # g_ik = e^a_i eta_ab e^b_k ; e_down holds e^a_i at [i, a]
    g_down = fe.e_down @ eta_d @ fe.e_down.transpose()
    # g^ik = e_a^i eta^ab e_b^k ; e_up holds e_a^i at [a, i]
    g_up = fe.e_up.transpose() @ eta_u @ fe.e_up
    det_up = fe.det_up
    inv_sq = 1.0 / (det_up * det_up)
    det_g = eta.det * inv_sq
    return g_down, g_up, det_g


def potential_holonomic(g: GroupId, alpha, p: Point) -> JetVector:
    """Holonomic potential A_i = e^alpha_i alpha_alpha with exact first derivatives."""
    a = as_potential(alpha)
    fe = frame(g, p)
    values = fe.e_down.values @ a
    partials = np.einsum("kia,a->ki", fe.e_down.partials, a)
    return JetVector(values=values, partials=partials)


def field_strength_holonomic(g: GroupId, alpha, p: Point) -> np.ndarray:
    """Holonomic field strength F_ij = A_{i,j} - A_{j,i} computed via jets."""
    A = potential_holonomic(g, alpha, p)
    grad = A.partials.T  # grad[i, j] = d_j A_i
    return grad - grad.T


def frame_project(fe: FrameEval, f_ij: np.ndarray) -> np.ndarray:
    """F_{alpha beta} = e_alpha^i e_beta^j F_ij."""
    v = fe.e_up.values
    return v @ f_ij @ v.T


# ---------------------------------------------------------------------------
# Vacuum residual: covariant PDE route
# ---------------------------------------------------------------------------


def _weight_jet(eta: FrameMetric, det_up: Jet1) -> Jet1:
    # sqrt(|det g|) = sqrt(|det eta|) / |det e_alpha^i|
    return math.sqrt(abs(eta.det)) / det_up.abs()


def pde_residual(g: GroupId, eta: FrameMetric, alpha, p: Point) -> np.ndarray:
    """Frame components R^gamma of the covariant divergence of F at p.

    Only first derivatives of the tetrad enter: the frame components
    F^{alpha beta} are constants, so
    R^i = W^-1 d_j (W F^{alpha beta} e_alpha^i e_beta^j), W = sqrt(|det g|).
    """
    fe = frame(g, p)
    C = structure_constants(g)
    f_up = FieldStrength.from_potential(C, eta, alpha).f_up
    w = _weight_jet(eta, fe.det_up)
    # S^{ij} = W e_alpha^i F^{ab} e_beta^j
    fud = JetMatrix4.constant(f_up)
    s = (fe.e_up.transpose() @ fud @ fe.e_up).scale(w)
    r_i = np.einsum("jij->i", s.partials) / w.value
    # R^gamma = e^gamma_i R^i
    return fe.e_down.values.T @ r_i


def pde_residual_fd(g: GroupId, eta: FrameMetric, alpha, p: Point, h: float = 1e-5) -> np.ndarray:
    """Finite-difference oracle for ``pde_residual`` (central differences, step h)."""
    C = structure_constants(g)
    f_up = FieldStrength.from_potential(C, eta, alpha).f_up
    s0 = math.sqrt(abs(eta.det))

    def s_matrix(u: np.ndarray) -> np.ndarray:
        fe = frame(g, Point.from_array(u))
        v = fe.e_up.values
        w = s0 / abs(np.linalg.det(v))
        return w * (v.T @ f_up @ v)

    u0 = p.as_array()
    r_i = np.zeros(4)
    for j in range(4):
        up, dn = u0.copy(), u0.copy()
        up[j] += h
        dn[j] -= h
        r_i += (s_matrix(up)[:, j] - s_matrix(dn)[:, j]) / (2.0 * h)
    fe0 = frame(g, p)
    w0 = s0 / abs(np.linalg.det(fe0.e_up.values))
    return fe0.e_down.values.T @ (r_i / w0)


# ---------------------------------------------------------------------------
# Vacuum residual: algebraic route
# ---------------------------------------------------------------------------


def algebraic_residual(C: StructureConstants, eta: FrameMetric, alpha) -> np.ndarray:
    """Point-free residual R^gamma, equal to ``pde_residual`` at every in-domain point."""
    f_up = FieldStrength.from_potential(C, eta, alpha).f_up
    b = C.trace_vector()
    return -(f_up @ b + 0.5 * np.einsum("gab,ab->g", C.C, f_up))


def residual_normalizer(C: StructureConstants, eta: FrameMetric, alpha) -> float:
    """Scale factor making residual reports dimensionless: |eta_up|^2 |C| |alpha|."""
    a = as_potential(alpha)
    return float(np.linalg.norm(eta.eta_up) ** 2
                 * np.linalg.norm(C.C.ravel())
                 * np.linalg.norm(a)) or 1.0


def maxwell_matrix(C: StructureConstants, eta: FrameMetric) -> np.ndarray:
    """Matrix M with M @ alpha = algebraic_residual(C, eta, alpha) for every alpha."""
    f_down = C.C  # slice gamma is the field strength of the unit potential e_gamma
    f_up = np.einsum("ab,gbc,cd->gad", eta.eta_up, f_down, eta.eta_up)
    f_up = 0.5 * (f_up - np.transpose(f_up, (0, 2, 1)))
    b = C.trace_vector()
    return -(np.einsum("rgb,b->gr", f_up, b) + 0.5 * np.einsum("gab,rab->gr", C.C, f_up))


def solve_alpha(C: StructureConstants, eta: FrameMetric, tol: float = 1e-9) -> np.ndarray:
    """Orthonormal nullspace basis (rows) of the Maxwell matrix, gauge modes included."""
    return linalg4.nullspace4(maxwell_matrix(C, eta), tol)


def _matrix_scale(C: StructureConstants, eta: FrameMetric) -> float:
    # natural magnitude of Maxwell-matrix entries; rank thresholds must not
    # treat pure roundoff of an exactly-singular block as structure
    return float(np.linalg.norm(eta.eta_up) ** 2 * np.abs(C.C).max())


def field_nullspace_dim(C: StructureConstants, eta: FrameMetric, tol: float = 1e-9) -> int:
    """Nullspace dimension excluding pure-gauge potential directions."""
    gauge = [i - 1 for i in C.gauge_indices()]
    keep = [i for i in range(4) if i not in gauge]
    m = maxwell_matrix(C, eta)[:, keep]
    s = np.linalg.svd(m, compute_uv=False)
    cut = tol * max(s[0], _matrix_scale(C, eta))
    return len(keep) - int(np.sum(s > cut))


def field_kernel_basis(C: StructureConstants, eta: FrameMetric, tol: float = 1e-9) -> np.ndarray:
    """Orthonormal basis (rows) of the kernel restricted to non-gauge directions."""
    gauge = [i - 1 for i in C.gauge_indices()]
    keep = [i for i in range(4) if i not in gauge]
    m = maxwell_matrix(C, eta)[:, keep]
    _, s, vt = np.linalg.svd(m)
    cut = tol * max(s[0], _matrix_scale(C, eta))
    rank = int(np.sum(s > cut))
    basis = np.zeros((len(keep) - rank, 4))
    basis[:, keep] = vt[rank:]
    return basis


# ---------------------------------------------------------------------------
# Lorentzian sampling and classification scans
# ---------------------------------------------------------------------------


def _philox(seed: int, stream: int) -> np.random.Generator:
    """Counter-based generator keyed by (seed, stream); parallel-safe by construction."""
    return np.random.Generator(np.random.Philox(key=np.array([seed, stream], dtype=np.uint64)))


def random_lorentzian(rng: np.random.Generator, max_cond: Optional[float] = None) -> FrameMetric:
    """Random Lorentzian frame metric eta_down = P L diag(-1,1,1,1) L^T P^T.

    L is lower triangular with diagonal uniform in [0.25, 1.25] and strict
    lower entries uniform in [-1, 1]; det(eta_down) < 0 is guaranteed.  The
    permutation P moves the timelike direction across slots so all leading
    minor sign chambers are reached.  ``max_cond`` rejects badly conditioned
    draws (used where floating-point oracle comparisons need headroom).
    """
    for _ in range(10000):
        L = np.tril(rng.uniform(-1.0, 1.0, (4, 4)), -1) + np.diag(rng.uniform(0.25, 1.25, 4))
        eta = L @ np.diag(MINKOWSKI_DIAG) @ L.T
        perm = rng.permutation(4)
        eta = eta[np.ix_(perm, perm)]
        if max_cond is not None and np.linalg.cond(eta) > max_cond:
            continue
        return FrameMetric.from_eta_down(eta)
    raise MetricError("could not sample a Lorentzian metric within the condition bound")


@dataclass(frozen=True)
class ScanConfig:
    count: int = 1000
    seed: int = 0
    signature_filter: str = "lorentzian"  # or "any"
    tol: float = 1e-9
    workers: int = 1

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.signature_filter not in ("lorentzian", "any"):
            raise ValueError(f"unknown signature filter {self.signature_filter!r}")


@dataclass(frozen=True)
class ScanWitness:
    sample_index: int
    field_dim: int
    eta_upper_triangle: list
    alpha_basis: list
    residual_norm: float
    normalized_residual: float


@dataclass(frozen=True)
class ScanResult:
    group: str
    count: int
    seed: int
    histogram: dict
    witnesses: list

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "count": self.count,
            "seed": self.seed,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "witnesses": [w.__dict__ for w in self.witnesses],
        }


def _scan_etas(g: GroupId, config: ScanConfig) -> list[FrameMetric]:
    rng = _philox(config.seed, 1)
    out = []
    for _ in range(config.count):
        if config.signature_filter == "lorentzian":
            out.append(random_lorentzian(rng))
        else:
            a = rng.uniform(-1.0, 1.0, (4, 4))
            sym = 0.5 * (a + a.T)
            if abs(np.linalg.det(sym)) < 1e-6:
                sym += 0.5 * np.eye(4)
            out.append(FrameMetric.from_eta_down(sym))
    return out


def scan_classify(g: GroupId, config: ScanConfig) -> ScanResult:
    """Histogram of field-relevant nullspace dimensions over sampled metrics.

    Deterministic for a fixed seed; the worker count only chunks the
    computation and never changes the result (samples are merged by index).
    """
    C = structure_constants(g)
    etas = _scan_etas(g, config)

    def dims_for(chunk_range):
        return [(int(n), field_nullspace_dim(C, etas[int(n)], config.tol)) for n in chunk_range]

    indices = range(config.count)
    if config.workers > 1:
        chunks = np.array_split(np.arange(config.count), config.workers)
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            parts = list(pool.map(dims_for, [list(c) for c in chunks]))
        pairs = [item for part in parts for item in part]
    else:
        pairs = dims_for(list(indices))
    pairs.sort(key=lambda t: t[0])

    histogram: dict[int, int] = {}
    witnesses: list[ScanWitness] = []
    seen_dims = set()
    for n, dim in pairs:
        histogram[dim] = histogram.get(dim, 0) + 1
        if dim not in seen_dims:
            seen_dims.add(dim)
            eta = etas[n]
            basis = field_kernel_basis(C, eta, config.tol)
            if basis.shape[0]:
                alpha = basis.sum(axis=0)
                res = float(np.linalg.norm(algebraic_residual(C, eta, alpha)))
                nres = res / residual_normalizer(C, eta, alpha)
            else:
                res = nres = 0.0
            witnesses.append(ScanWitness(
                sample_index=n,
                field_dim=dim,
                eta_upper_triangle=eta.upper_triangle(),
                alpha_basis=[[float(x) for x in row] for row in basis],
                residual_norm=res,
                normalized_residual=nres,
            ))
    return ScanResult(group=g.label(), count=config.count, seed=config.seed,
                      histogram=histogram, witnesses=witnesses)


def residual_report(g: GroupId, eta: FrameMetric, alpha, seed: int = 0,
                    points_tested: int = 5) -> dict:
    """Structured residual report for one (group, eta, alpha) configuration."""
    C = structure_constants(g)
    rng = _philox(seed, 2)
    worst = 0.0
    for _ in range(points_tested):
        p = random_point(g, rng)
        worst = max(worst, float(np.linalg.norm(pde_residual(g, eta, alpha, p))))
    alg = float(np.linalg.norm(algebraic_residual(C, eta, alpha)))
    return {
        "group": g.label(),
        "params": {k: v for k, v in (("c", g.c), ("alpha", g.alpha)) if v is not None},
        "eta": eta.upper_triangle(),
        "alpha": [float(x) for x in as_potential(alpha)],
        "residual_norm": max(worst, alg),
        "normalized_residual": max(worst, alg) / residual_normalizer(C, eta, alpha),
        "points_tested": points_tested,
    }
