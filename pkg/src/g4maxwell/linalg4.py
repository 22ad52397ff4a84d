"""Small dense 4x4 helpers: determinant, inverse, eigenvalue signature, nullspace.

Everything is numpy-backed; the only policy added here is the rank
threshold convention: singular values below ``tol`` times the largest
singular value count as zero (all catalog constraints are polynomial with
O(1) coefficients, so a relative threshold is the right notion).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

DEFAULT_TOL = 1e-9


class Signature(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int


def det4(m) -> float:
    return float(np.linalg.det(np.asarray(m, dtype=float).reshape(4, 4)))


def inv4(m) -> np.ndarray:
    return np.linalg.inv(np.asarray(m, dtype=float).reshape(4, 4))


def signature4(m, tol: float = DEFAULT_TOL) -> Signature:
    """Counts of (+, -, 0) eigenvalues of a symmetric matrix at relative tolerance."""
    a = np.asarray(m, dtype=float).reshape(4, 4)
    w = np.linalg.eigvalsh(0.5 * (a + a.T))
    scale = float(np.max(np.abs(w)))
    if scale == 0.0:
        return Signature(0, 0, 4)
    cut = tol * scale
    n_plus = int(np.sum(w > cut))
    n_minus = int(np.sum(w < -cut))
    return Signature(n_plus, n_minus, 4 - n_plus - n_minus)


def rank4(m, tol: float = DEFAULT_TOL) -> int:
    s = np.linalg.svd(np.asarray(m, dtype=float), compute_uv=False)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > tol * s[0]))


def nullspace4(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the (right) nullspace, one vector per row.

    Returned vectors v satisfy ||m v|| <= tol * ||m||; the zero matrix yields
    the full standard basis.
    """
    a = np.asarray(m, dtype=float).reshape(4, 4)
    _, s, vt = np.linalg.svd(a)
    if s[0] == 0.0:
        return np.eye(4)
    rank = int(np.sum(s > tol * s[0]))
    return vt[rank:].copy()


def mutual_projection_residual(b1: np.ndarray, b2: np.ndarray) -> float:
    """Max residual of projecting each orthonormal row basis onto the other's span.

    Zero iff the two row spans coincide; used for scale-invariance and
    branch-closure checks.  Bases with different dimensions give residual 1.
    """
    b1 = np.atleast_2d(np.asarray(b1, dtype=float))
    b2 = np.atleast_2d(np.asarray(b2, dtype=float))
    if b1.shape[0] != b2.shape[0]:
        return 1.0
    if b1.shape[0] == 0:
        return 0.0
    r1 = b1 - (b1 @ b2.T) @ b2
    r2 = b2 - (b2 @ b1.T) @ b1
    return float(max(np.abs(r1).max(), np.abs(r2).max()))


def orthonormal_rows(vectors, tol: float = 1e-12) -> np.ndarray:
    """Orthonormal basis (rows) for the span of the given stack of vectors."""
    a = np.atleast_2d(np.asarray(vectors, dtype=float))
    if a.size == 0 or np.allclose(a, 0.0):
        return np.zeros((0, a.shape[1] if a.ndim == 2 else 4))
    _, s, vt = np.linalg.svd(a)
    rank = int(np.sum(s > tol * s[0]))
    return vt[:rank].copy()
