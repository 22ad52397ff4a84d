"""Forward-mode first-derivative arithmetic over four holonomic coordinates.

A :class:`Jet1` is a scalar together with its four exact partial derivatives
with respect to u^1..u^4.  Arithmetic propagates the derivatives by the
Leibniz and chain rules, so any expression built from lifted coordinates via
+, -, *, /, integer powers, exp, sin and cos carries machine-exact first
derivatives.  That is all the frame and divergence computations need: the
catalog tetrads are polynomial/exponential/trigonometric, and the covariant
divergence of an invariant field uses only first derivatives of the tetrad.

:class:`JetMatrix4` stores a 4x4 matrix of jets as a value matrix plus a
stack of four partial matrices, which keeps inverses, determinants and
products vectorised while staying exact to first order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

N_COORDS = 4


@dataclass(frozen=True)
class Point:
    """Spacetime point in holonomic coordinates u^1..u^4; all components finite."""

    u1: float
    u2: float
    u3: float
    u4: float

    def __post_init__(self):
        for name in ("u1", "u2", "u3", "u4"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"non-finite coordinate {name}={v!r}")
            object.__setattr__(self, name, v)

    @staticmethod
    def from_array(arr) -> "Point":
        a = np.asarray(arr, dtype=float).reshape(4)
        return Point(a[0], a[1], a[2], a[3])

    def as_array(self) -> np.ndarray:
        return np.array([self.u1, self.u2, self.u3, self.u4], dtype=float)

    def coord(self, k: int) -> float:
        """Coordinate u^k, k = 1..4."""
        if not 1 <= k <= 4:
            raise ValueError(f"coordinate index must be 1..4, got {k}")
        return self.as_array()[k - 1]


class Jet1:
    """Scalar value plus exact first partials (d/du^1, ..., d/du^4)."""

    __slots__ = ("value", "partials")

    def __init__(self, value: float, partials=None):
        self.value = float(value)
        if partials is None:
            self.partials = np.zeros(N_COORDS)
        else:
            self.partials = np.asarray(partials, dtype=float).reshape(N_COORDS)

    @staticmethod
    def constant(x: float) -> "Jet1":
        return Jet1(float(x))

    def partial(self, k: int) -> float:
        """Partial derivative with respect to u^k, k = 1..4."""
        if not 1 <= k <= 4:
            raise ValueError(f"coordinate index must be 1..4, got {k}")
        return float(self.partials[k - 1])

    @staticmethod
    def _coerce(x) -> "Jet1":
        if isinstance(x, Jet1):
            return x
        return Jet1(float(x))

    def __add__(self, other):
        o = Jet1._coerce(other)
        return Jet1(self.value + o.value, self.partials + o.partials)

    __radd__ = __add__

    def __sub__(self, other):
        o = Jet1._coerce(other)
        return Jet1(self.value - o.value, self.partials - o.partials)

    def __rsub__(self, other):
        o = Jet1._coerce(other)
        return Jet1(o.value - self.value, o.partials - self.partials)

    def __neg__(self):
        return Jet1(-self.value, -self.partials)

    def __mul__(self, other):
        o = Jet1._coerce(other)
        return Jet1(self.value * o.value,
                    self.value * o.partials + o.value * self.partials)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Jet1._coerce(other)
        if o.value == 0.0:
            raise ZeroDivisionError("jet division by zero value")
        v = self.value / o.value
        return Jet1(v, (self.partials - v * o.partials) / o.value)

    def __rtruediv__(self, other):
        return Jet1._coerce(other).__truediv__(self)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("jet powers are restricted to non-negative integers")
        if n == 0:
            return Jet1(1.0)
        return Jet1(self.value ** n, n * self.value ** (n - 1) * self.partials)

    def exp(self) -> "Jet1":
        v = math.exp(self.value)
        return Jet1(v, v * self.partials)

    def sin(self) -> "Jet1":
        return Jet1(math.sin(self.value), math.cos(self.value) * self.partials)

    def cos(self) -> "Jet1":
        return Jet1(math.cos(self.value), -math.sin(self.value) * self.partials)

    def abs(self) -> "Jet1":
        # |x| is smooth away from 0; callers guard the origin.
        if self.value == 0.0:
            raise ZeroDivisionError("jet abs at zero value")
        s = 1.0 if self.value > 0 else -1.0
        return Jet1(s * self.value, s * self.partials)

    def __repr__(self):
        return f"Jet1({self.value!r}, {self.partials.tolist()!r})"


def jet_lift(p: Point, k: int) -> Jet1:
    """Lift coordinate u^k at p to a jet seeded as the k-th independent variable."""
    if not 1 <= k <= 4:
        raise ValueError(f"coordinate index must be 1..4, got {k}")
    seed = np.zeros(N_COORDS)
    seed[k - 1] = 1.0
    return Jet1(p.coord(k), seed)


def jet_add(a, b) -> Jet1:
    return Jet1._coerce(a) + b


def jet_sub(a, b) -> Jet1:
    return Jet1._coerce(a) - b


def jet_mul(a, b) -> Jet1:
    return Jet1._coerce(a) * b


def jet_div(a, b) -> Jet1:
    return Jet1._coerce(a) / Jet1._coerce(b)


def jet_exp(a) -> Jet1:
    return Jet1._coerce(a).exp()


def jet_sin(a) -> Jet1:
    return Jet1._coerce(a).sin()


def jet_cos(a) -> Jet1:
    return Jet1._coerce(a).cos()


class JetMatrix4:
    """4x4 matrix of jets: value matrix ``values`` and partials ``partials[k] = d_k values``.

    Row/column semantics are fixed by the caller; the frame catalog stores
    e_alpha^i with the frame index alpha as the row and the coordinate index
    i as the column, and the inverse therefore holds e^alpha_i at [i, alpha].
    """

    __slots__ = ("values", "partials")

    def __init__(self, values, partials):
        self.values = np.asarray(values, dtype=float).reshape(4, 4)
        self.partials = np.asarray(partials, dtype=float).reshape(4, 4, 4)

    @staticmethod
    def from_jets(rows) -> "JetMatrix4":
        """Build from a 4x4 nest of Jet1/number entries."""
        vals = np.zeros((4, 4))
        parts = np.zeros((4, 4, 4))
        for a in range(4):
            for i in range(4):
                j = Jet1._coerce(rows[a][i])
                vals[a, i] = j.value
                parts[:, a, i] = j.partials
        return JetMatrix4(vals, parts)

    @staticmethod
    def constant(m) -> "JetMatrix4":
        return JetMatrix4(np.asarray(m, dtype=float), np.zeros((4, 4, 4)))

    def entry(self, row: int, col: int) -> Jet1:
        """Entry as a Jet1; row, col = 1..4."""
        if not (1 <= row <= 4 and 1 <= col <= 4):
            raise ValueError("matrix indices must be 1..4")
        return Jet1(self.values[row - 1, col - 1], self.partials[:, row - 1, col - 1])

    def transpose(self) -> "JetMatrix4":
        return JetMatrix4(self.values.T, np.transpose(self.partials, (0, 2, 1)))

    def __matmul__(self, other: "JetMatrix4") -> "JetMatrix4":
        vals = self.values @ other.values
        parts = np.einsum("kab,bc->kac", self.partials, other.values)
        parts += np.einsum("ab,kbc->kac", self.values, other.partials)
        return JetMatrix4(vals, parts)

    def scale(self, s: Jet1) -> "JetMatrix4":
        parts = s.value * self.partials + self.values[None, :, :] * s.partials[:, None, None]
        return JetMatrix4(s.value * self.values, parts)

    def inv(self) -> "JetMatrix4":
        vi = np.linalg.inv(self.values)
        # d_k(V^-1) = -V^-1 (d_k V) V^-1, exact to first order
        parts = -np.einsum("ab,kbc,cd->kad", vi, self.partials, vi)
        return JetMatrix4(vi, parts)

    def det(self) -> Jet1:
        d = np.linalg.det(self.values)
        vi = np.linalg.inv(self.values)
        grads = d * np.einsum("kab,ba->k", self.partials, vi)
        return Jet1(d, grads)
