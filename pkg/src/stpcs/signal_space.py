"""Equivalence-class arithmetic on the cross-dimensional signal space.

A signal x and its ones-lift represent the same underlying signal sampled
at different rates.  Each equivalence class has a unique irreducible
representative (its *atom*); class dimension is the atom's dimension.
This module reduces signals/matrices to atoms, tests equivalence, and
equips the quotient with a lift-invariant inner product, norm, distance,
angle, and a cross-dimensional projection.

The inner product of x in R^m and y in R^n lifts both to t = lcm(m, n)
and scales by 1/t, which makes it invariant under replacing either
argument by any lift of itself (same-side lifts).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

import numpy as np

from .errors import BadShape, ZeroVector
from .stp import Side, as_matrix, as_signal, lift_signal, sta

__all__ = [
    "SignalClass",
    "MatrixClass",
    "reduce_signal",
    "reduce_matrix",
    "equivalent",
    "matrices_equivalent",
    "inner_v",
    "norm_v",
    "dist_v",
    "angle_v",
    "projection_matrix",
    "project",
]

# Absolute tolerance for the block-constancy test during reduction.  For
# integer-valued data the comparison is effectively exact.
REDUCE_ATOL = 1e-12


def _divisors_desc(n: int) -> list[int]:
    return [d for d in range(n, 0, -1) if n % d == 0]


def reduce_signal(x, side: Side = Side.LEFT, atol: float = REDUCE_ATOL):
    """Return (atom, multiplicity) with x == lift(atom, multiplicity).

    The atom is the unique irreducible representative of x's class; the
    search tries multiplicities in decreasing order, so the first match
    is maximal and the returned atom is irreducible.
    """
    x = as_signal(x)
    n = x.size
    for s in _divisors_desc(n):
        if s == 1:
            break
        if side is Side.LEFT:
            blocks = x.reshape(n // s, s)
            atom = blocks[:, 0]
            ok = np.allclose(blocks, atom[:, None], rtol=0.0, atol=atol)
        else:
            blocks = x.reshape(s, n // s)
            atom = blocks[0]
            ok = np.allclose(blocks, atom[None, :], rtol=0.0, atol=atol)
        if ok:
            return atom.copy(), s
    return x.copy(), 1


def reduce_matrix(a, side: Side = Side.LEFT, atol: float = REDUCE_ATOL):
    """Return (atom, multiplicity) with a == atom (x) I_s (LEFT) or I_s (x) atom."""
    a = as_matrix(a)
    m, n = a.shape
    for s in _divisors_desc(np.gcd(m, n)):
        if s == 1:
            break
        m0, n0 = m // s, n // s
        if side is Side.LEFT:
            blocks = a.reshape(m0, s, n0, s)
            atom = blocks[:, 0, :, 0]
            target = atom[:, None, :, None] * np.eye(s)[None, :, None, :]
        else:
            blocks = a.reshape(s, m0, s, n0)
            atom = blocks[0, :, 0, :]
            target = np.eye(s)[:, None, :, None] * atom[None, :, None, :]
        if np.allclose(blocks, target, rtol=0.0, atol=atol):
            return atom.copy(), s
    return a.copy(), 1


def equivalent(x, y, side: Side = Side.LEFT, atol: float = REDUCE_ATOL) -> bool:
    """True iff x and y reduce to the same atom."""
    ax, _ = reduce_signal(x, side, atol)
    ay, _ = reduce_signal(y, side, atol)
    return ax.size == ay.size and np.allclose(ax, ay, rtol=0.0, atol=atol)


def matrices_equivalent(a, b, side: Side = Side.LEFT, atol: float = REDUCE_ATOL) -> bool:
    """True iff a and b reduce to the same matrix atom."""
    aa, _ = reduce_matrix(a, side, atol)
    ab, _ = reduce_matrix(b, side, atol)
    return aa.shape == ab.shape and np.allclose(aa, ab, rtol=0.0, atol=atol)


@dataclass(frozen=True)
class SignalClass:
    """An equivalence class of signals, held by its irreducible atom."""

    side: Side
    atom: np.ndarray = field(repr=False)

    @classmethod
    def of(cls, x, side: Side = Side.LEFT) -> "SignalClass":
        atom, _ = reduce_signal(x, side)
        return cls(side, atom)

    @property
    def dim(self) -> int:
        return int(self.atom.size)


@dataclass(frozen=True)
class MatrixClass:
    """An equivalence class of matrices, held by its irreducible atom."""

    side: Side
    atom: np.ndarray = field(repr=False)

    @classmethod
    def of(cls, a, side: Side = Side.LEFT) -> "MatrixClass":
        atom, _ = reduce_matrix(a, side)
        return cls(side, atom)

    @property
    def shape(self) -> tuple[int, int]:
        return tuple(self.atom.shape)


def inner_v(x, y, side: Side = Side.LEFT) -> float:
    """Lift-invariant inner product: lift both to lcm dim, dot, divide by dim."""
    x, y = as_signal(x), as_signal(y)
    t = lcm(x.size, y.size)
    return float(lift_signal(x, t, side) @ lift_signal(y, t, side)) / t


def norm_v(x) -> float:
    """Lift-invariant norm sqrt(x.x / dim); independent of the side."""
    x = as_signal(x)
    return float(np.sqrt(x @ x / x.size))


def dist_v(x, y, side: Side = Side.LEFT) -> float:
    """Distance between classes: zero exactly when x and y are equivalent."""
    return norm_v(sta(x, y, side, subtract=True))


def angle_v(x, y, side: Side = Side.LEFT) -> float:
    """Angle (radians) between two nonzero classes.

    The cosine is clamped to [-1, 1] so parallel inputs never produce NaN.
    Raises ZeroVector if either argument has zero norm.
    """
    nx, ny = norm_v(x), norm_v(y)
    if nx == 0.0 or ny == 0.0:
        raise ZeroVector("angle is undefined for a zero signal")
    c = inner_v(x, y, side) / (nx * ny)
    return float(np.arccos(np.clip(c, -1.0, 1.0)))


def projection_matrix(m: int, n: int, side: Side = Side.LEFT) -> np.ndarray:
    """The n-by-m matrix projecting R^m onto R^n in the quotient geometry.

    With t = lcm(m, n) the LEFT form is (n/t)(I_n (x) 1_{t/n}^T)(I_m (x) 1_{t/m});
    RIGHT mirrors the ones-blocks to the other Kronecker side.  Applying it to
    x in R^m gives the distance-minimizing element of R^n, and the residual is
    orthogonal to every vector of R^n under the matching inner product.
    """
    if m < 1 or n < 1:
        raise BadShape("projection_matrix needs positive dimensions")
    t = lcm(m, n)
    jn = np.ones((t // n, 1))
    jm = np.ones((t // m, 1))
    if side is Side.LEFT:
        lift_n = np.kron(np.eye(n), jn)  # t x n
        lift_m = np.kron(np.eye(m), jm)  # t x m
    else:
        lift_n = np.kron(jn, np.eye(n))
        lift_m = np.kron(jm, np.eye(m))
    return (n / t) * lift_n.T @ lift_m


def project(x, n: int, side: Side = Side.LEFT) -> np.ndarray:
    """Project a signal onto R^n (closest point in the quotient distance)."""
    x = as_signal(x)
    return projection_matrix(x.size, n, side) @ x
