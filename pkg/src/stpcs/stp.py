"""Dimension-free matrix/vector products built from Kronecker lifts.

Two mirror-symmetric conventions run through the whole package.  The
*left* convention lifts a matrix as ``A (x) I_s`` and a vector by
repeating each entry (``x (x) 1_s``); the *right* convention lifts as
``I_s (x) A`` and by repeating the whole vector (``1_s (x) x``).  Factors
with mismatched dimensions are lifted to the least common multiple, so
every product below is defined for arbitrary shapes and degenerates to
the conventional product when the inner dimensions already agree.

All functions are pure: they never mutate their arguments and hold no
state, so concurrent use is safe.
"""

from __future__ import annotations

from enum import Enum
from math import lcm

import numpy as np

from .errors import BadShape

__all__ = [
    "Side",
    "as_matrix",
    "as_signal",
    "kron",
    "swap_matrix",
    "lift_signal",
    "lift_matrix",
    "mm_stp",
    "mv_stp",
    "sta",
]


class Side(Enum):
    """Which side of the Kronecker product carries the lifting block."""

    LEFT = "left"
    RIGHT = "right"

    @classmethod
    def parse(cls, name: str) -> "Side":
        try:
            return cls(name.lower())
        except ValueError:
            raise BadShape(f"unknown side {name!r}; expected 'left' or 'right'") from None


def as_matrix(a) -> np.ndarray:
    """Validate and return `a` as a 2-D float array (rows, cols >= 1, finite)."""
    arr = np.asarray(a, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise BadShape(f"expected a nonempty 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    return arr


def as_signal(x) -> np.ndarray:
    """Validate and return `x` as a 1-D float array (dim >= 1, finite)."""
    arr = np.asarray(x, dtype=float).reshape(-1)
    if arr.size < 1:
        raise BadShape("expected a nonempty vector")
    if not np.all(np.isfinite(arr)):
        raise ValueError("signal entries must be finite")
    return arr


def kron(a, b) -> np.ndarray:
    """Kronecker product of two matrices."""
    return np.kron(as_matrix(a), as_matrix(b))


def swap_matrix(m: int, n: int) -> np.ndarray:
    """Permutation matrix W[m,n] exchanging the factors of a tensor pair.

    W[m,n] (x (x) y) = y (x) x for x in R^m, y in R^n.  Consequently
    W[m,p] (A (x) B) W[q,n] = B (x) A for A m-by-n, B p-by-q, and
    W[m,n]^-1 = W[m,n]^T = W[n,m].
    """
    if m < 1 or n < 1:
        raise BadShape("swap_matrix needs positive dimensions")
    w = np.zeros((m * n, m * n))
    for i in range(m):
        for j in range(n):
            w[j * m + i, i * n + j] = 1.0
    return w


def lift_signal(x, t: int, side: Side = Side.LEFT) -> np.ndarray:
    """Lift `x` to dimension `t` (a multiple of dim x) by ones-replication.

    LEFT repeats each entry t/dim times in place; RIGHT repeats the whole
    vector t/dim times.
    """
    x = as_signal(x)
    r, rem = divmod(t, x.size)
    if rem:
        raise BadShape(f"cannot lift dim {x.size} to non-multiple {t}")
    ones = np.ones(r)
    return np.kron(x, ones) if side is Side.LEFT else np.kron(ones, x)


def lift_matrix(a, s: int, side: Side = Side.LEFT) -> np.ndarray:
    """Lift `a` by an identity factor: A (x) I_s (LEFT) or I_s (x) A (RIGHT)."""
    a = as_matrix(a)
    eye = np.eye(s)
    return np.kron(a, eye) if side is Side.LEFT else np.kron(eye, a)


def mm_stp(a, b, side: Side = Side.LEFT) -> np.ndarray:
    """Matrix-matrix semi-tensor product.

    With t = lcm(a.cols, b.rows), LEFT computes
    (A (x) I_{t/n}) (B (x) I_{t/p}) and RIGHT the mirrored
    (I_{t/n} (x) A) (I_{t/p} (x) B).  When n = p both reduce exactly to
    the conventional product A @ B.
    """
    a, b = as_matrix(a), as_matrix(b)
    t = lcm(a.shape[1], b.shape[0])
    return lift_matrix(a, t // a.shape[1], side) @ lift_matrix(b, t // b.shape[0], side)


def mv_stp(a, x, side: Side = Side.LEFT) -> np.ndarray:
    """Matrix-vector semi-tensor product.

    With s = lcm(a.cols, dim x), LEFT computes
    (A (x) I_{s/n}) (x (x) 1_{s/r}) and RIGHT the mirrored
    (I_{s/n} (x) A) (1_{s/r} (x) x).  Reduces to A @ x when n = dim x.
    """
    a, x = as_matrix(a), as_signal(x)
    s = lcm(a.shape[1], x.size)
    return lift_matrix(a, s // a.shape[1], side) @ lift_signal(x, s, side)


def sta(x, y, side: Side = Side.LEFT, subtract: bool = False) -> np.ndarray:
    """Semi-tensor addition: lift both vectors to lcm dimension, then add.

    Returns a vector of dimension lcm(dim x, dim y); `subtract` flips the
    sign of the second operand.
    """
    x, y = as_signal(x), as_signal(y)
    t = lcm(x.size, y.size)
    xl = lift_signal(x, t, side)
    yl = lift_signal(y, t, side)
    return xl - yl if subtract else xl + yl
