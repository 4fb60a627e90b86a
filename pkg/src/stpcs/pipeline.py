"""Dimension-free compression and exact desk-scale sparse recovery.

Compression is just the matrix-vector semi-tensor product: an m0-by-n0
atom compresses a signal of any dimension p.  When n0 | p the model is
the familiar identity-lifted product; otherwise both the matrix and the
signal are lifted to t = lcm(n0, p) and the effective unknown is the
replicated signal, so that case reduces to the divisible one.

Recovery is the l0 oracle: the lifted system splits into s independent
copies of the atom (directly for the right convention, after a swap
permutation for the left one), and each copy is solved by exhaustive
search over supports of at most k indices with a least-squares fit per
support.  With spark(atom) > 2k the accepted solution is provably the
only blockwise-k-sparse one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import lcm

import numpy as np

from .errors import BadShape, NoSolution, NotUnique
from .metrics import DEFAULT_BUDGET, spark
from .signal_space import reduce_matrix
from .stp import Side, as_matrix, as_signal, mv_stp, swap_matrix

__all__ = [
    "SparsityMode",
    "SparsitySpec",
    "CompressionPlan",
    "plan",
    "compress",
    "compress_varying",
    "recover",
    "recover_signal",
    "uniqueness_guarantee",
]

# A support is accepted when its least-squares residual falls below this;
# with O(1) integer-ish data the gap to wrong supports is many orders.
RESIDUAL_TOL = 1e-8

# Two accepted solutions closer than this are the same solution reached
# through different supports (zero-padded coefficients), not a violation
# of uniqueness.
_SAME_SOLUTION_ATOL = 1e-6


class SparsityMode(Enum):
    GLOBAL = "global"  # at most k nonzeros in the whole vector
    BLOCKWISE = "blockwise"  # at most k nonzeros per length-n block


@dataclass(frozen=True)
class SparsitySpec:
    """Block length n and per-block bound k."""

    block_len: int
    per_block_k: int
    mode: SparsityMode = SparsityMode.BLOCKWISE

    def __post_init__(self):
        if not 0 <= self.per_block_k <= self.block_len:
            raise BadShape(
                f"per-block sparsity {self.per_block_k} out of range for block {self.block_len}"
            )


@dataclass(frozen=True)
class CompressionPlan:
    """Shape bookkeeping for compressing a p-dimensional signal by an atom.

    t = lcm(n0, p) = s*n0 = r*p.  r == 1 is the divisible case; r > 1
    means the effective unknown is the signal replicated r times.
    """

    atom: np.ndarray = field(repr=False)
    side: Side
    signal_dim: int
    s: int
    r: int
    t: int

    @property
    def output_dim(self) -> int:
        return int(self.atom.shape[0]) * self.s


def plan(a, p: int, side: Side = Side.LEFT) -> CompressionPlan:
    """Reduce `a` to its atom and work out the lift factors for dim-p input."""
    if p < 1:
        raise BadShape("signal dimension must be positive")
    atom, _ = reduce_matrix(a, side)
    t = lcm(atom.shape[1], p)
    return CompressionPlan(atom, side, p, t // atom.shape[1], t // p, t)


def compress(a, x, side: Side = Side.LEFT) -> np.ndarray:
    """Compress a signal of arbitrary dimension: the semi-tensor product a*x."""
    return mv_stp(a, x, side)


def compress_varying(a, xs, side: Side = Side.LEFT) -> list[np.ndarray]:
    """Compress a dimension-varying signal stream, one plan per time step."""
    return [compress(a, x, side) for x in xs]


def _omp_block(a: np.ndarray, y: np.ndarray, k: int, residual_tol: float) -> np.ndarray:
    """Greedy fast path: orthogonal matching pursuit with at most k picks.

    Selects the column most correlated with the residual, refits by least
    squares, and stops once the residual beats the tolerance.  No
    uniqueness certificate; use the oracle when one is needed.
    """
    n = a.shape[1]
    norms = np.linalg.norm(a, axis=0)
    norms[norms == 0.0] = 1.0
    support: list[int] = []
    resid = y.copy()
    coef = np.zeros(0)
    for _ in range(k):
        if float(np.linalg.norm(resid)) < residual_tol:
            break
        scores = np.abs(a.T @ resid) / norms
        scores[support] = -1.0
        support.append(int(np.argmax(scores)))
        coef, *_ = np.linalg.lstsq(a[:, support], y, rcond=None)
        resid = y - a[:, support] @ coef
    if float(np.linalg.norm(resid)) >= residual_tol:
        raise NoSolution(f"matching pursuit residual stayed above {residual_tol:.1e}")
    x = np.zeros(n)
    x[support] = coef
    return x


def _solve_block(a: np.ndarray, y: np.ndarray, k: int, residual_tol: float) -> np.ndarray:
    """Unique x with at most k nonzeros and a @ x ~= y, by support search.

    Enumerates supports of size 0..k, keeps every candidate whose
    least-squares residual beats `residual_tol`, and deduplicates by the
    solution vector (supersets of the true support refit the same
    vector).  Raises NoSolution/NotUnique accordingly.
    """
    n = a.shape[1]
    solutions: list[np.ndarray] = []

    def consider(x):
        for seen in solutions:
            if np.allclose(seen, x, rtol=0.0, atol=_SAME_SOLUTION_ATOL):
                return
        solutions.append(x)

    if float(np.linalg.norm(y)) < residual_tol:
        consider(np.zeros(n))
    for size in range(1, k + 1):
        for sup in combinations(range(n), size):
            cols = a[:, sup]
            coef, *_ = np.linalg.lstsq(cols, y, rcond=None)
            if float(np.linalg.norm(y - cols @ coef)) < residual_tol:
                x = np.zeros(n)
                x[list(sup)] = coef
                consider(x)
    if not solutions:
        raise NoSolution(f"no support of size <= {k} fits the measurements")
    if len(solutions) > 1:
        raise NotUnique(f"{len(solutions)} distinct sparse solutions fit the measurements")
    return solutions[0]


def recover(a, s: int, y, spec: SparsitySpec, side: Side = Side.LEFT,
            residual_tol: float = RESIDUAL_TOL, method: str = "oracle") -> np.ndarray:
    """Exact sparse recovery from y = lift_s(a) @ x.

    For the right convention the lifted system is block diagonal and the
    s copies are solved independently.  The left convention conjugates by
    swap permutations: (A (x) I_s) x = W[s,m] (I_s (x) A) W[n,s] x, so the
    right solver runs on the permuted data and the answer is permuted
    back.  Blockwise sparsity applies to the right-system unknown; for
    the left system that unknown is the swap-permuted signal.

    ``method="oracle"`` (default) is the exhaustive support search with
    uniqueness detection; ``method="omp"`` is the greedy matching-pursuit
    fast path for larger instances, exact under the coherence bound but
    without a uniqueness certificate.
    """
    a = as_matrix(a)
    y = as_signal(y)
    m, n = a.shape
    if spec.block_len != n:
        raise BadShape(f"sparsity block length {spec.block_len} != matrix columns {n}")
    if y.size != m * s:
        raise BadShape(f"measurement dim {y.size} != rows*s = {m * s}")
    if method not in ("oracle", "omp"):
        raise BadShape(f"unknown recovery method {method!r}")
    solve = _solve_block if method == "oracle" else _omp_block
    if side is Side.LEFT:
        y = swap_matrix(m, s) @ y
    if spec.mode is SparsityMode.GLOBAL:
        big = np.kron(np.eye(s), a)
        x = solve(big, y, spec.per_block_k, residual_tol)
    else:
        parts = [
            solve(a, y[b * m:(b + 1) * m], spec.per_block_k, residual_tol)
            for b in range(s)
        ]
        x = np.concatenate(parts)
    if side is Side.LEFT:
        x = swap_matrix(s, n) @ x
    return x


def recover_signal(a, y, p: int, k: int, side: Side = Side.LEFT,
                   residual_tol: float = RESIDUAL_TOL, method: str = "oracle") -> np.ndarray:
    """Recover the original p-dimensional signal behind y = a * x.

    Plans the lift, recovers the (possibly replicated) unknown, and in
    the non-divisible case strips the replication: the lifted solution
    must reduce by the factor r, otherwise it does not correspond to any
    p-dimensional signal and NoSolution is raised.
    """
    pl = plan(a, p, side)
    spec = SparsitySpec(int(pl.atom.shape[1]), k)
    xt = recover(pl.atom, pl.s, y, spec, side, residual_tol, method)
    if pl.r == 1:
        return xt
    if side is Side.LEFT:
        blocks = xt.reshape(p, pl.r)
        ok = np.allclose(blocks, blocks[:, :1], rtol=0.0, atol=residual_tol)
        x = blocks[:, 0]
    else:
        blocks = xt.reshape(pl.r, p)
        ok = np.allclose(blocks, blocks[:1, :], rtol=0.0, atol=residual_tol)
        x = blocks[0]
    if not ok:
        raise NoSolution(
            f"lifted solution is not {pl.r}-fold replicated; no dim-{p} signal matches"
        )
    return x.copy()


def uniqueness_guarantee(a, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff spark(atom) > 2k, certifying per-block uniqueness for every lift."""
    atom, _ = reduce_matrix(a, Side.LEFT)
    return spark(atom, budget=budget) > 2 * k
