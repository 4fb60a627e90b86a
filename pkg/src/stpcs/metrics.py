"""Sensing-matrix quality metrics.

Coherence, the Welch lower bound, spark by exhaustive subset search,
the coherence-based recoverable-sparsity bound, and brute-force
certification of the restricted isometry property.  Everything here is
exact at desk scale: subset enumerations are complete (guarded by a
budget) rather than sampled.

The class-level variants reduce a matrix to its irreducible Kronecker
atom first; spark, coherence, and the RIP constant are invariant under
identity lifts, so the atom's numbers are the class's numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, islice, product
from typing import NamedTuple

import numpy as np

from .errors import BadShape, BudgetExceeded, ZeroColumn
from .signal_space import reduce_matrix
from .stp import Side, as_matrix, lift_matrix

__all__ = [
    "DEFAULT_BUDGET",
    "CsReport",
    "RipResult",
    "coherence",
    "signed_coherence",
    "welch_bound",
    "spark",
    "max_sparsity",
    "rip_check",
    "blockwise_rip_delta",
    "class_metrics",
]

DEFAULT_BUDGET = 10**6

# A singular value below this fraction of the submatrix's largest one
# counts as zero in rank decisions.
_RANK_RTOL = 1e-9

_SVD_CHUNK = 4096


def _column_cosines(a: np.ndarray) -> np.ndarray:
    """Matrix of pairwise column cosines; raises on zero columns."""
    a = as_matrix(a)
    if a.shape[1] < 2:
        raise BadShape("column correlations need at least two columns")
    norms = np.linalg.norm(a, axis=0)
    if np.any(norms == 0.0):
        raise ZeroColumn("matrix has a zero column")
    return (a.T @ a) / np.outer(norms, norms)


def coherence(a) -> float:
    """Largest absolute pairwise column cosine, in [0, 1]."""
    g = _column_cosines(a)
    n = g.shape[0]
    off = ~np.eye(n, dtype=bool)
    return float(np.max(np.abs(g[off])))


def signed_coherence(a) -> float:
    """Largest pairwise column cosine without the absolute value.

    Kept alongside `coherence` because the magnitude-free maximum can be
    negative and carries sign information the bound arguments ignore.
    """
    g = _column_cosines(a)
    n = g.shape[0]
    off = ~np.eye(n, dtype=bool)
    return float(np.max(g[off]))


def welch_bound(m: int, n: int) -> float:
    """Lower bound sqrt((n-m)/(m(n-1))) on the coherence of any m-by-n matrix, n > m."""
    if n <= m or m < 1 or n < 2:
        raise BadShape(f"welch bound needs n > m >= 1, got m={m}, n={n}")
    return math.sqrt((n - m) / (m * (n - 1)))


def _iter_subset_singulars(a: np.ndarray, k: int):
    """Yield (subset_array, singular_values) over all k-column subsets, chunked."""
    n = a.shape[1]
    combos = combinations(range(n), k)
    while True:
        chunk = list(islice(combos, _SVD_CHUNK))
        if not chunk:
            return
        idx = np.array(chunk)
        subs = a[:, idx]  # (m, chunk, k)
        subs = np.moveaxis(subs, 1, 0)  # (chunk, m, k)
        yield idx, np.linalg.svd(subs, compute_uv=False)


def _check_budget(n: int, k: int, budget: int, what: str) -> None:
    count = math.comb(n, k)
    if count > budget:
        raise BudgetExceeded(
            f"{what} would enumerate {count} subsets of size {k} (budget {budget})"
        )


def spark(a, budget: int = DEFAULT_BUDGET):
    """Smallest number of linearly dependent columns.

    Returns math.inf when the columns are independent (full column rank),
    rather than a numeric stand-in.  Enumeration runs in increasing subset
    size with a batched singular-value rank test, so the first hit is the
    spark.
    """
    a = as_matrix(a)
    m, n = a.shape
    for k in range(1, min(m, n) + 1):
        _check_budget(n, k, budget, "spark")
        for _, sv in _iter_subset_singulars(a, k):
            dependent = sv[:, -1] <= _RANK_RTOL * sv[:, 0]
            if np.any(dependent):
                return k
    if n > m:
        return m + 1  # any m+1 columns of an m-row matrix are dependent
    return math.inf


def max_sparsity(a) -> int:
    """Largest k with k < (1 + 1/coherence)/2, the lossless-recovery bound."""
    mu = coherence(a)
    if mu == 0.0:
        # only possible with orthogonal columns (cols <= rows); every
        # sparsity up to the column count is then recoverable
        return as_matrix(a).shape[1]
    v = 0.5 * (1.0 + 1.0 / mu)
    nearest = round(v)
    if abs(v - nearest) < 1e-9:
        return int(nearest) - 1  # strict inequality at an integer boundary
    return math.floor(v)


class RipResult(NamedTuple):
    delta: float
    satisfied: bool


def rip_check(a, k: int, normalize: bool = False, budget: int = DEFAULT_BUDGET) -> RipResult:
    """Exact restricted-isometry constant over all k-column submatrices.

    delta is the largest deviation max(sigma_max^2 - 1, 1 - sigma_min^2)
    over every k-column submatrix; the property holds when delta < 1.
    The certificate is scale-sensitive, so columns should be unit-norm;
    pass normalize=True to rescale them first.
    """
    a = as_matrix(a)
    m, n = a.shape
    if not 1 <= k <= n:
        raise BadShape(f"sparsity k={k} out of range for {n} columns")
    if normalize:
        norms = np.linalg.norm(a, axis=0)
        if np.any(norms == 0.0):
            raise ZeroColumn("cannot normalize a zero column")
        a = a / norms
    _check_budget(n, k, budget, "rip_check")
    delta = 0.0
    for _, sv in _iter_subset_singulars(a, k):
        smax = sv[:, 0]
        smin = sv[:, -1] if k <= m else np.zeros(len(sv))
        delta = max(delta, float(np.max(smax**2 - 1.0)), float(np.max(1.0 - smin**2)))
    return RipResult(delta, delta < 1.0)


def blockwise_rip_delta(a, k: int, s: int, side: Side = Side.RIGHT,
                        budget: int = DEFAULT_BUDGET) -> float:
    """RIP constant of the identity lift over blockwise-sparse supports.

    Enumerates every support with at most k indices per length-n block of
    the lifted matrix (I_s (x) A or A (x) I_s) directly.  Serves as an
    independent cross-check that the lift inherits the atom's constant;
    intended for small s (the enumeration is a product over blocks).
    """
    a = as_matrix(a)
    m, n = a.shape
    if not 1 <= k <= n:
        raise BadShape(f"sparsity k={k} out of range for {n} columns")
    per_block = [c for r in range(k + 1) for c in combinations(range(n), r)]
    if len(per_block) ** s > budget:
        raise BudgetExceeded(f"{len(per_block) ** s} blockwise supports exceed budget")
    big = lift_matrix(a, s, side)
    if side is Side.RIGHT:
        offsets = [b * n for b in range(s)]  # block b owns columns [b*n, (b+1)*n)
    else:
        offsets = list(range(s))  # A (x) I_s: block b owns columns b, b+s, ...
    delta = 0.0
    for choice in product(per_block, repeat=s):
        cols: list[int] = []
        for b, sub in enumerate(choice):
            if side is Side.RIGHT:
                cols.extend(offsets[b] + c for c in sub)
            else:
                cols.extend(offsets[b] + c * s for c in sub)
        if not cols:
            continue
        sv = np.linalg.svd(big[:, cols], compute_uv=False)
        smin = sv[-1] if len(cols) <= big.shape[0] else 0.0
        delta = max(delta, float(sv[0] ** 2 - 1.0), float(1.0 - smin**2))
    return delta


@dataclass
class CsReport:
    """Quality metrics of a sensing matrix (or of its irreducible atom)."""

    coherence: float
    signed_coherence: float
    welch_bound: float | None
    spark: float  # positive integer, or math.inf when columns are independent
    max_k: int
    rip: dict | None = None

    def to_json_dict(self) -> dict:
        out = {
            "coherence": self.coherence,
            "signed_coherence": self.signed_coherence,
            "welch_bound": self.welch_bound,
            "spark": None if math.isinf(self.spark) else int(self.spark),
            "spark_infinite": bool(math.isinf(self.spark)),
            "max_k": self.max_k,
        }
        if self.rip is not None:
            out["rip"] = self.rip
        return out


def class_metrics(a, side: Side = Side.LEFT, rip_k: int | None = None,
                  budget: int = DEFAULT_BUDGET) -> CsReport:
    """Metrics of the equivalence class of `a`: computed on its atom."""
    atom, _ = reduce_matrix(a, side)
    return component_metrics(atom, rip_k=rip_k, budget=budget)


def component_metrics(a, rip_k: int | None = None,
                      budget: int = DEFAULT_BUDGET) -> CsReport:
    """Metrics of a fixed matrix, no reduction."""
    a = as_matrix(a)
    m, n = a.shape
    report = CsReport(
        coherence=coherence(a),
        signed_coherence=signed_coherence(a),
        welch_bound=welch_bound(m, n) if n > m else None,
        spark=spark(a, budget=budget),
        max_k=max_sparsity(a),
    )
    if rip_k is not None:
        res = rip_check(a, rip_k, normalize=True, budget=budget)
        report.rip = {"k": rip_k, "delta": res.delta, "satisfied": res.satisfied}
    return report
