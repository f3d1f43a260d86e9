"""Randomized certification of the sv-generic property.

A d x d tuple is sv-generic when d+1 sampled points whose defect pencils have
one-dimensional kernels produce kernel vectors forming a hyperbasis of C^d,
together with d adjoint-side points whose kernel vectors form a basis. The
probe certifies the property by sampling; it never refutes it, except through
the fast necessary conditions (joint kernel, joint cokernel, nilpotency).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import NotSquare, ShapeMismatch
from .linalg import (
    DEFAULT_TOL,
    MatrixTuple,
    is_nilpotent,
    joint_kernel,
    pencil_eval,
)
from .sampling import complex_gaussian

GAP_TOL = 1e-6  # singular-value simplicity gap
POOL_FACTOR = 4  # candidates kept per required vector before subset search


def hyperbasis_margin(vectors, tol: float = DEFAULT_TOL) -> float:
    """Min over omit-one subsets of the smallest singular value.

    Expects exactly d+1 vectors in C^d; the set is a hyperbasis iff the
    returned margin exceeds tol.
    """
    mat = np.asarray([np.asarray(v, dtype=complex).reshape(-1) for v in vectors])
    count, d = mat.shape
    if count != d + 1:
        raise ShapeMismatch(f"a hyperbasis check needs d+1 vectors, got {count} in C^{d}")
    margin = np.inf
    for omit in range(count):
        rest = np.delete(mat, omit, axis=0)
        margin = min(margin, float(np.linalg.svd(rest.T, compute_uv=False)[-1]))
    return margin


@dataclass(frozen=True)
class NecessaryConditions:
    passed: bool
    reasons: tuple[str, ...]


def necessary_conditions(A: MatrixTuple, tol: float = DEFAULT_TOL) -> NecessaryConditions:
    """Fast rejections: a tuple with a joint kernel, a joint cokernel, or a
    nilpotent generated algebra cannot be sv-generic."""
    if not A.is_square:
        raise NotSquare("sv-genericity is defined for square tuples")
    reasons = []
    if joint_kernel(A, tol):
        reasons.append("joint-kernel")
    if joint_kernel(A.adjoint(), tol):
        reasons.append("joint-cokernel")
    if is_nilpotent(A, tol):
        reasons.append("nilpotent")
    return NecessaryConditions(not reasons, tuple(reasons))


@dataclass(frozen=True)
class KernelPoint:
    """A level-1 point with the unit vector spanning its defect kernel."""

    point: np.ndarray  # vector in C^g
    kernel_vector: np.ndarray  # unit vector in C^d


@dataclass(frozen=True)
class GenericityCertificate:
    alphas: tuple[KernelPoint, ...]  # d+1 points, kernel vectors a hyperbasis
    betas: tuple[KernelPoint, ...]  # d points, kernel vectors a basis
    hyperbasis_margin: float
    basis_margin: float
    trials_used: int
    seed: int


@dataclass(frozen=True)
class ProbeResult:
    status: str  # "certified" | "inconclusive" | "rejected"
    certificate: GenericityCertificate | None
    conditions: NecessaryConditions
    trials_used: int


def _basis_margin(vectors) -> float:
    mat = np.asarray(vectors).T
    return float(np.linalg.svd(mat, compute_uv=False)[-1])


def _find_subset(pool, size, margin_fn, tol):
    """First subset (in trial order) whose margin clears tol."""
    if len(pool) < size:
        return None, 0.0
    for combo in combinations(range(len(pool)), size):
        margin = margin_fn([pool[i].kernel_vector for i in combo])
        if margin > tol:
            return [pool[i] for i in combo], margin
    return None, 0.0


def sv_probe(
    A: MatrixTuple,
    trials: int = 10_000,
    seed: int = 42,
    tol: float = DEFAULT_TOL,
    gap_tol: float = GAP_TOL,
) -> ProbeResult:
    """Search for an sv-genericity certificate by seeded sampling.

    Each trial draws a Gaussian point, scales it so the pencil has unit norm
    (making the defect pencil PSD with a kernel), and keeps the kernel vector
    when the top singular value is simple. The certificate completed at the
    smallest trial index is returned; per-trial seeds are seed + trial, so
    results do not depend on execution order.
    """
    conditions = necessary_conditions(A, tol)
    if not conditions.passed:
        return ProbeResult("rejected", None, conditions, 0)
    d, g = A.rows, A.g
    alpha_pool: list[KernelPoint] = []
    beta_pool: list[KernelPoint] = []

    def draw_candidate(rng) -> tuple[np.ndarray, np.ndarray, np.ndarray] | None:
        for _ in range(100):
            gamma = complex_gaussian(rng, g)
            lam = pencil_eval(A, MatrixTuple.scalar(gamma))
            norm = np.linalg.norm(lam, 2)
            if norm > 1e-12:
                point = gamma / norm
                u, s, vh = np.linalg.svd(pencil_eval(A, MatrixTuple.scalar(point)))
                gap = s[0] - s[1] if d > 1 else s[0]
                if gap > gap_tol:
                    return point, vh[0].conj(), u[:, 0]
        return None

    for trial in range(trials):
        rng = np.random.default_rng(seed + trial)
        drawn = draw_candidate(rng)
        changed = False
        if drawn is not None:
            point, right, left = drawn
            if len(alpha_pool) < POOL_FACTOR * (d + 1):
                alpha_pool.append(KernelPoint(point, right))
                changed = True
            if len(beta_pool) < POOL_FACTOR * d:
                beta_pool.append(KernelPoint(point, left))
                changed = True
        if not changed:
            continue
        alphas, h_margin = _find_subset(
            alpha_pool, d + 1, lambda vs: hyperbasis_margin(vs, tol), tol
        )
        betas, b_margin = _find_subset(beta_pool, d, _basis_margin, tol)
        if alphas is not None and betas is not None:
            cert = GenericityCertificate(
                tuple(alphas), tuple(betas), h_margin, b_margin, trial + 1, seed
            )
            return ProbeResult("certified", cert, conditions, trial + 1)
    return ProbeResult("inconclusive", None, conditions, trials)
