"""Membership and boundary geometry for spectraballs and free spectrahedra.

A spectraball is the level-graded set where the linear pencil of a coefficient
tuple is a contraction; a free spectrahedron is the set where the monic
Hermitian pencil is positive semidefinite. Both are queried level by level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NotSquare, SingularPencil, TupleLengthMismatch, ZeroDirection
from .linalg import (
    DEFAULT_TOL,
    MatrixTuple,
    hermitian_pencil,
    min_eig_hermitian,
    operator_norm,
    pencil_eval,
)
from .sampling import random_direction


class Location(str, Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


@dataclass(frozen=True)
class MembershipVerdict:
    """Location plus signed margin: positive inside, ~0 on the boundary."""

    location: Location
    margin: float


def _classify(margin: float, tol: float) -> MembershipVerdict:
    if margin > tol:
        loc = Location.INTERIOR
    elif margin < -tol:
        loc = Location.EXTERIOR
    else:
        loc = Location.BOUNDARY
    return MembershipVerdict(loc, float(margin))


@dataclass(frozen=True)
class Spectraball:
    """Points where the pencil of `coeffs` has operator norm at most 1.

    Rectangular coefficient tuples are allowed.
    """

    coeffs: MatrixTuple


@dataclass(frozen=True)
class Spectrahedron:
    """Points where the monic Hermitian pencil of `coeffs` is PSD."""

    coeffs: MatrixTuple

    def __post_init__(self):
        if not self.coeffs.is_square:
            raise NotSquare("spectrahedra need square coefficient tuples")


def ball_membership(ball: Spectraball, X: MatrixTuple, tol: float = DEFAULT_TOL) -> MembershipVerdict:
    """Margin is 1 - ||pencil(X)||."""
    if ball.coeffs.g != X.g:
        raise TupleLengthMismatch(
            f"tuple lengths differ: {ball.coeffs.g} vs {X.g}"
        )
    return _classify(1.0 - operator_norm(pencil_eval(ball.coeffs, X)), tol)


def spec_membership(spec: Spectrahedron, X: MatrixTuple, tol: float = DEFAULT_TOL) -> MembershipVerdict:
    """Margin is the smallest eigenvalue of the Hermitian pencil."""
    return _classify(min_eig_hermitian(hermitian_pencil(spec.coeffs, X)), tol)


def ball_to_spectrahedron(ball: Spectraball) -> Spectrahedron:
    """Embed a ball as the spectrahedron of the block tuple [[0, E], [0, 0]]."""
    e = ball.coeffs
    out = np.zeros((e.g, e.rows + e.cols, e.rows + e.cols), dtype=complex)
    out[:, : e.rows, e.rows :] = e.data
    return Spectrahedron(MatrixTuple(out))


def contraction_membership(F: MatrixTuple, X: MatrixTuple, tol: float = DEFAULT_TOL) -> MembershipVerdict:
    """Spectrahedron membership via the contraction (I + T)^{-1} T, T = pencil(X).

    Agrees in location with spec_membership whenever I + T is well conditioned;
    a numerically singular I + T signals an exterior point and is raised as
    SingularPencil.
    """
    if not F.is_square:
        raise NotSquare("contraction membership needs a square tuple")
    if F.g != X.g:
        raise TupleLengthMismatch(f"tuple lengths differ: {F.g} vs {X.g}")
    t = pencil_eval(F, X)
    m = np.eye(t.shape[0], dtype=complex) + t
    cond = np.linalg.cond(m)
    if not np.isfinite(cond) or cond >= 1.0 / tol:
        raise SingularPencil(
            f"I + pencil(X) is numerically singular (cond {cond:.3e}); point is exterior"
        )
    return _classify(1.0 - operator_norm(np.linalg.solve(m, t)), tol)


def boundary_scale(domain, X: MatrixTuple) -> float:
    """Largest t >= 0 with t*X inside the domain; may be math.inf.

    Closed forms: for balls 1 / ||pencil(X)||; for spectrahedra the pencil
    along the ray is I + t*H with H = pencil(X) + pencil(X)*, so the scale is
    -1 / min_eig(H) when that eigenvalue is negative and infinity otherwise.
    """
    if X.max_abs() == 0.0:
        raise ZeroDirection("boundary scale needs a nonzero direction")
    if isinstance(domain, Spectraball):
        norm = operator_norm(pencil_eval(domain.coeffs, X))
        return math.inf if norm == 0.0 else 1.0 / norm
    if isinstance(domain, Spectrahedron):
        lam = pencil_eval(domain.coeffs, X)
        h = lam + lam.conj().T
        lmin = float(np.linalg.eigvalsh(h)[0])
        return math.inf if lmin >= 0.0 else -1.0 / lmin
    raise TypeError(f"not a domain: {type(domain).__name__}")


@dataclass(frozen=True)
class BoundednessEvidence:
    """Sampling evidence about boundedness of a spectrahedron.

    A finite max_scale is evidence, not proof, of boundedness; an infinite
    direction is a genuine unboundedness witness.
    """

    unbounded: bool
    witness: MatrixTuple | None
    witness_level: int | None
    max_scale: float
    directions_tested: int
    levels: tuple[int, ...]
    seed: int


def _skew_candidates(g: int, n: int) -> list[MatrixTuple]:
    # one skew-Hermitian block per slot; these catch rays along which the
    # Hermitian part of the pencil vanishes identically
    if n == 1:
        block = np.array([[1j]])
    else:
        block = np.zeros((n, n), dtype=complex)
        block[0, 1] = -1.0
        block[1, 0] = 1.0
    out = []
    for j in range(g):
        data = np.zeros((g, n, n), dtype=complex)
        data[j] = block
        out.append(MatrixTuple(data))
    return out


def boundedness_probe(
    spec: Spectrahedron,
    levels=(1, 2, 3),
    trials: int = 50,
    seed: int = 42,
) -> BoundednessEvidence:
    """Probe boundedness by measuring boundary scales along sampled rays.

    Deterministic skew coordinate directions are tried first (they witness
    unboundedness whenever a slot admits a pencil with vanishing Hermitian
    part), then `trials` random Gaussian directions per level.
    """
    g = spec.coeffs.g
    rng = np.random.default_rng(seed)
    max_scale = 0.0
    tested = 0
    for n in levels:
        candidates = _skew_candidates(g, n)
        candidates += [random_direction(rng, g, n) for _ in range(trials)]
        for direction in candidates:
            tested += 1
            scale = boundary_scale(spec, direction)
            if math.isinf(scale):
                return BoundednessEvidence(
                    True, direction, n, math.inf, tested, tuple(levels), seed
                )
            max_scale = max(max_scale, scale)
    return BoundednessEvidence(False, None, None, max_scale, tested, tuple(levels), seed)
