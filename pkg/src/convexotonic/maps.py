"""Convexotonic rational maps, realizations, and the pencil transfer identity.

The map with tuple xi and sign `minus` sends x to x (I - pencil_xi(x))^{-1};
the `plus` sign flips the pencil and yields the inverse map. Evaluation is
levelwise on square matrix tuples and respects direct sums and similarity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .algebras import convexotonic_residual, structure_constants
from .errors import DomainBreach, ShapeMismatch, TupleLengthMismatch
from .linalg import DEFAULT_TOL, MatrixTuple, operator_norm, pencil_eval

COND_LIMIT = 1e12  # refuse evaluations nearer to a singular pencil than this


class MapSign(str, Enum):
    MINUS = "minus"  # x (I - pencil(x))^{-1}
    PLUS = "plus"  # x (I + pencil(x))^{-1}

    @property
    def factor(self) -> float:
        return -1.0 if self is MapSign.MINUS else 1.0

    def flipped(self) -> "MapSign":
        return MapSign.PLUS if self is MapSign.MINUS else MapSign.MINUS


@dataclass(frozen=True)
class ConvexotonicMap:
    """A convexotonic tuple plus the sign selecting the map or its inverse."""

    xi: MatrixTuple
    sign: MapSign = MapSign.MINUS
    construction_tol: float = DEFAULT_TOL

    def __post_init__(self):
        if not (self.xi.g == self.xi.rows == self.xi.cols):
            raise ShapeMismatch("map tuples must be g matrices of size g x g")
        resid = convexotonic_residual(self.xi)
        if resid > self.construction_tol:
            raise ValueError(f"tuple is not convexotonic (residual {resid:.3e})")

    def inverse(self) -> "ConvexotonicMap":
        return ConvexotonicMap(self.xi, self.sign.flipped(), self.construction_tol)

    def pencil(self, X: MatrixTuple) -> np.ndarray:
        """The defining pencil I -/+ pencil_xi(X) at the point."""
        if X.g != self.xi.g:
            raise TupleLengthMismatch(
                f"tuple lengths differ: {self.xi.g} vs {X.g}"
            )
        lam = pencil_eval(self.xi, X)
        return np.eye(lam.shape[0], dtype=complex) + self.sign.factor * lam

    def domain_check(self, X: MatrixTuple, cond_limit: float = COND_LIMIT) -> bool:
        """True iff the defining pencil is well conditioned at X."""
        cond = np.linalg.cond(self.pencil(X))
        return bool(np.isfinite(cond) and cond < cond_limit)

    def __call__(self, X: MatrixTuple) -> MatrixTuple:
        """Evaluate levelwise: component i is sum_j X[j] @ inv(M) block (j, i).

        One factorization of the pencil M serves all blocks; no explicit
        inverse is formed.
        """
        m = self.pencil(X)
        cond = np.linalg.cond(m)
        if not np.isfinite(cond) or cond >= COND_LIMIT:
            raise DomainBreach(
                f"defining pencil is numerically singular (cond {cond:.3e})"
            )
        g, n = self.xi.g, X.rows
        blocks = np.linalg.solve(m, np.eye(g * n, dtype=complex)).reshape(g, n, g, n)
        return MatrixTuple(np.einsum("jpq,jqis->ips", X.data, blocks))


@dataclass(frozen=True)
class Realization:
    """A free rational function r(x) = c* (I - pencil_S(x))^{-1} b."""

    S: MatrixTuple
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.b, dtype=complex).reshape(-1)
        c = np.asarray(self.c, dtype=complex).reshape(-1)
        if not self.S.is_square or b.size != self.S.rows or c.size != self.S.rows:
            raise ShapeMismatch("state tuple and vectors must share one size")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def __call__(self, X: MatrixTuple) -> np.ndarray:
        n = X.rows
        lam = pencil_eval(self.S, X)
        m = np.eye(lam.shape[0], dtype=complex) - lam
        cond = np.linalg.cond(m)
        if not np.isfinite(cond) or cond >= COND_LIMIT:
            raise DomainBreach(
                f"realization pencil is numerically singular (cond {cond:.3e})"
            )
        rhs = np.kron(self.b.reshape(-1, 1), np.eye(n, dtype=complex))
        left = np.kron(self.c.conj().reshape(1, -1), np.eye(n, dtype=complex))
        return left @ np.linalg.solve(m, rhs)


def transfer_residual(
    J: MatrixTuple, X: MatrixTuple, sign: MapSign, tol: float = DEFAULT_TOL
) -> float:
    """Defect of the transfer identity tying the map to the pencil of J.

    With xi the structure constants of J and y the image of X under the map
    (xi, sign), returns || pencil_J(y) - (I -/+ pencil_J(X))^{-1} pencil_J(X) ||,
    the pencil sign matching the map sign.
    """
    xi = structure_constants(J, tol).xi
    image = ConvexotonicMap(xi, sign)(X)
    lam = pencil_eval(J, X)
    m = np.eye(lam.shape[0], dtype=complex) + sign.factor * lam
    cond = np.linalg.cond(m)
    if not np.isfinite(cond) or cond >= COND_LIMIT:
        raise DomainBreach(
            f"transfer pencil is numerically singular (cond {cond:.3e})"
        )
    return operator_norm(pencil_eval(J, image) - np.linalg.solve(m, lam))


def map_domain_check(cmap: ConvexotonicMap, X: MatrixTuple) -> bool:
    return cmap.domain_check(X)


def jacobian_at_zero(cmap: ConvexotonicMap, steps=(1e-4, 1e-5)) -> np.ndarray:
    """Level-1 Jacobian at the origin by Richardson-extrapolated central differences."""
    g = cmap.xi.g

    def central(h: float) -> np.ndarray:
        jac = np.zeros((g, g), dtype=complex)
        for j in range(g):
            e = np.zeros(g)
            e[j] = h
            plus = cmap(MatrixTuple.scalar(e)).data[:, 0, 0]
            minus = cmap(MatrixTuple.scalar(-e)).data[:, 0, 0]
            jac[j, :] = (plus - minus) / (2 * h)
        return jac

    h1, h2 = steps
    d1, d2 = central(h1), central(h2)
    # cancel the O(h^2) term of the central difference
    return (h1**2 * d2 - h2**2 * d1) / (h1**2 - h2**2)
