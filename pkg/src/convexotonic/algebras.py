"""Linear independence, algebra closure and structure-constant extraction.

A linearly independent square tuple J that spans an algebra determines unique
coefficients with J[k] @ J[j] = sum_s xi[j][k, s] * J[s]; the resulting g-tuple
of g x g coefficient matrices multiplies the same way against its own entries
(it is "convexotonic"), which is what makes the rational maps in `maps` work.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DependentInput, NotSquare, ShapeMismatch, SpanViolation
from .linalg import DEFAULT_TOL, MatrixTuple, numerical_rank, operator_norm

SPAN_FLOOR = 1e-12  # absolute floor: products may vanish exactly
ORTHO_COND_LIMIT = 1e6


def is_linearly_independent(T: MatrixTuple, tol: float = DEFAULT_TOL) -> bool:
    """True iff the flattened tuple has full row rank."""
    return numerical_rank(T.flatten(), tol) == T.g


@dataclass(frozen=True)
class StructureConstants:
    """Coefficient tuple xi with the residuals certifying it.

    residual: max least-squares reconstruction error over all products.
    convexotonic_residual: max defect of xi multiplying against itself.
    """

    xi: MatrixTuple
    residual: float
    convexotonic_residual: float


@dataclass(frozen=True)
class AlgebraClosure:
    """A tuple extended to an independent spanning set of its algebra.

    The first g slots are the original tuple; `orthonormalized[i]` records
    whether appended element i was replaced by an orthonormalized
    representative for conditioning (raw products are kept when the flattened
    basis stays well conditioned).
    """

    extended: MatrixTuple
    appended_count: int
    orthonormalized: tuple[bool, ...]


class _SpanSolver:
    """One orthogonal factorization of the flattened basis, many solves."""

    def __init__(self, basis: MatrixTuple):
        self.shape = (basis.rows, basis.cols)
        self.phi = basis.flatten().T  # columns are vectorized basis elements
        self.q, self.r = np.linalg.qr(self.phi)

    def coefficients(self, rhs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Least-squares coefficients and residual norms, one RHS per column."""
        coeff = np.linalg.solve(self.r, self.q.conj().T @ rhs)
        residuals = np.linalg.norm(self.phi @ coeff - rhs, axis=0)
        return coeff, residuals


def _check_square_independent(J: MatrixTuple, tol: float, what: str) -> None:
    if not J.is_square:
        raise NotSquare(f"{what} needs a square tuple")
    if not is_linearly_independent(J, tol):
        raise DependentInput(f"{what} needs a linearly independent tuple")


def convexotonic_residual(xi: MatrixTuple) -> float:
    """Max over (j, k) of || xi[k] @ xi[j] - sum_s xi[j][k, s] * xi[s] ||."""
    if not (xi.g == xi.rows == xi.cols):
        raise ShapeMismatch("expected a g-tuple of g x g matrices")
    worst = 0.0
    for j in range(xi.g):
        rhs = np.einsum("ks,sab->kab", xi.data[j], xi.data)
        for k in range(xi.g):
            worst = max(worst, operator_norm(xi.data[k] @ xi.data[j] - rhs[k]))
    return worst


def is_convexotonic(xi: MatrixTuple, tol: float = DEFAULT_TOL) -> bool:
    return convexotonic_residual(xi) <= tol


def _solve_constants(
    basis: MatrixTuple, products: np.ndarray, tol: float, what: str
) -> tuple[MatrixTuple, float]:
    """Express products[k, j] in the basis; return xi and the max residual.

    products has shape (g, g, rows, cols), indexed (k, j).
    """
    g = basis.g
    solver = _SpanSolver(basis)
    rhs = products.reshape(g * g, -1).T  # one column per (k, j) pair
    coeff, residuals = solver.coefficients(rhs)
    norms = np.linalg.norm(products.reshape(g * g, -1), axis=1)
    bad = residuals > np.maximum(tol * norms, SPAN_FLOOR)
    if np.any(bad):
        worst = float(np.max(residuals[bad]))
        k, j = divmod(int(np.argmax(bad)), g)
        raise SpanViolation(
            f"{what}: product ({k}, {j}) lies outside the span "
            f"(residual {worst:.3e})",
            residual=worst,
        )
    # coeff column for pair (k, j) holds the row (k, :) of xi[j]
    xi = np.empty((g, g, g), dtype=complex)
    for k in range(g):
        for j in range(g):
            xi[j, k, :] = coeff[:, k * g + j]
    return MatrixTuple(xi), float(np.max(residuals))


def structure_constants(J: MatrixTuple, tol: float = DEFAULT_TOL) -> StructureConstants:
    """Coefficients expressing every product J[k] @ J[j] back in the tuple.

    Raises SpanViolation when J does not span an algebra (close it first with
    algebra_closure); independence makes the coefficients unique.
    """
    _check_square_independent(J, tol, "structure constant extraction")
    products = np.einsum("kab,jbc->kjac", J.data, J.data)
    xi, residual = _solve_constants(J, products, tol, "structure constants")
    return StructureConstants(xi, residual, convexotonic_residual(xi))


def pencil_structure_constants(
    F: MatrixTuple, C, tol: float = DEFAULT_TOL
) -> StructureConstants:
    """Coefficients for the sandwiched products F[l] @ C @ F[j].

    F may be rectangular d x e with C of shape e x d. Whenever the products
    stay in the span the resulting tuple is convexotonic.
    """
    C = np.asarray(C, dtype=complex)
    if C.shape != (F.cols, F.rows):
        raise ShapeMismatch(
            f"middle factor must be {F.cols} x {F.rows}, got {C.shape}"
        )
    if not is_linearly_independent(F, tol):
        raise DependentInput("pencil structure constants need an independent tuple")
    products = np.einsum("kab,bc,jcd->kjad", F.data, C, F.data)
    xi, residual = _solve_constants(F, products, tol, "pencil structure constants")
    return StructureConstants(xi, residual, convexotonic_residual(xi))


def algebra_closure(A: MatrixTuple, tol: float = DEFAULT_TOL) -> AlgebraClosure:
    """Extend A to an independent spanning set of the algebra it generates.

    Pairwise products are scanned in lexicographic order; any product outside
    the current span is appended, and newly appended elements participate in
    later rounds, until a full round appends nothing. Appended elements are
    the raw products unless the flattened basis becomes ill conditioned, in
    which case the orthonormalized remainder is kept instead.
    """
    _check_square_independent(A, tol, "algebra closure")
    d = A.rows
    basis = [np.asarray(m) for m in A]
    flags: list[bool] = []
    while True:
        appended = False
        size = len(basis)
        for k in range(size):
            for j in range(size):
                product = basis[k] @ basis[j]
                current = MatrixTuple.from_matrices(basis)
                solver = _SpanSolver(current)
                vec = product.reshape(-1, 1)
                coeff, residuals = solver.coefficients(vec)
                norm = float(np.linalg.norm(vec))
                if residuals[0] <= max(tol * norm, SPAN_FLOOR):
                    continue
                candidate = product
                trial = basis + [candidate]
                cond = np.linalg.cond(MatrixTuple.from_matrices(trial).flatten().T)
                ortho = bool(cond >= ORTHO_COND_LIMIT)
                if ortho:
                    remainder = vec - solver.phi @ coeff
                    remainder /= np.linalg.norm(remainder)
                    candidate = remainder.reshape(d, d)
                basis.append(candidate)
                flags.append(ortho)
                appended = True
                if len(basis) > d * d:  # span dimension bound
                    raise SpanViolation(
                        "closure exceeded the ambient dimension; tolerance too tight"
                    )
        if not appended:
            break
    return AlgebraClosure(MatrixTuple.from_matrices(basis), len(flags), tuple(flags))
