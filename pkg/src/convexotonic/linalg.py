"""Dense complex matrix kernels: Kronecker products, linear pencils, norms,
eigenvalues, numerical rank and kernels.

All randomized behaviour lives elsewhere; every function here is a pure
function of its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian, NotSquare, ShapeMismatch, TupleLengthMismatch

DEFAULT_TOL = 1e-8


def _as_complex_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a 2-d matrix, got ndim={m.ndim}")
    return m


@dataclass(frozen=True, eq=False)
class MatrixTuple:
    """A g-tuple of same-shape complex matrices, stored as a (g, rows, cols) array.

    Immutable after construction; the backing array is marked read-only.
    """

    data: np.ndarray

    def __post_init__(self):
        arr = np.array(self.data, dtype=complex, copy=True)
        if arr.ndim != 3:
            raise ShapeMismatch(f"expected (g, rows, cols) data, got ndim={arr.ndim}")
        if arr.shape[0] < 1:
            raise ShapeMismatch("a matrix tuple needs at least one entry")
        if not np.all(np.isfinite(arr)):
            raise ValueError("matrix tuple entries must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_matrices(cls, matrices) -> "MatrixTuple":
        mats = [_as_complex_matrix(m) for m in matrices]
        if not mats:
            raise ShapeMismatch("a matrix tuple needs at least one entry")
        shape = mats[0].shape
        if any(m.shape != shape for m in mats):
            raise ShapeMismatch("all matrices in a tuple must share one shape")
        return cls(np.stack(mats))

    @classmethod
    def scalar(cls, values) -> "MatrixTuple":
        """Level-1 point: a vector in C^g as a tuple of 1x1 matrices."""
        values = np.asarray(values, dtype=complex).reshape(-1)
        return cls(values.reshape(-1, 1, 1))

    @classmethod
    def zeros(cls, g: int, rows: int, cols: int | None = None) -> "MatrixTuple":
        return cls(np.zeros((g, rows, rows if cols is None else cols), dtype=complex))

    @property
    def g(self) -> int:
        return self.data.shape[0]

    @property
    def rows(self) -> int:
        return self.data.shape[1]

    @property
    def cols(self) -> int:
        return self.data.shape[2]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __len__(self) -> int:
        return self.g

    def __getitem__(self, j: int) -> np.ndarray:
        return self.data[j]

    def __iter__(self):
        return iter(self.data)

    def __rmul__(self, scalar) -> "MatrixTuple":
        return MatrixTuple(complex(scalar) * self.data)

    def adjoint(self) -> "MatrixTuple":
        """Componentwise conjugate transpose."""
        return MatrixTuple(self.data.conj().transpose(0, 2, 1))

    def flatten(self) -> np.ndarray:
        """Each matrix as one row: shape (g, rows*cols)."""
        return self.data.reshape(self.g, -1)

    def direct_sum(self, other: "MatrixTuple") -> "MatrixTuple":
        if self.g != other.g:
            raise TupleLengthMismatch(f"tuple lengths differ: {self.g} vs {other.g}")
        out = np.zeros(
            (self.g, self.rows + other.rows, self.cols + other.cols), dtype=complex
        )
        out[:, : self.rows, : self.cols] = self.data
        out[:, self.rows :, self.cols :] = other.data
        return MatrixTuple(out)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.data)))


def kron(a, b) -> np.ndarray:
    """Kronecker product: block (i, j) of the result is a[i, j] * b."""
    return np.kron(_as_complex_matrix(a), _as_complex_matrix(b))


def pencil_eval(coeffs: MatrixTuple, point: MatrixTuple) -> np.ndarray:
    """Evaluate the linear pencil sum_j coeffs[j] (x) point[j].

    For d x e coefficients and n x n points the result is dn x en.
    """
    if coeffs.g != point.g:
        raise TupleLengthMismatch(
            f"tuple lengths differ: {coeffs.g} coefficients vs {point.g} point slots"
        )
    n = point.rows
    if point.rows == 1 and point.cols == 1:
        # level-1 shortcut: a plain linear combination
        return np.einsum("j,jab->ab", point.data[:, 0, 0], coeffs.data)
    out = np.zeros((coeffs.rows * n, coeffs.cols * point.cols), dtype=complex)
    for j in range(coeffs.g):
        out += np.kron(coeffs.data[j], point.data[j])
    return out


def hermitian_pencil(coeffs: MatrixTuple, point: MatrixTuple) -> np.ndarray:
    """Monic Hermitian pencil I + pencil + pencil*; output is exactly Hermitian."""
    if not coeffs.is_square:
        raise NotSquare("hermitian pencils need square coefficient tuples")
    lam = pencil_eval(coeffs, point)
    m = np.eye(lam.shape[0], dtype=complex) + lam + lam.conj().T
    return (m + m.conj().T) / 2


def operator_norm(m) -> float:
    """Largest singular value."""
    m = _as_complex_matrix(m)
    if m.size == 0:
        return 0.0
    return float(np.linalg.norm(m, 2))


def min_eig_hermitian(m, tol: float = DEFAULT_TOL) -> float:
    """Smallest eigenvalue of a Hermitian matrix.

    The input is symmetrized before the eigensolve to suppress roundoff drift;
    inputs farther than tol * norm from Hermitian are rejected.
    """
    m = _as_complex_matrix(m)
    drift = np.linalg.norm(m - m.conj().T)
    if drift > tol * max(np.linalg.norm(m), 1e-300):
        raise NotHermitian(f"matrix is not Hermitian within tolerance (drift {drift:.3e})")
    sym = (m + m.conj().T) / 2
    return float(np.linalg.eigvalsh(sym)[0])


def kernel_basis(m, tol: float = DEFAULT_TOL) -> list[np.ndarray]:
    """Orthonormal basis of the numerical kernel.

    Right singular vectors whose singular value is at most tol * sigma_max;
    sigma_max = 0 yields the full space.
    """
    m = _as_complex_matrix(m)
    _, s, vh = np.linalg.svd(m, full_matrices=True)
    smax = s[0] if s.size else 0.0
    vectors = []
    for i in range(vh.shape[0]):
        sigma = s[i] if i < s.size else 0.0
        if sigma <= tol * smax:
            vectors.append(vh[i].conj())
    return vectors


def numerical_rank(m, tol: float = DEFAULT_TOL) -> int:
    """Number of singular values above tol * sigma_max.

    Accepts a matrix, a sequence of vectors (stacked as rows), or a MatrixTuple
    (each matrix flattened to a row).
    """
    if isinstance(m, MatrixTuple):
        m = m.flatten()
    else:
        m = np.asarray(m, dtype=complex)
        if m.ndim == 1:
            m = m.reshape(1, -1)
        elif m.ndim != 2:
            raise ShapeMismatch(f"expected vectors or a matrix, got ndim={m.ndim}")
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def joint_kernel(B: MatrixTuple, tol: float = DEFAULT_TOL) -> list[np.ndarray]:
    """Orthonormal basis of the intersection of the kernels of all B[j].

    Computed as the kernel of the vertically stacked tuple.
    """
    if not B.is_square:
        raise NotSquare("joint kernels are defined for square tuples")
    stacked = B.data.reshape(B.g * B.rows, B.cols)
    return kernel_basis(stacked, tol)


def is_nilpotent(B: MatrixTuple, tol: float = DEFAULT_TOL) -> bool:
    """Whether the multiplicative algebra generated by B is nilpotent.

    Checks that every word of length exactly d (the ambient size) in the
    generators has norm at most tol; a nilpotent subalgebra of d x d matrices
    has index at most d, so this is an exact criterion. Generators are scaled
    to unit operator norm first, which makes the absolute threshold scale-free
    and word norms non-increasing with length (enabling subtree pruning).
    """
    if not B.is_square:
        raise NotSquare("nilpotency is defined for square tuples")
    d = B.rows
    gens = []
    for mat in B:
        norm = operator_norm(mat)
        if norm > tol:
            gens.append(mat / norm)
    if not gens:
        return True

    def extend(prod: np.ndarray, depth: int) -> bool:
        if operator_norm(prod) <= tol:
            return True  # all extensions stay below tol
        if depth == d:
            return False
        return all(extend(gen @ prod, depth + 1) for gen in gens)

    return all(extend(gen, 1) for gen in gens)
