"""Dense complex linear algebra used throughout the package.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. The helpers here
add the validation and conventions the rest of the package relies on:
descending singular values, ascending Hermitian spectra, a hard size cap and
Haar-random unitaries.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, NumericError, PreconditionError

MAX_SIDE = 4096
HERMITIAN_TOL = 1e-10


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex128 array."""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise DimensionError(f"matrix must be non-empty, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise PreconditionError("matrix contains NaN or Inf entries")
    return arr


def _check_side(rows: int, cols: int, max_side: int = MAX_SIDE) -> None:
    if rows > max_side or cols > max_side:
        raise DimensionError(
            f"result of shape {rows}x{cols} exceeds the maximum side {max_side}"
        )


def tensor(a, b, max_side: int = MAX_SIDE) -> np.ndarray:
    """Kronecker product ``a ⊗ b`` with the size cap enforced before allocation."""
    a = as_matrix(a)
    b = as_matrix(b)
    _check_side(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1], max_side)
    return np.kron(a, b)


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(as_matrix(a), "fro"))


def svd(a) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin SVD ``a = U @ diag(s) @ V^†``.

    Returns ``(U, s, V)`` with ``s`` descending. Note that ``V`` is returned,
    not ``V^†``.
    """
    a = as_matrix(a)
    try:
        u, s, vh = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericError(
            f"SVD did not converge for {a.shape} matrix "
            f"(Frobenius norm {np.linalg.norm(a):.3e}, "
            f"max |entry| {np.abs(a).max():.3e})"
        ) from exc
    return u, s, vh.conj().T


def singular_values(a) -> np.ndarray:
    """Singular values of ``a`` in descending order, length ``min(rows, cols)``."""
    a = as_matrix(a)
    try:
        return np.linalg.svd(a, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericError(
            f"SVD did not converge for {a.shape} matrix "
            f"(Frobenius norm {np.linalg.norm(a):.3e})"
        ) from exc


def trace_norm(a) -> float:
    """Nuclear norm: the sum of singular values."""
    return float(singular_values(a).sum())


def hermiticity_defect(a) -> float:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"matrix must be square, got {a.shape}")
    return float(np.abs(a - a.conj().T).max())


def eig_hermitian(a, tol: float = HERMITIAN_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix.

    Parameters
    ----------
    a : array_like
        Square matrix, Hermitian to within ``tol`` (max entrywise ``|a - a^†|``).
    tol : float
        Hermiticity tolerance.

    Returns
    -------
    eigenvalues : ndarray
        Real, ascending.
    eigenvectors : ndarray
        Orthonormal columns; column ``k`` belongs to ``eigenvalues[k]``.
    """
    a = as_matrix(a)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise PreconditionError(
            f"matrix is not Hermitian: max |A - A^†| = {defect:.3e} > {tol:.1e}"
        )
    try:
        w, v = np.linalg.eigh(0.5 * (a + a.conj().T))
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"eigh did not converge for {a.shape} matrix") from exc
    return w, v


def eigvalsh(a, tol: float = HERMITIAN_TOL) -> np.ndarray:
    a = as_matrix(a)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise PreconditionError(
            f"matrix is not Hermitian: max |A - A^†| = {defect:.3e} > {tol:.1e}"
        )
    return np.linalg.eigvalsh(0.5 * (a + a.conj().T))


def orthonormalize(z: np.ndarray) -> np.ndarray:
    """Orthonormal columns spanning ``z`` (QR with positive-real R diagonal).

    The phase fix makes the map continuous and idempotent on matrices that
    already have orthonormal columns.
    Stacks of matrices (leading batch axes) are handled slice by slice.
    """
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    mag = np.abs(d)
    phases = np.where(mag > 0, d / np.where(mag > 0, mag, 1), 1)
    return q * phases[..., None, :]


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def random_isometry(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random ``rows x cols`` matrix with orthonormal columns (``rows >= cols``)."""
    if cols > rows:
        raise DimensionError(f"isometry needs rows >= cols, got {rows}x{cols}")
    return orthonormalize(complex_gaussian(rng, (rows, cols)))


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random ``d x d`` unitary."""
    return random_isometry(d, d, rng)
