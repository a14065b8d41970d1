"""Bipartite structure: dimensions, validated density matrices and index maps.

Index convention: the composite basis ket ``|i j>`` (``i`` on A, ``j`` on B)
is row ``i * n + j``, so ``rho[i*n + j, k*n + l] = <ij|rho|kl>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import DimensionError, PreconditionError

TRACE_TOL = 1e-10
PSD_TOL = 1e-9
SCHMIDT_FLOOR = 1e-12
NORM_TOL = 1e-10


@dataclass(frozen=True)
class BipartiteDims:
    m: int
    n: int

    def __post_init__(self):
        for name in ("m", "n"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v or v < 1:
                raise DimensionError(f"subsystem dimension {name}={v!r} must be a positive integer")
            object.__setattr__(self, name, int(v))

    @property
    def total(self) -> int:
        return self.m * self.n

    def swapped(self) -> "BipartiteDims":
        return BipartiteDims(self.n, self.m)

    def as_list(self) -> list[int]:
        return [self.m, self.n]


def _dims(dims) -> BipartiteDims:
    if isinstance(dims, BipartiteDims):
        return dims
    m, n = dims
    return BipartiteDims(m, n)


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.complex128, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class BipartiteDensity:
    """A density matrix on ``C^m ⊗ C^n``.

    Construction validates Hermiticity (``tol``), unit trace and positive
    semidefiniteness up to ``-PSD_TOL``. The stored matrix is read-only.
    """

    dims: BipartiteDims
    rho: np.ndarray
    tol: float = field(default=linalg.HERMITIAN_TOL, repr=False)

    def __post_init__(self):
        dims = _dims(self.dims)
        object.__setattr__(self, "dims", dims)
        rho = linalg.as_matrix(self.rho)
        if rho.shape != (dims.total, dims.total):
            raise DimensionError(
                f"density matrix shape {rho.shape} does not match dims {dims.m}x{dims.n}"
            )
        defect = linalg.hermiticity_defect(rho)
        if defect > self.tol:
            raise PreconditionError(f"density matrix not Hermitian: max |rho - rho^†| = {defect:.3e}")
        tr = np.trace(rho)
        if abs(tr - 1) > TRACE_TOL:
            raise PreconditionError(f"density matrix trace {tr.real:.12g} differs from 1 by {abs(tr - 1):.3e}")
        lam_min = float(linalg.eigvalsh(rho, self.tol)[0])
        if lam_min < -PSD_TOL:
            raise PreconditionError(f"density matrix not positive semidefinite: min eigenvalue {lam_min:.3e}")
        object.__setattr__(self, "rho", _frozen(rho))

    @classmethod
    def from_pure(cls, psi, dims) -> "BipartiteDensity":
        psi = _normalized_vector(psi, _dims(dims))
        return cls(dims, np.outer(psi, psi.conj()))

    @property
    def rho_a(self) -> np.ndarray:
        return partial_trace_b(self)

    @property
    def rho_b(self) -> np.ndarray:
        return partial_trace_a(self)

    def mix(self, other: "BipartiteDensity", p: float) -> "BipartiteDensity":
        """``p * self + (1 - p) * other``."""
        if other.dims != self.dims:
            raise DimensionError(f"cannot mix states with dims {self.dims} and {other.dims}")
        return BipartiteDensity(self.dims, p * self.rho + (1 - p) * other.rho)


@dataclass(frozen=True, eq=False)
class SchmidtDecomposition:
    """``psi = sum_i sqrt(mu_i) |a_i> ⊗ |b_i>`` with ``mu`` descending."""

    mu: np.ndarray
    basis_a: np.ndarray
    basis_b: np.ndarray

    @property
    def rank(self) -> int:
        return int(np.count_nonzero(self.mu))

    def vector(self) -> np.ndarray:
        """Reassemble the state vector (row-major ``|ij>`` ordering)."""
        m = self.basis_a.shape[0]
        n = self.basis_b.shape[0]
        M = (self.basis_a * np.sqrt(self.mu)) @ self.basis_b.T
        return M.reshape(m * n)


def _normalized_vector(psi, dims: BipartiteDims) -> np.ndarray:
    psi = np.asarray(psi, dtype=np.complex128).reshape(-1)
    if psi.shape[0] != dims.total:
        raise DimensionError(f"state vector length {psi.shape[0]} does not match dims {dims.m}x{dims.n}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1) > NORM_TOL:
        raise PreconditionError(f"state vector is not normalized: |psi| = {norm:.12g}")
    return psi


def _square(x, dims: BipartiteDims) -> np.ndarray:
    x = linalg.as_matrix(x)
    if x.shape != (dims.total, dims.total):
        raise DimensionError(f"matrix shape {x.shape} does not match dims {dims.m}x{dims.n}")
    return x


def _operand(s, dims=None) -> tuple[np.ndarray, BipartiteDims]:
    if isinstance(s, BipartiteDensity):
        return s.rho, s.dims
    if dims is None:
        raise DimensionError("dims are required when passing a raw matrix")
    dims = _dims(dims)
    return _square(s, dims), dims


def partial_trace_b(s, dims=None) -> np.ndarray:
    """Reduced state on A: ``(rho_A)_{ik} = sum_j rho_{ij,kj}``."""
    x, d = _operand(s, dims)
    return np.einsum("ijkj->ik", x.reshape(d.m, d.n, d.m, d.n))


def partial_trace_a(s, dims=None) -> np.ndarray:
    """Reduced state on B: ``(rho_B)_{jl} = sum_i rho_{ij,il}``."""
    x, d = _operand(s, dims)
    return np.einsum("ijil->jl", x.reshape(d.m, d.n, d.m, d.n))


def partial_transpose_a(s, dims=None) -> np.ndarray:
    """``(rho^{T_A})_{ij,kl} = rho_{kj,il}``."""
    x, d = _operand(s, dims)
    return x.reshape(d.m, d.n, d.m, d.n).transpose(2, 1, 0, 3).reshape(d.total, d.total)


def realign(x, dims) -> np.ndarray:
    """Realignment ``(R x)_{ij,kl} = x_{ik,jl}``.

    ``x`` is any ``mn x mn`` matrix. The result is ``m^2 x n^2`` with row
    ``i*m + j`` (A indices) and column ``k*n + l`` (B indices).
    """
    d = _dims(dims)
    x = _square(x, d)
    return x.reshape(d.m, d.n, d.m, d.n).transpose(0, 2, 1, 3).reshape(d.m * d.m, d.n * d.n)


def realign_inverse(y, dims) -> np.ndarray:
    """Inverse index permutation of :func:`realign`."""
    d = _dims(dims)
    y = linalg.as_matrix(y)
    if y.shape != (d.m * d.m, d.n * d.n):
        raise DimensionError(f"expected a {d.m * d.m}x{d.n * d.n} matrix, got {y.shape}")
    return y.reshape(d.m, d.m, d.n, d.n).transpose(0, 2, 1, 3).reshape(d.total, d.total)


def realign_adjoint(y, dims) -> np.ndarray:
    """Hilbert-Schmidt adjoint of :func:`realign`.

    Satisfies ``Tr[R(X) Y^†] = Tr[X R*(Y)^†]``. Realignment permutes entries,
    so its adjoint for this pairing is its inverse.
    """
    return realign_inverse(y, dims)


def realign_dual(y, dims) -> np.ndarray:
    """Dual of :func:`realign` under the bilinear pairing ``Tr[A B]``.

    ``y`` is ``n^2 x m^2`` and the result ``Z = [R^{-1}(y^T)]^T`` satisfies
    ``Tr[R(X) y] = Tr[X Z]`` for every ``mn x mn`` matrix ``X``.
    """
    d = _dims(dims)
    y = linalg.as_matrix(y)
    if y.shape != (d.n * d.n, d.m * d.m):
        raise DimensionError(f"expected a {d.n * d.n}x{d.m * d.m} matrix, got {y.shape}")
    return realign_inverse(y.T, d).T


def schmidt(psi, dims) -> SchmidtDecomposition:
    """Schmidt decomposition from the SVD of the coefficient matrix ``M_{ij} = psi_{i*n+j}``.

    Coefficients below ``SCHMIDT_FLOOR`` are set to exactly zero; ties keep the
    SVD's order.
    """
    d = _dims(dims)
    psi = _normalized_vector(psi, d)
    u, s, v = linalg.svd(psi.reshape(d.m, d.n))
    order = np.argsort(-s, kind="stable")
    mu = s[order] ** 2
    mu[mu < SCHMIDT_FLOOR] = 0.0
    mu = mu / mu.sum()
    # psi = sum_k s_k u_k (v_k^*)^T, so the B basis vectors are conj(v_k)
    return SchmidtDecomposition(mu=mu, basis_a=u[:, order], basis_b=v[:, order].conj())


def local_unitary(s: BipartiteDensity, u_a, u_b) -> BipartiteDensity:
    """``(U_A ⊗ U_B) rho (U_A ⊗ U_B)^†``."""
    u = np.kron(u_a, u_b)
    return BipartiteDensity(s.dims, u @ s.rho @ u.conj().T)


def swap_subsystems(s: BipartiteDensity) -> BipartiteDensity:
    """Relabel A <-> B."""
    d = s.dims
    rho = s.rho.reshape(d.m, d.n, d.m, d.n).transpose(1, 0, 3, 2).reshape(d.total, d.total)
    return BipartiteDensity(d.swapped(), rho)
