"""Concurrence of pure states, the analytic mixed-state lower bound and the
two-copy observables that make the bound measurable.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from . import linalg
from .bipartite import BipartiteDensity, BipartiteDims, _dims, _normalized_vector, schmidt
from .criteria import VERDICT_TOL, enhanced_f, purity
from .errors import DimensionError, DomainError, PreconditionError


@dataclass(frozen=True)
class ConcurrenceBound:
    f_value: float
    scale_factor: float
    lower_bound: float
    clamped: bool

    def to_dict(self) -> dict:
        return asdict(self)


def scale_factor(n: int) -> float:
    """Prefactor ``sqrt(2n / ((n - 1)(n + 1)^2))`` of the lower bound."""
    if n < 2:
        raise DomainError(f"scale factor undefined for n = {n}")
    return float(np.sqrt(2 * n / ((n - 1) * (n + 1) ** 2)))


def pure_concurrence(psi, dims) -> float:
    """``C = sqrt(2 (1 - Tr rho_A^2))`` for a normalized pure state."""
    d = _dims(dims)
    psi = _normalized_vector(psi, d)
    M = psi.reshape(d.m, d.n)
    rho_a = M @ M.conj().T
    return float(np.sqrt(max(0.0, 2.0 * (1.0 - purity(rho_a)))))


def schmidt_concurrence(mu) -> float:
    """``C = sqrt(4 sum_{i<j} mu_i mu_j)`` from Schmidt weights."""
    mu = np.asarray(mu, dtype=float)
    total = mu.sum() ** 2 - np.sum(mu**2)  # = 2 sum_{i<j} mu_i mu_j
    return float(np.sqrt(max(0.0, 2.0 * total)))


def pure_concurrence_schmidt(psi, dims) -> float:
    return schmidt_concurrence(schmidt(psi, dims).mu)


def lower_bound(s: BipartiteDensity, tol: float = VERDICT_TOL) -> ConcurrenceBound:
    """Analytic lower bound ``C(rho) >= scale(n) * f(rho)``.

    ``n`` is the larger local dimension. The bound is clamped to exactly 0
    whenever ``f <= tol``, i.e. whenever the enhanced criterion does not
    certify entanglement, so SVD round-off never shows up as a tiny positive
    bound.
    """
    if min(s.dims.m, s.dims.n) < 2:
        raise DomainError(
            f"concurrence is identically 0 for dims {s.dims.m}x{s.dims.n}; bound undefined"
        )
    n = max(s.dims.m, s.dims.n)
    f = enhanced_f(s)
    k = scale_factor(n)
    clamped = f <= tol
    return ConcurrenceBound(f_value=f, scale_factor=k, lower_bound=0.0 if clamped else k * f, clamped=clamped)


def antisymmetric_projector(d: int) -> np.ndarray:
    """Projector onto the antisymmetric subspace of ``C^d ⊗ C^d``: ``(1 - SWAP) / 2``."""
    swap = np.eye(d * d).reshape(d, d, d, d).transpose(0, 1, 3, 2).reshape(d * d, d * d)
    return 0.5 * (np.eye(d * d) - swap)


def _two_copy_operator(dims: BipartiteDims, op_a: np.ndarray, op_b: np.ndarray,
                       max_side: int) -> np.ndarray:
    """Embed ``op_a`` (on A1 A2) ⊗ ``op_b`` (on B1 B2) into the ordering A1 B1 A2 B2."""
    m, n = dims.m, dims.n
    side = (m * n) ** 2
    if side > max_side:
        raise DimensionError(f"two-copy space of side {side} exceeds the maximum {max_side}")
    op = np.kron(op_a, op_b).reshape(m, m, n, n, m, m, n, n)
    return op.transpose(0, 2, 1, 3, 4, 6, 5, 7).reshape(side, side)


def k1_operator(dims, max_side: int = linalg.MAX_SIDE) -> np.ndarray:
    """``K1 = 4 P_-^(A) ⊗ 1^(B)`` on two copies of the state."""
    d = _dims(dims)
    return _two_copy_operator(d, 4 * antisymmetric_projector(d.m), np.eye(d.n * d.n), max_side)


def k2_operator(dims, max_side: int = linalg.MAX_SIDE) -> np.ndarray:
    """``K2 = 4 1^(A) ⊗ P_-^(B)`` on two copies of the state."""
    d = _dims(dims)
    return _two_copy_operator(d, np.eye(d.m * d.m), 4 * antisymmetric_projector(d.n), max_side)


def concurrence_observable(dims, max_side: int = linalg.MAX_SIDE) -> np.ndarray:
    """``A = 4 P_-^(A) ⊗ P_-^(B)`` on two copies."""
    d = _dims(dims)
    return _two_copy_operator(
        d, 4 * antisymmetric_projector(d.m), antisymmetric_projector(d.n), max_side
    )


@dataclass(frozen=True)
class TwoCopyExpectations:
    k1: float
    k2: float
    explicit: bool  # False when the doubled space was too large and the purity shortcut was used


def two_copy_expectations(s: BipartiteDensity, max_side: int = linalg.MAX_SIDE,
                          check_tol: float = 1e-10) -> TwoCopyExpectations:
    """``Tr[(rho ⊗ rho) K_i] / 2``, i.e. ``1 - Tr rho_A^2`` and ``1 - Tr rho_B^2``.

    The explicit two-copy operators are used when they fit under ``max_side``
    and cross-checked against the marginal purities.
    """
    short_a = 1.0 - purity(s.rho_a)
    short_b = 1.0 - purity(s.rho_b)
    if (s.dims.total) ** 2 > max_side:
        return TwoCopyExpectations(short_a, short_b, explicit=False)
    rr = np.kron(s.rho, s.rho)
    k1 = 0.5 * float(np.real(np.trace(rr @ k1_operator(s.dims, max_side))))
    k2 = 0.5 * float(np.real(np.trace(rr @ k2_operator(s.dims, max_side))))
    if abs(k1 - short_a) > check_tol or abs(k2 - short_b) > check_tol:
        raise PreconditionError(
            f"two-copy expectations ({k1:.12g}, {k2:.12g}) disagree with purities "
            f"({short_a:.12g}, {short_b:.12g})"
        )
    return TwoCopyExpectations(k1, k2, explicit=True)


def pure_two_copy_concurrence(psi, dims, max_side: int = linalg.MAX_SIDE) -> float:
    """``sqrt(<psi|<psi| A |psi>|psi>)`` with the explicit two-copy observable."""
    d = _dims(dims)
    psi = _normalized_vector(psi, d)
    pp = np.kron(psi, psi)
    value = float(np.real(np.vdot(pp, concurrence_observable(d, max_side) @ pp)))
    return float(np.sqrt(max(0.0, value)))


def mixing_gap(x1: float, x2: float, x3: float, x4: float) -> float:
    """Polynomial whose non-negativity carries the bound from pure to mixed states.

    ``x1, x2`` are the purities of the two mixed components and ``x3, x4``
    their overlaps on A and B. All arguments must lie in ``[0, 1]``.
    """
    for name, x in zip(("x1", "x2", "x3", "x4"), (x1, x2, x3, x4)):
        if not 0.0 <= x <= 1.0:
            raise PreconditionError(f"{name}={x!r} outside [0, 1]")
    s = x1 + x2
    t = x3 + x4
    return -3 / 16 * s**2 + 1 / 8 * s * t + 1 / 4 * x3 * x4 - 1 / 2 * t + 1 / 2 * s
