"""A single observable whose expectation on ``rho - rho_A ⊗ rho_B`` reads out
the realigned trace norm ``||R(rho - rho_A ⊗ rho_B)||_1``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from . import linalg
from .bipartite import BipartiteDensity, BipartiteDims, realign, realign_dual
from .criteria import centered
from .errors import DimensionError

DEGENERATE_TOL = 1e-12


def state_digest(s: BipartiteDensity) -> str:
    """SHA-256 of the dims and the little-endian complex128 matrix bytes."""
    h = hashlib.sha256()
    h.update(f"{s.dims.m}x{s.dims.n}:".encode())
    h.update(np.ascontiguousarray(s.rho, dtype="<c16").tobytes())
    return h.hexdigest()


@dataclass(frozen=True, eq=False)
class WitnessOperator:
    w_raw: np.ndarray
    w_hermitian: np.ndarray
    dims: BipartiteDims
    source_state_hash: str
    trace_norm: float
    degenerate: bool = False


def build_witness(s: BipartiteDensity) -> WitnessOperator:
    """Witness ``W = [R^{-1}((V U^†)^T)]^T`` from the SVD ``R(sigma) = U D V^†``.

    ``sigma = rho - rho_A ⊗ rho_B``. By construction
    ``Tr[W sigma] = Tr[V U^† R(sigma)] = Tr D``. For a product state
    ``sigma = 0`` and the SVD factors are arbitrary; the result is still
    returned, flagged ``degenerate``.
    """
    sigma = centered(s)
    u, d, v = linalg.svd(realign(sigma, s.dims))
    w = realign_dual(v @ u.conj().T, s.dims)
    w.setflags(write=False)
    herm = 0.5 * (w + w.conj().T)
    herm.setflags(write=False)
    tn = float(d.sum())
    return WitnessOperator(
        w_raw=w,
        w_hermitian=herm,
        dims=s.dims,
        source_state_hash=state_digest(s),
        trace_norm=tn,
        degenerate=tn < DEGENERATE_TOL,
    )


def witness_expectation(w: WitnessOperator, s: BipartiteDensity) -> float:
    """``Re Tr[W_herm (rho - rho_A ⊗ rho_B)]``.

    Equals the realigned trace norm on the state ``w`` was built from. On any
    other state it is only a lower estimate of that state's norm.
    """
    if w.dims != s.dims:
        raise DimensionError(f"witness dims {w.dims} do not match state dims {s.dims}")
    return float(np.real(np.trace(w.w_hermitian @ centered(s))))


def raw_expectation(w: WitnessOperator, s: BipartiteDensity) -> complex:
    if w.dims != s.dims:
        raise DimensionError(f"witness dims {w.dims} do not match state dims {s.dims}")
    return complex(np.trace(w.w_raw @ centered(s)))
