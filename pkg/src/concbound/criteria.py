"""Separability criteria: PPT, CCNR (realignment) and the enhanced realignment test.

Each criterion returns its raw scalar; :func:`evaluate` bundles them with
verdict flags into a :class:`CriteriaReport`.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass

import numpy as np

from . import linalg
from .bipartite import BipartiteDensity, partial_transpose_a, realign

log = logging.getLogger(__name__)

VERDICT_TOL = 1e-9

NONLINEAR_WITNESS_ASSUMPTION = (
    "nonlinear_witness_value uses tau := R(rho - rho_A ⊗ rho_B); tau is otherwise undefined"
)


@dataclass(frozen=True)
class CriteriaReport:
    ppt_min_eigenvalue: float
    ccnr_value: float
    f_value: float
    nonlinear_witness_value: float
    ppt_entangled: bool
    ccnr_entangled: bool
    enhanced_entangled: bool
    tol: float = VERDICT_TOL

    def to_dict(self) -> dict:
        return asdict(self)


def purity(x: np.ndarray) -> float:
    """``Tr x^2`` for a Hermitian ``x``."""
    return float(np.real(np.vdot(x.conj().T, x)))


def centered(s: BipartiteDensity) -> np.ndarray:
    """``rho - rho_A ⊗ rho_B``."""
    return s.rho - np.kron(s.rho_a, s.rho_b)


def ppt_min_eigenvalue(s: BipartiteDensity) -> float:
    """Smallest eigenvalue of the partial transpose; negative certifies entanglement."""
    return float(linalg.eigvalsh(partial_transpose_a(s))[0])


def ccnr_value(s: BipartiteDensity) -> float:
    """``||R(rho)||_1``; above 1 certifies entanglement."""
    return linalg.trace_norm(realign(s.rho, s.dims))


def centered_realigned_norm(s: BipartiteDensity) -> float:
    """``||R(rho - rho_A ⊗ rho_B)||_1``."""
    return linalg.trace_norm(realign(centered(s), s.dims))


def mixedness_term(s: BipartiteDensity) -> float:
    """``sqrt((1 - Tr rho_A^2)(1 - Tr rho_B^2))``."""
    ka = max(0.0, 1.0 - purity(s.rho_a))
    kb = max(0.0, 1.0 - purity(s.rho_b))
    return float(np.sqrt(ka * kb))


def enhanced_f(s: BipartiteDensity) -> float:
    """Violation of the enhanced realignment criterion.

    ``f = ||R(rho - rho_A ⊗ rho_B)||_1 - sqrt((1 - Tr rho_A^2)(1 - Tr rho_B^2))``.
    Separable states have ``f <= 0``.
    """
    return centered_realigned_norm(s) - mixedness_term(s)


def nonlinear_witness_value(s: BipartiteDensity) -> float:
    """``1 - ||tau||_1 - (Tr rho_A^2 + Tr rho_B^2) / 2`` with tau = R(rho - rho_A ⊗ rho_B).

    Diagnostic only (see ``NONLINEAR_WITNESS_ASSUMPTION``); a negative value
    signals entanglement under that reading.
    """
    value = 1.0 - centered_realigned_norm(s) - 0.5 * (purity(s.rho_a) + purity(s.rho_b))
    log.debug("nonlinear witness value %.6g", value)
    return value


def evaluate(s: BipartiteDensity, tol: float = VERDICT_TOL) -> CriteriaReport:
    ppt = ppt_min_eigenvalue(s)
    ccnr = ccnr_value(s)
    tn = centered_realigned_norm(s)
    f = tn - mixedness_term(s)
    nl = 1.0 - tn - 0.5 * (purity(s.rho_a) + purity(s.rho_b))
    return CriteriaReport(
        ppt_min_eigenvalue=ppt,
        ccnr_value=ccnr,
        f_value=f,
        nonlinear_witness_value=nl,
        ppt_entangled=ppt < -tol,
        ccnr_entangled=ccnr > 1 + tol,
        enhanced_entangled=f > tol,
        tol=tol,
    )
