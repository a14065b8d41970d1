"""Convex-roof upper bound on the concurrence.

Every decomposition of ``rho`` into ``L`` pure states is reachable as
``|psi_i~> = sum_k U_ik sqrt(lambda_k) |e_k>`` with ``U`` an ``L x r`` isometry
over the eigen-ensemble ``{lambda_k, |e_k>}``. Any such ``U`` gives an upper
bound ``sum_i p_i C(psi_i)``; the search below looks for a small one.

Each restart starts from a Haar-random isometry and runs three stages:

1. L-BFGS on the ensemble-averaged squared concurrence (smooth, and zero
   exactly on product decompositions),
2. L-BFGS on the averaged concurrence itself,
3. greedy random-perturbation polish: accept a perturbed isometry only if it
   lowers the average; halve the step after ``patience`` straight rejections
   and stop once it drops below ``tol``.

Both L-BFGS stages work on an unconstrained ``L x r`` matrix ``Z`` mapped to
the isometry ``U = Z (Z^† Z)^{-1/2}``.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.optimize import minimize

from . import linalg
from .bipartite import BipartiteDensity
from .concurrence import lower_bound, pure_concurrence
from .errors import NumericError

log = logging.getLogger(__name__)

RANK_FLOOR = 1e-12
SANDWICH_TOL = 1e-6


@dataclass(frozen=True)
class RoofConfig:
    restarts: int = 20
    ensemble_factor: int = 2
    max_iters: int = 20000  # greedy polish iterations per restart
    step: float = 0.1
    tol: float = 1e-6
    seed: int = 0
    patience: int = 50
    gradient_iters: int = 1000  # per L-BFGS stage; 0 disables both stages

    @classmethod
    def from_dict(cls, d: dict) -> "RoofConfig":
        return cls(**{k: v for k, v in d.items() if k in cls.__dataclass_fields__})


@dataclass
class RoofEstimate:
    upper_value: float
    ensemble_size: int
    restarts_used: int
    converged: bool
    best_ensemble: list[tuple[float, np.ndarray]] = field(repr=False)

    def mixture(self) -> np.ndarray:
        return sum(p * np.outer(v, v.conj()) for p, v in self.best_ensemble)

    def to_dict(self, include_ensemble: bool = False) -> dict:
        d = asdict(self)
        d.pop("best_ensemble")
        if include_ensemble:
            d["best_ensemble"] = [
                {"p": p, "psi": [{"re": z.real, "im": z.imag} for z in v.tolist()]}
                for p, v in self.best_ensemble
            ]
        return d


def eigen_ensemble(s: BipartiteDensity) -> np.ndarray:
    """Columns ``sqrt(lambda_k) |e_k>`` for the eigenvalues above ``RANK_FLOOR``."""
    w, v = linalg.eig_hermitian(s.rho)
    keep = w > RANK_FLOOR
    return v[:, keep] * np.sqrt(w[keep])


def _rows(u, basis, m, n):
    psi = u @ basis.T  # L x mn, unnormalized members p_i |psi_i>
    M = psi.reshape(*psi.shape[:-1], m, n)
    rho_a = M @ np.swapaxes(M.conj(), -1, -2)
    p = np.einsum("...ii->...", rho_a).real
    tr2 = np.einsum("...ij,...ji->...", rho_a, rho_a).real
    return psi, M, rho_a, p, tr2


def average_concurrence(u: np.ndarray, basis: np.ndarray, m: int, n: int):
    """``sum_i p_i C(psi_i)`` for the ensemble generated by ``u``.

    Uses ``p C(psi / sqrt p) = sqrt(2 (p^2 - Tr rho_a~^2))`` on the
    unnormalized members. Stacked ``u`` gives one value per isometry.
    """
    _, _, _, p, tr2 = _rows(u, basis, m, n)
    return np.sqrt(np.maximum(0.0, 2.0 * (p * p - tr2))).sum(axis=-1)


def _concurrence_and_grad(u, basis, m, n):
    psi, M, rho_a, p, tr2 = _rows(u, basis, m, n)
    c = np.sqrt(np.maximum(0.0, 2.0 * (p * p - tr2)))
    w = np.where(c > 1e-14, 2.0 / np.maximum(c, 1e-300), 0.0)  # kink at product members
    d = w[:, None] * (p[:, None] * psi - (rho_a @ M).reshape(psi.shape))
    return float(c.sum()), 2.0 * d @ basis.conj()


def _tangle_and_grad(u, basis, m, n):
    psi, M, rho_a, p, tr2 = _rows(u, basis, m, n)
    p = np.maximum(p, 1e-300)
    d = 2.0 * (1.0 + tr2 / p**2)[:, None] * psi - 4.0 * (rho_a @ M).reshape(psi.shape) / p[:, None]
    return float(np.sum(2.0 * p - 2.0 * tr2 / p)), 2.0 * d @ basis.conj()


def _polar_objective(x, L, r, fn, basis, m, n):
    """Value and real gradient of ``fn(polar(Z))`` with ``x = [Re Z, Im Z]``."""
    z = (x[: L * r] + 1j * x[L * r:]).reshape(L, r)
    lam, q = np.linalg.eigh(z.conj().T @ z)
    lam = np.maximum(lam, 1e-300)
    isq = lam**-0.5
    s_isq = (q * isq) @ q.conj().T
    f, g = fn(z @ s_isq, basis, m, n)
    # derivative of S^{-1/2} in the eigenbasis of S = Z^† Z (divided differences)
    dl = lam[:, None] - lam[None, :]
    di = isq[:, None] - isq[None, :]
    same = np.abs(dl) <= 1e-12 * lam.max()
    k = np.where(same, -0.5 * np.sqrt(np.outer(isq, isq)) ** 3, di / np.where(same, 1.0, dl))
    c = (q.conj().T @ g.conj().T @ z @ q) * k
    gz = g @ s_isq + z @ q @ (c + c.conj().T) @ q.conj().T
    return f, np.concatenate([gz.real.ravel(), gz.imag.ravel()])


def _lbfgs(u, basis, m, n, fn, iters):
    L, r = u.shape
    x0 = np.concatenate([u.real.ravel(), u.imag.ravel()])
    res = minimize(
        _polar_objective, x0, args=(L, r, fn, basis, m, n), jac=True, method="L-BFGS-B",
        options={"maxiter": iters, "maxcor": 30, "ftol": 1e-15, "gtol": 1e-12},
    )
    z = (res.x[: L * r] + 1j * res.x[L * r:]).reshape(L, r)
    a, _, bh = np.linalg.svd(z, full_matrices=False)
    return a @ bh


def _greedy(u, basis, m, n, cfg: RoofConfig, rng):
    L, r = u.shape
    best = float(average_concurrence(u, basis, m, n))
    step = cfg.step
    rejections = 0
    for _ in range(cfg.max_iters):
        trial = linalg.orthonormalize(u + step * linalg.complex_gaussian(rng, (L, r)))
        value = float(average_concurrence(trial, basis, m, n))
        if value < best:
            u, best, rejections = trial, value, 0
            continue
        rejections += 1
        if rejections >= cfg.patience:
            step *= 0.5
            rejections = 0
            if step < cfg.tol:
                return best, u, True
    return best, u, False


def _restart(basis, m, n, L, cfg, rng):
    u = linalg.random_isometry(L, basis.shape[1], rng)
    if cfg.gradient_iters > 0:
        u = _lbfgs(u, basis, m, n, _tangle_and_grad, cfg.gradient_iters)
        u = _lbfgs(u, basis, m, n, _concurrence_and_grad, cfg.gradient_iters)
    return _greedy(u, basis, m, n, cfg, rng)


def _ensemble(u: np.ndarray, basis: np.ndarray) -> list[tuple[float, np.ndarray]]:
    out = []
    for row in u @ basis.T:
        p = float(np.vdot(row, row).real)
        if p > 0:
            out.append((p, row / np.sqrt(p)))
    total = sum(p for p, _ in out)
    return [(p / total, v) for p, v in out]


def roof_upper(s: BipartiteDensity, config: RoofConfig | None = None) -> RoofEstimate:
    """Upper bound on the concurrence from the best decomposition found.

    Restart ``k`` uses the ``k``-th child of ``SeedSequence(config.seed)``, so
    restarts are independent and the result is reproducible for a fixed seed.
    """
    cfg = config or RoofConfig()
    m, n = s.dims.m, s.dims.n
    basis = eigen_ensemble(s)
    r = basis.shape[1]
    if r == 1:
        psi = basis[:, 0] / np.linalg.norm(basis[:, 0])
        return RoofEstimate(pure_concurrence(psi, s.dims), 1, 0, True, [(1.0, psi)])

    L = max(r, cfg.ensemble_factor * r)
    results = [
        _restart(basis, m, n, L, cfg, np.random.default_rng(seq))
        for seq in np.random.SeedSequence(cfg.seed).spawn(cfg.restarts)
    ]
    best, u, converged = min(results, key=lambda res: res[0])
    if not converged:
        log.warning("roof polish hit max_iters=%d before the step fell below tol", cfg.max_iters)
    ensemble = _ensemble(u, basis)
    upper = float(sum(p * pure_concurrence(v, s.dims) for p, v in ensemble))
    lb = lower_bound(s).lower_bound if min(m, n) >= 2 else 0.0
    if upper < lb - SANDWICH_TOL:
        raise NumericError(f"roof estimate {upper:.9g} fell below the analytic lower bound {lb:.9g}")
    return RoofEstimate(upper, L, cfg.restarts, converged, ensemble)
