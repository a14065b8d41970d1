"""State families used in the examples plus seeded random ensembles.

Random generators use numpy's PCG64 (``np.random.default_rng(seed)``), whose
stream is specified and stable across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .bipartite import BipartiteDensity, BipartiteDims, _dims
from .errors import DimensionError, PreconditionError

FAMILIES = (
    "isotropic",
    "horodecki_a",
    "horodecki_noisy",
    "alpha_family",
    "max_entangled",
    "product",
    "random_ginibre",
    "pure_schmidt",
)

ALPHA_COEFFICIENT_NOTE = (
    "alpha_family uses alpha/7 as the sigma_+ weight so that the trace is 1"
)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def _check_int(name: str, v, lo: int) -> int:
    _require(float(v) == int(v) and int(v) >= lo, f"{name}={v!r} must be an integer >= {lo}")
    return int(v)


def max_entangled_vector(d: int) -> np.ndarray:
    """``|Psi+> = d^{-1/2} sum_i |ii>``."""
    d = _check_int("d", d, 1)
    psi = np.zeros(d * d, dtype=np.complex128)
    psi[:: d + 1] = 1 / np.sqrt(d)
    return psi


def max_entangled(d: int) -> BipartiteDensity:
    psi = max_entangled_vector(d)
    return BipartiteDensity((d, d), np.outer(psi, psi.conj()))


def isotropic(d: int, F: float) -> BipartiteDensity:
    """``(1-F)/(d^2-1) (1 - |Psi+><Psi+|) + F |Psi+><Psi+|``."""
    d = _check_int("d", d, 2)
    _require(0.0 <= F <= 1.0, f"fidelity F={F!r} outside [0, 1]")
    P = np.outer(*(2 * [max_entangled_vector(d)]))
    rho = (1 - F) / (d * d - 1) * (np.eye(d * d) - P) + F * P
    return BipartiteDensity((d, d), rho)


def horodecki_a(a: float) -> BipartiteDensity:
    """The real symmetric 3x3 PPT entangled state with parameter ``0 < a < 1``."""
    _require(0.0 < a < 1.0, f"a={a!r} must lie in (0, 1)")
    rho = a * np.eye(9)
    for i in (0, 4, 8):
        for j in (0, 4, 8):
            rho[i, j] = a
    c = np.sqrt(1 - a * a) / 2
    rho[6, 6] = rho[8, 8] = (1 + a) / 2
    rho[6, 8] = rho[8, 6] = c
    return BipartiteDensity((3, 3), rho / (8 * a + 1))


def horodecki_noisy(a: float, p: float) -> BipartiteDensity:
    """``p * horodecki_a(a) + (1 - p) * 1/9``."""
    _require(0.0 <= p <= 1.0, f"p={p!r} outside [0, 1]")
    base = horodecki_a(a)
    return BipartiteDensity((3, 3), p * base.rho + (1 - p) * np.eye(9) / 9)


def alpha_family(alpha: float) -> BipartiteDensity:
    """``2/7 |Psi+><Psi+| + alpha/7 sigma_+ + (5-alpha)/7 sigma_-`` on 3x3, ``2 <= alpha <= 5``."""
    _require(2.0 <= alpha <= 5.0, f"alpha={alpha!r} outside [2, 5]")
    psi = max_entangled_vector(3)
    sigma_plus = np.zeros((9, 9))
    sigma_minus = np.zeros((9, 9))
    for i in range(3):
        j = (i + 1) % 3
        sigma_plus[3 * i + j, 3 * i + j] = 1 / 3  # |i, i+1>
        sigma_minus[3 * j + i, 3 * j + i] = 1 / 3  # |i+1, i>
    rho = 2 / 7 * np.outer(psi, psi.conj()) + alpha / 7 * sigma_plus + (5 - alpha) / 7 * sigma_minus
    return BipartiteDensity((3, 3), rho)


def pure_from_schmidt(mu, dims) -> np.ndarray:
    """``sum_i sqrt(mu_i) |ii>`` in the computational bases."""
    d = _dims(dims)
    mu = np.asarray(mu, dtype=float).reshape(-1)
    if mu.size > min(d.m, d.n):
        raise DimensionError(f"{mu.size} Schmidt weights exceed min(m, n) = {min(d.m, d.n)}")
    _require(np.all(mu >= 0), "Schmidt weights must be non-negative")
    _require(abs(mu.sum() - 1) <= 1e-10, f"Schmidt weights sum to {mu.sum():.12g}, not 1")
    psi = np.zeros(d.total, dtype=np.complex128)
    for i, w in enumerate(mu):
        psi[i * d.n + i] = np.sqrt(w)
    return psi


def random_pure(dims, rng: np.random.Generator) -> np.ndarray:
    d = _dims(dims)
    v = linalg.complex_gaussian(rng, d.total)
    return v / np.linalg.norm(v)


def random_density(m: int, n: int, rank: int, seed) -> BipartiteDensity:
    """``G G^† / Tr(G G^†)`` with ``G`` an ``mn x rank`` complex Gaussian matrix.

    ``seed`` may be an int or an existing ``np.random.Generator``.
    """
    d = BipartiteDims(m, n)
    rank = _check_int("rank", rank, 1)
    _require(rank <= d.total, f"rank={rank} exceeds m*n={d.total}")
    rng = np.random.default_rng(seed)
    g = linalg.complex_gaussian(rng, (d.total, rank))
    rho = g @ g.conj().T
    rho /= np.trace(rho).real
    return BipartiteDensity(d, 0.5 * (rho + rho.conj().T))


def random_local_density(d: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    g = linalg.complex_gaussian(rng, (d, rank or d))
    r = g @ g.conj().T
    return r / np.trace(r).real


def product(m: int, n: int, seed, rank_a: int | None = None, rank_b: int | None = None) -> BipartiteDensity:
    """Random product state ``rho_A ⊗ rho_B`` (full-rank factors by default)."""
    rng = np.random.default_rng(seed)
    ra = random_local_density(m, rng, rank_a)
    rb = random_local_density(n, rng, rank_b)
    return BipartiteDensity((m, n), np.kron(ra, rb))


def random_separable(m: int, n: int, terms: int, seed) -> BipartiteDensity:
    """Mixture of ``terms`` random pure product states with Dirichlet weights."""
    rng = np.random.default_rng(seed)
    terms = _check_int("terms", terms, 1)
    weights = rng.dirichlet(np.ones(terms))
    rho = np.zeros((m * n, m * n), dtype=np.complex128)
    for w in weights:
        a = random_pure((m, 1), rng)
        b = random_pure((n, 1), rng)
        v = np.kron(a, b)
        rho += w * np.outer(v, v.conj())
    return BipartiteDensity((m, n), 0.5 * (rho + rho.conj().T))


@dataclass(frozen=True)
class StateSpec:
    """A named state family plus its parameters (the CLI's state grammar)."""

    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise PreconditionError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")

    def _get(self, key, default=None):
        v = self.params.get(key, default)
        if v is None:
            raise PreconditionError(f"family {self.family!r} needs parameter {key!r}")
        return v

    def build(self) -> BipartiteDensity:
        g = self._get
        f = self.family
        if f == "isotropic":
            return isotropic(g("d"), g("F"))
        if f == "horodecki_a":
            return horodecki_a(g("a"))
        if f == "horodecki_noisy":
            return horodecki_noisy(g("a"), g("p"))
        if f == "alpha_family":
            return alpha_family(g("alpha"))
        if f == "max_entangled":
            return max_entangled(g("d"))
        if f == "product":
            m, n = _dims_from(self.params)
            return product(m, n, g("seed", 0))
        if f == "random_ginibre":
            m, n = _dims_from(self.params)
            return random_density(m, n, g("rank", m * n), g("seed", 0))
        # pure_schmidt
        mu = np.asarray(g("mu"), dtype=float)
        m = int(self.params.get("m") or self.params.get("d") or mu.size)
        n = int(self.params.get("n") or self.params.get("d") or mu.size)
        return BipartiteDensity.from_pure(pure_from_schmidt(mu, (m, n)), (m, n))

    def notes(self) -> list[str]:
        return [ALPHA_COEFFICIENT_NOTE] if self.family == "alpha_family" else []


def _dims_from(params: dict) -> tuple[int, int]:
    d = params.get("d")
    m = params.get("m") or d
    n = params.get("n") or d
    if m is None or n is None:
        raise PreconditionError("random families need --m/--n or --d")
    return _check_int("m", m, 1), _check_int("n", n, 1)
