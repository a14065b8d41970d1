import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from concbound import linalg
from concbound.bipartite import schmidt
from concbound.concurrence import lower_bound, pure_concurrence
from concbound.criteria import enhanced_f, ppt_min_eigenvalue
from concbound.errors import PreconditionError
from concbound.states import (
    StateSpec,
    alpha_family,
    horodecki_a,
    horodecki_noisy,
    isotropic,
    max_entangled_vector,
    pure_from_schmidt,
    random_density,
    random_separable,
)
from oracles import alpha_transcribed, horodecki_transcribed


def test_isotropic_examples():
    for d in (2, 3, 4):
        P = np.outer(max_entangled_vector(d), max_entangled_vector(d))
        s = isotropic(d, 1.0)
        assert np.allclose(s.rho, P, atol=1e-15)
        assert np.allclose(isotropic(d, 1 / d**2).rho, np.eye(d * d) / d**2, atol=1e-15)
        assert lower_bound(isotropic(d, 1 / d)).lower_bound == pytest.approx(0, abs=1e-12)
        for F in (0, 0.2, 0.7):
            psi = max_entangled_vector(d)
            assert np.vdot(psi, isotropic(d, F).rho @ psi).real == pytest.approx(F, abs=1e-12)


def test_isotropic_twirl_invariance(rng):
    s = isotropic(3, 0.6)
    for _ in range(20):
        u = linalg.random_unitary(3, rng)
        uu = np.kron(u, u.conj())
        assert np.allclose(uu @ s.rho @ uu.conj().T, s.rho, atol=1e-10)


@pytest.mark.parametrize("a", [0.05, 0.236, 0.5, 0.99])
def test_horodecki_a(a):
    s = horodecki_a(a)
    assert np.trace(s.rho).real == pytest.approx(1, abs=1e-14)
    assert ppt_min_eigenvalue(s) >= -1e-10
    assert np.allclose(s.rho, horodecki_transcribed(a), atol=1e-16)


def test_horodecki_range_checks():
    for a in (0, 1):
        with pytest.raises(PreconditionError):
            horodecki_a(a)
    with pytest.raises(PreconditionError):
        horodecki_noisy(0.3, 1.2)


def test_horodecki_noisy():
    assert np.allclose(horodecki_noisy(0.3, 0).rho, np.eye(9) / 9)
    assert np.array_equal(horodecki_noisy(0.3, 1).rho, horodecki_a(0.3).rho)
    assert enhanced_f(horodecki_noisy(0.236, 0.9955)) > 0
    one, zero = horodecki_noisy(0.4, 1).rho, horodecki_noisy(0.4, 0).rho
    for p in (0.1, 0.5, 0.93):
        assert np.allclose(horodecki_noisy(0.4, p).rho, p * one + (1 - p) * zero, atol=1e-16)


def test_alpha_family():
    for alpha in np.linspace(2, 5, 13):
        s = alpha_family(alpha)
        assert np.trace(s.rho).real == pytest.approx(1, abs=1e-14)
        assert np.allclose(s.rho, alpha_transcribed(alpha), atol=1e-16)
    assert ppt_min_eigenvalue(alpha_family(2.0)) >= -1e-10
    with pytest.raises(PreconditionError):
        alpha_family(5.5)


def test_random_density():
    s = random_density(2, 3, 1, seed=4)
    assert np.linalg.matrix_rank(s.rho, tol=1e-10) == 1
    assert np.array_equal(random_density(3, 3, 4, 11).rho, random_density(3, 3, 4, 11).rho)
    with pytest.raises(PreconditionError):
        random_density(2, 2, 5, 0)


def test_pure_from_schmidt():
    assert np.array_equal(pure_from_schmidt([1], (2, 3)), np.eye(6)[0])
    assert np.allclose(pure_from_schmidt([0.5, 0.5], (2, 2)), np.array([1, 0, 0, 1]) / np.sqrt(2))
    assert np.allclose(schmidt(pure_from_schmidt([0.8, 0.2], (2, 3)), (2, 3)).mu[:2], [0.8, 0.2])
    with pytest.raises(PreconditionError):
        pure_from_schmidt([0.5, 0.4], (2, 2))


def test_random_separable_is_separable():
    s = random_separable(3, 3, 5, 3)
    assert ppt_min_eigenvalue(s) >= -1e-12
    assert np.linalg.matrix_rank(s.rho, tol=1e-10) == 5


@given(st.sampled_from(["isotropic", "max_entangled", "product", "random_ginibre", "pure_schmidt"]),
       st.integers(2, 4), st.integers(0, 1000))
def test_spec_builds_valid_states(family, d, seed):
    params = {"d": d, "F": 0.5, "seed": seed, "mu": [0.7, 0.3]}
    s = StateSpec(family, params).build()
    assert s.dims.m * s.dims.n == s.rho.shape[0]


def test_spec_errors():
    with pytest.raises(PreconditionError):
        StateSpec("werner", {})
    with pytest.raises(PreconditionError):
        StateSpec("isotropic", {"d": 3}).build()


def test_pure_schmidt_spec():
    s = StateSpec("pure_schmidt", {"mu": [0.8, 0.2]}).build()
    assert s.dims.as_list() == [2, 2]
    v = pure_from_schmidt([0.8, 0.2], (2, 2))
    assert pure_concurrence(v, (2, 2)) == pytest.approx(0.8)
