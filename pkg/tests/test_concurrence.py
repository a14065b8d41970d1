import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from concbound import linalg
from concbound.bipartite import BipartiteDensity, local_unitary, swap_subsystems
from concbound.concurrence import (
    antisymmetric_projector,
    k1_operator,
    lower_bound,
    mixing_gap,
    pure_concurrence,
    pure_concurrence_schmidt,
    pure_two_copy_concurrence,
    scale_factor,
    two_copy_expectations,
)
from concbound.criteria import enhanced_f
from concbound.errors import DimensionError, DomainError, PreconditionError
from concbound.states import (
    horodecki_noisy,
    isotropic,
    max_entangled_vector,
    product,
    pure_from_schmidt,
    random_density,
    random_pure,
)

seeds = st.integers(0, 2**32 - 1)


def test_pure_concurrence_examples():
    for m in (2, 3, 4, 5):
        c = pure_concurrence(max_entangled_vector(m), (m, m))
        assert c**2 == pytest.approx(2 * (m - 1) / m, abs=1e-12)
    assert pure_concurrence([0, 0, 1, 0], (2, 2)) == 0
    psi = pure_from_schmidt([0.8, 0.2], (2, 2))
    assert pure_concurrence(psi, (2, 2)) == pytest.approx(0.8, abs=1e-12)
    with pytest.raises(PreconditionError):
        pure_concurrence([1, 1, 0, 0], (2, 2))


@given(seeds, st.sampled_from([(2, 2), (2, 3), (3, 3), (3, 4)]))
def test_pure_concurrence_formulas_agree(seed, dims):
    psi = random_pure(dims, np.random.default_rng(seed))
    assert pure_concurrence(psi, dims) == pytest.approx(pure_concurrence_schmidt(psi, dims), abs=1e-10)


def test_scale_factor():
    assert scale_factor(2) == pytest.approx(2 / 3)
    assert scale_factor(3) == pytest.approx(np.sqrt(6 / 32))
    with pytest.raises(DomainError):
        scale_factor(1)


def test_lower_bound_bell(bell):
    b = lower_bound(bell)
    assert b.f_value == pytest.approx(1, abs=1e-12)
    assert b.scale_factor == pytest.approx(2 / 3, abs=1e-15)
    assert b.lower_bound == pytest.approx(2 / 3, abs=1e-12)
    assert not b.clamped


@pytest.mark.parametrize("a,p,quoted", [(0.236, 0.9955, 0.000487), (0.232, 0.9939, 0.000019)])
def test_lower_bound_horodecki_quoted_values(a, p, quoted):
    # quoted values are rounded to six decimals
    assert lower_bound(horodecki_noisy(a, p)).lower_bound == pytest.approx(quoted, abs=5e-7)


def test_lower_bound_clamps(rng):
    b = lower_bound(product(3, 3, rng))
    assert b.lower_bound == 0 and b.clamped and b.f_value < 0


def test_lower_bound_one_dimensional_subsystem():
    with pytest.raises(DomainError):
        lower_bound(BipartiteDensity((1, 3), np.eye(3) / 3))


def test_lower_bound_uses_larger_dimension(rng):
    s = random_density(2, 3, 2, rng)
    b = lower_bound(s)
    assert b.scale_factor == scale_factor(3)
    t = swap_subsystems(s)
    assert enhanced_f(t) == pytest.approx(enhanced_f(s), abs=1e-12)
    assert lower_bound(t).lower_bound == pytest.approx(b.lower_bound, abs=1e-12)


def test_lower_bound_local_unitary_invariant(rng):
    for _ in range(10):
        s = random_density(3, 3, 2, rng)
        t = local_unitary(s, linalg.random_unitary(3, rng), linalg.random_unitary(3, rng))
        assert lower_bound(t).lower_bound == pytest.approx(lower_bound(s).lower_bound, abs=1e-10)


def test_isotropic_bound_monotone_in_fidelity():
    for d in (2, 3, 4):
        values = [lower_bound(isotropic(d, F)).lower_bound for F in np.append(np.arange(1 / d, 1, 0.01), 1.0)]
        assert np.all(np.diff(values) >= -1e-12)
        assert values[0] <= 1e-12


def test_isotropic_pure_limit():
    for d in (2, 3):
        s = isotropic(d, 1.0)
        c = pure_concurrence(max_entangled_vector(d), (d, d))
        assert c == pytest.approx(np.sqrt(2 * (d - 1) / d))
        assert lower_bound(s).lower_bound <= c + 1e-12


@given(seeds, st.sampled_from([2, 3, 4, 6]))
def test_pure_state_inequality_chain(seed, n):
    mu = np.random.default_rng(seed).dirichlet(np.ones(n))
    psi = pure_from_schmidt(mu, (n, n))
    s = BipartiteDensity.from_pure(psi, (n, n))
    c = pure_concurrence(psi, (n, n))
    assert enhanced_f(s) <= np.sqrt((n - 1) * (n + 1) ** 2 / (2 * n)) * c + 1e-9
    assert lower_bound(s).lower_bound <= c + 1e-9


def test_antisymmetric_projector():
    for d in (2, 3):
        P = antisymmetric_projector(d)
        assert np.allclose(P @ P, P)
        assert np.trace(P) == pytest.approx(d * (d - 1) / 2)


def test_two_copy_expectations_examples(bell, rng):
    e = two_copy_expectations(bell)
    assert (e.k1, e.k2) == pytest.approx((0.5, 0.5), abs=1e-12) and e.explicit
    v = np.kron(random_pure((2, 1), rng), random_pure((3, 1), rng))
    e = two_copy_expectations(BipartiteDensity.from_pure(v, (2, 3)))
    assert (e.k1, e.k2) == pytest.approx((0, 0), abs=1e-12)
    for m, n in [(2, 2), (2, 3), (3, 3)]:
        e = two_copy_expectations(BipartiteDensity((m, n), np.eye(m * n) / (m * n)))
        assert (e.k1, e.k2) == pytest.approx((1 - 1 / m, 1 - 1 / n), abs=1e-12)


def test_two_copy_falls_back_above_cap(rng):
    s = random_density(3, 3, 3, rng)
    e = two_copy_expectations(s, max_side=64)
    assert not e.explicit
    assert e.k1 == pytest.approx(two_copy_expectations(s).k1, abs=1e-12)
    with pytest.raises(DimensionError):
        k1_operator((3, 3), max_side=64)


def test_pure_two_copy_examples(bell):
    assert pure_two_copy_concurrence(np.array([1, 0, 0, 1]) / np.sqrt(2), (2, 2)) == pytest.approx(1, abs=1e-12)
    assert pure_two_copy_concurrence([0, 1, 0, 0], (2, 2)) == pytest.approx(0, abs=1e-12)


@pytest.mark.parametrize("dims", [(2, 2), (2, 3), (3, 2)])
def test_pure_two_copy_matches_direct(dims, rng):
    for _ in range(30):
        psi = random_pure(dims, rng)
        assert pure_two_copy_concurrence(psi, dims) == pytest.approx(pure_concurrence(psi, dims), abs=1e-10)


def test_mixing_gap_points():
    assert mixing_gap(1, 1, 1, 1) == pytest.approx(0, abs=1e-15)
    assert mixing_gap(0, 0, 0, 0) == 0
    assert mixing_gap(1, 1, 0, 0) == pytest.approx(0.25)
    with pytest.raises(PreconditionError):
        mixing_gap(1.1, 0, 0, 0)


def test_mixing_gap_on_diagonal_line():
    # with x1 = x2 = t and x3 = x4 = s the polynomial factors as (t - s)(1 - (3t + s)/4)
    for t in np.linspace(0, 1, 11):
        for s in np.linspace(0, t, 5):
            assert mixing_gap(t, t, s, s) == pytest.approx((t - s) * (1 - (3 * t + s) / 4), abs=1e-14)


def test_mixing_gap_grid_nonnegative():
    grid = np.round(np.arange(0, 1.0001, 0.05), 10)
    worst = np.inf
    for x1 in grid:
        for x2 in grid:
            cap = np.sqrt(x1 * x2) + 1e-12
            for x3 in grid[grid <= cap]:
                for x4 in grid[grid <= cap]:
                    worst = min(worst, mixing_gap(x1, x2, x3, x4))
    assert worst >= -1e-12


def test_lower_bound_clamps_inside_verdict_tolerance():
    # pure product states have f = 0 up to round-off
    s = BipartiteDensity.from_pure(np.kron([0.6, 0.8], [0, 1, 0]), (2, 3))
    b = lower_bound(s)
    assert abs(b.f_value) <= 1e-12
    assert b.lower_bound == 0.0 and b.clamped
    b = lower_bound(isotropic(3, 1 / 3 + 1e-6))
    assert not b.clamped and b.lower_bound == pytest.approx(b.scale_factor * b.f_value)
