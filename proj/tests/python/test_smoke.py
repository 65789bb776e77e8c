import math

import numpy as np
import pytest

import markovgeo as mg


def lazy_cycle(theta1, theta2, m=3):
    return mg.lazy_cycle_kernel(m, theta1, theta2)


def test_lazy_cycle_closed_form():
    p = lazy_cycle(0.0, math.log(2.0))
    assert p[0, 0] == pytest.approx(2 / 7, abs=1e-14)
    assert p[0, 1] == pytest.approx(4 / 7, abs=1e-14)
    assert p[1, 0] == pytest.approx(1 / 7, abs=1e-14)
    pi = mg.stationary_distribution(p)
    assert np.allclose(pi, 1 / 3, atol=1e-13)


def test_reversal_and_checks():
    p = lazy_cycle(0.0, math.log(2.0))
    rev = mg.time_reversal(p)
    assert np.allclose(rev, lazy_cycle(0.0, -math.log(2.0)), atol=1e-13)
    assert not mg.is_reversible(p)
    assert not mg.is_reversible(p, method="pf")
    assert not mg.is_reversible(p, method="kolmogorov")
    sym = np.array([[0.7, 0.3], [0.3, 0.7]])
    for method in ("balance", "pf", "kolmogorov"):
        assert mg.is_reversible(sym, method=method)


def test_projections_match_example():
    p = lazy_cycle(0.0, math.log(2.0))
    pm = mg.m_projection(p)
    assert pm[0, 0] == pytest.approx(2 / 7, abs=1e-14)
    assert pm[0, 1] == pytest.approx(5 / 14, abs=1e-14)
    pe = mg.e_projection(p)
    off_diag = pe[pe > 0]
    assert np.allclose(off_diag, 1 / 3, atol=1e-13)

    expected = (4 / 7) * math.log(8 / 5) + (1 / 7) * math.log(2 / 5)
    assert mg.kl_divergence(p, pm) == pytest.approx(expected, abs=1e-13)

    gaps = mg.bisection_check(p)
    assert max(gaps) <= 1e-12


def test_divergence_infinity():
    banded = lazy_cycle(0.1, 0.0, m=4)
    full = mg.validate(np.full((4, 4), 0.25))
    assert mg.kl_divergence(full, banded) == math.inf
    assert mg.kl_divergence(banded, full) > 0.0


def test_chart_round_trips():
    p = mg.random_reversible_kernel(4, seed=3)
    theta = mg.natural_coords(p)
    assert set(theta) == {(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2),
                          (3, 1), (3, 2), (3, 3)}
    back = mg.kernel_from_natural(4, theta)
    assert np.allclose(back, p, atol=1e-10)

    eta = mg.expectation_coords(p)
    back = mg.kernel_from_expectation(4, eta)
    assert np.allclose(back, p, atol=1e-10)

    assert mg.reversible_dimension(4) == 9
    assert mg.reversible_dimension(2) == 2


def test_pythagorean_residual():
    p = mg.validate(np.array([[0.6, 0.3, 0.1],
                              [0.1, 0.5, 0.4],
                              [0.4, 0.2, 0.4]]))
    pbar = mg.random_reversible_kernel(3, seed=9)
    assert abs(mg.pythagorean_residual(p, pbar, "m")) <= 1e-9
    assert abs(mg.pythagorean_residual(p, pbar, "e")) <= 1e-9


def test_fisher_metric_lazy_cycle():
    m = 3
    g1 = np.eye(m)
    g2 = np.zeros((m, m))
    for i in range(m):
        g2[i, (i + 1) % m] = 1.0
        g2[(i + 1) % m, i] = -1.0
    metric = mg.fisher_metric(np.zeros((m, m)), [g1, g2], np.zeros(2))
    assert metric[1, 1] == pytest.approx(2 / 3, abs=1e-4)
    hess = mg.psi_hessian(np.zeros((m, m)), [g1, g2], np.zeros(2))
    assert np.allclose(metric, hess, atol=1e-5)


def test_hull_experiments():
    rank, expected = mg.ehull_rank_experiment(3, samples=40, seed=42)
    assert rank == expected == 8
    assert mg.mhull_basis_experiment(3, 0.01)
    assert mg.mhull_basis_rank(3, 0.01) == 6
    assert mg.ehull_generator_recovery_error(3) <= 1e-12


def test_counterexample():
    q0, q1, midpoint = mg.counterexample_edge_measures()
    assert q0.sum() == pytest.approx(1.0)
    assert mg.marginal_imbalance(q0) <= 1e-14
    assert mg.marginal_imbalance(midpoint) > 1e-3


def test_families_and_flattening():
    p = lazy_cycle(0.0, math.log(2.0))
    assert mg.family_membership(p, "bistochastic")
    assert not mg.family_membership(p, "reversible")
    uniform = np.full((2, 2), 0.5)
    point = mg.flatten_reversible(mg.edge_measure(uniform))
    assert np.allclose(point, [0.25, 0.25, 0.5])
    q = mg.unflatten_reversible(point, 2)
    assert np.allclose(q, 0.25)


def test_errors_are_translated():
    with pytest.raises(mg.Error, match="NotIrreducible"):
        mg.validate(np.eye(2))
    with pytest.raises(mg.Error, match="NotStochastic"):
        mg.validate(np.array([[0.9, 0.2], [0.5, 0.5]]))
    with pytest.raises(mg.Error, match="NotReversible"):
        mg.natural_coords(lazy_cycle(0.0, 1.0))
