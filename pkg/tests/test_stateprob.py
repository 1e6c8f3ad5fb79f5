import numpy as np
import pytest

from probchan.stateprob import (
    OFFDIAG_PROB_PAIRS,
    distribution_set,
    qubit_bloch_check,
    qubit_density_from_probs,
    qubit_probs_from_density,
    tomogram,
    ququart_density_from_probs,
    ququart_probs_from_density,
)
from conftest import random_bloch_probs, random_density


def test_qubit_corner_example():
    rho = qubit_density_from_probs([1.0, 1.0, 1.0])
    expected = np.array([[1.0, 0.5 - 0.5j], [0.5 + 0.5j, 0.0]])
    assert np.array_equal(rho, expected)


@pytest.mark.parametrize(
    "probs,expected",
    [
        ((1.0, 0.5, 0.5), [[1, 0], [0, 0]]),
        ((0.0, 0.5, 0.5), [[0, 0], [0, 1]]),
        ((0.5, 1.0, 0.5), [[0.5, 0.5], [0.5, 0.5]]),
        ((0.5, 0.5, 0.5), [[0.5, 0], [0, 0.5]]),
        ((0.75, 0.75, 0.5), [[0.75, 0.25], [0.25, 0.25]]),
    ],
)
def test_qubit_named_states(probs, expected):
    assert np.array_equal(qubit_density_from_probs(probs), np.array(expected, dtype=complex))


def test_qubit_probs_circular_state():
    rho = np.array([[0.5, 0.5j], [-0.5j, 0.5]])
    assert np.array_equal(qubit_probs_from_density(rho), np.array([0.5, 0.5, 0.0]))


def test_qubit_round_trip():
    rng = np.random.default_rng(21)
    for _ in range(200):
        p = random_bloch_probs(rng)
        back = qubit_probs_from_density(qubit_density_from_probs(p))
        assert np.max(np.abs(back - p)) < 1e-15
    for _ in range(200):
        rho = random_density(rng, 2)
        back = qubit_density_from_probs(qubit_probs_from_density(rho))
        assert np.max(np.abs(back - rho)) < 1e-14


def test_qubit_probs_rejects_bad_density():
    with pytest.raises(ValueError):
        qubit_probs_from_density(np.array([[1.0, 0.5], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        qubit_probs_from_density(np.array([[0.9, 0.0], [0.0, 0.0]]))


def test_qubit_density_rejects_out_of_range():
    with pytest.raises(ValueError):
        qubit_density_from_probs([1.2, 0.5, 0.5])
    with pytest.raises(ValueError):
        qubit_density_from_probs([-0.1, 0.5, 0.5])


def test_bloch_check_examples():
    valid, margin = qubit_bloch_check([1.0, 1.0, 1.0])
    assert not valid
    assert abs(margin - 0.75) < 1e-15
    valid, margin = qubit_bloch_check([1.0, 0.5, 0.5])
    assert valid
    assert abs(margin - 0.25) < 1e-15


def test_bloch_check_agrees_with_eigenvalues():
    rng = np.random.default_rng(22)
    for _ in range(300):
        p = rng.uniform(0.0, 1.0, 3)
        valid, _ = qubit_bloch_check(p)
        rho = qubit_density_from_probs(p)
        min_eig = np.linalg.eigvalsh(rho)[0]
        assert valid == (min_eig >= -1e-12)


def test_tomogram_recovers_axis_probs():
    rng = np.random.default_rng(23)
    axes = (np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]))
    for _ in range(50):
        p = random_bloch_probs(rng)
        rho = qubit_density_from_probs(p)
        for k, axis in enumerate(axes):
            assert abs(tomogram(rho, axis) - p[k]) < 1e-12


def test_tomogram_opposite_directions_sum_to_one():
    rng = np.random.default_rng(24)
    for _ in range(50):
        rho = random_density(rng, 2)
        n = rng.standard_normal(3)
        n /= np.linalg.norm(n)
        assert abs(tomogram(rho, n) + tomogram(rho, -n) - 1.0) < 1e-12


def test_tomogram_spot_values():
    mixed = np.eye(2, dtype=complex) / 2.0
    n = np.array([1.0, 2.0, -2.0]) / 3.0
    assert abs(tomogram(mixed, n) - 0.5) < 1e-15
    ground = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    assert abs(tomogram(ground, [0.0, 0.0, 1.0]) - 1.0) < 1e-15
    assert abs(tomogram(ground, [1.0, 0.0, 0.0]) - 0.5) < 1e-15


def test_tomogram_rejects_bad_inputs():
    rho = np.eye(2) / 2.0
    with pytest.raises(ValueError):
        tomogram(rho, [1.0, 1.0, 0.0])
    not_psd = np.array([[1.2, 0.0], [0.0, -0.2]])
    with pytest.raises(ValueError):
        tomogram(not_psd, [0.0, 0.0, 1.0])


def test_ququart_bell_state():
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = rho[0, 3] = rho[3, 0] = rho[3, 3] = 0.5
    p = ququart_probs_from_density(rho)
    expected = np.full(15, 0.5)
    expected[0] = expected[1] = expected[7] = 1.0
    assert np.array_equal(p, expected)
    assert np.array_equal(ququart_density_from_probs(p), rho)


def test_ququart_diagonal_examples():
    p = np.full(15, 0.5)
    p[0] = p[1] = p[2] = 0.75
    assert np.array_equal(ququart_density_from_probs(p), np.eye(4, dtype=complex) / 4.0)
    assert np.array_equal(ququart_probs_from_density(np.eye(4) / 4.0), p)

    p56 = np.full(15, 0.5)
    p56[0] = p56[1] = p56[2] = 5.0 / 6.0
    rho = ququart_density_from_probs(p56)
    assert np.max(np.abs(rho - np.diag([0.5, 1 / 6, 1 / 6, 1 / 6]))) < 1e-15

    pure = np.full(15, 0.5)
    pure[0] = pure[1] = pure[2] = 1.0
    assert np.array_equal(ququart_probs_from_density(np.diag([1.0, 0, 0, 0])), pure)


def test_ququart_round_trip():
    rng = np.random.default_rng(25)
    for _ in range(200):
        rho = random_density(rng, 4)
        back = ququart_density_from_probs(ququart_probs_from_density(rho))
        assert np.max(np.abs(back - rho)) < 1e-14


def test_ququart_pairing_table_covers_upper_triangle():
    seen = {(r, c) for r, c, _, _ in OFFDIAG_PROB_PAIRS}
    assert seen == {(r, c) for r in range(4) for c in range(r + 1, 4)}
    indices = sorted(i for _, _, re_i, im_i in OFFDIAG_PROB_PAIRS for i in (re_i, im_i))
    assert indices == list(range(3, 15))


def test_ququart_rejects_bad_shapes_and_values():
    with pytest.raises(ValueError):
        ququart_density_from_probs(np.full(14, 0.5))
    bad = np.full(15, 0.5)
    bad[3] = 1.5
    with pytest.raises(ValueError):
        ququart_density_from_probs(bad)
    with pytest.raises(ValueError):
        ququart_probs_from_density(np.eye(4))


def test_distribution_set_identity_channel_probs():
    p = np.full(15, 0.5)
    p[0] = p[1] = p[7] = 1.0
    ds = distribution_set(p)
    assert np.array_equal(ds.main, np.array([0.5, 0.0, 0.0, 0.5]))
    assert ds.dichotomics.shape == (12, 2)
    assert np.array_equal(ds.dichotomics[4], np.array([1.0, 0.0]))
    assert np.array_equal(ds.dichotomics[0], np.array([0.5, 0.5]))


def test_distribution_set_rows_are_distributions():
    rng = np.random.default_rng(26)
    for _ in range(100):
        p = ququart_probs_from_density(random_density(rng, 4))
        ds = distribution_set(p)
        assert abs(ds.main.sum() - 1.0) < 1e-12
        assert np.all(ds.main >= 0.0)
        assert np.all(ds.dichotomics >= 0.0)
        # dichotomic pairs sum to 1 with no rounding at all
        assert np.all(ds.dichotomics.sum(axis=1) == 1.0)


@pytest.mark.parametrize(
    "head,expected_main",
    [
        ((0.75, 0.75, 0.75), (0.25, 0.25, 0.25, 0.25)),
        ((1.0, 1.0, 1.0), (1.0, 0.0, 0.0, 0.0)),
        ((1.0, 1.0, 0.5), (0.5, 0.0, 0.0, 0.5)),
    ],
)
def test_distribution_set_main_examples(head, expected_main):
    p = np.full(15, 0.5)
    p[0], p[1], p[2] = head
    assert np.array_equal(distribution_set(p).main, np.array(expected_main))


def test_distribution_set_rejects_small_head():
    p = np.full(15, 0.5)
    p[0], p[1], p[2] = 0.6, 0.6, 0.7
    with pytest.raises(ValueError):
        distribution_set(p)
