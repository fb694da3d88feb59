import numpy as np
import pytest

from hardy_toeplitz.oracle import mc_pairing, mc_toeplitz_entry, report, sphere_sample
from hardy_toeplitz.symbols import SphereSymbol


def test_samples_lie_on_the_sphere():
    Z = sphere_sample(3, 10_000, seed=1)
    assert Z.shape == (10_000, 3)
    assert np.max(np.abs(np.linalg.norm(Z, axis=1) - 1)) < 1e-12


def test_reproducible_and_seed_dependent():
    a = sphere_sample(2, 300_000, seed=5)
    b = sphere_sample(2, 300_000, seed=5)
    c = sphere_sample(2, 300_000, seed=6)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_first_moments():
    N = 1_000_000
    Z = sphere_sample(2, N, seed=2)
    assert abs(Z[:, 0].mean()) < 3 / np.sqrt(N)
    x = np.abs(Z[:, 0]) ** 2
    assert abs(x.mean() - 0.5) < 3 * x.std() / np.sqrt(N)


def test_uniformity_of_a_marginal():
    # on the sphere of C^2, |z_1|^2 is uniform on [0, 1]
    x = np.abs(sphere_sample(2, 100_000, seed=3)[:, 0]) ** 2
    hist, _ = np.histogram(x, bins=10, range=(0, 1))
    assert np.all(np.abs(hist - 10_000) < 5 * np.sqrt(10_000))


def test_pairing_examples():
    one = SphereSymbol.constant(2)
    est, se = mc_pairing(SphereSymbol.sphere_one(2), one, N=10_000, seed=0)
    assert abs(est - 1) < 1e-12 and se < 1e-12
    z1 = SphereSymbol.coordinate(2, 0)
    z2 = SphereSymbol.coordinate(2, 1)
    est, se = mc_pairing(z1, z2, N=100_000, seed=0)
    assert abs(est) <= 4 * se


def test_toeplitz_entry_examples():
    z1 = SphereSymbol.coordinate(2, 0)
    est, se = mc_toeplitz_entry(z1, (0, 0), (1, 0), N=200_000, seed=4)
    assert abs(est - 0.5) <= 4 * se
    f = z1 * z1.conj()
    est, se = mc_toeplitz_entry(f, (0, 0), (0, 0), N=200_000, seed=4)
    assert abs(est - 0.5) <= 4 * se


def test_report_and_errors():
    r = report(1 + 2j, 0.1, 10, 3)
    assert r == {"estimate_re": 1.0, "estimate_im": 2.0, "stderr": 0.1, "N": 10, "seed": 3}
    with pytest.raises(ValueError):
        sphere_sample(2, 0)
    with pytest.raises(ValueError):
        mc_pairing(SphereSymbol.constant(1), SphereSymbol.constant(1), N=1)
