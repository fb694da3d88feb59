"""Monte Carlo oracle on the unit sphere of C^n.

Sampling: draw n independent standard complex Gaussians and normalize.  The
normalized vector is exactly uniform on the sphere.  Streams come from
numpy's Philox4x64-10 counter-based generator keyed by the user seed; large
requests are split into partitions whose keys are spawned from
``SeedSequence(seed)``, so results are bit-reproducible for a fixed
``(seed, N)`` regardless of machine.

Standard complex Gaussian: real and imaginary parts are independent N(0, 1/2).
"""
from __future__ import annotations

import numpy as np

__all__ = ["sphere_sample", "mc_pairing", "mc_toeplitz_entry", "report"]

PARTITION = 250_000


def _generator(seed_seq: np.random.SeedSequence) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed_seq))


def sphere_sample(n: int, N: int, seed: int = 0) -> np.ndarray:
    """N i.i.d. uniform points on the unit sphere of C^n, shape (N, n)."""
    if N < 1:
        raise ValueError("N must be positive")
    if n < 1:
        raise ValueError("dimension must be positive")
    parts = []
    children = np.random.SeedSequence(seed).spawn((N + PARTITION - 1) // PARTITION)
    remaining = N
    for child in children:
        k = min(PARTITION, remaining)
        rng = _generator(child)
        g = rng.standard_normal((k, 2 * n)).reshape(k, n, 2)
        z = (g[..., 0] + 1j * g[..., 1]) / np.sqrt(2.0)
        parts.append(z / np.linalg.norm(z, axis=1, keepdims=True))
        remaining -= k
    return np.concatenate(parts)


def _mean_stderr(values: np.ndarray):
    N = values.size
    mean = values.mean()
    var = np.sum(np.abs(values - mean) ** 2) / (N - 1)
    return complex(mean), float(np.sqrt(var / N))


def mc_pairing(f, g, N: int = 1_000_000, seed: int = 0):
    """Estimate <f, g> = integral of f * conj(g) over the sphere.

    Returns ``(estimate, stderr)``.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    from .symbols import eval_symbol

    Z = sphere_sample(f.n, N, seed)
    vals = eval_symbol(f, Z) * np.conj(eval_symbol(g, Z))
    return _mean_stderr(np.asarray(vals))


def mc_toeplitz_entry(f, beta, gamma, N: int = 1_000_000, seed: int = 0):
    """Estimate <T_f z^beta, z^gamma> = integral of f z^beta conj(z^gamma)."""
    from .symbols import SphereSymbol

    return mc_pairing(f * SphereSymbol.monomial(beta), SphereSymbol.monomial(gamma), N, seed)


def report(estimate: complex, stderr: float, N: int, seed: int) -> dict:
    return {"estimate_re": estimate.real, "estimate_im": estimate.imag,
            "stderr": stderr, "N": N, "seed": seed}
