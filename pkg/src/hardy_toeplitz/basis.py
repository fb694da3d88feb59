"""Graded monomial basis of the truncated Hardy space of the unit sphere.

Multi-indices are plain tuples of non-negative ints.  The weight of a
monomial is its squared norm under the normalized surface measure,

    omega(alpha) = (n-1)! alpha! / (n-1+|alpha|)!,

kept as an exact rational.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial, prod

import numpy as np
from gmpy2 import mpq

__all__ = [
    "MultiIndex",
    "BasisTable",
    "degree",
    "monomial_norm_sq",
    "enumerate_basis",
    "multi_indices_of_degree",
]

MultiIndex = tuple  # tuple[int, ...]


def degree(alpha) -> int:
    return sum(alpha)


def monomial_norm_sq(alpha, n: int):
    """Exact value of the integral of |z^alpha|^2 over the unit sphere of C^n."""
    alpha = tuple(alpha)
    if len(alpha) != n:
        raise ValueError(f"multi-index {alpha} has length {len(alpha)}, expected {n}")
    if n < 1 or any(a < 0 for a in alpha):
        raise ValueError(f"invalid multi-index {alpha} for dimension {n}")
    num = factorial(n - 1) * prod(factorial(a) for a in alpha)
    return mpq(num, factorial(n - 1 + sum(alpha)))


def multi_indices_of_degree(n: int, d: int) -> list:
    """All multi-indices of length n and degree d, in descending lexicographic order."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        alpha = [0] * n
        for j in combo:
            alpha[j] += 1
        out.append(tuple(alpha))
    # (d,0,...) first, (0,...,d) last
    out.sort(reverse=True)
    return out


@dataclass(frozen=True)
class BasisTable:
    """All monomials z^alpha with |alpha| <= max_degree, graded then lex-ordered."""

    n: int
    max_degree: int
    indices: tuple = field(repr=False)
    position: dict = field(repr=False, compare=False)
    weights: tuple = field(repr=False, compare=False)

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __getitem__(self, i):
        return self.indices[i]

    def index(self, alpha) -> int:
        return self.position[tuple(alpha)]

    def weight(self, alpha):
        return self.weights[self.position[tuple(alpha)]]

    @property
    def degrees(self) -> np.ndarray:
        return np.array([sum(a) for a in self.indices], dtype=int)

    @property
    def weights_float(self) -> np.ndarray:
        return np.array([float(w) for w in self.weights])

    def block(self, d: int) -> np.ndarray:
        """Positions of all monomials with degree <= d (a leading slice)."""
        if d < 0:
            return np.arange(0)
        return np.arange(comb(min(d, self.max_degree) + self.n, self.n))

    def unit(self, alpha) -> np.ndarray:
        """Exact coefficient vector of the monomial z^alpha."""
        from .exact import QQi

        x = np.array([QQi(0)] * len(self), dtype=object)
        x[self.index(alpha)] = QQi(1)
        return x

    def shift(self, j: int) -> np.ndarray:
        """For every position, the position of alpha + e_j (or -1 if degree exceeds D)."""
        out = np.full(len(self), -1, dtype=int)
        for i, alpha in enumerate(self.indices):
            beta = list(alpha)
            beta[j] += 1
            out[i] = self.position.get(tuple(beta), -1)
        return out

    def describe(self) -> dict:
        return {"n": self.n, "D": self.max_degree, "size": len(self)}


@lru_cache(maxsize=64)
def enumerate_basis(n: int, D: int) -> BasisTable:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"dimension must be a positive integer, got {n!r}")
    if not isinstance(D, int) or D < 0:
        raise ValueError(f"max degree must be a non-negative integer, got {D!r}")
    indices = tuple(a for d in range(D + 1) for a in multi_indices_of_degree(n, d))
    position = {a: i for i, a in enumerate(indices)}
    weights = tuple(monomial_norm_sq(a, n) for a in indices)
    return BasisTable(n, D, indices, position, weights)
