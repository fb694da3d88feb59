"""The Toeplitzness map Phi(A) = sum_j T_{zbar_j} A T_{z_j} and its iterates.

In raw-Gram form Phi is an index shift,

    R_Phi(A)[g, b] = sum_j R_A[g + e_j, b + e_j],

so it is exact and costs O(n * size^2).  Each application consumes one
certified degree on both sides.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np
from gmpy2 import mpq

from .basis import BasisTable
from .exact import QQi
from .operators import (
    TruncatedOperator,
    TrustExhausted,
    _phi_growth,
    add,
    adjoint,
    multiply,
    scale,
    toeplitz_op,
    zero_op,
)
from .symbols import SphereSymbol

__all__ = ["phi_apply", "phi_iterate", "cesaro_mean", "cesaro_means", "phi_in_frame"]

UNITARY_TOL = 1e-10


@lru_cache(maxsize=64)
def _shifts(basis: BasisTable):
    out = []
    for j in range(basis.n):
        s = basis.shift(j)
        keep = np.flatnonzero(s >= 0)
        out.append((keep, s[keep]))
    return tuple(out)


def phi_apply(A: TruncatedOperator) -> TruncatedOperator:
    if A.valid_degree < 0:
        raise TrustExhausted("no certified block left: Phi needs valid_degree >= 0")
    R = np.full(A.R.shape, QQi(0), dtype=object) if A.exact else np.zeros(A.R.shape, dtype=complex)
    for keep, target in _shifts(A.basis):
        R[np.ix_(keep, keep)] += A.R[np.ix_(target, target)]
    return TruncatedOperator(A.basis, R, A.valid_rows - 1, A.valid_cols - 1,
                             _phi_growth(A.growth), _phi_growth(A.cogrowth),
                             origin=("phi", A.origin))


def _check_steps(A: TruncatedOperator, m: int):
    if m < 1:
        raise ValueError("number of iterations must be positive")
    if m > A.valid_degree:
        raise TrustExhausted(
            f"{m} iterations requested but valid_degree is {A.valid_degree}; "
            f"max usable m is {max(A.valid_degree, 0)}")


def phi_iterate(A: TruncatedOperator, m: int) -> list:
    """[Phi(A), Phi^2(A), ..., Phi^m(A)]."""
    _check_steps(A, m)
    out = []
    X = A
    for _ in range(m):
        X = phi_apply(X)
        out.append(X)
    return out


def cesaro_means(A: TruncatedOperator, m: int) -> list:
    """[(1/k) sum_{j=1..k} Phi^j(A) for k = 1..m]."""
    iterates = phi_iterate(A, m)
    means = []
    total = None
    for k, X in enumerate(iterates, start=1):
        total = X if total is None else add(total, X)
        means.append(scale(QQi(mpq(1, k)), total) if total.exact else scale(1.0 / k, total))
    return means


def cesaro_mean(A: TruncatedOperator, m: int) -> TruncatedOperator:
    return cesaro_means(A, m)[-1]


def _frame_symbols(U: np.ndarray, rational_lift: bool):
    n = U.shape[0]
    out = []
    for j in range(n):
        coeffs = {}
        for k in range(n):
            c = np.conj(U[k, j])
            if rational_lift:
                c = QQi(Fraction(float(c.real)), Fraction(float(c.imag)))
            else:
                c = complex(c)
            e = tuple(int(i == k) for i in range(n))
            coeffs[(e, (0,) * n)] = c
        out.append(SphereSymbol(n, coeffs))
    return out


def phi_in_frame(A: TruncatedOperator, U, rational_lift: bool = False) -> TruncatedOperator:
    """sum_j T_{conj f_j} A T_{f_j} with f_j(z) = <z, u_j>, u_j the columns of U.

    Computed in floating point unless ``rational_lift`` is set, in which case
    the entries of U are converted to the exact rationals of their binary
    values (useful for permutation matrices).
    """
    U = np.asarray(U, dtype=complex)
    n = A.basis.n
    if U.shape != (n, n):
        raise ValueError(f"frame must be {n}x{n}, got {U.shape}")
    if not np.allclose(U.conj().T @ U, np.eye(n), rtol=0.0, atol=UNITARY_TOL):
        raise ValueError("frame matrix is not unitary")
    if A.valid_degree < 0:
        raise TrustExhausted("no certified block left")
    X = A if rational_lift else A.to_float()
    total = None
    for f in _frame_symbols(U, rational_lift):
        T = toeplitz_op(f, A.basis)
        term = multiply(adjoint(T), multiply(X, T))
        total = term if total is None else add(total, term)
    return total if total is not None else zero_op(A.basis)
