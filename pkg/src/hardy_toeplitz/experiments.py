"""Self-contained checks used by the CLI presets, the demos and the tests.

Each function returns a plain dict that is JSON-serializable and carries a
boolean ``passed`` plus the numbers behind it.
"""
from __future__ import annotations

import numpy as np
from gmpy2 import mpq

from .basis import BasisTable, monomial_norm_sq, multi_indices_of_degree
from .exact import QQi
from .operators import (
    TruncatedOperator,
    adjoint,
    composition_op,
    identity_op,
    multiply,
    toeplitz_op,
)
from .oracle import mc_pairing, mc_toeplitz_entry
from .phi import phi_apply, phi_in_frame
from .symbols import PolySelfMap, SphereSymbol, pairing_symbol

__all__ = [
    "random_symbol",
    "random_unitary",
    "max_block_diff",
    "coisometry_check",
    "fixed_point_check",
    "induction_check",
    "frame_check",
    "oracle_check",
]


def _rational(rng: np.random.Generator, den: int = 6):
    return mpq(int(rng.integers(-den, den + 1)), int(rng.integers(1, den + 1)))


def random_symbol(n: int, degree: int, rng: np.random.Generator, terms: int = 4) -> SphereSymbol:
    """Sparse symbol with small Gaussian-rational coefficients and |mu|, |nu| <= degree."""
    pool = [a for d in range(degree + 1) for a in multi_indices_of_degree(n, d)]
    coeffs = {}
    for _ in range(terms):
        mu = pool[int(rng.integers(len(pool)))]
        nu = pool[int(rng.integers(len(pool)))]
        coeffs[(mu, nu)] = QQi(_rational(rng), _rational(rng))
    f = SphereSymbol(n, coeffs)
    return f if f.coeffs else SphereSymbol.constant(n, 1)


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Gaussian matrix."""
    Z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    Qm, R = np.linalg.qr(Z)
    d = np.diag(R)
    return Qm * (d / np.abs(d))


def max_block_diff(A: TruncatedOperator, B: TruncatedOperator, d: int | None = None) -> float:
    """Largest entry difference in the orthonormal basis on the common valid block."""
    d = min(A.valid_degree, B.valid_degree) if d is None else d
    if d < 0:
        return 0.0
    return float(np.max(np.abs(A.orthonormal(d) - B.orthonormal(d)), initial=0.0))


def coisometry_check(basis: BasisTable) -> dict:
    """sum_j T_{z_j}^* T_{z_j} = I on the valid block (exact)."""
    total = None
    for j in range(basis.n):
        T = toeplitz_op(SphereSymbol.coordinate(basis.n, j), basis)
        term = multiply(adjoint(T), T)
        total = term if total is None else total + term
    ok = total.equals(identity_op(basis))
    return {"passed": ok, "valid_degree": total.valid_degree}


def fixed_point_check(f: SphereSymbol, basis: BasisTable) -> dict:
    """Phi(T_f) = T_f exactly on the valid block."""
    T = toeplitz_op(f, basis)
    P = phi_apply(T)
    return {"passed": P.equals(T), "valid_degree": P.valid_degree, "symbol": f.to_json()}


def induction_check(phi: PolySelfMap, eta: PolySelfMap, g: SphereSymbol, basis: BasisTable,
                    ms=(1, 2, 3)) -> dict:
    """Phi^m(C_eta^* T_g C_phi) = C_eta^* T_{g <phi, eta>^m} C_phi exactly."""
    Ceta = adjoint(composition_op(eta, basis))
    Cphi = composition_op(phi, basis)
    X = multiply(Ceta, multiply(toeplitz_op(g, basis), Cphi))
    f = pairing_symbol(phi, eta)
    rows = []
    done = 0
    for m in sorted(ms):
        while done < m:
            X = phi_apply(X)
            done += 1
        rhs = multiply(Ceta, multiply(toeplitz_op(g * f ** m, basis), Cphi))
        d = min(X.valid_degree, rhs.valid_degree)
        rows.append({"m": m, "valid_degree": d, "equal": X.equals(rhs, d)})
    return {"passed": all(r["equal"] and r["valid_degree"] >= 0 for r in rows), "rows": rows}


def frame_check(A: TruncatedOperator, unitaries, tol: float = 1e-10) -> dict:
    """phi_in_frame(A, U) agrees with phi_apply(A) on the valid block."""
    ref = phi_apply(A)
    diffs = [max_block_diff(phi_in_frame(A, U), ref, ref.valid_degree) for U in unitaries]
    return {"passed": all(d <= tol for d in diffs), "max_diff": diffs, "tol": tol}


def oracle_check(n: int, max_degree: int, entries: int, N: int, seed: int,
                 sigmas: float = 4.0) -> dict:
    """Compare monomial weights and random Toeplitz entries with Monte Carlo estimates."""
    from .basis import enumerate_basis

    rng = np.random.default_rng(seed)
    rows = []
    for d in range(max_degree + 1):
        for alpha in multi_indices_of_degree(n, d):
            m = SphereSymbol.monomial(alpha)
            est, se = mc_pairing(m, m, N, seed)
            exact = float(monomial_norm_sq(alpha, n))
            rows.append({"kind": "weight", "alpha": list(alpha), "exact": exact,
                         "estimate": est.real, "stderr": se,
                         "ok": abs(est - exact) <= sigmas * se + 1e-12})
    basis = enumerate_basis(n, max_degree)
    for k in range(entries):
        f = random_symbol(n, 2, rng, terms=3)
        T = toeplitz_op(f, basis)
        beta = basis[int(rng.integers(len(basis)))]
        # aim at a structurally nonzero entry: gamma = beta + mu - nu for some term
        terms = sorted(f.coeffs)
        mu, nu = terms[int(rng.integers(len(terms)))]
        gamma = tuple(b + s - t for b, s, t in zip(beta, mu, nu))
        if min(gamma) < 0 or gamma not in basis.position:
            gamma = beta
        exact = complex(T.R[basis.index(gamma), basis.index(beta)])
        est, se = mc_toeplitz_entry(f, beta, gamma, N, seed + 1 + k)
        rows.append({"kind": "toeplitz", "beta": list(beta), "gamma": list(gamma),
                     "exact": [exact.real, exact.imag], "estimate": [est.real, est.imag],
                     "stderr": se, "ok": abs(est - exact) <= sigmas * se + 1e-12})
    return {"passed": all(r["ok"] for r in rows), "N": N, "seed": seed, "rows": rows}

