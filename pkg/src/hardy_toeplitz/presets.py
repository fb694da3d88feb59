"""Built-in experiments, one per statement the package reproduces.

Every preset is an ordinary experiment document (see :mod:`hardy_toeplitz.cli`),
so ``--preset NAME --dump-spec`` prints a file that ``--spec`` accepts.
"""
from __future__ import annotations

__all__ = ["PRESETS", "rat"]


def rat(p: int, q: int = 1) -> dict:
    return {"num": p, "den": q}


ZERO, ONE, HALF, THIRD = rat(0), rat(1), rat(1, 2), rat(1, 3)


def _diag(a, b):
    return {"matrix": [[a, ZERO], [ZERO, b]]}


PRESETS = {
    "counterexample": {
        "name": "counterexample",
        "statement": "phi(z) = (0, z_1): C_phi is an isometry on the powers of z_2, "
                     "yet Phi(C_phi) = 0, so C_phi is uniformly asymptotically Toeplitz "
                     "with asymptotic symbol 0 although not compact",
        "n": 2, "D": 8,
        "maps": {"phi": {"components": [[], [[[1, 0], ONE]]]}},
        "operator": {"op": "compose", "args": ["phi"]},
        "mode": "uniform",
        "params": {"m_max": 4, "seed": 0},
        "expect": "converges-to-zero",
    },
    "linear-uat": {
        "name": "linear-uat",
        "statement": "phi(z) = Az with every eigenvalue of A in the open unit disk: "
                     "||Phi^m(C_phi)|| <= (sup|<Az, z>|)^m ||C_phi|| -> 0 (A = diag(1/2, 1/3))",
        "n": 2, "D": 22,
        "maps": {"phi": _diag(HALF, THIRD)},
        "operator": {"op": "compose", "args": ["phi"]},
        "mode": "uniform",
        "params": {"m_max": 20, "seed": 0, "N": 100000},
        "expect": "converges-to-zero",
    },
    "linear-non-uat": {
        "name": "linear-non-uat",
        "statement": "phi(z) = Az with a unimodular eigenvalue (A = diag(1, 1/2)): "
                     "||Phi^m(C_phi)|| >= |<A zeta, zeta>|^m = 1 via the g_s lower bound, "
                     "so C_phi is not uniformly asymptotically Toeplitz",
        "n": 2, "D": 10,
        "maps": {"phi": _diag(ONE, HALF)},
        "operator": {"op": "compose", "args": ["phi"]},
        "mode": "uniform",
        "params": {"m_max": 4, "s_max": 12, "seed": 0, "N": 100000},
        "expect": "non-convergent",
    },
    "davie-jewell": {
        "name": "davie-jewell",
        "statement": "Toeplitz operators are fixed points of Phi(A) = sum_j T_{zbar_j} A T_{z_j}: "
                     "Phi(T_f) = T_f exactly for random degree-2 symbols",
        "n": 2, "D": 10,
        "mode": "fixed-point",
        "params": {"count": 5, "degree": 2, "seed": 0},
        "expect": "pass",
    },
    "induction-formula": {
        "name": "induction-formula",
        "statement": "Phi^m(C_eta^* T_g C_phi) = C_eta^* T_{g <phi, eta>^m} C_phi "
                     "for linear contractions phi, eta (exact, m = 1, 2, 3)",
        "n": 2, "D": 10,
        "maps": {
            "phi": {"matrix": [[HALF, rat(1, 4)], [ZERO, THIRD]]},
            "eta": {"matrix": [[THIRD, ZERO], [rat(1, 4), HALF]]},
        },
        "mode": "induction-formula",
        "params": {"phi": "phi", "eta": "eta", "ms": [1, 2, 3], "seed": 0},
        "expect": "pass",
    },
    "cesaro-msat": {
        "name": "cesaro-msat",
        "statement": "For a non-identity self-map the Cesaro means (1/m) sum_{j<=m} Phi^j(C_phi) "
                     "converge strongly to 0; phi(z) = e^{i pi/3} z, where Phi^j(C_phi) = "
                     "lambda^j C_phi and the means vanish at m = 6",
        "n": 2, "D": 10,
        "maps": {"phi": {"matrix": [[{"exp_i_pi": rat(1, 3)}, ZERO],
                                    [ZERO, {"exp_i_pi": rat(1, 3)}]]}},
        "operator": {"op": "compose", "args": ["phi"]},
        "mode": "cesaro",
        "params": {"m_max": 6, "seed": 0},
        "expect": "converges-to-zero",
    },
    "inner-1d": {
        "name": "inner-1d",
        "statement": "n = 1, phi(z) = z^2 (an inner function): Phi^m(C_phi) 1 = z^m keeps norm 1, "
                     "so C_phi is not strongly asymptotically Toeplitz, while "
                     "||Phi^m(C_phi^*) K_a|| -> 0 like |a|^m",
        "n": 1, "D": 16,
        "maps": {"phi": {"components": [[[[2], ONE]]]}},
        "vectors": {"one": {"monomials": [[[0], ONE]]}, "K": {"kernel": [HALF]}},
        "operator": {"op": "compose", "args": ["phi"]},
        "mode": "strong",
        "params": {"m_max": 7, "vectors": ["one", "K"], "also_adjoint": True, "seed": 0},
        "expect": "non-convergent",
    },
    "compact-uat": {
        "name": "compact-uat",
        "statement": "Finite-rank perturbations vanish under Phi: Phi^m(T_f + u (x) v) = T_f "
                     "once m > deg v, so T_f + K is uniformly asymptotically Toeplitz with symbol f",
        "n": 2, "D": 10,
        "symbols": {"f": {"terms": [[[1, 0], [0, 1], HALF], [[0, 0], [0, 0], ONE]]}},
        "vectors": {
            "u": {"monomials": [[[3, 0], ONE], [[0, 2], rat(-1, 2)], [[1, 1], ONE]]},
            "v": {"monomials": [[[2, 0], ONE], [[1, 1], THIRD]]},
        },
        "operator": {"op": "sum", "args": [{"op": "toeplitz", "args": ["f"]},
                                            {"op": "rank_one", "args": ["u", "v"]}]},
        "mode": "uniform",
        "params": {"m_max": 6, "seed": 0},
        "expect": "converges-to-toeplitz",
    },
    "norm-lower-bound": {
        "name": "norm-lower-bound",
        "statement": "If <phi(z), eta> = <z, zeta> then ||T_f C_phi|| >= |f(zeta)|: "
                     "Rayleigh quotients q_s on g_s = (1 + <z, eta>)^s for phi(z) = e^{i pi/4} z, "
                     "f = |z_1|^2, zeta = (1, 0)",
        "n": 2, "D": 10,
        "symbols": {"f": {"terms": [[[1, 0], [1, 0], ONE]]}},
        "maps": {"phi": {"matrix": [[{"exp_i_pi": rat(1, 4)}, ZERO],
                                    [ZERO, {"exp_i_pi": rat(1, 4)}]]}},
        "mode": "lower-bound",
        "params": {"symbol": "f", "map": "phi", "zeta": [ONE, ZERO],
                   "lambda": {"exp_i_pi": rat(1, 4)}, "s_max": 20, "tolerance": 0.1, "seed": 0},
        "expect": "certified",
    },
    "frame-invariance": {
        "name": "frame-invariance",
        "statement": "Phi does not depend on the orthonormal frame: sum_j T_{conj f_j} A T_{f_j} "
                     "with f_j(z) = <z, u_j> equals Phi(A) for every unitary U",
        "n": 2, "D": 8,
        "maps": {"phi": _diag(HALF, THIRD)},
        "operator": {"op": "compose", "args": ["phi"]},
        "mode": "frame-invariance",
        "params": {"count": 5, "tolerance": 1e-10, "seed": 0},
        "expect": "pass",
    },
    "oracle-validate": {
        "name": "oracle-validate",
        "statement": "Closed-form monomial norms and Toeplitz entries agree with Monte Carlo "
                     "integration over the sphere within 4 standard errors",
        "n": 2, "D": 4,
        "mode": "oracle-validate",
        "params": {"max_degree": 3, "entries": 30, "N": 200000, "seed": 0},
        "expect": "pass",
    },
    "coisometry": {
        "name": "coisometry",
        "statement": "The column (T_{z_1}, ..., T_{z_n}) is a co-isometry: "
                     "sum_j T_{z_j}^* T_{z_j} = I",
        "n": 3, "D": 6,
        "mode": "coisometry",
        "params": {"seed": 0},
        "expect": "pass",
    },
}
