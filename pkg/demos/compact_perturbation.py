"""Finite-rank perturbations disappear after finitely many steps.

For K = u (x) v with deg v = 2, Phi^3(K) = 0, so Phi^m(T_f + K) = T_f for m >= 3
and the extracted asymptotic symbol is f.
"""
from hardy_toeplitz import Q
from hardy_toeplitz.basis import enumerate_basis
from hardy_toeplitz.diagnostics import uat_sequence
from hardy_toeplitz.operators import add, coefficient_vector, rank_one, toeplitz_op
from hardy_toeplitz.symbols import SphereSymbol

B = enumerate_basis(2, 10)
f = SphereSymbol.monomial((1, 0), (0, 1)) * Q(1, 2) + SphereSymbol.constant(2, 1)
u = coefficient_vector({(3, 0): 1, (0, 2): Q(-1, 2), (1, 1): 1}, B)
v = coefficient_vector({(2, 0): 1, (1, 1): Q(1, 3)}, B)
r = uat_sequence(add(toeplitz_op(f, B), rank_one(u, v, B)), 6)
print("||Phi^m(X) - Phi^{m-1}(X)||:", [f"{d:.2e}" for _, d in r.differences])
print("verdict:", r.verdict, " residual:", r.residual)
print("asymptotic symbol:", r.asymptotic_symbol)
