"""Linear composition operators: decay versus a unimodular eigenvalue.

With A = diag(1/2, 1/3) the block norms of Phi^m(C_A) shrink geometrically and
stay under the analytic bound (sup |<Az, z>|)^m ||C_A||.  With A = diag(1, 1/2)
the Rayleigh quotients on (1 + z_1)^s climb toward 1 and the classifier returns
the unimodular eigenpair.
"""
import numpy as np

from hardy_toeplitz import Q, QQi
from hardy_toeplitz.basis import enumerate_basis
from hardy_toeplitz.diagnostics import linear_uat_classifier, lower_bound_probe, uat_sequence
from hardy_toeplitz.operators import composition_op
from hardy_toeplitz.symbols import PolySelfMap, pairing_symbol

B = enumerate_basis(2, 12)
phi = PolySelfMap.linear([[Q(1, 2), 0], [0, Q(1, 3)]])
r = uat_sequence(composition_op(phi, B), 8)
print("A = diag(1/2, 1/3)")
for (m, v), (_, b) in zip(r.series, r.analytic_bound):
    print(f"  m={m}: ||Phi^m(C_A)|| = {v:.3e}   bound = {b:.3e}")
print("  verdict:", r.verdict)

A = PolySelfMap.linear([[1, 0], [0, Q(1, 2)]])
f = pairing_symbol(A, PolySelfMap.identity(2))
e1 = [QQi(1), QQi(0)]
q = lower_bound_probe(f, A, e1, e1, 20)
print("A = diag(1, 1/2): Rayleigh quotients q_s")
print("  ", " ".join(f"{x:.3f}" for x in q[::4]), "...", f"{q[-1]:.3f}")
v = linear_uat_classifier(A.matrix())
print("  classifier:", v.to_json())
print("  eigenvalue modulus:", abs(complex(v.eigenvalue)), "spectral radius:", v.spectral_radius)
print("  numpy eigenvalues:", np.linalg.eigvals(np.array([[1, 0], [0, 0.5]])))
