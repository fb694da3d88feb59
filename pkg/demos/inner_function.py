"""One variable, phi(z) = z^2.

Phi^m(C_phi) 1 = z^m keeps norm one for every m, so there is no strong decay,
while the adjoint pushes a reproducing kernel toward zero like (1/2)^m.
"""
from hardy_toeplitz import Q
from hardy_toeplitz.basis import enumerate_basis
from hardy_toeplitz.diagnostics import sat_probe
from hardy_toeplitz.operators import adjoint, composition_op, kernel_vector
from hardy_toeplitz.symbols import PolySelfMap

B = enumerate_basis(1, 16)
C = composition_op(PolySelfMap(1, [{(2,): 1}]), B)

r = sat_probe(C, {"one": {(0,): 1}}, 7)
print("||Phi^m(C_phi) 1||:", [round(v, 12) for v in r.probes["one"]["norm"]])

K = kernel_vector([Q(1, 2)], B)
ra = sat_probe(adjoint(C), {"K": K}, 7)
print("||Phi^m(C_phi^*) K_1/2||:", [f"{v:.4f}" for v in ra.probes["K"]["norm"]])
print("verdicts:", r.verdict, "/", ra.verdict)
